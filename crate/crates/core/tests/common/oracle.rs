//! Textbook Buchberger over Q[x_1..x_n], sharing no code with the library.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Mono = Vec<u32>;
pub type CPoly = BTreeMap<Mono, BigRational>;

#[derive(Clone, Copy, Debug)]
pub enum Ord {
    DegLex,
    DegRevLex,
}

fn deg(m: &Mono) -> u32 {
    m.iter().sum()
}

pub fn cmp(o: Ord, a: &Mono, b: &Mono) -> Ordering {
    deg(a).cmp(&deg(b)).then_with(|| match o {
        Ord::DegLex => a.cmp(b),
        Ord::DegRevLex => {
            for i in (0..a.len()).rev() {
                if a[i] != b[i] {
                    return b[i].cmp(&a[i]);
                }
            }
            Ordering::Equal
        }
    })
}

fn lead(o: Ord, f: &CPoly) -> Option<(Mono, BigRational)> {
    f.iter().max_by(|x, y| cmp(o, x.0, y.0)).map(|(m, c)| (m.clone(), c.clone()))
}

fn sub_scaled_shift(f: &mut CPoly, g: &CPoly, c: &BigRational, shift: &Mono) {
    for (m, v) in g {
        let key: Mono = m.iter().zip(shift).map(|(a, b)| a + b).collect();
        let entry = f.entry(key.clone()).or_insert_with(BigRational::zero);
        *entry -= c * v;
        if entry.is_zero() {
            f.remove(&key);
        }
    }
}

fn quotient(a: &Mono, b: &Mono) -> Option<Mono> {
    a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect()
}

/// Full normal form of `f` modulo `gs`.
pub fn normal_form(o: Ord, f: &CPoly, gs: &[CPoly]) -> CPoly {
    let mut p = f.clone();
    let mut r = CPoly::new();
    while let Some((m, c)) = lead(o, &p) {
        let mut done = false;
        for g in gs {
            let (gm, gc) = lead(o, g).unwrap();
            if let Some(q) = quotient(&m, &gm) {
                sub_scaled_shift(&mut p, g, &(&c / &gc), &q);
                done = true;
                break;
            }
        }
        if !done {
            p.remove(&m);
            r.insert(m, c);
        }
    }
    r
}

fn monic(o: Ord, f: &CPoly) -> CPoly {
    let (_, c) = lead(o, f).unwrap();
    f.iter().map(|(m, v)| (m.clone(), v / &c)).collect()
}

fn spoly(o: Ord, f: &CPoly, g: &CPoly) -> CPoly {
    let (fm, fc) = lead(o, f).unwrap();
    let (gm, gc) = lead(o, g).unwrap();
    let l: Mono = fm.iter().zip(&gm).map(|(a, b)| *a.max(b)).collect();
    let mut s = CPoly::new();
    sub_scaled_shift(&mut s, f, &(-BigRational::one() / fc), &quotient(&l, &fm).unwrap());
    sub_scaled_shift(&mut s, g, &(BigRational::one() / gc), &quotient(&l, &gm).unwrap());
    s
}

/// Reduced Gröbner basis as a set of monic polynomials.
pub fn reduced_basis(o: Ord, input: &[CPoly]) -> BTreeSet<Vec<(Mono, BigRational)>> {
    let mut g: Vec<CPoly> = input.iter().filter(|f| !f.is_empty()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let r = normal_form(o, &spoly(o, &g[i], &g[j]), &g);
        if !r.is_empty() {
            let k = g.len();
            g.push(r);
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    let mut minimal: Vec<CPoly> = Vec::new();
    for (k, f) in g.iter().enumerate() {
        let fm = lead(o, f).unwrap().0;
        let redundant = g.iter().enumerate().any(|(l, h)| {
            let hm = lead(o, h).unwrap().0;
            l != k && quotient(&fm, &hm).is_some() && (hm != fm || l < k)
        });
        if !redundant {
            minimal.push(monic(o, f));
        }
    }
    (0..minimal.len())
        .map(|k| {
            let others: Vec<CPoly> = minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, h)| h.clone()).collect();
            let (m, c) = lead(o, &minimal[k]).unwrap();
            let mut tail = minimal[k].clone();
            tail.remove(&m);
            let mut r = normal_form(o, &tail, &others);
            r.insert(m, c);
            r.into_iter().collect()
        })
        .collect()
}
