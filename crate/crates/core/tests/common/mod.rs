#![allow(dead_code)]

pub mod oracle;

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use skewpbw::freemod::VectorPoly;
use skewpbw::{AlgebraPresentation, Exponent, Polynomial};

/// A random exponent of total degree at most `max_deg`.
pub fn random_exponent(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> Exponent {
    let mut ex = vec![0u32; n];
    if n > 0 {
        for _ in 0..rng.gen_range(0..=max_deg) {
            ex[rng.gen_range(0..n)] += 1;
        }
    }
    Exponent::new(ex)
}

/// A random polynomial with up to `terms` terms of degree at most
/// `max_deg` and small nonzero integer coefficients; never zero.
pub fn random_poly(rng: &mut ChaCha8Rng, alg: &Arc<AlgebraPresentation>, max_deg: u32, terms: usize) -> Polynomial {
    loop {
        let items: Vec<_> = (0..rng.gen_range(1..=terms))
            .map(|_| {
                let mut c = rng.gen_range(-3..=3);
                if c == 0 {
                    c = 1;
                }
                (alg.field().from_i64(c), random_exponent(rng, alg.nvars(), max_deg))
            })
            .collect();
        let p = Polynomial::from_terms(alg, items);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Like [`random_poly`] but may return zero and bounds the degree strictly
/// below `below` (`None` when `below == 0`).
pub fn random_poly_below(rng: &mut ChaCha8Rng, alg: &Arc<AlgebraPresentation>, below: u32, terms: usize) -> Option<Polynomial> {
    (below > 0).then(|| random_poly(rng, alg, below - 1, terms))
}

pub fn random_generators(
    rng: &mut ChaCha8Rng,
    alg: &Arc<AlgebraPresentation>,
    count: std::ops::RangeInclusive<usize>,
    max_deg: u32,
) -> Vec<Polynomial> {
    (0..rng.gen_range(count)).map(|_| random_poly(rng, alg, max_deg, 3)).collect()
}

/// Generators `a_i * h` sharing a right factor `h`, so the left ideal is
/// proper unless `h` is invertible. Total degree stays at most `max_deg`.
pub fn random_proper_generators(
    rng: &mut ChaCha8Rng,
    alg: &Arc<AlgebraPresentation>,
    count: std::ops::RangeInclusive<usize>,
    max_deg: u32,
) -> Vec<Polynomial> {
    let h_deg = rng.gen_range(1..=max_deg.max(1));
    let h = loop {
        let h = random_poly(rng, alg, h_deg, 3);
        if h.degree() > Some(0) {
            break h;
        }
    };
    let room = max_deg.saturating_sub(h.degree().unwrap());
    (0..rng.gen_range(count)).map(|_| &random_poly(rng, alg, room, 3) * &h).collect()
}

/// Alternates between [`random_generators`] and [`random_proper_generators`].
pub fn mixed_generators(
    rng: &mut ChaCha8Rng,
    alg: &Arc<AlgebraPresentation>,
    count: std::ops::RangeInclusive<usize>,
    max_deg: u32,
    proper: bool,
) -> Vec<Polynomial> {
    if proper {
        random_proper_generators(rng, alg, count, max_deg)
    } else {
        random_generators(rng, alg, count, max_deg)
    }
}

pub fn random_vector(rng: &mut ChaCha8Rng, alg: &Arc<AlgebraPresentation>, rank: usize, max_deg: u32) -> VectorPoly {
    loop {
        let comps = (0..rank)
            .map(|_| {
                if rng.gen_bool(0.3) {
                    Polynomial::zero(alg)
                } else {
                    random_poly(rng, alg, max_deg, 2)
                }
            })
            .collect();
        let v = VectorPoly::new(alg, comps).unwrap();
        if !v.is_zero() {
            return v;
        }
    }
}

/// All exponents in `n` variables with every entry at most `max_entry`.
pub fn box_exponents(n: usize, max_entry: u32) -> Vec<Exponent> {
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max_entry).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Exponent::new).collect()
}

/// All exponents in `n` variables of total degree at most `max_deg`.
pub fn exponents_up_to(n: usize, max_deg: u32) -> Vec<Exponent> {
    box_exponents(n, max_deg).into_iter().filter(|e| e.degree() <= max_deg).collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}
