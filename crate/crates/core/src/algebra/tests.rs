use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::corpus;
use crate::parse::parse_expression;

fn q(v: i64) -> Scalar {
    FieldSpec::Rationals.from_i64(v)
}

fn e(v: &[u32]) -> Exponent {
    Exponent::new(v.to_vec())
}

fn p(alg: &Arc<AlgebraPresentation>, s: &str) -> Polynomial {
    parse_expression(s, alg).unwrap()
}

#[test]
fn presentations() {
    let weyl = AlgebraPresentation::new(
        FieldSpec::Rationals,
        &["x", "y"],
        &[Relation::new("y", "x", q(1)).plus(&[], q(1))],
    )
    .unwrap();
    assert!(!weyl.is_quasi_commutative());
    assert!(weyl.same_as(&corpus::weyl1()));

    let qp = AlgebraPresentation::new(FieldSpec::Rationals, &["x", "y"], &[Relation::new("y", "x", q(2))])
        .unwrap();
    assert!(qp.is_quasi_commutative());
    assert!(!qp.is_commutative());

    let comm = AlgebraPresentation::commutative(FieldSpec::Rationals, &["a", "b", "c"]).unwrap();
    assert!(comm.is_commutative());
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        assert!(comm.constant(i, j).is_one());
        assert!(comm.remainder(i, j).is_zero());
    }
}

#[test]
fn presentation_errors() {
    let f = FieldSpec::Rationals;
    let err = |vars: &[&str], rels: &[Relation]| AlgebraPresentation::new(f, vars, rels).unwrap_err();
    assert!(matches!(
        err(&["x", "y"], &[Relation::new("y", "x", q(1)), Relation::new("y", "x", q(2))]),
        AlgebraError::DuplicatePair { .. }
    ));
    assert!(matches!(err(&["x", "y"], &[Relation::new("y", "x", q(0))]), AlgebraError::ZeroConstant { .. }));
    assert!(matches!(
        err(&["x", "y"], &[Relation::new("y", "x", q(1)).plus(&["x", "y"], q(1))]),
        AlgebraError::NonlinearRemainder { .. }
    ));
    assert!(matches!(err(&["x", "y"], &[Relation::new("w", "x", q(1))]), AlgebraError::UnknownVariable(_)));
    assert!(matches!(err(&["x", "y"], &[Relation::new("x", "y", q(1))]), AlgebraError::PairOrder { .. }));
    assert!(matches!(err(&["x", "x"], &[]), AlgebraError::DuplicateVariable(_)));
    assert!(matches!(err(&["x", ""], &[]), AlgebraError::InvalidName(_)));
    assert!(matches!(
        err(&["x", "y"], &[Relation::new("y", "x", FieldSpec::Prime(7).from_i64(1))]),
        AlgebraError::Field(_)
    ));
}

#[test]
fn zero_variables_collapse_to_field() {
    let k = AlgebraPresentation::commutative(FieldSpec::Rationals, &[]).unwrap();
    assert_eq!(k.normalize_word(&[]), Polynomial::one(&k));
    let two = Polynomial::constant(&k, q(2));
    assert_eq!(&two * &two, Polynomial::constant(&k, q(4)));
    assert!(k.consistency_check().is_empty());
}

/// Weyl A1 acting on k[t]: x multiplies by t, y differentiates.
fn weyl_operator(word: &[usize], poly: &BTreeMap<u32, BigRational>) -> BTreeMap<u32, BigRational> {
    let mut cur = poly.clone();
    for &v in word.iter().rev() {
        let mut next = BTreeMap::new();
        for (&k, c) in &cur {
            match v {
                0 => {
                    *next.entry(k + 1).or_insert_with(|| BigRational::from_integer(0.into())) += c;
                }
                _ if k > 0 => {
                    *next.entry(k - 1).or_insert_with(|| BigRational::from_integer(0.into())) +=
                        c * BigRational::from_integer(k.into());
                }
                _ => {}
            }
        }
        next.retain(|_, c| *c != BigRational::from_integer(0.into()));
        cur = next;
    }
    cur
}

fn weyl_operator_of(f: &Polynomial, poly: &BTreeMap<u32, BigRational>) -> BTreeMap<u32, BigRational> {
    let mut acc: BTreeMap<u32, BigRational> = BTreeMap::new();
    for (exp, c) in f.terms() {
        let Scalar::Rational(c) = c else { unreachable!() };
        for (k, v) in weyl_operator(&exp.to_word(), poly) {
            *acc.entry(k).or_insert_with(|| BigRational::from_integer(0.into())) += v * c;
        }
    }
    acc.retain(|_, c| *c != BigRational::from_integer(0.into()));
    acc
}

fn test_polys() -> Vec<BTreeMap<u32, BigRational>> {
    (0..6)
        .map(|d| {
            (0..=d).map(|k| (k, BigRational::from_integer((k as i64 * 3 - 1).into()))).collect()
        })
        .collect()
}

#[test]
fn normalize_word_examples() {
    let a = corpus::weyl1();
    assert_eq!(a.normalize_word(&[1, 0]), p(&a, "x*y + 1"));
    assert_eq!(a.normalize_word(&[1, 1, 0]), p(&a, "x*y^2 + 2*y"));
    assert_eq!(a.normalize_word(&[]), Polynomial::one(&a));
    let qp = corpus::qplane_q2();
    assert_eq!(qp.normalize_word(&[1, 0]), p(&qp, "2*x*y"));
}

#[test]
fn normal_forms_match_differential_operators() {
    let a = corpus::weyl1();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let len = rng.gen_range(0..7);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..2)).collect();
        let nf = a.normalize_word(&word);
        for t in test_polys() {
            assert_eq!(weyl_operator(&word, &t), weyl_operator_of(&nf, &t), "word {word:?}");
        }
    }
}

/// Quantum plane acting on k[u, v]: x multiplies by u, y maps p(u, v) to
/// v * p(q u, v).
#[test]
fn quantum_plane_matches_operator_oracle() {
    type Poly2 = BTreeMap<(u32, u32), BigRational>;
    let qv = BigRational::from_integer(2.into());
    let apply = |word: &[usize], poly: &Poly2| -> Poly2 {
        let mut cur = poly.clone();
        for &v in word.iter().rev() {
            cur = cur
                .into_iter()
                .map(|((a, b), c)| match v {
                    0 => ((a + 1, b), c),
                    _ => ((a, b + 1), c * num_traits::pow(qv.clone(), a as usize)),
                })
                .collect();
        }
        cur
    };
    let a = corpus::qplane_q2();
    let seed: Poly2 = [((0, 0), 1), ((1, 0), 2), ((0, 2), -3), ((2, 1), 5)]
        .into_iter()
        .map(|(k, v)| (k, BigRational::from_integer(v.into())))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let len = rng.gen_range(0..7);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..2)).collect();
        let nf = a.normalize_word(&word);
        let mut via_nf: Poly2 = BTreeMap::new();
        for (exp, c) in nf.terms() {
            let Scalar::Rational(c) = c else { unreachable!() };
            for (k, v) in apply(&exp.to_word(), &seed) {
                *via_nf.entry(k).or_insert_with(|| BigRational::from_integer(0.into())) += v * c;
            }
        }
        via_nf.retain(|_, c| *c != BigRational::from_integer(0.into()));
        assert_eq!(apply(&word, &seed), via_nf, "word {word:?}");
    }
}

#[test]
fn poly_arithmetic_examples() {
    let a = corpus::weyl1();
    assert_eq!(&p(&a, "x*y + 1") + &p(&a, "-x*y"), p(&a, "1"));
    assert!(p(&a, "x + y").scale(&q(0)).is_zero());
    assert_eq!(p(&a, "x + y").scale(&q(2)), p(&a, "2*x + 2*y"));
    assert_eq!(&p(&a, "y") * &p(&a, "x"), p(&a, "x*y + 1"));
    assert_eq!(&p(&a, "x*y") * &p(&a, "x*y"), p(&a, "x^2*y^2 + x*y"));
    let f = p(&a, "x^2*y - 3*y + 1/2");
    assert_eq!(&f * &Polynomial::one(&a), f);
    assert_eq!(&Polynomial::one(&a) * &f, f);
    let other = corpus::qplane_q2();
    assert_eq!(f.try_add(&Polynomial::one(&other)), Err(AlgebraError::Mismatch));
    assert_eq!(f.try_mul(&Polynomial::one(&other)), Err(AlgebraError::Mismatch));
}

/// The 4-letter word y x y x with the product taken through normalize_word.
#[test]
fn product_agrees_with_word_normalization() {
    let a = corpus::weyl1();
    let via_word = a.normalize_word(&[0, 1, 0, 1]);
    assert_eq!(via_word, &p(&a, "x*y") * &p(&a, "x*y"));
    let a2 = corpus::weyl2();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for alg in [a2, corpus::usl2(), corpus::heisenberg(), corpus::qplane_q2_gf7()] {
        let n = alg.nvars();
        for _ in 0..30 {
            let len = rng.gen_range(0..6);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
            let prod = word
                .iter()
                .fold(Polynomial::one(&alg), |acc, &v| &acc * &Polynomial::variable(&alg, v));
            assert_eq!(alg.normalize_word(&word), prod, "word {word:?}");
        }
    }
}

#[test]
fn product_data_examples() {
    let a = corpus::weyl1();
    let data = a.monomial_product_data(&e(&[0, 0]), &e(&[3, 2]));
    assert!(data.c.is_one() && data.tail.is_zero());
    let data = a.monomial_product_data(&e(&[2, 1]), &e(&[0, 0]));
    assert!(data.c.is_one() && data.tail.is_zero());
    let data = a.monomial_product_data(&e(&[0, 1]), &e(&[1, 0]));
    assert!(data.c.is_one());
    assert_eq!(data.tail, Polynomial::one(&a));
    let qp = corpus::qplane_q2();
    let data = qp.monomial_product_data(&e(&[0, 2]), &e(&[1, 0]));
    assert_eq!(data.c, q(4));
    assert!(data.tail.is_zero());
}

#[test]
fn consistency_examples() {
    for alg in [corpus::weyl1(), corpus::weyl2(), corpus::heisenberg(), corpus::usl2(), corpus::qplane_q2()] {
        assert!(alg.consistency_check().is_empty());
        assert!(alg.is_consistent());
    }
    let bad = corpus::inconsistent_demo();
    let failures = bad.consistency_check();
    assert_eq!(failures.len(), 1);
    let f = &failures[0];
    assert_eq!(f.triple, (0, 1, 2));
    assert_eq!(f.upper_first, p(&bad, "x*y*z + x*y + z + 1"));
    assert_eq!(f.lower_first, p(&bad, "x*y*z + x*y + z"));
    assert_eq!(f.difference(), Polynomial::one(&bad));
    assert!(!bad.is_consistent());
}

fn random_poly(alg: &Arc<AlgebraPresentation>, rng: &mut ChaCha8Rng, max_deg: u32, terms: usize) -> Polynomial {
    let n = alg.nvars();
    let field = alg.field();
    Polynomial::from_terms(
        alg,
        (0..terms).map(|_| {
            let mut exp = vec![0u32; n];
            let d = rng.gen_range(0..=max_deg);
            for _ in 0..d {
                exp[rng.gen_range(0..n)] += 1;
            }
            (field.from_i64(rng.gen_range(-4..=4)), Exponent::new(exp))
        }),
    )
}

fn property_algebras() -> Vec<Arc<AlgebraPresentation>> {
    vec![
        corpus::weyl1(),
        corpus::weyl2(),
        corpus::qplane_q2(),
        corpus::qplane_q2_gf7(),
        corpus::usl2(),
        corpus::heisenberg(),
    ]
}

#[test]
fn ring_axioms_on_consistent_presentations() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for alg in property_algebras() {
        for _ in 0..25 {
            let f = random_poly(&alg, &mut rng, 2, 3);
            let g = random_poly(&alg, &mut rng, 2, 3);
            let h = random_poly(&alg, &mut rng, 2, 3);
            assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        }
    }
}

#[test]
fn random_strategies_are_confluent() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for alg in property_algebras() {
        let n = alg.nvars();
        for _ in 0..25 {
            let len = rng.gen_range(0..7);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
            let leftmost = alg.normalize_word(&word);
            let rightmost = alg.normalize_word_by(&word, |_, d| d.len() - 1);
            let mut local = ChaCha8Rng::seed_from_u64(rng.gen());
            let random = alg.normalize_word_by(&word, |_, d| local.gen_range(0..d.len()));
            assert_eq!(leftmost, rightmost);
            assert_eq!(leftmost, random);
        }
    }
}

#[test]
fn product_data_matches_multiplication() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for alg in property_algebras() {
        let n = alg.nvars();
        for _ in 0..40 {
            let a: Vec<u32> = (0..n).map(|_| rng.gen_range(0..3)).collect();
            let b: Vec<u32> = (0..n).map(|_| rng.gen_range(0..3)).collect();
            let (a, b) = (Exponent::new(a), Exponent::new(b));
            let data = alg.monomial_product_data(&a, &b);
            assert!(!data.c.is_zero());
            let one = alg.field().one();
            let prod = &Polynomial::monomial(&alg, a.clone(), one.clone())
                * &Polynomial::monomial(&alg, b.clone(), one);
            let rebuilt = &Polynomial::monomial(&alg, a.add(&b), data.c.clone()) + &data.tail;
            assert_eq!(prod, rebuilt);
            if let Some(d) = data.tail.degree() {
                assert!(d < a.degree() + b.degree());
            }
            if alg.is_quasi_commutative() {
                assert!(data.tail.is_zero());
            }
        }
    }
}

#[test]
fn normal_form_degree_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for alg in property_algebras() {
        let n = alg.nvars();
        for _ in 0..25 {
            let len = rng.gen_range(0..7);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
            let nf = alg.normalize_word(&word);
            assert_eq!(nf.degree(), Some(len as u32));
            let mut content = vec![0u32; n];
            for &v in &word {
                content[v] += 1;
            }
            let top = nf.homogeneous_part(len as u32);
            assert_eq!(top.len(), 1);
            assert!(top.coefficient(&Exponent::new(content)).is_some());
        }
    }
}

#[test]
fn canonical_storage_order_is_degrevlex() {
    let a = corpus::heisenberg();
    let f = p(&a, "x1^2 + x2^2 + x1*x3 + x3^2 + x1*x2 + x2*x3 + 1 + x3");
    let order: Vec<Vec<u32>> = f.terms().map(|(e, _)| e.entries().to_vec()).collect();
    assert_eq!(
        order,
        vec![
            vec![0, 0, 0],
            vec![0, 0, 1],
            vec![0, 0, 2],
            vec![0, 1, 1],
            vec![1, 0, 1],
            vec![0, 2, 0],
            vec![1, 1, 0],
            vec![2, 0, 0],
        ]
    );
}
