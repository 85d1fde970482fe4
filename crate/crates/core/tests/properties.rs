use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use sullivan::algebra::{Cdga, Generator, Monomial, Morphism, Polynomial};
use sullivan::catalog::*;
use sullivan::coalgebra::dualize;
use sullivan::homology::linalg::{bareiss_rank, QMatrix};
use sullivan::homology::{basis_in_degree, DegreeWindow};
use sullivan::rational::{frac, rat, sign, Rational};

/// Exponent vectors and coefficients, read against a generator list.
type Raw = Vec<(Vec<u32>, i64, i64)>;

fn raw(ngens: usize, max_terms: usize) -> impl Strategy<Value = Raw> {
    prop::collection::vec((prop::collection::vec(0u32..3, ngens), -6i64..=6, 1i64..=3), 0..max_terms)
}

fn poly(gens: &[Generator], r: &Raw) -> Polynomial {
    let mut p = Polynomial::zero();
    for (exps, num, den) in r {
        let word: Vec<(Generator, u32)> = gens.iter().cloned().zip(exps.iter().copied()).filter(|(_, e)| *e > 0).collect();
        if let Some((s, m)) = Monomial::from_word(&word) {
            p.add_term(m, frac(num * s, *den));
        }
    }
    p
}

/// Lowest-degree homogeneous part.
fn homogeneous(p: Polynomial) -> (i64, Polynomial) {
    p.homogeneous_parts().into_iter().next().unwrap_or((0, Polynomial::zero()))
}

fn free_gens() -> Vec<Generator> {
    [("a", 1), ("b", 2), ("c", 3), ("e", 4), ("f", 5)].iter().map(|(n, d)| Generator::new(n, *d)).collect()
}

fn models() -> Vec<Cdga> {
    vec![
        gr1c_absolute(3).unwrap(),
        sections_borel(2, 3).unwrap(),
        thom_complex_models(2).unwrap().borel.total().clone(),
        gr2_borel(2).unwrap().total().clone(),
    ]
}

fn maps() -> Vec<Morphism> {
    vec![
        h_map(3).unwrap(),
        orbit_borel_lift(2, 4).unwrap(),
        gr1c_eliminated(3, true).unwrap().1,
        gr2_phi(2, DzSign::Minus).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graded_commutativity(x in raw(5, 4), y in raw(5, 4)) {
        let g = free_gens();
        let (dx, x) = homogeneous(poly(&g, &x));
        let (dy, y) = homogeneous(poly(&g, &y));
        prop_assert_eq!(&x * &y, (&y * &x).scale(&rat(sign(dx * dy))));
    }

    #[test]
    fn associativity_and_distributivity(x in raw(5, 3), y in raw(5, 3), z in raw(5, 3)) {
        let g = free_gens();
        let (x, y, z) = (poly(&g, &x), poly(&g, &y), poly(&g, &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn odd_elements_square_to_zero(x in raw(5, 4)) {
        let g = free_gens();
        let (dx, x) = homogeneous(poly(&g, &x));
        if dx % 2 != 0 {
            prop_assert!((&x * &x).is_zero());
        }
    }

    #[test]
    fn leibniz_and_d_squared(which in 0usize..4, x in raw(12, 3), y in raw(12, 3)) {
        let a = &models()[which];
        let gens = a.generators();
        let (dx, x) = homogeneous(poly(gens, &x));
        let y = poly(gens, &y);
        let lhs = a.d(&(&x * &y)).unwrap();
        let rhs = &(&a.d(&x).unwrap() * &y) + &(&x * &a.d(&y).unwrap()).scale(&rat(sign(dx)));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(a.d(&a.d(&y).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn morphisms_are_multiplicative_chain_maps(which in 0usize..4, x in raw(12, 3), y in raw(12, 3)) {
        let f = &maps()[which];
        let gens = f.source().generators();
        let (x, y) = (poly(gens, &x), poly(gens, &y));
        prop_assert_eq!(f.apply(&(&x * &y)).unwrap(), &f.apply(&x).unwrap() * &f.apply(&y).unwrap());
        let lhs = f.apply(&f.source().d(&x).unwrap()).unwrap();
        prop_assert_eq!(lhs, f.target().d(&f.apply(&x).unwrap()).unwrap());
    }

    #[test]
    fn comultiplication_is_coassociative_and_counital(exps in prop::collection::vec(0u32..3, 5)) {
        let word: Vec<(Generator, u32)> = free_gens().into_iter().zip(exps).filter(|(_, e)| *e > 0).collect();
        let Some((_, m)) = Monomial::from_word(&word) else { return Ok(()) };
        let mut left: BTreeMap<(Monomial, Monomial, Monomial), i64> = BTreeMap::new();
        let mut right = left.clone();
        let mut units = 0;
        for (s, p, q) in m.splittings() {
            if (p.is_one() && q == m) || (q.is_one() && p == m) {
                prop_assert_eq!(s, 1);
                units += 1;
            }
            for (s2, p1, p2) in p.splittings() {
                *left.entry((p1, p2, q.clone())).or_default() += s * s2;
            }
            for (s2, q1, q2) in q.splittings() {
                *right.entry((p.clone(), q1, q2)).or_default() += s * s2;
            }
        }
        left.retain(|_, v| *v != 0);
        right.retain(|_, v| *v != 0);
        prop_assert_eq!(left, right);
        prop_assert_eq!(units, if m.is_one() { 1 } else { 2 });
    }

    #[test]
    fn bareiss_rank_matches_rref(rows in 1usize..6, cols in 1usize..6, seed in prop::collection::vec(-3i64..=3, 36)) {
        let mut q = QMatrix::zero(rows, 0);
        for j in 0..cols {
            q.push_col((0..rows).map(|i| frac(seed[i * 6 + j], 1 + (i + j) as i64 % 2)).collect());
        }
        let r = q.rank();
        prop_assert_eq!(r, cols - q.nullspace().len());
        prop_assert_eq!(r, q.rank_transposed());
        let ints: Vec<Vec<BigInt>> = (0..rows).map(|i| (0..cols).map(|j| BigInt::from(2 * seed[i * 6 + j])).collect()).collect();
        prop_assert_eq!(bareiss_rank(ints), r);
        for v in q.nullspace() {
            for i in 0..rows {
                let s: Rational = q.cols.iter().zip(&v).map(|(c, x)| &c[i] * x).sum();
                prop_assert_eq!(s, rat(0));
            }
        }
    }

    #[test]
    fn components_over_wider_degrees(n in 2u32..=3, d in -20i64..=20) {
        let a = sections_closed_form(n, d).unwrap();
        prop_assert!(a.check_d_squared().is_ok());
        prop_assert!(orbit_map(n, d).unwrap().check_chain_map().is_ok());
        prop_assert!(sections_borel(n, d).unwrap().check_d_squared().is_ok());
        prop_assert_eq!(orbit_iso_decision(n, d).unwrap().iso, !(0..=2).contains(&d));
    }
}

#[test]
fn dual_differential_is_the_transpose() {
    for base in [thom_complex_models(2).unwrap().borel.base().clone(), gr1c_absolute(2).unwrap()] {
        let w = DegreeWindow::new(0, 8).unwrap();
        let c = dualize(&base, w).unwrap();
        for k in 1..=8 {
            for m in c.basis(k) {
                let dd = c.dual_differential(m);
                for src in basis_in_degree(&base, k - 1).unwrap() {
                    let want = base.d(&Polynomial::from(src.clone())).unwrap().coefficient(m);
                    assert_eq!(dd.get(&src).cloned().unwrap_or_default(), want);
                }
            }
        }
    }
}
