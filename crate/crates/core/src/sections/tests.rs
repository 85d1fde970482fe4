use super::*;
use crate::coalgebra::dualize;
use crate::rational::{binom_q, rat, sign};
use crate::algebra::Polynomial;
use crate::homology::betti_numbers;
use crate::rational::Rational;

pub(crate) fn thom(n: u32, sigma: i64) -> RelativeModel {
    let b = Generator::new("b", 2);
    let y = Generator::new("y", 2 * n as i32 + 1);
    let u = Generator::new("u", 2);
    let t = Generator::new("t", 2 * n as i32 + 1);
    let pb = Polynomial::gen(&b);
    let pu = Polynomial::gen(&u);
    let base = Cdga::new(vec![b.clone(), y.clone()], [("y".to_string(), pb.pow(n + 1))]).unwrap();
    let mut dt = Polynomial::zero();
    for i in 0..=n {
        dt.add_scaled(&(&pb.pow(i) * &pu.pow(n + 1 - i)), &(binom_q(n as i64 + 1, i as i64) * rat(sigma)));
    }
    let total = Cdga::new(
        vec![b, y, u, t],
        [("y".to_string(), pb.pow(n + 1)), ("t".to_string(), dt)],
    )
    .unwrap();
    RelativeModel::new(base, total).unwrap()
}

pub(crate) fn thom_borel(n: u32) -> (RelativeModel, Cdga) {
    let b = Generator::new("b", 2);
    let y = Generator::new("y", 2 * n as i32 + 1);
    let u = Generator::new("u", 2);
    let t = Generator::new("t", 2 * n as i32 + 1);
    let cs: Vec<Generator> = (1..=n + 1).map(|q| Generator::new(format!("c_{q}"), 2 * q as i32)).collect();
    let c = |q: u32| if q == 0 { Polynomial::one() } else { Polynomial::gen(&cs[q as usize - 1]) };
    let (pb, pu) = (Polynomial::gen(&b), Polynomial::gen(&u));
    let mut dt = Polynomial::zero();
    for q in 0..=n {
        for j in 0..=n - q {
            let term = &(&c(q) * &pb.pow(j)) * &pu.pow(n - q - j + 1);
            dt.add_scaled(&term, &(binom_q((n - q + 1) as i64, j as i64) * rat(sign(q as i64 - 1))));
        }
    }
    let mut dy = Polynomial::zero();
    for q in 0..=n + 1 {
        dy.add_scaled(&(&c(q) * &pb.pow(n + 1 - q)), &rat(sign(q as i64)));
    }
    let w = Cdga::new(cs.clone(), []).unwrap();
    let mut bg = vec![b.clone(), y.clone()];
    bg.extend(cs.iter().cloned());
    let base = Cdga::new(bg.clone(), [("y".to_string(), dy.clone())]).unwrap();
    bg.extend([u, t]);
    let total = Cdga::new(bg, [("y".to_string(), dy), ("t".to_string(), dt)]).unwrap();
    (RelativeModel::new(base, total).unwrap(), w)
}

fn k_model(rm: &RelativeModel, conv: SignConvention) -> SectionModel {
    let c = dualize(rm.base(), k_window(rm).unwrap()).unwrap();
    brown_szczarba(rm, &c, conv, Materialize::KQuotient).unwrap()
}

fn relation<'a>(s: &'a SectionModel, name: &str) -> &'a Polynomial {
    &s.relations.iter().find(|(n, _)| n == name).unwrap().1
}

// x = u⊗β1, U = u⊗1, g = t⊗γ: u^m ⊗ β_k = C(m,k) x^k U^(m-k), and the sum
// over b^i collapses to C(n+1,j) (x-1)^j U^(n+1-j).
#[test]
fn thom_sections_closed_form() {
    for n in 2..=4u32 {
        for (conv, s) in [(SignConvention::Section3, -1), (SignConvention::Section4, 1)] {
            let m = k_model(&thom(n, -1), conv);
            let a = &m.algebra;
            let x = a.g("u(x)beta_1");
            let uu = a.g("u(x)1");
            let g = a.g(&format!("t(x)gamma_{}", 2 * n + 1));
            let xm1 = &x - &Polynomial::one();
            for j in 0..=n {
                let want = (&xm1.pow(j) * &uu.pow(n + 1 - j)).scale(&(binom_q(n as i64 + 1, j as i64) * rat(s)));
                let name = if j == 0 { "t(x)1".to_string() } else { format!("t(x)beta_{j}") };
                assert_eq!(a.d_gen(&name).unwrap(), &want, "n={n} {conv} j={j}");
            }
            let top = &xm1.pow(n + 1) - &Polynomial::int(sign(n as i64 + 1));
            let want = (&top + &g).scale(&rat(s));
            assert_eq!(relation(&m, &format!("t(x)beta_{}", n + 1)), &want, "n={n} {conv}");
            assert!(a.d_gen("u(x)1").unwrap().is_zero());
        }
    }
}

#[test]
fn thom_full_model_squares_to_zero_in_both_conventions() {
    for n in [2u32, 3] {
        let rm = thom(n, -1);
        let c = dualize(rm.base(), DegreeWindow::new(0, 4 * n as i64 + 2).unwrap()).unwrap();
        for conv in [SignConvention::Section3, SignConvention::Section4] {
            let s = brown_szczarba(&rm, &c, conv, Materialize::Full).unwrap();
            assert!(s.algebra.check_d_squared().is_ok());
        }
    }
}

#[test]
fn product_fibration_full_model() {
    let b = Generator::new("b", 2);
    let y = Generator::new("y", 5);
    let u = Generator::new("u", 2);
    let t = Generator::new("t", 5);
    let pb = Polynomial::gen(&b);
    let base = Cdga::new(vec![b.clone(), y.clone()], [("y".to_string(), pb.pow(3))]).unwrap();
    let total = Cdga::new(
        vec![b, y, u.clone(), t],
        [("y".to_string(), pb.pow(3)), ("t".to_string(), Polynomial::gen(&u).pow(3))],
    )
    .unwrap();
    let rm = RelativeModel::new(base, total).unwrap();
    let c = dualize(rm.base(), DegreeWindow::new(0, 10).unwrap()).unwrap();
    for conv in [SignConvention::Section3, SignConvention::Section4] {
        let s = brown_szczarba(&rm, &c, conv, Materialize::Full).unwrap();
        assert!(s.algebra.check_d_squared().is_ok());
    }
}

#[test]
fn augmentation_solves_top_relation() {
    for n in 2..=4u32 {
        let m = k_model(&thom(n, -1), SignConvention::Section3);
        for d in -2..=5i64 {
            let eps = Augmentation::solve(&m, [("u(x)beta_1".to_string(), rat(d))]).unwrap();
            let got = eps.get(&format!("t(x)gamma_{}", 2 * n + 1)).unwrap().clone();
            let want = Rational::from_integer(((1 - d).pow(n + 1) - 1).into()) * rat(sign(n as i64));
            assert_eq!(got, want, "n={n} d={d}");
        }
    }
}

#[test]
fn augmentation_rejects_violated_relation() {
    let m = k_model(&thom(2, -1), SignConvention::Section3);
    let eps = Augmentation::new([
        ("u(x)beta_1".to_string(), rat(1)),
        ("t(x)gamma_5".to_string(), rat(7)),
    ]);
    assert!(eps.check(&m).is_err());
    assert!(Augmentation::new([]).check(&m).is_err());
}

#[test]
fn component_model_and_evaluation_map() {
    for (n, d) in [(2u32, 3i64), (2, 0), (3, -1)] {
        let rm = thom(n, -1);
        let conv = SignConvention::Section3;
        let m = k_model(&rm, conv);
        let eps = Augmentation::solve(&m, [("u(x)beta_1".to_string(), rat(d))]).unwrap();
        let comp = component_model(&m, &eps).unwrap();
        assert!(comp.check_d_squared().is_ok());
        assert!(comp.is_positively_graded());
        let c = dualize(rm.base(), k_window(&rm).unwrap()).unwrap();
        let ev = evaluation_map_model(&comp, &eps, &rm, &c, conv).unwrap();
        assert!(ev.check_chain_map().is_ok(), "n={n} d={d}");
        let h = betti_numbers(&comp, DegreeWindow::new(0, 2 * n as i64 + 2).unwrap()).unwrap();
        assert_eq!(h.rank(0), 1);
    }
}

#[test]
fn trivial_base_gives_fiber_model() {
    let u = Generator::new("u", 2);
    let t = Generator::new("t", 5);
    let total = Cdga::new(vec![u.clone(), t], [("t".to_string(), Polynomial::gen(&u).pow(3))]).unwrap();
    let rm = RelativeModel::new(Cdga::empty(), total).unwrap();
    let c = dualize(rm.base(), DegreeWindow::new(0, 0).unwrap()).unwrap();
    let s = brown_szczarba(&rm, &c, SignConvention::Section3, Materialize::Full).unwrap();
    let names: Vec<&str> = s.algebra.generators().iter().map(|g| g.name()).collect();
    assert_eq!(names, vec!["u(x)1", "t(x)1"]);
    assert_eq!(s.algebra.d_gen("t(x)1").unwrap(), &s.algebra.g("u(x)1").pow(3));
}

#[test]
fn empty_group_reduces_to_brown_szczarba() {
    for conv in [SignConvention::Section3, SignConvention::Section4] {
        let rm = thom(2, -1);
        let c = dualize(rm.base(), k_window(&rm).unwrap()).unwrap();
        let a = brown_szczarba(&rm, &c, conv, Materialize::KQuotient).unwrap();
        let b = conjugation_borel(&rm, &Cdga::empty(), &c, conv, Materialize::KQuotient).unwrap();
        assert_eq!(a.algebra, b.algebra);
        assert_eq!(a.relations, b.relations);
    }
}

#[test]
fn conjugation_model_squares_to_zero() {
    for n in [2u32, 3] {
        let (rm, w) = thom_borel(n);
        let c = dualize(rm.base(), DegreeWindow::new(0, 2 * n as i64 + 2).unwrap()).unwrap();
        for conv in [SignConvention::Section3, SignConvention::Section4] {
            let s = conjugation_borel(&rm, &w, &c, conv, Materialize::KQuotient).unwrap();
            assert!(s.algebra.check_d_squared().is_ok(), "n={n} {conv}");
            let eps = Augmentation::solve(&s, [("u(x)beta_1".to_string(), rat(2))]).unwrap();
            assert!(component_model(&s, &eps).unwrap().check_d_squared().is_ok());
        }
    }
}
