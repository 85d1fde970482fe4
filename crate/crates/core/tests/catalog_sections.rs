use num_bigint::BigInt;
use sullivan::algebra::json::cdga_to_json;
use sullivan::algebra::Cdga;
use sullivan::catalog::*;
use sullivan::coalgebra::{dualize, SignConvention};
use sullivan::homology::{betti_numbers, DegreeWindow, Options};
use sullivan::rational::{frac, rat};
use sullivan::sections::{brown_szczarba, component_model, k_window, Augmentation, Materialize};

fn component(n: u32, d: i64, conv: SignConvention) -> Cdga {
    let rm = thom_complex_models(n).unwrap().rel;
    let c = dualize(rm.base(), k_window(&rm).unwrap()).unwrap();
    let s = brown_szczarba(&rm, &c, conv, Materialize::KQuotient).unwrap();
    let eps = Augmentation::solve(&s, [("u(x)beta_1".to_string(), rat(d))]).unwrap();
    component_model(&s, &eps).unwrap()
}

#[test]
fn closed_form_examples() {
    let a = sections_closed_form(2, 3).unwrap();
    assert_eq!(a.d_gen("t(x)beta_2").unwrap(), &a.g(U_NAME).scale(&rat(-12)));
    let a = sections_closed_form(3, 2).unwrap();
    assert_eq!(a.d_gen("t(x)beta_3").unwrap(), &a.g(U_NAME).scale(&rat(-4)));
    let a = sections_closed_form(4, 1).unwrap();
    for j in 1..=4 {
        assert!(a.d_gen(&t_name(j)).unwrap().is_zero());
    }
}

#[test]
fn brown_szczarba_reproduces_closed_form_under_section_3() {
    for n in 2..=4 {
        for d in -2..=5 {
            let want = cdga_to_json(&sections_closed_form(n, d).unwrap());
            assert_eq!(cdga_to_json(&component(n, d, SignConvention::Section3)), want, "n={n} d={d}");
            if d != 1 {
                assert_ne!(cdga_to_json(&component(n, d, SignConvention::Section4)), want, "n={n} d={d}");
            }
        }
    }
}

#[test]
fn cocycles() {
    for n in 2..=4 {
        for d in [-1, 0, 2, 3] {
            let a = sections_closed_form(n, d).unwrap();
            for (j, x) in pu_cocycles(n, d).unwrap().iter().enumerate() {
                assert!(a.d(x).unwrap().is_zero(), "n={n} d={d} j={j}");
                assert!(x.is_homogeneous_of(2 * (n as i64 - j as i64) + 1));
            }
        }
    }
    let a = sections_closed_form(2, 3).unwrap();
    let printed = explicit_pu_cocycles(2, 3).unwrap();
    assert_eq!(a.d(&printed[1]).unwrap(), a.g(U_NAME).pow(2).scale(&rat(6)));
    let a = sections_closed_form(2, 2).unwrap();
    assert!(a.d(&explicit_pu_cocycles(2, 2).unwrap()[1]).unwrap().is_zero());
    assert!(pu_cocycles(2, 1).is_err());
}

#[test]
fn component_cohomology() {
    // exterior algebra on generators of degrees 3, 5, .., 2n+1 for d != 1
    let exterior = |n: u32, hi: i64| -> Vec<usize> {
        let mut dims = vec![0usize; hi as usize + 1];
        dims[0] = 1;
        for k in 1..=n {
            let deg = 2 * k as usize + 1;
            for i in (deg..dims.len()).rev() {
                dims[i] += dims[i - deg];
            }
        }
        dims
    };
    for n in 2..=3 {
        let hi = 2 * n as i64 + 2;
        let w = DegreeWindow::new(0, hi).unwrap();
        for d in [-1, 0, 2, 3] {
            let h = betti_numbers(&sections_closed_form(n, d).unwrap(), w).unwrap();
            assert_eq!(h.as_vec(), exterior(n, hi), "n={n} d={d}");
        }
    }
}

#[test]
fn equivariant_closed_form_examples() {
    let a = sections_borel(2, 3).unwrap();
    let d1 = a.d_gen("t(x)beta_1").unwrap();
    assert_eq!(d1.coefficient(&a.g("c_2").terms().next().unwrap().0.clone()), rat(-6));
    for k in 0..=3 {
        let a = sections_borel(3, 0).unwrap();
        let c = a.g(&format!("c_{}", 4 - k));
        assert_eq!(a.d_gen(&t_name(k)).unwrap().coefficient(c.terms().next().unwrap().0), rat(0));
    }
    for n in 2..=4 {
        let w = bu_model(n + 1);
        let names: Vec<&str> = w.generators().iter().map(|g| g.name()).collect();
        for d in -1..=4 {
            let a = sections_borel(n, d).unwrap();
            assert!(a.check_d_squared().is_ok());
            // restricting to c = 0 recovers the closed form up to the sign (-1)^(n+1)
            let restricted = a.without(&names).unwrap();
            let plain = sections_closed_form(n, d).unwrap();
            for k in 0..=n {
                let want = plain.d_gen(&t_name(k)).unwrap().scale(&rat(if n % 2 == 1 { 1 } else { -1 }));
                assert_eq!(restricted.d_gen(&t_name(k)).unwrap(), &want, "n={n} d={d} k={k}");
            }
        }
    }
}

#[test]
fn orbit_map_examples() {
    let psi = orbit_map(2, 3).unwrap();
    let t = psi.target();
    assert_eq!(psi.image("t(x)beta_1").unwrap(), &t.g("sc_2").scale(&rat(-6)));
    assert_eq!(psi.image("t(x)beta_2").unwrap(), &t.g("sc_1").scale(&rat(-12)));
    assert!(psi.image(U_NAME).unwrap().is_zero());
    for n in 2..=4 {
        for k in 0..=n {
            let c = orbit_coefficient(n, 2, k);
            assert_eq!(c, BigInt::from((if n % 2 == 0 { -1 } else { 1 }) - (if k % 2 == 0 { 1 } else { -1 })));
            assert_eq!(c == BigInt::from(0), (n - k + 1) % 2 == 0);
            assert_eq!(orbit_coefficient(n, 0, k), BigInt::from(0));
        }
        for d in -2..=6 {
            assert!(orbit_map(n, d).unwrap().check_chain_map().is_ok());
            assert!(orbit_borel_lift(n, d).unwrap().check_chain_map().is_ok(), "n={n} d={d}");
        }
    }
}

#[test]
fn orbit_decisions() {
    for n in 2..=4 {
        for d in -2..=6 {
            let o = orbit_iso_decision(n, d).unwrap();
            assert_eq!(o.iso, !(0..=2).contains(&d), "n={n} d={d}");
            assert_eq!(o.coefficients_nonzero, o.iso, "n={n} d={d}");
        }
    }
    let o = orbit_iso_decision(3, 4).unwrap();
    assert!(o.iso && o.kernel_degrees.is_empty());
    let o = orbit_iso_decision(2, 1).unwrap();
    assert_eq!(o.kernel_degrees, (1..=6).collect::<Vec<_>>());
    assert_eq!(orbit_iso_decision(2, 2).unwrap().kernel_degrees, vec![3]);
}

#[test]
fn torsion_and_characteristic() {
    assert_eq!(h1_torsion_order(2, 3).unwrap(), BigInt::from(12));
    assert_eq!(h1_torsion_order(3, 2).unwrap(), BigInt::from(4));
    assert_eq!(h1_torsion_order(5, 1).unwrap(), BigInt::from(0));
    assert!(h1_torsion_order(2, 0).is_err());
    for n in 2..=4 {
        for d in 1..=6 {
            let a = sections_closed_form(n, d).unwrap();
            let c = a.d_gen(&t_name(n)).unwrap().coefficient(a.g(U_NAME).terms().next().unwrap().0);
            assert_eq!(c.numer().magnitude().clone(), h1_torsion_order(n, d).unwrap().magnitude().clone());
        }
    }
    for d in 1..=10 {
        assert_eq!(characteristic_of_degree(1, d), BigInt::from(d));
    }
    assert_eq!(characteristic_of_degree(2, 1), BigInt::from(-4));
    assert_eq!(characteristic_of_degree(3, 0), BigInt::from(0));
    for n in 1..=8u32 {
        for d in -10..=10i64 {
            if d == 0 {
                continue;
            }
            // (-1)^(n-1) ((d+1)^(n+1) - 1 - (n+1) d) / d, done over Q
            let num = frac(1, 1) * rat(d + 1).pow(n as i32 + 1) - rat(1) - rat((n as i64 + 1) * d);
            let val = num / rat(d) * rat(if n % 2 == 1 { 1 } else { -1 });
            assert!(val.is_integer());
            assert_eq!(val.to_integer(), characteristic_of_degree(n, d), "n={n} d={d}");
        }
    }
}

#[test]
fn eta_matches_cocycles() {
    for n in 2..=4 {
        for d in [0, 2, 3] {
            let eta = eta_classes(n, d).unwrap();
            let printed = explicit_pu_cocycles(n, d).unwrap();
            assert_eq!(eta.eta.len(), n as usize);
            for (e, x) in eta.eta.iter().zip(&printed) {
                assert_eq!(e, &x.scale(&rat(n as i64 + 1)));
            }
            let a = sections_closed_form(n, d).unwrap();
            assert_eq!(eta.eta_u, a.g(U_NAME));
            assert_eq!(eta.eta_t[0], a.g("t(x)1"));
        }
    }
    let eta = eta_classes(2, 3).unwrap();
    let a = sections_closed_form(2, 3).unwrap();
    let want = &a.g("t(x)beta_1").scale(&rat(3)) - &(&a.g(U_NAME) * &a.g("t(x)beta_2")).scale(&rat(3));
    assert_eq!(eta.eta[1], want);
}

#[test]
fn invariant_report_example() {
    let r = invariant_report(2, 3, None, Options::default()).unwrap();
    let v = r.to_json();
    assert_eq!(v["h1TorsionOrder"], 12);
    assert_eq!(v["orbitIso"], true);
    assert_eq!(v["characteristic"], -18);
    assert_eq!(v["betti"], serde_json::json!({"0": 1, "3": 1, "5": 1, "8": 1}));
    let r = invariant_report(2, 0, None, Options::default()).unwrap();
    assert!(r.h1_torsion_order.is_none());
}
