use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::chern::bu_model;
use super::gr1c::c;
use crate::algebra::{Cdga, Generator, Monomial, Morphism, Polynomial};
use crate::error::{Error, Result};
use crate::homology::{is_quasi_iso, DegreeWindow};
use crate::rational::{binom, binom_q, int, ipow, rat, sign};
use crate::sections::pushforward_p_beta;

pub fn t_name(j: u32) -> String {
    if j == 0 {
        "t(x)1".into()
    } else {
        format!("t(x)beta_{j}")
    }
}

pub const U_NAME: &str = "u(x)1";

fn component_gens(n: u32) -> Vec<Generator> {
    let mut gens = vec![Generator::new(U_NAME, 2)];
    gens.extend((0..=n).map(|j| Generator::new(t_name(j), 2 * (n - j) as i32 + 1)));
    gens
}

fn uu() -> Polynomial {
    Polynomial::gen(&Generator::new(U_NAME, 2))
}

fn tt(n: u32, j: u32) -> Polynomial {
    Polynomial::gen(&Generator::new(t_name(j), 2 * (n - j) as i32 + 1))
}

/// Model of the component of sections of degree `d`:
/// `d(t⊗β_j) = -C(n+1,j) (d-1)^j (u⊗1)^(n-j+1)`.
pub fn sections_closed_form(n: u32, d: i64) -> Result<Cdga> {
    if n == 0 {
        return Err(Error::Parameter("n must be positive".into()));
    }
    let ni = n as i64;
    let diff: Vec<(String, Polynomial)> = (0..=n)
        .map(|j| {
            let coef = -binom_q(ni + 1, j as i64) * int(&ipow(d - 1, j));
            (t_name(j), uu().pow(n - j + 1).scale(&coef))
        })
        .collect();
    Cdga::new(component_gens(n), diff)
}

/// `x_(2(n-j)+1) = t⊗β_j - C(n+1,n-j)/(n+1) (u⊗1)^(n-j) t⊗β_n`, `j < n`, as
/// written; these are cocycles only when the two multipliers agree.
pub fn explicit_pu_cocycles(n: u32, d: i64) -> Result<Vec<Polynomial>> {
    if d == 1 {
        return Err(Error::Parameter("the cocycles need d != 1".into()));
    }
    let ni = n as i64;
    Ok((0..n)
        .map(|j| {
            let lam = binom_q(ni + 1, ni - j as i64) / rat(ni + 1);
            &tt(n, j) - &(&uu().pow(n - j) * &tt(n, n)).scale(&lam)
        })
        .collect())
}

/// Cocycles in degrees `2(n-j)+1`: `t⊗β_j - λ_j (u⊗1)^(n-j) t⊗β_n` with
/// `λ_j = C(n+1,j) (d-1)^(j-n) / (n+1)`.
pub fn pu_cocycles(n: u32, d: i64) -> Result<Vec<Polynomial>> {
    if d == 1 {
        return Err(Error::Parameter("the cocycles need d != 1".into()));
    }
    let ni = n as i64;
    Ok((0..n)
        .map(|j| {
            let lam = binom_q(ni + 1, j as i64) / (rat(ni + 1) * int(&ipow(d - 1, n - j)));
            &tt(n, j) - &(&uu().pow(n - j) * &tt(n, n)).scale(&lam)
        })
        .collect())
}

/// `Λ(u⊗1, t⊗β_0..t⊗β_n) ⊗ ΛW` with the closed-form equivariant differential.
pub fn sections_borel(n: u32, d: i64) -> Result<Cdga> {
    if n == 0 {
        return Err(Error::Parameter("n must be positive".into()));
    }
    let ni = n as i64;
    let mut gens = component_gens(n);
    gens.extend(bu_model(n + 1).generators().iter().cloned());
    let mut diff = Vec::new();
    for k in 0..=ni {
        let mut p = Polynomial::zero();
        for q in 0..=ni {
            let e = ni - q - k + 1;
            let outer = binom(ni - q + 1, k);
            if outer.is_zero() || e < 0 {
                continue;
            }
            let mut s = BigInt::zero();
            for j in 0..=(ni - q).min(k) {
                s += binom(k, j) * ipow(d, (k - j) as u32) * sign(j + 1);
            }
            let coef = int(&(outer * s)) * rat(sign(ni + q - 1));
            p.add_scaled(&(&c(q) * &uu().pow(e as u32)), &coef);
        }
        let tail = int(&(ipow(1 - d, n + 1) - 1));
        p.add_scaled(&c(ni - k + 1), &tail);
        diff.push((t_name(k as u32), p));
    }
    Cdga::new(gens, diff)
}

/// `Λ(sc_1..sc_(n+1))`, zero differential.
pub fn orbit_target(n: u32) -> Cdga {
    let gens = (1..=n + 1).map(|q| Generator::new(format!("sc_{q}"), 2 * q as i32 - 1)).collect();
    Cdga::new(gens, []).expect("free algebra")
}

/// `(1-d)^(n+1) - (1-d)^k`.
pub fn orbit_coefficient(n: u32, d: i64, k: u32) -> BigInt {
    ipow(1 - d, n + 1) - ipow(1 - d, k)
}

/// `Ψ(u⊗1) = 0`, `Ψ(t⊗β_k) = ((1-d)^(n+1) - (1-d)^k) sc_(n-k+1)`.
pub fn orbit_map(n: u32, d: i64) -> Result<Morphism> {
    let target = orbit_target(n);
    let images: Vec<(String, Polynomial)> = (0..=n)
        .map(|k| {
            let g = target.g(&format!("sc_{}", n - k + 1));
            (t_name(k), g.scale(&int(&orbit_coefficient(n, d, k))))
        })
        .collect();
    Morphism::new(sections_closed_form(n, d)?, target, images)
}

/// Lift of `Ψ` through the universal bundle `Λ(sc) ⊗ ΛW`, `d(sc_q) = -c_q`,
/// on the equivariant model: `c ↦ c`, `u⊗1 ↦ 0`, `t⊗β_k ↦ -coef · sc_(n-k+1)`.
pub fn orbit_borel_lift(n: u32, d: i64) -> Result<Morphism> {
    let w = bu_model(n + 1);
    let mut gens = orbit_target(n).generators().to_vec();
    gens.extend(w.generators().iter().cloned());
    let diff = (1..=n + 1).map(|q| (format!("sc_{q}"), -&c(q as i64)));
    let universal = Cdga::new(gens, diff)?;
    let mut images: Vec<(String, Polynomial)> =
        w.generators().iter().map(|g| (g.name().to_string(), Polynomial::gen(g))).collect();
    for k in 0..=n {
        let g = universal.g(&format!("sc_{}", n - k + 1));
        images.push((t_name(k), g.scale(&-int(&orbit_coefficient(n, d, k)))));
    }
    Morphism::new(sections_borel(n, d)?, universal, images)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecision {
    /// the induced map is bijective in the window
    pub iso: bool,
    /// degrees where the induced map fails to be injective
    pub kernel_degrees: Vec<i64>,
    /// every coefficient `(1-d)^(n+1) - (1-d)^k`, `k < n`, is nonzero
    pub coefficients_nonzero: bool,
}

/// `Ψ` followed by the projection killing `sc_1`, tested with `is_quasi_iso`
/// on `[0, 2n+2]`.
pub fn orbit_iso_decision(n: u32, d: i64) -> Result<OrbitDecision> {
    let psi = orbit_map(n, d)?;
    let pu = orbit_target(n).without(&["sc_1"])?;
    let proj_images: Vec<(String, Polynomial)> = pu
        .generators()
        .iter()
        .map(|g| (g.name().to_string(), Polynomial::gen(g)))
        .collect();
    let proj = Morphism::new(orbit_target(n), pu, proj_images)?;
    let phi = psi.then(&proj)?;
    let rep = is_quasi_iso(&phi, DegreeWindow::new(0, 2 * n as i64 + 2)?)?;
    let kernel_degrees = rep
        .degrees
        .iter()
        .filter(|g| g.induced_rank < g.source_rank)
        .map(|g| g.degree)
        .collect();
    Ok(OrbitDecision {
        iso: rep.is_quasi_iso(),
        kernel_degrees,
        coefficients_nonzero: (0..n).all(|k| !orbit_coefficient(n, d, k).is_zero()),
    })
}

/// Order of `H_1`, `(n+1)(d-1)^n`, with `0` standing for `Z`; needs `d >= 1`.
pub fn h1_torsion_order(n: u32, d: i64) -> Result<BigInt> {
    if d < 1 {
        return Err(Error::Parameter(format!("torsion order needs d >= 1, got {d}")));
    }
    Ok((BigInt::from(n + 1) * ipow(d - 1, n)).abs())
}

/// `(-1)^(n-1) Σ_(k=2)^(n+1) C(n+1,k) d^(k-1)`.
pub fn characteristic_of_degree(n: u32, d: i64) -> BigInt {
    let ni = n as i64;
    let s: BigInt = (2..=ni + 1).map(|k| binom(ni + 1, k) * ipow(d, (k - 1) as u32)).sum();
    s * sign(ni - 1)
}

/// Model-level characteristic cochains on the degree-`d` component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaClasses {
    pub eta_u: Polynomial,
    /// `η_(t,j)`, `j = 0..n`
    pub eta_t: Vec<Polynomial>,
    /// `η_(2n+1-2j)`, `j = 0..n-1`
    pub eta: Vec<Polynomial>,
}

/// Pushes the evaluation-map images of `u` and `t` forward along `β_j`,
/// with the evaluation map `v ↦ Σ_i (-1)^(i+1) (v⊗β_i) b^i`.
pub fn eta_classes(n: u32, d: i64) -> Result<EtaClasses> {
    let b = Generator::new("b", 2);
    let base = Cdga::new(vec![b.clone(), Generator::new("y", 2 * n as i32 + 1)], [])?;
    let bpow = |i: u32| Polynomial::from(Monomial::power(&b, i).expect("even power"));
    let beta = |i: u32| Monomial::power(&b, i).expect("even power");
    // u⊗β_1 has degree 0 and takes the value d; u⊗β_i vanishes for i >= 2
    let ev_u = &(&uu() * &bpow(0)).scale(&rat(-1)) + &bpow(1).scale(&rat(d));
    let mut ev_t = Polynomial::zero();
    for i in 0..=n {
        ev_t.add_scaled(&(&tt(n, i) * &bpow(i)), &rat(sign(i as i64 + 1)));
    }
    let eta_u = -&pushforward_p_beta(&ev_u, &beta(0), &base);
    let eta_t: Vec<Polynomial> = (0..=n)
        .map(|j| pushforward_p_beta(&ev_t, &beta(j), &base).scale(&rat(sign(j as i64 + 1))))
        .collect();
    let ni = n as i64;
    let eta = (0..n)
        .map(|j| {
            let corr = &eta_u.pow(n - j) * &eta_t[n as usize];
            &eta_t[j as usize].scale(&rat(ni + 1)) - &corr.scale(&binom_q(ni + 1, ni - j as i64))
        })
        .collect();
    Ok(EtaClasses { eta_u, eta_t, eta })
}
