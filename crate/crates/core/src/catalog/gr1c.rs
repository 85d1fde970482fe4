use num_bigint::BigInt;
use num_traits::Zero;

use super::chern::{bu_model, h_map_any};
use crate::algebra::{eliminate_pairs, Cdga, Generator, Morphism, Polynomial};
use crate::error::{Error, Result};
use crate::rational::{binom, binom_q, rat, sign};
use crate::sections::RelativeModel;

fn check_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::Parameter(format!("n must be at least 2, got {n}")));
    }
    Ok(())
}

fn chat() -> Polynomial {
    Polynomial::gen(&Generator::new("chat", 2))
}

fn ccheck() -> Polynomial {
    Polynomial::gen(&Generator::new("ccheck", 2))
}

/// `c_q` of `BU(n+1)`, with `c_0 = 1`.
pub(crate) fn c(q: i64) -> Polynomial {
    if q == 0 {
        Polynomial::one()
    } else {
        Polynomial::gen(&Generator::new(format!("c_{q}"), 2 * q as i32))
    }
}

fn looping(p: u32) -> Generator {
    Generator::new(format!("sc_{p}"), 2 * p as i32 - 1)
}

/// The homogeneous-space model before simplification: `Λ(sc_1..sc_(n+1))`
/// over the target of `h`, with `d(sc_p) = h(c_p)`, minus `c_p` when
/// `relative`, in which case `Λ(c_1..c_(n+1))` is adjoined.
pub fn gr1c_raw(n: u32, relative: bool) -> Result<Cdga> {
    let h = h_map_any(n)?;
    let mut gens: Vec<Generator> = h.target().generators().to_vec();
    if relative {
        gens.extend(bu_model(n + 1).generators().iter().cloned());
    }
    let mut diff = Vec::new();
    for p in 1..=n + 1 {
        gens.push(looping(p));
        let mut dp = h.image(&format!("c_{p}"))?.clone();
        if relative {
            dp = &dp - &c(p as i64);
        }
        diff.push((format!("sc_{p}"), dp));
    }
    Cdga::new(gens, diff)
}

/// Removes the pairs `(sc_p, cbar_p)`, `p < n`, from the raw model.
pub fn gr1c_eliminated(n: u32, relative: bool) -> Result<(Cdga, Morphism)> {
    let raw = gr1c_raw(n, relative)?;
    let names: Vec<(String, String)> = (1..n).map(|p| (format!("sc_{p}"), format!("cbar_{p}"))).collect();
    let pairs: Vec<(&str, &str)> = names.iter().map(|(x, y)| (x.as_str(), y.as_str())).collect();
    eliminate_pairs(&raw, &pairs)
}

fn minimal_gens(n: u32) -> Vec<Generator> {
    vec![
        Generator::new("chat", 2),
        Generator::new("ccheck", 2),
        looping(n),
        looping(n + 1),
    ]
}

/// Minimal model of the fibrewise Grassmannian with the closed-form
/// differentials of the absolute case.
pub fn gr1c_absolute(n: u32) -> Result<Cdga> {
    check_n(n)?;
    let (h, k, ni) = (chat(), ccheck(), n as i64);
    let mut dn = Polynomial::zero();
    for j in 0..=ni {
        dn.add_scaled(&(&h.pow(j as u32) * &k.pow((ni - j) as u32)), &binom_q(ni + 1, j));
    }
    dn = dn.scale(&rat(sign(ni)));
    let mut dn1 = h.pow(n + 1).scale(&rat(ni));
    for j in 0..ni {
        dn1.add_scaled(&(&h.pow(j as u32 + 1) * &k.pow((ni - j) as u32)), &binom_q(ni + 1, j));
    }
    dn1 = dn1.scale(&rat(sign(ni + 1)));
    Cdga::new(minimal_gens(n), [(format!("sc_{n}"), dn), (format!("sc_{}", n + 1), dn1)])
}

/// `d(sc_n)` of the relative closed form.
fn relative_dn(n: i64) -> Polynomial {
    let (h, k) = (chat(), ccheck());
    let mut out = Polynomial::zero();
    for q in 0..=n {
        let mut inner = Polynomial::zero();
        for j in 0..=n - q {
            inner.add_scaled(&(&h.pow(j as u32) * &k.pow((n - q - j) as u32)), &binom_q(n - q + 1, j));
        }
        out.add_scaled(&(&c(q) * &inner), &rat(sign(n + q - 1)));
    }
    out
}

/// `d(sc_(n+1))` of the relative closed form, first expression.
fn relative_dn1(n: i64) -> Polynomial {
    let (h, k) = (chat(), ccheck());
    let mut out = Polynomial::zero();
    for q in 0..=n + 1 {
        let mut inner = h.pow((n - q + 1) as u32).scale(&rat(n - q));
        for j in 0..n - q {
            inner.add_scaled(&(&h.pow(j as u32 + 1) * &k.pow((n - q - j) as u32)), &binom_q(n - q + 1, j));
        }
        out.add_scaled(&(&c(q) * &inner), &rat(sign(n + q + 1)));
    }
    out
}

/// The second expression for `d(sc_(n+1))`: `chat d(sc_n) - Σ ± c_q chat^(n-q+1)`.
pub fn relative_dn1_alternative(n: u32) -> Polynomial {
    let n = n as i64;
    let mut out = &chat() * &relative_dn(n);
    for q in 0..=n + 1 {
        out.add_scaled(&(&c(q) * &chat().pow((n - q + 1) as u32)), &rat(-sign(n + q + 1)));
    }
    out
}

/// The relative minimal model over `Λ(c_1..c_(n+1))`.
pub fn gr1c_borel(n: u32) -> Result<RelativeModel> {
    check_n(n)?;
    let base = bu_model(n + 1);
    let mut gens = minimal_gens(n);
    gens.extend(base.generators().iter().cloned());
    let ni = n as i64;
    let total = Cdga::new(
        gens,
        [(format!("sc_{n}"), relative_dn(ni)), (format!("sc_{}", n + 1), relative_dn1(ni))],
    )?;
    RelativeModel::new(base, total)
}

/// Closed form of `cbar_p` after elimination, `1 <= p < n`.
pub fn barc_closed_form(n: u32, p: u32, relative: bool) -> Result<Polynomial> {
    if p == 0 || p >= n {
        return Err(Error::Parameter(format!("need 1 <= p < n, got p = {p}, n = {n}")));
    }
    let (h, k, n, p) = (chat(), ccheck(), n as i64, p as i64);
    let mut out = Polynomial::zero();
    let qmax = if relative { p } else { 0 };
    for q in 0..=qmax {
        let mut inner = Polynomial::zero();
        for i in 0..=p - q {
            inner.add_scaled(&(&h.pow(i as u32) * &k.pow((p - q - i) as u32)), &binom_q(n - q + 1, i));
        }
        out.add_scaled(&(&c(q) * &inner), &rat(sign(p + q)));
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exhaustively checks `C(n,k) C(n-k,j) = C(n,k+j) C(k+j,j)` and
/// `Σ_i (-1)^i C(p,i) = 0` for `p >= 1`, up to `n_max`.
pub fn combinatorial_identities_check(n_max: u32) -> Result<IdentityReport> {
    if n_max > 64 {
        return Err(Error::Parameter(format!("n_max must be at most 64, got {n_max}")));
    }
    let n_max = n_max as i64;
    let mut rep = IdentityReport::default();
    for n in 0..=n_max {
        for k in 0..=n {
            for j in 0..=n - k {
                rep.checked += 1;
                if binom(n, k) * binom(n - k, j) != binom(n, k + j) * binom(k + j, j) {
                    rep.failures.push(format!("product identity at n={n} k={k} j={j}"));
                }
            }
        }
    }
    for p in 1..=n_max {
        rep.checked += 1;
        let s: BigInt = (0..=p).map(|i| binom(p, i) * sign(i)).sum();
        if !s.is_zero() {
            rep.failures.push(format!("alternating sum at p={p}"));
        }
    }
    Ok(rep)
}
