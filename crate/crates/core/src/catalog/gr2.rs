use std::fmt;
use std::str::FromStr;

use crate::algebra::{eliminate_pairs, Cdga, Generator, Morphism, Polynomial};
use crate::error::{Error, Result};
use crate::homology::{is_quasi_iso_into, DegreeWindow, IdealPlusUnit, Options, QuasiIsoReport};
use crate::rational::{binom_q, rat, sign};
use crate::sections::RelativeModel;

/// Sign in front of the Pontryagin sum in `d(z)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum DzSign {
    #[default]
    Minus,
    Plus,
}

impl DzSign {
    pub fn as_str(&self) -> &'static str {
        match self {
            DzSign::Minus => "minus",
            DzSign::Plus => "plus",
        }
    }

    fn value(&self) -> i64 {
        match self {
            DzSign::Minus => -1,
            DzSign::Plus => 1,
        }
    }
}

impl fmt::Display for DzSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DzSign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minus" => Ok(DzSign::Minus),
            "plus" => Ok(DzSign::Plus),
            _ => Err(Error::Parameter(format!("unknown d(z) sign `{s}`"))),
        }
    }
}

fn check_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::Parameter(format!("n must be at least 2, got {n}")));
    }
    Ok(())
}

fn gen(name: &str, degree: u32) -> Generator {
    Generator::new(name, degree as i32)
}

fn p(i: u32) -> Generator {
    gen(&format!("p_{}", 4 * i), 4 * i)
}

/// `p_(4i)` as a polynomial, `p_0 = 1`.
fn pp(i: u32) -> Polynomial {
    if i == 0 {
        Polynomial::one()
    } else {
        Polynomial::gen(&p(i))
    }
}

fn euler(n: u32) -> Generator {
    gen(&format!("e_{}", 2 * n), 2 * n)
}

/// `Λ(p_4..p_(4(n-1)), e_(2n))`.
pub fn bso_model(n: u32) -> Result<Cdga> {
    check_n(n)?;
    let mut gens: Vec<Generator> = (1..n).map(p).collect();
    gens.push(euler(n));
    Cdga::new(gens, [])
}

fn pbar(i: u32) -> Generator {
    gen(&format!("pbar_{}", 4 * i), 4 * i)
}

fn ppbar(i: u32) -> Polynomial {
    if i == 0 {
        Polynomial::one()
    } else {
        Polynomial::gen(&pbar(i))
    }
}

fn ehat() -> Generator {
    gen("ehat", 2)
}

fn ebar(n: u32) -> Generator {
    gen("ebar", 2 * n - 2)
}

/// `ι: Λ(p, e) → Λ(ehat) ⊗ Λ(pbar_4..pbar_(4(n-2)), ebar)`.
pub fn iota(n: u32) -> Result<Morphism> {
    let source = bso_model(n)?;
    let mut tg = vec![ehat(), ebar(n)];
    tg.extend((1..n - 1).map(pbar));
    let target = Cdga::new(tg, [])?;
    let (eh, eb) = (Polynomial::gen(&ehat()), Polynomial::gen(&ebar(n)));
    let mut images = Vec::new();
    for i in 1..n {
        let img = if i == n - 1 {
            &eb.pow(2) + &(&ppbar(n - 2) * &eh.pow(2))
        } else {
            &ppbar(i) + &(&ppbar(i - 1) * &eh.pow(2))
        };
        images.push((p(i).name().to_string(), img));
    }
    images.push((euler(n).name().to_string(), &eb * &eh));
    Morphism::new(source, target, images)
}

/// Borel model of the homogeneous space before simplification:
/// loops `sp_(4i)`, `se` with `d(s w) = ι(w) - w`.
pub fn gr2_raw(n: u32) -> Result<Cdga> {
    let io = iota(n)?;
    let mut gens = io.target().generators().to_vec();
    gens.extend(io.source().generators().iter().cloned());
    let mut diff = Vec::new();
    for g in io.source().generators() {
        let name = format!("s{}", g.name());
        gens.push(Generator::new(&name, g.degree() - 1));
        diff.push((name, io.image(g.name())? - &Polynomial::gen(g)));
    }
    Cdga::new(gens, diff)
}

fn sp_name(n: u32) -> String {
    format!("sp_{}", 4 * (n - 1))
}

fn se_name(n: u32) -> String {
    format!("se_{}", 2 * n)
}

/// The simplified Borel model over `Λ(p, e)`:
/// `d(sp) = ebar^2 - Σ_j (-1)^j ehat^(2j) p_(4(n-1-j))`, `d(se) = ehat ebar - e`.
pub fn gr2_borel(n: u32) -> Result<RelativeModel> {
    let base = bso_model(n)?;
    let (eh, eb) = (Polynomial::gen(&ehat()), Polynomial::gen(&ebar(n)));
    let mut dsp = eb.pow(2);
    for j in 0..n {
        dsp.add_scaled(&(&eh.pow(2 * j) * &pp(n - 1 - j)), &rat(-sign(j as i64)));
    }
    let dse = &(&eh * &eb) - &Polynomial::gen(&euler(n));
    let mut gens = base.generators().to_vec();
    gens.extend([ehat(), ebar(n), gen(&sp_name(n), 4 * n - 5), gen(&se_name(n), 2 * n - 1)]);
    let total = Cdga::new(gens, [(sp_name(n), dsp), (se_name(n), dse)])?;
    RelativeModel::new(base, total)
}

/// The raw model with the pairs `(sp_(4i), pbar_(4i))`, `i < n-1`, removed.
pub fn gr2_eliminated(n: u32) -> Result<Cdga> {
    let raw = gr2_raw(n)?;
    let names: Vec<(String, String)> = (1..n - 1)
        .map(|i| (format!("sp_{}", 4 * i), pbar(i).name().to_string()))
        .collect();
    let pairs: Vec<(&str, &str)> = names.iter().map(|(x, y)| (x.as_str(), y.as_str())).collect();
    Ok(eliminate_pairs(&raw, &pairs)?.0)
}

/// Fibre generators of the minimal Thom model, by degree.
fn thom_gens(n: u32) -> Vec<Generator> {
    vec![
        gen("u", 2),
        gen("w_f", 2 * n),
        gen("w_x", 2 * n + 1),
        gen("w_fx", 4 * n - 1),
        gen("z", 4 * n - 1),
        gen("v", 4 * n),
        gen("t", 4 * n + 1),
    ]
}

/// Differentials of the minimal Thom model over a base where the Euler
/// class is `e` and the Pontryagin classes are `pont(i)`.
fn thom_differentials(n: u32, e: &Polynomial, pont: &dyn Fn(u32) -> Polynomial, dz: DzSign) -> Vec<(String, Polynomial)> {
    let g = |s: &str| Polynomial::gen(&thom_gens(n).into_iter().find(|x| x.name() == s).expect("thom generator"));
    let (u, wf, wx, wfx) = (g("u"), g("w_f"), g("w_x"), g("w_fx"));
    let mut sum = Polynomial::zero();
    for j in 0..n {
        sum.add_scaled(&(&pont(n - 1 - j) * &u.pow(2 * j + 2)), &rat(sign(j as i64)));
    }
    let dz_p = &wf.pow(2) + &sum.scale(&rat(dz.value()));
    vec![
        ("w_x".into(), &(&u * &wf) - &(&u * e)),
        ("w_fx".into(), &wf.pow(2) - &(&wf * e)),
        ("v".into(), &(&wf * &wx) - &(&u * &wfx)),
        ("t".into(), &u * &dz_p),
        ("z".into(), dz_p),
    ]
}

/// Minimal model of the Thom space of the oriented tautological plane
/// bundle, relative to `Λ(p, e)`.
pub fn gr2_thom_minimal(n: u32, dz: DzSign) -> Result<RelativeModel> {
    let base = bso_model(n)?;
    let mut gens = base.generators().to_vec();
    gens.extend(thom_gens(n));
    let e = Polynomial::gen(&euler(n));
    let total = Cdga::new(gens, thom_differentials(n, &e, &pp, dz))?;
    RelativeModel::new(base, total)
}

/// `φ: ΛV → A`, landing in the ideal of `A` generated by `ehat`.
pub fn gr2_phi(n: u32, dz: DzSign) -> Result<Morphism> {
    let source = gr2_thom_minimal(n, dz)?.total().clone();
    let target = gr2_borel(n)?.total().clone();
    let (e, f) = (target.g("ehat"), target.g("ebar"));
    let (x, y) = (target.g(&se_name(n)), target.g(&sp_name(n)));
    let mut images: Vec<(String, Polynomial)> = source
        .generators()
        .iter()
        .filter(|g| target.has_generator(g.name()))
        .map(|g| (g.name().to_string(), Polynomial::gen(g)))
        .collect();
    images.extend([
        ("u".to_string(), e.clone()),
        ("w_f".to_string(), &e * &f),
        ("w_x".to_string(), &e * &x),
        ("w_fx".to_string(), &(&e * &f) * &x),
        ("z".to_string(), &e.pow(2) * &y),
        ("v".to_string(), Polynomial::zero()),
        ("t".to_string(), &e.pow(3) * &y),
    ]);
    Morphism::new(source, target, images)
}

/// `φ` with the base classes set to zero.
pub fn gr2_phi_absolute(n: u32, dz: DzSign) -> Result<Morphism> {
    let phi = gr2_phi(n, dz)?;
    let base = bso_model(n)?;
    let names: Vec<&str> = base.generators().iter().map(|g| g.name()).collect();
    let source = phi.source().without(&names)?;
    let target = phi.target().without(&names)?;
    let kill = |g: &Generator| base.has_generator(g.name()).then(Polynomial::zero);
    let images: Vec<(String, Polynomial)> = source
        .generators()
        .iter()
        .map(|g| Ok((g.name().to_string(), phi.image(g.name())?.substitute(&kill))))
        .collect::<Result<_>>()?;
    Morphism::new(source, target, images)
}

/// Compares `H(ΛV)` with `H(A[ehat] ⊕ Q)` through `φ`, base classes set to zero.
pub fn gr2_phi_quasi_iso(n: u32, dz: DzSign, w: DegreeWindow, opts: Options) -> Result<QuasiIsoReport> {
    let phi = gr2_phi_absolute(n, dz)?;
    let ideal = IdealPlusUnit::new(phi.target(), "ehat")?;
    is_quasi_iso_into(&phi, &ideal, w, opts)
}

/// Pullback of the Thom model to `CP^n` along the tangent bundle: `e ↦ (n+1) b^n`
/// and `p_(4k) ↦ pont[k-1]`, by default `C(n+1,k) b^(2k)`.
pub fn gr2_thom_over_cpn(n: u32, dz: DzSign, pontryagin: Option<&[Polynomial]>) -> Result<RelativeModel> {
    check_n(n)?;
    let b = gen("b", 2);
    let pb = Polynomial::gen(&b);
    let default: Vec<Polynomial> = (1..n).map(|k| pb.pow(2 * k).scale(&binom_q(n as i64 + 1, k as i64))).collect();
    let pont = pontryagin.unwrap_or(&default);
    if pont.len() != (n - 1) as usize {
        return Err(Error::Parameter(format!("expected {} Pontryagin classes", n - 1)));
    }
    for (k, q) in pont.iter().enumerate() {
        let deg = 4 * (k as i64 + 1);
        if !q.is_zero() && !q.is_homogeneous_of(deg) {
            return Err(Error::Parameter(format!("Pontryagin class {k} must have degree {deg}")));
        }
        if q.generators().iter().any(|g| g.name() != "b") {
            return Err(Error::Parameter("Pontryagin classes must be polynomials in b".into()));
        }
    }
    let pf = |i: u32| if i == 0 { Polynomial::one() } else { pont[i as usize - 1].clone() };
    let base_gens = vec![b.clone(), gen("y", 2 * n + 1)];
    let dy = ("y".to_string(), pb.pow(n + 1));
    let base = Cdga::new(base_gens.clone(), [dy.clone()])?;
    let e = pb.pow(n).scale(&rat(n as i64 + 1));
    let mut diff = thom_differentials(n, &e, &pf, dz);
    diff.push(dy);
    let mut gens = base_gens;
    gens.extend(thom_gens(n));
    RelativeModel::new(base, Cdga::new(gens, diff)?)
}
