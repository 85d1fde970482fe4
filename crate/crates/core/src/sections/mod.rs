//! Models of section spaces: the Brown–Szczarba construction, augmentations
//! and component models, the conjugation Borel model, and the evaluation map.

mod augment;
mod borel;
mod eval;

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

pub use augment::{component_model, Augmentation};
pub use borel::conjugation_borel;
pub use eval::{evaluation_map_model, pushforward_p_beta};

use crate::algebra::json::cdga_to_json;
use crate::algebra::{Cdga, Generator, Monomial, Polynomial};
use crate::coalgebra::{alpha_sign_with, dual_name, quotient, Coalgebra, SignConvention};
use crate::error::{Error, Result};
use crate::homology::DegreeWindow;
use crate::rational::{rat, sign};

/// `(ΛV ⊗ B, d)` over a base `B`; `fiber` lists the generators of `V`.
#[derive(Clone, Debug)]
pub struct RelativeModel {
    base: Cdga,
    fiber: Vec<Generator>,
    total: Cdga,
}

impl RelativeModel {
    /// The base must be a sub-CDGA of the total model; the remaining
    /// generators form the fiber, whose model (base set to zero) must square
    /// to zero.
    pub fn new(base: Cdga, total: Cdga) -> Result<Self> {
        for (g, d) in base.differentials() {
            let t = total.generator(g.name())?;
            if t.degree() != g.degree() || total.d_gen(g.name())? != d {
                return Err(Error::Parameter(format!(
                    "base generator `{}` differs in the total model",
                    g.name()
                )));
            }
        }
        let fiber: Vec<Generator> = total
            .generators()
            .iter()
            .filter(|g| !base.has_generator(g.name()))
            .cloned()
            .collect();
        let rm = RelativeModel { base, fiber, total };
        let f = rm.fiber_model()?;
        let rep = f.check_d_squared();
        if !rep.is_ok() {
            return Err(Error::Parameter(format!("fiber model fails d^2 = 0: {rep}")));
        }
        Ok(rm)
    }

    pub fn base(&self) -> &Cdga {
        &self.base
    }

    pub fn fiber(&self) -> &[Generator] {
        &self.fiber
    }

    pub fn total(&self) -> &Cdga {
        &self.total
    }

    pub fn is_fiber(&self, g: &Generator) -> bool {
        !self.base.has_generator(g.name())
    }

    /// The model of the fiber: base generators set to zero.
    pub fn fiber_model(&self) -> Result<Cdga> {
        let names: Vec<&str> = self.base.generators().iter().map(|g| g.name()).collect();
        self.total.without(&names)
    }
}

/// Which generators `v⊗β` are materialized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Materialize {
    /// Degrees ≥ 0; degree −1 generators only contribute relations.
    KQuotient,
    /// Every `v⊗β` with `β` in the coalgebra window, any degree.
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub base: String,
    pub fiber: String,
    pub window: DegreeWindow,
    pub convention: SignConvention,
}

#[derive(Clone, Debug)]
pub struct SectionModel {
    pub algebra: Cdga,
    /// Differentials of the degree −1 generators: degree-0 polynomials that
    /// vanish in the quotient.
    pub relations: Vec<(String, Polynomial)>,
    pub provenance: Provenance,
}

impl SectionModel {
    pub fn degree_zero_generators(&self) -> Vec<&Generator> {
        self.algebra
            .generators()
            .iter()
            .filter(|g| g.degree() == 0)
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let mut v = cdga_to_json(&self.algebra);
        let rel: serde_json::Map<String, Value> = self
            .relations
            .iter()
            .map(|(k, p)| (k.clone(), crate::algebra::json::polynomial_to_json(p)))
            .collect();
        let obj = v.as_object_mut().expect("object");
        if !rel.is_empty() {
            obj.insert("relations".into(), Value::Object(rel));
        }
        obj.insert(
            "provenance".into(),
            json!({
                "base": self.provenance.base,
                "fiber": self.provenance.fiber,
                "window": [self.provenance.window.lo, self.provenance.window.hi],
                "signConvention": self.provenance.convention.as_str(),
            }),
        );
        v
    }
}

pub fn section_name(v: &Generator, beta: &Monomial) -> String {
    format!("{}(x){}", v.name(), dual_name(beta))
}

pub fn section_generator(v: &Generator, beta: &Monomial) -> Generator {
    Generator::new(section_name(v, beta), v.degree() - beta.degree() as i32)
}

/// Rewrites `p ⊗ β` (with `p` in the relative model) into `Λ(V ⊗ B_*)`
/// using the ideals `I` and `J`.
pub(crate) struct NormalForm<'a> {
    pub coalg: &'a Coalgebra,
    pub convention: SignConvention,
    pub fiber: BTreeSet<String>,
    pub keep: &'a dyn Fn(&Generator) -> bool,
}

impl NormalForm<'_> {
    pub(crate) fn gen(&self, v: &Generator, beta: &Monomial) -> Result<Option<Polynomial>> {
        if !self.coalg.contains(beta) {
            return Err(Error::Truncation(format!(
                "{} needs a dual element outside the coalgebra window",
                section_name(v, beta)
            )));
        }
        let g = section_generator(v, beta);
        Ok((self.keep)(&g).then(|| Polynomial::gen(&g)))
    }

    /// `F ⊗ β` for a word of fiber generators, split along iterated `Δ`.
    fn fiber_word(&self, word: &[Generator], beta: &Monomial) -> Result<Polynomial> {
        let Some((first, rest)) = word.split_first() else {
            return Ok(if beta.is_one() {
                Polynomial::one()
            } else {
                Polynomial::zero()
            });
        };
        if rest.is_empty() {
            return Ok(self.gen(first, beta)?.unwrap_or_default());
        }
        let rest_deg: i64 = rest.iter().map(|g| g.degree() as i64).sum();
        let mut out = Polynomial::zero();
        for (s, left, right) in self.coalg.comultiply(beta) {
            let Some(g) = self.gen(first, &left)? else {
                continue;
            };
            let tail = self.fiber_word(rest, &right)?;
            if tail.is_zero() {
                continue;
            }
            let sg = s * sign(rest_deg * left.degree());
            let term = &g * &tail;
            out.add_scaled(&term, &rat(sg));
        }
        Ok(out)
    }

    /// `(F·b) ⊗ β` for a total-model monomial.
    fn monomial(&self, m: &Monomial, beta: &Monomial) -> Result<Polynomial> {
        let (s, fib, base) = m.partition(|g| self.fiber.contains(g.name()));
        // Δβ = Σ β'⊗β'', and b⊗β'' = (-1)^α(b) <β'', b>
        let Some(q) = quotient(beta, &base) else {
            return Ok(Polynomial::zero());
        };
        let (s2, prod) = q.mul(&base).expect("divisor multiplies back");
        debug_assert_eq!(&prod, beta);
        let sg = s * s2 * sign(base.degree() * q.degree()) * alpha_sign_with(base.degree(), self.convention);
        let word: Vec<Generator> = fib
            .factors()
            .iter()
            .flat_map(|(g, e)| std::iter::repeat_n(g.clone(), *e as usize))
            .collect();
        Ok(self.fiber_word(&word, &q)?.scale(&rat(sg)))
    }

    pub fn apply(&self, p: &Polynomial, beta: &Monomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            out.add_scaled(&self.monomial(m, beta)?, c);
        }
        Ok(out)
    }
}

/// Which `(v, β)` pairs to materialize and whether a pair is kept.
pub(crate) fn keep_predicate(mode: Materialize) -> impl Fn(&Generator) -> bool {
    move |g: &Generator| match mode {
        Materialize::Full => true,
        Materialize::KQuotient => g.degree() >= 0,
    }
}

/// Section-model generators, differentials and degree-0 relations.
/// `d_of(v, β)` computes `d(v⊗β)`; `carried` contributes extra generators
/// (with their differentials) to the result.
pub(crate) fn assemble(
    rm: &RelativeModel,
    coalg: &Coalgebra,
    mode: Materialize,
    d_of: impl Fn(&Generator, &Monomial) -> Result<Polynomial>,
    carried: &Cdga,
) -> Result<(Cdga, Vec<(String, Polynomial)>)> {
    let keep = keep_predicate(mode);
    let mut gens: Vec<Generator> = carried.generators().to_vec();
    let mut diff: Vec<(String, Polynomial)> = carried
        .differentials()
        .map(|(g, d)| (g.name().to_string(), d.clone()))
        .collect();
    let mut relations = Vec::new();
    for v in rm.fiber() {
        for beta in coalg.all_basis() {
            let g = section_generator(v, beta);
            let is_relation = mode == Materialize::KQuotient && g.degree() == -1;
            if !keep(&g) && !is_relation {
                continue;
            }
            let d = d_of(v, beta)?;
            if is_relation {
                if !d.is_zero() {
                    relations.push((g.name().to_string(), d));
                }
            } else {
                diff.push((g.name().to_string(), d));
                gens.push(g);
            }
        }
    }
    Ok((Cdga::new(gens, diff)?, relations))
}

/// Linear part `(-1)^|v| (-1)^α(1) v ⊗ ∂^∨β`: the `a = 1` term of the
/// conjugation formula, so both constructions agree when `W = 0`.
pub(crate) fn linear_term(nf: &NormalForm<'_>, v: &Generator, beta: &Monomial) -> Result<Polynomial> {
    let s = sign(v.degree() as i64) * alpha_sign_with(0, nf.convention);
    let mut out = Polynomial::zero();
    for (b2, c) in nf.coalg.dual_differential(beta) {
        if let Some(g) = nf.gen(v, &b2)? {
            out.add_scaled(&g, &(c * rat(s)));
        }
    }
    Ok(out)
}

/// The Brown–Szczarba model `Λ(V ⊗ B_*)` with the differential induced by
/// the relative model, truncated to the coalgebra window.
pub fn brown_szczarba(
    rm: &RelativeModel,
    coalg: &Coalgebra,
    convention: SignConvention,
    mode: Materialize,
) -> Result<SectionModel> {
    if coalg.base().generators() != rm.base().generators() {
        return Err(Error::Parameter("coalgebra is not the dual of the base".into()));
    }
    let keep = keep_predicate(mode);
    let nf = NormalForm {
        coalg,
        convention,
        fiber: rm.fiber().iter().map(|g| g.name().to_string()).collect(),
        keep: &keep,
    };
    let (algebra, relations) = assemble(
        rm,
        coalg,
        mode,
        |v, beta| {
            let dv = rm.total().d_gen(v.name())?;
            Ok(&nf.apply(dv, beta)? + &linear_term(&nf, v, beta)?)
        },
        &Cdga::empty(),
    )?;
    if mode == Materialize::Full {
        let rep = algebra.check_d_squared();
        if !rep.is_ok() {
            return Err(Error::SignConventionFault {
                convention: convention.to_string(),
                detail: rep.to_string(),
            });
        }
    }
    Ok(SectionModel {
        algebra,
        relations,
        provenance: provenance(rm, coalg, convention),
    })
}

pub(crate) fn provenance(rm: &RelativeModel, coalg: &Coalgebra, convention: SignConvention) -> Provenance {
    let names = |gs: &[Generator]| gs.iter().map(|g| g.name().to_string()).collect::<Vec<_>>().join(",");
    Provenance {
        base: names(rm.base().generators()),
        fiber: names(rm.fiber()),
        window: coalg.window(),
        convention,
    }
}

/// Coalgebra window wide enough for every generator of degree ≥ −1.
pub fn k_window(rm: &RelativeModel) -> Result<DegreeWindow> {
    let top = rm.fiber().iter().map(|g| g.degree() as i64).max().unwrap_or(0);
    DegreeWindow::new(0, top + 1)
}

/// `ε_f(v⊗β) = <β, f(v)>` for an algebra map `f` from the relative model
/// to the base, given on fiber generators.
pub fn augmentation_from_section(
    rm: &RelativeModel,
    coalg: &Coalgebra,
    f: &BTreeMap<String, Polynomial>,
) -> Augmentation {
    let mut values = BTreeMap::new();
    for v in rm.fiber() {
        let img = f.get(v.name()).cloned().unwrap_or_default();
        for beta in coalg.basis(v.degree() as i64) {
            values.insert(section_name(v, beta), img.coefficient(beta));
        }
    }
    Augmentation { values }
}

#[cfg(test)]
mod tests;
