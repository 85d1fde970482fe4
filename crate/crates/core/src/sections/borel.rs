use std::collections::BTreeSet;

use super::{assemble, keep_predicate, provenance, Materialize, NormalForm, RelativeModel, SectionModel};
use crate::algebra::{Cdga, Generator, Monomial, Polynomial};
use crate::coalgebra::{alpha_sign_with, dualize, Coalgebra, SignConvention};
use crate::error::{Error, Result};
use crate::homology::basis_in_degree;
use crate::rational::{rat, sign};

/// Relative model over `ΛW` of the Borel construction of the conjugation
/// action on the section space. `rm` is the twice relative model over
/// `B ⊗ ΛW`, `w` the model of `BG`, and `coalg_bw` the dual of `B ⊗ ΛW`.
pub fn conjugation_borel(
    rm: &RelativeModel,
    w: &Cdga,
    coalg_bw: &Coalgebra,
    convention: SignConvention,
    mode: Materialize,
) -> Result<SectionModel> {
    if coalg_bw.base().generators() != rm.base().generators() {
        return Err(Error::Parameter("coalgebra is not the dual of the base".into()));
    }
    let w_names: BTreeSet<String> = w.generators().iter().map(|g| g.name().to_string()).collect();
    for g in w.generators() {
        rm.base().generator(g.name())?;
    }
    let w_list: Vec<&str> = w_names.iter().map(String::as_str).collect();
    let b = rm.base().without(&w_list)?;
    let window = coalg_bw.window();
    let coalg_b = dualize(&b, window)?;
    let keep = keep_predicate(mode);
    let nf = NormalForm {
        coalg: &coalg_b,
        convention,
        fiber: rm.fiber().iter().map(|g| g.name().to_string()).collect(),
        keep: &keep,
    };
    let is_w = |g: &Generator| w_names.contains(g.name());

    // ΛW basis by degree, enough for every correction term
    let mut w_basis: Vec<Monomial> = Vec::new();
    for k in 0..=window.hi {
        w_basis.extend(basis_in_degree(w, k)?);
    }

    // (F·b·w) ⊗ β = (-1)^{|w||β|} ((F·b) ⊗ β) · w
    let apply_split = |p: &Polynomial, beta: &Monomial| -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            let (s, wpart, rest) = m.partition(is_w);
            // m = s · wpart · rest = s (-1)^{|w||rest|} rest · wpart
            let s = s * sign(wpart.degree() * rest.degree()) * sign(wpart.degree() * beta.degree());
            let inner = nf.apply(&Polynomial::from(rest), beta)?;
            if inner.is_zero() {
                continue;
            }
            let term = &inner * &Polynomial::from(wpart);
            out.add_scaled(&term, &(c * rat(s)));
        }
        Ok(out)
    };

    // (-1)^{|v|} Σ_a (-1)^{α(a)} v ⊗ ∂^∨(β ⊗ a*) ⊗ a, keeping the B_* component
    let correction = |v: &Generator, beta: &Monomial| -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for a in &w_basis {
            if beta.degree() + a.degree() > window.hi {
                continue;
            }
            let Some((s, m)) = beta.mul(a) else { continue };
            for (m2, c) in coalg_bw.dual_differential(&m) {
                let (s2, wpart, bpart) = m2.partition(is_w);
                if !wpart.is_one() {
                    continue;
                }
                let Some(g) = nf.gen(v, &bpart)? else {
                    continue;
                };
                let sg = sign(v.degree() as i64)
                    * alpha_sign_with(a.degree(), convention)
                    * s
                    * s2;
                let term = &g * &Polynomial::from(a.clone());
                out.add_scaled(&term, &(c * rat(sg)));
            }
        }
        Ok(out)
    };

    let (algebra, relations) = assemble(
        rm,
        &coalg_b,
        mode,
        |v, beta| {
            let dv = rm.total().d_gen(v.name())?;
            Ok(&apply_split(dv, beta)? + &correction(v, beta)?)
        },
        w,
    )?;
    Ok(SectionModel {
        algebra,
        relations,
        provenance: provenance(rm, coalg_bw, convention),
    })
}
