use super::{section_name, Augmentation, RelativeModel};
use crate::algebra::{Cdga, Monomial, Morphism, Polynomial};
use crate::coalgebra::{alpha_sign_with, Coalgebra, SignConvention};
use crate::error::Result;
use crate::rational::rat;

/// Evaluation map `ΛV ⊗ B → Λ(V ⊗ B_*) ⊗ B` into a component model:
/// `v ↦ Σ_b (-1)^α(b) (v ⊗ b_*) ⊗ b`, base generators fixed. Degree-0
/// generators `v ⊗ b_*` take their augmentation values, negative ones vanish.
pub fn evaluation_map_model(
    component: &Cdga,
    eps: &Augmentation,
    rm: &RelativeModel,
    coalg: &Coalgebra,
    convention: SignConvention,
) -> Result<Morphism> {
    let target = component.tensor(rm.base())?;
    let mut images = Vec::new();
    for g in rm.base().generators() {
        images.push((g.name().to_string(), Polynomial::gen(g)));
    }
    for v in rm.fiber() {
        let mut img = Polynomial::zero();
        for b in coalg.all_basis() {
            let deg = v.degree() as i64 - b.degree();
            let name = section_name(v, b);
            let factor = match deg {
                d if d < 0 => continue,
                0 => Polynomial::constant(eps.get(&name).cloned().unwrap_or_default()),
                _ => target.g(&name),
            };
            let term = &factor * &Polynomial::from(b.clone());
            img.add_scaled(&term, &rat(alpha_sign_with(b.degree(), convention)));
        }
        images.push((v.name().to_string(), target.reduce(&img)));
    }
    Morphism::new(rm.total().clone(), target, images)
}

/// `p_β`: pairs the base factor of every term with `β`, leaving the rest.
pub fn pushforward_p_beta(p: &Polynomial, beta: &Monomial, base: &Cdga) -> Polynomial {
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        let (s, rest, bpart) = m.partition(|g| !base.has_generator(g.name()));
        if &bpart == beta {
            out.add_term(rest, c * rat(s));
        }
    }
    out
}
