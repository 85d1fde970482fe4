use num_traits::Signed;

use super::{Cdga, Generator, Monomial, Morphism, Polynomial};
use crate::error::{Error, Result};
use crate::rational::is_unit;

/// Removes a contractible pair: with `d(x) = s*y + r`, `s = ±1` and `r` free of
/// `x` and `y`, returns `A' = A / (x, dx)` on the remaining generators and
/// the projection `rho` (`x ↦ 0`, `y ↦ -s*r`).
pub fn eliminate_pair(a: &Cdga, x: &str, y: &str) -> Result<(Cdga, Morphism)> {
    let fail = |reason: &str| Error::Elimination {
        x: x.to_string(),
        y: y.to_string(),
        reason: reason.to_string(),
    };
    let gx = a.generator(x)?.clone();
    let gy = a.generator(y)?.clone();
    if gy.degree() != gx.degree() + 1 {
        return Err(fail("degree of y must be degree of x plus one"));
    }
    let dx = a.d_gen(x)?;
    let ym = Monomial::gen(&gy);
    let s = dx.coefficient(&ym);
    if !is_unit(&s) {
        return Err(fail("y must occur in d(x) with coefficient ±1"));
    }
    let r = dx - &Polynomial::term(s.clone(), ym);
    if r.mentions(y) {
        return Err(fail("y occurs nonlinearly in d(x)"));
    }
    if r.mentions(x) {
        return Err(fail("d(x) involves x"));
    }
    let y_image = if s.is_positive() { -&r } else { r.clone() };
    let sub = |g: &Generator| {
        if g.name() == x {
            Some(Polynomial::zero())
        } else if g.name() == y {
            Some(y_image.clone())
        } else {
            None
        }
    };
    let keep: Vec<Generator> = a
        .generators()
        .iter()
        .filter(|g| g.name() != x && g.name() != y)
        .cloned()
        .collect();
    let diff: Vec<(String, Polynomial)> = a
        .differentials()
        .filter(|(g, _)| g.name() != x && g.name() != y)
        .map(|(g, p)| (g.name().to_string(), p.substitute(&sub)))
        .collect();
    let trunc = a
        .truncations()
        .iter()
        .filter(|(k, _)| k.as_str() != x && k.as_str() != y)
        .map(|(k, v)| (k.clone(), *v))
        .collect();
    let target = Cdga::with_truncations(keep, diff, trunc)?;
    let images: Vec<(String, Polynomial)> = a
        .generators()
        .iter()
        .map(|g| {
            let p = sub(g).unwrap_or_else(|| Polynomial::gen(g));
            (g.name().to_string(), p)
        })
        .collect();
    let rho = Morphism::new(a.clone(), target.clone(), images)?;
    Ok((target, rho))
}

/// Eliminates a sequence of pairs, composing the projections.
pub fn eliminate_pairs(a: &Cdga, pairs: &[(&str, &str)]) -> Result<(Cdga, Morphism)> {
    let mut cur = a.clone();
    let mut rho = Morphism::identity(a);
    for (x, y) in pairs {
        let (next, step) = eliminate_pair(&cur, x, y)?;
        rho = rho.then(&step)?;
        cur = next;
    }
    Ok((cur, rho))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn contractible_pair_gives_q() {
        let x = Generator::new("x", 1);
        let y = Generator::new("y", 2);
        let a = Cdga::new(vec![x, y.clone()], [("x".to_string(), Polynomial::gen(&y))]).unwrap();
        let (b, rho) = eliminate_pair(&a, "x", "y").unwrap();
        assert!(b.generators().is_empty());
        assert!(rho.check_chain_map().is_ok());
    }

    #[test]
    fn non_unit_rejected_then_rescaled() {
        let x = Generator::new("x", 1);
        let y = Generator::new("y", 2);
        let a = Cdga::new(
            vec![x, y.clone()],
            [("x".to_string(), Polynomial::gen(&y).scale(&rat(2)))],
        )
        .unwrap();
        assert!(matches!(
            eliminate_pair(&a, "x", "y"),
            Err(Error::Elimination { .. })
        ));
        let (a2, iso) = a.rescale_generator("x", &crate::rational::frac(1, 2)).unwrap();
        assert!(iso.check_chain_map().is_ok());
        let (b, _) = eliminate_pair(&a2, "x", "y").unwrap();
        assert!(b.generators().is_empty());
    }

    #[test]
    fn substitution_into_other_differentials() {
        // d(x) = -y + a^2, d(z) = y*a  ->  d(z) = a^3 after elimination
        let a = Generator::new("a", 2);
        let x = Generator::new("x", 3);
        let y = Generator::new("y", 4);
        let z = Generator::new("z", 5);
        let pa = Polynomial::gen(&a);
        let m = Cdga::new(
            vec![a.clone(), x, y.clone(), z],
            [
                ("x".to_string(), &pa.pow(2) - &Polynomial::gen(&y)),
                ("z".to_string(), &Polynomial::gen(&y) * &pa),
            ],
        )
        .unwrap();
        assert!(m.check_d_squared().is_ok());
        let (b, rho) = eliminate_pair(&m, "x", "y").unwrap();
        assert_eq!(b.d_gen("z").unwrap(), &pa.pow(3));
        assert!(rho.check_chain_map().is_ok());
    }
}
