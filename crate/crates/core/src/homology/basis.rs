use crate::algebra::{Cdga, Generator, Monomial, Polynomial};
use crate::error::{Error, Result};

pub const DEFAULT_BASIS_LIMIT: usize = 2_000_000;

/// A cochain complex spanned by monomials of some CDGA.
pub trait Complex: Sync {
    /// Monomial basis in degree `k`, in canonical order.
    fn basis(&self, k: i64, limit: usize) -> Result<Vec<Monomial>>;
    fn differential(&self, p: &Polynomial) -> Polynomial;
}

impl Complex for Cdga {
    fn basis(&self, k: i64, limit: usize) -> Result<Vec<Monomial>> {
        basis_in_degree_limited(self, k, limit)
    }

    fn differential(&self, p: &Polynomial) -> Polynomial {
        self.d(p).expect("basis monomials belong to the algebra")
    }
}

/// The subcomplex `A[g] ⊕ Q`: the constants plus every monomial divisible
/// by the closed generator `g`.
pub struct IdealPlusUnit<'a> {
    algebra: &'a Cdga,
    generator: String,
}

impl<'a> IdealPlusUnit<'a> {
    pub fn new(algebra: &'a Cdga, generator: &str) -> Result<Self> {
        if !algebra.d_gen(generator)?.is_zero() {
            return Err(Error::Parameter(format!(
                "generator `{generator}` is not closed"
            )));
        }
        Ok(IdealPlusUnit {
            algebra,
            generator: generator.to_string(),
        })
    }
}

impl Complex for IdealPlusUnit<'_> {
    fn basis(&self, k: i64, limit: usize) -> Result<Vec<Monomial>> {
        let all = basis_in_degree_limited(self.algebra, k, limit)?;
        Ok(all
            .into_iter()
            .filter(|m| m.is_one() || m.exponent(&self.generator) > 0)
            .collect())
    }

    fn differential(&self, p: &Polynomial) -> Polynomial {
        self.algebra.differential(p)
    }
}

pub fn basis_in_degree(a: &Cdga, k: i64) -> Result<Vec<Monomial>> {
    basis_in_degree_limited(a, k, DEFAULT_BASIS_LIMIT)
}

/// All canonical monomials of degree `k`, honouring truncations.
pub fn basis_in_degree_limited(a: &Cdga, k: i64, limit: usize) -> Result<Vec<Monomial>> {
    if let Some(g) = a.generators().iter().find(|g| g.degree() <= 0) {
        return Err(Error::NonPositiveDegree(g.name().to_string()));
    }
    if k < 0 {
        return Ok(Vec::new());
    }
    let gens: Vec<(Generator, u32)> = a
        .generators()
        .iter()
        .map(|g| {
            let parity_cap = if g.is_odd() { 1 } else { u32::MAX };
            let cap = a
                .truncations()
                .get(g.name())
                .map_or(parity_cap, |t| (*t).min(parity_cap));
            (g.clone(), cap)
        })
        .collect();
    let mut out = Vec::new();
    let mut word = Vec::new();
    enumerate(&gens, 0, k, &mut word, &mut out, limit).map_err(|size| Error::BasisTooLarge {
        degree: k,
        size,
        limit,
    })?;
    out.sort();
    Ok(out)
}

fn enumerate(
    gens: &[(Generator, u32)],
    idx: usize,
    remaining: i64,
    word: &mut Vec<(Generator, u32)>,
    out: &mut Vec<Monomial>,
    limit: usize,
) -> std::result::Result<(), usize> {
    if remaining == 0 {
        out.push(Monomial::from_word(word).expect("canonical word").1);
        if out.len() > limit {
            return Err(out.len());
        }
        return Ok(());
    }
    if idx == gens.len() {
        return Ok(());
    }
    let (g, cap) = &gens[idx];
    let d = g.degree() as i64;
    let mut e = 0u32;
    while e <= *cap && e as i64 * d <= remaining {
        if e > 0 {
            word.push((g.clone(), e));
        }
        let r = enumerate(gens, idx + 1, remaining - e as i64 * d, word, out, limit);
        if e > 0 {
            word.pop();
        }
        r?;
        e += 1;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bases() {
        let b = Generator::new("b", 2);
        let y = Generator::new("y", 5);
        let a = Cdga::new(vec![b.clone(), y], []).unwrap();
        let bs = basis_in_degree(&a, 4).unwrap();
        assert_eq!(bs, vec![Monomial::power(&b, 2).unwrap()]);
        assert_eq!(basis_in_degree(&a, 7).unwrap().len(), 1);
        assert_eq!(basis_in_degree(&a, 0).unwrap(), vec![Monomial::one()]);
    }

    #[test]
    fn degree_zero_rejected() {
        let g = Generator::new("g", 0);
        let a = Cdga::new(vec![g], []).unwrap();
        assert!(matches!(basis_in_degree(&a, 2), Err(Error::NonPositiveDegree(_))));
    }

    #[test]
    fn limit_enforced() {
        let gens: Vec<Generator> = (0..6).map(|i| Generator::new(format!("a{i}"), 2)).collect();
        let a = Cdga::new(gens, []).unwrap();
        assert!(matches!(
            basis_in_degree_limited(&a, 20, 100),
            Err(Error::BasisTooLarge { .. })
        ));
    }
}
