use std::collections::BTreeMap;

use super::{CheckReport, Cdga, Polynomial};
use crate::error::{Error, Result};

/// A CDGA morphism determined by the images of generators.
#[derive(Clone, Debug)]
pub struct Morphism {
    source: Cdga,
    target: Cdga,
    images: BTreeMap<String, Polynomial>,
}

impl Morphism {
    /// Missing images default to zero. Images must be homogeneous of the
    /// generator's degree and mention only target generators.
    pub fn new(
        source: Cdga,
        target: Cdga,
        images: impl IntoIterator<Item = (String, Polynomial)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<String, Polynomial> = source
            .generators()
            .iter()
            .map(|g| (g.name().to_string(), Polynomial::zero()))
            .collect();
        for (name, p) in images {
            let g = source.generator(&name)?.clone();
            let p = target.reduce(&p);
            for h in p.generators() {
                target.generator(h.name())?;
            }
            let expected = g.degree() as i64;
            if !p.is_homogeneous_of(expected) {
                return Err(Error::ImageDegree {
                    name,
                    expected,
                    found: p.degree(),
                });
            }
            map.insert(name, p);
        }
        Ok(Morphism {
            source,
            target,
            images: map,
        })
    }

    pub fn identity(a: &Cdga) -> Morphism {
        let images = a
            .generators()
            .iter()
            .map(|g| (g.name().to_string(), Polynomial::gen(g)));
        Morphism::new(a.clone(), a.clone(), images).expect("identity is well formed")
    }

    pub fn source(&self) -> &Cdga {
        &self.source
    }

    pub fn target(&self) -> &Cdga {
        &self.target
    }

    pub fn image(&self, name: &str) -> Result<&Polynomial> {
        self.images
            .get(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn images(&self) -> &BTreeMap<String, Polynomial> {
        &self.images
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        for g in p.generators() {
            self.source.generator(g.name())?;
        }
        let out = p.substitute(&|g| self.images.get(g.name()).cloned());
        Ok(self.target.reduce(&out))
    }

    /// Generators `v` with `phi(dv) != d(phi v)`, with the difference.
    pub fn check_chain_map(&self) -> CheckReport {
        let mut failures = Vec::new();
        for (g, dg) in self.source.differentials() {
            let lhs = self.apply(dg).expect("source differential is closed");
            let rhs = self
                .target
                .d(&self.images[g.name()])
                .expect("images are validated");
            let diff = &lhs - &rhs;
            if !diff.is_zero() {
                failures.push((g.name().to_string(), diff));
            }
        }
        CheckReport { failures }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Result<Morphism> {
        if other.source.generators() != self.target.generators() {
            return Err(Error::Parameter(
                "composition: target and source generators differ".into(),
            ));
        }
        let images: Vec<(String, Polynomial)> = self
            .images
            .iter()
            .map(|(k, v)| Ok((k.clone(), other.apply(v)?)))
            .collect::<Result<_>>()?;
        Morphism::new(self.source.clone(), other.target.clone(), images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Generator;

    #[test]
    fn inclusion_is_chain_map_and_composes() {
        let b = Generator::new("b", 2);
        let y = Generator::new("y", 5);
        let base = Cdga::new(vec![b.clone()], []).unwrap();
        let tot = Cdga::new(
            vec![b.clone(), y.clone()],
            [("y".to_string(), Polynomial::gen(&b).pow(3))],
        )
        .unwrap();
        let inc = Morphism::new(
            base.clone(),
            tot.clone(),
            [("b".to_string(), Polynomial::gen(&b))],
        )
        .unwrap();
        assert!(inc.check_chain_map().is_ok());
        let c = inc.then(&Morphism::identity(&tot)).unwrap();
        assert_eq!(c.image("b").unwrap(), &Polynomial::gen(&b));

        let bad = Morphism::new(
            tot.clone(),
            tot,
            [("b".to_string(), Polynomial::gen(&b)), ("y".to_string(), Polynomial::zero())],
        )
        .unwrap();
        assert!(!bad.check_chain_map().is_ok());
    }
}
