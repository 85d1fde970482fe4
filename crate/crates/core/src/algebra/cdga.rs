use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use super::{Generator, Monomial, Polynomial};
use crate::error::{Error, Result};

/// A free graded-commutative algebra on named generators with a differential
/// given on generators, optionally divided by monomial relations `g^(k+1) = 0`
/// (used for the truncated cohomology of projective spaces).
#[derive(Clone, PartialEq, Eq)]
pub struct Cdga {
    generators: Vec<Generator>,
    differential: BTreeMap<String, Polynomial>,
    truncations: BTreeMap<String, u32>,
}

/// Outcome of a generator-wise check: empty means ok.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub failures: Vec<(String, Polynomial)>,
}

impl CheckReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        for (i, (g, r)) in self.failures.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{g}: {r}")?;
        }
        Ok(())
    }
}

impl Cdga {
    /// Builds a model; missing differentials are zero. Checks that every
    /// differential mentions only known generators and has degree `|g| + 1`.
    pub fn new(
        generators: Vec<Generator>,
        differential: impl IntoIterator<Item = (String, Polynomial)>,
    ) -> Result<Self> {
        Cdga::with_truncations(generators, differential, BTreeMap::new())
    }

    pub fn with_truncations(
        mut generators: Vec<Generator>,
        differential: impl IntoIterator<Item = (String, Polynomial)>,
        truncations: BTreeMap<String, u32>,
    ) -> Result<Self> {
        generators.sort();
        for w in generators.windows(2) {
            if w[0].name() == w[1].name() {
                return Err(Error::DuplicateGenerator(w[0].name().to_string()));
            }
        }
        let mut diff: BTreeMap<String, Polynomial> = generators
            .iter()
            .map(|g| (g.name().to_string(), Polynomial::zero()))
            .collect();
        for (name, p) in differential {
            let slot = diff
                .get_mut(&name)
                .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
            *slot = p;
        }
        let mut model = Cdga {
            generators,
            differential: BTreeMap::new(),
            truncations,
        };
        for t in model.truncations.keys() {
            model.generator(t)?;
        }
        for (name, p) in diff {
            let p = model.reduce(&p);
            model.check_mentions(&p)?;
            let g = model.generator(&name)?;
            let expected = g.degree() as i64 + 1;
            if !p.is_zero() && !p.is_homogeneous_of(expected) {
                return Err(Error::DifferentialDegree {
                    name,
                    expected,
                    found: p.degree(),
                });
            }
            model.differential.insert(name, p);
        }
        Ok(model)
    }

    pub fn empty() -> Self {
        Cdga {
            generators: Vec::new(),
            differential: BTreeMap::new(),
            truncations: BTreeMap::new(),
        }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn truncations(&self) -> &BTreeMap<String, u32> {
        &self.truncations
    }

    pub fn generator(&self, name: &str) -> Result<&Generator> {
        self.generators
            .iter()
            .find(|g| g.name() == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn has_generator(&self, name: &str) -> bool {
        self.generators.iter().any(|g| g.name() == name)
    }

    /// The generator as a polynomial; panics on unknown names (catalog use).
    pub fn g(&self, name: &str) -> Polynomial {
        Polynomial::gen(self.generator(name).unwrap_or_else(|e| panic!("{e}")))
    }

    pub fn d_gen(&self, name: &str) -> Result<&Polynomial> {
        self.differential
            .get(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn differentials(&self) -> impl Iterator<Item = (&Generator, &Polynomial)> {
        self.generators
            .iter()
            .map(move |g| (g, &self.differential[g.name()]))
    }

    pub fn max_degree(&self) -> i32 {
        self.generators.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn is_positively_graded(&self) -> bool {
        self.generators.iter().all(|g| g.degree() >= 1)
    }

    fn check_mentions(&self, p: &Polynomial) -> Result<()> {
        for g in p.generators() {
            match self.generator(g.name()) {
                Ok(known) if known.degree() == g.degree() => {}
                Ok(_) | Err(_) => return Err(Error::UnknownGenerator(g.name().to_string())),
            }
        }
        Ok(())
    }

    /// Whether a monomial survives the truncation relations.
    pub fn admits(&self, m: &Monomial) -> bool {
        self.truncations.is_empty()
            || m.factors()
                .iter()
                .all(|(g, e)| self.truncations.get(g.name()).is_none_or(|max| e <= max))
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        if self.truncations.is_empty() {
            return p.clone();
        }
        p.filter(|m| self.admits(m))
    }

    pub fn mul(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        self.reduce(&(p * q))
    }

    /// Leibniz extension of the generator differential.
    pub fn d(&self, p: &Polynomial) -> Result<Polynomial> {
        self.check_mentions(p)?;
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            let dm = self.d_monomial(m);
            out.add_scaled(&dm, c);
        }
        Ok(self.reduce(&out))
    }

    fn d_monomial(&self, m: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for idx in 0..m.factors().len() {
            let (prefix, g, e, suffix) = m.split_at_factor(idx);
            let dg = &self.differential[g.name()];
            if dg.is_zero() {
                continue;
            }
            // d(g^e) = e g^(e-1) dg for even g
            let mut core = dg.clone();
            if e > 1 {
                let rest = Monomial::power(&g, e - 1).expect("even generator");
                core = &Polynomial::term(crate::rational::rat(e as i64), rest) * &core;
            }
            let sign = if prefix.degree().rem_euclid(2) == 0 { 1 } else { -1 };
            let mut term = &(&Polynomial::from(prefix) * &core) * &Polynomial::from(suffix);
            if sign < 0 {
                term = -term;
            }
            out = &out + &term;
        }
        out
    }

    pub fn check_d_squared(&self) -> CheckReport {
        let mut failures = Vec::new();
        for g in &self.generators {
            let dg = &self.differential[g.name()];
            let dd = self.d(dg).expect("differentials only mention known generators");
            if !dd.is_zero() {
                failures.push((g.name().to_string(), dd));
            }
        }
        CheckReport { failures }
    }

    /// Positively graded part after deleting the named generators: every
    /// occurrence of a deleted generator in a differential is set to zero.
    pub fn without(&self, names: &[&str]) -> Result<Cdga> {
        let keep: Vec<Generator> = self
            .generators
            .iter()
            .filter(|g| !names.contains(&g.name()))
            .cloned()
            .collect();
        let kill = |g: &Generator| names.contains(&g.name()).then(Polynomial::zero);
        let diff: Vec<(String, Polynomial)> = keep
            .iter()
            .map(|g| (g.name().to_string(), self.differential[g.name()].substitute(&kill)))
            .collect();
        let trunc = self
            .truncations
            .iter()
            .filter(|(k, _)| !names.contains(&k.as_str()))
            .map(|(k, v)| (k.clone(), *v))
            .collect();
        Cdga::with_truncations(keep, diff, trunc)
    }

    /// Tensor product; generator names must be disjoint.
    pub fn tensor(&self, other: &Cdga) -> Result<Cdga> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        let diff = self
            .differential
            .iter()
            .chain(other.differential.iter())
            .map(|(k, v)| (k.clone(), v.clone()));
        let mut trunc = self.truncations.clone();
        trunc.extend(other.truncations.iter().map(|(k, v)| (k.clone(), *v)));
        Cdga::with_truncations(gens, diff, trunc)
    }

    /// Replaces the differential of one generator.
    pub fn with_differential(&self, name: &str, p: Polynomial) -> Result<Cdga> {
        let mut diff = self.differential.clone();
        diff.insert(name.to_string(), p);
        Cdga::with_truncations(self.generators.clone(), diff, self.truncations.clone())
    }

    /// New generator `g' = scale * g` keeping the old name. Returns the
    /// rescaled model and the isomorphism from `self` (`g ↦ g' / scale`).
    pub fn rescale_generator(
        &self,
        name: &str,
        scale: &crate::rational::Rational,
    ) -> Result<(Cdga, super::Morphism)> {
        use num_traits::Zero;
        if scale.is_zero() {
            return Err(Error::Parameter("rescaling by zero".into()));
        }
        let g = self.generator(name)?.clone();
        let inv = crate::rational::Rational::one() / scale;
        // old g = inv * new g
        let sub = |h: &Generator| (h.name() == g.name()).then(|| Polynomial::gen(h).scale(&inv));
        let diff: Vec<(String, Polynomial)> = self
            .generators
            .iter()
            .map(|h| {
                let mut p = self.differential[h.name()].substitute(&sub);
                if h.name() == g.name() {
                    p = p.scale(scale);
                }
                (h.name().to_string(), p)
            })
            .collect();
        let target = Cdga::with_truncations(self.generators.clone(), diff, self.truncations.clone())?;
        let images = self.generators.iter().map(|h| {
            let p = if h.name() == g.name() {
                Polynomial::gen(h).scale(&inv)
            } else {
                Polynomial::gen(h)
            };
            (h.name().to_string(), p)
        });
        let phi = super::Morphism::new(self.clone(), target.clone(), images)?;
        Ok((target, phi))
    }
}

impl fmt::Debug for Cdga {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Cdga {{")?;
        for (g, p) in self.differentials() {
            writeln!(f, "  d({}) [{}] = {}", g.name(), g.degree(), p)?;
        }
        if !self.truncations.is_empty() {
            writeln!(f, "  truncations: {:?}", self.truncations)?;
        }
        write!(f, "}}")
    }
}
