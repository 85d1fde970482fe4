use std::collections::BTreeMap;

use num_traits::Zero;

use super::SectionModel;
use crate::algebra::{Cdga, Generator, Polynomial};
use crate::error::{Error, Result};
use crate::rational::{fmt_rational, Rational};

/// Values of an augmentation on the degree-0 generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Augmentation {
    pub values: BTreeMap<String, Rational>,
}

impl Augmentation {
    pub fn new(values: impl IntoIterator<Item = (String, Rational)>) -> Self {
        Augmentation {
            values: values.into_iter().collect(),
        }
    }

    pub fn get(&self, name: &str) -> Option<&Rational> {
        self.values.get(name)
    }

    fn substitute(&self, p: &Polynomial) -> Polynomial {
        p.substitute(&|g: &Generator| {
            (g.degree() == 0)
                .then(|| self.values.get(g.name()))
                .flatten()
                .map(|v| Polynomial::constant(v.clone()))
        })
    }

    /// Extends `given` by solving the degree-0 relations one unknown at a
    /// time; errors if a relation is violated or a generator stays free.
    pub fn solve(model: &SectionModel, given: impl IntoIterator<Item = (String, Rational)>) -> Result<Self> {
        let mut eps = Augmentation::new(given);
        loop {
            let mut progress = false;
            for (name, rel) in &model.relations {
                let r = eps.substitute(rel);
                if r.is_zero() {
                    continue;
                }
                let unknowns = r.generators();
                match unknowns.as_slice() {
                    [] => {
                        return Err(Error::Augmentation(format!(
                            "relation d({name}) evaluates to {}",
                            fmt_rational(&r.constant_term())
                        )))
                    }
                    [g] => {
                        let lin = Polynomial::gen(g);
                        let a = r.coefficient(lin.terms().next().expect("generator").0);
                        let rest = &r - &lin.scale(&a);
                        if a.is_zero() || !rest.generators().is_empty() {
                            continue;
                        }
                        eps.values
                            .insert(g.name().to_string(), -rest.constant_term() / a);
                        progress = true;
                    }
                    _ => {}
                }
            }
            if !progress {
                break;
            }
        }
        eps.check(model)?;
        Ok(eps)
    }

    /// Every degree-0 generator has a value and every relation vanishes.
    pub fn check(&self, model: &SectionModel) -> Result<()> {
        for g in model.degree_zero_generators() {
            if !self.values.contains_key(g.name()) {
                return Err(Error::Augmentation(format!(
                    "no value for degree-0 generator {}",
                    g.name()
                )));
            }
        }
        for (name, rel) in &model.relations {
            let r = self.substitute(rel);
            if !r.is_zero() {
                return Err(Error::Augmentation(format!("relation d({name}) evaluates to {r}")));
            }
        }
        Ok(())
    }
}

/// The model of one component: degree-0 generators replaced by their
/// augmentation values.
pub fn component_model(s: &SectionModel, eps: &Augmentation) -> Result<Cdga> {
    eps.check(s)?;
    let gens: Vec<Generator> = s
        .algebra
        .generators()
        .iter()
        .filter(|g| g.degree() != 0)
        .cloned()
        .collect();
    if let Some(g) = gens.iter().find(|g| g.degree() < 0) {
        return Err(Error::NonPositiveDegree(g.name().to_string()));
    }
    let diff: Vec<(String, Polynomial)> = s
        .algebra
        .differentials()
        .filter(|(g, _)| g.degree() > 0)
        .map(|(g, p)| (g.name().to_string(), eps.substitute(p)))
        .collect();
    Cdga::new(gens, diff)
}
