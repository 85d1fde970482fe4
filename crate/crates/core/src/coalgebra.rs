//! Window-truncated graded dual of a CDGA's monomial basis.
//!
//! A dual basis element is identified with the monomial it is dual to.
//! Comultiplication is the transpose of multiplication and the dual
//! differential is the transpose of `d`, with no additional signs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::algebra::json::{monomial_to_json, rational_to_json};
use crate::algebra::{Cdga, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::homology::{basis_in_degree, DegreeWindow};
use crate::rational::{sign, Rational};

/// Which placement of the α sign is used when base factors are absorbed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SignConvention {
    /// `(-1)^floor((r+1)/2)`
    #[default]
    Section3,
    /// the opposite sign, so that `α(b^k) ≡ k+1 (mod 2)`
    Section4,
}

impl SignConvention {
    pub fn as_str(&self) -> &'static str {
        match self {
            SignConvention::Section3 => "section-3",
            SignConvention::Section4 => "section-4",
        }
    }
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SignConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "section-3" => Ok(SignConvention::Section3),
            "section-4" => Ok(SignConvention::Section4),
            _ => Err(Error::Parameter(format!("unknown sign convention `{s}`"))),
        }
    }
}

/// `(-1)^α(r)` with `α(r) = floor((r+1)/2)`.
pub fn alpha_sign(r: i64) -> i64 {
    sign((r + 1).div_euclid(2))
}

pub fn alpha_sign_with(r: i64, conv: SignConvention) -> i64 {
    match conv {
        SignConvention::Section3 => alpha_sign(r),
        SignConvention::Section4 => -alpha_sign(r),
    }
}

/// A linear combination of dual basis elements.
pub type Chain = BTreeMap<Monomial, Rational>;

pub fn chain_add(c: &mut Chain, m: Monomial, v: Rational) {
    if v.is_zero() {
        return;
    }
    let e = c.entry(m.clone()).or_insert_with(Rational::zero);
    *e += v;
    if e.is_zero() {
        c.remove(&m);
    }
}

#[derive(Clone, Debug)]
pub struct Coalgebra {
    base: Cdga,
    window: DegreeWindow,
    basis: BTreeMap<i64, Vec<Monomial>>,
    dual_d: BTreeMap<Monomial, Chain>,
}

/// Result of a cap product; `underflow` is set when terms fell below the window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapResult {
    pub chain: Chain,
    pub underflow: bool,
}

impl Coalgebra {
    pub fn base(&self) -> &Cdga {
        &self.base
    }

    pub fn window(&self) -> DegreeWindow {
        self.window
    }

    pub fn basis(&self, k: i64) -> &[Monomial] {
        self.basis.get(&k).map_or(&[], |v| v.as_slice())
    }

    pub fn all_basis(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.values().flatten()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.basis(m.degree()).binary_search(m).is_ok()
    }

    /// `Δ(m*) = Σ s · m1* ⊗ m2*` over `m1 · m2 = s · m`.
    pub fn comultiply(&self, m: &Monomial) -> Vec<(i64, Monomial, Monomial)> {
        m.splittings()
    }

    pub fn dual_differential(&self, m: &Monomial) -> Chain {
        self.dual_d.get(m).cloned().unwrap_or_default()
    }

    /// Pairing `<m*, p>`: the coefficient of `m` in `p`.
    pub fn pair(&self, m: &Monomial, p: &Polynomial) -> Rational {
        p.coefficient(m)
    }

    /// `<cap(m*, b), x> = <m*, b·x>` for a base monomial `b`.
    pub fn cap_monomial(&self, m: &Monomial, b: &Monomial) -> CapResult {
        let mut chain = Chain::new();
        let mut underflow = false;
        if let Some(q) = quotient(m, b) {
            let (s, prod) = b.mul(&q).expect("quotient multiplies back");
            debug_assert_eq!(&prod, m);
            if q.degree() < self.window.lo {
                underflow = true;
            } else {
                chain_add(&mut chain, q, Rational::from_integer(s.into()));
            }
        }
        CapResult { chain, underflow }
    }

    pub fn cap(&self, beta: &Chain, b: &Polynomial) -> CapResult {
        let mut chain = Chain::new();
        let mut underflow = false;
        for (m, c) in beta {
            for (bm, bc) in b.terms() {
                let r = self.cap_monomial(m, bm);
                underflow |= r.underflow;
                for (q, v) in r.chain {
                    chain_add(&mut chain, q, v * c * bc);
                }
            }
        }
        CapResult { chain, underflow }
    }

    pub fn name(&self, m: &Monomial) -> String {
        dual_name(m)
    }

    /// Inverse of [`Coalgebra::name`] over the stored basis.
    pub fn by_name(&self, name: &str) -> Option<&Monomial> {
        self.all_basis().find(|m| dual_name(m) == name)
    }

    pub fn to_json(&self) -> Value {
        let mut basis = Vec::new();
        let mut comult = Map::new();
        let mut dd = Map::new();
        for m in self.all_basis() {
            let name = self.name(m);
            basis.push(json!({"name": name, "degree": m.degree(), "dualOf": monomial_to_json(m)}));
            let terms: Vec<Value> = self
                .comultiply(m)
                .into_iter()
                .map(|(s, l, r)| json!([s, 1, self.name(&l), self.name(&r)]))
                .collect();
            comult.insert(name.clone(), Value::Array(terms));
            let terms: Vec<Value> = self
                .dual_differential(m)
                .iter()
                .map(|(k, v)| {
                    let (n, d) = rational_to_json(v);
                    json!([n, d, self.name(k)])
                })
                .collect();
            dd.insert(name, Value::Array(terms));
        }
        json!({
            "window": [self.window.lo, self.window.hi],
            "basis": basis,
            "comultiplication": comult,
            "dualDifferential": dd,
        })
    }
}

/// `m / b` if `b` divides `m`.
pub(crate) fn quotient(m: &Monomial, b: &Monomial) -> Option<Monomial> {
    let mut word = Vec::new();
    for (g, e) in m.factors() {
        let eb = b.exponent(g.name());
        if eb > *e {
            return None;
        }
        if e - eb > 0 {
            word.push((g.clone(), e - eb));
        }
    }
    if b.factors().iter().any(|(g, _)| m.exponent(g.name()) == 0) {
        return None;
    }
    Monomial::from_word(&word).map(|(_, q)| q)
}

/// Structured names: `1`, `beta_j` for `b^j`, `gamma_k` for the degree-k
/// element `b^j*y`, and `<part>(x)theta[w]` when other generators occur.
pub fn dual_name(m: &Monomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    let (_, by, rest) = m.partition(|g| g.name() == "b" || g.name() == "y");
    let head = if by.is_one() {
        None
    } else if by.exponent("y") == 0 {
        Some(format!("beta_{}", by.exponent("b")))
    } else if by.exponent("y") == 1 {
        Some(format!("gamma_{}", by.degree()))
    } else {
        Some(format!("[{by}]^*"))
    };
    match (head, rest.is_one()) {
        (Some(h), true) => h,
        (Some(h), false) => format!("{h}(x)theta[{rest}]"),
        (None, _) => format!("theta[{rest}]"),
    }
}

pub fn dualize(base: &Cdga, w: DegreeWindow) -> Result<Coalgebra> {
    let mut basis = BTreeMap::new();
    for k in w.degrees() {
        basis.insert(k, basis_in_degree(base, k)?);
    }
    let mut dual_d: BTreeMap<Monomial, Chain> = BTreeMap::new();
    // transpose of d: sources one degree below each window degree
    for k in w.lo..=w.hi {
        let below = if k > w.lo {
            basis[&(k - 1)].clone()
        } else {
            basis_in_degree(base, k - 1)?
        };
        for src in below {
            let dm = base.d(&Polynomial::from(src.clone()))?;
            for (tgt, c) in dm.terms() {
                if src.degree() < w.lo {
                    continue;
                }
                chain_add(dual_d.entry(tgt.clone()).or_default(), src.clone(), c.clone());
            }
        }
    }
    Ok(Coalgebra {
        base: base.clone(),
        window: w,
        basis,
        dual_d,
    })
}

/// `1*` as a chain.
pub fn unit_chain() -> Chain {
    let mut c = Chain::new();
    c.insert(Monomial::one(), Rational::one());
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Generator;
    use crate::rational::rat;

    fn cp(n: i64) -> Cdga {
        let b = Generator::new("b", 2);
        let y = Generator::new("y", 2 * n as i32 + 1);
        Cdga::new(
            vec![b.clone(), y],
            [("y".to_string(), Polynomial::gen(&b).pow(n as u32 + 1))],
        )
        .unwrap()
    }

    #[test]
    fn alpha_values() {
        let v: Vec<i64> = (0..5).map(alpha_sign).collect();
        assert_eq!(v, vec![1, -1, -1, 1, 1]);
        assert_eq!(alpha_sign(100), 1);
        for k in 0..10 {
            assert_eq!(alpha_sign_with(2 * k, SignConvention::Section4), sign(k + 1));
        }
    }

    #[test]
    fn dual_differential_beta_to_gamma() {
        let c = dualize(&cp(2), DegreeWindow::new(0, 12).unwrap()).unwrap();
        let b3 = c.by_name("beta_3").unwrap().clone();
        let g5 = c.by_name("gamma_5").unwrap().clone();
        let dd = c.dual_differential(&b3);
        assert_eq!(dd.len(), 1);
        assert_eq!(dd[&g5], rat(1));
        assert!(c.dual_differential(&c.by_name("beta_2").unwrap().clone()).is_empty());
    }

    #[test]
    fn cap_on_projective_space() {
        let c = dualize(&cp(2), DegreeWindow::new(0, 8).unwrap()).unwrap();
        let b = Generator::new("b", 2);
        let b2 = c.by_name("beta_2").unwrap().clone();
        let r = c.cap_monomial(&b2, &Monomial::power(&b, 1).unwrap());
        assert_eq!(r.chain.keys().map(dual_name).collect::<Vec<_>>(), vec!["beta_1"]);
        let r = c.cap_monomial(&b2, &Monomial::power(&b, 3).unwrap());
        assert!(r.chain.is_empty());
        let g7 = c.by_name("gamma_7").unwrap().clone();
        let r = c.cap_monomial(&g7, &Monomial::gen(&b));
        assert_eq!(r.chain.keys().map(dual_name).collect::<Vec<_>>(), vec!["gamma_5"]);
    }
}
