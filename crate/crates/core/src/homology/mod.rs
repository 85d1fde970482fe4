//! Cohomology of CDGAs in a bounded degree window.

mod basis;
pub mod linalg;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;
use serde_json::{json, Map, Value};

pub use basis::{basis_in_degree, basis_in_degree_limited, Complex, IdealPlusUnit, DEFAULT_BASIS_LIMIT};
use linalg::QMatrix;

use crate::algebra::{Monomial, Morphism, Polynomial};
use crate::error::{Error, Result};
use crate::parallel::{self, Execution};
use crate::rational::Rational;

pub const DEFAULT_WINDOW_CAP: i64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DegreeWindow {
    pub lo: i64,
    pub hi: i64,
}

impl DegreeWindow {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        DegreeWindow::with_cap(lo, hi, DEFAULT_WINDOW_CAP)
    }

    pub fn with_cap(lo: i64, hi: i64, cap: i64) -> Result<Self> {
        if lo < 0 || hi < lo {
            return Err(Error::Parameter(format!("bad window [{lo}, {hi}]")));
        }
        if hi - lo > cap {
            return Err(Error::WindowCap { lo, hi, cap });
        }
        Ok(DegreeWindow { lo, hi })
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl fmt::Display for DegreeWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub basis_limit: usize,
    pub execution: Execution,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            basis_limit: DEFAULT_BASIS_LIMIT,
            execution: Execution::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub window: DegreeWindow,
    pub ranks: BTreeMap<i64, usize>,
}

impl BettiTable {
    pub fn rank(&self, k: i64) -> usize {
        self.ranks.get(&k).copied().unwrap_or(0)
    }

    pub fn as_vec(&self) -> Vec<usize> {
        self.window.degrees().map(|k| self.rank(k)).collect()
    }

    pub fn to_json(&self) -> Value {
        let mut ranks = Map::new();
        for (k, r) in &self.ranks {
            ranks.insert(k.to_string(), json!(r));
        }
        json!({"window": [self.window.lo, self.window.hi], "ranks": Value::Object(ranks)})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let w = v
            .get("window")
            .and_then(Value::as_array)
            .filter(|w| w.len() == 2)
            .ok_or_else(|| Error::Json("missing window".into()))?;
        let lo = w[0].as_i64().ok_or_else(|| Error::Json("bad window".into()))?;
        let hi = w[1].as_i64().ok_or_else(|| Error::Json("bad window".into()))?;
        let window = DegreeWindow::new(lo, hi)?;
        let mut ranks = BTreeMap::new();
        for (k, r) in v
            .get("ranks")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Json("missing ranks".into()))?
        {
            let k: i64 = k.parse().map_err(|_| Error::Json(format!("bad degree {k}")))?;
            let r = r.as_u64().ok_or_else(|| Error::Json("bad rank".into()))?;
            ranks.insert(k, r as usize);
        }
        Ok(BettiTable { window, ranks })
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .ranks
            .iter()
            .map(|(k, r)| format!("H^{k}={r}"))
            .collect();
        write!(f, "[{}] {}", self.window, parts.join(" "))
    }
}

fn index_of(basis: &[Monomial]) -> HashMap<&Monomial, usize> {
    basis.iter().enumerate().map(|(i, m)| (m, i)).collect()
}

/// Coordinates of `p` in `basis`; fails if `p` leaves the span.
fn coordinates(p: &Polynomial, idx: &HashMap<&Monomial, usize>, len: usize) -> Result<Vec<Rational>> {
    let mut v = vec![Rational::zero(); len];
    for (m, c) in p.terms() {
        let i = idx
            .get(m)
            .ok_or_else(|| Error::Truncation(format!("monomial {m} outside the basis")))?;
        v[*i] = c.clone();
    }
    Ok(v)
}

/// Matrix of `d` from `src` (columns) to `tgt` (rows).
pub fn differential_matrix<C: Complex + ?Sized>(
    c: &C,
    src: &[Monomial],
    tgt: &[Monomial],
) -> Result<QMatrix> {
    let idx = index_of(tgt);
    let mut m = QMatrix::zero(tgt.len(), 0);
    for mono in src {
        let dm = c.differential(&Polynomial::from(mono.clone()));
        m.push_col(coordinates(&dm, &idx, tgt.len())?);
    }
    Ok(m)
}

/// Bases in degrees `lo-1 ..= hi+1` and ranks of `d_k` for `k` in `lo-1 ..= hi`.
struct Ranks {
    bases: BTreeMap<i64, Vec<Monomial>>,
    ranks: BTreeMap<i64, usize>,
}

fn compute_ranks<C: Complex + ?Sized>(c: &C, w: DegreeWindow, opts: Options) -> Result<Ranks> {
    let degs: Vec<i64> = (w.lo - 1..=w.hi + 1).collect();
    let bases: BTreeMap<i64, Vec<Monomial>> = parallel::map(opts.execution, degs, |k| {
        c.basis(k, opts.basis_limit).map(|b| (k, b))
    })
    .into_iter()
    .collect::<Result<_>>()?;
    let ks: Vec<i64> = (w.lo - 1..=w.hi).collect();
    let ranks = parallel::map(opts.execution, ks, |k| {
        let m = differential_matrix(c, &bases[&k], &bases[&(k + 1)])?;
        Ok((k, m.rank_with(opts.execution)))
    })
    .into_iter()
    .collect::<Result<_>>()?;
    Ok(Ranks { bases, ranks })
}

pub fn betti_numbers<C: Complex + ?Sized>(c: &C, w: DegreeWindow) -> Result<BettiTable> {
    betti_numbers_with(c, w, Options::default())
}

pub fn betti_numbers_with<C: Complex + ?Sized>(
    c: &C,
    w: DegreeWindow,
    opts: Options,
) -> Result<BettiTable> {
    let r = compute_ranks(c, w, opts)?;
    let ranks = w
        .degrees()
        .map(|k| (k, r.bases[&k].len() - r.ranks[&k] - r.ranks[&(k - 1)]))
        .collect();
    Ok(BettiTable { window: w, ranks })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeDiagnostic {
    pub degree: i64,
    pub source_rank: usize,
    pub target_rank: usize,
    pub induced_rank: usize,
}

impl DegreeDiagnostic {
    pub fn is_iso(&self) -> bool {
        self.source_rank == self.target_rank && self.induced_rank == self.source_rank
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiIsoReport {
    pub degrees: Vec<DegreeDiagnostic>,
}

impl QuasiIsoReport {
    pub fn is_quasi_iso(&self) -> bool {
        self.degrees.iter().all(DegreeDiagnostic::is_iso)
    }

    pub fn first_failure(&self) -> Option<&DegreeDiagnostic> {
        self.degrees.iter().find(|d| !d.is_iso())
    }
}

/// Compares `H(phi)` degreewise, with the target algebra as target complex.
pub fn is_quasi_iso(phi: &Morphism, w: DegreeWindow) -> Result<QuasiIsoReport> {
    is_quasi_iso_into(phi, phi.target(), w, Options::default())
}

/// As [`is_quasi_iso`] but into a subcomplex of the target algebra that
/// contains the image of `phi`.
pub fn is_quasi_iso_into<C: Complex + ?Sized>(
    phi: &Morphism,
    target: &C,
    w: DegreeWindow,
    opts: Options,
) -> Result<QuasiIsoReport> {
    let src = compute_ranks(phi.source(), w, opts)?;
    let tgt = compute_ranks(target, w, opts)?;
    let ks: Vec<i64> = w.degrees().collect();
    let degrees = parallel::map(opts.execution, ks, |k| {
        let sb = &src.bases[&k];
        let tb = &tgt.bases[&k];
        let source_rank = sb.len() - src.ranks[&k] - src.ranks[&(k - 1)];
        let target_rank = tb.len() - tgt.ranks[&k] - tgt.ranks[&(k - 1)];
        // cocycles of the source
        let dk = differential_matrix(phi.source(), sb, &src.bases[&(k + 1)])?;
        let cocycles = dk.nullspace();
        // boundaries of the target plus images of cocycles
        let mut m = differential_matrix(target, &tgt.bases[&(k - 1)], tb)?;
        let boundary_rank = tgt.ranks[&(k - 1)];
        let idx = index_of(tb);
        for z in cocycles {
            let mut p = Polynomial::zero();
            for (mono, c) in sb.iter().zip(z) {
                p.add_term(mono.clone(), c);
            }
            let img = phi.apply(&p)?;
            m.push_col(coordinates(&img, &idx, tb.len())?);
        }
        let induced_rank = m.rank_with(opts.execution) - boundary_rank;
        Ok(DegreeDiagnostic {
            degree: k,
            source_rank,
            target_rank,
            induced_rank,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(QuasiIsoReport { degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Cdga, Generator};

    #[test]
    fn exterior_on_x3() {
        let x = Generator::new("x", 3);
        let a = Cdga::new(vec![x], []).unwrap();
        let t = betti_numbers(&a, DegreeWindow::new(0, 4).unwrap()).unwrap();
        assert_eq!(t.as_vec(), vec![1, 0, 0, 1, 0]);
        let zero = Morphism::new(a.clone(), a.clone(), []).unwrap();
        let rep = is_quasi_iso(&zero, DegreeWindow::new(0, 3).unwrap()).unwrap();
        assert!(!rep.is_quasi_iso());
        assert_eq!(rep.first_failure().unwrap().degree, 3);
        assert!(is_quasi_iso(&Morphism::identity(&a), DegreeWindow::new(0, 3).unwrap())
            .unwrap()
            .is_quasi_iso());
    }

    #[test]
    fn truncated_projective_space() {
        // Λ(b, y), dy = b^3 is CP^2
        let b = Generator::new("b", 2);
        let y = Generator::new("y", 5);
        let a = Cdga::new(
            vec![b.clone(), y],
            [("y".to_string(), Polynomial::gen(&b).pow(3))],
        )
        .unwrap();
        let t = betti_numbers(&a, DegreeWindow::new(0, 8).unwrap()).unwrap();
        assert_eq!(t.as_vec(), vec![1, 0, 1, 0, 1, 0, 0, 0, 0]);
        let json = t.to_json();
        assert_eq!(BettiTable::from_json(&json).unwrap(), t);
    }

    #[test]
    fn window_cap() {
        assert!(matches!(DegreeWindow::new(0, 65), Err(Error::WindowCap { .. })));
        assert!(DegreeWindow::new(0, 64).is_ok());
    }
}
