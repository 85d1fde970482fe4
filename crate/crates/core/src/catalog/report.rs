use num_bigint::BigInt;
use serde_json::{json, Value};

use super::{characteristic_of_degree, h1_torsion_order, orbit_iso_decision, sections_closed_form};
use crate::algebra::json::bigint_to_json;
use crate::error::Result;
use crate::homology::{betti_numbers_with, BettiTable, DegreeWindow, Options};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: u32,
    pub d: i64,
    /// `None` outside the range `d >= 1` where the torsion order is defined
    pub h1_torsion_order: Option<BigInt>,
    pub betti: BettiTable,
    pub orbit_iso: bool,
    pub orbit_kernel_degrees: Vec<i64>,
    pub characteristic: BigInt,
}

impl InvariantReport {
    /// Betti numbers are listed for nonzero ranks only.
    pub fn to_json(&self) -> Value {
        let betti: serde_json::Map<String, Value> = self
            .betti
            .ranks
            .iter()
            .filter(|(_, r)| **r > 0)
            .map(|(k, r)| (k.to_string(), json!(r)))
            .collect();
        json!({
            "n": self.n,
            "d": self.d,
            "h1TorsionOrder": self.h1_torsion_order.as_ref().map(bigint_to_json),
            "orbitIso": self.orbit_iso,
            "orbitKernelDegrees": self.orbit_kernel_degrees,
            "characteristic": bigint_to_json(&self.characteristic),
            "bettiWindow": [self.betti.window.lo, self.betti.window.hi],
            "betti": betti,
        })
    }
}

/// Invariants of the degree-`d` component. The Betti window defaults to
/// `[0, n(n+2)]`, which reaches the top class of the component.
pub fn invariant_report(n: u32, d: i64, window: Option<DegreeWindow>, opts: Options) -> Result<InvariantReport> {
    let w = match window {
        Some(w) => w,
        None => DegreeWindow::new(0, (n * (n + 2)) as i64)?,
    };
    let comp = sections_closed_form(n, d)?;
    let betti = betti_numbers_with(&comp, w, opts)?;
    let orbit = orbit_iso_decision(n, d)?;
    Ok(InvariantReport {
        n,
        d,
        h1_torsion_order: h1_torsion_order(n, d).ok(),
        betti,
        orbit_iso: orbit.iso,
        orbit_kernel_degrees: orbit.kernel_degrees,
        characteristic: characteristic_of_degree(n, d),
    })
}
