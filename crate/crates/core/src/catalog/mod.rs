//! Named models, maps and closed-form invariants, built along independent
//! routes so that the routes can be compared.

mod chern;
mod components;
mod gr1c;
mod gr2;
mod key;
mod report;
mod thom;

pub use chern::{bu_model, chern_algebra, chern_tensor_line, h_map, h_map_composite, h_target, real_pontryagin_of_complex};
pub use components::{
    characteristic_of_degree, eta_classes, explicit_pu_cocycles, h1_torsion_order, orbit_borel_lift,
    orbit_coefficient, orbit_iso_decision, orbit_map, orbit_target, pu_cocycles, sections_borel,
    sections_closed_form, t_name, EtaClasses, OrbitDecision, U_NAME,
};
pub use gr1c::{
    barc_closed_form, combinatorial_identities_check, gr1c_absolute, gr1c_borel, gr1c_eliminated, gr1c_raw,
    relative_dn1_alternative, IdentityReport,
};
pub use gr2::{
    bso_model, gr2_borel, gr2_eliminated, gr2_phi, gr2_phi_absolute, gr2_phi_quasi_iso, gr2_raw, gr2_thom_minimal,
    gr2_thom_over_cpn, iota, DzSign,
};
pub use key::{build, cached_json, CatalogEntry, CatalogKey, Family};
pub use report::{invariant_report, InvariantReport};
pub use thom::{thom_borel_printed, thom_complex_models, thom_from_grassmannian, thom_rel_printed, ThomModels};
