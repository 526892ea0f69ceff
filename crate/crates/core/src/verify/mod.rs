//! Numerical verification harnesses: admissibility sampling for the test
//! functions behind the implication machinery, the sharp derivative bound
//! for Caratheodory functions, implication scans with constructed and
//! falsification families, and the Bernardi radius bisection against its
//! closed form.

mod bound;
mod psi;
mod radius;
mod scans;
pub mod suites;

pub use bound::{derivative_bound_check, extremal_equality_gap, DerivBoundReport};
pub use psi::{psi_admissibility, PsiFunction, PsiId, PsiReport};
pub use radius::{
    bernardi_radius_empirical, functional_min, r0_closed_form, RadiusParams, RadiusResult,
    RadiusSearch,
};
pub use scans::{
    constructed_scan, falsification_scan, theorem_scan, Counterexample, ImplicationScanReport,
    ScanFamilyReport, TheoremId,
};
