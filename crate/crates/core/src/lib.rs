//! Computational toolkit for geometric function theory on the unit disk.
//!
//! The crate computes with truncated complex power series to build and
//! test the classical function classes tied to Bazilevic-type conditions:
//! Caratheodory-class functions from finite Herglotz measures, starlike
//! functions, members of the Salagean-power classes
//! Re D^n f^alpha / (alpha^n z^alpha) > beta, the Bazilevic integral
//! construction, and the Bernardi integral operator together with its
//! sharp inverse-radius problem.
//!
//! Layout:
//! - [`powseries`]: the series substrate (arithmetic, exp/log, principal
//!   powers, Salagean multipliers, evaluation).
//! - [`funclasses`]: class constructions and membership scans on disk grids.
//! - [`gftops`]: the Bazilevic and Bernardi operators as series transforms.
//! - [`verify`]: admissibility sampling, the sharp derivative bound,
//!   implication scans, and the radius bisection with its closed form.

pub mod config;
pub mod error;
pub mod funclasses;
pub mod gftops;
pub mod powseries;
pub mod verify;

pub use error::{Error, Result};
pub use funclasses::{
    analytic_from_ratio, membership, membership_series, starlike_from_p, Atom, ClassId,
    ClassParams, DiskGrid, HerglotzFn, MembershipReport,
};
pub use gftops::{
    bazilevic_construct, bazilevic_residual, bernardi, bernardi_inverse, bernardi_inverse_power,
    bernardi_power, chain_identity_check, ChainIdentityReport,
};
pub use powseries::{AnalyticFn, PowerRep, TruncSeries};
pub use verify::{
    bernardi_radius_empirical, psi_admissibility, r0_closed_form, theorem_scan, PsiFunction,
    PsiId, RadiusParams, RadiusResult, RadiusSearch, TheoremId,
};
