//! Default orders, caps and tolerances used across the crate.
//!
//! Every threshold that a check or harness relies on is named here rather
//! than inlined at the call site. Callers can override the knobs that are
//! plumbed through (`order`, grid radii, angles, margins); the rest are
//! fixed properties of double-precision arithmetic on this problem class.

/// Default truncation order (degree) for series pipelines.
///
/// Coefficient-space identities and all radius searches below |z| ~ 0.7
/// converge far below their tolerances by order 32; 64 leaves margin.
pub const DEFAULT_ORDER: usize = 64;

/// Truncation order used by grid harnesses that evaluate on the 0.95 ring.
///
/// A degree-N partial sum of a series with Caratheodory-bounded
/// coefficients (|c_k| <= 2) carries a tail of up to 2*r^(N+1)/(1-r) on
/// |z| = r. At r = 0.95 that is ~4e-2 for N = 64 but ~8e-5 for N = 256,
/// small against the ~1e-2 real-part margins the scans resolve.
pub const SCAN_ORDER: usize = 256;

/// Hard cap on |z| accepted by series evaluation.
pub const EVAL_R_MAX: f64 = 0.995;

/// Largest radius on which real-part verdicts are asserted by default.
pub const GRID_R_CAP: f64 = 0.95;

/// Margin for strict-inequality verdicts on grids. Minima within this band
/// of the bound are reported as boundary cases, not failures; sharp
/// extremal functions sit exactly on their bounds.
pub const GRID_MARGIN: f64 = 1e-9;

/// Tolerance for coefficient-space identity checks (round trips, chain
/// identities) at default orders.
pub const COEFF_TOL: f64 = 1e-11;

/// Tolerance for exp/log mutual inversion at order 32.
pub const EXP_LOG_ROUNDTRIP_TOL: f64 = 1e-12;

/// Tolerance for fractional-power round trips at order 32.
pub const POW_ROUNDTRIP_TOL: f64 = 1e-11;

/// Scale-normalized residual bound for the Bazilevic differential identity.
pub const BAZILEVIC_RESIDUAL_TOL: f64 = 1e-10;

/// Residual bound for the one-step chain identity D(f^a) = a f^a (Df/f).
pub const CHAIN_RESIDUAL_TOL: f64 = 1e-11;

/// Bernardi multiplier rule vs numerical quadrature, relative, at z = 0.5.
pub const BERNARDI_QUADRATURE_RTOL: f64 = 1e-8;

/// Bernardi round trip through the coefficient multipliers, per coefficient.
pub const BERNARDI_ROUNDTRIP_TOL: f64 = 1e-14;

/// Derivative-bound slack allowed for Caratheodory-class functions
/// (atom-exact evaluation leaves only floating-point noise).
pub const DERIV_BOUND_TOL: f64 = 1e-10;

/// Margin for the admissibility sampling checks on test functions.
pub const PSI_MARGIN: f64 = 1e-12;

/// Allowed gap between the bisection radius and the closed form.
pub const RADIUS_GAP_TOL: f64 = 1e-4;

/// Allowed deviation of the violation witness angle from pi (radians).
pub const WITNESS_ANGLE_TOL: f64 = 0.02;

/// Bisection resolution in r for the radius search.
pub const RADIUS_BISECT_TOL: f64 = 1e-5;

/// Angles per circle in the radius search.
pub const RADIUS_ANGLES: usize = 1024;

/// Renormalization snap tolerance: operator outputs whose leading
/// coefficients drift from (0, 1) by more than this fail loudly instead of
/// being silently snapped back.
pub const RENORM_TOL: f64 = 1e-8;

/// Environment variable capping the rayon worker count.
pub const THREADS_ENV: &str = "BAZLAB_THREADS";
