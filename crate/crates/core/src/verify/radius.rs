//! The Bernardi radius problem: F in the beta-shifted class and
//! alpha + c > 0 guarantee the inverse-transform function f stays in the
//! class on |z| < r0(alpha, c), where
//!
//!   r0(alpha, c) = (sqrt(1 + (alpha+c)^2) - 1)/(alpha + c),
//!
//! sharp for the extremal kernel p(z) = (1+z)/(1-z). The harness builds F
//! from a prescribed D^n F^alpha / (alpha^n z^alpha) = beta + (1-beta) p,
//! recovers f through the inverse multiplier, and bisects on r for the
//! first circle where min_theta Re D^n f^alpha / (alpha^n z^alpha) drops
//! below beta. Real parts of analytic functions take their disk minimum on
//! the boundary circle, so the circle test is monotone in r and the
//! bisection is well posed.

use num_complex::Complex64;
use serde::Serialize;

use crate::config::{GRID_R_CAP, RADIUS_ANGLES, RADIUS_BISECT_TOL};
use crate::error::{Error, Result};
use crate::funclasses::HerglotzFn;
use crate::gftops::bernardi_inverse_power;
use crate::powseries::{PowerRep, TruncSeries};

/// Closed-form radius, a function of s = alpha + c alone: strictly
/// increasing in s with range (0, 1). Evaluated as s/(1 + sqrt(1 + s^2))
/// to avoid cancellation at small s.
pub fn r0_closed_form(alpha: f64, c: f64) -> Result<f64> {
    let s = alpha + c;
    if !(s > 0.0) {
        return Err(Error::Param(format!(
            "need alpha + c > 0, got alpha = {alpha}, c = {c}"
        )));
    }
    Ok(s / (1.0 + (1.0 + s * s).sqrt()))
}

/// Parameters of one radius experiment.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RadiusParams {
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
    pub c: f64,
}

impl RadiusParams {
    pub fn new(n: usize, alpha: f64, beta: f64, c: f64) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(Error::Param(format!("alpha must be > 0, got {alpha}")));
        }
        if !(0.0..1.0).contains(&beta) {
            return Err(Error::Param(format!("beta must lie in [0, 1), got {beta}")));
        }
        if !(alpha + c > 0.0) {
            return Err(Error::Param(format!(
                "need alpha + c > 0, got alpha = {alpha}, c = {c}"
            )));
        }
        Ok(Self { n, alpha, beta, c })
    }
}

/// Bisection window and angular resolution.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RadiusSearch {
    pub r_lo: f64,
    pub r_hi: f64,
    pub tol: f64,
    pub angles: usize,
}

impl Default for RadiusSearch {
    fn default() -> Self {
        Self { r_lo: 0.05, r_hi: GRID_R_CAP, tol: RADIUS_BISECT_TOL, angles: RADIUS_ANGLES }
    }
}

/// Empirical radius vs the closed form.
#[derive(Debug, Clone, Serialize)]
pub struct RadiusResult {
    pub params: RadiusParams,
    pub empirical_radius: f64,
    pub closed_form_radius: f64,
    pub gap: f64,
    /// Angle of the first-violation witness (radians).
    pub witness_angle: f64,
    /// No circle up to r_hi violated the bound; `empirical_radius` is then
    /// the search cap, not a crossing.
    pub no_violation_found: bool,
}

fn circle_min(series: &TruncSeries, r: f64, angles: usize) -> (f64, f64) {
    let mut min_re = f64::INFINITY;
    let mut min_angle = 0.0;
    for j in 0..angles {
        let theta = std::f64::consts::TAU * j as f64 / angles as f64;
        let v = series.eval_unchecked(Complex64::from_polar(r, theta)).re;
        if v < min_re {
            min_re = v;
            min_angle = theta;
        }
    }
    (min_re, min_angle)
}

/// Builds f from the prescribed extremal data and bisects for the largest
/// radius on which the class bound survives the inverse Bernardi
/// transform.
pub fn bernardi_radius_empirical(
    params: RadiusParams,
    p: &HerglotzFn,
    search: RadiusSearch,
    order: usize,
) -> Result<RadiusResult> {
    let RadiusParams { n, alpha, beta, c } = params;
    if !(search.r_lo > 0.0 && search.r_lo < search.r_hi && search.r_hi <= GRID_R_CAP) {
        return Err(Error::Param(format!(
            "need 0 < r_lo < r_hi <= {GRID_R_CAP}, got [{}, {}]",
            search.r_lo, search.r_hi
        )));
    }

    // D^n F^alpha / (alpha^n z^alpha) = beta + (1 - beta) p.
    let target = p
        .series()
        .resized(order)
        .scale_real(1.0 - beta)
        .add(&TruncSeries::constant(Complex64::new(beta, 0.0), order))?;
    let big_f = PowerRep::from_normalized_ratio(&target, alpha, n)?.unpower()?;
    let f = bernardi_inverse_power(&big_f.power_rep(alpha)?, c)?.unpower()?;
    let ratio = f.power_rep(alpha)?.normalized_ratio_series(n);

    let closed_form_radius = r0_closed_form(alpha, c)?;
    let margin = |r: f64| circle_min(&ratio, r, search.angles).0 - beta;

    if margin(search.r_lo) < 0.0 {
        return Err(Error::Param(format!(
            "bound already violated at r_lo = {}; shrink the window",
            search.r_lo
        )));
    }
    if margin(search.r_hi) >= 0.0 {
        let (_, angle) = circle_min(&ratio, search.r_hi, search.angles);
        return Ok(RadiusResult {
            params,
            empirical_radius: search.r_hi,
            closed_form_radius,
            gap: (search.r_hi - closed_form_radius).abs(),
            witness_angle: angle,
            no_violation_found: true,
        });
    }

    let (mut lo, mut hi) = (search.r_lo, search.r_hi);
    while hi - lo > search.tol {
        let mid = 0.5 * (lo + hi);
        if margin(mid) < 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let empirical_radius = 0.5 * (lo + hi);
    let (_, witness_angle) = circle_min(&ratio, hi, search.angles);
    Ok(RadiusResult {
        params,
        empirical_radius,
        closed_form_radius,
        gap: (empirical_radius - closed_form_radius).abs(),
        witness_angle,
        no_violation_found: false,
    })
}

/// Exact-atom minimum over a circle of Re[(s p(z) + z p'(z))]/s, the
/// functional controlling the radius bound; positive for every r below
/// the closed-form radius.
pub fn functional_min(p: &HerglotzFn, s: f64, r: f64, angles: usize) -> f64 {
    let mut min_re = f64::INFINITY;
    for j in 0..angles {
        let theta = std::f64::consts::TAU * j as f64 / angles as f64;
        let z = Complex64::from_polar(r, theta);
        let v = (s * p.eval_exact(z) + p.z_dp_exact(z)).re / s;
        min_re = min_re.min(v);
    }
    min_re
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_benchmark_values() {
        assert!((r0_closed_form(1.0, 0.0).unwrap() - (2.0_f64.sqrt() - 1.0)).abs() < 1e-15);
        assert!((r0_closed_form(1.0, 1.0).unwrap() - (5.0_f64.sqrt() - 1.0) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn closed_form_depends_only_on_the_sum() {
        let a = r0_closed_form(1.0, 1.5).unwrap();
        let b = r0_closed_form(2.0, 0.5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn closed_form_limits() {
        // r0 ~ s/2 as s -> 0+, and -> 1 as s -> infinity.
        let small = r0_closed_form(1e-9, 0.0).unwrap();
        assert!((small - 0.5e-9).abs() < 1e-18);
        let large = r0_closed_form(1e9, 0.0).unwrap();
        assert!(large > 1.0 - 1e-8 && large < 1.0);
    }

    #[test]
    fn closed_form_rejects_nonpositive_sum() {
        assert!(r0_closed_form(1.0, -1.0).is_err());
        assert!(r0_closed_form(0.5, -0.75).is_err());
    }

    #[test]
    fn extremal_radius_base_case() {
        let params = RadiusParams::new(0, 1.0, 0.0, 0.0).unwrap();
        let p = HerglotzFn::mobius_extremal(256);
        let res =
            bernardi_radius_empirical(params, &p, RadiusSearch::default(), 256).unwrap();
        assert!(!res.no_violation_found);
        assert!(res.gap < 1e-4, "gap {}", res.gap);
        assert!(
            (res.witness_angle - std::f64::consts::PI).abs() < 0.02,
            "witness angle {}",
            res.witness_angle
        );
    }

    #[test]
    fn generic_sample_stays_above_the_guarantee() {
        let params = RadiusParams::new(0, 1.0, 0.0, 1.0).unwrap();
        let p = HerglotzFn::sample(3, 1234, 256).unwrap();
        let res =
            bernardi_radius_empirical(params, &p, RadiusSearch::default(), 256).unwrap();
        assert!(
            res.no_violation_found
                || res.empirical_radius >= res.closed_form_radius - RADIUS_BISECT_TOL
        );
    }

    #[test]
    fn functional_positive_below_radius() {
        let p = HerglotzFn::sample(2, 99, 64).unwrap();
        let s = 1.5;
        let r0 = r0_closed_form(1.0, 0.5).unwrap();
        for &frac in &[0.3, 0.6, 0.9, 0.99] {
            assert!(functional_min(&p, s, frac * r0, 1024) > 0.0);
        }
    }
}
