//! The sharp derivative bound for the Caratheodory class:
//!
//!   |z p'(z)| <= 2r/(1 - r^2) Re p(z)   on |z| = r,
//!
//! with equality for p(z) = (1 + z)/(1 - z) at z = r. Both sides are
//! evaluated exactly from the atomic representation, so the only slack is
//! floating-point noise.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::funclasses::HerglotzFn;

/// Worst slack found scanning the bound over circles.
#[derive(Debug, Clone, Serialize)]
pub struct DerivBoundReport {
    /// max over all sampled z of |z p'(z)| - (2r/(1-r^2)) Re p(z).
    /// Nonpositive (up to noise) when the bound holds.
    pub max_violation: f64,
    pub worst_radius: f64,
    pub worst_angle: f64,
    pub radii: Vec<f64>,
    pub angles: usize,
}

/// Scans |z p'| against the bound on each circle |z| = r.
pub fn derivative_bound_check(
    p: &HerglotzFn,
    radii: &[f64],
    angles: usize,
) -> Result<DerivBoundReport> {
    if angles == 0 {
        return Err(Error::Param("need at least one angle".into()));
    }
    for &r in radii {
        if !(r > 0.0 && r < 1.0) {
            return Err(Error::Param(format!("radii must lie in (0, 1), got {r}")));
        }
    }
    let mut max_violation = f64::NEG_INFINITY;
    let mut worst_radius = 0.0;
    let mut worst_angle = 0.0;
    for &r in radii {
        let factor = 2.0 * r / (1.0 - r * r);
        for j in 0..angles {
            let theta = std::f64::consts::TAU * j as f64 / angles as f64;
            let z = Complex64::from_polar(r, theta);
            let lhs = p.z_dp_exact(z).norm();
            let bound = factor * p.eval_exact(z).re;
            let violation = lhs - bound;
            if violation > max_violation {
                max_violation = violation;
                worst_radius = r;
                worst_angle = theta;
            }
        }
    }
    Ok(DerivBoundReport {
        max_violation,
        worst_radius,
        worst_angle,
        radii: radii.to_vec(),
        angles,
    })
}

/// Largest gap |bound - |z p'|| at z = r (angle 0) over the given radii for
/// the extremal kernel, where the bound is attained.
pub fn extremal_equality_gap(radii: &[f64]) -> f64 {
    let p = HerglotzFn::mobius_extremal(4);
    radii
        .iter()
        .map(|&r| {
            let z = Complex64::new(r, 0.0);
            let lhs = p.z_dp_exact(z).norm();
            let bound = 2.0 * r / (1.0 - r * r) * p.eval_exact(z).re;
            (lhs - bound).abs()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremal_kernel_saturates_at_half() {
        // Both sides equal 4 at r = 1/2: |z p'| = 2*0.5/0.25 and the
        // bound is (1/0.75) * 3.
        let p = HerglotzFn::mobius_extremal(4);
        let z = Complex64::new(0.5, 0.0);
        assert!((p.z_dp_exact(z).norm() - 4.0).abs() < 1e-14);
        let bound = 2.0 * 0.5 / 0.75 * p.eval_exact(z).re;
        assert!((bound - 4.0).abs() < 1e-14);
    }

    #[test]
    fn constant_one_has_slack_everywhere() {
        let p = HerglotzFn::constant_one(4);
        let radii = [0.2, 0.5, 0.8];
        let report = derivative_bound_check(&p, &radii, 256).unwrap();
        // Left side is 0, bound is 2r/(1-r^2) > 0.
        assert!(report.max_violation < -0.4);
    }

    #[test]
    fn random_samples_respect_the_bound() {
        let radii: Vec<f64> = (1..=9).map(|k| k as f64 / 10.0).collect();
        for seed in 0..5 {
            let p = HerglotzFn::sample(3, seed, 8).unwrap();
            let report = derivative_bound_check(&p, &radii, 1024).unwrap();
            assert!(report.max_violation <= 1e-10, "seed {seed}: {report:?}");
        }
    }

    #[test]
    fn extremal_equality_across_radii() {
        let radii: Vec<f64> = (1..=9).map(|k| k as f64 / 10.0).collect();
        assert!(extremal_equality_gap(&radii) < 1e-10);
    }

    #[test]
    fn invalid_radii_rejected() {
        let p = HerglotzFn::constant_one(4);
        assert!(derivative_bound_check(&p, &[1.0], 64).is_err());
        assert!(derivative_bound_check(&p, &[0.5], 0).is_err());
    }
}
