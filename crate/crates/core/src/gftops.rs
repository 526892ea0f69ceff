//! Integral operators as series transforms: the Bazilevic construction
//! f = { alpha int_0^z p(v) g(v)^alpha / v dv }^(1/alpha) with its
//! differential residual z f' f^(alpha-1) / g^alpha = p, and the Bernardi
//! transform F^alpha = (alpha + c) z^(-c) int_0^z t^(c-1) f(t)^alpha dt,
//! which is the coefficient multiplier (alpha+c)/(alpha+c+k) in power
//! representation.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::funclasses::HerglotzFn;
use crate::powseries::{relative_residual_below_top, AnalyticFn, PowerRep, TruncSeries};

fn check_bernardi_params(alpha: f64, c: f64) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(Error::Param(format!("alpha must be > 0, got {alpha}")));
    }
    let s = alpha + c;
    if !(s > 0.0) {
        return Err(Error::Param(format!(
            "need alpha + c > 0, got alpha = {alpha}, c = {c}"
        )));
    }
    Ok(s)
}

/// Builds the Bazilevic-type function from p, a starlike base g and
/// alpha > 0. In power representation: with G = (g/z)^alpha, the integral
/// becomes the termwise rule q_k = alpha (p G)_k / (alpha + k), and
/// f = z q^(1/alpha).
pub fn bazilevic_construct(p: &HerglotzFn, g: &AnalyticFn, alpha: f64) -> Result<AnalyticFn> {
    if !(alpha > 0.0) {
        return Err(Error::Param(format!("alpha must be > 0, got {alpha}")));
    }
    let big_g = g.power_rep(alpha)?;
    let pg = p.series().resized(big_g.h().order()).mul(big_g.h())?;
    let coeffs = pg
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * alpha / (alpha + k as f64))
        .collect();
    PowerRep::from_h(TruncSeries::new(coeffs)?, alpha)?.unpower()
}

/// Scale-normalized residual of the differential identity
/// alpha^(-1) D(f^alpha) = p g^alpha (the cross-multiplied form of
/// z f' f^(alpha-1) / g^alpha = p, staying clear of f^(alpha-1) branch
/// bookkeeping). Compares coefficients of alpha^(-1) D(f^alpha)/z^alpha
/// against (p G)_k relative to their magnitude, over indices below the
/// top; returns the largest residual.
pub fn bazilevic_residual(
    f: &AnalyticFn,
    g: &AnalyticFn,
    alpha: f64,
    p: &HerglotzFn,
) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(Error::Param(format!("alpha must be > 0, got {alpha}")));
    }
    let lhs = f
        .power_rep(alpha)?
        .salagean_power()
        .h()
        .scale_real(1.0 / alpha);
    let big_g = g.power_rep(alpha)?;
    let rhs = p.series().resized(big_g.h().order()).mul(big_g.h())?;
    Ok(relative_residual_below_top(&lhs, &rhs))
}

/// Bernardi transform on a power representation: the coefficient
/// multiplier b_k = (alpha + c)/(alpha + c + k).
pub fn bernardi_power(p: &PowerRep, c: f64) -> Result<PowerRep> {
    let s = check_bernardi_params(p.alpha(), c)?;
    let coeffs = p
        .h()
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, x)| x * s / (s + k as f64))
        .collect();
    PowerRep::from_h(TruncSeries::new(coeffs)?, p.alpha())
}

/// Inverse transform from (alpha + c) f^alpha = D F^alpha + c F^alpha:
/// the multiplier a_k = (alpha + c + k)/(alpha + c), exactly undoing
/// [`bernardi_power`].
pub fn bernardi_inverse_power(p: &PowerRep, c: f64) -> Result<PowerRep> {
    let s = check_bernardi_params(p.alpha(), c)?;
    let coeffs = p
        .h()
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, x)| x * (s + k as f64) / s)
        .collect();
    PowerRep::from_h(TruncSeries::new(coeffs)?, p.alpha())
}

/// Bernardi transform of a normalized function, alpha + c > 0. Fixes the
/// identity function for every admissible (alpha, c).
pub fn bernardi(f: &AnalyticFn, alpha: f64, c: f64) -> Result<AnalyticFn> {
    bernardi_power(&f.power_rep(alpha)?, c)?.unpower()
}

/// Inverse of [`bernardi`] on normalized functions.
pub fn bernardi_inverse(big_f: &AnalyticFn, alpha: f64, c: f64) -> Result<AnalyticFn> {
    bernardi_inverse_power(&big_f.power_rep(alpha)?, c)?.unpower()
}

/// Diagnostics for the chain identity linking the Salagean operator to
/// powers: the one-step identity
///   ratio_n := D^(n+1) f^alpha / D^n f^alpha = alpha + z P_n' / P_n,
/// where P_n = D^n f^alpha / (alpha^n z^alpha), checked for each n; plus a
/// probe of whether ratio_n is actually independent of n for this f (it
/// generally is not; f = z is the constant-ratio case).
#[derive(Debug, Clone, Serialize)]
pub struct ChainIdentityReport {
    /// Largest one-step residual over n = 0..=n_max.
    pub max_residual: f64,
    pub per_n_residual: Vec<f64>,
    /// Max coefficient gap between ratio_0 and ratio_1.
    pub independence_deviation: f64,
    /// Whether ratio_n agreed across n to 1e-9.
    pub n_independent: bool,
}

/// Checks the one-step chain identity for n = 0..=n_max and probes
/// n-independence of the ratio D^(n+1) f^alpha / D^n f^alpha.
pub fn chain_identity_check(f: &AnalyticFn, alpha: f64, n_max: usize) -> Result<ChainIdentityReport> {
    let p0 = f.power_rep(alpha)?;
    let mut per_n_residual = Vec::with_capacity(n_max + 1);
    let mut ratios = Vec::with_capacity(n_max + 2);
    for n in 0..=n_max {
        let num = p0.salagean_n_power(n + 1);
        let den = p0.salagean_n_power(n);
        let ratio = num.h().div(den.h())?;

        let pn = p0.normalized_ratio_series(n);
        let alt = pn
            .salagean()
            .div(&pn)?
            .add(&TruncSeries::constant(Complex64::new(alpha, 0.0), pn.order()))?;

        per_n_residual.push(relative_residual_below_top(&ratio, &alt));
        ratios.push(ratio);
    }
    let max_residual = per_n_residual.iter().copied().fold(0.0, f64::max);
    let independence_deviation = if ratios.len() >= 2 {
        ratios[0].max_abs_diff(&ratios[1])
    } else {
        0.0
    };
    Ok(ChainIdentityReport {
        max_residual,
        per_n_residual,
        independence_deviation,
        n_independent: independence_deviation < 1e-9,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::powseries::max_abs_diff_below_top;

    #[test]
    fn bazilevic_identity_base_case() {
        // p = 1, g = z: the integrand is alpha t^(alpha-1), so f = z.
        let p = HerglotzFn::constant_one(16);
        let g = AnalyticFn::identity(16);
        for &alpha in &[0.5, 1.0, 2.0, 3.0] {
            let f = bazilevic_construct(&p, &g, alpha).unwrap();
            assert!(f.series().max_abs_diff(g.series()) < 1e-13);
            let r = bazilevic_residual(&f, &g, alpha, &p).unwrap();
            assert!(r < 1e-14, "residual {r}");
        }
    }

    #[test]
    fn bazilevic_alpha_one_integrates_p() {
        // alpha = 1, g = z: f' = p, so f_k = p_{k-1}/k = 2/k for k >= 2.
        let p = HerglotzFn::mobius_extremal(12);
        let g = AnalyticFn::identity(12);
        let f = bazilevic_construct(&p, &g, 1.0).unwrap();
        for k in 2..12 {
            let expected = 2.0 / k as f64;
            assert!(
                (f.series().coeff(k) - Complex64::new(expected, 0.0)).norm() < 1e-13,
                "coefficient {k}"
            );
        }
    }

    #[test]
    fn bazilevic_residual_detects_perturbation() {
        let p = HerglotzFn::mobius_extremal(16);
        let g = AnalyticFn::identity(16);
        let f = bazilevic_construct(&p, &g, 1.0).unwrap();
        let mut coeffs = f.series().coeffs().to_vec();
        coeffs[5] += Complex64::new(1e-3, 0.0);
        let perturbed = AnalyticFn::new(TruncSeries::new(coeffs).unwrap()).unwrap();
        let r = bazilevic_residual(&perturbed, &g, 1.0, &p).unwrap();
        assert!(r >= 5e-4, "residual {r} should see the 1e-3 perturbation");
    }

    #[test]
    fn bernardi_fixes_identity() {
        let f = AnalyticFn::identity(16);
        for &(alpha, c) in &[(1.0, 0.0), (1.0, 1.0), (0.5, -0.25), (2.0, 3.0)] {
            let big_f = bernardi(&f, alpha, c).unwrap();
            assert!(big_f.series().max_abs_diff(f.series()) < 1e-14);
        }
    }

    #[test]
    fn bernardi_simple_polynomial() {
        // alpha = 1, c = 1, f = z + z^2: F = (2/z) int (t + t^2) dt
        // = z + (2/3) z^2.
        let mut coeffs = vec![Complex64::ZERO; 9];
        coeffs[1] = Complex64::ONE;
        coeffs[2] = Complex64::ONE;
        let f = AnalyticFn::new(TruncSeries::new(coeffs).unwrap()).unwrap();
        let big_f = bernardi(&f, 1.0, 1.0).unwrap();
        assert!((big_f.series().coeff(2) - Complex64::new(2.0 / 3.0, 0.0)).norm() < 1e-14);
        let back = bernardi_inverse(&big_f, 1.0, 1.0).unwrap();
        assert!(max_abs_diff_below_top(back.series(), f.series()) < 1e-13);
    }

    #[test]
    fn bernardi_non_integer_multiplier() {
        // alpha = 0.5, c = -0.25 is admissible (alpha + c = 0.25) and the
        // first multiplier is 0.25/1.25 = 0.2.
        let f = AnalyticFn::koebe(8);
        let p = f.power_rep(0.5).unwrap();
        let t = bernardi_power(&p, -0.25).unwrap();
        let expected = p.h().coeff(1) * 0.2;
        assert!((t.h().coeff(1) - expected).norm() < 1e-15);
    }

    #[test]
    fn bernardi_rejects_bad_params() {
        let f = AnalyticFn::identity(8);
        assert!(bernardi(&f, 1.0, -1.0).is_err());
        assert!(bernardi(&f, 0.5, -0.5).is_err());
        assert!(bernardi_inverse(&f, 1.0, -1.5).is_err());
    }

    #[test]
    fn bernardi_power_round_trip_is_tight() {
        let f = AnalyticFn::koebe(32);
        let p = f.power_rep(2.0).unwrap();
        let back = bernardi_inverse_power(&bernardi_power(&p, 0.75).unwrap(), 0.75).unwrap();
        // Rational multipliers cancel with one rounding each way.
        for k in 0..=32 {
            let a = p.h().coeff(k);
            let b = back.h().coeff(k);
            assert!((a - b).norm() <= 1e-14 * a.norm().max(1.0));
        }
    }

    #[test]
    fn chain_identity_for_identity_fn() {
        let f = AnalyticFn::identity(16);
        for &alpha in &[0.5, 1.0, 2.0] {
            let rep = chain_identity_check(&f, alpha, 3).unwrap();
            assert!(rep.max_residual < 1e-14);
            assert!(rep.n_independent);
            // ratio is the constant alpha for every n.
            let p = f.power_rep(alpha).unwrap();
            let ratio = p.salagean_power().h().div(p.h()).unwrap();
            assert!((ratio.coeff(0) - Complex64::new(alpha, 0.0)).norm() < 1e-15);
            assert!(ratio.max_abs() <= alpha + 1e-15);
        }
    }

    #[test]
    fn chain_identity_for_koebe() {
        let f = AnalyticFn::koebe(32);
        let rep = chain_identity_check(&f, 1.0, 2).unwrap();
        assert!(rep.max_residual < 1e-12, "residual {}", rep.max_residual);
        assert!(!rep.n_independent);
    }
}
