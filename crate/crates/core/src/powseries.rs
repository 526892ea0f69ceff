//! Truncated power series over complex coefficients.
//!
//! Everything downstream (class constructions, integral operators, grid
//! scans) runs on [`TruncSeries`]: a dense coefficient vector c_0..c_N with
//! all arithmetic truncated back to the common order N. Normalized
//! functions of the disk live in [`AnalyticFn`] (c_0 = 0, c_1 = 1) and
//! their principal powers in [`PowerRep`], which stores h = f^a / z^a with
//! h(0) = 1 so that the multivalued z^a factor never materializes.
//!
//! Shift conventions: an order-N `AnalyticFn` determines f/z only through
//! degree N-1, so the top coefficient of a [`PowerRep`] obtained from
//! [`AnalyticFn::power_rep`] treats the dropped coefficient of z^(N+1) as
//! zero. Residual checks therefore compare indices 0..N-1; see
//! [`max_abs_diff_below_top`].

use num_complex::Complex64;
use serde::Serialize;

use crate::config::{EVAL_R_MAX, RENORM_TOL};
use crate::error::{Error, Result};

/// Dense truncated power series: coefficient of z^k at index k, 0 <= k <= N.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TruncSeries {
    coeffs: Vec<Complex64>,
}

impl TruncSeries {
    /// Builds a series from its coefficient vector (must be non-empty and
    /// finite). The order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Param("series needs at least one coefficient".into()));
        }
        for (index, c) in coeffs.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::NonFinite { index });
            }
        }
        Ok(Self { coeffs })
    }

    /// Series with real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Complex64::ZERO; order + 1] }
    }

    /// The constant series c + 0*z + ... of the given order.
    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The constant 1.
    pub fn one(order: usize) -> Self {
        Self::constant(Complex64::ONE, order)
    }

    /// The monomial z (order must be >= 1).
    pub fn z(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[1] = Complex64::ONE;
        s
    }

    /// Truncation degree N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// c_k, or zero past the truncation order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(Complex64::ZERO)
    }

    /// All coefficients c_0..c_N.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    /// Returns a copy truncated (or zero-padded) to the given order.
    pub fn resized(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Complex64::ZERO);
        coeffs.truncate(order + 1);
        Self { coeffs }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { coeffs })
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    /// Cauchy product truncated to the common order:
    /// c_k = sum_{j=0..k} a_j b_{k-j}.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let n = self.order();
        let mut coeffs = vec![Complex64::ZERO; n + 1];
        for (j, &a) in self.coeffs.iter().enumerate() {
            if a == Complex64::ZERO {
                continue;
            }
            for (m, &b) in other.coeffs[..=n - j].iter().enumerate() {
                coeffs[j + m] += a * b;
            }
        }
        Ok(Self { coeffs })
    }

    /// Quotient q with q * b = a to truncation order. Requires b_0 != 0.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let b0 = other.coeff(0);
        if b0 == Complex64::ZERO {
            return Err(Error::DivisionByZeroConstant);
        }
        let n = self.order();
        let mut q = vec![Complex64::ZERO; n + 1];
        for k in 0..=n {
            let mut acc = self.coeffs[k];
            for (j, &qj) in q[..k].iter().enumerate() {
                acc -= qj * other.coeffs[k - j];
            }
            q[k] = acc / b0;
        }
        Ok(Self { coeffs: q })
    }

    /// Principal logarithm of a series with h_0 = 1: returns u with
    /// u_0 = 0 and exp0(u) = h. Recurrence from h' = u' h:
    /// u_k = h_k - (1/k) sum_{j=1..k-1} j u_j h_{k-j}.
    pub fn log1(&self) -> Result<Self> {
        if self.coeff(0) != Complex64::ONE {
            return Err(Error::Normalization(format!(
                "log1 requires h(0) = 1, got {}",
                self.coeff(0)
            )));
        }
        let n = self.order();
        let mut u = vec![Complex64::ZERO; n + 1];
        for k in 1..=n {
            let mut acc = Complex64::ZERO;
            for j in 1..k {
                acc += (j as f64) * u[j] * self.coeffs[k - j];
            }
            u[k] = self.coeffs[k] - acc / (k as f64);
        }
        Ok(Self { coeffs: u })
    }

    /// Exponential of a series with u_0 = 0: returns h with h_0 = 1
    /// solving h' = u' h, i.e. k h_k = sum_{j=1..k} j u_j h_{k-j}.
    pub fn exp0(&self) -> Result<Self> {
        if self.coeff(0) != Complex64::ZERO {
            return Err(Error::Normalization(format!(
                "exp0 requires u(0) = 0, got {}",
                self.coeff(0)
            )));
        }
        let n = self.order();
        let mut h = vec![Complex64::ZERO; n + 1];
        h[0] = Complex64::ONE;
        for k in 1..=n {
            let mut acc = Complex64::ZERO;
            for j in 1..=k {
                acc += (j as f64) * self.coeffs[j] * h[k - j];
            }
            h[k] = acc / (k as f64);
        }
        Ok(Self { coeffs: h })
    }

    /// Principal power h^alpha = exp0(alpha * log1(h)) for h_0 = 1.
    /// Any real alpha is accepted here; class constructors restrict signs.
    pub fn pow_alpha(&self, alpha: f64) -> Result<Self> {
        Ok(self.log1()?.scale_real(alpha).exp0()?)
    }

    /// The operator z d/dz: coefficient multiplier c_k -> k c_k.
    pub fn salagean(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * (k as f64))
            .collect();
        Self { coeffs }
    }

    /// n-fold application of [`TruncSeries::salagean`]; n = 0 is the identity.
    pub fn salagean_n(&self, n: usize) -> Self {
        let mut s = self.clone();
        for _ in 0..n {
            s = s.salagean();
        }
        s
    }

    /// Inverse of `salagean_n` on series vanishing at 0: c_k -> c_k / k^n
    /// for k >= 1 (index 0 is left unchanged and must be zero).
    pub fn salagean_inverse_n(&self, n: usize) -> Result<Self> {
        if self.coeff(0) != Complex64::ZERO {
            return Err(Error::Normalization(
                "salagean inversion needs a series vanishing at 0".into(),
            ));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if k == 0 {
                    *c
                } else {
                    c / (k as f64).powi(n as i32)
                }
            })
            .collect();
        Ok(Self { coeffs })
    }

    /// Horner evaluation of the degree-N polynomial. No tail correction:
    /// the truncation error on |z| = r is the caller's grid policy.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        self.eval_capped(z, EVAL_R_MAX)
    }

    /// Same as [`TruncSeries::eval`] with an explicit modulus cap.
    pub fn eval_capped(&self, z: Complex64, cap: f64) -> Result<Complex64> {
        let modulus = z.norm();
        if modulus > cap {
            return Err(Error::Domain { modulus, cap });
        }
        Ok(self.eval_unchecked(z))
    }

    /// Horner evaluation without the modulus cap; the caller owns the
    /// domain policy.
    pub fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// max_k |a_k - b_k| over the full coefficient range.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let n = self.order().max(other.order());
        (0..=n)
            .map(|k| (self.coeff(k) - other.coeff(k)).norm())
            .fold(0.0, f64::max)
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// max_k |a_k - b_k| over k = 0..N-1, skipping the top index. Pipelines
/// that shift by one power of z (f <-> f/z) only carry trustworthy data
/// below the top coefficient.
pub fn max_abs_diff_below_top(a: &TruncSeries, b: &TruncSeries) -> f64 {
    let n = a.order().min(b.order());
    (0..n)
        .map(|k| (a.coeff(k) - b.coeff(k)).norm())
        .fold(0.0, f64::max)
}

/// Scale-normalized residual max_k |a_k - b_k| / max(1, |a_k|, |b_k|)
/// over k = 0..N-1. Used where coefficient magnitudes grow with k and an
/// absolute comparison would drown in representation noise.
pub fn relative_residual_below_top(a: &TruncSeries, b: &TruncSeries) -> f64 {
    let n = a.order().min(b.order());
    (0..n)
        .map(|k| {
            let scale = 1.0_f64.max(a.coeff(k).norm()).max(b.coeff(k).norm());
            (a.coeff(k) - b.coeff(k)).norm() / scale
        })
        .fold(0.0, f64::max)
}

/// A normalized analytic function f(z) = z + a_2 z^2 + ... of the disk.
#[derive(Debug, Clone, Serialize)]
pub struct AnalyticFn {
    series: TruncSeries,
    /// Optional provenance tag carried through constructions.
    pub label: Option<String>,
}

impl AnalyticFn {
    /// Wraps a series that already satisfies c_0 = 0, c_1 = 1 exactly.
    pub fn new(series: TruncSeries) -> Result<Self> {
        if series.order() < 1 {
            return Err(Error::Param("normalized function needs order >= 1".into()));
        }
        if series.coeff(0) != Complex64::ZERO || series.coeff(1) != Complex64::ONE {
            return Err(Error::Normalization(format!(
                "expected c0 = 0, c1 = 1; got c0 = {}, c1 = {}",
                series.coeff(0),
                series.coeff(1)
            )));
        }
        Ok(Self { series, label: None })
    }

    /// Wraps a series whose leading coefficients drifted from (0, 1) by
    /// floating-point noise: snaps them back if within [`RENORM_TOL`],
    /// fails loudly otherwise. Operator outputs go through here so branch
    /// errors surface early.
    pub fn renormalized(series: TruncSeries) -> Result<Self> {
        if series.order() < 1 {
            return Err(Error::Param("normalized function needs order >= 1".into()));
        }
        let c0 = series.coeff(0);
        let c1 = series.coeff(1);
        if c0.norm() > RENORM_TOL || (c1 - Complex64::ONE).norm() > RENORM_TOL {
            return Err(Error::Normalization(format!(
                "output drifted off the normalization: c0 = {c0}, c1 = {c1}"
            )));
        }
        let mut coeffs = series.coeffs().to_vec();
        coeffs[0] = Complex64::ZERO;
        coeffs[1] = Complex64::ONE;
        Ok(Self { series: TruncSeries::new(coeffs)?, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// The identity function f(z) = z.
    pub fn identity(order: usize) -> Self {
        Self { series: TruncSeries::z(order), label: Some("identity".into()) }
    }

    /// The Koebe function z/(1-z)^2 = sum k z^k.
    pub fn koebe(order: usize) -> Self {
        let coeffs = (0..=order).map(|k| Complex64::new(k as f64, 0.0)).collect();
        Self {
            series: TruncSeries { coeffs },
            label: Some("koebe".into()),
        }
    }

    pub fn series(&self) -> &TruncSeries {
        &self.series
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// f/z as a series of the same order; the top coefficient (which would
    /// need the dropped coefficient of z^(N+1)) is set to zero.
    pub fn shifted_down(&self) -> TruncSeries {
        let n = self.series.order();
        let mut coeffs: Vec<Complex64> = (1..=n).map(|k| self.series.coeff(k)).collect();
        coeffs.push(Complex64::ZERO);
        TruncSeries { coeffs }
    }

    /// The series of z f'(z) / f(z) = 1 + z E'/E for f = z E. Indices
    /// 0..N-1 are reliable; the top index is best-effort.
    pub fn log_derivative_ratio(&self) -> Result<TruncSeries> {
        self.salagean_ratio(0)
    }

    /// The series of D^(n+1) f / D^n f. Both numerator and denominator
    /// vanish at 0, so the quotient is taken on the z-shifted series
    /// (constant term 1). Indices 0..N-1 are reliable.
    pub fn salagean_ratio(&self, n: usize) -> Result<TruncSeries> {
        let w = self.series.salagean_n(n);
        let top = w.order();
        let den: Vec<Complex64> = (1..=top)
            .map(|k| w.coeff(k))
            .chain(std::iter::once(Complex64::ZERO))
            .collect();
        let num: Vec<Complex64> = den
            .iter()
            .enumerate()
            .map(|(k, c)| c * ((k + 1) as f64))
            .collect();
        TruncSeries { coeffs: num }.div(&TruncSeries { coeffs: den })
    }

    /// n-fold z d/dz of f (still vanishing at 0, c_1 preserved).
    pub fn salagean_n(&self, n: usize) -> TruncSeries {
        self.series.salagean_n(n)
    }

    /// Principal power representation h = f^alpha / z^alpha with h(0) = 1.
    pub fn power_rep(&self, alpha: f64) -> Result<PowerRep> {
        PowerRep::from_fn(self, alpha)
    }
}

/// The normalized principal power h = f^alpha / z^alpha, h(0) = 1.
#[derive(Debug, Clone, Serialize)]
pub struct PowerRep {
    alpha: f64,
    h: TruncSeries,
}

impl PowerRep {
    /// Builds h = (f/z)^alpha for a normalized f. Requires alpha > 0; the
    /// principal branch is automatic because f/z -> 1 at the origin.
    pub fn from_fn(f: &AnalyticFn, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(Error::Param(format!("power exponent must be > 0, got {alpha}")));
        }
        let h = f.shifted_down().pow_alpha(alpha)?;
        Ok(Self { alpha, h })
    }

    /// Wraps an already-computed h with h_0 = 1 (snapped within noise).
    pub fn from_h(h: TruncSeries, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(Error::Param(format!("power exponent must be > 0, got {alpha}")));
        }
        let h0 = h.coeff(0);
        if (h0 - Complex64::ONE).norm() > RENORM_TOL {
            return Err(Error::Normalization(format!("power rep needs h(0) = 1, got {h0}")));
        }
        let mut coeffs = h.coeffs().to_vec();
        coeffs[0] = Complex64::ONE;
        Ok(Self { alpha, h: TruncSeries::new(coeffs)? })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn h(&self) -> &TruncSeries {
        &self.h
    }

    /// One application of z d/dz on z^alpha h: the term z^(alpha+k) picks
    /// up the multiplier (alpha + k).
    pub fn salagean_power(&self) -> Self {
        let coeffs = self
            .h
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * (self.alpha + k as f64))
            .collect();
        Self { alpha: self.alpha, h: TruncSeries { coeffs } }
    }

    /// n-fold [`PowerRep::salagean_power`]; n = 0 is the identity.
    pub fn salagean_n_power(&self, n: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..n {
            p = p.salagean_power();
        }
        p
    }

    /// Exact two-sided inverse of [`PowerRep::salagean_n_power`]:
    /// h_k -> h_k / (alpha + k)^n. Every multiplier is positive since
    /// alpha > 0.
    pub fn salagean_inverse_power(&self, n: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..n {
            let coeffs = p
                .h
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| c / (p.alpha + k as f64))
                .collect();
            p = Self { alpha: p.alpha, h: TruncSeries { coeffs } };
        }
        p
    }

    /// The series of D^n f^alpha / (alpha^n z^alpha): coefficients
    /// h_k (alpha+k)^n / alpha^n. This is the quantity all the class
    /// conditions bound from below.
    pub fn normalized_ratio_series(&self, n: usize) -> TruncSeries {
        let scale = self.alpha.powi(n as i32);
        let coeffs = self
            .h
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * (self.alpha + k as f64).powi(n as i32) / scale)
            .collect();
        TruncSeries { coeffs }
    }

    /// Inverts [`PowerRep::normalized_ratio_series`]: given a target t with
    /// t(0) = 1, builds the power rep whose n-th normalized ratio is t.
    pub fn from_normalized_ratio(t: &TruncSeries, alpha: f64, n: usize) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(Error::Param(format!("power exponent must be > 0, got {alpha}")));
        }
        let scale = alpha.powi(n as i32);
        let coeffs = t
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * scale / (alpha + k as f64).powi(n as i32))
            .collect();
        Self::from_h(TruncSeries { coeffs }, alpha)
    }

    /// Recovers the normalized function f = z * h^(1/alpha). The top
    /// coefficient of h^(1/alpha) has no slot at this order and is dropped.
    pub fn unpower(&self) -> Result<AnalyticFn> {
        let g = self.h.pow_alpha(1.0 / self.alpha)?;
        let n = g.order();
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(Complex64::ZERO);
        coeffs.extend_from_slice(&g.coeffs()[..n]);
        AnalyticFn::renormalized(TruncSeries { coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = TruncSeries::from_real(&[1.0, 1.0, 0.0]).unwrap();
        let b = TruncSeries::from_real(&[1.0, -1.0, 0.0]).unwrap();
        let p = a.mul(&b).unwrap();
        assert_eq!(p.coeffs(), &[c(1.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)]);
    }

    #[test]
    fn mul_square() {
        let a = TruncSeries::from_real(&[1.0, 1.0, 0.0]).unwrap();
        let p = a.mul(&a).unwrap();
        assert_eq!(p.coeffs(), &[c(1.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)]);
    }

    #[test]
    fn mul_order_mismatch_is_an_error() {
        let a = TruncSeries::from_real(&[1.0, 1.0]).unwrap();
        let b = TruncSeries::from_real(&[1.0, 1.0, 1.0]).unwrap();
        assert!(matches!(a.mul(&b), Err(Error::OrderMismatch { .. })));
    }

    #[test]
    fn div_simple() {
        let a = TruncSeries::from_real(&[1.0, 0.0, -1.0]).unwrap();
        let b = TruncSeries::from_real(&[1.0, -1.0, 0.0]).unwrap();
        let q = a.div(&b).unwrap();
        assert!(q.max_abs_diff(&TruncSeries::from_real(&[1.0, 1.0, 0.0]).unwrap()) < 1e-15);
    }

    #[test]
    fn div_self_is_one() {
        let a = TruncSeries::from_real(&[2.0, -0.3, 0.7, 1.1]).unwrap();
        let q = a.div(&a).unwrap();
        assert!(q.max_abs_diff(&TruncSeries::one(3)) < 1e-15);
    }

    #[test]
    fn div_by_zero_constant_is_an_error() {
        let a = TruncSeries::one(2);
        let b = TruncSeries::z(2);
        assert!(matches!(a.div(&b), Err(Error::DivisionByZeroConstant)));
    }

    #[test]
    fn log1_of_one_is_zero() {
        let u = TruncSeries::one(8).log1().unwrap();
        assert_eq!(u.max_abs(), 0.0);
    }

    #[test]
    fn log1_requires_unit_constant() {
        let s = TruncSeries::from_real(&[2.0, 1.0]).unwrap();
        assert!(matches!(s.log1(), Err(Error::Normalization(_))));
    }

    #[test]
    fn exp0_of_zero_is_one() {
        let h = TruncSeries::zero(8).exp0().unwrap();
        assert!(h.max_abs_diff(&TruncSeries::one(8)) == 0.0);
    }

    #[test]
    fn exp0_requires_vanishing_constant() {
        let s = TruncSeries::one(4);
        assert!(matches!(s.exp0(), Err(Error::Normalization(_))));
    }

    #[test]
    fn pow_alpha_perfect_square_root() {
        let h = TruncSeries::from_real(&[1.0, 2.0, 1.0, 0.0]).unwrap();
        let r = h.pow_alpha(0.5).unwrap();
        assert!(r.max_abs_diff(&TruncSeries::from_real(&[1.0, 1.0, 0.0, 0.0]).unwrap()) < 1e-14);
    }

    #[test]
    fn pow_alpha_square() {
        let h = TruncSeries::from_real(&[1.0, -1.0, 0.0]).unwrap();
        let r = h.pow_alpha(2.0).unwrap();
        assert!(r.max_abs_diff(&TruncSeries::from_real(&[1.0, -2.0, 1.0]).unwrap()) < 1e-14);
    }

    #[test]
    fn salagean_fixes_z_and_kills_constants() {
        assert!(TruncSeries::z(4).salagean().max_abs_diff(&TruncSeries::z(4)) == 0.0);
        assert!(TruncSeries::one(4).salagean().max_abs() == 0.0);
        let koebe = AnalyticFn::koebe(6);
        let squared = koebe.series().salagean();
        for k in 0..=6 {
            assert_eq!(squared.coeff(k), c((k * k) as f64, 0.0));
        }
    }

    #[test]
    fn salagean_n_zero_is_identity() {
        let f = TruncSeries::from_real(&[0.0, 1.0, 0.5, -0.2]).unwrap();
        assert_eq!(f.salagean_n(0), f);
    }

    #[test]
    fn salagean_n_matches_iteration() {
        let f = TruncSeries::from_real(&[0.0, 1.0, 0.5, -0.2, 0.07]).unwrap();
        let mut iterated = f.clone();
        for _ in 0..3 {
            iterated = iterated.salagean();
        }
        assert_eq!(f.salagean_n(3), iterated);
    }

    #[test]
    fn salagean_power_of_identity_fn() {
        // D^n z^alpha = alpha^n z^alpha, so the normalized ratio stays 1.
        let f = AnalyticFn::identity(8);
        for &alpha in &[0.5, 1.0, 2.5] {
            let p = f.power_rep(alpha).unwrap();
            for n in 0..4 {
                let ratio = p.normalized_ratio_series(n);
                assert!(ratio.max_abs_diff(&TruncSeries::one(8)) < 1e-15);
            }
        }
    }

    #[test]
    fn salagean_inverse_power_round_trip_is_exact() {
        let f = AnalyticFn::koebe(12);
        let p = f.power_rep(1.5).unwrap();
        let back = p.salagean_inverse_power(2).salagean_n_power(2);
        // Multiplier cancellation: x / m * m is within one rounding of x.
        assert!(p.h().max_abs_diff(back.h()) < 1e-13 * p.h().max_abs());
        let id = p.salagean_inverse_power(0);
        assert_eq!(id.h(), p.h());
    }

    #[test]
    fn eval_basics() {
        let s = TruncSeries::from_real(&[1.0, 1.0]).unwrap();
        assert_eq!(s.eval(Complex64::ZERO).unwrap(), Complex64::ONE);
        let f = AnalyticFn::koebe(16);
        assert_eq!(f.series().eval(Complex64::ZERO).unwrap(), Complex64::ZERO);
    }

    #[test]
    fn eval_outside_cap_is_an_error() {
        let s = TruncSeries::one(2);
        assert!(matches!(s.eval(c(1.2, 0.0)), Err(Error::Domain { .. })));
    }

    #[test]
    fn analytic_fn_rejects_bad_normalization() {
        let s = TruncSeries::from_real(&[0.5, 1.0, 0.0]).unwrap();
        assert!(AnalyticFn::new(s).is_err());
        let s = TruncSeries::from_real(&[0.0, 0.9, 0.0]).unwrap();
        assert!(AnalyticFn::renormalized(s).is_err());
    }

    #[test]
    fn power_rep_round_trip() {
        let f = AnalyticFn::koebe(24);
        for &alpha in &[0.5, 1.7, 3.0] {
            let p = f.power_rep(alpha).unwrap();
            let back = p.unpower().unwrap();
            assert!(f.series().max_abs_diff(back.series()) < 1e-10);
        }
    }

    #[test]
    fn non_finite_coefficients_rejected() {
        let r = TruncSeries::new(vec![c(f64::NAN, 0.0)]);
        assert!(matches!(r, Err(Error::NonFinite { index: 0 })));
    }
}
