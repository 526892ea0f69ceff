//! Function classes of the disk: Caratheodory-class samples with exact
//! atomic evaluation, starlike constructions, sharp extremal members, and
//! grid membership scans for the conditions Re D^n f^alpha / (alpha^n z^alpha) > beta.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::{GRID_MARGIN, GRID_R_CAP};
use crate::error::{Error, Result};
use crate::powseries::{AnalyticFn, PowerRep, TruncSeries};

/// One point mass of a finite Herglotz measure: weight w > 0 on the
/// unimodular point exp(i * angle).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Atom {
    pub weight: f64,
    pub angle: f64,
}

impl Atom {
    pub fn point(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.angle)
    }
}

/// A Caratheodory-class function p (Re p > 0 on the disk, p(0) = 1) built
/// as a convex combination of Moebius kernels (1 + x z)/(1 - x z) with
/// |x| = 1. The finite-atom form gives exact pointwise evaluation next to
/// the derived truncated series (p_k = 2 sum_j w_j x_j^k for k >= 1).
///
/// The degenerate member p = 1 is the zero-atom case; it is not reachable
/// by the sampler.
#[derive(Debug, Clone, Serialize)]
pub struct HerglotzFn {
    atoms: Vec<Atom>,
    series: TruncSeries,
}

impl HerglotzFn {
    fn from_atoms(mut atoms: Vec<Atom>, order: usize) -> Self {
        let total: f64 = atoms.iter().map(|a| a.weight).sum();
        if total > 0.0 {
            for a in &mut atoms {
                a.weight /= total;
            }
        }
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        coeffs[0] = Complex64::ONE;
        for k in 1..=order {
            let mut acc = Complex64::ZERO;
            for a in &atoms {
                acc += a.weight * Complex64::from_polar(1.0, a.angle * k as f64);
            }
            coeffs[k] = 2.0 * acc;
        }
        Self { atoms, series: TruncSeries::new(coeffs).expect("finite atoms") }
    }

    /// Deterministic sample with `num_atoms` point masses (>= 1): angles
    /// uniform on the circle, weights normalized to sum to one.
    pub fn sample(num_atoms: usize, seed: u64, order: usize) -> Result<Self> {
        if num_atoms == 0 {
            return Err(Error::Param("sampler needs at least one atom".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let atoms = (0..num_atoms)
            .map(|_| Atom {
                weight: rng.random_range(0.05..=1.0),
                angle: rng.random_range(0.0..std::f64::consts::TAU),
            })
            .collect();
        Ok(Self::from_atoms(atoms, order))
    }

    /// The extremal kernel p(z) = (1 + z)/(1 - z): a single unit mass at
    /// x = 1. Coefficients p_k = 2 for every k >= 1.
    pub fn mobius_extremal(order: usize) -> Self {
        Self::from_atoms(vec![Atom { weight: 1.0, angle: 0.0 }], order)
    }

    /// A single unit mass at the given angle.
    pub fn single_atom(angle: f64, order: usize) -> Self {
        Self::from_atoms(vec![Atom { weight: 1.0, angle }], order)
    }

    /// The degenerate member p = 1 (empty atom list, constant series).
    pub fn constant_one(order: usize) -> Self {
        Self { atoms: Vec::new(), series: TruncSeries::one(order) }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn series(&self) -> &TruncSeries {
        &self.series
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// Exact evaluation from the atomic representation:
    /// p(z) = sum_j w_j (1 + x_j z)/(1 - x_j z). Empty atoms give 1.
    pub fn eval_exact(&self, z: Complex64) -> Complex64 {
        if self.atoms.is_empty() {
            return Complex64::ONE;
        }
        self.atoms
            .iter()
            .map(|a| {
                let xz = a.point() * z;
                a.weight * (Complex64::ONE + xz) / (Complex64::ONE - xz)
            })
            .sum()
    }

    /// Exact z p'(z) from the atoms: sum_j w_j 2 x_j z / (1 - x_j z)^2.
    pub fn z_dp_exact(&self, z: Complex64) -> Complex64 {
        self.atoms
            .iter()
            .map(|a| {
                let xz = a.point() * z;
                let d = Complex64::ONE - xz;
                a.weight * 2.0 * xz / (d * d)
            })
            .sum()
    }

    /// Grid certificate that this function lies in the Caratheodory class.
    pub fn certify(&self, grid: &DiskGrid) -> Result<MembershipReport> {
        membership_series(
            &self.series,
            ClassId::P,
            ClassParams::new(0, 1.0, 0.0)?,
            0.0,
            grid,
        )
    }
}

/// Parameters (n, alpha, beta) shared by the class conditions.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ClassParams {
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
}

impl ClassParams {
    pub fn new(n: usize, alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(Error::Param(format!("alpha must be > 0, got {alpha}")));
        }
        if !(0.0..1.0).contains(&beta) {
            return Err(Error::Param(format!("beta must lie in [0, 1), got {beta}")));
        }
        Ok(Self { n, alpha, beta })
    }
}

/// Finite sampling of the disk: concentric circles with equally spaced
/// angles, plus the margin used for strict-inequality verdicts.
#[derive(Debug, Clone, Serialize)]
pub struct DiskGrid {
    pub radii: Vec<f64>,
    pub angles_per_circle: usize,
    pub margin: f64,
}

impl DiskGrid {
    pub fn new(radii: Vec<f64>, angles_per_circle: usize, margin: f64) -> Result<Self> {
        if radii.is_empty() {
            return Err(Error::Param("grid needs at least one radius".into()));
        }
        let mut prev = 0.0;
        for &r in &radii {
            if !(r > prev) || r > GRID_R_CAP + 1e-12 {
                return Err(Error::Param(format!(
                    "grid radii must be ascending in (0, {GRID_R_CAP}]; got {radii:?}"
                )));
            }
            prev = r;
        }
        if angles_per_circle < 64 {
            return Err(Error::Param(format!(
                "need at least 64 angles per circle, got {angles_per_circle}"
            )));
        }
        if !(margin >= 0.0) {
            return Err(Error::Param(format!("margin must be >= 0, got {margin}")));
        }
        Ok(Self { radii, angles_per_circle, margin })
    }

    /// Radii 0.1, 0.2, ..., 0.9, 0.95 with 512 angles.
    pub fn default_grid() -> Self {
        let mut radii: Vec<f64> = (1..=9).map(|k| k as f64 / 10.0).collect();
        radii.push(GRID_R_CAP);
        Self::new(radii, 512, GRID_MARGIN).expect("default grid is valid")
    }

    /// A cheaper grid capped at 0.9, for high-volume perturbative scans
    /// whose derived series are only reliable away from the rim.
    pub fn scan_grid() -> Self {
        let radii = vec![0.15, 0.3, 0.45, 0.6, 0.75, 0.9];
        Self::new(radii, 128, GRID_MARGIN).expect("scan grid is valid")
    }

    pub fn points(&self) -> impl Iterator<Item = Complex64> + '_ {
        let m = self.angles_per_circle;
        self.radii.iter().flat_map(move |&r| {
            (0..m).map(move |j| Complex64::from_polar(r, std::f64::consts::TAU * j as f64 / m as f64))
        })
    }
}

/// Which class condition a membership scan evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassId {
    P,
    Starlike,
    #[serde(rename = "B_n_alpha")]
    BnAlpha,
    #[serde(rename = "T_n_alpha_beta")]
    TnAlphaBeta,
    Yamaguchi,
}

/// Result of scanning a real-part condition over a grid.
#[derive(Debug, Clone, Serialize)]
pub struct MembershipReport {
    pub class_id: ClassId,
    pub params: ClassParams,
    /// Minimum of the scanned real part over the grid.
    pub min_real_part: f64,
    /// min_real_part > bound + margin, where the bound is beta for the
    /// beta-shifted class and 0 otherwise.
    pub verdict: bool,
    /// The minimum fell inside [bound - margin, bound + margin]; sharp
    /// extremal members land here.
    pub boundary: bool,
    /// Grid point achieving the minimum.
    pub witness: Complex64,
}

/// Minimum of Re s(z) over the grid, with the point achieving it.
pub fn grid_min_re(series: &TruncSeries, grid: &DiskGrid) -> Result<(f64, Complex64)> {
    let mut min_real_part = f64::INFINITY;
    let mut witness = Complex64::ZERO;
    for z in grid.points() {
        let v = series.eval(z)?.re;
        if v < min_real_part {
            min_real_part = v;
            witness = z;
        }
    }
    Ok((min_real_part, witness))
}

/// Scans Re s(z) - bound over the grid. The series is evaluated as given;
/// callers pick the truncation order that makes the rim trustworthy.
pub fn membership_series(
    series: &TruncSeries,
    class_id: ClassId,
    params: ClassParams,
    bound: f64,
    grid: &DiskGrid,
) -> Result<MembershipReport> {
    let (min_real_part, witness) = grid_min_re(series, grid)?;
    Ok(MembershipReport {
        class_id,
        params,
        min_real_part,
        verdict: min_real_part > bound + grid.margin,
        boundary: (min_real_part - bound).abs() <= grid.margin,
        witness,
    })
}

/// Membership of a normalized function in one of the class conditions.
///
/// All the Salagean-power conditions reduce to a lower bound on
/// Re D^n f^alpha / (alpha^n z^alpha): beta for the shifted class, 0 for
/// the others (the alpha^n normalization does not move a zero bound).
pub fn membership(
    f: &AnalyticFn,
    class_id: ClassId,
    params: ClassParams,
    grid: &DiskGrid,
) -> Result<MembershipReport> {
    let (series, bound) = match class_id {
        ClassId::P => {
            return Err(Error::Param(
                "class P applies to Herglotz functions; use HerglotzFn::certify".into(),
            ))
        }
        ClassId::Starlike => (f.log_derivative_ratio()?, 0.0),
        ClassId::BnAlpha => (
            f.power_rep(params.alpha)?.normalized_ratio_series(params.n),
            0.0,
        ),
        ClassId::TnAlphaBeta => (
            f.power_rep(params.alpha)?.normalized_ratio_series(params.n),
            params.beta,
        ),
        ClassId::Yamaguchi => (f.power_rep(1.0)?.normalized_ratio_series(0), 0.0),
    };
    membership_series(&series, class_id, params, bound, grid)
}

/// Builds the normalized function with z f'/f = t from a target ratio
/// series t with t(0) = 1: f = z exp(U) with U_k = t_k / k.
pub fn analytic_from_ratio(t: &TruncSeries) -> Result<AnalyticFn> {
    if (t.coeff(0) - Complex64::ONE).norm() > 1e-12 {
        return Err(Error::Normalization(format!(
            "ratio target needs t(0) = 1, got {}",
            t.coeff(0)
        )));
    }
    let n = t.order();
    let mut u = vec![Complex64::ZERO; n + 1];
    for k in 1..=n {
        u[k] = t.coeff(k) / (k as f64);
    }
    let e = TruncSeries::new(u)?.exp0()?;
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(Complex64::ZERO);
    coeffs.extend_from_slice(&e.coeffs()[..n]);
    AnalyticFn::new(TruncSeries::new(coeffs)?)
}

/// The starlike function generated by p: g = z exp(int (p - 1)/t dt),
/// which satisfies z g'/g = p to series tolerance.
pub fn starlike_from_p(p: &HerglotzFn) -> Result<AnalyticFn> {
    analytic_from_ratio(p.series())
}

/// The sharp member of the beta-shifted class: solves
/// D^n f^alpha / (alpha^n z^alpha) = (1 + (1 - 2 beta) z)/(1 - z),
/// whose coefficients are 1, 2(1-beta), 2(1-beta), ...
pub fn extremal_tn(params: ClassParams, order: usize) -> Result<AnalyticFn> {
    let mut coeffs = vec![Complex64::new(2.0 * (1.0 - params.beta), 0.0); order + 1];
    coeffs[0] = Complex64::ONE;
    let target = TruncSeries::new(coeffs)?;
    PowerRep::from_normalized_ratio(&target, params.alpha, params.n)?.unpower()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_extremal_values() {
        let p = HerglotzFn::mobius_extremal(16);
        let at = |x: f64| p.eval_exact(Complex64::new(x, 0.0)).re;
        assert!((at(0.0) - 1.0).abs() < 1e-15);
        assert!((at(0.5) - 3.0).abs() < 1e-14);
        assert!((at(-0.5) - 1.0 / 3.0).abs() < 1e-14);
        for k in 1..=16 {
            assert!((p.series().coeff(k) - Complex64::new(2.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn sampler_is_deterministic_and_bounded() {
        let a = HerglotzFn::sample(3, 42, 32).unwrap();
        let b = HerglotzFn::sample(3, 42, 32).unwrap();
        assert_eq!(a.series().coeffs(), b.series().coeffs());
        let w: f64 = a.atoms().iter().map(|at| at.weight).sum();
        assert!((w - 1.0).abs() < 1e-12);
        for at in a.atoms() {
            assert!((at.point().norm() - 1.0).abs() < 1e-12);
        }
        // Caratheodory bound, forced by |x_j| = 1 and sum w_j = 1.
        for k in 1..=32 {
            assert!(a.series().coeff(k).norm() <= 2.0 + 1e-12);
        }
        assert!(HerglotzFn::sample(0, 1, 8).is_err());
    }

    #[test]
    fn constant_one_is_degenerate_member() {
        let p = HerglotzFn::constant_one(8);
        assert_eq!(p.eval_exact(Complex64::new(0.3, 0.2)), Complex64::ONE);
        assert_eq!(p.z_dp_exact(Complex64::new(0.3, 0.2)), Complex64::ZERO);
        assert!(p.series().max_abs_diff(&TruncSeries::one(8)) == 0.0);
    }

    #[test]
    fn starlike_from_mobius_is_koebe() {
        let p = HerglotzFn::mobius_extremal(24);
        let g = starlike_from_p(&p).unwrap();
        assert!(g.series().max_abs_diff(AnalyticFn::koebe(24).series()) < 1e-12);
    }

    #[test]
    fn starlike_from_constant_one_is_identity() {
        let p = HerglotzFn::constant_one(12);
        let g = starlike_from_p(&p).unwrap();
        assert!(g.series().max_abs_diff(AnalyticFn::identity(12).series()) < 1e-15);
    }

    #[test]
    fn membership_of_identity_is_always_one() {
        let f = AnalyticFn::identity(32);
        let grid = DiskGrid::default_grid();
        for &(n, alpha) in &[(0usize, 1.0), (1, 0.5), (3, 2.0)] {
            let params = ClassParams::new(n, alpha, 0.0).unwrap();
            let rep = membership(&f, ClassId::BnAlpha, params, &grid).unwrap();
            assert!(rep.verdict);
            assert!((rep.min_real_part - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn koebe_fails_yamaguchi_with_witness() {
        // Re(1/(1-z)^2) < 0 happens inside |z| <= 0.95, e.g. near
        // z = 0.7 + 0.6i where (1-z)^2 = -0.27 - 0.36i.
        let f = AnalyticFn::koebe(256);
        let grid = DiskGrid::default_grid();
        let params = ClassParams::new(0, 1.0, 0.0).unwrap();
        let rep = membership(&f, ClassId::Yamaguchi, params, &grid).unwrap();
        assert!(!rep.verdict);
        let w = rep.witness;
        let direct = (Complex64::ONE - w) * (Complex64::ONE - w);
        assert!((Complex64::ONE / direct).re < 0.0);
    }

    #[test]
    fn extremal_tn_base_case_series() {
        // n = 0, alpha = 1, beta = 0: f/z = (1+z)/(1-z), f = z + 2z^2 + ...
        let params = ClassParams::new(0, 1.0, 0.0).unwrap();
        let f = extremal_tn(params, 8).unwrap();
        assert!((f.series().coeff(1) - Complex64::ONE).norm() < 1e-14);
        for k in 2..=8 {
            assert!((f.series().coeff(k) - Complex64::new(2.0, 0.0)).norm() < 1e-13);
        }
    }

    #[test]
    fn extremal_tn_half_beta_target_at_origin() {
        let params = ClassParams::new(1, 2.0, 0.5).unwrap();
        let f = extremal_tn(params, 16).unwrap();
        let ratio = f
            .power_rep(params.alpha)
            .unwrap()
            .normalized_ratio_series(params.n);
        assert!((ratio.eval(Complex64::ZERO).unwrap() - Complex64::ONE).norm() < 1e-14);
    }

    #[test]
    fn class_params_validation() {
        assert!(ClassParams::new(0, 0.0, 0.0).is_err());
        assert!(ClassParams::new(0, 1.0, 1.0).is_err());
        assert!(ClassParams::new(0, 1.0, -0.1).is_err());
    }

    #[test]
    fn grid_validation() {
        assert!(DiskGrid::new(vec![], 128, 1e-9).is_err());
        assert!(DiskGrid::new(vec![0.5, 0.4], 128, 1e-9).is_err());
        assert!(DiskGrid::new(vec![0.99], 128, 1e-9).is_err());
        assert!(DiskGrid::new(vec![0.5], 32, 1e-9).is_err());
    }
}
