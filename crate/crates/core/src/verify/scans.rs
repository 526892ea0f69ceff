//! Implication scan harness for the two sufficiency results:
//!
//!   T31: alpha > 0 and Re(D^(n+1)f / D^n f - 1) > 0  =>
//!        Re D^n f^alpha / z^alpha > 0
//!   T35: 0 < alpha <= 1 and Re D^(n+1)f / D^n f > 1/2 =>
//!        Re D^n f^alpha / (alpha^n z^alpha) > 1/2
//!
//! Two trial families: a constructed family whose hypothesis holds by
//! construction (T35: draw p in the Caratheodory class, set
//! q = (1 + p)/2, solve z (D^n f)'/(D^n f) = q, invert D^n), and a
//! falsification family of random perturbations f = z + sum e_k z^k with
//! |e_k| <= 0.1/k^2, kept inside the series' reliable evaluation region by
//! the coefficient envelope and the 0.9-capped scan grid. A trial is a
//! counterexample when the hypothesis holds everywhere on the grid but the
//! conclusion fails somewhere.
//!
//! The T31 hypothesis evaluates to 0 at z = 0 for every normalized f, so
//! by the minimum principle no function satisfies it strictly; the scan
//! treats the implication as vacuity-tolerant and reports
//! hypothesis-satisfaction rates instead of assuming the class is rich.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::funclasses::{analytic_from_ratio, grid_min_re, DiskGrid, HerglotzFn};
use crate::powseries::{AnalyticFn, TruncSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TheoremId {
    T31,
    T35,
}

/// A trial whose hypothesis held on the whole grid while the conclusion
/// failed somewhere: the implication would be falsified if it survived
/// scrutiny at higher resolution.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    pub coeffs: Vec<Complex64>,
    pub hypothesis_min: f64,
    pub conclusion_min: f64,
    pub witness: Complex64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanFamilyReport {
    pub family: &'static str,
    pub trials: usize,
    pub hypothesis_holds_count: usize,
    pub counterexamples: Vec<Counterexample>,
    pub seed: u64,
}

impl ScanFamilyReport {
    pub fn consistent(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ImplicationScanReport {
    pub theorem: TheoremId,
    pub n: usize,
    pub alpha: f64,
    pub constructed: ScanFamilyReport,
    pub falsification: ScanFamilyReport,
}

impl ImplicationScanReport {
    pub fn consistent(&self) -> bool {
        self.constructed.consistent() && self.falsification.consistent()
    }
}

fn trial_seed(seed: u64, trial: usize) -> u64 {
    (seed ^ (trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)).wrapping_add(0xD1B5_4A32_D192_ED03)
}

struct TrialOutcome {
    hypothesis_holds: bool,
    counterexample: Option<Counterexample>,
}

fn judge_trial(
    trial: usize,
    f: &AnalyticFn,
    n: usize,
    alpha: f64,
    hyp_bound: f64,
    concl_bound: f64,
    grid: &DiskGrid,
) -> Result<TrialOutcome> {
    let hyp_series = f.salagean_ratio(n)?;
    let (hyp_min, _) = grid_min_re(&hyp_series, grid)?;
    let hypothesis_holds = hyp_min > hyp_bound + grid.margin;
    if !hypothesis_holds {
        return Ok(TrialOutcome { hypothesis_holds, counterexample: None });
    }
    let concl_series = f.power_rep(alpha)?.normalized_ratio_series(n);
    let (concl_min, witness) = grid_min_re(&concl_series, grid)?;
    let counterexample = if concl_min < concl_bound - grid.margin {
        Some(Counterexample {
            trial,
            coeffs: f.series().coeffs().to_vec(),
            hypothesis_min: hyp_min,
            conclusion_min: concl_min,
            witness,
        })
    } else {
        None
    };
    Ok(TrialOutcome { hypothesis_holds, counterexample })
}

fn collect(
    family: &'static str,
    seed: u64,
    outcomes: Vec<TrialOutcome>,
) -> ScanFamilyReport {
    let trials = outcomes.len();
    let hypothesis_holds_count = outcomes.iter().filter(|o| o.hypothesis_holds).count();
    let counterexamples = outcomes
        .into_iter()
        .filter_map(|o| o.counterexample)
        .collect();
    ScanFamilyReport { family, trials, hypothesis_holds_count, counterexamples, seed }
}

fn check_scan_params(theorem: TheoremId, alpha: f64) -> Result<()> {
    if !(alpha > 0.0) {
        return Err(Error::Param(format!("alpha must be > 0, got {alpha}")));
    }
    if theorem == TheoremId::T35 && alpha > 1.0 {
        return Err(Error::Param(format!(
            "the half-bound implication is hypothesised for 0 < alpha <= 1, got {alpha}"
        )));
    }
    Ok(())
}

/// Constructed family for the half-bound implication: the hypothesis holds
/// by construction, so every trial genuinely exercises the conclusion.
pub fn constructed_scan(
    n: usize,
    alpha: f64,
    trials: usize,
    seed: u64,
    grid: &DiskGrid,
    order: usize,
) -> Result<ScanFamilyReport> {
    check_scan_params(TheoremId::T35, alpha)?;
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, trial));
            let atoms = rng.random_range(1..=4);
            let p = HerglotzFn::sample(atoms, rng.random(), order)?;
            // q = (1 + p)/2 has Re q > 1/2 and q(0) = 1.
            let q = p
                .series()
                .add(&TruncSeries::one(order))?
                .scale_real(0.5);
            let w = analytic_from_ratio(&q)?;
            let f = AnalyticFn::new(w.series().salagean_inverse_n(n)?)?;
            judge_trial(trial, &f, n, alpha, 0.5, 0.5, grid)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(collect("constructed", seed, outcomes))
}

/// Random perturbation family f = z + sum_{k=2..16} e_k z^k with
/// |e_k| <= 0.1/k^2, scanned for hypothesis-holds / conclusion-fails
/// events under either implication.
pub fn falsification_scan(
    theorem: TheoremId,
    n: usize,
    alpha: f64,
    trials: usize,
    seed: u64,
    grid: &DiskGrid,
    order: usize,
) -> Result<ScanFamilyReport> {
    check_scan_params(theorem, alpha)?;
    if order < 17 {
        return Err(Error::Param("falsification family needs order >= 17".into()));
    }
    let (hyp_bound, concl_bound) = match theorem {
        TheoremId::T31 => (1.0, 0.0),
        TheoremId::T35 => (0.5, 0.5),
    };
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, trial));
            let mut coeffs = vec![Complex64::ZERO; order + 1];
            coeffs[1] = Complex64::ONE;
            for (k, c) in coeffs.iter_mut().enumerate().take(17).skip(2) {
                let envelope = 0.1 / (k * k) as f64;
                let modulus = rng.random_range(0.0..=envelope);
                let phase = rng.random_range(0.0..std::f64::consts::TAU);
                *c = Complex64::from_polar(modulus, phase);
            }
            let f = AnalyticFn::new(TruncSeries::new(coeffs)?)?;
            judge_trial(trial, &f, n, alpha, hyp_bound, concl_bound, grid)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(collect("falsification", seed, outcomes))
}

/// Runs both families for the given implication. For T31 the constructed
/// slot runs the boundary fixture f = z (the only function on the
/// hypothesis boundary), which is vacuously consistent.
pub fn theorem_scan(
    theorem: TheoremId,
    n: usize,
    alpha: f64,
    trials: usize,
    seed: u64,
    grid: &DiskGrid,
    order: usize,
) -> Result<ImplicationScanReport> {
    check_scan_params(theorem, alpha)?;
    let constructed = match theorem {
        TheoremId::T35 => constructed_scan(n, alpha, trials, seed, grid, order)?,
        TheoremId::T31 => {
            let f = AnalyticFn::identity(order);
            let outcome = judge_trial(0, &f, n, alpha, 1.0, 0.0, grid)?;
            collect("constructed", seed, vec![outcome])
        }
    };
    let falsification =
        falsification_scan(theorem, n, alpha, trials, seed ^ 0xF0F0_F0F0, grid, order)?;
    Ok(ImplicationScanReport { theorem, n, alpha, constructed, falsification })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funclasses::grid_min_re;

    #[test]
    fn identity_fixture_is_boundary_for_t31_and_interior_for_t35() {
        let f = AnalyticFn::identity(32);
        let grid = DiskGrid::scan_grid();
        let ratio = f.salagean_ratio(2).unwrap();
        let (min_re, _) = grid_min_re(&ratio, &grid).unwrap();
        // D^(n+1)f/D^nf is identically 1 for f = z.
        assert!((min_re - 1.0).abs() < 1e-14);
        let scan = theorem_scan(TheoremId::T31, 1, 2.0, 10, 3, &grid, 64).unwrap();
        assert_eq!(scan.constructed.hypothesis_holds_count, 0);
        assert!(scan.consistent());
    }

    #[test]
    fn t35_rejects_alpha_above_one() {
        let grid = DiskGrid::scan_grid();
        assert!(constructed_scan(0, 1.5, 1, 1, &grid, 32).is_err());
    }

    #[test]
    fn constructed_family_hypothesis_always_holds() {
        let grid = DiskGrid::scan_grid();
        let rep = constructed_scan(0, 1.0, 25, 7, &grid, 128).unwrap();
        assert_eq!(rep.hypothesis_holds_count, rep.trials);
        assert!(rep.consistent(), "{:?}", rep.counterexamples.len());
    }

    #[test]
    fn constructed_family_is_deterministic() {
        let grid = DiskGrid::scan_grid();
        let a = constructed_scan(1, 0.7, 10, 42, &grid, 64).unwrap();
        let b = constructed_scan(1, 0.7, 10, 42, &grid, 64).unwrap();
        assert_eq!(a.hypothesis_holds_count, b.hypothesis_holds_count);
    }

    #[test]
    fn falsification_smoke() {
        let grid = DiskGrid::scan_grid();
        for theorem in [TheoremId::T31, TheoremId::T35] {
            let rep = falsification_scan(theorem, 1, 1.0, 50, 5, &grid, 64).unwrap();
            assert!(rep.consistent());
        }
    }
}
