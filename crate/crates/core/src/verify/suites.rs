//! Packaged check suites behind the CLI verify targets. Each suite pins
//! its tolerances from [`crate::config`] and returns one line per check so
//! callers can render or serialize them uniformly.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use num_complex::Complex64;

use crate::config::{
    BAZILEVIC_RESIDUAL_TOL, CHAIN_RESIDUAL_TOL, DERIV_BOUND_TOL, GRID_MARGIN, PSI_MARGIN,
    RADIUS_GAP_TOL, SCAN_ORDER, WITNESS_ANGLE_TOL,
};
use crate::error::Result;
use crate::funclasses::{starlike_from_p, DiskGrid, HerglotzFn};
use crate::gftops::{bazilevic_construct, bazilevic_residual, chain_identity_check};
use crate::powseries::{AnalyticFn, TruncSeries};
use crate::verify::bound::{derivative_bound_check, extremal_equality_gap};
use crate::verify::psi::{psi_admissibility, PsiId};
use crate::verify::radius::{bernardi_radius_empirical, RadiusParams, RadiusSearch};
use crate::verify::scans::{constructed_scan, falsification_scan, theorem_scan, TheoremId};

/// One named check with the measured value and its threshold.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub value: f64,
    pub threshold: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn le(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        Self { name: name.into(), pass: value <= threshold, value, threshold, detail: None }
    }

    fn ge(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        Self { name: name.into(), pass: value >= threshold, value, threshold, detail: None }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl SuiteReport {
    fn new(suite: &'static str, seed: u64, checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        Self { suite, seed, checks, pass }
    }
}

/// The derivative-bound suite: seeded Caratheodory samples scanned on
/// dense circles, plus the extremal equality case.
pub fn lemma25_suite(trials: usize, seed: u64) -> Result<SuiteReport> {
    let radii: Vec<f64> = (1..=9).map(|k| k as f64 / 10.0).collect();
    let worst = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t as u64));
            let atoms = rng.random_range(1..=4);
            let p = HerglotzFn::sample(atoms, rng.random(), 8)?;
            Ok(derivative_bound_check(&p, &radii, 4096)?.max_violation)
        })
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);
    let checks = vec![
        Check::le("derivative_bound_max_violation", worst, DERIV_BOUND_TOL)
            .with_detail(format!("{trials} samples x 9 radii x 4096 angles")),
        Check::le(
            "extremal_equality_gap_angle0",
            extremal_equality_gap(&radii),
            DERIV_BOUND_TOL,
        ),
    ];
    Ok(SuiteReport::new("lemma25", seed, checks))
}

/// Admissibility sampling for both test functions across their parameter
/// ranges.
pub fn psi_suite(samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for (id, name) in [(PsiId::Psi1, "psi1"), (PsiId::Psi2, "psi2")] {
        let rep = psi_admissibility(id, samples, seed, PSI_MARGIN)?;
        checks.push(
            Check::le(format!("{name}_condition_c_max"), rep.max_c_value, PSI_MARGIN)
                .with_detail(format!("{samples} samples, {} skipped", rep.skipped)),
        );
        checks.push(
            Check::ge(format!("{name}_condition_b"), rep.b_value, -PSI_MARGIN).with_detail(
                if rep.b_boundary {
                    "boundary case: Re psi(1,0) = 0".to_string()
                } else {
                    format!("Re psi(1,0) = {}", rep.b_value)
                },
            ),
        );
    }
    Ok(SuiteReport::new("psi", seed, checks))
}

/// Parameter tuples (n, alpha) exercised by the implication scans; they
/// cover the first- and second-derivative corollaries.
pub const SCAN_TUPLES: [(usize, f64); 4] = [(0, 1.0), (0, 0.5), (1, 1.0), (2, 0.7)];

fn constructed_grid() -> DiskGrid {
    let mut radii: Vec<f64> = (1..=9).map(|k| k as f64 / 10.0).collect();
    radii.push(0.95);
    DiskGrid::new(radii, 256, GRID_MARGIN).expect("valid grid")
}

/// Implication scan suite for one theorem: a constructed family per tuple
/// (half-bound implication only) and a falsification family per tuple.
pub fn scan_suite(
    theorem: TheoremId,
    constructed_trials: usize,
    falsification_trials: usize,
    seed: u64,
) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let per_tuple_falsification = falsification_trials.div_ceil(SCAN_TUPLES.len());
    for (i, &(n, alpha)) in SCAN_TUPLES.iter().enumerate() {
        let tuple_seed = seed.wrapping_add(1000 * i as u64);
        if theorem == TheoremId::T35 {
            let rep = constructed_scan(
                n,
                alpha,
                constructed_trials,
                tuple_seed,
                &constructed_grid(),
                SCAN_ORDER,
            )?;
            checks.push(
                Check::le(
                    format!("constructed_counterexamples_n{n}_alpha{alpha}"),
                    rep.counterexamples.len() as f64,
                    0.0,
                )
                .with_detail(format!(
                    "{} trials, hypothesis held in {}",
                    rep.trials, rep.hypothesis_holds_count
                )),
            );
        }
        let rep = falsification_scan(
            theorem,
            n,
            alpha,
            per_tuple_falsification,
            tuple_seed ^ 0xABCD,
            &DiskGrid::scan_grid(),
            128,
        )?;
        checks.push(
            Check::le(
                format!("falsification_counterexamples_n{n}_alpha{alpha}"),
                rep.counterexamples.len() as f64,
                0.0,
            )
            .with_detail(format!(
                "{} trials, hypothesis held in {}",
                rep.trials, rep.hypothesis_holds_count
            )),
        );
    }
    if theorem == TheoremId::T31 {
        // The hypothesis boundary fixture f = z: vacuously consistent.
        let rep = theorem_scan(theorem, 1, 1.0, 1, seed, &DiskGrid::scan_grid(), 64)?;
        checks.push(
            Check::le(
                "boundary_fixture_hypothesis_holds",
                rep.constructed.hypothesis_holds_count as f64,
                0.0,
            )
            .with_detail("f = z sits on the hypothesis boundary"),
        );
    }
    Ok(SuiteReport::new(
        match theorem {
            TheoremId::T31 => "t31",
            TheoremId::T35 => "t35",
        },
        seed,
        checks,
    ))
}

/// The radius cases pinned by the acceptance gate: (n, alpha, beta, c).
pub const RADIUS_CASES: [(usize, f64, f64, f64); 5] = [
    (0, 1.0, 0.0, 0.0),
    (0, 1.0, 0.0, 1.0),
    (1, 2.0, 0.0, 0.0),
    (1, 0.5, 0.25, 0.75),
    (0, 1.0, 0.0, -0.5),
];

/// Radius suite: bisection against the closed form for the extremal
/// kernel (sharpness cases), plus a generic sample that must stay above
/// the guarantee.
pub fn radius_suite(seed: u64) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let p = HerglotzFn::mobius_extremal(SCAN_ORDER);
    for &(n, alpha, beta, c) in &RADIUS_CASES {
        let params = RadiusParams::new(n, alpha, beta, c)?;
        let res = bernardi_radius_empirical(params, &p, RadiusSearch::default(), SCAN_ORDER)?;
        let label = format!("n{n}_alpha{alpha}_beta{beta}_c{c}");
        checks.push(
            Check::le(format!("radius_gap_{label}"), res.gap, RADIUS_GAP_TOL).with_detail(
                format!(
                    "empirical {:.6} vs closed form {:.6}",
                    res.empirical_radius, res.closed_form_radius
                ),
            ),
        );
        checks.push(Check::le(
            format!("witness_angle_gap_{label}"),
            (res.witness_angle - std::f64::consts::PI).abs(),
            WITNESS_ANGLE_TOL,
        ));
    }
    let generic = HerglotzFn::sample(3, seed, SCAN_ORDER)?;
    let params = RadiusParams::new(0, 1.0, 0.0, 1.0)?;
    let res = bernardi_radius_empirical(params, &generic, RadiusSearch::default(), SCAN_ORDER)?;
    let floor = res.closed_form_radius - RadiusSearch::default().tol;
    checks.push(
        Check::ge("generic_sample_radius_above_guarantee", res.empirical_radius, floor)
            .with_detail(if res.no_violation_found {
                "no violation up to the search cap".to_string()
            } else {
                format!("violation first seen at {:.6}", res.empirical_radius)
            }),
    );
    Ok(SuiteReport::new("t39", seed, checks))
}

/// Seeded random normalized function with |a_k| <= scale/k^2.
pub fn random_analytic_fn(seed: u64, order: usize, scale: f64) -> AnalyticFn {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs = vec![Complex64::ZERO; order + 1];
    coeffs[1] = Complex64::ONE;
    for (k, c) in coeffs.iter_mut().enumerate().skip(2) {
        let modulus = rng.random_range(0.0..=scale / (k * k) as f64);
        let phase = rng.random_range(0.0..std::f64::consts::TAU);
        *c = Complex64::from_polar(modulus, phase);
    }
    AnalyticFn::new(TruncSeries::new(coeffs).expect("finite")).expect("normalized")
}

/// Chain identity suite: the one-step identity on seeded random functions
/// across exponents.
pub fn chain_suite(trials: usize, seed: u64) -> Result<SuiteReport> {
    let alphas = [0.5, 1.0, 2.0, 3.0];
    let worst = (0..trials)
        .into_par_iter()
        .map(|t| {
            let f = random_analytic_fn(seed.wrapping_add(t as u64), 32, 1.0);
            let alpha = alphas[t % alphas.len()];
            Ok(chain_identity_check(&f, alpha, 3)?.max_residual)
        })
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let checks = vec![Check::le("chain_identity_max_residual", worst, CHAIN_RESIDUAL_TOL)
        .with_detail(format!("{trials} random functions, alpha in {alphas:?}, n <= 3"))];
    Ok(SuiteReport::new("chain", seed, checks))
}

/// Bazilevic round-trip suite: construct from seeded (p, g, alpha) and
/// check the differential residual at order 32.
pub fn bazilevic_suite(triples: usize, seed: u64) -> Result<SuiteReport> {
    let order = 32;
    let alphas = [0.5, 1.0, 2.0, 3.0];
    let worst = (0..triples)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t as u64));
            let atoms = rng.random_range(1..=4);
            let p = HerglotzFn::sample(atoms, rng.random(), order)?;
            let g = if t % 2 == 0 {
                AnalyticFn::koebe(order)
            } else {
                starlike_from_p(&HerglotzFn::sample(atoms, rng.random(), order)?)?
            };
            let alpha = alphas[t % alphas.len()];
            let f = bazilevic_construct(&p, &g, alpha)?;
            bazilevic_residual(&f, &g, alpha, &p)
        })
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let checks = vec![Check::le("bazilevic_residual_max", worst, BAZILEVIC_RESIDUAL_TOL)
        .with_detail(format!("{triples} seeded triples at order {order}"))];
    Ok(SuiteReport::new("bazilevic", seed, checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_suite_passes_quickly() {
        let rep = psi_suite(500, 3).unwrap();
        assert!(rep.pass, "{rep:?}");
    }

    #[test]
    fn chain_suite_small() {
        let rep = chain_suite(8, 5).unwrap();
        assert!(rep.pass, "{rep:?}");
    }

    #[test]
    fn bazilevic_suite_small() {
        let rep = bazilevic_suite(8, 5).unwrap();
        assert!(rep.pass, "{rep:?}");
    }

    #[test]
    fn lemma25_suite_small() {
        let rep = lemma25_suite(3, 5).unwrap();
        assert!(rep.pass, "{rep:?}");
    }
}
