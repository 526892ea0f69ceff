//! Admissibility sampling for the two test functions used by the
//! implication results:
//!
//!   psi1(u, v) = v / (xi u),            xi > 0,    excluded point u = 0
//!   psi2(u, v) = 1/2 + v / (xi (1+u)),  0 < xi <= 1, excluded point u = -1
//!
//! The conditions sampled are: (b) Re psi(1, 0) >= 0 within margin, and
//! (c) Re psi(i u2, v1) <= 0 within margin whenever 2 v1 <= -(1 + u2^2).
//! psi1 sits exactly on the (b) boundary (Re psi1(1,0) = 0), which is
//! reported via the `b_boundary` flag.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PsiId {
    Psi1,
    Psi2,
}

/// One of the admissible test functions, with its parameter and domain
/// exclusion.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PsiFunction {
    pub id: PsiId,
    pub xi: f64,
}

impl PsiFunction {
    pub fn new(id: PsiId, xi: f64) -> Result<Self> {
        match id {
            PsiId::Psi1 => {
                if !(xi > 0.0) {
                    return Err(Error::Param(format!("psi1 needs xi > 0, got {xi}")));
                }
            }
            PsiId::Psi2 => {
                if !(xi > 0.0 && xi <= 1.0) {
                    return Err(Error::Param(format!("psi2 needs 0 < xi <= 1, got {xi}")));
                }
            }
        }
        Ok(Self { id, xi })
    }

    /// Evaluates psi(u, v), or `None` at the excluded point of the domain.
    pub fn eval(&self, u: Complex64, v: Complex64) -> Option<Complex64> {
        match self.id {
            PsiId::Psi1 => {
                if u == Complex64::ZERO {
                    None
                } else {
                    Some(v / (self.xi * u))
                }
            }
            PsiId::Psi2 => {
                let d = Complex64::ONE + u;
                if d == Complex64::ZERO {
                    None
                } else {
                    Some(Complex64::new(0.5, 0.0) + v / (self.xi * d))
                }
            }
        }
    }
}

/// Outcome of sampling conditions (b) and (c).
#[derive(Debug, Clone, Serialize)]
pub struct PsiReport {
    pub id: PsiId,
    pub samples: usize,
    /// Samples skipped because they hit the domain exclusion.
    pub skipped: usize,
    /// Largest Re psi(i u2, v1) seen over admissible samples (must be
    /// <= margin).
    pub max_c_value: f64,
    /// Re psi(1, 0).
    pub b_value: f64,
    /// Re psi(1, 0) fell within margin of zero rather than strictly above.
    pub b_boundary: bool,
    pub margin: f64,
    pub pass: bool,
}

/// Samples (u2, v1) with 2 v1 <= -(1 + u2^2), drawing xi across the
/// allowed range of the given function, and checks conditions (b)-(c).
/// One quarter of the samples sit exactly on the parabola boundary, where
/// psi2 with xi = 1 attains equality.
pub fn psi_admissibility(id: PsiId, samples: usize, seed: u64, margin: f64) -> Result<PsiReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_c_value = f64::NEG_INFINITY;
    let mut skipped = 0usize;

    let mut b_value: f64 = f64::INFINITY;
    for _ in 0..samples {
        let xi = match id {
            // log-uniform over (0.1, 10]
            PsiId::Psi1 => 10.0_f64.powf(rng.random_range(-1.0..=1.0)),
            PsiId::Psi2 => rng.random_range(1e-3..=1.0),
        };
        let psi = PsiFunction::new(id, xi)?;

        let u2: f64 = rng.random_range(-4.0..=4.0);
        let boundary = rng.random_range(0u32..4) == 0;
        let excess = if boundary { 0.0 } else { rng.random_range(0.0..4.0) };
        let v1 = -(1.0 + u2 * u2) / 2.0 - excess;

        match psi.eval(Complex64::new(0.0, u2), Complex64::new(v1, 0.0)) {
            Some(w) => max_c_value = max_c_value.max(w.re),
            None => skipped += 1,
        }
        let b = psi
            .eval(Complex64::ONE, Complex64::ZERO)
            .expect("(1, 0) is in the domain")
            .re;
        b_value = b_value.min(b);
    }

    let pass = max_c_value <= margin && b_value >= -margin;
    Ok(PsiReport {
        id,
        samples,
        skipped,
        max_c_value,
        b_value,
        b_boundary: b_value.abs() <= margin,
        margin,
        pass,
    })
}
