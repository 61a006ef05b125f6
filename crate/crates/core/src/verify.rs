//! Residual suites for the functional identities.
//!
//! Random suites draw their points from a seeded ChaCha stream before any
//! evaluation, so a given seed always checks the same points.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::gamma::{reflection_admissible, reflection_residual};
use crate::xi::{functional_eq_residual, symmetry_residuals, xi_eval, CriticalPoint, LINE_MAX_T};
use crate::Complex;

pub const DEFAULT_SEED: u64 = 20_240_607;
pub const DEFAULT_SAMPLES: usize = 1000;
pub const DEFAULT_SYMMETRY_NODES: usize = 20;
pub const DEFAULT_T_MAX: f64 = 50.0;
pub const LINE_STEP: f64 = 0.5;
pub const SYMMETRY_MAX_D: f64 = 0.45;

/// Sampling box for the functional-equation suite.
pub const FUNCTIONAL_EQ_RE: (f64, f64) = (-2.0, 3.0);
pub const FUNCTIONAL_EQ_IM: f64 = 50.0;
/// Sampling box (both axes) for the reflection suite.
pub const REFLECTION_BOX: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    FunctionalEq,
    Reflection,
    LineReal,
    Symmetry,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::FunctionalEq,
        Suite::Reflection,
        Suite::LineReal,
        Suite::Symmetry,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::FunctionalEq => "functional-eq",
            Suite::Reflection => "reflection",
            Suite::LineReal => "line-real",
            Suite::Symmetry => "symmetry",
        }
    }

    pub fn default_tol(self) -> f64 {
        match self {
            Suite::FunctionalEq | Suite::Reflection | Suite::LineReal => 1e-10,
            Suite::Symmetry => 1e-9,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    /// Random suites: number of points. Symmetry: nodes per axis.
    /// Line-real: unused (the grid is fixed by `t_max`).
    pub samples: Option<usize>,
    pub seed: u64,
    pub t_max: f64,
    pub tol: Option<f64>,
    pub exec: Exec,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            samples: None,
            seed: DEFAULT_SEED,
            t_max: DEFAULT_T_MAX,
            tol: None,
            exec: Exec::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub samples: usize,
    pub max_residual: f64,
    pub worst_point: Complex,
    pub tol: f64,
    pub pass: bool,
}

fn validate(suite: Suite, cfg: &SuiteConfig) -> Result<f64> {
    if cfg.samples == Some(0) {
        return Err(Error::Precondition(
            "a suite needs at least one sample".into(),
        ));
    }
    if suite == Suite::Symmetry && cfg.samples == Some(1) {
        return Err(Error::Precondition(
            "symmetry grid needs at least 2 nodes per axis".into(),
        ));
    }
    if !(cfg.t_max > 0.0 && cfg.t_max <= LINE_MAX_T) {
        return Err(Error::Precondition(format!(
            "t_max must lie in (0, {LINE_MAX_T}], got {}",
            cfg.t_max
        )));
    }
    let tol = cfg.tol.unwrap_or(suite.default_tol());
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Precondition(format!(
            "suite tolerance must be positive, got {tol}"
        )));
    }
    Ok(tol)
}

/// Points the suite evaluates, in evaluation order.
pub fn suite_points(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<Complex>> {
    validate(suite, cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let points = match suite {
        Suite::FunctionalEq => {
            let n = cfg.samples.unwrap_or(DEFAULT_SAMPLES);
            let (lo, hi) = FUNCTIONAL_EQ_RE;
            (0..n)
                .map(|_| loop {
                    let re = rng.gen_range(lo..hi);
                    if re > lo {
                        break Complex::new(
                            re,
                            rng.gen_range(-FUNCTIONAL_EQ_IM..=FUNCTIONAL_EQ_IM),
                        );
                    }
                })
                .collect()
        }
        Suite::Reflection => {
            let n = cfg.samples.unwrap_or(DEFAULT_SAMPLES);
            let mut points = Vec::with_capacity(n);
            while points.len() < n {
                let z = Complex::new(
                    rng.gen_range(-REFLECTION_BOX..=REFLECTION_BOX),
                    rng.gen_range(-REFLECTION_BOX..=REFLECTION_BOX),
                );
                if reflection_admissible(z) {
                    points.push(z);
                }
            }
            points
        }
        Suite::LineReal => {
            let count = (cfg.t_max / LINE_STEP + 1e-9).floor() as usize;
            (0..=count)
                .map(|k| Complex::new(0.5, k as f64 * LINE_STEP))
                .collect()
        }
        Suite::Symmetry => {
            let n = cfg.samples.unwrap_or(DEFAULT_SYMMETRY_NODES);
            let last = (n - 1) as f64;
            (0..n * n)
                .map(|k| {
                    let d = SYMMETRY_MAX_D * (k % n) as f64 / last;
                    let t = cfg.t_max * (k / n) as f64 / last;
                    Complex::new(0.5 + d, t)
                })
                .collect()
        }
    };
    Ok(points)
}

fn residual(suite: Suite, z: Complex) -> Result<f64> {
    match suite {
        Suite::FunctionalEq => functional_eq_residual(z),
        Suite::Reflection => reflection_residual(z),
        Suite::LineReal => {
            let v = xi_eval(z)?.value;
            Ok(v.im.abs() / (1.0 + v.re.abs()))
        }
        Suite::Symmetry => {
            let (re, im) = symmetry_residuals(CriticalPoint::new(z.re - 0.5, z.im))?;
            Ok(re.max(im))
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<VerifyReport> {
    let tol = validate(suite, cfg)?;
    let points = suite_points(suite, cfg)?;
    let residuals = cfg
        .exec
        .try_map_indexed(points.len(), |k| residual(suite, points[k]))?;
    let (worst, max_residual) =
        residuals
            .iter()
            .copied()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |best, (k, r)| {
                // NaN residuals count as the worst possible.
                let r = if r.is_nan() { f64::INFINITY } else { r };
                if r > best.1 {
                    (k, r)
                } else {
                    best
                }
            });
    Ok(VerifyReport {
        suite,
        samples: points.len(),
        max_residual,
        worst_point: points[worst],
        tol,
        pass: max_residual < tol,
    })
}
