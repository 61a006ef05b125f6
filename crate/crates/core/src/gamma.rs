//! Complex gamma function.
//!
//! The right half-plane `re z >= 1/2` uses a Lanczos partial-fraction sum
//! (g = 7, nine terms). The left half-plane goes through the reflection
//! formula `Γ(z) Γ(1-z) = π / sin(πz)`, which also serves as a test identity.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::elem::{cexp, clog, csin_pi};
use crate::error::{Error, Result};
use crate::Complex;

/// Absolute distance from a pole at which evaluation is refused.
pub const POLE_EPS: f64 = 1e-9;

/// Relative accuracy claimed for every gamma value, before the phase term.
const GAMMA_REL_ERROR: f64 = 1e-13;

/// Per-unit-|z| growth of the relative error; the phase of
/// `exp((z - 1/2) log t - t)` loses a few ulps per unit of exponent.
const GAMMA_PHASE_ERROR: f64 = 16.0 * f64::EPSILON;

/// Minimum distance from a pole accepted by [`reflection_residual`].
pub const REFLECTION_POLE_GAP: f64 = 0.1;

const LANCZOS_G: f64 = 7.0;

#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const SQRT_TWO_PI: f64 = 2.506_628_274_631_000_5;

/// A function value together with an error claim and the work spent on it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: Complex,
    pub abs_error_estimate: f64,
    pub terms_used: u32,
}

impl EvalResult {
    pub fn new(value: Complex, abs_error_estimate: f64, terms_used: u32) -> Self {
        EvalResult {
            value,
            abs_error_estimate,
            terms_used,
        }
    }
}

fn lanczos(z: Complex) -> Result<Complex> {
    let zm1 = z - 1.0;
    let mut sum = Complex::real(LANCZOS_COEFFS[0]);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        sum += Complex::real(c) / (zm1 + i as f64);
    }
    let t = zm1 + (LANCZOS_G + 0.5);
    let power = cexp((zm1 + 0.5) * clog(t)? - t)?;
    Ok(power * sum * SQRT_TWO_PI)
}

/// Index `n` of the pole `-n` closest to `z`, if `z` is in the left half-plane.
fn nearest_pole(z: Complex) -> Option<(i64, f64)> {
    if z.re >= 0.5 {
        return None;
    }
    let n = (-z.re).round().max(0.0);
    Some((n as i64, z.dist(Complex::real(-n))))
}

fn gamma_value(z: Complex) -> Result<Complex> {
    if !z.is_finite() {
        return Err(Error::domain(z, "non-finite argument"));
    }
    if let Some((index, dist)) = nearest_pole(z) {
        if dist < POLE_EPS {
            return Err(Error::Pole { z, index });
        }
    }
    let value = if z.re >= 0.5 {
        lanczos(z)?
    } else {
        let denom = csin_pi(z)? * lanczos(1.0 - z)?;
        Complex::real(PI) / denom
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow { z })
    }
}

/// Γ(z) with relative error below 1e-12 for |z| <= 50 away from the poles.
pub fn cgamma(z: Complex) -> Result<EvalResult> {
    let value = gamma_value(z)?;
    Ok(EvalResult::new(
        value,
        (GAMMA_REL_ERROR + GAMMA_PHASE_ERROR * z.abs()) * value.abs() + 1e-300,
        LANCZOS_COEFFS.len() as u32,
    ))
}

/// 1/Γ(z), which is entire; exact zeros at `0, -1, -2, ...`.
pub fn rgamma(z: Complex) -> Result<Complex> {
    if !z.is_finite() {
        return Err(Error::domain(z, "non-finite argument"));
    }
    if z.re >= 0.5 {
        Ok(lanczos(z)?.recip())
    } else {
        Ok(csin_pi(z)? * lanczos(1.0 - z)? / PI)
    }
}

/// Relative residual `|Γ(z)Γ(1-z) - π/sin(πz)| / |π/sin(πz)|`.
/// `true` when `z` and `1 - z` both keep [`REFLECTION_POLE_GAP`] from every pole.
pub fn reflection_admissible(z: Complex) -> bool {
    z.is_finite()
        && [z, 1.0 - z]
            .into_iter()
            .all(|w| nearest_pole(w).is_none_or(|(_, d)| d >= REFLECTION_POLE_GAP))
}

pub fn reflection_residual(z: Complex) -> Result<f64> {
    for w in [z, 1.0 - z] {
        if let Some((index, dist)) = nearest_pole(w) {
            if dist < REFLECTION_POLE_GAP {
                return Err(Error::Pole { z: w, index });
            }
        }
    }
    let sin = csin_pi(z)?;
    if sin.abs() < 1e-12 {
        return Err(Error::Degenerate {
            z,
            reason: "sin(πz) vanishes",
        });
    }
    let rhs = Complex::real(PI) / sin;
    let lhs = gamma_value(z)? * gamma_value(1.0 - z)?;
    Ok((lhs - rhs).abs() / rhs.abs())
}
