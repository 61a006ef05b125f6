//! Completed xi function
//! `ξ(z) = z (1-z) Γ(z/2) ζ(z) / (2 π^{z/2})`.
//!
//! The `z (1-z)` numerator is kept as written, so this ξ is the negative of
//! the `½ s(s-1) …` normalization found in most references: `ξ(1/2) ≈ -0.4971`.
//!
//! The composition is finite everywhere in the supported region but several
//! factors are singular on their own:
//! - at `z = 0`, `z Γ(z/2)` is fused as `2 Γ(1 + z/2)`;
//! - near `z = 1`, `(1-z) ζ(z)` is extrapolated from a ring of samples;
//! - near `z = -2n`, `Γ(z/2) ζ(z)` is replaced by its reflected form
//!   `π^{z-1/2} Γ((1-z)/2) ζ(1-z)`, which makes the node of `1/Γ` explicit.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::elem::cexp;
use crate::error::{Error, Result};
use crate::gamma::{cgamma, EvalResult};
use crate::zeta::{zeta_eta, zeta_strip};
use crate::Complex;

/// Open interval of `re z` accepted by [`xi_eval`].
pub const XI_MIN_RE: f64 = -10.0;
pub const XI_MAX_RE: f64 = 11.0;

/// Largest |t| accepted on the critical line.
pub const LINE_MAX_T: f64 = 60.0;

/// Tolerance on the discarded imaginary part in [`xi_on_line`].
pub const LINE_IMAG_TOL: f64 = 1e-10;

/// Radius around `z = 1` inside which `(1-z) ζ(z)` is extrapolated.
const POLE_FUSE_RADIUS: f64 = 1e-4;
/// Outer sampling radius for that extrapolation.
const POLE_RING_RADIUS: f64 = 1e-3;

/// Radius around `-2n` inside which the reflected composition is used.
const TRIVIAL_ZERO_RADIUS: f64 = 1e-4;

/// A point `1/2 + d + it` described by its offset from the critical line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalPoint {
    pub d: f64,
    pub t: f64,
}

impl CriticalPoint {
    pub fn new(d: f64, t: f64) -> Self {
        CriticalPoint { d, t }
    }

    pub fn on_line(t: f64) -> Self {
        CriticalPoint { d: 0.0, t }
    }

    pub fn in_strip(&self) -> bool {
        self.d.abs() < 0.5
    }

    pub fn is_on_line(&self) -> bool {
        self.d == 0.0
    }

    pub fn to_complex(self) -> Complex {
        Complex::new(0.5 + self.d, self.t)
    }

    /// The reflected point `1/2 - d + it`.
    pub fn mirror(self) -> Self {
        CriticalPoint {
            d: -self.d,
            t: self.t,
        }
    }
}

fn check_domain(z: Complex) -> Result<()> {
    if !z.is_finite() {
        return Err(Error::domain(z, "non-finite argument"));
    }
    if z.re <= XI_MIN_RE || z.re >= XI_MAX_RE {
        return Err(Error::domain(z, "xi supported for -10 < re z < 11"));
    }
    Ok(())
}

/// `n >= 1` when `z` lies within the trivial-zero radius of `-2n`.
fn near_trivial_zero(z: Complex) -> Option<f64> {
    if z.re > -1.0 {
        return None;
    }
    let n = (-z.re / 2.0).round();
    let node = Complex::real(-2.0 * n);
    (n >= 1.0 && z.dist(node) < TRIVIAL_ZERO_RADIUS).then_some(n)
}

/// `(1 - w) ζ(w)` evaluated directly.
fn pole_product(w: Complex) -> Result<EvalResult> {
    let zeta = zeta_strip(w)?;
    let factor = 1.0 - w;
    Ok(EvalResult::new(
        factor * zeta.value,
        factor.abs() * zeta.abs_error_estimate,
        zeta.terms_used,
    ))
}

/// Four-point ring mean of `(1-w) ζ(w)` around `z`; exact up to `O(r^4)`.
fn ring_mean(z: Complex, r: f64) -> Result<(Complex, f64, u32)> {
    let mut sum = Complex::ZERO;
    let mut err = 0.0;
    let mut terms = 0;
    for dir in [Complex::ONE, Complex::I, -Complex::ONE, -Complex::I] {
        let p = pole_product(z + dir * r)?;
        sum += p.value;
        err += p.abs_error_estimate;
        terms += p.terms_used;
    }
    Ok((sum * 0.25, err * 0.25, terms))
}

/// `(1-z) ζ(z)` near the pole by three-level Richardson extrapolation of
/// ring means at radii `r, r/2, r/4`.
fn pole_product_fused(z: Complex) -> Result<EvalResult> {
    let (a0, e0, n0) = ring_mean(z, POLE_RING_RADIUS)?;
    let (a1, e1, n1) = ring_mean(z, POLE_RING_RADIUS / 2.0)?;
    let (a2, e2, n2) = ring_mean(z, POLE_RING_RADIUS / 4.0)?;
    // A(r) = h + c4 r^4 + c8 r^8 + ...
    let r01 = (a1 * 16.0 - a0) / 15.0;
    let r12 = (a2 * 16.0 - a1) / 15.0;
    let value = (r12 * 256.0 - r01) / 255.0;
    let err = (e0 + e1 + e2) * 1.2 + (r12 - r01).abs() / 255.0;
    Ok(EvalResult::new(value, err, n0 + n1 + n2))
}

/// `π^{w}` through the elementary exponential.
fn pi_power(w: Complex) -> Result<Complex> {
    cexp(w * PI.ln())
}

/// `ξ(z)` for `-10 < re z < 11`, including `z = 0` and `z = 1`.
pub fn xi_eval(z: Complex) -> Result<EvalResult> {
    check_domain(z)?;
    let denom = pi_power(z * 0.5)? * 2.0;

    if near_trivial_zero(z).is_some() {
        // Γ(z/2) ζ(z) = π^{z-1/2} Γ((1-z)/2) ζ(1-z)
        let gamma = cgamma((1.0 - z) * 0.5)?;
        let zeta = zeta_eta(1.0 - z)?;
        let prefactor = z * (1.0 - z) * pi_power(z - 0.5)? * gamma.value / denom;
        let value = prefactor * zeta.value;
        let err = prefactor.abs() * zeta.abs_error_estimate
            + value.abs() * gamma.abs_error_estimate / gamma.value.abs();
        return Ok(EvalResult::new(
            value,
            err,
            gamma.terms_used + zeta.terms_used,
        ));
    }

    // z Γ(z/2) = 2 Γ(1 + z/2)
    let gamma = cgamma(z * 0.5 + 1.0)?;
    let pole = if z.dist(Complex::ONE) < POLE_FUSE_RADIUS {
        pole_product_fused(z)?
    } else {
        pole_product(z)?
    };
    let prefactor = gamma.value * 2.0 / denom;
    let value = prefactor * pole.value;
    let err = prefactor.abs() * pole.abs_error_estimate
        + value.abs() * (gamma.abs_error_estimate / gamma.value.abs() + 1e-15 * (1.0 + z.abs()));
    Ok(EvalResult::new(
        value,
        err,
        gamma.terms_used + pole.terms_used,
    ))
}

/// The real value `ξ(1/2 + it)`.
///
/// Fails with [`Error::InternalConsistency`] if the computed imaginary part
/// exceeds `1e-10 (1 + |re|)`.
pub fn xi_on_line(t: f64) -> Result<f64> {
    let z = Complex::new(0.5, t);
    if !(t.abs() <= LINE_MAX_T) {
        return Err(Error::domain(
            z,
            "critical-line ordinate must satisfy |t| <= 60",
        ));
    }
    let v = xi_eval(z)?.value;
    if v.im.abs() > LINE_IMAG_TOL * (1.0 + v.re.abs()) {
        return Err(Error::InternalConsistency(format!(
            "xi(1/2 + {t}i) has imaginary part {:e}",
            v.im
        )));
    }
    Ok(v.re)
}

/// Scale-free residual of `ξ(z) = ξ(1-z)`, in `[0, 1]`.
pub fn functional_eq_residual(z: Complex) -> Result<f64> {
    let a = xi_eval(z)?.value;
    let b = xi_eval(1.0 - z)?.value;
    Ok((a - b).abs() / (a.abs() + b.abs() + 1e-300))
}

/// `ξ` at `1/2 + d + it` and `1/2 - d + it`.
pub fn symmetric_pair(p: CriticalPoint) -> Result<(Complex, Complex)> {
    if !p.in_strip() || !(p.t.abs() <= LINE_MAX_T) {
        return Err(Error::Precondition(format!(
            "symmetry check needs |d| < 0.5 and |t| <= 60, got d = {}, t = {}",
            p.d, p.t
        )));
    }
    let plus = xi_eval(p.to_complex())?.value;
    let minus = xi_eval(p.mirror().to_complex())?.value;
    Ok((plus, minus))
}

/// `(|Re ξ(½-d+it) - Re ξ(½+d+it)|, |Im ξ(½-d+it) + Im ξ(½+d+it)|)`.
pub fn symmetry_residuals(p: CriticalPoint) -> Result<(f64, f64)> {
    let (plus, minus) = symmetric_pair(p)?;
    Ok(((minus.re - plus.re).abs(), (minus.im + plus.im).abs()))
}
