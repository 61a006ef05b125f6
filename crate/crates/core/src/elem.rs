//! Elementary complex functions assembled from their real parts.
//!
//! `e^(a+ib) = e^a (cos b + i sin b)` and
//! `cos(x+iy) = cos x cosh y - i sin x sinh y` are written out directly so
//! that the decompositions themselves are what the tests exercise.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::Complex;

/// Largest |exponent| accepted by [`cexp`] and the hyperbolic functions.
pub const OVERFLOW_THRESHOLD: f64 = 700.0;

fn check_finite(z: Complex) -> Result<()> {
    if z.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(z, "non-finite argument"))
    }
}

pub fn cexp(z: Complex) -> Result<Complex> {
    check_finite(z)?;
    if z.re.abs() > OVERFLOW_THRESHOLD {
        return Err(Error::Overflow { z });
    }
    let scale = z.re.exp();
    let (sin_b, cos_b) = z.im.sin_cos();
    Ok(Complex::new(scale * cos_b, scale * sin_b))
}

/// `e^z - 1` without cancellation for small `z`.
pub fn cexpm1(z: Complex) -> Result<Complex> {
    check_finite(z)?;
    if z.re.abs() > OVERFLOW_THRESHOLD {
        return Err(Error::Overflow { z });
    }
    let (sin_b, cos_b) = z.im.sin_cos();
    let half = (0.5 * z.im).sin();
    let re = z.re.exp_m1() * cos_b - 2.0 * half * half;
    Ok(Complex::new(re, z.re.exp() * sin_b))
}

fn check_hyperbolic(z: Complex, arg: f64) -> Result<()> {
    check_finite(z)?;
    if arg.abs() > OVERFLOW_THRESHOLD {
        Err(Error::Overflow { z })
    } else {
        Ok(())
    }
}

pub fn ccos(z: Complex) -> Result<Complex> {
    check_hyperbolic(z, z.im)?;
    let (sin_x, cos_x) = z.re.sin_cos();
    Ok(Complex::new(cos_x * z.im.cosh(), -sin_x * z.im.sinh()))
}

pub fn csin(z: Complex) -> Result<Complex> {
    check_hyperbolic(z, z.im)?;
    let (sin_x, cos_x) = z.re.sin_cos();
    Ok(Complex::new(sin_x * z.im.cosh(), cos_x * z.im.sinh()))
}

pub fn ccosh(z: Complex) -> Result<Complex> {
    check_hyperbolic(z, z.re)?;
    let (sin_y, cos_y) = z.im.sin_cos();
    Ok(Complex::new(z.re.cosh() * cos_y, z.re.sinh() * sin_y))
}

pub fn csinh(z: Complex) -> Result<Complex> {
    check_hyperbolic(z, z.re)?;
    let (sin_y, cos_y) = z.im.sin_cos();
    Ok(Complex::new(z.re.sinh() * cos_y, z.re.cosh() * sin_y))
}

/// Principal logarithm; the imaginary part lies in `(-π, π]`.
pub fn clog(z: Complex) -> Result<Complex> {
    check_finite(z)?;
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::domain(z, "logarithm of zero"));
    }
    Ok(Complex::new(z.abs().ln(), z.arg()))
}

/// `n^z = n^x [cos(y ln n) + i sin(y ln n)]` for a positive integer base.
pub fn cpow_real_base(n: u64, z: Complex) -> Result<Complex> {
    check_finite(z)?;
    if n == 0 {
        return Err(Error::domain(z, "power base must be a positive integer"));
    }
    if n == 1 {
        return Ok(Complex::ONE);
    }
    cexp(z * (n as f64).ln())
}

/// `sin(πx)` with exact reduction, so integers give exact zeros.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let mut r = x % 2.0;
    if r > 1.0 {
        r -= 2.0;
    } else if r < -1.0 {
        r += 2.0;
    }
    // r in [-1, 1]
    if r == 0.0 || r.abs() == 1.0 {
        return 0.0;
    }
    let sign = r.signum();
    let mut a = r.abs();
    if a > 0.5 {
        a = 1.0 - a;
    }
    let s = if a > 0.25 {
        (PI * (0.5 - a)).cos()
    } else {
        (PI * a).sin()
    };
    sign * s
}

/// `cos(πx)` with exact reduction, so half-integers give exact zeros.
pub fn cos_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let mut r = x.abs() % 2.0;
    if r > 1.0 {
        r = 2.0 - r;
    }
    // r in [0, 1]
    if r == 0.5 {
        0.0
    } else if r < 0.25 {
        (PI * r).cos()
    } else if r < 0.75 {
        (PI * (0.5 - r)).sin()
    } else {
        -(PI * (1.0 - r)).cos()
    }
}

/// `sin(πz)` built from [`sin_pi`]/[`cos_pi`] on the real part.
pub fn csin_pi(z: Complex) -> Result<Complex> {
    let y = PI * z.im;
    check_hyperbolic(z, y)?;
    Ok(Complex::new(
        sin_pi(z.re) * y.cosh(),
        cos_pi(z.re) * y.sinh(),
    ))
}
