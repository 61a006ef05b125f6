//! Riemann zeta function.
//!
//! Three entry points:
//! - [`zeta_direct`]: the Dirichlet series `Σ n^{-z}` for `re z >= 1.1`,
//!   truncated at `N` terms and closed with an Euler–Maclaurin tail.
//! - [`zeta_eta`]: `ζ(z) = η(z) / (1 - 2^{1-z})` for `re z > 0`, with the
//!   alternating series summed by Borwein's Chebyshev-weighted scheme.
//! - [`zeta_strip`]: dispatcher that continues to `re z <= 0` through the
//!   functional equation.

use std::f64::consts::{LN_2, PI};

use crate::elem::{cexp, cexpm1, cpow_real_base};
use crate::error::{Error, Result};
use crate::gamma::{cgamma, rgamma, EvalResult, POLE_EPS};
use crate::Complex;

/// `B_{2k} / (2k)!` for `k = 1..=15`.
const BERNOULLI_OVER_FACTORIAL: [f64; 15] = [
    0.08333333333333333,
    -0.001388888888888889,
    3.306878306878307e-05,
    -8.267195767195768e-07,
    2.08767569878681e-08,
    -5.284190138687493e-10,
    1.3382536530684679e-11,
    -3.3896802963225827e-13,
    8.586062056277845e-15,
    -2.174868698558062e-16,
    5.5090028283602295e-18,
    -1.3954464685812522e-19,
    3.534707039629467e-21,
    -8.953517427037546e-23,
    2.267952452337683e-24,
];

/// Lower edge of the Dirichlet-series domain.
pub const DIRECT_MIN_RE: f64 = 1.1;

/// Lower edge of the continuation domain of [`zeta_strip`].
pub const STRIP_MIN_RE: f64 = -10.0;

/// Distance from `1 + 2πik/ln 2` (k != 0) inside which the eta quotient is
/// replaced by a contour average.
const REMOVABLE_RADIUS: f64 = 1e-3;

/// Radius of the contour used around removable points.
const REMOVABLE_CONTOUR: f64 = 4e-3;

/// `|z|` below which `ζ` near the origin is taken from a contour on `|w| = 0.2`.
const ORIGIN_RADIUS: f64 = 0.05;
const ORIGIN_CONTOUR: f64 = 0.2;

const CONTOUR_NODES: usize = 32;

const EPS: f64 = f64::EPSILON;

fn check_finite(z: Complex) -> Result<()> {
    if z.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(z, "non-finite argument"))
    }
}

fn check_pole(z: Complex) -> Result<()> {
    if z.dist(Complex::ONE) < POLE_EPS {
        Err(Error::Pole { z, index: -1 })
    } else {
        Ok(())
    }
}

/// `ζ(z)` from the Dirichlet series with an Euler–Maclaurin tail whose
/// remainder bound is at most `tail_tol`.
pub fn zeta_direct(z: Complex, tail_tol: f64) -> Result<EvalResult> {
    check_finite(z)?;
    if !(tail_tol > 0.0 && tail_tol.is_finite()) {
        return Err(Error::Precondition(format!(
            "tail tolerance must be positive and finite, got {tail_tol}"
        )));
    }
    if z.re < DIRECT_MIN_RE {
        return Err(Error::domain(z, "series diverges or converges too slowly"));
    }

    let mut n_terms = 10usize.max(z.abs().ceil() as usize);
    loop {
        if let Some((value, bound)) = euler_maclaurin(z, n_terms, tail_tol)? {
            return Ok(EvalResult::new(value, bound, n_terms as u32));
        }
        n_terms *= 2;
        if n_terms > 1 << 20 {
            return Err(Error::NonConvergence {
                iterations: n_terms as u32,
                residual: f64::NAN,
            });
        }
    }
}

/// Partial sum to `n - 1` plus tail terms; `None` if 15 correction terms
/// do not bring the remainder bound under `tol`.
fn euler_maclaurin(z: Complex, n: usize, tol: f64) -> Result<Option<(Complex, f64)>> {
    let mut sum = Complex::ZERO;
    for k in 1..n {
        sum += cpow_real_base(k as u64, -z)?;
    }
    let nf = n as f64;
    let n_pow = cpow_real_base(n as u64, -z)?;
    sum += n_pow * nf / (z - 1.0);
    sum += n_pow * 0.5;

    // rising = z (z+1) ... (z + 2k - 2);  power = N^{-z-2k+1}
    let mut rising = z;
    let mut power = n_pow / nf;
    for (k, &coef) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        let term = rising * power * coef;
        let j = 2.0 * k as f64;
        // next term, scaled per the standard remainder estimate
        let next_rising = rising * (z + (j + 1.0)) * (z + (j + 2.0));
        let next_power = power / (nf * nf);
        let next_coef = BERNOULLI_OVER_FACTORIAL
            .get(k + 1)
            .copied()
            .unwrap_or(coef / (4.0 * PI * PI));
        let next = (next_rising * next_power).abs() * next_coef.abs();
        let sigma_shift = z.re + j + 3.0;
        let bound = next * (z + (j + 3.0)).abs() / sigma_shift;
        sum += term;
        if bound <= tol {
            return Ok(Some((sum, bound)));
        }
        rising = next_rising;
        power = next_power;
    }
    Ok(None)
}

/// Number of Borwein terms for ordinate `t`.
fn borwein_terms(t: f64) -> usize {
    let digits = 16.0 + t.abs() * PI / (2.0 * std::f64::consts::LN_10);
    2 + (1.31 * digits).ceil() as usize
}

/// Weights `(d_n - d_k) / d_n` for `k = 0..n`.
fn borwein_weights(n: usize) -> Vec<f64> {
    let nf = n as f64;
    // a_i = n (n+i-1)! 4^i / ((n-i)! (2i)!), a_0 = 1
    let mut a = Vec::with_capacity(n + 1);
    let mut term = 1.0f64;
    a.push(term);
    for i in 1..=n {
        let fi = i as f64;
        term *= 4.0 * (nf + fi - 1.0) * (nf - fi + 1.0) / ((2.0 * fi - 1.0) * (2.0 * fi));
        a.push(term);
    }
    let total: f64 = a.iter().sum();
    let mut weights = vec![0.0; n];
    let mut suffix = 0.0;
    for k in (0..n).rev() {
        suffix += a[k + 1];
        weights[k] = suffix / total;
    }
    weights
}

/// Accelerated `η(z)`; returns `(value, rounding estimate, terms)`.
fn eta_accelerated(z: Complex) -> Result<(Complex, f64, usize)> {
    let n = borwein_terms(z.im);
    let weights = borwein_weights(n);
    let mut sum = Complex::ZERO;
    let mut magnitude = 0.0;
    for (k, &w) in weights.iter().enumerate() {
        let term = cpow_real_base(k as u64 + 1, -z)? * w;
        magnitude += term.abs();
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let truncation = 3.0
        * (1.0 + 2.0 * z.im.abs())
        * (0.5 * PI * z.im.abs() - n as f64 * (3.0 + 8f64.sqrt()).ln()).exp();
    Ok((sum, truncation + 4.0 * n as f64 * EPS * magnitude, n))
}

/// `η(z) / (1 - 2^{1-z})` evaluated directly.
fn eta_quotient(z: Complex) -> Result<EvalResult> {
    let (eta, eta_err, n) = eta_accelerated(z)?;
    // 1 - 2^{1-z} = -expm1((1 - z) ln 2)
    let denom = -cexpm1((1.0 - z) * LN_2)?;
    let value = eta / denom;
    let err = eta_err / denom.abs() + 4.0 * EPS * value.abs();
    Ok(EvalResult::new(value, err, n as u32))
}

/// Cauchy integral on a circle: `f(z) = (1/N) Σ f(w_j) (w_j - c) / (w_j - z)`.
fn contour_value<F>(center: Complex, radius: f64, z: Complex, f: F) -> Result<EvalResult>
where
    F: Fn(Complex) -> Result<EvalResult>,
{
    let mut acc = Complex::ZERO;
    let mut err = 0.0;
    let mut terms = 0u32;
    for j in 0..CONTOUR_NODES {
        let theta = 2.0 * PI * (j as f64 + 0.5) / CONTOUR_NODES as f64;
        let offset = Complex::new(theta.cos(), theta.sin()) * radius;
        let w = center + offset;
        let fw = f(w)?;
        let kernel = offset / (w - z);
        acc += fw.value * kernel;
        err += fw.abs_error_estimate * kernel.abs();
        terms += fw.terms_used;
    }
    let n = CONTOUR_NODES as f64;
    let ratio = z.dist(center) / radius;
    let value = acc / n;
    let discretization = ratio.powi(CONTOUR_NODES as i32) * value.abs();
    Ok(EvalResult::new(value, err / n + discretization, terms))
}

/// Nearest removable point `1 + 2πik/ln 2` with `k != 0`, if within range.
fn removable_center(z: Complex) -> Option<Complex> {
    let spacing = 2.0 * PI / LN_2;
    let k = (z.im / spacing).round();
    if k == 0.0 {
        return None;
    }
    let center = Complex::new(1.0, k * spacing);
    (z.dist(center) < REMOVABLE_RADIUS).then_some(center)
}

/// `ζ(z)` from the eta form, valid for `re z > 0`, `z != 1`.
pub fn zeta_eta(z: Complex) -> Result<EvalResult> {
    check_finite(z)?;
    if z.re <= 0.0 {
        return Err(Error::domain(z, "eta form requires re z > 0"));
    }
    check_pole(z)?;
    match removable_center(z) {
        Some(center) => contour_value(center, REMOVABLE_CONTOUR, z, eta_quotient),
        None => eta_quotient(z),
    }
}

/// `ζ(z) = π^{z-1/2} Γ((1-z)/2) ζ(1-z) / Γ(z/2)` for `re z <= 0`.
fn zeta_reflected(z: Complex) -> Result<EvalResult> {
    let mirror = zeta_eta(1.0 - z)?;
    let pi_power = cexp((z - 0.5) * PI.ln())?;
    let gamma_half = cgamma((1.0 - z) * 0.5)?;
    let factor = pi_power * gamma_half.value * rgamma(z * 0.5)?;
    let value = factor * mirror.value;
    let err = factor.abs() * mirror.abs_error_estimate + 4e-13 * value.abs();
    Ok(EvalResult::new(
        value,
        err,
        mirror.terms_used + gamma_half.terms_used,
    ))
}

fn zeta_piecewise(z: Complex) -> Result<EvalResult> {
    if z.re > 0.0 {
        zeta_eta(z)
    } else {
        zeta_reflected(z)
    }
}

/// Single entry point for `re z >= -10`, `z != 1`.
///
/// Negative even integers are exact zeros on this path: `1/Γ(z/2)` is
/// evaluated through `sin(πz/2)` with exact argument reduction.
pub fn zeta_strip(z: Complex) -> Result<EvalResult> {
    check_finite(z)?;
    check_pole(z)?;
    if z.re < STRIP_MIN_RE {
        return Err(Error::domain(z, "continuation supported for re z >= -10"));
    }
    if z.re > 0.0 {
        return zeta_eta(z);
    }
    if z.abs() < ORIGIN_RADIUS {
        // ζ(1-z) has its pole here; integrate around the origin instead.
        return contour_value(Complex::ZERO, ORIGIN_CONTOUR, z, zeta_piecewise);
    }
    zeta_reflected(z)
}
