//! Sign-change bracketing and bisection of `ξ(1/2 + it)`.
//!
//! `ξ` is real and continuous on the critical line, so a sign change
//! between two samples encloses a zero; bisection shrinks the enclosure.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::xi::{xi_on_line, LINE_MAX_T};

/// Residual `|ξ|` a refined zero must reach.
pub const RESID_TOL: f64 = 1e-9;
/// Bisection stops once the enclosure is narrower than this.
pub const BISECT_WIDTH: f64 = 1e-12;
pub const MAX_BISECTIONS: u32 = 60;
/// Samples with `|ξ|` below this are treated as exact zeros and nudged.
pub const ZERO_SAMPLE_TOL: f64 = 1e-13;
/// Largest admissible sampling step.
pub const MAX_STEP: f64 = 0.5;

/// An interval on the critical line whose endpoint values differ in sign.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    pub t_lo: f64,
    pub t_hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl Bracket {
    pub fn new(t_lo: f64, t_hi: f64, f_lo: f64, f_hi: f64) -> Result<Self> {
        let b = Bracket {
            t_lo,
            t_hi,
            f_lo,
            f_hi,
        };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.t_lo < self.t_hi) {
            return Err(Error::Precondition(format!(
                "bracket needs t_lo < t_hi, got [{}, {}]",
                self.t_lo, self.t_hi
            )));
        }
        if !(self.f_lo * self.f_hi < 0.0) {
            return Err(Error::Precondition(format!(
                "bracket endpoints must differ in sign, got {:e} and {:e}",
                self.f_lo, self.f_hi
            )));
        }
        Ok(())
    }

    pub fn contains(&self, t: f64) -> bool {
        self.t_lo < t && t < self.t_hi
    }

    pub fn width(&self) -> f64 {
        self.t_hi - self.t_lo
    }
}

/// A zero `1/2 + it` of ξ located by bisection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub t: f64,
    pub residual: f64,
    pub iterations: u32,
    pub bracket: Bracket,
}

fn check_interval(t_lo: f64, t_hi: f64, step: f64) -> Result<()> {
    if !(t_lo.is_finite() && t_hi.is_finite() && step.is_finite()) {
        return Err(Error::Precondition(
            "interval and step must be finite".into(),
        ));
    }
    if !(0.0 <= t_lo && t_lo < t_hi && t_hi <= LINE_MAX_T) {
        return Err(Error::Precondition(format!(
            "need 0 <= t_lo < t_hi <= {LINE_MAX_T}, got [{t_lo}, {t_hi}]"
        )));
    }
    if !(step > 0.0 && step <= MAX_STEP) {
        return Err(Error::Precondition(format!(
            "need 0 < step <= {MAX_STEP}, got {step}"
        )));
    }
    Ok(())
}

/// Sample ordinates `t_lo, t_lo + step, ...`, closed with `t_hi`.
pub(crate) fn sample_points(t_lo: f64, t_hi: f64, step: f64) -> Vec<f64> {
    let count = ((t_hi - t_lo) / step + 1e-9).floor() as usize;
    let mut ts: Vec<f64> = (0..=count).map(|i| t_lo + i as f64 * step).collect();
    if let Some(&last) = ts.last() {
        if last > t_hi {
            ts.pop();
        }
    }
    if ts.last().is_none_or(|&last| t_hi - last > 1e-9 * step) {
        ts.push(t_hi);
    }
    ts
}

/// `ξ(1/2 + it)`, moved off exact zeros so the sample has a strict sign.
fn signed_sample(t: f64, step: f64, forward: bool) -> Result<(f64, f64)> {
    let mut t = t;
    let mut v = xi_on_line(t)?;
    let nudge = if forward { step / 100.0 } else { -step / 100.0 };
    let mut tries = 0;
    while v.abs() < ZERO_SAMPLE_TOL && tries < 4 {
        let moved = t + nudge;
        let w = xi_on_line(moved)?;
        t = moved;
        v = w;
        tries += 1;
        if v != 0.0 {
            break;
        }
    }
    if v == 0.0 {
        return Err(Error::Degenerate {
            z: crate::Complex::new(0.5, t),
            reason: "sample stays at an exact zero after nudging",
        });
    }
    Ok((t, v))
}

/// All sign changes of `ξ(1/2 + it)` at the given sampling of `[t_lo, t_hi]`.
pub fn bracket_line(t_lo: f64, t_hi: f64, step: f64) -> Result<Vec<Bracket>> {
    bracket_line_with(Exec::default(), t_lo, t_hi, step)
}

pub fn bracket_line_with(exec: Exec, t_lo: f64, t_hi: f64, step: f64) -> Result<Vec<Bracket>> {
    check_interval(t_lo, t_hi, step)?;
    let ts = sample_points(t_lo, t_hi, step);
    let last = ts.len() - 1;
    let samples = exec.try_map_indexed(ts.len(), |i| signed_sample(ts[i], step, i != last))?;
    Ok(samples
        .windows(2)
        .filter(|w| w[0].1 * w[1].1 < 0.0 && w[0].0 < w[1].0)
        .map(|w| Bracket {
            t_lo: w[0].0,
            t_hi: w[1].0,
            f_lo: w[0].1,
            f_hi: w[1].1,
        })
        .collect())
}

/// Bisects `b` down to [`BISECT_WIDTH`] and checks the residual.
pub fn refine(b: Bracket) -> Result<ZeroRecord> {
    refine_with(b, RESID_TOL)
}

/// [`refine`] with a caller-chosen residual tolerance.
pub fn refine_with(b: Bracket, resid_tol: f64) -> Result<ZeroRecord> {
    b.validate()?;
    if !(resid_tol > 0.0) {
        return Err(Error::Precondition(format!(
            "residual tolerance must be positive, got {resid_tol}"
        )));
    }
    let (mut lo, mut hi) = (b.t_lo, b.t_hi);
    let mut f_lo = b.f_lo;
    let mut iterations = 0;
    let mut exact = None;
    while hi - lo >= BISECT_WIDTH && iterations < MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = xi_on_line(mid)?;
        iterations += 1;
        if f_mid == 0.0 {
            exact = Some(mid);
            break;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    let t = exact.unwrap_or(0.5 * (lo + hi));
    let residual = xi_on_line(t)?.abs();
    if residual > resid_tol || iterations == 0 {
        return Err(Error::NonConvergence {
            iterations,
            residual,
        });
    }
    Ok(ZeroRecord {
        t,
        residual,
        iterations,
        bracket: b,
    })
}

/// Brackets and refines every sign change on `[t_lo, t_hi]`.
pub fn find_zeros(exec: Exec, t_lo: f64, t_hi: f64, step: f64) -> Result<Vec<ZeroRecord>> {
    find_zeros_with(exec, t_lo, t_hi, step, RESID_TOL)
}

pub fn find_zeros_with(
    exec: Exec,
    t_lo: f64,
    t_hi: f64,
    step: f64,
    resid_tol: f64,
) -> Result<Vec<ZeroRecord>> {
    let brackets = bracket_line_with(exec, t_lo, t_hi, step)?;
    exec.try_map_indexed(brackets.len(), |i| refine_with(brackets[i], resid_tol))
}
