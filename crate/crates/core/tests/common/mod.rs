#![allow(dead_code)]

#[allow(clippy::approx_constant, clippy::type_complexity)]
pub mod golden;

use critline::Complex;

pub fn c(p: (f64, f64)) -> Complex {
    Complex::new(p.0, p.1)
}

/// Relative error with an absolute floor for values near zero.
pub fn rel_err(got: Complex, want: Complex) -> f64 {
    (got - want).abs() / want.abs().max(1e-300)
}
