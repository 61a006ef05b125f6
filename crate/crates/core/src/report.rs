//! Serialized report shapes and CSV rendering.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rootscan::{Raster, Region, ZeroRecord};
use crate::Complex;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    #[serde(rename = "fn")]
    pub function: String,
    pub z: Complex,
    pub value: Complex,
    pub abs_error_estimate: f64,
    pub terms_used: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub error: String,
    pub message: String,
}

impl From<&Error> for ErrorReport {
    fn from(e: &Error) -> Self {
        ErrorReport {
            error: e.name().to_string(),
            message: e.to_string(),
        }
    }
}

/// Report plus the wall-clock time it was produced at.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stamped<T> {
    pub unix_time: f64,
    pub report: T,
}

/// `%.{digits}g`-style rendering: shortest of fixed or scientific notation
/// with `digits` significant digits and trailing zeros removed.
pub fn format_sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        strip_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn zeros_csv(records: &[ZeroRecord]) -> String {
    let mut out = String::from("t,residual,iterations\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{}\n",
            format_sig(r.t, 15),
            format_sig(r.residual, 15),
            r.iterations
        ));
    }
    out
}

/// Header line, region line, then one line of `|ξ|` values per ordinate.
pub fn raster_csv(region: &Region, step: f64, raster: &Raster) -> String {
    let mut out = String::from("re_lo,re_hi,t_lo,t_hi,step\n");
    let head = [region.re_lo, region.re_hi, region.t_lo, region.t_hi, step];
    out.push_str(&head.map(|v| format_sig(v, 15)).join(","));
    out.push('\n');
    for row in raster.values.chunks(raster.columns.max(1)) {
        let line: Vec<String> = row.iter().map(|&v| format_sig(v, 15)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}
