//! Grid scan of `|ξ|` over a rectangle of the critical strip.
//!
//! Each node is evaluated together with its mirror across the critical
//! line, which gives both `|ξ|` and the symmetry residuals in one pass.
//! Node records are collected in row-major index order and reduced
//! sequentially, so the report is bitwise identical for any thread count.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::xi::{symmetric_pair, CriticalPoint, LINE_MAX_T};
use crate::Complex;

pub const CANDIDATE_TOL: f64 = 1e-4;
pub const DEFAULT_OFFLINE_MARGIN: f64 = 0.05;
pub const MAX_STEP: f64 = 0.1;

/// Slack when comparing grid coordinates against the margin.
const MARGIN_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Region {
    pub re_lo: f64,
    pub re_hi: f64,
    pub t_lo: f64,
    pub t_hi: f64,
}

impl Region {
    pub fn new(re_lo: f64, re_hi: f64, t_lo: f64, t_hi: f64) -> Self {
        Region {
            re_lo,
            re_hi,
            t_lo,
            t_hi,
        }
    }

    pub fn contains(&self, z: Complex) -> bool {
        self.re_lo <= z.re && z.re <= self.re_hi && self.t_lo <= z.im && z.im <= self.t_hi
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridReport {
    pub region: Region,
    pub step: f64,
    pub offline_margin: f64,
    /// Smallest `|ξ|` over nodes with `|re - 1/2| >= offline_margin`.
    pub min_abs_xi_offline: f64,
    pub argmin_point: Complex,
    /// Largest component of the symmetry residual pair over the grid.
    pub max_sym_residual: f64,
    /// Nodes with `|ξ| < candidate_tol`.
    pub candidate_cells: Vec<Complex>,
    /// Smallest `|ξ|` over every node, on or off the line.
    pub global_min_abs_xi: f64,
    pub global_argmin: Complex,
    /// Smallest `|ξ(node)| / max_row |ξ|` over offline nodes; insensitive
    /// to the decay of ξ with `t`.
    pub min_row_relative_offline: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    pub step: f64,
    pub offline_margin: f64,
    pub candidate_tol: f64,
    pub exec: Exec,
}

impl ScanOptions {
    pub fn new(step: f64, offline_margin: f64) -> Self {
        ScanOptions {
            step,
            offline_margin,
            candidate_tol: CANDIDATE_TOL,
            exec: Exec::default(),
        }
    }

    pub fn exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn candidate_tol(mut self, tol: f64) -> Self {
        self.candidate_tol = tol;
        self
    }
}

/// Row-major `|ξ|` samples; row `j` is ordinate `t_lo + j·step`.
#[derive(Debug, Clone, PartialEq)]
pub struct Raster {
    pub columns: usize,
    pub rows: usize,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StripScan {
    pub report: GridReport,
    pub raster: Raster,
}

#[derive(Debug, Clone, Copy)]
struct NodeSample {
    point: Complex,
    abs_xi: f64,
    sym: f64,
}

/// Nodes `lo, lo + step, ...` not exceeding `hi`.
fn axis(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let count = ((hi - lo) / step + 1e-9).floor() as usize;
    (0..=count).map(|i| lo + i as f64 * step).collect()
}

fn validate(region: &Region, opts: &ScanOptions) -> Result<()> {
    let Region {
        re_lo,
        re_hi,
        t_lo,
        t_hi,
    } = *region;
    let finite = [
        re_lo,
        re_hi,
        t_lo,
        t_hi,
        opts.step,
        opts.offline_margin,
        opts.candidate_tol,
    ]
    .iter()
    .all(|v| v.is_finite());
    if !finite {
        return Err(Error::Precondition("scan parameters must be finite".into()));
    }
    if !(0.0 < re_lo && re_lo <= re_hi && re_hi < 1.0) {
        return Err(Error::Precondition(format!(
            "scan needs 0 < re_lo <= re_hi < 1, got {re_lo}:{re_hi}"
        )));
    }
    if !(0.0 <= t_lo && t_lo <= t_hi && t_hi <= LINE_MAX_T) {
        return Err(Error::Precondition(format!(
            "scan needs 0 <= t_lo <= t_hi <= {LINE_MAX_T}, got {t_lo}:{t_hi}"
        )));
    }
    if !(opts.step > 0.0 && opts.step <= MAX_STEP) {
        return Err(Error::Precondition(format!(
            "scan step must lie in (0, {MAX_STEP}], got {}",
            opts.step
        )));
    }
    if !(opts.offline_margin > 0.0 && opts.offline_margin < 0.5) {
        return Err(Error::Precondition(format!(
            "offline margin must lie in (0, 0.5), got {}",
            opts.offline_margin
        )));
    }
    if !(opts.candidate_tol > 0.0) {
        return Err(Error::Precondition(
            "candidate tolerance must be positive".into(),
        ));
    }
    Ok(())
}

/// Scan with default options apart from step and margin.
pub fn scan_strip(region: Region, step: f64, offline_margin: f64) -> Result<GridReport> {
    Ok(scan_strip_with(region, &ScanOptions::new(step, offline_margin))?.report)
}

pub fn scan_strip_with(region: Region, opts: &ScanOptions) -> Result<StripScan> {
    validate(&region, opts)?;
    let res = axis(region.re_lo, region.re_hi, opts.step);
    let ts = axis(region.t_lo, region.t_hi, opts.step);
    let columns = res.len();
    let rows = ts.len();

    let nodes = opts.exec.try_map_indexed(columns * rows, |k| {
        let point = Complex::new(res[k % columns], ts[k / columns]);
        let (plus, minus) = symmetric_pair(CriticalPoint::new(point.re - 0.5, point.im))?;
        let sym = (minus.re - plus.re).abs().max((minus.im + plus.im).abs());
        Ok::<_, Error>(NodeSample {
            point,
            abs_xi: plus.abs(),
            sym,
        })
    })?;

    let is_offline = |p: Complex| (p.re - 0.5).abs() >= opts.offline_margin - MARGIN_SLACK;

    let mut offline_min: Option<(f64, Complex)> = None;
    let mut global_min: Option<(f64, Complex)> = None;
    let mut max_sym = 0.0f64;
    let mut candidates = Vec::new();
    let mut min_relative = f64::INFINITY;

    for row in nodes.chunks(columns) {
        let row_max = row.iter().map(|n| n.abs_xi).fold(0.0f64, f64::max);
        for n in row {
            if global_min.is_none_or(|(m, _)| n.abs_xi < m) {
                global_min = Some((n.abs_xi, n.point));
            }
            if is_offline(n.point) {
                if offline_min.is_none_or(|(m, _)| n.abs_xi < m) {
                    offline_min = Some((n.abs_xi, n.point));
                }
                if row_max > 0.0 {
                    min_relative = min_relative.min(n.abs_xi / row_max);
                }
            }
            max_sym = max_sym.max(n.sym);
            if n.abs_xi < opts.candidate_tol {
                candidates.push(n.point);
            }
        }
    }

    let (min_abs_xi_offline, argmin_point) = offline_min.ok_or_else(|| {
        Error::Precondition(format!(
            "region has no nodes with |re - 1/2| >= {}",
            opts.offline_margin
        ))
    })?;
    let (global_min_abs_xi, global_argmin) =
        global_min.expect("non-empty grid always has a minimum");

    let report = GridReport {
        region,
        step: opts.step,
        offline_margin: opts.offline_margin,
        min_abs_xi_offline,
        argmin_point,
        max_sym_residual: max_sym,
        candidate_cells: candidates,
        global_min_abs_xi,
        global_argmin,
        min_row_relative_offline: min_relative,
    };
    let raster = Raster {
        columns,
        rows,
        values: nodes.iter().map(|n| n.abs_xi).collect(),
    };
    Ok(StripScan { report, raster })
}
