//! Level curves `v = 0`, `w = 0` and `v = w` of `f = v + iw`.
//!
//! A zero of `f` needs both `v = 0` and `w = 0`, and `v = w` is the same
//! locus as `re((1+i) f) = 0`. The extractor samples `f` on a grid, walks
//! each scalar field with marching squares, places every vertex on its
//! grid edge by regula falsi, and reports zero candidates where a `v = 0`
//! segment passes within one cell of a `w = 0` segment.
//!
//! Saddle cells (four edge crossings) are split by the sign of `f` at the
//! cell centre, so the output is unique for a given grid.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::elem::{ccos, cexp};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::gamma::cgamma;
use crate::xi::xi_eval;
use crate::Complex;

/// Vertices are refined until the locus field is below this (scaled by the
/// local field magnitude when that is smaller than one).
pub const CURVE_TOL: f64 = 1e-8;

const MAX_GRID_NODES: usize = 4_000_000;
const MAX_EDGE_ITERATIONS: usize = 60;
const MAX_NEWTON_ITERATIONS: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum FnId {
    Exp,
    Cos,
    Gamma,
    Xi,
}

impl FnId {
    pub const ALL: [FnId; 4] = [FnId::Exp, FnId::Cos, FnId::Gamma, FnId::Xi];

    pub fn eval(self, z: Complex) -> Result<Complex> {
        match self {
            FnId::Exp => cexp(z),
            FnId::Cos => ccos(z),
            FnId::Gamma => cgamma(z).map(|r| r.value),
            FnId::Xi => xi_eval(z).map(|r| r.value),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FnId::Exp => "EXP",
            FnId::Cos => "COS",
            FnId::Gamma => "GAMMA",
            FnId::Xi => "XI",
        }
    }
}

impl fmt::Display for FnId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FnId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FnId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFunction(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LocusKind {
    #[serde(rename = "V_ZERO")]
    VZero,
    #[serde(rename = "W_ZERO")]
    WZero,
    #[serde(rename = "V_EQ_W")]
    VEqW,
}

impl LocusKind {
    pub const ALL: [LocusKind; 3] = [LocusKind::VZero, LocusKind::WZero, LocusKind::VEqW];

    /// The scalar field whose zero set is this locus.
    pub fn field(self, value: Complex) -> f64 {
        match self {
            LocusKind::VZero => value.re,
            LocusKind::WZero => value.im,
            LocusKind::VEqW => value.re - value.im,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveSegment {
    pub locus_kind: LocusKind,
    pub points: Vec<Complex>,
}

/// A point where `v = 0` and `w = 0` curves meet.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub point: Complex,
    pub abs_value: f64,
    /// `true` when Newton iteration from the grid estimate converged to a zero.
    pub refined: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub re_lo: f64,
    pub re_hi: f64,
    pub im_lo: f64,
    pub im_hi: f64,
}

impl Rect {
    pub fn new(re_lo: f64, re_hi: f64, im_lo: f64, im_hi: f64) -> Self {
        Rect {
            re_lo,
            re_hi,
            im_lo,
            im_hi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Loci {
    pub segments: Vec<CurveSegment>,
    pub candidates: Vec<Candidate>,
}

impl Loci {
    pub fn of_kind(&self, kind: LocusKind) -> impl Iterator<Item = &CurveSegment> {
        self.segments.iter().filter(move |s| s.locus_kind == kind)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveReport {
    pub function: FnId,
    pub region: Rect,
    pub step: f64,
    pub segments: Vec<CurveSegment>,
    pub candidates: Vec<Candidate>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveOptions {
    pub step: f64,
    pub curve_tol: f64,
    pub exec: Exec,
}

impl CurveOptions {
    pub fn new(step: f64) -> Self {
        CurveOptions {
            step,
            curve_tol: CURVE_TOL,
            exec: Exec::default(),
        }
    }

    pub fn exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }
}

/// Loci of a registered function over `rect`.
pub fn extract_curves(fn_id: FnId, rect: Rect, step: f64) -> Result<CurveReport> {
    extract_curves_with(fn_id, rect, &CurveOptions::new(step))
}

pub fn extract_curves_with(fn_id: FnId, rect: Rect, opts: &CurveOptions) -> Result<CurveReport> {
    let loci = trace_loci(|z| fn_id.eval(z), rect, opts)?;
    Ok(CurveReport {
        function: fn_id,
        region: rect,
        step: opts.step,
        segments: loci.segments,
        candidates: loci.candidates,
    })
}

/// Grid edge: horizontal edges join `(i, j)`–`(i+1, j)`, vertical ones
/// `(i, j)`–`(i, j+1)`. Ordered row-major for deterministic traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct EdgeKey {
    j: u32,
    i: u32,
    vertical: bool,
}

struct Grid {
    nx: usize,
    ny: usize,
    xs: Vec<f64>,
    ys: Vec<f64>,
    /// `NaN` entries mark nodes sitting on a pole.
    values: Vec<Complex>,
}

impl Grid {
    fn node(&self, i: usize, j: usize) -> usize {
        j * (self.nx + 1) + i
    }

    fn point(&self, i: usize, j: usize) -> Complex {
        Complex::new(self.xs[i], self.ys[j])
    }

    fn edge_nodes(&self, e: EdgeKey) -> ((usize, usize), (usize, usize)) {
        let (i, j) = (e.i as usize, e.j as usize);
        if e.vertical {
            ((i, j), (i, j + 1))
        } else {
            ((i, j), (i + 1, j))
        }
    }

    fn cell_index(&self, i: usize, j: usize) -> usize {
        j * self.nx + i
    }
}

fn axis(lo: f64, hi: f64, cells: usize) -> Vec<f64> {
    (0..=cells)
        .map(|k| {
            if k == cells {
                hi
            } else {
                lo + (hi - lo) * k as f64 / cells as f64
            }
        })
        .collect()
}

fn validate(rect: &Rect, step: f64) -> Result<(usize, usize)> {
    let all = [rect.re_lo, rect.re_hi, rect.im_lo, rect.im_hi, step];
    if !all.iter().all(|v| v.is_finite()) {
        return Err(Error::Precondition(
            "curve region and step must be finite".into(),
        ));
    }
    if !(rect.re_lo < rect.re_hi && rect.im_lo < rect.im_hi) {
        return Err(Error::Precondition(format!(
            "curve region must be non-empty, got {}:{} x {}:{}",
            rect.re_lo, rect.re_hi, rect.im_lo, rect.im_hi
        )));
    }
    if !(step > 0.0) {
        return Err(Error::Precondition(format!(
            "step must be positive, got {step}"
        )));
    }
    let nx = ((rect.re_hi - rect.re_lo) / step - 1e-9).ceil().max(1.0);
    let ny = ((rect.im_hi - rect.im_lo) / step - 1e-9).ceil().max(1.0);
    if (nx + 1.0) * (ny + 1.0) > MAX_GRID_NODES as f64 {
        return Err(Error::Precondition(format!(
            "grid of {nx} x {ny} cells exceeds the node limit"
        )));
    }
    Ok((nx as usize, ny as usize))
}

fn sample<F>(field: &F, z: Complex) -> Result<Complex>
where
    F: Fn(Complex) -> Result<Complex>,
{
    match field(z) {
        Ok(v) if v.is_finite() => Ok(v),
        Ok(_) | Err(Error::Pole { .. }) | Err(Error::Overflow { .. }) => {
            Ok(Complex::new(f64::NAN, f64::NAN))
        }
        Err(e) => Err(e),
    }
}

/// Traces the three loci of an arbitrary field.
pub fn trace_loci<F>(field: F, rect: Rect, opts: &CurveOptions) -> Result<Loci>
where
    F: Fn(Complex) -> Result<Complex> + Sync + Send,
{
    let (nx, ny) = validate(&rect, opts.step)?;
    let xs = axis(rect.re_lo, rect.re_hi, nx);
    let ys = axis(rect.im_lo, rect.im_hi, ny);
    let values = opts.exec.try_map_indexed((nx + 1) * (ny + 1), |k| {
        sample(&field, Complex::new(xs[k % (nx + 1)], ys[k / (nx + 1)]))
    })?;
    let grid = Grid {
        nx,
        ny,
        xs,
        ys,
        values,
    };

    let mut segments = Vec::new();
    let mut crossing_cells = BTreeMap::new();
    for kind in LocusKind::ALL {
        let traced = trace_kind(&field, &grid, kind, opts)?;
        segments.extend(traced.polylines.into_iter().map(|points| CurveSegment {
            locus_kind: kind,
            points,
        }));
        crossing_cells.insert(kind, traced.cells);
    }
    let candidates = find_candidates(
        &field,
        &grid,
        &crossing_cells[&LocusKind::VZero],
        &crossing_cells[&LocusKind::WZero],
        opts.step,
    );
    Ok(Loci {
        segments,
        candidates,
    })
}

struct Traced {
    polylines: Vec<Vec<Complex>>,
    /// Per cell: does this locus cross it?
    cells: Vec<bool>,
}

fn trace_kind<F>(field: &F, grid: &Grid, kind: LocusKind, opts: &CurveOptions) -> Result<Traced>
where
    F: Fn(Complex) -> Result<Complex> + Sync + Send,
{
    let g: Vec<f64> = grid.values.iter().map(|&v| kind.field(v)).collect();
    let positive = |v: f64| v >= 0.0;

    let mut segments: Vec<(EdgeKey, EdgeKey)> = Vec::new();
    let mut cells = vec![false; grid.nx * grid.ny];
    for j in 0..grid.ny {
        for i in 0..grid.nx {
            let corners = [
                g[grid.node(i, j)],
                g[grid.node(i + 1, j)],
                g[grid.node(i + 1, j + 1)],
                g[grid.node(i, j + 1)],
            ];
            if corners.iter().any(|v| v.is_nan()) {
                continue;
            }
            let [a, b, c, d] = corners.map(positive);
            let bottom = EdgeKey {
                j: j as u32,
                i: i as u32,
                vertical: false,
            };
            let right = EdgeKey {
                j: j as u32,
                i: i as u32 + 1,
                vertical: true,
            };
            let top = EdgeKey {
                j: j as u32 + 1,
                i: i as u32,
                vertical: false,
            };
            let left = EdgeKey {
                j: j as u32,
                i: i as u32,
                vertical: true,
            };

            let mut crossed = Vec::with_capacity(4);
            if a != b {
                crossed.push(bottom);
            }
            if b != c {
                crossed.push(right);
            }
            if c != d {
                crossed.push(top);
            }
            if d != a {
                crossed.push(left);
            }
            match crossed.len() {
                0 => continue,
                2 => segments.push((crossed[0], crossed[1])),
                4 => {
                    let centre = Complex::new(
                        0.5 * (grid.xs[i] + grid.xs[i + 1]),
                        0.5 * (grid.ys[j] + grid.ys[j + 1]),
                    );
                    let centre_value = match sample(field, centre) {
                        Ok(v) if !kind.field(v).is_nan() => kind.field(v),
                        _ => corners.iter().sum::<f64>() / 4.0,
                    };
                    if positive(centre_value) == a {
                        segments.push((bottom, right));
                        segments.push((top, left));
                    } else {
                        segments.push((left, bottom));
                        segments.push((right, top));
                    }
                }
                _ => unreachable!("a closed square has an even number of sign changes"),
            }
            cells[grid.cell_index(i, j)] = true;
        }
    }

    let mut edges: Vec<EdgeKey> = segments.iter().flat_map(|&(a, b)| [a, b]).collect();
    edges.sort_unstable();
    edges.dedup();
    let positions = opts.exec.map_indexed(edges.len(), |k| {
        let ((i0, j0), (i1, j1)) = grid.edge_nodes(edges[k]);
        refine_on_edge(
            field,
            kind,
            (grid.point(i0, j0), g[grid.node(i0, j0)]),
            (grid.point(i1, j1), g[grid.node(i1, j1)]),
            opts.curve_tol,
        )
    });
    let position: BTreeMap<EdgeKey, Complex> = edges.into_iter().zip(positions).collect();

    Ok(Traced {
        polylines: chain(&segments, &position),
        cells,
    })
}

/// Regula falsi (Illinois variant) along a grid edge.
fn refine_on_edge<F>(
    field: &F,
    kind: LocusKind,
    (p0, g0): (Complex, f64),
    (p1, g1): (Complex, f64),
    tol: f64,
) -> Complex
where
    F: Fn(Complex) -> Result<Complex>,
{
    if g0 == 0.0 {
        return p0;
    }
    if g1 == 0.0 {
        return p1;
    }
    let at = |s: f64| p0 + (p1 - p0) * s;
    let target = tol * g0.abs().max(g1.abs()).min(1.0);
    let (mut a, mut fa, mut b, mut fb) = (0.0, g0, 1.0, g1);
    let mut side = 0i8;
    let mut s = a - fa * (b - a) / (fb - fa);
    for _ in 0..MAX_EDGE_ITERATIONS {
        let g = match field(at(s)) {
            Ok(v) => kind.field(v),
            Err(_) => return at(s),
        };
        if !g.is_finite() || g.abs() <= target || b - a <= 1e-15 {
            break;
        }
        if g * fb > 0.0 {
            b = s;
            fb = g;
            if side == -1 {
                fa *= 0.5;
            }
            side = -1;
        } else if g * fa > 0.0 {
            a = s;
            fa = g;
            if side == 1 {
                fb *= 0.5;
            }
            side = 1;
        } else {
            break;
        }
        s = a - fa * (b - a) / (fb - fa);
    }
    at(s)
}

/// Joins cell segments that share an edge into polylines; open chains
/// first (from their lowest edge), then closed loops.
fn chain(
    segments: &[(EdgeKey, EdgeKey)],
    position: &BTreeMap<EdgeKey, Complex>,
) -> Vec<Vec<Complex>> {
    let mut incident: BTreeMap<EdgeKey, Vec<usize>> = BTreeMap::new();
    for (k, &(a, b)) in segments.iter().enumerate() {
        incident.entry(a).or_default().push(k);
        incident.entry(b).or_default().push(k);
    }
    let mut used = vec![false; segments.len()];
    let mut polylines = Vec::new();

    let walk = |start: EdgeKey, first: usize, used: &mut Vec<bool>| {
        let mut points = vec![position[&start]];
        let mut edge = start;
        let mut seg = first;
        loop {
            used[seg] = true;
            let (a, b) = segments[seg];
            edge = if a == edge { b } else { a };
            points.push(position[&edge]);
            match incident[&edge].iter().copied().find(|&s| !used[s]) {
                Some(next) => seg = next,
                None => break,
            }
        }
        points
    };

    for (&edge, segs) in &incident {
        if segs.len() == 1 && !used[segs[0]] {
            polylines.push(walk(edge, segs[0], &mut used));
        }
    }
    for k in 0..segments.len() {
        if !used[k] {
            polylines.push(walk(segments[k].0, k, &mut used));
        }
    }
    polylines
}

fn find_candidates<F>(
    field: &F,
    grid: &Grid,
    v_cells: &[bool],
    w_cells: &[bool],
    step: f64,
) -> Vec<Candidate>
where
    F: Fn(Complex) -> Result<Complex>,
{
    let (nx, ny) = (grid.nx, grid.ny);
    let neighbours = |i: usize, j: usize| {
        let (i0, i1) = (i.saturating_sub(1), (i + 1).min(nx - 1));
        let (j0, j1) = (j.saturating_sub(1), (j + 1).min(ny - 1));
        (j0..=j1).flat_map(move |jj| (i0..=i1).map(move |ii| (ii, jj)))
    };
    let flagged: Vec<bool> = (0..nx * ny)
        .map(|c| {
            let (i, j) = (c % nx, c / nx);
            v_cells[c] && neighbours(i, j).any(|(ii, jj)| w_cells[grid.cell_index(ii, jj)])
        })
        .collect();

    let mut seen = vec![false; nx * ny];
    let mut candidates: Vec<Candidate> = Vec::new();
    for start in 0..nx * ny {
        if !flagged[start] || seen[start] {
            continue;
        }
        let mut cluster = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(c) = queue.pop_front() {
            cluster.push(c);
            for (ii, jj) in neighbours(c % nx, c / nx) {
                let n = grid.cell_index(ii, jj);
                if flagged[n] && !seen[n] {
                    seen[n] = true;
                    queue.push_back(n);
                }
            }
        }
        let candidate = resolve_cluster(field, grid, &cluster, step);
        let duplicate = candidate.refined
            && candidates
                .iter()
                .any(|c| c.refined && c.point.dist(candidate.point) < step);
        if !duplicate {
            candidates.push(candidate);
        }
    }
    candidates.sort_by(|a, b| {
        a.point
            .im
            .total_cmp(&b.point.im)
            .then(a.point.re.total_cmp(&b.point.re))
    });
    candidates
}

/// Newton from the smallest-|f| corner of the cluster.
fn resolve_cluster<F>(field: &F, grid: &Grid, cluster: &[usize], step: f64) -> Candidate
where
    F: Fn(Complex) -> Result<Complex>,
{
    let nx = grid.nx;
    let mut seed = None;
    let mut scale = 0.0f64;
    let (mut lo, mut hi) = (
        Complex::new(f64::MAX, f64::MAX),
        Complex::new(f64::MIN, f64::MIN),
    );
    for &c in cluster {
        let (i, j) = (c % nx, c / nx);
        for (ii, jj) in [(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)] {
            let v = grid.values[grid.node(ii, jj)];
            if v.is_finite() {
                let a = v.abs();
                scale = scale.max(a);
                if seed.is_none_or(|(m, _)| a < m) {
                    seed = Some((a, grid.point(ii, jj)));
                }
            }
            let p = grid.point(ii, jj);
            lo = Complex::new(lo.re.min(p.re), lo.im.min(p.im));
            hi = Complex::new(hi.re.max(p.re), hi.im.max(p.im));
        }
    }
    let Some((seed_abs, seed_point)) = seed else {
        let c = cluster[0];
        let centre = Complex::new(
            0.5 * (grid.xs[c % nx] + grid.xs[c % nx + 1]),
            0.5 * (grid.ys[c / nx] + grid.ys[c / nx + 1]),
        );
        return Candidate {
            point: centre,
            abs_value: f64::NAN,
            refined: false,
        };
    };
    let margin = 2.0 * step;
    let inside = |z: Complex| {
        z.re >= lo.re - margin
            && z.re <= hi.re + margin
            && z.im >= lo.im - margin
            && z.im <= hi.im + margin
    };
    let unrefined = Candidate {
        point: seed_point,
        abs_value: seed_abs,
        refined: false,
    };

    let h = step * 1e-4;
    let mut z = seed_point;
    for _ in 0..MAX_NEWTON_ITERATIONS {
        let (Ok(f), Ok(fp), Ok(fm)) = (
            field(z),
            field(z + Complex::real(h)),
            field(z - Complex::real(h)),
        ) else {
            return unrefined;
        };
        if f.abs() == 0.0 {
            break;
        }
        let derivative = (fp - fm) / (2.0 * h);
        if !(derivative.abs() > 0.0) {
            return unrefined;
        }
        let dz = f / derivative;
        z -= dz;
        if !z.is_finite() || !inside(z) {
            return unrefined;
        }
        if dz.abs() <= 1e-13 * (1.0 + z.abs()) {
            break;
        }
    }
    match field(z) {
        Ok(f) if f.abs() <= 1e-6 * scale => Candidate {
            point: z,
            abs_value: f.abs(),
            refined: true,
        },
        _ => unrefined,
    }
}
