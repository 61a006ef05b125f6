//! Zero location on the critical line, strip scanning, and level-curve
//! extraction.

pub mod bracket;
pub mod curves;
pub mod scan;

pub use bracket::{
    bracket_line, bracket_line_with, find_zeros, find_zeros_with, refine, refine_with, Bracket,
    ZeroRecord,
};
pub use curves::{
    extract_curves, extract_curves_with, trace_loci, Candidate, CurveOptions, CurveReport,
    CurveSegment, FnId, Loci, LocusKind, Rect,
};
pub use scan::{scan_strip, scan_strip_with, GridReport, Raster, Region, ScanOptions, StripScan};
