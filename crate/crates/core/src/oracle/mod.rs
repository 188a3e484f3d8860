//! Brute-force ground truth for a single block: lattices in a box over a
//! small finite field, their Cartan types and Iwahori labels.

mod cosets;
mod field;
mod laurent;
mod matrix;
mod points;

pub use cosets::{hnf_cosets, CosetSpace, DEFAULT_MAX_COSETS};
pub use field::{Fe, Field};
pub use laurent::Laurent;
pub use matrix::LaurentMatrix;
pub use points::{
    frobenius_matrix, kisin_points, kisin_points_with, points_from_scan, require_box, scan_cosets, OraclePoint,
    ScanOptions, ScannedCoset,
};
