use crate::error::{Error, Result};
use crate::exec::{try_filter_map_range, Execution};
use crate::group::{block_leq, is_dominant, Cochar};
use crate::normal_form::FrobeniusDatum;
use crate::strata::enumerate_strata;

use super::cosets::{CosetSpace, DEFAULT_MAX_COSETS};
use super::field::Field;
use super::laurent::Laurent;
use super::matrix::LaurentMatrix;

/// A lattice `g O^n` with the Cartan type of `g^{-1} b sigma(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScannedCoset {
    pub g: LaurentMatrix,
    pub cartan: Vec<i64>,
}

/// A point of `C_mu(b)` over the coefficient field with its Iwahori stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OraclePoint {
    pub g: LaurentMatrix,
    pub cartan: Vec<i64>,
    pub label: Cochar,
}

#[derive(Clone, Copy, Debug)]
pub struct ScanOptions {
    pub exec: Execution,
    pub max_cosets: u64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self { exec: Execution::default(), max_cosets: DEFAULT_MAX_COSETS }
    }
}

fn require_single_block(datum: &FrobeniusDatum) -> Result<()> {
    if datum.shape().blocks() != 1 {
        return Err(Error::Oracle("the lattice oracle supports a single block (f = 1) only".into()));
    }
    datum.require_alcove()
}

/// `b = u^tau w` as a matrix: column `i` is `u^{tau_{w(i)}} e_{w(i)}`.
pub fn frobenius_matrix(datum: &FrobeniusDatum) -> LaurentMatrix {
    let w = datum.w().perm(0);
    let tau = datum.tau().block(0);
    let mut b = LaurentMatrix::zero(w.len());
    for i in 0..w.len() {
        b.set(w.apply(i), i, Laurent::monomial(1, tau[w.apply(i)]));
    }
    b
}

/// Cartan types of `g^{-1} b sigma(g)` over every lattice in the box.
pub fn scan_cosets(datum: &FrobeniusDatum, field: &Field, bound: i64, opts: ScanOptions) -> Result<Vec<ScannedCoset>> {
    require_single_block(datum)?;
    if field.p() as i64 != datum.shape().p() {
        return Err(Error::Oracle(format!("field characteristic {} differs from p = {}", field.p(), datum.shape().p())));
    }
    let space = CosetSpace::new(datum.shape().n(), bound, field, opts.max_cosets)?;
    let b = frobenius_matrix(datum);
    let p = field.p();
    try_filter_map_range(opts.exec, space.len(), |idx| {
        let g = space.get(idx);
        let g_inv = g.inverse_upper(field)?;
        if !space.contains_floor(&g_inv) {
            return Ok(None);
        }
        let m = g_inv.mul(&b, field).mul(&g.sigma(p), field);
        let cartan = m.elementary_divisors(field)?;
        Ok(Some(ScannedCoset { g, cartan }))
    })
}

/// Points of a scan whose Cartan type is bounded by `mu`, labelled.
pub fn points_from_scan(scan: &[ScannedCoset], mu: &Cochar, field: &Field) -> Result<Vec<OraclePoint>> {
    if !is_dominant(mu) {
        return Err(Error::NonDominant(format!("mu = {mu}")));
    }
    let mut out = scan
        .iter()
        .filter(|s| block_leq(&s.cartan, mu.block(0)))
        .map(|s| {
            let label = Cochar::from_blocks(vec![s.g.iwahori_label(field)?])?;
            Ok(OraclePoint { g: s.g.clone(), cartan: s.cartan.clone(), label })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.label.cmp(&b.label).then_with(|| a.g.cmp(&b.g)));
    Ok(out)
}

/// All points of `C_mu(b)` over `field` whose lattice lies between
/// `u^B O^n` and `u^{-B} O^n`. Fails if some `lambda` in `S` leaves the box,
/// since the box then misses points.
pub fn kisin_points(datum: &FrobeniusDatum, mu: &Cochar, field: &Field, bound: i64) -> Result<Vec<OraclePoint>> {
    kisin_points_with(datum, mu, field, bound, ScanOptions::default())
}

pub fn kisin_points_with(
    datum: &FrobeniusDatum,
    mu: &Cochar,
    field: &Field,
    bound: i64,
    opts: ScanOptions,
) -> Result<Vec<OraclePoint>> {
    require_single_block(datum)?;
    mu.check_shape(datum.shape(), "mu")?;
    require_box(datum, mu, bound)?;
    let scan = scan_cosets(datum, field, bound, opts)?;
    points_from_scan(&scan, mu, field)
}

/// Every point of the stratum `lambda` lies between `u^{max lambda} O^n` and
/// `u^{min lambda} O^n`, so a box containing `S` contains all points.
pub fn require_box(datum: &FrobeniusDatum, mu: &Cochar, bound: i64) -> Result<()> {
    if let Some(s) = enumerate_strata(datum, mu)?.into_iter().find(|s| s.lam.max_abs() > bound) {
        return Err(Error::BoxTooSmall(format!("lambda = {} needs bound {}", s.lam, s.lam.max_abs())));
    }
    Ok(())
}
