//! JSON views of core values: 1-based indices and rationals as strings.

use kisin_core::connectivity::{Chain, Pi0, StrataGraph};
use kisin_core::group::{Cochar, RatCochar, Root, WeylElt};
use kisin_core::strata::{Singleton, Stratum};
use kisin_core::FrobeniusDatum;
use serde::Serialize;

use crate::config::InstanceConfig;

pub const SCHEMA: u32 = 1;

#[derive(Serialize)]
pub struct Report<'a, T: Serialize> {
    pub schema: u32,
    pub command: &'a str,
    pub config: &'a InstanceConfig,
    pub result: T,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootView {
    pub block: usize,
    pub i: usize,
    pub j: usize,
}

impl From<&Root> for RootView {
    fn from(r: &Root) -> Self {
        Self { block: r.block + 1, i: r.i + 1, j: r.j + 1 }
    }
}

pub fn roots(rs: &[Root]) -> Vec<RootView> {
    rs.iter().map(RootView::from).collect()
}

pub fn blocks(c: &Cochar) -> Vec<Vec<i64>> {
    c.blocks().to_vec()
}

pub fn rationals(v: &RatCochar) -> Vec<Vec<String>> {
    v.blocks().iter().map(|b| b.iter().map(|x| x.to_string()).collect()).collect()
}

pub fn perms(w: &WeylElt) -> Vec<Vec<usize>> {
    w.perms().iter().map(|p| p.one_based()).collect()
}

#[derive(Serialize)]
pub struct ShapeView {
    pub n: usize,
    pub p: i64,
    pub eps: Vec<i64>,
}

#[derive(Serialize)]
pub struct DatumView {
    pub shape: ShapeView,
    pub tau: Vec<Vec<i64>>,
    pub w: Vec<Vec<usize>>,
    /// Fixed point of `u^tau w sigma`.
    pub e: Vec<Vec<String>>,
    pub alcove_ok: bool,
    pub general_position: bool,
}

impl From<&FrobeniusDatum> for DatumView {
    fn from(d: &FrobeniusDatum) -> Self {
        let s = d.shape();
        Self {
            shape: ShapeView { n: s.n(), p: s.p(), eps: s.eps().to_vec() },
            tau: blocks(d.tau()),
            w: perms(d.w()),
            e: rationals(d.e()),
            alcove_ok: d.alcove_ok(),
            general_position: d.in_general_position(),
        }
    }
}

#[derive(Serialize)]
pub struct StratumView {
    pub lambda: Vec<Vec<i64>>,
    pub natural: Vec<Vec<i64>>,
    pub dagger: Vec<Vec<i64>>,
    pub sum_profile: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_set: Option<Vec<RootView>>,
    pub d_set: Vec<RootView>,
    pub singleton: Singleton,
}

impl From<&Stratum> for StratumView {
    fn from(s: &Stratum) -> Self {
        Self {
            lambda: blocks(&s.lam),
            natural: blocks(&s.nat),
            dagger: blocks(&s.dag),
            sum_profile: s.lam.sum_profile(),
            dim: s.dim,
            r_set: s.r_set.as_deref().map(roots),
            d_set: roots(&s.d_set),
            singleton: s.singleton.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct EdgeView {
    pub from: Vec<Vec<i64>>,
    pub to: Vec<Vec<i64>>,
    pub root: RootView,
}

#[derive(Serialize)]
pub struct GraphView {
    pub vertices: Vec<Vec<Vec<i64>>>,
    pub edges: Vec<EdgeView>,
    pub components: Vec<Vec<Vec<Vec<i64>>>>,
    pub pi0: Pi0,
}

impl GraphView {
    pub fn new(g: &StrataGraph, pi0: Pi0) -> Self {
        let lam = |i: usize| blocks(&g.vertices[i].lam);
        Self {
            vertices: (0..g.vertices.len()).map(lam).collect(),
            edges: g.edges.iter().map(|e| EdgeView { from: lam(e.from), to: lam(e.to), root: (&e.root).into() }).collect(),
            components: g.components.iter().map(|c| c.iter().map(|&i| lam(i)).collect()).collect(),
            pi0,
        }
    }
}

#[derive(Serialize)]
pub struct ChainView {
    pub points: Vec<Vec<Vec<i64>>>,
    pub steps: Vec<RootView>,
}

impl From<&Chain> for ChainView {
    fn from(c: &Chain) -> Self {
        Self { points: c.points.iter().map(blocks).collect(), steps: roots(&c.steps) }
    }
}
