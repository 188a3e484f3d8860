//! Coroot-curve adjacency on `S`, connected components, and the explicit
//! chain construction for a single `GL_3` block.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{filter_map_range, Execution};
use crate::group::{sorted_leq, Cochar, Root};
use crate::normal_form::FrobeniusDatum;
use crate::strata::{enumerate_strata_with, natural_lambda, EnumOptions, Stratum};

/// An edge `lam_to = lam_from - alpha^vee` witnessed by a coroot curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub root: Root,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataGraph {
    pub vertices: Vec<Stratum>,
    pub edges: Vec<Edge>,
    /// Vertex indices per component, each sorted, ordered by smallest member.
    pub components: Vec<Vec<usize>>,
}

/// Number of connected components, and how much is known about it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "count", rename_all = "snake_case")]
pub enum Pi0 {
    /// `C_mu(b)` is empty.
    Empty,
    /// Every stratum is a proven single point, so the count is exact.
    Exact(usize),
    /// Coroot curves leave at most this many components.
    UpperBound(usize),
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), rank: vec![0; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
    }
}

/// `w(sigma(alpha^vee))` as a cocharacter.
fn twisted_coroot(datum: &FrobeniusDatum, alpha: &Root) -> Result<Cochar> {
    let shape = datum.shape();
    datum.frobenius().apply(&alpha.coroot(shape.n(), shape.blocks()))
}

/// The first two curve conditions, given `lambda^natural`.
fn curve_conditions(datum: &FrobeniusDatum, mu: &Cochar, nat: &Cochar, alpha: &Root) -> Result<bool> {
    let shape = datum.shape();
    let coroot = alpha.coroot(shape.n(), shape.blocks());
    Ok(sorted_leq(&nat.add(&coroot)?, mu) && sorted_leq(&nat.sub(&twisted_coroot(datum, alpha)?)?, mu))
}

/// Whether the coroot curve through `u^lambda` in direction `alpha` joins it
/// to `u^{lambda - alpha^vee}` inside `C_mu(b)`.
pub fn edge_exists(datum: &FrobeniusDatum, mu: &Cochar, lam: &Cochar, alpha: &Root) -> Result<bool> {
    alpha.check_shape(datum.shape())?;
    let nat = natural_lambda(datum, lam)?;
    if !sorted_leq(&nat, mu) {
        return Err(Error::NotInStrata(lam.to_string()));
    }
    let shape = datum.shape();
    let target = lam.sub(&alpha.coroot(shape.n(), shape.blocks()))?;
    Ok(curve_conditions(datum, mu, &nat, alpha)? && sorted_leq(&natural_lambda(datum, &target)?, mu))
}

pub fn build_graph(datum: &FrobeniusDatum, mu: &Cochar) -> Result<StrataGraph> {
    build_graph_with(datum, mu, EnumOptions::default())
}

pub fn build_graph_with(datum: &FrobeniusDatum, mu: &Cochar, opts: EnumOptions) -> Result<StrataGraph> {
    let vertices = enumerate_strata_with(datum, mu, opts)?;
    graph_on(datum, mu, vertices, opts.exec)
}

/// Graph on a precomputed vertex set.
pub fn graph_on(datum: &FrobeniusDatum, mu: &Cochar, vertices: Vec<Stratum>, exec: Execution) -> Result<StrataGraph> {
    let shape = datum.shape();
    let index: HashMap<&Cochar, usize> = vertices.iter().enumerate().map(|(i, s)| (&s.lam, i)).collect();
    let roots = Root::all(shape.n(), shape.blocks());
    let pairs = (vertices.len() * roots.len()) as u64;
    let edges = filter_map_range(exec, pairs, |idx| {
        let (v, r) = ((idx as usize) / roots.len(), (idx as usize) % roots.len());
        let alpha = &roots[r];
        let s = &vertices[v];
        let target = s.lam.sub(&alpha.coroot(shape.n(), shape.blocks())).ok()?;
        let &to = index.get(&target)?;
        // Each unordered pair is found from both ends; keep one orientation.
        if to < v {
            return None;
        }
        curve_conditions(datum, mu, &s.nat, alpha).ok()?.then_some(Edge { from: v, to, root: *alpha })
    });
    let mut uf = UnionFind::new(vertices.len());
    for e in &edges {
        uf.union(e.from, e.to);
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for v in 0..vertices.len() {
        let root = uf.find(v);
        let g = *slot.entry(root).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(v);
    }
    Ok(StrataGraph { vertices, edges, components: groups })
}

/// `pi_0` bound from the graph. All strata being single points forces the
/// graph to be edgeless; an edge then signals an internal inconsistency.
pub fn pi0_report(graph: &StrataGraph) -> Result<Pi0> {
    if graph.vertices.is_empty() {
        return Ok(Pi0::Empty);
    }
    let comps = graph.components.len();
    if graph.vertices.iter().all(|s| s.singleton.is_proven()) {
        if comps != graph.vertices.len() {
            return Err(Error::TheoremViolation(format!(
                "{} single-point strata are joined into {comps} components by coroot curves",
                graph.vertices.len()
            )));
        }
        return Ok(Pi0::Exact(comps));
    }
    Ok(Pi0::UpperBound(comps))
}

impl StrataGraph {
    /// Graphviz rendering with `lambda` labels and coroot edge labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph strata {\n");
        for (i, s) in self.vertices.iter().enumerate() {
            let dim = s.dim.map_or_else(|| "?".to_string(), |d| d.to_string());
            let single = if s.singleton.is_proven() { "proven" } else { "unknown" };
            let _ = writeln!(out, "  v{i} [label=\"{}\\ndim={dim} singleton={single}\"];", s.lam);
        }
        for e in &self.edges {
            let _ = writeln!(out, "  v{} -- v{} [label=\"{}\"];", e.from, e.to, e.root);
        }
        out.push_str("}\n");
        out
    }
}

/// A path `points[0], .., points[r]` in `S` with
/// `points[i + 1] - points[i] = steps[i]^vee`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub points: Vec<Cochar>,
    pub steps: Vec<Root>,
}

fn root_of(i: usize, j: usize) -> Root {
    Root { block: 0, i, j }
}

/// `delta = a c + b w(c)` with `0 <= b <= a`, over the six coroots `c`.
fn normalize(delta: &[i64], w: &crate::group::Perm) -> (i64, i64, Root) {
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            let c = root_of(i, j);
            let wc = root_of(w.apply(i), w.apply(j));
            let cv = c.coroot(3, 1);
            let wv = wc.coroot(3, 1);
            let (c0, c1, w0, w1) = (cv.get(0, 0), cv.get(0, 1), wv.get(0, 0), wv.get(0, 1));
            let det = c0 * w1 - c1 * w0;
            let a = (delta[0] * w1 - delta[1] * w0) / det;
            let b = (c0 * delta[1] - c1 * delta[0]) / det;
            if 0 <= b && b <= a {
                return (a, b, c);
            }
        }
    }
    unreachable!("the six sectors cover the root lattice")
}

/// Connects two points of `S` for a single `GL_3` block with `f = 1`.
pub fn chain_gl3(datum: &FrobeniusDatum, mu: &Cochar, lam: &Cochar, target: &Cochar) -> Result<Chain> {
    let shape = datum.shape();
    if shape.n() != 3 || shape.blocks() != 1 {
        return Err(Error::NotGl3(format!("{} blocks of GL_{}", shape.blocks(), shape.n())));
    }
    let w = datum.w().perm(0).clone();
    if (0..3).any(|i| w.apply(i) == i) {
        return Err(Error::NotGl3("w must be a 3-cycle".into()));
    }
    let in_s = |l: &Cochar| -> Result<bool> { Ok(sorted_leq(&natural_lambda(datum, l)?, mu)) };
    for l in [lam, target] {
        if !in_s(l)? {
            return Err(Error::NotInStrata(l.to_string()));
        }
    }
    let diff = target.sub(lam)?;
    if diff.iter().sum::<i64>() != 0 {
        return Err(Error::TheoremViolation(format!("{lam} and {target} have different sums")));
    }
    let mut chain = Chain { points: vec![lam.clone()], steps: Vec::new() };
    let mut cur = lam.clone();
    let mut last_a = i64::MAX;
    let push = |chain: &mut Chain, cur: &mut Cochar, step: Root| -> Result<()> {
        *cur = cur.add(&step.coroot(3, 1))?;
        if !in_s(cur)? {
            return Err(Error::TheoremViolation(format!("chain left S at {cur}")));
        }
        chain.points.push(cur.clone());
        chain.steps.push(step);
        Ok(())
    };
    loop {
        let delta = target.sub(&cur)?;
        if delta.iter().all(|&x| x == 0) {
            return Ok(chain);
        }
        let (a, b, c) = normalize(delta.block(0), &w);
        assert!(a < last_a, "normalized n1 must decrease");
        last_a = a;
        // w^2(c) as a root; -w^2(c)^vee = c^vee + w(c)^vee.
        let w2c = root_of(w.apply(w.apply(c.i)), w.apply(w.apply(c.j)));
        if b == 0 {
            for _ in 0..a {
                push(&mut chain, &mut cur, c)?;
            }
        } else if b == a {
            for _ in 0..a {
                push(&mut chain, &mut cur, w2c.negate())?;
            }
        } else {
            let plus = cur.add(&c.coroot(3, 1))?;
            let minus = cur.sub(&w2c.coroot(3, 1))?;
            if in_s(&plus)? {
                push(&mut chain, &mut cur, c)?;
            } else if in_s(&minus)? {
                push(&mut chain, &mut cur, w2c.negate())?;
            } else {
                return Err(Error::TheoremViolation(format!(
                    "Claim 3 violated at {cur}: neither {plus} nor {minus} lies in S"
                )));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden;

    fn c(b: Vec<Vec<i64>>) -> Cochar {
        Cochar::from_blocks(b).unwrap()
    }

    #[test]
    fn counterexamples_are_disconnected() {
        let (d, mu) = golden::counterexample_a(3).unwrap();
        let g = build_graph(&d, &mu).unwrap();
        assert_eq!(g.vertices.len(), 2);
        assert!(g.edges.is_empty());
        assert_eq!(pi0_report(&g).unwrap(), Pi0::Exact(2));
        let alpha14 = Root::new(0, 0, 3).unwrap();
        assert!(!edge_exists(&d, &mu, &c(vec![vec![2, 1, 1, 0]]), &alpha14).unwrap());
        let (d, mu) = golden::counterexample_b(3).unwrap();
        assert_eq!(pi0_report(&build_graph(&d, &mu).unwrap()).unwrap(), Pi0::Exact(2));
    }

    #[test]
    fn gl3_connected_with_chains() {
        let d = FrobeniusDatum::caruso(3, 1, 2, 1).unwrap();
        let mu = c(vec![vec![4, 1, 0]]);
        let g = build_graph(&d, &mu).unwrap();
        assert!(g.vertices.len() > 1);
        assert_eq!(g.components.len(), 1);
        for a in &g.vertices {
            for b in &g.vertices {
                let ch = chain_gl3(&d, &mu, &a.lam, &b.lam).unwrap();
                assert_eq!(ch.points.first(), Some(&a.lam));
                assert_eq!(ch.points.last(), Some(&b.lam));
                assert_eq!(ch.steps.len() + 1, ch.points.len());
            }
        }
        let same = chain_gl3(&d, &mu, &g.vertices[0].lam, &g.vertices[0].lam).unwrap();
        assert!(same.steps.is_empty());
    }

    #[test]
    fn chain_rejects_other_shapes() {
        let (d, mu) = golden::counterexample_a(3).unwrap();
        let l = c(vec![vec![1, 1, 1, 1]]);
        assert!(matches!(chain_gl3(&d, &mu, &l, &l), Err(Error::NotGl3(_))));
    }

    #[test]
    fn empty_graph() {
        let d = FrobeniusDatum::caruso(2, 1, 3, 1).unwrap();
        let g = build_graph(&d, &Cochar::zeros(2, 1)).unwrap();
        assert_eq!(pi0_report(&g).unwrap(), Pi0::Empty);
        assert!(g.to_dot().starts_with("graph strata {"));
    }

    #[test]
    fn normalization_sectors() {
        let w = crate::group::Perm::n_cycle(3);
        for x in -4i64..=4 {
            for y in -4i64..=4 {
                let delta = [x, y, -x - y];
                let (a, b, r) = normalize(&delta, &w);
                let c = r.coroot(3, 1);
                let wc = root_of(w.apply(r.i), w.apply(r.j)).coroot(3, 1);
                let rebuilt: Vec<i64> = (0..3).map(|k| a * c.get(0, k) + b * wc.get(0, k)).collect();
                assert_eq!(rebuilt, delta.to_vec());
                assert!(0 <= b && b <= a);
            }
        }
    }
}
