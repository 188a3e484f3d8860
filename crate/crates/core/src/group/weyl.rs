use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::cochar::{BlockVec, Coord};
use super::shape::GroupShape;

/// A permutation of `{0, .., n-1}` in one-line notation: `map[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Perm {
    map: Vec<usize>,
}

impl Perm {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &x in &map {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{map:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Self { map })
    }

    /// From one-line notation with values in `1..=n`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(format!("{images:?} is not 1-based")));
        }
        Self::new(images.iter().map(|x| x - 1).collect())
    }

    /// From cycle notation with 1-based entries, e.g. `[[1, 2, 4, 3]]`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut map: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (t, &a) in cycle.iter().enumerate() {
                let b = cycle[(t + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::InvalidPermutation(format!("cycle {cycle:?} out of range")));
                }
                map[a - 1] = b - 1;
            }
        }
        Self::new(map)
    }

    pub fn identity(n: usize) -> Self {
        Self { map: (0..n).collect() }
    }

    /// `i -> i + 1 mod n`.
    pub fn n_cycle(n: usize) -> Self {
        Self { map: (0..n).map(|i| (i + 1) % n).collect() }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.map.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &x) in self.map.iter().enumerate() {
            inv[x] = i;
        }
        Self { map: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self { map: other.map.iter().map(|&i| self.map[i]).collect() }
    }

    /// Place permutation: `out[self(i)] = v[i]`.
    pub fn act<T: Clone>(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.map[i]] = x.clone();
        }
        out
    }
}

/// An element of `W_0 = (S_n)^N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylElt {
    perms: Vec<Perm>,
}

impl WeylElt {
    pub fn new(perms: Vec<Perm>) -> Result<Self> {
        let Some(first) = perms.first() else {
            return Err(Error::ShapeMismatch("Weyl element with no blocks".into()));
        };
        if perms.iter().any(|p| p.len() != first.len()) {
            return Err(Error::ShapeMismatch("Weyl blocks of different sizes".into()));
        }
        Ok(Self { perms })
    }

    pub fn identity(n: usize, blocks: usize) -> Self {
        Self { perms: vec![Perm::identity(n); blocks] }
    }

    pub fn n(&self) -> usize {
        self.perms[0].len()
    }

    pub fn num_blocks(&self) -> usize {
        self.perms.len()
    }

    pub fn perm(&self, k: usize) -> &Perm {
        &self.perms[k]
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn is_identity(&self) -> bool {
        self.perms.iter().all(Perm::is_identity)
    }

    pub fn inverse(&self) -> Self {
        Self { perms: self.perms.iter().map(Perm::inverse).collect() }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_like(other.n(), other.num_blocks())?;
        Ok(Self { perms: self.perms.iter().zip(&other.perms).map(|(a, b)| a.compose(b)).collect() })
    }

    /// `sigma_0`: block `k` of the result is block `k + 1` of `self`.
    pub fn sigma0(&self) -> Self {
        let n = self.perms.len();
        Self { perms: (0..n).map(|k| self.perms[(k + 1) % n].clone()).collect() }
    }

    pub fn check_shape(&self, shape: &GroupShape, what: &str) -> Result<()> {
        shape.check_blocks(self.n(), self.num_blocks(), what)
    }

    fn check_like(&self, n: usize, blocks: usize) -> Result<()> {
        if self.n() != n || self.num_blocks() != blocks {
            return Err(Error::ShapeMismatch(format!(
                "Weyl element of shape {}x{} against {}x{}",
                self.num_blocks(),
                self.n(),
                blocks,
                n
            )));
        }
        Ok(())
    }

    /// `(w v)[k][w_k(i)] = v[k][i]`, so that `u^{w(v)} = w u^v w^{-1}`.
    pub fn act<T: Coord>(&self, v: &BlockVec<T>) -> Result<BlockVec<T>> {
        self.check_like(v.n(), v.num_blocks())?;
        let blocks = self.perms.iter().zip(v.blocks()).map(|(w, b)| w.act(b)).collect();
        BlockVec::from_blocks(blocks)
    }
}

/// Free-function form of [`WeylElt::act`].
pub fn act_weyl<T: Coord>(w: &WeylElt, v: &BlockVec<T>) -> Result<BlockVec<T>> {
    w.act(v)
}

/// `sigma(v)[k] = eps[k] * v[k + 1]`, indices cyclic.
pub fn act_sigma<T: Coord>(shape: &GroupShape, v: &BlockVec<T>) -> Result<BlockVec<T>> {
    v.check_shape(shape, "vector")?;
    let n = v.num_blocks();
    let blocks = (0..n)
        .map(|k| v.block((k + 1) % n).iter().map(|x| x.scale(shape.eps()[k])).collect())
        .collect();
    BlockVec::from_blocks(blocks)
}
