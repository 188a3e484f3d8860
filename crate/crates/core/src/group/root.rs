use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::cochar::{BlockVec, Coord, Cochar};
use super::shape::GroupShape;

/// The root `alpha_{i,j} = e_i - e_j` in one `GL_n` block (all indices 0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub block: usize,
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(block: usize, i: usize, j: usize) -> Result<Self> {
        if i == j {
            return Err(Error::NotCoroot(format!("alpha_{{{i},{j}}} needs i != j")));
        }
        Ok(Self { block, i, j })
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn negate(&self) -> Self {
        Self { block: self.block, i: self.j, j: self.i }
    }

    pub fn check_shape(&self, shape: &GroupShape) -> Result<()> {
        if self.block >= shape.blocks() || self.i >= shape.n() || self.j >= shape.n() || self.i == self.j {
            return Err(Error::NotCoroot(format!("{self} for {} blocks of GL_{}", shape.blocks(), shape.n())));
        }
        Ok(())
    }

    /// `<alpha, v> = v[block][i] - v[block][j]`.
    pub fn pairing<T: Coord>(&self, v: &BlockVec<T>) -> T {
        v.get(self.block, self.i).minus(v.get(self.block, self.j))
    }

    /// `alpha^vee`: `+1` at `(block, i)`, `-1` at `(block, j)`.
    pub fn coroot(&self, n: usize, blocks: usize) -> Cochar {
        let mut c = Cochar::zeros(n, blocks);
        c.set(self.block, self.i, 1);
        c.set(self.block, self.j, -1);
        c
    }

    /// All `n(n-1)N` roots, in (block, i, j) order.
    pub fn all(n: usize, blocks: usize) -> Vec<Root> {
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) * blocks);
        for block in 0..blocks {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        out.push(Root { block, i, j });
                    }
                }
            }
        }
        out
    }

    /// The coroot of `alpha` if `v` is one, else `None`.
    pub fn from_coroot(v: &Cochar) -> Option<Root> {
        let mut plus = None;
        let mut minus = None;
        for (k, b) in v.blocks().iter().enumerate() {
            for (i, &x) in b.iter().enumerate() {
                match x {
                    0 => {}
                    1 if plus.is_none() => plus = Some((k, i)),
                    -1 if minus.is_none() => minus = Some((k, i)),
                    _ => return None,
                }
            }
        }
        match (plus, minus) {
            (Some((k1, i)), Some((k2, j))) if k1 == k2 => Some(Root { block: k1, i, j }),
            _ => None,
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha[{}]_{{{},{}}}", self.block + 1, self.i + 1, self.j + 1)
    }
}

/// `lambda_alpha`: `<lambda, alpha> - 1` for positive `alpha`, `<lambda, alpha>` otherwise.
pub fn lambda_alpha(lam: &Cochar, alpha: &Root) -> i64 {
    let pairing = alpha.pairing(lam);
    if alpha.is_positive() {
        pairing - 1
    } else {
        pairing
    }
}
