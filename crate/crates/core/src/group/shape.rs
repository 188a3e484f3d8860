use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Block structure of a product of `N` copies of `GL_n` with a twisted
/// Frobenius: `sigma(v)[k] = eps[k] * v[k + 1]` (indices cyclic).
///
/// The restriction of scalars `Res_{F_q/F_p} GL_n` with `q = p^f` is
/// `N = f` blocks all scaled by `p`. The `d`-fold multi-copy variant has
/// `N = d * f` blocks, scaled by `p` exactly on every `d`-th block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupShape {
    n: usize,
    p: i64,
    eps: Vec<i64>,
}

pub(crate) fn is_prime(p: i64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl GroupShape {
    /// Builds a shape from an explicit scale pattern. Every scale must be `1`
    /// or `p`. An all-ones pattern is accepted (it is a pure block rotation)
    /// but has no fixed-point theory; see [`GroupShape::is_degenerate`].
    pub fn new(n: usize, p: i64, eps: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidShape("n must be at least 1".into()));
        }
        if eps.is_empty() {
            return Err(Error::InvalidShape("need at least one block".into()));
        }
        if !is_prime(p) {
            return Err(Error::InvalidShape(format!("{p} is not prime")));
        }
        if let Some(bad) = eps.iter().find(|&&e| e != 1 && e != p) {
            return Err(Error::InvalidShape(format!("scale {bad} is neither 1 nor p={p}")));
        }
        Ok(Self { n, p, eps })
    }

    /// `Res_{F_{p^f}/F_p} GL_n`.
    pub fn res(n: usize, f: usize, p: i64) -> Result<Self> {
        Self::new(n, p, vec![p; f])
    }

    /// The `d`-copy group of `Res_{F_{p^f}/F_p} GL_n`, with block
    /// `i + j*d` (0-based copy `i`, factor `j`) scaled by `p` iff `i = d - 1`.
    pub fn multi_copy(n: usize, f: usize, d: usize, p: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidShape("d must be at least 1".into()));
        }
        let eps = (0..d * f).map(|k| if (k + 1) % d == 0 { p } else { 1 }).collect();
        Self::new(n, p, eps)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    /// Number of `GL_n` blocks.
    pub fn blocks(&self) -> usize {
        self.eps.len()
    }

    pub fn eps(&self) -> &[i64] {
        &self.eps
    }

    /// Number of blocks scaled by `p`; for a `Res` or multi-copy shape this is `f`.
    pub fn frobenius_degree(&self) -> usize {
        self.eps.iter().filter(|&&e| e == self.p).count()
    }

    pub fn is_degenerate(&self) -> bool {
        self.frobenius_degree() == 0
    }

    pub(crate) fn check_blocks(&self, n: usize, blocks: usize, what: &str) -> Result<()> {
        if n != self.n || blocks != self.blocks() {
            return Err(Error::ShapeMismatch(format!(
                "{what} has {blocks} blocks of length {n}, shape expects {} of length {}",
                self.blocks(),
                self.n
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multi_copy_pattern() {
        let s = GroupShape::multi_copy(3, 2, 3, 5).unwrap();
        assert_eq!(s.eps(), &[1, 1, 5, 1, 1, 5]);
        assert_eq!(s.frobenius_degree(), 2);
        assert_eq!(GroupShape::res(2, 3, 2).unwrap().eps(), &[2, 2, 2]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(GroupShape::new(0, 3, vec![3]).is_err());
        assert!(GroupShape::new(2, 4, vec![4]).is_err());
        assert!(GroupShape::new(2, 3, vec![2]).is_err());
        assert!(GroupShape::new(2, 3, vec![]).is_err());
        assert!(GroupShape::new(2, 3, vec![1, 1]).unwrap().is_degenerate());
    }
}
