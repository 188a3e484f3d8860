use crate::error::{Error, Result};

use super::field::{Fe, Field};
use super::laurent::Laurent;
use super::matrix::LaurentMatrix;

/// Default cap on the number of Hermite representatives scanned.
pub const DEFAULT_MAX_COSETS: u64 = 5_000_000;

/// Hermite representatives of lattices `L` with
/// `u^B O^n <= L <= u^{-B} O^n`, indexed densely.
///
/// Representatives are upper triangular with diagonal `u^{a_i}`,
/// `a_i in [-B, B]`, and entry `(i, j)` supported on exponents `[-B, a_i)`.
/// The index space also contains matrices whose lattice does not contain
/// `u^B O^n`; [`CosetSpace::contains_floor`] filters those.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    n: usize,
    bound: i64,
    q: u64,
    blocks: Vec<(Vec<i64>, u64)>,
    starts: Vec<u64>,
    total: u64,
}

impl CosetSpace {
    pub fn new(n: usize, bound: i64, field: &Field, max: u64) -> Result<Self> {
        if n == 0 || bound < 0 {
            return Err(Error::Oracle(format!("invalid coset box n={n}, bound={bound}")));
        }
        let q = field.order() as u64;
        let too_big = || Error::Oracle(format!("coset space for n={n}, bound={bound}, q={q} exceeds {max}"));
        let side = (2 * bound + 1) as u64;
        let diagonals = side.checked_pow(n as u32).ok_or_else(too_big)?;
        let mut blocks = Vec::new();
        let mut starts = Vec::new();
        let mut total = 0u64;
        for code in 0..diagonals {
            let mut c = code;
            let diag: Vec<i64> = (0..n)
                .map(|_| {
                    let a = (c % side) as i64 - bound;
                    c /= side;
                    a
                })
                .collect();
            // Row i has n - 1 - i free entries, each with a_i + B coefficients.
            let digits: u32 = diag.iter().enumerate().map(|(i, &a)| ((n - 1 - i) as i64 * (a + bound)) as u32).sum();
            let count = q.checked_pow(digits).ok_or_else(too_big)?;
            starts.push(total);
            total = total.checked_add(count).filter(|&t| t <= max).ok_or_else(too_big)?;
            blocks.push((diag, count));
        }
        Ok(Self { n, bound, q, blocks, starts, total })
    }

    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// The representative with dense index `idx`.
    pub fn get(&self, idx: u64) -> LaurentMatrix {
        assert!(idx < self.total, "coset index out of range");
        let b = self.starts.partition_point(|&s| s <= idx) - 1;
        let (diag, _) = &self.blocks[b];
        let mut rest = idx - self.starts[b];
        let mut m = LaurentMatrix::diag_monomial(diag);
        for (i, &a) in diag.iter().enumerate() {
            let len = (a + self.bound) as usize;
            for j in i + 1..self.n {
                let coeffs: Vec<Fe> = (0..len)
                    .map(|_| {
                        let c = (rest % self.q) as Fe;
                        rest /= self.q;
                        c
                    })
                    .collect();
                m.set(i, j, Laurent::from_coeffs(-self.bound, coeffs));
            }
        }
        m
    }

    /// Whether `u^B O^n` lies in the lattice of `g`, given `g^{-1}`.
    pub fn contains_floor(&self, g_inv: &LaurentMatrix) -> bool {
        g_inv.min_valuation().is_none_or(|v| v >= -self.bound)
    }
}

/// All Hermite representatives of lattices between `u^B O^n` and `u^{-B} O^n`.
pub fn hnf_cosets(n: usize, bound: i64, field: &Field) -> Result<Vec<LaurentMatrix>> {
    let space = CosetSpace::new(n, bound, field, DEFAULT_MAX_COSETS)?;
    let mut out = Vec::new();
    for idx in 0..space.len() {
        let g = space.get(idx);
        if space.contains_floor(&g.inverse_upper(field)?) {
            out.push(g);
        }
    }
    Ok(out)
}
