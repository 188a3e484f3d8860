use std::fmt;

use crate::error::{Error, Result};
use crate::group::Perm;

use super::field::Field;
use super::laurent::Laurent;

/// Square matrix of Laurent polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentMatrix {
    n: usize,
    entries: Vec<Laurent>,
}

impl LaurentMatrix {
    pub fn zero(n: usize) -> Self {
        Self { n, entries: vec![Laurent::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diag_monomial(&vec![0; n])
    }

    /// `u^exps` on the diagonal.
    pub fn diag_monomial(exps: &[i64]) -> Self {
        let n = exps.len();
        let mut m = Self::zero(n);
        for (i, &k) in exps.iter().enumerate() {
            m.set(i, i, Laurent::monomial(1, k));
        }
        m
    }

    /// The permutation matrix sending `e_i` to `e_{w(i)}`.
    pub fn permutation(w: &Perm) -> Self {
        let mut m = Self::zero(w.len());
        for i in 0..w.len() {
            m.set(w.apply(i), i, Laurent::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Laurent>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square matrix expected");
        Self { n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Laurent {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Laurent) {
        self.entries[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &Self, f: &Field) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b, f), f);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    /// Entrywise `u -> u^p`.
    pub fn sigma(&self, p: u32) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|e| e.sigma(p)).collect() }
    }

    /// Smallest valuation among nonzero entries.
    pub fn min_valuation(&self) -> Option<i64> {
        self.entries.iter().filter_map(Laurent::valuation).min()
    }

    /// Inverse of an upper-triangular matrix with monomial diagonal.
    pub fn inverse_upper(&self, f: &Field) -> Result<Self> {
        let n = self.n;
        let mut diag_inv = Vec::with_capacity(n);
        for i in 0..n {
            for j in 0..i {
                if !self.get(i, j).is_zero() {
                    return Err(Error::Oracle("matrix is not upper triangular".into()));
                }
            }
            let d = self.get(i, i);
            let mut terms = d.terms();
            match (terms.next(), terms.next()) {
                (Some((k, c)), None) => diag_inv.push((k, f.inv(c).expect("nonzero coefficient"))),
                _ => return Err(Error::Oracle("diagonal entry is not a monomial".into())),
            }
        }
        let mut inv = Self::zero(n);
        for j in 0..n {
            for i in (0..=j).rev() {
                let mut acc = if i == j { Laurent::one() } else { Laurent::zero() };
                for k in i + 1..=j {
                    acc = acc.sub(&self.get(i, k).mul(inv.get(k, j), f), f);
                }
                let (k, c) = diag_inv[i];
                inv.set(i, j, acc.scale(c, f).shift(-k));
            }
        }
        Ok(inv)
    }

    /// Invariant factor exponents of `G(O) m G(O)`, sorted non-increasing.
    pub fn elementary_divisors(&self, f: &Field) -> Result<Vec<i64>> {
        let mut m = self.clone();
        let pivots = m.eliminate(f, false)?;
        let mut out: Vec<i64> = pivots.into_iter().map(|(_, _, v)| v).collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }

    /// The `lambda` with `m in I u^lambda G(O)`, where `I` reduces to lower
    /// triangular matrices modulo `u`.
    pub fn iwahori_label(&self, f: &Field) -> Result<Vec<i64>> {
        let mut m = self.clone();
        let mut label = vec![0; self.n];
        for (r, _, v) in m.eliminate(f, true)? {
            label[r] = v;
        }
        Ok(label)
    }

    /// Fraction-free pivoting on minimal valuation. Each step clears the
    /// pivot row by column operations in `G(O)` and the pivot column by row
    /// operations. With `iwahori`, ties go to the topmost row so that rows
    /// above the pivot only receive `u O` multiples of the pivot row.
    fn eliminate(&mut self, f: &Field, iwahori: bool) -> Result<Vec<(usize, usize, i64)>> {
        let n = self.n;
        let mut rows: Vec<usize> = (0..n).collect();
        let mut cols: Vec<usize> = (0..n).collect();
        let mut pivots = Vec::with_capacity(n);
        while !rows.is_empty() {
            let mut best: Option<(i64, usize, usize)> = None;
            for &r in &rows {
                for &c in &cols {
                    if let Some(v) = self.get(r, c).valuation() {
                        // Rows are scanned top to bottom, so a strict
                        // comparison keeps the topmost row on ties.
                        if best.is_none_or(|(bv, _, _)| v < bv) {
                            best = Some((v, r, c));
                        }
                    }
                }
            }
            let Some((v, r, c)) = best else {
                return Err(Error::Oracle("matrix is singular".into()));
            };
            let unit = self.get(r, c).shift(-v);
            for &c2 in &cols {
                if c2 == c || self.get(r, c2).is_zero() {
                    continue;
                }
                let factor = self.get(r, c2).shift(-v);
                for i in 0..n {
                    let val = self.get(i, c2).mul(&unit, f).sub(&self.get(i, c).mul(&factor, f), f);
                    self.set(i, c2, val);
                }
            }
            for &r2 in &rows {
                if r2 == r || self.get(r2, c).is_zero() {
                    continue;
                }
                let factor = self.get(r2, c).shift(-v);
                debug_assert!(!iwahori || r2 > r || factor.valuation().unwrap() >= 1);
                for j in 0..n {
                    let val = self.get(r2, j).mul(&unit, f).sub(&self.get(r, j).mul(&factor, f), f);
                    self.set(r2, j, val);
                }
            }
            rows.retain(|&x| x != r);
            cols.retain(|&x| x != c);
            pivots.push((r, c, v));
        }
        Ok(pivots)
    }

    pub fn rows(&self) -> Vec<Vec<Laurent>> {
        self.entries.chunks(self.n).map(|c| c.to_vec()).collect()
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
