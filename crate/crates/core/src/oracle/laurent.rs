use std::fmt;

use super::field::{Fe, Field};

/// Finite Laurent polynomial `sum c_k u^{val + k}` over a small field.
/// Normalized: empty for zero, otherwise first and last coefficients nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Laurent {
    val: i64,
    coeffs: Vec<Fe>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c u^k`.
    pub fn monomial(c: Fe, k: i64) -> Self {
        Self::from_coeffs(k, vec![c])
    }

    /// `sum coeffs[i] u^{low + i}`.
    pub fn from_coeffs(low: i64, coeffs: Vec<Fe>) -> Self {
        let mut l = Self { val: low, coeffs };
        l.normalize();
        l
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.val = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.val += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `u`-adic valuation; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.val)
    }

    /// Largest exponent present.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.val + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, k: i64) -> Fe {
        let i = k - self.val;
        if self.is_zero() || i < 0 || i >= self.coeffs.len() as i64 {
            0
        } else {
            self.coeffs[i as usize]
        }
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i64, Fe)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(move |(i, &c)| (self.val + i as i64, c))
    }

    pub fn add(&self, other: &Self, f: &Field) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.val.min(other.val);
        let hi = self.degree().unwrap().max(other.degree().unwrap());
        let coeffs = (lo..=hi).map(|k| f.add(self.coeff(k), other.coeff(k))).collect();
        Self::from_coeffs(lo, coeffs)
    }

    pub fn neg(&self, f: &Field) -> Self {
        Self { val: self.val, coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect() }
    }

    pub fn sub(&self, other: &Self, f: &Field) -> Self {
        self.add(&other.neg(f), f)
    }

    pub fn mul(&self, other: &Self, f: &Field) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Self::from_coeffs(self.val + other.val, coeffs)
    }

    /// Multiplication by `u^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { val: self.val + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: Fe, f: &Field) -> Self {
        Self::from_coeffs(self.val, self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }

    /// `u -> u^p`, coefficients fixed.
    pub fn sigma(&self, p: u32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let p = p as usize;
        let mut coeffs = vec![0; (self.coeffs.len() - 1) * p + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * p] = c;
        }
        Self { val: self.val * p as i64, coeffs }
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .terms()
            .map(|(k, c)| match (k, c) {
                (0, c) => format!("{c}"),
                (k, 1) => format!("u^{k}"),
                (k, c) => format!("{c}*u^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
