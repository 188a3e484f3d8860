use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::shape::GroupShape;

/// Coordinates a block vector can hold: machine integers or exact rationals.
pub trait Coord: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn scale(&self, k: i64) -> Self;
}

impl Coord for i64 {
    fn zero() -> Self {
        0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn scale(&self, k: i64) -> Self {
        self * k
    }
}

impl Coord for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn scale(&self, k: i64) -> Self {
        self * BigRational::from_integer(BigInt::from(k))
    }
}

/// `N` blocks of length `n`. Ordering is lexicographic by block, then entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BlockVec<T> {
    blocks: Vec<Vec<T>>,
}

/// Integer cocharacter in `(Z^n)^N`.
pub type Cochar = BlockVec<i64>;
/// Rational point of `(Q^n)^N`.
pub type RatCochar = BlockVec<BigRational>;

impl<T: Coord> BlockVec<T> {
    pub fn from_blocks(blocks: Vec<Vec<T>>) -> Result<Self> {
        let Some(first) = blocks.first() else {
            return Err(Error::ShapeMismatch("no blocks".into()));
        };
        let n = first.len();
        if n == 0 || blocks.iter().any(|b| b.len() != n) {
            return Err(Error::ShapeMismatch("blocks must be nonempty and of equal length".into()));
        }
        Ok(Self { blocks })
    }

    pub fn zeros(n: usize, blocks: usize) -> Self {
        Self { blocks: vec![vec![T::zero(); n]; blocks] }
    }

    pub fn zeros_for(shape: &GroupShape) -> Self {
        Self::zeros(shape.n(), shape.blocks())
    }

    pub fn n(&self) -> usize {
        self.blocks[0].len()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block(&self, k: usize) -> &[T] {
        &self.blocks[k]
    }

    pub fn block_mut(&mut self, k: usize) -> &mut Vec<T> {
        &mut self.blocks[k]
    }

    pub fn blocks(&self) -> &[Vec<T>] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Vec<T>> {
        self.blocks
    }

    pub fn get(&self, k: usize, i: usize) -> &T {
        &self.blocks[k][i]
    }

    pub fn set(&mut self, k: usize, i: usize, value: T) {
        self.blocks[k][i] = value;
    }

    pub fn same_shape<U>(&self, other: &BlockVec<U>) -> bool {
        self.blocks.len() == other.blocks.len()
            && self.blocks.iter().zip(&other.blocks).all(|(a, b)| a.len() == b.len())
    }

    pub fn check_shape(&self, shape: &GroupShape, what: &str) -> Result<()> {
        shape.check_blocks(self.n(), self.num_blocks(), what)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if !self.same_shape(other) {
            return Err(Error::ShapeMismatch("block vectors of different shapes".into()));
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
            .collect();
        Ok(Self { blocks })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, T::plus)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, T::minus)
    }

    pub fn neg(&self) -> Self {
        self.map(|x| T::zero().minus(x))
    }

    pub fn map<U: Coord>(&self, f: impl Fn(&T) -> U) -> BlockVec<U> {
        BlockVec { blocks: self.blocks.iter().map(|b| b.iter().map(&f).collect()).collect() }
    }

    /// Flattened coordinates, block-major.
    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.blocks.iter().flatten()
    }
}

impl Cochar {
    pub fn to_rational(&self) -> RatCochar {
        self.map(|&x| BigRational::from_integer(BigInt::from(x)))
    }

    /// Sup norm.
    pub fn max_abs(&self) -> i64 {
        self.iter().map(|x| x.abs()).max().unwrap_or(0)
    }

    /// Constant on every block.
    pub fn is_central(&self) -> bool {
        self.blocks.iter().all(|b| b.iter().all(|x| *x == b[0]))
    }

    /// Per block: entries take at most two consecutive values.
    pub fn is_minuscule(&self) -> bool {
        self.blocks.iter().all(|b| {
            let (lo, hi) = (b.iter().min().unwrap(), b.iter().max().unwrap());
            hi - lo <= 1
        })
    }

    /// Per-block coordinate sums.
    pub fn sum_profile(&self) -> Vec<i64> {
        self.blocks.iter().map(|b| b.iter().sum()).collect()
    }
}

impl RatCochar {
    /// Exact integer vector if every entry is integral.
    pub fn to_integral(&self) -> Option<Cochar> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None }).collect())
            .collect::<Option<Vec<Vec<i64>>>>()?;
        Some(BlockVec { blocks })
    }
}

/// `floor(x)` as an integer.
pub(crate) fn floor_i64(x: &BigRational) -> Result<i64> {
    x.floor().to_integer().to_i64().ok_or_else(|| Error::Overflow(format!("floor({x})")))
}

/// `ceil(x)` as an integer.
pub(crate) fn ceil_i64(x: &BigRational) -> Result<i64> {
    x.ceil().to_integer().to_i64().ok_or_else(|| Error::Overflow(format!("ceil({x})")))
}

/// `num / den` as an exact rational.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl<T: fmt::Display> fmt::Display for BlockVec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |b: &Vec<T>| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        if self.blocks.len() == 1 {
            write!(f, "({})", show(&self.blocks[0]))
        } else {
            let inner: Vec<String> = self.blocks.iter().map(|b| format!("({})", show(b))).collect();
            write!(f, "({})", inner.join(","))
        }
    }
}
