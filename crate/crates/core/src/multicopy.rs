//! The `d`-copy group `H^d`: block `i + j d` carries copy `i` of factor `j`,
//! the Frobenius datum is `b = (1, .., 1, b)` per factor, and the unique
//! zero-dimensional stratum for `mu` made of `0` and `omega_1` blocks.

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{floor_i64, Cochar, GroupShape, Perm, RatCochar, WeylElt};
use crate::normal_form::FrobeniusDatum;
use crate::strata::{enumerate_strata_with, EnumOptions, Stratum};

#[derive(Clone, Debug)]
pub struct MultiDatum {
    base: FrobeniusDatum,
    d: usize,
    lifted: FrobeniusDatum,
}

/// Block index of copy `i` of factor `j` (both 0-based).
pub fn interleave(d: usize, i: usize, j: usize) -> usize {
    i + j * d
}

impl MultiDatum {
    pub fn new(base: FrobeniusDatum, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidShape("d must be at least 1".into()));
        }
        let shape = base.shape();
        let (n, f) = (shape.n(), shape.blocks());
        if shape.eps().iter().any(|&e| e != shape.p()) {
            return Err(Error::InvalidShape("base datum must have every scale equal to p".into()));
        }
        let lifted_shape = GroupShape::multi_copy(n, f, d, shape.p())?;
        let mut tau = Cochar::zeros(n, f * d);
        let mut perms = vec![Perm::identity(n); f * d];
        for j in 0..f {
            let k = interleave(d, d - 1, j);
            *tau.block_mut(k) = base.tau().block(j).to_vec();
            perms[k] = base.w().perm(j).clone();
        }
        let lifted = FrobeniusDatum::new(lifted_shape, tau, WeylElt::new(perms)?)?;
        Ok(Self { base, d, lifted })
    }

    pub fn base(&self) -> &FrobeniusDatum {
        &self.base
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn lifted(&self) -> &FrobeniusDatum {
        &self.lifted
    }

    /// `(e, .., e)` interleaved; equals the lifted fixed point.
    pub fn e_bar(&self) -> RatCochar {
        let f = self.base.shape().blocks();
        let blocks = (0..f * self.d).map(|k| self.base.e().block(k / self.d).to_vec()).collect();
        RatCochar::from_blocks(blocks).expect("nonempty blocks")
    }

    /// Copy-0 slice of a lifted cocharacter.
    pub fn project_first(&self, lam: &Cochar) -> Result<Cochar> {
        lam.check_shape(self.lifted.shape(), "lambda")?;
        let f = self.base.shape().blocks();
        Cochar::from_blocks((0..f).map(|j| lam.block(interleave(self.d, 0, j)).to_vec()).collect())
    }
}

/// Splits `mu = (m_j omega_1)_j` into `d f` blocks, block `(i, j)` being
/// `omega_1` if `i < m_j` and `0` otherwise.
pub fn decompose_mu(mu: &Cochar, d: usize) -> Result<Cochar> {
    let n = mu.n();
    let f = mu.num_blocks();
    let mut out = Cochar::zeros(n, f * d);
    for (j, b) in mu.blocks().iter().enumerate() {
        let m = b[0];
        if b[1..].iter().any(|&x| x != 0) || m < 0 || m as usize > d {
            return Err(Error::NotOmegaShape(mu.to_string()));
        }
        for i in 0..m as usize {
            out.set(interleave(d, i, j), 0, 1);
        }
    }
    Ok(out)
}

/// `m^k` for a lifted `mu` whose blocks are all `0` or `omega_1`.
pub fn omega_pattern(mu: &Cochar) -> Result<Vec<bool>> {
    mu.blocks()
        .iter()
        .map(|b| match (b[0], b[1..].iter().all(|&x| x == 0)) {
            (0, true) => Ok(false),
            (1, true) => Ok(true),
            _ => Err(Error::NotOmegaShape(mu.to_string())),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentStats {
    pub delta: BigRational,
    pub h: i64,
}

fn min_of(v: &[BigRational]) -> &BigRational {
    v.iter().min().expect("nonempty vector")
}

/// `delta(v) = <v> - n min[v]` and `h(v) = sum floor(v(i) - min[v])`.
pub fn descent_stats(v: &[BigRational]) -> DescentStats {
    let min = min_of(v);
    let sum: BigRational = v.iter().sum();
    let n = BigRational::from_integer((v.len() as i64).into());
    let h = v.iter().map(|x| floor_i64(&(x - min)).expect("bounded")).sum();
    DescentStats { delta: sum - n * min, h }
}

/// Decrements every maximal entry by 1.
pub fn varsigma(v: &[BigRational]) -> Vec<BigRational> {
    let max = v.iter().max().expect("nonempty vector").clone();
    let one = BigRational::from_integer(1.into());
    v.iter().map(|x| if *x == max { x - &one } else { x.clone() }).collect()
}

/// Outcome of [`recursion_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecursionCheck {
    /// First block (0-based) where the recursion fails.
    pub failed_block: Option<usize>,
    /// A block `k0` with `h(lambda_hat^{k0}) = 0`.
    pub claim2_witness: Option<usize>,
}

impl RecursionCheck {
    pub fn passed(&self) -> bool {
        self.failed_block.is_none() && self.claim2_witness.is_some()
    }
}

/// With `lambda_hat = lambda - e_bar`, checks
/// `lambda_hat^k = eps^k w^k(lambda_hat^{k+1})`, with `varsigma` applied when
/// `m^k = 1`, and looks for a block where `h` vanishes.
#[allow(clippy::needless_range_loop)]
pub fn recursion_check(multi: &MultiDatum, mu: &Cochar, lam: &Cochar) -> Result<RecursionCheck> {
    let lifted = multi.lifted();
    let shape = lifted.shape();
    lam.check_shape(shape, "lambda")?;
    mu.check_shape(shape, "mu")?;
    let pattern = omega_pattern(mu)?;
    let hat = lam.to_rational().sub(&multi.e_bar())?;
    let blocks = shape.blocks();
    let mut failed_block = None;
    for k in 0..blocks {
        let next = hat.block((k + 1) % blocks);
        let scale = BigRational::from_integer(shape.eps()[k].into());
        let mut image = lifted.w().perm(k).act(next);
        image.iter_mut().for_each(|x| *x *= &scale);
        if pattern[k] {
            image = varsigma(&image);
        }
        if image != hat.block(k) {
            failed_block = Some(k);
            break;
        }
    }
    let claim2_witness = (0..blocks).find(|&k| descent_stats(hat.block(k)).h == 0);
    Ok(RecursionCheck { failed_block, claim2_witness })
}

/// The unique stratum with `|R| = 0`, or `None` when `S` is empty.
pub fn unique_zero_stratum(multi: &MultiDatum, mu: &Cochar) -> Result<Option<Stratum>> {
    unique_zero_stratum_with(multi, mu, EnumOptions::default())
}

pub fn unique_zero_stratum_with(multi: &MultiDatum, mu: &Cochar, opts: EnumOptions) -> Result<Option<Stratum>> {
    omega_pattern(mu)?;
    let strata = enumerate_strata_with(multi.lifted(), mu, opts)?;
    if strata.is_empty() {
        return Ok(None);
    }
    let mut zero: Vec<Stratum> = strata.into_iter().filter(|s| s.dim == Some(0)).collect();
    if zero.len() != 1 {
        return Err(Error::TheoremViolation(format!(
            "expected exactly one zero-dimensional stratum, found {}",
            zero.len()
        )));
    }
    Ok(zero.pop())
}

/// Whether `v` has pairwise non-integral differences.
pub fn generic_differences(v: &[BigRational]) -> bool {
    v.iter().enumerate().all(|(i, x)| v[i + 1..].iter().all(|y| !(x - y).is_integer()))
}

/// `<v>`.
pub fn coordinate_sum(v: &[BigRational]) -> BigRational {
    v.iter().fold(BigRational::zero(), |a, x| a + x)
}
