use serde::{Deserialize, Serialize};

use crate::error::Result;

use super::cochar::{Cochar, RatCochar};
use super::shape::GroupShape;
use super::weyl::{act_sigma, WeylElt};

/// `u^chi y` in the extended affine Weyl group `Y ⋊ W_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtAffine {
    pub chi: Cochar,
    pub y: WeylElt,
}

impl ExtAffine {
    pub fn new(chi: Cochar, y: WeylElt) -> Result<Self> {
        y.act(&chi)?;
        Ok(Self { chi, y })
    }

    pub fn identity(n: usize, blocks: usize) -> Self {
        Self { chi: Cochar::zeros(n, blocks), y: WeylElt::identity(n, blocks) }
    }

    pub fn translation(chi: Cochar) -> Self {
        let y = WeylElt::identity(chi.n(), chi.num_blocks());
        Self { chi, y }
    }

    pub fn is_identity(&self) -> bool {
        self.y.is_identity() && self.chi.iter().all(|&x| x == 0)
    }

    /// `(u^a x)(u^b y) = u^{a + x(b)} xy`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let chi = self.chi.add(&self.y.act(&other.chi)?)?;
        Ok(Self { chi, y: self.y.compose(&other.y)? })
    }

    /// `(u^chi y)^{-1} = u^{-y^{-1}(chi)} y^{-1}`.
    pub fn inverse(&self) -> Self {
        let y_inv = self.y.inverse();
        let chi = y_inv.act(&self.chi).expect("shapes agree").neg();
        Self { chi, y: y_inv }
    }

    /// Affine action on `Y_R`: `v -> chi + y(v)`.
    pub fn apply(&self, v: &RatCochar) -> Result<RatCochar> {
        self.chi.to_rational().add(&self.y.act(v)?)
    }

    /// `sigma(u^chi y) = u^{sigma(chi)} sigma_0(y)`.
    pub fn sigma(&self, shape: &GroupShape) -> Result<Self> {
        Ok(Self { chi: act_sigma(shape, &self.chi)?, y: self.y.sigma0() })
    }
}

/// `z^{-1} wt sigma(z)`.
pub fn ext_sigma_conj(shape: &GroupShape, z: &ExtAffine, wt: &ExtAffine) -> Result<ExtAffine> {
    z.inverse().mul(wt)?.mul(&z.sigma(shape)?)
}

/// Applies `z^{-1}` to a rational point.
pub fn apply_inverse(z: &ExtAffine, v: &RatCochar) -> Result<RatCochar> {
    z.inverse().apply(v)
}
