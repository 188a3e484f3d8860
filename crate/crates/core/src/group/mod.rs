//! Root datum and extended affine Weyl group arithmetic for `(GL_n)^N` with a
//! twisted Frobenius.

mod affine;
mod cochar;
mod dominance;
mod root;
mod shape;
mod weyl;

pub use affine::{apply_inverse, ext_sigma_conj, ExtAffine};
pub use cochar::{rat, BlockVec, Cochar, Coord, RatCochar};
pub use dominance::{dominance_leq, dominant, dominant_part, is_dominant};
pub use root::{lambda_alpha, Root};
pub use shape::GroupShape;
pub use weyl::{act_sigma, act_weyl, Perm, WeylElt};

pub(crate) use cochar::{ceil_i64, floor_i64};
pub(crate) use dominance::{block_leq, sorted_leq};
pub(crate) use shape::is_prime;
