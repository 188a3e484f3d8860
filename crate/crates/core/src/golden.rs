//! The two disconnected examples: the Frobenius data, `mu`, and the expected
//! sets of strata.

use crate::error::Result;
use crate::group::{Cochar, GroupShape, Perm, WeylElt};
use crate::normal_form::FrobeniusDatum;

/// `GL_4`, `b = u^{(2,0,2,0)} (1243)`, `mu = (2p-1, p, p, 1)`.
pub fn counterexample_a(p: i64) -> Result<(FrobeniusDatum, Cochar)> {
    let shape = GroupShape::res(4, 1, p)?;
    let tau = Cochar::from_blocks(vec![vec![2, 0, 2, 0]])?;
    let w = WeylElt::new(vec![Perm::from_cycles(4, &[vec![1, 2, 4, 3]])?])?;
    let mu = Cochar::from_blocks(vec![vec![2 * p - 1, p, p, 1]])?;
    Ok((FrobeniusDatum::new(shape, tau, w)?, mu))
}

/// Expected `S` for [`counterexample_a`], sorted.
pub fn expected_a() -> Vec<Cochar> {
    vec![
        Cochar::from_blocks(vec![vec![1, 1, 1, 1]]).unwrap(),
        Cochar::from_blocks(vec![vec![2, 1, 1, 0]]).unwrap(),
    ]
}

/// Two copies of `GL_3`, `b = (u^{(2,0,1)} (123), u^{(0,0,1)})`,
/// `mu = ((p+1, 0, 0), (p, p, 0))`.
pub fn counterexample_b(p: i64) -> Result<(FrobeniusDatum, Cochar)> {
    let shape = GroupShape::res(3, 2, p)?;
    let tau = Cochar::from_blocks(vec![vec![2, 0, 1], vec![0, 0, 1]])?;
    let w = WeylElt::new(vec![Perm::n_cycle(3), Perm::identity(3)])?;
    let mu = Cochar::from_blocks(vec![vec![p + 1, 0, 0], vec![p, p, 0]])?;
    Ok((FrobeniusDatum::new(shape, tau, w)?, mu))
}

/// Expected `S` for [`counterexample_b`], sorted: `chi` then `chi'`.
pub fn expected_b() -> Vec<Cochar> {
    vec![
        Cochar::from_blocks(vec![vec![1, 0, 1], vec![0, 0, 1]]).unwrap(),
        Cochar::from_blocks(vec![vec![1, 1, 0], vec![1, 0, 0]]).unwrap(),
    ]
}
