use crate::error::{Error, Result};

use super::cochar::Cochar;
use super::weyl::{Perm, WeylElt};

/// Sorts every block into non-increasing order. The returned `y` satisfies
/// `y.act(v) == dominant(v)`.
pub fn dominant(v: &Cochar) -> (Cochar, WeylElt) {
    let mut blocks = Vec::with_capacity(v.num_blocks());
    let mut perms = Vec::with_capacity(v.num_blocks());
    for b in v.blocks() {
        let mut order: Vec<usize> = (0..b.len()).collect();
        order.sort_by(|&x, &y| b[y].cmp(&b[x]).then(x.cmp(&y)));
        // order[r] is the source index that lands at position r.
        let mut map = vec![0; b.len()];
        for (r, &src) in order.iter().enumerate() {
            map[src] = r;
        }
        blocks.push(order.iter().map(|&i| b[i]).collect());
        perms.push(Perm::new(map).expect("sorting yields a bijection"));
    }
    (
        Cochar::from_blocks(blocks).expect("same shape as input"),
        WeylElt::new(perms).expect("same shape as input"),
    )
}

/// Sorted copy of `v` without the witness.
pub fn dominant_part(v: &Cochar) -> Cochar {
    let blocks = v
        .blocks()
        .iter()
        .map(|b| {
            let mut s = b.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            s
        })
        .collect();
    Cochar::from_blocks(blocks).expect("same shape as input")
}

pub fn is_dominant(v: &Cochar) -> bool {
    v.blocks().iter().all(|b| b.windows(2).all(|w| w[0] >= w[1]))
}

/// Dominance on one sorted block: equal sums and partial sums of `nu`
/// bounded by those of `mu`.
pub(crate) fn block_leq(nu: &[i64], mu: &[i64]) -> bool {
    let mut sn = 0;
    let mut sm = 0;
    for (a, b) in nu.iter().zip(mu) {
        sn += a;
        sm += b;
        if sn > sm {
            return false;
        }
    }
    sn == sm
}

/// The Bruhat order on dominant cocharacters of a product of `GL_n`:
/// blockwise dominance with equal block sums.
pub fn dominance_leq(nu: &Cochar, mu: &Cochar) -> Result<bool> {
    if !nu.same_shape(mu) {
        return Err(Error::ShapeMismatch("dominance between different shapes".into()));
    }
    for (name, v) in [("nu", nu), ("mu", mu)] {
        if !is_dominant(v) {
            return Err(Error::NonDominant(format!("{name} = {v}")));
        }
    }
    Ok(nu.blocks().iter().zip(mu.blocks()).all(|(a, b)| block_leq(a, b)))
}

/// `dominant(v) <= mu` for arbitrary `v` and dominant `mu` (unchecked).
pub(crate) fn sorted_leq(v: &Cochar, mu: &Cochar) -> bool {
    v.blocks().iter().zip(mu.blocks()).all(|(b, m)| {
        let mut s = b.clone();
        s.sort_unstable_by(|a, b| b.cmp(a));
        block_leq(&s, m)
    })
}
