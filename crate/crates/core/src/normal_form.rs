//! Frobenius data `w̃ = u^tau w`, the exact fixed point of `w̃ sigma`, Caruso's
//! normal form for simple elements, and reduction into the fundamental alcove.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::{
    apply_inverse, ceil_i64, ext_sigma_conj, BlockVec, Cochar, Coord, ExtAffine, GroupShape, Perm,
    RatCochar, WeylElt,
};

/// The linear map `A = w ∘ sigma` on `(Q^n)^N`, decomposed into coordinate
/// cycles so that `x = rhs + A x` can be solved exactly.
///
/// Coordinate `(k, w_k(i))` of `A x` is `eps[k] * x[k+1][i]`, so `A` is a
/// weighted permutation matrix. Along a cycle the weights multiply to a
/// positive power of `p` unless every scale is 1.
#[derive(Clone, Debug)]
pub struct TwistedFrobenius {
    shape: GroupShape,
    w: WeylElt,
    next: Vec<usize>,
    scale: Vec<i64>,
    cycles: Vec<Vec<usize>>,
    /// `1 - (product of scales)` for each cycle.
    denominators: Vec<BigInt>,
}

impl TwistedFrobenius {
    pub fn new(shape: &GroupShape, w: &WeylElt) -> Result<Self> {
        w.check_shape(shape, "w")?;
        if shape.is_degenerate() {
            return Err(Error::DegenerateFrobenius);
        }
        let (n, blocks) = (shape.n(), shape.blocks());
        let mut next = vec![0; n * blocks];
        let mut scale = vec![0; n * blocks];
        for k in 0..blocks {
            let inv = w.perm(k).inverse();
            for j in 0..n {
                next[k * n + j] = ((k + 1) % blocks) * n + inv.apply(j);
                scale[k * n + j] = shape.eps()[k];
            }
        }
        let mut seen = vec![false; n * blocks];
        let mut cycles = Vec::new();
        let mut denominators = Vec::new();
        for start in 0..n * blocks {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut product = BigInt::one();
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                cycle.push(c);
                product *= scale[c];
                c = next[c];
            }
            let den = BigInt::one() - product;
            if den.is_zero() {
                return Err(Error::DegenerateFrobenius);
            }
            cycles.push(cycle);
            denominators.push(den);
        }
        Ok(Self { shape: shape.clone(), w: w.clone(), next, scale, cycles, denominators })
    }

    pub fn shape(&self) -> &GroupShape {
        &self.shape
    }

    /// `w(sigma(v))`.
    pub fn apply<T: Coord>(&self, v: &BlockVec<T>) -> Result<BlockVec<T>> {
        v.check_shape(&self.shape, "vector")?;
        let n = self.shape.n();
        let mut out = v.clone();
        for (c, (&nx, &s)) in self.next.iter().zip(&self.scale).enumerate() {
            out.set(c / n, c % n, v.get(nx / n, nx % n).scale(s));
        }
        Ok(out)
    }

    fn flat<T: Coord>(&self, v: &BlockVec<T>) -> Vec<T> {
        v.blocks().iter().flatten().cloned().collect()
    }

    /// The unique `x` with `x = rhs + w(sigma(x))`.
    pub fn solve(&self, rhs: &RatCochar) -> Result<RatCochar> {
        rhs.check_shape(&self.shape, "right-hand side")?;
        let r = self.flat(rhs);
        let mut x = vec![<BigRational as Zero>::zero(); r.len()];
        for (cycle, den) in self.cycles.iter().zip(&self.denominators) {
            let mut acc = <BigRational as Zero>::zero();
            let mut coef = BigInt::one();
            for &c in cycle {
                acc += &r[c] * BigRational::from_integer(coef.clone());
                coef *= self.scale[c];
            }
            let head = acc / BigRational::from_integer(den.clone());
            self.unroll(cycle, &r, &mut x, head, |v, s| v * BigRational::from_integer(s.into()));
        }
        self.unflatten(x)
    }

    /// Integer solution of `x = rhs + w(sigma(x))`, or `None` when the unique
    /// rational solution is not integral.
    pub fn solve_integral(&self, rhs: &Cochar) -> Result<Option<Cochar>> {
        rhs.check_shape(&self.shape, "right-hand side")?;
        let r: Vec<BigInt> = rhs.iter().map(|&v| BigInt::from(v)).collect();
        let mut x = vec![BigInt::zero(); r.len()];
        for (cycle, den) in self.cycles.iter().zip(&self.denominators) {
            let mut acc = BigInt::zero();
            let mut coef = BigInt::one();
            for &c in cycle {
                acc += &r[c] * &coef;
                coef *= self.scale[c];
            }
            let (head, rem) = acc.div_rem(den);
            if !rem.is_zero() {
                return Ok(None);
            }
            self.unroll(cycle, &r, &mut x, head, |v, s| v * s);
        }
        let flat = x
            .into_iter()
            .map(|v| v.to_i64().ok_or_else(|| Error::Overflow(format!("solution entry {v}"))))
            .collect::<Result<Vec<i64>>>()?;
        self.unflatten(flat).map(Some)
    }

    /// Fills `x` on one cycle given its first coordinate, walking backwards
    /// through `x[c] = r[c] + s(c) x[next(c)]`.
    fn unroll<T>(
        &self,
        cycle: &[usize],
        r: &[T],
        x: &mut [T],
        head: T,
        mul: impl Fn(&T, i64) -> T,
    ) where
        T: Clone + std::ops::Add<Output = T>,
    {
        x[cycle[0]] = head;
        for t in (1..cycle.len()).rev() {
            let c = cycle[t];
            let nx = self.next[c];
            x[c] = r[c].clone() + mul(&x[nx], self.scale[c]);
        }
    }

    fn unflatten<T: Coord>(&self, flat: Vec<T>) -> Result<BlockVec<T>> {
        let n = self.shape.n();
        BlockVec::from_blocks(flat.chunks(n).map(|c| c.to_vec()).collect())
    }

    pub fn w(&self) -> &WeylElt {
        &self.w
    }
}

/// Unique fixed point of `v -> tau + w(sigma(v))` for `wt = u^tau w`.
pub fn fixed_point(shape: &GroupShape, wt: &ExtAffine) -> Result<RatCochar> {
    wt.chi.check_shape(shape, "tau")?;
    TwistedFrobenius::new(shape, &wt.y)?.solve(&wt.chi.to_rational())
}

/// Per block: strictly decreasing with spread strictly below 1.
pub fn in_alcove(e: &RatCochar) -> bool {
    e.blocks().iter().all(|b| {
        b.windows(2).all(|w| w[0] > w[1]) && (&b[0] - &b[b.len() - 1]) < BigRational::one()
    })
}

/// A Frobenius datum `w̃ = u^tau w` together with the fixed point `e` of `w̃ sigma`.
#[derive(Clone, Debug)]
pub struct FrobeniusDatum {
    shape: GroupShape,
    wt: ExtAffine,
    e: RatCochar,
    alcove_ok: bool,
    solver: TwistedFrobenius,
}

impl PartialEq for FrobeniusDatum {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.wt == other.wt
    }
}

impl FrobeniusDatum {
    pub fn new(shape: GroupShape, tau: Cochar, w: WeylElt) -> Result<Self> {
        tau.check_shape(&shape, "tau")?;
        w.check_shape(&shape, "w")?;
        let solver = TwistedFrobenius::new(&shape, &w)?;
        let e = solver.solve(&tau.to_rational())?;
        let alcove_ok = in_alcove(&e);
        Ok(Self { shape, wt: ExtAffine { chi: tau, y: w }, e, alcove_ok, solver })
    }

    pub fn from_ext(shape: GroupShape, wt: ExtAffine) -> Result<Self> {
        Self::new(shape, wt.chi, wt.y)
    }

    /// Caruso's simple representative for `(n, q = p^f, m)`, embedded as
    /// `tau = ((m, 0, .., 0), 0, .., 0)`, `w = (n-cycle, id, .., id)`, before
    /// any alcove reduction.
    pub fn caruso_raw(n: usize, f: usize, p: i64, m: i64) -> Result<Self> {
        let shape = GroupShape::res(n, f, p)?;
        let q = BigInt::from(p).pow(f as u32);
        if !is_caruso_simple(n, &q, &BigInt::from(m)) {
            return Err(Error::NotSimple { n, q: q.to_string(), m });
        }
        let mut tau = Cochar::zeros(n, f);
        tau.set(0, 0, m);
        let mut perms = vec![Perm::identity(n); f];
        perms[0] = Perm::n_cycle(n);
        let datum = Self::new(shape, tau, WeylElt::new(perms)?)?;
        check_general_position(&datum.e)?;
        Ok(datum)
    }

    /// Caruso datum reduced into the fundamental alcove.
    pub fn caruso(n: usize, f: usize, p: i64, m: i64) -> Result<Self> {
        Ok(alcove_reduce(&Self::caruso_raw(n, f, p, m)?)?.1)
    }

    pub fn shape(&self) -> &GroupShape {
        &self.shape
    }

    pub fn wt(&self) -> &ExtAffine {
        &self.wt
    }

    pub fn tau(&self) -> &Cochar {
        &self.wt.chi
    }

    pub fn w(&self) -> &WeylElt {
        &self.wt.y
    }

    /// Fixed point of `w̃ sigma`.
    pub fn e(&self) -> &RatCochar {
        &self.e
    }

    pub fn alcove_ok(&self) -> bool {
        self.alcove_ok
    }

    pub fn require_alcove(&self) -> Result<()> {
        if self.alcove_ok {
            Ok(())
        } else {
            Err(Error::NotInAlcove)
        }
    }

    /// `w ∘ sigma` with its cycle decomposition.
    pub fn frobenius(&self) -> &TwistedFrobenius {
        &self.solver
    }

    /// Whether every fixed-point entry and every in-block difference is non-integral.
    pub fn in_general_position(&self) -> bool {
        check_general_position(&self.e).is_ok()
    }
}

fn check_general_position(e: &RatCochar) -> Result<()> {
    for (k, b) in e.blocks().iter().enumerate() {
        for (i, x) in b.iter().enumerate() {
            if x.is_integer() {
                return Err(Error::NotGeneralPosition(format!("entry ({}, {}) = {x} is an integer", k + 1, i + 1)));
            }
            for (j, y) in b.iter().enumerate().skip(i + 1) {
                if (x - y).is_integer() {
                    return Err(Error::NotGeneralPosition(format!(
                        "entries {} and {} of block {} differ by an integer",
                        i + 1,
                        j + 1,
                        k + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Caruso's simplicity condition: `m (q^{n'} - 1) / (q^n - 1)` is not an
/// integer for every proper divisor `n'` of `n`.
pub fn is_caruso_simple(n: usize, q: &BigInt, m: &BigInt) -> bool {
    let full = q.pow(n as u32) - 1u32;
    (1..n).filter(|&d| n.is_multiple_of(d)).all(|d| {
        let part = q.pow(d as u32) - 1u32;
        !(m * part).is_multiple_of(&full)
    })
}

/// Moves a datum into the fundamental alcove by `sigma`-conjugation.
///
/// Returns `z = u^chi y` with `z^{-1}(e)` in the alcove and the conjugated
/// datum `z^{-1} w̃ sigma(z)`. Per block, every entry is translated by an integer
/// into `(a - 1, a]` where `a` is the block maximum, then sorted. A datum
/// already in the alcove yields `z = 1`.
pub fn alcove_reduce(datum: &FrobeniusDatum) -> Result<(ExtAffine, FrobeniusDatum)> {
    check_general_position(&datum.e)?;
    let shape = &datum.shape;
    let mut chi_blocks = Vec::with_capacity(shape.blocks());
    let mut perms = Vec::with_capacity(shape.blocks());
    for b in datum.e.blocks() {
        let top = b.iter().max().expect("nonempty block").clone();
        let chi: Vec<i64> = b.iter().map(|x| ceil_i64(&(x - &top))).collect::<Result<_>>()?;
        let shifted: Vec<BigRational> =
            b.iter().zip(&chi).map(|(x, &c)| x - BigRational::from_integer(c.into())).collect();
        let mut order: Vec<usize> = (0..b.len()).collect();
        order.sort_by(|&i, &j| shifted[j].cmp(&shifted[i]));
        // y(r) = order[r], so (y^{-1} v)_r = v_{order[r]} is decreasing.
        perms.push(Perm::new(order)?);
        chi_blocks.push(chi);
    }
    let z = ExtAffine::new(Cochar::from_blocks(chi_blocks)?, WeylElt::new(perms)?)?;
    let wt = ext_sigma_conj(shape, &z, &datum.wt)?;
    let reduced = FrobeniusDatum::from_ext(shape.clone(), wt)?;
    let transported = apply_inverse(&z, &datum.e)?;
    if reduced.e != transported || !reduced.alcove_ok {
        return Err(Error::TheoremViolation(
            "alcove reduction did not transport the fixed point into the alcove".into(),
        ));
    }
    Ok((z, reduced))
}

/// `gcd(q^a - 1, q^b - 1)`, checked against `q^{gcd(a, b)} - 1`.
pub fn gcd_power_fact(q: u64, a: u32, b: u32) -> BigInt {
    let q = BigInt::from(q);
    let lhs = (Pow::pow(&q, a) - 1u32).gcd(&(Pow::pow(&q, b) - 1u32));
    let rhs = Pow::pow(&q, a.gcd(&b)) - 1u32;
    assert_eq!(lhs, rhs, "gcd(q^a - 1, q^b - 1) = q^gcd(a, b) - 1 failed");
    lhs
}
