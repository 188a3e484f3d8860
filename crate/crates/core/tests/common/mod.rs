//! Independent oracles shared by the integration suites.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use kisin_core::group::{act_sigma, act_weyl, dominant_part, Cochar, RatCochar};
use kisin_core::oracle::{Field, Laurent, LaurentMatrix};
use kisin_core::FrobeniusDatum;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

/// Solves `x = rhs + w(sigma(x))` by dense Gaussian elimination on
/// `(1 - w sigma) x = rhs`.
#[allow(clippy::needless_range_loop)]
pub fn dense_solve(datum: &FrobeniusDatum, rhs: &RatCochar) -> RatCochar {
    let shape = datum.shape();
    let (n, blocks) = (shape.n(), shape.blocks());
    let dim = n * blocks;
    // Column t of w sigma is the image of the t-th unit vector.
    let mut a = vec![vec![BigRational::zero(); dim + 1]; dim];
    for t in 0..dim {
        let mut unit = Cochar::zeros(n, blocks);
        unit.set(t / n, t % n, 1);
        let img = act_weyl(datum.w(), &act_sigma(shape, &unit).unwrap()).unwrap();
        for s in 0..dim {
            let id = if s == t { 1 } else { 0 };
            a[s][t] = q(id - img.get(s / n, s % n));
        }
    }
    for s in 0..dim {
        a[s][dim] = rhs.get(s / n, s % n).clone();
    }
    for col in 0..dim {
        let piv = (col..dim).find(|&r| !a[r][col].is_zero()).expect("1 - w sigma is invertible");
        a.swap(col, piv);
        let inv = BigRational::one() / a[col][col].clone();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..dim {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..=dim {
                    let v = &a[col][c] * &factor;
                    a[r][c] -= v;
                }
            }
        }
    }
    let flat: Vec<BigRational> = a.into_iter().map(|row| row[dim].clone()).collect();
    RatCochar::from_blocks(flat.chunks(n).map(|c| c.to_vec()).collect()).unwrap()
}

/// `lambda^natural` from the group actions directly.
pub fn natural(datum: &FrobeniusDatum, lam: &Cochar) -> Cochar {
    let ws = act_weyl(datum.w(), &act_sigma(datum.shape(), lam).unwrap()).unwrap();
    datum.tau().add(&ws).unwrap().sub(lam).unwrap()
}

/// Dominance by partial sums on sorted blocks.
pub fn sorted_le(v: &Cochar, mu: &Cochar) -> bool {
    let d = dominant_part(v);
    d.blocks().iter().zip(mu.blocks()).all(|(a, b)| {
        let mut sa = 0;
        let mut sb = 0;
        for (x, y) in a.iter().zip(b) {
            sa += x;
            sb += y;
            if sa > sb {
                return false;
            }
        }
        sa == sb
    })
}

pub fn box_bound(datum: &FrobeniusDatum, mu: &Cochar) -> i64 {
    let shape = datum.shape();
    shape.blocks() as i64 * (datum.tau().max_abs() + mu.max_abs() + shape.n() as i64 * mu.max_abs())
}

/// `{lambda in [-B, B]^n : dominant(lambda^natural) <= mu}` for one block,
/// by scanning the whole box.
pub fn box_strata_single(datum: &FrobeniusDatum, mu: &Cochar) -> Vec<Cochar> {
    assert_eq!(datum.shape().blocks(), 1);
    let n = datum.shape().n();
    let b = box_bound(datum, mu);
    let side = 2 * b + 1;
    let total = side.pow(n as u32);
    let mut out = Vec::new();
    let mut lam = vec![0i64; n];
    for code in 0..total {
        let mut c = code;
        for x in lam.iter_mut() {
            *x = c % side - b;
            c /= side;
        }
        let l = Cochar::from_blocks(vec![lam.clone()]).unwrap();
        if sorted_le(&natural(datum, &l), mu) {
            out.push(l);
        }
    }
    out.sort();
    out
}

/// Box enumeration for several blocks. The last block scans the box; each
/// earlier block is restricted to the values for which every entry of
/// `lambda^natural` lies in `[min mu_k, max mu_k]`, a necessary condition.
pub fn box_strata_pruned(datum: &FrobeniusDatum, mu: &Cochar) -> Vec<Cochar> {
    let shape = datum.shape();
    let (n, blocks) = (shape.n(), shape.blocks());
    let b = box_bound(datum, mu);
    let side = 2 * b + 1;
    let mut out = Vec::new();
    for code in 0..side.pow(n as u32) {
        let mut c = code;
        let last: Vec<i64> = (0..n)
            .map(|_| {
                let x = c % side - b;
                c /= side;
                x
            })
            .collect();
        let mut partial = vec![Vec::new(); blocks];
        partial[blocks - 1] = last;
        extend_down(datum, mu, blocks - 1, &mut partial, b, &mut out);
    }
    out.sort();
    out.dedup();
    out
}

fn extend_down(datum: &FrobeniusDatum, mu: &Cochar, k: usize, partial: &mut Vec<Vec<i64>>, b: i64, out: &mut Vec<Cochar>) {
    if k == 0 {
        let lam = Cochar::from_blocks(partial.clone()).unwrap();
        if lam.max_abs() <= b && sorted_le(&natural(datum, &lam), mu) {
            out.push(lam);
        }
        return;
    }
    let shape = datum.shape();
    let n = shape.n();
    let j = k - 1;
    // lambda_j = tau_j + eps_j w_j(lambda_{j+1}) - nat_j with nat_j in [lo, hi].
    let eps = shape.eps()[j];
    let perm = datum.w().perm(j);
    let mut base = vec![0i64; n];
    for i in 0..n {
        base[perm.apply(i)] = eps * partial[k][i];
    }
    let tau = datum.tau().block(j);
    let (lo, hi) = (*mu.block(j).last().unwrap(), mu.block(j)[0]);
    let width = (hi - lo + 1) as usize;
    for code in 0..width.pow(n as u32) {
        let mut c = code;
        let block: Vec<i64> = (0..n)
            .map(|i| {
                let nat = lo + (c % width) as i64;
                c /= width;
                tau[i] + base[i] - nat
            })
            .collect();
        partial[j] = block;
        extend_down(datum, mu, j, partial, b, out);
    }
}

/// Whether `mu - nu` is a non-negative integer combination of the simple
/// coroots `e_i - e_{i+1}`, by searching coefficients in `[0, C]` with
/// `C = |mu - nu|_1` for one block.
pub fn coroot_search_block(nu: &[i64], mu: &[i64]) -> bool {
    let n = nu.len();
    let diff: Vec<i64> = mu.iter().zip(nu).map(|(x, y)| x - y).collect();
    if n == 1 {
        return diff[0] == 0;
    }
    let cap: i64 = diff.iter().map(|x| x.abs()).sum();
    // The last coefficient is forced by the last coordinate.
    let last = -diff[n - 1];
    if !(0..=cap).contains(&last) {
        return false;
    }
    let mut coeffs = vec![0i64; n - 1];
    coeffs[n - 2] = last;
    fn go(k: usize, coeffs: &mut Vec<i64>, cap: i64, diff: &[i64]) -> bool {
        let n = diff.len();
        if k == n - 2 {
            let mut v = vec![0i64; n];
            for (i, &c) in coeffs.iter().enumerate() {
                v[i] += c;
                v[i + 1] -= c;
            }
            return v == diff;
        }
        for c in 0..=cap {
            coeffs[k] = c;
            if go(k + 1, coeffs, cap, diff) {
                return true;
            }
        }
        false
    }
    go(0, &mut coeffs, cap, &diff)
}

pub fn coroot_search_leq(nu: &Cochar, mu: &Cochar) -> bool {
    nu.blocks().iter().zip(mu.blocks()).all(|(a, b)| coroot_search_block(a, b))
}

/// Number of `F[u]`-submodules of `(F[u]/u^{2B})^n`, i.e. lattices between
/// `u^B O^n` and `u^{-B} O^n`, by closure search over subspaces.
pub fn count_lattices(n: usize, bound: usize, field: &Field) -> usize {
    let len = 2 * bound;
    let dim = n * len;
    let qn = field.order();
    let size = qn.pow(dim as u32);
    // Vector: coordinate (i, t) is the coefficient of u^{t - B} e_i.
    let decode = |x: usize| -> Vec<u16> { (0..dim).map(|k| ((x / qn.pow(k as u32)) % qn) as u16).collect() };
    let encode = |v: &[u16]| -> usize { v.iter().rev().fold(0, |acc, &c| acc * qn + c as usize) };
    let shift = |x: usize| -> usize {
        let v = decode(x);
        let mut w = vec![0u16; dim];
        for i in 0..n {
            for t in 0..len - 1 {
                w[i * len + t + 1] = v[i * len + t];
            }
        }
        encode(&w)
    };
    let add = |x: usize, y: usize| -> usize {
        let (a, b) = (decode(x), decode(y));
        encode(&a.iter().zip(&b).map(|(&s, &t)| field.add(s, t)).collect::<Vec<_>>())
    };
    let scale = |c: u16, x: usize| -> usize { encode(&decode(x).iter().map(|&s| field.mul(c, s)).collect::<Vec<_>>()) };
    let close = |mut members: Vec<usize>| -> Vec<usize> {
        let mut set: HashSet<usize> = members.iter().copied().collect();
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            let mut new = vec![shift(x)];
            for c in field.elements() {
                new.push(scale(c, x));
            }
            for &y in members.clone().iter() {
                new.push(add(x, y));
            }
            for z in new {
                if set.insert(z) {
                    members.push(z);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    };
    let zero = close(vec![0]);
    let mut seen: HashSet<Vec<usize>> = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(sub) = queue.pop_front() {
        let members: HashSet<usize> = sub.iter().copied().collect();
        for v in 0..size {
            if members.contains(&v) {
                continue;
            }
            let mut gens = sub.clone();
            gens.push(v);
            let bigger = close(gens);
            if seen.insert(bigger.clone()) {
                queue.push_back(bigger);
            }
        }
    }
    seen.len()
}

fn det(m: &[Vec<Laurent>], f: &Field) -> Laurent {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Laurent::zero();
    for j in 0..n {
        let minor: Vec<Vec<Laurent>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = m[0][j].mul(&det(&minor, f), f);
        acc = if j % 2 == 0 { acc.add(&term, f) } else { acc.sub(&term, f) };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect()
}

/// Elementary divisors from determinantal divisors: `d_k` is the minimal
/// valuation of a `k x k` minor and the divisors are `d_k - d_{k-1}`.
#[allow(clippy::needless_range_loop)]
pub fn divisors_by_minors(m: &LaurentMatrix, f: &Field) -> Vec<i64> {
    let n = m.n();
    let rows = m.rows();
    let mut d = vec![0i64; n + 1];
    for k in 1..=n {
        d[k] = subsets(n, k)
            .iter()
            .flat_map(|rs| subsets(n, k).into_iter().map(move |cs| (rs.clone(), cs)))
            .filter_map(|(rs, cs)| {
                let sub: Vec<Vec<Laurent>> = rs.iter().map(|&r| cs.iter().map(|&c| rows[r][c].clone()).collect()).collect();
                det(&sub, f).valuation()
            })
            .min()
            .expect("invertible matrix");
    }
    let mut out: Vec<i64> = (1..=n).map(|k| d[k] - d[k - 1]).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn rat_is_positive(x: &BigRational) -> bool {
    x.is_positive()
}

/// Two vectors in the same coset `Z^n - e` with equal coordinate sums, where
/// `e` is one block of the fixed point of a random simple Caruso datum.
pub fn coset_pair(rng: &mut rand_chacha::ChaCha8Rng) -> (Vec<BigRational>, Vec<BigRational>) {
    use rand::seq::SliceRandom;
    use rand::Rng;
    let datum = loop {
        let n = rng.gen_range(2..=5usize);
        let f = rng.gen_range(1..=2usize);
        let p = *[2i64, 3, 5].choose(rng).unwrap();
        let bound = p.pow((n * f) as u32).min(1 << 12);
        if let Ok(d) = FrobeniusDatum::caruso_raw(n, f, p, rng.gen_range(-bound..bound)) {
            break d;
        }
    };
    let e = datum.e().block(rng.gen_range(0..datum.shape().blocks())).to_vec();
    let n = e.len();
    let x: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
    let mut y: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
    y[n - 1] += x.iter().sum::<i64>() - y.iter().sum::<i64>();
    let shift = |z: &[i64]| z.iter().zip(&e).map(|(&a, b)| q(a) - b).collect();
    (shift(&x), shift(&y))
}

/// Properties (1)-(5) of the descent statistics on a coset pair.
pub fn check_descent_pair(v: &[BigRational], w: &[BigRational]) -> Result<(), String> {
    use kisin_core::multicopy::{descent_stats, varsigma};
    let one = BigRational::one();
    for x in [v, w] {
        let s = descent_stats(x);
        let sx = varsigma(x);
        let ss = descent_stats(&sx);
        if s.h >= 1 && (ss.delta != &s.delta - &one || ss.h != s.h - 1) {
            return Err(format!("(1) fails on {x:?}"));
        }
        if s.h == 0 && ss.h != 0 {
            return Err(format!("(2) fails on {x:?}"));
        }
    }
    let (sv, sw) = (descent_stats(v), descent_stats(w));
    if (sv.delta <= sw.delta) != (sv.h <= sw.h) {
        return Err(format!("(4) fails on {v:?}, {w:?}"));
    }
    if sv.delta <= sw.delta && descent_stats(&varsigma(v)).delta > descent_stats(&varsigma(w)).delta {
        return Err(format!("(5) fails on {v:?}, {w:?}"));
    }
    // Lowering both in lockstep keeps the sums equal and reaches h = 0.
    let (mut a, mut b) = (v.to_vec(), w.to_vec());
    for _ in 0..sv.h.max(sw.h) {
        a = varsigma(&a);
        b = varsigma(&b);
    }
    if descent_stats(&a).h != 0 || descent_stats(&b).h != 0 || a != b {
        return Err(format!("(3) fails on {v:?}, {w:?}"));
    }
    Ok(())
}
