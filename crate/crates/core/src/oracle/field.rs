use crate::error::{Error, Result};
use crate::group::is_prime;

/// Element of a small finite field, encoded as the base-`p` digits of its
/// coordinate vector in the power basis.
pub type Fe = u16;

/// `GF(p^r)` for `r <= 3` with full addition and multiplication tables.
#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    r: u32,
    q: usize,
    modulus: Vec<u32>,
    add: Vec<Fe>,
    mul: Vec<Fe>,
    neg: Vec<Fe>,
    inv: Vec<Fe>,
}

const MAX_ORDER: usize = 256;

impl Field {
    pub fn new(p: i64, r: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Oracle(format!("{p} is not prime")));
        }
        if !(1..=3).contains(&r) {
            return Err(Error::Oracle(format!("field degree {r} outside 1..=3")));
        }
        let p = p as u32;
        let q = (p as usize).checked_pow(r).filter(|&q| q <= MAX_ORDER);
        let Some(q) = q else {
            return Err(Error::Oracle(format!("field of order {p}^{r} exceeds {MAX_ORDER}")));
        };
        let modulus = find_irreducible(p, r);
        let digits = |x: usize| -> Vec<u32> { (0..r).map(|k| (x / (p as usize).pow(k)) as u32 % p).collect() };
        let encode = |d: &[u32]| -> Fe { d.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize) as Fe };
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for x in 0..q {
            let dx = digits(x);
            for y in 0..q {
                let dy = digits(y);
                let sum: Vec<u32> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                add[x * q + y] = encode(&sum);
                mul[x * q + y] = encode(&poly_mul_mod(&dx, &dy, &modulus, p));
            }
        }
        let mut neg = vec![0; q];
        let mut inv = vec![0; q];
        for x in 0..q {
            neg[x] = (0..q).find(|&y| add[x * q + y] == 0).expect("additive inverse") as Fe;
            if x != 0 {
                inv[x] = (1..q).find(|&y| mul[x * q + y] == 1).expect("multiplicative inverse") as Fe;
            }
        }
        Ok(Self { p, r, q, modulus, add, mul, neg, inv })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    pub fn order(&self) -> usize {
        self.q
    }

    /// Coefficients of the monic defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        self.neg[a as usize]
    }

    pub fn inv(&self, a: Fe) -> Option<Fe> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q).map(|x| x as Fe)
    }
}

fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let r = modulus.len() - 1;
    let mut prod = vec![0u32; 2 * r];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (r..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        // x^k = x^{k-r} x^r and x^r = -(lower terms of the modulus).
        for (t, &m) in modulus[..r].iter().enumerate() {
            prod[k - r + t] = (prod[k - r + t] + (p - m) * c) % p;
        }
        prod[k] = 0;
    }
    prod.truncate(r);
    prod
}

/// First monic polynomial of degree `r` (constant term first) without roots
/// in `F_p`; for `r <= 3` that means irreducible.
fn find_irreducible(p: u32, r: u32) -> Vec<u32> {
    if r == 1 {
        return vec![0, 1];
    }
    let r = r as usize;
    let count = (p as usize).pow(r as u32);
    for code in 0..count {
        let mut coeffs: Vec<u32> = (0..r).map(|k| (code / (p as usize).pow(k as u32)) as u32 % p).collect();
        coeffs.push(1);
        let has_root = (0..p).any(|x| coeffs.iter().rev().fold(0u32, |acc, &c| (acc * x + c) % p) == 0);
        if !has_root {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}
