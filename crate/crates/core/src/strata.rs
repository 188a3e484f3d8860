//! Semi-module strata: `lambda^natural`, nonemptiness, exact enumeration of
//! `S = {lambda : dominant(lambda^natural) <= mu}`, and the combinatorial
//! singleton certificates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{try_filter_map_range, Execution};
use crate::group::{block_leq, is_dominant, lambda_alpha, sorted_leq, Cochar, GroupShape, Root};
use crate::normal_form::FrobeniusDatum;

/// Default cap on the number of candidate values of `lambda^natural`.
pub const DEFAULT_MAX_CANDIDATES: u64 = 10_000_000;

/// Why a stratum is known to be a single point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SingletonReason {
    /// `lambda` is constant on every block.
    Central,
    /// `lambda` is dominant and minuscule.
    DominantMinuscule,
    /// `lambda^natural` is conjugate to `mu` and `lambda_alpha = 0` on `D(lambda)`.
    DClaim,
    /// `mu` is minuscule and `R(lambda)` is empty.
    EmptyR,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Singleton {
    /// Every listed sufficient condition holds.
    Proven { reasons: Vec<SingletonReason> },
    Unknown,
}

impl Singleton {
    pub fn is_proven(&self) -> bool {
        matches!(self, Singleton::Proven { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub lam: Cochar,
    pub nat: Cochar,
    pub dag: Cochar,
    /// `R(lambda)`, present only for minuscule `mu`.
    pub r_set: Option<Vec<Root>>,
    pub d_set: Vec<Root>,
    /// `|R(lambda)|` for minuscule `mu`.
    pub dim: Option<usize>,
    pub singleton: Singleton,
}

/// Options for [`enumerate_strata_with`].
#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    pub exec: Execution,
    pub max_candidates: u64,
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self { exec: Execution::default(), max_candidates: DEFAULT_MAX_CANDIDATES }
    }
}

fn check_mu(shape: &GroupShape, mu: &Cochar) -> Result<()> {
    mu.check_shape(shape, "mu")?;
    if !is_dominant(mu) {
        return Err(Error::NonDominant(format!("mu = {mu}")));
    }
    Ok(())
}

/// `lambda^dagger = tau + w(sigma(lambda))`.
pub fn dagger(datum: &FrobeniusDatum, lam: &Cochar) -> Result<Cochar> {
    datum.require_alcove()?;
    datum.tau().add(&datum.frobenius().apply(lam)?)
}

/// `lambda^natural = -lambda + tau + w(sigma(lambda))`.
pub fn natural_lambda(datum: &FrobeniusDatum, lam: &Cochar) -> Result<Cochar> {
    dagger(datum, lam)?.sub(lam)
}

/// Whether the stratum indexed by `lam` is nonempty.
pub fn stratum_nonempty(datum: &FrobeniusDatum, mu: &Cochar, lam: &Cochar) -> Result<bool> {
    check_mu(datum.shape(), mu)?;
    Ok(sorted_leq(&natural_lambda(datum, lam)?, mu))
}

fn require_member(datum: &FrobeniusDatum, mu: &Cochar, lam: &Cochar) -> Result<Cochar> {
    check_mu(datum.shape(), mu)?;
    let nat = natural_lambda(datum, lam)?;
    if !sorted_leq(&nat, mu) {
        return Err(Error::NotInStrata(lam.to_string()));
    }
    Ok(nat)
}

fn r_set_of(lam: &Cochar, nat: &Cochar) -> Vec<Root> {
    Root::all(lam.n(), lam.num_blocks())
        .into_iter()
        .filter(|a| lambda_alpha(lam, a) >= 1 && a.pairing(nat) == -1)
        .collect()
}

fn d_set_of(lam: &Cochar, nat: &Cochar) -> Vec<Root> {
    Root::all(lam.n(), lam.num_blocks())
        .into_iter()
        .filter(|a| lambda_alpha(lam, a) >= 0 && a.pairing(nat) <= -1)
        .collect()
}

/// `R(lambda) = {alpha : lambda_alpha >= 1, <alpha, lambda^natural> = -1}` for minuscule `mu`.
pub fn r_set(datum: &FrobeniusDatum, mu: &Cochar, lam: &Cochar) -> Result<Vec<Root>> {
    let nat = require_member(datum, mu, lam)?;
    if !mu.is_minuscule() {
        return Err(Error::NotMinuscule);
    }
    Ok(r_set_of(lam, &nat))
}

/// `D(lambda) = {alpha : lambda_alpha >= 0, <alpha, lambda^natural> <= -1}`.
pub fn d_set(datum: &FrobeniusDatum, mu: &Cochar, lam: &Cochar) -> Result<Vec<Root>> {
    let nat = require_member(datum, mu, lam)?;
    Ok(d_set_of(lam, &nat))
}

fn verdict(mu: &Cochar, lam: &Cochar, nat: &Cochar, r: Option<&[Root]>, d: &[Root]) -> Singleton {
    let mut reasons = Vec::new();
    if lam.is_central() {
        reasons.push(SingletonReason::Central);
    }
    if is_dominant(lam) && lam.is_minuscule() {
        reasons.push(SingletonReason::DominantMinuscule);
    }
    let conjugate = crate::group::dominant_part(nat) == *mu;
    if conjugate && d.iter().all(|a| lambda_alpha(lam, a) == 0) {
        reasons.push(SingletonReason::DClaim);
    }
    if r.is_some_and(|r| r.is_empty()) {
        reasons.push(SingletonReason::EmptyR);
    }
    if reasons.is_empty() {
        Singleton::Unknown
    } else {
        Singleton::Proven { reasons }
    }
}

/// Sufficient conditions for the stratum of `lam` to be the single point `u^lambda`.
pub fn singleton_sufficient(datum: &FrobeniusDatum, mu: &Cochar, lam: &Cochar) -> Result<Singleton> {
    Ok(stratum(datum, mu, lam)?.singleton)
}

/// Full record for one `lambda` in `S`.
pub fn stratum(datum: &FrobeniusDatum, mu: &Cochar, lam: &Cochar) -> Result<Stratum> {
    let nat = require_member(datum, mu, lam)?;
    Ok(build_stratum(datum, mu, lam.clone(), nat))
}

fn build_stratum(datum: &FrobeniusDatum, mu: &Cochar, lam: Cochar, nat: Cochar) -> Stratum {
    let dag = nat.add(&lam).expect("same shape");
    debug_assert_eq!(dag, datum.tau().add(&datum.frobenius().apply(&lam).unwrap()).unwrap());
    let r_set = mu.is_minuscule().then(|| r_set_of(&lam, &nat));
    let d_set = d_set_of(&lam, &nat);
    let singleton = verdict(mu, &lam, &nat, r_set.as_deref(), &d_set);
    Stratum { dim: r_set.as_ref().map(Vec::len), r_set, d_set, singleton, lam, nat, dag }
}

/// Non-increasing integer sequences with entries in `[lo, hi]`, length
/// `len` and the given sum, in decreasing lexicographic order.
fn dominant_sequences(len: usize, lo: i64, hi: i64, sum: i64) -> Vec<Vec<i64>> {
    fn go(len: usize, lo: i64, hi: i64, sum: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if len == 0 {
            if sum == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let len_i = len as i64;
        // The remaining entries lie in [lo, x], so x must satisfy
        // x + (len - 1) lo <= sum <= len x.
        let top = hi.min(sum - (len_i - 1) * lo);
        let mut x = top;
        while x >= lo && x * len_i >= sum {
            prefix.push(x);
            go(len - 1, lo, x, sum - x, prefix, out);
            prefix.pop();
            x -= 1;
        }
    }
    let mut out = Vec::new();
    go(len, lo, hi, sum, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Distinct permutations of a multiset, lexicographically increasing.
fn multiset_permutations(items: &[i64]) -> Vec<Vec<i64>> {
    let mut cur = items.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

/// All values `nu` of `lambda^natural` per block that are compatible with `mu`.
pub fn candidate_blocks(mu: &Cochar) -> Vec<Vec<Vec<i64>>> {
    mu.blocks()
        .iter()
        .map(|m| {
            let (lo, hi) = (*m.last().unwrap(), m[0]);
            dominant_sequences(m.len(), lo, hi, m.iter().sum())
                .into_iter()
                .filter(|nu| block_leq(nu, m))
                .flat_map(|nu| multiset_permutations(&nu))
                .collect()
        })
        .collect()
}

/// `S` sorted by `lambda`.
pub fn enumerate_strata(datum: &FrobeniusDatum, mu: &Cochar) -> Result<Vec<Stratum>> {
    enumerate_strata_with(datum, mu, EnumOptions::default())
}

pub fn enumerate_strata_with(datum: &FrobeniusDatum, mu: &Cochar, opts: EnumOptions) -> Result<Vec<Stratum>> {
    check_mu(datum.shape(), mu)?;
    datum.require_alcove()?;
    let blocks = candidate_blocks(mu);
    let radices: Vec<u64> = blocks.iter().map(|b| b.len() as u64).collect();
    let total = radices.iter().try_fold(1u64, |acc, &r| acc.checked_mul(r));
    let total = match total {
        Some(t) if t <= opts.max_candidates => t,
        _ => {
            let exact = radices.iter().map(|&r| num_bigint::BigUint::from(r)).product::<num_bigint::BigUint>();
            return Err(Error::EnumerationTooLarge { count: exact.to_string(), limit: opts.max_candidates });
        }
    };
    let solver = datum.frobenius();
    let tau = datum.tau();
    let mut found = try_filter_map_range(opts.exec, total, |mut idx| {
        let mut nu = Vec::with_capacity(blocks.len());
        for b in &blocks {
            let r = b.len() as u64;
            nu.push(b[(idx % r) as usize].clone());
            idx /= r;
        }
        let nu = Cochar::from_blocks(nu)?;
        let rhs = tau.sub(&nu)?;
        Ok::<_, Error>(solver.solve_integral(&rhs)?.map(|lam| build_stratum(datum, mu, lam, nu)))
    })?;
    found.sort_by(|a, b| a.lam.cmp(&b.lam));
    Ok(found)
}

/// Per-block coordinate sums.
pub fn sum_profile(lam: &Cochar) -> Vec<i64> {
    lam.sum_profile()
}

/// `C_mu(b) = C_{mu + chi}(u^chi b)` for central `chi`: returns the shifted
/// datum and `mu + chi`. Strata correspond via the identity on `lambda`.
pub fn central_twist(datum: &FrobeniusDatum, mu: &Cochar, chi: &Cochar) -> Result<(FrobeniusDatum, Cochar)> {
    check_mu(datum.shape(), mu)?;
    chi.check_shape(datum.shape(), "chi")?;
    if !chi.is_central() {
        return Err(Error::NotCentral(chi.to_string()));
    }
    let tau = datum.tau().add(chi)?;
    let twisted = FrobeniusDatum::new(datum.shape().clone(), tau, datum.w().clone())?;
    Ok((twisted, mu.add(chi)?))
}

/// The central `chi` bringing `mu` with `mu_{k,2} = .. = mu_{k,n}` to
/// `(m_k omega_1)` form, together with the twisted datum and `mu`.
pub fn theorem_a_twist(datum: &FrobeniusDatum, mu: &Cochar) -> Result<(Cochar, FrobeniusDatum, Cochar)> {
    check_mu(datum.shape(), mu)?;
    let blocks = mu
        .blocks()
        .iter()
        .map(|b| {
            let rest = b.get(1).copied().unwrap_or(b[0]);
            if b[1..].iter().any(|&x| x != rest) {
                return Err(Error::NotOmegaShape(mu.to_string()));
            }
            Ok(vec![-rest; b.len()])
        })
        .collect::<Result<Vec<_>>>()?;
    let chi = Cochar::from_blocks(blocks)?;
    let (twisted, mu2) = central_twist(datum, mu, &chi)?;
    Ok((chi, twisted, mu2))
}
