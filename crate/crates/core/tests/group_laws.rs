mod common;

use kisin_core::group::{
    act_sigma, act_weyl, dominance_leq, dominant, dominant_part, ext_sigma_conj, is_dominant, rat, Cochar, ExtAffine,
    GroupShape, Perm, RatCochar, WeylElt,
};
use kisin_core::normal_form::{alcove_reduce, fixed_point, in_alcove};
use kisin_core::FrobeniusDatum;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Perm {
    let mut map: Vec<usize> = (0..n).collect();
    map.shuffle(rng);
    Perm::new(map).unwrap()
}

fn random_weyl(rng: &mut ChaCha8Rng, n: usize, blocks: usize) -> WeylElt {
    WeylElt::new((0..blocks).map(|_| random_perm(rng, n)).collect()).unwrap()
}

fn random_cochar(rng: &mut ChaCha8Rng, n: usize, blocks: usize, r: i64) -> Cochar {
    Cochar::from_blocks((0..blocks).map(|_| (0..n).map(|_| rng.gen_range(-r..=r)).collect()).collect()).unwrap()
}

fn random_rat(rng: &mut ChaCha8Rng, n: usize, blocks: usize) -> RatCochar {
    RatCochar::from_blocks(
        (0..blocks).map(|_| (0..n).map(|_| rat(rng.gen_range(-20..=20), rng.gen_range(1..=7))).collect()).collect(),
    )
    .unwrap()
}

fn random_ext(rng: &mut ChaCha8Rng, n: usize, blocks: usize) -> ExtAffine {
    ExtAffine::new(random_cochar(rng, n, blocks, 4), random_weyl(rng, n, blocks)).unwrap()
}

/// A shape with mixed scales, including some equal to 1.
fn random_shape(rng: &mut ChaCha8Rng, n: usize, blocks: usize) -> GroupShape {
    let p = *[2i64, 3, 5].choose(rng).unwrap();
    loop {
        let eps: Vec<i64> = (0..blocks).map(|_| if rng.gen_bool(0.6) { p } else { 1 }).collect();
        if eps.iter().any(|&e| e != 1) {
            return GroupShape::new(n, p, eps).unwrap();
        }
    }
}

fn dims() -> impl Strategy<Value = (usize, usize, u64)> {
    (1usize..=4, 1usize..=3, any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn weyl_action_is_a_group_action((n, blocks, seed) in dims()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (random_weyl(&mut rng, n, blocks), random_weyl(&mut rng, n, blocks));
        let v = random_cochar(&mut rng, n, blocks, 9);
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(act_weyl(&ab, &v).unwrap(), act_weyl(&a, &act_weyl(&b, &v).unwrap()).unwrap());
        prop_assert_eq!(act_weyl(&a.inverse(), &act_weyl(&a, &v).unwrap()).unwrap(), v);
    }

    #[test]
    fn sigma_intertwines_weyl((n, blocks, seed) in dims()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shape = random_shape(&mut rng, n, blocks);
        let w = random_weyl(&mut rng, n, blocks);
        let v = random_cochar(&mut rng, n, blocks, 9);
        // sigma(w v) = sigma_0(w) sigma(v).
        let lhs = act_sigma(&shape, &act_weyl(&w, &v).unwrap()).unwrap();
        let rhs = act_weyl(&w.sigma0(), &act_sigma(&shape, &v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn extended_affine_group_laws((n, blocks, seed) in dims()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (random_ext(&mut rng, n, blocks), random_ext(&mut rng, n, blocks), random_ext(&mut rng, n, blocks));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert!(a.mul(&a.inverse()).unwrap().is_identity());
        prop_assert!(a.inverse().mul(&a).unwrap().is_identity());
        let v = random_rat(&mut rng, n, blocks);
        prop_assert_eq!(a.mul(&b).unwrap().apply(&v).unwrap(), a.apply(&b.apply(&v).unwrap()).unwrap());
    }

    #[test]
    fn sigma_conjugation_transports_fixed_points((n, blocks, seed) in dims()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shape = random_shape(&mut rng, n, blocks);
        let wt = random_ext(&mut rng, n, blocks);
        let z = random_ext(&mut rng, n, blocks);
        let e = fixed_point(&shape, &wt).unwrap();
        let conj = ext_sigma_conj(&shape, &z, &wt).unwrap();
        prop_assert_eq!(fixed_point(&shape, &conj).unwrap(), z.inverse().apply(&e).unwrap());
    }

    #[test]
    fn cycle_solver_matches_dense_elimination((n, blocks, seed) in dims()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shape = random_shape(&mut rng, n, blocks);
        let datum = FrobeniusDatum::new(shape, random_cochar(&mut rng, n, blocks, 6), random_weyl(&mut rng, n, blocks)).unwrap();
        let rhs = random_rat(&mut rng, n, blocks);
        let x = datum.frobenius().solve(&rhs).unwrap();
        prop_assert_eq!(&x, &common::dense_solve(&datum, &rhs));
        prop_assert_eq!(&x, &rhs.add(&datum.frobenius().apply(&x).unwrap()).unwrap());
        prop_assert_eq!(datum.e(), &common::dense_solve(&datum, &datum.tau().to_rational()));
        let int_rhs = random_cochar(&mut rng, n, blocks, 6);
        let exact = common::dense_solve(&datum, &int_rhs.to_rational());
        prop_assert_eq!(datum.frobenius().solve_integral(&int_rhs).unwrap(), exact.to_integral());
    }

    #[test]
    fn dominant_part_is_sorted_conjugate((n, blocks, seed) in dims()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_cochar(&mut rng, n, blocks, 9);
        let (d, w) = dominant(&v);
        prop_assert!(is_dominant(&d));
        prop_assert_eq!(&act_weyl(&w, &v).unwrap(), &d);
        prop_assert_eq!(dominant_part(&d), d);
    }

    #[test]
    fn dominance_is_a_partial_order((n, blocks, seed) in dims()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = || dominant_part(&random_cochar(&mut rng, n, blocks, 3));
        let (a, b, c) = (draw(), draw(), draw());
        prop_assert!(dominance_leq(&a, &a).unwrap());
        if dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &c).unwrap() {
            prop_assert!(dominance_leq(&a, &c).unwrap());
        }
        prop_assert_eq!(dominance_leq(&a, &b).unwrap(), common::coroot_search_leq(&a, &b));
    }
}

/// Every simple Caruso datum in a small range has a fixed point in general
/// position, and its alcove reduction is idempotent.
#[test]
fn caruso_data_reduce_into_the_alcove() {
    let mut checked = 0;
    for (n, f, p) in [(2, 1, 2i64), (2, 1, 3), (3, 1, 2), (3, 1, 3), (2, 2, 2), (3, 2, 2), (4, 1, 2), (2, 2, 3)] {
        let q = p.pow(f as u32);
        let bound = q.pow(n as u32);
        for m in -bound..bound {
            let Ok(raw) = FrobeniusDatum::caruso_raw(n, f, p, m) else { continue };
            assert!(raw.in_general_position());
            let (z, reduced) = alcove_reduce(&raw).unwrap();
            assert!(in_alcove(reduced.e()));
            assert_eq!(reduced.e(), &z.inverse().apply(raw.e()).unwrap());
            let (z2, again) = alcove_reduce(&reduced).unwrap();
            assert!(z2.is_identity(), "reduction of an alcove datum moved it: n={n} f={f} p={p} m={m}");
            assert_eq!(again, reduced);
            checked += 1;
        }
    }
    assert!(checked > 100);
}

/// Simplicity of `(n, q, m)` is decided by divisibility; the non-simple `m`
/// are exactly those for which some proper divisor gives an integer.
#[test]
fn non_simple_caruso_parameters_are_rejected() {
    for (n, q) in [(2i64, 2i64), (2, 3), (3, 2), (4, 2), (4, 3), (6, 2)] {
        let full = q.pow(n as u32) - 1;
        for m in -full..=full {
            let simple = (1..n).filter(|d| n % d == 0).all(|d| (m * (q.pow(d as u32) - 1)) % full != 0);
            assert_eq!(FrobeniusDatum::caruso_raw(n as usize, 1, q, m).is_ok(), simple, "n={n} q={q} m={m}");
        }
    }
}
