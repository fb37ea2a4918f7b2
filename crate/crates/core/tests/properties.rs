//! Randomized invariants over seeds.

mod common;

use common::{h, random_form};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ramlimit::cycles::{cycle_degree, random_aux_linear, realize_chow, CycleExpr};
use ramlimit::foliation::{wronskian, Derivation};
use ramlimit::oracle::{oracle_limit, verify, Verdict, VerifyOptions};
use ramlimit::polyring::{gcd, rat, CoordChange, HPoly};
use ramlimit::powerseries::{HSeries, VFamily};
use ramlimit::ramification::pencil_through_point;
use ramlimit::Error;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn series(rng: &mut ChaCha8Rng, degree: u32, order: usize) -> HSeries {
    let coeffs = (0..order)
        .map(|_| if rng.gen_bool(0.8) { random_form(rng, degree) } else { HPoly::zero(degree) })
        .collect();
    HSeries::new(degree, coeffs, order)
}

fn form_between(rng: &mut ChaCha8Rng, lo: u32, hi: u32) -> HPoly {
    let d = rng.gen_range(lo..=hi);
    random_form(rng, d)
}

fn conic_family() -> HSeries {
    HSeries::from_family(&[h("X0*X1"), h("X2^2")], 16).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn wronskian_scales_with_a_constant(seed in any::<u64>(), c in -5i64..=5) {
        prop_assume!(c != 0);
        let mut r = rng(seed);
        let deg = r.gen_range(0..=2);
        let d = Derivation::raw([0, 1, 2].map(|_| random_form(&mut r, deg))).unwrap();
        let n = r.gen_range(1..=3usize);
        let basis: Vec<HPoly> = (0..n).map(|_| random_form(&mut r, 2)).collect();
        let w = wronskian(&d, &basis);
        let k = (n * (n - 1) / 2) as u32;
        prop_assert_eq!(wronskian(&d.scale(&rat(c)), &basis), w.scale(&rat(c).pow(k as i32)));
    }

    #[test]
    fn series_ring_laws(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b, c) = (series(&mut r, 1, 5), series(&mut r, 2, 5), series(&mut r, 2, 5));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn series_division_inverts_multiplication(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = series(&mut r, 1, 4);
        let b = HSeries::new(0, (0..4).map(|i| HPoly::constant(rat(if i == 0 { 1 + r.gen_range(0..3) } else { r.gen_range(-3..=3) }))).collect(), 4);
        prop_assert_eq!(a.mul(&b).divide(&b).unwrap(), a);
    }

    #[test]
    fn canonical_form_is_idempotent_and_keeps_degree(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut c = CycleExpr::zero();
        for _ in 0..r.gen_range(1..=4) {
            let p = form_between(&mut r, 1, 2);
            let q = form_between(&mut r, 1, 2);
            if gcd(&p, &q).degree() > 0 {
                continue;
            }
            let m = rat(r.gen_range(-3..=3));
            c = c.add(&CycleExpr::intersection(&p, &q, m.clone()).unwrap());
            // the same term again, scaled, merges
            c = c.add(&CycleExpr::intersection(&p.scale(&rat(2)), &q, m).unwrap());
        }
        let k = c.canonical();
        prop_assert_eq!(k.canonical(), k.clone());
        prop_assert_eq!(cycle_degree(&k), cycle_degree(&c));
        prop_assert!(k.sub(&k).canonical().is_empty());
    }

    #[test]
    fn bezout_degree_of_intersections(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = form_between(&mut r, 1, 3);
        let q = form_between(&mut r, 1, 3);
        prop_assume!(gcd(&p, &q).degree() == 0);
        let c = CycleExpr::intersection(&p, &q, rat(1)).unwrap();
        prop_assert_eq!(cycle_degree(&c), rat((p.degree() * q.degree()) as i64));
        let m = CoordChange::random(r.gen(), 6);
        match realize_chow(&c, &m, &HPoly::var(0)) {
            Ok(f) => prop_assert_eq!(f.form.degree(), p.degree() * q.degree()),
            Err(Error::DegenerateProjection(_)) => {}
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn oracle_does_not_depend_on_the_auxiliary_line(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = conic_family();
        let pt = [0, 1, 2].map(|_| rat(r.gen_range(-5..=5)));
        prop_assume!(pt.iter().any(|x| *x != rat(0)));
        let Ok(sys) = pencil_through_point(&pt, &[h("X0"), h("X1")], seed) else {
            return Ok(());
        };
        let v = VFamily::constant(sys.basis(), 16).unwrap();
        let m = CoordChange::random(r.gen(), 6);
        let h1 = random_aux_linear(&[f.at_zero().clone()], &mut r);
        let h2 = random_aux_linear(&[f.at_zero().clone()], &mut r);
        match (oracle_limit(&f, &v, &h1, &m, 8), oracle_limit(&f, &v, &h2, &m, 8)) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a.chow, b.chow),
            (Err(Error::DegenerateProjection(_)), _) | (_, Err(Error::DegenerateProjection(_))) => {}
            (a, b) => prop_assert!(false, "{:?} / {:?}", a.err(), b.err()),
        }
    }

    #[test]
    fn oracle_agrees_with_the_conic_limit_for_every_projection(seed in any::<u64>()) {
        let f = conic_family();
        let v = VFamily::constant(&[h("X0 - X2"), h("X1 + 2*X2")], 16).unwrap();
        let limit = CycleExpr::intersection(&h("X0"), &h("X1"), rat(2)).unwrap();
        let opts = VerifyOptions { trials: 2, seed, ..VerifyOptions::default() };
        prop_assert_eq!(verify(&limit, &f, &v, &opts).verdict, Verdict::AllMatch);
    }
}
