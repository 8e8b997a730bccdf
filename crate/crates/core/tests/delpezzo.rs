use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use schubert_cones::delpezzo::{self, interval, Pic10Class, RadicalNumber};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Radicands drawn from perfect squares half the time so that exact zeros occur.
fn radicand(rng: &mut StdRng) -> BigRational {
    if rng.gen_bool(0.5) {
        let (n, d) = (rng.gen_range(0..8i64), rng.gen_range(1..8i64));
        rat(n * n, d * d)
    } else {
        rat(rng.gen_range(0..50), rng.gen_range(1..50))
    }
}

fn coeff(rng: &mut StdRng) -> BigRational {
    rat(rng.gen_range(-20..21), rng.gen_range(1..10))
}

#[test]
fn interval_enclosure_agrees_with_exact_sign() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut zeros = 0;
    for _ in 0..10_000 {
        let (q, qp) = (radicand(&mut rng), radicand(&mut rng));
        let (b, c) = (coeff(&mut rng), coeff(&mut rng));
        // choose `a` to cancel the radical part when both radicands are squares
        let a = match (delpezzo::rational_sqrt(&q), delpezzo::rational_sqrt(&qp)) {
            (Some(s), Some(t)) if rng.gen_bool(0.3) => -(&b * s + &c * t),
            _ => coeff(&mut rng),
        };
        let x = RadicalNumber::new(a, b, c, q, qp).unwrap();
        zeros += usize::from(x.signum() == Ordering::Equal);
        assert!(interval::agrees(&x, 256), "{x}");
    }
    assert!(zeros > 0);
}

#[test]
fn canonical_class() {
    for n in 1..=8 {
        let k = Pic10Class::canonical(n).unwrap();
        assert_eq!(k.self_intersection(), rat(-1, 1));
        assert_eq!(k.dot(&Pic10Class::h(n).unwrap()), rat(-3, 1));
        for i in 1..=n {
            let e = Pic10Class::e(n, i).unwrap();
            assert_eq!(e.self_intersection(), rat(-1, 1));
            assert_eq!(k.dot(&e), rat(-1, 1));
        }
    }
}

#[test]
fn out_of_range_q_is_rejected() {
    for n in 1..=8 {
        let (lo, hi) = delpezzo::q_interval(n).unwrap();
        assert!(delpezzo::build_d_delta(n, &lo).is_err());
        assert!(delpezzo::build_d_delta(n, &hi).is_err());
        assert!(delpezzo::verify_nef_conditions(n, &rat(1, 8)).is_err());
        assert!(!delpezzo::verify_nef_conditions(n, &hi).unwrap().passed());
    }
    assert!(delpezzo::q_interval(9).is_err());
    assert!(delpezzo::fano_case("nonsense").is_err());
}

#[test]
fn symbolic_square_vanishes() {
    for n in 1..=8 {
        let (c, s) = delpezzo::symbolic_self_intersection(n).unwrap();
        assert!(c.is_zero() && s.is_zero(), "N = {n}: {c} + {s} q");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Any interior `q` gives a nef class with `D^2 = 0` for every table row.
    #[test]
    fn interior_q_passes(case in 0usize..8, t in 1i64..1000) {
        let case = delpezzo::fano_case(delpezzo::FANO_CASE_NAMES[case]).unwrap();
        let (lo, hi) = delpezzo::q_interval(case.n).unwrap();
        let q = &lo + (&hi - &lo) * rat(t, 1000);
        let d = delpezzo::build_d_delta(case.n, &q).unwrap();
        prop_assert!(d.self_intersection().unwrap().is_zero());
        let report = delpezzo::verify_case(&case, &q).unwrap();
        prop_assert!(report.passed(), "{:?}", report.failures());
        prop_assert_eq!(report.assumptions, vec!["SHGH".to_string()]);
    }

    #[test]
    fn square_is_consistent(a in -9i64..10, b in -9i64..10, q in 0i64..30) {
        let (a, b, q) = (rat(a, 3), rat(b, 2), rat(q, 7));
        let x = RadicalNumber::new(a.clone(), b.clone(), BigRational::zero(), q.clone(), BigRational::one()).unwrap();
        let sq = x.checked_square().unwrap();
        let want = RadicalNumber::new(&a * &a + &b * &b * &q, rat(2, 1) * &a * &b, BigRational::zero(), q, BigRational::one()).unwrap();
        prop_assert!(sq.exact_eq(&want).unwrap());
        prop_assert!(!sq.signum().is_lt());
        prop_assert_eq!(x.is_positive(), x.signum() == Ordering::Greater);
    }
}
