use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use riley_lo::chebyshev::{
    cheb_eval, cheb_poly, cheb_root_enclosures, sl2_power, solve_recurrence,
};
use riley_lo::interval::{Dyadic, DyadicInterval, Sign};
use riley_lo::polyring::Mat2;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn values_at_plus_minus_two() {
    for n in 0..=300u32 {
        assert_eq!(cheb_eval(n, &BigInt::from(2)), BigInt::from(n + 1));
        let expect = if n % 2 == 0 {
            n as i64 + 1
        } else {
            -(n as i64 + 1)
        };
        assert_eq!(cheb_eval(n, &BigInt::from(-2)), BigInt::from(expect));
    }
}

#[test]
fn trig_oracle_inside_the_interval() {
    // S_n(2 cos t) = sin((n+1) t) / sin t
    for n in 0..16u32 {
        for t in [0.3f64, 0.7, 1.1, 2.0, 2.9] {
            let s = cheb_poly(n).coeffs().iter().rev().fold(0.0, |acc, c| {
                acc * 2.0 * t.cos() + c.to_string().parse::<f64>().unwrap()
            });
            let expect = ((n as f64 + 1.0) * t).sin() / t.sin();
            assert!(
                (s - expect).abs() < 1e-6 * (1.0 + expect.abs()),
                "n={n} t={t}"
            );
        }
    }
}

#[test]
fn positive_and_increasing_beyond_two() {
    let grid: Vec<BigRational> = (0..=48).map(|j| q(16 + j, 8)).collect();
    for n in 1..=24u32 {
        let vals: Vec<BigRational> = grid.iter().map(|t| cheb_eval(n, t)).collect();
        assert!(vals.iter().all(|v| *v > BigRational::zero()), "n={n}");
        assert!(vals.windows(2).all(|w| w[0] < w[1]), "n={n}");
    }
}

#[test]
fn root_enclosures_bracket_sign_changes() {
    for n in 1..=32u32 {
        let roots = cheb_root_enclosures(n, 80);
        assert_eq!(roots.len(), n as usize);
        let p = cheb_poly(n);
        let sign_at = |v: &Dyadic| {
            let r = p.eval(&v.to_rational());
            if r > BigRational::zero() {
                Sign::Positive
            } else {
                Sign::Negative
            }
        };
        for (k, r) in roots.iter().enumerate() {
            assert_ne!(sign_at(r.lo()), sign_at(r.hi()), "n={n} k={k}");
            assert!(r.width() <= Dyadic::pow2(-80));
            let expect =
                2.0 * (std::f64::consts::PI * (n as f64 - k as f64) / (n as f64 + 1.0)).cos();
            assert!((r.lo().to_f64() - expect).abs() < 1e-12, "n={n} k={k}");
        }
        assert!(roots.windows(2).all(|w| w[0].hi() < w[1].lo()));
    }
}

#[test]
fn sign_between_the_two_smallest_roots() {
    for n in 2..=32u32 {
        let roots = cheb_root_enclosures(n, 64);
        let (lo, hi) = (roots[0].hi().to_rational(), roots[1].lo().to_rational());
        for j in 1..8 {
            let t = &lo + (&hi - &lo) * q(j, 8);
            let v = cheb_eval(n, &t);
            let signed = if n % 2 == 0 { v } else { -v };
            assert!(signed < BigRational::zero(), "n={n} j={j}");
        }
    }
}

#[test]
fn recurrence_matches_direct_iteration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let a0 = q(rng.gen_range(-50..50), rng.gen_range(1..9));
        let a1 = q(rng.gen_range(-50..50), rng.gen_range(1..9));
        let c = q(rng.gen_range(-50..50), rng.gen_range(1..9));
        let n = rng.gen_range(0..30u32);
        let (mut prev, mut cur) = (a0.clone(), a1.clone());
        for _ in 0..n {
            let next = &c * &cur - &prev;
            prev = cur;
            cur = next;
        }
        assert_eq!(solve_recurrence(&a0, &a1, &c, n), cur);
    }
}

#[test]
fn matrix_powers_by_trace() {
    let m = Mat2::new(q(2, 1), q(3, 1), q(1, 1), q(2, 1));
    let mut acc = Mat2::identity_like(&BigRational::one());
    for n in 0..12 {
        assert_eq!(sl2_power(&m, n).unwrap(), acc);
        acc = acc.mul(&m);
    }
    let inv = sl2_power(&m, -1).unwrap();
    assert_eq!(inv.mul(&m), Mat2::identity_like(&BigRational::one()));
    assert_eq!(sl2_power(&m, -3).unwrap(), inv.mul(&inv).mul(&inv));
    let bad = Mat2::new(q(2, 1), q(0, 1), q(0, 1), q(2, 1));
    assert!(sl2_power(&bad, 2).is_err());
}

#[test]
fn interval_evaluation_agrees_with_exact() {
    let p = cheb_poly(9);
    let t = q(17, 7);
    let exact = p.eval(&t);
    let enc = p.eval(&DyadicInterval::from_rational(&t, 96));
    assert!(enc.contains_rational(&exact));
    assert!(enc.width() < Dyadic::pow2(-60));
}
