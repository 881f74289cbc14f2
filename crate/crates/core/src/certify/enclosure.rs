//! Certified enclosures of `2cos(j pi / d)`.
//!
//! pi comes from Machin's formula evaluated on fixed-point integers with
//! explicit truncation bounds; the cosine from its Taylor series with the
//! next term as remainder bound. A handful of angles have exact or
//! quadratic closed forms and skip the series entirely.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::interval::{Dyadic, DyadicInterval};

/// Integer enclosure `[lo, hi]` of `atan(1/q) * 2^wp`.
fn atan_inv_fixed(q: u64, wp: u32) -> (BigInt, BigInt) {
    let scale = BigInt::one() << wp;
    let q = BigInt::from(q);
    let q2 = &q * &q;
    let mut power = q.clone();
    let (mut lo, mut hi) = (BigInt::zero(), BigInt::zero());
    let mut j: u64 = 0;
    loop {
        let down = &scale / (&power * BigInt::from(2 * j + 1));
        if down.is_zero() {
            // alternating tail bounded by its first term, itself < 1 unit
            lo -= 1;
            hi += 1;
            return (lo, hi);
        }
        let up = &down + 1;
        if j.is_multiple_of(2) {
            lo += &down;
            hi += &up;
        } else {
            lo -= &up;
            hi -= &down;
        }
        power *= &q2;
        j += 1;
    }
}

/// Integer enclosure of `pi * 2^wp`.
fn pi_fixed(wp: u32) -> (BigInt, BigInt) {
    let (a_lo, a_hi) = atan_inv_fixed(5, wp);
    let (b_lo, b_hi) = atan_inv_fixed(239, wp);
    (16 * a_lo - 4 * b_hi, 16 * a_hi - 4 * b_lo)
}

fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_ceil(b)
}

/// Integer enclosure of `cos(t 2^-wp) * 2^wp` for `0 <= t 2^-wp < 4`.
fn cos_fixed(t: &BigInt, wp: u32) -> (BigInt, BigInt) {
    let scale = BigInt::one() << wp;
    let sq = t * t;
    let sq_lo = &sq >> wp;
    let sq_hi = div_ceil(&sq, &scale);
    let (mut lo, mut hi) = (scale.clone(), scale.clone());
    let (mut term_lo, mut term_hi) = (scale.clone(), scale.clone());
    let mut i: u64 = 1;
    loop {
        let den = &scale * BigInt::from((2 * i - 1) * (2 * i));
        term_lo = (&term_lo * &sq_lo) / &den;
        term_hi = div_ceil(&(&term_hi * &sq_hi), &den);
        if term_hi <= BigInt::one() {
            // Lagrange: remainder after i terms is at most the i-th term
            lo -= &term_hi;
            hi += &term_hi;
            return (lo, hi);
        }
        if i % 2 == 1 {
            lo -= &term_hi;
            hi -= &term_lo;
        } else {
            lo += &term_lo;
            hi += &term_hi;
        }
        i += 1;
    }
}

fn fixed_to_interval(lo: BigInt, hi: BigInt, wp: u32, prec: u32) -> DyadicInterval {
    let shift = -i64::from(wp);
    DyadicInterval::new(
        Dyadic::new(lo, shift).round_down(prec + 8),
        Dyadic::new(hi, shift).round_up(prec + 8),
        prec,
    )
}

/// `[s, s + 2^-k]` around `sqrt(r)`, checked by a strict sign change of `t^2 - r`.
fn sqrt_enclosure(r: u64, prec: u32) -> DyadicInterval {
    let k = prec + 2;
    let root = (BigInt::from(r) << (2 * k)).sqrt();
    let lo = Dyadic::new(root.clone(), -i64::from(k));
    let hi = Dyadic::new(root + 1, -i64::from(k));
    let target = Dyadic::from_int(r as i64);
    assert!((&lo * &lo) < target && (&hi * &hi) > target);
    DyadicInterval::new(lo, hi, prec)
}

/// Enclosure of `2cos(j pi / d)` of width at most `2^-prec`.
///
/// Angles reducing to `0, pi/6, pi/4, pi/3, pi/2` and their supplements are
/// handled exactly or through `sqrt(2)`, `sqrt(3)`.
pub fn two_cos_pi_frac(j: u64, d: u64, prec: u32) -> DyadicInterval {
    assert!(d >= 1, "denominator must be positive");
    let period = 2 * d;
    let mut j = j % period;
    if j > d {
        j = period - j;
    }
    let g = j.gcd(&d).max(1);
    let (j, d) = (j / g, d / g);
    // now 0 <= j/d <= 1
    let (j, d, negate) = if 2 * j > d {
        (d - j, d, true)
    } else {
        (j, d, false)
    };
    let exact = match (j, d) {
        (0, _) => Some(DyadicInterval::from_int(2, prec)),
        (1, 2) => Some(DyadicInterval::from_int(0, prec)),
        (1, 3) => Some(DyadicInterval::from_int(1, prec)),
        (1, 4) => Some(sqrt_enclosure(2, prec)),
        (1, 6) => Some(sqrt_enclosure(3, prec)),
        _ => None,
    };
    let enc = exact.unwrap_or_else(|| series_enclosure(j, d, prec));
    if negate {
        -&enc
    } else {
        enc
    }
}

fn series_enclosure(j: u64, d: u64, prec: u32) -> DyadicInterval {
    let limit = Dyadic::pow2(-i64::from(prec));
    let mut wp = prec + 32;
    loop {
        let (pi_lo, pi_hi) = pi_fixed(wp);
        let jd = BigInt::from(j);
        let dd = BigInt::from(d);
        let theta_lo = (&pi_lo * &jd).div_floor(&dd);
        let theta_hi = div_ceil(&(&pi_hi * &jd), &dd);
        // cos is decreasing on [0, pi]
        let (c_lo, _) = cos_fixed(&theta_hi.max(BigInt::zero()), wp);
        let (_, c_hi) = cos_fixed(&theta_lo.max(BigInt::zero()), wp);
        let enc = fixed_to_interval(2 * c_lo, 2 * c_hi, wp, prec);
        if enc.width() <= limit {
            return enc;
        }
        wp += 32;
    }
}

/// Enclosure of `x_n = 2cos(pi / n)` of width at most `2^-prec`.
pub fn xn_enclosure(n: u32, prec: u32) -> DyadicInterval {
    assert!(n >= 2, "n must be at least 2");
    two_cos_pi_frac(1, u64::from(n), prec)
}

/// Whether `2cos(j pi / d) <= 2cos(j' pi / d')` for angles in `[0, pi]`,
/// decided exactly on the angles.
pub fn two_cos_le(j: u64, d: u64, j2: u64, d2: u64) -> bool {
    // cos decreasing: compare j/d >= j2/d2
    u128::from(j) * u128::from(d2) >= u128::from(j2) * u128::from(d)
}
