//! Dyadic rationals and outward-rounded interval arithmetic.
//!
//! A [`Dyadic`] is `mantissa * 2^exponent` with an arbitrary-precision
//! mantissa. Sums and products of dyadics are exact, so the only source of
//! error in [`DyadicInterval`] arithmetic is the explicit rounding of each
//! result to the interval's working precision: lower endpoints are rounded
//! toward negative infinity and upper endpoints toward positive infinity.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign as BigSign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::polyring::ring::impl_ring_via_ops;

/// Exact dyadic rational `mantissa * 2^exponent`, kept with an odd mantissa
/// (or the canonical zero `0 * 2^0`) so that equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        if mantissa.is_zero() {
            return Self::zero();
        }
        let tz = mantissa.trailing_zeros().unwrap_or(0);
        Dyadic {
            mantissa: mantissa >> tz,
            exponent: exponent + tz as i64,
        }
    }

    pub fn zero() -> Self {
        Dyadic {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigInt::from(n), 0)
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::new(n, 0)
    }

    /// `2^k`.
    pub fn pow2(k: i64) -> Self {
        Dyadic {
            mantissa: BigInt::one(),
            exponent: k,
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.mantissa.sign() {
            BigSign::Minus => -1,
            BigSign::NoSign => 0,
            BigSign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    /// Multiplies by `2^k` exactly.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Dyadic {
            mantissa: self.mantissa.clone(),
            exponent: self.exponent + k,
        }
    }

    /// Number of significant bits in the mantissa.
    pub fn bits(&self) -> u64 {
        self.mantissa.bits()
    }

    /// Rounds to at most `prec` significant bits, toward negative infinity.
    pub fn round_down(&self, prec: u32) -> Self {
        self.round(prec, false)
    }

    /// Rounds to at most `prec` significant bits, toward positive infinity.
    pub fn round_up(&self, prec: u32) -> Self {
        self.round(prec, true)
    }

    fn round(&self, prec: u32, up: bool) -> Self {
        let prec = u64::from(prec.max(2));
        let bits = self.mantissa.bits();
        if bits <= prec {
            return self.clone();
        }
        let shift = bits - prec;
        let div = BigInt::one() << shift;
        let m = if up {
            Integer::div_ceil(&self.mantissa, &div)
        } else {
            self.mantissa.div_floor(&div)
        };
        Dyadic::new(m, self.exponent + shift as i64)
    }

    /// `num / den` rounded to at least `prec` significant bits in the given
    /// direction. `den` must be nonzero.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32, up: bool) -> Self {
        assert!(!den.is_zero(), "division by zero");
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num.clone(), den.clone())
        };
        let k = i64::from(prec) + den.bits() as i64 - num.bits() as i64 + 2;
        let (n, d) = if k >= 0 {
            (num << k as u64, den)
        } else {
            (num, den << (-k) as u64)
        };
        let q = if up {
            Integer::div_ceil(&n, &d)
        } else {
            n.div_floor(&d)
        };
        Dyadic::new(q, -k)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exponent >= 0 {
            BigRational::from_integer(&self.mantissa << self.exponent as u64)
        } else {
            BigRational::new(
                self.mantissa.clone(),
                BigInt::one() << (-self.exponent) as u64,
            )
        }
    }

    /// Nearest-ish `f64`, for display only.
    pub fn to_f64(&self) -> f64 {
        let bits = self.mantissa.bits() as i64;
        let shift = (bits - 60).max(0);
        let m = (&self.mantissa >> shift as u64)
            .to_f64()
            .unwrap_or(f64::NAN);
        m * 2f64.powi((self.exponent + shift).clamp(-2000, 2000) as i32)
    }

    /// Exact midpoint of two dyadics.
    pub fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
        (a + b).mul_pow2(-1)
    }

    fn aligned(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt, i64) {
        let e = a.exponent.min(b.exponent);
        (
            &a.mantissa << (a.exponent - e) as u64,
            &b.mantissa << (b.exponent - e) as u64,
            e,
        )
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb || sa == 0 {
            return sa.cmp(&sb);
        }
        let (a, b, _) = Dyadic::aligned(self, other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.mantissa)
        } else {
            write!(f, "{}*2^{}", self.mantissa, self.exponent)
        }
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, e) = Dyadic::aligned(self, rhs);
        Dyadic::new(a + b, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mantissa * &rhs.mantissa, self.exponent + rhs.exponent)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl_ring_via_ops!(Dyadic, |_p, n| Dyadic::from_bigint(n.clone()));

/// Sign of a quantity known to be nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    /// `(-1)^k`.
    pub fn parity(k: i64) -> Sign {
        if k.rem_euclid(2) == 0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        match text.as_str() {
            "+" => Ok(Sign::Positive),
            "-" | "\u{2212}" => Ok(Sign::Negative),
            other => Err(serde::de::Error::custom(format!("bad sign {other:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct DyadicRecord {
    mantissa: String,
    exponent: i64,
}

/// `{"mantissa": "<decimal>", "exponent": <int>}`.
impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DyadicRecord {
            mantissa: self.mantissa.to_string(),
            exponent: self.exponent,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Dyadic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = DyadicRecord::deserialize(d)?;
        let mantissa: BigInt = rec
            .mantissa
            .parse()
            .map_err(|_| serde::de::Error::custom(format!("bad mantissa {:?}", rec.mantissa)))?;
        Ok(Dyadic::new(mantissa, rec.exponent))
    }
}

/// Closed interval `[lo, hi]` with dyadic endpoints and a working precision
/// (significant bits kept after every operation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicInterval {
    lo: Dyadic,
    hi: Dyadic,
    prec: u32,
}

impl DyadicInterval {
    pub fn new(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: {lo} > {hi}");
        DyadicInterval { lo, hi, prec }
    }

    pub fn point(value: Dyadic, prec: u32) -> Self {
        DyadicInterval {
            lo: value.clone(),
            hi: value,
            prec,
        }
    }

    pub fn from_int(n: i64, prec: u32) -> Self {
        Self::point(Dyadic::from_int(n), prec)
    }

    /// Outward enclosure of an exact rational.
    pub fn from_rational(r: &BigRational, prec: u32) -> Self {
        let lo = Dyadic::from_ratio(r.numer(), r.denom(), prec, false);
        let hi = Dyadic::from_ratio(r.numer(), r.denom(), prec, true);
        Self::new(lo, hi, prec)
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        DyadicInterval {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
            prec,
        }
    }

    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Dyadic {
        Dyadic::midpoint(&self.lo, &self.hi)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: &Dyadic) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_rational(&self, v: &BigRational) -> bool {
        &self.lo.to_rational() <= v && v <= &self.hi.to_rational()
    }

    /// `other ⊆ self`.
    pub fn encloses(&self, other: &DyadicInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    pub fn is_positive(&self) -> bool {
        self.lo.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.hi.signum() < 0
    }

    /// The sign of every point of the interval, if it is the same throughout.
    pub fn sign(&self) -> Option<Sign> {
        if self.is_positive() {
            Some(Sign::Positive)
        } else if self.is_negative() {
            Some(Sign::Negative)
        } else {
            None
        }
    }

    /// Definitely `self < other` for all pairs of members.
    pub fn certainly_lt(&self, other: &DyadicInterval) -> bool {
        self.hi < other.lo
    }

    /// Definitely `self <= other` for all pairs of members.
    pub fn certainly_le(&self, other: &DyadicInterval) -> bool {
        self.hi <= other.lo
    }

    pub fn hull(&self, other: &DyadicInterval) -> Self {
        DyadicInterval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
            prec: self.prec.max(other.prec),
        }
    }

    /// Grows the interval by `delta >= 0` on both sides.
    pub fn widen(&self, delta: &Dyadic) -> Self {
        DyadicInterval {
            lo: &self.lo - delta,
            hi: &self.hi + delta,
            prec: self.prec,
        }
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        DyadicInterval {
            lo: self.lo.mul_pow2(k),
            hi: self.hi.mul_pow2(k),
            prec: self.prec,
        }
    }

    /// Rounds the endpoints outward to `prec` bits.
    pub fn rounded(&self, prec: u32) -> Self {
        DyadicInterval {
            lo: self.lo.round_down(prec),
            hi: self.hi.round_up(prec),
            prec,
        }
    }

    fn rounded_pair(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        DyadicInterval {
            lo: lo.round_down(prec),
            hi: hi.round_up(prec),
            prec,
        }
    }

    pub fn square(&self) -> Self {
        let prec = self.prec;
        if self.contains_zero() {
            let a = &self.lo * &self.lo;
            let b = &self.hi * &self.hi;
            Self::rounded_pair(Dyadic::zero(), a.max(b), prec)
        } else {
            let a = &self.lo * &self.lo;
            let b = &self.hi * &self.hi;
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            Self::rounded_pair(lo, hi, prec)
        }
    }
}

impl fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.6e}, {:.6e}]", self.lo.to_f64(), self.hi.to_f64())
    }
}

impl Add for &DyadicInterval {
    type Output = DyadicInterval;
    fn add(self, rhs: &DyadicInterval) -> DyadicInterval {
        DyadicInterval::rounded_pair(
            &self.lo + &rhs.lo,
            &self.hi + &rhs.hi,
            self.prec.max(rhs.prec),
        )
    }
}

impl Sub for &DyadicInterval {
    type Output = DyadicInterval;
    fn sub(self, rhs: &DyadicInterval) -> DyadicInterval {
        DyadicInterval::rounded_pair(
            &self.lo - &rhs.hi,
            &self.hi - &rhs.lo,
            self.prec.max(rhs.prec),
        )
    }
}

impl Mul for &DyadicInterval {
    type Output = DyadicInterval;
    fn mul(self, rhs: &DyadicInterval) -> DyadicInterval {
        let prec = self.prec.max(rhs.prec);
        if self.is_point() && rhs.is_point() {
            let p = &self.lo * &rhs.lo;
            return DyadicInterval::rounded_pair(p.clone(), p, prec);
        }
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if *p < lo {
                lo = p.clone();
            }
            if *p > hi {
                hi = p.clone();
            }
        }
        DyadicInterval::rounded_pair(lo, hi, prec)
    }
}

impl Neg for &DyadicInterval {
    type Output = DyadicInterval;
    fn neg(self) -> DyadicInterval {
        DyadicInterval {
            lo: -&self.hi,
            hi: -&self.lo,
            prec: self.prec,
        }
    }
}

impl_ring_via_ops!(DyadicInterval, |p, n| {
    DyadicInterval::point(Dyadic::from_bigint(n.clone()), p.prec)
});
