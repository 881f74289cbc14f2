//! A minimal commutative-ring abstraction.
//!
//! The Chebyshev recurrence, matrix powers and linear recurrences are shared
//! between exact integers, rationals, polynomials and dyadic intervals. Zero
//! and one are produced from an existing element because some carriers (the
//! interval type) hold a working precision that must be propagated.

use num_bigint::BigInt;
use num_rational::BigRational;

pub trait Ring: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn lift_bigint(&self, n: &BigInt) -> Self;
    fn lift_i64(&self, n: i64) -> Self {
        self.lift_bigint(&BigInt::from(n))
    }
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;
}

/// Implements [`Ring`] for a type whose references support `+ - * unary-`.
/// The caller supplies how to build an integer constant from `&BigInt`.
macro_rules! impl_ring_via_ops {
    ($t:ty, |$proto:ident, $n:ident| $from:expr) => {
        impl $crate::polyring::Ring for $t {
            fn zero_like(&self) -> Self {
                self.lift_i64(0)
            }
            fn one_like(&self) -> Self {
                self.lift_i64(1)
            }
            fn lift_bigint(&self, $n: &num_bigint::BigInt) -> Self {
                let $proto = self;
                let _ = $proto;
                $from
            }
            fn ring_add(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn ring_sub(&self, rhs: &Self) -> Self {
                self - rhs
            }
            fn ring_mul(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn ring_neg(&self) -> Self {
                -self
            }
        }
    };
}
pub(crate) use impl_ring_via_ops;

impl_ring_via_ops!(BigInt, |_p, n| n.clone());
impl_ring_via_ops!(BigRational, |_p, n| BigRational::from_integer(n.clone()));

/// Integer power by repeated squaring.
pub fn ring_pow<R: Ring>(base: &R, mut exp: u32) -> R {
    let mut acc = base.one_like();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc.ring_mul(&sq);
        }
        exp >>= 1;
        if exp > 0 {
            sq = sq.ring_mul(&sq);
        }
    }
    acc
}
