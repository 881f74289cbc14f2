use super::ring::Ring;
use super::sy::SYPoly;

/// A 2x2 matrix over a commutative ring, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2<R> {
    pub m: [[R; 2]; 2],
}

/// 2x2 matrices over `Z[s, 1/s, y]`.
pub type PolyMatrix = Mat2<SYPoly>;

impl<R: Ring> Mat2<R> {
    pub fn new(a11: R, a12: R, a21: R, a22: R) -> Self {
        Mat2 {
            m: [[a11, a12], [a21, a22]],
        }
    }

    /// Identity over the ring of `proto`.
    pub fn identity_like(proto: &R) -> Self {
        Self::new(
            proto.one_like(),
            proto.zero_like(),
            proto.zero_like(),
            proto.one_like(),
        )
    }

    /// Entry at 1-based position `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &R {
        &self.m[i - 1][j - 1]
    }

    pub fn trace(&self) -> R {
        self.m[0][0].ring_add(&self.m[1][1])
    }

    pub fn det(&self) -> R {
        self.m[0][0]
            .ring_mul(&self.m[1][1])
            .ring_sub(&self.m[0][1].ring_mul(&self.m[1][0]))
    }

    /// `[[d, -b], [-c, a]]`; the inverse when the determinant is 1.
    pub fn adjugate(&self) -> Self {
        Self::new(
            self.m[1][1].clone(),
            self.m[0][1].ring_neg(),
            self.m[1][0].ring_neg(),
            self.m[0][0].clone(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let e = |i: usize, j: usize| {
            self.m[i][0]
                .ring_mul(&rhs.m[0][j])
                .ring_add(&self.m[i][1].ring_mul(&rhs.m[1][j]))
        };
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b| a.ring_add(b))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b| a.ring_sub(b))
    }

    pub fn scale(&self, k: &R) -> Self {
        self.map(|a| k.ring_mul(a))
    }

    pub fn map(&self, f: impl Fn(&R) -> R) -> Self {
        Self::new(
            f(&self.m[0][0]),
            f(&self.m[0][1]),
            f(&self.m[1][0]),
            f(&self.m[1][1]),
        )
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        Self::new(
            f(&self.m[0][0], &rhs.m[0][0]),
            f(&self.m[0][1], &rhs.m[0][1]),
            f(&self.m[1][0], &rhs.m[1][0]),
            f(&self.m[1][1], &rhs.m[1][1]),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2<BigInt> {
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    #[test]
    fn adjugate_inverts_unimodular() {
        let a = m(2, 3, 1, 2);
        assert_eq!(a.det(), BigInt::from(1));
        assert_eq!(a.mul(&a.adjugate()), Mat2::identity_like(&BigInt::from(0)));
    }

    #[test]
    fn product_and_trace() {
        let a = m(1, 2, 3, 4);
        let b = m(0, 1, 1, 0);
        assert_eq!(a.mul(&b), m(2, 1, 4, 3));
        assert_eq!(a.trace(), BigInt::from(5));
        assert_eq!(a.det(), BigInt::from(-2));
    }
}
