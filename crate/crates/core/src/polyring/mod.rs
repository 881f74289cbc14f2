//! Exact arithmetic in `Z[x, y]` and `Z[s, 1/s, y]`, and the bridge between
//! them through `x = s + 1/s`.

mod matrix;
pub(crate) mod ring;
mod sy;
mod uni;
mod xy;

pub use matrix::{Mat2, PolyMatrix};
pub use ring::{ring_pow, Ring};
pub use sy::SYPoly;
pub use uni::UniPoly;
pub use xy::XYPoly;

use crate::error::{Error, Result};
use crate::interval::DyadicInterval;

/// Substitutes `inner` for the indeterminate of `outer` (Horner scheme).
pub fn compose_univariate(outer: &UniPoly, inner: &XYPoly) -> XYPoly {
    let mut acc = XYPoly::zero();
    for c in outer.coeffs().iter().rev() {
        acc = &(&acc * inner) + &XYPoly::constant(c.clone());
    }
    acc
}

/// Rewrites an `s -> 1/s` invariant Laurent polynomial as a polynomial in
/// `x = s + 1/s`.
///
/// Each symmetric pair `s^k + s^-k` is replaced by `p_k(x)` with `p_0 = 2`,
/// `p_1 = x`, `p_k = x p_{k-1} - p_{k-2}`. The result is substituted back and
/// compared with the input before it is returned.
pub fn symmetric_rewrite(p: &SYPoly) -> Result<XYPoly> {
    if !p.is_s_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut basis: Vec<XYPoly> = vec![XYPoly::from_i64(2), XYPoly::x()];
    let mut out = XYPoly::zero();
    for (e, j, c) in p.terms() {
        if e < 0 {
            continue;
        }
        let k = e as usize;
        let piece = if k == 0 {
            XYPoly::monomial(c.clone(), 0, j)
        } else {
            while basis.len() <= k {
                let n = basis.len();
                let next = &(&XYPoly::x() * &basis[n - 1]) - &basis[n - 2];
                basis.push(next);
            }
            &basis[k] * &XYPoly::monomial(c.clone(), 0, j)
        };
        out = &out + &piece;
    }
    if out.to_sy() != *p {
        return Err(Error::RewriteMismatch);
    }
    Ok(out)
}

/// Outward-rounded enclosure of `{p(u, v) : u in x, v in y}`.
///
/// The working precision is the larger of the two operand precisions.
pub fn eval_interval(p: &XYPoly, x: &DyadicInterval, y: &DyadicInterval) -> DyadicInterval {
    let prec = x.prec().max(y.prec());
    let x = x.with_prec(prec);
    let y = y.with_prec(prec);
    if p.is_zero() {
        return DyadicInterval::from_int(0, prec);
    }
    p.eval(&x, &y)
}

/// Highest `y` degree of `p` with its coefficient in `Z[x]`.
pub fn leading_y_term(p: &XYPoly) -> Result<(u32, XYPoly)> {
    p.leading_y_term()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::Dyadic;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn rewrite_basics() {
        let s_plus = &SYPoly::s() + &SYPoly::s_inv();
        assert_eq!(symmetric_rewrite(&s_plus).unwrap(), XYPoly::x());

        let s2 = &(&SYPoly::s() * &SYPoly::s()) + &(&SYPoly::s_inv() * &SYPoly::s_inv());
        assert_eq!(
            symmetric_rewrite(&s2).unwrap(),
            XYPoly::from_i64_terms(&[(2, 0, 1), (0, 0, -2)])
        );

        // (s^3 + s^-3) y -> (x^3 - 3x) y
        let s3y = SYPoly::from_terms([(3, 1, BigInt::from(1)), (-3, 1, BigInt::from(1))]);
        assert_eq!(
            symmetric_rewrite(&s3y).unwrap(),
            XYPoly::from_i64_terms(&[(3, 1, 1), (1, 1, -3)])
        );
    }

    #[test]
    fn rewrite_rejects_asymmetric() {
        assert_eq!(symmetric_rewrite(&SYPoly::s()), Err(Error::NotSymmetric));
    }

    #[test]
    fn compose_square() {
        let outer = UniPoly::from_i64s(&[0, 0, 1]);
        let inner = &XYPoly::x() + &XYPoly::y();
        assert_eq!(
            compose_univariate(&outer, &inner),
            XYPoly::from_i64_terms(&[(2, 0, 1), (1, 1, 2), (0, 2, 1)])
        );
        let s2 = UniPoly::from_i64s(&[-1, 0, 1]);
        assert_eq!(
            compose_univariate(&s2, &XYPoly::y()),
            XYPoly::from_i64_terms(&[(0, 2, 1), (0, 0, -1)])
        );
    }

    #[test]
    fn interval_eval_sqrt3() {
        // p = x^2 - 3 on x = [1.7320, 1.7321]
        let p = XYPoly::from_i64_terms(&[(2, 0, 1), (0, 0, -3)]);
        let lo = BigRational::new(17320.into(), 10000.into());
        let hi = BigRational::new(17321.into(), 10000.into());
        let x =
            DyadicInterval::from_rational(&lo, 64).hull(&DyadicInterval::from_rational(&hi, 64));
        let y = DyadicInterval::from_int(5, 64);
        assert!(eval_interval(&p, &x, &y).contains_zero());
    }

    #[test]
    fn interval_eval_identity_in_y() {
        let x = DyadicInterval::new(Dyadic::from_int(-3), Dyadic::from_int(9), 32);
        let y = DyadicInterval::from_int(2, 32);
        let r = eval_interval(&XYPoly::y(), &x, &y);
        assert_eq!(r, DyadicInterval::from_int(2, 32));
    }
}
