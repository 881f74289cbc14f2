use super::engine::{check_relator_structure, evaluate_word, generator_images};
use super::{presentation_tag, Engine, RileyPolynomial};
use crate::chebyshev::{cheb_pair, cheb_poly};
use crate::error::{Error, Result};
use crate::knots::{double_twist_word, kl_block_c, kl_block_d, word_kl, KlKnot};
use crate::polyring::{compose_univariate, symmetric_rewrite, XYPoly};

fn s_of_y(n: u32) -> XYPoly {
    compose_univariate(&cheb_poly(n), &XYPoly::y())
}

/// `y + 2 - x^2`.
fn shift() -> XYPoly {
    XYPoly::from_i64_terms(&[(0, 1, 1), (0, 0, 2), (2, 0, -1)])
}

/// `1 + (y + 2 - x^2) S_{k-1}(y) (S_k(y) - S_{k-1}(y))`.
pub fn alpha_dt(k: u32) -> XYPoly {
    assert!(k >= 1, "k must be at least 1");
    let (sk1, sk) = (s_of_y(k - 1), s_of_y(k));
    &XYPoly::one() + &(&(&shift() * &sk1) * &(&sk - &sk1))
}

/// `x^2 - y - (y - 2)(y + 2 - x^2) S_k(y) S_{k-1}(y)`; the trace of `w`.
pub fn lambda_dt(k: u32) -> XYPoly {
    assert!(k >= 1, "k must be at least 1");
    let base = XYPoly::from_i64_terms(&[(2, 0, 1), (0, 1, -1)]);
    let y_minus_2 = XYPoly::from_i64_terms(&[(0, 1, 1), (0, 0, -2)]);
    let tail = &(&y_minus_2 * &shift()) * &(&s_of_y(k) * &s_of_y(k - 1));
    &base - &tail
}

/// Closed form for `J(2k+1, 2m)` under the relator `w^m a = b w^m`.
///
/// `m >= 2` gives `S_{m-1}(lambda) alpha - S_{m-2}(lambda)`, `m <= -1` gives
/// `S_{|m|}(lambda) - S_{|m|-1}(lambda) alpha`. `m = 1` is taken as `alpha`
/// (reading `S_{-1}` as 0) and flagged out of convention.
pub fn riley_double_twist(k: u32, m: i64) -> Result<RileyPolynomial> {
    if k < 1 || m == 0 {
        return Err(Error::InvalidKnot(format!(
            "J:{k},{m} needs k >= 1, m != 0"
        )));
    }
    let alpha = alpha_dt(k);
    let lambda = lambda_dt(k);
    let tag = presentation_tag(&double_twist_word(k), Some(m));
    let steps = u32::try_from(m.unsigned_abs())
        .map_err(|_| Error::InvalidKnot(format!("m = {m} too large")))?;
    if m == 1 {
        return Ok(RileyPolynomial::new(alpha, tag, Engine::ClosedForm).flag_out_of_convention());
    }
    let poly = if m > 1 {
        let (s_m2, s_m1) = cheb_pair(steps - 1, &lambda);
        &(&s_m1 * &alpha) - &s_m2
    } else {
        let (s_prev, s_cur) = cheb_pair(steps, &lambda);
        &s_cur - &(&s_prev * &alpha)
    };
    Ok(RileyPolynomial::new(poly, tag, Engine::ClosedForm))
}

/// The three named polynomials of the `K_l` family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlPolys {
    pub lambda: XYPoly,
    pub alpha: XYPoly,
    pub beta: XYPoly,
}

pub fn kl_named_polys() -> KlPolys {
    KlPolys {
        lambda: XYPoly::from_i64_terms(&[
            (2, 0, 9),
            (4, 0, -12),
            (6, 0, 4),
            (0, 1, -5),
            (2, 1, 10),
            (4, 1, 2),
            (6, 1, -4),
            (2, 2, -11),
            (4, 2, 8),
            (6, 2, 1),
            (0, 3, 5),
            (2, 3, -4),
            (4, 3, -3),
            (2, 4, 3),
            (0, 5, -1),
        ]),
        alpha: XYPoly::from_i64_terms(&[
            (0, 0, 1),
            (2, 0, -4),
            (4, 0, 2),
            (0, 1, 2),
            (2, 1, -1),
            (4, 1, -1),
            (0, 2, -1),
            (2, 2, 2),
            (0, 3, -1),
        ]),
        beta: XYPoly::from_i64_terms(&[(0, 0, -1), (2, 0, 1), (0, 1, -1)]),
    }
}

/// The same three polynomials recomputed from the words `c` and `d`:
/// `lambda = tr C`, `alpha` from `DA - BD` and `beta` from
/// `C^-1 D A - B C^-1 D`.
pub fn kl_polys_from_words() -> Result<KlPolys> {
    let g = generator_images();
    let c = evaluate_word(&kl_block_c());
    let d = evaluate_word(&kl_block_d());
    let lambda = symmetric_rewrite(&c.trace())?;
    let first = d.mul(&g.a).sub(&g.b.mul(&d));
    check_relator_structure(&first)?;
    let cd = c.adjugate().mul(&d);
    let second = cd.mul(&g.a).sub(&g.b.mul(&cd));
    check_relator_structure(&second)?;
    Ok(KlPolys {
        lambda,
        alpha: symmetric_rewrite(first.entry(1, 2))?,
        beta: symmetric_rewrite(second.entry(1, 2))?,
    })
}

/// `S_{l-1}(lambda) alpha - S_{l-2}(lambda) beta`.
pub fn riley_kl(l: u32) -> Result<RileyPolynomial> {
    let knot = KlKnot::new(l)?;
    let poly = kl_compose(l, &kl_named_polys());
    Ok(RileyPolynomial::new(
        poly,
        presentation_tag(&word_kl(&knot), None),
        Engine::ClosedForm,
    ))
}

/// `S_{l-1}(lambda) alpha - S_{l-2}(lambda) beta` for arbitrary inputs.
pub fn kl_compose(l: u32, polys: &KlPolys) -> XYPoly {
    assert!(l >= 2, "l must be at least 2");
    let (s_l2, s_l1) = cheb_pair(l - 1, &polys.lambda);
    &(&s_l1 * &polys.alpha) - &(&s_l2 * &polys.beta)
}

/// Outcome of the symbolic checks on `d alpha / d y` for the `K_l` family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DerivativeCheck {
    pub derivative_matches: bool,
    pub discriminant_matches: bool,
}

impl DerivativeCheck {
    pub fn passed(&self) -> bool {
        self.derivative_matches && self.discriminant_matches
    }
}

/// Compares `d alpha / d y` with `2 - x^2 - x^4 - 2y + 4x^2 y - 3y^2` and its
/// discriminant in `y` with `4x^4 - 28x^2 + 28`.
pub fn kl_alpha_derivative_check() -> DerivativeCheck {
    let expected = XYPoly::from_i64_terms(&[
        (0, 0, 2),
        (2, 0, -1),
        (4, 0, -1),
        (0, 1, -2),
        (2, 1, 4),
        (0, 2, -3),
    ]);
    let deriv = kl_named_polys().alpha.derivative_y();
    let coeffs = deriv.y_coefficients();
    let discriminant_matches = coeffs.len() == 3 && {
        let (c0, c1, c2) = (&coeffs[0], &coeffs[1], &coeffs[2]);
        let disc = &(c1 * c1) - &(&(&XYPoly::from_i64(4) * c2) * c0);
        disc == XYPoly::from_i64_terms(&[(4, 0, 4), (2, 0, -28), (0, 0, 28)])
    };
    DerivativeCheck {
        derivative_matches: deriv == expected,
        discriminant_matches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn at(p: &XYPoly, x: i64, y: i64) -> BigInt {
        p.eval(&BigInt::from(x), &BigInt::from(y))
    }

    #[test]
    fn double_twist_named_polys() {
        let a1 = alpha_dt(1);
        // 1 + (y + 2 - x^2)(y - 1)
        let expect =
            &XYPoly::one() + &(&shift() * &XYPoly::from_i64_terms(&[(0, 1, 1), (0, 0, -1)]));
        assert_eq!(a1, expect);
        assert_eq!(at(&a1, 1, 2), BigInt::from(4));
        for k in 1..5 {
            assert_eq!(at(&alpha_dt(k), 2, 2), BigInt::from(1));
            let l2 = lambda_dt(k).substitute_y(&XYPoly::from_i64(2));
            assert_eq!(l2, XYPoly::from_i64_terms(&[(2, 0, 1), (0, 0, -2)]));
        }
        assert_eq!(at(&lambda_dt(1), 1, 2), BigInt::from(-1));
    }

    #[test]
    fn m_two_is_lambda_alpha_minus_one() {
        let r = riley_double_twist(2, 2).unwrap();
        let expect = &(&lambda_dt(2) * &alpha_dt(2)) - &XYPoly::one();
        assert_eq!(r.poly(), &expect);
        assert!(!r.out_of_convention());
        assert!(riley_double_twist(1, 1).unwrap().out_of_convention());
        assert!(riley_double_twist(0, 2).is_err());
    }

    #[test]
    fn family_polys_match_words() {
        assert_eq!(kl_polys_from_words().unwrap(), kl_named_polys());
    }

    #[test]
    fn derivative_identities() {
        assert!(kl_alpha_derivative_check().passed());
    }
}
