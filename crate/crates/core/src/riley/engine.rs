use super::{presentation_tag, Engine, RileyPolynomial};
use crate::chebyshev::sl2_power;
use crate::error::{Error, Result};
use crate::knots::{Generator, Word};
use crate::polyring::{symmetric_rewrite, Mat2, PolyMatrix, SYPoly};

/// Images of `a`, `b` and their inverses over `Z[s, 1/s, y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorImages {
    pub a: PolyMatrix,
    pub b: PolyMatrix,
    pub a_inv: PolyMatrix,
    pub b_inv: PolyMatrix,
}

/// `A = [[s, 1], [0, 1/s]]`, `B = [[s, 0], [2 - y, 1/s]]`.
pub fn generator_images() -> GeneratorImages {
    let a = Mat2::new(SYPoly::s(), SYPoly::one(), SYPoly::zero(), SYPoly::s_inv());
    let b = Mat2::new(
        SYPoly::s(),
        SYPoly::zero(),
        &SYPoly::from_i64(2) - &SYPoly::y(),
        SYPoly::s_inv(),
    );
    GeneratorImages {
        a_inv: a.adjugate(),
        b_inv: b.adjugate(),
        a,
        b,
    }
}

pub fn evaluate_word(word: &Word) -> PolyMatrix {
    let g = generator_images();
    let mut acc = Mat2::identity_like(&SYPoly::zero());
    for l in word.letters() {
        let factor = match (l.gen, l.exp > 0) {
            (Generator::A, true) => &g.a,
            (Generator::A, false) => &g.a_inv,
            (Generator::B, true) => &g.b,
            (Generator::B, false) => &g.b_inv,
        };
        for _ in 0..l.exp.unsigned_abs() {
            acc = acc.mul(factor);
        }
    }
    acc
}

/// `R = V A - B V` with `V = rho(v)^m` (or `rho(v)` without a power).
pub fn relator_matrix(v: &Word, m: Option<i64>) -> Result<PolyMatrix> {
    let g = generator_images();
    let base = evaluate_word(v);
    let vm = match m {
        Some(m) => sl2_power(&base, m)?,
        None => base,
    };
    Ok(vm.mul(&g.a).sub(&g.b.mul(&vm)))
}

/// `R_11 = R_22 = 0` and `R_21 = (y - 2) R_12`.
pub fn check_relator_structure(r: &PolyMatrix) -> Result<()> {
    if !r.entry(1, 1).is_zero() || !r.entry(2, 2).is_zero() {
        return Err(Error::StructureViolation("diagonal of VA - BV is not zero"));
    }
    let y_minus_2 = &SYPoly::y() - &SYPoly::from_i64(2);
    if *r.entry(2, 1) != &y_minus_2 * r.entry(1, 2) {
        return Err(Error::StructureViolation("R_21 differs from (y - 2) R_12"));
    }
    Ok(())
}

/// Riley polynomial of `<a, b | v a = b v>`, with `v` replaced by `v^m`
/// when a power is given. Negative powers go through the adjugate.
pub fn riley_generic(v: &Word, m: Option<i64>) -> Result<RileyPolynomial> {
    let r = relator_matrix(v, m)?;
    check_relator_structure(&r)?;
    let poly = symmetric_rewrite(r.entry(1, 2))?;
    Ok(RileyPolynomial::new(
        poly,
        presentation_tag(v, m),
        Engine::Generic,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_traces_and_determinants() {
        let g = generator_images();
        assert_eq!(g.a.trace(), &SYPoly::s() + &SYPoly::s_inv());
        assert_eq!(g.b.det(), SYPoly::one());
        assert_eq!(g.a.mul(&g.a_inv), Mat2::identity_like(&SYPoly::zero()));
        assert_eq!(g.b.mul(&g.b_inv), Mat2::identity_like(&SYPoly::zero()));
        assert_eq!(g.b.mul(&g.a_inv).trace(), SYPoly::y());
        assert_eq!(g.b_inv.mul(&g.a).trace(), SYPoly::y());
    }

    #[test]
    fn trivial_words() {
        let id = Mat2::identity_like(&SYPoly::zero());
        assert_eq!(evaluate_word(&Word::empty()), id);
        assert_eq!(evaluate_word(&"aA".parse().unwrap()), id);
    }

    #[test]
    fn figure_eight_is_quadratic_in_y() {
        let r = riley_generic(&"aBAb".parse().unwrap(), None).unwrap();
        assert_eq!(r.poly().degree_y(), Some(2));
        assert_eq!(r.presentation(), "aBAb");
    }

    #[test]
    fn non_relator_word_fails_structure() {
        // v = a gives R = AA - BA, whose diagonal is nonzero
        let e = riley_generic(&"a".parse().unwrap(), None).unwrap_err();
        assert!(matches!(e, Error::StructureViolation(_)));
    }
}
