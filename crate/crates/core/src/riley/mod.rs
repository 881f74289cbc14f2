//! Riley polynomials: the generic matrix-word engine and the closed forms
//! for the double-twist and `K_l` families.

mod closed;
mod engine;

use serde::Serialize;

pub use closed::{
    alpha_dt, kl_alpha_derivative_check, kl_compose, kl_named_polys, kl_polys_from_words,
    lambda_dt, riley_double_twist, riley_kl, DerivativeCheck, KlPolys,
};
pub use engine::{
    check_relator_structure, evaluate_word, generator_images, relator_matrix, riley_generic,
    GeneratorImages,
};

use crate::error::Result;
use crate::interval::Sign;
use crate::knots::{sign_sequence, word_from_signs, Knot, Word};
use crate::polyring::XYPoly;

/// Which route produced a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    Generic,
    ClosedForm,
}

/// A Riley polynomial with the presentation it was computed from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RileyPolynomial {
    poly: XYPoly,
    knot: Option<Knot>,
    presentation: String,
    engine: Engine,
    /// Set for the `m = 1` double-twist case, outside the `|m| >= 2` range.
    out_of_convention: bool,
    hash: String,
}

impl RileyPolynomial {
    pub(crate) fn new(poly: XYPoly, presentation: String, engine: Engine) -> Self {
        let hash = poly.content_hash();
        RileyPolynomial {
            poly,
            knot: None,
            presentation,
            engine,
            out_of_convention: false,
            hash,
        }
    }

    pub fn with_knot(mut self, knot: Knot) -> Self {
        self.knot = Some(knot);
        self
    }

    pub(crate) fn flag_out_of_convention(mut self) -> Self {
        self.out_of_convention = true;
        self
    }

    pub fn poly(&self) -> &XYPoly {
        &self.poly
    }

    pub fn knot(&self) -> Option<&Knot> {
        self.knot.as_ref()
    }

    /// Relator word `v` of `v a = b v`, written `(w)^m` for power presentations.
    pub fn presentation(&self) -> &str {
        &self.presentation
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn out_of_convention(&self) -> bool {
        self.out_of_convention
    }

    pub fn hash(&self) -> &str {
        &self.hash
    }
}

pub(crate) fn presentation_tag(v: &Word, m: Option<i64>) -> String {
    match m {
        Some(m) => format!("({v})^{m}"),
        None => v.to_string(),
    }
}

/// Polynomial for a knot descriptor: the families through their closed
/// forms, fractions through the generic engine on `word_from_signs`.
pub fn riley_for_knot(knot: &Knot) -> Result<RileyPolynomial> {
    let r = match knot {
        Knot::DoubleTwist(j) => riley_double_twist(j.k(), j.m())?,
        Knot::Kl(k) => riley_kl(k.l())?,
        Knot::Fraction(f) => riley_generic(&word_from_signs(&sign_sequence(f)), None)?,
    };
    Ok(r.with_knot(*knot))
}

/// Generic-engine polynomial for the same presentation as [`riley_for_knot`].
pub fn riley_generic_for_knot(knot: &Knot) -> Result<RileyPolynomial> {
    let r = match knot {
        Knot::DoubleTwist(j) => {
            let (w, m) = crate::knots::word_double_twist(j);
            riley_generic(&w, Some(m))?
        }
        Knot::Kl(k) => riley_generic(&crate::knots::word_kl(k), None)?,
        Knot::Fraction(f) => riley_generic(&word_from_signs(&sign_sequence(f)), None)?,
    };
    Ok(r.with_knot(*knot))
}

/// Sign of the leading `y` coefficient when that coefficient is a nonzero
/// constant; `None` when it still depends on `x`.
pub fn leading_y_sign(p: &XYPoly) -> Result<Option<Sign>> {
    let (_, lead) = p.leading_y_term()?;
    if lead.degree_x() != Some(0) {
        return Ok(None);
    }
    let c = lead.coeff(0, 0);
    Ok(Some(if c > 0.into() {
        Sign::Positive
    } else {
        Sign::Negative
    }))
}
