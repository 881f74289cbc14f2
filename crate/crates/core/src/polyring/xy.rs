use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::ring::{impl_ring_via_ops, Ring};
use super::sy::SYPoly;
use crate::error::{Error, Result};

/// Sparse polynomial in `Z[x, y]`.
///
/// Terms are keyed by `(deg_y, deg_x)` so that map iteration is already the
/// canonical order used for printing, serialization and hashing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<(u32, u32, String)>", try_from = "Vec<(u32, u32, String)>")]
pub struct XYPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl XYPoly {
    pub fn zero() -> Self {
        XYPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// `coeff * x^deg_x * y^deg_y`.
    pub fn monomial(coeff: BigInt, deg_x: u32, deg_y: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((deg_y, deg_x), coeff);
        }
        XYPoly { terms }
    }

    /// Sums the given `(deg_x, deg_y, coeff)` triples.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, BigInt)>,
    {
        let mut out = XYPoly::zero();
        for (i, j, c) in terms {
            out.add_term((j, i), c);
        }
        out
    }

    /// Convenience constructor from small integer triples `(deg_x, deg_y, coeff)`.
    pub fn from_i64_terms(terms: &[(u32, u32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(i, j, c)| (i, j, BigInt::from(c))))
    }

    fn add_term(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(deg_x, deg_y, coeff)` in canonical `(deg_y, deg_x)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> + '_ {
        self.terms.iter().map(|(&(j, i), c)| (i, j, c))
    }

    pub fn coeff(&self, deg_x: u32, deg_y: u32) -> BigInt {
        self.terms.get(&(deg_y, deg_x)).cloned().unwrap_or_default()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|&(j, _)| j)
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, i)| i).max()
    }

    /// Coefficients in `y` as polynomials in `x` (dense in the `y` degree).
    pub fn y_coefficients(&self) -> Vec<XYPoly> {
        let Some(dy) = self.degree_y() else {
            return Vec::new();
        };
        let mut out = vec![XYPoly::zero(); dy as usize + 1];
        for (&(j, i), c) in &self.terms {
            out[j as usize].terms.insert((0, i), c.clone());
        }
        out
    }

    /// Highest `y` degree and its coefficient, a polynomial in `x` alone.
    pub fn leading_y_term(&self) -> Result<(u32, XYPoly)> {
        let dy = self.degree_y().ok_or(Error::ZeroPolynomial)?;
        let lead = XYPoly {
            terms: self
                .terms
                .range((dy, 0)..)
                .map(|(&(_, i), c)| ((0, i), c.clone()))
                .collect(),
        };
        Ok((dy, lead))
    }

    pub fn derivative_y(&self) -> Self {
        XYPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(j, _), _)| j > 0)
                .map(|(&(j, i), c)| ((j - 1, i), c * BigInt::from(j)))
                .collect(),
        }
    }

    /// Substitutes `y := inner(x, y)`.
    pub fn substitute_y(&self, inner: &XYPoly) -> Self {
        let mut acc = XYPoly::zero();
        for coeff in self.y_coefficients().iter().rev() {
            acc = &(&acc * inner) + coeff;
        }
        acc
    }

    /// Substitutes `x := inner(x, y)`.
    pub fn substitute_x(&self, inner: &XYPoly) -> Self {
        let Some(dx) = self.degree_x() else {
            return XYPoly::zero();
        };
        let mut by_x = vec![XYPoly::zero(); dx as usize + 1];
        for (&(j, i), c) in &self.terms {
            by_x[i as usize].terms.insert((j, 0), c.clone());
        }
        let mut acc = XYPoly::zero();
        for coeff in by_x.iter().rev() {
            acc = &(&acc * inner) + coeff;
        }
        acc
    }

    /// Horner evaluation: each `y` coefficient is evaluated in `x`, then the
    /// resulting univariate polynomial is evaluated in `y`.
    pub fn eval<R: Ring>(&self, x: &R, y: &R) -> R {
        let coeffs = self.partial_eval_x(x);
        let mut acc = y.zero_like();
        for c in coeffs.iter().rev() {
            acc = acc.ring_mul(y).ring_add(c);
        }
        acc
    }

    /// Evaluates every `y` coefficient at `x`, yielding a univariate
    /// polynomial in `y` (lowest degree first).
    pub fn partial_eval_x<R: Ring>(&self, x: &R) -> Vec<R> {
        let Some(dy) = self.degree_y() else {
            return Vec::new();
        };
        let mut out = Vec::with_capacity(dy as usize + 1);
        let mut iter = self.terms.iter().rev().peekable();
        for j in (0..=dy).rev() {
            let mut acc = x.zero_like();
            let mut cur_deg: Option<u32> = None;
            while let Some(&(&(jj, i), c)) = iter.peek() {
                if jj != j {
                    break;
                }
                if let Some(d) = cur_deg {
                    for _ in i..d {
                        acc = acc.ring_mul(x);
                    }
                }
                acc = acc.ring_add(&x.lift_bigint(c));
                cur_deg = Some(i);
                iter.next();
            }
            if let Some(d) = cur_deg {
                for _ in 0..d {
                    acc = acc.ring_mul(x);
                }
            }
            out.push(acc);
        }
        out.reverse();
        out
    }

    /// Image under `x := s + 1/s`.
    pub fn to_sy(&self) -> SYPoly {
        let x = &SYPoly::s() + &SYPoly::s_inv();
        let mut out = SYPoly::zero();
        let mut x_pows: Vec<SYPoly> = vec![SYPoly::one()];
        for (&(j, i), c) in &self.terms {
            while x_pows.len() <= i as usize {
                let next = x_pows.last().expect("nonempty") * &x;
                x_pows.push(next);
            }
            let term = &x_pows[i as usize] * &SYPoly::monomial(c.clone(), 0, j);
            out = &out + &term;
        }
        out
    }

    /// Canonical text: one `coeff * x^i * y^j` term per line, canonical order.
    pub fn to_canonical_text(&self) -> String {
        let mut s = String::new();
        for (i, j, c) in self.terms() {
            s.push_str(&format!("{c} * x^{i} * y^{j}\n"));
        }
        s
    }

    pub fn parse_canonical_text(text: &str) -> Result<Self> {
        let mut out = XYPoly::zero();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let parts: Vec<&str> = line.split('*').map(str::trim).collect();
            let [c, xp, yp] = parts[..] else {
                return Err(Error::Parse(format!("bad term `{line}`")));
            };
            let c = BigInt::from_str(c).map_err(|e| Error::Parse(format!("{e}: `{c}`")))?;
            let i = parse_power(xp, "x")?;
            let j = parse_power(yp, "y")?;
            out.add_term((j, i), c);
        }
        Ok(out)
    }

    /// SHA-256 over the canonical text, lowercase hex.
    pub fn content_hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_canonical_text().as_bytes()))
    }
}

fn parse_power(s: &str, var: &str) -> Result<u32> {
    s.strip_prefix(var)
        .and_then(|r| r.strip_prefix('^'))
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected `{var}^k`, got `{s}`")))
}

impl From<XYPoly> for Vec<(u32, u32, String)> {
    fn from(p: XYPoly) -> Self {
        p.terms().map(|(i, j, c)| (i, j, c.to_string())).collect()
    }
}

impl TryFrom<Vec<(u32, u32, String)>> for XYPoly {
    type Error = Error;
    fn try_from(v: Vec<(u32, u32, String)>) -> Result<Self> {
        let mut out = XYPoly::zero();
        for (i, j, c) in v {
            let c = BigInt::from_str(&c).map_err(|e| Error::Parse(format!("{e}: `{c}`")))?;
            out.add_term((j, i), c);
        }
        Ok(out)
    }
}

impl fmt::Display for XYPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, j, c) in self.terms() {
            if first {
                write!(f, "{c}")?;
            } else if c.sign() == num_bigint::Sign::Minus {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            first = false;
            match i {
                0 => {}
                1 => f.write_str("*x")?,
                _ => write!(f, "*x^{i}")?,
            }
            match j {
                0 => {}
                1 => f.write_str("*y")?,
                _ => write!(f, "*y^{j}")?,
            }
        }
        Ok(())
    }
}

impl Add for &XYPoly {
    type Output = XYPoly;
    fn add(self, rhs: &XYPoly) -> XYPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &XYPoly {
    type Output = XYPoly;
    fn sub(self, rhs: &XYPoly) -> XYPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c);
        }
        out
    }
}

impl Mul for &XYPoly {
    type Output = XYPoly;
    fn mul(self, rhs: &XYPoly) -> XYPoly {
        let mut acc: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for (&(j1, i1), a) in &self.terms {
            for (&(j2, i2), b) in &rhs.terms {
                *acc.entry((j1 + j2, i1 + i2)).or_insert_with(BigInt::zero) += a * b;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        XYPoly { terms: acc }
    }
}

impl Neg for &XYPoly {
    type Output = XYPoly;
    fn neg(self) -> XYPoly {
        XYPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl_ring_via_ops!(XYPoly, |_p, n| XYPoly::constant(n.clone()));

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn difference_of_squares() {
        let x = XYPoly::x();
        let y = XYPoly::y();
        let lhs = &(&x + &y) * &(&x - &y);
        let rhs = XYPoly::from_i64_terms(&[(2, 0, 1), (0, 2, -1)]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_order_is_y_then_x() {
        let p = XYPoly::from_i64_terms(&[(3, 0, 1), (0, 1, 2), (1, 0, -5), (0, 0, 7)]);
        let order: Vec<(u32, u32)> = p.terms().map(|(i, j, _)| (i, j)).collect();
        assert_eq!(order, vec![(0, 0), (1, 0), (3, 0), (0, 1)]);
        assert_eq!(
            p.to_canonical_text(),
            "7 * x^0 * y^0\n-5 * x^1 * y^0\n1 * x^3 * y^0\n2 * x^0 * y^1\n"
        );
    }

    #[test]
    fn text_and_structured_round_trip() {
        let p = XYPoly::from_terms([
            (2, 1, BigInt::from(-3)),
            (0, 4, BigInt::from(10).pow(40)),
            (5, 0, BigInt::from(1)),
        ]);
        let text = p.to_canonical_text();
        assert_eq!(XYPoly::parse_canonical_text(&text).unwrap(), p);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<XYPoly>(&json).unwrap(), p);
        assert!(json.starts_with("[[5,0,\"1\"]"));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(XYPoly::parse_canonical_text("3 * x^1").is_err());
        assert!(XYPoly::parse_canonical_text("3 * z^1 * y^0").is_err());
        assert!(XYPoly::parse_canonical_text("abc * x^1 * y^0").is_err());
    }

    #[test]
    fn leading_term() {
        // x^2 y^3 + y - 4
        let p = XYPoly::from_i64_terms(&[(2, 3, 1), (0, 1, 1), (0, 0, -4)]);
        let (d, c) = p.leading_y_term().unwrap();
        assert_eq!(d, 3);
        assert_eq!(c, XYPoly::from_i64_terms(&[(2, 0, 1)]));
        assert_eq!(XYPoly::zero().leading_y_term(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn horner_matches_term_sum() {
        let p = XYPoly::from_i64_terms(&[(3, 2, 2), (0, 2, -1), (1, 0, 5), (0, 0, -7), (4, 5, 1)]);
        let x = BigRational::new(BigInt::from(3), BigInt::from(7));
        let y = q(-2);
        let naive = p.terms().fold(BigRational::zero(), |acc, (i, j, c)| {
            acc + BigRational::from_integer(c.clone())
                * num_traits::pow(x.clone(), i as usize)
                * num_traits::pow(y.clone(), j as usize)
        });
        assert_eq!(p.eval(&x, &y), naive);
    }

    #[test]
    fn substitution_and_derivative() {
        // p = x*y^2 + 3y; p(x, x+1) = x^3 + 2x^2 + x + 3x + 3
        let p = XYPoly::from_i64_terms(&[(1, 2, 1), (0, 1, 3)]);
        let inner = &XYPoly::x() + &XYPoly::one();
        let expect = XYPoly::from_i64_terms(&[(3, 0, 1), (2, 0, 2), (1, 0, 4), (0, 0, 3)]);
        assert_eq!(p.substitute_y(&inner), expect);
        assert_eq!(
            p.derivative_y(),
            XYPoly::from_i64_terms(&[(1, 1, 2), (0, 0, 3)])
        );
    }
}
