use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ring::impl_ring_via_ops;

/// Sparse element of the Laurent ring `Z[s, 1/s, y]`, keyed `(deg_y, exp_s)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SYPoly {
    terms: BTreeMap<(u32, i32), BigInt>,
}

impl SYPoly {
    pub fn zero() -> Self {
        SYPoly::default()
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

    pub fn s() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn s_inv() -> Self {
        Self::monomial(BigInt::one(), -1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// `coeff * s^exp_s * y^deg_y`.
    pub fn monomial(coeff: BigInt, exp_s: i32, deg_y: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((deg_y, exp_s), coeff);
        }
        SYPoly { terms }
    }

    /// Sums `(exp_s, deg_y, coeff)` triples.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, u32, BigInt)>,
    {
        let mut out = SYPoly::zero();
        for (e, j, c) in terms {
            out.add_term((j, e), c);
        }
        out
    }

    fn add_term(&mut self, key: (u32, i32), c: BigInt) {
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

    /// Terms as `(exp_s, deg_y, coeff)` in canonical `(deg_y, exp_s)` order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, u32, &BigInt)> + '_ {
        self.terms.iter().map(|(&(j, e), c)| (e, j, c))
    }

    pub fn coeff(&self, exp_s: i32, deg_y: u32) -> BigInt {
        self.terms.get(&(deg_y, exp_s)).cloned().unwrap_or_default()
    }

    /// Image under `s := 1/s`.
    pub fn invert_s(&self) -> Self {
        SYPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(j, e), c)| ((j, -e), c.clone()))
                .collect(),
        }
    }

    pub fn is_s_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(j, e), c)| self.terms.get(&(j, -e)) == Some(c))
    }

    /// Exact evaluation at rational `(s, y)`; `s` must be nonzero.
    pub fn eval_rational(&self, s: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(j, e), c) in &self.terms {
            let sp = if e >= 0 {
                num_traits::pow(s.clone(), e as usize)
            } else {
                num_traits::pow(s.recip(), (-e) as usize)
            };
            acc +=
                BigRational::from_integer(c.clone()) * sp * num_traits::pow(y.clone(), j as usize);
        }
        acc
    }
}

impl fmt::Display for SYPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, j, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if e != 0 {
                write!(f, "*s^{e}")?;
            }
            if j != 0 {
                write!(f, "*y^{j}")?;
            }
        }
        Ok(())
    }
}

impl Add for &SYPoly {
    type Output = SYPoly;
    fn add(self, rhs: &SYPoly) -> SYPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &SYPoly {
    type Output = SYPoly;
    fn sub(self, rhs: &SYPoly) -> SYPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c);
        }
        out
    }
}

impl Mul for &SYPoly {
    type Output = SYPoly;
    fn mul(self, rhs: &SYPoly) -> SYPoly {
        let mut acc: BTreeMap<(u32, i32), BigInt> = BTreeMap::new();
        for (&(j1, e1), a) in &self.terms {
            for (&(j2, e2), b) in &rhs.terms {
                *acc.entry((j1 + j2, e1 + e2)).or_insert_with(BigInt::zero) += a * b;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        SYPoly { terms: acc }
    }
}

impl Neg for &SYPoly {
    type Output = SYPoly;
    fn neg(self) -> SYPoly {
        SYPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl_ring_via_ops!(SYPoly, |_p, n| SYPoly::constant(n.clone()));

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_square() {
        let t = &SYPoly::s() + &SYPoly::s_inv();
        let sq = &t * &t;
        let expect = SYPoly::from_terms([
            (2, 0, BigInt::from(1)),
            (0, 0, BigInt::from(2)),
            (-2, 0, BigInt::from(1)),
        ]);
        assert_eq!(sq, expect);
    }

    #[test]
    fn inversion_and_symmetry() {
        let p = &SYPoly::s() * &SYPoly::y();
        assert!(!p.is_s_symmetric());
        assert_eq!(p.invert_s(), &SYPoly::s_inv() * &SYPoly::y());
        assert!((&p + &p.invert_s()).is_s_symmetric());
    }

    #[test]
    fn s_times_s_inverse_is_one() {
        assert_eq!(&SYPoly::s() * &SYPoly::s_inv(), SYPoly::one());
    }
}
