use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Fraction `p/q` of a two-bridge knot, held in the normal form
/// `0 < q < p`, both odd and coprime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoBridgeFraction {
    p: u64,
    q: u64,
}

impl TwoBridgeFraction {
    /// Validates and normalizes. `q` is reduced modulo `2p`, which leaves the
    /// sign sequence unchanged; residues landing in `(p, 2p)` describe the
    /// mirror image and are rejected.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        let bad = |reason| Err(Error::InvalidFraction { p, q, reason });
        if p < 3 {
            return bad("p must be at least 3");
        }
        if p % 2 == 0 {
            return bad("p must be odd");
        }
        if q.gcd(&p) != 1 {
            return bad("p and q must be coprime");
        }
        let r = q.rem_euclid(2 * p);
        if r > p {
            return bad("q mod 2p must lie in (0, p)");
        }
        if r % 2 == 0 {
            return bad("q must be odd");
        }
        Ok(TwoBridgeFraction {
            p: p as u64,
            q: r as u64,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

impl fmt::Display for TwoBridgeFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for TwoBridgeFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected p/q, got {s:?}")))?;
        let p: i64 = p
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let q: i64 = q
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        TwoBridgeFraction::new(p, q)
    }
}

/// Double-twist knot `J(2k+1, 2m)` with `k >= 1`, `|m| >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DoubleTwistKnot {
    k: u32,
    m: i64,
}

impl DoubleTwistKnot {
    pub fn new(k: u32, m: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidKnot(format!("J:{k},{m} needs k >= 1")));
        }
        if m.abs() < 2 {
            return Err(Error::InvalidKnot(format!("J:{k},{m} needs |m| >= 2")));
        }
        Ok(DoubleTwistKnot { k, m })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> i64 {
        self.m
    }
}

/// Member `K_l`, `l >= 2`, of the family with fractions
/// `(10(l-1)+7) / (4(l-1)+3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KlKnot {
    l: u32,
}

impl KlKnot {
    pub fn new(l: u32) -> Result<Self> {
        if l < 2 {
            return Err(Error::InvalidKnot(format!("Kl:{l} needs l >= 2")));
        }
        Ok(KlKnot { l })
    }

    pub fn l(&self) -> u32 {
        self.l
    }
}

pub fn kl_fraction(knot: &KlKnot) -> TwoBridgeFraction {
    let t = i64::from(knot.l) - 1;
    TwoBridgeFraction::new(10 * t + 7, 4 * t + 3).expect("family fractions are valid")
}
