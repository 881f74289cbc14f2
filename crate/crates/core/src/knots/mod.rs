//! Two-bridge knots: fractions, sign sequences and the relator words the
//! Riley engines consume.

mod fraction;
mod signs;
mod word;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use fraction::{kl_fraction, DoubleTwistKnot, KlKnot, TwoBridgeFraction};
pub use signs::{
    expand, hm_chain, hm_reduce, run_length, sign_sequence, sign_sequence_raw, Reduction, RunSeq,
    SignSequence,
};
pub use word::{
    double_twist_word, kl_block_c, kl_block_d, word_double_twist, word_from_signs, word_kl,
    Generator, Letter, Word,
};

use crate::error::{Error, Result};

/// Knot descriptor with text form `J:k,m`, `Kl:l` or `p/q`.
///
/// `J:k,m` names `J(2k+1, 2m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Knot {
    DoubleTwist(DoubleTwistKnot),
    Kl(KlKnot),
    Fraction(TwoBridgeFraction),
}

impl fmt::Display for Knot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Knot::DoubleTwist(j) => write!(f, "J:{},{}", j.k(), j.m()),
            Knot::Kl(k) => write!(f, "Kl:{}", k.l()),
            Knot::Fraction(fr) => write!(f, "{fr}"),
        }
    }
}

impl FromStr for Knot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let int = |t: &str| -> Result<i64> {
            t.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {t:?} in knot {s:?}")))
        };
        if let Some(rest) = s.strip_prefix("J:") {
            let (k, m) = rest
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected J:k,m, got {s:?}")))?;
            let k = u32::try_from(int(k)?)
                .map_err(|_| Error::InvalidKnot(format!("{s}: k must be positive")))?;
            return Ok(Knot::DoubleTwist(DoubleTwistKnot::new(k, int(m)?)?));
        }
        if let Some(rest) = s.strip_prefix("Kl:") {
            let l = u32::try_from(int(rest)?)
                .map_err(|_| Error::InvalidKnot(format!("{s}: l must be positive")))?;
            return Ok(Knot::Kl(KlKnot::new(l)?));
        }
        if s.contains('/') {
            return Ok(Knot::Fraction(s.parse()?));
        }
        Err(Error::Parse(format!(
            "unrecognized knot {s:?}; expected J:k,m, Kl:l or p/q"
        )))
    }
}

impl Serialize for Knot {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Knot {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
