use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::fraction::TwoBridgeFraction;
use crate::error::{Error, Result};
use crate::interval::Sign;

/// The signs `e_1, ..., e_{p-1}` of a fraction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignSequence {
    signs: Vec<Sign>,
}

impl SignSequence {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignSequence { signs }
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            f.write_str(s.symbol())?;
        }
        Ok(())
    }
}

/// `e_i` is the sign of the representative of `i q` mod `2p` in `(-p, p)`.
pub fn sign_sequence(f: &TwoBridgeFraction) -> SignSequence {
    sign_sequence_raw(f.p(), f.q() as i64).expect("normalized fraction")
}

/// Same rule for any `p >= 1` and `q` coprime to `p`, without the
/// normalization of [`TwoBridgeFraction`].
pub fn sign_sequence_raw(p: u64, q: i64) -> Result<SignSequence> {
    let pi = i64::try_from(p).map_err(|_| Error::Parse(format!("p = {p} too large")))?;
    if p == 0 || q.gcd(&pi) != 1 {
        return Err(Error::InvalidFraction {
            p: pi,
            q,
            reason: "p must be positive and coprime to q",
        });
    }
    let modulus = 2 * i128::from(pi);
    let signs = (1..i128::from(pi))
        .map(|i| {
            let r = (i * i128::from(q)).rem_euclid(modulus);
            if r < i128::from(pi) {
                Sign::Positive
            } else {
                Sign::Negative
            }
        })
        .collect();
    Ok(SignSequence { signs })
}

/// Run-length form `<c1><-c2>...`: nonzero signed lengths alternating in sign.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RunSeq {
    runs: Vec<i64>,
}

impl RunSeq {
    pub fn new(runs: Vec<i64>) -> Result<Self> {
        if runs.contains(&0) {
            return Err(Error::InvalidRunSeq("zero-length run".into()));
        }
        if runs.windows(2).any(|w| (w[0] > 0) == (w[1] > 0)) {
            return Err(Error::InvalidRunSeq("runs must alternate in sign".into()));
        }
        Ok(RunSeq { runs })
    }

    pub fn runs(&self) -> &[i64] {
        &self.runs
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Sum of the run magnitudes.
    pub fn total(&self) -> u64 {
        self.runs.iter().map(|c| c.unsigned_abs()).sum()
    }
}

impl fmt::Display for RunSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.runs {
            write!(f, "<{c}>")?;
        }
        Ok(())
    }
}

impl FromStr for RunSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut runs = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('<')
                .and_then(|r| r.split_once('>'))
                .ok_or_else(|| Error::Parse(format!("malformed run sequence {s:?}")))?;
            let c: i64 = body
                .0
                .parse()
                .map_err(|_| Error::Parse(format!("bad run {:?}", body.0)))?;
            runs.push(c);
            rest = body.1;
        }
        RunSeq::new(runs)
    }
}

pub fn run_length(seq: &SignSequence) -> RunSeq {
    let mut runs: Vec<i64> = Vec::new();
    for s in seq.signs() {
        let step = match s {
            Sign::Positive => 1,
            Sign::Negative => -1,
        };
        match runs.last_mut() {
            Some(last) if (*last > 0) == (step > 0) => *last += step,
            _ => runs.push(step),
        }
    }
    RunSeq { runs }
}

pub fn expand(rs: &RunSeq) -> SignSequence {
    let mut signs = Vec::with_capacity(rs.total() as usize);
    for &c in rs.runs() {
        let s = if c > 0 {
            Sign::Positive
        } else {
            Sign::Negative
        };
        signs.extend(std::iter::repeat_n(s, c.unsigned_abs() as usize));
    }
    SignSequence { signs }
}

/// Outcome of one reduction step on the runs of `S(p, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub runs: RunSeq,
    /// Numerator `p - 2q` of the reduced fraction.
    pub p: u64,
    pub q: u64,
    /// Set when the result is empty or a single run.
    pub degenerate: bool,
}

/// Subtracts 2 from every run magnitude, drops the runs that vanish and
/// merges the same-sign neighbours this creates.
///
/// `rs` is expected to be the run form of `S(p, q)`; the step needs
/// `floor(p/q) >= 2`.
pub fn hm_reduce(rs: &RunSeq, p: u64, q: u64) -> Result<Reduction> {
    if q == 0 || p / q < 2 {
        return Err(Error::ReductionInapplicable { p, q });
    }
    let mut out: Vec<i64> = Vec::with_capacity(rs.len());
    for &c in rs.runs() {
        let mag = c.unsigned_abs();
        if mag < 2 {
            return Err(Error::InvalidRunSeq(format!(
                "run {c} is shorter than 2; not the run form of S({p},{q})"
            )));
        }
        let left = (mag - 2) as i64;
        if left == 0 {
            continue;
        }
        let signed = if c > 0 { left } else { -left };
        match out.last_mut() {
            Some(last) if (*last > 0) == (signed > 0) => *last += signed,
            _ => out.push(signed),
        }
    }
    let degenerate = out.len() <= 1;
    Ok(Reduction {
        runs: RunSeq { runs: out },
        p: p - 2 * q,
        q,
        degenerate,
    })
}

/// Repeated reduction from `S(p, q)` while the step applies and the result
/// is not degenerate.
pub fn hm_chain(f: &TwoBridgeFraction) -> Vec<Reduction> {
    let mut chain = Vec::new();
    let mut rs = run_length(&sign_sequence(f));
    let (mut p, q) = (f.p(), f.q());
    while let Ok(step) = hm_reduce(&rs, p, q) {
        let stop = step.degenerate;
        rs = step.runs.clone();
        p = step.p;
        chain.push(step);
        if stop {
            break;
        }
    }
    chain
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(p: i64, q: i64) -> SignSequence {
        sign_sequence(&TwoBridgeFraction::new(p, q).unwrap())
    }

    #[test]
    fn small_sequences() {
        assert_eq!(seq(5, 3).to_string(), "+--+");
        assert_eq!(run_length(&seq(7, 3)).to_string(), "<2><-2><2>");
        assert_eq!(
            run_length(&seq(17, 7)).to_string(),
            "<2><-2><3><-2><3><-2><2>"
        );
    }

    #[test]
    fn run_text_round_trip() {
        let rs: RunSeq = "<2><-2><3>".parse().unwrap();
        assert_eq!(rs.runs(), &[2, -2, 3]);
        assert_eq!(rs.to_string(), "<2><-2><3>");
        assert!("<2><3>".parse::<RunSeq>().is_err());
        assert!("<2><0>".parse::<RunSeq>().is_err());
        assert!("<2".parse::<RunSeq>().is_err());
        let single = run_length(&SignSequence::new(vec![Sign::Positive]));
        assert_eq!(single.to_string(), "<1>");
    }

    #[test]
    fn reduction_of_family_member() {
        let rs = run_length(&seq(17, 7));
        let red = hm_reduce(&rs, 17, 7).unwrap();
        assert_eq!(red.runs.to_string(), "<2>");
        assert!(red.degenerate);
        assert_eq!(expand(&red.runs), sign_sequence_raw(3, 7).unwrap());
    }

    #[test]
    fn reduction_to_empty() {
        let rs = run_length(&seq(7, 3));
        let red = hm_reduce(&rs, 7, 3).unwrap();
        assert!(red.runs.is_empty());
        assert!(red.degenerate);
        assert!(sign_sequence_raw(1, 3).unwrap().is_empty());
    }

    #[test]
    fn reduction_inapplicable() {
        let rs = run_length(&seq(5, 3));
        assert_eq!(
            hm_reduce(&rs, 5, 3),
            Err(Error::ReductionInapplicable { p: 5, q: 3 })
        );
    }
}
