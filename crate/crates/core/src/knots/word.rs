use std::fmt;
use std::str::FromStr;

use super::fraction::{DoubleTwistKnot, KlKnot};
use super::signs::SignSequence;
use crate::error::{Error, Result};
use crate::interval::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A,
    B,
}

/// One syllable `g^e`, `e != 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Generator,
    pub exp: i64,
}

/// Word in `a`, `b`, with neighbouring syllables on the same generator
/// merged and zero exponents removed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = Word::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: Letter) {
        if l.exp == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.gen == l.gen {
                last.exp += l.exp;
                if last.exp == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push(l);
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of unit letters, i.e. the sum of `|exp|`.
    pub fn letter_count(&self) -> u64 {
        self.letters.iter().map(|l| l.exp.unsigned_abs()).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn repeat(&self, times: usize) -> Word {
        let mut w = Word::empty();
        for _ in 0..times {
            w = w.concat(self);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word::from_letters(self.letters.iter().rev().map(|l| Letter {
            gen: l.gen,
            exp: -l.exp,
        }))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            let c = match (l.gen, l.exp > 0) {
                (Generator::A, true) => 'a',
                (Generator::A, false) => 'A',
                (Generator::B, true) => 'b',
                (Generator::B, false) => 'B',
            };
            for _ in 0..l.exp.unsigned_abs() {
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| {
                let (gen, exp) = match c {
                    'a' => (Generator::A, 1),
                    'A' => (Generator::A, -1),
                    'b' => (Generator::B, 1),
                    'B' => (Generator::B, -1),
                    _ => {
                        return Err(Error::InvalidWord(format!(
                            "unexpected letter {c:?} in {s:?}"
                        )))
                    }
                };
                Ok(Letter { gen, exp })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::from_letters(letters))
    }
}

/// `a^{e_1} b^{e_2} a^{e_3} ...`
pub fn word_from_signs(seq: &SignSequence) -> Word {
    Word::from_letters(seq.signs().iter().enumerate().map(|(i, s)| Letter {
        gen: if i % 2 == 0 {
            Generator::A
        } else {
            Generator::B
        },
        exp: match s {
            Sign::Positive => 1,
            Sign::Negative => -1,
        },
    }))
}

/// `(b a^-1)^k b a (b^-1 a)^k`.
pub fn double_twist_word(k: u32) -> Word {
    let left: Word = "bA".parse().expect("literal word");
    let right: Word = "Ba".parse().expect("literal word");
    let mid: Word = "ba".parse().expect("literal word");
    left.repeat(k as usize)
        .concat(&mid)
        .concat(&right.repeat(k as usize))
}

/// The word `w` of the relator `w^m a = b w^m`, with the exponent `m`.
pub fn word_double_twist(knot: &DoubleTwistKnot) -> (Word, i64) {
    (double_twist_word(knot.k()), knot.m())
}

pub fn kl_block_c() -> Word {
    "abABabaBAb".parse().expect("literal word")
}

pub fn kl_block_d() -> Word {
    "abABab".parse().expect("literal word")
}

/// `c^(l-1) d`.
pub fn word_kl(knot: &KlKnot) -> Word {
    kl_block_c()
        .repeat(knot.l() as usize - 1)
        .concat(&kl_block_d())
}
