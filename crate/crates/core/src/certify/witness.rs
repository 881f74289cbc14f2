use std::fmt;

use super::enclosure::{two_cos_le, two_cos_pi_frac, xn_enclosure};
use crate::error::{Error, Result};
use crate::interval::{Dyadic, DyadicInterval, Sign};
use crate::knots::Knot;
use crate::polyring::{eval_interval, XYPoly};
use crate::riley::{kl_named_polys, lambda_dt};

/// Where to look for a point of known sign before the grid scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessTarget {
    /// A `y_c >= 2` with `lambda(x_n, y_c) = 2cos(j pi / d)`.
    LambdaLevel {
        lambda: XYPoly,
        j: u64,
        d: u64,
        /// The level must also be at most 1.
        at_most_one: bool,
    },
    /// `y = x_n^2 - 1`.
    Parabola,
}

/// A witness target with the sign `phi` is expected to take there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPlan {
    pub target: WitnessTarget,
    pub expected_sign: Sign,
}

impl fmt::Display for WitnessPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.target {
            WitnessTarget::LambdaLevel { j, d, .. } => {
                write!(f, "lambda(x_n, y) = 2cos({j}pi/{d})")?
            }
            WitnessTarget::Parabola => f.write_str("y = x_n^2 - 1")?,
        }
        write!(f, ", expected sign {}", self.expected_sign)
    }
}

/// Witness plan for the families that have one.
///
/// `J(2k+1, 2m)`: for `m >= 3` the level `2cos((m-2)pi/(m-1))`, a root of
/// `S_{m-2}`; for `m <= -2` the level `2cos((|m|-1)pi/|m|)`. `K_l`: for
/// `l >= 3` the level `2cos((l-2)pi/(l-1))`, for `l = 2` the parabola
/// `y = x^2 - 1`, where `phi = -1`.
pub fn witness_plan(knot: &Knot) -> Option<WitnessPlan> {
    match knot {
        Knot::DoubleTwist(jk) => {
            let m = jk.m();
            let lambda = lambda_dt(jk.k());
            if m >= 3 {
                Some(WitnessPlan {
                    target: WitnessTarget::LambdaLevel {
                        lambda,
                        j: m as u64 - 2,
                        d: m as u64 - 1,
                        at_most_one: false,
                    },
                    expected_sign: Sign::parity(m),
                })
            } else if m <= -2 {
                let a = m.unsigned_abs();
                Some(WitnessPlan {
                    target: WitnessTarget::LambdaLevel {
                        lambda,
                        j: a - 1,
                        d: a,
                        at_most_one: false,
                    },
                    expected_sign: Sign::parity(a as i64 + 1),
                })
            } else {
                None
            }
        }
        Knot::Kl(kl) => {
            let l = kl.l();
            if l >= 3 {
                Some(WitnessPlan {
                    target: WitnessTarget::LambdaLevel {
                        lambda: kl_named_polys().lambda,
                        j: u64::from(l) - 2,
                        d: u64::from(l) - 1,
                        at_most_one: true,
                    },
                    expected_sign: Sign::parity(i64::from(l) - 1),
                })
            } else {
                Some(WitnessPlan {
                    target: WitnessTarget::Parabola,
                    expected_sign: Sign::Negative,
                })
            }
        }
        Knot::Fraction(_) => None,
    }
}

/// Enclosure `[lo, hi]` of a `y_c >= 2` with `lambda(x_n, y_c) = c`,
/// `c = 2cos(j pi / d)`.
///
/// The precondition `c <= x_n^2 - 2 = 2cos(2pi/n)` (and `c <= 1` when asked)
/// is decided exactly on the angles. `lambda(x, 2) = x^2 - 2 >= c` anchors
/// the left end; the right end is found by doubling `y` until
/// `lambda(x_n, y) < c` is certain. Bisection stops at width
/// `2^-precision` or at the first undecided midpoint.
pub fn solve_lambda_witness(
    lambda: &XYPoly,
    n: u32,
    j: u64,
    d: u64,
    at_most_one: bool,
    precision: u32,
) -> Result<DyadicInterval> {
    if n < 2 {
        return Err(Error::WitnessInapplicable(format!("n = {n} is below 2")));
    }
    if !two_cos_le(j, d, 2, u64::from(n)) {
        return Err(Error::WitnessInapplicable(format!(
            "2cos({j}pi/{d}) exceeds x_{n}^2 - 2"
        )));
    }
    if at_most_one && !two_cos_le(j, d, 1, 3) {
        return Err(Error::WitnessInapplicable(format!(
            "2cos({j}pi/{d}) exceeds 1"
        )));
    }
    let x = xn_enclosure(n, precision);
    let c = two_cos_pi_frac(j, d, precision);
    let g = |y: &Dyadic| {
        let v = eval_interval(lambda, &x, &DyadicInterval::point(y.clone(), precision));
        &v - &c
    };
    let mut lo = Dyadic::from_int(2);
    let mut hi = Dyadic::from_int(4);
    loop {
        let v = g(&hi);
        if v.is_negative() {
            break;
        }
        if v.is_positive() {
            lo = hi.clone();
        }
        if hi.bits() > 64 {
            return Err(Error::PreconditionUnverifiable);
        }
        hi = hi.mul_pow2(1);
    }
    let target = Dyadic::pow2(-i64::from(precision));
    while &hi - &lo > target {
        let mid = Dyadic::midpoint(&lo, &hi);
        let v = g(&mid);
        if v.is_positive() {
            lo = mid;
        } else if v.is_negative() {
            hi = mid;
        } else {
            break;
        }
    }
    Ok(DyadicInterval::new(lo, hi, precision))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_level_sits_at_two() {
        // m = 3, n = 4: c = 0 = x_4^2 - 2
        let enc = solve_lambda_witness(&lambda_dt(1), 4, 1, 2, false, 64).unwrap();
        assert_eq!(enc.lo(), &Dyadic::from_int(2));
    }

    #[test]
    fn level_minus_one_at_n_three() {
        let lam = lambda_dt(1);
        // c = -1 = x_3^2 - 2 is again a boundary level
        let enc = solve_lambda_witness(&lam, 3, 2, 3, false, 64).unwrap();
        assert!(enc.lo() >= &Dyadic::from_int(2));
        let x = xn_enclosure(3, 64);
        let v = eval_interval(&lam, &x, &enc.with_prec(64));
        assert!(v.contains(&Dyadic::from_int(-1)));
    }

    #[test]
    fn inapplicable_levels() {
        // m = 3 at n = 3: c = 0 > x_3^2 - 2 = -1
        assert!(matches!(
            solve_lambda_witness(&lambda_dt(1), 3, 1, 2, false, 64),
            Err(Error::WitnessInapplicable(_))
        ));
        let kl = kl_named_polys().lambda;
        assert!(solve_lambda_witness(&kl, 4, 1, 2, true, 64).is_ok());
        assert!(solve_lambda_witness(&kl, 3, 1, 2, true, 64).is_err());
    }
}
