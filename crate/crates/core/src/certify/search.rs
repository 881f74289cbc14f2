use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::certificate::{RootCertificate, ScanParams, TOOL_VERSION};
use super::enclosure::xn_enclosure;
use super::witness::{solve_lambda_witness, witness_plan, WitnessPlan, WitnessTarget};
use crate::error::Result;
use crate::interval::{Dyadic, DyadicInterval, Sign};
use crate::knots::Knot;
use crate::polyring::{eval_interval, XYPoly};
use crate::riley::{riley_for_knot, RileyPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanStatus {
    Certified,
    /// No bracket was found in the searched range at the precisions tried.
    /// This says nothing about whether a root exists.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchTrace {
    pub grid_step: String,
    pub max_y_reached: u64,
    pub points_evaluated: u64,
    pub precision_escalations: u32,
    pub witness: Option<String>,
    /// Why the witness was skipped, when it was.
    pub witness_note: Option<String>,
    /// Sign of `phi` observed at the first usable witness point.
    pub witness_sign: Option<Sign>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub n: u32,
    pub status: ScanStatus,
    pub certificate: Option<RootCertificate>,
    pub trace: SearchTrace,
}

impl ScanReport {
    pub fn is_certified(&self) -> bool {
        self.status == ScanStatus::Certified
    }
}

/// `phi(x_n, y)` at point arguments, with the `y` coefficients cached per
/// precision.
struct Evaluator<'a> {
    poly: &'a XYPoly,
    n: u32,
    base: u32,
    cap: u32,
    cache: BTreeMap<u32, Vec<DyadicInterval>>,
    points: u64,
    escalations: u32,
}

impl<'a> Evaluator<'a> {
    fn value(&mut self, y: &Dyadic, prec: u32) -> DyadicInterval {
        let (poly, n) = (self.poly, self.n);
        let coeffs = self
            .cache
            .entry(prec)
            .or_insert_with(|| poly.partial_eval_x(&xn_enclosure(n, prec)));
        let y = DyadicInterval::point(y.clone(), prec);
        let mut acc = DyadicInterval::from_int(0, prec);
        for c in coeffs.iter().rev() {
            acc = &(&acc * &y) + c;
        }
        acc
    }

    /// Sign at `y`, doubling the precision up to the cap while undecided.
    fn sign(&mut self, y: &Dyadic) -> Option<Sign> {
        self.points += 1;
        let mut prec = self.base;
        loop {
            if let Some(s) = self.value(y, prec).sign() {
                return Some(s);
            }
            if prec >= self.cap {
                return None;
            }
            prec = (prec * 2).min(self.cap);
            self.escalations += 1;
        }
    }
}

fn witness_points(plan: &WitnessPlan, n: u32, prec: u32, trace: &mut SearchTrace) -> Vec<Dyadic> {
    trace.witness = Some(plan.to_string());
    let enc = match &plan.target {
        WitnessTarget::LambdaLevel {
            lambda,
            j,
            d,
            at_most_one,
        } => match solve_lambda_witness(lambda, n, *j, *d, *at_most_one, prec) {
            Ok(enc) => enc,
            Err(e) => {
                trace.witness_note = Some(e.to_string());
                return Vec::new();
            }
        },
        WitnessTarget::Parabola => {
            let x = xn_enclosure(n, prec);
            &x.square() - &DyadicInterval::from_int(1, prec)
        }
    };
    vec![enc.lo().clone(), enc.hi().clone()]
}

/// Looks for a sign change of `phi(x_n, .)` on `(2, y_max_cap]` and, when
/// one is found, narrows it to a certificate.
///
/// Points are tried in this order: the witness points (if any), `2 + 2^-ceil(p/2)`,
/// the grid `2 + j 2^-grid_step_log2` up to `y_max`, then `y_max` doubled
/// up to `y_max_cap`. Each new sign-definite point is paired with the
/// closest earlier point of opposite sign.
pub fn find_root_gt2(
    phi: &RileyPolynomial,
    n: u32,
    params: &ScanParams,
    witness: Option<&WitnessPlan>,
) -> ScanReport {
    assert!(n >= 2, "n must be at least 2");
    let prec = params.precision.max(2);
    let cap = params.precision_cap.max(prec);
    let a_min = &Dyadic::from_int(2) + &Dyadic::pow2(-i64::from(prec.div_ceil(2)));
    let mut trace = SearchTrace {
        grid_step: format!("2^-{}", params.grid_step_log2),
        max_y_reached: 2,
        points_evaluated: 0,
        precision_escalations: 0,
        witness: None,
        witness_note: None,
        witness_sign: None,
    };
    let mut ev = Evaluator {
        poly: phi.poly(),
        n,
        base: prec,
        cap,
        cache: BTreeMap::new(),
        points: 0,
        escalations: 0,
    };

    let mut points: Vec<Dyadic> = Vec::new();
    let mut witness_count = 0;
    if let Some(plan) = witness {
        let found = witness_points(plan, n, prec, &mut trace);
        if !found.is_empty() && found.iter().all(|y| *y < a_min) {
            trace.witness_note = Some("witness point does not exceed 2 by the margin".into());
        }
        points.extend(found.into_iter().filter(|y| *y >= a_min));
        witness_count = points.len();
    }
    points.push(a_min.clone());
    let step = Dyadic::pow2(-i64::from(params.grid_step_log2));
    let y_max = Dyadic::from_int(params.y_max as i64);
    let mut y = &Dyadic::from_int(2) + &step;
    while y <= y_max {
        points.push(y.clone());
        y = &y + &step;
    }
    let mut far = params.y_max.saturating_mul(2);
    while far <= params.y_max_cap && far > params.y_max {
        points.push(Dyadic::from_int(far as i64));
        far = far.saturating_mul(2);
    }

    let mut seen: Vec<(Dyadic, Sign)> = Vec::new();
    let mut certificate = None;
    for (idx, y) in points.iter().enumerate() {
        trace.max_y_reached = trace.max_y_reached.max(ceil_u64(y));
        let Some(s) = ev.sign(y) else { continue };
        if idx < witness_count && trace.witness_sign.is_none() {
            trace.witness_sign = Some(s);
        }
        let partner = seen
            .iter()
            .filter(|(_, t)| *t != s)
            .min_by(|(u, _), (v, _)| (u - y).abs().cmp(&(v - y).abs()))
            .cloned();
        seen.push((y.clone(), s));
        let Some((z, t)) = partner else { continue };
        let (lo, s_lo, hi, s_hi) = if z < *y {
            (z, t, y.clone(), s)
        } else {
            (y.clone(), s, z, t)
        };
        let (lo, hi) = bisect(&mut ev, lo, s_lo, hi, prec);
        if let Some(p) = confirm(phi.poly(), n, &lo, s_lo, &hi, s_hi, prec, cap) {
            certificate = Some(RootCertificate {
                knot: phi.knot().copied(),
                presentation: phi.presentation().to_string(),
                n,
                a: lo,
                b: hi,
                sign_a: s_lo,
                sign_b: s_hi,
                precision: p,
                y_max_searched: trace.max_y_reached,
                poly_hash: phi.hash().to_string(),
                tool_version: TOOL_VERSION.to_string(),
                parameters: params.clone(),
            });
            break;
        }
    }
    trace.points_evaluated = ev.points;
    trace.precision_escalations = ev.escalations;
    ScanReport {
        n,
        status: if certificate.is_some() {
            ScanStatus::Certified
        } else {
            ScanStatus::Inconclusive
        },
        certificate,
        trace,
    }
}

fn ceil_u64(y: &Dyadic) -> u64 {
    y.to_f64().ceil() as u64
}

/// Halves `[lo, hi]` down to width `2^-prec`, keeping the sign `s_lo` at
/// `lo` and its opposite at `hi`. An undecided midpoint is replaced by a
/// quarter point; if both are undecided the current bracket is returned.
fn bisect(
    ev: &mut Evaluator<'_>,
    mut lo: Dyadic,
    s_lo: Sign,
    mut hi: Dyadic,
    prec: u32,
) -> (Dyadic, Dyadic) {
    let target = Dyadic::pow2(-i64::from(prec));
    'outer: while &hi - &lo > target {
        let mid = Dyadic::midpoint(&lo, &hi);
        let quarter = Dyadic::midpoint(&lo, &mid);
        let three = Dyadic::midpoint(&mid, &hi);
        for probe in [mid, quarter, three] {
            if let Some(s) = ev.sign(&probe) {
                if s == s_lo {
                    lo = probe;
                } else {
                    hi = probe;
                }
                continue 'outer;
            }
        }
        break;
    }
    (lo, hi)
}

/// Smallest precision from `prec` upward (doubling, up to `cap`) at which a
/// fresh evaluation reproduces both endpoint signs.
#[allow(clippy::too_many_arguments)]
fn confirm(
    poly: &XYPoly,
    n: u32,
    lo: &Dyadic,
    s_lo: Sign,
    hi: &Dyadic,
    s_hi: Sign,
    prec: u32,
    cap: u32,
) -> Option<u32> {
    let mut p = prec;
    loop {
        let x = xn_enclosure(n, p);
        let at = |y: &Dyadic| eval_interval(poly, &x, &DyadicInterval::point(y.clone(), p)).sign();
        if at(lo) == Some(s_lo) && at(hi) == Some(s_hi) {
            return Some(p);
        }
        if p >= cap {
            return None;
        }
        p = (p * 2).min(cap);
    }
}

/// Riley polynomial, witness plan and scan for one `(knot, n)`.
pub fn certify_knot(knot: &Knot, n: u32, params: &ScanParams) -> Result<ScanReport> {
    let phi = riley_for_knot(knot)?;
    let plan = witness_plan(knot);
    Ok(find_root_gt2(&phi, n, params, plan.as_ref()))
}

/// Independent scans for every `n` in `2..=n_max`, run in parallel.
pub fn lo_set(knot: &Knot, n_max: u32, params: &ScanParams) -> Result<BTreeMap<u32, ScanReport>> {
    let phi = riley_for_knot(knot)?;
    let plan = witness_plan(knot);
    Ok((2..=n_max)
        .into_par_iter()
        .map(|n| (n, find_root_gt2(&phi, n, params, plan.as_ref())))
        .collect())
}
