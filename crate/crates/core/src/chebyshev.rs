//! The polynomials `S_n(z)` defined by `S_0 = 1`, `S_1 = z` and
//! `S_{n+1} = z S_n - S_{n-1}`, with the matrix-power and linear-recurrence
//! identities built on them.
//!
//! Indices are `u32`; negative indices are not part of this module.

use crate::certify::two_cos_pi_frac;
use crate::error::{Error, Result};
use crate::interval::{Dyadic, DyadicInterval};
use crate::polyring::{Mat2, Ring, UniPoly};

/// Exact coefficients of `S_n`.
pub fn cheb_poly(n: u32) -> UniPoly {
    let z = UniPoly::var();
    let mut prev = UniPoly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = z.clone();
    for _ in 1..n {
        let next = &(&z * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `S_n(t)` by the three-term recurrence, in any ring.
pub fn cheb_eval<R: Ring>(n: u32, t: &R) -> R {
    cheb_pair(n, t).1
}

/// `(S_{n-1}(t), S_n(t))`, with `S_{-1} = 0` for `n = 0`.
pub fn cheb_pair<R: Ring>(n: u32, t: &R) -> (R, R) {
    let mut prev = t.zero_like();
    let mut cur = t.one_like();
    for _ in 0..n {
        let next = t.ring_mul(&cur).ring_sub(&prev);
        prev = cur;
        cur = next;
    }
    (prev, cur)
}

/// Disjoint enclosures of the `n` roots `2cos(k pi / (n+1))` of `S_n`, in
/// ascending order, each of width at most `2^-precision`.
///
/// Every enclosure is checked by an exact sign change of `S_n` at its
/// endpoints.
pub fn cheb_root_enclosures(n: u32, precision: u32) -> Vec<DyadicInterval> {
    assert!(n >= 1, "S_0 has no roots");
    let pad = Dyadic::pow2(-(i64::from(precision) + 2));
    let mut out: Vec<DyadicInterval> = Vec::with_capacity(n as usize);
    for k in (1..=n).rev() {
        let enc = two_cos_pi_frac(u64::from(k), u64::from(n) + 1, precision + 2).widen(&pad);
        let s_lo = cheb_eval(n, enc.lo()).signum();
        let s_hi = cheb_eval(n, enc.hi()).signum();
        assert!(
            s_lo * s_hi == -1,
            "no certified sign change of S_{n} around root {k}"
        );
        if let Some(prev) = out.last() {
            assert!(prev.hi() < enc.lo(), "root enclosures of S_{n} overlap");
        }
        out.push(enc.with_prec(precision));
    }
    out
}

/// `M^n` for a unimodular `M`, via `M^n = S_n(tr M) I - S_{n-1}(tr M) M^-1`.
///
/// Negative `n` powers the adjugate; `n = 0` gives the identity.
pub fn sl2_power<R: Ring + PartialEq>(m: &Mat2<R>, n: i64) -> Result<Mat2<R>> {
    let one = m.m[0][0].one_like();
    if m.det() != one {
        return Err(Error::NotUnimodular);
    }
    let inv = m.adjugate();
    let (base, base_inv, k) = if n >= 0 {
        (m, &inv, n as u64)
    } else {
        (&inv, m, n.unsigned_abs())
    };
    if k == 0 {
        return Ok(Mat2::identity_like(&one));
    }
    let k = u32::try_from(k).expect("matrix power exponent fits in u32");
    let (s_prev, s_cur) = cheb_pair(k, &base.trace());
    let id = Mat2::identity_like(&one);
    Ok(id.scale(&s_cur).sub(&base_inv.scale(&s_prev)))
}

/// Term `a_{n+1}` of `a_{j+1} = c a_j - a_{j-1}`, as
/// `S_n(c) a_1 - S_{n-1}(c) a_0`.
pub fn solve_recurrence<R: Ring>(a0: &R, a1: &R, c: &R, n: u32) -> R {
    let (s_prev, s_cur) = cheb_pair(n, c);
    s_cur.ring_mul(a1).ring_sub(&s_prev.ring_mul(a0))
}
