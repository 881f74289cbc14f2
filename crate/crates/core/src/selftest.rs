//! Exact identity checks runnable from the command line.

use num_bigint::BigInt;
use serde::Serialize;

use crate::chebyshev::{cheb_eval, cheb_poly, cheb_root_enclosures};
use crate::knots::{
    double_twist_word, expand, hm_reduce, kl_fraction, run_length, sign_sequence,
    sign_sequence_raw, word_from_signs, word_kl, KlKnot, TwoBridgeFraction,
};
use crate::polyring::{UniPoly, XYPoly};
use crate::riley::{
    check_relator_structure, kl_alpha_derivative_check, kl_compose, kl_named_polys,
    kl_polys_from_words, relator_matrix, riley_double_twist, riley_generic, KlPolys,
};

#[derive(Clone, Copy, Debug, Default)]
pub struct SelftestOptions {
    /// Only the Chebyshev and sign-sequence checks.
    pub quick: bool,
    /// Perturb the constant term of the `K_l` lambda before the checks that
    /// use it.
    pub corrupt_kl_lambda: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub checks: Vec<CheckResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(name: &str, f: impl FnOnce() -> Result<(), String>) -> CheckResult {
    let outcome = f();
    CheckResult {
        name: name.to_string(),
        passed: outcome.is_ok(),
        detail: outcome.err().unwrap_or_default(),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn run_selftest(opts: SelftestOptions) -> SelftestReport {
    let mut checks = vec![
        check("chebyshev values at +-2", || {
            for n in 0..=200u32 {
                let v = cheb_eval(n, &BigInt::from(2));
                ensure(v == BigInt::from(n + 1), || format!("S_{n}(2) = {v}"))?;
                let w = cheb_eval(n, &BigInt::from(-2));
                let sign = if n % 2 == 0 { 1 } else { -1 };
                ensure(w == BigInt::from(sign * (i64::from(n) + 1)), || {
                    format!("S_{n}(-2) = {w}")
                })?;
            }
            Ok(())
        }),
        check("chebyshev against second-kind polynomials", || {
            let two_z = UniPoly::from_i64s(&[0, 2]);
            let (mut prev, mut cur) = (UniPoly::one(), two_z.clone());
            for n in 1..=20u32 {
                ensure(cheb_poly(n).scale_arg(2) == cur, || format!("n = {n}"))?;
                let next = &(&two_z * &cur) - &prev;
                prev = cur;
                cur = next;
            }
            Ok(())
        }),
        check("chebyshev root enclosures", || {
            for n in 1..=16u32 {
                ensure(cheb_root_enclosures(n, 64).len() == n as usize, || {
                    format!("n = {n}")
                })?;
            }
            Ok(())
        }),
        check("sign sequences of the K_l fractions", || {
            for s in 1..=50i64 {
                let f = TwoBridgeFraction::new(10 * s + 7, 4 * s + 3).map_err(|e| e.to_string())?;
                let mut runs = vec![2, -2];
                for _ in 0..2 * s {
                    runs.extend([3, -2]);
                }
                runs.push(2);
                ensure(
                    run_length(&sign_sequence(&f)).runs() == runs.as_slice(),
                    || format!("s = {s}"),
                )?;
            }
            Ok(())
        }),
        check("reduction against the modular oracle", || {
            for p in (3..200u64).step_by(2) {
                for q in (1..p).step_by(2) {
                    let Ok(f) = TwoBridgeFraction::new(p as i64, q as i64) else {
                        continue;
                    };
                    if p / q < 2 {
                        continue;
                    }
                    let rs = run_length(&sign_sequence(&f));
                    let red = hm_reduce(&rs, p, q).map_err(|e| e.to_string())?;
                    let oracle =
                        sign_sequence_raw(p - 2 * q, q as i64).map_err(|e| e.to_string())?;
                    ensure(expand(&red.runs) == oracle, || format!("{p}/{q}"))?;
                }
            }
            Ok(())
        }),
        check("family words from sign sequences", || {
            for l in 2..=8 {
                let k = KlKnot::new(l).map_err(|e| e.to_string())?;
                let synth = word_from_signs(&sign_sequence(&kl_fraction(&k)));
                ensure(word_kl(&k) == synth, || format!("l = {l}"))?;
            }
            Ok(())
        }),
    ];
    if opts.quick {
        return SelftestReport { checks };
    }

    let mut kl = kl_named_polys();
    if opts.corrupt_kl_lambda {
        kl.lambda = &kl.lambda + &XYPoly::one();
    }
    checks.push(check("double-twist engines agree", || {
        for k in 1..=4 {
            for m in [-4, -3, -2, 2, 3, 4] {
                let g = riley_generic(&double_twist_word(k), Some(m)).map_err(|e| e.to_string())?;
                let c = riley_double_twist(k, m).map_err(|e| e.to_string())?;
                ensure(g.poly() == c.poly(), || format!("k = {k}, m = {m}"))?;
            }
        }
        Ok(())
    }));
    checks.push(check("K_l engines agree", || kl_engines_agree(&kl)));
    checks.push(check("K_l named polynomials match the words", || {
        let from_words = kl_polys_from_words().map_err(|e| e.to_string())?;
        ensure(from_words == kl, || "lambda, alpha or beta differs".into())
    }));
    checks.push(check("K_l identities", || {
        let parabola = XYPoly::from_i64_terms(&[(2, 0, 1), (0, 0, -1)]);
        let x2m2 = XYPoly::from_i64_terms(&[(2, 0, 1), (0, 0, -2)]);
        ensure(
            kl.alpha.substitute_y(&parabola) == XYPoly::from_i64(-1),
            || "alpha(x, x^2 - 1) != -1".into(),
        )?;
        ensure(kl.lambda.substitute_y(&XYPoly::from_i64(2)) == x2m2, || {
            "lambda(x, 2) != x^2 - 2".into()
        })?;
        ensure(kl.lambda.substitute_y(&parabola) == XYPoly::one(), || {
            "lambda(x, x^2 - 1) != 1".into()
        })?;
        ensure(kl_alpha_derivative_check().passed(), || {
            "derivative identity".into()
        })
    }));
    checks.push(check("relator matrix structure", || {
        for k in 1..=4 {
            for m in [-4, -3, -2, 2, 3, 4] {
                let r =
                    relator_matrix(&double_twist_word(k), Some(m)).map_err(|e| e.to_string())?;
                check_relator_structure(&r).map_err(|e| format!("k = {k}, m = {m}: {e}"))?;
            }
        }
        for l in 2..=6 {
            let w = word_kl(&KlKnot::new(l).map_err(|e| e.to_string())?);
            let r = relator_matrix(&w, None).map_err(|e| e.to_string())?;
            check_relator_structure(&r).map_err(|e| format!("l = {l}: {e}"))?;
        }
        Ok(())
    }));
    SelftestReport { checks }
}

fn kl_engines_agree(kl: &KlPolys) -> Result<(), String> {
    for l in 2..=6 {
        let w = word_kl(&KlKnot::new(l).map_err(|e| e.to_string())?);
        let g = riley_generic(&w, None).map_err(|e| e.to_string())?;
        ensure(*g.poly() == kl_compose(l, kl), || format!("l = {l}"))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes() {
        let r = run_selftest(SelftestOptions {
            quick: true,
            corrupt_kl_lambda: false,
        });
        assert!(r.passed(), "{:?}", r.checks);
        assert_eq!(r.checks.len(), 6);
    }
}
