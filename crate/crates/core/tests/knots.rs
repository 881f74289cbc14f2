use num_integer::Integer;
use proptest::prelude::*;

use riley_lo::interval::Sign;
use riley_lo::knots::{
    expand, hm_chain, hm_reduce, kl_fraction, run_length, sign_sequence, sign_sequence_raw,
    word_from_signs, word_kl, DoubleTwistKnot, KlKnot, Knot, RunSeq, TwoBridgeFraction,
};
use riley_lo::Error;

// Independent of the library: the sign of the residue of i*q in (-p, p),
// computed through floor division.
fn oracle_signs(p: i64, q: i64) -> Vec<bool> {
    (1..p)
        .map(|i| {
            let t = i * q;
            let k = Integer::div_floor(&(t + p), &(2 * p));
            let r = t - 2 * p * k;
            assert!(-p <= r && r < p);
            r > 0
        })
        .collect()
}

fn as_bools(s: &[Sign]) -> Vec<bool> {
    s.iter().map(|s| *s == Sign::Positive).collect()
}

fn fraction() -> impl Strategy<Value = TwoBridgeFraction> {
    (1i64..500, 0i64..1000).prop_filter_map("not a normalized fraction", |(h, q)| {
        TwoBridgeFraction::new(2 * h + 1, q).ok()
    })
}

#[test]
fn family_fraction_runs() {
    for s in 1..=60i64 {
        let f = TwoBridgeFraction::new(10 * s + 7, 4 * s + 3).unwrap();
        let mut expect = String::from("<2><-2>");
        for _ in 0..2 * s {
            expect.push_str("<3><-2>");
        }
        expect.push_str("<2>");
        assert_eq!(run_length(&sign_sequence(&f)).to_string(), expect);
    }
}

#[test]
fn kl_knots_map_to_family_fractions() {
    for l in 2..=10u32 {
        let f = kl_fraction(&KlKnot::new(l).unwrap());
        let s = i64::from(l) - 1;
        assert_eq!((f.p(), f.q()), ((10 * s + 7) as u64, (4 * s + 3) as u64));
        let synth = word_from_signs(&sign_sequence(&f));
        assert_eq!(word_kl(&KlKnot::new(l).unwrap()), synth, "l={l}");
    }
}

#[test]
fn fraction_validation() {
    assert!(TwoBridgeFraction::new(7, 3).is_ok());
    assert!(TwoBridgeFraction::new(8, 3).is_err());
    assert!(TwoBridgeFraction::new(9, 3).is_err());
    assert!(TwoBridgeFraction::new(7, 2).is_err());
    assert!(TwoBridgeFraction::new(1, 1).is_err());
    assert!(DoubleTwistKnot::new(0, 2).is_err());
    assert!(DoubleTwistKnot::new(1, 1).is_err());
    assert!(DoubleTwistKnot::new(1, -1).is_err());
    assert!(KlKnot::new(1).is_err());
    for bad in ["J:1", "J:a,2", "Kl:", "K:3", "7/", "J:1,0"] {
        assert!(bad.parse::<Knot>().is_err(), "{bad}");
    }
}

#[test]
fn reduction_of_small_fractions() {
    let f = TwoBridgeFraction::new(17, 7).unwrap();
    let chain = hm_chain(&f);
    assert_eq!(chain.len(), 1);
    assert_eq!(chain[0].runs.to_string(), "<2>");
    assert_eq!((chain[0].p, chain[0].q), (3, 7));

    let f = TwoBridgeFraction::new(7, 3).unwrap();
    let chain = hm_chain(&f);
    assert!(chain[0].runs.is_empty() && chain[0].degenerate);

    let rs: RunSeq = "<2><-1><2>".parse().unwrap();
    assert!(matches!(hm_reduce(&rs, 9, 1), Err(Error::InvalidRunSeq(_))));
    assert!(matches!(
        hm_reduce(&rs, 5, 3),
        Err(Error::ReductionInapplicable { .. })
    ));
}

#[test]
fn last_sign_positive_below_500() {
    for p in (3..500i64).step_by(2) {
        for q in 1..p {
            if let Ok(f) = TwoBridgeFraction::new(p, q) {
                assert_eq!(
                    sign_sequence(&f).signs().last(),
                    Some(&Sign::Positive),
                    "{p}/{q}"
                );
            }
        }
    }
}

#[test]
fn reduction_matches_oracle_exhaustively_below_200() {
    for p in (3..200i64).step_by(2) {
        for q in (1..p).step_by(2) {
            if q.gcd(&p) != 1 || p / q < 2 {
                continue;
            }
            let f = TwoBridgeFraction::new(p, q).unwrap();
            let red = hm_reduce(&run_length(&sign_sequence(&f)), p as u64, q as u64).unwrap();
            assert_eq!(
                as_bools(expand(&red.runs).signs()),
                oracle_signs(p - 2 * q, q),
                "{p}/{q}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn signs_match_oracle(f in fraction()) {
        let s = sign_sequence(&f);
        prop_assert_eq!(as_bools(s.signs()), oracle_signs(f.p() as i64, f.q() as i64));
    }

    #[test]
    fn runs_are_well_formed(f in fraction()) {
        let rs = run_length(&sign_sequence(&f));
        prop_assert_eq!(rs.total(), f.p() - 1);
        prop_assert!(rs.runs().windows(2).all(|w| (w[0] > 0) != (w[1] > 0)));
        prop_assert!(rs.runs()[0] > 0);
        prop_assert!(*rs.runs().last().unwrap() > 0);
        let back: RunSeq = rs.to_string().parse().unwrap();
        prop_assert_eq!(&back, &rs);
        prop_assert_eq!(expand(&rs), sign_sequence(&f));
    }

    #[test]
    fn runs_have_two_lengths(f in fraction()) {
        prop_assume!(f.q() > 1);
        let m = (f.p() / f.q()) as i64;
        let rs = run_length(&sign_sequence(&f));
        let runs = rs.runs();
        prop_assert!(runs.iter().all(|c| c.abs() == m || c.abs() == m + 1), "{} m={}", rs, m);
        prop_assert_eq!(runs[0], m);
        prop_assert_eq!(*runs.last().unwrap(), m);
    }

    #[test]
    fn sequences_are_palindromes(f in fraction()) {
        let s = as_bools(sign_sequence(&f).signs());
        let mut r = s.clone();
        r.reverse();
        prop_assert_eq!(s, r);
    }

    #[test]
    fn reduction_matches_oracle(f in fraction()) {
        let (p, q) = (f.p(), f.q());
        prop_assume!(p / q >= 2);
        let red = hm_reduce(&run_length(&sign_sequence(&f)), p, q).unwrap();
        prop_assert_eq!(red.p, p - 2 * q);
        prop_assert_eq!(red.degenerate, red.runs.len() <= 1);
        prop_assert_eq!(
            as_bools(expand(&red.runs).signs()),
            oracle_signs((p - 2 * q) as i64, q as i64)
        );
        prop_assert_eq!(expand(&red.runs), sign_sequence_raw(p - 2 * q, q as i64).unwrap());
    }

    #[test]
    fn knot_text_round_trip(k in 1u32..20, m in prop_oneof![-30i64..-1, 2i64..30], l in 2u32..20) {
        let a = Knot::DoubleTwist(DoubleTwistKnot::new(k, m).unwrap());
        prop_assert_eq!(a.to_string().parse::<Knot>().unwrap(), a);
        let b = Knot::Kl(KlKnot::new(l).unwrap());
        prop_assert_eq!(b.to_string().parse::<Knot>().unwrap(), b);
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Knot>(&json).unwrap(), a);
    }
}
