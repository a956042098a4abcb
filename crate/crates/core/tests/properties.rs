use franel::arith::{binom, binomial_gen, rat, ratio, Integer, Rational};
use franel::identities::{
    check_range, eval_general11, eval_gould, eval_lemma, eval_macmahon, eval_main,
    eval_spec12, eval_spec13_domb, eval_spec14, eval_strehl, CheckParams, IdentityId, Lemma,
};
use franel::sequences::{franel3_direct, franel4_direct};
use franel::set_oracle::{
    count_formula_16, count_formula_21, count_formula_22, enumerate_y, is_member,
    Characterization, FamilySpec,
};
use proptest::prelude::*;

#[test]
fn integer_identities_up_to_100() {
    for n in 0..=100 {
        assert!(eval_strehl(n).holds(), "strehl {n}");
        assert!(eval_gould(n).holds(), "gould {n}");
        assert!(eval_main(n).holds(), "main {n}");
        assert!(eval_spec13_domb(n).holds(), "domb {n}");
        assert!(eval_spec14(n).holds(), "spec14 {n}");
        assert_eq!(eval_strehl(n).rhs, eval_gould(n).rhs);
        assert_eq!(eval_strehl(n).rhs, franel3_direct(n));
    }
}

#[test]
fn signed_half_integer_form() {
    let mut printed_failures = Vec::new();
    for n in 0..=50 {
        let s = eval_spec12(n);
        assert!(s.pass_with_sign, "n={n}");
        if !s.printed_pass {
            printed_failures.push(n);
        }
    }
    // The unsigned form fails exactly at odd n.
    assert_eq!(printed_failures, (1..=50).step_by(2).collect::<Vec<_>>());
}

/// The general identity is a polynomial identity of degree at most `2n` in
/// `x`; agreement at `2n + 1` distinct points proves it for all `x`.
#[test]
fn general_identity_at_enough_points() {
    for n in 0..=12u64 {
        for i in 0..=(2 * n as i64) {
            let x = ratio(2 * i - 3 * n as i64, 7);
            assert!(eval_general11(n, &x).holds(), "n={n} x={x}");
        }
    }
}

#[test]
fn triple_reconciliation_at_five() {
    let r = enumerate_y(FamilySpec::standard(5), Characterization::Delta, false).unwrap();
    let phi = franel4_direct(5);
    assert_eq!(Integer::from(r.count), phi);
    assert_eq!(count_formula_21(5), phi);
    assert_eq!(count_formula_22(5), phi);
}

#[test]
fn formula_21_is_main_rhs_and_22_is_phi() {
    for n in 0..=60 {
        assert_eq!(count_formula_21(n), eval_main(n).rhs);
        assert_eq!(count_formula_22(n), franel4_direct(n));
    }
}

#[test]
fn generalized_counts_agree_beyond_enumeration() {
    for n in 0..=25u64 {
        for m in 0..=2 * n + 4 {
            assert!(count_formula_16(n, m).holds(), "n={n} m={m}");
        }
        assert_eq!(count_formula_16(n, 2 * n).lhs, franel4_direct(n));
    }
}

#[test]
fn every_split_witness_is_a_delta_member() {
    for n in 0..=4 {
        let spec = FamilySpec::standard(n);
        let split = enumerate_y(spec, Characterization::Split, true).unwrap();
        for w in split.witnesses.unwrap() {
            assert!(is_member(spec, Characterization::Delta, &w));
        }
    }
}

#[test]
fn check_range_defaults_cover_lemmas() {
    for id in [IdentityId::Lemma7, IdentityId::Lemma8Vandermonde, IdentityId::Lemma9Riordan] {
        let reps = check_range(id, 0, 4, &CheckParams::default()).unwrap();
        assert!(!reps.is_empty());
        assert!(reps.iter().all(|r| r.pass), "{id}");
    }
    let reps = check_range(
        IdentityId::General11,
        0,
        5,
        &CheckParams { x: Some(ratio(7, 3)), ..Default::default() },
    )
    .unwrap();
    assert_eq!(reps.len(), 6);
    assert!(reps.iter().all(|r| r.pass));
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, prop_oneof![-9i64..=-1, 1i64..=9]).prop_map(|(p, q)| ratio(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn general_identity_random(n in 0u64..=30, x in small_rational()) {
        prop_assert!(eval_general11(n, &x).holds());
    }

    #[test]
    fn macmahon_random(n in 0u64..=30, x in small_rational(), y in small_rational()) {
        prop_assert!(eval_macmahon(n, &x, &y).holds());
    }

    #[test]
    fn riordan_random(n in 0u64..=8, m in 0u64..=8, x in small_rational()) {
        prop_assert!(eval_lemma(Lemma::Riordan, n, m, &x).unwrap().holds());
        prop_assert!(eval_lemma(Lemma::Vandermonde, n, m, &x).unwrap().holds());
        if m <= n {
            prop_assert!(eval_lemma(Lemma::SubsetOfSubset, n, m, &x).unwrap().holds());
        }
    }

    #[test]
    fn general_identity_at_x_equal_n(n in 0u64..=30) {
        prop_assert_eq!(eval_general11(n, &rat(n as i64)).lhs, Rational::from_integer(franel4_direct(n)));
    }

    #[test]
    fn binomial_gen_on_naturals(x in 0u64..60, k in 0u64..60) {
        prop_assert_eq!(binomial_gen(&rat(x as i64), k), Rational::from_integer(binom(x, k)));
    }
}
