mod common;

use common::*;
use cox_core::braid::{braid_equal, mul_simple, normal_form, product};
use cox_core::cuspidal::char_poly;
use cox_core::minlen::{orbit_of, TwistedAction};
use cox_core::verdict::Verdict;
use cox_core::Elem;
use proptest::prelude::*;

fn assert_pass(v: Verdict) {
    assert!(v.pass, "{} on {}: {:?}", v.check, v.scope, v.counterexample);
    assert!(v.cases > 0, "{} checked nothing", v.check);
}

#[test]
fn length_equals_inversion_count() {
    assert_pass(length_agreement(LENGTH_TYPES));
}

#[test]
fn exchange_property() {
    assert_pass(exchange(RANK3_TYPES));
}

#[test]
fn parabolic_factorisation_is_unique() {
    assert_pass(parabolic_uniqueness(RANK3_TYPES));
}

#[test]
fn minimal_representatives_transport_subsets() {
    assert_pass(minimal_coset_transport(TRANSPORT_TYPES));
}

#[test]
fn extremal_coset_elements() {
    assert_pass(extremal_elements(EXTREMAL_TYPES));
}

#[test]
fn bruhat_is_a_graded_partial_order() {
    assert_pass(bruhat_order(BRUHAT_TYPES));
}

#[test]
fn involutions_reduce_to_longest_elements() {
    assert_pass(involution_reduction(INVOLUTION_TYPES));
}

#[test]
fn nonvanishing_at_one_implies_cuspidal() {
    assert_pass(nonvanishing_implies_cuspidal(CLASS_TYPES));
}

#[test]
fn support_grows_under_reduction() {
    assert_pass(support_monotonicity(CLASS_TYPES));
}

#[test]
fn support_equivalence_for_parabolics() {
    assert_pass(support_equivalence(CLASS_TYPES));
}

#[test]
fn class_invariants_hold() {
    assert_pass(class_invariants(CLASS_TYPES));
}

#[test]
fn garside_agrees_with_rewriting() {
    assert_pass(garside_oracle(GARSIDE_TYPES, 8));
}

fn word_strategy(rank: usize, max: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..rank, 0..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn word_length_bounds(word in word_strategy(4, 24)) {
        let (g, _) = group("B4");
        let w = g.from_word(&word);
        prop_assert!(g.length(w) <= word.len());
        prop_assert_eq!(g.length(w) % 2, word.len() % 2);
        prop_assert_eq!(g.length(w), g.inversion_count(w));
        prop_assert_eq!(g.from_word(&g.word(w).iter().map(|&x| x as usize).collect::<Vec<_>>()), w);
    }

    #[test]
    fn multiplication_is_associative(a in 0..192usize, b in 0..192usize, c in 0..192usize) {
        let (g, _) = group("D4");
        let (a, b, c) = (Elem(a as u32), Elem(b as u32), Elem(c as u32));
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inverse(a)), g.identity());
    }

    #[test]
    fn normal_form_is_multiplicative(u in word_strategy(3, 10), v in word_strategy(3, 10)) {
        let (g, _) = group("B3");
        let uv: Vec<usize> = u.iter().chain(&v).copied().collect();
        let joined = normal_form(&g, &uv);
        prop_assert!(joined.is_normal(&g));
        prop_assert_eq!(joined.letter_count(&g), uv.len());
        prop_assert_eq!(&joined, &product(&g, &[normal_form(&g, &u), normal_form(&g, &v)]));
        let stepwise = v.iter().fold(normal_form(&g, &u), |f, &i| mul_simple(&g, &f, g.generator(i)));
        prop_assert_eq!(joined, stepwise);
    }

    #[test]
    fn braid_relations_preserve_the_normal_form(prefix in word_strategy(3, 6), suffix in word_strategy(3, 6), which in 0..3usize) {
        let (g, _) = group("A3");
        let (a, b) = [(0, 1), (1, 2), (0, 2)][which];
        let m = g.system().matrix().get(a, b) as usize;
        let alt = |x: usize, y: usize| (0..m).map(|k| if k % 2 == 0 { x } else { y }).collect::<Vec<_>>();
        let lhs: Vec<usize> = prefix.iter().copied().chain(alt(a, b)).chain(suffix.iter().copied()).collect();
        let rhs: Vec<usize> = prefix.iter().copied().chain(alt(b, a)).chain(suffix.iter().copied()).collect();
        prop_assert!(braid_equal(&g, &lhs, &rhs));
    }

    #[test]
    fn charpoly_is_a_class_function(w in 0..192usize, x in 0..192usize) {
        let (g, s) = group("3D4");
        let w = Elem(w as u32);
        let x = Elem(x as u32);
        let conj = g.mul3(x, w, g.inverse(g.apply_automorphism(x, &s)));
        let act = TwistedAction::sigma(&g, &s).unwrap();
        prop_assert!(orbit_of(&act, w.index()).contains(&conj.index()));
        let p = char_poly(&g, w, &s).unwrap();
        prop_assert_eq!(&p, &char_poly(&g, conj, &s).unwrap());
        prop_assert!(p.to_int().is_some());
    }
}
