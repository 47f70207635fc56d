//! Exhaustive property checks shared by the property suite and the acceptance run.

#![allow(dead_code)]

use cox_core::braid::verify_rewriting_oracle;
use cox_core::coxcore::{Extremum, Side};
use cox_core::cuspidal::{classify_cuspidal, verify_class_invariants, verify_support_monotonicity, verify_support_equivalence};
use cox_core::minlen::verify_involution_reduction;
use cox_core::verdict::Verdict;
use cox_core::{CoxeterGroup, Elem, GenMap, GenSet};
use serde_json::json;

pub fn group(t: &str) -> (CoxeterGroup, GenMap) {
    let g = CoxeterGroup::parse(t).unwrap();
    let s = g.system().automorphism().clone();
    (g, s)
}

fn fold(check: &str, parts: impl IntoIterator<Item = Verdict>) -> Verdict {
    let mut v = Verdict::new(check, "all");
    let mut scopes = Vec::new();
    for p in parts {
        scopes.push(p.scope.clone());
        v.absorb(p);
    }
    v.scope = scopes.join(",");
    v
}

/// Canonical word length equals the number of positive roots sent negative;
/// `l(w_I)` equals the number of positive roots.
pub fn length_agreement(types: &[&str]) -> Verdict {
    fold(
        "length-roots",
        types.iter().map(|t| {
            let (g, _) = group(t);
            let mut v = Verdict::new("length-roots", *t);
            for w in g.elements() {
                v.require(g.word(w).len() == g.inversion_count(w), || json!({ "w": g.word_string(w) }));
            }
            let w0 = g.longest_element(g.full_set());
            v.require(g.length(w0) == g.system().num_positive_roots(), || json!({ "w0": g.word_string(w0) }));
            v
        }),
    )
}

/// For every right descent `i` of `w`, `w s_i` is one shorter, and deleting
/// some letter of the canonical word of `w` yields `s_j w` for every left descent `j`.
pub fn exchange(types: &[&str]) -> Verdict {
    fold(
        "exchange",
        types.iter().map(|t| {
            let (g, _) = group(t);
            let mut v = Verdict::new("exchange", *t);
            for w in g.elements() {
                for i in g.right_descents(w).iter() {
                    let ws = g.rmul_gen(w, i);
                    v.require(g.word(ws).len() + 1 == g.word(w).len(), || json!({ "w": g.word_string(w), "i": i + 1 }));
                }
                let word: Vec<usize> = g.word(w).iter().map(|&x| x as usize).collect();
                for j in g.left_descents(w).iter() {
                    let target = g.lmul_gen(j, w);
                    let found = (0..word.len()).any(|k| {
                        let mut d = word.clone();
                        d.remove(k);
                        g.from_word(&d) == target
                    });
                    v.require(found, || json!({ "w": g.word_string(w), "j": j + 1 }));
                }
            }
            v
        }),
    )
}

/// `w = x y` with `x ∈ W^J`, `y ∈ W_J`, lengths adding, and no other such factorisation.
pub fn parabolic_uniqueness(types: &[&str]) -> Verdict {
    fold(
        "parabolic-decompose",
        types.iter().map(|t| {
            let (g, _) = group(t);
            let mut v = Verdict::new("parabolic-decompose", *t);
            for j in g.full_set().subsets() {
                let wj = g.parabolic_elements(j);
                for w in g.elements() {
                    let (x, y) = g.parabolic_decompose(w, j, Side::Right);
                    let ok = g.mul(x, y) == w
                        && g.length(x) + g.length(y) == g.length(w)
                        && g.is_min_right(x, j)
                        && g.in_parabolic(y, j);
                    let others = wj.iter().filter(|&&z| g.is_min_right(g.mul(w, g.inverse(z)), j)).count();
                    v.require(ok && others == 1, || json!({ "w": g.word_string(w), "J": j.labels() }));
                }
            }
            v
        }),
    )
}

/// For `w ∈ ᴷW` with `w⁻¹(K) ⊂ J`, the minimal element `x` of `w W_J` also has `x⁻¹(K) ⊂ J`.
pub fn minimal_coset_transport(types: &[&str]) -> Verdict {
    fold(
        "coset-transport",
        types.iter().map(|t| {
            let (g, _) = group(t);
            let mut v = Verdict::new("coset-transport", *t);
            let sends_into = |w: Elem, k: GenSet, j: GenSet| {
                g.conj_set(g.inverse(w), k).is_some_and(|img| img.is_subset(j))
            };
            for j in g.full_set().subsets() {
                for k in g.full_set().subsets() {
                    for w in g.elements().filter(|&w| g.is_min_left(k, w) && sends_into(w, k, j)) {
                        let x = g.min_right_coset(w, j);
                        v.require(g.is_min_left(k, x) && sends_into(x, k, j), || {
                            json!({ "w": g.word_string(w), "J": j.labels(), "K": k.labels() })
                        });
                    }
                }
            }
            v
        }),
    )
}

/// `{v w : v ≤ u}` has a unique minimal and a unique maximal element, equal to
/// the recursive ones, with `l(y) = l(w) − l(y w⁻¹)` and `l(y') = l(w) + l(y' w⁻¹)`.
pub fn extremal_elements(types: &[&str]) -> Verdict {
    fold(
        "extremal-coset",
        types.iter().map(|t| {
            let (g, _) = group(t);
            let mut v = Verdict::new("extremal-coset", *t);
            let all: Vec<Elem> = g.elements().collect();
            for &u in &all {
                let below: Vec<Elem> = all.iter().copied().filter(|&x| g.bruhat_leq(x, u)).collect();
                for &w in &all {
                    let set: Vec<Elem> = below.iter().map(|&x| g.mul(x, w)).collect();
                    let minimal: Vec<Elem> =
                        set.iter().copied().filter(|&y| !set.iter().any(|&z| z != y && g.bruhat_leq(z, y))).collect();
                    let maximal: Vec<Elem> =
                        set.iter().copied().filter(|&y| !set.iter().any(|&z| z != y && g.bruhat_leq(y, z))).collect();
                    let lo = g.extremal_coset_element(u, w, Extremum::Min);
                    let hi = g.extremal_coset_element(u, w, Extremum::Max);
                    let l = |x: Elem| g.length(x);
                    let ok = minimal == [lo]
                        && maximal == [hi]
                        && l(lo) + l(g.mul(lo, g.inverse(w))) == l(w)
                        && l(hi) == l(w) + l(g.mul(hi, g.inverse(w)));
                    v.require(ok, || json!({ "u": g.word_string(u), "w": g.word_string(w) }));
                }
            }
            v
        }),
    )
}

/// Bruhat order is reflexive, antisymmetric, transitive and strictly length-increasing.
pub fn bruhat_order(types: &[&str]) -> Verdict {
    fold(
        "bruhat-order",
        types.iter().map(|t| {
            let (g, _) = group(t);
            let mut v = Verdict::new("bruhat-order", *t);
            let all: Vec<Elem> = g.elements().collect();
            let n = all.len();
            let leq: Vec<bool> = all.iter().flat_map(|&a| all.iter().map(move |&b| (a, b))).map(|(a, b)| g.bruhat_leq(a, b)).collect();
            let at = |a: usize, b: usize| leq[a * n + b];
            for a in 0..n {
                v.require(at(a, a), || json!({ "reflexive": g.word_string(all[a]) }));
                for b in 0..n {
                    if a != b && at(a, b) {
                        v.require(!at(b, a) && g.length(all[a]) < g.length(all[b]), || {
                            json!({ "a": g.word_string(all[a]), "b": g.word_string(all[b]) })
                        });
                        for c in 0..n {
                            if at(b, c) && !at(a, c) {
                                v.fail(json!({ "transitivity": [a, b, c] }));
                            }
                        }
                    }
                }
            }
            v
        }),
    )
}

/// Every twisted involution reduces to `w_K` for some `σ`-stable `K`.
pub fn involution_reduction(types: &[&str]) -> Verdict {
    fold(
        "lemma3.6",
        types.iter().map(|t| {
            let (g, s) = group(t);
            verify_involution_reduction(&g, &s, t).unwrap()
        }),
    )
}

/// Characteristic polynomial without root 1 forces cuspidality.
pub fn nonvanishing_implies_cuspidal(types: &[&str]) -> Verdict {
    fold(
        "lemma7.2",
        types.iter().map(|t| {
            let (g, s) = group(t);
            let r = classify_cuspidal(&g, &s, t).unwrap();
            r.verdicts.into_iter().find(|v| v.check == "lemma7.2").unwrap()
        }),
    )
}

pub fn support_monotonicity(types: &[&str]) -> Verdict {
    fold(
        "lemma7.4",
        types.iter().map(|t| {
            let (g, s) = group(t);
            verify_support_monotonicity(&g, &s, t).unwrap()
        }),
    )
}

pub fn support_equivalence(types: &[&str]) -> Verdict {
    fold(
        "lemma7.9",
        types.iter().map(|t| {
            let (g, s) = group(t);
            verify_support_equivalence(&g, &s, t)
        }),
    )
}

/// Characteristic polynomial constant on classes (two routes) and rational
/// whenever `σ` preserves root lengths; `l_{i,σ}` constant on cyclic-shift classes.
pub fn class_invariants(types: &[&str]) -> Verdict {
    fold(
        "class-invariants",
        types.iter().flat_map(|t| {
            let (g, s) = group(t);
            verify_class_invariants(&g, &s, t).unwrap()
        }),
    )
}

pub fn garside_oracle(types: &[&str], max_len: usize) -> Verdict {
    fold(
        "garside-oracle",
        types.iter().map(|t| {
            let (g, _) = group(t);
            verify_rewriting_oracle(&g, max_len, t)
        }),
    )
}

/// Scopes for the exhaustive suites.
pub const LENGTH_TYPES: &[&str] = &["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "G2", "A2xA1", "A1xA1xB2"];
pub const RANK3_TYPES: &[&str] = &["A1", "A2", "A3", "B2", "B3", "G2", "A2xA1", "A1xA1xA1"];
pub const TRANSPORT_TYPES: &[&str] = &["A3", "B3"];
pub const EXTREMAL_TYPES: &[&str] = &["A2", "B2", "A3"];
pub const BRUHAT_TYPES: &[&str] = &["A2", "B2", "G2", "A3"];
/// Involutive `σ` only: the statement needs `σ² = 1`.
pub const INVOLUTION_TYPES: &[&str] = &["A2", "2A2", "A3", "2A3", "B2", "B3", "G2", "D4", "2D4", "A4", "2A4"];
pub const CLASS_TYPES: &[&str] = &["A2", "A3", "2A3", "B2", "B3", "G2", "D4", "2D4", "3D4", "2B2", "A4", "2A4"];
pub const GARSIDE_TYPES: &[&str] = &["A2", "B2", "A3"];

/// Every exhaustive property, in the order printed by the acceptance run.
pub fn all_properties() -> Vec<Verdict> {
    vec![
        length_agreement(LENGTH_TYPES),
        exchange(RANK3_TYPES),
        parabolic_uniqueness(RANK3_TYPES),
        minimal_coset_transport(TRANSPORT_TYPES),
        extremal_elements(EXTREMAL_TYPES),
        bruhat_order(BRUHAT_TYPES),
        involution_reduction(INVOLUTION_TYPES),
        nonvanishing_implies_cuspidal(CLASS_TYPES),
        support_monotonicity(CLASS_TYPES),
        support_equivalence(CLASS_TYPES),
        class_invariants(CLASS_TYPES),
        garside_oracle(GARSIDE_TYPES, 8),
    ]
}
