use cox_core::braid::*;
use cox_core::cuspidal::{twisted_a_word, Partition};
use cox_core::{CoxeterGroup, GenMap, GenSet};

fn group(t: &str) -> (CoxeterGroup, GenMap) {
    let g = CoxeterGroup::parse(t).unwrap();
    let s = g.system().automorphism().clone();
    (g, s)
}

fn letters(s: &str) -> Vec<usize> {
    s.split(',').map(|x| x.parse::<usize>().unwrap() - 1).collect()
}

#[test]
fn normal_form_matches_rewriting_closure() {
    for (t, len) in [("A2", 8), ("B2", 8), ("A3", 8)] {
        let (g, _) = group(t);
        let v = verify_rewriting_oracle(&g, len, t);
        assert!(v.pass, "{t}: {:?}", v.counterexample);
    }
}

#[test]
fn small_equalities() {
    let (g, _) = group("A2");
    assert!(braid_equal(&g, &letters("1,2,1,2,1,2"), &letters("1,2,1,1,2,1")));
    assert!(braid_equal(&g, &[], &[]));
    assert!(!braid_equal(&g, &letters("1,1,2"), &letters("2,1,1")));
    let (a1, _) = group("A1");
    assert_eq!(normal_form(&a1, &[0; 4]).factors, vec![a1.generator(0); 4]);
    assert!(embed(&g, g.identity()).is_identity());
    assert_eq!(normal_form(&g, &letters("1,2,1")), normal_form(&g, &letters("2,1,2")));
}

#[test]
fn embedding_is_multiplicative_when_lengths_add() {
    let (g, _) = group("A3");
    let mut pairs = 0;
    for x in g.elements() {
        for y in g.elements() {
            let xy = g.mul(x, y);
            if g.length(xy) == g.length(x) + g.length(y) {
                pairs += 1;
                assert_eq!(product(&g, &[embed(&g, x), embed(&g, y)]), embed(&g, xy));
            }
        }
    }
    // Intervals in the weak order of S4.
    assert_eq!(pairs, 151);
}

#[test]
fn sigma_orders() {
    let (b2, id) = group("B2");
    assert_eq!(sigma_order(&b2, b2.parse_element("2,1").unwrap(), &id), 4);
    let (a2, flip) = group("2A2");
    assert_eq!(sigma_order(&a2, a2.generator(0), &flip), 6);
    assert_eq!(sigma_order(&a2, a2.identity(), &flip), 2);
}

#[test]
fn certificates_have_the_right_length() {
    for t in ["A3", "2A3", "B3"] {
        let (g, s) = group(t);
        for w in g.elements() {
            if let Some(c) = good_element_check(&g, w, &s).unwrap() {
                assert_eq!(c.letter_count(&g), c.d * g.length(w), "{t} {}", g.word_string(w));
                assert!(c.chain.windows(2).all(|p| p[1].is_subset(p[0])));
                assert_eq!(c.exponents.iter().map(|e| e.1).sum::<usize>(), 2 * c.chain.len());
            }
        }
    }
}

#[test]
fn twisted_a3_representative_is_good() {
    let (g, s) = group("2A3");
    let alpha = Partition::new(vec![2, 1]).unwrap();
    let word: Vec<usize> = twisted_a_word(3, &alpha).unwrap().iter().map(|i| i - 1).collect();
    let w = g.from_word(&word);
    let c = good_element_check(&g, w, &s).unwrap().unwrap();
    assert_eq!((c.d, c.chain.clone()), (6, vec![g.full_set()]));
    let v = verify_longest_factorisation(&g, &s, &alpha, "2A3").unwrap();
    assert!(v.pass);
}

#[test]
fn power_identities() {
    for t in ["2A2", "2A3", "2A4", "2A5", "B2", "B3", "B4", "B5", "D4", "D5", "2D4", "2D5"] {
        let (g, s) = group(t);
        let v = verify_power_identities(&g, &s, t).unwrap();
        assert!(v.pass, "{t}: {:?}", v.counterexample);
    }
    let (g, s) = group("A3");
    assert!(verify_power_identities(&g, &s, "A3").is_err());
}

#[test]
fn even_count_of_twisted_factors_fails() {
    // With 2a factors of s_{[n+1−a,1]} the letter count exceeds l(w_I).
    let (g, s) = group("2A3");
    let x = normal_form(&g, &CoxeterGroup::descending_run(3, 1));
    let lhs = product(&g, &[twisted_power(&g, &x, &s, 2), longest_braid(&g, GenSet::parse("2,3", 3).unwrap())]);
    assert_eq!(lhs.letter_count(&g), 9);
    let ok = product(&g, &[twisted_power(&g, &x, &s, 1), longest_braid(&g, GenSet::parse("2,3", 3).unwrap())]);
    assert_eq!(ok, longest_braid(&g, g.full_set()));
}

#[test]
fn longest_element_factorisations() {
    for t in ["2A2", "2A3", "2A4", "2A5", "B1", "B2", "B3", "B4", "D4", "2D4"] {
        let (g, s) = group(t);
        let v = verify_longest_factorisation_all(&g, &s, t).unwrap();
        assert!(v.pass, "{t}: {:?}", v.counterexample);
    }
    let (g, s) = group("B3");
    let v = verify_longest_factorisation(&g, &s, &Partition::new(vec![2, 1]).unwrap(), "B3").unwrap();
    assert!(v.pass);
    let (d4, id) = group("D4");
    assert!(verify_longest_factorisation(&d4, &id, &Partition::new(vec![4]).unwrap(), "D4").is_err());
}

#[test]
fn every_class_has_a_good_minimal_element() {
    for (t, classes) in [("A2", 3), ("A3", 5), ("B2", 5), ("B3", 10), ("2A3", 5)] {
        let (g, s) = group(t);
        let v = verify_good_elements(&g, &s, t);
        assert!(v.pass, "{t}: {:?}", v.counterexample);
        assert_eq!(v.details["classes"], classes, "{t}");
    }
}
