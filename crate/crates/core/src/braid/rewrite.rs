//! Equality in `B⁺` by exhaustive application of the braid relations.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde_json::json;

use crate::coxcore::{CoxeterGroup, CoxeterMatrix};
use crate::verdict::Verdict;

use super::garside::normal_form;

/// Words obtained from `w` by one braid relation.
pub fn relation_moves(m: &CoxeterMatrix, w: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = m.rank();
    for i in 0..n {
        for j in 0..n {
            let mij = m.get(i, j) as usize;
            if i == j || mij == 0 || mij > w.len() {
                continue;
            }
            for p in 0..=w.len() - mij {
                if (0..mij).all(|k| w[p + k] == if k % 2 == 0 { i } else { j }) {
                    let mut x = w.to_vec();
                    for k in 0..mij {
                        x[p + k] = if k % 2 == 0 { j } else { i };
                    }
                    out.push(x);
                }
            }
        }
    }
    out
}

/// All positive words equal to `w` in `B⁺`.
pub fn rewriting_class(m: &CoxeterMatrix, w: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(x) = queue.pop_front() {
        for y in relation_moves(m, &x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// All words of length `len` over `rank` letters, in lexicographic order.
fn words(rank: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..rank).map(move |i| {
                    let mut x = w.clone();
                    x.push(i);
                    x
                })
            })
            .collect();
    }
    out
}

/// Normal-form equality against rewriting closure on every word up to `max_len`.
pub fn verify_rewriting_oracle(g: &CoxeterGroup, max_len: usize, scope: &str) -> Verdict {
    let mut v = Verdict::new("garside-oracle", scope);
    let m = g.system().matrix();
    let mut total = 0;
    for len in 0..=max_len {
        let all = words(g.rank(), len);
        total += all.len();
        // Rewriting classes, labelled by their smallest word.
        let mut class_of: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut classes = 0;
        for w in &all {
            if class_of.contains_key(w) {
                continue;
            }
            for x in rewriting_class(m, w) {
                class_of.insert(x, classes);
            }
            classes += 1;
        }
        let mut form_class = HashMap::new();
        for w in &all {
            let f = normal_form(g, w);
            v.require(f.is_normal(g) && f.letter_count(g) == len, || json!({ "word": w, "form": "not normal" }));
            let c = class_of[w];
            if let Some(prev) = form_class.insert(f, c) { v.require(prev == c, || json!({ "word": w, "merged_classes": [prev, c] })) }
        }
        v.require(form_class.len() == classes, || json!({ "length": len, "forms": form_class.len(), "classes": classes }));
    }
    v.detail("words", total);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_closure() {
        let g = CoxeterGroup::parse("A2").unwrap();
        let m = g.system().matrix();
        assert_eq!(rewriting_class(m, &[0, 1, 0]).len(), 2);
        assert!(rewriting_class(m, &[0, 1, 0, 1, 0, 1]).contains(&vec![0, 1, 0, 0, 1, 0]));
        assert_eq!(rewriting_class(m, &[0, 1]).len(), 1);
    }

    #[test]
    fn oracle_on_b2() {
        let g = CoxeterGroup::parse("B2").unwrap();
        assert!(verify_rewriting_oracle(&g, 7, "B2").pass);
    }
}
