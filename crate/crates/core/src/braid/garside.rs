//! Left-greedy normal forms in the positive braid monoid `B⁺` of a finite
//! Coxeter system. Simple elements are the elements of `W`.

use std::fmt;

use serde::Serialize;

use crate::coxcore::{CoxeterGroup, Elem, GenMap, GenSet};

/// A positive braid as a word in the generators (0-based letters).
pub type BraidWord = Vec<usize>;

/// Left-greedy normal form `x₁ x₂ ⋯ x_k`: every `x_i ≠ e` and every left
/// descent of `x_{i+1}` is a right descent of `x_i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GarsideForm {
    pub factors: Vec<Elem>,
}

impl GarsideForm {
    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of letters of any positive word representing the braid.
    pub fn letter_count(&self, g: &CoxeterGroup) -> usize {
        self.factors.iter().map(|&x| g.length(x)).sum()
    }

    pub fn support(&self, g: &CoxeterGroup) -> GenSet {
        self.factors.iter().fold(GenSet::EMPTY, |acc, &x| acc.union(g.support(x)))
    }

    /// The concatenated canonical words of the factors.
    pub fn word(&self, g: &CoxeterGroup) -> BraidWord {
        self.factors.iter().flat_map(|&x| g.word(x).iter().map(|&i| i as usize)).collect()
    }

    pub fn display<'a>(&'a self, g: &'a CoxeterGroup) -> impl fmt::Display + 'a {
        FormDisplay { f: self, g }
    }

    /// Checks the left-greedy condition.
    pub fn is_normal(&self, g: &CoxeterGroup) -> bool {
        self.factors.iter().all(|&x| x != g.identity())
            && self.factors.windows(2).all(|p| g.left_descents(p[1]).is_subset(g.right_descents(p[0])))
    }
}

struct FormDisplay<'a> {
    f: &'a GarsideForm,
    g: &'a CoxeterGroup,
}

impl fmt::Display for FormDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f.factors.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.f.factors.iter().map(|&x| self.g.word_string(x)).collect();
        write!(f, "{}", parts.join(" | "))
    }
}

impl Serialize for GarsideForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.factors.iter().map(|x| x.0).collect::<Vec<_>>().serialize(s)
    }
}

/// Rewrites `x · t` (both simple) into a left-weighted pair with the same product.
pub fn left_weight(g: &CoxeterGroup, mut x: Elem, mut t: Elem) -> (Elem, Elem) {
    loop {
        let moved = g.left_descents(t).difference(g.right_descents(x)).iter().next();
        match moved {
            Some(s) => {
                x = g.rmul_gen(x, s);
                t = g.lmul_gen(s, t);
            }
            None => return (x, t),
        }
    }
}

/// Normal form of `β · y` for `y` simple.
pub fn mul_simple(g: &CoxeterGroup, form: &GarsideForm, y: Elem) -> GarsideForm {
    if y == g.identity() {
        return form.clone();
    }
    let mut tail = Vec::with_capacity(form.factors.len() + 1);
    let mut carry = y;
    for &x in form.factors.iter().rev() {
        let (a, b) = left_weight(g, x, carry);
        tail.push(b);
        carry = a;
    }
    tail.push(carry);
    tail.reverse();
    tail.retain(|&f| f != g.identity());
    GarsideForm { factors: tail }
}

/// Normal form of a positive word.
pub fn normal_form(g: &CoxeterGroup, word: &[usize]) -> GarsideForm {
    word.iter().fold(GarsideForm::default(), |f, &i| mul_simple(g, &f, g.generator(i)))
}

/// Normal form of a product of positive braids.
pub fn product(g: &CoxeterGroup, parts: &[GarsideForm]) -> GarsideForm {
    let mut out = GarsideForm::default();
    for p in parts {
        for &x in &p.factors {
            out = mul_simple(g, &out, x);
        }
    }
    out
}

pub fn braid_equal(g: &CoxeterGroup, a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && normal_form(g, a) == normal_form(g, b)
}

/// `f(w)`: the braid of any reduced word of `w`.
pub fn embed(g: &CoxeterGroup, w: Elem) -> GarsideForm {
    if w == g.identity() {
        GarsideForm::default()
    } else {
        GarsideForm { factors: vec![w] }
    }
}

/// Applies a diagram automorphism letter by letter.
pub fn apply_sigma(g: &CoxeterGroup, form: &GarsideForm, sigma: &GenMap) -> GarsideForm {
    // σ preserves descents, so the image of a normal form is normal.
    GarsideForm { factors: form.factors.iter().map(|&x| g.apply_automorphism(x, sigma)).collect() }
}

/// `u⁻¹ β` if the simple element `u` left-divides `β`.
pub fn left_divide(g: &CoxeterGroup, form: &GarsideForm, u: Elem) -> Option<GarsideForm> {
    if u == g.identity() {
        return Some(form.clone());
    }
    let head = *form.factors.first()?;
    let rest = g.mul(g.inverse(u), head);
    if g.length(rest) + g.length(u) != g.length(head) {
        return None;
    }
    let mut parts = vec![embed(g, rest)];
    parts.extend(form.factors[1..].iter().map(|&x| embed(g, x)));
    Some(product(g, &parts))
}

/// `β^k`.
pub fn power(g: &CoxeterGroup, form: &GarsideForm, k: usize) -> GarsideForm {
    product(g, &vec![form.clone(); k])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_in_rank_one() {
        let g = CoxeterGroup::parse("A1").unwrap();
        let f = normal_form(&g, &[0, 0, 0, 0]);
        assert_eq!(f.factors.len(), 4);
        assert!(normal_form(&g, &[]).is_identity());
    }

    #[test]
    fn braid_relation_in_a2() {
        let g = CoxeterGroup::parse("A2").unwrap();
        assert!(braid_equal(&g, &[0, 1, 0], &[1, 0, 1]));
        assert!(braid_equal(&g, &[0, 1, 0, 1, 0, 1], &[0, 1, 0, 0, 1, 0]));
        assert!(!braid_equal(&g, &[0, 1], &[1, 0]));
        let d2 = normal_form(&g, &[0, 1, 0, 1, 0, 1]);
        assert_eq!(d2.factors, vec![g.longest_element(g.full_set()); 2]);
    }

    #[test]
    fn reduced_words_embed_as_one_factor() {
        let g = CoxeterGroup::parse("B3").unwrap();
        for w in g.elements().skip(1) {
            let f = normal_form(&g, &g.word(w).iter().rev().map(|&i| i as usize).collect::<Vec<_>>());
            assert_eq!(f.factors, [g.inverse(w)]);
            assert!(f.is_normal(&g));
        }
    }

    #[test]
    fn division_by_simple() {
        let g = CoxeterGroup::parse("A2").unwrap();
        let d2 = normal_form(&g, &[0, 1, 0, 1, 0, 1]);
        let w0 = g.longest_element(g.full_set());
        let once = left_divide(&g, &d2, w0).unwrap();
        assert_eq!(once.factors, [w0]);
        assert!(left_divide(&g, &once, w0).unwrap().is_identity());
        assert!(left_divide(&g, &normal_form(&g, &[0]), g.generator(1)).is_none());
    }
}
