//! Reduction of twisted involutions to longest elements of σ-stable parabolics.

use super::reduce::{ReductionChain, ReductionStep};
use crate::coxcore::{CoxeterGroup, Elem, GenMap, GenSet, Side};
use crate::error::{Error, Result};

/// Result of [`reduce_involution`].
#[derive(Clone, Debug)]
pub struct InvolutionReduction {
    /// Chain of twisted conjugation moves, states are element indices.
    pub chain: ReductionChain,
    /// `J` with the end point equal to `w_J`.
    pub j: GenSet,
    pub end: Elem,
}

/// For `w` with `σ(w) = w⁻¹`, finds a chain `w → w_J` of length-decreasing
/// twisted conjugations with `σ(J) = J`.
///
/// At each stage `J` collects the left descents `i` with `s_i w = w σ(s_i)`;
/// then `w = w_J · w'` with `w' ∈ ᴶW`, and if `w' ≠ 1` a right descent of `w'`
/// gives a length-decreasing move.
pub fn reduce_involution(g: &CoxeterGroup, sigma: &GenMap, w: Elem) -> Result<InvolutionReduction> {
    if g.apply_automorphism(w, sigma) != g.inverse(w) {
        return Err(Error::NotTwistedInvolution);
    }
    let inv_sigma = sigma.inverse();
    let mut steps = Vec::new();
    let mut cur = w;
    loop {
        let j: GenSet = (0..g.rank())
            .filter(|&i| g.is_left_descent(cur, i) && g.lmul_gen(i, cur) == g.rmul_gen(cur, sigma.apply(i)))
            .collect();
        let (rest, head) = g.parabolic_decompose(cur, j, Side::Left);
        if head != g.longest_element(j) {
            return Err(Error::OracleMismatch(format!(
                "parabolic part of {} is not the longest element of {j}",
                g.word_string(cur)
            )));
        }
        if rest == Elem::IDENTITY {
            if sigma.image_of(j) != j {
                return Err(Error::OracleMismatch(format!("{j} is not σ-stable")));
            }
            return Ok(InvolutionReduction { chain: ReductionChain { start: w.index(), steps }, j, end: cur });
        }
        let t = g.right_descents(rest).iter().next().expect("non-identity has a right descent");
        let i = inv_sigma.apply(t);
        let next = g.rmul_gen(g.lmul_gen(i, cur), sigma.apply(i));
        if g.length(next) >= g.length(cur) {
            return Err(Error::OracleMismatch(format!(
                "move by s{} does not shorten {}",
                i + 1,
                g.word_string(cur)
            )));
        }
        steps.push(ReductionStep {
            gen: i as i32 + 1,
            from: cur.index(),
            to: next.index(),
            from_len: g.length(cur),
            to_len: g.length(next),
        });
        cur = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_longest_element_is_already_reduced() {
        let g = CoxeterGroup::parse("B3").unwrap();
        let id = GenMap::identity_on(g.full_set(), 3);
        let w0 = g.longest_element(g.full_set());
        let r = reduce_involution(&g, &id, w0).unwrap();
        assert!(r.chain.steps.is_empty());
        assert_eq!(r.j, g.full_set());
    }

    #[test]
    fn longest_element_of_a3_reduces_to_commuting_pair() {
        let g = CoxeterGroup::parse("A3").unwrap();
        let id = GenMap::identity_on(g.full_set(), 3);
        let w0 = g.longest_element(g.full_set());
        let r = reduce_involution(&g, &id, w0).unwrap();
        assert_eq!(r.j.labels(), [1, 3]);
        assert_eq!(g.length(r.end), 2);
        // With the diagram flip, w0 itself is already of the required form.
        let flip = GenMap::from_permutation(&[2, 1, 0]).unwrap();
        let r = reduce_involution(&g, &flip, w0).unwrap();
        assert!(r.chain.steps.is_empty());
    }

    #[test]
    fn rejects_non_involutions() {
        let g = CoxeterGroup::parse("A2").unwrap();
        let id = GenMap::identity_on(g.full_set(), 2);
        let w = g.parse_element("1,2").unwrap();
        assert_eq!(reduce_involution(&g, &id, w).unwrap_err(), Error::NotTwistedInvolution);
    }
}
