//! Minimal-length elements of twisted conjugacy classes and of double cosets.
//!
//! Everything here is generic over a [`ConjugationAction`]: the twisted
//! action of a parabolic subgroup on `W` ([`TwistedAction`]) and the two-sided
//! action on `W₁ × W₂` ([`PairAction`]) share the same algorithms.

mod action;
mod involution;
mod reduce;
mod verify;

pub use action::{ConjugationAction, PairAction, TwistedAction};
pub use involution::{reduce_involution, InvolutionReduction};
pub use reduce::{
    backward_closure, cyc_class, cyc_partition, min_length_set, orbit_of, orbits, plateau, reduce_to_min,
    strong_components, strongly_conjugate, strongly_equivalent, unreachable_from_min, verify_reduction_theorem,
    CycClass, Orbits, ReductionChain, ReductionStep,
};
pub use verify::{verify_involution_reduction, verify_twisted_reduction};

use serde::Serialize;

/// One entry of a chain as printed by the command line: generator and resulting state.
#[derive(Clone, Debug, Serialize)]
pub struct ChainEntry {
    pub gen: i32,
    pub word: String,
}

/// Chain as `[{"gen": ±j, "word": ...}]`; the first entry (gen 0) is the start.
pub fn chain_entries<A: ConjugationAction + ?Sized>(a: &A, chain: &ReductionChain) -> Vec<ChainEntry> {
    let mut out = vec![ChainEntry { gen: 0, word: a.describe(chain.start) }];
    out.extend(chain.steps.iter().map(|s| ChainEntry { gen: s.gen, word: a.describe(s.to) }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxcore::{CoxeterGroup, GenMap, GenSet};
    use crate::pieces::AdmissibleTriple;

    #[test]
    fn a2_conjugacy_classes() {
        let g = CoxeterGroup::parse("A2").unwrap();
        let a = TwistedAction::sigma(&g, &GenMap::identity_on(g.full_set(), 2)).unwrap();
        let o = orbits(&a);
        let sizes: Vec<usize> = o.members.iter().map(|m| m.len()).collect();
        assert_eq!(sizes, [1, 3, 2]);
    }

    #[test]
    fn reduce_longest_reflection_in_a2() {
        let g = CoxeterGroup::parse("A2").unwrap();
        let a = TwistedAction::sigma(&g, &GenMap::identity_on(g.full_set(), 2)).unwrap();
        let w = g.parse_element("1,2,1").unwrap();
        let chain = reduce_to_min(&a, w.index()).unwrap();
        assert!(chain.is_valid(&a));
        assert_eq!(a.length(chain.end()), 1);
        assert_eq!(chain.steps.len(), 1);
    }

    #[test]
    fn coxeter_elements_are_cyclic_shifts() {
        let g = CoxeterGroup::parse("A2").unwrap();
        let a = TwistedAction::sigma(&g, &GenMap::identity_on(g.full_set(), 2)).unwrap();
        let c = cyc_class(&a, g.parse_element("1,2").unwrap().index()).unwrap();
        let words: Vec<String> = c.members.iter().map(|&s| a.describe(s)).collect();
        assert_eq!(words, ["1,2", "2,1"]);
        assert!(c.terminal);
    }

    #[test]
    fn strong_conjugacy_needs_equal_length() {
        let g = CoxeterGroup::parse("A2").unwrap();
        let a = TwistedAction::sigma(&g, &GenMap::identity_on(g.full_set(), 2)).unwrap();
        let r = strongly_conjugate(&a, 1, 5);
        assert!(matches!(r, Err(crate::Error::LengthMismatch(1, 3))));
    }

    #[test]
    fn pair_action_theorem_on_a2_a2() {
        let g = CoxeterGroup::parse("A2").unwrap();
        let sys = g.system();
        let c = AdmissibleTriple::new(sys, sys, GenMap::identity_on(GenSet::single(0), 2)).unwrap();
        let cp = AdmissibleTriple::identity(sys);
        let a = PairAction::new(&g, &g, c, cp).unwrap();
        let v = verify_reduction_theorem(&a, "thm", "A2xA2");
        assert!(v.pass, "{:?}", v.counterexample);
    }
}
