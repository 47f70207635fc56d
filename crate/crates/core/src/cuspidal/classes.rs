//! Twisted conjugacy classes, cuspidality and the length functions `l_{i,σ}`.

use serde::Serialize;

use crate::coxcore::{CoxeterGroup, Elem, GenMap, GenSet};
use crate::error::Result;
use crate::minlen::{orbits, TwistedAction};

use super::{char_poly, CharPoly};

/// A `σ`-twisted conjugacy class.
#[derive(Clone, Debug)]
pub struct TwistedClass {
    /// Sorted; the first member is the ShortLex-least element.
    pub members: Vec<Elem>,
    /// Minimal-length members, sorted.
    pub min: Vec<Elem>,
    pub min_length: usize,
    pub cuspidal: bool,
    pub charpoly: CharPoly,
    /// `l_{i,σ}` of a minimal member, one entry per `σ`-orbit of generators.
    pub profile: Vec<usize>,
}

impl TwistedClass {
    pub fn representative(&self) -> Elem {
        self.min[0]
    }

    pub fn contains(&self, w: Elem) -> bool {
        self.members.binary_search(&w).is_ok()
    }
}

/// Generators sorted into conjugacy classes of reflections, found by
/// conjugating every simple reflection by every group element.
#[derive(Clone, Debug)]
pub struct GeneratorClasses {
    class_of: Vec<usize>,
}

impl GeneratorClasses {
    pub fn new(g: &CoxeterGroup) -> Self {
        let n = g.rank();
        let mut class_of: Vec<usize> = (0..n).collect();
        let mut linked = vec![GenSet::EMPTY; n];
        for i in 0..n {
            linked[i].insert(i);
            for x in g.elements() {
                if let Some(k) = g.conj_simple(x, i) {
                    linked[i].insert(k);
                }
            }
        }
        for i in 0..n {
            class_of[i] = linked[i].iter().next().unwrap_or(i);
        }
        GeneratorClasses { class_of }
    }

    /// Label of the class of `s_i`: its smallest member.
    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// The partition itself, as sets of generators.
    pub fn partition(&self) -> Vec<GenSet> {
        let mut out: Vec<GenSet> = Vec::new();
        for (i, &c) in self.class_of.iter().enumerate() {
            match out.iter_mut().find(|s| s.iter().next().map(|k| self.class_of[k]) == Some(c)) {
                Some(s) => s.insert(i),
                None => out.push(GenSet::single(i)),
            }
        }
        out
    }

    /// `l_i(w)`: letters of a reduced word conjugate to `s_i`.
    pub fn l_i(&self, g: &CoxeterGroup, w: Elem, i: usize) -> usize {
        let c = self.class_of[i];
        g.word(w).iter().filter(|&&k| self.class_of[k as usize] == c).count()
    }

    /// `l_{i,σ}(w) = Σ_k l_{σ^k(i)}(w)` over the `σ`-orbit of `i`.
    pub fn l_i_sigma(&self, g: &CoxeterGroup, w: Elem, sigma: &GenMap, i: usize) -> usize {
        sigma_orbit(sigma, i).into_iter().map(|k| self.l_i(g, w, k)).sum()
    }

    /// `l_{i,σ}(w)` for the smallest `i` of every `σ`-orbit.
    pub fn profile(&self, g: &CoxeterGroup, w: Elem, sigma: &GenMap) -> Vec<usize> {
        orbit_leaders(sigma, g.rank()).into_iter().map(|i| self.l_i_sigma(g, w, sigma, i)).collect()
    }
}

/// `i, σ(i), σ²(i), …` until it returns to `i`.
pub fn sigma_orbit(sigma: &GenMap, i: usize) -> Vec<usize> {
    let mut out = vec![i];
    let mut k = sigma.apply(i);
    while k != i {
        out.push(k);
        k = sigma.apply(k);
    }
    out
}

/// Smallest element of each `σ`-orbit on `0..rank`.
pub fn orbit_leaders(sigma: &GenMap, rank: usize) -> Vec<usize> {
    (0..rank).filter(|&i| sigma_orbit(sigma, i).iter().all(|&k| k >= i)).collect()
}

/// Proper `σ`-stable subsets of the generators.
pub fn proper_stable_subsets(sigma: &GenMap, rank: usize) -> Vec<GenSet> {
    GenSet::full(rank).subsets().filter(|&j| j.len() < rank && sigma.image_of(j) == j).collect()
}

/// Exact cuspidality test: no member lies in `W_J` for a proper `σ`-stable `J`.
pub fn is_cuspidal(g: &CoxeterGroup, members: &[Elem], sigma: &GenMap) -> bool {
    let stable = proper_stable_subsets(sigma, g.rank());
    !members.iter().any(|&w| stable.iter().any(|&j| g.in_parabolic(w, j)))
}

/// All `σ`-twisted classes of `W`, ordered by their ShortLex-least member.
pub fn twisted_classes(g: &CoxeterGroup, sigma: &GenMap) -> Result<Vec<TwistedClass>> {
    let act = TwistedAction::sigma(g, sigma)?;
    let gens = GeneratorClasses::new(g);
    let o = orbits(&act);
    o.members
        .iter()
        .map(|m| {
            let members: Vec<Elem> = m.iter().map(|&s| Elem(s as u32)).collect();
            let min_length = members.iter().map(|&w| g.length(w)).min().unwrap_or(0);
            let min: Vec<Elem> = members.iter().copied().filter(|&w| g.length(w) == min_length).collect();
            let rep = min[0];
            Ok(TwistedClass {
                cuspidal: is_cuspidal(g, &members, sigma),
                charpoly: char_poly(g, rep, sigma)?,
                profile: gens.profile(g, rep, sigma),
                members,
                min,
                min_length,
            })
        })
        .collect()
}

/// One row of the `classes` table.
#[derive(Clone, Debug, Serialize)]
pub struct ClassRow {
    pub representative: String,
    pub size: usize,
    pub min_length: usize,
    pub cuspidal: bool,
    pub charpoly: CharPoly,
    pub charpoly_text: String,
    pub profile: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<String>,
}

impl ClassRow {
    pub fn new(g: &CoxeterGroup, c: &TwistedClass, partition: Option<String>) -> Self {
        ClassRow {
            representative: g.word_string(c.representative()),
            size: c.members.len(),
            min_length: c.min_length,
            cuspidal: c.cuspidal,
            charpoly: c.charpoly.clone(),
            charpoly_text: c.charpoly.to_string(),
            profile: c.profile.clone(),
            partition,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(g: &CoxeterGroup) -> GenMap {
        GenMap::identity_on(g.full_set(), g.rank())
    }

    #[test]
    fn class_sizes() {
        let g = CoxeterGroup::parse("A2").unwrap();
        let cls = twisted_classes(&g, &id(&g)).unwrap();
        let sizes: Vec<usize> = cls.iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, [1, 3, 2]);
        assert_eq!(cls.iter().filter(|c| c.cuspidal).count(), 1);
        assert!(!cls[0].cuspidal);
        let a1 = CoxeterGroup::parse("A1").unwrap();
        assert_eq!(twisted_classes(&a1, &id(&a1)).unwrap().len(), 2);
    }

    #[test]
    fn length_functions() {
        let b2 = CoxeterGroup::parse("B2").unwrap();
        let gens = GeneratorClasses::new(&b2);
        let w = b2.parse_element("1,2,1,2").unwrap();
        assert_eq!((gens.l_i(&b2, w, 0), gens.l_i(&b2, w, 1)), (2, 2));
        assert_eq!(gens.partition().len(), 2);
        let a2 = CoxeterGroup::parse("A2").unwrap();
        let gens = GeneratorClasses::new(&a2);
        let w = a2.parse_element("1,2,1").unwrap();
        assert_eq!(gens.l_i(&a2, w, 0), 3);
        assert_eq!(gens.l_i_sigma(&a2, a2.identity(), &id(&a2), 0), 0);
        let sigma = GenMap::from_permutation(&[1, 0]).unwrap();
        assert_eq!(gens.l_i_sigma(&a2, w, &sigma, 0), 6);
    }
}
