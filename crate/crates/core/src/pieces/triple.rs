use std::fmt;

use serde::Serialize;

use crate::coxcore::{CoxeterSystem, GenMap, GenSet};
use crate::error::{Error, Result};

/// `(J₁, J₂, δ)` with `δ : J₁ → J₂` a bijection preserving the Coxeter matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdmissibleTriple {
    pub j1: GenSet,
    pub j2: GenSet,
    pub delta: GenMap,
}

impl AdmissibleTriple {
    /// Domain and image of `delta` become `J₁` and `J₂`.
    pub fn new(source: &CoxeterSystem, target: &CoxeterSystem, delta: GenMap) -> Result<Self> {
        if delta.source_rank() != source.rank() || delta.target_rank() != target.rank() {
            return Err(Error::BadIsomorphism("generator map has the wrong ranks".into()));
        }
        if !source.matrix().preserves(target.matrix(), &delta) {
            return Err(Error::BadIsomorphism(format!("{delta} does not preserve bond orders")));
        }
        Ok(AdmissibleTriple { j1: delta.domain(), j2: delta.image(), delta })
    }

    /// Parses `J₁`, `J₂` and `δ` as given on the command line and checks they agree.
    pub fn parse(source: &CoxeterSystem, target: &CoxeterSystem, j1: &str, j2: &str, delta: &str) -> Result<Self> {
        let j1 = GenSet::parse(j1, source.rank())?;
        let j2 = GenSet::parse(j2, target.rank())?;
        let delta = GenMap::parse(delta, source.rank(), target.rank(), j1)?;
        let t = AdmissibleTriple::new(source, target, delta)?;
        if t.j1 != j1 || t.j2 != j2 {
            return Err(Error::BadIsomorphism(format!(
                "δ maps {} onto {}, not {} onto {}",
                t.j1, t.j2, j1, j2
            )));
        }
        Ok(t)
    }

    /// Every admissible triple between the two systems, ordered by `J₁` then by the images.
    pub fn all(source: &CoxeterSystem, target: &CoxeterSystem) -> Vec<Self> {
        let (r1, r2) = (source.rank(), target.rank());
        let mut out = Vec::new();
        for j1 in GenSet::full(r1).subsets() {
            let dom: Vec<usize> = j1.iter().collect();
            let mut img = Vec::with_capacity(dom.len());
            extend_maps(source, target, &dom, &mut img, &mut |img| {
                let pairs: Vec<(usize, usize)> = dom.iter().copied().zip(img.iter().copied()).collect();
                let map = GenMap::from_pairs(r1, r2, &pairs).expect("injective by construction");
                out.push(AdmissibleTriple { j1, j2: map.image(), delta: map });
            });
        }
        out
    }

    /// `(I, I, id)`.
    pub fn identity(sys: &CoxeterSystem) -> Self {
        let full = GenSet::full(sys.rank());
        AdmissibleTriple { j1: full, j2: full, delta: GenMap::identity_on(full, sys.rank()) }
    }

    /// `(J₂, J₁, δ⁻¹)`.
    pub fn inverse(&self) -> Self {
        AdmissibleTriple { j1: self.j2, j2: self.j1, delta: self.delta.inverse() }
    }

    pub fn to_json(&self) -> TripleJson {
        TripleJson {
            j1: self.j1.labels(),
            j2: self.j2.labels(),
            delta: self.delta.labelled_pairs(),
        }
    }
}

impl fmt::Display for AdmissibleTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.j1, self.j2, self.delta)
    }
}

fn extend_maps(
    source: &CoxeterSystem,
    target: &CoxeterSystem,
    dom: &[usize],
    img: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let k = img.len();
    if k == dom.len() {
        emit(img);
        return;
    }
    for t in 0..target.rank() {
        if img.contains(&t) {
            continue;
        }
        let ok = (0..k).all(|p| source.matrix().get(dom[p], dom[k]) == target.matrix().get(img[p], t));
        if ok {
            img.push(t);
            extend_maps(source, target, dom, img, emit);
            img.pop();
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleJson {
    #[serde(rename = "J1")]
    pub j1: Vec<usize>,
    #[serde(rename = "J2")]
    pub j2: Vec<usize>,
    pub delta: Vec<(usize, usize)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_admissible_is_admissible() {
        let a3 = CoxeterSystem::parse("A3").unwrap();
        let t = AdmissibleTriple::parse(&a3, &a3, "1,2", "2,3", "1:2,2:3").unwrap();
        let inv = t.inverse();
        assert!(AdmissibleTriple::new(&a3, &a3, inv.delta.clone()).is_ok());
        assert_eq!(inv.j1, t.j2);
    }

    #[test]
    fn bond_orders_must_match() {
        let b3 = CoxeterSystem::parse("B3").unwrap();
        // {1,2} has bond 3, {2,3} has bond 4.
        assert!(AdmissibleTriple::parse(&b3, &b3, "1,2", "2,3", "1:2,2:3").is_err());
        assert!(AdmissibleTriple::parse(&b3, &b3, "1", "3", "1:3").is_ok());
    }

    #[test]
    fn counts_all_triples() {
        let a2 = CoxeterSystem::parse("A2").unwrap();
        assert_eq!(AdmissibleTriple::all(&a2, &a2).len(), 7);
        let a1 = CoxeterSystem::parse("A1").unwrap();
        let b2 = CoxeterSystem::parse("B2").unwrap();
        assert_eq!(AdmissibleTriple::all(&a1, &b2).len(), 3);
    }
}
