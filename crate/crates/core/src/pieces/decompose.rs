//! Partition of `W₁ × W₂` into pieces and double cosets.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::coxcore::{Elem, GenMap, GenSet};
use crate::error::{Error, Result};
use crate::minlen::{orbit_of, orbits, ConjugationAction, TwistedAction};

use super::{PairSpace, TripleJson};

/// A double coset `W_{c'} (w₁, w₂) W_c`, states sorted ascending.
#[derive(Clone, Debug)]
pub struct DoubleCoset {
    pub members: Vec<usize>,
    pub min: Vec<usize>,
    /// Contains a pair from `ᴶ'¹W₁ × W₂^{J₂}`.
    pub distinguished: bool,
    /// Index of the piece containing the coset.
    pub piece: usize,
}

/// The piece indexed by `(w₁, w₂) ∈ ᴶ'¹W₁ × W₂^{J₂}`.
#[derive(Clone, Debug)]
pub struct Piece {
    pub w1: Elem,
    pub w2: Elem,
    pub i: GenSet,
    pub members: Vec<usize>,
    /// Indices into [`Decomposition::cosets`].
    pub cosets: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub pieces: Vec<Piece>,
    pub cosets: Vec<DoubleCoset>,
    /// Coset index of every state.
    pub coset_of: Vec<u32>,
    /// Piece index of every state.
    pub piece_of: Vec<u32>,
}

impl PairSpace<'_> {
    /// The double cosets, each with its minimal-length members, sorted by smallest member.
    pub fn double_cosets(&self) -> (Vec<u32>, Vec<Vec<usize>>) {
        let o = orbits(self.action());
        (o.orbit_of, o.members)
    }

    /// Partitions `W₁ × W₂` by the projection and checks every fibre against
    /// the union of double cosets through `(w₁ W_I, w₂)`.
    pub fn decompose(&self) -> Result<Decomposition> {
        let act = self.action();
        let n = act.state_count();
        let (coset_of, coset_members) = self.double_cosets();

        let proj: Vec<(Elem, Elem)> = (0..n)
            .into_par_iter()
            .map(|s| {
                let (a, b) = act.decode(s);
                self.project(a, b).map(|p| (p.w1, p.w2))
            })
            .collect::<Result<_>>()?;

        let index = self.index_pairs();
        let pos: BTreeMap<(Elem, Elem), usize> = index.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let mut piece_of = vec![0u32; n];
        let mut fibres: Vec<Vec<usize>> = vec![Vec::new(); index.len()];
        for (s, p) in proj.iter().enumerate() {
            let k = *pos.get(p).ok_or_else(|| {
                Error::OracleMismatch(format!("projection left the index set at {}", act.describe(s)))
            })?;
            piece_of[s] = k as u32;
            fibres[k].push(s);
        }

        let mut pieces = Vec::with_capacity(index.len());
        for (k, &(w1, w2)) in index.iter().enumerate() {
            let i = self.compute_i(w1, w2)?;
            let ids: BTreeSet<usize> = self
                .parabolic1(i)
                .iter()
                .map(|&v| coset_of[act.encode(self.g1.mul(w1, v), w2)] as usize)
                .collect();
            let mut closed: Vec<usize> = ids.iter().flat_map(|&c| coset_members[c].iter().copied()).collect();
            closed.sort_unstable();
            if closed != fibres[k] {
                return Err(Error::OracleMismatch(format!(
                    "piece {}: fibre has {} elements, closed form {}",
                    self.describe(w1, w2),
                    fibres[k].len(),
                    closed.len()
                )));
            }
            pieces.push(Piece { w1, w2, i, members: std::mem::take(&mut fibres[k]), cosets: ids.into_iter().collect() });
        }

        let mut cosets = Vec::with_capacity(coset_members.len());
        for members in coset_members {
            let m = members.iter().map(|&s| act.length(s)).min().unwrap_or(0);
            let min = members.iter().copied().filter(|&s| act.length(s) == m).collect();
            let distinguished = members.iter().any(|&s| {
                let (a, b) = act.decode(s);
                self.is_left_reduced(a) && self.is_right_reduced(b)
            });
            let piece = piece_of[members[0]] as usize;
            cosets.push(DoubleCoset { members, min, distinguished, piece });
        }
        Ok(Decomposition { pieces, cosets, coset_of, piece_of })
    }

    /// Machine-readable form of a decomposition.
    pub fn report(&self, d: &Decomposition) -> DecompositionReport {
        let act = self.action();
        let pair = |s: usize| {
            let (a, b) = act.decode(s);
            [self.g1.word_string(a), self.g2.word_string(b)]
        };
        DecompositionReport {
            triple: TriplesJson { c: self.c.to_json(), c_prime: self.cp.to_json() },
            pieces: d
                .pieces
                .iter()
                .map(|p| PieceReport {
                    w1: self.g1.word_string(p.w1),
                    w2: self.g2.word_string(p.w2),
                    i: p.i.labels(),
                    size: p.members.len(),
                    orbits: p
                        .cosets
                        .iter()
                        .map(|&c| {
                            let o = &d.cosets[c];
                            OrbitReport {
                                members: o.members.iter().map(|&s| pair(s)).collect(),
                                min: o.min.iter().map(|&s| pair(s)).collect(),
                                distinguished: o.distinguished,
                            }
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TriplesJson {
    pub c: TripleJson,
    pub c_prime: TripleJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub members: Vec<[String; 2]>,
    pub min: Vec<[String; 2]>,
    pub distinguished: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PieceReport {
    pub w1: String,
    pub w2: String,
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    pub size: usize,
    pub orbits: Vec<OrbitReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub triple: TriplesJson,
    pub pieces: Vec<PieceReport>,
}

/// One piece `[w, δ]` of `W` under `x · y = x y δ(x)⁻¹`, `x ∈ W_J`.
#[derive(Clone, Debug)]
pub struct OrbitPiece {
    pub w: Elem,
    /// `I(w, δ) ⊆ J'`.
    pub i: GenSet,
    pub members: Vec<Elem>,
    /// `W_J`-orbits inside the piece.
    pub orbits: Vec<Vec<Elem>>,
    /// Number of twisted classes of `W_I` under `v ↦ δ(w v w⁻¹)`.
    pub classes: usize,
}

/// `I(w, δ)`: the largest `K ⊆ J'` with `Ad(w)K ⊆ J` and `δ(Ad(w)K) = K`.
pub fn orbit_piece_i(g: &crate::coxcore::CoxeterGroup, delta: &GenMap, w: Elem) -> GenSet {
    let jp = delta.image();
    let mut best = GenSet::EMPTY;
    for k in jp.subsets() {
        let mut img = GenSet::EMPTY;
        let mut ok = true;
        for i in k.iter() {
            match g.conj_simple(w, i) {
                Some(m) if delta.domain().contains(m) => img.insert(delta.apply(m)),
                _ => ok = false,
            }
        }
        if ok && img == k {
            best = best.union(k);
        }
    }
    best
}

/// Decomposes `W` into the pieces `[w, δ] = W_J · (w W_{I(w,δ)})`, `w ∈ W^{J'}`,
/// checking that they partition `W` and that the orbits in each piece match the
/// twisted classes of `W_{I(w,δ)}`.
pub fn orbit_decomposition(g: &crate::coxcore::CoxeterGroup, delta: &GenMap) -> Result<Vec<OrbitPiece>> {
    let act = TwistedAction::new(g, delta.clone())?;
    let jp = delta.image();
    let o = orbits(&act);
    let mut owner = vec![usize::MAX; g.order()];
    let mut out = Vec::new();
    for w in g.elements().filter(|&w| g.is_min_right(w, jp)) {
        let i = orbit_piece_i(g, delta, w);
        let ids: BTreeSet<usize> =
            g.parabolic_elements(i).iter().map(|&v| o.orbit_of[g.mul(w, v).index()] as usize).collect();
        let orbit_list: Vec<Vec<Elem>> =
            ids.iter().map(|&c| o.members[c].iter().map(|&s| Elem(s as u32)).collect()).collect();
        let mut members: Vec<Elem> = orbit_list.iter().flatten().copied().collect();
        members.sort_unstable();
        for &m in &members {
            if owner[m.index()] != usize::MAX {
                return Err(Error::OracleMismatch(format!("{} lies in two pieces", g.word_string(m))));
            }
            owner[m.index()] = out.len();
        }
        // σ(v) = δ(w v w⁻¹) on the generators of W_I.
        let pairs: Vec<(usize, usize)> = i
            .iter()
            .map(|k| (k, delta.apply(g.conj_simple(w, k).expect("k ∈ I"))))
            .collect();
        let sigma = GenMap::from_pairs(g.rank(), g.rank(), &pairs)?;
        if sigma.image() != i {
            return Err(Error::SigmaNotInternal(format!("σ moves {i} to {}", sigma.image())));
        }
        let classes = twisted_class_count(g, &sigma, i)?;
        if classes != orbit_list.len() {
            return Err(Error::OracleMismatch(format!(
                "piece of {}: {classes} twisted classes but {} orbits",
                g.word_string(w),
                orbit_list.len()
            )));
        }
        out.push(OrbitPiece { w, i, members, orbits: orbit_list, classes });
    }
    if owner.contains(&usize::MAX) {
        return Err(Error::OracleMismatch("pieces do not cover the group".into()));
    }
    Ok(out)
}

/// Number of `σ`-twisted classes of `W_I` for `σ` a generator permutation of `I`.
pub(crate) fn twisted_class_count(g: &crate::coxcore::CoxeterGroup, sigma: &GenMap, i: GenSet) -> Result<usize> {
    let act = TwistedAction::new(g, sigma.clone())?;
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for v in g.parabolic_elements(i) {
        if seen.contains(&v.index()) {
            continue;
        }
        count += 1;
        seen.extend(orbit_of(&act, v.index()));
    }
    Ok(count)
}
