//! Twisted classes inside a piece, distinguished double cosets and their order.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::json;

use crate::coxcore::{Elem, GenMap, GenSet};
use crate::error::{Error, Result};
use crate::minlen::{orbit_of, ConjugationAction, TwistedAction};
use crate::verdict::Verdict;

use super::{Decomposition, PairSpace};

/// Correspondence between twisted classes of `W_I` and double cosets in a piece.
#[derive(Clone, Debug)]
pub struct ClassBijection {
    /// `σ` as a permutation of `I`.
    pub sigma: GenMap,
    /// Each `σ`-twisted class of `W_I` with the coset containing `(w₁ v, w₂)`.
    pub classes: Vec<(Vec<Elem>, usize)>,
}

impl PairSpace<'_> {
    /// `σ(v) = δ⁻¹(w₂⁻¹ δ'(w₁ v w₁⁻¹) w₂)` on `W_I`, evaluated on every element.
    pub fn piece_sigma(&self, w1: Elem, w2: Elem, i: GenSet) -> Result<GenMap> {
        let (g1, g2) = (self.g1, self.g2);
        let w1i = g1.inverse(w1);
        let w2i = g2.inverse(w2);
        let mut images = BTreeMap::new();
        for &v in self.parabolic1(i) {
            let x = g1.mul3(w1, v, w1i);
            if !g1.in_parabolic(x, self.cp.j1) {
                return Err(Error::SigmaNotInternal(format!("{} conjugates out of W_J'1", g1.word_string(v))));
            }
            let y = g2.mul3(w2i, self.deltap(x), w2);
            if !g2.in_parabolic(y, self.c.j2) {
                return Err(Error::SigmaNotInternal(format!("{} conjugates out of W_J2", g1.word_string(v))));
            }
            let z = self.delta_inv(y);
            if !g1.in_parabolic(z, i) {
                return Err(Error::SigmaNotInternal(format!("σ({}) leaves W_{i}", g1.word_string(v))));
            }
            images.insert(v, z);
        }
        let pairs: Vec<(usize, usize)> = i
            .iter()
            .map(|k| {
                let z = images[&g1.generator(k)];
                match g1.word(z) {
                    [m] => Ok((k, *m as usize)),
                    _ => Err(Error::SigmaNotInternal(format!("σ(s{}) is not a generator", k + 1))),
                }
            })
            .collect::<Result<_>>()?;
        let sigma = GenMap::from_pairs(g1.rank(), g1.rank(), &pairs)?;
        if sigma.image() != i {
            return Err(Error::SigmaNotInternal(format!("σ maps {i} onto {}", sigma.image())));
        }
        for (&v, &z) in &images {
            if g1.apply_map(v, &sigma, g1)? != z {
                return Err(Error::SigmaNotInternal(format!("σ is not multiplicative at {}", g1.word_string(v))));
            }
        }
        Ok(sigma)
    }

    /// The map `v ↦ (w₁ v, w₂)` from `σ`-twisted classes of `W_I` to double
    /// cosets in the piece; errors unless it is a bijection.
    pub fn piece_class_bijection(&self, d: &Decomposition, piece: usize) -> Result<ClassBijection> {
        let p = &d.pieces[piece];
        let sigma = self.piece_sigma(p.w1, p.w2, p.i)?;
        let act = TwistedAction::new(self.g1, sigma.clone())?;
        let mut seen = BTreeSet::new();
        let mut classes = Vec::new();
        for &v in self.parabolic1(p.i) {
            if seen.contains(&v) {
                continue;
            }
            let class: Vec<Elem> = orbit_of(&act, v.index()).into_iter().map(|s| Elem(s as u32)).collect();
            let cosets: BTreeSet<u32> = class
                .iter()
                .map(|&u| d.coset_of[self.action().encode(self.g1.mul(p.w1, u), p.w2)])
                .collect();
            if cosets.len() != 1 {
                return Err(Error::OracleMismatch(format!(
                    "twisted class of {} meets {} double cosets",
                    self.g1.word_string(v),
                    cosets.len()
                )));
            }
            seen.extend(class.iter().copied());
            let mut class = class;
            class.sort_unstable();
            classes.push((class, *cosets.iter().next().unwrap() as usize));
        }
        let hit: BTreeSet<usize> = classes.iter().map(|c| c.1).collect();
        let want: BTreeSet<usize> = p.cosets.iter().copied().collect();
        if hit.len() != classes.len() || hit != want {
            return Err(Error::OracleMismatch(format!(
                "piece {}: {} twisted classes, {} double cosets",
                self.describe(p.w1, p.w2),
                classes.len(),
                want.len()
            )));
        }
        Ok(ClassBijection { sigma, classes })
    }

    /// `W(w₁, w₂)`: all `v ∈ W_{J₁}` whose iterates under
    /// `v ↦ δ⁻¹(w₂⁻¹ δ'(w₁ v w₁⁻¹) w₂)` stay defined forever.
    pub fn stable_subgroup(&self, w1: Elem, w2: Elem) -> Vec<Elem> {
        let (g1, g2) = (self.g1, self.g2);
        let (w1i, w2i) = (g1.inverse(w1), g2.inverse(w2));
        let step = |v: Elem| -> Option<Elem> {
            let x = g1.mul3(w1, v, w1i);
            if !g1.in_parabolic(x, self.cp.j1) {
                return None;
            }
            let y = g2.mul3(w2i, self.deltap(x), w2);
            g2.in_parabolic(y, self.c.j2).then(|| self.delta_inv(y))
        };
        let mut out = Vec::new();
        'outer: for &v in self.parabolic1(self.c.j1) {
            let mut seen = BTreeSet::from([v]);
            let mut cur = v;
            loop {
                match step(cur) {
                    None => continue 'outer,
                    Some(n) if seen.contains(&n) => break,
                    Some(n) => {
                        seen.insert(n);
                        cur = n;
                    }
                }
            }
            out.push(v);
        }
        out
    }

    fn product_leq(&self, x: usize, y: usize) -> bool {
        let act = self.action();
        let (a, b) = act.decode(x);
        let (c, d) = act.decode(y);
        self.g1.bruhat_leq(a, c) && self.g2.bruhat_leq(b, d)
    }

    /// The order on distinguished cosets: some minimal element of `o` lies below
    /// the first minimal element of `op`.
    pub fn coset_leq(&self, d: &Decomposition, o: usize, op: usize) -> Result<bool> {
        let (a, b) = (&d.cosets[o], &d.cosets[op]);
        if !a.distinguished || !b.distinguished {
            return Err(Error::NotDistinguished);
        }
        let wp = b.min[0];
        Ok(a.min.iter().any(|&w| self.product_leq(w, wp)))
    }

    /// Runs every check on distinguished cosets over one pair of triples.
    pub fn distinguished_analysis(&self, d: &Decomposition, scope: &str) -> Vec<Verdict> {
        let act = self.action();
        let desc = |s: usize| json!(act.describe(s));

        let mut canon = Verdict::new("cor2.5", scope);
        let mut canon_alt = Verdict::new("cor2.5-alt", scope);
        for o in &d.cosets {
            let hits: Vec<usize> = o
                .members
                .iter()
                .copied()
                .filter(|&s| {
                    let (a, b) = act.decode(s);
                    self.is_left_reduced(a) && self.is_right_reduced(b)
                })
                .collect();
            canon.require(hits.len() <= 1, || json!({ "coset": desc(o.members[0]), "canonical": hits.iter().map(|&s| desc(s)).collect::<Vec<_>>() }));
            let alt: Vec<usize> = o
                .members
                .iter()
                .copied()
                .filter(|&s| {
                    let (a, b) = act.decode(s);
                    self.g1.is_min_right(a, self.c.j1) && self.g2.is_min_left(self.cp.j2, b)
                })
                .collect();
            canon_alt.require(alt.len() <= 1, || json!({ "coset": desc(o.members[0]), "pairs": alt.iter().map(|&s| desc(s)).collect::<Vec<_>>() }));
        }

        let mut self_pairs = Verdict::new("prop4.3", scope);
        for a in self.g1.elements().filter(|&a| self.g1.is_min_right(a, self.c.j1)) {
            for b in self.g2.elements().filter(|&b| self.g2.is_min_left(self.cp.j2, b)) {
                let s = act.encode(a, b);
                let o = &d.cosets[d.coset_of[s] as usize];
                self_pairs.require(o.distinguished && o.min.contains(&s), || json!({ "pair": desc(s) }));
            }
        }

        let mut transport = Verdict::new("lemma4.1", scope);
        for p in &d.pieces {
            let got = self.stable_subgroup(p.w1, p.w2);
            let want = self.parabolic1(p.i).to_vec();
            transport.require(got == want, || {
                json!({ "pair": self.describe(p.w1, p.w2), "I": p.i.labels(), "found": got.len(), "expected": want.len() })
            });
        }
        // Second form: pairs in W₁^{J₁} × ᴶ'²W₂ against the reversed triples.
        if let Ok(rev) = PairSpace::new(self.g2, self.g1, self.c.inverse(), self.cp.inverse()) {
            for a in self.g1.elements().filter(|&a| self.g1.is_min_right(a, self.c.j1)) {
                for b in self.g2.elements().filter(|&b| self.g2.is_min_left(self.cp.j2, b)) {
                    let ok = match rev.compute_i(b, a) {
                        Ok(i) => {
                            let k = self.c.delta.inverse().image_of(i);
                            self.stable_subgroup(a, b) == self.parabolic1(k).to_vec()
                        }
                        Err(_) => false,
                    };
                    transport.require(ok, || json!({ "pair": self.describe(a, b), "form": "reversed" }));
                }
            }
        } else {
            transport.fail(json!("reversed triples rejected"));
        }

        let mut bruhat_min = Verdict::new("cor4.5", scope);
        for o in d.cosets.iter().filter(|o| o.distinguished) {
            let minimal: Vec<usize> = o
                .members
                .iter()
                .copied()
                .filter(|&x| !o.members.iter().any(|&y| y != x && self.product_leq(y, x)))
                .collect();
            bruhat_min.require(minimal == o.min, || {
                json!({ "coset": desc(o.members[0]), "bruhat_minimal": minimal.iter().map(|&s| desc(s)).collect::<Vec<_>>() })
            });
        }

        let mut minimality = Verdict::new("lemma4.4", scope);
        let mut moves = Vec::new();
        // Predecessors: w'₁ with a non-increasing move w'₁ → w'.
        let mut pred: Vec<Vec<usize>> = vec![Vec::new(); act.state_count()];
        for s in 0..act.state_count() {
            moves.clear();
            act.moves(s, &mut moves);
            for &(_, t) in &moves {
                if act.length(t) <= act.length(s) {
                    pred[t].push(s);
                }
            }
        }
        for o in &d.cosets {
            for &w in &o.min {
                for wp in 0..act.state_count() {
                    if !self.product_leq(w, wp) {
                        continue;
                    }
                    for &w1 in &pred[wp] {
                        let ok = o.min.iter().any(|&m| self.product_leq(m, w1));
                        minimality.require(ok, || json!({ "w": desc(w), "w'": desc(wp), "w'1": desc(w1) }));
                    }
                }
            }
        }

        let mut order = Verdict::new("cor4.6", scope);
        let dist: Vec<usize> = (0..d.cosets.len()).filter(|&i| d.cosets[i].distinguished).collect();
        let mut rel = BTreeMap::new();
        for &a in &dist {
            for &b in &dist {
                let answers: Vec<bool> = d.cosets[b]
                    .min
                    .iter()
                    .map(|&wp| d.cosets[a].min.iter().any(|&w| self.product_leq(w, wp)))
                    .collect();
                let all_same = answers.iter().all(|&x| x == answers[0]);
                order.require(all_same, || json!({ "lower": desc(d.cosets[a].members[0]), "upper": desc(d.cosets[b].members[0]) }));
                rel.insert((a, b), answers[0]);
            }
        }
        let mut antisym = Verdict::new("order-antisymmetry", scope);
        for &a in &dist {
            antisym.require(rel[&(a, a)], || json!({ "not_reflexive": desc(d.cosets[a].members[0]) }));
            for &b in &dist {
                if a < b {
                    antisym.require(!(rel[&(a, b)] && rel[&(b, a)]), || {
                        json!({ "cosets": [desc(d.cosets[a].members[0]), desc(d.cosets[b].members[0])] })
                    });
                }
                for &c in &dist {
                    if rel[&(a, b)] && rel[&(b, c)] {
                        antisym.require(rel[&(a, c)], || json!({ "not_transitive": [a, b, c] }));
                    }
                }
            }
        }
        antisym.detail("relations", rel.values().filter(|&&x| x).count());

        vec![canon, canon_alt, self_pairs, transport, bruhat_min, minimality, order, antisym]
    }
}
