//! Sequences of nested generator subsets and coset representatives attached to
//! pairs of minimal coset representatives, and the projection onto pieces.

use crate::coxcore::{Elem, GenSet};
use crate::error::{Error, Result};
use crate::minlen::{ConjugationAction, ReductionChain, ReductionStep};

use super::PairSpace;

/// One term `(J₁⁽ⁿ⁾, J'₂⁽ⁿ⁾, w₁⁽ⁿ⁾, w₂⁽ⁿ⁾)` of a sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BedardState {
    pub j1: GenSet,
    pub j2p: GenSet,
    pub w1: Elem,
    pub w2: Elem,
}

/// Which of the two recursions a sequence follows.
///
/// `Standard` starts from `J₁⁽⁰⁾ = J₁` and computes `J'₂⁽ⁿ⁾` from the current
/// `w₁⁽ⁿ⁾`; `Variant` starts from `J'₂⁽⁰⁾ = J'₂`, computes `J₁⁽ⁿ⁾` from the current
/// `w₂⁽ⁿ⁾` and `J'₂⁽ⁿ⁾` from the previous `w₁⁽ⁿ⁻¹⁾`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recursion {
    Standard,
    Variant,
}

/// Full state of the extended recursion used by the projection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct ExtState {
    base: BedardState,
    u1: Elem,
    u2: Elem,
    v1: Elem,
    v2: Elem,
}

/// Output of [`PairSpace::project`].
#[derive(Clone, Debug)]
pub struct Projection {
    /// The index `(w₁, w₂)` of the piece containing the input.
    pub w1: Elem,
    pub w2: Elem,
    /// `I(w₁, w₂)`, read off the stable part of the sequence.
    pub i: GenSet,
    /// Non-increasing moves from the input to `(w₁ v, w₂)` with `v ∈ W_I`.
    pub chain: ReductionChain,
    /// The `(J₁⁽ⁿ⁾, J'₂⁽ⁿ⁾, w₁⁽ⁿ⁾, w₂⁽ⁿ⁾)` part of the sequence up to the first repeated state.
    pub states: Vec<BedardState>,
}

impl PairSpace<'_> {
    fn step_cap(&self) -> usize {
        4 * (self.g1.rank() + self.g2.rank()) + 8
    }

    fn check_reduced(&self, w1: Elem, w2: Elem) -> Result<()> {
        if !self.is_left_reduced(w1) {
            return Err(Error::NotInMinimalCosetForm(format!(
                "{} has a left descent in {}",
                self.g1.word_string(w1),
                self.cp.j1
            )));
        }
        if !self.is_right_reduced(w2) {
            return Err(Error::NotInMinimalCosetForm(format!(
                "{} has a right descent in {}",
                self.g2.word_string(w2),
                self.c.j2
            )));
        }
        Ok(())
    }

    /// The sequence attached to `(w₁, w₂) ∈ ᴶ'¹W₁ × W₂^{J₂}`, up to and including
    /// the first term equal to its predecessor (all later terms repeat it).
    pub fn psi(&self, w1: Elem, w2: Elem, rec: Recursion) -> Result<Vec<BedardState>> {
        self.check_reduced(w1, w2)?;
        let (g1, g2) = (self.g1, self.g2);
        let mut out: Vec<BedardState> = Vec::new();
        let first = match rec {
            Recursion::Standard => {
                let j1 = self.c.j1;
                let a = g1.min_right_coset(w1, j1);
                let j2p = self.forward(a, j1);
                BedardState { j1, j2p, w1: a, w2: g2.min_left_coset(j2p, w2) }
            }
            Recursion::Variant => {
                let j2p = self.cp.j2;
                let b = g2.min_left_coset(j2p, w2);
                let j1 = self.backward(b, j2p);
                BedardState { j1, j2p, w1: g1.min_right_coset(w1, j1), w2: b }
            }
        };
        out.push(first);
        loop {
            if out.len() > self.step_cap() {
                return Err(Error::NonStabilizing(out.len()));
            }
            let prev = *out.last().unwrap();
            let next = match rec {
                Recursion::Standard => {
                    let j1 = self.backward(prev.w2, prev.j2p);
                    let a = g1.min_right_coset(w1, j1);
                    let j2p = self.forward(a, j1);
                    BedardState { j1, j2p, w1: a, w2: g2.min_left_coset(j2p, w2) }
                }
                Recursion::Variant => {
                    let j2p = self.forward(prev.w1, prev.j1);
                    let b = g2.min_left_coset(j2p, w2);
                    let j1 = self.backward(b, j2p);
                    BedardState { j1, j2p, w1: g1.min_right_coset(w1, j1), w2: b }
                }
            };
            if next == prev {
                return Ok(out);
            }
            out.push(next);
        }
    }

    /// Checks the defining conditions of a sequence on a finite prefix whose
    /// last term is stable, and returns its limit.
    pub fn phi(&self, seq: &[BedardState], rec: Recursion) -> Result<(Elem, Elem)> {
        let Some(last) = seq.last() else {
            return Err(Error::NotInMinimalCosetForm("empty sequence".into()));
        };
        for (n, s) in seq.iter().enumerate() {
            let prev = n.checked_sub(1).map(|p| seq[p]);
            self.check_term(s, prev, rec).map_err(|e| match e {
                Error::NotInMinimalCosetForm(m) => Error::NotInMinimalCosetForm(format!("term {n}: {m}")),
                e => e,
            })?;
        }
        // The term after the last one must equal it.
        self.check_term(last, Some(*last), rec)
            .map_err(|_| Error::NonStabilizing(seq.len()))?;
        Ok((last.w1, last.w2))
    }

    fn check_term(&self, s: &BedardState, prev: Option<BedardState>, rec: Recursion) -> Result<()> {
        let bad = |m: &str| Err(Error::NotInMinimalCosetForm(m.to_string()));
        let (g1, g2) = (self.g1, self.g2);
        if !s.j1.is_subset(self.c.j1) || !s.j2p.is_subset(self.cp.j2) {
            return bad("subset out of range");
        }
        let (want_j1, want_j2p) = match (rec, prev) {
            (Recursion::Standard, None) => (self.c.j1, self.forward(s.w1, self.c.j1)),
            (Recursion::Standard, Some(p)) => {
                let j1 = self.backward(p.w2, p.j2p);
                (j1, self.forward(s.w1, j1))
            }
            (Recursion::Variant, None) => (self.backward(s.w2, self.cp.j2), self.cp.j2),
            (Recursion::Variant, Some(p)) => (self.backward(s.w2, s.j2p), self.forward(p.w1, p.j1)),
        };
        if s.j1 != want_j1 || s.j2p != want_j2p {
            return bad("generator subsets do not follow the recursion");
        }
        if !g1.is_min_left(self.cp.j1, s.w1) || !g1.is_min_right(s.w1, s.j1) {
            return bad("w1 is not a minimal double coset representative");
        }
        if !g2.is_min_left(s.j2p, s.w2) || !g2.is_min_right(s.w2, self.c.j2) {
            return bad("w2 is not a minimal double coset representative");
        }
        if let Some(p) = prev {
            let x = g1.mul(g1.inverse(p.w1), s.w1);
            let y = g2.mul(s.w2, g2.inverse(p.w2));
            if !g1.in_parabolic(x, p.j1) || !g2.in_parabolic(y, p.j2p) {
                return bad("consecutive representatives lie in different cosets");
            }
        }
        Ok(())
    }

    /// Every sequence satisfying the defining conditions, each truncated after
    /// its first repeated term. Exhaustive search over the allowed choices.
    pub fn enumerate_sequences(&self, rec: Recursion) -> Result<Vec<Vec<BedardState>>> {
        let (g1, g2) = (self.g1, self.g2);
        let mut out = Vec::new();
        let mut firsts = Vec::new();
        match rec {
            Recursion::Standard => {
                let j1 = self.c.j1;
                for a in g1.elements() {
                    if !g1.is_min_left(self.cp.j1, a) || !g1.is_min_right(a, j1) {
                        continue;
                    }
                    let j2p = self.forward(a, j1);
                    for b in g2.elements() {
                        if g2.is_min_left(j2p, b) && g2.is_min_right(b, self.c.j2) {
                            firsts.push(BedardState { j1, j2p, w1: a, w2: b });
                        }
                    }
                }
            }
            Recursion::Variant => {
                let j2p = self.cp.j2;
                for b in g2.elements() {
                    if !g2.is_min_left(j2p, b) || !g2.is_min_right(b, self.c.j2) {
                        continue;
                    }
                    let j1 = self.backward(b, j2p);
                    for a in g1.elements() {
                        if g1.is_min_left(self.cp.j1, a) && g1.is_min_right(a, j1) {
                            firsts.push(BedardState { j1, j2p, w1: a, w2: b });
                        }
                    }
                }
            }
        }
        for f in firsts {
            let mut path = vec![f];
            self.extend(&mut path, rec, &mut out)?;
        }
        Ok(out)
    }

    fn extend(&self, path: &mut Vec<BedardState>, rec: Recursion, out: &mut Vec<Vec<BedardState>>) -> Result<()> {
        if path.len() > self.step_cap() {
            return Err(Error::NonStabilizing(path.len()));
        }
        let p = *path.last().unwrap();
        let (g1, g2) = (self.g1, self.g2);
        let w1_choices = |j1: GenSet| -> Vec<Elem> {
            self.parabolic1(p.j1)
                .iter()
                .map(|&x| g1.mul(p.w1, x))
                .filter(|&a| g1.is_min_left(self.cp.j1, a) && g1.is_min_right(a, j1))
                .collect()
        };
        let w2_choices = |j2p: GenSet| -> Vec<Elem> {
            self.parabolic2(p.j2p)
                .iter()
                .map(|&y| g2.mul(y, p.w2))
                .filter(|&b| g2.is_min_left(j2p, b) && g2.is_min_right(b, self.c.j2))
                .collect()
        };
        let mut nexts = Vec::new();
        match rec {
            Recursion::Standard => {
                let j1 = self.backward(p.w2, p.j2p);
                for a in w1_choices(j1) {
                    let j2p = self.forward(a, j1);
                    for b in w2_choices(j2p) {
                        nexts.push(BedardState { j1, j2p, w1: a, w2: b });
                    }
                }
            }
            Recursion::Variant => {
                let j2p = self.forward(p.w1, p.j1);
                for b in w2_choices(j2p) {
                    let j1 = self.backward(b, j2p);
                    for a in w1_choices(j1) {
                        nexts.push(BedardState { j1, j2p, w1: a, w2: b });
                    }
                }
            }
        }
        for n in nexts {
            if n == p {
                out.push(path.clone());
                continue;
            }
            path.push(n);
            self.extend(path, rec, out)?;
            path.pop();
        }
        Ok(())
    }

    /// `I(w₁, w₂)` as the stable `J₁⁽ⁿ⁾`, checked against [`PairSpace::brute_force_i`].
    pub fn compute_i(&self, w1: Elem, w2: Elem) -> Result<GenSet> {
        self.i_via(w1, w2, Recursion::Standard)
    }

    /// `I(w₁, w₂)` from the variant recursion, checked against the same oracle.
    pub fn compute_i_variant(&self, w1: Elem, w2: Elem) -> Result<GenSet> {
        self.i_via(w1, w2, Recursion::Variant)
    }

    fn i_via(&self, w1: Elem, w2: Elem, rec: Recursion) -> Result<GenSet> {
        let seq = self.psi(w1, w2, rec)?;
        let got = seq.last().unwrap().j1;
        let want = self.brute_force_i(w1, w2);
        if got != want {
            return Err(Error::OracleMismatch(format!(
                "I{} = {got} from the recursion but {want} by search",
                self.describe(w1, w2)
            )));
        }
        Ok(got)
    }

    /// Largest `K ⊆ J₁` with `w₁(K) ⊆ J'₁` and `δ' w₁ K = w₂ δ K`, found by
    /// checking every subset. The admissible subsets are closed under union, so
    /// the union of all of them is the maximum.
    pub fn brute_force_i(&self, w1: Elem, w2: Elem) -> GenSet {
        let mut best = GenSet::EMPTY;
        for k in self.c.j1.subsets() {
            if self.i_condition(w1, w2, k) {
                best = best.union(k);
            }
        }
        debug_assert!(self.i_condition(w1, w2, best));
        best
    }

    fn i_condition(&self, w1: Elem, w2: Elem, k: GenSet) -> bool {
        let mut left = GenSet::EMPTY;
        for i in k.iter() {
            match self.g1.conj_simple(w1, i) {
                Some(m) if self.cp.j1.contains(m) => left.insert(self.cp.delta.apply(m)),
                _ => return false,
            }
        }
        let mut right = GenSet::EMPTY;
        for i in k.iter() {
            match self.g2.conj_simple(w2, self.c.delta.apply(i)) {
                Some(m) => right.insert(m),
                None => return false,
            }
        }
        left == right
    }

    /// Projects an arbitrary pair onto the index of its piece by the extended
    /// recursion, and records the non-increasing moves it performs.
    pub fn project(&self, w1: Elem, w2: Elem) -> Result<Projection> {
        let (g1, g2) = (self.g1, self.g2);
        let act = self.action();
        let mut chain = ReductionChain { start: act.encode(w1, w2), steps: Vec::new() };
        let mut cur = (w1, w2);

        let u1 = g1.min_left_coset(self.cp.j1, w1);
        let v1 = g1.mul(w1, g1.inverse(u1));
        let a = g1.min_right_coset(u1, self.c.j1);
        let j1 = self.c.j1;
        let j2p = self.forward(a, j1);
        self.left_segment(v1, &mut cur, &mut chain);
        let s = cur.1;
        let u2 = g2.min_right_coset(s, self.c.j2);
        let v2 = g2.mul(g2.inverse(u2), s);
        self.right_segment(v2, &mut cur, &mut chain);
        let b = g2.min_left_coset(j2p, u2);
        let mut state = ExtState { base: BedardState { j1, j2p, w1: a, w2: b }, u1, u2, v1, v2 };
        let mut seen = std::collections::HashMap::from([(state, 0usize)]);
        let mut states = vec![state.base];

        loop {
            if states.len() > 64 * self.step_cap() {
                return Err(Error::NonStabilizing(states.len()));
            }
            let p = state;
            let j1 = self.backward(p.base.w2, p.base.j2p);
            let t = g1.mul(p.u1, g1.inverse(self.delta_inv(p.v2)));
            let u1 = g1.min_left_coset(self.cp.j1, t);
            let v1 = g1.mul(t, g1.inverse(u1));
            let a = g1.min_right_coset(u1, j1);
            let j2p = self.forward(a, j1);
            self.left_segment(v1, &mut cur, &mut chain);
            let s = g2.mul(g2.inverse(self.deltap(v1)), p.u2);
            let u2 = g2.min_right_coset(s, self.c.j2);
            let v2 = g2.mul(g2.inverse(u2), s);
            self.right_segment(v2, &mut cur, &mut chain);
            let b = g2.min_left_coset(j2p, u2);
            state = ExtState { base: BedardState { j1, j2p, w1: a, w2: b }, u1, u2, v1, v2 };
            if seen.contains_key(&state) {
                break;
            }
            seen.insert(state, states.len());
            states.push(state.base);
        }

        let fin = state.base;
        if state.u1 != fin.w1 || state.u2 != fin.w2 {
            return Err(Error::OracleMismatch(format!(
                "projection of {} did not settle on its coset representatives",
                self.describe(w1, w2)
            )));
        }
        let v = g1.mul(g1.inverse(fin.w1), cur.0);
        if cur.1 != fin.w2 || !g1.in_parabolic(v, fin.j1) {
            return Err(Error::OracleMismatch(format!(
                "moves from {} end at {}, outside the piece representative set",
                self.describe(w1, w2),
                self.describe(cur.0, cur.1)
            )));
        }
        Ok(Projection { w1: fin.w1, w2: fin.w2, i: fin.j1, chain, states })
    }

    /// Left-multiplies `cur` by `(v⁻¹, δ'(v)⁻¹)` one generator at a time.
    fn left_segment(&self, v: Elem, cur: &mut (Elem, Elem), chain: &mut ReductionChain) {
        for &i in self.g1.word(v) {
            let i = i as usize;
            let next = (self.g1.lmul_gen(i, cur.0), self.g2.lmul_gen(self.cp.delta.apply(i), cur.1));
            self.push_step(chain, -(i as i32) - 1, *cur, next);
            *cur = next;
        }
    }

    /// Right-multiplies `cur` by `(δ⁻¹(v), v)⁻¹` one generator at a time.
    fn right_segment(&self, v: Elem, cur: &mut (Elem, Elem), chain: &mut ReductionChain) {
        let inv = self.c.delta.inverse();
        for &b in self.g2.word(v).iter().rev() {
            let j = inv.apply(b as usize);
            let next = (self.g1.rmul_gen(cur.0, j), self.g2.rmul_gen(cur.1, b as usize));
            self.push_step(chain, j as i32 + 1, *cur, next);
            *cur = next;
        }
    }

    fn push_step(&self, chain: &mut ReductionChain, gen: i32, from: (Elem, Elem), to: (Elem, Elem)) {
        let act = self.action();
        let (f, t) = (act.encode(from.0, from.1), act.encode(to.0, to.1));
        chain.steps.push(ReductionStep { gen, from: f, to: t, from_len: act.length(f), to_len: act.length(t) });
    }
}
