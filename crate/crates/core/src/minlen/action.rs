//! Group actions by conjugation-type moves on a finite set of states.

use crate::coxcore::{CoxeterGroup, Elem, GenMap, GenSet};
use crate::error::{Error, Result};
use crate::pieces::AdmissibleTriple;

/// A finite set of states with a length function and generator moves.
///
/// States are plain indices. Each move carries a signed label: `+j` for a
/// right (or two-sided twisted) move by generator `j`, `-i` for a left move,
/// both 1-based.
pub trait ConjugationAction: Sync {
    fn state_count(&self) -> usize;

    fn length(&self, s: usize) -> usize;

    /// All single-generator moves from `s`, in increasing label order.
    fn moves(&self, s: usize, out: &mut Vec<(i32, usize)>);

    /// Target of the move with the given label.
    fn apply_move(&self, s: usize, label: i32) -> Option<usize>;

    /// Whether the generator move `label` from `s` is an elementary strong conjugation.
    fn move_is_strong(&self, s: usize, label: i32) -> bool;

    /// Targets of all elementary strong conjugations from `s` (other than `s`).
    fn strong_neighbours(&self, s: usize) -> Vec<usize>;

    /// Human-readable form of a state.
    fn describe(&self, s: usize) -> String;
}

/// The twisted action `x · w = x w δ(x)⁻¹` of `W_J` on `W`, for `δ : J → J'`.
pub struct TwistedAction<'g> {
    g: &'g CoxeterGroup,
    j: GenSet,
    delta: GenMap,
    /// `(x, δ(x)⁻¹, l(x))` for every `x ∈ W_J`.
    parabolic: Vec<(Elem, Elem, usize)>,
}

impl<'g> TwistedAction<'g> {
    /// `delta` must preserve the Coxeter matrix on its domain `J`.
    pub fn new(g: &'g CoxeterGroup, delta: GenMap) -> Result<Self> {
        let sys = g.system();
        if delta.source_rank() != g.rank() || delta.target_rank() != g.rank() {
            return Err(Error::BadIsomorphism("generator map has the wrong rank".into()));
        }
        if !sys.matrix().preserves(sys.matrix(), &delta) {
            return Err(Error::BadIsomorphism(format!("{delta} does not preserve bond orders")));
        }
        let j = delta.domain();
        let parabolic = g
            .parabolic_elements(j)
            .into_iter()
            .map(|x| {
                let dx = g.apply_map(x, &delta, g).expect("x lies in W_J");
                (x, g.inverse(dx), g.length(x))
            })
            .collect();
        Ok(TwistedAction { g, j, delta, parabolic })
    }

    /// Twisted conjugation `w ↦ x w σ(x)⁻¹` by the whole group.
    pub fn sigma(g: &'g CoxeterGroup, sigma: &GenMap) -> Result<Self> {
        g.system().check_automorphism(sigma)?;
        TwistedAction::new(g, sigma.clone())
    }

    pub fn group(&self) -> &'g CoxeterGroup {
        self.g
    }

    pub fn j(&self) -> GenSet {
        self.j
    }

    pub fn delta(&self) -> &GenMap {
        &self.delta
    }

    /// `x w δ(x)⁻¹` for `x ∈ W_J`.
    pub fn act(&self, x: Elem, w: Elem) -> Result<Elem> {
        let dx = self.g.apply_map(x, &self.delta, self.g)?;
        Ok(self.g.mul3(x, w, self.g.inverse(dx)))
    }
}

impl ConjugationAction for TwistedAction<'_> {
    fn state_count(&self) -> usize {
        self.g.order()
    }

    fn length(&self, s: usize) -> usize {
        self.g.length(Elem(s as u32))
    }

    fn moves(&self, s: usize, out: &mut Vec<(i32, usize)>) {
        let w = Elem(s as u32);
        for j in self.j.iter() {
            let t = self.g.rmul_gen(self.g.lmul_gen(j, w), self.delta.apply(j));
            out.push((j as i32 + 1, t.index()));
        }
    }

    fn apply_move(&self, s: usize, label: i32) -> Option<usize> {
        let j = usize::try_from(label - 1).ok()?;
        if !self.j.contains(j) {
            return None;
        }
        let w = Elem(s as u32);
        Some(self.g.rmul_gen(self.g.lmul_gen(j, w), self.delta.apply(j)).index())
    }

    fn move_is_strong(&self, s: usize, label: i32) -> bool {
        let w = Elem(s as u32);
        let j = (label - 1) as usize;
        let l = self.g.length(w);
        self.g.length(self.g.lmul_gen(j, w)) == l + 1 || self.g.length(self.g.rmul_gen(w, self.delta.apply(j))) == l + 1
    }

    fn strong_neighbours(&self, s: usize) -> Vec<usize> {
        let g = self.g;
        let w = Elem(s as u32);
        let l = g.length(w);
        let mut out = Vec::new();
        for &(x, dxi, lx) in &self.parabolic {
            let xw = g.mul(x, w);
            let t = g.mul(xw, dxi);
            if t == w || g.length(t) != l {
                continue;
            }
            if g.length(xw) == lx + l || g.length(g.mul(w, dxi)) == lx + l {
                out.push(t.index());
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn describe(&self, s: usize) -> String {
        self.g.word_string(Elem(s as u32))
    }
}

/// The action of `W_{c'} × W_c` on `W₁ × W₂` by
/// `(x, δ'(x)) · (w₁, w₂) · (y, δ(y))`. State `a·|W₂| + b` is `(a, b)`.
pub struct PairAction<'g> {
    g1: &'g CoxeterGroup,
    g2: &'g CoxeterGroup,
    c: AdmissibleTriple,
    cp: AdmissibleTriple,
    n2: usize,
    /// `(x, δ'(x), l(x))` for `x ∈ W_{J'₁}`.
    left: Vec<(Elem, Elem, usize)>,
    /// `(y, δ(y), l(y))` for `y ∈ W_{J₁}`.
    right: Vec<(Elem, Elem, usize)>,
}

impl<'g> PairAction<'g> {
    pub fn new(g1: &'g CoxeterGroup, g2: &'g CoxeterGroup, c: AdmissibleTriple, cp: AdmissibleTriple) -> Result<Self> {
        let table = |t: &AdmissibleTriple| -> Result<Vec<(Elem, Elem, usize)>> {
            g1.parabolic_elements(t.j1)
                .into_iter()
                .map(|x| Ok((x, g1.apply_map(x, &t.delta, g2)?, g1.length(x))))
                .collect()
        };
        let left = table(&cp)?;
        let right = table(&c)?;
        Ok(PairAction { g1, g2, c, cp, n2: g2.order(), left, right })
    }

    pub fn groups(&self) -> (&'g CoxeterGroup, &'g CoxeterGroup) {
        (self.g1, self.g2)
    }

    pub fn c(&self) -> &AdmissibleTriple {
        &self.c
    }

    pub fn cp(&self) -> &AdmissibleTriple {
        &self.cp
    }

    pub fn encode(&self, a: Elem, b: Elem) -> usize {
        a.index() * self.n2 + b.index()
    }

    pub fn decode(&self, s: usize) -> (Elem, Elem) {
        (Elem((s / self.n2) as u32), Elem((s % self.n2) as u32))
    }

    /// `(l(x), δ'(x))` lookups used by the projection code.
    pub fn left_table(&self) -> &[(Elem, Elem, usize)] {
        &self.left
    }

    pub fn right_table(&self) -> &[(Elem, Elem, usize)] {
        &self.right
    }
}

impl ConjugationAction for PairAction<'_> {
    fn state_count(&self) -> usize {
        self.g1.order() * self.n2
    }

    fn length(&self, s: usize) -> usize {
        let (a, b) = self.decode(s);
        self.g1.length(a) + self.g2.length(b)
    }

    fn moves(&self, s: usize, out: &mut Vec<(i32, usize)>) {
        let (a, b) = self.decode(s);
        for i in self.cp.j1.iter().collect::<Vec<_>>().into_iter().rev() {
            let t = self.encode(self.g1.lmul_gen(i, a), self.g2.lmul_gen(self.cp.delta.apply(i), b));
            out.push((-(i as i32) - 1, t));
        }
        for j in self.c.j1.iter() {
            let t = self.encode(self.g1.rmul_gen(a, j), self.g2.rmul_gen(b, self.c.delta.apply(j)));
            out.push((j as i32 + 1, t));
        }
    }

    fn apply_move(&self, s: usize, label: i32) -> Option<usize> {
        let (a, b) = self.decode(s);
        if label < 0 {
            let i = (-label - 1) as usize;
            self.cp.j1.contains(i).then(|| {
                self.encode(self.g1.lmul_gen(i, a), self.g2.lmul_gen(self.cp.delta.apply(i), b))
            })
        } else {
            let j = usize::try_from(label - 1).ok()?;
            self.c.j1.contains(j).then(|| {
                self.encode(self.g1.rmul_gen(a, j), self.g2.rmul_gen(b, self.c.delta.apply(j)))
            })
        }
    }

    fn move_is_strong(&self, s: usize, label: i32) -> bool {
        let (a, b) = self.decode(s);
        let (l1, l2) = (self.g1.length(a), self.g2.length(b));
        if label < 0 {
            let i = (-label - 1) as usize;
            self.g1.length(self.g1.lmul_gen(i, a)) == l1 + 1
                || self.g2.length(self.g2.lmul_gen(self.cp.delta.apply(i), b)) == l2 + 1
        } else {
            let j = (label - 1) as usize;
            self.g1.length(self.g1.rmul_gen(a, j)) == l1 + 1
                || self.g2.length(self.g2.rmul_gen(b, self.c.delta.apply(j))) == l2 + 1
        }
    }

    fn strong_neighbours(&self, s: usize) -> Vec<usize> {
        let (g1, g2) = (self.g1, self.g2);
        let (a, b) = self.decode(s);
        let l = g1.length(a) + g2.length(b);
        let mut out = Vec::new();
        for &(x, dx, lx) in &self.left {
            let xa = g1.mul(x, a);
            let dxb = g2.mul(dx, b);
            for &(y, dy, ly) in &self.right {
                let na = g1.mul(xa, y);
                let nb = g2.mul(dxb, dy);
                if g1.length(na) + g2.length(nb) != l {
                    continue;
                }
                let t = self.encode(na, nb);
                if t == s {
                    continue;
                }
                let want = lx + l + ly;
                let first = g1.length(xa) + g2.length(g2.mul(b, dy));
                let second = g2.length(dxb) + g1.length(g1.mul(a, y));
                if first == want || second == want {
                    out.push(t);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn describe(&self, s: usize) -> String {
        let (a, b) = self.decode(s);
        format!("({} | {})", self.g1.word_string(a), self.g2.word_string(b))
    }
}
