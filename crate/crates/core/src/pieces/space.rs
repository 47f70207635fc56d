use std::collections::HashMap;

use crate::coxcore::{CoxeterGroup, Elem, GenSet};
use crate::error::{Error, Result};
use crate::minlen::PairAction;

use super::AdmissibleTriple;

/// `W₁ × W₂` together with two admissible triples `c = (J₁, J₂, δ)` and
/// `c' = (J'₁, J'₂, δ')`.
pub struct PairSpace<'g> {
    pub g1: &'g CoxeterGroup,
    pub g2: &'g CoxeterGroup,
    pub c: AdmissibleTriple,
    pub cp: AdmissibleTriple,
    action: PairAction<'g>,
    /// `δ(x)` for `x ∈ W_{J₁}`.
    delta: HashMap<Elem, Elem>,
    /// `δ⁻¹(x)` for `x ∈ W_{J₂}`.
    delta_inv: HashMap<Elem, Elem>,
    /// `δ'(x)` for `x ∈ W_{J'₁}`.
    deltap: HashMap<Elem, Elem>,
    par1: HashMap<GenSet, Vec<Elem>>,
    par2: HashMap<GenSet, Vec<Elem>>,
}

impl<'g> PairSpace<'g> {
    pub fn new(g1: &'g CoxeterGroup, g2: &'g CoxeterGroup, c: AdmissibleTriple, cp: AdmissibleTriple) -> Result<Self> {
        let check = |t: &AdmissibleTriple| {
            if t.delta.source_rank() != g1.rank() || t.delta.target_rank() != g2.rank() {
                Err(Error::SystemMismatch)
            } else {
                AdmissibleTriple::new(g1.system(), g2.system(), t.delta.clone()).map(|_| ())
            }
        };
        check(&c)?;
        check(&cp)?;
        let table = |from: &CoxeterGroup, to: &CoxeterGroup, t: &crate::coxcore::GenMap| -> Result<HashMap<Elem, Elem>> {
            from.parabolic_elements(t.domain())
                .into_iter()
                .map(|x| Ok((x, from.apply_map(x, t, to)?)))
                .collect()
        };
        let delta = table(g1, g2, &c.delta)?;
        let delta_inv = table(g2, g1, &c.delta.inverse())?;
        let deltap = table(g1, g2, &cp.delta)?;
        let mut par1 = HashMap::new();
        for k in c.j1.union(cp.j1).subsets() {
            par1.insert(k, g1.parabolic_elements(k));
        }
        let mut par2 = HashMap::new();
        for k in c.j2.union(cp.j2).subsets() {
            par2.insert(k, g2.parabolic_elements(k));
        }
        let action = PairAction::new(g1, g2, c.clone(), cp.clone())?;
        Ok(PairSpace { g1, g2, c, cp, action, delta, delta_inv, deltap, par1, par2 })
    }

    /// The specialisation `W₁ = W₂ = W`, `c = (J, J', δ)`, `c' = (I, I, id)`, whose
    /// double cosets correspond to `W_J`-orbits on `W` via `(w₁, w₂) ↦ w₁⁻¹w₂`.
    pub fn for_parabolic_action(g: &'g CoxeterGroup, delta: crate::coxcore::GenMap) -> Result<Self> {
        let sys = g.system();
        let c = AdmissibleTriple::new(sys, sys, delta)?;
        PairSpace::new(g, g, c, AdmissibleTriple::identity(sys))
    }

    pub fn action(&self) -> &PairAction<'g> {
        &self.action
    }

    /// `δ(x)`, `x ∈ W_{J₁}`.
    pub fn delta(&self, x: Elem) -> Elem {
        self.delta[&x]
    }

    /// `δ⁻¹(x)`, `x ∈ W_{J₂}`.
    pub fn delta_inv(&self, x: Elem) -> Elem {
        self.delta_inv[&x]
    }

    /// `δ'(x)`, `x ∈ W_{J'₁}`.
    pub fn deltap(&self, x: Elem) -> Elem {
        self.deltap[&x]
    }

    /// Elements of `W_K ⊆ W₁`.
    pub fn parabolic1(&self, k: GenSet) -> &[Elem] {
        &self.par1[&k]
    }

    /// Elements of `W_K ⊆ W₂`.
    pub fn parabolic2(&self, k: GenSet) -> &[Elem] {
        &self.par2[&k]
    }

    /// `δ'(x K) ∩ J'₂`, keeping only `k ∈ K` with `x(α_k)` a simple root in `J'₁`.
    pub fn forward(&self, x: Elem, k: GenSet) -> GenSet {
        k.iter()
            .filter_map(|i| self.g1.conj_simple(x, i))
            .filter(|&m| self.cp.j1.contains(m))
            .map(|m| self.cp.delta.apply(m))
            .collect()
    }

    /// `δ⁻¹(x⁻¹ K) ∩ J₁` for `x ∈ W₂`, `K ⊆ I₂`.
    pub fn backward(&self, x: Elem, k: GenSet) -> GenSet {
        let xi = self.g2.inverse(x);
        let inv = self.c.delta.inverse();
        k.iter()
            .filter_map(|i| self.g2.conj_simple(xi, i))
            .filter(|&m| self.c.j2.contains(m))
            .map(|m| inv.apply(m))
            .collect()
    }

    /// `w₁ ∈ ᴶ'¹W₁`.
    pub fn is_left_reduced(&self, w1: Elem) -> bool {
        self.g1.is_min_left(self.cp.j1, w1)
    }

    /// `w₂ ∈ W₂^{J₂}`.
    pub fn is_right_reduced(&self, w2: Elem) -> bool {
        self.g2.is_min_right(w2, self.c.j2)
    }

    /// All `(w₁, w₂) ∈ ᴶ'¹W₁ × W₂^{J₂}`, the index set of the pieces.
    pub fn index_pairs(&self) -> Vec<(Elem, Elem)> {
        let left: Vec<Elem> = self.g1.elements().filter(|&w| self.is_left_reduced(w)).collect();
        let right: Vec<Elem> = self.g2.elements().filter(|&w| self.is_right_reduced(w)).collect();
        let mut out = Vec::with_capacity(left.len() * right.len());
        for &a in &left {
            for &b in &right {
                out.push((a, b));
            }
        }
        out
    }

    pub fn describe(&self, a: Elem, b: Elem) -> String {
        format!("({} | {})", self.g1.word_string(a), self.g2.word_string(b))
    }
}
