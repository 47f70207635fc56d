//! The Iwahori–Hecke algebra over `ℤ[v, v⁻¹]` with unequal parameters, in the
//! basis `T_w`.

use std::collections::BTreeMap;
use std::fmt;

use crate::coxcore::{CoxeterGroup, Elem, GenMap, GenSet};
use crate::error::{Error, Result};

use super::laurent::Laurent;

/// `L : I → ℤ`, constant on generators joined by odd bonds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction(Vec<i32>);

impl WeightFunction {
    pub fn new(g: &CoxeterGroup, values: Vec<i32>) -> Result<Self> {
        if values.len() != g.rank() {
            return Err(Error::WeightIncompatible(format!("{} values for rank {}", values.len(), g.rank())));
        }
        let m = g.system().matrix();
        for i in 0..g.rank() {
            for j in 0..g.rank() {
                let mij = m.get(i, j);
                if i != j && mij % 2 == 1 && values[i] != values[j] {
                    return Err(Error::WeightIncompatible(format!(
                        "L({}) ≠ L({}) across the odd bond m = {mij}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(WeightFunction(values))
    }

    /// `L = 1` everywhere.
    pub fn equal(g: &CoxeterGroup) -> Self {
        WeightFunction(vec![1; g.rank()])
    }

    pub fn get(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn values(&self) -> &[i32] {
        &self.0
    }

    /// `L(j) = L(δ(j))` for `j ∈ J`.
    pub fn check_compatible(&self, delta: &GenMap) -> Result<()> {
        for (j, k) in delta.domain().iter().map(|j| (j, delta.apply(j))) {
            if self.0[j] != self.0[k] {
                return Err(Error::WeightIncompatible(format!("L({}) ≠ L(δ({}))", j + 1, j + 1)));
            }
        }
        Ok(())
    }
}

impl fmt::Display for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A finitely supported combination `Σ c_w T_w`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HeckeElement(BTreeMap<Elem, Laurent>);

impl HeckeElement {
    pub fn zero() -> Self {
        HeckeElement::default()
    }

    pub fn coeff(&self, w: Elem) -> Laurent {
        self.0.get(&w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Elem, &Laurent)> {
        self.0.iter().map(|(&w, c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, w: Elem, c: &Laurent) {
        let e = self.0.entry(w).or_default();
        *e = &*e + c;
        if e.is_zero() {
            self.0.remove(&w);
        }
    }

    pub fn add(&self, o: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (w, c) in o.terms() {
            out.add_term(w, c);
        }
        out
    }

    pub fn sub(&self, o: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (w, c) in o.terms() {
            out.add_term(w, &-c);
        }
        out
    }

    pub fn scale(&self, c: &Laurent) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, x) in self.terms() {
            out.add_term(w, &(x * c));
        }
        out
    }

    pub fn support(&self) -> impl Iterator<Item = Elem> + '_ {
        self.0.keys().copied()
    }
}

/// `H(W, L)`.
#[derive(Clone)]
pub struct HeckeAlgebra<'g> {
    g: &'g CoxeterGroup,
    weight: WeightFunction,
    /// `v_s − v_s⁻¹` per generator.
    gap: Vec<Laurent>,
}

impl<'g> HeckeAlgebra<'g> {
    pub fn new(g: &'g CoxeterGroup, weight: WeightFunction) -> Self {
        let gap = weight.values().iter().map(|&l| Laurent::v_minus_inverse(l)).collect();
        HeckeAlgebra { g, weight, gap }
    }

    pub fn group(&self) -> &'g CoxeterGroup {
        self.g
    }

    pub fn weight(&self) -> &WeightFunction {
        &self.weight
    }

    /// `v_s − v_s⁻¹`.
    pub fn gap(&self, s: usize) -> &Laurent {
        &self.gap[s]
    }

    /// `T_w`.
    pub fn t(&self, w: Elem) -> HeckeElement {
        let mut h = HeckeElement::zero();
        h.add_term(w, &Laurent::one());
        h
    }

    pub fn one(&self) -> HeckeElement {
        self.t(self.g.identity())
    }

    /// `T_{s_{i₁}} ⋯ T_{s_{i_k}}` for an arbitrary word.
    pub fn word(&self, letters: &[usize]) -> HeckeElement {
        letters.iter().fold(self.one(), |h, &s| self.rmul_gen(&h, s))
    }

    /// `T_s · h`.
    pub fn lmul_gen(&self, s: usize, h: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, c) in h.terms() {
            let sw = self.g.lmul_gen(s, w);
            out.add_term(sw, c);
            if self.g.length(sw) < self.g.length(w) {
                out.add_term(w, &(c * &self.gap[s]));
            }
        }
        out
    }

    /// `h · T_s`.
    pub fn rmul_gen(&self, h: &HeckeElement, s: usize) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, c) in h.terms() {
            let ws = self.g.rmul_gen(w, s);
            out.add_term(ws, c);
            if self.g.length(ws) < self.g.length(w) {
                out.add_term(w, &(c * &self.gap[s]));
            }
        }
        out
    }

    /// `T_x · h`.
    pub fn lmul_t(&self, x: Elem, h: &HeckeElement) -> HeckeElement {
        self.g.word(x).iter().rev().fold(h.clone(), |acc, &s| self.lmul_gen(s as usize, &acc))
    }

    /// `h · T_x`.
    pub fn rmul_t(&self, h: &HeckeElement, x: Elem) -> HeckeElement {
        self.g.word(x).iter().fold(h.clone(), |acc, &s| self.rmul_gen(&acc, s as usize))
    }

    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (x, c) in a.terms() {
            out = out.add(&self.lmul_t(x, b).scale(c));
        }
        out
    }

    /// `T_s⁻¹ = T_s − (v_s − v_s⁻¹)`.
    pub fn inverse_gen(&self, s: usize) -> HeckeElement {
        let mut h = self.t(self.g.generator(s));
        h.add_term(self.g.identity(), &-&self.gap[s]);
        h
    }

    /// The isomorphism `H_J → H_{J'}` with `T_{s_j} ↦ T_{s_{δ(j)}}`.
    pub fn d_iso(&self, delta: &GenMap, h: &HeckeElement) -> Result<HeckeElement> {
        self.weight.check_compatible(delta)?;
        let j: GenSet = delta.domain();
        let mut out = HeckeElement::zero();
        for (w, c) in h.terms() {
            if !self.g.support(w).is_subset(j) {
                return Err(Error::SupportOutsideParabolic);
            }
            out.add_term(self.g.apply_map(w, delta, self.g)?, c);
        }
        Ok(out)
    }

    /// Coefficients at `v = 1`: the image in the group algebra.
    pub fn specialize_at_one(&self, h: &HeckeElement) -> BTreeMap<Elem, num_bigint::BigInt> {
        h.terms().map(|(w, c)| (w, c.at_one())).filter(|(_, c)| *c != num_bigint::BigInt::from(0)).collect()
    }

    pub fn display(&self, h: &HeckeElement) -> String {
        if h.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> =
            h.terms().map(|(w, c)| format!("({c})T[{}]", self.g.word_string(w))).collect();
        parts.join(" + ")
    }
}
