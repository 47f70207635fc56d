//! Linear functionals `ζ` on `H` with `ζ(h'h) = ζ(h D(h'))` for `h' ∈ H_J`,
//! and their constancy on minimal-length elements of twisted orbits.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::coxcore::{CoxeterGroup, Elem, GenMap};
use crate::error::Result;
use crate::minlen::{min_length_set, orbits, TwistedAction};
use crate::verdict::Verdict;

use super::algebra::{HeckeAlgebra, HeckeElement, WeightFunction};
use super::laurent::Laurent;
use super::linalg::{nullspace, RatFunc, SparseRow};

/// `ζ(T_w)` for every `w`, indexed by [`Elem`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaFunctional {
    pub values: Vec<Laurent>,
}

impl ZetaFunctional {
    pub fn eval(&self, h: &HeckeElement) -> Laurent {
        h.terms().fold(Laurent::zero(), |acc, (w, c)| &acc + &(c * &self.values[w.index()]))
    }

    pub fn at(&self, w: Elem) -> &Laurent {
        &self.values[w.index()]
    }
}

/// `ζ(T_{s_j} T_w) − ζ(T_w T_{s_{δ(j)}})` for all `w ∈ W`, `j ∈ J`.
pub fn constraint_rows(alg: &HeckeAlgebra, delta: &GenMap) -> Vec<SparseRow> {
    let g = alg.group();
    let mut rows = Vec::new();
    for w in g.elements() {
        let tw = alg.t(w);
        for (j, dj) in delta.domain().iter().map(|j| (j, delta.apply(j))) {
            let diff = alg.lmul_gen(j, &tw).sub(&alg.rmul_gen(&tw, dj));
            let row: SparseRow = diff.terms().map(|(x, c)| (x.index(), RatFunc::from_laurent(c))).collect();
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    rows
}

/// A basis of the space of admissible `ζ` over `ℚ(v)`, scaled to integer polynomials.
pub fn solve_zeta_space(g: &CoxeterGroup, delta: &GenMap, weight: &WeightFunction) -> Result<Vec<ZetaFunctional>> {
    weight.check_compatible(delta)?;
    let alg = HeckeAlgebra::new(g, weight.clone());
    let basis = nullspace(constraint_rows(&alg, delta), g.order());
    Ok(basis.into_iter().map(|values| ZetaFunctional { values }).collect())
}

/// `ζ(T_x h) = ζ(h T_{δ(x)})` for every `x ∈ W_J` and every `h = T_w`.
pub fn full_residual_vanishes(alg: &HeckeAlgebra, delta: &GenMap, zeta: &ZetaFunctional) -> bool {
    let g = alg.group();
    let wj = g.parabolic_elements(delta.domain());
    wj.par_iter().all(|&x| {
        let dx = alg.d_iso(delta, &alg.t(x)).expect("x lies in W_J");
        let dx = dx.support().next().expect("D(T_x) is a basis element");
        g.elements().all(|w| {
            let tw = alg.t(w);
            zeta.eval(&alg.lmul_t(x, &tw)) == zeta.eval(&alg.rmul_t(&tw, dx))
        })
    })
}

/// One orbit of `W_J` on `W` under `x · w = x w δ(x)⁻¹`.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitConstancy {
    pub representative: String,
    pub size: usize,
    pub min_length: usize,
    pub min: Vec<String>,
    /// Whether every basis functional is constant on the minimal-length members.
    pub constant: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ZetaReport {
    pub dimension: usize,
    pub weight: Vec<i32>,
    pub orbits: Vec<OrbitConstancy>,
}

/// Solves for the functionals and tabulates constancy on every `O_min`.
pub fn zeta_report(g: &CoxeterGroup, delta: &GenMap, weight: &WeightFunction) -> Result<(Vec<ZetaFunctional>, ZetaReport)> {
    let basis = solve_zeta_space(g, delta, weight)?;
    let act = TwistedAction::new(g, delta.clone())?;
    let o = orbits(&act);
    let rows = o
        .members
        .iter()
        .map(|m| {
            let min = min_length_set(&act, m);
            let constant = basis.iter().all(|z| min.iter().all(|&s| z.values[s] == z.values[min[0]]));
            OrbitConstancy {
                representative: g.word_string(Elem(min[0] as u32)),
                size: m.len(),
                min_length: g.length(Elem(min[0] as u32)),
                min: min.iter().map(|&s| g.word_string(Elem(s as u32))).collect(),
                constant,
            }
        })
        .collect();
    let report = ZetaReport { dimension: basis.len(), weight: weight.values().to_vec(), orbits: rows };
    Ok((basis, report))
}

/// Every admissible `ζ` takes one value on `O_min` for every orbit.
pub fn verify_zeta_constancy(g: &CoxeterGroup, delta: &GenMap, weight: &WeightFunction, scope: &str) -> Verdict {
    let mut v = Verdict::new("prop6.8", scope);
    let (basis, report) = match zeta_report(g, delta, weight) {
        Ok(r) => r,
        Err(e) => {
            v.fail(json!({ "error": e.to_string() }));
            return v;
        }
    };
    let alg = HeckeAlgebra::new(g, weight.clone());
    for (k, z) in basis.iter().enumerate() {
        v.require(full_residual_vanishes(&alg, delta, z), || json!({ "basis_vector": k, "residual": "nonzero" }));
    }
    for o in &report.orbits {
        v.require(o.constant, || json!({ "orbit": o.representative, "min": o.min }));
    }
    v.detail("dimension", basis.len());
    v.detail("orbits", report.orbits.len());
    v
}
