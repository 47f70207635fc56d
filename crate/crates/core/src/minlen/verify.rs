//! Exhaustive checks of the reduction statements for twisted actions on `W`.

use serde_json::json;

use crate::coxcore::{CoxeterGroup, GenMap};
use crate::error::Result;
use crate::verdict::Verdict;

use super::action::TwistedAction;
use super::involution::reduce_involution;
use super::reduce::{min_length_set, orbit_of, reduce_to_min, verify_reduction_theorem};

/// Every twisted involution reduces to some `w_J` with `σ(J) = J`, `w_J σ(s_j) = s_j w_J`
/// and `w_J` minimal in its class; every `x σ(x)⁻¹` reduces to `1`.
pub fn verify_involution_reduction(g: &CoxeterGroup, sigma: &GenMap, scope: &str) -> Result<Verdict> {
    let act = TwistedAction::sigma(g, sigma)?;
    let mut v = Verdict::new("lemma3.6", scope);
    let mut involutions = 0;
    for w in g.elements() {
        if g.apply_automorphism(w, sigma) != g.inverse(w) {
            continue;
        }
        involutions += 1;
        let r = match reduce_involution(g, sigma, w) {
            Ok(r) => r,
            Err(e) => {
                v.fail(json!({ "w": g.word_string(w), "error": e.to_string() }));
                continue;
            }
        };
        let j = r.j;
        let end = r.end;
        let commutes = j.iter().all(|i| g.rmul_gen(end, sigma.apply(i)) == g.lmul_gen(i, end));
        let orbit = orbit_of(&act, end.index());
        let minimal = min_length_set(&act, &orbit).contains(&end.index());
        let ok = r.chain.is_valid(&act)
            && r.chain.steps.iter().all(|s| s.to_len < s.from_len)
            && r.chain.end() == end.index()
            && end == g.longest_element(j)
            && sigma.image_of(j) == j
            && commutes
            && minimal;
        v.require(ok, || {
            json!({ "w": g.word_string(w), "J": j.labels(), "commutes": commutes, "minimal": minimal })
        });
    }
    for x in g.elements() {
        let y = g.mul(x, g.inverse(g.apply_automorphism(x, sigma)));
        match reduce_to_min(&act, y.index()) {
            Ok(c) => v.require(c.end() == g.identity().index(), || json!({ "x": g.word_string(x) })),
            Err(e) => v.fail(json!({ "x": g.word_string(x), "error": e.to_string() })),
        }
    }
    v.detail("involutions", involutions);
    Ok(v)
}

/// Reduction to `O_min` and strong conjugacy inside `O_min` for the action
/// `x · w = x w δ(x)⁻¹` of `W_J`; for `J = I` also the involution reduction.
pub fn verify_twisted_reduction(g: &CoxeterGroup, delta: &GenMap, scope: &str) -> Result<Vec<Verdict>> {
    let act = TwistedAction::new(g, delta.clone())?;
    let full = delta.domain() == g.full_set() && delta.image() == g.full_set();
    let mut out = vec![verify_reduction_theorem(&act, if full { "thm3.2" } else { "cor3.8" }, scope)];
    if full {
        out.push(verify_involution_reduction(g, delta, scope)?);
    }
    Ok(out)
}
