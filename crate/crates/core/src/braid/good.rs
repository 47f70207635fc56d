//! σ-orders and good elements.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::coxcore::{CoxeterGroup, Elem, GenMap, GenSet};
use crate::cuspidal::twisted_classes;
use crate::error::{Error, Result};
use crate::verdict::Verdict;

use super::garside::{apply_sigma, embed, left_divide, product, GarsideForm};

/// Largest rank accepted by [`good_element_check`] unless overridden.
pub const DEFAULT_SEARCH_CAP: usize = 6;

/// Smallest `d > 0` with `w σ(w) ⋯ σ^{d−1}(w) = 1` and `σ^d = 1`.
pub fn sigma_order(g: &CoxeterGroup, w: Elem, sigma: &GenMap) -> usize {
    let ord = sigma.order();
    let mut p = g.identity();
    let mut image = w;
    let mut d = 0;
    loop {
        p = g.mul(p, image);
        image = g.apply_automorphism(image, sigma);
        d += 1;
        if p == g.identity() && d % ord == 0 {
            return d;
        }
    }
}

/// `f(w) σ(f(w)) ⋯ σ^{k−1}(f(w))` in `B⁺`.
pub fn twisted_power(g: &CoxeterGroup, w: &GarsideForm, sigma: &GenMap, k: usize) -> GarsideForm {
    let mut parts = Vec::with_capacity(k);
    let mut cur = w.clone();
    for _ in 0..k {
        let next = apply_sigma(g, &cur, sigma);
        parts.push(cur);
        cur = next;
    }
    product(g, &parts)
}

/// `f(w_K)`.
pub fn longest_braid(g: &CoxeterGroup, k: GenSet) -> GarsideForm {
    embed(g, g.longest_element(k))
}

/// Witness that `β = f(w_{I₁})^{e₁} f(w_{I₂})^{e₂} ⋯` with `I₁ ⊋ I₂ ⊋ ⋯`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodnessCertificate {
    pub rep: Elem,
    pub d: usize,
    /// One entry per factor `f(w_I)²`, weakly decreasing.
    pub chain: Vec<GenSet>,
    /// Distinct subsets with their total exponents.
    pub exponents: Vec<(GenSet, usize)>,
}

impl GoodnessCertificate {
    /// Total letter count of the factorisation.
    pub fn letter_count(&self, g: &CoxeterGroup) -> usize {
        self.chain.iter().map(|&i| 2 * g.length(g.longest_element(i))).sum()
    }

    /// Rebuilds `∏ f(w_{I_k})²`.
    pub fn product(&self, g: &CoxeterGroup) -> GarsideForm {
        let parts: Vec<GarsideForm> = self.chain.iter().flat_map(|&i| [longest_braid(g, i), longest_braid(g, i)]).collect();
        product(g, &parts)
    }
}

/// Writes `β` as `f(w_{I₁})² f(w_{I₂})² ⋯` with `I₁ ⊇ I₂ ⊇ ⋯` if possible.
///
/// A factorisation is forced: the letters of a positive braid are an
/// invariant, so `I₁` is the support of `β`, and left cancellation in `B⁺`
/// determines the remainder. The loop tries that unique candidate at every step.
pub fn square_chain(g: &CoxeterGroup, beta: &GarsideForm) -> Option<Vec<GenSet>> {
    let mut rest = beta.clone();
    let mut chain = Vec::new();
    while !rest.is_identity() {
        let i = rest.support(g);
        let w = g.longest_element(i);
        rest = left_divide(g, &rest, w)?;
        rest = left_divide(g, &rest, w)?;
        chain.push(i);
    }
    Some(chain)
}

fn exponents(chain: &[GenSet]) -> Vec<(GenSet, usize)> {
    let mut out: Vec<(GenSet, usize)> = Vec::new();
    for &i in chain {
        match out.last_mut() {
            Some((j, e)) if *j == i => *e += 2,
            _ => out.push((i, 2)),
        }
    }
    out
}

/// Certificate that `w` is good, or `None`.
pub fn good_element_check(g: &CoxeterGroup, w: Elem, sigma: &GenMap) -> Result<Option<GoodnessCertificate>> {
    good_element_check_capped(g, w, sigma, DEFAULT_SEARCH_CAP)
}

pub fn good_element_check_capped(
    g: &CoxeterGroup,
    w: Elem,
    sigma: &GenMap,
    cap: usize,
) -> Result<Option<GoodnessCertificate>> {
    if g.rank() > cap {
        return Err(Error::RankTooLargeForSearch(g.rank()));
    }
    let d = sigma_order(g, w, sigma);
    let beta = twisted_power(g, &embed(g, w), sigma, d);
    Ok(square_chain(g, &beta).map(|chain| GoodnessCertificate { rep: w, d, exponents: exponents(&chain), chain }))
}

/// One row of the `good-elements` output.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum GoodRow {
    Good { rep: String, d: usize, chain: Vec<Vec<usize>> },
    NotGood { good: bool },
}

/// For every σ-class, the first member of `O_min` (ShortLex order) that is good.
pub fn good_elements(g: &CoxeterGroup, sigma: &GenMap) -> Result<Vec<Option<GoodnessCertificate>>> {
    if g.rank() > DEFAULT_SEARCH_CAP {
        return Err(Error::RankTooLargeForSearch(g.rank()));
    }
    let classes = twisted_classes(g, sigma)?;
    classes
        .par_iter()
        .map(|c| {
            for &w in &c.min {
                if let Some(cert) = good_element_check(g, w, sigma)? {
                    return Ok(Some(cert));
                }
            }
            Ok(None)
        })
        .collect()
}

pub fn good_row(g: &CoxeterGroup, cert: &Option<GoodnessCertificate>) -> GoodRow {
    match cert {
        Some(c) => GoodRow::Good { rep: g.word_string(c.rep), d: c.d, chain: c.chain.iter().map(|i| i.labels()).collect() },
        None => GoodRow::NotGood { good: false },
    }
}

/// Every σ-class has a good element of minimal length.
pub fn verify_good_elements(g: &CoxeterGroup, sigma: &GenMap, scope: &str) -> Verdict {
    let mut v = Verdict::new("thm7.26", scope);
    let classes = match twisted_classes(g, sigma) {
        Ok(c) => c,
        Err(e) => {
            v.fail(json!({ "error": e.to_string() }));
            return v;
        }
    };
    let found = match good_elements(g, sigma) {
        Ok(f) => f,
        Err(e) => {
            v.fail(json!({ "error": e.to_string() }));
            return v;
        }
    };
    let mut witnesses = Vec::new();
    for (c, cert) in classes.iter().zip(&found) {
        match cert {
            Some(cert) => {
                let beta = twisted_power(g, &embed(g, cert.rep), sigma, cert.d);
                let ok = c.min.contains(&cert.rep)
                    && cert.letter_count(g) == cert.d * g.length(cert.rep)
                    && cert.chain.windows(2).all(|p| p[1].is_subset(p[0]))
                    && cert.product(g) == beta;
                v.require(ok, || json!({ "class": g.word_string(c.representative()), "certificate": "inconsistent" }));
                witnesses.push(good_row(g, &Some(cert.clone())));
            }
            None => v.fail(json!({ "class": g.word_string(c.representative()), "good": false })),
        }
    }
    v.detail("classes", classes.len());
    v.detail("witnesses", serde_json::to_value(witnesses).unwrap_or_default());
    v
}
