//! Exhaustive checks on twisted classes: classification of cuspidal classes,
//! reduction to minimal length, and the support and length properties.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde_json::json;

use crate::coxcore::{CoxeterGroup, Elem, GenMap, GenSet};
use crate::error::{Error, Result};
use crate::minlen::{cyc_class, cyc_partition, reduce_to_min, ConjugationAction, TwistedAction};
use crate::pieces::orbit_piece_i;
use crate::scalar::QuadScalar;
use crate::verdict::Verdict;

use super::{
    char_poly, char_poly_oracle_agrees, representatives, twisted_classes, CharPoly, CuspidalFamily,
    GeneratorClasses, IntPoly, TwistedClass,
};

/// A representative located among the classes.
#[derive(Clone, Debug)]
pub struct RepMatch {
    pub label: String,
    pub word: String,
    pub class: Option<usize>,
    pub charpoly: CharPoly,
    pub expected: IntPoly,
}

#[derive(Clone, Debug)]
pub struct CuspidalReport {
    pub family: Option<CuspidalFamily>,
    pub classes: Vec<TwistedClass>,
    pub matches: Vec<RepMatch>,
    pub verdicts: Vec<Verdict>,
}

impl CuspidalReport {
    pub fn cuspidal(&self) -> impl Iterator<Item = (usize, &TwistedClass)> {
        self.classes.iter().enumerate().filter(|(_, c)| c.cuspidal)
    }

    /// Label of the representative lying in class `k`, if any.
    pub fn label_of(&self, k: usize) -> Option<&str> {
        self.matches.iter().find(|m| m.class == Some(k)).map(|m| m.label.as_str())
    }

    pub fn pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }
}

fn class_index(classes: &[TwistedClass], n: usize) -> Vec<usize> {
    let mut of = vec![0; n];
    for (k, c) in classes.iter().enumerate() {
        for &w in &c.members {
            of[w.index()] = k;
        }
    }
    of
}

/// Brute-force cuspidal classes, their match with the explicit
/// representatives, and the properties of minimal elements in cuspidal classes.
pub fn classify_cuspidal(g: &CoxeterGroup, sigma: &GenMap, scope: &str) -> Result<CuspidalReport> {
    let classes = twisted_classes(g, sigma)?;
    let act = TwistedAction::sigma(g, sigma)?;
    let of = class_index(&classes, g.order());
    let full = g.full_set();
    let mut verdicts = Vec::new();

    let mut nonvanishing = Verdict::new("lemma7.2", scope);
    for c in &classes {
        nonvanishing.require(c.charpoly.eval(1).is_zero() || c.cuspidal, || {
            json!({ "class": g.word_string(c.representative()), "charpoly": c.charpoly.to_string() })
        });
    }
    verdicts.push(nonvanishing);

    let (cyc_of, cycs) = cyc_partition(&act);

    // Terminal ≈-classes of full σ-support lie minimally in cuspidal classes.
    let mut p1 = Verdict::new("thm7.5-p1", scope);
    for cyc in cycs.iter().filter(|c| c.terminal) {
        let w = Elem(cyc.members[0] as u32);
        if g.support_sigma(w, sigma) != full {
            continue;
        }
        let c = &classes[of[w.index()]];
        p1.require(c.cuspidal && g.length(w) == c.min_length, || {
            json!({ "element": g.word_string(w), "cuspidal": c.cuspidal, "min_length": c.min_length })
        });
    }
    verdicts.push(p1);

    // For cuspidal classes the minimal elements form one ≈-class.
    let mut p2 = Verdict::new("thm7.5-p2", scope);
    for c in classes.iter().filter(|c| c.cuspidal) {
        let ids: BTreeSet<u32> = c.min.iter().map(|w| cyc_of[w.index()]).collect();
        let one = ids.len() == 1 && {
            let cyc = &cycs[*ids.iter().next().unwrap() as usize];
            cyc.members.len() == c.min.len()
        };
        p2.require(one, || json!({ "class": g.word_string(c.representative()), "cyc_classes": ids.len() }));
    }
    verdicts.push(p2);

    // (p, l_{·,σ}) separates cuspidal classes.
    let mut p3 = Verdict::new("thm7.5-p3", scope);
    let gens = GeneratorClasses::new(g);
    let mut seen: HashMap<(CharPoly, Vec<usize>), usize> = HashMap::new();
    for (k, c) in classes.iter().enumerate().filter(|(_, c)| c.cuspidal) {
        let constant = c.min.iter().all(|&w| gens.profile(g, w, sigma) == c.profile);
        p3.require(constant, || json!({ "class": g.word_string(c.representative()), "profile_varies": true }));
        if let Some(&other) = seen.get(&(c.charpoly.clone(), c.profile.clone())) {
            p3.fail(json!({
                "classes": [g.word_string(classes[other].representative()), g.word_string(c.representative())],
                "charpoly": c.charpoly.to_string(),
            }));
        }
        seen.insert((c.charpoly.clone(), c.profile.clone()), k);
    }
    verdicts.push(p3);

    let family = CuspidalFamily::detect(g, sigma).ok();
    let mut matches = Vec::new();
    if family.is_some() {
        let mut v = Verdict::new("classification", scope);
        let reps = representatives(g, sigma)?;
        let mut hit = BTreeSet::new();
        for r in reps {
            let k = of[r.elem.index()];
            let c = &classes[k];
            let p = char_poly(g, r.elem, sigma)?;
            v.require(c.cuspidal && g.length(r.elem) == c.min_length && p.is_int(&r.expected) && hit.insert(k), || {
                json!({
                    "representative": r.label,
                    "cuspidal": c.cuspidal,
                    "length": g.length(r.elem),
                    "min_length": c.min_length,
                    "charpoly": p.to_string(),
                    "expected": r.expected.to_string(),
                })
            });
            matches.push(RepMatch {
                label: r.label,
                word: g.word_string(r.elem),
                class: Some(k),
                charpoly: p,
                expected: r.expected,
            });
        }
        let cusp: BTreeSet<usize> = classes.iter().enumerate().filter(|(_, c)| c.cuspidal).map(|(k, _)| k).collect();
        v.require(cusp == hit, || json!({ "cuspidal_classes": cusp.len(), "matched": hit.len() }));
        v.detail("cuspidal_classes", cusp.len());
        verdicts.push(v);
    }
    Ok(CuspidalReport { family, classes, matches, verdicts })
}

/// Every element reduces to the minimum by non-increasing moves, and any two
/// minimal elements are related by a cyclic shift followed by one
/// elementary strong conjugation.
pub fn verify_min_length_reduction(g: &CoxeterGroup, sigma: &GenMap, scope: &str) -> Result<Vec<Verdict>> {
    let act = TwistedAction::sigma(g, sigma)?;
    let classes = twisted_classes(g, sigma)?;
    let of = class_index(&classes, g.order());

    let mut a = Verdict::new("thm7.6a", scope);
    let results: Vec<(Elem, Result<bool>)> = g
        .elements()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|w| {
            let r = reduce_to_min(&act, w.index()).map(|chain| {
                chain.is_valid(&act)
                    && chain.steps.iter().all(|s| s.to_len <= s.from_len)
                    && g.length(Elem(chain.end() as u32)) == classes[of[w.index()]].min_length
            });
            (w, r)
        })
        .collect();
    for (w, r) in results {
        match r {
            Ok(ok) => a.require(ok, || json!({ "element": g.word_string(w) })),
            Err(e) => a.fail(json!({ "element": g.word_string(w), "error": e.to_string() })),
        }
    }

    let mut b = Verdict::new("thm7.6b", scope);
    for c in &classes {
        let min: BTreeSet<usize> = c.min.iter().map(|w| w.index()).collect();
        for &w in &c.min {
            let cyc = cyc_class(&act, w.index())?;
            let mut reach: BTreeSet<usize> = cyc.members.iter().copied().collect();
            for &x in &cyc.members {
                reach.extend(act.strong_neighbours(x));
            }
            for &v in &min {
                b.require(reach.contains(&v), || {
                    json!({ "w": g.word_string(w), "v": act.describe(v) })
                });
            }
        }
    }
    b.detail("classes", classes.len());
    Ok(vec![a, b])
}

/// `w` and `σ(w)⁻¹` are `σ`-conjugate, for `σ² = id`.
pub fn verify_inverse_conjugacy(g: &CoxeterGroup, sigma: &GenMap, scope: &str) -> Result<Verdict> {
    if sigma.order() > 2 {
        return Err(Error::SigmaOrderNotTwo);
    }
    let classes = twisted_classes(g, sigma)?;
    let of = class_index(&classes, g.order());
    let mut v = Verdict::new("cor7.7", scope);
    for w in g.elements() {
        let t = g.inverse(g.apply_automorphism(w, sigma));
        v.require(of[w.index()] == of[t.index()], || json!({ "element": g.word_string(w) }));
    }
    Ok(v)
}

/// Class invariance of `p_{w,σ}` (with the elimination oracle on every
/// element), integrality of its coefficients, and invariance of `l_{i,σ}`
/// on `≈`-classes.
pub fn verify_class_invariants(g: &CoxeterGroup, sigma: &GenMap, scope: &str) -> Result<Vec<Verdict>> {
    let classes = twisted_classes(g, sigma)?;
    let mut p = Verdict::new("charpoly", scope);
    for c in &classes {
        let bad: Vec<(Elem, String)> = c
            .members
            .par_iter()
            .filter_map(|&w| match char_poly(g, w, sigma) {
                Ok(q) if q == c.charpoly && char_poly_oracle_agrees(g, w, sigma, &q) => None,
                Ok(q) => Some((w, q.to_string())),
                Err(e) => Some((w, e.to_string())),
            })
            .collect();
        p.cases += c.members.len();
        if let Some((w, got)) = bad.first() {
            p.fail(json!({ "element": g.word_string(*w), "got": got, "class": c.charpoly.to_string() }));
        }
        let c0 = c.charpoly.coeffs()[0];
        let unit = c0 == QuadScalar::one() || c0 == -QuadScalar::one();
        p.require(c.charpoly.degree() == g.rank() && unit, || {
            json!({ "class": g.word_string(c.representative()), "charpoly": c.charpoly.to_string() })
        });
    }

    let act = TwistedAction::sigma(g, sigma)?;
    let gens = GeneratorClasses::new(g);
    let mut l = Verdict::new("l-invariance", scope);
    let (_, cycs) = cyc_partition(&act);
    for cyc in &cycs {
        let first = gens.profile(g, Elem(cyc.members[0] as u32), sigma);
        for &s in &cyc.members[1..] {
            l.require(gens.profile(g, Elem(s as u32), sigma) == first, || json!({ "element": act.describe(s) }));
        }
    }
    Ok(vec![p, l])
}

/// Length bound under twisted conjugation by minimal coset representatives:
/// `l(x w σ(x)⁻¹) ≥ l(w)` for `w ∈ W_J`, `x ∈ W^J`, every `J`.
pub fn verify_length_bound(g: &CoxeterGroup, sigma: &GenMap, scope: &str) -> Verdict {
    let mut v = Verdict::new("lemma7.3", scope);
    let table = g.automorphism_table(sigma);
    for j in g.full_set().subsets() {
        let wj = g.parabolic_elements(j);
        for x in g.elements().filter(|&x| g.is_min_right(x, j)) {
            let sxi = g.inverse(table[x.index()]);
            for &w in &wj {
                let t = g.mul3(x, w, sxi);
                v.require(g.length(t) >= g.length(w), || {
                    json!({ "J": j.labels(), "x": g.word_string(x), "w": g.word_string(w) })
                });
            }
        }
    }
    v
}

/// `σ`-support never grows along a non-increasing move and is constant on `≈`-classes.
pub fn verify_support_monotonicity(g: &CoxeterGroup, sigma: &GenMap, scope: &str) -> Result<Verdict> {
    let act = TwistedAction::sigma(g, sigma)?;
    let mut v = Verdict::new("lemma7.4", scope);
    let mut buf = Vec::new();
    for w in g.elements() {
        let sw = g.support_sigma(w, sigma);
        buf.clear();
        act.moves(w.index(), &mut buf);
        for &(_, t) in &buf {
            let t = Elem(t as u32);
            if g.length(t) > g.length(w) {
                continue;
            }
            let st = g.support_sigma(t, sigma);
            let ok = st.is_subset(sw) && (g.length(t) < g.length(w) || st == sw);
            v.require(ok, || json!({ "from": g.word_string(w), "to": g.word_string(t) }));
        }
    }
    Ok(v)
}

/// For proper `J`, `w ∈ W^{σ(J)}` and `v ∈ W_{I(w,σ|_J)}`:
/// `supp_σ(wv)` is everything exactly when `supp_σ(w)` is.
pub fn verify_support_equivalence(g: &CoxeterGroup, sigma: &GenMap, scope: &str) -> Verdict {
    let mut v = Verdict::new("lemma7.9", scope);
    let full = g.full_set();
    for j in full.subsets().filter(|&j| j != full) {
        let delta = sigma.restrict(j);
        let jp = delta.image();
        for w in g.elements().filter(|&w| g.is_min_right(w, jp)) {
            let i: GenSet = orbit_piece_i(g, &delta, w);
            let fw = g.support_sigma(w, sigma) == full;
            for x in g.parabolic_elements(i) {
                let fwx = g.support_sigma(g.mul(w, x), sigma) == full;
                v.require(fw == fwx, || {
                    json!({ "J": j.labels(), "w": g.word_string(w), "v": g.word_string(x), "I": i.labels() })
                });
            }
        }
    }
    v
}

/// Given words with their claimed polynomials: each lies in a cuspidal class,
/// the classes are pairwise distinct, and each polynomial is as claimed.
pub fn verify_explicit_classes(
    g: &CoxeterGroup,
    sigma: &GenMap,
    words: &[(&str, IntPoly)],
    check: &str,
    scope: &str,
) -> Result<Verdict> {
    let act = TwistedAction::sigma(g, sigma)?;
    let mut v = Verdict::new(check, scope);
    let mut owners: Vec<BTreeSet<usize>> = Vec::new();
    let mut got = Vec::new();
    for (word, expected) in words {
        let w = g.parse_element(word)?;
        let class: BTreeSet<usize> = crate::minlen::orbit_of(&act, w.index()).into_iter().collect();
        let members: Vec<Elem> = class.iter().map(|&s| Elem(s as u32)).collect();
        let cusp = super::is_cuspidal(g, &members, sigma);
        let p = char_poly(g, w, sigma)?;
        let fresh = !owners.iter().any(|o| o.contains(&w.index()));
        v.require(cusp && fresh && p.is_int(expected), || {
            json!({
                "word": word,
                "cuspidal": cusp,
                "distinct": fresh,
                "charpoly": p.to_string(),
                "expected": expected.to_string(),
            })
        });
        got.push(json!({ "word": word, "charpoly": p.to_string(), "class_size": class.len() }));
        owners.push(class);
    }
    v.detail("computed", got);
    Ok(v)
}

/// The two length-16 words in ²E₆ with their claimed polynomials.
pub fn twisted_e6_words() -> Vec<(&'static str, IntPoly)> {
    let phi3 = IntPoly::new(vec![1, 1, 1]);
    vec![
        ("1,3,1,2,4,3,1,5,4,3,1,6,5,4,3,1", &IntPoly::binomial(1, 1).pow(4) * &phi3),
        ("2,4,5,4,2,3,4,5,6,5,4,2,3,4,5,6", phi3.pow(2)),
    ]
}
