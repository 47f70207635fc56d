//! Explicit factorisations of `f(w_I)` and of twisted powers of the cuspidal
//! representatives in the classical types.

use num_integer::Integer;
use serde_json::json;

use crate::coxcore::{CoxeterGroup, GenMap, GenSet};
use crate::cuspidal::{b_word, d_word, twisted_a_word, CuspidalFamily, Partition};
use crate::error::{Error, Result};
use crate::verdict::Verdict;

use super::garside::{normal_form, power, product, GarsideForm};
use super::good::{longest_braid, twisted_power};

/// `s_{[a,b]}` as 0-based letters.
fn run(a: usize, b: usize) -> Vec<usize> {
    CoxeterGroup::descending_run(a, b)
}

fn rev(mut w: Vec<usize>) -> Vec<usize> {
    w.reverse();
    w
}

/// The generators `a..=b` (1-based), empty when `a > b`.
fn interval(a: usize, b: usize) -> GenSet {
    let mut s = GenSet::EMPTY;
    for i in a.max(1)..=b {
        s.insert(i - 1);
    }
    s
}

fn braid(g: &CoxeterGroup, letters_1: &[usize]) -> GarsideForm {
    normal_form(g, &letters_1.iter().map(|&i| i - 1).collect::<Vec<_>>())
}

/// Compares two braids, letter counts first.
fn compare(g: &CoxeterGroup, v: &mut Verdict, case: serde_json::Value, lhs: &GarsideForm, rhs: &GarsideForm) {
    let (l, r) = (lhs.letter_count(g), rhs.letter_count(g));
    if l != r {
        v.fail(json!({ "case": case, "letters": [l, r] }));
    } else {
        v.require(lhs == rhs, || {
            json!({ "case": case, "lhs": lhs.display(g).to_string(), "rhs": rhs.display(g).to_string() })
        });
    }
}

/// The `f(w_I)` identities of the twisted A, B, D and twisted D types, for every admissible `a`.
pub fn verify_power_identities(g: &CoxeterGroup, sigma: &GenMap, scope: &str) -> Result<Verdict> {
    let fam = CuspidalFamily::detect(g, sigma)?;
    let mut v = Verdict::new("lemma7.24", scope);
    let w_i = longest_braid(g, g.full_set());
    match fam {
        CuspidalFamily::TwistedA(n) => {
            for a in (1..).take_while(|&a| 2 * a <= n + 1) {
                let x = braid(g, &run(n + 1 - a, 1).iter().map(|&i| i + 1).collect::<Vec<_>>());
                let lhs = product(g, &[twisted_power(g, &x, sigma, 2 * a - 1), longest_braid(g, interval(a + 1, n + 1 - a))]);
                compare(g, &mut v, json!({ "part": 1, "a": a }), &lhs, &w_i);
            }
        }
        CuspidalFamily::B(n) => {
            for a in 1..=n {
                let mut f = rev(run(n - 1, a));
                f.extend(run(n, 1));
                let x = normal_form(g, &f);
                let lhs = product(g, &[power(g, &x, a), longest_braid(g, interval(a + 1, n))]);
                compare(g, &mut v, json!({ "part": 2, "a": a }), &lhs, &w_i);
            }
        }
        CuspidalFamily::D(n) => {
            for a in 1..=n - 2 {
                let mut f = rev(run(n - 2, a));
                f.extend(run(n, 1));
                let x = normal_form(g, &f);
                let lhs = product(g, &[power(g, &x, a), longest_braid(g, interval(a + 1, n))]);
                compare(g, &mut v, json!({ "part": 3, "a": a }), &lhs, &w_i);
            }
        }
        CuspidalFamily::TwistedD(n) => {
            let c = normal_form(g, &run(n, 1));
            compare(g, &mut v, json!({ "part": 4, "form": "power" }), &power(g, &c, n - 1), &w_i);
            let x = normal_form(g, &run(n - 1, 1));
            compare(g, &mut v, json!({ "part": 4, "form": "twisted" }), &twisted_power(g, &x, sigma, n), &w_i);
        }
        _ => return Err(Error::UnsupportedType(format!("{} has no such identity", g.system().label()))),
    }
    Ok(v)
}

/// `f(w_{I₁})^{e₁} f(w_{I₂})^{e₂−e₁} ⋯`.
fn chain_product(g: &CoxeterGroup, sets: &[GenSet], e: &[usize]) -> GarsideForm {
    let mut parts = Vec::new();
    let mut prev = 0;
    for (&i, &ek) in sets.iter().zip(e) {
        parts.push(power(g, &longest_braid(g, i), ek - prev));
        prev = ek;
    }
    product(g, &parts)
}

/// The twisted power of `w_α` as a product of powers of `f(w_{I_k})`.
///
/// For twisted A the partition is given by the `αᵢ` with `Σ(2αᵢ − 1) = n + 1`.
pub fn verify_longest_factorisation(g: &CoxeterGroup, sigma: &GenMap, alpha: &Partition, scope: &str) -> Result<Verdict> {
    let fam = CuspidalFamily::detect(g, sigma)?;
    let mut v = Verdict::new("cor7.25", scope);
    let s = alpha.prefix();
    let l = alpha.len();
    let (lhs, sets, e, d) = match fam {
        CuspidalFamily::TwistedA(n) => {
            let w = braid(g, &twisted_a_word(n, alpha)?);
            let odd: Vec<usize> = alpha.parts().iter().map(|&a| 2 * a - 1).collect();
            let d = odd.iter().fold(1, |acc, &x| acc.lcm(&x));
            let e: Vec<usize> = odd.iter().map(|&x| 2 * d / x).collect();
            let sets: Vec<GenSet> = (1..=l).map(|i| interval(s[i - 1] + 2 - i, n.saturating_sub(s[i - 1]))).collect();
            (twisted_power(g, &w, sigma, 2 * d), sets, e, d)
        }
        CuspidalFamily::B(n) => {
            let w = braid(g, &b_word(n, alpha)?);
            let d = alpha.parts().iter().fold(1, |acc, &x| acc.lcm(&x));
            let e: Vec<usize> = alpha.parts().iter().map(|&x| d / x).collect();
            let sets: Vec<GenSet> = (1..=l).map(|i| interval(s[i - 1] + 1, n)).collect();
            (power(g, &w, d), sets, e, d)
        }
        CuspidalFamily::D(n) | CuspidalFamily::TwistedD(n) => {
            let want_odd = matches!(fam, CuspidalFamily::TwistedD(_));
            if (l % 2 == 1) != want_odd {
                return Err(Error::InvalidPartition(format!("{alpha} has the wrong number of parts")));
            }
            let w = braid(g, &d_word(n, alpha)?);
            let d = alpha.parts().iter().fold(1, |acc, &x| acc.lcm(&x));
            let e: Vec<usize> = alpha.parts().iter().map(|&x| 2 * d / x).collect();
            let sets: Vec<GenSet> =
                (1..=l).map(|i| if s[i - 1] + 2 <= n { interval(s[i - 1] + 1, n) } else { GenSet::EMPTY }).collect();
            (twisted_power(g, &w, sigma, 2 * d), sets, e, d)
        }
        _ => return Err(Error::UnsupportedType(format!("{} has no such identity", g.system().label()))),
    };
    let rhs = chain_product(g, &sets, &e);
    let case = json!({ "alpha": alpha.to_string(), "d": d, "e": e, "I": sets.iter().map(|i| i.labels()).collect::<Vec<_>>() });
    compare(g, &mut v, case, &lhs, &rhs);
    Ok(v)
}

/// The partitions accepted by [`verify_longest_factorisation`] for the family of `(g, σ)`.
pub fn factorisation_partitions(g: &CoxeterGroup, sigma: &GenMap) -> Result<Vec<Partition>> {
    Ok(match CuspidalFamily::detect(g, sigma)? {
        CuspidalFamily::TwistedA(n) => Partition::all(n + 1)
            .into_iter()
            .filter(|p| p.parts().iter().all(|&a| a % 2 == 1))
            .map(|p| Partition::new(p.parts().iter().map(|&a| a.div_ceil(2)).collect()))
            .collect::<Result<_>>()?,
        CuspidalFamily::B(n) => Partition::all(n),
        CuspidalFamily::D(n) => Partition::all(n).into_iter().filter(|p| p.len() % 2 == 0).collect(),
        CuspidalFamily::TwistedD(n) => Partition::all(n).into_iter().filter(|p| p.len() % 2 == 1).collect(),
        _ => return Err(Error::UnsupportedType(format!("{} has no such identity", g.system().label()))),
    })
}

/// [`verify_longest_factorisation`] over every accepted partition, merged into one verdict.
pub fn verify_longest_factorisation_all(g: &CoxeterGroup, sigma: &GenMap, scope: &str) -> Result<Verdict> {
    let mut v = Verdict::new("cor7.25", scope);
    let parts = factorisation_partitions(g, sigma)?;
    for alpha in &parts {
        v.absorb(verify_longest_factorisation(g, sigma, alpha, scope)?);
    }
    v.detail("partitions", parts.len());
    Ok(v)
}
