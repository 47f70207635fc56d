//! Explicit minimal-length representatives of cuspidal classes in the
//! classical types, ²B₂ and ³D₄, built from partitions.

use std::fmt;

use serde::Serialize;

use crate::coxcore::{twist_permutation, CoxeterGroup, Elem, GenMap};
use crate::error::{Error, Result};

use super::IntPoly;

/// Weakly decreasing positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partial sums `α₁ + … + α_k` for `k = 0..=l`.
    pub fn prefix(&self) -> Vec<usize> {
        let mut s = vec![0];
        for &p in &self.0 {
            s.push(s.last().unwrap() + p);
        }
        s
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Irreducible type together with a diagram automorphism, as far as
/// representatives are known.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CuspidalFamily {
    A(usize),
    TwistedA(usize),
    B(usize),
    D(usize),
    TwistedD(usize),
    TwistedB2,
    TrialityD4,
}

impl CuspidalFamily {
    /// Reads the family off an irreducible group and the automorphism `σ`.
    pub fn detect(g: &CoxeterGroup, sigma: &GenMap) -> Result<Self> {
        let comps = g.system().components();
        let bad = || Error::UnsupportedType(format!("{} with σ = {sigma}", g.system().label()));
        let [c] = comps else { return Err(bad()) };
        let n = c.rank;
        let order = sigma.order();
        let perm: Vec<usize> = (0..n).map(|i| sigma.apply(i)).collect();
        if u8::try_from(order).ok().and_then(|t| twist_permutation(c.family, n, t).ok()) != Some(perm) {
            return Err(bad());
        }
        Ok(match (c.family, order) {
            ('A', 1) => CuspidalFamily::A(n),
            ('A', 2) => CuspidalFamily::TwistedA(n),
            ('B' | 'C', 1) => CuspidalFamily::B(n),
            ('B' | 'C', 2) if n == 2 => CuspidalFamily::TwistedB2,
            ('D', 1) if n >= 4 => CuspidalFamily::D(n),
            ('D', 2) if n >= 4 => CuspidalFamily::TwistedD(n),
            ('D', 3) => CuspidalFamily::TrialityD4,
            _ => return Err(bad()),
        })
    }
}

/// A representative with its label and the closed form of its polynomial.
#[derive(Clone, Debug)]
pub struct Representative {
    pub label: String,
    pub partition: Option<Partition>,
    /// 1-based word exactly as produced by the product formula.
    pub word: Vec<usize>,
    pub elem: Elem,
    pub expected: IntPoly,
}

/// `s_{[a,b]}` as 1-based letters; empty when `a < b`.
fn run(a: usize, b: usize) -> Vec<usize> {
    CoxeterGroup::descending_run(a, b).into_iter().map(|i| i + 1).collect()
}

fn inv(mut w: Vec<usize>) -> Vec<usize> {
    w.reverse();
    w
}

/// `w_α` for ²A_n, where `Σ(2αᵢ − 1) = n + 1`.
pub fn twisted_a_word(n: usize, alpha: &Partition) -> Result<Vec<usize>> {
    if alpha.parts().iter().map(|&a| 2 * a - 1).sum::<usize>() != n + 1 {
        return Err(Error::InvalidPartition(format!("{alpha}: Σ(2αᵢ−1) ≠ {}", n + 1)));
    }
    let s = alpha.prefix();
    let mut w = Vec::new();
    for k in 1..=alpha.len() {
        w.extend(run(n + k - s[k], s[k - 1] + 1));
    }
    Ok(w)
}

/// `w_α` for B_n, where `Σαᵢ = n`.
pub fn b_word(n: usize, alpha: &Partition) -> Result<Vec<usize>> {
    if alpha.sum() != n {
        return Err(Error::InvalidPartition(format!("{alpha} is not a partition of {n}")));
    }
    let s = alpha.prefix();
    let mut w = Vec::new();
    for k in 1..=alpha.len() {
        w.extend(inv(run(n - 1, s[k])));
        w.extend(run(n, s[k - 1] + 1));
    }
    Ok(w)
}

/// `w_{a,b}` in D_n.
pub fn d_factor(n: usize, a: usize, b: usize) -> Vec<usize> {
    if b < n {
        let mut w = inv(run(n - 2, b));
        w.extend(run(n, a + 1));
        w
    } else {
        run(n - 1, a + 1)
    }
}

/// `w'_α = w_{0,α₁} w_{α₁,α₁+α₂} ⋯` in D_n.
pub fn d_word(n: usize, alpha: &Partition) -> Result<Vec<usize>> {
    if alpha.sum() != n {
        return Err(Error::InvalidPartition(format!("{alpha} is not a partition of {n}")));
    }
    let s = alpha.prefix();
    Ok((1..=alpha.len()).flat_map(|k| d_factor(n, s[k - 1], s[k])).collect())
}

fn one_plus_q_pow(parts: impl IntoIterator<Item = usize>) -> IntPoly {
    parts.into_iter().fold(IntPoly::constant(1), |acc, a| &acc * &IntPoly::binomial(a, 1))
}

/// The representatives of every cuspidal class of the given family.
pub fn representatives(g: &CoxeterGroup, sigma: &GenMap) -> Result<Vec<Representative>> {
    let fam = CuspidalFamily::detect(g, sigma)?;
    let mut out: Vec<(String, Option<Partition>, Vec<usize>, IntPoly)> = Vec::new();
    match fam {
        CuspidalFamily::A(n) => {
            let p = (0..=n).fold(IntPoly::default(), |acc, k| acc + IntPoly::monomial(k));
            out.push((format!("s[{n},1]"), None, run(n, 1), p));
        }
        CuspidalFamily::TwistedA(n) => {
            for odd in Partition::all(n + 1).into_iter().filter(|p| p.parts().iter().all(|&a| a % 2 == 1)) {
                let alpha = Partition::new(odd.parts().iter().map(|&a| a.div_ceil(2)).collect())?;
                let num = IntPoly::product(odd.parts().iter().map(|&a| IntPoly::binomial(a, 1)).collect::<Vec<_>>().iter());
                let p = num.div_exact(&IntPoly::binomial(1, 1)).expect("q + 1 divides every factor");
                out.push((odd.to_string(), Some(odd), twisted_a_word(n, &alpha)?, p));
            }
        }
        CuspidalFamily::B(n) => {
            for alpha in Partition::all(n) {
                let p = one_plus_q_pow(alpha.parts().iter().copied());
                out.push((alpha.to_string(), Some(alpha.clone()), b_word(n, &alpha)?, p));
            }
        }
        CuspidalFamily::D(n) | CuspidalFamily::TwistedD(n) => {
            let parity = usize::from(matches!(fam, CuspidalFamily::TwistedD(_)));
            for alpha in Partition::all(n).into_iter().filter(|a| a.len() % 2 == parity) {
                let p = one_plus_q_pow(alpha.parts().iter().copied());
                out.push((alpha.to_string(), Some(alpha.clone()), d_word(n, &alpha)?, p));
            }
        }
        CuspidalFamily::TwistedB2 => {
            out.push(("s1s2s1".into(), None, vec![1, 2, 1], IntPoly::binomial(1, 1).pow(2)));
        }
        CuspidalFamily::TrialityD4 => {
            let q1 = IntPoly::binomial(1, 1);
            let phi6 = IntPoly::new(vec![1, -1, 1]);
            let phi3 = IntPoly::new(vec![1, 1, 1]);
            let list = [
                (vec![2, 1], IntPoly::new(vec![1, 0, -1, 0, 1])),
                (vec![3, 2, 1, 3], phi6.pow(2)),
                (vec![3, 2, 1, 2, 3, 2], &q1.pow(2) * &phi6),
                (vec![1, 2, 4, 3, 2, 1, 2, 4], phi3.pow(2)),
            ];
            for (w, p) in list {
                let label = w.iter().map(|i| format!("s{i}")).collect::<String>();
                out.push((label, None, w, p));
            }
        }
    }
    Ok(out
        .into_iter()
        .map(|(label, partition, word, expected)| {
            let zero: Vec<usize> = word.iter().map(|&i| i - 1).collect();
            Representative { label, partition, elem: g.from_word(&zero), word, expected }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::all(3)[1].to_string(), "(2,1)");
    }

    #[test]
    fn words_from_formulas() {
        let p = |v: Vec<usize>| Partition::new(v).unwrap();
        assert_eq!(b_word(3, &p(vec![3])).unwrap(), [3, 2, 1]);
        assert_eq!(b_word(3, &p(vec![1, 1, 1])).unwrap(), [1, 2, 3, 2, 1, 2, 3, 2, 3]);
        assert_eq!(twisted_a_word(2, &p(vec![2])).unwrap(), [1]);
        assert_eq!(twisted_a_word(2, &p(vec![1, 1, 1])).unwrap(), [2, 1, 2]);
        assert!(twisted_a_word(4, &p(vec![3, 1, 1])).is_err());
        assert_eq!(d_word(4, &p(vec![4])).unwrap(), [3, 2, 1]);
        assert_eq!(d_word(4, &p(vec![2, 2])).unwrap(), [2, 4, 3, 2, 1, 3]);
    }
}
