//! The geometric representation and the root system of a Coxeter system.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};

use num_rational::Rational64;

use super::genset::{GenMap, GenSet};
use super::matrix::{Component, CoxeterMatrix, TypeSpec, INFINITY};
use crate::error::{Error, Result};
use crate::scalar::QuadScalar;

/// Default cap on the number of roots; override with `COX_ROOT_CAP`.
pub const DEFAULT_ROOT_CAP: usize = 250_000;

pub(crate) fn root_cap() -> usize {
    std::env::var("COX_ROOT_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_ROOT_CAP)
}

/// `B(α_i, α_j) = -cos(π/m)`.
fn bilinear_entry(m: u32) -> QuadScalar {
    let half = Rational64::new(1, 2);
    match m {
        1 => QuadScalar::one(),
        2 => QuadScalar::ZERO,
        3 => QuadScalar::from_rational(-half),
        4 => -QuadScalar::sqrt2().scale(half),
        6 => -QuadScalar::sqrt3().scale(half),
        INFINITY => QuadScalar::from_int(-1),
        _ => unreachable!("bond validated by CoxeterMatrix"),
    }
}

/// A finite Coxeter system together with its root system.
///
/// Roots are stored in simple-root coordinates; indices `0..npos` are the
/// positive roots (the first `rank` being the simple ones) and root `k + npos`
/// is `-(root k)`.
#[derive(Debug)]
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    label: String,
    components: Vec<Component>,
    automorphism: GenMap,
    gram: Vec<Vec<QuadScalar>>,
    roots: Vec<Vec<QuadScalar>>,
    npos: usize,
    root_index: HashMap<Vec<QuadScalar>, u32>,
    /// `reflections[i][k]` is the index of `s_i(root k)`.
    reflections: Vec<Vec<u32>>,
}

impl CoxeterSystem {
    /// Parses a type string (`"B3"`, `"3D4"`, `"A2xA1"`) or a JSON matrix.
    pub fn parse(text: &str) -> Result<CoxeterSystem> {
        CoxeterSystem::parse_with_cap(text, root_cap())
    }

    /// As [`CoxeterSystem::parse`] with an explicit cap on the number of roots.
    pub fn parse_with_cap(text: &str, cap: usize) -> Result<CoxeterSystem> {
        let text = text.trim();
        if text.starts_with('{') {
            let m = CoxeterMatrix::from_json(text)?;
            let n = m.rank();
            CoxeterSystem::build(m, "custom".into(), Vec::new(), GenMap::identity_on(GenSet::full(n), n), cap)
        } else {
            let t = TypeSpec::parse(text)?;
            let label = t.label();
            CoxeterSystem::build(t.matrix, label, t.components, t.automorphism, cap)
        }
    }

    /// Builds the system from a matrix, refusing infinite groups.
    pub fn from_matrix(m: CoxeterMatrix) -> Result<CoxeterSystem> {
        let n = m.rank();
        CoxeterSystem::build(m, "custom".into(), Vec::new(), GenMap::identity_on(GenSet::full(n), n), root_cap())
    }

    fn build(
        matrix: CoxeterMatrix,
        label: String,
        components: Vec<Component>,
        automorphism: GenMap,
        cap: usize,
    ) -> Result<Self> {
        let n = matrix.rank();
        let gram: Vec<Vec<QuadScalar>> =
            (0..n).map(|i| (0..n).map(|j| bilinear_entry(matrix.get(i, j))).collect()).collect();
        let reflect = |i: usize, v: &[QuadScalar]| -> Vec<QuadScalar> {
            let mut b = QuadScalar::ZERO;
            for k in 0..n {
                if !v[k].is_zero() && !gram[i][k].is_zero() {
                    b = b + gram[i][k] * v[k];
                }
            }
            let mut out = v.to_vec();
            out[i] = out[i] - (b + b);
            out
        };

        // Closure of the simple roots under the simple reflections.
        let mut found: HashMap<Vec<QuadScalar>, ()> = HashMap::new();
        let mut order: Vec<Vec<QuadScalar>> = Vec::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![QuadScalar::ZERO; n];
            e[i] = QuadScalar::one();
            found.insert(e.clone(), ());
            order.push(e.clone());
            queue.push_back(e);
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..n {
                let w = reflect(i, &v);
                if found.contains_key(&w) {
                    continue;
                }
                if found.len() >= cap {
                    return Err(Error::InfiniteOrTooLarge(format!(
                        "more than {cap} roots (set COX_ROOT_CAP to raise the cap)"
                    )));
                }
                found.insert(w.clone(), ());
                order.push(w.clone());
                queue.push_back(w);
            }
        }
        let sign = |v: &[QuadScalar]| v.iter().map(QuadScalar::signum).find(|s| *s != Ordering::Equal);
        let mut roots: Vec<Vec<QuadScalar>> =
            order.into_iter().filter(|v| sign(v) == Some(Ordering::Greater)).collect();
        let npos = roots.len();
        for k in 0..npos {
            let neg: Vec<QuadScalar> = roots[k].iter().map(|x| -*x).collect();
            roots.push(neg);
        }
        if roots.len() != found.len() {
            return Err(Error::OracleMismatch("root system is not closed under negation".into()));
        }
        let root_index: HashMap<Vec<QuadScalar>, u32> =
            roots.iter().enumerate().map(|(k, v)| (v.clone(), k as u32)).collect();
        let reflections = (0..n)
            .map(|i| roots.iter().map(|v| root_index[&reflect(i, v)]).collect())
            .collect();
        Ok(CoxeterSystem { matrix, label, components, automorphism, gram, roots, npos, root_index, reflections })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Irreducible factors, when built from a type string.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// The diagram automorphism carried by a twisted type string (identity otherwise).
    pub fn automorphism(&self) -> &GenMap {
        &self.automorphism
    }

    /// Validates a permutation of the generators as a diagram automorphism.
    pub fn check_automorphism(&self, map: &GenMap) -> Result<()> {
        let full = GenSet::full(self.rank());
        if map.source_rank() != self.rank() || map.domain() != full || map.image() != full {
            return Err(Error::BadIsomorphism("not a permutation of the generators".into()));
        }
        if !self.matrix.preserves(&self.matrix, map) {
            return Err(Error::BadIsomorphism("map does not preserve the Coxeter matrix".into()));
        }
        Ok(())
    }

    pub fn gram(&self) -> &[Vec<QuadScalar>] {
        &self.gram
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.npos
    }

    pub fn root(&self, k: usize) -> &[QuadScalar] {
        &self.roots[k]
    }

    pub fn root_index(&self, v: &[QuadScalar]) -> Option<usize> {
        self.root_index.get(v).map(|&k| k as usize)
    }

    pub fn is_positive_root(&self, k: usize) -> bool {
        k < self.npos
    }

    pub fn negate_root(&self, k: usize) -> usize {
        if k < self.npos {
            k + self.npos
        } else {
            k - self.npos
        }
    }

    /// If root `k` is `±α_i`, returns `i`.
    pub fn simple_index(&self, k: usize) -> Option<usize> {
        let k = if k < self.npos { k } else { k - self.npos };
        (k < self.rank()).then_some(k)
    }

    pub fn reflect_root(&self, i: usize, k: usize) -> usize {
        self.reflections[i][k] as usize
    }

    pub(crate) fn reflection_table(&self, i: usize) -> &[u32] {
        &self.reflections[i]
    }

    /// Order of the parabolic subgroup `W_J`, computed from orbit sizes of
    /// dominant vectors and independent of element enumeration.
    pub fn parabolic_order(&self, j: GenSet) -> Result<u128> {
        let gens: Vec<usize> = j.iter().collect();
        let Some(&last) = gens.last() else {
            return Ok(1);
        };
        let smaller = j.difference(GenSet::single(last));
        // λ with B(λ, α_k) = 0 for k in J \ {last} and B(λ, α_last) = 1, stored by its pairings.
        let n = self.rank();
        let mut start = vec![QuadScalar::ZERO; n];
        start[last] = QuadScalar::one();
        let cap = root_cap().max(1_000_000);
        let mut seen: HashMap<Vec<QuadScalar>, ()> = HashMap::new();
        seen.insert(start.clone(), ());
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            for &i in &gens {
                if p[i].is_zero() {
                    continue;
                }
                let two_pi = p[i] + p[i];
                let q: Vec<QuadScalar> = (0..n)
                    .map(|k| if j.contains(k) { p[k] - two_pi * self.gram[i][k] } else { p[k] })
                    .collect();
                if !seen.contains_key(&q) {
                    if seen.len() >= cap {
                        return Err(Error::InfiniteOrTooLarge(format!("orbit exceeds {cap}")));
                    }
                    seen.insert(q.clone(), ());
                    queue.push_back(q);
                }
            }
        }
        Ok(self.parabolic_order(smaller)? * seen.len() as u128)
    }

    pub fn order(&self) -> Result<u128> {
        self.parabolic_order(GenSet::full(self.rank()))
    }
}
