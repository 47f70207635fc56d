//! Subsets of generators and partial maps between generator sets.

use std::fmt;

use crate::error::{Error, Result};

/// A subset of the simple reflections, stored as a bitmask (rank at most 32).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GenSet(pub u32);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(rank: usize) -> Self {
        if rank >= 32 {
            GenSet(u32::MAX)
        } else {
            GenSet((1u32 << rank) - 1)
        }
    }

    pub fn single(i: usize) -> Self {
        GenSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: GenSet) -> GenSet {
        GenSet(self.0 | o.0)
    }

    pub fn intersection(self, o: GenSet) -> GenSet {
        GenSet(self.0 & o.0)
    }

    pub fn difference(self, o: GenSet) -> GenSet {
        GenSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: GenSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = GenSet> {
        let full = self.0;
        let mut cur: Option<u32> = Some(0);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == full { None } else { Some(((s | !full).wrapping_add(1)) & full) };
            Some(GenSet(s))
        })
    }

    /// Parses a 1-based list such as `"1,2"`; the empty string gives the empty set.
    pub fn parse(s: &str, rank: usize) -> Result<GenSet> {
        let mut out = GenSet::EMPTY;
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let i: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator `{tok}`")))?;
            if i == 0 || i > rank {
                return Err(Error::Parse(format!("generator {i} out of range 1..={rank}")));
            }
            out.insert(i - 1);
        }
        Ok(out)
    }

    /// 1-based labels.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = GenSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An injective partial map from the generators of one system to those of another.
///
/// Diagram automorphisms are the total bijective case with source = target.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GenMap {
    map: Vec<Option<usize>>,
    target_rank: usize,
}

impl GenMap {
    /// Builds a map from `(source, target)` pairs, 0-based.
    pub fn from_pairs(source_rank: usize, target_rank: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut map = vec![None; source_rank];
        let mut seen = GenSet::EMPTY;
        for &(a, b) in pairs {
            if a >= source_rank || b >= target_rank {
                return Err(Error::BadIsomorphism(format!("pair {}:{} out of range", a + 1, b + 1)));
            }
            if map[a].is_some() {
                return Err(Error::BadIsomorphism(format!("generator {} mapped twice", a + 1)));
            }
            if seen.contains(b) {
                return Err(Error::BadIsomorphism(format!("generator {} hit twice", b + 1)));
            }
            seen.insert(b);
            map[a] = Some(b);
        }
        Ok(GenMap { map, target_rank })
    }

    /// The identity on `set`.
    pub fn identity_on(set: GenSet, rank: usize) -> Self {
        let pairs: Vec<(usize, usize)> = set.iter().map(|i| (i, i)).collect();
        GenMap::from_pairs(rank, rank, &pairs).expect("identity is injective")
    }

    /// A total permutation of `0..perm.len()`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = perm.iter().copied().enumerate().collect();
        let m = GenMap::from_pairs(perm.len(), perm.len(), &pairs)?;
        Ok(m)
    }

    /// Parses `"1:2,2:3"` (1-based) or `"id"` (identity on `default_domain`).
    pub fn parse(s: &str, source_rank: usize, target_rank: usize, default_domain: GenSet) -> Result<Self> {
        let s = s.trim();
        if s == "id" {
            if source_rank != target_rank {
                return Err(Error::BadIsomorphism("`id` needs equal ranks".into()));
            }
            return Ok(GenMap::identity_on(default_domain, source_rank));
        }
        let mut pairs = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = tok
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected `a:b`, got `{tok}`")))?;
            let a: usize = a.trim().parse().map_err(|_| Error::Parse(format!("bad generator `{a}`")))?;
            let b: usize = b.trim().parse().map_err(|_| Error::Parse(format!("bad generator `{b}`")))?;
            if a == 0 || b == 0 {
                return Err(Error::Parse("generators are numbered from 1".into()));
            }
            pairs.push((a - 1, b - 1));
        }
        GenMap::from_pairs(source_rank, target_rank, &pairs)
    }

    pub fn source_rank(&self) -> usize {
        self.map.len()
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    pub fn get(&self, i: usize) -> Option<usize> {
        self.map.get(i).copied().flatten()
    }

    /// Image of `i`; panics outside the domain.
    pub fn apply(&self, i: usize) -> usize {
        self.get(i).unwrap_or_else(|| panic!("generator {} outside domain", i + 1))
    }

    pub fn domain(&self) -> GenSet {
        self.map.iter().enumerate().filter(|(_, b)| b.is_some()).map(|(a, _)| a).collect()
    }

    pub fn image(&self) -> GenSet {
        self.map.iter().flatten().copied().collect()
    }

    /// Image of a subset of the domain (elements outside the domain are dropped).
    pub fn image_of(&self, set: GenSet) -> GenSet {
        set.iter().filter_map(|i| self.get(i)).collect()
    }

    pub fn inverse(&self) -> GenMap {
        let mut map = vec![None; self.target_rank];
        for (a, b) in self.map.iter().enumerate() {
            if let Some(b) = b {
                map[*b] = Some(a);
            }
        }
        GenMap { map, target_rank: self.map.len() }
    }

    /// `other ∘ self`, defined where both are.
    pub fn then(&self, other: &GenMap) -> GenMap {
        let map = self.map.iter().map(|b| b.and_then(|b| other.get(b))).collect();
        GenMap { map, target_rank: other.target_rank }
    }

    /// Restriction to `set`.
    pub fn restrict(&self, set: GenSet) -> GenMap {
        let map = self
            .map
            .iter()
            .enumerate()
            .map(|(a, b)| if set.contains(a) { *b } else { None })
            .collect();
        GenMap { map, target_rank: self.target_rank }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(a, b)| b.map_or(true, |b| a == b))
    }

    /// Order as a permutation (total maps only).
    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = cur.then(self);
            k += 1;
        }
        k
    }

    /// `(a, b)` pairs with 1-based labels.
    pub fn labelled_pairs(&self) -> Vec<(usize, usize)> {
        self.map
            .iter()
            .enumerate()
            .filter_map(|(a, b)| b.map(|b| (a + 1, b + 1)))
            .collect()
    }
}

impl fmt::Display for GenMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labelled_pairs().iter().map(|(a, b)| format!("{a}:{b}")).collect();
        write!(f, "{}", parts.join(","))
    }
}
