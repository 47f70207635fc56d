//! Enumerated finite Coxeter groups and element operations.
//!
//! Elements are identified by their action on the root system. After
//! enumeration each element gets an index [`Elem`]; indices follow the
//! length-then-lexicographic order of canonical words, so comparing two
//! `Elem`s compares them in ShortLex order.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::genset::{GenMap, GenSet};
use super::system::CoxeterSystem;
use crate::error::{Error, Result};

/// Canonical word, root-image key and permutation of a newly found element.
type Fresh = (Box<[u8]>, Box<[u32]>, Vec<u32>);

/// Default cap on the number of group elements that will be enumerated.
pub const DEFAULT_ELEMENT_CAP: u128 = 2_000_000;

/// Index of an element in an enumerated [`CoxeterGroup`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Elem(pub u32);

impl Elem {
    pub const IDENTITY: Elem = Elem(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Which side the parabolic factor sits on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    /// `w = x·y` with `x ∈ W^J`, `y ∈ W_J`.
    Right,
    /// `w = y·x` with `x ∈ ᴶW`, `y ∈ W_J`.
    Left,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Extremum {
    Min,
    Max,
}

/// A finite Coxeter group with every element enumerated.
pub struct CoxeterGroup {
    sys: Arc<CoxeterSystem>,
    rank: usize,
    nroots: usize,
    order: usize,
    /// `perms[w * nroots + k]` = index of `w(root k)`.
    perms: Vec<u32>,
    lengths: Vec<u16>,
    words: Vec<Box<[u8]>>,
    supports: Vec<GenSet>,
    /// `lmul[i * order + w]` = `s_i w`.
    lmul: Vec<u32>,
    /// `rmul[i * order + w]` = `w s_i`.
    rmul: Vec<u32>,
    inv: Vec<u32>,
    index: HashMap<Box<[u32]>, u32>,
}

impl fmt::Debug for CoxeterGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterGroup")
            .field("type", &self.sys.label())
            .field("order", &self.order)
            .finish()
    }
}

impl CoxeterGroup {
    /// Parses a type string or JSON matrix and enumerates the group.
    pub fn parse(text: &str) -> Result<CoxeterGroup> {
        CoxeterGroup::new(Arc::new(CoxeterSystem::parse(text)?))
    }

    pub fn new(sys: Arc<CoxeterSystem>) -> Result<CoxeterGroup> {
        CoxeterGroup::with_cap(sys, DEFAULT_ELEMENT_CAP)
    }

    /// Enumerates the group by breadth-first search on length, refusing groups
    /// of order above `cap`.
    pub fn with_cap(sys: Arc<CoxeterSystem>, cap: u128) -> Result<CoxeterGroup> {
        let expected = sys.order()?;
        if expected > cap {
            return Err(Error::InfiniteOrTooLarge(format!("group order {expected} exceeds enumeration cap {cap}")));
        }
        let rank = sys.rank();
        let nroots = sys.num_roots();
        let key_of = |perm: &[u32]| -> Box<[u32]> { perm[..rank].into() };

        let identity: Vec<u32> = (0..nroots as u32).collect();
        let mut perms: Vec<u32> = identity.clone();
        let mut lengths: Vec<u16> = vec![0];
        let mut words: Vec<Box<[u8]>> = vec![Box::new([])];
        let mut index: HashMap<Box<[u32]>, u32> = HashMap::new();
        index.insert(key_of(&identity), 0);

        let mut level: Vec<u32> = vec![0];
        let mut len = 0u16;
        while !level.is_empty() {
            // New element -> (smallest left descent, parent, perm).
            let mut fresh: HashMap<Box<[u32]>, (usize, u32, Vec<u32>)> = HashMap::new();
            for &w in &level {
                let p = &perms[w as usize * nroots..(w as usize + 1) * nroots];
                for i in 0..rank {
                    let refl = sys.reflection_table(i);
                    let key: Box<[u32]> = (0..rank).map(|k| refl[p[k] as usize]).collect();
                    if index.contains_key(&key) {
                        continue;
                    }
                    match fresh.get_mut(&key) {
                        Some(entry) => {
                            if i < entry.0 {
                                entry.0 = i;
                                entry.1 = w;
                            }
                        }
                        None => {
                            let q: Vec<u32> = p.iter().map(|&b| refl[b as usize]).collect();
                            fresh.insert(key, (i, w, q));
                        }
                    }
                }
            }
            len += 1;
            let mut next: Vec<Fresh> = fresh
                .into_iter()
                .map(|(key, (i, parent, q))| {
                    let mut word = Vec::with_capacity(len as usize);
                    word.push(i as u8);
                    word.extend_from_slice(&words[parent as usize]);
                    (word.into_boxed_slice(), key, q)
                })
                .collect();
            next.sort_by(|a, b| a.0.cmp(&b.0));
            level = Vec::with_capacity(next.len());
            for (word, key, q) in next {
                let id = lengths.len() as u32;
                if id as u128 >= cap {
                    return Err(Error::InfiniteOrTooLarge(format!("more than {cap} elements")));
                }
                index.insert(key, id);
                perms.extend_from_slice(&q);
                lengths.push(len);
                words.push(word);
                level.push(id);
            }
        }
        let order = lengths.len();
        if order as u128 != expected {
            return Err(Error::OracleMismatch(format!(
                "enumerated {order} elements but orbit count gives {expected}"
            )));
        }

        let mut lmul = vec![0u32; rank * order];
        let mut rmul = vec![0u32; rank * order];
        for w in 0..order {
            let p = &perms[w * nroots..(w + 1) * nroots];
            for i in 0..rank {
                let refl = sys.reflection_table(i);
                let lkey: Box<[u32]> = (0..rank).map(|k| refl[p[k] as usize]).collect();
                lmul[i * order + w] = index[&lkey];
                let rkey: Box<[u32]> = (0..rank).map(|k| p[refl[k] as usize]).collect();
                rmul[i * order + w] = index[&rkey];
            }
        }
        let mut inv = vec![0u32; order];
        let mut supports = vec![GenSet::EMPTY; order];
        for w in 0..order {
            let mut x = 0u32;
            for &i in words[w].iter() {
                x = lmul[i as usize * order + x as usize];
            }
            inv[w] = x;
            supports[w] = words[w].iter().map(|&i| i as usize).collect();
        }
        Ok(CoxeterGroup { sys, rank, nroots, order, perms, lengths, words, supports, lmul, rmul, inv, index })
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.sys
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn full_set(&self) -> GenSet {
        GenSet::full(self.rank)
    }

    /// All elements in ShortLex order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order as u32).map(Elem)
    }

    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    pub fn generator(&self, i: usize) -> Elem {
        self.lmul_gen(i, Elem::IDENTITY)
    }

    pub fn length(&self, w: Elem) -> usize {
        self.lengths[w.index()] as usize
    }

    /// ShortLex-minimal reduced word, 0-based letters.
    pub fn word(&self, w: Elem) -> &[u8] {
        &self.words[w.index()]
    }

    /// 1-based comma-separated word, `e` for the identity.
    pub fn word_string(&self, w: Elem) -> String {
        format_word(self.word(w))
    }

    pub fn support(&self, w: Elem) -> GenSet {
        self.supports[w.index()]
    }

    /// Smallest σ-stable subset containing the support.
    pub fn support_sigma(&self, w: Elem, sigma: &GenMap) -> GenSet {
        let mut s = self.support(w);
        loop {
            let t = s.union(sigma.image_of(s));
            if t == s {
                return s;
            }
            s = t;
        }
    }

    /// `s_i w`.
    pub fn lmul_gen(&self, i: usize, w: Elem) -> Elem {
        Elem(self.lmul[i * self.order + w.index()])
    }

    /// `w s_i`.
    pub fn rmul_gen(&self, w: Elem, i: usize) -> Elem {
        Elem(self.rmul[i * self.order + w.index()])
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let mut x = a;
        for &i in self.word(b) {
            x = self.rmul_gen(x, i as usize);
        }
        x
    }

    pub fn mul3(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        self.mul(self.mul(a, b), c)
    }

    pub fn inverse(&self, w: Elem) -> Elem {
        Elem(self.inv[w.index()])
    }

    /// Product of an arbitrary (not necessarily reduced) word, 0-based letters.
    pub fn from_word(&self, word: &[usize]) -> Elem {
        word.iter().fold(Elem::IDENTITY, |x, &i| self.rmul_gen(x, i))
    }

    /// Parses `"1,2,1"` (1-based) or `"e"`.
    pub fn parse_element(&self, s: &str) -> Result<Elem> {
        Ok(self.from_word(&parse_word(s, self.rank)?))
    }

    /// Index of `w(root k)`.
    pub fn root_image(&self, w: Elem, k: usize) -> usize {
        self.perms[w.index() * self.nroots + k] as usize
    }

    /// If `w s_i w⁻¹` is a simple reflection `s_k` (that is `w(α_i) = ±α_k`), returns `k`.
    pub fn conj_simple(&self, w: Elem, i: usize) -> Option<usize> {
        self.sys.simple_index(self.root_image(w, i))
    }

    /// Image of a set of generators under conjugation by `w`, if every image is simple.
    pub fn conj_set(&self, w: Elem, set: GenSet) -> Option<GenSet> {
        let mut out = GenSet::EMPTY;
        for i in set.iter() {
            out.insert(self.conj_simple(w, i)?);
        }
        Some(out)
    }

    /// The elements `k` with `w(α_i) = ±α_k` for some `i ∈ set` (others dropped).
    pub fn conj_set_partial(&self, w: Elem, set: GenSet) -> GenSet {
        set.iter().filter_map(|i| self.conj_simple(w, i)).collect()
    }

    pub fn is_left_descent(&self, w: Elem, i: usize) -> bool {
        self.length(self.lmul_gen(i, w)) < self.length(w)
    }

    pub fn is_right_descent(&self, w: Elem, i: usize) -> bool {
        // w(α_i) < 0.
        !self.sys.is_positive_root(self.root_image(w, i))
    }

    pub fn left_descents(&self, w: Elem) -> GenSet {
        (0..self.rank).filter(|&i| self.is_left_descent(w, i)).collect()
    }

    pub fn right_descents(&self, w: Elem) -> GenSet {
        (0..self.rank).filter(|&i| self.is_right_descent(w, i)).collect()
    }

    /// Number of positive roots sent to negative roots; equals [`Self::length`].
    pub fn inversion_count(&self, w: Elem) -> usize {
        (0..self.sys.num_positive_roots())
            .filter(|&k| !self.sys.is_positive_root(self.root_image(w, k)))
            .count()
    }

    pub fn in_parabolic(&self, w: Elem, j: GenSet) -> bool {
        self.support(w).is_subset(j)
    }

    /// `w ∈ W^J`: no right descent in `J`.
    pub fn is_min_right(&self, w: Elem, j: GenSet) -> bool {
        self.right_descents(w).intersection(j).is_empty()
    }

    /// `w ∈ ᴶW`: no left descent in `J`.
    pub fn is_min_left(&self, j: GenSet, w: Elem) -> bool {
        self.left_descents(w).intersection(j).is_empty()
    }

    /// Elements of `W_J` in ShortLex order.
    pub fn parabolic_elements(&self, j: GenSet) -> Vec<Elem> {
        self.elements().filter(|&w| self.in_parabolic(w, j)).collect()
    }

    /// Bruhat order, by walking a reduced word of `v` and greedily matching `u`.
    pub fn bruhat_leq(&self, u: Elem, v: Elem) -> bool {
        if self.length(u) > self.length(v) {
            return false;
        }
        let mut x = u;
        for &i in self.word(v) {
            let i = i as usize;
            if self.is_left_descent(x, i) {
                x = self.lmul_gen(i, x);
            }
        }
        x == Elem::IDENTITY
    }

    /// Splits `w` into its minimal coset representative and parabolic part.
    /// Returns `(x, y)`; see [`Side`] for which product recovers `w`.
    pub fn parabolic_decompose(&self, w: Elem, j: GenSet, side: Side) -> (Elem, Elem) {
        let mut x = w;
        let mut y = Elem::IDENTITY;
        match side {
            Side::Right => {
                while let Some(i) = self.right_descents(x).intersection(j).iter().next() {
                    x = self.rmul_gen(x, i);
                    y = self.lmul_gen(i, y);
                }
            }
            Side::Left => {
                while let Some(i) = self.left_descents(x).intersection(j).iter().next() {
                    x = self.lmul_gen(i, x);
                    y = self.rmul_gen(y, i);
                }
            }
        }
        (x, y)
    }

    /// `min(w W_J)`.
    pub fn min_right_coset(&self, w: Elem, j: GenSet) -> Elem {
        self.parabolic_decompose(w, j, Side::Right).0
    }

    /// `min(W_J w)`.
    pub fn min_left_coset(&self, j: GenSet, w: Elem) -> Elem {
        self.parabolic_decompose(w, j, Side::Left).0
    }

    /// The unique minimal (or maximal) element of `{v w : v ≤ u}`.
    pub fn extremal_coset_element(&self, u: Elem, w: Elem, mode: Extremum) -> Elem {
        if u == Elem::IDENTITY {
            return w;
        }
        let i = self.word(u)[0] as usize;
        let y1 = self.extremal_coset_element(self.lmul_gen(i, u), w, mode);
        let sy1 = self.lmul_gen(i, y1);
        let shorter = self.length(sy1) < self.length(y1);
        match (mode, shorter) {
            (Extremum::Min, true) | (Extremum::Max, false) => sy1,
            _ => y1,
        }
    }

    /// The longest element `w_J` of `W_J`.
    pub fn longest_element(&self, j: GenSet) -> Elem {
        let mut w = Elem::IDENTITY;
        while let Some(i) = j.iter().find(|&i| !self.is_left_descent(w, i)) {
            w = self.lmul_gen(i, w);
        }
        w
    }

    /// Transports `w ∈ W_{dom(map)}` into `target` by relabelling a reduced word.
    pub fn apply_map(&self, w: Elem, map: &GenMap, target: &CoxeterGroup) -> Result<Elem> {
        if !self.support(w).is_subset(map.domain()) {
            return Err(Error::SupportOutsideParabolic);
        }
        Ok(self.word(w).iter().fold(Elem::IDENTITY, |x, &i| target.rmul_gen(x, map.apply(i as usize))))
    }

    /// Applies a diagram automorphism of this group.
    pub fn apply_automorphism(&self, w: Elem, sigma: &GenMap) -> Elem {
        self.word(w).iter().fold(Elem::IDENTITY, |x, &i| self.rmul_gen(x, sigma.apply(i as usize)))
    }

    /// `σ(w)` for every element, indexed by `Elem`.
    pub fn automorphism_table(&self, sigma: &GenMap) -> Vec<Elem> {
        self.elements().map(|w| self.apply_automorphism(w, sigma)).collect()
    }

    /// Looks up the element acting on simple roots as given.
    pub fn element_from_simple_images(&self, images: &[u32]) -> Option<Elem> {
        self.index.get(images).map(|&i| Elem(i))
    }

    /// `s_{[a,b]} = s_a s_{a-1} ⋯ s_b` (1-based, identity when `a < b`) as a word.
    pub fn descending_run(a: usize, b: usize) -> Vec<usize> {
        if a < b || a == 0 {
            return Vec::new();
        }
        (b.max(1)..=a).rev().map(|i| i - 1).collect()
    }
}

/// Formats a 0-based word as `"1,2,1"` (or `"e"`).
pub fn format_word(word: &[u8]) -> String {
    if word.is_empty() {
        "e".into()
    } else {
        word.iter().map(|&i| (i as usize + 1).to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Parses `"1,2,1"` (1-based) or `"e"` into 0-based letters.
pub fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            let i: usize = t.parse().map_err(|_| Error::Parse(format!("bad letter `{t}`")))?;
            if i == 0 || i > rank {
                return Err(Error::Parse(format!("letter {i} out of range 1..={rank}")));
            }
            Ok(i - 1)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> CoxeterGroup {
        CoxeterGroup::parse(s).unwrap()
    }

    #[test]
    fn a2_canonical_words() {
        let w = g("A2");
        let words: Vec<String> = w.elements().map(|x| w.word_string(x)).collect();
        assert_eq!(words, ["e", "1", "2", "1,2", "2,1", "1,2,1"]);
    }

    #[test]
    fn lengths_agree_with_inversions() {
        for t in ["A3", "B3", "G2", "D4", "A1xA2"] {
            let w = g(t);
            for x in w.elements() {
                assert_eq!(w.length(x), w.inversion_count(x), "{t}");
                assert_eq!(w.length(x), w.word(x).len());
            }
        }
    }

    #[test]
    fn braid_relation_in_b2() {
        let w = g("B2");
        assert_eq!(w.parse_element("1,2,1,2").unwrap(), w.parse_element("2,1,2,1").unwrap());
        assert_eq!(w.length(w.parse_element("1,2,1,2").unwrap()), 4);
    }

    #[test]
    fn longest_elements() {
        let w = g("A2");
        assert_eq!(w.word_string(w.longest_element(w.full_set())), "1,2,1");
        for (t, l) in [("A3", 6), ("B3", 9), ("D4", 12), ("E6", 36)] {
            let w = g(t);
            let w0 = w.longest_element(w.full_set());
            assert_eq!(w.length(w0), l, "{t}");
            assert_eq!(w.inverse(w0), w0);
        }
    }

    #[test]
    fn decompose_example() {
        let w = g("A2");
        let x = w.parse_element("1,2,1").unwrap();
        let (a, b) = w.parabolic_decompose(x, GenSet::single(0), Side::Right);
        assert_eq!(w.word_string(a), "1,2");
        assert_eq!(w.word_string(b), "1");
        assert_eq!(w.parabolic_decompose(x, GenSet::EMPTY, Side::Right), (x, Elem::IDENTITY));
    }

    #[test]
    fn extremal_example() {
        let w = g("A2");
        let u = w.parse_element("1").unwrap();
        let x = w.parse_element("1,2").unwrap();
        let y = w.extremal_coset_element(u, x, Extremum::Min);
        assert_eq!(w.word_string(y), "2");
        let w0 = w.longest_element(w.full_set());
        assert_eq!(w.extremal_coset_element(w0, x, Extremum::Min), Elem::IDENTITY);
    }

    #[test]
    fn descending_runs() {
        assert_eq!(CoxeterGroup::descending_run(3, 1), vec![2, 1, 0]);
        assert!(CoxeterGroup::descending_run(1, 3).is_empty());
        assert_eq!(CoxeterGroup::descending_run(2, 2), vec![1]);
    }

    #[test]
    fn inverse_and_mul() {
        let w = g("B3");
        for x in w.elements() {
            assert_eq!(w.mul(x, w.inverse(x)), Elem::IDENTITY);
        }
    }
}
