//! Orbits, length-reducing chains, cyclic-shift classes and strong conjugacy.

use std::collections::VecDeque;

use serde::Serialize;
use serde_json::json;

use super::action::ConjugationAction;
use crate::error::{Error, Result};
use crate::verdict::Verdict;

/// Simple union-find with path halving.
pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Keep the smaller index as root so roots are orbit minima.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u32;
        }
    }

    /// Classes sorted by smallest member, members ascending; restricted to `keep`.
    pub(crate) fn classes(&mut self, keep: impl Fn(usize) -> bool) -> (Vec<u32>, Vec<Vec<usize>>) {
        let n = self.parent.len();
        let mut id = vec![u32::MAX; n];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if !keep(s) {
                continue;
            }
            let r = self.find(s);
            if id[r] == u32::MAX {
                id[r] = members.len() as u32;
                members.push(Vec::new());
            }
            id[s] = id[r];
            members[id[r] as usize].push(s);
        }
        (id, members)
    }
}

/// Partition of the state set into orbits.
#[derive(Clone, Debug)]
pub struct Orbits {
    /// Orbit index of every state.
    pub orbit_of: Vec<u32>,
    /// Members of each orbit, ascending; orbits sorted by smallest member.
    pub members: Vec<Vec<usize>>,
}

impl Orbits {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// All orbits of the action.
pub fn orbits<A: ConjugationAction + ?Sized>(a: &A) -> Orbits {
    let n = a.state_count();
    let mut uf = UnionFind::new(n);
    let mut buf = Vec::new();
    for s in 0..n {
        buf.clear();
        a.moves(s, &mut buf);
        for &(_, t) in &buf {
            uf.union(s, t);
        }
    }
    let (orbit_of, members) = uf.classes(|_| true);
    Orbits { orbit_of, members }
}

/// The orbit containing `s`, ascending.
pub fn orbit_of<A: ConjugationAction + ?Sized>(a: &A, s: usize) -> Vec<usize> {
    let mut seen = std::collections::HashSet::from([s]);
    let mut queue = VecDeque::from([s]);
    let mut buf = Vec::new();
    while let Some(x) = queue.pop_front() {
        buf.clear();
        a.moves(x, &mut buf);
        for &(_, t) in &buf {
            if seen.insert(t) {
                queue.push_back(t);
            }
        }
    }
    let mut out: Vec<usize> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// Elements of minimal length in `orbit`.
pub fn min_length_set<A: ConjugationAction + ?Sized>(a: &A, orbit: &[usize]) -> Vec<usize> {
    let m = orbit.iter().map(|&s| a.length(s)).min().unwrap_or(0);
    orbit.iter().copied().filter(|&s| a.length(s) == m).collect()
}

/// One move `from → to` by generator `gen` with `l(to) ≤ l(from)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub gen: i32,
    pub from: usize,
    pub to: usize,
    pub from_len: usize,
    pub to_len: usize,
}

/// A chain of non-increasing moves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionChain {
    pub start: usize,
    pub steps: Vec<ReductionStep>,
}

impl ReductionChain {
    pub fn end(&self) -> usize {
        self.steps.last().map_or(self.start, |s| s.to)
    }

    /// Replays every step through the action and checks lengths never increase.
    pub fn is_valid<A: ConjugationAction + ?Sized>(&self, a: &A) -> bool {
        let mut cur = self.start;
        for st in &self.steps {
            if st.from != cur
                || a.apply_move(cur, st.gen) != Some(st.to)
                || a.length(st.from) != st.from_len
                || a.length(st.to) != st.to_len
                || st.to_len > st.from_len
            {
                return false;
            }
            cur = st.to;
        }
        true
    }
}

fn step<A: ConjugationAction + ?Sized>(a: &A, from: usize, gen: i32, to: usize) -> ReductionStep {
    ReductionStep { gen, from, to, from_len: a.length(from), to_len: a.length(to) }
}

/// Reduces `s` to a minimal-length element of its orbit by non-increasing moves.
///
/// Strictly decreasing moves are taken whenever available; otherwise a
/// breadth-first search of the current length plateau looks for an exit.
/// The end point is checked against the true orbit minimum.
pub fn reduce_to_min<A: ConjugationAction + ?Sized>(a: &A, s: usize) -> Result<ReductionChain> {
    let mut steps = Vec::new();
    let mut cur = s;
    let mut buf = Vec::new();
    loop {
        buf.clear();
        a.moves(cur, &mut buf);
        let l = a.length(cur);
        if let Some(&(gen, t)) = buf.iter().find(|&&(_, t)| a.length(t) < l) {
            steps.push(step(a, cur, gen, t));
            cur = t;
            continue;
        }
        match plateau_exit(a, cur) {
            Some(path) if !path.is_empty() => {
                for (gen, from, to) in path {
                    steps.push(step(a, from, gen, to));
                }
                cur = steps.last().unwrap().to;
            }
            _ => break,
        }
    }
    let chain = ReductionChain { start: s, steps };
    let orbit = orbit_of(a, s);
    let min = orbit.iter().map(|&x| a.length(x)).min().unwrap_or(0);
    if a.length(chain.end()) != min {
        return Err(Error::OracleMismatch(format!(
            "{} reduces only to length {}, orbit minimum is {min}",
            a.describe(s),
            a.length(chain.end())
        )));
    }
    Ok(chain)
}

/// Path within the length plateau of `s` to a state with a strictly decreasing move.
fn plateau_exit<A: ConjugationAction + ?Sized>(a: &A, s: usize) -> Option<Vec<(i32, usize, usize)>> {
    let l = a.length(s);
    let mut parent: std::collections::HashMap<usize, (i32, usize)> = Default::default();
    let mut queue = VecDeque::from([s]);
    let mut seen = std::collections::HashSet::from([s]);
    let mut buf = Vec::new();
    while let Some(x) = queue.pop_front() {
        buf.clear();
        a.moves(x, &mut buf);
        if x != s && buf.iter().any(|&(_, t)| a.length(t) < l) {
            let mut path = Vec::new();
            let mut y = x;
            while y != s {
                let (gen, p) = parent[&y];
                path.push((gen, p, y));
                y = p;
            }
            path.reverse();
            return Some(path);
        }
        for &(gen, t) in &buf {
            if a.length(t) == l && seen.insert(t) {
                parent.insert(t, (gen, x));
                queue.push_back(t);
            }
        }
    }
    None
}

/// A class of the relation `≈`: same length, connected by length-preserving moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycClass {
    pub members: Vec<usize>,
    /// `true` when no member admits a length-decreasing move, i.e. every
    /// element reachable by non-increasing moves stays in the class.
    pub terminal: bool,
}

/// The `≈`-class of `s`. Every length-preserving move used is checked to be an
/// elementary strong conjugation.
pub fn cyc_class<A: ConjugationAction + ?Sized>(a: &A, s: usize) -> Result<CycClass> {
    let l = a.length(s);
    let mut seen = std::collections::BTreeSet::from([s]);
    let mut queue = VecDeque::from([s]);
    let mut terminal = true;
    let mut buf = Vec::new();
    while let Some(x) = queue.pop_front() {
        buf.clear();
        a.moves(x, &mut buf);
        for &(gen, t) in &buf {
            let lt = a.length(t);
            if lt < l {
                terminal = false;
            } else if lt == l && t != x {
                if !a.move_is_strong(x, gen) {
                    return Err(Error::OracleMismatch(format!(
                        "length-preserving move {gen} from {} is not a strong conjugation",
                        a.describe(x)
                    )));
                }
                if seen.insert(t) {
                    queue.push_back(t);
                }
            }
        }
    }
    Ok(CycClass { members: seen.into_iter().collect(), terminal })
}

/// Partition of all states into `≈`-classes.
pub fn cyc_partition<A: ConjugationAction + ?Sized>(a: &A) -> (Vec<u32>, Vec<CycClass>) {
    let n = a.state_count();
    let mut uf = UnionFind::new(n);
    let mut decreasing = vec![false; n];
    let mut buf = Vec::new();
    for s in 0..n {
        buf.clear();
        a.moves(s, &mut buf);
        let l = a.length(s);
        for &(_, t) in &buf {
            let lt = a.length(t);
            if lt == l {
                uf.union(s, t);
            } else if lt < l {
                decreasing[s] = true;
            }
        }
    }
    let (id, members) = uf.classes(|_| true);
    let classes = members
        .into_iter()
        .map(|m| {
            let terminal = !m.iter().any(|&s| decreasing[s]);
            CycClass { members: m, terminal }
        })
        .collect();
    (id, classes)
}

/// A path of elementary strong conjugations from `x` to `y`, if one exists.
pub fn strongly_conjugate<A: ConjugationAction + ?Sized>(a: &A, x: usize, y: usize) -> Result<Option<Vec<usize>>> {
    let (lx, ly) = (a.length(x), a.length(y));
    if lx != ly {
        return Err(Error::LengthMismatch(lx, ly));
    }
    let mut parent: std::collections::HashMap<usize, usize> = Default::default();
    let mut queue = VecDeque::from([x]);
    parent.insert(x, x);
    while let Some(s) = queue.pop_front() {
        if s == y {
            let mut path = vec![y];
            let mut cur = y;
            while cur != x {
                cur = parent[&cur];
                path.push(cur);
            }
            path.reverse();
            return Ok(Some(path));
        }
        for t in a.strong_neighbours(s) {
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(t) {
                e.insert(s);
                queue.push_back(t);
            }
        }
    }
    Ok(None)
}

/// Connected components of `states` under elementary strong conjugation.
pub fn strong_components<A: ConjugationAction + ?Sized>(a: &A, states: &[usize]) -> Vec<Vec<usize>> {
    let pos: std::collections::HashMap<usize, usize> = states.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut uf = UnionFind::new(states.len());
    for (i, &s) in states.iter().enumerate() {
        for t in a.strong_neighbours(s) {
            if let Some(&k) = pos.get(&t) {
                uf.union(i, k);
            }
        }
    }
    let (_, comps) = uf.classes(|_| true);
    comps.into_iter().map(|c| c.into_iter().map(|i| states[i]).collect()).collect()
}

/// States from which some chain of non-increasing moves reaches one of `seeds`.
pub fn backward_closure<A: ConjugationAction + ?Sized>(a: &A, seeds: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let n = a.state_count();
    let mut reverse: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut buf = Vec::new();
    for s in 0..n {
        buf.clear();
        a.moves(s, &mut buf);
        let l = a.length(s);
        for &(_, t) in &buf {
            if t != s && a.length(t) <= l {
                reverse[t].push(s as u32);
            }
        }
    }
    let mut reached = vec![false; n];
    let mut queue = VecDeque::new();
    for s in seeds {
        if !reached[s] {
            reached[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(t) = queue.pop_front() {
        for &s in &reverse[t] {
            if !reached[s as usize] {
                reached[s as usize] = true;
                queue.push_back(s as usize);
            }
        }
    }
    reached
}

/// States reachable from `s` by moves that keep the length.
pub fn plateau<A: ConjugationAction + ?Sized>(a: &A, s: usize) -> Vec<usize> {
    let l = a.length(s);
    let mut seen = std::collections::BTreeSet::from([s]);
    let mut queue = VecDeque::from([s]);
    let mut buf = Vec::new();
    while let Some(x) = queue.pop_front() {
        buf.clear();
        a.moves(x, &mut buf);
        for &(_, t) in &buf {
            if a.length(t) == l && seen.insert(t) {
                queue.push_back(t);
            }
        }
    }
    seen.into_iter().collect()
}

/// `x ≈ y`: a length-preserving chain of moves from `x` to `y` and an
/// elementary strong conjugation path between them. Both must be minimal in
/// their orbit for the first condition to capture `→`.
pub fn strongly_equivalent<A: ConjugationAction + ?Sized>(a: &A, x: usize, y: usize) -> Result<bool> {
    if a.length(x) != a.length(y) {
        return Ok(false);
    }
    Ok(plateau(a, x).binary_search(&y).is_ok() && strongly_conjugate(a, x, y)?.is_some())
}

/// States from which no chain of non-increasing moves reaches the minimum of their orbit.
pub fn unreachable_from_min<A: ConjugationAction + ?Sized>(a: &A, orb: &Orbits) -> Vec<usize> {
    let reached = backward_closure(a, orb.members.iter().flat_map(|m| min_length_set(a, m)));
    (0..a.state_count()).filter(|&s| !reached[s]).collect()
}

/// Checks, for every orbit, that every element reduces to the minimum by
/// non-increasing moves and that the minimal elements are pairwise strongly conjugate.
pub fn verify_reduction_theorem<A: ConjugationAction + ?Sized>(a: &A, check: &str, scope: &str) -> Verdict {
    let mut v = Verdict::new(check, scope);
    let orb = orbits(a);
    let bad = unreachable_from_min(a, &orb);
    v.cases += a.state_count();
    if let Some(&s) = bad.first() {
        v.fail(json!({ "part": "reduction", "element": a.describe(s), "unreachable_count": bad.len() }));
    }
    for m in &orb.members {
        let mins = min_length_set(a, m);
        let comps = strong_components(a, &mins);
        v.require(comps.len() == 1, || {
            json!({
                "part": "strong conjugacy",
                "orbit_min": a.describe(mins[0]),
                "components": comps.iter().map(|c| a.describe(c[0])).collect::<Vec<_>>(),
            })
        });
    }
    v.detail("orbits", orb.len());
    v
}
