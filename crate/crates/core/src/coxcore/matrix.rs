//! Coxeter matrices, type strings and diagram automorphisms.

use std::fmt;

use serde_json::Value;

use super::genset::GenMap;
use crate::error::{Error, Result};

/// Marker for an infinite bond.
pub const INFINITY: u32 = 0;

/// A symmetric Coxeter matrix with entries in {1, 2, 3, 4, 6, ∞}.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoxeterMatrix {
    m: Vec<Vec<u32>>,
}

impl CoxeterMatrix {
    /// Validates and wraps a matrix. `INFINITY` (0) marks an infinite bond.
    pub fn new(m: Vec<Vec<u32>>) -> Result<Self> {
        let n = m.len();
        if n == 0 {
            return Err(Error::Parse("empty Coxeter matrix".into()));
        }
        if n > 32 {
            return Err(Error::Parse(format!("rank {n} exceeds 32")));
        }
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse("Coxeter matrix is not square".into()));
            }
            for (j, &x) in row.iter().enumerate() {
                if i == j {
                    if x != 1 {
                        return Err(Error::Parse(format!("diagonal entry ({}, {}) must be 1", i + 1, j + 1)));
                    }
                    continue;
                }
                if x != m[j][i] {
                    return Err(Error::Parse("Coxeter matrix is not symmetric".into()));
                }
                if !matches!(x, 2 | 3 | 4 | 6 | INFINITY) {
                    return Err(Error::UnsupportedBond(x));
                }
            }
        }
        Ok(CoxeterMatrix { m })
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    /// Order of `s_i s_j`; `INFINITY` for an infinite bond.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.m[i][j]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.m
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &CoxeterMatrix) -> CoxeterMatrix {
        let (a, b) = (self.rank(), other.rank());
        let mut m = vec![vec![2u32; a + b]; a + b];
        for i in 0..a + b {
            m[i][i] = 1;
        }
        for i in 0..a {
            for j in 0..a {
                m[i][j] = self.m[i][j];
            }
        }
        for i in 0..b {
            for j in 0..b {
                m[a + i][a + j] = other.m[i][j];
            }
        }
        CoxeterMatrix { m }
    }

    /// True if `map` sends bonds to equal bonds on its domain.
    pub fn preserves(&self, target: &CoxeterMatrix, map: &GenMap) -> bool {
        let dom: Vec<usize> = map.domain().iter().collect();
        dom.iter().all(|&i| {
            dom.iter()
                .all(|&j| self.get(i, j) == target.get(map.apply(i), map.apply(j)))
        })
    }

    /// Parses the JSON form `{"rank": n, "m": [[...]]}`; `null`, `0` or `"inf"` mean ∞.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let rows = v
            .get("m")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing array field `m`".into()))?;
        let mut m = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row.as_array().ok_or_else(|| Error::Parse("rows of `m` must be arrays".into()))?;
            let mut out = Vec::with_capacity(row.len());
            for x in row {
                let e = match x {
                    Value::Null => INFINITY,
                    Value::String(s) if s == "inf" || s == "∞" => INFINITY,
                    Value::Number(n) => n
                        .as_u64()
                        .and_then(|n| u32::try_from(n).ok())
                        .ok_or_else(|| Error::Parse(format!("bad matrix entry {n}")))?,
                    other => return Err(Error::Parse(format!("bad matrix entry {other}"))),
                };
                out.push(e);
            }
            m.push(out);
        }
        if let Some(rank) = v.get("rank") {
            let rank = rank.as_u64().ok_or_else(|| Error::Parse("`rank` must be an integer".into()))?;
            if rank as usize != m.len() {
                return Err(Error::Parse(format!("`rank` is {rank} but `m` has {} rows", m.len())));
            }
        }
        CoxeterMatrix::new(m)
    }
}

/// One irreducible factor of a type string such as `3D4` or `B3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Component {
    pub family: char,
    pub rank: usize,
    /// 1 for untwisted, otherwise the order of the diagram automorphism.
    pub twist: u8,
    /// Index of this factor's first generator in the product.
    pub offset: usize,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twist > 1 {
            write!(f, "{}", self.twist)?;
        }
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Parsed type string: matrix, factors and the (product) diagram automorphism.
#[derive(Clone, Debug)]
pub struct TypeSpec {
    pub matrix: CoxeterMatrix,
    pub components: Vec<Component>,
    pub automorphism: GenMap,
}

fn chain(n: usize) -> Vec<Vec<u32>> {
    let mut m = vec![vec![2u32; n]; n];
    for i in 0..n {
        m[i][i] = 1;
        if i + 1 < n {
            m[i][i + 1] = 3;
            m[i + 1][i] = 3;
        }
    }
    m
}

fn set_bond(m: &mut [Vec<u32>], i: usize, j: usize, v: u32) {
    m[i][j] = v;
    m[j][i] = v;
}

/// Coxeter matrix of an irreducible finite type in Bourbaki labelling.
pub fn irreducible_matrix(family: char, n: usize) -> Result<CoxeterMatrix> {
    let bad = || Error::UnsupportedType(format!("{family}{n}"));
    let m = match family {
        'A' if n >= 1 => chain(n),
        'B' | 'C' if n >= 1 => {
            let mut m = chain(n);
            if n >= 2 {
                set_bond(&mut m, n - 2, n - 1, 4);
            }
            m
        }
        'D' if n >= 3 => {
            let mut m = chain(n - 1);
            // n-1 and n both hang off n-2 (1-based).
            m.iter_mut().for_each(|r| r.push(2));
            m.push(vec![2; n]);
            m[n - 1][n - 1] = 1;
            set_bond(&mut m, n - 3, n - 2, 3);
            set_bond(&mut m, n - 2, n - 1, 2);
            set_bond(&mut m, n - 3, n - 1, 3);
            m
        }
        'E' if (6..=8).contains(&n) => {
            let mut m = vec![vec![2u32; n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 1;
            }
            set_bond(&mut m, 0, 2, 3);
            set_bond(&mut m, 1, 3, 3);
            for i in 2..n - 1 {
                set_bond(&mut m, i, i + 1, 3);
            }
            m
        }
        'F' if n == 4 => {
            let mut m = chain(4);
            set_bond(&mut m, 1, 2, 4);
            m
        }
        'G' if n == 2 => {
            let mut m = chain(2);
            set_bond(&mut m, 0, 1, 6);
            m
        }
        _ => return Err(bad()),
    };
    CoxeterMatrix::new(m)
}

/// Diagram automorphism of a twisted irreducible type, as a 0-based permutation.
pub fn twist_permutation(family: char, n: usize, twist: u8) -> Result<Vec<usize>> {
    let bad = || Error::UnsupportedType(format!("{twist}{family}{n}"));
    let mut p: Vec<usize> = (0..n).collect();
    match (twist, family) {
        (1, _) => {}
        (2, 'A') if n >= 2 => p.reverse(),
        (2, 'D') if n >= 3 => p.swap(n - 2, n - 1),
        (3, 'D') if n == 4 => {
            // 1 -> 3 -> 4 -> 1, 2 fixed.
            p = vec![2, 1, 3, 0];
        }
        (2, 'E') if n == 6 => {
            p = vec![5, 1, 4, 3, 2, 0];
        }
        (2, 'B') | (2, 'C') if n == 2 => p.swap(0, 1),
        (2, 'F') if n == 4 => p.reverse(),
        (2, 'G') if n == 2 => p.swap(0, 1),
        _ => return Err(bad()),
    }
    Ok(p)
}

fn parse_component(s: &str) -> Result<(char, usize, u8)> {
    let bad = || Error::Parse(format!("cannot parse type `{s}`"));
    let mut chars = s.chars().peekable();
    let mut twist = 1u8;
    if let Some(c) = chars.peek().copied() {
        if c.is_ascii_digit() {
            twist = c.to_digit(10).unwrap() as u8;
            chars.next();
            if twist != 2 && twist != 3 {
                return Err(bad());
            }
        }
    }
    let family = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
    if !('A'..='G').contains(&family) {
        return Err(bad());
    }
    let rest: String = chars.collect();
    if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let rank: usize = rest.parse().map_err(|_| bad())?;
    Ok((family, rank, twist))
}

impl TypeSpec {
    /// Parses `TYPE := FAMILY RANK | TWIST FAMILY RANK | TYPE "x" TYPE`.
    pub fn parse(s: &str) -> Result<TypeSpec> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty type string".into()));
        }
        let mut matrix: Option<CoxeterMatrix> = None;
        let mut components = Vec::new();
        let mut perm = Vec::new();
        for part in s.split(['x', '×']) {
            let (family, rank, twist) = parse_component(part.trim())?;
            let m = irreducible_matrix(family, rank)?;
            let p = twist_permutation(family, rank, twist)?;
            let offset = matrix.as_ref().map_or(0, CoxeterMatrix::rank);
            perm.extend(p.iter().map(|i| i + offset));
            components.push(Component { family, rank, twist, offset });
            matrix = Some(match matrix {
                None => m,
                Some(prev) => prev.direct_sum(&m),
            });
        }
        let matrix = matrix.expect("at least one component");
        let automorphism = GenMap::from_permutation(&perm)?;
        debug_assert!(matrix.preserves(&matrix, &automorphism));
        Ok(TypeSpec { matrix, components, automorphism })
    }

    /// Label in canonical form, e.g. `2A3xB2`.
    pub fn label(&self) -> String {
        self.components.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("x")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_has_a_central_node() {
        let m = irreducible_matrix('D', 4).unwrap();
        for j in [0, 2, 3] {
            assert_eq!(m.get(1, j), 3);
        }
        assert_eq!(m.get(0, 2), 2);
        assert_eq!(m.get(2, 3), 2);
    }

    #[test]
    fn e6_bourbaki() {
        let m = irreducible_matrix('E', 6).unwrap();
        assert_eq!(m.get(0, 2), 3);
        assert_eq!(m.get(1, 3), 3);
        assert_eq!(m.get(1, 2), 2);
        assert_eq!(m.get(4, 5), 3);
    }

    #[test]
    fn twisted_types_preserve_the_matrix() {
        for s in ["2A5", "3D4", "2D4", "2D5", "2B2", "2E6", "2F4", "2G2", "2A3xA1"] {
            let t = TypeSpec::parse(s).unwrap();
            assert!(t.matrix.preserves(&t.matrix, &t.automorphism), "{s}");
            assert_eq!(t.label(), s);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(TypeSpec::parse("H3"), Err(Error::Parse(_))));
        assert!(matches!(TypeSpec::parse("3A3"), Err(Error::UnsupportedType(_))));
        assert!(matches!(TypeSpec::parse("A"), Err(Error::Parse(_))));
        assert!(matches!(CoxeterMatrix::new(vec![vec![1, 5], vec![5, 1]]), Err(Error::UnsupportedBond(5))));
    }

    #[test]
    fn json_matrix() {
        let m = CoxeterMatrix::from_json(r#"{"rank":2,"m":[[1,4],[4,1]]}"#).unwrap();
        assert_eq!(m.get(0, 1), 4);
        let m = CoxeterMatrix::from_json(r#"{"rank":2,"m":[[1,null],[null,1]]}"#).unwrap();
        assert_eq!(m.get(0, 1), INFINITY);
    }
}
