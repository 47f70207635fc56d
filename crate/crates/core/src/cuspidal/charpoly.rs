//! `p_{w,σ}(q) = det(q · id − wσ)` on the geometric representation.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::coxcore::{CoxeterGroup, CoxeterMatrix, Elem, GenMap};
use crate::error::{Error, Result};
use crate::scalar::QuadScalar;

use super::IntPoly;

/// `det(q · id − wσ)`, coefficients lowest degree first.
///
/// When `σ` permutes generators of equal root length the coefficients are
/// integers. Otherwise (²B₂, ²F₄, ²G₂) they may involve `√2` or `√3`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CharPoly(Vec<QuadScalar>);

impl CharPoly {
    pub fn coeffs(&self) -> &[QuadScalar] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn eval(&self, q: i64) -> QuadScalar {
        let q = QuadScalar::from_int(q);
        self.0.iter().rev().fold(QuadScalar::ZERO, |acc, &c| acc * q + c)
    }

    /// The polynomial with integer coefficients, if it is one.
    pub fn to_int(&self) -> Option<IntPoly> {
        self.0
            .iter()
            .map(|c| c.to_rational().filter(|r| r.is_integer()).map(|r| *r.numer()))
            .collect::<Option<Vec<i64>>>()
            .map(IntPoly::new)
    }

    pub fn is_int(&self, p: &IntPoly) -> bool {
        self.to_int().as_ref() == Some(p)
    }
}

impl From<&IntPoly> for CharPoly {
    fn from(p: &IntPoly) -> Self {
        CharPoly(p.coeffs().iter().map(|&c| QuadScalar::from_int(c)).collect())
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.to_int() {
            return write!(f, "{p}");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})q")?,
                _ => write!(f, "({c})q^{k}")?,
            }
        }
        Ok(())
    }
}

/// Integer coefficients serialise as numbers, others as strings.
impl Serialize for CharPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.to_int() {
            Some(p) => p.serialize(s),
            None => self.0.iter().map(ToString::to_string).collect::<Vec<_>>().serialize(s),
        }
    }
}

/// Whether `σ` maps every generator to one joined to it by a path of odd bonds,
/// i.e. preserves root lengths. Then `wσ` has an integral form.
pub fn preserves_root_lengths(m: &CoxeterMatrix, sigma: &GenMap) -> bool {
    let n = m.rank();
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(c: &mut [usize], i: usize) -> usize {
        if c[i] != i {
            let r = find(c, c[i]);
            c[i] = r;
        }
        c[i]
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && m.get(i, j) % 2 == 1 {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a] = b;
            }
        }
    }
    (0..n).all(|i| find(&mut comp, i) == find(&mut comp, sigma.apply(i)))
}

type Matrix = Vec<Vec<QuadScalar>>;

/// Matrix of `wσ` in the basis of simple roots; column `j` is `w(α_{σ(j)})`.
pub fn twisted_matrix(g: &CoxeterGroup, w: Elem, sigma: &GenMap) -> Matrix {
    let n = g.rank();
    let sys = g.system();
    let mut m = vec![vec![QuadScalar::ZERO; n]; n];
    for j in 0..n {
        let col = sys.root(g.root_image(w, sigma.apply(j)));
        for (i, row) in m.iter_mut().enumerate() {
            row[j] = col[i];
        }
    }
    m
}

/// Characteristic polynomial `det(q·id − m)` by Berkowitz's division-free
/// recursion, highest degree first.
pub fn berkowitz(m: &Matrix) -> Vec<QuadScalar> {
    let n = m.len();
    if n == 0 {
        return vec![QuadScalar::one()];
    }
    // Charpoly of the trailing 1×1 block, then grow towards the top-left.
    let mut p = vec![QuadScalar::one(), -m[n - 1][n - 1]];
    for top in (0..n - 1).rev() {
        let k = n - 1 - top;
        let a = m[top][top];
        let r: Vec<QuadScalar> = (top + 1..n).map(|j| m[top][j]).collect();
        let mut v: Vec<QuadScalar> = (top + 1..n).map(|i| m[i][top]).collect();
        // t_0 = 1, t_1 = −a, t_j = −R A^{j−2} C.
        let mut t = vec![QuadScalar::one(), -a];
        for _ in 0..k {
            let rv = r.iter().zip(&v).fold(QuadScalar::ZERO, |acc, (&x, &y)| acc + x * y);
            t.push(-rv);
            v = (top + 1..n)
                .map(|i| (top + 1..n).zip(&v).fold(QuadScalar::ZERO, |acc, (j, &y)| acc + m[i][j] * y))
                .collect();
        }
        let next: Vec<QuadScalar> = (0..k + 2)
            .map(|i| (0..=i.min(k)).fold(QuadScalar::ZERO, |acc, j| acc + t[i - j] * p[j]))
            .collect();
        p = next;
    }
    p
}

/// Determinant by Gaussian elimination over the field.
pub fn determinant(m: &Matrix) -> QuadScalar {
    let n = m.len();
    let mut a = m.clone();
    let mut det = QuadScalar::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return QuadScalar::ZERO;
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det = det * a[col][col];
        let inv = a[col][col].inverse().expect("pivot is nonzero");
        for r in col + 1..n {
            let f = a[r][col] * inv;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let x = a[col][c];
                a[r][c] = a[r][c] - f * x;
            }
        }
    }
    det
}

/// `p_{w,σ}(q)`. When `σ` preserves root lengths every coefficient must be an
/// integer; anything else is reported as [`Error::IrrationalLeak`].
pub fn char_poly(g: &CoxeterGroup, w: Elem, sigma: &GenMap) -> Result<CharPoly> {
    let mut c = berkowitz(&twisted_matrix(g, w, sigma));
    c.reverse();
    let p = CharPoly(c);
    if preserves_root_lengths(g.system().matrix(), sigma) && p.to_int().is_none() {
        return Err(Error::IrrationalLeak(format!("{p} for {}", g.word_string(w))));
    }
    Ok(p)
}

/// Compares `p_{w,σ}` with `det(k·id − wσ)` computed by elimination at
/// `k = −1, 0, …, rank`.
pub fn char_poly_oracle_agrees(g: &CoxeterGroup, w: Elem, sigma: &GenMap, p: &CharPoly) -> bool {
    let m = twisted_matrix(g, w, sigma);
    let n = m.len();
    (-1..=n as i64).all(|k| {
        let mut shifted = m.iter().map(|row| row.iter().map(|&x| -x).collect::<Vec<_>>()).collect::<Matrix>();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = row[i] + QuadScalar::from_int(k);
        }
        determinant(&shifted) == p.eval(k)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxcore::{CoxeterSystem, GenSet};

    #[test]
    fn swapped_b2_generators_give_surds() {
        let g = CoxeterGroup::parse("2B2").unwrap();
        let s = g.system().automorphism().clone();
        assert!(!preserves_root_lengths(g.system().matrix(), &s));
        let p = char_poly(&g, g.generator(0), &s).unwrap();
        assert_eq!(p.coeffs()[1], -QuadScalar::sqrt2());
        assert!(char_poly_oracle_agrees(&g, g.generator(0), &s, &p));
        for t in ["2A3", "3D4", "2E6", "B3", "G2"] {
            let g = CoxeterSystem::parse(t).unwrap();
            assert!(preserves_root_lengths(g.matrix(), g.automorphism()), "{t}");
        }
    }

    #[test]
    fn identity_gives_power_of_q_minus_one() {
        for t in ["A3", "B3", "G2", "D4"] {
            let g = CoxeterGroup::parse(t).unwrap();
            let id = GenMap::identity_on(GenSet::full(g.rank()), g.rank());
            let p = char_poly(&g, g.identity(), &id).unwrap();
            assert!(p.is_int(&IntPoly::binomial(1, -1).pow(g.rank() as u32)), "{t}");
        }
    }

    #[test]
    fn longest_element_of_b3_is_minus_one() {
        let g = CoxeterGroup::parse("B3").unwrap();
        let id = GenMap::identity_on(g.full_set(), 3);
        let w0 = g.longest_element(g.full_set());
        let p = char_poly(&g, w0, &id).unwrap();
        assert!(p.is_int(&IntPoly::binomial(1, 1).pow(3)));
        assert!(char_poly_oracle_agrees(&g, w0, &id, &p));
    }

    #[test]
    fn coxeter_element_of_g2() {
        // Eigenvalues are the primitive sixth roots of unity.
        let g = CoxeterGroup::parse("G2").unwrap();
        let id = GenMap::identity_on(g.full_set(), 2);
        let c = g.parse_element("1,2").unwrap();
        let p = char_poly(&g, c, &id).unwrap();
        assert!(p.is_int(&IntPoly::new(vec![1, -1, 1])));
        assert!(char_poly_oracle_agrees(&g, c, &id, &p));
    }
}
