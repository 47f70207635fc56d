//! Exact linear algebra over `ℚ(v)`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::Laurent;

/// A polynomial in `v` over `ℚ`, ascending, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPoly(Vec<BigRational>);

impl QPoly {
    fn trimmed(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        QPoly(c)
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::trimmed(vec![c])
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    /// `v^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = BigRational::one();
        QPoly(c)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    fn scale(&self, c: &BigRational) -> QPoly {
        QPoly::trimmed(self.0.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().recip())
    }

    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let dl = d.lead().clone();
        let dd = d.degree();
        if r.len() <= dd {
            return (QPoly::default(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &dl;
            if !c.is_zero() {
                for (i, x) in d.0.iter().enumerate() {
                    r[k + i] = &r[k + i] - &c * x;
                }
            }
            q[k] = c;
        }
        (QPoly::trimmed(q), QPoly::trimmed(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Least common multiple of the coefficient denominators.
    fn denominator_lcm(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Greatest common divisor of the numerators of an integral polynomial.
    fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
    }

    /// Reads a Laurent polynomial as `v^{shift} · p(v)` with `p ∈ ℤ[v]`.
    pub fn from_laurent(l: &Laurent) -> (i32, QPoly) {
        let Some(lo) = l.min_exponent() else { return (0, QPoly::default()) };
        let hi = l.max_exponent().unwrap_or(lo);
        let mut c = vec![BigRational::zero(); (hi - lo) as usize + 1];
        for (k, x) in l.terms() {
            c[(k - lo) as usize] = BigRational::from_integer(x.clone());
        }
        (lo, QPoly::trimmed(c))
    }

    /// The Laurent polynomial `p(v)` when all coefficients are integers.
    pub fn to_laurent(&self) -> Option<Laurent> {
        if self.0.iter().any(|c| !c.is_integer()) {
            return None;
        }
        Some(Laurent::from_terms(self.0.iter().enumerate().map(|(k, c)| (k as i32, c.to_integer()))))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        let z = BigRational::zero();
        QPoly::trimmed((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        self + &-o
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly(self.0.iter().map(|x| -x).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::default();
        }
        let mut c = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.0.iter().enumerate() {
                c[i + j] = &c[i + j] + x * y;
            }
        }
        QPoly::trimmed(c)
    }
}

/// An element of `ℚ(v)` in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: QPoly::default(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: QPoly::one(), den: QPoly::one() }
    }

    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let l = den.lead().recip();
        RatFunc { num: num.scale(&l), den: den.scale(&l) }
    }

    pub fn from_laurent(l: &Laurent) -> Self {
        let (shift, p) = QPoly::from_laurent(l);
        if shift >= 0 {
            RatFunc::new(&p * &QPoly::monomial(shift as usize), QPoly::one())
        } else {
            RatFunc::new(p, QPoly::monomial((-shift) as usize))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    /// Size used to prefer simple pivots.
    pub fn weight(&self) -> usize {
        self.num.degree() + self.den.degree() + usize::from(self.num.0.len() > 1)
    }

    pub fn inverse(&self) -> RatFunc {
        RatFunc::new(self.den.clone(), self.num.clone())
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        RatFunc::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &-o
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(&self.num * &o.num, &self.den * &o.den)
    }
}

/// A sparse row `Σ a_c x_c`.
pub type SparseRow = BTreeMap<usize, RatFunc>;

/// Basis of `{x ∈ ℚ(v)^n : row · x = 0 for every row}`, one vector per free
/// column (ascending), scaled to primitive integer polynomials.
pub fn nullspace(rows: Vec<SparseRow>, n: usize) -> Vec<Vec<Laurent>> {
    let mut rows: Vec<SparseRow> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut pivots: Vec<(usize, SparseRow)> = Vec::new();
    while !rows.is_empty() {
        // Simplest entry first keeps intermediate fractions small.
        let (ri, col) = rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(&c, a)| (a.weight(), r.len(), c, i)))
            .min()
            .map(|(_, _, c, i)| (i, c))
            .expect("rows are nonempty");
        let mut p = rows.swap_remove(ri);
        let inv = p[&col].inverse();
        for a in p.values_mut() {
            *a = &*a * &inv;
        }
        let eliminate = |r: &mut SparseRow| {
            if let Some(f) = r.remove(&col) {
                for (&c, a) in &p {
                    if c == col {
                        continue;
                    }
                    let x = r.get(&c).map_or_else(|| -&(&f * a), |y| y - &(&f * a));
                    if x.is_zero() {
                        r.remove(&c);
                    } else {
                        r.insert(c, x);
                    }
                }
            }
        };
        for r in rows.iter_mut() {
            eliminate(r);
        }
        for (_, r) in pivots.iter_mut() {
            eliminate(r);
        }
        rows.retain(|r| !r.is_empty());
        pivots.push((col, p));
    }
    let pivot_cols: BTreeMap<usize, &SparseRow> = pivots.iter().map(|(c, r)| (*c, r)).collect();
    let mut basis = Vec::new();
    for f in (0..n).filter(|c| !pivot_cols.contains_key(c)) {
        let mut x = vec![RatFunc::zero(); n];
        x[f] = RatFunc::one();
        for (&c, r) in &pivot_cols {
            if let Some(a) = r.get(&f) {
                x[c] = -a;
            }
        }
        basis.push(primitive(&x));
    }
    basis
}

/// Scales a vector over `ℚ(v)` to coprime integer polynomials with a positive
/// leading entry.
fn primitive(x: &[RatFunc]) -> Vec<Laurent> {
    let den = x.iter().fold(QPoly::one(), |acc, a| {
        let g = acc.gcd(a.denom());
        (&acc * a.denom()).div_rem(&g).0
    });
    let polys: Vec<QPoly> = x.iter().map(|a| (a.numer() * &den).div_rem(a.denom()).0).collect();
    let g = polys.iter().fold(QPoly::default(), |acc, p| acc.gcd(p));
    let polys: Vec<QPoly> = polys.iter().map(|p| p.div_rem(&g).0).collect();
    let d = polys.iter().fold(BigInt::one(), |acc, p| acc.lcm(&p.denominator_lcm()));
    let polys: Vec<QPoly> = polys.iter().map(|p| p.scale(&BigRational::from_integer(d.clone()))).collect();
    let c = polys.iter().fold(BigInt::zero(), |acc, p| acc.gcd(&p.content()));
    let sign = polys.iter().find(|p| !p.is_zero()).is_some_and(|p| p.lead().is_negative());
    let c = if sign { -c } else { c };
    polys
        .iter()
        .map(|p| p.scale(&BigRational::from_integer(c.clone()).recip()).to_laurent().expect("integral after scaling"))
        .collect()
}
