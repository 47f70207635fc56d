//! Laurent polynomials `ℤ[v, v⁻¹]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial in `v` with integer coefficients; zero is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Laurent(BTreeMap<i32, BigInt>);

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::monomial(1, 0)
    }

    pub fn monomial(c: i64, k: i32) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(k, BigInt::from(c));
        }
        Laurent(m)
    }

    /// `v^k − v^{−k}`.
    pub fn v_minus_inverse(k: i32) -> Self {
        &Laurent::monomial(1, k) - &Laurent::monomial(1, -k)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.0.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.0.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.0.keys().next_back().copied()
    }

    /// Value at `v = 1`.
    pub fn at_one(&self) -> BigInt {
        self.0.values().sum()
    }

    /// Value at an integer `v ≠ 0`, as a fraction `num / v^k`.
    pub fn eval(&self, v: i64) -> num_rational::BigRational {
        let v = num_rational::BigRational::from_integer(BigInt::from(v));
        self.0.iter().fold(num_rational::BigRational::zero(), |acc, (&k, c)| {
            acc + num_rational::BigRational::from_integer(c.clone()) * v.pow(k)
        })
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Laurent(self.0.iter().map(|(&e, c)| (e + k, c.clone())).collect())
    }

    fn add_term(&mut self, k: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(k).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&k);
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, BigInt)>) -> Self {
        let mut out = Laurent::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, o: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&k, c) in &o.0 {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, o: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&k, c) in &o.0 {
            out.add_term(k, -c);
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent(self.0.iter().map(|(&k, c)| (k, -c)).collect())
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, o: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&a, x) in &self.0 {
            for (&b, y) in &o.0 {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(self, o: Laurent) -> Laurent {
        &self + &o
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, o: Laurent) -> Laurent {
        &self - &o
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, o: Laurent) -> Laurent {
        &self * &o
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (&k, c)) in self.0.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = a.is_one();
            match k {
                0 => write!(f, "{a}")?,
                1 if unit => write!(f, "v")?,
                1 => write!(f, "{a}v")?,
                _ if unit => write!(f, "v^{k}")?,
                _ => write!(f, "{a}v^{k}")?,
            }
        }
        Ok(())
    }
}
