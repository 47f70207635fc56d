//! Exact arithmetic in the field Q(√2, √3).
//!
//! Every value is stored as `a + b√2 + c√3 + d√6` with rational coefficients.
//! This is enough for the geometric representation of any Coxeter system
//! whose bonds lie in {2, 3, 4, 6}.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

/// An element `a + b√2 + c√3 + d√6` of Q(√2, √3).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct QuadScalar {
    /// Coefficients of `1, √2, √3, √6`.
    pub c: [Rational64; 4],
}

fn r(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

/// Sign of `a + b√2`.
fn sign_sqrt2(a: Rational64, b: Rational64) -> Ordering {
    let sa = a.cmp(&Rational64::zero());
    let sb = b.cmp(&Rational64::zero());
    if sa == sb || sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal {
        return sb;
    }
    // Opposite signs: the larger square wins. a² = 2b² has no rational solution.
    if a * a > r(2) * b * b {
        sa
    } else {
        sb
    }
}

impl QuadScalar {
    pub const ZERO: QuadScalar = QuadScalar { c: [Rational64::new_raw(0, 1); 4] };

    pub fn new(a: Rational64, b: Rational64, c: Rational64, d: Rational64) -> Self {
        QuadScalar { c: [a, b, c, d] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(r(n))
    }

    pub fn from_rational(q: Rational64) -> Self {
        QuadScalar { c: [q, Rational64::zero(), Rational64::zero(), Rational64::zero()] }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt2() -> Self {
        QuadScalar::new(r(0), r(1), r(0), r(0))
    }

    pub fn sqrt3() -> Self {
        QuadScalar::new(r(0), r(0), r(1), r(0))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(|x| x.is_zero())
    }

    /// The rational part, if the value is rational.
    pub fn to_rational(&self) -> Option<Rational64> {
        self.is_rational().then_some(self.c[0])
    }

    pub fn scale(&self, q: Rational64) -> Self {
        QuadScalar { c: self.c.map(|x| x * q) }
    }

    /// Exact sign of the real number represented.
    pub fn signum(&self) -> Ordering {
        let [a, b, c, d] = self.c;
        // x + y√3 with x = a + b√2, y = c + d√2.
        let sx = sign_sqrt2(a, b);
        let sy = sign_sqrt2(c, d);
        if sx == sy || sy == Ordering::Equal {
            return sx;
        }
        if sx == Ordering::Equal {
            return sy;
        }
        // Compare x² with 3y², both in Q(√2).
        let x2 = (a * a + r(2) * b * b, r(2) * a * b);
        let y2 = (r(3) * (c * c + r(2) * d * d), r(6) * c * d);
        match sign_sqrt2(x2.0 - y2.0, x2.1 - y2.1) {
            Ordering::Greater => sx,
            _ => sy,
        }
    }

    /// Conjugate sending √3 to -√3.
    fn conj3(&self) -> Self {
        let [a, b, c, d] = self.c;
        QuadScalar::new(a, b, -c, -d)
    }

    /// Conjugate sending √2 to -√2.
    fn conj2(&self) -> Self {
        let [a, b, c, d] = self.c;
        QuadScalar::new(a, -b, c, -d)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // x * conj3(x) lies in Q(√2); multiplying by its √2-conjugate gives a rational.
        let p = *self * self.conj3();
        let pc = p.conj2();
        let n = p * pc;
        debug_assert!(n.is_rational());
        let inv = Rational64::one() / n.c[0];
        Some((self.conj3() * pc).scale(inv))
    }
}

impl Add for QuadScalar {
    type Output = QuadScalar;
    fn add(self, o: Self) -> Self {
        QuadScalar { c: [self.c[0] + o.c[0], self.c[1] + o.c[1], self.c[2] + o.c[2], self.c[3] + o.c[3]] }
    }
}

impl Sub for QuadScalar {
    type Output = QuadScalar;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> Self {
        QuadScalar { c: self.c.map(|x| -x) }
    }
}

impl Mul for QuadScalar {
    type Output = QuadScalar;
    fn mul(self, o: Self) -> Self {
        let [a, b, c, d] = self.c;
        let [e, f, g, h] = o.c;
        // Basis products: √2√2 = 2, √3√3 = 3, √6√6 = 6, √2√3 = √6, √2√6 = 2√3, √3√6 = 3√2.
        let one = a * e + r(2) * b * f + r(3) * c * g + r(6) * d * h;
        let s2 = a * f + b * e + r(3) * (c * h + d * g);
        let s3 = a * g + c * e + r(2) * (b * h + d * f);
        let s6 = a * h + d * e + b * g + c * f;
        QuadScalar::new(one, s2, s3, s6)
    }
}

impl Zero for QuadScalar {
    fn zero() -> Self {
        QuadScalar::ZERO
    }
    fn is_zero(&self) -> bool {
        QuadScalar::is_zero(self)
    }
}

impl One for QuadScalar {
    fn one() -> Self {
        QuadScalar::one()
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "√2", "√3", "√6"];
        let mut first = true;
        for (k, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if !first {
                write!(f, "{}", if x.is_negative() { " - " } else { " + " })?;
            } else if x.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let ax = x.abs();
            if k == 0 {
                write!(f, "{ax}")?;
            } else if ax.is_one() {
                write!(f, "{}", names[k])?;
            } else {
                write!(f, "{ax}{}", names[k])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
