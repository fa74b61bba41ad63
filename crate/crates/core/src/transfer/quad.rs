//! Exact arithmetic in `Q(√D)` for a fixed rational `D > 0`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::{rational_to_f64, rational_to_string, Rational};

/// `a + b√D`. When `D` is the square of a rational the value is kept in `a`
/// alone, so the representation is always unique and division is exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadNum {
    a: Rational,
    b: Rational,
    d: Rational,
}

fn exact_sqrt(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let s = x.sqrt();
    (&s * &s == *x).then_some(s)
}

/// Rational square root of `d`, if it exists.
pub fn rational_sqrt(d: &Rational) -> Option<Rational> {
    Some(Rational::new(exact_sqrt(d.numer())?, exact_sqrt(d.denom())?))
}

impl QuadNum {
    pub fn new(a: Rational, b: Rational, d: Rational) -> Self {
        assert!(d.is_positive(), "radicand must be positive");
        match rational_sqrt(&d) {
            Some(s) if !b.is_zero() => QuadNum { a: a + b * s, b: Rational::zero(), d },
            _ => QuadNum { a, b, d },
        }
    }

    pub fn rational(a: Rational, d: &Rational) -> Self {
        QuadNum { a, b: Rational::zero(), d: d.clone() }
    }

    pub fn zero(d: &Rational) -> Self {
        QuadNum::rational(Rational::zero(), d)
    }

    pub fn one(d: &Rational) -> Self {
        QuadNum::rational(Rational::one(), d)
    }

    /// `√D` itself.
    pub fn sqrt_d(d: &Rational) -> Self {
        QuadNum::new(Rational::zero(), Rational::one(), d.clone())
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &Rational {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    /// `a - b√D`.
    pub fn conjugate(&self) -> Self {
        QuadNum { a: self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }

    /// `a² - b²D`, nonzero for every nonzero element.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * &self.d
    }

    pub fn checked_div(&self, other: &QuadNum) -> Option<QuadNum> {
        let n = other.norm();
        if n.is_zero() {
            return None;
        }
        let num = self * &other.conjugate();
        Some(QuadNum { a: num.a / &n, b: num.b / &n, d: self.d.clone() })
    }

    pub fn inverse(&self) -> Option<QuadNum> {
        QuadNum::one(&self.d).checked_div(self)
    }

    pub fn pow(&self, k: u32) -> QuadNum {
        let mut out = QuadNum::one(&self.d);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact sign of the real number `a + b√D`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        match (sa, sb) {
            (s, Ordering::Equal) | (Ordering::Equal, s) => s,
            (x, y) if x == y => x,
            // Opposite signs: compare a² with b²D.
            (sa, _) => {
                let lhs = &self.a * &self.a;
                let rhs = &self.b * &self.b * &self.d;
                match lhs.cmp(&rhs) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * rational_to_f64(&self.d).sqrt()
    }

    fn check(&self, other: &QuadNum) {
        debug_assert_eq!(self.d, other.d, "mixing different quadratic fields");
    }
}

impl PartialOrd for QuadNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadNum {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl Add for &QuadNum {
    type Output = QuadNum;
    fn add(self, o: &QuadNum) -> QuadNum {
        self.check(o);
        QuadNum { a: &self.a + &o.a, b: &self.b + &o.b, d: self.d.clone() }
    }
}

impl Sub for &QuadNum {
    type Output = QuadNum;
    fn sub(self, o: &QuadNum) -> QuadNum {
        self.check(o);
        QuadNum { a: &self.a - &o.a, b: &self.b - &o.b, d: self.d.clone() }
    }
}

impl Mul for &QuadNum {
    type Output = QuadNum;
    fn mul(self, o: &QuadNum) -> QuadNum {
        self.check(o);
        QuadNum {
            a: &self.a * &o.a + &self.b * &o.b * &self.d,
            b: &self.a * &o.b + &o.a * &self.b,
            d: self.d.clone(),
        }
    }
}

impl Mul<&Rational> for &QuadNum {
    type Output = QuadNum;
    fn mul(self, k: &Rational) -> QuadNum {
        QuadNum { a: &self.a * k, b: &self.b * k, d: self.d.clone() }
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum { a: -self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return f.write_str(&rational_to_string(&self.a));
        }
        write!(
            f,
            "{} + {}*sqrt({})",
            rational_to_string(&self.a),
            rational_to_string(&self.b),
            rational_to_string(&self.d)
        )
    }
}

impl fmt::Debug for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadNum({self})")
    }
}
