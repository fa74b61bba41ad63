//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::PolyError;

pub type Rational = BigRational;

/// Integer polynomial, coefficients lowest degree first, no trailing zeros.
/// The zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        IntPoly::from_i64(&[0, 1])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        IntPoly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs: c }
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with a positive leading coefficient.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact value at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let Some(d) = self.degree() else {
            return Rational::zero();
        };
        let (num, den) = (x.numer(), x.denom());
        // Homogeneous Horner: sum c_i num^i den^(d-i), then divide by den^d.
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        Rational::new(acc, num_traits::pow(den.clone(), d))
    }

    /// Sign of the value at `num / 2^exp`, computed without fractions.
    pub fn sign_at_dyadic(&self, x: &Dyadic) -> Ordering {
        let Some(d) = self.degree() else {
            return Ordering::Equal;
        };
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc = acc * &x.num + (c << (x.exp as usize * (d - i)));
        }
        sign_of(&acc)
    }

    pub fn sign_at(&self, x: &Rational) -> Ordering {
        sign_of(self.eval(x).numer())
    }

    /// Signs of the Taylor coefficients `p^(j)(x)/j!`, j = 0..=deg, at `num / 2^exp`.
    pub fn taylor_signs_at_dyadic(&self, x: &Dyadic) -> Vec<Ordering> {
        let Some(d) = self.degree() else {
            return Vec::new();
        };
        let mut s: Vec<BigInt> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c << (x.exp as usize * (d - i)))
            .collect();
        for i in 0..d {
            for j in (i..d).rev() {
                let t = &x.num * &s[j + 1];
                s[j] += t;
            }
        }
        s.iter().map(sign_of).collect()
    }

    /// Division with remainder by `b`, valid when `lc(b)` divides every step
    /// (always true for monic divisors and for exact divisors with primitive `b`).
    /// Returns `None` if some step is not an exact integer division.
    pub fn div_rem(&self, b: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let db = b.degree()?;
        let lb = b.leading().unwrap();
        let mut r = self.coeffs.clone();
        let Some(da) = self.degree() else {
            return Some((IntPoly::zero(), IntPoly::zero()));
        };
        if da < db {
            return Some((IntPoly::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = &r[k + db];
            if top.is_zero() {
                continue;
            }
            let (quot, rem) = top.div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[k + i] -= &quot * bc;
            }
            q[k] = quot;
        }
        Some((IntPoly::new(q), IntPoly::new(r)))
    }

    /// Quotient when `b` divides `self` over the integers.
    pub fn div_exact(&self, b: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.div_rem(b)?;
        r.is_zero().then_some(q)
    }

    /// `lc(b)^(deg a - deg b + 1) * a mod b`, computed fraction-free.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo remainder by zero polynomial");
        let lb = b.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = &r.scale(&lb) - &b.shift_up(dr - db).scale(&lr);
        }
        r
    }

    /// Primitive gcd with positive leading coefficient (primitive remainder sequence).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Square-free part: `self / gcd(self, self')`, made primitive.
    pub fn squarefree(&self) -> IntPoly {
        if self.degree().is_none_or(|d| d == 0) {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.primitive()
            .div_exact(&g)
            .expect("gcd divides the polynomial")
            .primitive()
    }

    pub fn pow(&self, k: usize) -> IntPoly {
        (0..k).fold(IntPoly::one(), |acc, _| &acc * self)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, PolyError> {
        items
            .iter()
            .map(|s| {
                s.as_ref()
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|e| PolyError::Parse(format!("{}: {e}", s.as_ref())))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(IntPoly::new)
    }
}

pub(crate) fn sign_of(x: &BigInt) -> Ordering {
    match x.sign() {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntPoly::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntPoly::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        IntPoly::from_strings(&items).map_err(serde::de::Error::custom)
    }
}

/// A dyadic rational `num / 2^exp`, the bisection grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    pub num: BigInt,
    pub exp: u32,
}

impl Dyadic {
    pub fn from_int(v: i64) -> Self {
        Dyadic { num: BigInt::from(v), exp: 0 }
    }

    pub fn midpoint(&self, other: &Dyadic) -> Dyadic {
        let e = self.exp.max(other.exp);
        let a = &self.num << (e - self.exp) as usize;
        let b = &other.num << (e - other.exp) as usize;
        Dyadic { num: a + b, exp: e + 1 }.normalized()
    }

    fn normalized(mut self) -> Dyadic {
        while self.exp > 0 && self.num.is_even() {
            self.num >>= 1;
            self.exp -= 1;
        }
        self
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.num.clone(), BigInt::one() << self.exp as usize)
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str) -> Result<Rational, PolyError> {
    let bad = || PolyError::Parse(format!("bad rational {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn rational_to_string(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn rational_to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_examples() {
        let p = IntPoly::from_i64(&[-1, 0, 1]);
        assert_eq!(p.eval(&rat(1, 1)), rat(0, 1));
        assert_eq!(p.eval(&rat(3, 2)), rat(5, 4));
        assert_eq!(IntPoly::zero().eval(&rat(7, 3)), rat(0, 1));
    }

    #[test]
    fn dyadic_sign_matches_rational_eval() {
        let p = IntPoly::from_i64(&[1, 0, -3, 0, 1]);
        for num in -20..20 {
            for exp in 0..4 {
                let x = Dyadic { num: BigInt::from(num), exp };
                assert_eq!(p.sign_at_dyadic(&x), p.sign_at(&x.to_rational()));
            }
        }
    }

    #[test]
    fn taylor_signs_of_square() {
        // (x - 1)^2 at x = 1: coefficients 0, 0, 1
        let p = IntPoly::from_i64(&[1, -2, 1]);
        let s = p.taylor_signs_at_dyadic(&Dyadic::from_int(1));
        assert_eq!(s, vec![Ordering::Equal, Ordering::Equal, Ordering::Greater]);
        // at x = 1/2: (y - 1/2)^2 -> 1/4, -1, 1
        let s = p.taylor_signs_at_dyadic(&Dyadic { num: BigInt::from(1), exp: 1 });
        assert_eq!(s, vec![Ordering::Greater, Ordering::Less, Ordering::Greater]);
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = IntPoly::from_i64(&[-1, 1]); // x - 1
        let b = IntPoly::from_i64(&[2, 1]); // x + 2
        let c = IntPoly::from_i64(&[0, 1]); // x
        let p = &(&(&a * &a) * &b) * &c;
        let q = &(&a * &b) * &b;
        assert_eq!(p.gcd(&q), &a * &b);
        assert_eq!(p.squarefree(), &(&a * &b) * &c);
        assert_eq!(IntPoly::from_i64(&[0, 0, 0, 1]).squarefree(), c);
    }

    #[test]
    fn div_exact_detects_remainder() {
        let p = IntPoly::from_i64(&[-1, 0, 1]);
        assert_eq!(p.div_exact(&IntPoly::from_i64(&[1, 1])), Some(IntPoly::from_i64(&[-1, 1])));
        assert_eq!(p.div_exact(&IntPoly::from_i64(&[2, 1])), None);
    }

    #[test]
    fn display_and_json() {
        let p = IntPoly::from_i64(&[1, 0, -3, 0, 1]);
        assert_eq!(p.to_string(), "x^4 - 3x^2 + 1");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["1","0","-3","0","1"]"#);
        let back: IntPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("21/10").unwrap(), rat(21, 10));
        assert_eq!(parse_rational("-4/6").unwrap(), rat(-2, 3));
        assert!(parse_rational("1/0").is_err());
        assert_eq!(rational_to_string(&rat(6, 3)), "2");
    }

    #[test]
    fn midpoint_normalizes() {
        let m = Dyadic::from_int(1).midpoint(&Dyadic::from_int(3));
        assert_eq!(m, Dyadic::from_int(2));
    }
}
