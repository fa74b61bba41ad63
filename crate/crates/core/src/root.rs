//! Certified isolation of the largest real root of an integer polynomial.
//!
//! Work happens on the square-free part `s` with positive leading coefficient.
//! Two exact tests drive the bisection at a dyadic point `x`:
//!
//! * `x` bounds every real root from above when all Taylor coefficients of `s`
//!   at `x` are nonnegative (then `s(x + y) > 0` for `y > 0`); for real-rooted
//!   polynomials, which includes every characteristic polynomial of a graph,
//!   the converse holds as well, so the test is monotone in `x`.
//! * `x` is a valid lower end once `s(x) < 0` and all Taylor coefficients of
//!   order at least one are nonnegative, i.e. `s` is strictly increasing on
//!   `[x, ∞)` and has exactly one root there.
//!
//! After the lower end is certified, plain sign bisection finishes the job.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::charpoly::charpoly;
use crate::error::PolyError;
use crate::graph::Graph;
use crate::poly::{rat, rational_to_f64, rational_to_string, Dyadic, IntPoly, Rational};

/// Report tolerance for certified intervals.
pub fn default_tolerance() -> Rational {
    Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), 12))
}

/// Width both intervals reach before an equality certificate is attempted.
pub fn comparison_width() -> Rational {
    rat(1, 10_000)
}

const MAX_STEPS: usize = 20_000;

/// Isolating interval `(lo, hi]` for the largest real root of `poly`.
#[derive(Clone)]
pub struct CertifiedRoot {
    poly: IntPoly,
    squarefree: IntPoly,
    lo: Dyadic,
    hi: Dyadic,
    exact: Option<Dyadic>,
    poly_sign_at_lo: Ordering,
}

impl CertifiedRoot {
    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn squarefree(&self) -> &IntPoly {
        &self.squarefree
    }

    pub fn lo(&self) -> Rational {
        self.lo.to_rational()
    }

    pub fn hi(&self) -> Rational {
        self.hi.to_rational()
    }

    pub(crate) fn lo_dyadic(&self) -> &Dyadic {
        &self.lo
    }

    pub fn width(&self) -> Rational {
        self.hi() - self.lo()
    }

    /// Sign of the input polynomial at `lo`.
    pub fn poly_sign_at_lo(&self) -> Ordering {
        self.poly_sign_at_lo
    }

    /// The root itself when bisection landed on it exactly.
    pub fn exact(&self) -> Option<Rational> {
        self.exact.as_ref().map(Dyadic::to_rational)
    }

    pub fn midpoint_f64(&self) -> f64 {
        rational_to_f64(&((self.lo() + self.hi()) / rat(2, 1)))
    }

    /// Whether `x` lies in `(lo, hi]`.
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo() < x && x <= &self.hi()
    }

    /// Whether the root is exactly the rational `x` (requires `s(x) = 0` inside the interval).
    pub fn is_exactly(&self, x: &Rational) -> bool {
        self.contains(x) && self.squarefree.sign_at(x) == Ordering::Equal
    }

    /// Re-runs every certificate from scratch.
    pub fn verify(&self) -> bool {
        let hi_taylor = self.squarefree.taylor_signs_at_dyadic(&self.hi);
        let lo_taylor = self.squarefree.taylor_signs_at_dyadic(&self.lo);
        let hi_ok = hi_taylor.iter().all(|&s| s != Ordering::Less);
        let lo_ok = lo_taylor.first() == Some(&Ordering::Less)
            && lo_taylor[1..].iter().all(|&s| s != Ordering::Less);
        hi_ok && lo_ok && self.lo() < self.hi()
    }

    /// Shrinks the interval until its width is at most `tol`.
    pub fn refine(&mut self, tol: &Rational) {
        let mut steps = 0;
        while &self.width() > tol && steps < MAX_STEPS {
            self.bisect_once();
            steps += 1;
        }
        self.poly_sign_at_lo = self.poly.sign_at_dyadic(&self.lo);
    }

    fn bisect_once(&mut self) {
        let mid = self.lo.midpoint(&self.hi);
        match self.squarefree.sign_at_dyadic(&mid) {
            Ordering::Greater => self.hi = mid,
            Ordering::Equal => {
                self.exact = Some(mid.clone());
                self.hi = mid;
            }
            Ordering::Less => self.lo = mid,
        }
    }

    pub fn summary(&self) -> RootSummary {
        RootSummary {
            lo: rational_to_string(&self.lo()),
            hi: rational_to_string(&self.hi()),
            approx: self.midpoint_f64(),
            exact: self.exact().map(|x| rational_to_string(&x)),
            poly: self.poly.clone(),
        }
    }
}

impl fmt::Debug for CertifiedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CertifiedRoot({self})")
    }
}

impl fmt::Display for CertifiedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(x) => write!(f, "{} (exact)", rational_to_string(&x)),
            None => write!(
                f,
                "({:.15}, {:.15}]",
                rational_to_f64(&self.lo()),
                rational_to_f64(&self.hi())
            ),
        }
    }
}

/// Serializable view of a certified root.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootSummary {
    pub lo: String,
    pub hi: String,
    pub approx: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact: Option<String>,
    pub poly: IntPoly,
}

fn all_nonnegative(signs: &[Ordering]) -> bool {
    signs.iter().all(|&s| s != Ordering::Less)
}

/// Isolates the largest real root of `p` to width at most `tol`.
///
/// The initial bracket is `(-1, deg p]`, which contains the spectral radius of
/// every graph; other inputs widen it as needed.
pub fn rho_certified(p: &IntPoly, tol: &Rational) -> Result<CertifiedRoot, PolyError> {
    let Some(deg) = p.degree() else {
        return Err(PolyError::ZeroPolynomial);
    };
    if deg == 0 {
        return Err(PolyError::NoRealRoot);
    }
    let s = p.squarefree();

    let mut hi = Dyadic::from_int(deg as i64);
    let mut grow = 0;
    while !all_nonnegative(&s.taylor_signs_at_dyadic(&hi)) {
        hi = Dyadic { num: &hi.num * 2, exp: hi.exp };
        grow += 1;
        if grow > 64 {
            return Err(PolyError::NotRealRooted);
        }
    }
    let mut lo = Dyadic::from_int(-1);
    let mut grow = 0;
    while all_nonnegative(&s.taylor_signs_at_dyadic(&lo)) {
        lo = Dyadic { num: &lo.num * 2, exp: lo.exp };
        grow += 1;
        if grow > 64 {
            return Err(PolyError::NoRealRoot);
        }
    }

    let lo_certified = |signs: &[Ordering]| {
        signs.first() == Some(&Ordering::Less) && all_nonnegative(&signs[1..])
    };
    let mut lo_cert = lo_certified(&s.taylor_signs_at_dyadic(&lo));
    let mut exact = None;
    let mut steps = 0;
    while !lo_cert {
        let mid = lo.midpoint(&hi);
        let signs = s.taylor_signs_at_dyadic(&mid);
        if all_nonnegative(&signs) {
            if signs[0] == Ordering::Equal {
                exact = Some(mid.clone());
            }
            hi = mid;
        } else {
            lo_cert = lo_certified(&signs);
            lo = mid;
        }
        steps += 1;
        if steps > MAX_STEPS {
            return Err(PolyError::NotRealRooted);
        }
    }
    let mut root = CertifiedRoot {
        poly: p.clone(),
        squarefree: s,
        poly_sign_at_lo: Ordering::Equal,
        lo,
        hi,
        exact,
    };
    root.refine(tol);
    Ok(root)
}

/// Evidence that two largest roots coincide: a common factor with a root in
/// both isolating intervals.
#[derive(Clone, Debug)]
pub struct EqualityWitness {
    pub factor: IntPoly,
    pub lo: Rational,
    pub hi: Rational,
}

/// Certifies `ρ(a) = ρ(b)` via `gcd(a.poly, b.poly)`.
///
/// With `x = max(lo_a, lo_b)`, the square-free part of the gcd has at most one
/// root in `[x, ∞)` (it divides both square-free parts, each strictly increasing
/// there), so a negative value at `x` proves a common root above both lower ends,
/// which can only be the largest root of each.
pub fn equality_witness(a: &CertifiedRoot, b: &CertifiedRoot) -> Option<EqualityWitness> {
    let g = a.poly.gcd(&b.poly);
    if g.degree().is_none_or(|d| d == 0) {
        return None;
    }
    let sg = g.squarefree();
    let x = if a.lo() >= b.lo() { a.lo_dyadic() } else { b.lo_dyadic() };
    (sg.sign_at_dyadic(x) == Ordering::Less).then(|| EqualityWitness {
        lo: x.to_rational(),
        hi: a.hi().min(b.hi()),
        factor: sg,
    })
}

/// Exact ordering of two largest roots. Never decides on a tolerance.
pub fn compare_roots(a: &mut CertifiedRoot, b: &mut CertifiedRoot) -> Ordering {
    let mut tol = comparison_width();
    a.refine(&tol);
    b.refine(&tol);
    if let Some(ord) = disjoint_order(a, b) {
        return ord;
    }
    if equality_witness(a, b).is_some() {
        return Ordering::Equal;
    }
    loop {
        tol /= rat(16, 1);
        a.refine(&tol);
        b.refine(&tol);
        if let Some(ord) = disjoint_order(a, b) {
            return ord;
        }
    }
}

fn disjoint_order(a: &CertifiedRoot, b: &CertifiedRoot) -> Option<Ordering> {
    if a.hi() <= b.lo() {
        Some(Ordering::Less)
    } else if b.hi() <= a.lo() {
        Some(Ordering::Greater)
    } else {
        None
    }
}

/// Orders a root against `√(num/den)`, with `num, den > 0`.
///
/// Equality is certified by a common factor with `den x² - num` that changes
/// sign above `lo`.
pub fn compare_to_sqrt(root: &mut CertifiedRoot, num: i64, den: i64) -> Ordering {
    let target = rat(num, den);
    let common = root.squarefree.gcd(&IntPoly::from_i64(&[-num, 0, den]));
    let shares_root = common.degree().is_some_and(|d| d >= 1);
    let mut tol = comparison_width();
    loop {
        root.refine(&tol);
        let (lo, hi) = (root.lo(), root.hi());
        if hi.is_negative() || &hi * &hi < target {
            return Ordering::Less;
        }
        if !lo.is_negative() {
            if &lo * &lo >= target {
                return Ordering::Greater;
            }
            if shares_root && common.sign_at(&lo) == Ordering::Less {
                return Ordering::Equal;
            }
        }
        tol /= rat(16, 1);
    }
}

/// `ρ` against `3/√2`, i.e. `2ρ² ` against `9`.
pub fn compare_to_three_over_root_two(root: &mut CertifiedRoot) -> Ordering {
    compare_to_sqrt(root, 9, 2)
}

/// Certified spectral radius of a graph.
pub fn rho(g: &Graph, tol: &Rational) -> CertifiedRoot {
    rho_certified(&charpoly(g), tol).expect("adjacency characteristic polynomials are real-rooted")
}

/// Exact ordering of `ρ(a)` against `ρ(b)`.
pub fn compare_rho(a: &Graph, b: &Graph) -> Ordering {
    let tol = comparison_width();
    compare_roots(&mut rho(a, &tol), &mut rho(b, &tol))
}

/// Common-factor certificate that `ρ(a) = ρ(b)`, if one exists.
pub fn equal_rho_certificate(a: &Graph, b: &Graph) -> Option<EqualityWitness> {
    let tol = comparison_width();
    let (ra, rb) = (rho(a, &tol), rho(b, &tol));
    if disjoint_order(&ra, &rb).is_some() {
        return None;
    }
    equality_witness(&ra, &rb)
}
