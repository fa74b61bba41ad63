//! Rooted-graph transfer calculus at a rational point `λ > 2`.
//!
//! With `x1 < 1 < x2` the roots of `x² - λx + 1`, a rooted graph `(G, v)` has
//! the unique pair `(p, q)` with `φ_G = p + q` and `φ_{G-v} = x2·p + x1·q`.
//! Appending a pendant path of length `i` at the root multiplies `p` by `x1^i`
//! and `q` by `x2^i`, which drives every identity here.

mod compose;
mod edge;
mod quad;

use std::cmp::Ordering;

use num_traits::Zero;

use crate::charpoly::charpoly;
use crate::error::TransferError;
use crate::graph::Graph;
use crate::poly::{rat, Dyadic, IntPoly, Rational};

pub use compose::{t_compose, t_compose_rho, Composition, RootBracket};
pub use edge::{edge_transfer_compare, EdgeTransfer};
pub use quad::{rational_sqrt, QuadNum};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedGraph {
    graph: Graph,
    root: usize,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<Self, TransferError> {
        if graph.order() == 0 {
            return Err(TransferError::EmptyGraph);
        }
        if root >= graph.order() {
            return Err(TransferError::BadRoot(root));
        }
        Ok(RootedGraph { graph, root })
    }

    /// `P_n` rooted at an end vertex.
    pub fn path_end(n: usize) -> Self {
        RootedGraph::new(Graph::path(n), 0).expect("nonempty path")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// `(G, v, i)`: a pendant path of length `i` at the root, rooted at its far end.
    pub fn extended(&self, i: usize) -> RootedGraph {
        let (graph, root) = self.graph.with_pendant_path(self.root, i);
        RootedGraph { graph, root }
    }

    /// `φ_G` and `φ_{G-v}`.
    pub fn charpolys(&self) -> (IntPoly, IntPoly) {
        (charpoly(&self.graph), charpoly(&self.graph.remove_vertices(&[self.root])))
    }
}

/// The ambient point `λ` with `D = λ² - 4` and the two roots `x1 < x2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lambda {
    value: Rational,
    d: Rational,
    x1: QuadNum,
    x2: QuadNum,
}

impl Lambda {
    pub fn new(value: Rational) -> Result<Self, TransferError> {
        if value <= rat(2, 1) {
            return Err(TransferError::LambdaTooSmall);
        }
        let d = &value * &value - rat(4, 1);
        let half = rat(1, 2);
        let x1 = QuadNum::new(&value * &half, -half.clone(), d.clone());
        let x2 = QuadNum::new(&value * &half, half, d.clone());
        Ok(Lambda { value, d, x1, x2 })
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn radicand(&self) -> &Rational {
        &self.d
    }

    pub fn x1(&self) -> &QuadNum {
        &self.x1
    }

    pub fn x2(&self) -> &QuadNum {
        &self.x2
    }

    pub fn rational(&self, x: Rational) -> QuadNum {
        QuadNum::rational(x, &self.d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PQPair {
    pub p: QuadNum,
    pub q: QuadNum,
}

impl PQPair {
    /// `p + q`, the value of the characteristic polynomial.
    pub fn phi(&self) -> QuadNum {
        &self.p + &self.q
    }

    /// `x2·p + x1·q`, the value of the characteristic polynomial with the root removed.
    pub fn phi_minus_root(&self, lam: &Lambda) -> QuadNum {
        &(lam.x2() * &self.p) + &(lam.x1() * &self.q)
    }
}

/// Solves the defining linear system for `(p, q)` and re-checks it.
pub fn pq_decompose(rg: &RootedGraph, lam: &Lambda) -> Result<PQPair, TransferError> {
    let (phi, phi_v) = rg.charpolys();
    pq_from_values(&phi.eval(lam.value()), &phi_v.eval(lam.value()), lam)
}

/// `(p, q)` from `φ_G(λ)` and `φ_{G-v}(λ)`.
pub fn pq_from_values(phi: &Rational, phi_v: &Rational, lam: &Lambda) -> Result<PQPair, TransferError> {
    let phi_q = lam.rational(phi.clone());
    let phi_v_q = lam.rational(phi_v.clone());
    let gap = lam.x2() - lam.x1();
    let p = (&phi_v_q - &(lam.x1() * &phi_q)).checked_div(&gap).ok_or(TransferError::ZeroDenominator)?;
    let q = (&(lam.x2() * &phi_q) - &phi_v_q).checked_div(&gap).ok_or(TransferError::ZeroDenominator)?;
    let pair = PQPair { p, q };
    if pair.phi() != phi_q || pair.phi_minus_root(lam) != phi_v_q {
        return Err(TransferError::IdentityFailed);
    }
    Ok(pair)
}

/// `t = q / p`.
pub fn t_value(rg: &RootedGraph, lam: &Lambda) -> Result<QuadNum, TransferError> {
    let pq = pq_decompose(rg, lam)?;
    pq.q.checked_div(&pq.p).ok_or(TransferError::Pole)
}

/// `(p, q)` of `(G, v, i)` rooted at the far end of the new path.
pub fn pendant_extend(pq: &PQPair, i: usize, lam: &Lambda) -> PQPair {
    let i = u32::try_from(i).expect("path length fits in u32");
    PQPair { p: &lam.x1().pow(i) * &pq.p, q: &lam.x2().pow(i) * &pq.q }
}

/// `α_(G,v,i) = φ_(G,v,i+1)(λ) / φ_(G,v,i)(λ)`, computed directly and checked
/// against the closed form `(x1^{2i+1} + x2·t) / (x1^{2i} + t)`.
pub fn alpha(rg: &RootedGraph, i: usize, lam: &Lambda) -> Result<Rational, TransferError> {
    let lower = charpoly(rg.extended(i).graph()).eval(lam.value());
    let upper = charpoly(rg.extended(i + 1).graph()).eval(lam.value());
    if lower.is_zero() {
        return Err(TransferError::ZeroDenominator);
    }
    let direct = upper / lower;
    let closed = alpha_closed_form(&pq_decompose(rg, lam)?, i, lam)?;
    match closed.as_rational() {
        Some(x) if *x == direct => Ok(direct),
        _ => Err(TransferError::IdentityFailed),
    }
}

/// The closed form of `α_(G,v,i)` in terms of `t`; falls back to the `(p, q)`
/// ratio when `p` vanishes.
pub fn alpha_closed_form(pq: &PQPair, i: usize, lam: &Lambda) -> Result<QuadNum, TransferError> {
    let e = u32::try_from(i).expect("path length fits in u32");
    if let Some(t) = pq.q.checked_div(&pq.p) {
        let num = &lam.x1().pow(2 * e + 1) + &(lam.x2() * &t);
        let den = &lam.x1().pow(2 * e) + &t;
        return num.checked_div(&den).ok_or(TransferError::ZeroDenominator);
    }
    let num = &(&lam.x1().pow(e + 1) * &pq.p) + &(&lam.x2().pow(e + 1) * &pq.q);
    let den = &(&lam.x1().pow(e) * &pq.p) + &(&lam.x2().pow(e) * &pq.q);
    num.checked_div(&den).ok_or(TransferError::ZeroDenominator)
}

/// The displayed closed form for the odd path `P_{2k+1}` rooted at its center:
/// `(x2^{k+1} - x1^{k+1}) / (x2 - x1)^3 · (x2^{k-1} - 2x1^{k+1} + x1^{k+3}, x1^{k-1} - 2x2^{k+1} + x2^{k+3})`.
pub fn odd_path_center_pq(k: usize, lam: &Lambda) -> PQPair {
    let k = u32::try_from(k).expect("k fits in u32");
    let (x1, x2) = (lam.x1(), lam.x2());
    // x^{k-1} for k = 0 is x^{-1}, the other root.
    let pow_m1 = |x: &QuadNum, other: &QuadNum| if k == 0 { other.clone() } else { x.pow(k - 1) };
    let two = rat(2, 1);
    let scale = (&x2.pow(k + 1) - &x1.pow(k + 1))
        .checked_div(&(x2 - x1).pow(3))
        .expect("x2 != x1 for λ > 2");
    let p = &(&pow_m1(x2, x1) - &(&x1.pow(k + 1) * &two)) + &x1.pow(k + 3);
    let q = &(&pow_m1(x1, x2) - &(&x2.pow(k + 1) * &two)) + &x2.pow(k + 3);
    PQPair { p: &scale * &p, q: &scale * &q }
}

/// The displayed closed forms of `t` for the two rooted graphs in the
/// t-inequality: the spider with legs 1, 1, 3 rooted next to the end of its long
/// leg, and the spider with legs 2, 2, 1 rooted at the end of its short leg.
pub fn t_closed_forms(lam: &Lambda) -> (QuadNum, QuadNum) {
    let (x1, x2) = (lam.x1(), lam.x2());
    let l = lam.rational(lam.value().clone());
    let a = &x2.pow(3) - &l;
    let b = &l - &x1.pow(3);
    let t1 = (&(&a * &x2.pow(3)) - &x1.pow(2))
        .checked_div(&(&(&b * &x1.pow(3)) + &x2.pow(2)))
        .expect("positive denominator");
    let t2 = (&a * &x2.pow(2)).checked_div(&(&b * &x1.pow(2))).expect("positive denominator");
    (t1, t2)
}

/// Rooted spiders for the t-inequality: `(P_(1,3)^(1), u)` and `(P_(2,1)^(2), v)`.
pub fn t_inequality_pair() -> (RootedGraph, RootedGraph) {
    // Branch 0; legs 1 and 1 at vertices 1, 2; long leg 3-4-5 with u = 4.
    let g1 = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]).expect("valid edges");
    // Branch 0; legs 1-2 and 3-4; short leg 5 = v.
    let g2 = Graph::new(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]).expect("valid edges");
    (
        RootedGraph::new(g1, 4).expect("root in range"),
        RootedGraph::new(g2, 5).expect("root in range"),
    )
}

/// Whether `x` strictly exceeds every root of `p` (all Taylor coefficients at
/// `x` nonnegative and `p(x) ≠ 0`; exact for real-rooted `p`).
pub(crate) fn strictly_above_roots(p: &IntPoly, x: &Dyadic) -> bool {
    let signs = p.taylor_signs_at_dyadic(x);
    signs.first() == Some(&Ordering::Greater) && signs.iter().all(|&s| s != Ordering::Less)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(n: i64, d: i64) -> Lambda {
        Lambda::new(rat(n, d)).unwrap()
    }

    #[test]
    fn root_pair_identities() {
        for l in [lam(21, 10), lam(5, 2), lam(3, 1)] {
            assert_eq!(l.x1() * l.x2(), l.rational(rat(1, 1)));
            assert_eq!(l.x1() + l.x2(), l.rational(l.value().clone()));
            assert!(l.x1() < l.x2());
        }
        assert_eq!(Lambda::new(rat(2, 1)).unwrap_err(), TransferError::LambdaTooSmall);
    }

    #[test]
    fn single_vertex_system() {
        let l = lam(3, 1);
        let pq = pq_decompose(&RootedGraph::path_end(1), &l).unwrap();
        assert_eq!(pq.phi(), l.rational(rat(3, 1)));
        assert_eq!(pq.phi_minus_root(&l), l.rational(rat(1, 1)));
        let t = t_value(&RootedGraph::path_end(1), &l).unwrap();
        assert_eq!(&t * &pq.p, pq.q);
    }

    #[test]
    fn star_center_values() {
        // φ = λ⁴ - 3λ² = 54 at λ = 3; φ without the center = λ³ = 27.
        let l = lam(3, 1);
        let rg = RootedGraph::new(Graph::star(3), 0).unwrap();
        let pq = pq_decompose(&rg, &l).unwrap();
        assert_eq!(pq.phi(), l.rational(rat(54, 1)));
        assert_eq!(pq.phi_minus_root(&l), l.rational(rat(27, 1)));
    }

    #[test]
    fn alpha_on_paths() {
        let l = lam(3, 1);
        let p1 = RootedGraph::path_end(1);
        assert_eq!(alpha(&p1, 0, &l).unwrap(), rat(8, 3));
        assert_eq!(alpha(&p1, 1, &l).unwrap(), rat(21, 8));
    }

    #[test]
    fn pendant_extension_matches_charpoly() {
        let l = lam(5, 2);
        let pq = pq_decompose(&RootedGraph::path_end(1), &l).unwrap();
        assert_eq!(pendant_extend(&pq, 0, &l), pq);
        let ext = pendant_extend(&pq, 2, &l);
        let want = charpoly(&Graph::path(3)).eval(l.value());
        assert_eq!(ext.phi(), l.rational(want));
    }

    #[test]
    fn odd_path_closed_form() {
        for l in [lam(5, 2), lam(21, 10), lam(3, 1)] {
            for k in 0..=6 {
                let rg = RootedGraph::new(Graph::path(2 * k + 1), k).unwrap();
                assert_eq!(pq_decompose(&rg, &l).unwrap(), odd_path_center_pq(k, &l), "k={k}");
            }
        }
    }

    #[test]
    fn t_inequality_and_closed_forms() {
        let (a, b) = t_inequality_pair();
        for l in [lam(21, 10), lam(5, 2), lam(3, 1)] {
            let ta = t_value(&a, &l).unwrap();
            let tb = t_value(&b, &l).unwrap();
            assert!(ta < tb);
            let (ca, cb) = t_closed_forms(&l);
            assert_eq!(ta, ca);
            assert_eq!(tb, cb);
        }
    }

    #[test]
    fn above_roots_predicate() {
        let p = charpoly(&Graph::path(2));
        let at = |num: i64, exp: u32| Dyadic { num: num.into(), exp };
        assert!(strictly_above_roots(&p, &at(3, 1)));
        assert!(!strictly_above_roots(&p, &at(1, 0)));
        assert!(!strictly_above_roots(&p, &at(1, 1)));
    }
}
