//! The three-branch graph `T_{G1,G3}^{G2}`: a new center `c` adjacent to the
//! root of `G2`, joined to the roots of `G1` and `G3` by paths of length two.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use super::{strictly_above_roots, RootedGraph};
use crate::charpoly::charpoly;
use crate::error::TransferError;
use crate::graph::Graph;
use crate::poly::{rational_to_f64, Dyadic, IntPoly, Rational};
use crate::root::CertifiedRoot;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub graph: Graph,
    pub center: usize,
    /// Positions of the roots of `G1`, `G2`, `G3` in `graph`.
    pub roots: [Option<usize>; 3],
}

/// Builds `T_{G1,G3}^{G2}`. An absent side branch is omitted with its arm.
///
/// Vertices of `G1`, `G2`, `G3` keep their order and come first, followed by
/// the center and the arm midpoints.
pub fn t_compose(g1: Option<&RootedGraph>, g2: &RootedGraph, g3: Option<&RootedGraph>) -> Composition {
    let mut graph = Graph::empty(0);
    let place = |rg: &RootedGraph, graph: &mut Graph| {
        let offset = graph.order();
        *graph = graph.disjoint_union(rg.graph());
        offset + rg.root()
    };
    let r1 = g1.map(|g| place(g, &mut graph));
    let r2 = place(g2, &mut graph);
    let r3 = g3.map(|g| place(g, &mut graph));
    let (with_center, center) = graph.with_pendant_path(r2, 1);
    let mut graph = with_center;
    for root in [r1, r3].into_iter().flatten() {
        let (g, mid) = graph.with_pendant_path(center, 1);
        graph = g.add_edge(mid, root).expect("arm endpoints are distinct new vertices");
    }
    Composition { graph, center, roots: [r1, Some(r2), r3] }
}

/// Half-open interval `(lo, hi]` holding an algebraic number, with the exact
/// value when bisection hit it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBracket {
    pub lo: Rational,
    pub hi: Rational,
    pub exact: Option<Rational>,
}

impl RootBracket {
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x <= &self.hi
    }

    /// Whether this bracket and a certified root's interval overlap.
    pub fn intersects(&self, root: &CertifiedRoot) -> bool {
        self.lo < root.hi() && root.lo() < self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

impl fmt::Display for RootBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:.15}, {:.15}]", rational_to_f64(&self.lo), rational_to_f64(&self.hi))
    }
}

/// `ρ(T_{G1,G3}^{G2})` as the largest root of `α_(G2,v2) = 1/α_(G1,v1) + 1/α_(G3,v3)`.
///
/// Above the largest root `M` of `φ_{G2}`, `φ_{(G1,v1,1)}` and `φ_{(G3,v3,1)}`
/// the function `f = α2 - 1/α1 - 1/α3` has the sign of `φ_T` and exactly one
/// root (the second eigenvalue of `T` is at most `M` by interlacing at the
/// center), so bisection uses the sign of `f` above `M` and treats every point
/// at or below `M` as a lower bound.
pub fn t_compose_rho(
    g1: &RootedGraph,
    g2: &RootedGraph,
    g3: &RootedGraph,
    tol: &Rational,
) -> Result<RootBracket, TransferError> {
    let polys = |rg: &RootedGraph| (charpoly(rg.graph()), charpoly(rg.extended(1).graph()));
    let (f1, e1) = polys(g1);
    let (f2, e2) = polys(g2);
    let (f3, e3) = polys(g3);
    let order = g1.graph().order() + g2.graph().order() + g3.graph().order() + 3;

    let ratio = |num: &IntPoly, den: &IntPoly, x: &Rational| num.eval(x) / den.eval(x);
    let mut lo = Dyadic::from_int(0);
    let mut hi = Dyadic::from_int(order as i64);
    let mut exact = None;
    while hi.to_rational() - lo.to_rational() > *tol {
        let mid = lo.midpoint(&hi);
        let above = [&f2, &e1, &e3].into_iter().all(|p| strictly_above_roots(p, &mid));
        if !above {
            lo = mid;
            continue;
        }
        let x = mid.to_rational();
        let f = ratio(&e2, &f2, &x) - ratio(&f1, &e1, &x) - ratio(&f3, &e3, &x);
        match f.cmp(&Rational::zero()) {
            Ordering::Greater => hi = mid,
            Ordering::Equal => {
                exact = Some(x);
                hi = mid;
            }
            Ordering::Less => lo = mid,
        }
    }
    Ok(RootBracket { lo: lo.to_rational(), hi: hi.to_rational(), exact })
}
