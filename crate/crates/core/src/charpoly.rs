//! Characteristic polynomials `det(xI - A)` of adjacency matrices.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::PolyError;
use crate::graph::Graph;
use crate::poly::IntPoly;

/// Characteristic polynomial by whichever route applies: the deletion
/// recursion for forests and unicyclic components, the dense expansion otherwise.
pub fn charpoly(g: &Graph) -> IntPoly {
    charpoly_recursive(g).unwrap_or_else(|_| charpoly_dense(g))
}

/// Faddeev–LeVerrier on `A`, exact over the integers.
///
/// `M_k = A M_{k-1} + c_{n-k+1} I`, `c_{n-k} = -tr(A M_k) / k`; the division is exact.
pub fn charpoly_dense(g: &Graph) -> IntPoly {
    let n = g.order();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // m <- A m + c_{n-k+1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in next.iter_mut().enumerate() {
            for &l in g.neighbors(i) {
                for (cell, src) in row.iter_mut().zip(&m[l]) {
                    *cell += src;
                }
            }
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        // tr(A m) = sum_i sum_{l in N(i)} m[l][i]
        let trace: BigInt = (0..n).flat_map(|i| g.neighbors(i).iter().map(move |&l| (l, i))).map(|(l, i)| &m[l][i]).sum();
        coeffs[n - k] = -(trace / BigInt::from(k));
    }
    IntPoly::new(coeffs)
}

/// Schwenk-style recursion: pendant-vertex expansion on trees and the
/// cycle-edge expansion `φ_G = φ_{G-e} - φ_{G-u-v} - 2 φ_{G-V(C)}` on the
/// single cycle of a unicyclic component.
pub fn charpoly_recursive(g: &Graph) -> Result<IntPoly, PolyError> {
    let mut out = IntPoly::one();
    for comp in g.components() {
        let h = g.induced(&comp);
        let p = match h.size() + 1 {
            s if s == h.order() => tree_charpoly(&h),
            s if s == h.order() + 1 => unicyclic_charpoly(&h),
            _ => return Err(PolyError::TooManyCycles),
        };
        out = &out * &p;
    }
    Ok(out)
}

fn unicyclic_charpoly(g: &Graph) -> IntPoly {
    let cycle = g.find_cycle().expect("unicyclic component has a cycle");
    let (u, v) = (cycle[0], cycle[1]);
    let without_edge = forest_charpoly(&g.remove_edge(u, v));
    let without_ends = forest_charpoly(&g.remove_vertices(&[u, v]));
    let without_cycle = forest_charpoly(&g.remove_vertices(&cycle));
    &(&without_edge - &without_ends) - &without_cycle.scale(&BigInt::from(2))
}

pub(crate) fn forest_charpoly(g: &Graph) -> IntPoly {
    g.components()
        .into_iter()
        .map(|comp| tree_charpoly(&g.induced(&comp)))
        .fold(IntPoly::one(), |acc, p| &acc * &p)
}

/// Tree dynamic program: for each vertex `u`, `f(u) = φ(T_u)` and
/// `h(u) = φ(T_u - u) = Π f(child)`, with
/// `f(u) = x h(u) - Σ_c h(c) Π_{c' ≠ c} f(c')`.
fn tree_charpoly(g: &Graph) -> IntPoly {
    let n = g.order();
    if n == 0 {
        return IntPoly::one();
    }
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let x = IntPoly::x();
    let mut f: Vec<IntPoly> = vec![IntPoly::zero(); n];
    let mut h: Vec<IntPoly> = vec![IntPoly::zero(); n];
    for &u in order.iter().rev() {
        let kids: Vec<usize> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| w != u && parent[w] == u && w != 0)
            .collect();
        let k = kids.len();
        // prefix[i] = f(kids[0]) ... f(kids[i-1]); suffix likewise from the right.
        let mut prefix = vec![IntPoly::one(); k + 1];
        for i in 0..k {
            prefix[i + 1] = &prefix[i] * &f[kids[i]];
        }
        let mut suffix = vec![IntPoly::one(); k + 1];
        for i in (0..k).rev() {
            suffix[i] = &suffix[i + 1] * &f[kids[i]];
        }
        let mut correction = IntPoly::zero();
        for i in 0..k {
            let others = &prefix[i] * &suffix[i + 1];
            correction = &correction + &(&h[kids[i]] * &others);
        }
        let hu = prefix[k].clone();
        f[u] = &(&x * &hu) - &correction;
        h[u] = hu;
    }
    std::mem::take(&mut f[0])
}
