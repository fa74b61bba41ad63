//! Isomorphism-free enumeration of quipus and daggers with given order and
//! diameter.
//!
//! Parameter tuples are generated directly in canonical form (pendants and end
//! segments of length at least one, end legs ordered, least orientation), with
//! a running diameter lower bound to cut partial tuples early. Every emitted
//! spec has its diameter confirmed by breadth-first search.

use std::fmt;
use std::str::FromStr;

use super::{ClosedQuipu, Dagger, OpenQuipu, QuipuSpec};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Kinds {
    pub open: bool,
    pub closed: bool,
    pub dagger: bool,
}

impl Kinds {
    pub const ALL: Kinds = Kinds { open: true, closed: true, dagger: true };
    pub const OPEN: Kinds = Kinds { open: true, closed: false, dagger: false };
    pub const CLOSED: Kinds = Kinds { open: false, closed: true, dagger: false };
    pub const DAGGER: Kinds = Kinds { open: false, closed: false, dagger: true };
}

impl Default for Kinds {
    fn default() -> Self {
        Kinds::ALL
    }
}

impl FromStr for Kinds {
    type Err = String;

    /// Comma-separated subset of `open`, `closed`, `dagger`, or `all`.
    fn from_str(text: &str) -> Result<Self, String> {
        let mut kinds = Kinds { open: false, closed: false, dagger: false };
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "open" => kinds.open = true,
                "closed" => kinds.closed = true,
                "dagger" => kinds.dagger = true,
                "all" => kinds = Kinds::ALL,
                other => return Err(format!("unknown quipu kind {other:?}")),
            }
        }
        if kinds == (Kinds { open: false, closed: false, dagger: false }) {
            return Err("no quipu kind selected".into());
        }
        Ok(kinds)
    }
}

impl fmt::Display for Kinds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = [(self.open, "open"), (self.closed, "closed"), (self.dagger, "dagger")]
            .into_iter()
            .filter_map(|(on, name)| on.then_some(name))
            .collect();
        f.write_str(&names.join(","))
    }
}

/// Every spec of the selected kinds, up to isomorphism, whose realization has
/// `n` vertices and diameter `d`; sorted.
pub fn enumerate_quipus(n: usize, d: usize, kinds: Kinds) -> Vec<QuipuSpec> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    if kinds.open {
        open_specs(n, d, &mut |q| out.push(QuipuSpec::Open(q)));
    }
    if kinds.closed {
        closed_specs(n, d, &mut |q| out.push(QuipuSpec::Closed(q)));
    }
    if kinds.dagger && n >= 5 {
        let q = Dagger { tail: n - 4 };
        if bfs_diameter(&q.realize()) == Some(d) {
            out.push(QuipuSpec::Dagger(q));
        }
    }
    out.sort();
    out
}

fn bfs_diameter(g: &Graph) -> Option<usize> {
    if g.is_tree() {
        // Double sweep: the farthest vertex from anywhere is a diameter end.
        let first = g.distances(0).ok()?;
        let far = (0..g.order()).max_by_key(|&v| first[v])?;
        return g.eccentricity(far);
    }
    g.diameter().ok().and_then(|d| d.finite())
}

fn open_specs(n: usize, d: usize, emit: &mut dyn FnMut(OpenQuipu)) {
    let mut accept = |q: OpenQuipu| {
        if q.canonicalize() == q && bfs_diameter(&q.realize()) == Some(d) {
            emit(q);
        }
    };
    if d + 1 == n {
        accept(OpenQuipu::path(n));
    }
    // Spiders: legs x <= y <= z, the two longest legs span the diameter.
    if n >= 4 {
        for x in 1..n {
            for y in x..n {
                let Some(z) = (n - 1).checked_sub(x + y) else { break };
                if z >= y && y + z == d {
                    accept(OpenQuipu::of(&[x, y], &[z]));
                }
            }
        }
    }
    // Two or more branch vertices.
    let mut st = OpenSearch { n, d, ks: Vec::new(), ms: Vec::new(), emit: &mut accept };
    for k0 in 1..n {
        for m0 in k0..n {
            let used = k0 + m0 + 1;
            if used >= n || k0 + m0 > d {
                break;
            }
            st.ks.push(k0);
            st.ms.push(m0);
            st.after_branch(used, m0.max(k0), k0 + m0);
            st.ks.pop();
            st.ms.pop();
        }
    }
}

struct OpenSearch<'a> {
    n: usize,
    d: usize,
    ks: Vec<usize>,
    ms: Vec<usize>,
    emit: &'a mut dyn FnMut(OpenQuipu),
}

impl OpenSearch<'_> {
    /// `reach`: farthest distance from the last branch into the placed part;
    /// `diam`: diameter of the placed part.
    fn after_branch(&mut self, used: usize, reach: usize, diam: usize) {
        let left = self.n - used;
        if diam.max(reach + left) < self.d {
            return;
        }
        // Close with the right end segment.
        if self.ms.len() >= 2 {
            let last_m = *self.ms.last().expect("branch placed");
            if (1..=last_m).contains(&left) && diam.max(reach + left) == self.d {
                self.ks.push(left);
                let q = OpenQuipu { ks: self.ks.clone(), ms: self.ms.clone() };
                self.ks.pop();
                (self.emit)(q);
            }
        }
        // Another branch: segment k, branch vertex, pendant m >= 1, and at least
        // one vertex for the right end segment.
        for k in 0..left {
            let at = reach + k + 1;
            if at > self.d || used + k + 3 > self.n {
                break;
            }
            for m in 1..=(self.n - used - k - 2) {
                if at + m > self.d {
                    break;
                }
                self.ks.push(k);
                self.ms.push(m);
                self.after_branch(used + k + 1 + m, at.max(m), diam.max(at + m));
                self.ks.pop();
                self.ms.pop();
            }
        }
    }
}

fn closed_specs(n: usize, d: usize, emit: &mut dyn FnMut(ClosedQuipu)) {
    if n >= 3 && n / 2 == d {
        emit(ClosedQuipu::cycle(n));
    }
    for c in 3..n {
        let half = c / 2;
        if half >= d {
            break;
        }
        let mut st = ClosedSearch {
            c,
            pendants: n - c,
            max_m: d - half,
            d,
            ks: Vec::new(),
            ms: Vec::new(),
            at: Vec::new(),
            emit: &mut *emit,
        };
        st.extend(0, 0, half);
    }
}

struct ClosedSearch<'a> {
    c: usize,
    pendants: usize,
    max_m: usize,
    d: usize,
    ks: Vec<usize>,
    ms: Vec<usize>,
    /// Cycle position of each placed branch vertex.
    at: Vec<usize>,
    emit: &'a mut dyn FnMut(ClosedQuipu),
}

impl ClosedSearch<'_> {
    /// `cycle_used`: cycle vertices placed (branches plus segments);
    /// `pend_used`: pendant vertices placed; `diam`: diameter contributed by
    /// the placed pendants, which is exact once every branch is placed.
    fn extend(&mut self, cycle_used: usize, pend_used: usize, diam: usize) {
        if cycle_used == self.c {
            if pend_used == self.pendants && diam == self.d {
                let q = ClosedQuipu { ks: self.ks.clone(), ms: self.ms.clone() };
                if q.canonicalize() == q && bfs_diameter(&q.realize()) == Some(self.d) {
                    (self.emit)(q);
                }
            }
            return;
        }
        let pend_left = self.pendants - pend_used;
        if pend_left == 0 {
            return;
        }
        let half = self.c / 2;
        let longest = self.ms.iter().copied().max().unwrap_or(0);
        if diam.max(longest + pend_left + half) < self.d {
            return;
        }
        // The canonical rotation starts with the least segment.
        let k_min = self.ks.first().copied().unwrap_or(0);
        // Branch b_i sits at cycle position `cycle_used`; k_i follows it.
        let pos = cycle_used;
        let c = self.c;
        let cyc = move |a: usize, b: usize| {
            let gap = a.abs_diff(b);
            gap.min(c - gap)
        };
        // Longest pendant this branch may carry given the branches already placed.
        let room = self
            .at
            .iter()
            .zip(&self.ms)
            .map(|(&p, &m)| self.d.saturating_sub(m + cyc(p, pos)))
            .min()
            .unwrap_or(self.max_m)
            .min(self.max_m);
        for k in k_min..(self.c - cycle_used) {
            for m in 1..=pend_left.min(room) {
                self.ks.push(k);
                self.ms.push(m);
                let reach = self
                    .at
                    .iter()
                    .zip(&self.ms)
                    .map(|(&p, &mj)| m + mj + cyc(p, pos))
                    .max()
                    .unwrap_or(0)
                    .max(m + half);
                self.at.push(pos);
                self.extend(cycle_used + k + 1, pend_used + m, diam.max(reach));
                self.ks.pop();
                self.ms.pop();
                self.at.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;
    use crate::quipu::theorem_family;
    use std::collections::HashSet;

    #[test]
    fn path_is_the_only_open_quipu_of_full_diameter() {
        assert_eq!(enumerate_quipus(5, 4, Kinds::OPEN), vec![QuipuSpec::Open(OpenQuipu::path(5))]);
    }

    #[test]
    fn contains_theorem_family() {
        let specs = enumerate_quipus(7, 4, Kinds::OPEN);
        for q in theorem_family(2) {
            assert!(specs.contains(&QuipuSpec::Open(q.canonicalize())), "{q}");
        }
    }

    #[test]
    fn emitted_specs_are_distinct_graphs() {
        for n in 4..=12 {
            for d in 1..n {
                let specs = enumerate_quipus(n, d, Kinds::ALL);
                let codes: HashSet<_> =
                    specs.iter().map(|s| canonical_code(&s.realize()).unwrap()).collect();
                assert_eq!(codes.len(), specs.len(), "n={n} d={d}");
                for s in &specs {
                    let g = s.realize();
                    assert_eq!(g.order(), n);
                    assert_eq!(bfs_diameter(&g), Some(d));
                }
            }
        }
    }

    #[test]
    fn kinds_parse() {
        assert_eq!("open,dagger".parse::<Kinds>().unwrap(), Kinds { open: true, closed: false, dagger: true });
        assert_eq!("all".parse::<Kinds>().unwrap(), Kinds::ALL);
        assert!("ring".parse::<Kinds>().is_err());
        assert!("".parse::<Kinds>().is_err());
    }
}
