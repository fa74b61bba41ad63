//! Recognition of quipus and daggers from an arbitrary graph.

use super::{ClosedQuipu, Dagger, OpenQuipu, QuipuSpec};
use crate::graph::Graph;

/// Canonical spec of `g`, or `None` when `g` is neither a quipu nor a dagger.
pub fn classify(g: &Graph) -> Option<QuipuSpec> {
    if g.order() == 0 || !g.is_connected() {
        return None;
    }
    if g.is_tree() {
        if g.max_degree() <= 3 {
            return open_quipu(g).map(QuipuSpec::Open);
        }
        return dagger(g).map(QuipuSpec::Dagger);
    }
    if g.is_unicyclic() {
        return closed_quipu(g).map(QuipuSpec::Closed);
    }
    None
}

/// Length of the pendant path entered from `from` through `first`.
fn arm_length(g: &Graph, from: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, first, 1);
    loop {
        let next: Vec<usize> = g.neighbors(cur).iter().copied().filter(|&w| w != prev).collect();
        match next.as_slice() {
            [] => return len,
            [w] => {
                prev = cur;
                cur = *w;
                len += 1;
            }
            _ => unreachable!("arm vertices have degree at most two"),
        }
    }
}

fn open_quipu(g: &Graph) -> Option<OpenQuipu> {
    let n = g.order();
    let branches: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 3).collect();
    if branches.is_empty() {
        return Some(OpenQuipu::path(n));
    }
    // Peel leaves that are not branch vertices; what remains spans the branches.
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1 && g.degree(v) != 3).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] <= 1 && g.degree(w) != 3 {
                    stack.push(w);
                }
            }
        }
    }
    let core: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    if core.iter().any(|&v| deg[v] > 2) {
        return None;
    }
    // Walk the core path from one end.
    let start = *core.iter().find(|&&v| deg[v] <= 1)?;
    let mut spine = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&w) = g.neighbors(cur).iter().find(|&&w| alive[w] && w != prev) {
        prev = cur;
        cur = w;
        spine.push(w);
    }
    let on_spine = |v: usize| alive[v];
    let off_arms = |b: usize| -> Vec<usize> {
        g.neighbors(b).iter().filter(|&&w| !on_spine(w)).map(|&w| arm_length(g, b, w)).collect()
    };
    let r = spine.iter().filter(|&&v| g.degree(v) == 3).count() - 1;
    if r == 0 {
        let arms = off_arms(spine[0]);
        return Some(OpenQuipu::of(&arms[..2], &arms[2..]).canonicalize());
    }
    let mut ks = Vec::with_capacity(r + 2);
    let mut ms = Vec::with_capacity(r + 1);
    let first = off_arms(spine[0]);
    ks.push(first[0]);
    ms.push(first[1]);
    let mut gap = 0;
    for &v in &spine[1..spine.len() - 1] {
        if g.degree(v) == 3 {
            ks.push(gap);
            ms.push(off_arms(v)[0]);
            gap = 0;
        } else {
            gap += 1;
        }
    }
    let last = off_arms(spine[spine.len() - 1]);
    ks.push(gap);
    ms.push(last[1]);
    ks.push(last[0]);
    Some(OpenQuipu::of(&ks, &ms).canonicalize())
}

fn dagger(g: &Graph) -> Option<Dagger> {
    let n = g.order();
    let centers: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 4).collect();
    let [c] = centers.as_slice() else {
        return None;
    };
    if g.degree(*c) != 4 || (0..n).any(|v| v != *c && g.degree(v) > 2) {
        return None;
    }
    let leaves = g.neighbors(*c).iter().filter(|&&w| g.degree(w) == 1).count();
    (leaves >= 3).then_some(Dagger { tail: n - 4 })
}

fn closed_quipu(g: &Graph) -> Option<ClosedQuipu> {
    if g.max_degree() > 3 {
        return None;
    }
    let cycle = g.find_cycle()?;
    let mut on_cycle = vec![false; g.order()];
    for &v in &cycle {
        on_cycle[v] = true;
    }
    if (0..g.order()).any(|v| !on_cycle[v] && g.degree(v) > 2) {
        return None;
    }
    let c = cycle.len();
    let pendant = |v: usize| -> usize {
        g.neighbors(v)
            .iter()
            .find(|&&w| !on_cycle[w])
            .map_or(0, |&w| arm_length(g, v, w))
    };
    let Some(first) = cycle.iter().position(|&v| g.degree(v) == 3) else {
        return Some(ClosedQuipu::cycle(c));
    };
    let mut ks = Vec::new();
    let mut ms = vec![pendant(cycle[first])];
    let mut gap = 0;
    for step in 1..c {
        let v = cycle[(first + step) % c];
        if g.degree(v) == 3 {
            ks.push(gap);
            ms.push(pendant(v));
            gap = 0;
        } else {
            gap += 1;
        }
    }
    ks.push(gap);
    Some(ClosedQuipu::of(&ks, &ms).canonicalize())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognizes_dagger_and_paths() {
        let d = Dagger { tail: 3 };
        assert_eq!(classify(&d.realize()), Some(QuipuSpec::Dagger(d)));
        assert_eq!(classify(&Graph::path(9)), Some(QuipuSpec::Open(OpenQuipu::path(9))));
        assert_eq!(classify(&Graph::star(3)), Some(QuipuSpec::Open(OpenQuipu::of(&[1, 1], &[1]))));
    }

    #[test]
    fn rejects_outside_family() {
        // Degree-4 vertex with only two leaves attached.
        let g = Graph::star(4).with_pendant_path(1, 1).0.with_pendant_path(2, 1).0;
        assert_eq!(classify(&g), None);
        assert_eq!(classify(&Graph::star(5)), None);
        assert_eq!(classify(&Graph::complete(4)), None);
        // Degree-3 vertices off any single path.
        let spiders = Graph::new(
            10,
            &[(0, 1), (1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7), (0, 8), (0, 9)],
        )
        .unwrap();
        assert_eq!(classify(&spiders), None);
    }

    #[test]
    fn round_trips_open_and_closed() {
        for q in [
            OpenQuipu::of(&[1, 1, 1], &[1, 1]),
            OpenQuipu::of(&[2, 0, 3, 1], &[2, 1, 4]),
            OpenQuipu::of(&[0, 1, 2], &[0, 2]),
        ] {
            let got = classify(&q.realize()).unwrap();
            assert_eq!(got, QuipuSpec::Open(q.canonicalize()));
        }
        for q in [ClosedQuipu::of(&[2, 2], &[1, 1]), ClosedQuipu::of(&[0, 3, 1], &[2, 1, 1])] {
            let got = classify(&q.realize()).unwrap();
            assert_eq!(got, QuipuSpec::Closed(q.canonicalize()));
        }
    }
}
