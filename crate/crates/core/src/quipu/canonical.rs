//! Canonical parameter tuples: every branch vertex has degree three, and the
//! tuple is the least one among its symmetric rewritings.

use super::{ClosedQuipu, OpenQuipu};

pub(super) fn canonical_open(q: &OpenQuipu) -> OpenQuipu {
    let n = q.order();
    let mut ks = q.ks.clone();
    let mut ms = q.ms.clone();

    // Branch vertices without a pendant are ordinary backbone vertices.
    let mut i = 0;
    while i < ms.len() {
        if ms[i] == 0 {
            let merged = ks[i] + 1 + ks[i + 1];
            ks.splice(i..=i + 1, [merged]);
            ms.remove(i);
        } else {
            i += 1;
        }
    }
    if ms.is_empty() {
        return OpenQuipu::path(n);
    }
    // An end branch with an empty end segment is a path vertex as well.
    if ks[0] == 0 {
        let merged = ms[0] + 1 + ks[1];
        ks.splice(0..=1, [merged]);
        ms.remove(0);
    }
    if ms.is_empty() {
        return OpenQuipu::path(n);
    }
    if ks[ks.len() - 1] == 0 {
        let last = ms.len() - 1;
        let merged = ks[last] + 1 + ms[last];
        ks.splice(last..=last + 1, [merged]);
        ms.pop();
    }
    if ms.is_empty() {
        return OpenQuipu::path(n);
    }

    if ms.len() == 1 {
        let mut legs = [ks[0], ks[1], ms[0]];
        legs.sort_unstable();
        return OpenQuipu::of(&legs[..2], &legs[2..]);
    }
    // The two legs at an end branch are interchangeable.
    if ks[0] > ms[0] {
        std::mem::swap(&mut ks[0], &mut ms[0]);
    }
    let (lk, lm) = (ks.len() - 1, ms.len() - 1);
    if ks[lk] > ms[lm] {
        std::mem::swap(&mut ks[lk], &mut ms[lm]);
    }
    let q = OpenQuipu { ks, ms };
    let rev = q.reversed();
    if (&rev.ks, &rev.ms) < (&q.ks, &q.ms) {
        rev
    } else {
        q
    }
}

pub(super) fn canonical_closed(q: &ClosedQuipu) -> ClosedQuipu {
    let c = q.cycle_length();
    if q.ms.iter().all(|&m| m == 0) {
        return ClosedQuipu::cycle(c);
    }
    // Drop pendant-free branches: k_{i-1}, b_i, k_i become one segment.
    let mut ks = q.ks.clone();
    let mut ms = q.ms.clone();
    let mut i = 0;
    while i < ms.len() {
        if ms[i] == 0 {
            let prev = (i + ms.len() - 1) % ms.len();
            ks[prev] += 1 + ks[i];
            ks.remove(i);
            ms.remove(i);
        } else {
            i += 1;
        }
    }
    let r = ms.len();
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for start in 0..r {
        // Forward from b_start.
        let fk: Vec<usize> = (0..r).map(|j| ks[(start + j) % r]).collect();
        let fm: Vec<usize> = (0..r).map(|j| ms[(start + j) % r]).collect();
        // Backward from b_start: pendants m_s, m_{s-1}, ...; segments k_{s-1}, k_{s-2}, ...
        let bm: Vec<usize> = (0..r).map(|j| ms[(start + r - j) % r]).collect();
        let bk: Vec<usize> = (0..r).map(|j| ks[(start + 2 * r - j - 1) % r]).collect();
        for cand in [(fk, fm), (bk, bm)] {
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    let (ks, ms) = best.expect("at least one branch");
    ClosedQuipu { ks, ms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;

    fn same_graph(a: &OpenQuipu, b: &OpenQuipu) -> bool {
        canonical_code(&a.realize()).unwrap() == canonical_code(&b.realize()).unwrap()
    }

    #[test]
    fn theorem_member_with_empty_end_is_a_spider() {
        let q = OpenQuipu::of(&[0, 1, 2], &[0, 2]);
        assert_eq!(q.canonicalize(), OpenQuipu::of(&[2, 2], &[2]));
        assert!(same_graph(&q, &q.canonicalize()));
    }

    #[test]
    fn reversal_and_end_swaps() {
        let q = OpenQuipu::of(&[3, 2, 1], &[1, 4]);
        let c = q.canonicalize();
        assert_eq!(c, OpenQuipu::of(&[1, 2, 1], &[3, 4]));
        assert_eq!(q.reversed().canonicalize(), c);
        assert!(same_graph(&q, &c));
    }

    #[test]
    fn interior_zero_pendant_merges() {
        let q = OpenQuipu::of(&[1, 2, 3, 1], &[1, 0, 1]);
        let c = q.canonicalize();
        assert_eq!(c, OpenQuipu::of(&[1, 6, 1], &[1, 1]));
        assert!(same_graph(&q, &c));
    }

    #[test]
    fn closed_rotations_and_reflections_agree() {
        let base = ClosedQuipu::of(&[1, 2, 3], &[4, 5, 6]);
        let rotated = ClosedQuipu::of(&[2, 3, 1], &[5, 6, 4]);
        // Reverse traversal from b1: pendants 4, 6, 5 and segments 3, 2, 1.
        let reflected = ClosedQuipu::of(&[3, 2, 1], &[4, 6, 5]);
        let c = base.canonicalize();
        assert_eq!(rotated.canonicalize(), c);
        assert_eq!(reflected.canonicalize(), c);
        let code = |q: &ClosedQuipu| canonical_code(&q.realize()).unwrap();
        assert_eq!(code(&base), code(&reflected));
        assert_eq!(code(&base), code(&c));
    }

    #[test]
    fn closed_zero_pendants() {
        assert_eq!(ClosedQuipu::of(&[1, 2], &[0, 0]).canonicalize(), ClosedQuipu::cycle(5));
        let q = ClosedQuipu::of(&[1, 2, 0], &[2, 0, 1]);
        let c = q.canonicalize();
        assert_eq!(c.r(), 2);
        assert_eq!(
            canonical_code(&q.realize()).unwrap(),
            canonical_code(&c.realize()).unwrap()
        );
    }
}
