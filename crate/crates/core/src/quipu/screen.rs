//! Closed-form screening predicates for open quipus of the form
//! `P_(m0,k1,...,k_r,m_r)^(m0,...,m_r)` with `r ≥ 2`, and the diameter window
//! that quipus below `3/√2` must satisfy.

use serde::{Deserialize, Serialize};

use super::{OpenQuipu, QuipuSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreenReport {
    /// `l_1 = k_1 + 2 - m_0 - m_1`, `l_r = k_r + 2 - m_{r-1} - m_r`,
    /// `l_i = k_i - m_{i-1} - m_i` otherwise; `None` when not applicable.
    pub l_values: Option<Vec<i64>>,
    /// All lower bounds on `k_i` required for `ρ < 3/√2` hold.
    pub necessary_ok: Option<bool>,
    /// All upper bounds on `k_i` hold, which forces `ρ > 3/√2`.
    pub sufficient_violation: Option<bool>,
    /// Diameter window; `None` below 13 vertices.
    pub spd_ok: Option<bool>,
}

fn delta1(x: i64) -> i64 {
    i64::from(x == 1)
}

fn ceil_half(x: i64) -> i64 {
    x.div_euclid(2) + x.rem_euclid(2)
}

/// Whether `spec` has the shape `k0 = m0`, `k_{r+1} = m_r` with `r ≥ 2`.
pub fn normalized_multi_branch(q: &OpenQuipu) -> bool {
    let r = q.r();
    r >= 2 && q.ks[0] == q.ms[0] && q.ks[r + 1] == q.ms[r]
}

pub fn screen(q: &OpenQuipu) -> ScreenReport {
    let g = q.realize();
    let n = g.order();
    let d = g.diameter().ok().and_then(|d| d.finite()).unwrap_or(0);
    let spd_ok = diameter_bound_ok(&QuipuSpec::Open(q.clone()), n, d);
    if !normalized_multi_branch(q) {
        return ScreenReport { l_values: None, necessary_ok: None, sufficient_violation: None, spd_ok };
    }
    let r = q.r();
    let k = |i: usize| q.ks[i] as i64;
    let m = |i: usize| q.ms[i] as i64;

    let mut l = Vec::with_capacity(r);
    l.push(k(1) + 2 - m(0) - m(1));
    for i in 2..r {
        l.push(k(i) - m(i - 1) - m(i));
    }
    l.push(k(r) + 2 - m(r - 1) - m(r));

    let necessary_end = |ki: i64, outer: i64, inner: i64| {
        ki >= outer + inner
            - ceil_half(3 * delta1(outer) + delta1(inner))
            - (delta1(outer - 1) + delta1(inner - 1)).div_euclid(2)
    };
    let necessary_mid = (2..r).all(|i| {
        k(i) >= m(i - 1) + m(i) + 1 - ceil_half(delta1(m(i - 1)) + delta1(m(i)))
    });
    let necessary_ok =
        necessary_mid && necessary_end(k(1), m(0), m(1)) && necessary_end(k(r), m(r), m(r - 1));

    let sufficient_end = |ki: i64, outer: i64, inner: i64| {
        ki <= outer + inner - ceil_half(3 * delta1(outer) + delta1(inner) + delta1(outer - 1))
    };
    let sufficient_mid = (2..r).all(|i| {
        k(i) <= m(i - 1) + m(i) + 2 - ceil_half(delta1(m(i - 1)) + delta1(m(i)))
    });
    let sufficient_violation =
        sufficient_mid && sufficient_end(k(1), m(0), m(1)) && sufficient_end(k(r), m(r), m(r - 1));

    ScreenReport {
        l_values: Some(l),
        necessary_ok: Some(necessary_ok),
        sufficient_violation: Some(sufficient_violation),
        spd_ok,
    }
}

/// Diameter window for quipus with `ρ < 3/√2` on `n ≥ 13` vertices:
/// open quipus need `3d ≥ 2n - 4`, closed ones `n < 3d ≤ 2n - 2`, daggers have
/// `d = n - 3`. `None` below 13 vertices.
pub fn diameter_bound_ok(spec: &QuipuSpec, n: usize, d: usize) -> Option<bool> {
    if n < 13 {
        return None;
    }
    let (n, d) = (n as i64, d as i64);
    Some(match spec {
        QuipuSpec::Open(_) => 3 * d >= 2 * n - 4,
        QuipuSpec::Closed(_) => n < 3 * d && 3 * d <= 2 * n - 2,
        QuipuSpec::Dagger(_) => d == n - 3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l_values_follow_definitions() {
        let q = OpenQuipu::of(&[2, 5, 4, 7, 3], &[2, 1, 2, 3]);
        let rep = screen(&q);
        assert_eq!(rep.l_values, Some(vec![5 + 2 - 2 - 1, 4 - 1 - 2, 7 + 2 - 2 - 3]));
    }

    #[test]
    fn single_internal_path_is_not_screened() {
        let rep = screen(&OpenQuipu::of(&[1, 5, 6], &[1, 6]));
        assert_eq!(rep.necessary_ok, None);
        assert_eq!(rep.sufficient_violation, None);
        assert_eq!(rep.spd_ok, Some(true));
    }

    #[test]
    fn end_bound_failure() {
        // k = 8: k_r = 6 < m_{r-1} + m_r = 7.
        let rep = screen(&OpenQuipu::of(&[1, 5, 6, 2], &[1, 5, 2]));
        assert_eq!(rep.necessary_ok, Some(false));
    }

    #[test]
    fn ceil_half_rounds_up() {
        assert_eq!(ceil_half(0), 0);
        assert_eq!(ceil_half(1), 1);
        assert_eq!(ceil_half(3), 2);
        assert_eq!(ceil_half(4), 2);
    }
}
