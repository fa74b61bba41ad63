//! Named parameter families.

use super::{ClosedQuipu, OpenQuipu};

/// `P_(i, i+j-1, j)^(i, j)` for `0 ≤ i ≤ j`, `i + j = k`, ordered by `i`.
pub fn theorem_family(k: usize) -> Vec<OpenQuipu> {
    assert!(k >= 1, "family is defined for k >= 1");
    (0..=k / 2)
        .map(|i| {
            let j = k - i;
            OpenQuipu::of(&[i, i + j - 1, j], &[i, j])
        })
        .collect()
}

/// The spider `P_(k,k)^(k)` with three legs of length `k`; its spectral
/// radius is the reference value `ρ_k`.
pub fn spider(k: usize) -> OpenQuipu {
    OpenQuipu::of(&[k, k], &[k])
}

/// `C_(i+j+1, i+j+1)^(i-1, j-1)` for `i, j ≥ 1`.
pub fn closed_equal_radius_quipu(i: usize, j: usize) -> ClosedQuipu {
    assert!(i >= 1 && j >= 1, "needs i, j >= 1");
    ClosedQuipu::of(&[i + j + 1, i + j + 1], &[i - 1, j - 1])
}

/// `C_(2k+3)^(k)`: order `3k + 4`, diameter `2k + 2`.
pub fn boundary_closed_quipu(k: usize) -> ClosedQuipu {
    ClosedQuipu::of(&[2 * k + 3], &[k])
}

/// `C_(2k+1)^(k-1)`: order `3k + 1`, diameter `2k`.
pub fn losing_closed_quipu(k: usize) -> ClosedQuipu {
    assert!(k >= 1);
    ClosedQuipu::of(&[2 * k + 1], &[k - 1])
}

/// The seven open quipus of order `3k + 1` and diameter `2k` that pass the
/// closed-form screens yet lose to `ρ_k`; defined for `k ≥ 7`.
pub fn exceptional_specs(k: usize) -> Vec<OpenQuipu> {
    assert!(k >= 7, "defined for k >= 7");
    vec![
        OpenQuipu::of(&[1, k - 3, k - 1, 1], &[1, k - 2, 1]),
        OpenQuipu::of(&[1, k - 4, k - 1, 2], &[1, k - 3, 2]),
        OpenQuipu::of(&[1, 0, k - 1, k - 2], &[1, 1, k - 2]),
        OpenQuipu::of(&[1, k - 2, k - 2, 1], &[1, k - 2, 1]),
        OpenQuipu::of(&[1, 1, k - 2, k - 2], &[1, 1, k - 2]),
        OpenQuipu::of(&[1, 1, k - 2, k - 4, 1], &[1, 1, k - 3, 1]),
        OpenQuipu::of(&[1, k - 3, k - 2, 0, 1], &[1, k - 3, 1, 1]),
    ]
}

/// `P_(1,k-3,k-2,2)^(1,k-3,2)`, which bounds the last exceptional spec from
/// below and itself lies above `3/√2`.
pub fn exceptional_comparator(k: usize) -> OpenQuipu {
    assert!(k >= 7, "defined for k >= 7");
    OpenQuipu::of(&[1, k - 3, k - 2, 2], &[1, k - 3, 2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes_and_shape() {
        assert_eq!(
            theorem_family(2),
            vec![OpenQuipu::of(&[0, 1, 2], &[0, 2]), OpenQuipu::of(&[1, 1, 1], &[1, 1])]
        );
        for k in 1..=9 {
            let fam = theorem_family(k);
            assert_eq!(fam.len(), k / 2 + 1);
            for q in fam {
                let g = q.realize();
                assert_eq!(g.order(), 3 * k + 1);
                assert_eq!(g.diameter().unwrap().finite(), Some(2 * k));
            }
        }
    }

    #[test]
    fn exceptional_orders_and_diameters() {
        for k in 7..=12 {
            for q in exceptional_specs(k) {
                let g = q.realize();
                assert_eq!(g.order(), 3 * k + 1, "{q}");
                assert_eq!(g.diameter().unwrap().finite(), Some(2 * k), "{q}");
            }
        }
    }

    #[test]
    fn closed_families() {
        let g = boundary_closed_quipu(5).realize();
        assert_eq!((g.order(), g.diameter().unwrap().finite()), (19, Some(12)));
        let g = losing_closed_quipu(7).realize();
        assert_eq!((g.order(), g.diameter().unwrap().finite()), (22, Some(14)));
    }
}
