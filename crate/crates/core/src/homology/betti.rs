use serde::{Deserialize, Serialize};

use crate::graph::Graph;

use super::complex::CliqueComplex;
use super::{HomologyError, HomologyLimits};

/// `dim H_k(X(G); GF(2))`, reduced for `k = 0` (components minus one).
pub fn betti_z2(g: &Graph, k: usize) -> Result<usize, HomologyError> {
    betti_z2_with(g, k, &HomologyLimits::default())
}

pub fn betti_z2_with(g: &Graph, k: usize, limits: &HomologyLimits) -> Result<usize, HomologyError> {
    if k > limits.max_dimension {
        return Err(HomologyError::Dimension {
            k,
            max: limits.max_dimension,
        });
    }
    let c = CliqueComplex::build(g, k + 1, limits)?;
    let rank = |d: usize| if d == 0 { 0 } else { c.coboundary(d).rank() };
    let beta = c.face_count(k) - rank(k) - rank(k + 1);
    Ok(if k == 0 { beta.saturating_sub(1) } else { beta })
}

/// Face counts, boundary ranks and (unreduced) Betti numbers of the
/// `top`-skeleton of `X(G)`, with both sides of the Euler identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub top: usize,
    pub face_counts: Vec<usize>,
    /// `rank ∂_k` for `k = 1..=top`.
    pub boundary_ranks: Vec<usize>,
    /// `dim H_k` of the skeleton for `k = 0..=top`; entries below `top`
    /// equal those of `X(G)`.
    pub betti: Vec<usize>,
    pub euler_from_faces: i64,
    pub euler_from_betti: i64,
}

pub fn homology_profile(g: &Graph, top: usize, limits: &HomologyLimits) -> Result<HomologyProfile, HomologyError> {
    if top > limits.max_dimension + 1 {
        return Err(HomologyError::Dimension {
            k: top,
            max: limits.max_dimension + 1,
        });
    }
    let c = CliqueComplex::build(g, top, limits)?;
    let face_counts: Vec<usize> = (0..=top).map(|k| c.face_count(k)).collect();
    let boundary_ranks: Vec<usize> = (1..=top).map(|k| c.coboundary(k).rank()).collect();
    let rank = |k: usize| if k == 0 || k > top { 0 } else { boundary_ranks[k - 1] };
    let betti: Vec<usize> = (0..=top).map(|k| face_counts[k] - rank(k) - rank(k + 1)).collect();
    let alt = |v: &[usize]| {
        v.iter()
            .enumerate()
            .map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) })
            .sum()
    };
    Ok(HomologyProfile {
        top,
        euler_from_faces: alt(&face_counts),
        euler_from_betti: alt(&betti),
        face_counts,
        boundary_ranks,
        betti,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn golden_values() {
        assert_eq!(betti_z2(&cycle(5), 1).unwrap(), 1);
        assert_eq!(betti_z2(&complete(4), 1).unwrap(), 0);
        assert_eq!(betti_z2(&octahedron(), 2).unwrap(), 1);
        assert_eq!(betti_z2(&octahedron(), 1).unwrap(), 0);
        assert_eq!(betti_z2(&petersen(), 1).unwrap(), 6);
        assert_eq!(betti_z2(&disjoint_union(&cycle(4), &cycle(5)), 0).unwrap(), 1);
        assert_eq!(betti_z2(&complete(6), 3).unwrap(), 0);
        assert!(betti_z2(&complete(3), 4).is_err());
    }

    #[test]
    fn octahedron_euler() {
        let p = homology_profile(&octahedron(), 3, &HomologyLimits::default()).unwrap();
        assert_eq!(p.face_counts, vec![6, 12, 8, 0]);
        assert_eq!(p.betti, vec![1, 0, 1, 0]);
        assert_eq!((p.euler_from_faces, p.euler_from_betti), (2, 2));
    }
}
