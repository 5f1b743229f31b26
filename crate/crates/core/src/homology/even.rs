use serde::{Deserialize, Serialize};

use crate::graph::{EdgeSet, Graph};

use super::betti::betti_z2_with;
use super::gf2::Gf2Matrix;
use super::{HomologyError, HomologyLimits};

/// `W = {w ⊆ E : |w ∩ T| is even for every triangle T}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenSpace {
    pub dimension: usize,
    pub basis: Vec<EdgeSet>,
}

/// Rows are triangles, columns edges.
fn triangle_incidence(g: &Graph) -> Gf2Matrix {
    let id = |a: u32, b: u32| g.edge_index(a as usize, b as usize).expect("triangle edge");
    Gf2Matrix::from_sparse(
        g.edge_count(),
        g.triangles()
            .into_iter()
            .map(|[a, b, c]| [id(a, b), id(a, c), id(b, c)]),
    )
}

/// `W` as the null space of the triangle-edge incidence matrix.
pub fn triangle_even_space(g: &Graph) -> EvenSpace {
    let basis: Vec<EdgeSet> = triangle_incidence(g)
        .null_space()
        .into_iter()
        .map(|v| EdgeSet::from_indices(g.edge_count(), v.into_iter().map(|c| c as usize)))
        .collect();
    EvenSpace {
        dimension: basis.len(),
        basis,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem62Report {
    pub every_edge_in_triangle: bool,
    pub h1_zero: bool,
    pub even_space_is_cut_space: bool,
    pub betti_1: usize,
    pub even_dimension: usize,
    /// `n - (number of components)`.
    pub cut_dimension: usize,
}

pub fn check_theorem_6_2(g: &Graph) -> Result<Theorem62Report, HomologyError> {
    check_theorem_6_2_with(g, &HomologyLimits::default())
}

/// Computes `H_1` by boundary ranks and `W` by a null space, and returns
/// `Inconsistent` unless `dim W - dim(cut space) = dim H_1`.
pub fn check_theorem_6_2_with(g: &Graph, limits: &HomologyLimits) -> Result<Theorem62Report, HomologyError> {
    let betti_1 = betti_z2_with(g, 1, limits)?;
    let incidence = triangle_incidence(g);
    let even_dimension = incidence.null_space().len();
    let cut_dimension = g.vertex_count() - g.component_count();
    // Vertex stars span the cut space; each must meet every triangle evenly.
    let stars_even = (0..g.vertex_count()).all(|v| {
        let star: Vec<u32> = g
            .neighbors(v)
            .map(|w| g.edge_index(v, w).expect("edge") as u32)
            .collect();
        incidence.apply(&star).iter().all(|&odd| !odd)
    });
    if !stars_even {
        return Err(HomologyError::Inconsistent("a cut meets a triangle oddly".into()));
    }
    let report = Theorem62Report {
        every_edge_in_triangle: g.edges_in_no_triangle().is_empty(),
        h1_zero: betti_1 == 0,
        even_space_is_cut_space: even_dimension == cut_dimension,
        betti_1,
        even_dimension,
        cut_dimension,
    };
    if even_dimension < cut_dimension || even_dimension - cut_dimension != betti_1 {
        return Err(HomologyError::Inconsistent(format!(
            "dim W = {even_dimension}, cut space {cut_dimension}, H_1 = {betti_1}"
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn even_space_examples() {
        assert_eq!(triangle_even_space(&petersen()).dimension, 15);
        assert_eq!(triangle_even_space(&complete(3)).dimension, 2);
        let k5 = triangle_even_space(&complete(5));
        assert_eq!(k5.dimension, 4);
        let g = complete(5);
        for w in &k5.basis {
            for [a, b, c] in g.triangles() {
                let hits = [(a, b), (a, c), (b, c)]
                    .iter()
                    .filter(|&&(x, y)| w.contains(g.edge_index(x as usize, y as usize).unwrap()))
                    .count();
                assert_eq!(hits % 2, 0);
            }
        }
    }

    #[test]
    fn theorem_examples() {
        let r = check_theorem_6_2(&complete(5)).unwrap();
        assert!(r.every_edge_in_triangle && r.h1_zero && r.even_space_is_cut_space);
        let r = check_theorem_6_2(&cycle(5)).unwrap();
        assert!(!r.every_edge_in_triangle && !r.h1_zero && !r.even_space_is_cut_space);
        assert_eq!((r.betti_1, r.even_dimension, r.cut_dimension), (1, 5, 4));
    }
}
