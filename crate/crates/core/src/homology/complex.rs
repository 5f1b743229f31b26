use crate::graph::bits::{and_into, iter_ones};
use crate::graph::Graph;

use super::gf2::Gf2Matrix;
use super::{HomologyError, HomologyLimits};

/// The clique complex of a graph up to a top dimension: faces of dimension
/// `k` are the `(k + 1)`-vertex cliques, each stored as its ascending vertex
/// list, and each dimension is sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueComplex {
    top: usize,
    faces: Vec<Vec<u32>>,
}

impl CliqueComplex {
    /// Faces of dimension `0..=top`. Checks `∂ ∘ ∂ = 0` before returning.
    pub fn build(g: &Graph, top: usize, limits: &HomologyLimits) -> Result<Self, HomologyError> {
        let n = g.vertex_count();
        if n > limits.max_vertices {
            return Err(HomologyError::TooLarge {
                what: "vertex count",
                size: n,
                limit: limits.max_vertices,
            });
        }
        let mut faces: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
        let mut total = 0usize;
        let mut stack = Vec::with_capacity(top + 1);
        let words = g.words();
        let mut scratch = vec![vec![0u64; words]; top + 2];
        for v in 0..n {
            // Candidates: neighbours above v.
            let mut cand = g.row(v).to_vec();
            crate::graph::bits::clear_upto(&mut cand, v);
            stack.push(v as u32);
            let ok = extend(g, &cand, &mut stack, top, &mut faces, &mut total, limits.max_faces, &mut scratch);
            stack.pop();
            if !ok {
                return Err(HomologyError::TooLarge {
                    what: "face count",
                    size: total,
                    limit: limits.max_faces,
                });
            }
        }
        // DFS from ascending roots over ascending candidates emits each
        // dimension in lexicographic order already.
        let c = CliqueComplex { top, faces };
        for k in 1..top {
            assert!(
                c.coboundary(k + 1).mul(&c.coboundary(k)).is_zero(),
                "boundary of a boundary is nonzero in dimension {k}"
            );
        }
        Ok(c)
    }

    pub fn top_dimension(&self) -> usize {
        self.top
    }

    pub fn face_count(&self, k: usize) -> usize {
        if k > self.top {
            return 0;
        }
        self.faces[k].len() / (k + 1)
    }

    pub fn face(&self, k: usize, i: usize) -> &[u32] {
        &self.faces[k][i * (k + 1)..(i + 1) * (k + 1)]
    }

    /// Rank of `face` among dimension-`k` faces.
    pub fn index_of(&self, k: usize, face: &[u32]) -> Option<usize> {
        let (mut lo, mut hi) = (0, self.face_count(k));
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.face(k, mid).cmp(face) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    /// `∂_k` as a matrix with one row per `(k-1)`-face and one column per
    /// `k`-face, for `1 <= k <= top`.
    pub fn boundary(&self, k: usize) -> Gf2Matrix {
        self.coboundary(k).transpose()
    }

    /// `∂_k` transposed: one row per `k`-face with its facets as columns.
    pub fn coboundary(&self, k: usize) -> Gf2Matrix {
        assert!(k >= 1 && k <= self.top, "boundary dimension {k} outside 1..={}", self.top);
        Gf2Matrix::from_sparse(self.face_count(k - 1), self.facet_rows(k))
    }

    fn facet_rows(&self, k: usize) -> Vec<Vec<usize>> {
        let mut sub = Vec::with_capacity(k);
        (0..self.face_count(k))
            .map(|j| {
                let f = self.face(k, j);
                (0..=k)
                    .map(|skip| {
                        sub.clear();
                        sub.extend(f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
                        self.index_of(k - 1, &sub).expect("downward closed")
                    })
                    .collect()
            })
            .collect()
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    cand: &[u64],
    stack: &mut Vec<u32>,
    top: usize,
    faces: &mut [Vec<u32>],
    total: &mut usize,
    cap: usize,
    scratch: &mut [Vec<u64>],
) -> bool {
    let k = stack.len() - 1;
    if *total >= cap {
        return false;
    }
    *total += 1;
    faces[k].extend_from_slice(stack);
    if k == top {
        return true;
    }
    for w in iter_ones(cand).collect::<Vec<_>>() {
        let mut next = std::mem::take(&mut scratch[k + 1]);
        and_into(&mut next, cand, g.row(w));
        crate::graph::bits::clear_upto(&mut next, w);
        stack.push(w as u32);
        let ok = extend(g, &next, stack, top, faces, total, cap, scratch);
        stack.pop();
        scratch[k + 1] = next;
        if !ok {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn face_counts() {
        let c = CliqueComplex::build(&complete(5), 4, &HomologyLimits::default()).unwrap();
        let counts: Vec<usize> = (0..=4).map(|k| c.face_count(k)).collect();
        assert_eq!(counts, vec![5, 10, 10, 5, 1]);
        assert_eq!(c.face(1, 0), &[0, 1]);
        assert_eq!(c.index_of(2, &[0, 1, 4]), Some(2));
        let o = CliqueComplex::build(&octahedron(), 3, &HomologyLimits::default()).unwrap();
        assert_eq!((o.face_count(0), o.face_count(1), o.face_count(2), o.face_count(3)), (6, 12, 8, 0));
    }

    #[test]
    fn faces_are_sorted_and_closed() {
        let c = CliqueComplex::build(&complete(6), 3, &HomologyLimits::default()).unwrap();
        for k in 0..=3 {
            for i in 1..c.face_count(k) {
                assert!(c.face(k, i - 1) < c.face(k, i));
            }
        }
        assert!(c.boundary(1).mul(&c.boundary(2)).is_zero());
        assert!(c.boundary(2).mul(&c.boundary(3)).is_zero());
        assert_eq!(c.coboundary(2).row_count(), c.face_count(2));
    }

    #[test]
    fn limits() {
        let lim = HomologyLimits { max_faces: 10, ..HomologyLimits::default() };
        assert!(matches!(
            CliqueComplex::build(&complete(6), 2, &lim),
            Err(HomologyError::TooLarge { .. })
        ));
        assert!(CliqueComplex::build(&Graph::empty(61).unwrap(), 1, &HomologyLimits::default()).is_err());
    }
}
