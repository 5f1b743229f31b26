//! Matrices over the two-element field with sparse rows (ascending column
//! lists).

#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<Vec<u32>>,
}

impl std::fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Gf2Matrix({}x{})", self.rows.len(), self.cols)
    }
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            cols,
            rows: vec![Vec::new(); rows],
        }
    }

    /// Rows given by their nonzero columns; a repeated column cancels.
    pub fn from_sparse<I, R>(cols: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = R>,
        R: IntoIterator<Item = usize>,
    {
        let rows = rows
            .into_iter()
            .map(|r| {
                let mut row: Vec<u32> = r
                    .into_iter()
                    .map(|c| {
                        assert!(c < cols, "column {c} out of range {cols}");
                        c as u32
                    })
                    .collect();
                row.sort_unstable();
                let mut out: Vec<u32> = Vec::with_capacity(row.len());
                for c in row {
                    if out.last() == Some(&c) {
                        out.pop();
                    } else {
                        out.push(c);
                    }
                }
                out
            })
            .collect();
        Gf2Matrix { cols, rows }
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.rows[r]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].binary_search(&(c as u32)).is_ok()
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut rows = vec![Vec::new(); self.cols];
        for (i, row) in self.rows.iter().enumerate() {
            for &c in row {
                rows[c as usize].push(i as u32);
            }
        }
        Gf2Matrix {
            cols: self.rows.len(),
            rows,
        }
    }

    /// `self · other` over GF(2).
    pub fn mul(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.cols, other.rows.len(), "dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().fold(Vec::new(), |acc, &k| xor(&acc, &other.rows[k as usize])))
            .collect();
        Gf2Matrix {
            cols: other.cols,
            rows,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Rank by elimination on a copy. Rows are inserted lightest first,
    /// each reduced against the pivot rows by its lowest column.
    pub fn rank(&self) -> usize {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.rows[i].len());
        let mut pivot: Vec<Option<Vec<u32>>> = vec![None; self.cols];
        let mut rank = 0;
        for i in order {
            let mut row = self.rows[i].clone();
            while let Some(&c) = row.first() {
                match &pivot[c as usize] {
                    Some(p) => row = xor(&row, p),
                    None => {
                        pivot[c as usize] = Some(row);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }

    /// A basis of `{v : self · v = 0}`, each vector as its support, from the
    /// reduced row echelon form.
    pub fn null_space(&self) -> Vec<Vec<u32>> {
        let words = self.cols.div_ceil(64);
        let bit = |r: &[u64], c: usize| r[c / 64] >> (c % 64) & 1 == 1;
        let mut rows: Vec<Vec<u64>> = self
            .rows
            .iter()
            .map(|r| {
                let mut d = vec![0u64; words];
                for &c in r {
                    d[c as usize / 64] |= 1 << (c % 64);
                }
                d
            })
            .collect();
        let mut pivot_cols = Vec::new();
        for c in 0..self.cols {
            let next = pivot_cols.len();
            let Some(i) = (next..rows.len()).find(|&i| bit(&rows[i], c)) else {
                continue;
            };
            rows.swap(next, i);
            let p = rows[next].clone();
            for (j, row) in rows.iter_mut().enumerate() {
                if j != next && bit(row, c) {
                    for (a, b) in row.iter_mut().zip(&p) {
                        *a ^= b;
                    }
                }
            }
            pivot_cols.push(c);
        }
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v: Vec<u32> = pivot_cols
                    .iter()
                    .enumerate()
                    .filter(|&(r, _)| bit(&rows[r], f))
                    .map(|(_, &c)| c as u32)
                    .collect();
                v.push(f as u32);
                v.sort_unstable();
                v
            })
            .collect()
    }

    /// `self · v` for `v` given by its support.
    pub fn apply(&self, v: &[u32]) -> Vec<bool> {
        let mut dense = vec![false; self.cols];
        for &c in v {
            dense[c as usize] ^= true;
        }
        self.rows
            .iter()
            .map(|r| r.iter().filter(|&&c| dense[c as usize]).count() % 2 == 1)
            .collect()
    }
}

/// Symmetric difference of two ascending lists.
pub(crate) fn xor(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let id = Gf2Matrix::from_sparse(3, [vec![0], vec![1], vec![2]]);
        assert_eq!(id.rank(), 3);
        let dup = Gf2Matrix::from_sparse(3, [vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert_eq!(dup.rank(), 2);
        assert_eq!(dup.null_space(), vec![vec![0, 1, 2]]);
        assert_eq!(Gf2Matrix::zeros(4, 70).rank(), 0);
        assert_eq!(Gf2Matrix::zeros(4, 70).null_space().len(), 70);
        assert_eq!(Gf2Matrix::from_sparse(2, [vec![1, 1, 0]]).row(0), &[0]);
    }

    #[test]
    fn null_space_vectors_are_annihilated() {
        let m = Gf2Matrix::from_sparse(
            130,
            (0..40).map(|i| vec![i, (i * 7 + 3) % 130, (i * 13 + 64) % 130, 129 - i]),
        );
        let basis = m.null_space();
        assert_eq!(basis.len(), 130 - m.rank());
        for v in &basis {
            assert!(m.apply(v).iter().all(|&b| !b));
        }
        let b = Gf2Matrix::from_sparse(130, basis.iter().map(|v| v.iter().map(|&c| c as usize)));
        assert_eq!(b.rank(), b.row_count());
        assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn rank_does_not_mutate() {
        let m = Gf2Matrix::from_sparse(5, [vec![0, 4], vec![0, 4], vec![1]]);
        let copy = m.clone();
        assert_eq!(m.rank(), 2);
        assert_eq!(m, copy);
        let t = Gf2Matrix::from_sparse(2, [vec![1], vec![]]);
        assert!(t.get(0, 1) && !t.get(1, 0));
        assert!(t.mul(&t).is_zero());
        assert_eq!(xor(&[1, 3, 5], &[3, 4]), vec![1, 4, 5]);
    }
}
