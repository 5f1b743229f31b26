use serde::{Deserialize, Serialize};

use super::bits;
use super::Graph;

/// A subset of a host graph's edges, as a mask over its canonical edge order.
///
/// The mask does not borrow the host; operations that take both a graph and
/// a mask check that the widths agree.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeSet {
    width: usize,
    bits: Vec<u64>,
}

impl EdgeSet {
    pub fn empty(width: usize) -> Self {
        EdgeSet {
            width,
            bits: vec![0; width.div_ceil(64)],
        }
    }

    pub fn full(width: usize) -> Self {
        let mut s = Self::empty(width);
        for i in 0..width {
            s.insert(i);
        }
        s
    }

    /// Mask of the given vertex pairs; every pair must be an edge of `g`.
    pub fn from_pairs<I>(g: &Graph, pairs: I) -> Option<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut s = Self::empty(g.edge_count());
        for (u, v) in pairs {
            s.insert(g.edge_index(u, v)?);
        }
        Some(s)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, it: I) -> Self {
        let mut s = Self::empty(width);
        for i in it {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.width && (self.bits[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.width, "edge index {i} outside mask width {}", self.width);
        self.bits[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.width {
            self.bits[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn count(&self) -> usize {
        bits::count(&self.bits)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        bits::iter_ones(&self.bits)
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn symmetric_difference(&self, other: &EdgeSet) -> EdgeSet {
        self.zip_with(other, |a, b| a ^ b)
    }

    pub fn complement(&self) -> EdgeSet {
        Self::full(self.width).difference(self)
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        assert_eq!(self.width, other.width, "edge mask widths differ");
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// The edges as `(min, max)` endpoint pairs of `g`.
    pub fn pairs(&self, g: &Graph) -> Vec<(u32, u32)> {
        g.check_mask(self);
        self.iter().map(|i| g.edges()[i]).collect()
    }

    fn zip_with(&self, other: &EdgeSet, f: impl Fn(u64, u64) -> u64) -> EdgeSet {
        assert_eq!(self.width, other.width, "edge mask widths differ");
        EdgeSet {
            width: self.width,
            bits: self.bits.iter().zip(&other.bits).map(|(&a, &b)| f(a, b)).collect(),
        }
    }
}

impl std::fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "EdgeSet[{}]", self.width)?;
        f.debug_set().entries(self.iter()).finish()
    }
}
