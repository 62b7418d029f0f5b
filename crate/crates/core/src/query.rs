//! Axis-aligned query boxes with sentinel-encoded unbounded sides.

use crate::point::{PointD, MAX_DIM};
use arrayvec::ArrayVec;

/// A closed box `[lo_1, hi_1] x ... x [lo_d, hi_d]` over the grid `[0, U)`.
///
/// Unbounded sides are encoded by sentinels: `-inf` as `0` and `+inf` as
/// `U`. Because intervals are closed and coordinates live in `[0, U)`, the
/// sentinels behave exactly like the infinities they stand for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryBox {
    lo: ArrayVec<u32, MAX_DIM>,
    hi: ArrayVec<u32, MAX_DIM>,
    universe: u32,
}

impl QueryBox {
    /// The all-space box in `d` dimensions over universe `[0, u)`.
    pub fn all(d: usize, u: u32) -> Self {
        assert!((2..=MAX_DIM).contains(&d), "box dimension out of range");
        QueryBox {
            lo: (0..d).map(|_| 0).collect(),
            hi: (0..d).map(|_| u).collect(),
            universe: u,
        }
    }

    pub fn from_corners(lo: &[u32], hi: &[u32], u: u32) -> Self {
        assert_eq!(lo.len(), hi.len());
        let mut b = QueryBox::all(lo.len(), u);
        for axis in 0..lo.len() {
            b = b.bounded(axis, lo[axis], hi[axis]);
        }
        b
    }

    /// Restrict one axis to `[lo, hi]`.
    pub fn bounded(mut self, axis: usize, lo: u32, hi: u32) -> Self {
        assert!(lo <= hi, "inverted interval on axis {axis}: {lo} > {hi}");
        self.lo[axis] = lo;
        self.hi[axis] = hi;
        self
    }

    /// Restrict one axis to `(-inf, hi]`.
    pub fn below(self, axis: usize, hi: u32) -> Self {
        self.bounded(axis, 0, hi)
    }

    /// Restrict one axis to `[lo, +inf)`.
    pub fn above(self, axis: usize, lo: u32) -> Self {
        let u = self.universe;
        self.bounded(axis, lo, u)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    #[inline]
    pub fn universe(&self) -> u32 {
        self.universe
    }

    #[inline]
    pub fn lo(&self, axis: usize) -> u32 {
        self.lo[axis]
    }

    #[inline]
    pub fn hi(&self, axis: usize) -> u32 {
        self.hi[axis]
    }

    /// Count of non-sentinel endpoints, classifying the box as k-sided.
    pub fn sidedness(&self) -> usize {
        let mut k = 0;
        for axis in 0..self.dim() {
            if self.lo[axis] != 0 {
                k += 1;
            }
            if self.hi[axis] != self.universe {
                k += 1;
            }
        }
        k
    }

    /// Membership by per-axis closed-interval tests.
    pub fn contains(&self, p: &PointD) -> bool {
        assert_eq!(p.dim(), self.dim(), "contains: dimension mismatch");
        (0..self.dim()).all(|a| self.lo[a] <= p.coord(a) && p.coord(a) <= self.hi[a])
    }

    /// The two corners as points (ids 0), useful for corner-based tests.
    pub fn corners(&self) -> (PointD, PointD) {
        (
            PointD::new(&self.lo, u64::MAX - 1),
            PointD::new(&self.hi, u64::MAX),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::dominates;

    #[test]
    fn sidedness_counts_bounded_endpoints() {
        let b = QueryBox::all(3, 100).bounded(0, 2, 50).below(1, 70);
        // axis 0 contributes 2, axis 1 contributes 1 (hi only), axis 2 none.
        assert_eq!(b.sidedness(), 3);
        assert_eq!(QueryBox::all(2, 10).sidedness(), 0);
    }

    #[test]
    #[should_panic(expected = "inverted interval")]
    fn inverted_interval_panics() {
        QueryBox::all(2, 10).bounded(0, 5, 3);
    }

    /// Membership equals dominance applied twice (corner tests), checked by
    /// exhaustive enumeration on a small grid.
    #[test]
    fn contains_equals_double_dominance_on_small_grid() {
        let u = 4u32;
        for lo0 in 0..=u {
            for hi0 in lo0..=u {
                for lo1 in 0..=u {
                    for hi1 in lo1..=u {
                        let b = QueryBox::all(2, u).bounded(0, lo0, hi0).bounded(1, lo1, hi1);
                        let (clo, chi) = b.corners();
                        for x in 0..u {
                            for y in 0..u {
                                let p = PointD::new(&[x, y], 7);
                                let by_box = b.contains(&p);
                                let by_dom = dominates(&clo, &p) && dominates(&p, &chi);
                                assert_eq!(by_box, by_dom);
                            }
                        }
                    }
                }
            }
        }
    }
}
