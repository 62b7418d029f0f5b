//! Integer-coordinate points and the dominance predicate.

use arrayvec::ArrayVec;

/// Maximum dimension a point can carry. The structures in this workspace
/// target d in {2,3,4}; the offline divide-and-conquer reductions also run
/// at d = 5 and 6, so leave headroom.
pub const MAX_DIM: usize = 6;

/// A point on the integer grid `[0, U)^d` with a stable identifier.
///
/// Ids must be distinct within one instance; ties between equal coordinates
/// are always broken by ascending id so every axis can be treated as a
/// strict order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointD {
    coords: ArrayVec<u32, MAX_DIM>,
    id: u64,
}

impl PointD {
    pub fn new(coords: &[u32], id: u64) -> Self {
        assert!(
            (2..=MAX_DIM).contains(&coords.len()),
            "point dimension {} out of range 2..={}",
            coords.len(),
            MAX_DIM
        );
        PointD {
            coords: coords.iter().copied().collect(),
            id,
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    #[inline]
    pub fn coord(&self, axis: usize) -> u32 {
        self.coords[axis]
    }

    #[inline]
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    #[inline]
    pub fn id(&self) -> u64 {
        self.id
    }

    /// Same id, coordinates replaced.
    pub fn with_coords(&self, coords: &[u32]) -> Self {
        PointD::new(coords, self.id)
    }

    /// Sort key for one axis: coordinate first, id as tie-break.
    #[inline]
    pub fn axis_key(&self, axis: usize) -> (u32, u64) {
        (self.coords[axis], self.id)
    }
}

impl std::fmt::Debug for PointD {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "p{}{:?}", self.id, self.coords.as_slice())
    }
}

/// True iff every coordinate of `p` is <= the corresponding coordinate of
/// `q`, i.e. `p` lies in the orthant `(-inf, q_1] x ... x (-inf, q_d]`.
///
/// Panics on dimension mismatch (contract violation).
#[inline]
pub fn dominates(p: &PointD, q: &PointD) -> bool {
    assert_eq!(p.dim(), q.dim(), "dominates: dimension mismatch");
    p.coords().iter().zip(q.coords()).all(|(a, b)| a <= b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(coords: &[u32], id: u64) -> PointD {
        PointD::new(coords, id)
    }

    #[test]
    fn dominates_reflexive() {
        let p = pt(&[1, 2, 3], 0);
        assert!(dominates(&p, &p));
    }

    #[test]
    fn dominates_second_coordinate_larger() {
        assert!(!dominates(&pt(&[0, 5], 0), &pt(&[1, 4], 1)));
    }

    #[test]
    fn dominates_strictly_smaller() {
        assert!(dominates(&pt(&[2, 3, 4, 5], 0), &pt(&[3, 4, 5, 6], 1)));
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn dominates_dim_mismatch_panics() {
        dominates(&pt(&[0, 0], 0), &pt(&[0, 0, 0], 1));
    }

    /// Partial-order laws checked exhaustively on the 3x3x3 grid.
    #[test]
    fn dominates_is_partial_order_on_small_grid() {
        let mut pts = Vec::new();
        for x in 0..3u32 {
            for y in 0..3u32 {
                for z in 0..3u32 {
                    pts.push(pt(&[x, y, z], pts.len() as u64));
                }
            }
        }
        for a in &pts {
            assert!(dominates(a, a));
            for b in &pts {
                if dominates(a, b) && dominates(b, a) {
                    assert_eq!(a.coords(), b.coords());
                }
                for c in &pts {
                    if dominates(a, b) && dominates(b, c) {
                        assert!(dominates(a, c));
                    }
                }
            }
        }
    }
}
