//! Rank-space reduction and per-axis presorting.

use crate::point::PointD;

/// Per-axis reduction data produced by [`rank_space_reduce`].
///
/// For each axis it keeps the sorted original values, the permutation from
/// original point index to rank, and its inverse. Ranks on each axis form a
/// permutation of `0..n-1`; ties between equal values are broken by id.
#[derive(Clone, Debug)]
pub struct RankSpaceMap {
    /// `sorted[axis][rank]` = original coordinate value at that rank.
    sorted: Vec<Vec<u32>>,
    /// `to_rank[axis][point_index]` = rank of that point on the axis.
    to_rank: Vec<Vec<u32>>,
    /// `from_rank[axis][rank]` = original point index holding that rank.
    from_rank: Vec<Vec<u32>>,
}

impl RankSpaceMap {
    pub fn dim(&self) -> usize {
        self.sorted.len()
    }

    pub fn len(&self) -> usize {
        self.sorted.first().map_or(0, |v| v.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Original value sitting at `rank` on `axis`.
    pub fn value_at(&self, axis: usize, rank: u32) -> u32 {
        self.sorted[axis][rank as usize]
    }

    pub fn rank_of_point(&self, axis: usize, point_index: usize) -> u32 {
        self.to_rank[axis][point_index]
    }

    pub fn point_at_rank(&self, axis: usize, rank: u32) -> u32 {
        self.from_rank[axis][rank as usize]
    }

    /// Smallest rank whose value is >= `v` (successor side of an interval),
    /// or `n` if every value is smaller.
    pub fn lo_rank(&self, axis: usize, v: u32) -> u32 {
        self.sorted[axis].partition_point(|&x| x < v) as u32
    }

    /// Largest rank whose value is <= `v` plus one, i.e. the count of values
    /// <= `v`. Zero means no value qualifies (predecessor side).
    pub fn hi_rank_count(&self, axis: usize, v: u32) -> u32 {
        self.sorted[axis].partition_point(|&x| x <= v) as u32
    }

    /// Map a rank-space point back to its original coordinates.
    pub fn invert(&self, p: &PointD) -> PointD {
        let coords: Vec<u32> = (0..p.dim())
            .map(|axis| self.value_at(axis, p.coord(axis)))
            .collect();
        p.with_coords(&coords)
    }
}

/// Replace every coordinate by its rank on that axis (ties broken by id),
/// so each axis becomes a permutation of `0..n-1`. Returns the reduced
/// points in the original order together with the map.
pub fn rank_space_reduce(points: &[PointD]) -> (Vec<PointD>, RankSpaceMap) {
    let n = points.len();
    let d = points.first().map_or(2, |p| p.dim());
    let mut sorted = Vec::with_capacity(d);
    let mut to_rank = vec![vec![0u32; n]; d];
    let mut from_rank = Vec::with_capacity(d);
    for axis in 0..d {
        let perm = axis_order(points, axis);
        let mut vals = Vec::with_capacity(n);
        for (rank, &pi) in perm.iter().enumerate() {
            vals.push(points[pi as usize].coord(axis));
            to_rank[axis][pi as usize] = rank as u32;
        }
        sorted.push(vals);
        from_rank.push(perm);
    }
    let reduced = points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let coords: Vec<u32> = (0..d).map(|axis| to_rank[axis][i]).collect();
            p.with_coords(&coords)
        })
        .collect();
    (
        reduced,
        RankSpaceMap {
            sorted,
            to_rank,
            from_rank,
        },
    )
}

/// Index permutation sorting `points` by `(coordinate, id)` on one axis.
pub fn axis_order(points: &[PointD], axis: usize) -> Vec<u32> {
    let mut perm: Vec<u32> = (0..points.len() as u32).collect();
    perm.sort_by_key(|&i| points[i as usize].axis_key(axis));
    perm
}

/// Per-axis sorted index lists for a point set: `result[axis]` is the
/// permutation of `0..n-1` ordered by `(coordinate, id)` on that axis.
pub fn presort(points: &[PointD]) -> Vec<Vec<u32>> {
    let d = points.first().map_or(0, |p| p.dim());
    (0..d).map(|axis| axis_order(points, axis)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts2(coords: &[[u32; 2]]) -> Vec<PointD> {
        coords
            .iter()
            .enumerate()
            .map(|(i, c)| PointD::new(c, i as u64))
            .collect()
    }

    #[test]
    fn x_ranks_are_sorting_permutation() {
        let pts = pts2(&[[10, 0], [30, 1], [20, 2]]);
        let (red, _) = rank_space_reduce(&pts);
        let xr: Vec<u32> = red.iter().map(|p| p.coord(0)).collect();
        assert_eq!(xr, vec![0, 2, 1]);
    }

    #[test]
    fn ties_break_by_id() {
        let pts = pts2(&[[5, 0], [5, 1]]);
        let (red, _) = rank_space_reduce(&pts);
        assert_eq!(red[0].coord(0), 0);
        assert_eq!(red[1].coord(0), 1);
    }

    #[test]
    fn empty_input() {
        let (red, map) = rank_space_reduce(&[]);
        assert!(red.is_empty());
        assert!(map.is_empty());
    }

    #[test]
    fn reduce_then_invert_is_identity() {
        let pts = pts2(&[[7, 7], [3, 9], [7, 2], [0, 9]]);
        let (red, map) = rank_space_reduce(&pts);
        for (orig, r) in pts.iter().zip(&red) {
            let back = map.invert(r);
            assert_eq!(back.coords(), orig.coords());
            assert_eq!(back.id(), orig.id());
        }
    }

    #[test]
    fn presort_two_points() {
        let pts = pts2(&[[3, 0], [1, 2]]);
        let orders = presort(&pts);
        assert_eq!(orders[0], vec![1, 0]);
        assert_eq!(orders[1], vec![0, 1]);
    }

    #[test]
    fn presort_single_point_identity() {
        let pts = pts2(&[[4, 4]]);
        let orders = presort(&pts);
        assert_eq!(orders[0], vec![0]);
        assert_eq!(orders[1], vec![0]);
    }

    #[test]
    fn presort_matches_comparison_sort_oracle() {
        // Simple deterministic LCG so the test needs no rng dependency.
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let pts: Vec<PointD> = (0..1000)
            .map(|i| PointD::new(&[(next() % 64) as u32, (next() % 64) as u32], i))
            .collect();
        let orders = presort(&pts);
        for axis in 0..2 {
            let mut oracle: Vec<u32> = (0..pts.len() as u32).collect();
            oracle.sort_by_key(|&i| pts[i as usize].axis_key(axis));
            assert_eq!(orders[axis], oracle);
        }
    }
}
