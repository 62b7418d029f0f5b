//! Predecessor/successor index over a sorted array accessed through an
//! external oracle.
//!
//! Every eighth key is stored explicitly; the keys inside each gap are
//! summarized by a fusion-style sketch (the distinguishing bit positions of
//! the gap, and each key compressed to those bits, packed in one word). A
//! query binary-searches the samples, ranks its sketch among the gap
//! sketches in parallel, and corrects the candidate with at most two oracle
//! probes. Full keys are never stored beyond the samples.

use ors_core::words::{bcast, first_fields_mask, le_flags};

/// Keys per gap; 8 sketch lanes of 8 bits fill one word.
const GAP: usize = 8;
const LANE: u32 = 8;

/// Read-only access to the sorted key sequence the index was built on.
/// Oracle inconsistency is undetected.
pub trait KeyOracle {
    fn key(&self, rank: usize) -> u64;
}

impl<F: Fn(usize) -> u64> KeyOracle for F {
    fn key(&self, rank: usize) -> u64 {
        self(rank)
    }
}

#[derive(Clone, Debug)]
struct GapSketch {
    /// Distinguishing bit positions of the gap's keys (at most 7 bits set).
    mask: u64,
    /// Sketches of the gap keys, one 8-bit lane each, low lane first.
    lanes: u64,
    count: u8,
}

#[derive(Clone, Debug)]
pub struct PredecessorIndex {
    n: usize,
    samples: Vec<u64>,
    gaps: Vec<GapSketch>,
}

/// Configured oracle-probe budget per query; tests assert it with a
/// counting oracle.
pub const ORACLE_BUDGET: usize = 2;

impl PredecessorIndex {
    /// Build from the sorted keys. Keys must be strictly increasing; the
    /// oracle passed to queries must present this same sequence.
    pub fn build(keys: &[u64]) -> Self {
        assert!(
            keys.windows(2).all(|w| w[0] < w[1]),
            "keys must be strictly increasing"
        );
        let n = keys.len();
        let mut samples = Vec::with_capacity(n.div_ceil(GAP));
        let mut gaps = Vec::with_capacity(n.div_ceil(GAP));
        for chunk in keys.chunks(GAP) {
            samples.push(chunk[0]);
            let mut mask = 0u64;
            for w in chunk.windows(2) {
                let diff = w[0] ^ w[1];
                mask |= 1u64 << (63 - diff.leading_zeros());
            }
            let mut lanes = 0u64;
            for (i, &k) in chunk.iter().enumerate() {
                lanes |= sketch(k, mask) << (i as u32 * LANE);
            }
            gaps.push(GapSketch {
                mask,
                lanes,
                count: chunk.len() as u8,
            });
        }
        PredecessorIndex { n, samples, gaps }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Rank of the largest key `<= y`, or `None` if every key exceeds `y`.
    pub fn predecessor(&self, y: u64, oracle: &impl KeyOracle) -> Option<usize> {
        let c = self.count_le(y, oracle);
        if c == 0 {
            None
        } else {
            Some(c - 1)
        }
    }

    /// Rank of the smallest key `>= y`, or `None` if every key is below `y`.
    pub fn successor(&self, y: u64, oracle: &impl KeyOracle) -> Option<usize> {
        let below = if y == 0 { 0 } else { self.count_le(y - 1, oracle) };
        if below < self.n {
            Some(below)
        } else {
            None
        }
    }

    /// Number of keys `<= y`, resolved with at most [`ORACLE_BUDGET`]
    /// oracle probes.
    fn count_le(&self, y: u64, oracle: &impl KeyOracle) -> usize {
        if self.n == 0 || y < self.samples[0] {
            return 0;
        }
        // Largest sample <= y; the answer lies inside its gap.
        let gi = self.samples.partition_point(|&s| s <= y) - 1;
        let gap = &self.gaps[gi];
        let base = gi * GAP;
        let count = gap.count as usize;
        let qs = sketch(y, gap.mask);
        let r0 = sketch_rank(gap.lanes, qs, count);
        // The key with the longest common prefix with y is adjacent to the
        // sketch rank; probe both neighbours (<= 2 oracle accesses).
        let c0 = r0.saturating_sub(1);
        let c1 = (r0.min(count - 1)).max(c0);
        let k0 = oracle.key(base + c0);
        if k0 == y {
            return base + c0 + 1;
        }
        let mut lcp_key = k0;
        if c1 != c0 {
            let k1 = oracle.key(base + c1);
            if k1 == y {
                return base + c1 + 1;
            }
            if lcp(k1, y) > lcp(k0, y) {
                lcp_key = k1;
            }
        }
        // Correction: no key agrees with y beyond bit b, so replacing y by
        // e = (y's prefix above b) | 0 at b | all ones below leaves the set
        // of keys <= y unchanged, and e's first difference against any key
        // sits on a distinguishing bit, making the sketch rank exact.
        let b = 63 - (y ^ lcp_key).leading_zeros();
        let hi = if b == 63 { 0 } else { y & !((1u64 << (b + 1)) - 1) };
        let e = hi | ((1u64 << b) - 1);
        let rs = sketch_rank(gap.lanes, sketch(e, gap.mask), count);
        base + rs
    }

    pub fn size_bits(&self) -> usize {
        self.samples.len() * 64 + self.gaps.len() * (64 + 64 + 8)
    }
}

/// Compress `x` to the bits selected by `mask` (software PEXT; the mask has
/// at most 7 set bits).
#[inline]
fn sketch(x: u64, mut mask: u64) -> u64 {
    let mut out = 0u64;
    let mut bit = 0u32;
    while mask != 0 {
        let p = mask.trailing_zeros();
        out |= ((x >> p) & 1) << bit;
        bit += 1;
        mask &= mask - 1;
    }
    out
}

/// Number of the first `count` lanes whose sketch is `<=` `qs`.
#[inline]
fn sketch_rank(lanes: u64, qs: u64, count: usize) -> usize {
    let flags = le_flags(lanes, bcast(LANE, qs), LANE) & first_fields_mask(LANE, count);
    flags.count_ones() as usize
}

#[inline]
fn lcp(a: u64, b: u64) -> u32 {
    (a ^ b).leading_zeros()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cell::Cell;

    struct CountingOracle<'a> {
        keys: &'a [u64],
        calls: Cell<usize>,
    }

    impl KeyOracle for CountingOracle<'_> {
        fn key(&self, rank: usize) -> u64 {
            self.calls.set(self.calls.get() + 1);
            self.keys[rank]
        }
    }

    fn check_all_queries(keys: &[u64], universe: u64) {
        let idx = PredecessorIndex::build(keys);
        let oracle = CountingOracle {
            keys,
            calls: Cell::new(0),
        };
        for y in 0..=universe {
            oracle.calls.set(0);
            let got = idx.predecessor(y, &oracle);
            assert!(
                oracle.calls.get() <= ORACLE_BUDGET,
                "predecessor({y}) used {} probes on {keys:?}",
                oracle.calls.get()
            );
            let want = keys.iter().rposition(|&k| k <= y);
            assert_eq!(got, want, "predecessor({y}) on {keys:?}");

            oracle.calls.set(0);
            let got = idx.successor(y, &oracle);
            assert!(oracle.calls.get() <= ORACLE_BUDGET);
            let want = keys.iter().position(|&k| k >= y);
            assert_eq!(got, want, "successor({y}) on {keys:?}");
        }
    }

    #[test]
    fn spec_examples() {
        let keys = [2u64, 5, 9];
        let idx = PredecessorIndex::build(&keys);
        let oracle = |r: usize| keys[r];
        // rank 2 in the spec's 1-based indexing is index 1 here.
        assert_eq!(idx.predecessor(5, &oracle), Some(1));
        assert_eq!(idx.predecessor(1, &oracle), None);
        assert_eq!(idx.successor(100, &oracle), None);
    }

    #[test]
    fn exhaustive_small_universes() {
        // All subsets of a tiny universe, all queries.
        for bits in 1u32..=10 {
            let mut set = Vec::new();
            let mut x = 0x9e3779b9u64.wrapping_mul(bits as u64 + 1);
            for v in 0..64u64 {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                if x % 3 != 0 {
                    set.push(v);
                }
            }
            set.truncate(3 * bits as usize);
            if set.is_empty() {
                continue;
            }
            check_all_queries(&set, 70);
        }
    }

    #[test]
    fn random_sorted_arrays() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..30 {
            let n = rng.gen_range(1..400);
            let mut keys: Vec<u64> = (0..n).map(|_| rng.gen_range(0..100_000u64)).collect();
            keys.sort_unstable();
            keys.dedup();
            let idx = PredecessorIndex::build(&keys);
            let oracle = CountingOracle {
                keys: &keys,
                calls: Cell::new(0),
            };
            for _ in 0..500 {
                let y = rng.gen_range(0..110_000u64);
                oracle.calls.set(0);
                let got = idx.predecessor(y, &oracle);
                assert!(oracle.calls.get() <= ORACLE_BUDGET);
                assert_eq!(got, keys.iter().rposition(|&k| k <= y));
                let got = idx.successor(y, &oracle);
                assert_eq!(got, keys.iter().position(|&k| k >= y));
            }
        }
    }

    #[test]
    fn wide_keys() {
        let keys: Vec<u64> = vec![0, 1, u64::MAX / 2, u64::MAX - 1, u64::MAX];
        let idx = PredecessorIndex::build(&keys);
        let oracle = |r: usize| keys[r];
        assert_eq!(idx.predecessor(u64::MAX, &oracle), Some(4));
        assert_eq!(idx.predecessor(u64::MAX - 1, &oracle), Some(3));
        assert_eq!(idx.predecessor(2, &oracle), Some(1));
        assert_eq!(idx.successor(u64::MAX, &oracle), Some(4));
    }
}
