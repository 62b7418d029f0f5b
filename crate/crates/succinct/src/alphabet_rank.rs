//! Generalized rank over an alphabet: for a packed array `A`, answer
//! "how many elements of `A[..=k]` equal `A[k]`" in constant time.
//!
//! Two checkpoint schemes are used depending on the alphabet size. When
//! `sigma^2 >= lg n` a single level of major checkpoints (one record of
//! `sigma` counters every `sigma * lg n` positions) plus a small per-element
//! counter suffices. Below that crossover a second level of minor
//! checkpoints every `sigma * lglg n` positions is inserted and the residual
//! span is counted directly in the packed symbol words.
//!
//! The index can be built *segmented*: counts then reset at every segment
//! boundary and queries never look across segments. Segmented indexes back
//! the per-node ball lists of the ball-inheritance tree, where every node on
//! a level has the same list length.

use ors_core::words::{ceil_div, ceil_log2, PackedVec};

#[derive(Clone, Debug)]
enum Repr {
    /// Binary alphabet: plain bitvector with cumulative popcount blocks.
    Bits { bits: Vec<u64>, blocks: Vec<u32> },
    /// General alphabet, packed symbols plus checkpoint counters.
    Packed {
        syms: PackedVec,
        majors: Vec<u32>,
        major_stride: usize,
        majors_per_seg: usize,
        scheme: Scheme,
    },
}

#[derive(Clone, Debug)]
enum Scheme {
    /// Per-element count of equal symbols since the last major checkpoint.
    OneLevel { elem: PackedVec },
    /// Minor checkpoints (sigma counters each) between majors; the residual
    /// span is counted by broadword scans over the packed symbols.
    TwoLevel {
        minors: PackedVec,
        minor_stride: usize,
        minors_per_seg: usize,
    },
}

const BITS_BLOCK_WORDS: usize = 8;

/// Rank index over a fixed symbol array. See module docs.
#[derive(Clone, Debug)]
pub struct AlphabetRankIndex {
    n: usize,
    sigma: u32,
    segment_len: usize,
    repr: Repr,
}

impl AlphabetRankIndex {
    /// Build over one segment spanning the whole array.
    pub fn new(symbols: &[u32], sigma: u32) -> Self {
        Self::new_segmented(symbols, sigma, symbols.len().max(1))
    }

    /// Build with counts resetting every `segment_len` positions.
    pub fn new_segmented(symbols: &[u32], sigma: u32, segment_len: usize) -> Self {
        assert!(sigma >= 2, "alphabet must have at least two symbols");
        assert!(segment_len >= 1);
        debug_assert!(symbols.iter().all(|&s| s < sigma));
        let n = symbols.len();
        let repr = if sigma == 2 {
            let mut bits = vec![0u64; ceil_div(n.max(1), 64)];
            for (i, &s) in symbols.iter().enumerate() {
                if s == 1 {
                    bits[i / 64] |= 1 << (i % 64);
                }
            }
            let nblocks = ceil_div(bits.len(), BITS_BLOCK_WORDS) + 1;
            let mut blocks = Vec::with_capacity(nblocks);
            let mut acc = 0u32;
            blocks.push(0);
            for (w, word) in bits.iter().enumerate() {
                acc += word.count_ones();
                if (w + 1) % BITS_BLOCK_WORDS == 0 {
                    blocks.push(acc);
                }
            }
            blocks.push(acc);
            Repr::Bits { bits, blocks }
        } else {
            Self::build_packed(symbols, sigma, segment_len, n)
        };
        AlphabetRankIndex {
            n,
            sigma,
            segment_len,
            repr,
        }
    }

    fn build_packed(symbols: &[u32], sigma: u32, segment_len: usize, n: usize) -> Repr {
        let lgn = ceil_log2(n.max(2) as u64).max(1) as usize;
        let sym_width = ceil_log2(sigma as u64).max(1) + 1; // +1 guard bit
        let mut syms = PackedVec::with_capacity(sym_width, n);
        for &s in symbols {
            syms.push(s as u64);
        }

        // Crossover exactly at sigma^2 >= lg n.
        let one_level = (sigma as u64).saturating_mul(sigma as u64) >= lgn as u64;
        let lglgn = ceil_log2(lgn as u64).max(1) as usize;
        let minor_stride = (sigma as usize * lglgn).max(1);
        let mut major_stride = sigma as usize * lgn;
        // Keep majors aligned on minor boundaries in the two-level scheme.
        if !one_level {
            major_stride = minor_stride * ceil_div(major_stride, minor_stride);
        }
        let majors_per_seg = ceil_div(segment_len, major_stride);
        let nsegs = ceil_div(n.max(1), segment_len);
        let mut majors = vec![0u32; nsegs * majors_per_seg * sigma as usize];

        // Occurrence counters reused across checkpoints via timestamps.
        let mut counts = vec![0u32; sigma as usize];
        let mut stamps = vec![u32::MAX; sigma as usize];
        let mut epoch = 0u32;
        let count_of = |counts: &[u32], stamps: &[u32], epoch: u32, s: usize| -> u32 {
            if stamps[s] == epoch {
                counts[s]
            } else {
                0
            }
        };

        let mut scheme = if one_level {
            let elem_width = ceil_log2(major_stride as u64 + 1).max(1);
            Scheme::OneLevel {
                elem: PackedVec::with_capacity(elem_width, n),
            }
        } else {
            let minors_per_seg = ceil_div(segment_len, minor_stride);
            let minor_width = ceil_log2(major_stride as u64 + 1).max(1);
            Scheme::TwoLevel {
                minors: PackedVec::with_capacity(minor_width, nsegs * minors_per_seg * sigma as usize),
                minor_stride,
                minors_per_seg,
            }
        };

        for seg in 0..nsegs {
            let seg_start = seg * segment_len;
            let seg_end = (seg_start + segment_len).min(n);
            // Fresh counts at each segment.
            epoch = epoch.wrapping_add(1);
            for p in seg_start..seg_end {
                let off = p - seg_start;
                let s = symbols[p] as usize;
                if off % major_stride == 0 {
                    let mi = (seg * majors_per_seg + off / major_stride) * sigma as usize;
                    for sym in 0..sigma as usize {
                        majors[mi + sym] = count_of(&counts, &stamps, epoch, sym);
                    }
                }
                match &mut scheme {
                    Scheme::OneLevel { elem } => {
                        let mi = (seg * majors_per_seg + off / major_stride) * sigma as usize;
                        let since_major =
                            count_of(&counts, &stamps, epoch, s) - majors[mi + s];
                        elem.push(since_major as u64);
                    }
                    Scheme::TwoLevel {
                        minors,
                        minor_stride,
                        ..
                    } => {
                        if off % *minor_stride == 0 {
                            let mi = (seg * majors_per_seg + off / major_stride) * sigma as usize;
                            for sym in 0..sigma as usize {
                                let v = count_of(&counts, &stamps, epoch, sym) - majors[mi + sym];
                                minors.push(v as u64);
                            }
                        }
                    }
                }
                if stamps[s] != epoch {
                    stamps[s] = epoch;
                    counts[s] = 0;
                }
                counts[s] += 1;
            }
            // Pad minor records so indexing stays regular in short segments.
            if let Scheme::TwoLevel {
                minors,
                minor_stride,
                minors_per_seg,
            } = &mut scheme
            {
                let written = ceil_div(seg_end - seg_start, *minor_stride);
                for _ in written..*minors_per_seg {
                    for _ in 0..sigma {
                        minors.push(0);
                    }
                }
            }
        }

        Repr::Packed {
            syms,
            majors,
            major_stride,
            majors_per_seg,
            scheme,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    /// The symbol stored at position `i`.
    #[inline]
    pub fn symbol(&self, i: usize) -> u32 {
        assert!(i < self.n, "symbol index {i} out of range {}", self.n);
        match &self.repr {
            Repr::Bits { bits, .. } => ((bits[i / 64] >> (i % 64)) & 1) as u32,
            Repr::Packed { syms, .. } => syms.get(i) as u32,
        }
    }

    /// Number of positions `j <= i` in `i`'s segment with `A[j] == A[i]`
    /// (inclusive of `i` itself, so the result is at least 1).
    #[inline]
    pub fn rank_inclusive(&self, i: usize) -> usize {
        assert!(i < self.n, "rank position {i} out of range {}", self.n);
        let seg_start = i - i % self.segment_len;
        match &self.repr {
            Repr::Bits { bits, blocks } => {
                let ones =
                    ones_before(bits, blocks, i + 1) - ones_before(bits, blocks, seg_start);
                if (bits[i / 64] >> (i % 64)) & 1 == 1 {
                    ones as usize
                } else {
                    (i + 1 - seg_start) - ones as usize
                }
            }
            Repr::Packed {
                syms,
                majors,
                major_stride,
                majors_per_seg,
                scheme,
            } => {
                let seg = i / self.segment_len;
                let off = i - seg_start;
                let s = syms.get(i);
                let mi = (seg * majors_per_seg + off / major_stride) * self.sigma as usize;
                let at_major = majors[mi + s as usize] as usize;
                match scheme {
                    Scheme::OneLevel { elem } => at_major + elem.get(i) as usize + 1,
                    Scheme::TwoLevel {
                        minors,
                        minor_stride,
                        minors_per_seg,
                    } => {
                        let ni = (seg * minors_per_seg + off / minor_stride) * self.sigma as usize;
                        let at_minor = minors.get(ni + s as usize) as usize;
                        let minor_pos = seg_start + (off / minor_stride) * minor_stride;
                        let tail = syms.count_eq_in_range(minor_pos, i, s) as usize;
                        at_major + at_minor + tail + 1
                    }
                }
            }
        }
    }

    /// Count of `sym` among the first `t` positions of the segment starting
    /// at `seg_start`. Only supported for the binary alphabet, where it
    /// falls out of `rank_inclusive` on either symbol.
    pub fn prefix_count_binary(&self, seg_start: usize, t: usize, sym: u32) -> usize {
        debug_assert_eq!(self.sigma, 2);
        debug_assert_eq!(seg_start % self.segment_len, 0);
        if t == 0 {
            return 0;
        }
        let last = seg_start + t - 1;
        let e = self.rank_inclusive(last);
        if self.symbol(last) == sym {
            e
        } else {
            t - e
        }
    }

    /// Total allocated size in bits, for space accounting.
    pub fn size_bits(&self) -> usize {
        match &self.repr {
            Repr::Bits { bits, blocks } => bits.len() * 64 + blocks.len() * 32,
            Repr::Packed {
                syms,
                majors,
                scheme,
                ..
            } => {
                let base = syms.size_bits() + majors.len() * 32;
                match scheme {
                    Scheme::OneLevel { elem } => base + elem.size_bits(),
                    Scheme::TwoLevel { minors, .. } => base + minors.size_bits(),
                }
            }
        }
    }
}

#[inline]
fn ones_before(bits: &[u64], blocks: &[u32], p: usize) -> u32 {
    let word = p / 64;
    let block = word / BITS_BLOCK_WORDS;
    let mut acc = blocks[block];
    for w in block * BITS_BLOCK_WORDS..word {
        acc += bits[w].count_ones();
    }
    if p % 64 != 0 {
        acc += (bits[word] & ((1u64 << (p % 64)) - 1)).count_ones();
    }
    acc
}
