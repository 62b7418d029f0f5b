//! Packed-word arrays and broadword (SWAR) field arithmetic.
//!
//! Fields of a fixed width are packed left-to-right inside 64-bit words
//! without straddling word boundaries, so `floor(64 / width)` items live in
//! each word and whole words can be compared in parallel. The comparison
//! helpers require a clear guard bit at the top of every field (values must
//! stay below `2^(width-1)`); packing widths are chosen by callers so that
//! the guard is free.

/// `ceil(log2(x))` for `x >= 1`; 0 for `x <= 1`.
#[inline]
pub fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

#[inline]
pub fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Repeat the low `width` bits of `v` in every field of a word.
#[inline]
pub fn bcast(width: u32, v: u64) -> u64 {
    debug_assert!(width >= 1 && width <= 64);
    let per = 64 / width;
    let mut out = 0u64;
    for i in 0..per {
        out |= v << (i * width);
    }
    out
}

/// Word with the lowest bit of every field set.
#[inline]
pub fn lsb_mask(width: u32) -> u64 {
    bcast(width, 1)
}

/// Word with the highest (guard) bit of every field set.
#[inline]
pub fn msb_mask(width: u32) -> u64 {
    bcast(width, 1u64 << (width - 1))
}

/// Per-field flags (at guard-bit positions) marking fields of `x` equal to
/// zero. Every field of `x` must have its guard bit clear.
#[inline]
pub fn zero_flags(x: u64, width: u32) -> u64 {
    let msb = msb_mask(width);
    debug_assert_eq!(x & msb, 0, "zero_flags: guard bit set");
    (((x | msb) - lsb_mask(width)) & msb) ^ msb
}

/// Per-field flags marking fields where `a_i <= b_i`. Guard bits of both
/// operands must be clear.
#[inline]
pub fn le_flags(a: u64, b: u64, width: u32) -> u64 {
    let msb = msb_mask(width);
    debug_assert_eq!(a & msb, 0);
    debug_assert_eq!(b & msb, 0);
    ((b | msb) - a) & msb
}

/// Flags limited to the first `m` fields of a word.
#[inline]
pub fn first_fields_mask(width: u32, m: usize) -> u64 {
    let per = (64 / width) as usize;
    debug_assert!(m <= per);
    let msb = msb_mask(width);
    if m == per {
        msb
    } else {
        msb & ((1u64 << (m as u32 * width)) - 1)
    }
}

/// A packed array of fixed-width fields, `floor(64/width)` per word.
#[derive(Clone, Debug, Default)]
pub struct PackedVec {
    words: Vec<u64>,
    width: u32,
    len: usize,
}

impl PackedVec {
    pub fn new(width: u32) -> Self {
        assert!((1..=32).contains(&width), "field width {width} unsupported");
        PackedVec {
            words: Vec::new(),
            width,
            len: 0,
        }
    }

    pub fn with_capacity(width: u32, items: usize) -> Self {
        let mut v = PackedVec::new(width);
        v.words
            .reserve(ceil_div(items, (64 / width) as usize));
        v
    }

    #[inline]
    pub fn width(&self) -> u32 {
        self.width
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn per_word(&self) -> usize {
        (64 / self.width) as usize
    }

    #[inline]
    pub fn push(&mut self, v: u64) {
        debug_assert!(self.width == 64 || v < (1u64 << self.width), "value too wide");
        let per = self.per_word();
        let (w, o) = (self.len / per, self.len % per);
        if o == 0 {
            self.words.push(0);
        }
        self.words[w] |= v << (o as u32 * self.width);
        self.len += 1;
    }

    #[inline]
    pub fn get(&self, i: usize) -> u64 {
        debug_assert!(i < self.len);
        let per = self.per_word();
        let (w, o) = (i / per, i % per);
        (self.words[w] >> (o as u32 * self.width)) & field_mask(self.width)
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: u64) {
        debug_assert!(i < self.len);
        let per = self.per_word();
        let (w, o) = (i / per, i % per);
        let sh = o as u32 * self.width;
        self.words[w] = (self.words[w] & !(field_mask(self.width) << sh)) | (v << sh);
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Count fields equal to `sym` among the first `m` items of word `w`.
    /// Requires a clear guard bit (callers pack symbols one bit wider).
    #[inline]
    pub fn count_eq_in_word(&self, w: usize, sym: u64, m: usize) -> u32 {
        let x = self.words[w] ^ bcast(self.width, sym);
        (zero_flags(x, self.width) & first_fields_mask(self.width, m)).count_ones()
    }

    /// Count items equal to `sym` in the index range `[from, to)`, scanning
    /// whole words broadword-parallel. Guard-bit requirement as above.
    pub fn count_eq_in_range(&self, from: usize, to: usize, sym: u64) -> u32 {
        debug_assert!(from <= to && to <= self.len);
        if from == to {
            return 0;
        }
        let per = self.per_word();
        let (wf, of) = (from / per, from % per);
        let (wt, ot) = (to / per, to % per);
        if wf == wt {
            let head = self.count_eq_in_word(wf, sym, ot);
            let skipped = self.count_eq_in_word(wf, sym, of);
            return head - skipped;
        }
        let mut total = self.count_eq_in_word(wf, sym, per) - self.count_eq_in_word(wf, sym, of);
        for w in wf + 1..wt {
            total += self.count_eq_in_word(w, sym, per);
        }
        if ot > 0 {
            total += self.count_eq_in_word(wt, sym, ot);
        }
        total
    }

    pub fn size_bits(&self) -> usize {
        self.words.len() * 64
    }
}

#[inline]
pub fn field_mask(width: u32) -> u64 {
    if width == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packed_roundtrip_various_widths() {
        for width in [1u32, 3, 5, 7, 11, 16, 21, 32] {
            let cap = if width == 1 { 1 } else { 1u64 << (width - 1) };
            let vals: Vec<u64> = (0..200u64).map(|i| (i * 2654435761) % cap).collect();
            let mut pv = PackedVec::new(width);
            for &v in &vals {
                pv.push(v);
            }
            for (i, &v) in vals.iter().enumerate() {
                assert_eq!(pv.get(i), v, "width {width} index {i}");
            }
        }
    }

    #[test]
    fn zero_and_le_flags_match_naive() {
        for width in [4u32, 6, 9, 16] {
            let per = (64 / width) as usize;
            let cap = 1u64 << (width - 1);
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = move || {
                state ^= state << 7;
                state ^= state >> 9;
                state
            };
            for _ in 0..200 {
                let a_vals: Vec<u64> = (0..per).map(|_| next() % cap).collect();
                let b_vals: Vec<u64> = (0..per).map(|_| next() % cap).collect();
                let mut a = 0u64;
                let mut b = 0u64;
                for i in 0..per {
                    a |= a_vals[i] << (i as u32 * width);
                    b |= b_vals[i] << (i as u32 * width);
                }
                let zf = zero_flags(a, width);
                let lf = le_flags(a, b, width);
                for i in 0..per {
                    let bit = 1u64 << (i as u32 * width + width - 1);
                    assert_eq!(zf & bit != 0, a_vals[i] == 0);
                    assert_eq!(lf & bit != 0, a_vals[i] <= b_vals[i]);
                }
            }
        }
    }

    #[test]
    fn count_eq_in_word_counts_prefix() {
        let mut pv = PackedVec::new(4);
        let syms = [1u64, 2, 1, 1, 3, 1, 2, 1];
        for &s in &syms {
            pv.push(s);
        }
        for m in 0..=syms.len() {
            let naive = syms[..m].iter().filter(|&&s| s == 1).count() as u32;
            assert_eq!(pv.count_eq_in_word(0, 1, m), naive);
        }
    }

    #[test]
    fn ceil_log2_small_values() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(3), 2);
        assert_eq!(ceil_log2(4), 2);
        assert_eq!(ceil_log2(5), 3);
        assert_eq!(ceil_log2(1 << 20), 20);
    }
}
