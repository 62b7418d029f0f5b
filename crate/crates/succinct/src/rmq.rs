//! Range-minimum index that stores no keys.
//!
//! The key array is encoded as the balanced-parentheses sequence produced by
//! the left-to-right Cartesian-tree stack process: each element writes one
//! ')' per strictly-greater element popped from the right spine, then one
//! '('. Range-minimum queries become leftmost-minimum-excess searches on the
//! parenthesis sequence, answered by per-word summaries, per-superblock
//! minima and a sparse table over superblocks. Answers therefore depend only
//! on the Cartesian tree of the input, with ties resolved to the leftmost
//! minimum.

const SB_WORDS: usize = 64;
const RANK_BLOCK_WORDS: usize = 8;
const SEL_SAMPLE: usize = 256;

#[derive(Clone, Debug)]
pub struct RmqIndex {
    n: usize,
    bp_len: usize,
    bp: Vec<u64>,
    /// Per-word excess delta and in-word minimum relative to word start.
    deltas: Vec<i16>,
    word_min: Vec<i16>,
    /// Absolute excess before each superblock, and its absolute minimum.
    sb_abs: Vec<i32>,
    sb_min: Vec<i32>,
    /// Doubling table over superblock minima; ties keep the leftmost.
    sparse: Vec<Vec<(i32, u32)>>,
    /// Ones (open parens) before each 8-word block.
    rank_blocks: Vec<u32>,
    /// Bit position of every 256th open paren.
    sel_samples: Vec<u32>,
}

impl RmqIndex {
    /// Index reporting the leftmost position of the minimum key.
    pub fn new_min(keys: &[u32]) -> Self {
        Self::build(keys.iter().map(|&k| k as i64))
    }

    /// Index reporting the leftmost position of the maximum key.
    pub fn new_max(keys: &[u32]) -> Self {
        Self::build(keys.iter().map(|&k| -(k as i64)))
    }

    fn build(keys: impl Iterator<Item = i64>) -> Self {
        let keys: Vec<i64> = keys.collect();
        let n = keys.len();
        assert!(n >= 1, "rmq over an empty array");
        let mut bp: Vec<u64> = Vec::with_capacity(2 * n / 64 + 1);
        let mut bp_len = 0usize;
        fn push_bit(bp: &mut Vec<u64>, bp_len: &mut usize, b: bool) {
            if *bp_len % 64 == 0 {
                bp.push(0);
            }
            if b {
                bp[*bp_len / 64] |= 1 << (*bp_len % 64);
            }
            *bp_len += 1;
        }
        let mut stack: Vec<i64> = Vec::new();
        for &k in &keys {
            while stack.last().is_some_and(|&t| t > k) {
                stack.pop();
                push_bit(&mut bp, &mut bp_len, false);
            }
            stack.push(k);
            push_bit(&mut bp, &mut bp_len, true);
        }

        let nwords = bp.len();
        let mut deltas = Vec::with_capacity(nwords);
        let mut word_min = Vec::with_capacity(nwords);
        let nsb = nwords.div_ceil(SB_WORDS);
        let mut sb_abs = Vec::with_capacity(nsb);
        let mut sb_min = vec![i32::MAX; nsb];
        let mut rank_blocks = Vec::with_capacity(nwords / RANK_BLOCK_WORDS + 1);
        let mut sel_samples = Vec::new();

        let mut exc = 0i32;
        let mut ones = 0u32;
        for (w, &word) in bp.iter().enumerate() {
            if w % SB_WORDS == 0 {
                sb_abs.push(exc);
            }
            if w % RANK_BLOCK_WORDS == 0 {
                rank_blocks.push(ones);
            }
            let valid = if (w + 1) * 64 <= bp_len { 64 } else { bp_len % 64 };
            let mut d = 0i32;
            let mut mn = i32::MAX;
            for b in 0..valid {
                if (word >> b) & 1 == 1 {
                    if ones as usize % SEL_SAMPLE == 0 {
                        sel_samples.push((w * 64 + b) as u32);
                    }
                    ones += 1;
                    d += 1;
                } else {
                    d -= 1;
                }
                mn = mn.min(d);
            }
            deltas.push(d as i16);
            word_min.push(mn as i16);
            let sb = w / SB_WORDS;
            sb_min[sb] = sb_min[sb].min(exc + mn);
            exc += d;
        }
        rank_blocks.push(ones);

        // Sparse table over superblock minima, leftmost on ties.
        let mut sparse: Vec<Vec<(i32, u32)>> = Vec::new();
        let level0: Vec<(i32, u32)> = sb_min
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i as u32))
            .collect();
        sparse.push(level0);
        let mut span = 1;
        while 2 * span <= nsb {
            let prev = sparse.last().unwrap();
            let mut next = Vec::with_capacity(nsb - 2 * span + 1);
            for i in 0..=nsb - 2 * span {
                let a = prev[i];
                let b = prev[i + span];
                next.push(if a.0 <= b.0 { a } else { b });
            }
            sparse.push(next);
            span *= 2;
        }

        RmqIndex {
            n,
            bp_len,
            bp,
            deltas,
            word_min,
            sb_abs,
            sb_min,
            sparse,
            rank_blocks,
            sel_samples,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Leftmost position of the minimum (or maximum, for `new_max`) key in
    /// the closed index range `[i, j]`.
    pub fn rmq(&self, i: usize, j: usize) -> usize {
        assert!(i <= j && j < self.n, "rmq range [{i},{j}] invalid for n={}", self.n);
        let a = self.open_pos(i);
        let b = self.open_pos(j);
        let (pos, _) = self.min_excess(a, b);
        if self.bit(pos) {
            self.rank1_inclusive(pos) - 1
        } else {
            // Leftmost min excess at a close paren: the answering element is
            // the very next open paren.
            self.rank1_inclusive(pos)
        }
    }

    #[inline]
    fn bit(&self, p: usize) -> bool {
        (self.bp[p / 64] >> (p % 64)) & 1 == 1
    }

    /// Bit position of the `i`-th open paren (0-based).
    fn open_pos(&self, i: usize) -> usize {
        let sample = i / SEL_SAMPLE;
        let start = self.sel_samples[sample] as usize;
        let mut need = (i - sample * SEL_SAMPLE) as u32;
        let mut w = start / 64;
        let mut word = self.bp[w] >> (start % 64) << (start % 64);
        loop {
            let c = word.count_ones();
            if c > need {
                let mut x = word;
                for _ in 0..need {
                    x &= x - 1;
                }
                return w * 64 + x.trailing_zeros() as usize;
            }
            need -= c;
            w += 1;
            word = self.bp[w];
        }
    }

    /// Open parens in `[0, p]`.
    fn rank1_inclusive(&self, p: usize) -> usize {
        let word = (p + 1) / 64;
        let block = word / RANK_BLOCK_WORDS;
        let mut acc = self.rank_blocks[block] as usize;
        for w in block * RANK_BLOCK_WORDS..word {
            acc += self.bp[w].count_ones() as usize;
        }
        let rem = (p + 1) % 64;
        if rem != 0 {
            acc += (self.bp[word] & ((1u64 << rem) - 1)).count_ones() as usize;
        }
        acc
    }

    /// Excess after the bits `[0, p)`.
    fn excess_before(&self, p: usize) -> i32 {
        let word = p / 64;
        let sb = word / SB_WORDS;
        let mut exc = self.sb_abs[sb];
        for w in sb * SB_WORDS..word {
            exc += self.deltas[w] as i32;
        }
        let rem = p % 64;
        if rem != 0 {
            let ones = (self.bp[word] & ((1u64 << rem) - 1)).count_ones() as i32;
            exc += 2 * ones - rem as i32;
        }
        exc
    }

    /// Leftmost position in `[a, b]` minimizing excess-after-bit, together
    /// with that minimum.
    fn min_excess(&self, a: usize, b: usize) -> (usize, i32) {
        debug_assert!(a <= b && b < self.bp_len);
        let wa = a / 64;
        let wb = b / 64;
        let exc_a = self.excess_before(a);
        if wa == wb {
            return self.scan_word(wa, a % 64, b % 64, exc_a);
        }
        let (mut best_pos, mut best) = self.scan_word(wa, a % 64, 63, exc_a);
        let mut exc = exc_a;
        {
            // Excess after finishing word wa.
            let rem = a % 64;
            let tail = self.bp[wa] >> rem;
            let len = 64 - rem;
            exc += 2 * tail.count_ones() as i32 - len as i32;
        }

        let mut w = wa + 1;
        // Words up to the next superblock boundary (or wb).
        while w < wb && w % SB_WORDS != 0 {
            let m = exc + self.word_min[w] as i32;
            if m < best {
                let (p, mm) = self.scan_word(w, 0, 63, exc);
                debug_assert_eq!(mm, m);
                best = m;
                best_pos = p;
            }
            exc += self.deltas[w] as i32;
            w += 1;
        }
        // Whole superblocks fully contained in [w, wb), via the sparse table.
        if w < wb && w % SB_WORDS == 0 {
            let s1 = w / SB_WORDS;
            let s2m = wb / SB_WORDS; // superblocks [s1, s2m) are fully inside
            if s2m > s1 {
                let (m, sb) = self.sparse_min(s1, s2m - 1);
                if m < best {
                    // Descend: find the first word in sb achieving m.
                    let mut e = self.sb_abs[sb];
                    let w0 = sb * SB_WORDS;
                    for wi in w0..((w0 + SB_WORDS).min(self.deltas.len())) {
                        if e + (self.word_min[wi] as i32) == m {
                            let (p, _) = self.scan_word(wi, 0, 63, e);
                            best = m;
                            best_pos = p;
                            break;
                        }
                        e += self.deltas[wi] as i32;
                    }
                }
                exc = self.sb_abs[s2m];
                w = s2m * SB_WORDS;
            }
        }
        // Remaining whole words before wb.
        while w < wb {
            let m = exc + self.word_min[w] as i32;
            if m < best {
                let (p, _) = self.scan_word(w, 0, 63, exc);
                best = m;
                best_pos = p;
            }
            exc += self.deltas[w] as i32;
            w += 1;
        }
        // Final partial word.
        let (p, m) = self.scan_word(wb, 0, b % 64, exc);
        if m < best {
            best = m;
            best_pos = p;
        }
        (best_pos, best)
    }

    fn sparse_min(&self, s1: usize, s2: usize) -> (i32, usize) {
        let len = s2 - s1 + 1;
        let k = usize::BITS as usize - 1 - len.leading_zeros() as usize;
        let a = self.sparse[k][s1];
        let b = self.sparse[k][s2 + 1 - (1 << k)];
        if a.0 <= b.0 {
            (a.0, a.1 as usize)
        } else {
            (b.0, b.1 as usize)
        }
    }

    /// Scan bits `[from, to]` of word `w`; `exc` is the excess before `from`.
    fn scan_word(&self, w: usize, from: usize, to: usize, exc: i32) -> (usize, i32) {
        let word = self.bp[w];
        let mut e = exc;
        let mut best = i32::MAX;
        let mut pos = w * 64 + from;
        for b in from..=to {
            e += if (word >> b) & 1 == 1 { 1 } else { -1 };
            if e < best {
                best = e;
                pos = w * 64 + b;
            }
        }
        (pos, best)
    }

    pub fn size_bits(&self) -> usize {
        self.bp.len() * 64
            + (self.deltas.len() + self.word_min.len()) * 16
            + (self.sb_abs.len() + self.sb_min.len()) * 32
            + self.sparse.iter().map(|l| l.len() * 64).sum::<usize>()
            + self.rank_blocks.len() * 32
            + self.sel_samples.len() * 32
    }
}
