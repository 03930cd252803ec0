//! Pointerless levelwise wavelet trees.
//!
//! Symbols are integers in `0..sigma`, coded in `L = ceil(log2 sigma)`
//! bits. Level `d` stores, for every position, bit `L-1-d` of the symbol
//! sitting there after stable partitioning by the higher bits, so the
//! children of the node spanning positions `[lo, hi)` occupy the same
//! span on the next level (left child first). No node pointers or symbol
//! boundaries are stored; everything is recovered with rank.
//!
//! The payload is exactly `n * L` bits; rank/select directories add ~7%.

use crate::bitvec::{BitVector, BitVectorBuilder};
use crate::serial::*;
use crate::{Error, Result};
use std::io::{Read, Write};

#[derive(Debug, Clone)]
pub struct WaveletTree {
    len: usize,
    sigma: u64,
    levels: Vec<BitVector>,
}

impl WaveletTree {
    /// Builds from a symbol sequence; every symbol must be `< sigma`.
    pub fn from_symbols(syms: &[u64], sigma: u64) -> Self {
        assert!(sigma >= 1, "alphabet must have at least one symbol");
        debug_assert!(syms.iter().all(|&s| s < sigma));
        let nlev = levels_for(sigma);
        let mut levels = Vec::with_capacity(nlev);
        let mut cur: Vec<u64> = syms.to_vec();
        let mut next: Vec<u64> = Vec::with_capacity(syms.len());
        for d in 0..nlev {
            let shift = nlev - 1 - d;
            let mut bits = BitVectorBuilder::with_capacity(cur.len());
            for &s in &cur {
                bits.push((s >> shift) & 1 == 1);
            }
            levels.push(bits.build());
            if d + 1 == nlev {
                break;
            }
            // Stable partition by the bit just emitted, separately inside
            // each node. At this level a node is a maximal run of equal
            // higher bits, and runs are contiguous because `cur` is stably
            // sorted by those bits.
            next.clear();
            let pshift = shift + 1;
            let prefix_of = |s: u64| if pshift >= 64 { 0 } else { s >> pshift };
            let mut start = 0usize;
            while start < cur.len() {
                let key = prefix_of(cur[start]);
                let mut end = start + 1;
                while end < cur.len() && prefix_of(cur[end]) == key {
                    end += 1;
                }
                next.extend(cur[start..end].iter().filter(|&&s| (s >> shift) & 1 == 0));
                next.extend(cur[start..end].iter().filter(|&&s| (s >> shift) & 1 == 1));
                start = end;
            }
            std::mem::swap(&mut cur, &mut next);
        }
        WaveletTree {
            len: syms.len(),
            sigma,
            levels,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn sigma(&self) -> u64 {
        self.sigma
    }

    #[inline]
    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    /// Symbol at 0-based position `i`.
    pub fn access(&self, i: usize) -> u64 {
        debug_assert!(i < self.len);
        let mut lo = 0usize;
        let mut hi = self.len;
        let mut pos = i;
        let mut sym = 0u64;
        for bv in &self.levels {
            let ones_lo = bv.rank1(lo);
            let zeros_node = (hi - lo) - (bv.rank1(hi) - ones_lo);
            if bv.get(pos) {
                let ones_before = bv.rank1(pos) - ones_lo;
                sym = (sym << 1) | 1;
                pos = lo + zeros_node + ones_before;
                lo += zeros_node;
            } else {
                let zeros_before = (pos - lo) - (bv.rank1(pos) - ones_lo);
                sym <<= 1;
                pos = lo + zeros_before;
                hi = lo + zeros_node;
            }
        }
        sym
    }

    /// Occurrences of `sym` among the first `i` positions, `0 <= i <= len`.
    pub fn rank(&self, sym: u64, i: usize) -> usize {
        debug_assert!(i <= self.len);
        if sym >= self.sigma {
            return 0;
        }
        let nlev = self.levels.len();
        let mut lo = 0usize;
        let mut hi = self.len;
        let mut cnt = i;
        for (d, bv) in self.levels.iter().enumerate() {
            if cnt == 0 {
                return 0;
            }
            let ones_lo = bv.rank1(lo);
            let zeros_node = (hi - lo) - (bv.rank1(hi) - ones_lo);
            let ones_cnt = bv.rank1(lo + cnt) - ones_lo;
            if (sym >> (nlev - 1 - d)) & 1 == 1 {
                cnt = ones_cnt;
                lo += zeros_node;
            } else {
                cnt -= ones_cnt;
                hi = lo + zeros_node;
            }
        }
        cnt
    }

    /// 1-based position of the `k`-th occurrence of `sym`.
    ///
    /// Panics if `sym` occurs fewer than `k` times.
    pub fn select(&self, sym: u64, k: usize) -> usize {
        assert!(k >= 1, "select asks for the k-th occurrence, k >= 1");
        assert!(sym < self.sigma, "symbol {sym} outside alphabet");
        let nlev = self.levels.len();
        let mut lows = Vec::with_capacity(nlev);
        let mut lo = 0usize;
        let mut hi = self.len;
        for (d, bv) in self.levels.iter().enumerate() {
            lows.push(lo);
            let ones_lo = bv.rank1(lo);
            let zeros_node = (hi - lo) - (bv.rank1(hi) - ones_lo);
            if (sym >> (nlev - 1 - d)) & 1 == 1 {
                lo += zeros_node;
            } else {
                hi = lo + zeros_node;
            }
        }
        assert!(
            k <= hi - lo,
            "symbol {sym} occurs {} times, select1 asked for {k}",
            hi - lo
        );
        let mut off = k - 1;
        for d in (0..nlev).rev() {
            let bv = &self.levels[d];
            let node_lo = lows[d];
            let pos = if (sym >> (nlev - 1 - d)) & 1 == 1 {
                bv.select1(bv.rank1(node_lo) + off + 1) - 1
            } else {
                bv.select0(bv.rank0(node_lo) + off + 1) - 1
            };
            off = pos - node_lo;
        }
        off + 1
    }

    /// Symbols strictly smaller than `c` among rows `lo..=hi` (1-based,
    /// inclusive; an empty interval yields 0).
    pub fn count_lt(&self, lo: usize, hi: usize, c: u64) -> usize {
        if lo > hi {
            return 0;
        }
        let mut i = lo - 1;
        let mut j = hi;
        if c >= (1u64 << self.levels.len()) {
            return j - i;
        }
        let nlev = self.levels.len();
        let mut node_lo = 0usize;
        let mut node_hi = self.len;
        let mut acc = 0usize;
        for (d, bv) in self.levels.iter().enumerate() {
            if i >= j {
                return acc;
            }
            let ones_lo = bv.rank1(node_lo);
            let zeros_node = (node_hi - node_lo) - (bv.rank1(node_hi) - ones_lo);
            let ones_i = bv.rank1(i) - ones_lo;
            let ones_j = bv.rank1(j) - ones_lo;
            if (c >> (nlev - 1 - d)) & 1 == 1 {
                acc += (j - i) - (ones_j - ones_i);
                i = node_lo + zeros_node + ones_i;
                j = node_lo + zeros_node + ones_j;
                node_lo += zeros_node;
            } else {
                i = node_lo + (i - node_lo - ones_i);
                j = node_lo + (j - node_lo - ones_j);
                node_hi = node_lo + zeros_node;
            }
        }
        acc
    }

    /// Calls `f(sym, rank_before, freq)` for every distinct symbol in rows
    /// `lo..=hi` (1-based, inclusive), in increasing symbol order.
    /// `rank_before` is the number of occurrences of `sym` in rows `< lo`,
    /// and `freq` the number inside the interval. Runs in time proportional
    /// to the number of distinct symbols times the tree height.
    pub fn range_distinct<F: FnMut(u64, usize, usize)>(&self, lo: usize, hi: usize, f: &mut F) {
        if lo > hi {
            return;
        }
        if self.levels.is_empty() {
            // Single-symbol alphabet.
            f(0, lo - 1, hi - lo + 1);
            return;
        }
        self.distinct_rec(0, 0, self.len, lo - 1, hi, 0, f);
    }

    #[allow(clippy::too_many_arguments)]
    fn distinct_rec<F: FnMut(u64, usize, usize)>(
        &self,
        d: usize,
        node_lo: usize,
        node_hi: usize,
        i: usize,
        j: usize,
        prefix: u64,
        f: &mut F,
    ) {
        if i >= j {
            return;
        }
        if d == self.levels.len() {
            f(prefix, i - node_lo, j - i);
            return;
        }
        let bv = &self.levels[d];
        let ones_lo = bv.rank1(node_lo);
        let zeros_node = (node_hi - node_lo) - (bv.rank1(node_hi) - ones_lo);
        let ones_i = bv.rank1(i) - ones_lo;
        let ones_j = bv.rank1(j) - ones_lo;
        let mid = node_lo + zeros_node;
        self.distinct_rec(
            d + 1,
            node_lo,
            mid,
            node_lo + (i - node_lo - ones_i),
            node_lo + (j - node_lo - ones_j),
            prefix << 1,
            f,
        );
        self.distinct_rec(
            d + 1,
            mid,
            node_hi,
            mid + ones_i,
            mid + ones_j,
            (prefix << 1) | 1,
            f,
        );
    }

    /// Raw payload in bits (`len * levels`).
    pub fn payload_bits(&self) -> usize {
        self.len * self.levels.len()
    }

    pub fn size_bytes(&self) -> usize {
        self.levels.iter().map(|l| l.size_bytes()).sum()
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        write_magic(w, b"SWT1")?;
        write_u64(w, self.len as u64)?;
        write_u64(w, self.sigma)?;
        write_u64(w, self.levels.len() as u64)?;
        for l in &self.levels {
            l.write_to(w)?;
        }
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        expect_magic(r, b"SWT1", "wavelet tree")?;
        let len = read_len(r, LEN_CAP, "wavelet length")?;
        let sigma = read_u64(r)?;
        let nlev = read_len(r, 64, "wavelet levels")?;
        if sigma == 0 || nlev != levels_for(sigma) {
            return Err(Error::Corrupt(format!(
                "wavelet tree: {nlev} levels for alphabet size {sigma}"
            )));
        }
        let mut levels = Vec::with_capacity(nlev);
        for _ in 0..nlev {
            let l = BitVector::read_from(r)?;
            if l.len() != len {
                return Err(Error::Corrupt("wavelet tree: level length mismatch".into()));
            }
            levels.push(l);
        }
        Ok(WaveletTree { len, sigma, levels })
    }
}

fn levels_for(sigma: u64) -> usize {
    if sigma <= 1 {
        0
    } else {
        64 - (sigma - 1).leading_zeros() as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn check_against_naive(syms: &[u64], sigma: u64) {
        let wt = WaveletTree::from_symbols(syms, sigma);
        assert_eq!(wt.len(), syms.len());
        for (i, &s) in syms.iter().enumerate() {
            assert_eq!(wt.access(i), s, "access({i})");
        }
        for sym in 0..sigma {
            let mut seen = 0;
            for i in 0..=syms.len() {
                assert_eq!(wt.rank(sym, i), seen, "rank({sym}, {i})");
                if i < syms.len() && syms[i] == sym {
                    seen += 1;
                    assert_eq!(wt.select(sym, seen), i + 1, "select({sym}, {seen})");
                }
            }
        }
    }

    #[test]
    fn tiny_sequences() {
        check_against_naive(&[], 1);
        check_against_naive(&[0, 0, 0], 1);
        check_against_naive(&[1, 0, 1, 1, 0], 2);
        check_against_naive(&[3, 1, 4, 1, 5, 0, 2, 6], 7);
        check_against_naive(&[2, 2, 2], 5);
    }

    #[test]
    fn random_sequences_various_alphabets() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for sigma in [2u64, 3, 4, 5, 16, 17, 64, 255] {
            let n = 800;
            let syms: Vec<u64> = (0..n).map(|_| rng.gen_range(0..sigma)).collect();
            check_against_naive(&syms, sigma);
        }
    }

    #[test]
    fn count_lt_against_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for sigma in [1u64, 2, 5, 17] {
            let n = 300usize;
            let syms: Vec<u64> = (0..n).map(|_| rng.gen_range(0..sigma)).collect();
            let wt = WaveletTree::from_symbols(&syms, sigma);
            for _ in 0..200 {
                let lo = rng.gen_range(1..=n);
                let hi = rng.gen_range(lo.saturating_sub(2)..=n);
                for c in 0..=sigma + 1 {
                    let expect = if lo > hi {
                        0
                    } else {
                        syms[lo - 1..hi].iter().filter(|&&s| s < c).count()
                    };
                    assert_eq!(wt.count_lt(lo, hi, c), expect, "count_lt({lo},{hi},{c})");
                }
            }
            assert_eq!(wt.count_lt(3, 2, sigma), 0);
        }
    }

    #[test]
    fn range_distinct_against_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for sigma in [1u64, 2, 6, 30] {
            let n = 250usize;
            let syms: Vec<u64> = (0..n).map(|_| rng.gen_range(0..sigma)).collect();
            let wt = WaveletTree::from_symbols(&syms, sigma);
            for _ in 0..100 {
                let lo = rng.gen_range(1..=n);
                let hi = rng.gen_range(lo..=n);
                let mut got = Vec::new();
                wt.range_distinct(lo, hi, &mut |sym, rb, freq| got.push((sym, rb, freq)));
                let mut expect = Vec::new();
                for sym in 0..sigma {
                    let freq = syms[lo - 1..hi].iter().filter(|&&s| s == sym).count();
                    if freq > 0 {
                        let rb = syms[..lo - 1].iter().filter(|&&s| s == sym).count();
                        expect.push((sym, rb, freq));
                    }
                }
                assert_eq!(got, expect);
            }
        }
    }

    #[test]
    fn payload_is_exactly_n_levels() {
        let syms: Vec<u64> = (0..10_000u64).map(|i| i % 17).collect();
        let wt = WaveletTree::from_symbols(&syms, 17);
        assert_eq!(wt.num_levels(), 5);
        assert_eq!(wt.payload_bits(), 50_000);
        let wt16 = WaveletTree::from_symbols(&syms.iter().map(|&s| s % 16).collect::<Vec<_>>(), 16);
        assert_eq!(wt16.num_levels(), 4);
    }

    #[test]
    fn serialization_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let syms: Vec<u64> = (0..500).map(|_| rng.gen_range(0..9)).collect();
        let wt = WaveletTree::from_symbols(&syms, 9);
        let mut buf = Vec::new();
        wt.write_to(&mut buf).unwrap();
        let back = WaveletTree::read_from(&mut buf.as_slice()).unwrap();
        for (i, &s) in syms.iter().enumerate() {
            assert_eq!(back.access(i), s);
        }
        let mut buf2 = Vec::new();
        back.write_to(&mut buf2).unwrap();
        assert_eq!(buf, buf2);
    }
}
