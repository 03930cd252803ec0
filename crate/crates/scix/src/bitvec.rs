//! Plain bit vectors with constant-time rank and near-constant-time select.
//!
//! The directory kept on top of the raw words is small: a u32 cumulative
//! popcount per 512-bit superblock (anchored by a u64 count per 2^32 bits
//! so the u32 entries cannot overflow), plus a u32 superblock hint per
//! 4096 set (respectively unset) bits that bounds the binary search done
//! by select. Altogether that is about 7% of the payload.
//!
//! Conventions, used consistently by every structure built on top:
//! `rank1(i)` counts set bits among the first `i` bits (so `i` ranges over
//! `0..=len`), `select1(k)` returns the 1-based position of the k-th set
//! bit, and `get(i)` takes a 0-based index into the raw bits.

use crate::serial::*;
use crate::{Error, Result};
use std::io::{Read, Write};

const SB_BITS: usize = 512;
const SB_WORDS: usize = SB_BITS / 64;
const SB_PER_L0: usize = (1usize << 32) / SB_BITS;
const SELECT_SAMPLE: usize = 4096;

/// Position (0-based) of the `k`-th (1-based) set bit of `w`.
#[inline]
pub fn select_in_word(w: u64, k: u32) -> u32 {
    debug_assert!(k >= 1 && k <= w.count_ones());
    let mut rem = k;
    let mut cur = w;
    let mut base = 0u32;
    loop {
        let c = (cur & 0xff).count_ones();
        if rem <= c {
            break;
        }
        rem -= c;
        cur >>= 8;
        base += 8;
    }
    let mut b = cur & 0xff;
    loop {
        if rem == 1 {
            return base + b.trailing_zeros();
        }
        rem -= 1;
        b &= b - 1;
    }
}

/// Append-or-poke construction buffer for [`BitVector`].
#[derive(Debug, Clone, Default)]
pub struct BitVectorBuilder {
    words: Vec<u64>,
    len: usize,
}

impl BitVectorBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        BitVectorBuilder {
            words: Vec::with_capacity((bits + 63) / 64),
            len: 0,
        }
    }

    /// A fixed-length buffer of `len` clear bits, to be filled with [`set`].
    ///
    /// [`set`]: BitVectorBuilder::set
    pub fn zeros(len: usize) -> Self {
        BitVectorBuilder {
            words: vec![0; (len + 63) / 64],
            len,
        }
    }

    #[inline]
    pub fn push(&mut self, bit: bool) {
        let w = self.len >> 6;
        if w == self.words.len() {
            self.words.push(0);
        }
        if bit {
            self.words[w] |= 1u64 << (self.len & 63);
        }
        self.len += 1;
    }

    /// Sets bit `i` (0-based). The builder must already span `i`.
    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] |= 1u64 << (i & 63);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn build(self) -> BitVector {
        BitVector::from_parts(self.words, self.len)
    }
}

/// An immutable bit vector with rank/select support.
#[derive(Debug, Clone)]
pub struct BitVector {
    len: usize,
    ones: usize,
    words: Vec<u64>,
    /// Set bits before each 2^32-bit block.
    l0: Vec<u64>,
    /// Set bits from the enclosing l0 block start to each 512-bit superblock.
    sb: Vec<u32>,
    /// Superblock holding the (q * 4096 + 1)-th set bit, plus a sentinel.
    hints1: Vec<u32>,
    hints0: Vec<u32>,
}

impl BitVector {
    pub fn from_bools(bits: &[bool]) -> Self {
        let mut b = BitVectorBuilder::with_capacity(bits.len());
        for &bit in bits {
            b.push(bit);
        }
        b.build()
    }

    fn from_parts(mut words: Vec<u64>, len: usize) -> Self {
        assert_eq!(words.len(), (len + 63) / 64);
        assert!(len < (1usize << 40), "bit vector too long for the directory layout");
        if len & 63 != 0 {
            let last = words.len() - 1;
            words[last] &= (1u64 << (len & 63)) - 1;
        }
        let top_sb = len >> 9;
        let mut l0: Vec<u64> = Vec::with_capacity((len >> 32) + 1);
        let mut sb: Vec<u32> = Vec::with_capacity(top_sb + 1);
        let mut abs = 0u64;
        for j in 0..=top_sb {
            if j & (SB_PER_L0 - 1) == 0 {
                l0.push(abs);
            }
            sb.push((abs - l0.last().unwrap()) as u32);
            let ws = j * SB_WORDS;
            let we = (ws + SB_WORDS).min(words.len());
            for w in &words[ws.min(words.len())..we] {
                abs += w.count_ones() as u64;
            }
        }
        let ones = abs as usize;
        let zeros = len - ones;

        let abs_ones_at = |s: usize| -> u64 { l0[s >> 23] + sb[s] as u64 };
        let mut hints1 = Vec::with_capacity(ones / SELECT_SAMPLE + 2);
        let mut hints0 = Vec::with_capacity(zeros / SELECT_SAMPLE + 2);
        let mut next1 = 1u64;
        let mut next0 = 1u64;
        for s in 0..=top_sb {
            let through1 = if s == top_sb { ones as u64 } else { abs_ones_at(s + 1) };
            while next1 <= through1 {
                hints1.push(s as u32);
                next1 += SELECT_SAMPLE as u64;
            }
            let through0 = if s == top_sb {
                zeros as u64
            } else {
                (s as u64 + 1) * SB_BITS as u64 - abs_ones_at(s + 1)
            };
            while next0 <= through0 {
                hints0.push(s as u32);
                next0 += SELECT_SAMPLE as u64;
            }
        }
        hints1.push(top_sb as u32);
        hints0.push(top_sb as u32);

        BitVector {
            len,
            ones,
            words,
            l0,
            sb,
            hints1,
            hints0,
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
    pub fn count_ones(&self) -> usize {
        self.ones
    }

    #[inline]
    pub fn count_zeros(&self) -> usize {
        self.len - self.ones
    }

    /// Bit at 0-based position `i`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Set bits among the first `i` bits, `0 <= i <= len`.
    #[inline]
    pub fn rank1(&self, i: usize) -> usize {
        debug_assert!(i <= self.len);
        let mut r = self.l0[i >> 32] + self.sb[i >> 9] as u64;
        let we = i >> 6;
        for wi in (i >> 9) * SB_WORDS..we {
            r += self.words[wi].count_ones() as u64;
        }
        let tail = i & 63;
        if tail != 0 {
            r += (self.words[we] << (64 - tail)).count_ones() as u64;
        }
        r as usize
    }

    /// Clear bits among the first `i` bits.
    #[inline]
    pub fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }

    #[inline]
    fn abs_ones(&self, s: usize) -> u64 {
        self.l0[s >> 23] + self.sb[s] as u64
    }

    /// 1-based position of the `k`-th set bit, `1 <= k <= count_ones()`.
    pub fn select1(&self, k: usize) -> usize {
        assert!(
            k >= 1 && k <= self.ones,
            "select1({k}) out of range, vector has {} set bits",
            self.ones
        );
        let k64 = k as u64;
        let q = (k - 1) / SELECT_SAMPLE;
        let mut lo = self.hints1[q] as usize;
        let mut hi = self.hints1[q + 1] as usize;
        while lo < hi {
            let mid = lo + (hi - lo + 1) / 2;
            if self.abs_ones(mid) < k64 {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        let mut rem = (k64 - self.abs_ones(lo)) as u32;
        let ws = lo * SB_WORDS;
        let we = (ws + SB_WORDS).min(self.words.len());
        for wi in ws..we {
            let c = self.words[wi].count_ones();
            if rem <= c {
                return wi * 64 + select_in_word(self.words[wi], rem) as usize + 1;
            }
            rem -= c;
        }
        unreachable!("select1 directory out of sync");
    }

    /// 1-based position of the `k`-th clear bit, `1 <= k <= count_zeros()`.
    pub fn select0(&self, k: usize) -> usize {
        assert!(
            k >= 1 && k <= self.len - self.ones,
            "select0({k}) out of range, vector has {} clear bits",
            self.len - self.ones
        );
        let k64 = k as u64;
        let q = (k - 1) / SELECT_SAMPLE;
        let mut lo = self.hints0[q] as usize;
        let mut hi = self.hints0[q + 1] as usize;
        while lo < hi {
            let mid = lo + (hi - lo + 1) / 2;
            if (mid as u64) * SB_BITS as u64 - self.abs_ones(mid) < k64 {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        let mut rem = (k64 - (lo as u64 * SB_BITS as u64 - self.abs_ones(lo))) as u32;
        let ws = lo * SB_WORDS;
        let we = (ws + SB_WORDS).min(self.words.len());
        for wi in ws..we {
            let inv = !self.words[wi];
            let c = inv.count_ones();
            if rem <= c {
                // In the final partial word the inverted tail shows phantom
                // zeros past `len`, but `k <= count_zeros()` keeps `rem`
                // within the real ones of `inv`, which sit below them.
                return wi * 64 + select_in_word(inv, rem) as usize + 1;
            }
            rem -= c;
        }
        unreachable!("select0 directory out of sync");
    }

    /// Bytes of raw bit payload (excluding the rank/select directory).
    pub fn payload_bytes(&self) -> usize {
        (self.len + 7) / 8
    }

    /// Bytes spent on the rank/select directory.
    pub fn directory_bytes(&self) -> usize {
        self.l0.len() * 8 + self.sb.len() * 4 + self.hints1.len() * 4 + self.hints0.len() * 4
    }

    pub fn size_bytes(&self) -> usize {
        self.words.len() * 8 + self.directory_bytes()
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        write_magic(w, b"SBV1")?;
        write_u64(w, self.len as u64)?;
        write_u64_slice(w, &self.words)?;
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        expect_magic(r, b"SBV1", "bit vector")?;
        let len = read_len(r, LEN_CAP, "bit vector length")?;
        let words = read_u64_vec(r, LEN_CAP / 64 + 1, "bit vector words")?;
        if words.len() != (len + 63) / 64 {
            return Err(Error::Corrupt(format!(
                "bit vector: {} words for {len} bits",
                words.len()
            )));
        }
        Ok(Self::from_parts(words, len))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn naive_checks(bits: &[bool], bv: &BitVector) {
        assert_eq!(bv.len(), bits.len());
        let ones: usize = bits.iter().filter(|&&b| b).count();
        assert_eq!(bv.count_ones(), ones);
        let mut r1 = 0usize;
        let mut sel1 = Vec::new();
        let mut sel0 = Vec::new();
        for (i, &b) in bits.iter().enumerate() {
            assert_eq!(bv.rank1(i), r1, "rank1({i})");
            assert_eq!(bv.rank0(i), i - r1);
            assert_eq!(bv.get(i), b);
            if b {
                sel1.push(i + 1);
                r1 += 1;
            } else {
                sel0.push(i + 1);
            }
        }
        assert_eq!(bv.rank1(bits.len()), ones);
        for (k, &p) in sel1.iter().enumerate() {
            assert_eq!(bv.select1(k + 1), p, "select1({})", k + 1);
        }
        for (k, &p) in sel0.iter().enumerate() {
            assert_eq!(bv.select0(k + 1), p, "select0({})", k + 1);
        }
    }

    #[test]
    fn four_bit_example() {
        let bv = BitVector::from_bools(&[true, false, true, true]);
        assert_eq!(bv.rank0(3), 1);
        assert_eq!(bv.select1(2), 3);
        assert_eq!(bv.rank1(4), 3);
        assert_eq!(bv.select0(1), 2);
    }

    #[test]
    fn select_in_word_all_patterns() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let w: u64 = rng.gen();
            let mut k = 0;
            for bit in 0..64 {
                if (w >> bit) & 1 == 1 {
                    k += 1;
                    assert_eq!(select_in_word(w, k), bit);
                }
            }
        }
        assert_eq!(select_in_word(1, 1), 0);
        assert_eq!(select_in_word(u64::MAX, 64), 63);
        assert_eq!(select_in_word(1u64 << 63, 1), 63);
    }

    #[test]
    fn sizes_against_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for len in [0usize, 1, 2, 63, 64, 65, 127, 511, 512, 513, 1000, 4095, 4096, 4097, 20000] {
            for density in [0.0, 0.02, 0.5, 0.98, 1.0] {
                let bits: Vec<bool> = (0..len).map(|_| rng.gen_bool(density)).collect();
                let bv = BitVector::from_bools(&bits);
                naive_checks(&bits, &bv);
            }
        }
    }

    #[test]
    fn large_sparse_and_dense() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let len = 300_000;
        let bits: Vec<bool> = (0..len).map(|_| rng.gen_bool(0.001)).collect();
        let bv = BitVector::from_bools(&bits);
        let ones: Vec<usize> = bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i + 1))
            .collect();
        for (k, &p) in ones.iter().enumerate() {
            assert_eq!(bv.select1(k + 1), p);
        }
        for i in (0..=len).step_by(977) {
            let expect = bits[..i].iter().filter(|&&b| b).count();
            assert_eq!(bv.rank1(i), expect);
        }
        let bits: Vec<bool> = (0..len).map(|_| rng.gen_bool(0.999)).collect();
        let bv = BitVector::from_bools(&bits);
        let zeros: Vec<usize> = bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| (!b).then_some(i + 1))
            .collect();
        for (k, &p) in zeros.iter().enumerate() {
            assert_eq!(bv.select0(k + 1), p);
        }
    }

    #[test]
    fn builder_zeros_then_set() {
        let mut b = BitVectorBuilder::zeros(1000);
        for i in (0..1000).step_by(37) {
            b.set(i);
        }
        let bv = b.build();
        assert_eq!(bv.count_ones(), (1000 + 36) / 37);
        assert_eq!(bv.select1(1), 1);
        assert_eq!(bv.select1(2), 38);
        assert!(bv.get(37) && !bv.get(36));
    }

    #[test]
    fn directory_overhead_is_small() {
        let bits: Vec<bool> = (0..1_000_000).map(|i| i % 3 == 0).collect();
        let bv = BitVector::from_bools(&bits);
        assert!(
            (bv.directory_bytes() as f64) <= 0.25 * bv.payload_bytes() as f64,
            "directory {} bytes vs payload {} bytes",
            bv.directory_bytes(),
            bv.payload_bytes()
        );
    }

    #[test]
    fn serialization_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let bits: Vec<bool> = (0..777).map(|_| rng.gen_bool(0.3)).collect();
        let bv = BitVector::from_bools(&bits);
        let mut buf = Vec::new();
        bv.write_to(&mut buf).unwrap();
        let back = BitVector::read_from(&mut buf.as_slice()).unwrap();
        naive_checks(&bits, &back);
        let mut buf2 = Vec::new();
        back.write_to(&mut buf2).unwrap();
        assert_eq!(buf, buf2);
    }

    #[test]
    fn rejects_corrupt_input() {
        let bv = BitVector::from_bools(&[true; 70]);
        let mut buf = Vec::new();
        bv.write_to(&mut buf).unwrap();
        buf[0] = b'X';
        assert!(BitVector::read_from(&mut buf.as_slice()).is_err());
        let mut buf2 = Vec::new();
        bv.write_to(&mut buf2).unwrap();
        buf2.truncate(buf2.len() - 4);
        assert!(BitVector::read_from(&mut buf2.as_slice()).is_err());
    }
}
