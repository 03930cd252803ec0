//! Fixed-width packed integer vectors.

use crate::serial::*;
use crate::Result;
use std::io::{Read, Write};

/// A vector of unsigned integers stored in `width` bits each, packed
/// back to back in 64-bit words (little-endian within a word, entries
/// may straddle a word boundary).
///
/// `width == 0` is allowed and stores nothing; every entry reads as 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackedIntVec {
    width: usize,
    len: usize,
    words: Vec<u64>,
}

impl PackedIntVec {
    pub fn new(width: usize) -> Self {
        assert!(width <= 64, "entry width {width} exceeds 64 bits");
        PackedIntVec {
            width,
            len: 0,
            words: Vec::new(),
        }
    }

    /// A zero-filled vector of `len` entries.
    pub fn zeros(width: usize, len: usize) -> Self {
        assert!(width <= 64);
        let nwords = if width == 0 {
            0
        } else {
            (len * width + 63) / 64
        };
        PackedIntVec {
            width,
            len,
            words: vec![0; nwords],
        }
    }

    /// Smallest width that can hold `max`.
    pub fn width_for(max: u64) -> usize {
        if max == 0 {
            0
        } else {
            64 - max.leading_zeros() as usize
        }
    }

    pub fn from_slice(width: usize, values: &[u64]) -> Self {
        let mut v = PackedIntVec::new(width);
        v.words.reserve((values.len() * width + 63) / 64);
        for &x in values {
            v.push(x);
        }
        v
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
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn push(&mut self, v: u64) {
        debug_assert!(self.width == 64 || v < (1u64 << self.width), "value {v} too wide");
        if self.width == 0 {
            self.len += 1;
            return;
        }
        let bit = self.len * self.width;
        let need = (bit + self.width + 63) / 64;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
        self.len += 1;
        self.set(self.len - 1, v);
    }

    #[inline]
    pub fn get(&self, i: usize) -> u64 {
        debug_assert!(i < self.len);
        if self.width == 0 {
            return 0;
        }
        read_bits(&self.words, i * self.width, self.width)
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: u64) {
        debug_assert!(i < self.len);
        debug_assert!(self.width == 64 || v < (1u64 << self.width));
        if self.width == 0 {
            return;
        }
        write_bits(&mut self.words, i * self.width, self.width, v);
    }

    /// Heap bytes used by the packed payload.
    pub fn size_bytes(&self) -> usize {
        self.words.len() * 8
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        write_u64(w, self.width as u64)?;
        write_u64(w, self.len as u64)?;
        write_u64_slice(w, &self.words)?;
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        let width = read_len(r, 64, "packed width")?;
        let len = read_len(r, LEN_CAP, "packed len")?;
        let words = read_u64_vec(r, LEN_CAP / 8, "packed words")?;
        let need = if width == 0 { 0 } else { (len * width + 63) / 64 };
        if words.len() != need {
            return Err(crate::Error::Corrupt(format!(
                "packed vector: {} words for len {len} width {width}, expected {need}",
                words.len()
            )));
        }
        Ok(PackedIntVec { width, len, words })
    }
}

/// Reads `width` bits (1..=64) starting at bit offset `bit` from a word
/// arena, LSB-first within words.
#[inline]
pub(crate) fn read_bits(words: &[u64], bit: usize, width: usize) -> u64 {
    let w = bit >> 6;
    let off = bit & 63;
    let mask = if width == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    };
    if off + width <= 64 {
        (words[w] >> off) & mask
    } else {
        ((words[w] >> off) | (words[w + 1] << (64 - off))) & mask
    }
}

/// Writes the low `width` bits (1..=64) of `v` at bit offset `bit`.
#[inline]
pub(crate) fn write_bits(words: &mut [u64], bit: usize, width: usize, v: u64) {
    let w = bit >> 6;
    let off = bit & 63;
    let mask = if width == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    };
    words[w] = (words[w] & !(mask << off)) | ((v & mask) << off);
    if off + width > 64 {
        let spill = 64 - off;
        let hi_mask = mask >> spill;
        words[w + 1] = (words[w + 1] & !hi_mask) | ((v & mask) >> spill);
    }
}
