//! Compressed monotone sequences (high/low bit split).
//!
//! Stores a non-decreasing sequence c_1 <= ... <= c_n in roughly
//! n * (2 + log2(U/n)) bits, U being the last value: the low
//! `l = floor(log2(U/n))` bits of each value go into a packed array, and
//! the high parts become unary gaps in a bit vector where the i-th value
//! contributes a set bit at position (c_i >> l) + i. Random access is one
//! select plus one packed read.

use crate::bitvec::{BitVector, BitVectorBuilder};
use crate::packed::PackedIntVec;
use crate::serial::*;
use crate::{Error, Result};
use std::io::{Read, Write};

#[derive(Debug, Clone)]
pub struct EliasFano {
    n: usize,
    low_bits: usize,
    low: PackedIntVec,
    high: BitVector,
}

impl EliasFano {
    /// Encodes a non-decreasing sequence.
    pub fn from_values(values: &[u64]) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] <= w[1]), "sequence must be non-decreasing");
        let max = values.last().copied().unwrap_or(0);
        Self::from_sorted_iter(values.len(), max, values.iter().copied())
    }

    /// Streaming variant of [`EliasFano::from_values`]: `n` values ending at
    /// `max` (the last and largest value), without materializing a slice.
    pub fn from_sorted_iter<I>(n: usize, max: u64, values: I) -> Self
    where
        I: IntoIterator<Item = u64>,
    {
        if n == 0 {
            return EliasFano {
                n: 0,
                low_bits: 0,
                low: PackedIntVec::new(0),
                high: BitVectorBuilder::new().build(),
            };
        }
        let u = max;
        let per = u / n as u64;
        let low_bits = if per >= 1 {
            63 - per.leading_zeros() as usize
        } else {
            0
        };
        let mut low = PackedIntVec::new(low_bits);
        let high_len = (u >> low_bits) as usize + n;
        let mut high = BitVectorBuilder::zeros(high_len);
        let mut count = 0usize;
        let mut prev = 0u64;
        for (idx, c) in values.into_iter().enumerate() {
            debug_assert!(c >= prev, "sequence must be non-decreasing");
            prev = c;
            if low_bits > 0 {
                low.push(c & ((1u64 << low_bits) - 1));
            } else {
                low.push(0);
            }
            high.set((c >> low_bits) as usize + idx);
            count += 1;
        }
        assert_eq!(count, n, "iterator length does not match n");
        assert_eq!(prev, u, "last value does not match max");
        EliasFano {
            n,
            low_bits,
            low,
            high: high.build(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// The `i`-th value, 1-based.
    #[inline]
    pub fn get(&self, i: usize) -> u64 {
        debug_assert!(i >= 1 && i <= self.n);
        let hi = (self.high.select1(i) - i) as u64;
        (hi << self.low_bits) | self.low.get(i - 1)
    }

    pub fn size_bytes(&self) -> usize {
        self.low.size_bytes() + self.high.size_bytes()
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        write_magic(w, b"SEF1")?;
        write_u64(w, self.n as u64)?;
        write_u64(w, self.low_bits as u64)?;
        self.low.write_to(w)?;
        self.high.write_to(w)?;
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        expect_magic(r, b"SEF1", "monotone sequence")?;
        let n = read_len(r, LEN_CAP, "sequence length")?;
        let low_bits = read_len(r, 64, "low bit width")?;
        let low = PackedIntVec::read_from(r)?;
        let high = BitVector::read_from(r)?;
        if low.len() != n || high.count_ones() != n {
            return Err(Error::Corrupt("monotone sequence: inconsistent lengths".into()));
        }
        Ok(EliasFano {
            n,
            low_bits,
            low,
            high,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn check(values: &[u64]) {
        let ef = EliasFano::from_values(values);
        assert_eq!(ef.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            assert_eq!(ef.get(i + 1), v, "index {}", i + 1);
        }
    }

    #[test]
    fn small_sequences() {
        check(&[]);
        check(&[0]);
        check(&[5]);
        check(&[0, 0, 0]);
        check(&[1, 2, 3, 4, 5]);
        check(&[3, 3, 9, 9, 9, 100]);
        check(&[0, 1, 1, 2, 1000000007]);
    }

    #[test]
    fn random_sequences() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [1usize, 10, 100, 5000] {
            for max_gap in [1u64, 3, 1000, 1 << 33] {
                let mut cur = 0u64;
                let values: Vec<u64> = (0..n)
                    .map(|_| {
                        cur += rng.gen_range(0..=max_gap);
                        cur
                    })
                    .collect();
                check(&values);
            }
        }
    }

    #[test]
    fn compresses_to_expected_size() {
        // ~n(2 + ceil(log2(U/n))) bits plus directory and header slack.
        let n = 50_000u64;
        let values: Vec<u64> = (1..=n).map(|i| i * 37).collect();
        let ef = EliasFano::from_values(&values);
        let u = *values.last().unwrap();
        let per_item_bits = 2 + (u as f64 / n as f64).log2().ceil() as usize;
        let budget_bytes = (n as usize * per_item_bits + n as usize) / 8 + n as usize / 4 + 128;
        let mut buf = Vec::new();
        ef.write_to(&mut buf).unwrap();
        assert!(
            buf.len() <= budget_bytes,
            "serialized {} bytes, budget {budget_bytes}",
            buf.len()
        );
    }

    #[test]
    fn serialization_roundtrip() {
        let values: Vec<u64> = (0..1000u64).map(|i| i * i).collect();
        let ef = EliasFano::from_values(&values);
        let mut buf = Vec::new();
        ef.write_to(&mut buf).unwrap();
        let back = EliasFano::read_from(&mut buf.as_slice()).unwrap();
        for (i, &v) in values.iter().enumerate() {
            assert_eq!(back.get(i + 1), v);
        }
        let mut buf2 = Vec::new();
        back.write_to(&mut buf2).unwrap();
        assert_eq!(buf, buf2);
    }
}
