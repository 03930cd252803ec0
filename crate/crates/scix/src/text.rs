//! Input texts in dense-alphabet form.
//!
//! Index construction works on sequences over `0..sigma` where 0 is a
//! unique terminator appended by us and the remaining symbols are the
//! distinct input bytes in increasing byte order. [`Text`] owns that
//! mapping in both directions.

use crate::{Error, Result};
use std::io::{Read, Write};

pub const SENTINEL: u32 = 0;

#[derive(Debug, Clone)]
pub struct Text {
    syms: Vec<u32>,
    sigma: u32,
    /// byte -> dense symbol; `u32::MAX` marks bytes absent from the input.
    sym_for: Box<[u32; 256]>,
    /// dense symbol (>= 1) -> original byte.
    byte_for: Vec<u8>,
}

impl Text {
    /// Remaps `bytes` and appends the terminator.
    pub fn from_bytes(bytes: &[u8]) -> Text {
        let mut present = [false; 256];
        for &b in bytes {
            present[b as usize] = true;
        }
        let mut sym_for = Box::new([u32::MAX; 256]);
        let mut byte_for = Vec::new();
        let mut next = 1u32;
        for b in 0..256 {
            if present[b] {
                sym_for[b] = next;
                byte_for.push(b as u8);
                next += 1;
            }
        }
        let mut syms = Vec::with_capacity(bytes.len() + 1);
        syms.extend(bytes.iter().map(|&b| sym_for[b as usize]));
        syms.push(SENTINEL);
        Text {
            syms,
            sigma: next,
            sym_for,
            byte_for,
        }
    }

    /// Reassembles a text from its alphabet bitmap and symbol sequence
    /// (used when loading a serialized index).
    pub fn from_parts(present: &[bool; 256], syms: Vec<u32>) -> Result<Text> {
        let mut sym_for = Box::new([u32::MAX; 256]);
        let mut byte_for = Vec::new();
        let mut next = 1u32;
        for b in 0..256 {
            if present[b] {
                sym_for[b] = next;
                byte_for.push(b as u8);
                next += 1;
            }
        }
        if syms.is_empty() || *syms.last().unwrap() != SENTINEL {
            return Err(Error::Corrupt("text does not end with the terminator".into()));
        }
        if syms[..syms.len() - 1]
            .iter()
            .any(|&s| s == SENTINEL || s >= next)
        {
            return Err(Error::Corrupt("text symbol outside alphabet".into()));
        }
        Ok(Text {
            syms,
            sigma: next,
            sym_for,
            byte_for,
        })
    }

    /// Length including the terminator.
    #[inline]
    pub fn n(&self) -> usize {
        self.syms.len()
    }

    /// Alphabet size including the terminator.
    #[inline]
    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    #[inline]
    pub fn syms(&self) -> &[u32] {
        &self.syms
    }

    /// Symbol at 1-based position `i`.
    #[inline]
    pub fn sym(&self, i: usize) -> u32 {
        self.syms[i - 1]
    }

    pub fn present_bytes(&self) -> [bool; 256] {
        let mut p = [false; 256];
        for &b in &self.byte_for {
            p[b as usize] = true;
        }
        p
    }

    pub fn map_byte(&self, b: u8) -> Option<u32> {
        let s = self.sym_for[b as usize];
        (s != u32::MAX).then_some(s)
    }

    /// Dense form of a byte pattern; `None` if any byte never occurs in
    /// the text (such a pattern cannot match anywhere).
    pub fn map_pattern(&self, pat: &[u8]) -> Option<Vec<u32>> {
        pat.iter().map(|&b| self.map_byte(b)).collect()
    }

    /// Original byte for a dense symbol (terminator has none).
    pub fn byte_for(&self, sym: u32) -> Option<u8> {
        if sym == SENTINEL || sym >= self.sigma {
            None
        } else {
            Some(self.byte_for[(sym - 1) as usize])
        }
    }

    /// Decodes dense symbols back to bytes; terminators are dropped.
    pub fn decode(&self, syms: &[u32]) -> Vec<u8> {
        syms.iter()
            .filter_map(|&s| self.byte_for(s))
            .collect()
    }

    pub fn write_alphabet<W: Write>(&self, w: &mut W) -> Result<()> {
        let present = self.present_bytes();
        let mut bitmap = [0u8; 32];
        for (b, &p) in present.iter().enumerate() {
            if p {
                bitmap[b / 8] |= 1 << (b % 8);
            }
        }
        w.write_all(&bitmap)?;
        Ok(())
    }

    pub fn read_alphabet<R: Read>(r: &mut R) -> Result<[bool; 256]> {
        let mut bitmap = [0u8; 32];
        r.read_exact(&mut bitmap)?;
        let mut present = [false; 256];
        for b in 0..256 {
            present[b] = (bitmap[b / 8] >> (b % 8)) & 1 == 1;
        }
        Ok(present)
    }
}

/// Dense symbols for a standalone byte string (used by tests and small
/// one-off conversions): distinct bytes map to 1.. in byte order and the
/// terminator is appended.
pub fn dense_syms(bytes: &[u8]) -> Vec<u32> {
    Text::from_bytes(bytes).syms
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remap_is_order_preserving() {
        let t = Text::from_bytes(b"banana");
        assert_eq!(t.n(), 7);
        assert_eq!(t.sigma(), 4); // terminator, a, b, n
        assert_eq!(t.map_byte(b'a'), Some(1));
        assert_eq!(t.map_byte(b'b'), Some(2));
        assert_eq!(t.map_byte(b'n'), Some(3));
        assert_eq!(t.map_byte(b'z'), None);
        assert_eq!(t.syms(), &[2, 1, 3, 1, 3, 1, 0]);
        assert_eq!(t.sym(1), 2);
        assert_eq!(t.sym(7), 0);
        assert_eq!(t.byte_for(3), Some(b'n'));
        assert_eq!(t.byte_for(0), None);
        assert_eq!(t.decode(&[2, 1, 3, 0]), b"ban");
    }

    #[test]
    fn nul_bytes_are_ordinary_symbols() {
        let t = Text::from_bytes(b"ab\x00cd");
        assert_eq!(t.map_byte(0), Some(1));
        assert_eq!(t.sigma(), 6);
        assert_eq!(t.syms()[2], 1);
        assert_eq!(*t.syms().last().unwrap(), SENTINEL);
    }

    #[test]
    fn empty_text_is_just_the_terminator() {
        let t = Text::from_bytes(b"");
        assert_eq!(t.n(), 1);
        assert_eq!(t.sigma(), 1);
        assert_eq!(t.syms(), &[0]);
    }

    #[test]
    fn pattern_mapping() {
        let t = Text::from_bytes(b"banana");
        assert_eq!(t.map_pattern(b"ana"), Some(vec![1, 3, 1]));
        assert_eq!(t.map_pattern(b"axa"), None);
        assert_eq!(t.map_pattern(b""), Some(vec![]));
    }

    #[test]
    fn alphabet_roundtrip() {
        let t = Text::from_bytes(b"mississippi");
        let mut buf = Vec::new();
        t.write_alphabet(&mut buf).unwrap();
        assert_eq!(buf.len(), 32);
        let present = Text::read_alphabet(&mut buf.as_slice()).unwrap();
        assert_eq!(present, t.present_bytes());
        let t2 = Text::from_parts(&present, t.syms().to_vec()).unwrap();
        assert_eq!(t2.decode(t2.syms()), b"mississippi");
    }
}
