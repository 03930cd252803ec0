//! Little-endian read/write helpers shared by the on-disk formats.
//!
//! Every writer in this crate emits a fixed field order with no padding,
//! so serializing the same structure twice produces identical bytes.

use crate::{Error, Result};
use std::io::{Read, Write};

pub(crate) fn write_magic<W: Write>(w: &mut W, magic: &[u8; 4]) -> Result<()> {
    w.write_all(magic)?;
    Ok(())
}

pub(crate) fn expect_magic<R: Read>(r: &mut R, magic: &[u8; 4], what: &str) -> Result<()> {
    let mut buf = [0u8; 4];
    r.read_exact(&mut buf)?;
    if &buf != magic {
        return Err(Error::Corrupt(format!(
            "{what}: bad magic {:02x?}, expected {:02x?}",
            buf, magic
        )));
    }
    Ok(())
}

pub(crate) fn write_u32<W: Write>(w: &mut W, v: u32) -> Result<()> {
    w.write_all(&v.to_le_bytes())?;
    Ok(())
}

pub(crate) fn write_u64<W: Write>(w: &mut W, v: u64) -> Result<()> {
    w.write_all(&v.to_le_bytes())?;
    Ok(())
}

pub(crate) fn read_u32<R: Read>(r: &mut R) -> Result<u32> {
    let mut buf = [0u8; 4];
    r.read_exact(&mut buf)?;
    Ok(u32::from_le_bytes(buf))
}

pub(crate) fn read_u64<R: Read>(r: &mut R) -> Result<u64> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf)?;
    Ok(u64::from_le_bytes(buf))
}

/// Reads a u64 that is about to be used as an allocation count and bounds it.
pub(crate) fn read_len<R: Read>(r: &mut R, cap: u64, what: &str) -> Result<usize> {
    let v = read_u64(r)?;
    if v > cap {
        return Err(Error::Corrupt(format!("{what}: length {v} out of range")));
    }
    Ok(v as usize)
}

pub(crate) fn write_u64_slice<W: Write>(w: &mut W, s: &[u64]) -> Result<()> {
    write_u64(w, s.len() as u64)?;
    for &v in s {
        write_u64(w, v)?;
    }
    Ok(())
}

pub(crate) fn read_u64_vec<R: Read>(r: &mut R, cap: u64, what: &str) -> Result<Vec<u64>> {
    let n = read_len(r, cap, what)?;
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push(read_u64(r)?);
    }
    Ok(out)
}

/// Hard ceiling used when validating serialized lengths: 2^40 of anything
/// is far past what this crate is asked to handle in one structure.
pub(crate) const LEN_CAP: u64 = 1 << 40;
