//! `HVI1` tensor interchange format.
//!
//! Layout, all little-endian:
//!
//! ```text
//! "HVI1" | u32 width | u32 height | f32 k | u8 variant | f32 H^[w*h] | f32 V^[w*h] | f32 I[w*h]
//! ```
//!
//! Only `k` and the collapse variant travel with the planes; every other
//! parameter comes from the `base` passed to the readers.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

use super::{CollapseVariant, HviImage, HviParams};

pub const MAGIC: &[u8; 4] = b"HVI1";

/// Header size in bytes.
pub const HEADER_LEN: usize = 4 + 4 + 4 + 4 + 1;

pub fn write_hvi1<W: Write>(img: &HviImage, mut w: W) -> std::io::Result<()> {
    w.write_all(MAGIC)?;
    w.write_all(&(img.width() as u32).to_le_bytes())?;
    w.write_all(&(img.height() as u32).to_le_bytes())?;
    w.write_all(&(img.params().k() as f32).to_le_bytes())?;
    w.write_all(&[img.params().variant().code()])?;
    let mut buf = Vec::with_capacity(4 * img.len());
    for plane in [img.h_hat(), img.v_hat(), img.intensity()] {
        buf.clear();
        for &x in plane {
            buf.extend_from_slice(&x.to_le_bytes());
        }
        w.write_all(&buf)?;
    }
    w.flush()
}

fn truncated(e: std::io::Error) -> Error {
    if e.kind() == std::io::ErrorKind::UnexpectedEof {
        Error::Tensor("truncated data".into())
    } else {
        Error::Tensor(e.to_string())
    }
}

/// Reads a tensor; `k` and the variant from the header override `base`.
pub fn read_hvi1<R: Read>(mut r: R, base: &HviParams) -> Result<HviImage> {
    let mut header = [0u8; HEADER_LEN];
    r.read_exact(&mut header).map_err(truncated)?;
    if &header[..4] != MAGIC {
        return Err(Error::Tensor("bad magic bytes".into()));
    }
    let word = |o: usize| [header[o], header[o + 1], header[o + 2], header[o + 3]];
    let width = u32::from_le_bytes(word(4)) as usize;
    let height = u32::from_le_bytes(word(8)) as usize;
    let k = f32::from_le_bytes(word(12)) as f64;
    let variant = CollapseVariant::from_code(header[16])
        .ok_or_else(|| Error::Tensor(format!("unknown collapse variant {}", header[16])))?;
    if width == 0 || height == 0 {
        return Err(Error::Tensor(format!("empty dimensions {width}x{height}")));
    }
    let len = width
        .checked_mul(height)
        .filter(|n| n.checked_mul(12).is_some())
        .ok_or_else(|| Error::Tensor("dimensions overflow".into()))?;
    let params = base
        .clone()
        .with_k(k)
        .map_err(|e| Error::Tensor(e.to_string()))?
        .with_variant(variant);

    let mut bytes = vec![0u8; 4 * len];
    let mut read_plane = || -> Result<Vec<f32>> {
        r.read_exact(&mut bytes).map_err(truncated)?;
        Ok(bytes
            .chunks_exact(4)
            .map(|c| f32::from_le_bytes([c[0], c[1], c[2], c[3]]))
            .collect())
    };
    let h = read_plane()?;
    let v = read_plane()?;
    let i = read_plane()?;
    HviImage::from_planes(width, height, h, v, i, params)
}

pub fn save_hvi1(img: &HviImage, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_hvi1(img, BufWriter::new(file)).map_err(|e| Error::io(path, e))
}

pub fn load_hvi1(path: impl AsRef<Path>, base: &HviParams) -> Result<HviImage> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_hvi1(BufReader::new(file), base)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> HviImage {
        let p = HviParams::new(2.5).unwrap().with_variant(CollapseVariant::Log);
        HviImage::from_planes(2, 1, vec![0.5, -0.25], vec![0.0, 0.125], vec![1.0, 0.5], p).unwrap()
    }

    #[test]
    fn byte_layout() {
        let mut buf = Vec::new();
        write_hvi1(&sample(), &mut buf).unwrap();
        assert_eq!(buf.len(), HEADER_LEN + 3 * 2 * 4);
        assert_eq!(&buf[..4], b"HVI1");
        assert_eq!(&buf[4..8], &2u32.to_le_bytes());
        assert_eq!(&buf[8..12], &1u32.to_le_bytes());
        assert_eq!(&buf[12..16], &2.5f32.to_le_bytes());
        assert_eq!(buf[16], 2);
        assert_eq!(&buf[17..21], &0.5f32.to_le_bytes());
        assert_eq!(&buf[21..25], &(-0.25f32).to_le_bytes());
        assert_eq!(&buf[33..37], &1.0f32.to_le_bytes());
    }

    #[test]
    fn round_trip() {
        let img = sample();
        let mut buf = Vec::new();
        write_hvi1(&img, &mut buf).unwrap();
        let back = read_hvi1(buf.as_slice(), &HviParams::default()).unwrap();
        assert_eq!(back, img);
    }

    #[test]
    fn rejects_malformed() {
        let mut buf = Vec::new();
        write_hvi1(&sample(), &mut buf).unwrap();
        let base = HviParams::default();
        assert!(matches!(read_hvi1(&buf[..buf.len() - 1], &base), Err(Error::Tensor(_))));
        assert!(read_hvi1(&buf[..10], &base).is_err());
        let mut bad = buf.clone();
        bad[0] = b'X';
        assert!(read_hvi1(bad.as_slice(), &base).is_err());
        let mut bad = buf.clone();
        bad[16] = 9;
        assert!(read_hvi1(bad.as_slice(), &base).is_err());
        let mut bad = buf;
        bad[12..16].copy_from_slice(&0.0f32.to_le_bytes());
        assert!(read_hvi1(bad.as_slice(), &base).is_err());
    }
}
