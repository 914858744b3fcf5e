//! Image file I/O and reflect padding.

use std::path::Path;

use image::{DynamicImage, ImageFormat, ImageReader};

use crate::buffer::{clip_unit, Plane, RgbImage};
use crate::error::{Error, Result};

/// Loads an 8- or 16-bit PNG, or a binary PPM, into unit-range planes.
/// Alpha is dropped; grayscale images are rejected.
pub fn load_rgb(path: impl AsRef<Path>) -> Result<RgbImage> {
    let path = path.as_ref();
    let reader = ImageReader::open(path)
        .map_err(|e| Error::io(path, e))?
        .with_guessed_format()
        .map_err(|e| Error::io(path, e))?;
    match reader.format() {
        Some(ImageFormat::Png) | Some(ImageFormat::Pnm) => {}
        other => {
            return Err(Error::Decode {
                path: path.into(),
                msg: format!("unsupported format {other:?}; expected PNG or PPM"),
            })
        }
    }
    let decoded = reader.decode().map_err(|e| Error::Decode {
        path: path.into(),
        msg: e.to_string(),
    })?;
    let (w, h) = (decoded.width() as usize, decoded.height() as usize);
    let interleaved: Vec<f32> = match decoded {
        DynamicImage::ImageRgb8(buf) => buf.into_raw().iter().map(|&x| x as f32 / 255.0).collect(),
        DynamicImage::ImageRgba8(buf) => buf
            .into_raw()
            .chunks_exact(4)
            .flat_map(|p| [p[0], p[1], p[2]])
            .map(|x| x as f32 / 255.0)
            .collect(),
        DynamicImage::ImageRgb16(buf) => {
            buf.into_raw().iter().map(|&x| x as f32 / 65535.0).collect()
        }
        DynamicImage::ImageRgba16(buf) => buf
            .into_raw()
            .chunks_exact(4)
            .flat_map(|p| [p[0], p[1], p[2]])
            .map(|x| x as f32 / 65535.0)
            .collect(),
        other => {
            return Err(Error::Decode {
                path: path.into(),
                msg: format!("expected an RGB image, got {:?}", other.color()),
            })
        }
    };
    RgbImage::from_interleaved(w, h, &interleaved)
}

#[inline]
fn quantize8(x: f32) -> u8 {
    (clip_unit(x) * 255.0).round() as u8
}

/// Writes an 8-bit PNG, quantising each sample to `round(x * 255)`.
pub fn save_rgb(img: &RgbImage, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let bytes: Vec<u8> = img.to_interleaved().into_iter().map(quantize8).collect();
    image::save_buffer_with_format(
        path,
        &bytes,
        img.width() as u32,
        img.height() as u32,
        image::ExtendedColorType::Rgb8,
        ImageFormat::Png,
    )
    .map_err(|e| encode_error(path, e))
}

fn encode_error(path: &Path, e: image::ImageError) -> Error {
    match e {
        image::ImageError::IoError(io) => Error::io(path, io),
        other => Error::Encode {
            path: path.into(),
            msg: other.to_string(),
        },
    }
}

/// Min-max normalises `plane` into a 16-bit grayscale PNG and returns the
/// `(min, max)` used. A constant plane is written as all zeros.
pub fn save_gray16_normalized(plane: &Plane, path: impl AsRef<Path>) -> Result<(f32, f32)> {
    let path = path.as_ref();
    let (lo, hi) = plane.min_max();
    let span = hi - lo;
    let mut bytes = Vec::with_capacity(2 * plane.data().len());
    for &x in plane.data() {
        let t = if span > 0.0 { (x - lo) / span } else { 0.0 };
        let q = (clip_unit(t) * 65535.0).round() as u16;
        bytes.extend_from_slice(&q.to_ne_bytes());
    }
    image::save_buffer_with_format(
        path,
        &bytes,
        plane.width() as u32,
        plane.height() as u32,
        image::ExtendedColorType::L16,
        ImageFormat::Png,
    )
    .map_err(|e| encode_error(path, e))?;
    Ok((lo, hi))
}

/// Pixels added on each side by [`pad_reflect8`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PaddingRecord {
    pub left: usize,
    pub right: usize,
    pub top: usize,
    pub bottom: usize,
}

impl PaddingRecord {
    pub fn is_zero(&self) -> bool {
        *self == Self::default()
    }
}

/// Padding needed to reach a multiple of 8, split with the odd pixel going
/// to the far side.
fn split_pad(n: usize) -> (usize, usize) {
    let total = (8 - n % 8) % 8;
    (total / 2, total - total / 2)
}

/// Mirror index without repeating the edge sample; repeats the single
/// sample when `n == 1`.
fn reflect_index(i: isize, n: usize) -> usize {
    if n == 1 {
        return 0;
    }
    let period = 2 * (n as isize - 1);
    let m = i.rem_euclid(period);
    if m < n as isize {
        m as usize
    } else {
        (period - m) as usize
    }
}

/// Reflect-pads both dimensions up to the next multiple of 8.
pub fn pad_reflect8(img: &RgbImage) -> (RgbImage, PaddingRecord) {
    let (w, h) = (img.width(), img.height());
    let (left, right) = split_pad(w);
    let (top, bottom) = split_pad(h);
    let record = PaddingRecord {
        left,
        right,
        top,
        bottom,
    };
    if record.is_zero() {
        return (img.clone(), record);
    }
    let (pw, ph) = (w + left + right, h + top + bottom);
    let cols: Vec<usize> = (0..pw)
        .map(|x| reflect_index(x as isize - left as isize, w))
        .collect();
    let planes = img.planes().map(|src| {
        let mut out = Vec::with_capacity(pw * ph);
        for y in 0..ph {
            let row = reflect_index(y as isize - top as isize, h) * w;
            out.extend(cols.iter().map(|&x| src[row + x]));
        }
        out
    });
    (RgbImage::from_parts(pw, ph, planes), record)
}

/// Removes the border described by `record`.
pub fn crop_to(img: &RgbImage, record: &PaddingRecord) -> Result<RgbImage> {
    let (w, h) = (img.width(), img.height());
    let horiz = record.left + record.right;
    let vert = record.top + record.bottom;
    if horiz >= w || vert >= h {
        return Err(Error::Padding(format!(
            "record {record:?} does not fit inside a {w}x{h} image"
        )));
    }
    if record.is_zero() {
        return Ok(img.clone());
    }
    let (cw, ch) = (w - horiz, h - vert);
    let planes = img.planes().map(|src| {
        let mut out = Vec::with_capacity(cw * ch);
        for y in record.top..record.top + ch {
            let start = y * w + record.left;
            out.extend_from_slice(&src[start..start + cw]);
        }
        out
    });
    Ok(RgbImage::from_parts(cw, ch, planes))
}
