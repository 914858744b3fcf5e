//! Planar floating-point image buffers.
//!
//! All buffers are channel-major: each channel is a contiguous `width * height`
//! run of `f32` samples in row-major order.

use crate::error::{Error, Result};

fn check_dims(width: usize, height: usize) -> Result<usize> {
    if width == 0 || height == 0 {
        return Err(Error::InvalidImage(format!(
            "dimensions must be at least 1x1, got {width}x{height}"
        )));
    }
    width
        .checked_mul(height)
        .ok_or_else(|| Error::InvalidImage("dimensions overflow".into()))
}

fn check_plane(name: &str, plane: &[f32], len: usize, lo: f32, hi: f32, hi_open: bool) -> Result<()> {
    if plane.len() != len {
        return Err(Error::InvalidImage(format!(
            "{name} plane has {} samples, expected {len}",
            plane.len()
        )));
    }
    for (i, &x) in plane.iter().enumerate() {
        let ok = x.is_finite() && x >= lo && if hi_open { x < hi } else { x <= hi };
        if !ok {
            return Err(Error::InvalidImage(format!(
                "{name} sample {i} = {x} outside [{lo}, {hi}{}",
                if hi_open { ")" } else { "]" }
            )));
        }
    }
    Ok(())
}

#[inline]
pub(crate) fn clip_unit(x: f32) -> f32 {
    // f32::max ignores a NaN operand, so NaN maps to 0
    x.max(0.0).min(1.0)
}

/// A single real-valued plane.
#[derive(Debug, Clone, PartialEq)]
pub struct Plane {
    width: usize,
    height: usize,
    data: Vec<f32>,
}

impl Plane {
    pub fn new(width: usize, height: usize, data: Vec<f32>) -> Result<Self> {
        let len = check_dims(width, height)?;
        if data.len() != len {
            return Err(Error::InvalidImage(format!(
                "plane has {} samples, expected {len}",
                data.len()
            )));
        }
        Ok(Self {
            width,
            height,
            data,
        })
    }

    pub fn filled(width: usize, height: usize, value: f32) -> Result<Self> {
        let len = check_dims(width, height)?;
        Ok(Self {
            width,
            height,
            data: vec![value; len],
        })
    }

    pub(crate) fn from_parts(width: usize, height: usize, data: Vec<f32>) -> Self {
        debug_assert_eq!(data.len(), width * height);
        Self {
            width,
            height,
            data,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    pub fn into_data(self) -> Vec<f32> {
        self.data
    }

    pub fn get(&self, x: usize, y: usize) -> f32 {
        self.data[y * self.width + x]
    }

    /// Smallest and largest sample.
    pub fn min_max(&self) -> (f32, f32) {
        self.data
            .iter()
            .fold((f32::INFINITY, f32::NEG_INFINITY), |(lo, hi), &x| {
                (lo.min(x), hi.max(x))
            })
    }

    pub fn mean(&self) -> f64 {
        crate::par::sum_f64(self.data.len(), |i| self.data[i] as f64) / self.data.len() as f64
    }
}

/// Planar sRGB image with every sample in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct RgbImage {
    width: usize,
    height: usize,
    r: Vec<f32>,
    g: Vec<f32>,
    b: Vec<f32>,
}

impl RgbImage {
    /// Builds an image from three planes, rejecting non-finite or out-of-range samples.
    pub fn new(width: usize, height: usize, r: Vec<f32>, g: Vec<f32>, b: Vec<f32>) -> Result<Self> {
        let len = check_dims(width, height)?;
        check_plane("R", &r, len, 0.0, 1.0, false)?;
        check_plane("G", &g, len, 0.0, 1.0, false)?;
        check_plane("B", &b, len, 0.0, 1.0, false)?;
        Ok(Self {
            width,
            height,
            r,
            g,
            b,
        })
    }

    /// Builds an image from arbitrary planes, clipping every sample into `[0, 1]`
    /// (NaN becomes 0).
    pub fn from_planes_clipped(
        width: usize,
        height: usize,
        mut r: Vec<f32>,
        mut g: Vec<f32>,
        mut b: Vec<f32>,
    ) -> Result<Self> {
        let len = check_dims(width, height)?;
        for p in [&r, &g, &b] {
            if p.len() != len {
                return Err(Error::InvalidImage(format!(
                    "plane has {} samples, expected {len}",
                    p.len()
                )));
            }
        }
        for p in [&mut r, &mut g, &mut b] {
            p.iter_mut().for_each(|x| *x = clip_unit(*x));
        }
        Ok(Self {
            width,
            height,
            r,
            g,
            b,
        })
    }

    /// Builds an image from interleaved `RGBRGB...` samples.
    pub fn from_interleaved(width: usize, height: usize, rgb: &[f32]) -> Result<Self> {
        let len = check_dims(width, height)?;
        if rgb.len() != 3 * len {
            return Err(Error::InvalidImage(format!(
                "interleaved buffer has {} samples, expected {}",
                rgb.len(),
                3 * len
            )));
        }
        let (mut r, mut g, mut b) = (
            Vec::with_capacity(len),
            Vec::with_capacity(len),
            Vec::with_capacity(len),
        );
        for px in rgb.chunks_exact(3) {
            r.push(px[0]);
            g.push(px[1]);
            b.push(px[2]);
        }
        Self::new(width, height, r, g, b)
    }

    pub fn filled(width: usize, height: usize, rgb: [f32; 3]) -> Result<Self> {
        let len = check_dims(width, height)?;
        Self::new(
            width,
            height,
            vec![rgb[0]; len],
            vec![rgb[1]; len],
            vec![rgb[2]; len],
        )
    }

    /// Builds an image by evaluating `f(x, y)` at every pixel; results are clipped.
    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> [f32; 3]) -> Result<Self> {
        let len = check_dims(width, height)?;
        let (mut r, mut g, mut b) = (
            Vec::with_capacity(len),
            Vec::with_capacity(len),
            Vec::with_capacity(len),
        );
        for y in 0..height {
            for x in 0..width {
                let [pr, pg, pb] = f(x, y);
                r.push(clip_unit(pr));
                g.push(clip_unit(pg));
                b.push(clip_unit(pb));
            }
        }
        Ok(Self {
            width,
            height,
            r,
            g,
            b,
        })
    }

    pub(crate) fn from_parts(width: usize, height: usize, [r, g, b]: [Vec<f32>; 3]) -> Self {
        debug_assert!(r.len() == width * height && g.len() == r.len() && b.len() == r.len());
        Self {
            width,
            height,
            r,
            g,
            b,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Number of pixels.
    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }

    pub fn r(&self) -> &[f32] {
        &self.r
    }

    pub fn g(&self) -> &[f32] {
        &self.g
    }

    pub fn b(&self) -> &[f32] {
        &self.b
    }

    pub fn planes(&self) -> [&[f32]; 3] {
        [&self.r, &self.g, &self.b]
    }

    pub fn into_planes(self) -> [Vec<f32>; 3] {
        [self.r, self.g, self.b]
    }

    pub fn pixel(&self, x: usize, y: usize) -> [f32; 3] {
        self.pixel_at(y * self.width + x)
    }

    pub fn pixel_at(&self, i: usize) -> [f32; 3] {
        [self.r[i], self.g[i], self.b[i]]
    }

    /// Interleaved `RGBRGB...` copy of the samples.
    pub fn to_interleaved(&self) -> Vec<f32> {
        let mut out = Vec::with_capacity(3 * self.len());
        for i in 0..self.len() {
            out.extend_from_slice(&self.pixel_at(i));
        }
        out
    }

    pub fn same_dims(&self, other: &RgbImage) -> Result<()> {
        if self.width != other.width || self.height != other.height {
            return Err(Error::DimensionMismatch(
                self.width,
                self.height,
                other.width,
                other.height,
            ));
        }
        Ok(())
    }

    /// Applies `f` to every sample and clips the result.
    pub fn map_samples(&self, f: impl Fn(f32) -> f32 + Sync) -> RgbImage {
        let planes = [&self.r, &self.g, &self.b].map(|p| crate::par::map1(p, |x| clip_unit(f(x))));
        Self::from_parts(self.width, self.height, planes)
    }
}

/// Hue / Saturation / Value planes. Hue is measured in turns, `[0, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HsvImage {
    width: usize,
    height: usize,
    hue: Vec<f32>,
    saturation: Vec<f32>,
    value: Vec<f32>,
}

impl HsvImage {
    /// Validates ranges; hue is canonicalised to 0 wherever saturation is 0.
    pub fn new(
        width: usize,
        height: usize,
        mut hue: Vec<f32>,
        saturation: Vec<f32>,
        value: Vec<f32>,
    ) -> Result<Self> {
        let len = check_dims(width, height)?;
        check_plane("hue", &hue, len, 0.0, 1.0, true)?;
        check_plane("saturation", &saturation, len, 0.0, 1.0, false)?;
        check_plane("value", &value, len, 0.0, 1.0, false)?;
        for (h, &s) in hue.iter_mut().zip(&saturation) {
            if s == 0.0 {
                *h = 0.0;
            }
        }
        Ok(Self {
            width,
            height,
            hue,
            saturation,
            value,
        })
    }

    pub(crate) fn from_parts(width: usize, height: usize, [hue, saturation, value]: [Vec<f32>; 3]) -> Self {
        Self {
            width,
            height,
            hue,
            saturation,
            value,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.hue.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hue.is_empty()
    }

    pub fn hue(&self) -> &[f32] {
        &self.hue
    }

    pub fn saturation(&self) -> &[f32] {
        &self.saturation
    }

    pub fn value(&self) -> &[f32] {
        &self.value
    }

    pub fn hue_plane(&self) -> Plane {
        Plane::from_parts(self.width, self.height, self.hue.clone())
    }

    pub fn into_planes(self) -> [Vec<f32>; 3] {
        [self.hue, self.saturation, self.value]
    }

    pub fn pixel_at(&self, i: usize) -> [f32; 3] {
        [self.hue[i], self.saturation[i], self.value[i]]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_and_empty() {
        assert!(RgbImage::new(1, 1, vec![1.5], vec![0.0], vec![0.0]).is_err());
        assert!(RgbImage::new(1, 1, vec![f32::NAN], vec![0.0], vec![0.0]).is_err());
        assert!(RgbImage::new(0, 1, vec![], vec![], vec![]).is_err());
        assert!(RgbImage::new(2, 1, vec![0.0], vec![0.0], vec![0.0]).is_err());
    }

    #[test]
    fn clipped_constructor_sanitises() {
        let img =
            RgbImage::from_planes_clipped(1, 1, vec![f32::NAN], vec![-2.0], vec![7.0]).unwrap();
        assert_eq!(img.pixel(0, 0), [0.0, 0.0, 1.0]);
    }

    #[test]
    fn hsv_canonical_hue() {
        let img = HsvImage::new(2, 1, vec![0.3, 0.4], vec![0.0, 0.5], vec![0.2, 0.2]).unwrap();
        assert_eq!(img.hue(), &[0.0, 0.4]);
        assert!(HsvImage::new(1, 1, vec![1.0], vec![0.5], vec![0.5]).is_err());
    }

    #[test]
    fn interleaved_round_trip() {
        let data = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6];
        let img = RgbImage::from_interleaved(2, 1, &data).unwrap();
        assert_eq!(img.to_interleaved(), data);
        assert_eq!(img.pixel(1, 0), [0.4, 0.5, 0.6]);
    }
}
