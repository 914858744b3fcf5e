use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::buffer::{Plane, RgbImage};
use crate::error::{Error, Result};
use crate::space::{hsv_to_rgb_pixel, intensity_map, rgb_to_hsv_pixel, HviParams, Kernel};
use crate::par;

/// Replaces the Value plane of `lowlight` with the reference's, keeping the
/// low-light hue and saturation. What remains wrong is pure chroma noise.
pub fn correct_value(lowlight: &RgbImage, reference: &RgbImage) -> Result<RgbImage> {
    lowlight.same_dims(reference)?;
    let [r, g, b] = lowlight.planes();
    let [hue, sat, _] = par::map3(r, g, b, |r, g, b| {
        let (h, s, _) = rgb_to_hsv_pixel(r, g, b);
        (h, s, 0.0)
    });
    let value = intensity_map(reference);
    let out = par::map3(&hue, &sat, value.data(), hsv_to_rgb_pixel);
    Ok(RgbImage::from_parts(lowlight.width(), lowlight.height(), out))
}

/// Coordinate systems in which two images can be compared pixel by pixel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorSpace {
    /// `(R, G, B)`.
    Srgb,
    /// Rectangular `(6H, S)`: hue on its raw axis, so reds at both ends are far apart.
    HsvHs,
    /// Polarised hue without intensity collapse: `S * (cos, sin)`.
    PolarizedHs,
    /// Raw hue axis with intensity collapse: `C_k * (6H, S)`.
    CollapsedHs,
    /// Full HVI chroma `(H^, V^)`.
    HviHv,
}

impl ErrorSpace {
    pub const ALL: [ErrorSpace; 5] = [
        Self::Srgb,
        Self::HsvHs,
        Self::PolarizedHs,
        Self::CollapsedHs,
        Self::HviHv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Srgb => "srgb",
            Self::HsvHs => "hsv_hs",
            Self::PolarizedHs => "pol_hs",
            Self::CollapsedHs => "ck_hs",
            Self::HviHv => "hvi_hv",
        }
    }

    #[inline]
    pub(crate) fn coords(self, kernel: &Kernel<'_>, r: f32, g: f32, b: f32) -> [f32; 3] {
        match self {
            Self::Srgb => [r, g, b],
            Self::HsvHs => {
                let (h, s, _) = rgb_to_hsv_pixel(r, g, b);
                [6.0 * h, s, 0.0]
            }
            Self::PolarizedHs => {
                let (h, s, _) = rgb_to_hsv_pixel(r, g, b);
                let (cos, sin, p6) = kernel.direction(h);
                let radius = kernel.sat_weight(p6) * s;
                [radius * cos, radius * sin, 0.0]
            }
            Self::CollapsedHs => {
                let (h, s, v) = rgb_to_hsv_pixel(r, g, b);
                let c = kernel.collapse(v);
                [c * 6.0 * h, c * s, 0.0]
            }
            Self::HviHv => {
                let (hh, vv, _) = kernel.forward(r, g, b);
                [hh, vv, 0.0]
            }
        }
    }
}

impl fmt::Display for ErrorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ErrorSpace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|sp| sp.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParam(format!("unknown error space {s:?}")))
    }
}

/// Per-pixel Euclidean distance between `a` and `b` in `space`.
pub fn error_map(a: &RgbImage, b: &RgbImage, space: ErrorSpace, params: &HviParams) -> Result<Plane> {
    a.same_dims(b)?;
    let kernel = Kernel::new(params);
    let [ar, ag, ab] = a.planes();
    let [br, bg, bb] = b.planes();
    let data: Vec<f32> = (0..a.len())
        .into_par_iter()
        .map(|i| {
            let p = space.coords(&kernel, ar[i], ag[i], ab[i]);
            let q = space.coords(&kernel, br[i], bg[i], bb[i]);
            let d2: f32 = p.iter().zip(&q).map(|(x, y)| (x - y) * (x - y)).sum();
            d2.sqrt()
        })
        .collect();
    Plane::new(a.width(), a.height(), data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::hsv_to_rgb_pixel;

    fn from_hsv(pixels: &[(f32, f32, f32)]) -> RgbImage {
        let data: Vec<f32> = pixels
            .iter()
            .flat_map(|&(h, s, v)| {
                let (r, g, b) = hsv_to_rgb_pixel(h, s, v);
                [r, g, b]
            })
            .collect();
        RgbImage::from_interleaved(pixels.len(), 1, &data).unwrap()
    }

    #[test]
    fn correction_examples() {
        let reference = RgbImage::from_fn(8, 8, |x, y| {
            [0.2 + 0.1 * (x % 3) as f32, 0.6, 0.1 + 0.05 * y as f32]
        })
        .unwrap();
        let same = correct_value(&reference, &reference).unwrap();
        for (a, b) in same.to_interleaved().iter().zip(reference.to_interleaved()) {
            assert!((a - b).abs() <= 1e-6);
        }

        let half = reference.map_samples(|x| 0.5 * x);
        let fixed = correct_value(&half, &reference).unwrap();
        for (a, b) in fixed.to_interleaved().iter().zip(reference.to_interleaved()) {
            assert!((a - b).abs() <= 1e-6);
        }

        let gray = RgbImage::filled(8, 8, [0.1; 3]).unwrap();
        let out = correct_value(&gray, &reference).unwrap();
        let v = intensity_map(&reference);
        for i in 0..out.len() {
            assert_eq!(out.pixel_at(i), [v.data()[i]; 3]);
        }

        assert!(correct_value(&gray, &RgbImage::filled(4, 8, [0.1; 3]).unwrap()).is_err());
    }

    #[test]
    fn correction_is_idempotent() {
        let reference = RgbImage::from_fn(6, 5, |x, y| [0.9 - 0.1 * x as f32, 0.2 * y as f32, 0.4]).unwrap();
        let low = RgbImage::from_fn(6, 5, |x, y| [0.05 * y as f32, 0.03 * x as f32, 0.1]).unwrap();
        let once = correct_value(&low, &reference).unwrap();
        let twice = correct_value(&once, &reference).unwrap();
        for (a, b) in once.to_interleaved().iter().zip(twice.to_interleaved()) {
            assert!((a - b).abs() <= 1e-6);
        }
    }

    #[test]
    fn red_pair_distances() {
        let p = HviParams::default();
        let a = from_hsv(&[(0.001, 1.0, 1.0)]);
        let b = from_hsv(&[(0.999, 1.0, 1.0)]);
        let hs = error_map(&a, &b, ErrorSpace::HsvHs, &p).unwrap().data()[0];
        let hv = error_map(&a, &b, ErrorSpace::HviHv, &p).unwrap().data()[0];
        assert!((hs - 5.988).abs() < 1e-4, "{hs}");
        assert!(hv <= 0.02, "{hv}");
        let pol = error_map(&a, &b, ErrorSpace::PolarizedHs, &p).unwrap().data()[0];
        assert!((pol - hv).abs() < 1e-5);
    }

    #[test]
    fn black_pair_distance_is_bounded() {
        let p = HviParams::default();
        // different hue noise, intensity 0 after quantisation -> both black
        let a = from_hsv(&[(0.1, 0.9, 0.0)]);
        let b = from_hsv(&[(0.7, 0.3, 0.0)]);
        let d = error_map(&a, &b, ErrorSpace::HviHv, &p).unwrap().data()[0];
        assert!(d <= 2e-8);
        // and very dark but non-zero
        let a = from_hsv(&[(0.1, 0.9, 0.001)]);
        let b = from_hsv(&[(0.6, 0.9, 0.001)]);
        let hvi = error_map(&a, &b, ErrorSpace::HviHv, &p).unwrap().data()[0];
        let pol = error_map(&a, &b, ErrorSpace::PolarizedHs, &p).unwrap().data()[0];
        assert!(hvi < 0.01 * pol);
    }

    #[test]
    fn identical_images_have_zero_error() {
        let p = HviParams::default();
        let img = RgbImage::from_fn(5, 4, |x, y| [0.1 * x as f32, 0.2 * y as f32, 0.5]).unwrap();
        for space in ErrorSpace::ALL {
            let e = error_map(&img, &img, space, &p).unwrap();
            assert!(e.data().iter().all(|&d| d == 0.0), "{space}");
            assert_eq!(space, space.name().parse().unwrap());
        }
    }
}
