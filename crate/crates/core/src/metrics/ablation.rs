//! Color-space ablation on value-corrected images.
//!
//! Each low-light image has its Value plane replaced by the reference's, so
//! the remaining error is chroma noise only. The corrected image and the
//! reference are then embedded in four spaces and compared with PSNR:
//!
//! | space          | coordinates                          |
//! |----------------|--------------------------------------|
//! | `Hsv`          | `(H, S, V)`                          |
//! | `Polarization` | `(S cos t, S sin t, V)`              |
//! | `Collapse`     | `(C_k H, C_k S, V)`                  |
//! | `Hvi`          | `(H^, V^, I)`                        |
//!
//! Hue is measured in turns so every coordinate has unit peak, and PSNR uses
//! a peak of 1 in all four spaces.

use std::fmt;

use rayon::prelude::*;

use crate::buffer::RgbImage;
use crate::error::{Error, Result};
use crate::space::{rgb_to_hsv, rgb_to_hsv_pixel, HviParams, Kernel};
use crate::par;

use super::psnr::mse_to_psnr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AblationSpace {
    Hsv,
    /// Polarised hue, no intensity collapse.
    Polarization,
    /// Intensity collapse on the raw hue axis, no polarisation.
    Collapse,
    Hvi,
}

impl AblationSpace {
    pub const ALL: [AblationSpace; 4] = [Self::Hsv, Self::Polarization, Self::Collapse, Self::Hvi];

    pub fn name(self) -> &'static str {
        match self {
            Self::Hsv => "hsv",
            Self::Polarization => "w_polarization",
            Self::Collapse => "w_ck",
            Self::Hvi => "hvi",
        }
    }

    /// Error-map space showing the same chroma embedding.
    pub fn error_space(self) -> super::ErrorSpace {
        use super::ErrorSpace;
        match self {
            Self::Hsv => ErrorSpace::HsvHs,
            Self::Polarization => ErrorSpace::PolarizedHs,
            Self::Collapse => ErrorSpace::CollapsedHs,
            Self::Hvi => ErrorSpace::HviHv,
        }
    }

    #[inline]
    fn coords(self, kernel: &Kernel<'_>, (h, s, v): (f32, f32, f32)) -> [f32; 3] {
        match self {
            Self::Hsv => [h, s, v],
            Self::Polarization => {
                let (cos, sin, p6) = kernel.direction(h);
                let radius = kernel.sat_weight(p6) * s;
                [radius * cos, radius * sin, v]
            }
            Self::Collapse => {
                let c = kernel.collapse(v);
                [c * h, c * s, v]
            }
            Self::Hvi => {
                let (hh, vv, i) = kernel.forward_hsv(h, s, v);
                [hh, vv, i]
            }
        }
    }
}

impl fmt::Display for AblationSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn embedded_psnr(
    n: usize,
    space: AblationSpace,
    params: &HviParams,
    pair: impl Fn(usize) -> ((f32, f32, f32), (f32, f32, f32)) + Sync,
) -> f64 {
    let kernel = Kernel::new(params);
    let total = par::sum_f64(n, |i| {
        let (a, b) = pair(i);
        let p = space.coords(&kernel, a);
        let q = space.coords(&kernel, b);
        p.iter()
            .zip(&q)
            .map(|(x, y)| {
                let d = (*x - *y) as f64;
                d * d
            })
            .sum::<f64>()
    });
    mse_to_psnr(total / (3 * n) as f64)
}

/// PSNR (peak 1) between `a` and `b` after embedding both in `space`.
pub fn space_psnr(a: &RgbImage, b: &RgbImage, space: AblationSpace, params: &HviParams) -> Result<f64> {
    a.same_dims(b)?;
    let [ar, ag, ab] = a.planes();
    let [br, bg, bb] = b.planes();
    Ok(embedded_psnr(a.len(), space, params, |i| {
        (
            rgb_to_hsv_pixel(ar[i], ag[i], ab[i]),
            rgb_to_hsv_pixel(br[i], bg[i], bb[i]),
        )
    }))
}

/// Value-corrects `lowlight` and scores it against `reference` in every space,
/// in [`AblationSpace::ALL`] order.
///
/// The corrected pixel `(H_low, S_low, V_ref)` is embedded straight from HSV,
/// which is what [`correct_value`](super::correct_value) would produce before quantisation.
pub fn corrected_space_psnr(
    lowlight: &RgbImage,
    reference: &RgbImage,
    params: &HviParams,
) -> Result<[f64; 4]> {
    lowlight.same_dims(reference)?;
    let low = rgb_to_hsv(lowlight);
    let gt = rgb_to_hsv(reference);
    let mut out = [0.0; 4];
    for (slot, space) in out.iter_mut().zip(AblationSpace::ALL) {
        *slot = embedded_psnr(lowlight.len(), space, params, |i| {
            let [h, s, _] = low.pixel_at(i);
            let [gh, gs, gv] = gt.pixel_at(i);
            ((h, s, gv), (gh, gs, gv))
        });
    }
    Ok(out)
}

/// Mean corrected-image PSNR per space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AblationReport {
    /// Indexed like [`AblationSpace::ALL`].
    pub mean_psnr: [f64; 4],
    pub images: usize,
}

impl AblationReport {
    /// Averages per-image scores in the given order.
    pub fn from_scores(scores: &[[f64; 4]]) -> Result<Self> {
        if scores.is_empty() {
            return Err(Error::Empty);
        }
        let mut mean = [0.0; 4];
        for s in scores {
            for (m, v) in mean.iter_mut().zip(s) {
                *m += v;
            }
        }
        mean.iter_mut().for_each(|m| *m /= scores.len() as f64);
        Ok(Self {
            mean_psnr: mean,
            images: scores.len(),
        })
    }

    pub fn get(&self, space: AblationSpace) -> f64 {
        let i = AblationSpace::ALL.iter().position(|&s| s == space).unwrap();
        self.mean_psnr[i]
    }

    /// True when HVI > C_k-only > polarisation-only > HSV.
    pub fn strictly_ordered(&self) -> bool {
        use AblationSpace::*;
        self.get(Hvi) > self.get(Collapse)
            && self.get(Collapse) > self.get(Polarization)
            && self.get(Polarization) > self.get(Hsv)
    }
}

/// Mean corrected-image PSNR per space over `(lowlight, reference)` pairs.
pub fn mean_psnr_corrected(pairs: &[(RgbImage, RgbImage)], params: &HviParams) -> Result<AblationReport> {
    if pairs.is_empty() {
        return Err(Error::Empty);
    }
    let scores = pairs
        .par_iter()
        .map(|(low, reference)| corrected_space_psnr(low, reference, params))
        .collect::<Result<Vec<_>>>()?;
    AblationReport::from_scores(&scores)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::hsv_to_rgb_pixel;

    fn from_hsv(w: usize, h: usize, f: impl Fn(usize, usize) -> (f32, f32, f32)) -> RgbImage {
        RgbImage::from_fn(w, h, |x, y| {
            let (h, s, v) = f(x, y);
            let (r, g, b) = hsv_to_rgb_pixel(h, s, v);
            [r, g, b]
        })
        .unwrap()
    }

    /// Three hand-built pairs: a large dark block whose low-saturation chroma
    /// is replaced by random hue, and one red row whose hue flips across the
    /// 0/1 seam. Everything else is clean.
    fn constructed_pairs() -> Vec<(RgbImage, RgbImage)> {
        (0..3)
            .map(|n| {
                let reference = from_hsv(16, 16, |x, y| {
                    if y < 10 {
                        (0.3 + 0.01 * x as f32, 0.2, 0.04)
                    } else if y == 10 {
                        (if x % 2 == 0 { 0.998 } else { 0.002 }, 0.8, 0.8)
                    } else {
                        (0.55, 0.5, 0.6)
                    }
                });
                let low = from_hsv(16, 16, |x, y| {
                    if y < 10 {
                        let noise = ((x * 7 + y * 13 + n * 5) % 16) as f32 / 16.0;
                        (noise, 0.3, 0.01)
                    } else if y == 10 {
                        (if x % 2 == 0 { 0.003 } else { 0.997 }, 0.8, 0.2)
                    } else {
                        (0.55, 0.5, 0.15)
                    }
                });
                (low, reference)
            })
            .collect()
    }

    #[test]
    fn identical_pairs_are_infinite() {
        let img = from_hsv(12, 12, |x, y| (0.05 * x as f32, 0.5, 0.1 + 0.05 * y as f32));
        let report = mean_psnr_corrected(&[(img.clone(), img)], &HviParams::default()).unwrap();
        for space in AblationSpace::ALL {
            assert_eq!(report.get(space), f64::INFINITY, "{space}");
        }
    }

    #[test]
    fn constructed_noise_orders_spaces() {
        let report = mean_psnr_corrected(&constructed_pairs(), &HviParams::default()).unwrap();
        assert!(report.strictly_ordered(), "{report:?}");
        assert_eq!(report.images, 3);
    }

    #[test]
    fn empty_input() {
        assert!(matches!(mean_psnr_corrected(&[], &HviParams::default()), Err(Error::Empty)));
        assert!(AblationReport::from_scores(&[]).is_err());
    }
}
