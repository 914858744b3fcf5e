//! The HVI color space: Max-RGB intensity, polarised hue and the
//! intensity-collapsed chroma plane.
//!
//! A pixel's HVI coordinates are
//!
//! ```text
//! H^ = C_k(I) * D_T * S * cos(theta)
//! V^ = C_k(I) * D_T * S * sin(theta)
//! I  = max(R, G, B)
//! ```
//!
//! where `theta` is the (optionally remapped) hue angle and `C_k` shrinks the
//! chroma disc toward a point as intensity falls, so near-black pixels with
//! noisy hue end up close together.

mod collapse;
mod hsv;
mod params;
pub mod tensor;
mod transform;

pub use collapse::{collapse, collapse_value, CollapseVariant};
pub use hsv::{hsv_to_rgb, hsv_to_rgb_pixel, intensity_map, rgb_to_hsv, rgb_to_hsv_pixel};
pub use params::{HviParams, EPSILON};
pub use transform::{clip_to_domain, hvi_to_rgb, polarize_hue, rgb_to_hvi, MIN_SAT_WEIGHT};

pub(crate) use transform::Kernel;

use crate::error::{Error, Result};

/// Horizontal / vertical chroma planes plus the intensity plane, together
/// with the parameters that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct HviImage {
    width: usize,
    height: usize,
    h_hat: Vec<f32>,
    v_hat: Vec<f32>,
    intensity: Vec<f32>,
    params: HviParams,
}

impl HviImage {
    /// Wraps raw planes, e.g. read from disk or produced by a model.
    ///
    /// Only the shape is checked; use [`clip_to_domain`] to bring arbitrary
    /// values into the valid solid.
    pub fn from_planes(
        width: usize,
        height: usize,
        h_hat: Vec<f32>,
        v_hat: Vec<f32>,
        intensity: Vec<f32>,
        params: HviParams,
    ) -> Result<Self> {
        let len = width.checked_mul(height).unwrap_or(0);
        if len == 0 {
            return Err(Error::InvalidImage(format!(
                "dimensions must be at least 1x1, got {width}x{height}"
            )));
        }
        for (name, p) in [("H", &h_hat), ("V", &v_hat), ("I", &intensity)] {
            if p.len() != len {
                return Err(Error::InvalidImage(format!(
                    "{name} plane has {} samples, expected {len}",
                    p.len()
                )));
            }
        }
        Ok(Self::from_parts(width, height, [h_hat, v_hat, intensity], params))
    }

    pub(crate) fn from_parts(
        width: usize,
        height: usize,
        [h_hat, v_hat, intensity]: [Vec<f32>; 3],
        params: HviParams,
    ) -> Self {
        Self {
            width,
            height,
            h_hat,
            v_hat,
            intensity,
            params,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.intensity.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intensity.is_empty()
    }

    pub fn h_hat(&self) -> &[f32] {
        &self.h_hat
    }

    pub fn v_hat(&self) -> &[f32] {
        &self.v_hat
    }

    pub fn intensity(&self) -> &[f32] {
        &self.intensity
    }

    pub fn params(&self) -> &HviParams {
        &self.params
    }

    /// Replaces the parameter snapshot without touching the planes.
    pub fn with_params(mut self, params: HviParams) -> Self {
        self.params = params;
        self
    }

    /// Largest amount by which any pixel leaves the valid solid: chroma
    /// radius beyond `C_k(I)`, or intensity outside `[0, 1]`.
    pub fn domain_excess(&self) -> f32 {
        let kernel = Kernel::new(&self.params);
        let mut worst = 0.0f32;
        for i in 0..self.len() {
            let (h, v, t) = (self.h_hat[i], self.v_hat[i], self.intensity[i]);
            if !(h.is_finite() && v.is_finite() && t.is_finite()) {
                return f32::INFINITY;
            }
            let out_of_range = (-t).max(t - 1.0).max(0.0);
            let radius = h.hypot(v) - kernel.collapse(t.clamp(0.0, 1.0));
            worst = worst.max(out_of_range).max(radius);
        }
        worst
    }

    /// Fails if any pixel lies outside the valid solid by more than `tol`.
    pub fn check_domain(&self, tol: f32) -> Result<()> {
        let excess = self.domain_excess();
        if excess > tol {
            return Err(Error::InvalidImage(format!(
                "HVI samples leave the valid domain by {excess}"
            )));
        }
        Ok(())
    }
}
