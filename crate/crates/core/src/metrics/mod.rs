//! Evaluation protocol: fidelity metrics, brightness alignment, and the
//! color-space ablation built on value-replacement correction.

mod ablation;
mod correct;
mod psnr;
mod ssim;

pub use ablation::{
    corrected_space_psnr, mean_psnr_corrected, space_psnr, AblationReport, AblationSpace,
};
pub use correct::{correct_value, error_map, ErrorSpace};
pub use psnr::{mse, mse_to_psnr, psnr};
pub use ssim::{ssim, ssim_plane};

use crate::buffer::RgbImage;
use crate::error::{Error, Result};
use crate::par;

/// ITU-R BT.601 luma weights.
pub const LUMA_WEIGHTS: [f32; 3] = [0.299, 0.587, 0.114];

/// Mean luma of the image.
pub fn mean_luma(img: &RgbImage) -> f64 {
    let [r, g, b] = img.planes();
    let [wr, wg, wb] = LUMA_WEIGHTS.map(f64::from);
    par::sum_f64(img.len(), |i| {
        wr * r[i] as f64 + wg * g[i] as f64 + wb * b[i] as f64
    }) / img.len() as f64
}

/// Brightness ratio `q = mean_luma(pred) / mean_luma(reference)`.
pub fn gt_mean_factor(pred: &RgbImage, reference: &RgbImage) -> Result<f64> {
    pred.same_dims(reference)?;
    let mean_ref = mean_luma(reference);
    if !(mean_ref > 0.0) {
        return Err(Error::ZeroMeanReference);
    }
    Ok(mean_luma(pred) / mean_ref)
}

/// Scales `pred` by `1 / q` so its mean luma matches the reference, then clips.
pub fn gt_mean_normalize(pred: &RgbImage, reference: &RgbImage) -> Result<RgbImage> {
    let q = gt_mean_factor(pred, reference)?;
    if q == 0.0 {
        // all-black prediction cannot be brightened
        return Ok(pred.clone());
    }
    let gain = (1.0 / q) as f32;
    Ok(pred.map_samples(move |x| x * gain))
}

/// Scores for one prediction / reference pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QualityReport {
    /// dB; `+inf` for identical images.
    pub psnr: f64,
    pub ssim: f64,
    /// Mean luma of the prediction before any alignment.
    pub mean_pred: f64,
    pub mean_ref: f64,
    /// `mean_pred / mean_ref`; NaN when the reference is black.
    pub q: f64,
    pub gt_mean_applied: bool,
}

/// Scores `pred` against `reference`, optionally after GT-mean alignment.
pub fn quality_report(pred: &RgbImage, reference: &RgbImage, gt_mean: bool) -> Result<QualityReport> {
    pred.same_dims(reference)?;
    let mean_pred = mean_luma(pred);
    let mean_ref = mean_luma(reference);
    let q = if mean_ref > 0.0 {
        mean_pred / mean_ref
    } else {
        f64::NAN
    };
    let aligned;
    let scored = if gt_mean {
        aligned = gt_mean_normalize(pred, reference)?;
        &aligned
    } else {
        pred
    };
    Ok(QualityReport {
        psnr: psnr(scored, reference)?,
        ssim: ssim(scored, reference)?,
        mean_pred,
        mean_ref,
        q,
        gt_mean_applied: gt_mean,
    })
}
