//! HVI (Horizontal/Vertical-Intensity) color space for low-light imaging.
//!
//! The crate provides:
//!
//! - [`space`]: the forward sRGB -> HVI transform, its perceptual inverse, the
//!   intensity collapse family and the `HVI1` tensor format.
//! - [`generalize`]: the hue remap, hue-dependent saturation weights and
//!   random gamma augmentation.
//! - [`metrics`]: PSNR, SSIM, GT-mean brightness alignment, value-replacement
//!   correction, per-space error maps and the color-space ablation.
//! - [`imgio`]: PNG/PPM loading and saving, and reflect padding to multiples of 8.
//! - [`cli`]: the batch front end behind the `hvi` binary.
//! - [`synth`]: synthetic low-light pairs with known chroma noise.
//!
//! All image operations are pure and internally parallel (rayon).

pub mod buffer;
pub mod cli;
pub mod error;
pub mod generalize;
pub mod imgio;
pub mod metrics;
mod par;
pub mod space;
pub mod synth;

pub use buffer::{HsvImage, Plane, RgbImage};
pub use error::{Error, Result};
pub use generalize::{HueRemap, SatFn, SatTable};
pub use space::{
    clip_to_domain, hsv_to_rgb, hvi_to_rgb, intensity_map, polarize_hue, rgb_to_hsv, rgb_to_hvi,
    CollapseVariant, HviImage, HviParams,
};
