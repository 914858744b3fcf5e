//! Synthetic low-light / reference pairs with known chroma noise.
//!
//! Each reference has three bands:
//!
//! - a dark band (V 0.06..0.12) of weakly saturated colors,
//! - a red band whose hue straddles the 0/1 seam,
//! - a well-lit band of ordinary colors.
//!
//! The low-light image is the reference dimmed by a per-image factor in
//! 0.25..0.4 with noise injected in HSV: random hue and saturation in the
//! dark band, hue jitter of up to 0.01 turn in the red band, and slight
//! jitter elsewhere.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::buffer::RgbImage;
use crate::space::hsv_to_rgb_pixel;

/// Fraction of rows in the dark band.
pub const DARK_FRACTION: f32 = 0.5;
/// Fraction of rows in the red band.
pub const RED_FRACTION: f32 = 0.1;

fn wrap(h: f32) -> f32 {
    let w = h - h.floor();
    if w >= 1.0 {
        0.0
    } else {
        w
    }
}

fn to_rgb(w: usize, h: usize, hsv: &[(f32, f32, f32)]) -> RgbImage {
    let data: Vec<f32> = hsv
        .iter()
        .flat_map(|&(h, s, v)| {
            let (r, g, b) = hsv_to_rgb_pixel(h, s, v);
            [r, g, b]
        })
        .collect();
    RgbImage::from_interleaved(w, h, &data).expect("synthetic samples are in range")
}

/// Returns `(lowlight, reference)` for `seed`.
pub fn noisy_low_light_pair(width: usize, height: usize, seed: u64) -> (RgbImage, RgbImage) {
    assert!(width >= 1 && height >= 10, "synthetic pairs need at least 10 rows");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dark_rows = (height as f32 * DARK_FRACTION).round() as usize;
    let red_rows = ((height as f32 * RED_FRACTION).round() as usize).max(1);
    let dim = rng.gen_range(0.25f32..0.4);
    let hue_base: f32 = rng.gen_range(0.15..0.85);
    let hue_slope: f32 = rng.gen_range(-0.3..0.3);

    let mut reference = Vec::with_capacity(width * height);
    let mut low = Vec::with_capacity(width * height);
    for y in 0..height {
        for x in 0..width {
            let u = x as f32 / width as f32;
            if y < dark_rows {
                let r = (
                    wrap(hue_base + hue_slope * u),
                    rng.gen_range(0.1..0.3),
                    rng.gen_range(0.06..0.12),
                );
                reference.push(r);
                low.push((rng.gen_range(0.0..1.0), rng.gen_range(0.1..0.4), dim * r.2));
            } else if y < dark_rows + red_rows {
                let r = (
                    wrap(rng.gen_range(-0.006..0.006)),
                    rng.gen_range(0.6..0.9),
                    rng.gen_range(0.5..0.9),
                );
                reference.push(r);
                low.push((wrap(r.0 + rng.gen_range(-0.01..0.01)), r.1, dim * r.2));
            } else {
                let r = (
                    0.1 + 0.8 * wrap(hue_base + 0.5 * u + 0.01 * y as f32),
                    rng.gen_range(0.3..0.7),
                    rng.gen_range(0.3..0.9),
                );
                reference.push(r);
                low.push((
                    wrap(r.0 + rng.gen_range(-0.002..0.002)),
                    (r.1 + rng.gen_range(-0.01f32..0.01)).clamp(0.0, 1.0),
                    dim * r.2,
                ));
            }
        }
    }
    (to_rgb(width, height, &low), to_rgb(width, height, &reference))
}

/// `count` pairs with seeds `seed, seed + 1, ...`.
pub fn corpus(count: usize, width: usize, height: usize, seed: u64) -> Vec<(RgbImage, RgbImage)> {
    (0..count as u64)
        .map(|i| noisy_low_light_pair(width, height, seed.wrapping_add(i)))
        .collect()
}
