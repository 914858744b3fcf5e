//! Mean structural similarity with an 11x11 Gaussian window (sigma 1.5),
//! K1 = 0.01, K2 = 0.03, over the region where the window fits entirely
//! inside the image. Channels are scored independently and averaged.

use rayon::prelude::*;

use crate::buffer::RgbImage;
use crate::error::{Error, Result};

pub const WINDOW: usize = 11;
pub const SIGMA: f64 = 1.5;
const C1: f64 = 0.01 * 0.01;
const C2: f64 = 0.03 * 0.03;

fn gaussian_taps() -> [f64; WINDOW] {
    let mut taps = [0.0; WINDOW];
    let mid = (WINDOW / 2) as f64;
    for (i, t) in taps.iter_mut().enumerate() {
        let d = i as f64 - mid;
        *t = (-d * d / (2.0 * SIGMA * SIGMA)).exp();
    }
    let sum: f64 = taps.iter().sum();
    taps.iter_mut().for_each(|t| *t /= sum);
    taps
}

/// Separable "valid" filtering: output is `(w - 10) x (h - 10)`.
fn filter_valid(src: &[f64], w: usize, h: usize, taps: &[f64; WINDOW]) -> Vec<f64> {
    let ow = w - WINDOW + 1;
    let oh = h - WINDOW + 1;
    let mut horiz = vec![0.0; ow * h];
    for y in 0..h {
        let row = &src[y * w..(y + 1) * w];
        for x in 0..ow {
            horiz[y * ow + x] = taps.iter().zip(&row[x..x + WINDOW]).map(|(t, v)| t * v).sum();
        }
    }
    let mut out = vec![0.0; ow * oh];
    for y in 0..oh {
        for x in 0..ow {
            out[y * ow + x] = taps
                .iter()
                .enumerate()
                .map(|(k, t)| t * horiz[(y + k) * ow + x])
                .sum();
        }
    }
    out
}

/// Mean SSIM of one channel pair.
pub fn ssim_plane(a: &[f32], b: &[f32], width: usize, height: usize) -> f64 {
    let taps = gaussian_taps();
    let n = width * height;
    let mut x = Vec::with_capacity(n);
    let mut y = Vec::with_capacity(n);
    let mut xx = Vec::with_capacity(n);
    let mut yy = Vec::with_capacity(n);
    let mut xy = Vec::with_capacity(n);
    for i in 0..n {
        let (p, q) = (a[i] as f64, b[i] as f64);
        x.push(p);
        y.push(q);
        xx.push(p * p);
        yy.push(q * q);
        xy.push(p * q);
    }
    let [mx, my, exx, eyy, exy] =
        [&x, &y, &xx, &yy, &xy].map(|s| filter_valid(s, width, height, &taps));
    let total: f64 = (0..mx.len())
        .map(|i| {
            let (ux, uy) = (mx[i], my[i]);
            let vx = exx[i] - ux * ux;
            let vy = eyy[i] - uy * uy;
            let cov = exy[i] - ux * uy;
            ((2.0 * ux * uy + C1) * (2.0 * cov + C2))
                / ((ux * ux + uy * uy + C1) * (vx + vy + C2))
        })
        .sum();
    total / mx.len() as f64
}

pub fn ssim(pred: &RgbImage, reference: &RgbImage) -> Result<f64> {
    pred.same_dims(reference)?;
    let (w, h) = (pred.width(), pred.height());
    if w < WINDOW || h < WINDOW {
        return Err(Error::TooSmall {
            width: w,
            height: h,
            window: WINDOW,
        });
    }
    let (a, b) = (pred.planes(), reference.planes());
    let scores: Vec<f64> = (0..3)
        .into_par_iter()
        .map(|c| ssim_plane(a[c], b[c], w, h))
        .collect();
    Ok(scores.iter().sum::<f64>() / 3.0)
}
