//! Max-RGB intensity and the sRGB <-> HSV conversion.

use crate::buffer::{clip_unit, HsvImage, Plane, RgbImage};
use crate::par;

/// Converts one pixel to `(hue in turns, saturation, value)`.
///
/// When two channels tie for the maximum the hue branch is chosen in R, G, B
/// order. Hue is 0 wherever saturation is 0.
#[inline]
pub fn rgb_to_hsv_pixel(r: f32, g: f32, b: f32) -> (f32, f32, f32) {
    let v = r.max(g).max(b);
    let delta = v - r.min(g).min(b);
    if !(v > 0.0) || !(delta > 0.0) {
        return (0.0, 0.0, v.max(0.0));
    }
    let s = delta / v;
    let h6 = if r == v {
        let x = (g - b) / delta;
        if x < 0.0 {
            x + 6.0
        } else {
            x
        }
    } else if g == v {
        2.0 + (b - r) / delta
    } else {
        4.0 + (r - g) / delta
    };
    let h = h6 / 6.0;
    // x + 6 can round up to exactly 6
    (if h >= 1.0 { 0.0 } else { h }, s, v)
}

/// Converts one HSV pixel (hue in turns) back to clipped RGB.
#[inline]
pub fn hsv_to_rgb_pixel(h: f32, s: f32, v: f32) -> (f32, f32, f32) {
    let v = clip_unit(v);
    let s = clip_unit(s);
    if s == 0.0 {
        return (v, v, v);
    }
    let h = if (0.0..1.0).contains(&h) {
        h
    } else if h.is_finite() {
        h - h.floor()
    } else {
        0.0
    };
    let h6 = h * 6.0;
    // h6 >= 0, so truncation is floor
    let sector = h6 as i32;
    let f = h6 - sector as f32;
    let p = v * (1.0 - s);
    let q = v * (1.0 - s * f);
    let t = v * (1.0 - s * (1.0 - f));
    let (r, g, b) = match sector {
        0 | 6 => (v, t, p),
        1 => (q, v, p),
        2 => (p, v, t),
        3 => (p, q, v),
        4 => (t, p, v),
        _ => (v, p, q),
    };
    // every branch is v times a factor in [0, 1]
    (r, g, b)
}

/// Per-pixel maximum of R, G and B.
pub fn intensity_map(img: &RgbImage) -> Plane {
    let [r, g, b] = img.planes();
    let mut out = vec![0.0f32; img.len()];
    for (i, o) in out.iter_mut().enumerate() {
        *o = r[i].max(g[i]).max(b[i]);
    }
    Plane::from_parts(img.width(), img.height(), out)
}

pub fn rgb_to_hsv(img: &RgbImage) -> HsvImage {
    let [r, g, b] = img.planes();
    let planes = par::map3(r, g, b, rgb_to_hsv_pixel);
    HsvImage::from_parts(img.width(), img.height(), planes)
}

pub fn hsv_to_rgb(img: &HsvImage) -> RgbImage {
    let planes = par::map3(img.hue(), img.saturation(), img.value(), hsv_to_rgb_pixel);
    RgbImage::from_parts(img.width(), img.height(), planes)
}
