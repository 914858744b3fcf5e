//! Forward (sRGB -> HVI) and perceptual inverse (HVI -> sRGB) transforms.

use std::f32::consts::{FRAC_PI_2, PI, TAU};

use crate::buffer::{clip_unit, Plane, RgbImage};
use crate::generalize::{HueRemap, SatFn};
use crate::par;

use super::collapse::Collapser;
use super::hsv::{hsv_to_rgb_pixel, rgb_to_hsv_pixel};
use super::{HviImage, HviParams};

/// Below this weight the inverse saturation is defined as 0.
pub const MIN_SAT_WEIGHT: f32 = 1e-6;

/// `(sin, cos)` of `pi / 3 * p6` for a hue on the `[0, 6]` axis.
///
/// Reduces to a quarter turn around the nearest multiple of `pi / 2` and
/// evaluates short Taylor polynomials there (truncation error below 2e-9).
#[inline]
pub(crate) fn sin_cos_sextant(p6: f32) -> (f32, f32) {
    let q = p6 * (2.0 / 3.0);
    let k = q.round();
    let r = (q - k) * FRAC_PI_2;
    let r2 = r * r;
    let s = r * (1.0 + r2 * (-1.0 / 6.0 + r2 * (1.0 / 120.0 + r2 * (-1.0 / 5040.0 + r2 * (1.0 / 362_880.0)))));
    let c = 1.0
        + r2 * (-0.5 + r2 * (1.0 / 24.0 + r2 * (-1.0 / 720.0 + r2 * (1.0 / 40_320.0 - r2 * (1.0 / 3_628_800.0)))));
    match (k as i32) & 3 {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    }
}

/// `atan2(y, x)` as a fraction of a turn in `[0, 1)`.
///
/// Minimax polynomial for `atan` on `[0, 1]`, absolute error about 1.3e-7 rad
/// in single precision, several times cheaper than `f32::atan2`.
#[inline]
pub(crate) fn atan2_turns(y: f32, x: f32) -> f32 {
    const C: [f32; 8] = [
        0.999_999_34,
        -0.333_298_6,
        0.199_465_65,
        -0.139_086_28,
        0.096_421_91,
        -0.055_912_24,
        0.021_862_896,
        -0.004_054_549,
    ];
    let (ax, ay) = (x.abs(), y.abs());
    let swap = ay > ax;
    let (num, den) = if swap { (ax, ay) } else { (ay, ax) };
    if den == 0.0 {
        return 0.0;
    }
    let a = num / den;
    let u = a * a;
    let mut p = C[7];
    for c in C[..7].iter().rev() {
        p = p * u + c;
    }
    let mut r = a * p;
    if swap {
        r = FRAC_PI_2 - r;
    }
    if x < 0.0 {
        r = PI - r;
    }
    let mut t = r / TAU;
    if y < 0.0 {
        t = 1.0 - t;
    }
    if t >= 1.0 {
        0.0
    } else {
        t
    }
}

/// Per-pixel evaluator holding everything derived from [`HviParams`].
#[derive(Debug, Clone, Copy)]
pub(crate) struct Kernel<'a> {
    collapse: Collapser,
    remap: HueRemap,
    sat_fn: &'a SatFn,
    epsilon: f32,
    alpha_s: f32,
    alpha_i: f32,
}

impl<'a> Kernel<'a> {
    pub(crate) fn new(params: &'a HviParams) -> Self {
        Self {
            collapse: Collapser::new(params),
            remap: *params.remap(),
            sat_fn: params.sat_fn(),
            epsilon: params.epsilon() as f32,
            alpha_s: params.alpha_s() as f32,
            alpha_i: params.alpha_i() as f32,
        }
    }

    #[inline]
    pub(crate) fn collapse(&self, i: f32) -> f32 {
        self.collapse.eval(i)
    }

    /// Remapped hue on the six-unit axis.
    #[inline]
    pub(crate) fn remapped(&self, hue: f32) -> f32 {
        let h6 = 6.0 * hue;
        if self.remap.is_identity() {
            h6
        } else {
            self.remap.apply_clamped(h6 as f64) as f32
        }
    }

    #[inline]
    pub(crate) fn sat_weight(&self, p6: f32) -> f32 {
        if self.sat_fn.is_unit() {
            1.0
        } else {
            self.sat_fn.eval(p6 as f64 / 6.0) as f32
        }
    }

    /// Unit direction `(cos, sin)` of the polarised hue, plus the remapped hue.
    #[inline]
    pub(crate) fn direction(&self, hue: f32) -> (f32, f32, f32) {
        let p6 = self.remapped(hue);
        let (sin, cos) = sin_cos_sextant(p6);
        (cos, sin, p6)
    }

    #[inline]
    pub(crate) fn forward_hsv(&self, h: f32, s: f32, v: f32) -> (f32, f32, f32) {
        if s == 0.0 {
            return (0.0, 0.0, v);
        }
        let (cos, sin, p6) = self.direction(h);
        let radius = self.collapse(v) * self.sat_weight(p6) * s;
        (radius * cos, radius * sin, v)
    }

    #[inline]
    pub(crate) fn forward(&self, r: f32, g: f32, b: f32) -> (f32, f32, f32) {
        let (h, s, v) = rgb_to_hsv_pixel(r, g, b);
        self.forward_hsv(h, s, v)
    }

    /// HVI -> HSV, applying the saturation and intensity gains.
    #[inline]
    pub(crate) fn inverse_hsv(&self, hh: f32, vv: f32, i: f32) -> (f32, f32, f32) {
        let denom = self.collapse(i) + self.epsilon;
        let h = hh / denom;
        let v = vv / denom;
        let value = clip_unit(self.alpha_i * i);
        if h == 0.0 && v == 0.0 {
            return (0.0, 0.0, value);
        }
        let t = atan2_turns(v, h);
        let p6 = 6.0 * t;
        let hue = if self.remap.is_identity() {
            t
        } else {
            let h6 = self.remap.invert_clamped(p6 as f64) as f32;
            let hue = h6 / 6.0;
            if hue >= 1.0 {
                0.0
            } else {
                hue
            }
        };
        let weight = self.sat_weight(p6);
        let sat = if weight < MIN_SAT_WEIGHT {
            0.0
        } else {
            clip_unit(self.alpha_s * (h * h + v * v).sqrt() / weight)
        };
        (if sat == 0.0 { 0.0 } else { hue }, sat, value)
    }

    #[inline]
    pub(crate) fn inverse(&self, hh: f32, vv: f32, i: f32) -> (f32, f32, f32) {
        let (h, s, v) = self.inverse_hsv(hh, vv, i);
        hsv_to_rgb_pixel(h, s, v)
    }

    /// Projects a point into the valid solid: intensity into `[0, 1]` and the
    /// chroma radius onto at most `C_k(I)`.
    #[inline]
    pub(crate) fn clip(&self, hh: f32, vv: f32, i: f32) -> (f32, f32, f32) {
        let i = clip_unit(i);
        if !(hh.is_finite() && vv.is_finite()) {
            return (0.0, 0.0, i);
        }
        let r_max = self.collapse(i);
        let r = hh.hypot(vv);
        if r <= r_max {
            return (hh, vv, i);
        }
        let scale = r_max / r;
        let (mut h, mut v) = (hh * scale, vv * scale);
        // rounding can leave the projection a hair outside
        while h.hypot(v) > r_max {
            h *= 1.0 - f32::EPSILON;
            v *= 1.0 - f32::EPSILON;
        }
        (h, v, i)
    }
}

/// Embeds hue (turns) on the unit circle after the remap.
pub fn polarize_hue(hue: &Plane, params: &HviParams) -> (Plane, Plane) {
    let kernel = Kernel::new(params);
    let data = hue.data();
    let [h, v, _] = par::map3(data, data, data, |t, _, _| {
        let (cos, sin, _) = kernel.direction(t);
        (cos, sin, 0.0)
    });
    (
        Plane::from_parts(hue.width(), hue.height(), h),
        Plane::from_parts(hue.width(), hue.height(), v),
    )
}

/// sRGB -> HVI.
pub fn rgb_to_hvi(img: &RgbImage, params: &HviParams) -> HviImage {
    let kernel = Kernel::new(params);
    let [r, g, b] = img.planes();
    let [hh, vv, i] = par::map3(r, g, b, |r, g, b| kernel.forward(r, g, b));
    HviImage::from_parts(img.width(), img.height(), [hh, vv, i], params.clone())
}

/// HVI -> sRGB using the gains and maps in `params`.
pub fn hvi_to_rgb(img: &HviImage, params: &HviParams) -> RgbImage {
    let kernel = Kernel::new(params);
    let planes = par::map3(img.h_hat(), img.v_hat(), img.intensity(), |h, v, i| {
        kernel.inverse(h, v, i)
    });
    RgbImage::from_parts(img.width(), img.height(), planes)
}

/// Projects every pixel into the valid HVI solid.
pub fn clip_to_domain(img: &HviImage) -> HviImage {
    let kernel = Kernel::new(img.params());
    let planes = par::map3(img.h_hat(), img.v_hat(), img.intensity(), |h, v, i| {
        kernel.clip(h, v, i)
    });
    HviImage::from_parts(img.width(), img.height(), planes, img.params().clone())
}
