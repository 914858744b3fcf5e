//! Camera and scene adaptation maps: the piecewise-linear hue remap, the
//! hue-dependent saturation weight, and random gamma augmentation.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::buffer::RgbImage;
use crate::error::{Error, Result};

/// Lower and upper bound of the augmentation exponent.
pub const GAMMA_RANGE: (f64, f64) = (0.6, 1.2);

/// Number of samples in a [`SatTable`].
pub const SAT_TABLE_LEN: usize = 257;

/// Piecewise-linear remap of the six-unit hue axis.
///
/// Red stays anchored at 0 and 6 while green (2) and blue (4) move to
/// `gamma_g` and `gamma_b`. Each segment is linear, so the map is a
/// strictly increasing bijection of `[0, 6]` whenever `0 < gamma_g < gamma_b < 6`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HueRemap {
    gamma_g: f64,
    gamma_b: f64,
}

impl Default for HueRemap {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl HueRemap {
    pub const IDENTITY: HueRemap = HueRemap {
        gamma_g: 2.0,
        gamma_b: 4.0,
    };

    pub fn new(gamma_g: f64, gamma_b: f64) -> Result<Self> {
        if !(gamma_g.is_finite() && gamma_b.is_finite()) {
            return Err(Error::InvalidParam("gamma_g and gamma_b must be finite".into()));
        }
        if !(0.0 < gamma_g && gamma_g < gamma_b && gamma_b < 6.0) {
            return Err(Error::InvalidParam(format!(
                "hue remap requires 0 < gamma_g < gamma_b < 6, got gamma_g={gamma_g}, gamma_b={gamma_b}"
            )));
        }
        Ok(Self { gamma_g, gamma_b })
    }

    pub fn gamma_g(&self) -> f64 {
        self.gamma_g
    }

    pub fn gamma_b(&self) -> f64 {
        self.gamma_b
    }

    pub fn is_identity(&self) -> bool {
        self.gamma_g == 2.0 && self.gamma_b == 4.0
    }

    fn check(x: f64) -> Result<()> {
        if (0.0..=6.0).contains(&x) {
            Ok(())
        } else {
            Err(Error::OutOfDomain {
                value: x,
                min: 0.0,
                max: 6.0,
            })
        }
    }

    /// Remaps a hue on the `[0, 6]` axis.
    pub fn apply(&self, h6: f64) -> Result<f64> {
        Self::check(h6)?;
        Ok(self.apply_clamped(h6))
    }

    /// Inverse of [`HueRemap::apply`].
    pub fn invert(&self, p: f64) -> Result<f64> {
        Self::check(p)?;
        Ok(self.invert_clamped(p))
    }

    pub(crate) fn apply_clamped(&self, h6: f64) -> f64 {
        if self.is_identity() {
            return h6.clamp(0.0, 6.0);
        }
        let h = h6.clamp(0.0, 6.0);
        let (g, b) = (self.gamma_g, self.gamma_b);
        if h < 2.0 {
            0.5 * g * h
        } else if h < 4.0 {
            0.5 * (b - g) * (h - 2.0) + g
        } else {
            0.5 * (6.0 - b) * (h - 6.0) + 6.0
        }
    }

    pub(crate) fn invert_clamped(&self, p: f64) -> f64 {
        if self.is_identity() {
            return p.clamp(0.0, 6.0);
        }
        let p = p.clamp(0.0, 6.0);
        let (g, b) = (self.gamma_g, self.gamma_b);
        let h = if p < g {
            2.0 * p / g
        } else if p < b {
            2.0 * (p - g) / (b - g) + 2.0
        } else {
            2.0 * (p - 6.0) / (6.0 - b) + 6.0
        };
        h.clamp(0.0, 6.0)
    }
}

/// Tabulated saturation weight over `[0, 1]`, linearly interpolated.
#[derive(Debug, Clone, PartialEq)]
pub struct SatTable {
    values: Vec<f64>,
}

impl SatTable {
    /// Accepts exactly [`SAT_TABLE_LEN`] finite samples in `[0, 1]` whose
    /// endpoints agree within 1e-9.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() != SAT_TABLE_LEN {
            return Err(Error::InvalidParam(format!(
                "saturation table needs {SAT_TABLE_LEN} values, got {}",
                values.len()
            )));
        }
        if let Some((i, v)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && (0.0..=1.0).contains(*v)))
        {
            return Err(Error::InvalidParam(format!(
                "saturation table entry {i} = {v} outside [0, 1]"
            )));
        }
        if (values[0] - values[SAT_TABLE_LEN - 1]).abs() > 1e-9 {
            return Err(Error::InvalidParam(format!(
                "saturation table endpoints differ: {} vs {}",
                values[0],
                values[SAT_TABLE_LEN - 1]
            )));
        }
        Ok(Self { values })
    }

    /// Tabulates `f` at `SAT_TABLE_LEN` evenly spaced points of `[0, 1]`.
    pub fn from_fn(f: impl Fn(f64) -> f64) -> Result<Self> {
        let n = (SAT_TABLE_LEN - 1) as f64;
        Self::new((0..SAT_TABLE_LEN).map(|i| f(i as f64 / n)).collect())
    }

    /// Parses whitespace-separated decimal values.
    pub fn parse(text: &str) -> Result<Self> {
        let values = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<f64>()
                    .map_err(|e| Error::InvalidParam(format!("bad table value {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = (SAT_TABLE_LEN - 1) as f64;
        let t = x.clamp(0.0, 1.0) * n;
        let i = (t.floor() as usize).min(SAT_TABLE_LEN - 2);
        let f = t - i as f64;
        self.values[i] * (1.0 - f) + self.values[i + 1] * f
    }
}

/// Hue-dependent saturation weight.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum SatFn {
    /// Uniform sensitivity, weight 1 everywhere.
    #[default]
    Unit,
    /// `-4x(x-1)`: vanishes at red, peaks at cyan.
    Parabolic,
    Custom(SatTable),
}

impl SatFn {
    /// Weight at normalised position `x` in `[0, 1]`.
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            SatFn::Unit => 1.0,
            SatFn::Parabolic => {
                let x = x.clamp(0.0, 1.0);
                -4.0 * x * (x - 1.0)
            }
            SatFn::Custom(t) => t.eval(x),
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, SatFn::Unit)
    }
}

/// Saturation weight for an already-remapped hue `p6` on the `[0, 6]` axis.
pub fn sat_weight(p6: f64, f: &SatFn) -> f64 {
    f.eval(p6 / 6.0)
}

/// Draws the per-image exponent from a generator seeded with `seed`.
pub fn draw_gamma(seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.gen_range(GAMMA_RANGE.0..=GAMMA_RANGE.1)
}

/// Raises every sample to `gamma`.
pub fn apply_gamma(img: &RgbImage, gamma: f64) -> RgbImage {
    let g = gamma as f32;
    img.map_samples(move |x| x.powf(g))
}

/// Applies one random gamma curve, drawn uniformly from [`GAMMA_RANGE`], to
/// the whole image.
pub fn random_gamma_augment(img: &RgbImage, seed: u64) -> RgbImage {
    apply_gamma(img, draw_gamma(seed))
}
