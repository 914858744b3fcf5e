//! The intensity collapse family `C_k(I) = (F(I) + eps)^(1/k)`.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use crate::buffer::Plane;
use crate::error::{Error, Result};
use crate::par;

use super::HviParams;

/// Shape function `F` of the collapse radius. Each variant passes through
/// (0, 0) and (1, 1) and is strictly increasing on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum CollapseVariant {
    /// `sin(pi I / 2)`
    #[default]
    Sin,
    /// `I`
    Linear,
    /// `log2(I + 1)`
    Log,
}

impl CollapseVariant {
    pub const ALL: [CollapseVariant; 3] = [Self::Sin, Self::Linear, Self::Log];

    pub fn shape(self, i: f64) -> f64 {
        match self {
            Self::Sin => (FRAC_PI_2 * i).sin(),
            Self::Linear => i,
            Self::Log => (i + 1.0).log2(),
        }
    }

    #[inline]
    pub(crate) fn shape_f32(self, i: f32) -> f32 {
        match self {
            Self::Sin => sin_half_pi(i),
            Self::Linear => i,
            Self::Log => (i + 1.0).log2(),
        }
    }

    /// Tag used by the HVI1 tensor header.
    pub fn code(self) -> u8 {
        match self {
            Self::Sin => 0,
            Self::Linear => 1,
            Self::Log => 2,
        }
    }

    pub fn from_code(code: u8) -> Option<Self> {
        match code {
            0 => Some(Self::Sin),
            1 => Some(Self::Linear),
            2 => Some(Self::Log),
            _ => None,
        }
    }
}

impl fmt::Display for CollapseVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Sin => "sin",
            Self::Linear => "linear",
            Self::Log => "log",
        })
    }
}

impl FromStr for CollapseVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sin" => Ok(Self::Sin),
            "linear" => Ok(Self::Linear),
            "log" => Ok(Self::Log),
            other => Err(Error::InvalidParam(format!(
                "unknown collapse variant {other:?} (expected sin, linear or log)"
            ))),
        }
    }
}

/// Scalar collapse radius in double precision.
pub fn collapse_value(i: f64, k: f64, variant: CollapseVariant, epsilon: f64) -> f64 {
    (variant.shape(i.clamp(0.0, 1.0)) + epsilon).powf(1.0 / k)
}

/// `sin(pi x / 2)` for `x` in `[0, 1]`; odd minimax polynomial, absolute
/// error about 2e-7. No range reduction needed, so it is much cheaper than
/// `f32::sin`.
#[inline]
fn sin_half_pi(x: f32) -> f32 {
    const C: [f32; 6] = [
        1.570_796_4,
        -0.645_964_1,
        0.079_692_59,
        -0.004_681_620_3,
        0.000_160_217_24,
        -3.418_212_6e-6,
    ];
    let u = x * x;
    let mut p = C[5];
    for c in C[..5].iter().rev() {
        p = p * u + c;
    }
    x * p
}

/// Single-precision evaluator used inside the pixel kernels.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Collapser {
    variant: CollapseVariant,
    inv_k: f32,
    unit_k: bool,
    epsilon: f32,
}

impl Collapser {
    pub(crate) fn new(params: &HviParams) -> Self {
        Self {
            variant: params.variant(),
            inv_k: (1.0 / params.k()) as f32,
            unit_k: params.k() == 1.0,
            epsilon: params.epsilon() as f32,
        }
    }

    #[inline]
    pub(crate) fn eval(&self, i: f32) -> f32 {
        let base = self.variant.shape_f32(i.clamp(0.0, 1.0)) + self.epsilon;
        if self.unit_k {
            base
        } else {
            base.powf(self.inv_k)
        }
    }
}

/// Collapse radius for every sample of an intensity plane.
pub fn collapse(intensity: &Plane, params: &HviParams) -> Plane {
    let c = Collapser::new(params);
    Plane::from_parts(
        intensity.width(),
        intensity.height(),
        par::map1(intensity.data(), |i| c.eval(i)),
    )
}
