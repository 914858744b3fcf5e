use crate::error::{Error, Result};
use crate::generalize::{HueRemap, SatFn};

use super::collapse::CollapseVariant;

/// Numerical guard used inside the collapse root and the inverse denominators.
pub const EPSILON: f64 = 1e-8;

/// Parameters shared by the forward and inverse transforms.
///
/// `k` is the darkness density: larger values keep more chroma in dark
/// regions, smaller values collapse it harder. `alpha_s` and `alpha_i`
/// only affect the inverse transform.
#[derive(Debug, Clone, PartialEq)]
pub struct HviParams {
    k: f64,
    epsilon: f64,
    variant: CollapseVariant,
    remap: HueRemap,
    sat_fn: SatFn,
    alpha_s: f64,
    alpha_i: f64,
}

impl Default for HviParams {
    fn default() -> Self {
        Self {
            k: 1.0,
            epsilon: EPSILON,
            variant: CollapseVariant::Sin,
            remap: HueRemap::IDENTITY,
            sat_fn: SatFn::Unit,
            alpha_s: 1.0,
            alpha_i: 1.0,
        }
    }
}

fn positive(name: &str, x: f64) -> Result<f64> {
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(Error::InvalidParam(format!("{name} must be a positive finite number, got {x}")))
    }
}

fn non_negative(name: &str, x: f64) -> Result<f64> {
    if x.is_finite() && x >= 0.0 {
        Ok(x)
    } else {
        Err(Error::InvalidParam(format!("{name} must be a non-negative finite number, got {x}")))
    }
}

impl HviParams {
    /// Default parameters with density `k`.
    pub fn new(k: f64) -> Result<Self> {
        Self::default().with_k(k)
    }

    pub fn with_k(mut self, k: f64) -> Result<Self> {
        self.k = positive("k", k)?;
        Ok(self)
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Result<Self> {
        self.epsilon = positive("epsilon", epsilon)?;
        Ok(self)
    }

    pub fn with_variant(mut self, variant: CollapseVariant) -> Self {
        self.variant = variant;
        self
    }

    pub fn with_remap(mut self, remap: HueRemap) -> Self {
        self.remap = remap;
        self
    }

    pub fn with_sat_fn(mut self, sat_fn: SatFn) -> Self {
        self.sat_fn = sat_fn;
        self
    }

    /// Sets the inverse-transform saturation and intensity gains. Zero is
    /// allowed: `alpha_s = 0` renders grayscale.
    pub fn with_alpha(mut self, alpha_s: f64, alpha_i: f64) -> Result<Self> {
        self.alpha_s = non_negative("alpha_s", alpha_s)?;
        self.alpha_i = non_negative("alpha_i", alpha_i)?;
        Ok(self)
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn variant(&self) -> CollapseVariant {
        self.variant
    }

    pub fn remap(&self) -> &HueRemap {
        &self.remap
    }

    pub fn gamma_g(&self) -> f64 {
        self.remap.gamma_g()
    }

    pub fn gamma_b(&self) -> f64 {
        self.remap.gamma_b()
    }

    pub fn sat_fn(&self) -> &SatFn {
        &self.sat_fn
    }

    pub fn alpha_s(&self) -> f64 {
        self.alpha_s
    }

    pub fn alpha_i(&self) -> f64 {
        self.alpha_i
    }

    /// Collapse radius at intensity `i`, `(F(i) + eps)^(1/k)`.
    pub fn collapse(&self, i: f64) -> f64 {
        super::collapse::collapse_value(i, self.k, self.variant, self.epsilon)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(HviParams::new(0.0).is_err());
        assert!(HviParams::new(-1.0).is_err());
        assert!(HviParams::new(f64::NAN).is_err());
        assert!(HviParams::default().with_epsilon(0.0).is_err());
        assert!(HviParams::default().with_alpha(0.0, 1.0).is_ok());
        assert!(HviParams::default().with_alpha(1.0, -1.0).is_err());
        assert!(HviParams::default().with_alpha(f64::INFINITY, 1.0).is_err());
        let p = HviParams::new(2.5).unwrap().with_alpha(0.5, 2.0).unwrap();
        assert_eq!((p.k(), p.alpha_s(), p.alpha_i()), (2.5, 0.5, 2.0));
        assert_eq!(p.epsilon(), 1e-8);
    }
}
