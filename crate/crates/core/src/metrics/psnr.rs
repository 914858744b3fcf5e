use crate::buffer::RgbImage;
use crate::error::Result;
use crate::par;

/// Mean squared error over every sample of the three channels.
pub fn mse(pred: &RgbImage, reference: &RgbImage) -> Result<f64> {
    pred.same_dims(reference)?;
    let (a, b) = (pred.planes(), reference.planes());
    let n = pred.len();
    let total = par::sum_f64(n, |i| {
        (0..3)
            .map(|c| {
                let d = a[c][i] as f64 - b[c][i] as f64;
                d * d
            })
            .sum::<f64>()
    });
    Ok(total / (3 * n) as f64)
}

/// Converts a unit-peak MSE to decibels; 0 maps to `+inf`.
pub fn mse_to_psnr(mse: f64) -> f64 {
    if mse <= 0.0 {
        f64::INFINITY
    } else {
        -10.0 * mse.log10()
    }
}

/// Peak signal-to-noise ratio in dB with a peak of 1. Identical images give `+inf`.
pub fn psnr(pred: &RgbImage, reference: &RgbImage) -> Result<f64> {
    Ok(mse_to_psnr(mse(pred, reference)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let a = RgbImage::filled(4, 4, [0.2, 0.3, 0.4]).unwrap();
        assert_eq!(psnr(&a, &a).unwrap(), f64::INFINITY);

        let b = a.map_samples(|x| x + 0.1);
        assert!((psnr(&b, &a).unwrap() - 20.0).abs() < 1e-5);

        let checker = RgbImage::from_fn(4, 4, |x, y| [((x + y) % 2) as f32; 3]).unwrap();
        let gray = RgbImage::filled(4, 4, [0.5; 3]).unwrap();
        // MSE 0.25 -> 10 log10(4)
        assert!((psnr(&checker, &gray).unwrap() - 6.020_599_913_279_624).abs() < 1e-9);
    }

    #[test]
    fn dimension_mismatch() {
        let a = RgbImage::filled(4, 4, [0.0; 3]).unwrap();
        let b = RgbImage::filled(4, 5, [0.0; 3]).unwrap();
        assert!(psnr(&a, &b).is_err());
    }
}
