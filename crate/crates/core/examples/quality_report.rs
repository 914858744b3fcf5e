//! PSNR / SSIM of a darkened, noisy prediction with and without GT-mean
//! brightness alignment, first through the library, then through `hvi report`.

use hvi::imgio::save_rgb;
use hvi::metrics::{gt_mean_factor, quality_report};
use hvi::RgbImage;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> hvi::Result<()> {
    let reference = RgbImage::from_fn(128, 96, |x, y| {
        let t = (x as f32 * 0.1).sin() * (y as f32 * 0.07).cos();
        [0.4 + 0.3 * t, 0.5, 0.6 - 0.2 * t]
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let noisy: Vec<f32> = reference
        .to_interleaved()
        .iter()
        .map(|v| 0.55 * (v + rng.gen_range(-0.03..0.03)))
        .collect();
    let pred = RgbImage::from_interleaved(128, 96, &noisy.iter().map(|v| v.clamp(0.0, 1.0)).collect::<Vec<_>>())?;

    println!("q = {:.4}", gt_mean_factor(&pred, &reference)?);
    for gt in [false, true] {
        let r = quality_report(&pred, &reference, gt)?;
        println!("gt_mean = {gt:<5}  PSNR {:>7.3} dB  SSIM {:.4}", r.psnr, r.ssim);
    }

    let dir = std::env::temp_dir().join("hvi_quality_report");
    std::fs::create_dir_all(&dir).ok();
    let (p, r) = (dir.join("pred.png"), dir.join("ref.png"));
    save_rgb(&pred, &p)?;
    save_rgb(&reference, &r)?;
    let code = hvi::cli::run(["hvi", "report", "--pred", p.to_str().unwrap(), "--ref", r.to_str().unwrap(), "--gt-mean"]);
    assert_eq!(code, 0);
    Ok(())
}
