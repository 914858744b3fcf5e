//! sRGB -> HVI -> sRGB on a PNG (or a generated gradient).
//!
//!     cargo run --example forward_inverse [-- input.png [k]]

use hvi::imgio::{load_rgb, save_rgb};
use hvi::metrics::psnr;
use hvi::{hvi_to_rgb, rgb_to_hvi, HviParams, RgbImage};

fn main() -> hvi::Result<()> {
    let mut args = std::env::args().skip(1);
    let img = match args.next() {
        Some(path) => load_rgb(path)?,
        None => RgbImage::from_fn(256, 128, |x, y| {
            [x as f32 / 255.0, y as f32 / 127.0, 1.0 - x as f32 / 255.0]
        })?,
    };
    let k: f64 = args.next().map_or(1.0, |s| s.parse().expect("k must be a number"));
    let params = HviParams::new(k)?;

    let hvi = rgb_to_hvi(&img, &params);
    let max_radius = hvi
        .h_hat()
        .iter()
        .zip(hvi.v_hat())
        .map(|(h, v)| h.hypot(*v))
        .fold(0.0f32, f32::max);
    println!("{}x{} image, k = {k}", hvi.width(), hvi.height());
    println!("largest chroma radius {max_radius:.4}, domain excess {:.2e}", hvi.domain_excess());

    let back = hvi_to_rgb(&hvi, &params);
    println!("round trip PSNR {:.2} dB", psnr(&back, &img)?);

    // brighten and desaturate on the way back
    let tweaked = hvi_to_rgb(&hvi, &params.clone().with_alpha(0.6, 1.3)?);
    let out = std::env::temp_dir().join("hvi_forward_inverse.png");
    save_rgb(&tweaked, &out)?;
    println!("alpha_s = 0.6, alpha_i = 1.3 -> {}", out.display());
    Ok(())
}
