//! Camera-adaptive pieces: the piecewise hue remap, hue-dependent saturation
//! weights, and seeded random gamma augmentation.

use hvi::generalize::{draw_gamma, random_gamma_augment, SatTable};
use hvi::metrics::mean_luma;
use hvi::{hvi_to_rgb, rgb_to_hvi, HueRemap, HviParams, RgbImage, SatFn};

fn main() -> hvi::Result<()> {
    let remap = HueRemap::new(1.6, 4.4)?;
    println!("hue remap gamma_g = 1.6, gamma_b = 4.4");
    for h in [0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0] {
        let p = remap.apply(h)?;
        println!("  P({h}) = {p:.3}, inverse {:.3}", remap.invert(p)?);
    }

    // periodic table that peaks at blue
    let table = SatTable::from_fn(|x| 0.75 + 0.25 * (std::f64::consts::TAU * (x - 2.0 / 3.0)).cos())?;
    for (name, f) in [("unit", SatFn::Unit), ("parabolic", SatFn::Parabolic), ("custom", SatFn::Custom(table))] {
        let weights: Vec<String> = [0.0, 1.0 / 6.0, 0.5, 2.0 / 3.0].iter().map(|x| format!("{:.3}", f.eval(*x))).collect();
        println!("saturation weight {name:<10} at R, Y, C, B: {}", weights.join(" "));
    }

    let img = RgbImage::from_fn(64, 64, |x, y| [0.2 + x as f32 / 100.0, 0.5, 0.3 + y as f32 / 120.0])?;
    let params = HviParams::new(1.5)?.with_remap(remap).with_sat_fn(SatFn::Parabolic);
    // the parabolic weight is 0 at red, so reddish pixels lose their saturation
    let back = hvi_to_rgb(&rgb_to_hvi(&img, &params), &params);
    println!("round trip with remap + parabolic weight: PSNR {:.2} dB", hvi::metrics::psnr(&back, &img)?);

    for seed in 0..4 {
        let aug = random_gamma_augment(&img, seed);
        println!("seed {seed}: gamma {:.3}, mean luma {:.4} -> {:.4}", draw_gamma(seed), mean_luma(&img), mean_luma(&aug));
    }
    Ok(())
}
