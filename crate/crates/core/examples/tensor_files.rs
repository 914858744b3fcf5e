//! HVI1 tensor files: write, read back, edit in HVI space, clip and invert.
//! Mirrors `hvi to-hvi` / `hvi from-hvi`.

use hvi::space::tensor::{load_hvi1, save_hvi1};
use hvi::{clip_to_domain, hvi_to_rgb, rgb_to_hvi, CollapseVariant, HviImage, HviParams, RgbImage};

fn main() -> hvi::Result<()> {
    let img = RgbImage::from_fn(32, 32, |x, y| [x as f32 / 31.0, 0.3, y as f32 / 31.0])?;
    let params = HviParams::new(2.0)?.with_variant(CollapseVariant::Log);
    let path = std::env::temp_dir().join("hvi_example.hvi1");
    save_hvi1(&rgb_to_hvi(&img, &params), &path)?;
    println!("{} bytes written to {}", std::fs::metadata(&path).map(|m| m.len()).unwrap_or(0), path.display());

    let loaded = load_hvi1(&path, &HviParams::default())?;
    println!("header: k = {}, variant = {}", loaded.params().k(), loaded.params().variant());

    // boost chroma by 1.5x; the boost pushes some points outside the valid solid
    let boosted = HviImage::from_planes(
        loaded.width(),
        loaded.height(),
        loaded.h_hat().iter().map(|h| 1.5 * h).collect(),
        loaded.v_hat().iter().map(|v| 1.5 * v).collect(),
        loaded.intensity().to_vec(),
        loaded.params().clone(),
    )?;
    println!("after boost: domain excess {:.4}", boosted.domain_excess());
    let clipped = clip_to_domain(&boosted);
    println!("after clip:  domain excess {:.4}", clipped.domain_excess());
    let out = hvi_to_rgb(&clipped, clipped.params());
    println!("mean red {:.4} -> {:.4}", img.r().iter().sum::<f32>() / 1024.0, out.r().iter().sum::<f32>() / 1024.0);
    Ok(())
}
