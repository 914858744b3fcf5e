//! Reflect padding to a multiple of 8 and the matching crop.

use hvi::imgio::{crop_to, pad_reflect8};
use hvi::RgbImage;

fn main() -> hvi::Result<()> {
    for (w, h) in [(5, 3), (8, 8), (600, 401), (1, 9)] {
        let img = RgbImage::from_fn(w, h, |x, y| [x as f32 / w as f32, y as f32 / h as f32, 0.5])?;
        let (padded, rec) = pad_reflect8(&img);
        let restored = crop_to(&padded, &rec)?;
        println!(
            "{w:>4}x{h:<4} -> {:>4}x{:<4} left {} right {} top {} bottom {}  restored: {}",
            padded.width(),
            padded.height(),
            rec.left,
            rec.right,
            rec.top,
            rec.bottom,
            restored == img
        );
    }

    let row = RgbImage::from_fn(5, 1, |x, _| [x as f32 / 4.0, 0.0, 0.0])?;
    let (padded, _) = pad_reflect8(&row);
    let reds: Vec<String> = padded.r()[..padded.width()].iter().map(|v| format!("{v:.2}")).collect();
    println!("row 0 1 2 3 4 (/4) reflected: {}", reds.join(" "));
    Ok(())
}
