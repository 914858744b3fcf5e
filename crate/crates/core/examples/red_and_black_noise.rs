//! Why HVI: near-red hues sit at opposite ends of the HSV hue axis, and dark
//! pixels carry arbitrary hue. Compare pixel distances in each space.

use hvi::metrics::{error_map, ErrorSpace};
use hvi::space::hsv_to_rgb_pixel;
use hvi::{HviParams, RgbImage};

fn pixel(h: f32, s: f32, v: f32) -> RgbImage {
    let (r, g, b) = hsv_to_rgb_pixel(h, s, v);
    RgbImage::filled(1, 1, [r, g, b]).unwrap()
}

fn row(label: &str, a: &RgbImage, b: &RgbImage, params: &HviParams) {
    print!("{label:<28}");
    for space in ErrorSpace::ALL {
        let d = error_map(a, b, space, params).unwrap().data()[0];
        print!("{d:>10.5}");
    }
    println!();
}

fn main() {
    print!("{:<28}", "pair");
    for space in ErrorSpace::ALL {
        print!("{:>10}", space.name());
    }
    println!();

    for k in [0.5, 1.0, 4.0] {
        let params = HviParams::new(k).unwrap();
        println!("k = {k}");
        row("  red 0.001 vs 0.999", &pixel(0.001, 1.0, 1.0), &pixel(0.999, 1.0, 1.0), &params);
        row("  dark 0.1 vs 0.6, V=0.01", &pixel(0.1, 0.9, 0.01), &pixel(0.6, 0.9, 0.01), &params);
        row("  bright 0.1 vs 0.6, V=0.9", &pixel(0.1, 0.9, 0.9), &pixel(0.6, 0.9, 0.9), &params);
    }
}
