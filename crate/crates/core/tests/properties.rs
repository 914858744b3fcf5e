use std::f64::consts::PI;

use hvi::imgio::{crop_to, pad_reflect8};
use hvi::metrics::{error_map, psnr, ErrorSpace};
use hvi::{clip_to_domain, hvi_to_rgb, rgb_to_hvi, CollapseVariant, HviParams, RgbImage};
use proptest::prelude::*;

/// Straight f64 transcription of the forward map with identity remap and unit saturation.
fn oracle_forward(r: f64, g: f64, b: f64, k: f64, variant: CollapseVariant) -> (f64, f64, f64) {
    let v = r.max(g).max(b);
    let min = r.min(g).min(b);
    let d = v - min;
    let s = if v > 0.0 { d / v } else { 0.0 };
    let h6 = if d == 0.0 {
        0.0
    } else if v == r {
        ((g - b) / d).rem_euclid(6.0)
    } else if v == g {
        2.0 + (b - r) / d
    } else {
        4.0 + (r - g) / d
    };
    let f = match variant {
        CollapseVariant::Sin => (PI * v / 2.0).sin(),
        CollapseVariant::Linear => v,
        CollapseVariant::Log => (v + 1.0).log2(),
    };
    let c = (f + 1e-8).powf(1.0 / k);
    let theta = PI / 3.0 * h6;
    (c * s * theta.cos(), c * s * theta.sin(), v)
}

fn pixels(max_len: usize) -> impl Strategy<Value = Vec<[f32; 3]>> {
    prop::collection::vec(prop::array::uniform3(0.0f32..=1.0), 1..max_len)
}

fn image(px: &[[f32; 3]]) -> RgbImage {
    let flat: Vec<f32> = px.iter().flatten().copied().collect();
    RgbImage::from_interleaved(px.len(), 1, &flat).unwrap()
}

fn variant() -> impl Strategy<Value = CollapseVariant> {
    prop::sample::select(CollapseVariant::ALL.to_vec())
}

proptest! {
    #[test]
    fn forward_matches_oracle(px in pixels(64), k in 0.3f64..8.0, var in variant()) {
        let p = HviParams::new(k).unwrap().with_variant(var);
        let hvi = rgb_to_hvi(&image(&px), &p);
        for (i, [r, g, b]) in px.iter().enumerate() {
            let (h, v, int) = oracle_forward(*r as f64, *g as f64, *b as f64, k, var);
            prop_assert!((hvi.h_hat()[i] as f64 - h).abs() < 2e-5, "{} vs {}", hvi.h_hat()[i], h);
            prop_assert!((hvi.v_hat()[i] as f64 - v).abs() < 2e-5);
            prop_assert_eq!(hvi.intensity()[i] as f64, int);
        }
    }

    #[test]
    fn round_trip(px in pixels(64), k in prop::sample::select(vec![0.5, 1.0, 2.0, 5.0])) {
        let img = image(&px);
        let p = HviParams::new(k).unwrap();
        let back = hvi_to_rgb(&rgb_to_hvi(&img, &p), &p);
        for (i, a) in px.iter().enumerate() {
            if a.iter().cloned().fold(0.0, f32::max) < 0.01 {
                continue;
            }
            let b = back.pixel_at(i);
            for c in 0..3 {
                prop_assert!((a[c] - b[c]).abs() <= 1e-5, "{a:?} -> {b:?}");
            }
        }
    }

    #[test]
    fn forward_output_is_in_domain(px in pixels(64), k in 0.2f64..10.0, var in variant()) {
        let hvi = rgb_to_hvi(&image(&px), &HviParams::new(k).unwrap().with_variant(var));
        prop_assert!(hvi.check_domain(1e-6).is_ok());
    }

    #[test]
    fn clip_is_idempotent(
        pts in prop::collection::vec((-2.0f32..2.0, -2.0f32..2.0, 0.0f32..=1.0), 1..64),
        k in 0.3f64..6.0,
    ) {
        let n = pts.len();
        let img = hvi::HviImage::from_planes(
            n, 1,
            pts.iter().map(|p| p.0).collect(),
            pts.iter().map(|p| p.1).collect(),
            pts.iter().map(|p| p.2).collect(),
            HviParams::new(k).unwrap(),
        ).unwrap();
        let once = clip_to_domain(&img);
        prop_assert!(once.check_domain(0.0).is_ok());
        let twice = clip_to_domain(&once);
        prop_assert_eq!(once.h_hat(), twice.h_hat());
        prop_assert_eq!(once.v_hat(), twice.v_hat());
    }

    #[test]
    fn red_continuity_any_k(delta in 1e-4f32..0.01, k in 0.1f64..20.0) {
        let p = HviParams::new(k).unwrap();
        let a = image(&[hsv(delta)]);
        let b = image(&[hsv(1.0 - delta)]);
        let hv = error_map(&a, &b, ErrorSpace::HviHv, &p).unwrap().data()[0];
        let hs = error_map(&a, &b, ErrorSpace::HsvHs, &p).unwrap().data()[0];
        prop_assert!(hv as f64 <= 2.0 * PI * 2.0 * delta as f64 + 1e-5);
        prop_assert!(hs > 5.0);
    }

    #[test]
    fn metrics_are_symmetric(a in pixels(32), b in pixels(32)) {
        let n = a.len().min(b.len());
        let (x, y) = (image(&a[..n]), image(&b[..n]));
        let p = HviParams::default();
        prop_assert_eq!(psnr(&x, &y).unwrap(), psnr(&y, &x).unwrap());
        for space in ErrorSpace::ALL {
            let xy = error_map(&x, &y, space, &p).unwrap();
            let yx = error_map(&y, &x, space, &p).unwrap();
            prop_assert_eq!(xy.data(), yx.data());
        }
    }

    #[test]
    fn padding_round_trip(w in 1usize..40, h in 1usize..40, seed in any::<u32>()) {
        let img = RgbImage::from_fn(w, h, |x, y| {
            let t = (x * 31 + y * 17 + seed as usize) % 97;
            [t as f32 / 96.0, 0.5, (x % 2) as f32]
        }).unwrap();
        let (padded, rec) = pad_reflect8(&img);
        prop_assert_eq!(padded.width() % 8, 0);
        prop_assert_eq!(padded.height() % 8, 0);
        prop_assert!(padded.width() - w < 8 && padded.height() - h < 8);
        prop_assert_eq!(crop_to(&padded, &rec).unwrap(), img);
    }
}

fn hsv(h: f32) -> [f32; 3] {
    let (r, g, b) = hvi::space::hsv_to_rgb_pixel(h, 1.0, 1.0);
    [r, g, b]
}
