use std::fs;
use std::path::{Path, PathBuf};

use hvi::cli::run;
use hvi::imgio::{load_rgb, save_rgb};
use hvi::metrics::psnr;
use hvi::space::tensor::load_hvi1;
use hvi::{HviParams, RgbImage};
use tempfile::TempDir;

fn cmd(args: &[&str]) -> i32 {
    run(std::iter::once("hvi").chain(args.iter().copied()))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn scene(w: usize, h: usize, seed: usize) -> RgbImage {
    RgbImage::from_fn(w, h, |x, y| {
        [
            ((x * 13 + y * 7 + seed) % 255) as f32 / 255.0,
            ((x * 3 + seed * 11) % 255) as f32 / 255.0,
            ((y * 5 + 40) % 255) as f32 / 255.0,
        ]
    })
    .unwrap()
}

fn write(dir: &Path, name: &str, img: &RgbImage) -> PathBuf {
    let path = dir.join(name);
    save_rgb(img, &path).unwrap();
    path
}

fn read_csv(path: &Path) -> Vec<Vec<String>> {
    let mut r = csv::Reader::from_path(path).unwrap();
    r.records().map(|rec| rec.unwrap().iter().map(String::from).collect()).collect()
}

#[test]
fn to_hvi_red_and_errors() {
    let dir = TempDir::new().unwrap();
    let red = write(dir.path(), "red.png", &RgbImage::filled(4, 3, [1.0, 0.0, 0.0]).unwrap());
    let out = dir.path().join("red.hvi");
    assert_eq!(cmd(&["to-hvi", "--input", p(&red), "--output", p(&out)]), 0);
    let t = load_hvi1(&out, &HviParams::default()).unwrap();
    assert_eq!((t.width(), t.height()), (4, 3));
    assert!(t.h_hat().iter().all(|&h| (h - 1.0).abs() < 1e-6));
    assert!(t.v_hat().iter().all(|&v| v.abs() < 1e-6));

    assert_eq!(cmd(&["to-hvi", "--input", p(&red), "--output", p(&out), "--k", "0"]), 2);
    assert_eq!(cmd(&["to-hvi", "--input", p(&red), "--output", p(&out), "--gamma-g", "2"]), 2);
    assert_eq!(cmd(&["to-hvi", "--input", p(&red), "--output", p(&out), "--sat", "bogus"]), 2);
    let missing = dir.path().join("nope.png");
    assert_eq!(cmd(&["to-hvi", "--input", p(&missing), "--output", p(&out)]), 3);
}

#[test]
fn round_trip_through_files() {
    let dir = TempDir::new().unwrap();
    let img = scene(33, 21, 1);
    let src = write(dir.path(), "in.png", &img);
    let quantised = load_rgb(&src).unwrap();
    let t = dir.path().join("t.hvi");
    let back = dir.path().join("back.png");
    for k in ["0.5", "1", "3"] {
        for variant in ["sin", "linear", "log"] {
            assert_eq!(
                cmd(&["to-hvi", "--input", p(&src), "--output", p(&t), "--k", k, "--variant", variant]),
                0
            );
            assert_eq!(cmd(&["from-hvi", "--input", p(&t), "--output", p(&back)]), 0);
            let score = psnr(&load_rgb(&back).unwrap(), &quantised).unwrap();
            assert!(score >= 50.0, "k={k} {variant}: {score}");
        }
    }
    // generalised maps must be repeated on the way back
    let remap = ["--gamma-g", "1.5", "--gamma-b", "4.5"];
    let gen_round_trip = |src: &Path, extra: &[&str]| {
        let mut fwd = vec!["to-hvi", "--input", p(src), "--output", p(&t)];
        fwd.extend(extra);
        assert_eq!(cmd(&fwd), 0);
        let mut inv = vec!["from-hvi", "--input", p(&t), "--output", p(&back)];
        inv.extend(extra);
        assert_eq!(cmd(&inv), 0);
        psnr(&load_rgb(&back).unwrap(), &load_rgb(src).unwrap()).unwrap()
    };
    assert!(gen_round_trip(&src, &remap) >= 50.0);

    // the parabolic weight vanishes at red, so test it on a red-free image
    let cyanish = RgbImage::from_fn(20, 20, |x, y| {
        [0.05 + 0.01 * x as f32, 0.4 + 0.025 * y as f32, 0.9 - 0.02 * x as f32]
    })
    .unwrap();
    let cyan = write(dir.path(), "cyan.png", &cyanish);
    let mut both = remap.to_vec();
    both.extend(["--sat", "parabolic"]);
    let score = gen_round_trip(&cyan, &both);
    assert!(score >= 50.0, "{score}");
}

#[test]
fn from_hvi_gains() {
    let dir = TempDir::new().unwrap();
    let white = write(dir.path(), "w.png", &RgbImage::filled(5, 5, [1.0; 3]).unwrap());
    let t = dir.path().join("w.hvi");
    let out = dir.path().join("o.png");
    assert_eq!(cmd(&["to-hvi", "--input", p(&white), "--output", p(&t)]), 0);
    assert_eq!(cmd(&["from-hvi", "--input", p(&t), "--output", p(&out), "--alpha-i", "0.5"]), 0);
    let img = load_rgb(&out).unwrap();
    assert!(img.to_interleaved().iter().all(|&v| (v - 0.5).abs() <= 0.5 / 255.0 + 1e-6));

    let colour = write(dir.path(), "c.png", &scene(9, 9, 4));
    assert_eq!(cmd(&["to-hvi", "--input", p(&colour), "--output", p(&t)]), 0);
    assert_eq!(cmd(&["from-hvi", "--input", p(&t), "--output", p(&out), "--alpha-s", "0"]), 0);
    let gray = load_rgb(&out).unwrap();
    let orig = load_rgb(&colour).unwrap();
    for i in 0..gray.len() {
        let [r, g, b] = gray.pixel_at(i);
        assert!(r == g && g == b);
        let max = orig.pixel_at(i).into_iter().fold(0.0f32, f32::max);
        assert!((r - max).abs() <= 1.0 / 255.0);
    }

    fs::write(&t, b"HVI1 garbage").unwrap();
    assert_eq!(cmd(&["from-hvi", "--input", p(&t), "--output", p(&out)]), 3);
}

#[test]
fn report_directories() {
    let dir = TempDir::new().unwrap();
    let refs = dir.path().join("ref");
    let dark = dir.path().join("dark");
    fs::create_dir_all(&refs).unwrap();
    fs::create_dir_all(&dark).unwrap();
    for i in 0..3 {
        let img = scene(24, 20, i);
        write(&refs, &format!("{i}.png"), &img);
        write(&dark, &format!("{i}.png"), &img.map_samples(|v| 0.6 * v));
    }
    let csv = dir.path().join("r.csv");
    assert_eq!(cmd(&["report", "--pred", p(&refs), "--ref", p(&refs), "--csv", p(&csv)]), 0);
    let rows = read_csv(&csv);
    assert_eq!(rows.len(), 3);
    for row in &rows {
        assert_eq!(row[2], "inf");
        assert_eq!(row[3].parse::<f64>().unwrap(), 1.0);
    }

    let mean_psnr = |gt: bool| {
        let mut args = vec!["report", "--pred", p(&dark), "--ref", p(&refs), "--csv", p(&csv)];
        if gt {
            args.push("--gt-mean");
        }
        assert_eq!(cmd(&args), 0);
        let rows = read_csv(&csv);
        assert!(rows.iter().all(|r| r[5] == gt.to_string()));
        rows.iter().map(|r| r[2].parse::<f64>().unwrap()).sum::<f64>() / rows.len() as f64
    };
    assert!(mean_psnr(true) > mean_psnr(false));

    fs::remove_file(dark.join("2.png")).unwrap();
    assert_eq!(cmd(&["report", "--pred", p(&dark), "--ref", p(&refs)]), 2);
    assert_eq!(cmd(&["report", "--pred", p(&dark), "--ref", p(&refs.join("0.png"))]), 2);
}

#[test]
fn ablate_identical_and_error_maps() {
    let dir = TempDir::new().unwrap();
    let d = dir.path().join("imgs");
    fs::create_dir_all(&d).unwrap();
    write(&d, "a.png", &scene(16, 16, 2));
    write(&d, "b.png", &scene(16, 16, 5));
    let csv = dir.path().join("a.csv");
    let maps = dir.path().join("maps");
    assert_eq!(
        cmd(&["ablate-space", "--low", p(&d), "--ref", p(&d), "--csv", p(&csv), "--error-maps", p(&maps)]),
        0
    );
    let rows = read_csv(&csv);
    let names: Vec<_> = rows.iter().map(|r| r[0].as_str()).collect();
    assert_eq!(names, ["hsv", "w_polarization", "w_ck", "hvi"]);
    assert!(rows.iter().all(|r| r[1] == "inf" && r[2] == "2"));
    for space in ["srgb", "hsv_hs", "pol_hs", "ck_hs", "hvi_hv"] {
        assert!(maps.join(format!("a_{space}.png")).is_file());
        assert!(maps.join(format!("b_{space}.txt")).is_file());
    }
}

#[test]
fn sweep_and_config() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("s.csv");
    assert_eq!(cmd(&["sweep-k", "--ks", "0.5,1,10", "--samples", "101", "--out", p(&out)]), 0);
    let rows = read_csv(&out);
    assert_eq!(rows.len(), 303);
    let at = |k: &str, i: &str| {
        rows.iter().find(|r| r[0] == k && r[1] == i).unwrap()[2].parse::<f64>().unwrap()
    };
    assert!((at("1", "1") - 1.0).abs() < 1e-6);
    assert!(at("10", "0.01") > at("0.5", "0.01"));

    assert_eq!(cmd(&["sweep-k", "--ks", "", "--out", p(&out)]), 2);
    assert_eq!(cmd(&["sweep-k", "--out", p(&out)]), 2);
    assert_eq!(cmd(&["sweep-k", "--ks", "1", "--samples", "1", "--out", p(&out)]), 2);

    let cfg = dir.path().join("hvi.conf");
    fs::write(&cfg, "# defaults\nks = 2,3\nsamples = 5\n").unwrap();
    assert_eq!(cmd(&["--config", p(&cfg), "sweep-k", "--out", p(&out)]), 0);
    assert_eq!(read_csv(&out).len(), 10);
    assert_eq!(cmd(&["--config", p(&cfg), "sweep-k", "--samples", "7", "--out", p(&out)]), 0);
    assert_eq!(read_csv(&out).len(), 14);

    fs::write(&cfg, "unknown-flag = 1\n").unwrap();
    assert_eq!(cmd(&["--config", p(&cfg), "sweep-k", "--ks", "1", "--out", p(&out)]), 2);
    let missing = dir.path().join("missing.conf");
    assert_eq!(cmd(&["--config", p(&missing), "sweep-k", "--ks", "1", "--out", p(&out)]), 3);
}

#[test]
fn augment_is_seeded() {
    let dir = TempDir::new().unwrap();
    let src = write(dir.path(), "s.png", &scene(12, 12, 3));
    let (a, b, c) = (dir.path().join("a.png"), dir.path().join("b.png"), dir.path().join("c.png"));
    assert_eq!(cmd(&["augment", "--input", p(&src), "--output", p(&a), "--seed", "7"]), 0);
    assert_eq!(cmd(&["--seed", "7", "augment", "--input", p(&src), "--output", p(&b)]), 0);
    assert_eq!(cmd(&["augment", "--input", p(&src), "--output", p(&c), "--seed", "8"]), 0);
    assert_eq!(load_rgb(&a).unwrap(), load_rgb(&b).unwrap());
    assert_ne!(load_rgb(&a).unwrap(), load_rgb(&c).unwrap());
}
