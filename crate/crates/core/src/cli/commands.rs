use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use super::args::*;
use super::{CliError, EXIT_IO};
use crate::error::Error;
use crate::generalize::{random_gamma_augment, draw_gamma, HueRemap, SatFn, SatTable};
use crate::imgio::{load_rgb, save_gray16_normalized, save_rgb};
use crate::metrics::{
    correct_value, corrected_space_psnr, error_map, quality_report, AblationReport, AblationSpace, ErrorSpace,
};
use crate::space::tensor::{load_hvi1, save_hvi1};
use crate::space::{clip_to_domain, collapse_value, hvi_to_rgb, rgb_to_hvi, HviParams};

/// Domain tolerance for freshly transformed tensors.
const DOMAIN_TOL: f32 = 1e-5;

type CmdResult = Result<(), CliError>;

pub(super) fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::ToHvi(a) => to_hvi(a),
        Command::FromHvi(a) => from_hvi(a),
        Command::Report(a) => report(a),
        Command::AblateSpace(a) => ablate_space(a),
        Command::SweepK(a) => sweep_k(a),
        Command::Augment(a) => augment(a, cli.seed),
    }
}

fn io_err(path: &Path, e: io::Error) -> CliError {
    CliError::from(Error::Io { path: path.to_path_buf(), source: e })
}

fn parse_sat(arg: &str) -> Result<SatFn, CliError> {
    match arg {
        "unit" => Ok(SatFn::Unit),
        "parabolic" => Ok(SatFn::Parabolic),
        _ => match arg.strip_prefix("file:") {
            Some(path) => Ok(SatFn::Custom(SatTable::load(path)?)),
            None => Err(CliError::usage(format!(
                "--sat expects unit, parabolic or file:<path>, got {arg:?}"
            ))),
        },
    }
}

fn apply_generalize(params: HviParams, g: &GeneralizeArgs) -> Result<HviParams, CliError> {
    let remap = match (g.gamma_g, g.gamma_b) {
        (Some(gg), Some(gb)) => HueRemap::new(gg, gb)?,
        (None, None) => HueRemap::IDENTITY,
        _ => return Err(CliError::usage("--gamma-g and --gamma-b must be given together")),
    };
    Ok(params.with_remap(remap).with_sat_fn(parse_sat(&g.sat)?))
}

fn to_hvi(a: &ToHviArgs) -> CmdResult {
    let params = HviParams::new(a.k)?.with_variant(a.variant);
    let params = apply_generalize(params, &a.generalize)?;
    let img = load_rgb(&a.input)?;
    let hvi = rgb_to_hvi(&img, &params);
    hvi.check_domain(DOMAIN_TOL)
        .map_err(|e| CliError::invariant(format!("transform left the clip domain: {e}")))?;
    save_hvi1(&hvi, &a.output)?;
    let remap = params.remap();
    println!(
        "{}: {}x{} k={} variant={} gamma_g={} gamma_b={} sat={}",
        a.output.display(),
        hvi.width(),
        hvi.height(),
        params.k(),
        params.variant(),
        remap.gamma_g(),
        remap.gamma_b(),
        a.generalize.sat,
    );
    Ok(())
}

fn from_hvi(a: &FromHviArgs) -> CmdResult {
    let base = apply_generalize(HviParams::default(), &a.generalize)?.with_alpha(a.alpha_s, a.alpha_i)?;
    let hvi = load_hvi1(&a.input, &base)?;
    if hvi.domain_excess().is_infinite() {
        return Err(CliError::invariant("tensor contains non-finite samples"));
    }
    let clipped = clip_to_domain(&hvi);
    let rgb = hvi_to_rgb(&clipped, clipped.params());
    save_rgb(&rgb, &a.output)?;
    println!(
        "{}: {}x{} alpha_s={} alpha_i={}",
        a.output.display(),
        rgb.width(),
        rgb.height(),
        a.alpha_s,
        a.alpha_i
    );
    Ok(())
}

fn is_image(p: &Path) -> bool {
    p.is_file()
        && p.extension()
            .and_then(|e| e.to_str())
            .is_some_and(|e| matches!(e.to_ascii_lowercase().as_str(), "png" | "ppm" | "pnm"))
}

fn list_images(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).map_err(|e| io_err(dir, e))? {
        let path = entry.map_err(|e| io_err(dir, e))?.path();
        if is_image(&path) {
            files.push(path);
        }
    }
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    Ok(files)
}

/// Pairs two files, or two directories by sorted filename.
fn pair_inputs(a: &Path, b: &Path) -> Result<Vec<(PathBuf, PathBuf)>, CliError> {
    match (a.is_dir(), b.is_dir()) {
        (true, true) => {
            let (la, lb) = (list_images(a)?, list_images(b)?);
            if la.len() != lb.len() {
                return Err(CliError::usage(format!(
                    "{} has {} images but {} has {}",
                    a.display(),
                    la.len(),
                    b.display(),
                    lb.len()
                )));
            }
            if la.is_empty() {
                return Err(CliError::usage(format!("no PNG/PPM images in {}", a.display())));
            }
            Ok(la.into_iter().zip(lb).collect())
        }
        (false, false) => Ok(vec![(a.to_path_buf(), b.to_path_buf())]),
        _ => Err(CliError::usage("inputs must both be files or both be directories")),
    }
}

fn csv_sink(path: Option<&Path>) -> Result<csv::Writer<Box<dyn Write>>, CliError> {
    let out: Box<dyn Write> = match path {
        Some(p) => Box::new(io::BufWriter::new(fs::File::create(p).map_err(|e| io_err(p, e))?)),
        None => Box::new(io::stdout()),
    };
    Ok(csv::Writer::from_writer(out))
}

fn finish(mut w: csv::Writer<Box<dyn Write>>) -> CmdResult {
    w.flush().map_err(|e| CliError { code: EXIT_IO, message: format!("csv: {e}") })
}

fn report(a: &ReportArgs) -> CmdResult {
    let pairs = pair_inputs(&a.pred, &a.reference)?;
    let reports = pairs
        .par_iter()
        .map(|(p, r)| Ok(quality_report(&load_rgb(p)?, &load_rgb(r)?, a.gt_mean)?))
        .collect::<Result<Vec<_>, CliError>>()?;

    let mut w = csv_sink(a.csv.as_deref())?;
    w.write_record(["path_pred", "path_ref", "psnr_db", "ssim", "q", "gt_mean_applied"])?;
    for ((p, r), rep) in pairs.iter().zip(&reports) {
        w.write_record([
            p.display().to_string(),
            r.display().to_string(),
            rep.psnr.to_string(),
            rep.ssim.to_string(),
            rep.q.to_string(),
            rep.gt_mean_applied.to_string(),
        ])?;
    }
    finish(w)?;

    let n = reports.len() as f64;
    let mean = |f: fn(&crate::metrics::QualityReport) -> f64| reports.iter().map(f).sum::<f64>() / n;
    println!(
        "images={} mean_psnr_db={} mean_ssim={} mean_q={}",
        reports.len(),
        mean(|r| r.psnr),
        mean(|r| r.ssim),
        mean(|r| r.q)
    );
    Ok(())
}

fn write_error_maps(
    dir: &Path,
    low_path: &Path,
    low: &crate::RgbImage,
    reference: &crate::RgbImage,
    params: &HviParams,
) -> CmdResult {
    let stem = low_path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let corrected = correct_value(low, reference)?;
    for space in ErrorSpace::ALL {
        let map = error_map(&corrected, reference, space, params)?;
        let png = dir.join(format!("{stem}_{space}.png"));
        let (min, max) = save_gray16_normalized(&map, &png)?;
        let txt = png.with_extension("txt");
        fs::write(&txt, format!("min {min}\nmax {max}\n")).map_err(|e| io_err(&txt, e))?;
    }
    Ok(())
}

fn ablate_space(a: &AblateArgs) -> CmdResult {
    let params = HviParams::new(a.k)?.with_variant(a.variant);
    let pairs = pair_inputs(&a.low, &a.reference)?;
    if let Some(dir) = &a.error_maps {
        fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    }
    let scores = pairs
        .par_iter()
        .map(|(l, r)| {
            let low = load_rgb(l)?;
            let reference = load_rgb(r)?;
            let s = corrected_space_psnr(&low, &reference, &params)?;
            if let Some(dir) = &a.error_maps {
                write_error_maps(dir, l, &low, &reference, &params)?;
            }
            Ok(s)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let report = AblationReport::from_scores(&scores)?;

    let mut w = csv_sink(a.csv.as_deref())?;
    w.write_record(["space", "mean_psnr_db", "images"])?;
    for space in AblationSpace::ALL {
        w.write_record([space.name().to_string(), report.get(space).to_string(), report.images.to_string()])?;
    }
    finish(w)?;
    if a.csv.is_some() {
        for space in AblationSpace::ALL {
            println!("{:<15} {:>10.4} dB", space.name(), report.get(space));
        }
    }
    println!("strictly_ordered={}", report.strictly_ordered());
    Ok(())
}

fn sweep_k(a: &SweepArgs) -> CmdResult {
    let n = a.samples as usize;
    let mut w = csv_sink(Some(&a.out))?;
    w.write_record(["k", "intensity", "collapse"])?;
    for &k in &a.ks {
        for j in 0..n {
            let i = j as f64 / (n - 1) as f64;
            let c = collapse_value(i, k, a.variant, crate::space::EPSILON);
            if !c.is_finite() {
                return Err(CliError::invariant(format!("C_{k}({i}) is not finite")));
            }
            w.write_record([k.to_string(), i.to_string(), c.to_string()])?;
        }
    }
    finish(w)?;
    println!("{}: {} curves x {} samples ({})", a.out.display(), a.ks.len(), n, a.variant);
    Ok(())
}

fn augment(a: &AugmentArgs, seed: u64) -> CmdResult {
    let img = load_rgb(&a.input)?;
    let out = random_gamma_augment(&img, seed);
    save_rgb(&out, &a.output)?;
    println!("{}: gamma={} seed={seed}", a.output.display(), draw_gamma(seed));
    Ok(())
}
