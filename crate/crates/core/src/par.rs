//! Chunked data-parallel helpers shared by the per-pixel kernels.

use rayon::prelude::*;

/// Pixels handed to one rayon task.
pub(crate) const CHUNK: usize = 1 << 14;

/// Applies a three-in/three-out pixel kernel over planar buffers.
pub(crate) fn map3<F>(a: &[f32], b: &[f32], c: &[f32], f: F) -> [Vec<f32>; 3]
where
    F: Fn(f32, f32, f32) -> (f32, f32, f32) + Sync,
{
    debug_assert!(a.len() == b.len() && b.len() == c.len());
    let n = a.len();
    let mut x = vec![0.0f32; n];
    let mut y = vec![0.0f32; n];
    let mut z = vec![0.0f32; n];
    x.par_chunks_mut(CHUNK)
        .zip(y.par_chunks_mut(CHUNK))
        .zip(z.par_chunks_mut(CHUNK))
        .enumerate()
        .for_each(|(ci, ((xs, ys), zs))| {
            let off = ci * CHUNK;
            let a = &a[off..off + xs.len()];
            let b = &b[off..off + xs.len()];
            let c = &c[off..off + xs.len()];
            for j in 0..xs.len() {
                let (p, q, r) = f(a[j], b[j], c[j]);
                xs[j] = p;
                ys[j] = q;
                zs[j] = r;
            }
        });
    [x, y, z]
}

/// Applies a one-in/one-out kernel.
pub(crate) fn map1<F>(a: &[f32], f: F) -> Vec<f32>
where
    F: Fn(f32) -> f32 + Sync,
{
    let mut out = vec![0.0f32; a.len()];
    out.par_chunks_mut(CHUNK)
        .enumerate()
        .for_each(|(ci, xs)| {
            let off = ci * CHUNK;
            for (j, x) in xs.iter_mut().enumerate() {
                *x = f(a[off + j]);
            }
        });
    out
}

/// Sums `f(i)` over `0..n` in f64, chunk partials combined in index order so
/// the result does not depend on the thread count.
pub(crate) fn sum_f64<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    let partials: Vec<f64> = (0..n.div_ceil(CHUNK))
        .into_par_iter()
        .map(|ci| {
            let lo = ci * CHUNK;
            let hi = (lo + CHUNK).min(n);
            (lo..hi).map(&f).sum::<f64>()
        })
        .collect();
    partials.iter().sum()
}
