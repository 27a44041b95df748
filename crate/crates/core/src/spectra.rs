//! Dense PCA: mean subtraction, covariance eigendecomposition, explained
//! variance and projection.
//!
//! Principal directions come from the eigendecomposition of the `d x d`
//! sample covariance `Xcᵀ·Xc / (rows - 1)`. The covariance is accumulated
//! in `f64` over fixed blocks of rows that are always combined in block
//! order, so the result does not depend on whether the `parallel` feature
//! is enabled or on the thread count.

use alloc::vec;
use alloc::vec::Vec;

use crate::{symmetric_eigen, DenseMatrix, EmbeddingMatrix, Error, Result};

/// Rows per covariance block.
const BLOCK_ROWS: usize = 1024;

/// Total variance below this is treated as degenerate (all ratios zero).
const MIN_TOTAL_VARIANCE: f64 = 1e-12;

/// A fitted PCA: the column mean of the training data and the top `k`
/// principal directions, strongest first.
#[derive(Debug, Clone, PartialEq)]
pub struct PcaModel {
    mean: Vec<f64>,
    components: DenseMatrix,
    explained_variance: Vec<f64>,
    explained_variance_ratio: Vec<f64>,
}

impl PcaModel {
    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    pub fn n_components(&self) -> usize {
        self.components.rows()
    }

    pub fn mean(&self) -> &[f64] {
        &self.mean
    }

    /// `k x d` matrix whose rows are orthonormal principal directions.
    pub fn components(&self) -> &DenseMatrix {
        &self.components
    }

    pub fn component(&self, i: usize) -> &[f64] {
        self.components.row(i)
    }

    /// Covariance eigenvalues of the kept components (negative round-off clamped to 0).
    pub fn explained_variance(&self) -> &[f64] {
        &self.explained_variance
    }

    /// Fraction of the total variance (over all `d` directions) carried by
    /// each kept component.
    pub fn explained_variance_ratio(&self) -> &[f64] {
        &self.explained_variance_ratio
    }

    /// Coordinates of `row - mean` along the first `out.len()` components.
    pub fn project_into(&self, row: &[f32], centered: &mut [f64], out: &mut [f64]) {
        for ((c, &x), &mu) in centered.iter_mut().zip(row).zip(&self.mean) {
            *c = x as f64 - mu;
        }
        for (i, o) in out.iter_mut().enumerate() {
            *o = dot(self.components.row(i), centered);
        }
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Column means in `f64`.
pub fn column_means(m: &EmbeddingMatrix) -> Vec<f64> {
    let mut sum = vec![0.0f64; m.dim()];
    for row in m.iter_rows() {
        for (s, &x) in sum.iter_mut().zip(row) {
            *s += x as f64;
        }
    }
    let n = m.rows() as f64;
    for s in &mut sum {
        *s /= n;
    }
    sum
}

/// Subtracts the column mean from every row. Returns the centered matrix
/// (stored as `f32`) and the mean that was removed.
pub fn center(m: &EmbeddingMatrix) -> (EmbeddingMatrix, Vec<f64>) {
    let mean = column_means(m);
    let mut data = Vec::with_capacity(m.data().len());
    for row in m.iter_rows() {
        data.extend(row.iter().zip(&mean).map(|(&x, &mu)| (x as f64 - mu) as f32));
    }
    let centered = m
        .with_data(data, m.dim())
        .expect("centering preserves shape and finiteness");
    (centered, mean)
}

/// Like [`center`], but keeps the centered values in binary64.
pub fn center_f64(m: &EmbeddingMatrix) -> (DenseMatrix, Vec<f64>) {
    let mean = column_means(m);
    let mut out = DenseMatrix::zeros(m.rows(), m.dim());
    for (r, row) in m.iter_rows().enumerate() {
        for ((o, &x), &mu) in out.row_mut(r).iter_mut().zip(row).zip(&mean) {
            *o = x as f64 - mu;
        }
    }
    (out, mean)
}

/// Upper triangle of `Σ (x - mean)(x - mean)ᵀ` over one block of rows.
fn block_scatter(block: &[f32], mean: &[f64]) -> Vec<f64> {
    let d = mean.len();
    let mut acc = vec![0.0f64; d * d];
    let mut c = vec![0.0f64; d];
    for row in block.chunks_exact(d) {
        for ((ci, &x), &mu) in c.iter_mut().zip(row).zip(mean) {
            *ci = x as f64 - mu;
        }
        for i in 0..d {
            let a = c[i];
            let dst = &mut acc[i * d + i..(i + 1) * d];
            for (p, &b) in dst.iter_mut().zip(&c[i..]) {
                *p += a * b;
            }
        }
    }
    acc
}

fn add_upper(total: &mut [f64], part: &[f64], d: usize) {
    for i in 0..d {
        let r = i * d + i..(i + 1) * d;
        for (t, p) in total[r.clone()].iter_mut().zip(&part[r]) {
            *t += p;
        }
    }
}

fn scatter(data: &[f32], mean: &[f64]) -> Vec<f64> {
    #[cfg(feature = "parallel")]
    return scatter_parallel(data, mean);
    #[cfg(not(feature = "parallel"))]
    return scatter_serial(data, mean);
}

#[cfg_attr(feature = "parallel", allow(dead_code))]
fn scatter_serial(data: &[f32], mean: &[f64]) -> Vec<f64> {
    let d = mean.len();
    let mut total = vec![0.0f64; d * d];
    for block in data.chunks(BLOCK_ROWS * d) {
        add_upper(&mut total, &block_scatter(block, mean), d);
    }
    total
}

#[cfg(feature = "parallel")]
fn scatter_parallel(data: &[f32], mean: &[f64]) -> Vec<f64> {
    use rayon::prelude::*;

    const BLOCKS_IN_FLIGHT: usize = 16;
    let d = mean.len();
    let mut total = vec![0.0f64; d * d];
    for group in data.chunks(BLOCKS_IN_FLIGHT * BLOCK_ROWS * d) {
        let parts: Vec<Vec<f64>> = group
            .par_chunks(BLOCK_ROWS * d)
            .map(|block| block_scatter(block, mean))
            .collect();
        for part in &parts {
            add_upper(&mut total, part, d);
        }
    }
    total
}

/// Sample covariance (divisor `rows - 1`) as a full symmetric `d x d` matrix.
pub fn covariance(m: &EmbeddingMatrix, mean: &[f64]) -> Result<Vec<f64>> {
    if m.rows() < 2 {
        return Err(Error::arg("covariance needs at least 2 rows"));
    }
    if mean.len() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: mean.len(),
        });
    }
    let d = m.dim();
    let mut cov = scatter(m.data(), mean);
    let denom = (m.rows() - 1) as f64;
    for i in 0..d {
        for j in i..d {
            let v = cov[i * d + j] / denom;
            cov[i * d + j] = v;
            cov[j * d + i] = v;
        }
    }
    Ok(cov)
}

/// Flips `u` so its largest-magnitude entry is positive (first such entry on ties).
fn fix_sign(u: &mut [f64]) {
    let mut best = 0;
    for (i, x) in u.iter().enumerate() {
        if x.abs() > u[best].abs() {
            best = i;
        }
    }
    if u[best] < 0.0 {
        for x in u.iter_mut() {
            *x = -*x;
        }
    }
}

pub(crate) fn fit_components(m: &EmbeddingMatrix, k: usize) -> Result<PcaModel> {
    let d = m.dim();
    let mean = column_means(m);
    let cov = covariance(m, &mean)?;
    let eig = symmetric_eigen(&cov, d)?;

    let variance: Vec<f64> = eig.values.iter().map(|v| v.max(0.0)).collect();
    let total: f64 = variance.iter().sum();
    let mut components = DenseMatrix::zeros(k, d);
    for i in 0..k {
        let dst = components.row_mut(i);
        dst.copy_from_slice(eig.vectors.row(i));
        fix_sign(dst);
    }
    let explained_variance_ratio = if total < MIN_TOTAL_VARIANCE {
        vec![0.0; k]
    } else {
        variance[..k].iter().map(|v| v / total).collect()
    };
    Ok(PcaModel {
        mean,
        components,
        explained_variance: variance[..k].to_vec(),
        explained_variance_ratio,
    })
}

/// Fits the top `k` principal components of `m`.
///
/// Needs at least two rows and `1 <= k <= min(rows, dim)`. Rank-deficient
/// input is fine; trailing components then carry zero variance.
pub fn fit_pca(m: &EmbeddingMatrix, k: usize) -> Result<PcaModel> {
    if m.rows() < 2 {
        return Err(Error::arg("PCA needs at least 2 rows"));
    }
    let limit = m.rows().min(m.dim());
    if k == 0 || k > limit {
        return Err(Error::arg(alloc::format!(
            "number of components must be in 1..={limit}, got {k}"
        )));
    }
    fit_components(m, k)
}

/// Projects the rows of `m` onto the first `n` components of `model`.
pub fn transform(m: &EmbeddingMatrix, model: &PcaModel, n: usize) -> Result<EmbeddingMatrix> {
    if m.dim() != model.dim() {
        return Err(Error::DimensionMismatch {
            expected: model.dim(),
            found: m.dim(),
        });
    }
    if n == 0 || n > model.n_components() {
        return Err(Error::arg(alloc::format!(
            "target dimension must be in 1..={}, got {n}",
            model.n_components()
        )));
    }
    let mut data = Vec::with_capacity(m.rows() * n);
    let mut centered = vec![0.0; m.dim()];
    let mut coords = vec![0.0; n];
    for row in m.iter_rows() {
        model.project_into(row, &mut centered, &mut coords);
        data.extend(coords.iter().map(|&c| c as f32));
    }
    m.with_data(data, n)
}

/// Explained-variance fractions of the first `top_k` components of a
/// full-dimension fit, as `(1-based component index, fraction)`.
pub fn variance_report(m: &EmbeddingMatrix, top_k: usize) -> Result<Vec<(usize, f64)>> {
    if m.rows() < 2 {
        return Err(Error::arg("variance report needs at least 2 rows"));
    }
    let limit = m.rows().min(m.dim());
    if top_k == 0 || top_k > limit {
        return Err(Error::arg(alloc::format!(
            "top_k must be in 1..={limit}, got {top_k}"
        )));
    }
    // all d eigenvalues are needed for the normalization even when rows < d
    let model = fit_components(m, top_k)?;
    Ok(model
        .explained_variance_ratio()
        .iter()
        .enumerate()
        .map(|(i, &f)| (i + 1, f))
        .collect())
}
