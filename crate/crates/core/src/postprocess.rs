//! Post-processing of word vectors: remove the common mean, then remove each
//! vector's projection onto the `D` dominant principal directions.

use alloc::vec;
use alloc::vec::Vec;

use crate::spectra::{self, dot};
use crate::{center, EmbeddingMatrix, Error, PcaModel, Result};

/// Post-processes `m` with threshold `d_threshold`.
///
/// PCA is refitted on `m` on every call. With `d_threshold == 0` this is
/// exactly [`center`].
pub fn ppa(m: &EmbeddingMatrix, d_threshold: usize) -> Result<EmbeddingMatrix> {
    if d_threshold > m.dim() {
        return Err(Error::arg(alloc::format!(
            "threshold {d_threshold} exceeds embedding dimension {}",
            m.dim()
        )));
    }
    if m.rows() < 2 {
        return Err(Error::arg("post-processing needs at least 2 rows"));
    }
    if d_threshold == 0 {
        return Ok(center(m).0);
    }
    let model = spectra::fit_components(m, d_threshold)?;
    let top = model.components();
    let dim = m.dim();

    let mut data = Vec::with_capacity(m.data().len());
    let mut v = vec![0.0f64; dim];
    let mut coeff = vec![0.0f64; d_threshold];
    for row in m.iter_rows() {
        for ((c, &x), &mu) in v.iter_mut().zip(row).zip(model.mean()) {
            *c = x as f64 - mu;
        }
        // (X·Uᵀ)·U, one row of X at a time
        for (i, c) in coeff.iter_mut().enumerate() {
            *c = dot(top.row(i), &v);
        }
        for (i, &c) in coeff.iter().enumerate() {
            for (vj, &uj) in v.iter_mut().zip(top.row(i)) {
                *vj -= c * uj;
            }
        }
        data.extend(v.iter().map(|&x| x as f32));
    }
    m.with_data(data, dim)
}

/// Removes the projection onto the first `d` components of `model` from
/// every row of `m`, without any mean subtraction.
pub fn eliminate(m: &EmbeddingMatrix, model: &PcaModel, d: usize) -> Result<EmbeddingMatrix> {
    check_model(m, model, d)?;
    let mut data = Vec::with_capacity(m.data().len());
    let mut v = vec![0.0f64; m.dim()];
    for row in m.iter_rows() {
        for (c, &x) in v.iter_mut().zip(row) {
            *c = x as f64;
        }
        for i in 0..d {
            let u = model.component(i);
            let c = dot(u, &v);
            for (vj, &uj) in v.iter_mut().zip(u) {
                *vj -= c * uj;
            }
        }
        data.extend(v.iter().map(|&x| x as f32));
    }
    m.with_data(data, m.dim())
}

/// Largest `|uᵢ·v|` over the first `d_threshold` components of `model` and
/// all rows `v` of `m_after`. `model` is the fit on `m_before`.
pub fn residual_energy(
    m_before: &EmbeddingMatrix,
    m_after: &EmbeddingMatrix,
    model: &PcaModel,
    d_threshold: usize,
) -> Result<f64> {
    if m_before.rows() != m_after.rows() {
        return Err(Error::DimensionMismatch {
            expected: m_before.rows(),
            found: m_after.rows(),
        });
    }
    check_model(m_before, model, d_threshold)?;
    check_model(m_after, model, d_threshold)?;
    let mut v = vec![0.0f64; m_after.dim()];
    let mut worst = 0.0f64;
    for row in m_after.iter_rows() {
        for (c, &x) in v.iter_mut().zip(row) {
            *c = x as f64;
        }
        for i in 0..d_threshold {
            worst = worst.max(dot(model.component(i), &v).abs());
        }
    }
    Ok(worst)
}

fn check_model(m: &EmbeddingMatrix, model: &PcaModel, d: usize) -> Result<()> {
    if m.dim() != model.dim() {
        return Err(Error::DimensionMismatch {
            expected: model.dim(),
            found: m.dim(),
        });
    }
    if d > model.n_components() {
        return Err(Error::arg(alloc::format!(
            "model has {} components, {d} requested",
            model.n_components()
        )));
    }
    Ok(())
}
