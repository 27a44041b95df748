#![allow(dead_code)]

use embred_core::EmbeddingMatrix;
use embred_oracle::Mat;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_distr::StandardNormal;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn uniform(rng: &mut StdRng, rows: usize, dim: usize) -> EmbeddingMatrix {
    EmbeddingMatrix::from_rows((0..rows).map(|i| {
        let row: Vec<f32> = (0..dim).map(|_| rng.random_range(-1.0f32..1.0)).collect();
        (format!("w{i}"), row)
    }))
    .unwrap()
}

pub fn gaussian(rng: &mut StdRng, rows: usize, dim: usize) -> EmbeddingMatrix {
    EmbeddingMatrix::from_rows((0..rows).map(|i| {
        let row: Vec<f32> = (0..dim)
            .map(|_| rng.sample::<f64, _>(StandardNormal) as f32)
            .collect();
        (format!("w{i}"), row)
    }))
    .unwrap()
}

/// Rows with a large shared offset and a few strong directions on top of
/// isotropic noise, the geometry typical of trained word vectors.
pub fn word_like(rng: &mut StdRng, rows: usize, dim: usize, strong: usize) -> EmbeddingMatrix {
    let offset: Vec<f64> = (0..dim).map(|_| rng.random_range(-2.0..2.0)).collect();
    let dirs: Vec<Vec<f64>> = (0..strong)
        .map(|_| (0..dim).map(|_| rng.sample::<f64, _>(StandardNormal)).collect())
        .collect();
    EmbeddingMatrix::from_rows((0..rows).map(|i| {
        let mut row: Vec<f64> = offset
            .iter()
            .map(|o| o + 0.3 * rng.sample::<f64, _>(StandardNormal))
            .collect();
        for (k, dir) in dirs.iter().enumerate() {
            let w = (4.0 / (k + 1) as f64) * rng.sample::<f64, _>(StandardNormal) / (dim as f64).sqrt();
            for (r, d) in row.iter_mut().zip(dir) {
                *r += w * d;
            }
        }
        (format!("w{i}"), row.into_iter().map(|x| x as f32).collect::<Vec<_>>())
    }))
    .unwrap()
}

pub fn to_mat(m: &EmbeddingMatrix) -> Mat {
    m.iter_rows()
        .map(|r| r.iter().map(|&x| x as f64).collect())
        .collect()
}

pub fn from_mat(x: &Mat) -> EmbeddingMatrix {
    EmbeddingMatrix::from_rows(x.iter().enumerate().map(|(i, r)| {
        (format!("w{i}"), r.iter().map(|&v| v as f32).collect::<Vec<_>>())
    }))
    .unwrap()
}

pub fn max_abs_diff(m: &EmbeddingMatrix, x: &Mat) -> f64 {
    m.iter_rows()
        .zip(x)
        .flat_map(|(a, b)| a.iter().zip(b).map(|(&p, &q)| (p as f64 - q).abs()))
        .fold(0.0, f64::max)
}

/// Same as `max_abs_diff` but each output column may be sign-flipped.
pub fn max_abs_diff_up_to_sign(m: &EmbeddingMatrix, x: &Mat) -> f64 {
    let mut worst: f64 = 0.0;
    for c in 0..m.dim() {
        let plus = m
            .iter_rows()
            .zip(x)
            .map(|(a, b)| (a[c] as f64 - b[c]).abs())
            .fold(0.0, f64::max);
        let minus = m
            .iter_rows()
            .zip(x)
            .map(|(a, b)| (a[c] as f64 + b[c]).abs())
            .fold(0.0, f64::max);
        worst = worst.max(plus.min(minus));
    }
    worst
}

pub fn distance(a: &[f32], b: &[f32]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x as f64 - y as f64).powi(2))
        .sum::<f64>()
        .sqrt()
}
