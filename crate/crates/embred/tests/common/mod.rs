#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

use embred::core::EmbeddingMatrix;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Word-vector-like rows: a shared offset, `strong` dominant directions
/// and small isotropic noise.
pub fn word_like(seed: u64, rows: usize, dim: usize, strong: usize) -> EmbeddingMatrix {
    let mut rng = StdRng::seed_from_u64(seed);
    let offset: Vec<f64> = (0..dim).map(|_| rng.random_range(-1.0..1.0)).collect();
    let dirs: Vec<Vec<f64>> = (0..strong)
        .map(|_| (0..dim).map(|_| rng.random_range(-1.0..1.0)).collect())
        .collect();
    EmbeddingMatrix::from_rows((0..rows).map(|i| {
        let mut row: Vec<f64> = offset
            .iter()
            .map(|o| o + 0.1 * rng.random_range(-1.0..1.0))
            .collect();
        for (k, dir) in dirs.iter().enumerate() {
            let w = rng.random_range(-1.0..1.0) / (k + 1) as f64;
            for (r, d) in row.iter_mut().zip(dir) {
                *r += w * d;
            }
        }
        (format!("w{i}"), row.into_iter().map(|x| x as f32).collect::<Vec<_>>())
    }))
    .unwrap()
}

pub fn embred(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_embred"))
        .args(args)
        .env_remove(embred::DATA_DIR_ENV)
        .output()
        .expect("spawn embred")
}

pub fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}
