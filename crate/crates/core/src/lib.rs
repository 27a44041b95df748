//! Dimensionality reduction for pre-trained word embeddings.
//!
//! The crate removes the common mean and dominant principal directions from
//! a word-embedding matrix (`postprocess`), reduces it with PCA sandwiched
//! between two such post-processing passes (`pipeline`), and scores the
//! result on word-similarity benchmarks (`simeval`).
//!
//! Matrices are stored as `f32`; every reduction runs with `f64`
//! accumulators. The crate is `no_std` (it needs `alloc`). The `parallel`
//! feature pulls in `std` and splits covariance accumulation across threads
//! without changing a single output bit.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(rust_2018_idioms)]

extern crate alloc;

mod eigen;
mod error;
mod matrix;
pub mod pipeline;
pub mod postprocess;
pub mod simeval;
pub mod spectra;
mod vocab;

pub use eigen::{symmetric_eigen, SymmetricEigen};
pub use error::{Error, Result};
pub use matrix::{DenseMatrix, EmbeddingMatrix};
pub use pipeline::{describe, reduce, Method, ReductionSpec};
pub use postprocess::{eliminate, ppa, residual_energy};
pub use simeval::{
    cosine, evaluate, evaluate_suite, fractional_ranks, spearman_rho, Comparison, DatasetFailure,
    EvalReport, SimilarityDataset, SuiteReport, WordPair,
};
pub use spectra::{
    center, center_f64, column_means, covariance, fit_pca, transform, variance_report, PcaModel,
};
pub use vocab::Vocabulary;

/// Default number of dominant components removed by each post-processing pass.
pub const DEFAULT_THRESHOLD: usize = 7;

/// Default target dimension: half the input dimension, rounded down.
pub const fn default_target_dim(input_dim: usize) -> usize {
    input_dim / 2
}
