//! File formats, benchmark loading and reports around [`embred_core`].
//!
//! * [`embeddings`]: the whitespace-separated text format of GloVe and
//!   fastText `.vec` files.
//! * [`datasets`]: word-similarity benchmark files and the dataset manifest.
//! * [`report`]: CSV output for evaluation suites and variance spectra.
//! * [`fetch`]: where the canonical benchmark files come from, plus checksums.

pub mod datasets;
pub mod embeddings;
mod error;
pub mod fetch;
pub mod report;

pub use embred_core as core;
pub use error::{Error, Result};

/// Environment variable naming the benchmark dataset directory.
pub const DATA_DIR_ENV: &str = "EMBRED_DATA_DIR";
