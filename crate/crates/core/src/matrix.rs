use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Result, Vocabulary};

/// Word vectors stored as a dense row-major `f32` matrix, one row per token.
///
/// Every row has exactly `dim` finite entries, and there is at least one
/// row and one column. The matrix is immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingMatrix {
    vocab: Vocabulary,
    data: Vec<f32>,
    dim: usize,
}

impl EmbeddingMatrix {
    pub fn new(vocab: Vocabulary, data: Vec<f32>, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::arg("embedding dimension must be at least 1"));
        }
        if vocab.is_empty() {
            return Err(Error::arg("embedding matrix must have at least one row"));
        }
        if data.len() != vocab.len() * dim {
            return Err(Error::DimensionMismatch {
                expected: vocab.len() * dim,
                found: data.len(),
            });
        }
        if let Some(pos) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                row: pos / dim,
                col: pos % dim,
            });
        }
        Ok(EmbeddingMatrix { vocab, data, dim })
    }

    /// Convenience constructor from `(token, vector)` pairs.
    pub fn from_rows<S, R>(rows: impl IntoIterator<Item = (S, R)>) -> Result<Self>
    where
        S: Into<String>,
        R: AsRef<[f32]>,
    {
        let mut vocab = Vocabulary::new();
        let mut data = Vec::new();
        let mut dim = None;
        for (word, row) in rows {
            let row = row.as_ref();
            let d = *dim.get_or_insert(row.len());
            if row.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: row.len(),
                });
            }
            let word = word.into();
            if vocab.insert(word.clone()).is_none() {
                return Err(Error::DuplicateToken(word));
            }
            data.extend_from_slice(row);
        }
        EmbeddingMatrix::new(vocab, data, dim.unwrap_or(0))
    }

    /// Same vocabulary, new values. Used by every transform that keeps rows.
    pub(crate) fn with_data(&self, data: Vec<f32>, dim: usize) -> Result<Self> {
        EmbeddingMatrix::new(self.vocab.clone(), data, dim)
    }

    pub fn vocab(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> usize {
        self.vocab.len()
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f32] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter_rows(&self) -> core::slice::ChunksExact<'_, f32> {
        self.data.chunks_exact(self.dim)
    }

    /// Exact-match lookup.
    pub fn lookup(&self, token: &str) -> Option<&[f32]> {
        self.vocab.get(token).map(|i| self.row(i))
    }

    /// Lookup that, when `fold_case` is set, retries with the lowercased
    /// token after an exact miss.
    pub fn lookup_folded(&self, token: &str, fold_case: bool) -> Option<&[f32]> {
        match self.lookup(token) {
            Some(row) => Some(row),
            None if fold_case => {
                let lower = token.to_lowercase();
                if lower == token {
                    None
                } else {
                    self.lookup(&lower)
                }
            }
            None => None,
        }
    }

    pub fn into_parts(self) -> (Vocabulary, Vec<f32>, usize) {
        (self.vocab, self.data, self.dim)
    }
}

/// Plain row-major `f64` matrix, used where results must stay in binary64.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: alloc::vec![0.0; rows * cols],
        }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> core::slice::ChunksExact<'_, f64> {
        self.data.chunks_exact(self.cols.max(1))
    }
}
