//! Text embedding files: one `token v1 v2 ... vd` line per word, fields
//! separated by spaces, with an optional fastText `count dim` header line.
//!
//! Parsing streams line by line; nothing beyond the current line is held
//! besides the output matrix.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use embred_core::{EmbeddingMatrix, Vocabulary};

use crate::{Error, Result};

/// At this precision and above, values are written in shortest round-trip
/// form, so a save/load cycle is bit-exact.
pub const EXACT_PRECISION: usize = 17;

pub const DEFAULT_PRECISION: usize = 6;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LoadStats {
    /// The `count dim` header, when the file had one.
    pub header: Option<(usize, usize)>,
    /// Repeated tokens that were dropped (first occurrence wins).
    pub duplicates: usize,
}

/// Parses a header line: exactly two integer fields.
fn parse_header(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_ascii_whitespace();
    let count = it.next()?.parse().ok()?;
    let dim = it.next()?.parse().ok()?;
    it.next().is_none().then_some((count, dim))
}

/// Reads embeddings from `reader`. `source` is only used in error messages.
pub fn read_embeddings<R: BufRead>(
    mut reader: R,
    expected_dim: Option<usize>,
    source: &Path,
) -> Result<(EmbeddingMatrix, LoadStats)> {
    let mut stats = LoadStats::default();
    let mut vocab = Vocabulary::new();
    let mut data: Vec<f32> = Vec::new();
    let mut dim = expected_dim;
    let mut buf = Vec::new();
    let mut line_no = 0;

    loop {
        buf.clear();
        let n = reader
            .read_until(b'\n', &mut buf)
            .map_err(|e| Error::io(source, e))?;
        if n == 0 {
            break;
        }
        line_no += 1;
        let line = std::str::from_utf8(&buf)
            .map_err(|_| Error::parse(source, line_no, "invalid UTF-8"))?;
        let line = line.trim_end_matches(['\n', '\r']);
        if line.trim().is_empty() {
            continue;
        }

        if line_no == 1 {
            if let Some((count, hdim)) = parse_header(line) {
                if let Some(d) = expected_dim.filter(|&d| d != hdim) {
                    return Err(Error::parse(
                        source,
                        line_no,
                        format!("header declares dimension {hdim}, expected {d}"),
                    ));
                }
                stats.header = Some((count, hdim));
                dim = Some(hdim);
                vocab = Vocabulary::with_capacity(count);
                data.reserve(count.saturating_mul(hdim));
                continue;
            }
        }

        let mut fields = line.split_ascii_whitespace();
        let token = fields.next().expect("line is not blank");
        let start = data.len();
        for field in fields {
            let v: f32 = field.parse().map_err(|_| {
                Error::parse(source, line_no, format!("cannot parse {field:?} as a number"))
            })?;
            if !v.is_finite() {
                return Err(Error::parse(source, line_no, format!("non-finite value {field:?}")));
            }
            data.push(v);
        }
        let found = data.len() - start;
        let d = *dim.get_or_insert(found);
        if found != d || d == 0 {
            return Err(Error::parse(
                source,
                line_no,
                format!("expected {d} values, found {found}"),
            ));
        }
        if vocab.insert(token.to_owned()).is_none() {
            data.truncate(start);
            stats.duplicates += 1;
        }
    }

    let Some(dim) = dim.filter(|_| !vocab.is_empty()) else {
        return Err(Error::Empty(source.to_path_buf()));
    };
    Ok((EmbeddingMatrix::new(vocab, data, dim)?, stats))
}

pub fn load_embeddings(
    path: impl AsRef<Path>,
    expected_dim: Option<usize>,
) -> Result<(EmbeddingMatrix, LoadStats)> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_embeddings(BufReader::with_capacity(1 << 20, file), expected_dim, path)
}

/// Dimension of the vectors in a file, read from its first one or two lines.
pub fn peek_dim(path: impl AsRef<Path>) -> Result<usize> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let reader = BufReader::new(file);
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        if let Some((_, dim)) = parse_header(&line).filter(|_| i == 0) {
            return Ok(dim);
        }
        let fields = line.split_ascii_whitespace().count();
        if fields < 2 {
            return Err(Error::parse(path, i + 1, "line has no vector values"));
        }
        return Ok(fields - 1);
    }
    Err(Error::Empty(path.to_path_buf()))
}

/// Writes `m` in the text format with `precision` decimals (no header).
pub fn write_embeddings<W: Write>(m: &EmbeddingMatrix, mut w: W, precision: usize) -> std::io::Result<()> {
    for (word, row) in m.vocab().words().iter().zip(m.iter_rows()) {
        w.write_all(word.as_bytes())?;
        for &x in row {
            if precision >= EXACT_PRECISION {
                write!(w, " {x}")?;
            } else {
                write!(w, " {x:.precision$}")?;
            }
        }
        w.write_all(b"\n")?;
    }
    w.flush()
}

pub fn save_embeddings(m: &EmbeddingMatrix, path: impl AsRef<Path>, precision: usize) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_embeddings(m, BufWriter::with_capacity(1 << 20, file), precision)
        .map_err(|e| Error::io(path, e))
}
