//! Word-similarity benchmark files and the manifest that lists them.
//!
//! A benchmark file holds one `word1 word2 score` triple per line. The
//! separator (tab, comma or whitespace) is detected from the first data
//! line; a leading header whose third field is not a number is skipped.
//!
//! A manifest holds one `name<TAB>path` entry per line. Blank lines and
//! `#` comments are ignored; relative paths resolve against a data
//! directory.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use embred_core::{SimilarityDataset, WordPair};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Separator {
    Tab,
    Comma,
    Whitespace,
}

impl Separator {
    fn detect(line: &str) -> Self {
        if line.contains('\t') {
            Separator::Tab
        } else if line.contains(',') {
            Separator::Comma
        } else {
            Separator::Whitespace
        }
    }

    fn split(self, line: &str) -> Vec<&str> {
        match self {
            Separator::Tab => line.split('\t').map(str::trim).collect(),
            Separator::Comma => line.split(',').map(str::trim).collect(),
            Separator::Whitespace => line.split_whitespace().collect(),
        }
    }
}

pub fn read_dataset<R: BufRead>(reader: R, name: &str, source: &Path) -> Result<SimilarityDataset> {
    let mut sep = None;
    let mut pairs = Vec::new();
    let mut seen_first = false;
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|e| Error::io(source, e))?;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let s = *sep.get_or_insert_with(|| Separator::detect(line));
        let fields = s.split(line);
        let is_first = !seen_first;
        seen_first = true;
        if is_first && fields.len() == 3 && fields[2].parse::<f64>().is_err() {
            // header; the data lines pick their own separator
            sep = None;
            continue;
        }
        let [first, second, score] = fields[..] else {
            return Err(Error::parse(
                source,
                line_no,
                format!("expected 3 fields, found {}", fields.len()),
            ));
        };
        let score: f64 = score
            .parse()
            .ok()
            .filter(|s: &f64| s.is_finite())
            .ok_or_else(|| Error::parse(source, line_no, format!("bad score {score:?}")))?;
        if first.is_empty() || second.is_empty() {
            return Err(Error::parse(source, line_no, "empty word"));
        }
        pairs.push(WordPair {
            first: first.to_owned(),
            second: second.to_owned(),
            score,
        });
    }
    if pairs.is_empty() {
        return Err(Error::Empty(source.to_path_buf()));
    }
    Ok(SimilarityDataset::new(name, pairs)?)
}

pub fn load_dataset(path: impl AsRef<Path>, name: &str) -> Result<SimilarityDataset> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_dataset(BufReader::new(file), name, path)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub name: String,
    pub path: PathBuf,
}

pub fn parse_manifest(text: &str, base: &Path, source: &Path) -> Result<Vec<ManifestEntry>> {
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let Some((name, path)) = line.split_once('\t') else {
            return Err(Error::parse(source, i + 1, "expected name<TAB>path"));
        };
        let (name, path) = (name.trim(), path.trim());
        if name.is_empty() || path.is_empty() {
            return Err(Error::parse(source, i + 1, "empty name or path"));
        }
        entries.push(ManifestEntry {
            name: name.to_owned(),
            path: base.join(path),
        });
    }
    Ok(entries)
}

/// Reads a manifest. Relative paths resolve against `data_dir`, or the
/// manifest's own directory when `data_dir` is `None`.
pub fn load_manifest(path: impl AsRef<Path>, data_dir: Option<&Path>) -> Result<Vec<ManifestEntry>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let base = match data_dir {
        Some(d) => d.to_path_buf(),
        None => path.parent().map(Path::to_path_buf).unwrap_or_default(),
    };
    parse_manifest(&text, &base, path)
}

/// Loads every dataset listed in `entries`, in order.
pub fn load_all(entries: &[ManifestEntry]) -> Result<Vec<SimilarityDataset>> {
    entries
        .iter()
        .map(|e| load_dataset(&e.path, &e.name))
        .collect()
}
