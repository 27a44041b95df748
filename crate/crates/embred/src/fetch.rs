//! Canonical sources of the benchmark and embedding files, and SHA-256
//! verification of local copies. Nothing here downloads anything.

use std::fs::File;
use std::io::{self, Read};
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::{Error, Result};

/// Directory of the word-similarity collection the 12 benchmarks come from.
pub const WORD_SIM_BASE_URL: &str =
    "https://raw.githubusercontent.com/mfaruqui/eval-word-vectors/master/data/word-sim";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchmarkFile {
    pub name: &'static str,
    pub file: &'static str,
    /// Number of rated word pairs in the standard release.
    pub pairs: usize,
}

pub const BENCHMARKS: [BenchmarkFile; 12] = [
    BenchmarkFile { name: "MTurk-771", file: "EN-MTurk-771.txt", pairs: 771 },
    BenchmarkFile { name: "WS-353-SIM", file: "EN-WS-353-SIM.txt", pairs: 203 },
    BenchmarkFile { name: "MTurk-287", file: "EN-MTurk-287.txt", pairs: 287 },
    BenchmarkFile { name: "VERB-143", file: "EN-VERB-143.txt", pairs: 144 },
    BenchmarkFile { name: "WS-353-ALL", file: "EN-WS-353-ALL.txt", pairs: 353 },
    BenchmarkFile { name: "RW-Stanford", file: "EN-RW-STANFORD.txt", pairs: 2034 },
    BenchmarkFile { name: "MEN-TR-3K", file: "EN-MEN-TR-3k.txt", pairs: 3000 },
    BenchmarkFile { name: "RG-65", file: "EN-RG-65.txt", pairs: 65 },
    BenchmarkFile { name: "MC-30", file: "EN-MC-30.txt", pairs: 30 },
    BenchmarkFile { name: "SIMLEX-999", file: "EN-SIMLEX-999.txt", pairs: 999 },
    BenchmarkFile { name: "WS-353-REL", file: "EN-WS-353-REL.txt", pairs: 252 },
    BenchmarkFile { name: "YP-130", file: "EN-YP-130.txt", pairs: 130 },
];

/// Pre-trained embeddings used in the experiments: `(description, url)`.
pub const EMBEDDING_SOURCES: [(&str, &str); 2] = [
    (
        "GloVe 6B (50d/100d/200d/300d, 400K vocabulary)",
        "https://nlp.stanford.edu/data/glove.6B.zip",
    ),
    (
        "fastText Wikipedia skip-gram 300d (wiki.en.vec)",
        "https://dl.fbaipublicfiles.com/fasttext/vectors-wiki/wiki.en.vec",
    ),
];

pub fn benchmark_url(b: &BenchmarkFile) -> String {
    format!("{WORD_SIM_BASE_URL}/{}", b.file)
}

/// Manifest text (`name<TAB>file`) for the 12 canonical benchmarks.
pub fn canonical_manifest() -> String {
    BENCHMARKS
        .iter()
        .map(|b| format!("{}\t{}\n", b.name, b.file))
        .collect()
}

pub fn sha256_reader<R: Read>(mut r: R) -> io::Result<String> {
    let mut hasher = Sha256::new();
    let mut buf = vec![0u8; 1 << 16];
    loop {
        let n = r.read(&mut buf)?;
        if n == 0 {
            break;
        }
        hasher.update(&buf[..n]);
    }
    Ok(hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect())
}

pub fn sha256_file(path: &Path) -> Result<String> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    sha256_reader(file).map_err(|e| Error::io(path, e))
}

/// Parses `sha256sum`-style lines: `<hex digest>  <file name>`.
pub fn parse_checksums(text: &str, source: &Path) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match (parts.next(), parts.next()) {
            (Some(digest), Some(file))
                if digest.len() == 64 && digest.bytes().all(|b| b.is_ascii_hexdigit()) =>
            {
                let file = file.trim_start_matches('*');
                out.push((digest.to_ascii_lowercase(), file.to_owned()));
            }
            _ => return Err(Error::parse(source, i + 1, "expected `<sha256>  <file>`")),
        }
    }
    Ok(out)
}
