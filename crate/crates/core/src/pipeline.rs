//! The reduction pipeline and its ablations.
//!
//! | method     | stages                                   |
//! |------------|------------------------------------------|
//! | `algo`     | PPA(D) → center → PCA(N) → PPA(D)        |
//! | `pca`      | center → PCA(N)                          |
//! | `p+pca`    | PPA(D) → center → PCA(N)                 |
//! | `pca+p`    | center → PCA(N) → PPA(D)                 |
//! | `ppa-only` | PPA(D)                                   |
//!
//! Each PPA stage refits PCA on its own input, so `algo` fits PCA three times.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{center, fit_pca, ppa, transform, EmbeddingMatrix, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Post-process, reduce with PCA, post-process again.
    Algo,
    Pca,
    PpaThenPca,
    PcaThenPpa,
    /// Post-processing alone; the dimension is kept.
    PpaOnly,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Algo,
        Method::Pca,
        Method::PpaThenPca,
        Method::PcaThenPpa,
        Method::PpaOnly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Algo => "algo",
            Method::Pca => "pca",
            Method::PpaThenPca => "p+pca",
            Method::PcaThenPpa => "pca+p",
            Method::PpaOnly => "ppa-only",
        }
    }

    fn ppa_before(self) -> bool {
        matches!(self, Method::Algo | Method::PpaThenPca | Method::PpaOnly)
    }

    fn reduces(self) -> bool {
        !matches!(self, Method::PpaOnly)
    }

    fn ppa_after(self) -> bool {
        matches!(self, Method::Algo | Method::PcaThenPpa)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::arg(format!(
                    "unknown method {s:?} (expected algo, pca, p+pca, pca+p or ppa-only)"
                ))
            })
    }
}

/// Method, target dimension `N` and threshold `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionSpec {
    pub method: Method,
    pub target_dim: usize,
    pub threshold: usize,
}

impl ReductionSpec {
    pub fn new(method: Method, target_dim: usize, threshold: usize) -> Self {
        ReductionSpec {
            method,
            target_dim,
            threshold,
        }
    }

    /// `N = input_dim / 2`, `D = 7`.
    pub fn with_defaults(method: Method, input_dim: usize) -> Self {
        ReductionSpec::new(
            method,
            crate::default_target_dim(input_dim),
            crate::DEFAULT_THRESHOLD,
        )
    }

    /// Checks the spec against an input of dimension `input_dim`.
    pub fn validate(&self, input_dim: usize) -> Result<()> {
        let n = self.target_dim;
        let d = self.threshold;
        if self.method.reduces() && (n == 0 || n > input_dim) {
            return Err(Error::arg(format!(
                "target dimension {n} must be in 1..={input_dim}"
            )));
        }
        if self.method.ppa_before() && d > input_dim {
            return Err(Error::arg(format!(
                "threshold {d} exceeds input dimension {input_dim}"
            )));
        }
        if self.method.ppa_after() && d > n {
            return Err(Error::arg(format!(
                "threshold {d} exceeds target dimension {n}"
            )));
        }
        Ok(())
    }

    /// Output dimension for an input of dimension `input_dim`.
    pub fn output_dim(&self, input_dim: usize) -> usize {
        if self.method.reduces() {
            self.target_dim
        } else {
            input_dim
        }
    }
}

/// Applies `spec` to `m`. The vocabulary and its order are kept.
pub fn reduce(m: &EmbeddingMatrix, spec: &ReductionSpec) -> Result<EmbeddingMatrix> {
    spec.validate(m.dim())?;
    let method = spec.method;
    let mut x = if method.ppa_before() {
        ppa(m, spec.threshold)?
    } else {
        m.clone()
    };
    if method.reduces() {
        let (centered, _) = center(&x);
        let model = fit_pca(&centered, spec.target_dim)?;
        x = transform(&centered, &model, spec.target_dim)?;
    }
    if method.ppa_after() {
        x = ppa(&x, spec.threshold)?;
    }
    Ok(x)
}

/// Human-readable stage list, e.g. `PPA(7) → center → PCA(150) → PPA(7)`.
pub fn describe(spec: &ReductionSpec) -> String {
    let mut stages: Vec<String> = Vec::new();
    let ppa_stage = || format!("PPA({})", spec.threshold);
    if spec.method.ppa_before() {
        stages.push(ppa_stage());
    }
    if spec.method.reduces() {
        stages.push("center".into());
        stages.push(format!("PCA({})", spec.target_dim));
    }
    if spec.method.ppa_after() {
        stages.push(ppa_stage());
    }
    stages.join(" → ")
}
