//! Word-similarity evaluation: cosine similarity of word vectors against
//! human ratings, scored with Spearman's rank correlation (×100).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use libm::sqrt;

use crate::{EmbeddingMatrix, Error, Result};

/// Norms below this make a vector's cosine similarity 0.
const MIN_NORM: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct WordPair {
    pub first: String,
    pub second: String,
    pub score: f64,
}

/// A named list of human-rated word pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityDataset {
    name: String,
    pairs: Vec<WordPair>,
}

impl SimilarityDataset {
    pub fn new(name: impl Into<String>, pairs: Vec<WordPair>) -> Result<Self> {
        let name = name.into();
        if pairs.is_empty() {
            return Err(Error::arg(format!("dataset {name} has no pairs")));
        }
        if let Some(p) = pairs.iter().find(|p| !p.score.is_finite()) {
            return Err(Error::arg(format!(
                "dataset {name}: non-finite score for ({}, {})",
                p.first, p.second
            )));
        }
        Ok(SimilarityDataset { name, pairs })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn pairs(&self) -> &[WordPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub dataset: String,
    pub rho_x100: f64,
    pub pairs_total: usize,
    pub pairs_evaluated: usize,
    pub pairs_skipped_oov: usize,
}

/// Cosine similarity in `f64`. Returns 0 when either vector has (near) zero norm.
pub fn cosine(u: &[f32], v: &[f32]) -> Result<f64> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    let mut uv = 0.0f64;
    let mut uu = 0.0f64;
    let mut vv = 0.0f64;
    for (&a, &b) in u.iter().zip(v) {
        let (a, b) = (a as f64, b as f64);
        uv += a * b;
        uu += a * a;
        vv += b * b;
    }
    if sqrt(uu) < MIN_NORM || sqrt(vv) < MIN_NORM {
        return Ok(0.0);
    }
    Ok((uv / sqrt(uu * vv)).clamp(-1.0, 1.0))
}

/// 1-based ranks; tied values share the average of the ranks they span.
pub fn fractional_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let mut ranks = alloc::vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        // positions start..end hold ranks start+1 ..= end
        let avg = (start + 1 + end) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = avg;
        }
        start = end;
    }
    ranks
}

/// Spearman's rank correlation: Pearson correlation of the fractional ranks.
///
/// Fails with [`Error::UndefinedCorrelation`] for fewer than two values or
/// when either side has zero rank variance.
pub fn spearman_rho(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    if a.len() < 2 {
        return Err(Error::UndefinedCorrelation(format!(
            "need at least 2 values, got {}",
            a.len()
        )));
    }
    let ra = fractional_ranks(a);
    let rb = fractional_ranks(b);
    let n = a.len() as f64;
    let ma = ra.iter().sum::<f64>() / n;
    let mb = rb.iter().sum::<f64>() / n;
    let mut sab = 0.0;
    let mut saa = 0.0;
    let mut sbb = 0.0;
    for (x, y) in ra.iter().zip(&rb) {
        sab += (x - ma) * (y - mb);
        saa += (x - ma) * (x - ma);
        sbb += (y - mb) * (y - mb);
    }
    if saa == 0.0 || sbb == 0.0 {
        return Err(Error::UndefinedCorrelation("constant ranks".into()));
    }
    Ok((sab / sqrt(saa * sbb)).clamp(-1.0, 1.0))
}

/// Scores `m` on one dataset. Pairs with an out-of-vocabulary word are
/// skipped and counted.
pub fn evaluate(m: &EmbeddingMatrix, ds: &SimilarityDataset, fold_case: bool) -> Result<EvalReport> {
    let mut predicted = Vec::with_capacity(ds.len());
    let mut human = Vec::with_capacity(ds.len());
    for pair in ds.pairs() {
        let (Some(u), Some(v)) = (
            m.lookup_folded(&pair.first, fold_case),
            m.lookup_folded(&pair.second, fold_case),
        ) else {
            continue;
        };
        predicted.push(cosine(u, v)?);
        human.push(pair.score);
    }
    if predicted.len() < 2 {
        return Err(Error::UndefinedCorrelation(format!(
            "{}: only {} of {} pairs in vocabulary",
            ds.name(),
            predicted.len(),
            ds.len()
        )));
    }
    let rho = spearman_rho(&predicted, &human).map_err(|e| match e {
        Error::UndefinedCorrelation(why) => {
            Error::UndefinedCorrelation(format!("{}: {why}", ds.name()))
        }
        other => other,
    })?;
    Ok(EvalReport {
        dataset: ds.name().into(),
        rho_x100: 100.0 * rho,
        pairs_total: ds.len(),
        pairs_evaluated: predicted.len(),
        pairs_skipped_oov: ds.len() - predicted.len(),
    })
}

/// A dataset that could not be scored.
#[derive(Debug, Clone, PartialEq)]
pub struct DatasetFailure {
    pub dataset: String,
    pub error: Error,
}

/// Per-dataset outcomes in input order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SuiteReport {
    pub outcomes: Vec<core::result::Result<EvalReport, DatasetFailure>>,
}

/// How one suite compares to a baseline over the datasets both scored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparison {
    pub datasets: usize,
    /// Datasets where this suite scores strictly higher.
    pub wins: usize,
    /// Mean of `rho_x100 - baseline_rho_x100`.
    pub mean_difference: f64,
    /// Mean of the per-dataset relative change, as a fraction.
    pub mean_relative_change: f64,
    /// Relative change of the cumulative scores, as a fraction.
    pub relative_change_of_sums: f64,
}

impl SuiteReport {
    pub fn reports(&self) -> impl Iterator<Item = &EvalReport> {
        self.outcomes.iter().filter_map(|o| o.as_ref().ok())
    }

    pub fn failures(&self) -> impl Iterator<Item = &DatasetFailure> {
        self.outcomes.iter().filter_map(|o| o.as_ref().err())
    }

    pub fn get(&self, dataset: &str) -> Option<&EvalReport> {
        self.reports().find(|r| r.dataset == dataset)
    }

    /// Sum of `rho_x100` over scored datasets; 0 for an empty suite.
    pub fn cumulative(&self) -> f64 {
        self.reports().map(|r| r.rho_x100).sum()
    }

    /// Compares against `baseline`, matching datasets by name.
    pub fn compare_to(&self, baseline: &SuiteReport) -> Option<Comparison> {
        let matched: Vec<(f64, f64)> = self
            .reports()
            .filter_map(|r| baseline.get(&r.dataset).map(|b| (r.rho_x100, b.rho_x100)))
            .collect();
        if matched.is_empty() {
            return None;
        }
        let n = matched.len() as f64;
        let sum_new: f64 = matched.iter().map(|p| p.0).sum();
        let sum_base: f64 = matched.iter().map(|p| p.1).sum();
        Some(Comparison {
            datasets: matched.len(),
            wins: matched.iter().filter(|(r, b)| r > b).count(),
            mean_difference: (sum_new - sum_base) / n,
            mean_relative_change: matched.iter().map(|(r, b)| (r - b) / b.abs()).sum::<f64>() / n,
            relative_change_of_sums: (sum_new - sum_base) / sum_base.abs(),
        })
    }
}

/// Evaluates every dataset; a failing dataset is recorded, not fatal.
pub fn evaluate_suite(
    m: &EmbeddingMatrix,
    datasets: &[SimilarityDataset],
    fold_case: bool,
) -> SuiteReport {
    SuiteReport {
        outcomes: datasets
            .iter()
            .map(|ds| {
                evaluate(m, ds, fold_case).map_err(|error| DatasetFailure {
                    dataset: ds.name().into(),
                    error,
                })
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pair(a: &str, b: &str, s: f64) -> WordPair {
        WordPair {
            first: a.into(),
            second: b.into(),
            score: s,
        }
    }

    #[test]
    fn cosine_basics() {
        assert_eq!(cosine(&[1.0, 0.0], &[1.0, 0.0]).unwrap(), 1.0);
        assert_eq!(cosine(&[1.0, 0.0], &[0.0, 1.0]).unwrap(), 0.0);
        assert_eq!(cosine(&[1.0, 1.0], &[-1.0, -1.0]).unwrap(), -1.0);
        assert_eq!(cosine(&[0.0, 0.0], &[1.0, 1.0]).unwrap(), 0.0);
        assert!(matches!(
            cosine(&[1.0], &[1.0, 2.0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn spearman_monotone_and_reversed() {
        assert_eq!(spearman_rho(&[1.0, 2.0, 3.0], &[10.0, 20.0, 30.0]).unwrap(), 1.0);
        assert_eq!(spearman_rho(&[1.0, 2.0, 3.0], &[30.0, 20.0, 10.0]).unwrap(), -1.0);
    }

    #[test]
    fn fractional_ranks_average_ties() {
        assert_eq!(fractional_ranks(&[1.0, 2.0, 2.0, 3.0]), [1.0, 2.5, 2.5, 4.0]);
        assert_eq!(fractional_ranks(&[5.0, 5.0, 5.0]), [2.0, 2.0, 2.0]);
    }

    #[test]
    fn spearman_undefined_cases() {
        assert!(matches!(
            spearman_rho(&[1.0], &[2.0]),
            Err(Error::UndefinedCorrelation(_))
        ));
        assert!(matches!(
            spearman_rho(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]),
            Err(Error::UndefinedCorrelation(_))
        ));
    }

    #[test]
    fn evaluate_skips_oov() {
        let m = EmbeddingMatrix::from_rows([
            ("cat", [1.0f32, 0.1]),
            ("dog", [0.9, 0.2]),
            ("car", [0.0, 1.0]),
            ("tree", [-0.3, 0.8]),
        ])
        .unwrap();
        let ds = SimilarityDataset::new(
            "toy",
            vec![
                pair("cat", "dog", 9.0),
                pair("cat", "car", 1.0),
                pair("dog", "tree", 3.0),
                pair("cat", "unicorn", 5.0),
            ],
        )
        .unwrap();
        let r = evaluate(&m, &ds, false).unwrap();
        assert_eq!((r.pairs_total, r.pairs_evaluated, r.pairs_skipped_oov), (4, 3, 1));
        assert!(r.rho_x100 >= -100.0 && r.rho_x100 <= 100.0);
    }

    #[test]
    fn identical_directions_give_undefined_correlation() {
        let m = EmbeddingMatrix::from_rows([
            ("a", [1.0f32, 2.0]),
            ("b", [2.0, 4.0]),
            ("c", [0.5, 1.0]),
            ("d", [4.0, 8.0]),
        ])
        .unwrap();
        let ds = SimilarityDataset::new(
            "flat",
            vec![pair("a", "b", 1.0), pair("c", "d", 2.0), pair("a", "d", 3.0)],
        )
        .unwrap();
        let err = evaluate(&m, &ds, false).unwrap_err();
        assert!(matches!(err, Error::UndefinedCorrelation(ref s) if s.starts_with("flat")));
    }

    #[test]
    fn too_few_pairs_names_dataset() {
        let m = EmbeddingMatrix::from_rows([("a", [1.0f32]), ("b", [2.0])]).unwrap();
        let ds = SimilarityDataset::new("tiny", vec![pair("a", "b", 1.0), pair("a", "x", 2.0)])
            .unwrap();
        let err = evaluate(&m, &ds, false).unwrap_err();
        assert!(matches!(err, Error::UndefinedCorrelation(ref s) if s.contains("tiny")));
    }

    #[test]
    fn empty_suite() {
        let m = EmbeddingMatrix::from_rows([("a", [1.0f32])]).unwrap();
        let suite = evaluate_suite(&m, &[], false);
        assert!(suite.outcomes.is_empty());
        assert_eq!(suite.cumulative(), 0.0);
    }

    #[test]
    fn comparison_reports_both_averages() {
        let mk = |name: &str, rho| EvalReport {
            dataset: name.into(),
            rho_x100: rho,
            pairs_total: 10,
            pairs_evaluated: 10,
            pairs_skipped_oov: 0,
        };
        let base = SuiteReport {
            outcomes: vec![Ok(mk("x", 50.0)), Ok(mk("y", 20.0))],
        };
        let new = SuiteReport {
            outcomes: vec![Ok(mk("x", 55.0)), Ok(mk("y", 19.0))],
        };
        let c = new.compare_to(&base).unwrap();
        assert_eq!(c.datasets, 2);
        assert_eq!(c.wins, 1);
        assert!((c.mean_difference - 2.0).abs() < 1e-12);
        assert!((c.mean_relative_change - (0.1 - 0.05) / 2.0).abs() < 1e-12);
        assert!((c.relative_change_of_sums - 4.0 / 70.0).abs() < 1e-12);
    }
}
