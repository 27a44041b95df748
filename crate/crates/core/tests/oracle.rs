//! Checks against the brute-force routines in `embred-oracle`.

mod common;

use common::*;
use embred_core::{
    center_f64, fit_pca, ppa, reduce, transform, variance_report, Method, ReductionSpec,
};
use embred_oracle as oracle;

#[test]
fn centered_columns_have_zero_mean_in_binary64() {
    let m = uniform(&mut rng(1), 100, 10);
    let (c, mean) = center_f64(&m);
    let expected = oracle::column_means(&to_mat(&m));
    for (a, b) in mean.iter().zip(&expected) {
        assert!((a - b).abs() < 1e-14);
    }
    for j in 0..c.cols() {
        let col_mean = (0..c.rows()).map(|i| c.get(i, j)).sum::<f64>() / c.rows() as f64;
        assert!(col_mean.abs() < 1e-10, "column {j}: {col_mean}");
    }
}

#[test]
fn isotropic_sample_splits_variance_evenly() {
    let m = gaussian(&mut rng(2), 4000, 2);
    let model = fit_pca(&m, 2).unwrap();
    let expected = oracle::variance_fractions(&to_mat(&m));
    for (a, b) in model.explained_variance_ratio().iter().zip(&expected) {
        assert!((a - b).abs() < 1e-9);
        // sampling tolerance for n = 4000
        assert!((a - 0.5).abs() < 0.05, "{a}");
    }
}

#[test]
fn variance_fractions_match_jacobi() {
    let mut r = rng(3);
    for (rows, dim) in [(20, 10), (12, 5), (8, 10), (20, 3)] {
        let m = uniform(&mut r, rows, dim);
        let k = rows.min(dim);
        let got = variance_report(&m, k).unwrap();
        let expected = oracle::variance_fractions(&to_mat(&m));
        for ((i, f), e) in got.iter().zip(&expected) {
            assert!((f - e).abs() < 1e-9, "{rows}x{dim} component {i}: {f} vs {e}");
        }
    }
}

#[test]
fn transform_matches_jacobi_projection() {
    let m = uniform(&mut rng(4), 50, 8);
    let model = fit_pca(&m, 4).unwrap();
    let t = transform(&m, &model, 4).unwrap();
    let expected = oracle::pca_project(&to_mat(&m), 4);
    assert!(max_abs_diff_up_to_sign(&t, &expected) < 1e-6);
}

#[test]
fn components_match_jacobi_eigenvectors_up_to_sign() {
    let m = uniform(&mut rng(5), 30, 6);
    let model = fit_pca(&m, 6).unwrap();
    let xc = oracle::centered(&to_mat(&m));
    let (vals, vecs) = oracle::jacobi_eigen(&oracle::covariance(&xc));
    for i in 0..6 {
        let dot = oracle::dot(model.component(i), &vecs[i]);
        assert!((dot.abs() - 1.0).abs() < 1e-9, "component {i}");
        assert!((model.explained_variance()[i] - vals[i]).abs() < 1e-12);
    }
}

#[test]
fn ppa_matches_per_vector_oracle() {
    let m = uniform(&mut rng(6), 30, 6);
    let got = ppa(&m, 2).unwrap();
    let expected = oracle::ppa(&to_mat(&m), 2);
    assert!(max_abs_diff(&got, &expected) <= 1e-6);
}

#[test]
fn algo_matches_oracle_composition() {
    let m = uniform(&mut rng(7), 40, 10);
    let got = reduce(&m, &ReductionSpec::new(Method::Algo, 5, 2)).unwrap();
    let x = oracle::ppa(&to_mat(&m), 2);
    let x = oracle::pca_project(&x, 5);
    let x = oracle::ppa(&x, 2);
    // the intermediate projection's signs do not survive the second PPA
    // unchanged, so compare column-wise up to sign
    assert!(max_abs_diff_up_to_sign(&got, &x) <= 1e-5);
}

#[test]
fn baselines_match_oracle_compositions() {
    let m = uniform(&mut rng(8), 40, 10);
    let x = to_mat(&m);

    let pca = reduce(&m, &ReductionSpec::new(Method::Pca, 5, 2)).unwrap();
    assert!(max_abs_diff_up_to_sign(&pca, &oracle::pca_project(&x, 5)) <= 1e-5);

    let ppca = reduce(&m, &ReductionSpec::new(Method::PpaThenPca, 5, 2)).unwrap();
    let expected = oracle::pca_project(&oracle::ppa(&x, 2), 5);
    assert!(max_abs_diff_up_to_sign(&ppca, &expected) <= 1e-5);

    let pcap = reduce(&m, &ReductionSpec::new(Method::PcaThenPpa, 5, 2)).unwrap();
    let expected = oracle::ppa(&oracle::pca_project(&x, 5), 2);
    assert!(max_abs_diff_up_to_sign(&pcap, &expected) <= 1e-5);

    let only = reduce(&m, &ReductionSpec::new(Method::PpaOnly, 5, 2)).unwrap();
    assert!(max_abs_diff(&only, &oracle::ppa(&x, 2)) <= 1e-6);
}

#[test]
fn ppa_flattens_dominant_directions() {
    let m = word_like(&mut rng(9), 2000, 40, 5);
    let before = variance_report(&m, 40).unwrap();
    let after = variance_report(&ppa(&m, 5).unwrap(), 40).unwrap();
    assert!(after[0].1 < before[0].1);
    // the dominant directions are gone, the rest is close to isotropic
    assert!(after[0].1 < 2.0 / 35.0, "{}", after[0].1);
}
