//! Slow, obviously-correct reference routines for the test suites.
//!
//! Nothing here shares code with `embred-core`. Matrices are `Vec<Vec<f64>>`,
//! eigenpairs come from cyclic Jacobi rotations, ranks from an O(n²) count.

pub type Mat = Vec<Vec<f64>>;

pub fn column_means(x: &Mat) -> Vec<f64> {
    let d = x[0].len();
    let mut mean = vec![0.0; d];
    for row in x {
        for (m, v) in mean.iter_mut().zip(row) {
            *m += v;
        }
    }
    for m in &mut mean {
        *m /= x.len() as f64;
    }
    mean
}

pub fn centered(x: &Mat) -> Mat {
    let mean = column_means(x);
    x.iter()
        .map(|row| row.iter().zip(&mean).map(|(v, m)| v - m).collect())
        .collect()
}

/// Sample covariance with the (n - 1) divisor, from already centered rows.
pub fn covariance(xc: &Mat) -> Mat {
    let n = xc.len();
    let d = xc[0].len();
    let mut c = vec![vec![0.0; d]; d];
    for i in 0..d {
        for j in 0..d {
            let mut s = 0.0;
            for row in xc {
                s += row[i] * row[j];
            }
            c[i][j] = s / (n as f64 - 1.0);
        }
    }
    c
}

/// Cyclic Jacobi eigendecomposition. Returns eigenvalues sorted in
/// decreasing order and the matching unit eigenvectors (as rows).
pub fn jacobi_eigen(a: &Mat) -> (Vec<f64>, Mat) {
    let n = a.len();
    let mut a = a.clone();
    let mut v: Mat = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    off += a[i][j] * a[i][j];
                }
            }
        }
        let scale: f64 = (0..n).map(|i| a[i][i] * a[i][i]).sum::<f64>() + off;
        if off <= 1e-30 * scale.max(1e-300) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].partial_cmp(&a[i][i]).unwrap());
    let values = order.iter().map(|&i| a[i][i]).collect();
    let vectors = order
        .iter()
        .map(|&i| (0..n).map(|k| v[k][i]).collect())
        .collect();
    (values, vectors)
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Center, eigendecompose the covariance, then subtract each row's
/// projection onto the top `d` eigenvectors, one vector at a time.
pub fn ppa(x: &Mat, d: usize) -> Mat {
    let xc = centered(x);
    let (_, vecs) = jacobi_eigen(&covariance(&xc));
    xc.iter()
        .map(|row| {
            let mut out = row.clone();
            for u in vecs.iter().take(d) {
                let c = dot(u, row);
                for (o, ui) in out.iter_mut().zip(u) {
                    *o -= c * ui;
                }
            }
            out
        })
        .collect()
}

/// Centered rows projected onto the top `n` eigenvectors.
pub fn pca_project(x: &Mat, n: usize) -> Mat {
    let xc = centered(x);
    let (_, vecs) = jacobi_eigen(&covariance(&xc));
    xc.iter()
        .map(|row| vecs.iter().take(n).map(|u| dot(u, row)).collect())
        .collect()
}

/// Explained-variance fractions of all components, decreasing.
pub fn variance_fractions(x: &Mat) -> Vec<f64> {
    let (vals, _) = jacobi_eigen(&covariance(&centered(x)));
    let vals: Vec<f64> = vals.into_iter().map(|v| v.max(0.0)).collect();
    let total: f64 = vals.iter().sum();
    vals.iter().map(|v| v / total).collect()
}

/// Average ranks by counting: rank = 1 + #smaller + (#equal - 1) / 2.
pub fn average_ranks(a: &[f64]) -> Vec<f64> {
    a.iter()
        .map(|&x| {
            let less = a.iter().filter(|&&y| y < x).count() as f64;
            let equal = a.iter().filter(|&&y| y == x).count() as f64;
            1.0 + less + (equal - 1.0) / 2.0
        })
        .collect()
}

pub fn pearson(a: &[f64], b: &[f64]) -> Option<f64> {
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let mut sab = 0.0;
    let mut saa = 0.0;
    let mut sbb = 0.0;
    for (x, y) in a.iter().zip(b) {
        sab += (x - ma) * (y - mb);
        saa += (x - ma) * (x - ma);
        sbb += (y - mb) * (y - mb);
    }
    if saa == 0.0 || sbb == 0.0 {
        return None;
    }
    Some(sab / (saa * sbb).sqrt())
}

pub fn spearman(a: &[f64], b: &[f64]) -> Option<f64> {
    if a.len() < 2 {
        return None;
    }
    pearson(&average_ranks(a), &average_ranks(b))
}
