use crate::Scalar;

/// Eigenvalues (descending) and matching orthonormal eigenvectors of a
/// dense symmetric matrix, by cyclic Jacobi rotations.
///
/// `vectors[i]` is the eigenvector for `values[i]`.
pub fn symmetric_eigen<S: Scalar>(matrix: &[Vec<S>]) -> (Vec<S>, Vec<Vec<S>>) {
    let n = matrix.len();
    let mut a: Vec<Vec<S>> = matrix.to_vec();
    let mut v: Vec<Vec<S>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect())
        .collect();
    let frob = a.iter().flatten().map(|&x| x * x).sum::<S>().sqrt();
    let tol = S::epsilon() * frob;

    for _sweep in 0..100 {
        let off = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum::<S>()
            .sqrt();
        if off <= tol {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == S::zero() {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (S::lit(2.0) * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + S::one()).sqrt());
                let c = S::one() / (t * t + S::one()).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].partial_cmp(&a[i][i]).unwrap_or(std::cmp::Ordering::Equal));
    let values = order.iter().map(|&i| a[i][i]).collect();
    let vectors = order.iter().map(|&i| (0..n).map(|k| v[k][i]).collect()).collect();
    (values, vectors)
}
