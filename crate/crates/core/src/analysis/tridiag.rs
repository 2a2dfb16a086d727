//! Top eigenpair of symmetric tridiagonal matrices.
//!
//! `λmax` is bracketed by bisection on Sturm counts; the eigenvector then
//! comes from inverse iteration with a shift just above `λmax`. With positive
//! off-diagonals the shifted matrix `σI - A` is a nonsingular M-matrix, so the
//! `LDLᵀ` solve needs no pivoting and every iterate stays entrywise positive.

use crate::{Error, Result, Scalar};

/// The matrix `A^(m,l)`: zero diagonal, off-diagonal `a_k = √(k(m-k+1))`.
#[derive(Clone, Debug, PartialEq)]
pub struct TridiagonalSpec<S> {
    pub m: usize,
    pub l: usize,
    pub offdiag: Vec<S>,
}

impl<S: Scalar> TridiagonalSpec<S> {
    pub fn new(m: usize, l: usize) -> Result<Self> {
        if l > m {
            return Err(Error::InvalidArgument(format!("degree l={l} exceeds m={m}")));
        }
        let offdiag = (1..=l)
            .map(|k| (S::from_usize_lossy(k) * S::from_usize_lossy(m - k + 1)).sqrt())
            .collect();
        Ok(TridiagonalSpec { m, l, offdiag })
    }

    pub fn dim(&self) -> usize {
        self.l + 1
    }

    pub fn diagonal(&self) -> Vec<S> {
        vec![S::zero(); self.dim()]
    }

    pub fn mul_vec(&self, x: &[S]) -> Vec<S> {
        tridiag_mul(&self.diagonal(), &self.offdiag, x)
    }

    pub fn to_dense(&self) -> Vec<Vec<S>> {
        let d = self.dim();
        let mut a = vec![vec![S::zero(); d]; d];
        for (k, &e) in self.offdiag.iter().enumerate() {
            a[k][k + 1] = e;
            a[k + 1][k] = e;
        }
        a
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Eigenpair<S> {
    pub value: S,
    /// Unit 2-norm; nonnegative entries for the Perron vector.
    pub vector: Vec<S>,
}

/// `λmax(A^(m,l))` and its Perron vector.
pub fn lambda_max_tridiag<S: Scalar>(spec: &TridiagonalSpec<S>) -> Eigenpair<S> {
    top_eigenpair(&spec.diagonal(), &spec.offdiag)
}

/// Number of eigenvalues strictly below `x`.
pub fn sturm_count<S: Scalar>(diag: &[S], off: &[S], x: S) -> usize {
    let scale = off.iter().fold(S::one(), |acc, &e| acc.max(e * e));
    let pivmin = S::min_positive_value() * scale;
    let mut count = 0;
    let mut q = S::zero();
    for i in 0..diag.len() {
        q = if i == 0 {
            diag[0] - x
        } else {
            diag[i] - x - off[i - 1] * off[i - 1] / q
        };
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < S::zero() {
            count += 1;
        }
    }
    count
}

/// Largest eigenvalue and a unit eigenvector of a symmetric tridiagonal
/// matrix with strictly positive off-diagonal.
pub fn top_eigenpair<S: Scalar>(diag: &[S], off: &[S]) -> Eigenpair<S> {
    let n = diag.len();
    assert!(n >= 1, "empty matrix");
    assert_eq!(off.len() + 1, n, "off-diagonal length");
    if n == 1 {
        return Eigenpair {
            value: diag[0],
            vector: vec![S::one()],
        };
    }
    let (lo, hi) = bisect_top(diag, off);
    let mut vector = inverse_iteration(diag, off, hi, lo);
    normalize(&mut vector);
    let av = tridiag_mul(diag, off, &vector);
    let rayleigh: S = vector.iter().zip(&av).map(|(&x, &y)| x * y).sum();
    let value = if rayleigh >= lo && rayleigh <= hi {
        rayleigh
    } else {
        (lo + hi) / S::lit(2.0)
    };
    Eigenpair { value, vector }
}

/// Bracket `[lo, hi]` around `λmax`, shrunk until bisection stalls.
fn bisect_top<S: Scalar>(diag: &[S], off: &[S]) -> (S, S) {
    let n = diag.len();
    let mut lo = S::infinity();
    let mut hi = S::neg_infinity();
    for i in 0..n {
        let left = if i > 0 { off[i - 1].abs() } else { S::zero() };
        let right = if i + 1 < n { off[i].abs() } else { S::zero() };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    // λmax is at least every diagonal entry
    lo = diag.iter().fold(lo, |acc, &d| acc.max(d));
    let pad = S::epsilon() * (hi.abs() + lo.abs() + S::one());
    hi = hi + pad;
    lo = lo - pad;
    for _ in 0..4096 {
        let mid = lo + (hi - lo) / S::lit(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(diag, off, mid) == n {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

fn inverse_iteration<S: Scalar>(diag: &[S], off: &[S], above: S, below: S) -> Vec<S> {
    let n = diag.len();
    let norm = above.abs().max(below.abs()).max(S::min_positive_value());
    let mut delta = S::lit(4.0) * S::epsilon() * norm;
    let mut x = vec![S::one(); n];
    let mut pivots = vec![S::zero(); n];
    'retry: for _ in 0..64 {
        let sigma = above + delta;
        // LDLᵀ of σI - A
        for i in 0..n {
            let d = sigma - diag[i];
            pivots[i] = if i == 0 {
                d
            } else {
                d - off[i - 1] * off[i - 1] / pivots[i - 1]
            };
            if !(pivots[i] > S::zero()) {
                delta = delta * S::lit(16.0);
                continue 'retry;
            }
        }
        for _ in 0..4 {
            for i in 1..n {
                x[i] = x[i] + off[i - 1] * x[i - 1] / pivots[i - 1];
            }
            x[n - 1] = x[n - 1] / pivots[n - 1];
            for i in (0..n - 1).rev() {
                x[i] = (x[i] + off[i] * x[i + 1]) / pivots[i];
            }
            normalize(&mut x);
        }
        return x;
    }
    unreachable!("shifted matrix never became positive definite")
}

fn normalize<S: Scalar>(x: &mut [S]) {
    let big = x.iter().fold(S::zero(), |acc, &v| acc.max(v.abs()));
    if big == S::zero() {
        return;
    }
    for v in x.iter_mut() {
        *v = *v / big;
    }
    let norm = x.iter().map(|&v| v * v).sum::<S>().sqrt();
    for v in x.iter_mut() {
        *v = *v / norm;
    }
}

pub fn tridiag_mul<S: Scalar>(diag: &[S], off: &[S], x: &[S]) -> Vec<S> {
    let n = diag.len();
    (0..n)
        .map(|i| {
            let mut y = diag[i] * x[i];
            if i > 0 {
                y = y + off[i - 1] * x[i - 1];
            }
            if i + 1 < n {
                y = y + off[i] * x[i + 1];
            }
            y
        })
        .collect()
}

/// `‖Au - λu‖₂`.
pub fn eigen_residual<S: Scalar>(diag: &[S], off: &[S], pair: &Eigenpair<S>) -> S {
    tridiag_mul(diag, off, &pair.vector)
        .iter()
        .zip(&pair.vector)
        .map(|(&a, &u)| {
            let r = a - pair.value * u;
            r * r
        })
        .sum::<S>()
        .sqrt()
}
