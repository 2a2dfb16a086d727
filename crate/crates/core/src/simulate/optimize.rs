//! Ground truth for the polynomial choice: the best expected cut over every
//! degree-`l` symmetric polynomial, not just the one the spectral analysis
//! picks.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::expectation::{degree_of, dqi_expectation_from_histogram};
use super::histogram::{cut_histogram_with, CutHistogram};
use super::krawtchouk::krawtchouk_table;
use crate::analysis::symmetric_eigen;
use crate::graph::Graph;
use crate::scalar::sig15;
use crate::{Budgets, Error, Result, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OptimalPolynomial<S: Scalar> {
    pub l: usize,
    /// Expected cut attained by `coeffs`, recomputed from the histogram.
    #[serde(serialize_with = "sig15::serialize")]
    pub expected_cut: S,
    /// Top generalized eigenvalue of `C w = λ D w`.
    #[serde(serialize_with = "sig15::serialize")]
    pub eigenvalue: S,
    /// Unit norm, first nonzero entry positive.
    #[serde(serialize_with = "sig15::vec")]
    pub coeffs: Vec<S>,
    /// Dimension of the range of `D` that was searched.
    pub rank: usize,
}

pub fn optimize_exact<S: Scalar>(graph: &Graph, l: usize) -> Result<OptimalPolynomial<S>> {
    optimize_exact_with(graph, l, &Budgets::default())
}

pub fn optimize_exact_with<S: Scalar>(graph: &Graph, l: usize, budgets: &Budgets) -> Result<OptimalPolynomial<S>> {
    if l > graph.m() {
        return Err(Error::InvalidArgument(format!("degree {l} exceeds m={}", graph.m())));
    }
    let hist = cut_histogram_with(graph, budgets)?;
    optimize_from_histogram(&hist, l)
}

/// `x ≈ mantissa · 2^exponent` with the mantissa in `[0.5, 1)` (or 0).
fn split_big(x: &BigInt) -> (f64, i64) {
    if x.is_zero() {
        return (0.0, 0);
    }
    let bits = x.bits() as i64;
    let shift = (bits - 60).max(0);
    let top: BigInt = x.abs() >> shift as usize;
    let top: i64 = i64::try_from(top).expect("60-bit mantissa");
    let sign = if x.is_negative() { -1.0 } else { 1.0 };
    (sign * top as f64 / 2f64.powi(60.min(bits) as i32), shift + 60.min(bits))
}

/// Normalizes a Gram-type integer matrix by its diagonal: entry `(a, b)` is
/// divided by `√(D_aa D_bb)`. Huge integers never pass through a float.
fn scaled<S: Scalar>(mat: &[Vec<BigInt>], diag: &[(f64, i64)]) -> Vec<Vec<S>> {
    mat.iter()
        .enumerate()
        .map(|(a, row)| {
            row.iter()
                .enumerate()
                .map(|(b, x)| {
                    let (f, e) = split_big(x);
                    let (fa, ea) = diag[a];
                    let (fb, eb) = diag[b];
                    let exp = e as f64 - (ea + eb) as f64 / 2.0;
                    S::lit(f / (fa * fb).sqrt() * exp.exp2())
                })
                .collect()
        })
        .collect()
}

pub fn optimize_from_histogram<S: Scalar>(hist: &CutHistogram, l: usize) -> Result<OptimalPolynomial<S>> {
    let m = hist.m();
    degree_of(&vec![(); l + 1], m)?;
    let k = krawtchouk_table(l, m);
    let support: Vec<(usize, BigInt)> = hist.support().map(|(j, c)| (j, BigInt::from(c))).collect();
    let dim = l + 1;
    let mut d = vec![vec![BigInt::zero(); dim]; dim];
    let mut c = vec![vec![BigInt::zero(); dim]; dim];
    for a in 0..dim {
        for b in a..dim {
            let mut dab = BigInt::zero();
            let mut cab = BigInt::zero();
            for (j, n) in &support {
                let t = n * &k[a][*j] * &k[b][*j];
                cab += &t * BigInt::from(*j);
                dab += t;
            }
            d[a][b] = dab.clone();
            d[b][a] = dab;
            c[a][b] = cab.clone();
            c[b][a] = cab;
        }
    }

    // Jacobi scaling; a zero diagonal entry means φ_a vanishes on the support
    let diag: Vec<(f64, i64)> = (0..dim)
        .map(|a| if d[a][a].is_zero() { (1.0, 0) } else { split_big(&d[a][a]) })
        .collect();
    let ds: Vec<Vec<S>> = scaled(&d, &diag);
    let cs: Vec<Vec<S>> = scaled(&c, &diag);

    // restrict to the range of D
    let (dvals, dvecs) = symmetric_eigen(&ds);
    let top = dvals.first().copied().unwrap_or(S::zero());
    let tol = top * S::epsilon() * S::from_usize_lossy(dim) * S::lit(64.0);
    let basis: Vec<Vec<S>> = dvals
        .iter()
        .zip(&dvecs)
        .filter(|(&lam, _)| lam > tol)
        .map(|(&lam, v)| v.iter().map(|&x| x / lam.sqrt()).collect())
        .collect();
    let rank = basis.len();
    if rank == 0 {
        return Err(Error::Degenerate("D has no range".into()));
    }

    // Pᵀ C P with P = [basis vectors as columns]
    let cp: Vec<Vec<S>> = basis
        .iter()
        .map(|p| (0..dim).map(|a| (0..dim).map(|b| cs[a][b] * p[b]).sum()).collect())
        .collect();
    let reduced: Vec<Vec<S>> = basis
        .iter()
        .map(|p| cp.iter().map(|cq| p.iter().zip(cq).map(|(&x, &y)| x * y).sum()).collect())
        .collect();
    let (rvals, rvecs) = symmetric_eigen(&reduced);
    let y = &rvecs[0];
    let w_scaled: Vec<S> = (0..dim)
        .map(|a| basis.iter().zip(y).map(|(p, &yi)| p[a] * yi).sum())
        .collect();

    // undo the Jacobi scaling in log space, then normalize
    let logs: Vec<f64> = diag.iter().map(|&(f, e)| -0.5 * (f.log2() + e as f64)).collect();
    let shift = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut coeffs: Vec<S> = w_scaled
        .iter()
        .zip(&logs)
        .map(|(&w, &lg)| w * S::lit((lg - shift).exp2()))
        .collect();
    let norm = coeffs.iter().map(|&x| x * x).sum::<S>().sqrt();
    let sign = coeffs
        .iter()
        .find(|&&x| x != S::zero())
        .map_or(S::one(), |&x| x.signum());
    for x in coeffs.iter_mut() {
        *x = *x * sign / norm;
    }
    let expected_cut = dqi_expectation_from_histogram(hist, &coeffs)?.expected_cut;
    Ok(OptimalPolynomial {
        l,
        expected_cut,
        eigenvalue: rvals[0],
        coeffs,
        rank,
    })
}
