//! The comparison matrix `B^(l)` (off-diagonal `√k`) and its link to Hermite
//! zeros, which bounds `λmax(A^(m,l)) <= √m λmax(B^(l)) = O(√(ml))`.

use super::tridiag::{top_eigenpair, Eigenpair};
use crate::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct HermiteComparator<S> {
    pub l: usize,
    pub offdiag: Vec<S>,
}

impl<S: Scalar> HermiteComparator<S> {
    pub fn new(l: usize) -> Self {
        HermiteComparator {
            l,
            offdiag: (1..=l).map(|k| S::from_usize_lossy(k).sqrt()).collect(),
        }
    }

    pub fn lambda_max(&self) -> Eigenpair<S> {
        top_eigenpair(&vec![S::zero(); self.l + 1], &self.offdiag)
    }
}

/// Physicists' Hermite `H_n(x)` together with the magnitude of the two terms
/// of its last recurrence step, `max(|2x H_{n-1}|, |2(n-1) H_{n-2}|)`.
///
/// Values are rescaled on the fly so large `n` does not overflow; only the
/// ratio of the two returned numbers is meaningful then.
pub fn hermite_with_scale<S: Scalar>(n: usize, x: S) -> (S, S) {
    let two = S::lit(2.0);
    if n == 0 {
        return (S::one(), S::one());
    }
    let mut prev = S::one();
    let mut cur = two * x;
    let mut scale = cur.abs();
    let limit = S::max_value().sqrt().sqrt();
    for k in 1..n {
        let a = two * x * cur;
        let b = two * S::from_usize_lossy(k) * prev;
        let next = a - b;
        scale = a.abs().max(b.abs());
        prev = cur;
        cur = next;
        let big = cur.abs().max(prev.abs());
        if big > limit {
            cur = cur / big;
            prev = prev / big;
            scale = scale / big;
        }
    }
    (cur, scale)
}

/// `|H_{l+1}(x*)|` relative to the size of the terms that cancel in it, where
/// `x* = λmax(B^(l)) / √2`. Small values certify that `x*` is the largest
/// zero of `H_{l+1}`.
pub fn hermite_residual<S: Scalar>(l: usize) -> S {
    let lambda = HermiteComparator::<S>::new(l).lambda_max().value;
    let x = lambda / S::lit(2.0).sqrt();
    let (value, scale) = hermite_with_scale(l + 1, x);
    if scale == S::zero() {
        return value.abs();
    }
    value.abs() / scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn small_degrees_are_exact() {
        let b1 = HermiteComparator::<f64>::new(1).lambda_max().value;
        assert_relative_eq!(b1, 1.0, max_relative = 1e-14);
        let b2 = HermiteComparator::<f64>::new(2).lambda_max().value;
        assert_relative_eq!(b2, 3f64.sqrt(), max_relative = 1e-14);
        assert!(hermite_residual::<f64>(1) < 1e-14);
        assert!(hermite_residual::<f64>(2) < 1e-14);
    }

    #[test]
    fn recurrence_matches_explicit_polynomials() {
        let x = 0.7f64;
        assert_relative_eq!(hermite_with_scale(2, x).0, 4.0 * x * x - 2.0);
        assert_relative_eq!(hermite_with_scale(3, x).0, 8.0 * x.powi(3) - 12.0 * x);
        assert_relative_eq!(
            hermite_with_scale(4, x).0,
            16.0 * x.powi(4) - 48.0 * x * x + 12.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn degree_forty_residual() {
        for l in 1..=40 {
            let r = hermite_residual::<f64>(l);
            assert!(r <= 1e-8, "l={l}: {r}");
        }
    }

    #[test]
    fn largest_zero_growth() {
        for l in 1..200 {
            let b = HermiteComparator::<f64>::new(l).lambda_max().value;
            assert!(b <= 2.0 * 2f64.sqrt() * (l as f64).sqrt());
        }
    }
}
