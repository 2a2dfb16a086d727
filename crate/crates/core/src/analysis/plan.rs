use serde::Serialize;

use super::tridiag::{eigen_residual, lambda_max_tridiag, TridiagonalSpec};
use crate::graph::{girth, Extent, Girth, Graph};
use crate::scalar::sig15;
use crate::Scalar;

/// Degree cap used when the plan is only analyzed, never enumerated.
pub const ANALYSIS_CAP: usize = 10_000;

/// The polynomial degree: `⌊(g-1)/2⌋` for finite girth, `m` for forests,
/// either way at most `cap`.
pub fn choose_l(girth: Extent, m: usize, cap: usize) -> usize {
    match girth {
        Extent::Finite(g) => (g.saturating_sub(1) / 2).min(cap),
        Extent::Infinite => m.min(cap),
    }
}

/// Largest `l` with `Σ_{k≤l} C(m,k) <= 2^log2_budget`.
pub fn simulation_cap(m: usize, log2_budget: u32) -> usize {
    let budget = 1u128 << log2_budget.min(120);
    let mut total = 0u128;
    let mut binom = 1u128;
    for k in 0..=m {
        if k > 0 {
            binom = binom * (m - k + 1) as u128 / k as u128;
        }
        total = total.saturating_add(binom);
        if total > budget {
            return k.saturating_sub(1);
        }
    }
    m
}

/// `μ_k = (-1)^k u_k / √C(m,k)`.
///
/// The Dicke weights `μ_k √C(m,k)` of the optimal state are the Perron vector
/// `u`. The alternating sign comes from `y_ij = z_i z_j`: an edge is cut when
/// `y_ij = -1`, so the polynomial must favor negative `Σ y`.
pub fn dqi_coefficients<S: Scalar>(u: &[S], m: usize) -> Vec<S> {
    let mut ln_binom = 0.0f64;
    u.iter()
        .enumerate()
        .map(|(k, &uk)| {
            if k > 0 {
                ln_binom += ((m - k + 1) as f64 / k as f64).ln();
            }
            let mag = uk * S::lit((-0.5 * ln_binom).exp());
            if k % 2 == 0 {
                mag
            } else {
                -mag
            }
        })
        .collect()
}

/// `(m + λ) / 2`.
pub fn predicted_expectation<S: Scalar>(m: usize, lambda: S) -> S {
    (S::from_usize_lossy(m) + lambda) / S::lit(2.0)
}

/// Everything the classical side of DQI computes before any sampling.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DqiPlan<S: Scalar> {
    pub n: usize,
    pub m: usize,
    pub girth: Girth,
    pub l: usize,
    pub cap: usize,
    #[serde(serialize_with = "sig15::serialize")]
    pub lambda_max: S,
    #[serde(serialize_with = "sig15::vec")]
    pub eigvec: Vec<S>,
    #[serde(serialize_with = "sig15::vec")]
    pub coeffs: Vec<S>,
    #[serde(serialize_with = "sig15::serialize")]
    pub predicted_expected_cut: S,
    /// `true` iff `g >= 2l + 2` or the graph is a forest; otherwise the
    /// prediction is only an estimate.
    pub formula_exact: bool,
    #[serde(serialize_with = "sig15::serialize")]
    pub eigen_residual: S,
}

/// Girth, degree, eigenpair, coefficients and predicted expected cut.
pub fn plan<S: Scalar>(graph: &Graph, cap: usize) -> DqiPlan<S> {
    plan_with_girth(graph, girth(graph), cap)
}

pub fn plan_with_girth<S: Scalar>(graph: &Graph, girth: Girth, cap: usize) -> DqiPlan<S> {
    let l = choose_l(girth.value, graph.m(), cap);
    let mut p = plan_with_degree(graph, girth, l).expect("l <= m by construction");
    p.cap = cap;
    p
}

/// Same as [`plan_with_girth`] with the degree forced to `l` instead of
/// derived from the girth.
pub fn plan_with_degree<S: Scalar>(graph: &Graph, girth: Girth, l: usize) -> crate::Result<DqiPlan<S>> {
    let m = graph.m();
    let spec = TridiagonalSpec::<S>::new(m, l)?;
    let pair = lambda_max_tridiag(&spec);
    let residual = eigen_residual(&spec.diagonal(), &spec.offdiag, &pair);
    let coeffs = dqi_coefficients(&pair.vector, m);
    let formula_exact = girth.value.at_least(2 * l + 2);
    Ok(DqiPlan {
        n: graph.n(),
        m,
        l,
        cap: l,
        lambda_max: pair.value,
        predicted_expected_cut: predicted_expectation(m, pair.value),
        eigvec: pair.vector,
        coeffs,
        formula_exact,
        eigen_residual: residual,
        girth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GeneratorSpec};
    use approx::assert_relative_eq;

    #[test]
    fn choose_l_examples() {
        assert_eq!(choose_l(Extent::Finite(5), 15, usize::MAX), 2);
        assert_eq!(choose_l(Extent::Finite(6), 6, usize::MAX), 2);
        assert_eq!(choose_l(Extent::Infinite, 9, 4), 4);
        assert_eq!(choose_l(Extent::Infinite, 3, 10), 3);
        assert_eq!(choose_l(Extent::Finite(1001), 1001, 10), 10);
    }

    #[test]
    fn simulation_cap_examples() {
        // Σ_{k≤2} C(6,k) = 22
        assert_eq!(simulation_cap(6, 4), 1);
        assert_eq!(simulation_cap(6, 5), 2);
        assert_eq!(simulation_cap(6, 6), 6);
        assert_eq!(simulation_cap(40, 26), 7);
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(dqi_coefficients(&[1.0f64], 7), vec![1.0]);
        let s = 1.0 / 32f64.sqrt();
        let u = [6f64.sqrt() * s, 4.0 * s, 10f64.sqrt() * s];
        let mu = dqi_coefficients(&u, 6);
        let expect = [6f64.sqrt(), -4.0 / 6f64.sqrt(), (2.0f64 / 3.0).sqrt()];
        for (a, b) in mu.iter().zip(expect) {
            assert_relative_eq!(a / s, b, max_relative = 1e-12);
        }
        let h = 0.5f64.sqrt();
        let mu = dqi_coefficients(&[h, h], 3);
        assert_relative_eq!(mu[1] / mu[0], -1.0 / 3f64.sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn predicted_examples() {
        assert_eq!(predicted_expectation(6, 4.0f64), 5.0);
        assert_relative_eq!(predicted_expectation(3, 3f64.sqrt()), 2.3660254037844384, max_relative = 1e-14);
        assert_relative_eq!(predicted_expectation(15, 43f64.sqrt()), 10.778719262151, max_relative = 1e-12);
    }

    #[test]
    fn plan_examples() {
        let c6 = generate(&GeneratorSpec::Cycle(6)).unwrap();
        let p = plan::<f64>(&c6, usize::MAX);
        assert_eq!(p.l, 2);
        assert_relative_eq!(p.lambda_max, 4.0, max_relative = 1e-12);
        assert_relative_eq!(p.predicted_expected_cut, 5.0, max_relative = 1e-12);
        assert!(p.formula_exact);

        let c3 = generate(&GeneratorSpec::Cycle(3)).unwrap();
        let p = plan::<f64>(&c3, usize::MAX);
        assert_eq!(p.l, 1);
        assert_relative_eq!(p.lambda_max, 3f64.sqrt(), max_relative = 1e-12);
        assert!(!p.formula_exact);

        let pet = generate(&GeneratorSpec::Petersen).unwrap();
        let p = plan::<f64>(&pet, usize::MAX);
        assert_eq!(p.l, 2);
        assert_relative_eq!(p.lambda_max, 43f64.sqrt(), max_relative = 1e-12);
        assert!(!p.formula_exact);
    }

    #[test]
    fn forest_plan_predicts_all_edges() {
        let path = generate(&GeneratorSpec::Path(5)).unwrap();
        let p = plan::<f64>(&path, ANALYSIS_CAP);
        assert_eq!(p.l, 4);
        assert!(p.formula_exact);
        assert_relative_eq!(p.predicted_expected_cut, 4.0, max_relative = 1e-12);
    }

    #[test]
    fn forced_degree() {
        let c6 = generate(&GeneratorSpec::Cycle(6)).unwrap();
        let p = plan_with_degree::<f64>(&c6, girth(&c6), 0).unwrap();
        assert_eq!(p.coeffs, vec![1.0]);
        assert_eq!(p.predicted_expected_cut, 3.0);
        assert!(p.formula_exact);
        assert!(plan_with_degree::<f64>(&c6, girth(&c6), 7).is_err());
    }

    #[test]
    fn plan_json_uses_fifteen_digits() {
        let pet = generate(&GeneratorSpec::Petersen).unwrap();
        let json = serde_json::to_value(plan::<f64>(&pet, usize::MAX)).unwrap();
        assert_eq!(json["lambda_max"].as_f64().unwrap(), 6.557438524302);
        assert_eq!(json["girth"]["value"], 5);
        assert_eq!(json["l"], 2);
        assert_eq!(json["formula_exact"], false);
    }
}
