use num_bigint::BigInt;
use num_traits::NumCast;
use serde::{Serialize, Serializer};

use super::histogram::{cut_histogram_with, CutHistogram};
use super::krawtchouk::krawtchouk_table;
use crate::graph::{CutAssignment, Graph};
use crate::scalar::{round_sig, sig15};
use crate::{Budgets, Error, Result, Scalar};

/// Which computation produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SimulationPath {
    Histogram,
    StateVector,
}

/// `Q(j) = Σ_k μ_k K_k(j; m)`: the value of `q` on any cut of value `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct QProfile<S> {
    pub values: Vec<S>,
}

impl<S: Scalar> QProfile<S> {
    pub fn new(coeffs: &[S], m: usize) -> Result<Self> {
        let l = degree_of(coeffs, m)?;
        let table = krawtchouk_table(l, m);
        Ok(Self::from_table(coeffs, &table, m))
    }

    pub fn from_table(coeffs: &[S], table: &[Vec<BigInt>], m: usize) -> Self {
        let values = (0..=m)
            .map(|j| {
                coeffs
                    .iter()
                    .zip(table)
                    .map(|(&mu, row)| mu * big_to_scalar::<S>(&row[j]))
                    .sum()
            })
            .collect();
        QProfile { values }
    }
}

pub(crate) fn big_to_scalar<S: Scalar>(x: &BigInt) -> S {
    <S as NumCast>::from(x.clone()).unwrap_or_else(|| {
        if x.sign() == num_bigint::Sign::Minus {
            S::neg_infinity()
        } else {
            S::infinity()
        }
    })
}

pub(crate) fn degree_of<S>(coeffs: &[S], m: usize) -> Result<usize> {
    if coeffs.is_empty() {
        return Err(Error::InvalidArgument("empty coefficient vector".into()));
    }
    let l = coeffs.len() - 1;
    if l > m {
        return Err(Error::InvalidArgument(format!("degree {l} exceeds m={m}")));
    }
    Ok(l)
}

/// Exact output distribution of DQI (or QFS) over cut values.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimulationReport<S: Scalar> {
    pub path: SimulationPath,
    pub n: usize,
    pub m: usize,
    pub l: usize,
    #[serde(serialize_with = "sig15::vec")]
    pub coeffs: Vec<S>,
    pub histogram: CutHistogram,
    /// `p_j ∝ N_j Q(j)²`, indexed by cut value.
    #[serde(serialize_with = "sparse_distribution")]
    pub distribution: Vec<S>,
    #[serde(serialize_with = "sig15::serialize")]
    pub expected_cut: S,
    /// Normalized amplitudes over all `2^n` assignments, kept for small `n`.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "amplitudes_json")]
    pub amplitudes: Option<Vec<S>>,
    pub samples: Vec<CutAssignment>,
}

fn sparse_distribution<S: Scalar, Ser: Serializer>(p: &[S], s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
    s.collect_map(
        p.iter()
            .enumerate()
            .filter(|(_, &x)| x > S::zero())
            .map(|(j, &x)| (j.to_string(), round_sig(x.to_f64_lossy(), 15))),
    )
}

fn amplitudes_json<S: Scalar, Ser: Serializer>(a: &Option<Vec<S>>, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
    match a {
        Some(v) => sig15::vec(v, s),
        None => s.serialize_none(),
    }
}

impl<S: Scalar> SimulationReport<S> {
    pub fn distribution_sum(&self) -> S {
        self.distribution.iter().copied().sum()
    }
}

/// Turns per-cut-value weights into a normalized distribution and its mean.
pub(crate) fn normalize_weights<S: Scalar>(weights: &[S]) -> Result<(Vec<S>, S)> {
    let z: S = weights.iter().copied().sum();
    if !(z > S::zero()) || !z.is_finite() {
        return Err(Error::Degenerate(
            "q vanishes on every assignment; no distribution to sample".into(),
        ));
    }
    let p: Vec<S> = weights.iter().map(|&w| w / z).collect();
    let moment: S = weights
        .iter()
        .enumerate()
        .map(|(j, &w)| w * S::from_usize_lossy(j))
        .sum();
    Ok((p, moment / z))
}

pub fn dqi_expectation_exact<S: Scalar>(graph: &Graph, coeffs: &[S]) -> Result<SimulationReport<S>> {
    dqi_expectation_exact_with(graph, coeffs, &Budgets::default())
}

pub fn dqi_expectation_exact_with<S: Scalar>(
    graph: &Graph,
    coeffs: &[S],
    budgets: &Budgets,
) -> Result<SimulationReport<S>> {
    degree_of(coeffs, graph.m())?;
    let hist = cut_histogram_with(graph, budgets)?;
    dqi_expectation_from_histogram(&hist, coeffs)
}

/// Histogram path: `E = Σ_j N_j Q(j)² j / Σ_j N_j Q(j)²`.
pub fn dqi_expectation_from_histogram<S: Scalar>(hist: &CutHistogram, coeffs: &[S]) -> Result<SimulationReport<S>> {
    let m = hist.m();
    let l = degree_of(coeffs, m)?;
    let q = QProfile::new(coeffs, m)?;
    // only the shape of Q matters; scaling its peak to 1 keeps a constant Q exact
    let peak = hist
        .support()
        .fold(S::zero(), |acc, (j, _)| acc.max(q.values[j].abs()));
    let scale = if peak > S::zero() { peak } else { S::one() };
    let weights: Vec<S> = hist
        .counts
        .iter()
        .zip(&q.values)
        .map(|(&c, &qj)| {
            if c == 0 {
                S::zero()
            } else {
                let r = qj / scale;
                S::from_u64(c).unwrap() * r * r
            }
        })
        .collect();
    let (distribution, expected_cut) = normalize_weights(&weights)?;
    Ok(SimulationReport {
        path: SimulationPath::Histogram,
        n: hist.n,
        m,
        l,
        coeffs: coeffs.to_vec(),
        histogram: hist.clone(),
        distribution,
        expected_cut,
        amplitudes: None,
        samples: Vec::new(),
    })
}

/// Expected cut when sampling `z` with probability `∝ h(z)²`.
pub fn qfs_baseline_expectation<S: Scalar>(graph: &Graph) -> Result<S> {
    qfs_from_histogram(&cut_histogram_with(graph, &Budgets::default())?)
}

pub fn qfs_from_histogram<S: Scalar>(hist: &CutHistogram) -> Result<S> {
    let mut num = S::zero();
    let mut den = S::zero();
    for (j, c) in hist.support() {
        let c = S::from_u64(c).unwrap();
        let j = S::from_usize_lossy(j);
        num = num + c * j * j * j;
        den = den + c * j * j;
    }
    if den == S::zero() {
        return Err(Error::InvalidGraph("edgeless graph: h vanishes identically".into()));
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GeneratorSpec};
    use approx::assert_relative_eq;

    #[test]
    fn triangle_with_killing_coefficients() {
        let c3 = generate(&GeneratorSpec::Cycle(3)).unwrap();
        let r = dqi_expectation_exact(&c3, &[3.0f64, -1.0]).unwrap();
        assert_relative_eq!(r.expected_cut, 2.0, max_relative = 1e-15);
        assert_eq!(r.distribution[0], 0.0);
    }

    #[test]
    fn degree_zero_is_uniform() {
        let p = generate(&GeneratorSpec::Petersen).unwrap();
        let r = dqi_expectation_exact(&p, &[1.0f64]).unwrap();
        assert_relative_eq!(r.expected_cut, 7.5, max_relative = 1e-14);
        assert_relative_eq!(r.distribution_sum(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn degenerate_coefficients_error() {
        let c3 = generate(&GeneratorSpec::Cycle(3)).unwrap();
        // Q(j) = 1 + (3 - 2j)/(-3)... zero only at j = 0; pick Q ≡ 0
        assert!(matches!(
            dqi_expectation_exact(&c3, &[0.0f64, 0.0]),
            Err(Error::Degenerate(_))
        ));
        assert!(dqi_expectation_exact(&c3, &[1.0f64; 5]).is_err());
    }

    #[test]
    fn qfs_examples() {
        let e = Graph::new(2, [(0, 1)]).unwrap();
        assert_relative_eq!(qfs_baseline_expectation::<f64>(&e).unwrap(), 1.0);
        let p3 = generate(&GeneratorSpec::Path(3)).unwrap();
        assert_relative_eq!(qfs_baseline_expectation::<f64>(&p3).unwrap(), 20.0 / 12.0, max_relative = 1e-15);
        let c3 = generate(&GeneratorSpec::Cycle(3)).unwrap();
        assert_relative_eq!(qfs_baseline_expectation::<f64>(&c3).unwrap(), 2.0);
        let empty = Graph::new(3, []).unwrap();
        assert!(qfs_baseline_expectation::<f64>(&empty).is_err());
    }

    #[test]
    fn report_json_is_sparse() {
        let c3 = generate(&GeneratorSpec::Cycle(3)).unwrap();
        let r = dqi_expectation_exact(&c3, &[3.0f64, -1.0]).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["histogram"], serde_json::json!({"0": 2, "2": 6}));
        assert_eq!(v["distribution"], serde_json::json!({"2": 1.0}));
        assert_eq!(v["path"], "histogram");
        assert!(v.get("amplitudes").is_none());
    }
}
