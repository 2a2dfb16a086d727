use std::time::Instant;

use serde::Serialize;

use crate::analysis::{plan, plan_with_degree, simulation_cap, DqiPlan, ANALYSIS_CAP};
use crate::classical::{solve, MaxCutResult, Method};
use crate::decode::{decode_parity_with, DecodeOutcome};
use crate::graph::{girth, CutAssignment, Graph};
use crate::scalar::sig15;
use crate::simulate::{
    dqi_expectation_exact_with, dqi_statevector_with, qfs_from_histogram, sample_cuts, SimulationReport,
};
use crate::{Budgets, Error, Result, VertexVector};

/// Largest tolerated gap between the two simulation paths.
pub const PATH_TOLERANCE: f64 = 1e-9;

pub fn run_analyze(graph: &Graph) -> DqiPlan<f64> {
    plan(graph, ANALYSIS_CAP)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimulateOptions {
    /// Degree override; defaults to the plan's degree.
    pub l: Option<usize>,
    pub samples: usize,
    /// Skip the state-vector cross-check even when it fits the budgets.
    pub histogram_only: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SimulateOutput {
    pub l: usize,
    #[serde(serialize_with = "sig15::serialize")]
    pub lambda_max: f64,
    #[serde(serialize_with = "sig15::serialize")]
    pub predicted_expected_cut: f64,
    pub formula_exact: bool,
    /// `predicted - simulated`; positive values are the odd-girth deficit.
    #[serde(serialize_with = "sig15::serialize")]
    pub deficit: f64,
    #[serde(serialize_with = "sig15::option")]
    pub statevector_expected_cut: Option<f64>,
    #[serde(serialize_with = "sig15::option")]
    pub path_gap: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub statevector_skipped: Option<String>,
    #[serde(serialize_with = "sig15::option")]
    pub qfs_expected_cut: Option<f64>,
    pub report: SimulationReport<f64>,
}

/// Runs the histogram path, cross-checks it against the state-vector path
/// when the budgets allow, and draws samples if asked.
pub fn run_simulate(graph: &Graph, opts: &SimulateOptions, budgets: &Budgets, seed: u64) -> Result<SimulateOutput> {
    budgets.check_assignments(graph.n())?;
    let g = girth(graph);
    let p: DqiPlan<f64> = match opts.l {
        Some(l) => plan_with_degree(graph, g, l)?,
        None => plan(graph, graph.m()),
    };
    let mut report = dqi_expectation_exact_with(graph, &p.coeffs, budgets)?;

    let mut statevector_expected_cut = None;
    let mut path_gap = None;
    let mut statevector_skipped = None;
    if opts.histogram_only {
        statevector_skipped = Some("disabled".to_string());
    } else if graph.n() > budgets.statevector_vertices {
        statevector_skipped = Some(format!("state-vector budget: n={} > {}", graph.n(), budgets.statevector_vertices));
    } else if p.l > simulation_cap(graph.m(), budgets.subgraphs_log2) {
        statevector_skipped = Some(format!("subgraph budget: l={} exceeds the cap for m={}", p.l, graph.m()));
    } else {
        let sv = dqi_statevector_with(graph, &p.coeffs, p.l, budgets)?;
        let gap = (sv.expected_cut - report.expected_cut).abs();
        if gap > PATH_TOLERANCE {
            return Err(Error::Consistency(format!(
                "histogram {} vs state vector {}",
                report.expected_cut, sv.expected_cut
            )));
        }
        statevector_expected_cut = Some(sv.expected_cut);
        path_gap = Some(gap);
        report.amplitudes = sv.amplitudes;
    }
    let qfs_expected_cut = if graph.m() > 0 {
        Some(qfs_from_histogram(&report.histogram)?)
    } else {
        None
    };
    report.samples = sample_cuts(graph, &report, opts.samples, seed)?;
    Ok(SimulateOutput {
        l: p.l,
        lambda_max: p.lambda_max,
        predicted_expected_cut: p.predicted_expected_cut,
        formula_exact: p.formula_exact,
        deficit: p.predicted_expected_cut - report.expected_cut,
        statevector_expected_cut,
        path_gap,
        statevector_skipped,
        qfs_expected_cut,
        report,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DecodeOutput {
    pub l: usize,
    pub alpha: VertexVector,
    #[serde(flatten)]
    pub outcome: DecodeOutcome,
    /// Edges of the recovered `β` as vertex pairs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<(usize, usize)>>,
}

impl DecodeOutput {
    pub fn is_decoded(&self) -> bool {
        matches!(self.outcome, DecodeOutcome::Decoded { .. })
    }
}

/// Decodes `alpha`; `l` defaults to the plan's degree.
pub fn run_decode(graph: &Graph, l: Option<usize>, alpha: &VertexVector, budgets: &Budgets) -> Result<DecodeOutput> {
    let l = l.unwrap_or_else(|| run_analyze(graph).l);
    let outcome = decode_parity_with(graph, l, alpha, budgets)?;
    let edges = match &outcome {
        DecodeOutcome::Decoded { beta } => Some(beta.iter_ones().map(|e| graph.edge(e)).collect()),
        DecodeOutcome::Infeasible { .. } => None,
    };
    Ok(DecodeOutput {
        l,
        alpha: alpha.clone(),
        outcome,
        edges,
    })
}

pub fn run_solve(graph: &Graph, method: Method, budgets: &Budgets, timings: bool) -> Result<MaxCutResult> {
    let start = Instant::now();
    let mut result = solve(graph, method, budgets)?;
    if timings {
        result.elapsed = Some(start.elapsed().as_secs_f64());
    }
    Ok(result)
}

/// Samples re-checked against the graph: every reported value must equal the
/// recomputed cut.
pub fn samples_consistent(graph: &Graph, samples: &[CutAssignment]) -> bool {
    samples
        .iter()
        .all(|s| s.value == crate::Rational::from(graph.cut_size(&s.sides) as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GeneratorSpec};
    use crate::parity::{parity_map, EdgeVector};
    use approx::assert_relative_eq;

    #[test]
    fn simulate_examples() {
        let c3 = generate(&GeneratorSpec::Cycle(3)).unwrap();
        let out = run_simulate(&c3, &SimulateOptions::default(), &Budgets::default(), 0).unwrap();
        assert_relative_eq!(out.report.expected_cut, 1.0 + 3f64.sqrt() / 2.0, max_relative = 1e-12);
        assert!(out.deficit > 0.49);
        assert!(out.path_gap.unwrap() <= PATH_TOLERANCE);

        let c6 = generate(&GeneratorSpec::Cycle(6)).unwrap();
        let out = run_simulate(&c6, &SimulateOptions::default(), &Budgets::default(), 0).unwrap();
        assert_relative_eq!(out.report.expected_cut, 5.0, max_relative = 1e-12);

        let opts = SimulateOptions { l: Some(0), samples: 20, ..Default::default() };
        let out = run_simulate(&c6, &opts, &Budgets::default(), 4).unwrap();
        assert_relative_eq!(out.report.expected_cut, 3.0, max_relative = 1e-14);
        assert_eq!(out.report.samples.len(), 20);
        assert!(samples_consistent(&c6, &out.report.samples));
    }

    #[test]
    fn decode_roundtrip() {
        let c6 = generate(&GeneratorSpec::Cycle(6)).unwrap();
        let beta = EdgeVector::from_indices(6, [0, 1]).unwrap();
        let alpha = parity_map(&c6, &beta);
        let out = run_decode(&c6, None, &alpha, &Budgets::default()).unwrap();
        assert_eq!(out.l, 2);
        assert_eq!(out.outcome, DecodeOutcome::Decoded { beta });
        assert_eq!(out.edges.unwrap(), vec![c6.edge(0), c6.edge(1)]);
        let json = serde_json::to_value(
            run_decode(&c6, Some(2), &VertexVector::from_indices(6, [0, 3]).unwrap(), &Budgets::default()).unwrap(),
        )
        .unwrap();
        assert_eq!(json["status"], "infeasible");
        assert_eq!(json["min_join"], 3);
    }

    #[test]
    fn solve_methods_agree() {
        let pet = generate(&GeneratorSpec::Petersen).unwrap();
        for m in [Method::Auto, Method::Brute, Method::Fpt] {
            let r = run_solve(&pet, m, &Budgets::default(), false).unwrap();
            assert_eq!(r.value, 12.into());
            assert!(r.elapsed.is_none());
        }
    }
}
