//! Exact and guaranteed classical MaxCut: brute force, the dynamic program
//! whose cost is exponential only in the cyclomatic number, spanning-tree
//! coloring, and the low-diameter tree partition of high-girth graphs.

mod brute;
mod certificate;
mod fpt;
mod partition;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::graph::{spanning_forest, CutAssignment, Graph, SpanningForest};
use crate::parity::VertexVector;
use crate::{Budgets, Error, Rational, Result};

pub use brute::{brute_force_maxcut, brute_force_maxcut_with};
pub use certificate::{mu_certificate, MuCertificate};
pub use fpt::{fpt_anchor_count, fpt_maxcut, fpt_maxcut_with};
pub use partition::{tree_partition, TreePartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Auto,
    Brute,
    Fpt,
    Tree,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Auto => "auto",
            Method::Brute => "brute",
            Method::Fpt => "fpt",
            Method::Tree => "tree",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "brute" => Ok(Method::Brute),
            "fpt" => Ok(Method::Fpt),
            "tree" => Ok(Method::Tree),
            other => Err(Error::InvalidArgument(format!("unknown method {other:?}"))),
        }
    }
}

/// A cut with its value (total weight on weighted graphs) and the method that
/// produced it. `elapsed` is only filled in when timing was requested.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaxCutResult {
    #[serde(serialize_with = "rational_str")]
    pub value: Rational,
    pub assignment: CutAssignment,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed: Option<f64>,
}

fn rational_str<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl MaxCutResult {
    fn new(graph: &Graph, sides: VertexVector, method: Method) -> Self {
        let assignment = CutAssignment::weighted(graph, sides);
        MaxCutResult {
            value: assignment.value,
            assignment,
            method,
            elapsed: None,
        }
    }

    /// Recomputes the cut value of the assignment from scratch.
    pub fn recomputed(&self, graph: &Graph) -> Rational {
        graph.cut_weight(&self.assignment.sides)
    }
}

/// Weights over a common denominator: `w_e = scaled[e] / denom`.
pub(crate) fn integer_weights(graph: &Graph) -> (Vec<i128>, i64) {
    let denom = (0..graph.m()).fold(1i64, |acc, e| acc.lcm(graph.weight(e).denom()));
    let scaled = (0..graph.m())
        .map(|e| {
            let w = graph.weight(e);
            *w.numer() as i128 * (denom / *w.denom()) as i128
        })
        .collect();
    (scaled, denom)
}

/// Colors every tree by depth parity, so every tree edge is cut.
pub fn spanning_tree_cut(graph: &Graph) -> MaxCutResult {
    spanning_tree_cut_with(graph, &spanning_forest(graph))
}

pub fn spanning_tree_cut_with(graph: &Graph, forest: &SpanningForest) -> MaxCutResult {
    let mut sides = VertexVector::zeros(graph.n());
    for v in 0..graph.n() {
        sides.set(v, forest.depth[v] % 2 == 1);
    }
    MaxCutResult::new(graph, sides, Method::Tree)
}

/// Dispatches on `method`. `Auto` uses the cyclomatic DP when its anchor set
/// fits the budget and brute force otherwise.
pub fn solve(graph: &Graph, method: Method, budgets: &Budgets) -> Result<MaxCutResult> {
    match method {
        Method::Brute => brute_force_maxcut_with(graph, budgets),
        Method::Fpt => fpt_maxcut_with(graph, budgets),
        Method::Tree => Ok(spanning_tree_cut(graph)),
        Method::Auto => {
            if fpt_anchor_count(graph) <= budgets.anchors_log2 as usize {
                fpt_maxcut_with(graph, budgets)
            } else {
                brute_force_maxcut_with(graph, budgets)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cyclomatic, generate, GeneratorSpec};

    #[test]
    fn tree_cut_examples() {
        let path = generate(&GeneratorSpec::Path(7)).unwrap();
        assert_eq!(spanning_tree_cut(&path).value, 6.into());
        let c3 = generate(&GeneratorSpec::Cycle(3)).unwrap();
        assert_eq!(spanning_tree_cut(&c3).value, 2.into());

        // path tree 0-1-2-3-4-5: the closing edge 0-5 joins opposite colors
        let c6 = generate(&GeneratorSpec::Cycle(6)).unwrap();
        let tree: Vec<usize> = (0..6)
            .filter(|&e| c6.edge(e) != (0, 5))
            .collect();
        let forest = SpanningForest::from_tree_edges(&c6, &tree).unwrap();
        assert_eq!(spanning_tree_cut_with(&c6, &forest).value, 6.into());
    }

    #[test]
    fn tree_cut_bound() {
        for seed in 0..30 {
            let g = generate(&GeneratorSpec::RandomConnected { n: 15, m: 25, seed: Some(seed) }).unwrap();
            let r = spanning_tree_cut(&g);
            assert!(r.value >= Rational::from((g.m() - cyclomatic(&g)) as i64));
            assert_eq!(r.recomputed(&g), r.value);
        }
    }

    #[test]
    fn integer_weights_share_a_denominator() {
        let g = Graph::with_weights(
            3,
            [(0, 1), (1, 2)],
            vec![Rational::new(1, 2), Rational::new(2, 3)],
        )
        .unwrap();
        assert_eq!(integer_weights(&g), (vec![3, 4], 6));
    }

    #[test]
    fn method_names_roundtrip() {
        for m in [Method::Auto, Method::Brute, Method::Fpt, Method::Tree] {
            assert_eq!(m.to_string().parse::<Method>().unwrap(), m);
        }
        assert!("greedy".parse::<Method>().is_err());
    }
}
