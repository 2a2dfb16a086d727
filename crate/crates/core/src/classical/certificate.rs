use serde::Serialize;

use crate::graph::{components, girth, spanning_forest, Extent, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuCertificate {
    /// `m - n + #components`.
    pub mu: usize,
    /// Cyclomatic number of each component, ordered by smallest vertex.
    pub per_component: Vec<usize>,
    pub girth: Extent,
    pub non_tree_edges: usize,
    /// `non_tree_edges == mu`.
    pub bound_check: bool,
}

pub fn mu_certificate(graph: &Graph) -> MuCertificate {
    let forest = spanning_forest(graph);
    let comps = components(graph);
    let mut edges_in = vec![0usize; graph.n()];
    for &(u, _) in graph.edges() {
        edges_in[forest.root[u]] += 1;
    }
    let per_component: Vec<usize> = comps
        .iter()
        .map(|c| edges_in[forest.root[c[0]]] + 1 - c.len())
        .collect();
    let mu = graph.m() + comps.len() - graph.n();
    MuCertificate {
        mu,
        per_component,
        girth: girth(graph).value,
        non_tree_edges: forest.non_tree_edges.len(),
        bound_check: forest.non_tree_edges.len() == mu,
    }
}
