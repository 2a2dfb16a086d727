use std::collections::VecDeque;

use serde::Serialize;

use super::matching::min_weight_perfect_matching_with;
use crate::graph::{components, Graph};
use crate::parity::{parity_map, EdgeVector, VertexVector};
use crate::{Budgets, Error, Result};

/// The vertices that must end up with odd degree.
pub type TSet = VertexVector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinResult {
    pub edges: EdgeVector,
    pub size: usize,
}

/// BFS tree from `source`; neighbors are scanned in ascending order so the
/// recorded shortest paths are deterministic.
struct Bfs {
    dist: Vec<usize>,
    via: Vec<Option<(usize, usize)>>,
}

impl Bfs {
    fn run(graph: &Graph, source: usize) -> Self {
        let n = graph.n();
        let mut dist = vec![usize::MAX; n];
        let mut via = vec![None; n];
        let mut queue = VecDeque::from([source]);
        dist[source] = 0;
        while let Some(x) = queue.pop_front() {
            for inc in graph.adjacency(x) {
                if dist[inc.neighbor] == usize::MAX {
                    dist[inc.neighbor] = dist[x] + 1;
                    via[inc.neighbor] = Some((x, inc.edge));
                    queue.push_back(inc.neighbor);
                }
            }
        }
        Bfs { dist, via }
    }

    fn path_edges(&self, mut target: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dist[target]);
        while let Some((prev, e)) = self.via[target] {
            out.push(e);
            target = prev;
        }
        out
    }
}

pub fn min_t_join(graph: &Graph, t: &TSet) -> Result<JoinResult> {
    min_t_join_with(graph, t, &Budgets::default())
}

/// Minimum-cardinality edge set whose odd-degree vertices are exactly `T`.
///
/// Edge weights are ignored. Each component is solved separately: pairwise
/// BFS distances among its `T` vertices, an exact perfect matching on them,
/// and the matched shortest paths summed over GF(2).
pub fn min_t_join_with(graph: &Graph, t: &TSet, budgets: &Budgets) -> Result<JoinResult> {
    if t.len() != graph.n() {
        return Err(Error::Length {
            expected: graph.n(),
            got: t.len(),
        });
    }
    let mut edges = EdgeVector::zeros(graph.m());
    for comp in components(graph) {
        let terminals: Vec<usize> = comp.iter().copied().filter(|&v| t.get(v)).collect();
        if terminals.len() % 2 == 1 {
            return Err(Error::Infeasible(format!(
                "component containing vertex {} has {} vertices of T",
                comp[0],
                terminals.len()
            )));
        }
        if terminals.is_empty() {
            continue;
        }
        let trees: Vec<Bfs> = terminals.iter().map(|&s| Bfs::run(graph, s)).collect();
        let dist: Vec<Vec<i64>> = trees
            .iter()
            .map(|tree| terminals.iter().map(|&v| tree.dist[v] as i64).collect())
            .collect();
        let matching = min_weight_perfect_matching_with(&dist, budgets)?;
        for (a, b) in matching.pairs {
            for e in trees[a].path_edges(terminals[b]) {
                edges.toggle(e);
            }
        }
    }
    let size = edges.weight();
    Ok(JoinResult { edges, size })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DecodeOutcome {
    Decoded { beta: EdgeVector },
    /// No `β` with `|β| <= l` has this syndrome. `min_join` is the size of the
    /// smallest join when one exists at all.
    Infeasible { min_join: Option<usize> },
}

pub fn decode_parity(graph: &Graph, l: usize, alpha: &VertexVector) -> Result<DecodeOutcome> {
    decode_parity_with(graph, l, alpha, &Budgets::default())
}

/// Finds `β` with `|β| <= l` and `Bᵀβ = α`. When the girth is at least
/// `2l + 1` such a `β` is unique, so the minimum T-join is exactly it.
pub fn decode_parity_with(graph: &Graph, l: usize, alpha: &VertexVector, budgets: &Budgets) -> Result<DecodeOutcome> {
    match min_t_join_with(graph, alpha, budgets) {
        Ok(join) if join.size <= l => {
            debug_assert_eq!(&parity_map(graph, &join.edges), alpha);
            Ok(DecodeOutcome::Decoded { beta: join.edges })
        }
        Ok(join) => Ok(DecodeOutcome::Infeasible {
            min_join: Some(join.size),
        }),
        Err(Error::Infeasible(_)) => Ok(DecodeOutcome::Infeasible { min_join: None }),
        Err(e) => Err(e),
    }
}
