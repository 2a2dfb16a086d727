//! Simple undirected graphs with stable vertex and edge indices.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

mod cut;
mod forest;
mod generate;
mod girth;
mod io;

pub use cut::CutAssignment;
pub use forest::{components, cyclomatic, fundamental_cycles, spanning_forest, SpanningForest};
pub use generate::{generate, GeneratorSpec};
pub use girth::girth;
pub use io::{parse_edge_list, parse_rational, read_edge_list, to_edge_list, write_edge_list};

/// Exact edge weight. Only the classical solvers read weights.
pub type Rational = Ratio<i64>;

/// One entry of a vertex's adjacency list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Incidence {
    pub neighbor: usize,
    pub edge: usize,
}

/// Immutable simple graph. Edge `e` is `edges[e] = (u, v)` with `u < v`, in
/// input order; adjacency lists are sorted by neighbor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    weights: Option<Vec<Rational>>,
    adjacency: Vec<Vec<Incidence>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::build(n, edges.into_iter().collect(), None)
    }

    pub fn with_weights(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        weights: Vec<Rational>,
    ) -> Result<Self> {
        Self::build(n, edges.into_iter().collect(), Some(weights))
    }

    fn build(n: usize, raw: Vec<(usize, usize)>, weights: Option<Vec<Rational>>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(raw.len());
        for (e, &(a, b)) in raw.iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {e} = ({a}, {b}) references a vertex outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("edge {e} is a self-loop at {a}")));
            }
            let (u, v) = (a.min(b), a.max(b));
            edges.push((u, v));
            adjacency[u].push(Incidence { neighbor: v, edge: e });
            adjacency[v].push(Incidence { neighbor: u, edge: e });
        }
        for (v, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0].neighbor == w[1].neighbor) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edges {} and {} between {v} and {}",
                    w[0].edge, w[1].edge, w[0].neighbor
                )));
            }
        }
        if let Some(ws) = &weights {
            if ws.len() != edges.len() {
                return Err(Error::InvalidGraph(format!(
                    "{} weights for {} edges",
                    ws.len(),
                    edges.len()
                )));
            }
            if let Some(e) = ws.iter().position(|w| *w < Rational::zero()) {
                return Err(Error::InvalidGraph(format!("edge {e} has a negative weight")));
            }
        }
        Ok(Graph {
            n,
            edges,
            weights,
            adjacency,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn weights(&self) -> Option<&[Rational]> {
        self.weights.as_deref()
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    /// Weight of edge `e`; one when the graph is unweighted.
    pub fn weight(&self, e: usize) -> Rational {
        match &self.weights {
            Some(ws) => ws[e],
            None => Rational::one(),
        }
    }

    /// The same graph without weights.
    pub fn unweighted(&self) -> Graph {
        Graph {
            weights: None,
            ..self.clone()
        }
    }

    pub fn adjacency(&self, v: usize) -> &[Incidence] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adjacency[u]
            .binary_search_by_key(&v, |inc| inc.neighbor)
            .ok()
            .map(|i| self.adjacency[u][i].edge)
    }

    /// Vertex masks of each edge (`1<<u | 1<<v`); requires `n <= 64`.
    pub fn edge_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "edge masks need n <= 64");
        self.edges.iter().map(|&(u, v)| 1u64 << u | 1u64 << v).collect()
    }

    /// Neighbor masks of each vertex; requires `n <= 64`.
    pub fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "neighbor masks need n <= 64");
        self.adjacency
            .iter()
            .map(|list| list.iter().fold(0u64, |acc, inc| acc | 1u64 << inc.neighbor))
            .collect()
    }
}

/// A nonnegative integer or infinity. Used for girth and for the injectivity
/// radius of the parity map, both of which are infinite exactly on forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extent {
    Finite(usize),
    Infinite,
}

impl Extent {
    pub fn finite(self) -> Option<usize> {
        match self {
            Extent::Finite(v) => Some(v),
            Extent::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Extent::Infinite)
    }

    /// `true` iff `self >= value`.
    pub fn at_least(self, value: usize) -> bool {
        match self {
            Extent::Finite(v) => v >= value,
            Extent::Infinite => true,
        }
    }
}

impl PartialOrd for Extent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Extent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self, other) {
            (Extent::Finite(a), Extent::Finite(b)) => a.cmp(b),
            (Extent::Finite(_), Extent::Infinite) => Less,
            (Extent::Infinite, Extent::Finite(_)) => Greater,
            (Extent::Infinite, Extent::Infinite) => Equal,
        }
    }
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Finite(v) => write!(f, "{v}"),
            Extent::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Extent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extent::Finite(v) => s.serialize_u64(*v as u64),
            Extent::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for Extent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Extent::Finite(v as usize)),
            Raw::Text(t) if t == "infinite" => Ok(Extent::Infinite),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("bad extent {t:?}"))),
        }
    }
}

/// Length of a shortest cycle, with one such cycle as a vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Girth {
    pub value: Extent,
    pub witness: Option<Vec<usize>>,
}

impl Girth {
    pub fn infinite() -> Self {
        Girth {
            value: Extent::Infinite,
            witness: None,
        }
    }
}
