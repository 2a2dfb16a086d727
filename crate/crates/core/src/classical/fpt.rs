//! MaxCut in time `O(2^|S| · n)`, where `S` is the set of non-tree-edge
//! endpoints of a spanning forest (`|S| <= 2μ`).
//!
//! Every vertex of `S` and every forest root is clamped. For each assignment
//! of the clamped vertices, the non-tree edges contribute a fixed amount and
//! a leaves-up DP over the forest maximizes the tree-edge part.

use rayon::prelude::*;

use super::{integer_weights, MaxCutResult, Method};
use crate::graph::{spanning_forest, Graph, SpanningForest};
use crate::parity::VertexVector;
use crate::{BudgetKind, Budgets, Error, Result};

const NEG: i128 = i128::MIN / 4;

pub fn fpt_maxcut(graph: &Graph) -> Result<MaxCutResult> {
    fpt_maxcut_with(graph, &Budgets::default())
}

/// Number of clamped non-root vertices, i.e. `log2` of the enumeration size.
pub fn fpt_anchor_count(graph: &Graph) -> usize {
    anchors(graph, &spanning_forest(graph)).len()
}

fn anchors(graph: &Graph, forest: &SpanningForest) -> Vec<usize> {
    let mut s: Vec<usize> = forest
        .non_tree_edges
        .iter()
        .flat_map(|&e| {
            let (u, v) = graph.edge(e);
            [u, v]
        })
        .filter(|&v| forest.parent[v].is_some())
        .collect();
    s.sort_unstable();
    s.dedup();
    s
}

struct Dp<'a> {
    graph: &'a Graph,
    forest: &'a SpanningForest,
    w: Vec<i128>,
    /// Index of each vertex in the anchor list, if clamped.
    slot: Vec<Option<usize>>,
}

impl Dp<'_> {
    /// Side of `v` under anchor assignment `bits`, if clamped; roots sit on 0.
    fn clamp(&self, v: usize, bits: u64) -> Option<bool> {
        if self.forest.parent[v].is_none() {
            return Some(false);
        }
        self.slot[v].map(|i| bits >> i & 1 == 1)
    }

    fn fixed_part(&self, bits: u64) -> i128 {
        self.forest
            .non_tree_edges
            .iter()
            .filter(|&&e| {
                let (u, v) = self.graph.edge(e);
                self.clamp(u, bits) != self.clamp(v, bits)
            })
            .map(|&e| self.w[e])
            .sum()
    }

    /// `best[v][s]`: the largest tree-edge cut inside the subtree of `v` with
    /// `v` on side `s`.
    fn tree_part(&self, bits: u64, best: &mut [[i128; 2]]) -> i128 {
        for b in best.iter_mut() {
            *b = [0, 0];
        }
        for &v in self.forest.order.iter().rev() {
            if let Some(side) = self.clamp(v, bits) {
                best[v][!side as usize] = NEG;
            }
            if let (Some(p), Some(e)) = (self.forest.parent[v], self.forest.parent_edge[v]) {
                let [b0, b1] = best[v];
                let w = self.w[e];
                best[p][0] += b0.max(b1 + w);
                best[p][1] += (b0 + w).max(b1);
            }
        }
        self.forest.roots.iter().map(|&r| best[r][0]).sum()
    }

    /// Top-down recovery of the sides for one anchor assignment; ties put a
    /// child on side 0.
    fn sides(&self, bits: u64) -> VertexVector {
        let n = self.graph.n();
        let mut best = vec![[0i128; 2]; n];
        self.tree_part(bits, &mut best);
        let mut sides = VertexVector::zeros(n);
        for &v in &self.forest.order {
            let (Some(p), Some(e)) = (self.forest.parent[v], self.forest.parent_edge[v]) else {
                continue;
            };
            let ps = sides.get(p) as usize;
            let w = self.w[e];
            let gain = |s: usize| best[v][s] + if s != ps { w } else { 0 };
            sides.set(v, gain(1) > gain(0));
        }
        sides
    }
}

pub fn fpt_maxcut_with(graph: &Graph, budgets: &Budgets) -> Result<MaxCutResult> {
    let forest = spanning_forest(graph);
    let s = anchors(graph, &forest);
    if s.len() > budgets.anchors_log2 as usize || s.len() > 62 {
        return Err(Error::budget(
            BudgetKind::Anchors,
            format!("2^{} anchor assignments exceeds 2^{}", s.len(), budgets.anchors_log2),
        ));
    }
    let mut slot = vec![None; graph.n()];
    for (i, &v) in s.iter().enumerate() {
        slot[v] = Some(i);
    }
    let dp = Dp {
        graph,
        forest: &forest,
        w: integer_weights(graph).0,
        slot,
    };
    let total = 1u64 << s.len();
    let chunks = total.min(256);
    let per_chunk = total / chunks;
    let (_, bits) = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut scratch = vec![[0i128; 2]; graph.n()];
            let mut best = (NEG, 0u64);
            for bits in c * per_chunk..(c + 1) * per_chunk {
                let value = dp.fixed_part(bits) + dp.tree_part(bits, &mut scratch);
                if value > best.0 {
                    best = (value, bits);
                }
            }
            best
        })
        .reduce(
            || (NEG, u64::MAX),
            |a, b| if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a },
        );
    Ok(MaxCutResult::new(graph, dp.sides(bits), Method::Fpt))
}
