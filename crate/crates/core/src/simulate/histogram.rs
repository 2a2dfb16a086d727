use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::graph::Graph;
use crate::{Budgets, Result};

/// `N_j`: the number of assignments `z ∈ {±1}^V` cutting exactly `j` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutHistogram {
    pub n: usize,
    pub counts: Vec<u64>,
}

impl CutHistogram {
    pub fn m(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().copied().enumerate().filter(|&(_, c)| c > 0)
    }

    pub fn sparse(&self) -> BTreeMap<usize, u64> {
        self.support().collect()
    }
}

impl Serialize for CutHistogram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(self.support().map(|(j, c)| (j.to_string(), c)))
    }
}

pub fn cut_histogram(graph: &Graph) -> Result<CutHistogram> {
    cut_histogram_with(graph, &Budgets::default())
}

/// Exact `N_j` by enumerating the `2^(n-1)` assignments with vertex 0 fixed
/// in Gray-code order, then doubling for the global flip.
pub fn cut_histogram_with(graph: &Graph, budgets: &Budgets) -> Result<CutHistogram> {
    budgets.check_assignments(graph.n())?;
    let n = graph.n();
    let m = graph.m();
    if n == 0 {
        let mut counts = vec![0; m + 1];
        counts[0] = 1;
        return Ok(CutHistogram { n, counts });
    }
    let nbr = graph.neighbor_masks();
    let free = n - 1;
    let total: u64 = 1 << free;
    let chunk_bits = free.min(8);
    let chunks = 1u64 << chunk_bits;
    let per_chunk = total / chunks;

    let counts = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut counts = vec![0u64; m + 1];
            let start = c * per_chunk;
            let mut mask = gray(start) << 1;
            let mut cut = graph.cut_size_mask(mask) as i64;
            counts[cut as usize] += 1;
            for t in start + 1..start + per_chunk {
                let v = t.trailing_zeros() as usize + 1;
                cut += flip_delta(&nbr, mask, v);
                mask ^= 1 << v;
                counts[cut as usize] += 1;
            }
            counts
        })
        .reduce(
            || vec![0u64; m + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(CutHistogram {
        n,
        counts: counts.into_iter().map(|c| 2 * c).collect(),
    })
}

pub(crate) fn gray(t: u64) -> u64 {
    t ^ (t >> 1)
}

/// Change in cut size when vertex `v` switches sides.
pub(crate) fn flip_delta(nbr: &[u64], mask: u64, v: usize) -> i64 {
    let same_side = if mask >> v & 1 == 1 {
        (nbr[v] & mask).count_ones()
    } else {
        (nbr[v] & !mask).count_ones()
    };
    2 * same_side as i64 - nbr[v].count_ones() as i64
}

/// `h(x)` for every mask `x < 2^n`, built one top bit at a time.
pub(crate) fn cut_table(graph: &Graph) -> Vec<u16> {
    let n = graph.n();
    let nbr = graph.neighbor_masks();
    let mut table = vec![0u16; 1usize << n];
    for v in 0..n {
        let lo = 1usize << v;
        for x in 0..lo {
            // vertex v moves from side 0 to side 1 on top of assignment x
            let delta = flip_delta(&nbr, x as u64, v);
            table[lo + x] = (table[x] as i64 + delta) as u16;
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GeneratorSpec};
    use crate::BudgetKind;

    fn brute(graph: &Graph) -> Vec<u64> {
        let mut counts = vec![0; graph.m() + 1];
        for x in 0..1u64 << graph.n() {
            counts[graph.cut_size_mask(x)] += 1;
        }
        counts
    }

    #[test]
    fn single_edge_and_triangle() {
        let e = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(cut_histogram(&e).unwrap().counts, vec![2, 2]);
        let c3 = generate(&GeneratorSpec::Cycle(3)).unwrap();
        assert_eq!(cut_histogram(&c3).unwrap().sparse(), BTreeMap::from([(0, 2), (2, 6)]));
    }

    #[test]
    fn even_cycle_is_binomial() {
        let c6 = generate(&GeneratorSpec::Cycle(6)).unwrap();
        let h = cut_histogram(&c6).unwrap();
        let binom = [1, 6, 15, 20, 15, 6, 1];
        for (j, b) in binom.iter().enumerate() {
            let expect = if j % 2 == 0 { 2 * b } else { 0 };
            assert_eq!(h.counts[j], expect);
        }
        assert_eq!(h.total(), 64);
    }

    #[test]
    fn matches_brute_force_and_table() {
        for seed in 0..20 {
            let g = generate(&GeneratorSpec::RandomConnected { n: 11, m: 18, seed: Some(seed) }).unwrap();
            let h = cut_histogram(&g).unwrap();
            assert_eq!(h.counts, brute(&g));
            let table = cut_table(&g);
            for (x, &c) in table.iter().enumerate() {
                assert_eq!(c as usize, g.cut_size_mask(x as u64));
            }
            assert!(h.counts.iter().all(|c| c % 2 == 0));
        }
    }

    #[test]
    fn budget_is_a_hard_error() {
        let g = generate(&GeneratorSpec::Cycle(27)).unwrap();
        match cut_histogram(&g) {
            Err(crate::Error::Budget { kind, .. }) => assert_eq!(kind, BudgetKind::Assignments),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn sparse_json() {
        let c3 = generate(&GeneratorSpec::Cycle(3)).unwrap();
        let json = serde_json::to_string(&cut_histogram(&c3).unwrap()).unwrap();
        assert_eq!(json, r#"{"0":2,"2":6}"#);
    }
}
