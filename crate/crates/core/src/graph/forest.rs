use std::collections::VecDeque;

use super::Graph;
use crate::parity::EdgeVector;
use crate::{Error, Result};

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(graph: &Graph) -> Vec<Vec<usize>> {
    let forest = spanning_forest(graph);
    let mut out: Vec<Vec<usize>> = forest.roots.iter().map(|&r| vec![r]).collect();
    let index_of_root: std::collections::HashMap<usize, usize> =
        forest.roots.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    for v in 0..graph.n() {
        let r = forest.root[v];
        if r != v {
            out[index_of_root[&r]].push(v);
        }
    }
    for c in &mut out {
        c.sort_unstable();
    }
    out
}

/// A rooted spanning forest plus the split of `E` into tree and non-tree
/// edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningForest {
    pub parent: Vec<Option<usize>>,
    pub parent_edge: Vec<Option<usize>>,
    pub depth: Vec<usize>,
    /// Root of the tree containing each vertex.
    pub root: Vec<usize>,
    /// One root per component, ascending.
    pub roots: Vec<usize>,
    /// Vertices in an order where every parent precedes its children.
    pub order: Vec<usize>,
    pub tree_edges: Vec<usize>,
    pub non_tree_edges: Vec<usize>,
}

impl SpanningForest {
    /// Roots a given acyclic spanning edge set at the smallest vertex of each
    /// component. Fails if `tree_edges` has a cycle or does not span.
    pub fn from_tree_edges(graph: &Graph, tree_edges: &[usize]) -> Result<Self> {
        let mut in_tree = vec![false; graph.m()];
        for &e in tree_edges {
            if e >= graph.m() || in_tree[e] {
                return Err(Error::InvalidArgument(format!("bad tree edge {e}")));
            }
            in_tree[e] = true;
        }
        let forest = bfs_forest(graph, |e| in_tree[e]);
        let spanning = spanning_forest(graph);
        if forest.roots.len() != spanning.roots.len() {
            return Err(Error::InvalidArgument(
                "tree edges do not span every component".into(),
            ));
        }
        if forest.tree_edges.len() != tree_edges.len() {
            return Err(Error::InvalidArgument("tree edges contain a cycle".into()));
        }
        let mut forest = forest;
        forest.non_tree_edges = (0..graph.m()).filter(|&e| !in_tree[e]).collect();
        Ok(forest)
    }

    pub fn is_tree_edge(&self, graph: &Graph, e: usize) -> bool {
        let (u, v) = graph.edge(e);
        self.parent_edge[u] == Some(e) || self.parent_edge[v] == Some(e)
    }

    /// Edge indices on the tree path between `u` and `v`.
    pub fn tree_path_edges(&self, mut u: usize, mut v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        while self.depth[u] > self.depth[v] {
            out.push(self.parent_edge[u].unwrap());
            u = self.parent[u].unwrap();
        }
        while self.depth[v] > self.depth[u] {
            out.push(self.parent_edge[v].unwrap());
            v = self.parent[v].unwrap();
        }
        while u != v {
            out.push(self.parent_edge[u].unwrap());
            out.push(self.parent_edge[v].unwrap());
            u = self.parent[u].unwrap();
            v = self.parent[v].unwrap();
        }
        out
    }
}

/// Breadth-first spanning forest rooted at the smallest vertex of each
/// component; neighbors are visited in ascending order.
pub fn spanning_forest(graph: &Graph) -> SpanningForest {
    bfs_forest(graph, |_| true)
}

fn bfs_forest(graph: &Graph, usable: impl Fn(usize) -> bool) -> SpanningForest {
    let n = graph.n();
    let mut f = SpanningForest {
        parent: vec![None; n],
        parent_edge: vec![None; n],
        depth: vec![0; n],
        root: vec![usize::MAX; n],
        roots: Vec::new(),
        order: Vec::with_capacity(n),
        tree_edges: Vec::new(),
        non_tree_edges: Vec::new(),
    };
    let mut queue = VecDeque::new();
    for start in 0..n {
        if f.root[start] != usize::MAX {
            continue;
        }
        f.roots.push(start);
        f.root[start] = start;
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            f.order.push(x);
            for inc in graph.adjacency(x) {
                let y = inc.neighbor;
                if !usable(inc.edge) || f.root[y] != usize::MAX {
                    continue;
                }
                f.root[y] = start;
                f.parent[y] = Some(x);
                f.parent_edge[y] = Some(inc.edge);
                f.depth[y] = f.depth[x] + 1;
                f.tree_edges.push(inc.edge);
                queue.push_back(y);
            }
        }
    }
    f.tree_edges.sort_unstable();
    let mut in_tree = vec![false; graph.m()];
    for &e in &f.tree_edges {
        in_tree[e] = true;
    }
    f.non_tree_edges = (0..graph.m()).filter(|&e| !in_tree[e]).collect();
    f
}

/// `m - n + #components`.
pub fn cyclomatic(graph: &Graph) -> usize {
    let c = spanning_forest(graph).roots.len();
    graph.m() + c - graph.n()
}

/// One cycle per non-tree edge: the edge plus the tree path joining its
/// endpoints. Together they form a basis of the cycle space.
pub fn fundamental_cycles(graph: &Graph, forest: &SpanningForest) -> Vec<EdgeVector> {
    forest
        .non_tree_edges
        .iter()
        .map(|&e| {
            let (u, v) = graph.edge(e);
            let mut edges = forest.tree_path_edges(u, v);
            edges.push(e);
            EdgeVector::from_indices(graph.m(), edges).expect("edge indices are in range")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GeneratorSpec};
    use crate::parity::is_cycle_vector;

    #[test]
    fn component_examples() {
        let c6 = generate(&GeneratorSpec::Cycle(6)).unwrap();
        assert_eq!(components(&c6), vec![(0..6).collect::<Vec<_>>()]);
        let two = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(components(&two), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        let empty = Graph::new(3, []).unwrap();
        assert_eq!(components(&empty), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn forest_examples() {
        let c6 = generate(&GeneratorSpec::Cycle(6)).unwrap();
        let f = spanning_forest(&c6);
        assert_eq!((f.tree_edges.len(), f.non_tree_edges.len()), (5, 1));
        let k4 = generate(&GeneratorSpec::Complete(4)).unwrap();
        let f = spanning_forest(&k4);
        assert_eq!((f.tree_edges.len(), f.non_tree_edges.len()), (3, 3));
        let path = generate(&GeneratorSpec::Path(5)).unwrap();
        let f = spanning_forest(&path);
        assert_eq!((f.tree_edges.len(), f.non_tree_edges.len()), (4, 0));
    }

    #[test]
    fn cyclomatic_examples() {
        for n in 3..12 {
            assert_eq!(cyclomatic(&generate(&GeneratorSpec::Cycle(n)).unwrap()), 1);
        }
        assert_eq!(cyclomatic(&generate(&GeneratorSpec::Petersen).unwrap()), 6);
        assert_eq!(cyclomatic(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()), 0);
    }

    #[test]
    fn k4_star_cycles_are_triangles_through_zero() {
        let k4 = generate(&GeneratorSpec::Complete(4)).unwrap();
        let f = spanning_forest(&k4);
        // BFS from 0 in K4 is the star at 0
        assert!(f.parent[1..].iter().all(|&p| p == Some(0)));
        let cycles = fundamental_cycles(&k4, &f);
        assert_eq!(cycles.len(), 3);
        for c in &cycles {
            assert_eq!(c.weight(), 3);
            let touches_zero = c.iter_ones().any(|e| k4.edge(e).0 == 0);
            assert!(touches_zero);
            assert!(is_cycle_vector(&k4, c));
        }
    }

    #[test]
    fn c6_single_cycle_and_forest_none() {
        let c6 = generate(&GeneratorSpec::Cycle(6)).unwrap();
        let cycles = fundamental_cycles(&c6, &spanning_forest(&c6));
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].weight(), 6);
        let path = generate(&GeneratorSpec::Path(4)).unwrap();
        assert!(fundamental_cycles(&path, &spanning_forest(&path)).is_empty());
    }

    #[test]
    fn custom_tree_edges() {
        let c6 = generate(&GeneratorSpec::Cycle(6)).unwrap();
        let f = SpanningForest::from_tree_edges(&c6, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(f.non_tree_edges, vec![5]);
        assert_eq!(f.depth[5], 5);
        assert!(SpanningForest::from_tree_edges(&c6, &[0, 1, 2]).is_err());
        assert!(SpanningForest::from_tree_edges(&c6, &[0, 1, 2, 3, 4, 5]).is_err());
    }
}
