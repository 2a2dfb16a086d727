use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{components, girth, Extent, Graph};

/// Vertex-disjoint induced trees covering `V`, with at most one edge between
/// any two of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreePartition {
    /// Sorted vertex sets, grouped by component and listed in peeling order.
    pub parts: Vec<Vec<usize>>,
    /// Peel depth `⌊(g-3)/4⌋`; `None` for forests.
    pub d: Option<usize>,
    /// Edges joining different parts.
    pub cross_edges: usize,
    /// Set when the girth is too small (`d < 1`) and every part is a single
    /// vertex.
    pub degenerate: bool,
}

impl TreePartition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Checks the three structural properties directly against `graph`.
    pub fn verify(&self, graph: &Graph) -> Result<(), String> {
        let n = graph.n();
        let mut owner = vec![usize::MAX; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                if v >= n || owner[v] != usize::MAX {
                    return Err(format!("vertex {v} is covered twice or out of range"));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(format!("vertex {v} is not covered"));
        }

        let t = self.parts.len();
        let mut inner = vec![0usize; t];
        let mut between = std::collections::HashMap::new();
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(dsu: &mut [usize], mut x: usize) -> usize {
            while dsu[x] != x {
                dsu[x] = dsu[dsu[x]];
                x = dsu[x];
            }
            x
        }
        for &(u, v) in graph.edges() {
            let (a, b) = (owner[u], owner[v]);
            if a == b {
                inner[a] += 1;
                let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
                if ru == rv {
                    return Err(format!("part {a} contains a cycle"));
                }
                dsu[ru] = rv;
            } else {
                let count = between.entry((a.min(b), a.max(b))).or_insert(0usize);
                *count += 1;
                if *count > 1 {
                    return Err(format!("parts {a} and {b} share more than one edge"));
                }
            }
        }
        for (i, part) in self.parts.iter().enumerate() {
            if inner[i] + 1 != part.len() {
                return Err(format!("part {i} is not connected"));
            }
        }
        let cross: usize = between.values().sum();
        if cross != self.cross_edges {
            return Err(format!("cross edge count {} != {cross}", self.cross_edges));
        }
        Ok(())
    }
}

/// Runs the peeling loop of the low-diameter decomposition: take the deepest
/// remaining vertex, walk `d` steps up (or to the root), and cut off
/// everything still hanging below.
///
/// Any spanning tree works for the structural guarantees, but the number of
/// parts depends on it. Each component is therefore peeled from a BFS tree
/// rooted at every one of its vertices in turn, keeping the first tree with
/// the fewest parts. That costs `O(n^2 log n)`.
///
/// Forests come back as one part per component. Girth below 7 gives `d < 1`;
/// the result is then the singleton partition with `degenerate` set.
pub fn tree_partition(graph: &Graph) -> TreePartition {
    let n = graph.n();
    let d = match girth(graph).value {
        Extent::Infinite => None,
        Extent::Finite(g) => Some(g.saturating_sub(3) / 4),
    };

    let parts: Vec<Vec<usize>> = match d {
        None => components(graph),
        Some(0) => (0..n).map(|v| vec![v]).collect(),
        Some(d) => {
            let mut scratch = Scratch::new(n);
            components(graph)
                .iter()
                .flat_map(|comp| {
                    comp.iter()
                        .map(|&root| scratch.peel(graph, comp, root, d))
                        .reduce(|best, next| if next.len() < best.len() { next } else { best })
                        .expect("components are nonempty")
                })
                .collect()
        }
    };

    let mut owner = vec![0usize; n];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            owner[v] = i;
        }
    }
    let cross_edges = graph
        .edges()
        .iter()
        .filter(|&&(u, v)| owner[u] != owner[v])
        .count();
    let out = TreePartition {
        parts,
        d,
        cross_edges,
        degenerate: d == Some(0),
    };
    if let Err(msg) = out.verify(graph) {
        panic!("tree partition invariant broken: {msg}");
    }
    out
}

/// Per-vertex buffers reused across candidate roots.
struct Scratch {
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    children: Vec<Vec<usize>>,
    removed: Vec<bool>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            parent: vec![None; n],
            depth: vec![usize::MAX; n],
            children: vec![Vec::new(); n],
            removed: vec![false; n],
        }
    }

    fn peel(&mut self, graph: &Graph, comp: &[usize], root: usize, d: usize) -> Vec<Vec<usize>> {
        for &v in comp {
            self.parent[v] = None;
            self.depth[v] = usize::MAX;
            self.children[v].clear();
            self.removed[v] = false;
        }
        self.depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for inc in graph.adjacency(x) {
                let y = inc.neighbor;
                if self.depth[y] == usize::MAX {
                    self.depth[y] = self.depth[x] + 1;
                    self.parent[y] = Some(x);
                    self.children[x].push(y);
                    queue.push_back(y);
                }
            }
        }

        // deepest first; ties by smaller index
        let mut by_depth = comp.to_vec();
        by_depth.sort_by_key(|&v| (std::cmp::Reverse(self.depth[v]), v));
        let mut parts = Vec::new();
        for &u in &by_depth {
            if self.removed[u] {
                continue;
            }
            let mut top = u;
            for _ in 0..d {
                match self.parent[top] {
                    Some(p) => top = p,
                    None => break,
                }
            }
            let mut part = Vec::new();
            let mut stack = vec![top];
            while let Some(x) = stack.pop() {
                if self.removed[x] {
                    continue;
                }
                self.removed[x] = true;
                part.push(x);
                stack.extend(self.children[x].iter().copied());
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }
}
