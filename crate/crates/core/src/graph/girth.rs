use std::collections::VecDeque;

use super::{Extent, Girth, Graph};

const UNSEEN: usize = usize::MAX;

struct Bfs {
    dist: Vec<usize>,
    parent: Vec<usize>,
    parent_edge: Vec<usize>,
}

/// Shortest cycle length by a breadth-first search from every vertex.
///
/// A search rooted at `r` reports `dist[x] + dist[y] + 1` for every non-tree
/// edge `xy` it meets. That closed walk may not be simple, but then it hides a
/// strictly shorter cycle, which some other root reports exactly. So the
/// minimum over all roots is the girth and its walk is a simple cycle.
pub fn girth(graph: &Graph) -> Girth {
    let n = graph.n();
    let mut best = usize::MAX;
    let mut best_at: Option<(usize, usize, usize)> = None;
    let mut bfs = Bfs {
        dist: vec![UNSEEN; n],
        parent: vec![UNSEEN; n],
        parent_edge: vec![UNSEEN; n],
    };
    let mut queue = VecDeque::new();
    for root in 0..n {
        if let Some((x, y, len)) = search(graph, root, best, &mut bfs, &mut queue) {
            if len < best {
                best = len;
                best_at = Some((root, x, y));
            }
        }
        if best == 3 {
            break;
        }
    }
    let Some((root, x, y)) = best_at else {
        return Girth::infinite();
    };
    search(graph, root, usize::MAX, &mut bfs, &mut queue);
    let mut cycle = path_to_root(&bfs, x);
    cycle.reverse();
    let mut back = path_to_root(&bfs, y);
    back.pop();
    cycle.extend(back);
    debug_assert_eq!(cycle.len(), best);
    Girth {
        value: Extent::Finite(best),
        witness: Some(cycle),
    }
}

/// Runs one BFS and returns the shortest closing edge found, pruning once no
/// candidate below `bound` is possible.
fn search(
    graph: &Graph,
    root: usize,
    bound: usize,
    bfs: &mut Bfs,
    queue: &mut VecDeque<usize>,
) -> Option<(usize, usize, usize)> {
    bfs.dist.fill(UNSEEN);
    queue.clear();
    bfs.dist[root] = 0;
    bfs.parent[root] = UNSEEN;
    bfs.parent_edge[root] = UNSEEN;
    queue.push_back(root);
    let mut found: Option<(usize, usize, usize)> = None;
    let mut limit = bound;
    while let Some(x) = queue.pop_front() {
        let dx = bfs.dist[x];
        // candidates from this level close walks of length >= 2*dx
        if 2 * dx >= limit {
            break;
        }
        for inc in graph.adjacency(x) {
            if inc.edge == bfs.parent_edge[x] {
                continue;
            }
            let y = inc.neighbor;
            if bfs.dist[y] == UNSEEN {
                bfs.dist[y] = dx + 1;
                bfs.parent[y] = x;
                bfs.parent_edge[y] = inc.edge;
                queue.push_back(y);
            } else {
                let len = dx + bfs.dist[y] + 1;
                if len < limit {
                    limit = len;
                    found = Some((x, y, len));
                }
            }
        }
    }
    found
}

fn path_to_root(bfs: &Bfs, mut v: usize) -> Vec<usize> {
    let mut path = vec![v];
    while bfs.parent[v] != UNSEEN && bfs.dist[v] > 0 {
        v = bfs.parent[v];
        path.push(v);
    }
    path
}
