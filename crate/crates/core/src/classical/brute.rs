use rayon::prelude::*;

use super::{integer_weights, MaxCutResult, Method};
use crate::graph::Graph;
use crate::parity::VertexVector;
use crate::{Budgets, Result};

pub fn brute_force_maxcut(graph: &Graph) -> Result<MaxCutResult> {
    brute_force_maxcut_with(graph, &Budgets::default())
}

/// Exhaustive search over the `2^(n-1)` assignments with vertex 0 on side 0.
/// Among optimal cuts the one whose bitstring (vertex 0 first) is
/// lexicographically smallest wins.
pub fn brute_force_maxcut_with(graph: &Graph, budgets: &Budgets) -> Result<MaxCutResult> {
    budgets.check_assignments(graph.n())?;
    let n = graph.n();
    if n <= 1 {
        return Ok(MaxCutResult::new(graph, VertexVector::zeros(n), Method::Brute));
    }
    let (w, _) = integer_weights(graph);
    let free = n - 1;
    let chunk_bits = free.min(8);
    let per_chunk = 1u64 << (free - chunk_bits);
    // lexicographic order on bitstrings is numeric order on reversed masks
    let key = |mask: u64| mask.reverse_bits() >> (64 - n);

    let (value, mask) = (0..1u64 << chunk_bits)
        .into_par_iter()
        .map(|c| {
            let start = c * per_chunk;
            let mut mask = gray(start) << 1;
            let mut cut: i128 = (0..graph.m())
                .filter(|&e| {
                    let (u, v) = graph.edge(e);
                    (mask >> u ^ mask >> v) & 1 == 1
                })
                .map(|e| w[e])
                .sum();
            let mut best = (cut, mask);
            for t in start + 1..start + per_chunk {
                let v = t.trailing_zeros() as usize + 1;
                let side = mask >> v & 1;
                for inc in graph.adjacency(v) {
                    if mask >> inc.neighbor & 1 == side {
                        cut += w[inc.edge];
                    } else {
                        cut -= w[inc.edge];
                    }
                }
                mask ^= 1 << v;
                if cut > best.0 || (cut == best.0 && key(mask) < key(best.1)) {
                    best = (cut, mask);
                }
            }
            best
        })
        .reduce(
            || (i128::MIN, u64::MAX),
            |a, b| {
                if b.0 > a.0 || (b.0 == a.0 && key(b.1) < key(a.1)) {
                    b
                } else {
                    a
                }
            },
        );
    debug_assert!(value > i128::MIN);
    Ok(MaxCutResult::new(graph, VertexVector::from_u64(n, mask), Method::Brute))
}

fn gray(t: u64) -> u64 {
    t ^ (t >> 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GeneratorSpec};
    use crate::Rational;

    #[test]
    fn known_optima() {
        let cases = [
            (GeneratorSpec::Cycle(5), 4),
            (GeneratorSpec::Cycle(6), 6),
            (GeneratorSpec::Complete(4), 4),
            (GeneratorSpec::Complete(5), 6),
            (GeneratorSpec::Petersen, 12),
        ];
        for (spec, opt) in cases {
            let g = generate(&spec).unwrap();
            let r = brute_force_maxcut(&g).unwrap();
            assert_eq!(r.value, opt.into(), "{spec}");
            assert_eq!(r.recomputed(&g), r.value);
        }
    }

    #[test]
    fn lexicographic_tie_break() {
        // C4: optimal cuts are 0101 and 1010; vertex 0 stays on side 0
        let c4 = generate(&GeneratorSpec::Cycle(4)).unwrap();
        assert_eq!(brute_force_maxcut(&c4).unwrap().assignment.bitstring(), "0101");
        // K3: six optimal cuts, smallest with vertex 0 first is 001
        let k3 = generate(&GeneratorSpec::Complete(3)).unwrap();
        assert_eq!(brute_force_maxcut(&k3).unwrap().assignment.bitstring(), "001");
    }

    #[test]
    fn weighted_triangle() {
        let g = Graph::with_weights(
            3,
            [(0, 1), (1, 2), (0, 2)],
            vec![1.into(), 2.into(), 3.into()],
        )
        .unwrap();
        let r = brute_force_maxcut(&g).unwrap();
        assert_eq!(r.value, 5.into());
        let half = Graph::with_weights(2, [(0, 1)], vec![Rational::new(1, 2)]).unwrap();
        assert_eq!(brute_force_maxcut(&half).unwrap().value, Rational::new(1, 2));
    }

    #[test]
    fn tiny_graphs() {
        assert_eq!(brute_force_maxcut(&Graph::new(0, []).unwrap()).unwrap().value, 0.into());
        assert_eq!(brute_force_maxcut(&Graph::new(1, []).unwrap()).unwrap().value, 0.into());
        assert_eq!(brute_force_maxcut(&Graph::new(3, []).unwrap()).unwrap().value, 0.into());
    }
}
