//! GF(2) vectors over edges and vertices, and the parity map between them.
//!
//! An [`EdgeVector`] `β` is a subgraph; its image `f(β) = Bᵀβ` under the
//! parity map is the [`VertexVector`] of vertex degree parities in that
//! subgraph. The kernel of `f` is the cycle space.

use std::fmt;
use std::ops::{BitXor, BitXorAssign};

use serde::{Serialize, Serializer};

use crate::bits::BitVector;
use crate::graph::{girth, Extent, Graph};
use crate::Result;

macro_rules! gf2_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(BitVector);

        impl $name {
            pub fn zeros(len: usize) -> Self {
                $name(BitVector::zeros(len))
            }

            /// Sets the listed indices; repeated indices cancel.
            pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
                BitVector::from_indices(len, indices).map($name)
            }

            pub fn from_u64(len: usize, mask: u64) -> Self {
                $name(BitVector::from_u64(len, mask))
            }

            pub fn to_u64(&self) -> Option<u64> {
                self.0.to_u64()
            }

            pub fn from_hex(len: usize, hex: &str) -> Result<Self> {
                BitVector::from_hex(len, hex).map($name)
            }

            pub fn to_hex(&self) -> String {
                self.0.to_hex()
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn get(&self, i: usize) -> bool {
                self.0.get(i)
            }

            pub fn set(&mut self, i: usize, value: bool) {
                self.0.set(i, value)
            }

            pub fn toggle(&mut self, i: usize) {
                self.0.toggle(i)
            }

            /// Number of set entries, `|β|` for edge vectors.
            pub fn weight(&self) -> usize {
                self.0.count_ones()
            }

            pub fn is_zero(&self) -> bool {
                self.0.is_zero()
            }

            pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
                self.0.iter_ones()
            }

            pub fn bits(&self) -> &BitVector {
                &self.0
            }
        }

        impl BitXorAssign<&$name> for $name {
            fn bitxor_assign(&mut self, rhs: &$name) {
                self.0 ^= &rhs.0;
            }
        }

        impl BitXor for &$name {
            type Output = $name;

            fn bitxor(self, rhs: &$name) -> $name {
                $name(&self.0 ^ &rhs.0)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({:?})", stringify!($name), self.iter_ones().collect::<Vec<_>>())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.to_hex())
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_str(&self.to_hex())
            }
        }
    };
}

gf2_vector!(
    /// Indicator vector over edge indices: a subgraph `β`.
    EdgeVector
);
gf2_vector!(
    /// Indicator vector over vertex indices: a parity vector `α` or a side
    /// assignment.
    VertexVector
);

/// The `m × n` edge-vertex incidence matrix `B`, one row per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    n: usize,
    rows: Vec<(usize, usize)>,
}

impl IncidenceMatrix {
    pub fn new(graph: &Graph) -> Self {
        IncidenceMatrix {
            n: graph.n(),
            rows: graph.edges().to_vec(),
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.n)
    }

    pub fn entry(&self, e: usize, v: usize) -> bool {
        let (a, b) = self.rows[e];
        a == v || b == v
    }

    /// `Bᵀβ`: the parity of each vertex's degree in `β`.
    pub fn transpose_mul(&self, beta: &EdgeVector) -> VertexVector {
        assert_eq!(beta.len(), self.rows.len(), "edge vector length");
        let mut alpha = VertexVector::zeros(self.n);
        for e in beta.iter_ones() {
            let (u, v) = self.rows[e];
            alpha.toggle(u);
            alpha.toggle(v);
        }
        alpha
    }

    /// `Bα`: the edges with exactly one endpoint in `α`, i.e. the cut `δ(α)`.
    pub fn mul(&self, alpha: &VertexVector) -> EdgeVector {
        assert_eq!(alpha.len(), self.n, "vertex vector length");
        let mut beta = EdgeVector::zeros(self.rows.len());
        for (e, &(u, v)) in self.rows.iter().enumerate() {
            if alpha.get(u) != alpha.get(v) {
                beta.set(e, true);
            }
        }
        beta
    }
}

/// `f(β) = Bᵀβ`.
pub fn parity_map(graph: &Graph, beta: &EdgeVector) -> VertexVector {
    assert_eq!(beta.len(), graph.m(), "edge vector length");
    let mut alpha = VertexVector::zeros(graph.n());
    for e in beta.iter_ones() {
        let (u, v) = graph.edge(e);
        alpha.toggle(u);
        alpha.toggle(v);
    }
    alpha
}

/// `true` iff every vertex has even degree in `β`.
pub fn is_cycle_vector(graph: &Graph, beta: &EdgeVector) -> bool {
    parity_map(graph, beta).is_zero()
}

/// Largest `l` with `f` injective on subgraphs of at most `l` edges:
/// `⌊(g-1)/2⌋` for finite girth `g`, infinite on forests.
pub fn injectivity_radius(graph: &Graph) -> Extent {
    match girth(graph).value {
        Extent::Finite(g) => Extent::Finite((g - 1) / 2),
        Extent::Infinite => Extent::Infinite,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{components, fundamental_cycles, generate, spanning_forest, GeneratorSpec};
    use proptest::prelude::*;

    fn triangle() -> Graph {
        generate(&GeneratorSpec::Cycle(3)).unwrap()
    }

    #[test]
    fn triangle_collision() {
        let g = triangle();
        let all = EdgeVector::from_indices(3, [0, 1, 2]).unwrap();
        assert!(parity_map(&g, &all).is_zero());
        assert!(parity_map(&g, &EdgeVector::zeros(3)).is_zero());
        assert!(is_cycle_vector(&g, &all));
    }

    #[test]
    fn single_edge_marks_endpoints() {
        let g = generate(&GeneratorSpec::Petersen).unwrap();
        for e in 0..g.m() {
            let (u, v) = g.edge(e);
            let alpha = parity_map(&g, &EdgeVector::from_indices(g.m(), [e]).unwrap());
            assert_eq!(alpha.iter_ones().collect::<Vec<_>>(), vec![u, v]);
            assert!(!is_cycle_vector(&g, &EdgeVector::from_indices(g.m(), [e]).unwrap()));
        }
    }

    #[test]
    fn fundamental_cycle_sums_are_cycles() {
        let g = generate(&GeneratorSpec::Petersen).unwrap();
        let cycles = fundamental_cycles(&g, &spanning_forest(&g));
        for a in &cycles {
            for b in &cycles {
                assert!(is_cycle_vector(&g, &(a ^ b)));
            }
        }
    }

    #[test]
    fn radius_examples() {
        assert_eq!(injectivity_radius(&triangle()), Extent::Finite(1));
        let p = generate(&GeneratorSpec::Petersen).unwrap();
        assert_eq!(injectivity_radius(&p), Extent::Finite(2));
        let tree = generate(&GeneratorSpec::Path(6)).unwrap();
        assert_eq!(injectivity_radius(&tree), Extent::Infinite);
    }

    #[test]
    fn incidence_matrix_agrees() {
        let g = generate(&GeneratorSpec::Theta(3, 3, 4)).unwrap();
        let b = IncidenceMatrix::new(&g);
        assert_eq!(b.shape(), (10, 9));
        for e in 0..g.m() {
            assert_eq!((0..g.n()).filter(|&v| b.entry(e, v)).count(), 2);
        }
        let beta = EdgeVector::from_indices(10, [0, 3, 7]).unwrap();
        assert_eq!(b.transpose_mul(&beta), parity_map(&g, &beta));
        // cut vectors are orthogonal to cycles
        let alpha = VertexVector::from_indices(9, [0, 4, 5]).unwrap();
        let cut = b.mul(&alpha);
        for c in fundamental_cycles(&g, &spanning_forest(&g)) {
            assert_eq!(c.iter_ones().filter(|&e| cut.get(e)).count() % 2, 0);
        }
    }

    proptest! {
        #[test]
        fn parity_map_is_linear(seed in 0u64..500, a in any::<u64>(), b in any::<u64>()) {
            let g = generate(&GeneratorSpec::RandomConnected { n: 12, m: 20, seed: Some(seed) }).unwrap();
            let x = EdgeVector::from_u64(20, a);
            let y = EdgeVector::from_u64(20, b);
            prop_assert_eq!(parity_map(&g, &(&x ^ &y)), &parity_map(&g, &x) ^ &parity_map(&g, &y));
        }

        #[test]
        fn image_has_even_weight_per_component(seed in 0u64..500, a in any::<u64>()) {
            let g = generate(&GeneratorSpec::TreePlusChords { n: 14, chords: 4, seed: Some(seed) }).unwrap();
            let g2 = Graph::new(g.n() + 5, g.edges().iter().copied().chain([(14, 15), (16, 17), (17, 18)])).unwrap();
            let beta = EdgeVector::from_u64(g2.m(), a);
            let alpha = parity_map(&g2, &beta);
            for comp in components(&g2) {
                prop_assert_eq!(comp.iter().filter(|&&v| alpha.get(v)).count() % 2, 0);
            }
        }
    }
}
