use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::{Graph, Rational};
use crate::parity::VertexVector;

/// A cut as the side of each vertex, with its value.
///
/// `value` is the number of cut edges for unweighted use and the total cut
/// weight when built with [`CutAssignment::weighted`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutAssignment {
    pub sides: VertexVector,
    pub value: Rational,
}

impl CutAssignment {
    /// Counts cut edges, ignoring weights.
    pub fn unweighted(graph: &Graph, sides: VertexVector) -> Self {
        let value = Rational::from_integer(cut_size(graph, &sides) as i64);
        CutAssignment { sides, value }
    }

    pub fn weighted(graph: &Graph, sides: VertexVector) -> Self {
        let value = cut_weight(graph, &sides);
        CutAssignment { sides, value }
    }

    /// Side bits as a string, vertex 0 first.
    pub fn bitstring(&self) -> String {
        (0..self.sides.len())
            .map(|v| if self.sides.get(v) { '1' } else { '0' })
            .collect()
    }
}

impl Serialize for CutAssignment {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CutAssignment", 2)?;
        st.serialize_field("sides", &self.bitstring())?;
        st.serialize_field("value", &self.value.to_string())?;
        st.end()
    }
}

/// `h(z)`: number of edges whose endpoints lie on different sides.
pub fn cut_size(graph: &Graph, sides: &VertexVector) -> usize {
    graph
        .edges()
        .iter()
        .filter(|&&(u, v)| sides.get(u) != sides.get(v))
        .count()
}

pub fn cut_weight(graph: &Graph, sides: &VertexVector) -> Rational {
    graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| sides.get(u) != sides.get(v))
        .fold(Rational::zero(), |acc, (e, _)| acc + graph.weight(e))
}

impl Graph {
    pub fn cut_size(&self, sides: &VertexVector) -> usize {
        cut_size(self, sides)
    }

    pub fn cut_weight(&self, sides: &VertexVector) -> Rational {
        cut_weight(self, sides)
    }

    /// Cut size for a vertex mask (`n <= 64`).
    pub fn cut_size_mask(&self, mask: u64) -> usize {
        self.edges()
            .iter()
            .filter(|&&(u, v)| (mask >> u ^ mask >> v) & 1 == 1)
            .count()
    }
}
