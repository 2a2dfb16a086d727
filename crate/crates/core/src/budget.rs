//! Enumeration budgets. Exceeding one is a hard error, never a truncation.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BudgetKind {
    /// `2^(n-1)` cut assignments for histogram and brute-force enumeration.
    Assignments,
    /// `Σ_{k≤l} C(m,k)` low-weight edge subsets in the state-vector path.
    Subgraphs,
    /// `2^n` amplitudes in the state-vector path.
    StateVector,
    /// Node count of one perfect-matching instance (`|T|`).
    Matching,
    /// `2^|anchors|` assignments enumerated by the cyclomatic DP.
    Anchors,
}

impl fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BudgetKind::Assignments => "assignment",
            BudgetKind::Subgraphs => "subgraph",
            BudgetKind::StateVector => "state-vector",
            BudgetKind::Matching => "matching",
            BudgetKind::Anchors => "anchor",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    /// Maximum `log2` of the number of assignments `2^(n-1)`.
    pub assignments_log2: u32,
    /// Maximum `log2` of `Σ_{k≤l} C(m,k)`.
    pub subgraphs_log2: u32,
    /// Maximum vertex count for the `2^n` amplitude register.
    pub statevector_vertices: usize,
    /// Maximum number of nodes in a single matching instance.
    pub matching_nodes: usize,
    /// Maximum `log2` of the anchor assignments of the cyclomatic DP.
    pub anchors_log2: u32,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            assignments_log2: 25,
            subgraphs_log2: 26,
            statevector_vertices: 24,
            matching_nodes: 22,
            anchors_log2: 30,
        }
    }
}

impl Budgets {
    pub fn check_assignments(&self, n: usize) -> crate::Result<()> {
        let exp = n.saturating_sub(1);
        if exp > self.assignments_log2 as usize {
            return Err(crate::Error::budget(
                BudgetKind::Assignments,
                format!("2^{exp} assignments for n={n} exceeds 2^{}", self.assignments_log2),
            ));
        }
        Ok(())
    }
}
