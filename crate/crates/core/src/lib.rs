//! Decoded Quantum Interferometry (DQI) for MaxCut, next to the exact
//! classical solvers that make high-girth instances easy.
//!
//! The crate is split along the pipeline:
//!
//! - [`graph`]: the graph type, girth, spanning forests, the edge-list format
//!   and fixture generators.
//! - [`parity`]: GF(2) edge/vertex vectors and the parity map `β ↦ Bᵀβ`.
//! - [`analysis`]: the tridiagonal eigenproblem that fixes the optimal
//!   degree-`l` symmetric polynomial and its predicted expected cut.
//! - [`simulate`]: exact desk-scale simulation of the distributions DQI and
//!   quantum Fourier sampling draw cuts from.
//! - [`decode`]: minimum T-joins via matching, i.e. the classical decoder.
//! - [`classical`]: brute force, the cyclomatic-number DP and friends.
//! - [`harness`]: run configuration, comparison tables and serialization.
//!
//! Numerical code is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! below pin the `f64` instantiations used by the harness.

pub mod analysis;
pub mod bits;
pub mod budget;
pub mod classical;
pub mod decode;
pub mod error;
pub mod graph;
pub mod harness;
pub mod parity;
pub mod scalar;
pub mod simulate;

pub use budget::{BudgetKind, Budgets};
pub use error::{Error, Result};
pub use graph::{Extent, Girth, Graph, Rational};
pub use parity::{EdgeVector, VertexVector};
pub use scalar::Scalar;

pub type TridiagonalSpecF64 = analysis::TridiagonalSpec<f64>;
pub type TridiagonalSpecF32 = analysis::TridiagonalSpec<f32>;
pub type DqiPlanF64 = analysis::DqiPlan<f64>;
pub type DqiPlanF32 = analysis::DqiPlan<f32>;
pub type QProfileF64 = simulate::QProfile<f64>;
pub type SimulationReportF64 = simulate::SimulationReport<f64>;
pub type SimulationReportF32 = simulate::SimulationReport<f32>;
