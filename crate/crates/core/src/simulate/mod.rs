//! Exact desk-scale simulation of the cut distributions sampled by DQI and by
//! plain quantum Fourier sampling.
//!
//! Two independent routes compute the DQI distribution: Krawtchouk values on
//! the cut histogram, and an explicit syndrome register pushed through a
//! Hadamard transform. Each is the other's oracle.

mod expectation;
mod histogram;
mod krawtchouk;
mod optimize;
mod sampling;
mod statevector;

pub use crate::graph::CutAssignment;
pub use expectation::{
    dqi_expectation_exact, dqi_expectation_exact_with, dqi_expectation_from_histogram, qfs_baseline_expectation,
    qfs_from_histogram, QProfile, SimulationPath, SimulationReport,
};
pub use histogram::{cut_histogram, cut_histogram_with, CutHistogram};
pub use krawtchouk::{krawtchouk, krawtchouk_table};
pub use optimize::{optimize_exact, optimize_exact_with, optimize_from_histogram, OptimalPolynomial};
pub use sampling::sample_cuts;
pub use statevector::{dqi_statevector, dqi_statevector_with, fwht, syndrome_amplitudes, AMPLITUDE_CAP};
