//! The spectral side of DQI: `A^(m,l)`, its Perron pair, the optimal
//! symmetric-polynomial coefficients and the predicted expected cut.

mod hermite;
mod jacobi;
mod plan;
mod tridiag;

pub use hermite::{hermite_residual, hermite_with_scale, HermiteComparator};
pub use jacobi::symmetric_eigen;
pub use plan::{
    choose_l, dqi_coefficients, plan, plan_with_degree, plan_with_girth, predicted_expectation, simulation_cap, DqiPlan,
    ANALYSIS_CAP,
};
pub use tridiag::{
    eigen_residual, lambda_max_tridiag, sturm_count, top_eigenpair, tridiag_mul, Eigenpair, TridiagonalSpec,
};
