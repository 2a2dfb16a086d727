//! Experiment orchestration behind the command-line tool: run configuration,
//! the per-command pipelines, the comparison table and report writers.

mod commands;
mod compare;
mod config;
mod output;

pub use commands::{
    run_analyze, run_decode, run_simulate, run_solve, samples_consistent, DecodeOutput, SimulateOptions,
    SimulateOutput, PATH_TOLERANCE,
};
pub use compare::{compare, comparison_row, scaling_row, scaling_sweep, ComparisonRow, ScalingRow};
pub use config::{parse_family, Family, Format, GraphSource, RunConfig};
pub use output::{csv_report, error_json, json_report};
