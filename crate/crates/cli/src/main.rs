use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dqi_maxcut::classical::Method;
use dqi_maxcut::graph::{to_edge_list, GeneratorSpec, Graph};
use dqi_maxcut::harness::{
    compare, csv_report, error_json, json_report, parse_family, run_analyze, run_decode, run_simulate, run_solve,
    scaling_sweep, Family, Format, GraphSource, RunConfig, SimulateOptions,
};
use dqi_maxcut::{Budgets, Error, VertexVector};

/// DQI versus exact classical MaxCut on high-girth graphs.
#[derive(Parser, Debug)]
#[command(name = "dqi-maxcut", version, about)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Seed for random generators without an explicit seed and for sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// log2 of the maximum number of enumerated assignments 2^(n-1).
    #[arg(long, global = true, default_value_t = Budgets::default().assignments_log2)]
    budget_assignments: u32,
    /// log2 of the maximum number of edge subsets of weight <= l.
    #[arg(long, global = true, default_value_t = Budgets::default().subgraphs_log2)]
    budget_subgraphs: u32,
    /// Maximum vertex count for the state-vector simulation.
    #[arg(long, global = true, default_value_t = Budgets::default().statevector_vertices)]
    budget_statevector: usize,
    /// Maximum number of nodes in one perfect-matching instance.
    #[arg(long, global = true, default_value_t = Budgets::default().matching_nodes)]
    budget_matching: usize,
    /// log2 of the maximum number of anchor assignments in the cyclomatic DP.
    #[arg(long, global = true, default_value_t = Budgets::default().anchors_log2)]
    budget_anchors: u32,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write the output here instead of stdout.
    #[arg(short = 'o', long, global = true)]
    out: Option<PathBuf>,
    /// Record wall-clock timings (makes outputs nondeterministic).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct Input {
    /// Edge-list file.
    #[arg(conflicts_with = "gen", required_unless_present = "gen")]
    file: Option<PathBuf>,
    /// Generator spec instead of a file, e.g. `cycle:6` or `theta:3,3,4`.
    #[arg(long)]
    gen: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated graph as an edge list.
    Gen {
        /// Generator spec, e.g. `petersen` or `tree_plus_chords:50,3`.
        spec: String,
    },
    /// Girth, degree, eigenpair and predicted expected cut.
    Analyze {
        #[command(flatten)]
        input: Input,
    },
    /// Exact DQI cut distribution, cross-checked across both simulation paths.
    Simulate {
        #[command(flatten)]
        input: Input,
        /// Polynomial degree; defaults to the plan's.
        #[arg(long)]
        l: Option<usize>,
        /// Number of sampled cuts to include.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        /// Skip the state-vector cross-check.
        #[arg(long)]
        histogram_only: bool,
    },
    /// Recover an edge set of weight <= l from its vertex-parity syndrome.
    Decode {
        #[command(flatten)]
        input: Input,
        /// Syndrome as hex, vertex 0 in the least significant bit.
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        l: Option<usize>,
    },
    /// Exact or spanning-tree MaxCut.
    Solve {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// DQI-versus-classical table for a family, or the λ scaling sweep.
    Compare {
        /// e.g. `cycles:4..16`, `chords:50:0..6`, `petersen;theta:3,3,4`,
        /// `lambda:100..1000:100`.
        family: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Auto,
    Brute,
    Fpt,
    Tree,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Brute => Method::Brute,
            MethodArg::Fpt => Method::Fpt,
            MethodArg::Tree => Method::Tree,
        }
    }
}

impl Input {
    fn source(&self) -> Result<GraphSource, Error> {
        match (&self.file, &self.gen) {
            (Some(path), None) => Ok(GraphSource::File(path.clone())),
            (None, Some(spec)) => Ok(GraphSource::Generator(spec.parse()?)),
            _ => Err(Error::InvalidArgument("give exactly one of FILE or --gen".into())),
        }
    }
}

fn base_config(global: &Global, command: &str) -> RunConfig {
    let mut cfg = RunConfig::new(command);
    cfg.seed = global.seed;
    cfg.budgets = Budgets {
        assignments_log2: global.budget_assignments,
        subgraphs_log2: global.budget_subgraphs,
        statevector_vertices: global.budget_statevector,
        matching_nodes: global.budget_matching,
        anchors_log2: global.budget_anchors,
    };
    cfg.format = match global.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    cfg.out = global.out.clone();
    cfg.timings = global.timings;
    cfg
}

fn emit(cfg: &RunConfig, text: &str) -> Result<(), Error> {
    match &cfg.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn json_only(cfg: &RunConfig) -> Result<(), Error> {
    if cfg.format == Format::Csv {
        return Err(Error::InvalidArgument(format!("{} only writes json", cfg.command)));
    }
    Ok(())
}

fn load(cfg: RunConfig, input: &Input) -> Result<(RunConfig, Graph), Error> {
    let source = input.source()?;
    let graph = source.load(cfg.seed)?;
    let id = source.id(cfg.seed);
    Ok((cfg.param("graph", id), graph))
}

fn sidecar(path: &Path) -> PathBuf {
    path.with_extension("json")
}

/// Exit status on success paths: 0, or 4 when decoding found no solution.
fn run(cli: Cli) -> Result<u8, Error> {
    let g = &cli.global;
    match &cli.command {
        Command::Gen { spec } => {
            let parsed: GeneratorSpec = spec.parse()?;
            let source = GraphSource::Generator(parsed);
            let cfg = base_config(g, "gen").param("graph", source.id(g.seed));
            cfg.validate()?;
            let graph = source.load(cfg.seed)?;
            let header = serde_json::to_string(&cfg).expect("config serializes");
            emit(&cfg, &format!("# config: {header}\n{}", to_edge_list(&graph)))?;
            Ok(0)
        }
        Command::Analyze { input } => {
            let (cfg, graph) = load(base_config(g, "analyze"), input)?;
            cfg.validate()?;
            json_only(&cfg)?;
            emit(&cfg, &json_report(&cfg, &run_analyze(&graph))?)?;
            Ok(0)
        }
        Command::Simulate {
            input,
            l,
            samples,
            histogram_only,
        } => {
            let (cfg, graph) = load(base_config(g, "simulate"), input)?;
            let cfg = cfg
                .param("l", l)
                .param("samples", samples)
                .param("histogram_only", histogram_only);
            cfg.validate()?;
            json_only(&cfg)?;
            let opts = SimulateOptions {
                l: *l,
                samples: *samples,
                histogram_only: *histogram_only,
            };
            let out = run_simulate(&graph, &opts, &cfg.budgets, cfg.seed)?;
            emit(&cfg, &json_report(&cfg, &out)?)?;
            Ok(0)
        }
        Command::Decode { input, alpha, l } => {
            let (cfg, graph) = load(base_config(g, "decode"), input)?;
            let cfg = cfg.param("alpha", alpha).param("l", l);
            cfg.validate()?;
            json_only(&cfg)?;
            let alpha = VertexVector::from_hex(graph.n(), alpha)?;
            let out = run_decode(&graph, *l, &alpha, &cfg.budgets)?;
            emit(&cfg, &json_report(&cfg, &out)?)?;
            Ok(if out.is_decoded() { 0 } else { 4 })
        }
        Command::Solve { input, method } => {
            let (cfg, graph) = load(base_config(g, "solve"), input)?;
            let method = Method::from(*method);
            let cfg = cfg.param("method", method);
            cfg.validate()?;
            json_only(&cfg)?;
            let out = run_solve(&graph, method, &cfg.budgets, cfg.timings)?;
            emit(&cfg, &json_report(&cfg, &out)?)?;
            Ok(0)
        }
        Command::Compare { family } => {
            let cfg = base_config(g, "compare").param("family", family);
            cfg.validate()?;
            let family = parse_family(family)?;
            let (csv, json) = match &family {
                Family::Instances(sources) => {
                    let rows = compare(sources, &cfg);
                    (csv_report(&cfg, &rows)?, json_report(&cfg, &rows)?)
                }
                Family::Scaling { ms, divisor } => {
                    let rows = scaling_sweep(ms, *divisor, cfg.timings)?;
                    (csv_report(&cfg, &rows)?, json_report(&cfg, &rows)?)
                }
            };
            match &cfg.out {
                Some(path) => {
                    fs::write(path, &csv)?;
                    fs::write(sidecar(path), &json)?;
                }
                None => match cfg.format {
                    Format::Csv => print!("{csv}"),
                    Format::Json => print!("{json}"),
                },
            }
            Ok(0)
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Budget { .. } => 3,
        Error::Infeasible(_) => 4,
        Error::InvalidArgument(_) | Error::InvalidGenerator(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("{}", error_json(&err));
            ExitCode::from(exit_code(&err))
        }
    }
}
