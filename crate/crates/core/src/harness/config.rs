use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::graph::{generate, read_edge_list, GeneratorSpec, Graph};
use crate::{Budgets, Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

/// Everything that determines an output. It is written into every report so
/// a run can be repeated exactly.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: String,
    /// Subcommand parameters as given (after defaults are applied).
    pub params: serde_json::Map<String, serde_json::Value>,
    pub budgets: Budgets,
    pub seed: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
    /// Wall-clock timings are nondeterministic and therefore opt-in.
    pub timings: bool,
}

impl RunConfig {
    pub fn new(command: impl Into<String>) -> Self {
        RunConfig {
            command: command.into(),
            params: serde_json::Map::new(),
            budgets: Budgets::default(),
            seed: 0,
            format: Format::Json,
            out: None,
            timings: false,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        let v = serde_json::to_value(value).expect("parameter serializes");
        self.params.insert(key.to_string(), v);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let b = &self.budgets;
        if b.assignments_log2 == 0
            || b.subgraphs_log2 == 0
            || b.statevector_vertices == 0
            || b.matching_nodes == 0
            || b.anchors_log2 == 0
        {
            return Err(Error::InvalidArgument("budgets must be positive".into()));
        }
        Ok(())
    }
}

/// Where a graph comes from: a generator spec or an edge-list file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    Generator(GeneratorSpec),
    File(PathBuf),
}

impl GraphSource {
    /// Loads the graph; random generators without an explicit seed use
    /// `seed`.
    pub fn load(&self, seed: u64) -> Result<Graph> {
        match self {
            GraphSource::Generator(spec) => generate(&spec.with_default_seed(seed)),
            GraphSource::File(path) => read_edge_list(path),
        }
    }

    /// Identifier used in tables, with the effective seed filled in.
    pub fn id(&self, seed: u64) -> String {
        match self {
            GraphSource::Generator(spec) => spec.with_default_seed(seed).to_string(),
            GraphSource::File(path) => format!("file:{}", path.display()),
        }
    }
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::Generator(spec) => write!(f, "{spec}"),
            GraphSource::File(path) => write!(f, "file:{}", path.display()),
        }
    }
}

impl Serialize for GraphSource {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for GraphSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.strip_prefix("file:") {
            Some(path) => Ok(GraphSource::File(PathBuf::from(path))),
            None => s.parse().map(GraphSource::Generator),
        }
    }
}

/// A parsed family: either graph instances for the comparison table or the
/// analysis-only `λ` scaling sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Instances(Vec<GraphSource>),
    /// Values of `m`, and `l = ⌊m / divisor⌋`.
    Scaling { ms: Vec<usize>, divisor: usize },
}

fn parse_range(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidArgument(format!("bad range {s:?}; expected a..b or a..b:step"));
    let (range, step) = match s.split_once(':') {
        Some((r, st)) => (r, st.parse::<usize>().map_err(|_| bad())?),
        None => (s, 1),
    };
    let (a, b) = range.split_once("..").ok_or_else(bad)?;
    let a: usize = a.parse().map_err(|_| bad())?;
    let b: usize = b.parse().map_err(|_| bad())?;
    if step == 0 || a > b {
        return Err(bad());
    }
    Ok((a..=b).step_by(step).collect())
}

/// Parses a family spec: `;`-separated items, each one of
///
/// - `cycles:A..B[:STEP]`, `paths:A..B[:STEP]`, `thetas:A..B[:STEP]` (the
///   last gives `theta:k,k,k`)
/// - `chords:N:R0..R1` (`tree_plus_chords:N,r` for each `r`)
/// - a single generator spec such as `petersen` or `theta:3,3,4`
/// - `file:PATH`
///
/// or the whole spec is `lambda:A..B[:STEP][/DIVISOR]` for the scaling sweep
/// (divisor defaults to 10).
pub fn parse_family(spec: &str) -> Result<Family> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("lambda:") {
        let (range, divisor) = match rest.split_once('/') {
            Some((r, d)) => (
                r,
                d.parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad divisor {d:?}")))?,
            ),
            None => (rest, 10),
        };
        if divisor == 0 {
            return Err(Error::InvalidArgument("divisor must be positive".into()));
        }
        return Ok(Family::Scaling {
            ms: parse_range(range)?,
            divisor,
        });
    }
    let mut out = Vec::new();
    for item in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (head, rest) = item.split_once(':').unwrap_or((item, ""));
        match head {
            "cycles" => out.extend(parse_range(rest)?.into_iter().map(|n| GeneratorSpec::Cycle(n).into())),
            "paths" => out.extend(parse_range(rest)?.into_iter().map(|n| GeneratorSpec::Path(n).into())),
            "thetas" => out.extend(
                parse_range(rest)?
                    .into_iter()
                    .map(|k| GeneratorSpec::Theta(k, k, k).into()),
            ),
            "chords" => {
                let (n, range) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::InvalidArgument(format!("bad chords item {item:?}")))?;
                let n: usize = n
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("bad chords item {item:?}")))?;
                out.extend(parse_range(range)?.into_iter().map(|chords| {
                    GeneratorSpec::TreePlusChords { n, chords, seed: None }.into()
                }));
            }
            _ => out.push(item.parse()?),
        }
    }
    if out.is_empty() {
        return Err(Error::InvalidArgument("empty family".into()));
    }
    Ok(Family::Instances(out))
}

impl From<GeneratorSpec> for GraphSource {
    fn from(spec: GeneratorSpec) -> Self {
        GraphSource::Generator(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        let Family::Instances(items) = parse_family("cycles:4..6; petersen;theta:3,3,4").unwrap() else {
            panic!()
        };
        let ids: Vec<String> = items.iter().map(|s| s.id(0)).collect();
        assert_eq!(ids, ["cycle:4", "cycle:5", "cycle:6", "petersen", "theta:3,3,4"]);

        let Family::Instances(items) = parse_family("chords:50:0..2").unwrap() else { panic!() };
        assert_eq!(items.len(), 3);
        assert_eq!(items[2].id(9), "tree_plus_chords:50,2,9");

        let Family::Instances(items) = parse_family("thetas:3..9:3").unwrap() else { panic!() };
        assert_eq!(items[2].id(0), "theta:9,9,9");

        assert_eq!(
            parse_family("lambda:100..1000:100").unwrap(),
            Family::Scaling {
                ms: (100..=1000).step_by(100).collect(),
                divisor: 10
            }
        );
        assert_eq!(
            parse_family("file:g.el").unwrap(),
            Family::Instances(vec![GraphSource::File("g.el".into())])
        );
        assert!(parse_family("cycles:9..3").is_err());
        assert!(parse_family("wheel:5").is_err());
        assert!(parse_family("").is_err());
    }

    #[test]
    fn budgets_must_be_positive() {
        let mut cfg = RunConfig::new("compare");
        assert!(cfg.validate().is_ok());
        cfg.budgets.matching_nodes = 0;
        assert!(cfg.validate().is_err());
    }
}
