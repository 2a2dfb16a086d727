use serde::Serialize;

use super::config::RunConfig;
use crate::{Error, Result};

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    config: &'a RunConfig,
    result: &'a T,
}

/// Pretty JSON of `{"config": .., "result": ..}` with a trailing newline.
pub fn json_report<T: Serialize>(config: &RunConfig, result: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&Envelope { config, result })
        .map_err(|e| Error::InvalidArgument(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

/// CSV with a leading `# config: {...}` comment line, then a header row in
/// struct field order.
pub fn csv_report<T: Serialize>(config: &RunConfig, rows: &[T]) -> Result<String> {
    let config_json =
        serde_json::to_string(config).map_err(|e| Error::InvalidArgument(format!("serialization failed: {e}")))?;
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer
            .serialize(row)
            .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    }
    let body = writer
        .into_inner()
        .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    let body = String::from_utf8(body).expect("csv output is utf-8");
    Ok(format!("# config: {config_json}\n{body}"))
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: ErrorBody<'a>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    budget: Option<crate::BudgetKind>,
}

/// Machine-readable error record, one line.
pub fn error_json(err: &Error) -> String {
    let (kind, budget) = match err {
        Error::InvalidGraph(_) => ("invalid_graph", None),
        Error::Parse { .. } => ("parse", None),
        Error::InvalidGenerator(_) => ("invalid_generator", None),
        Error::Budget { kind, .. } => ("budget", Some(*kind)),
        Error::Infeasible(_) => ("infeasible", None),
        Error::Degenerate(_) => ("degenerate", None),
        Error::Length { .. } => ("length", None),
        Error::Consistency(_) => ("consistency", None),
        Error::InvalidArgument(_) => ("invalid_argument", None),
        Error::Io(_) => ("io", None),
    };
    serde_json::to_string(&ErrorReport {
        error: ErrorBody {
            kind,
            message: err.to_string(),
            budget,
        },
    })
    .expect("error record serializes")
}
