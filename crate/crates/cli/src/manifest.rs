use serde::{Deserialize, Serialize};
use serde_json::Value;

use trifree_core::cut::ParamValues;
use trifree_core::solve::Limits;

/// Everything needed to reproduce a run. `argv` is replayed by `rerun`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub argv: Vec<String>,
    pub parameters: Value,
    pub config: ParamValues,
    pub limits: Limits,
    pub threads: usize,
    pub tool_version: String,
    pub started_at: String,
    pub finished_at: String,
    /// Values derived by the subcommand that belong with the output but
    /// not in its table, such as a sweep's reference threshold.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extra: Option<Value>,
}

pub fn timestamp() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true)
}

/// The manifest inside a JSON output, or a bare manifest.
pub fn extract(doc: Value) -> Result<RunManifest, serde_json::Error> {
    match doc {
        Value::Object(mut map) if map.contains_key("manifest") => serde_json::from_value(map.remove("manifest").unwrap()),
        other => serde_json::from_value(other),
    }
}
