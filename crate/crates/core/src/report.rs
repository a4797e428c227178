//! The JSON run report.
//!
//! Layout (see `docs/report.schema.json`):
//!
//! ```json
//! {"tool_version": "0.1.0", "command": "probe", "seed": 42,
//!  "config_digest": "sha256:…", "reports": [ … ], "timestamp": "…"}
//! ```
//!
//! Everything except `timestamp` is a function of the config text, the
//! command-line overrides and the seed. Numbers are written as the shortest
//! decimal that reads back to the same `f64`; non-finite values become
//! `null`.

use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::Overrides;
use crate::norm::AxiomReport;
use crate::probes::ProbeReport;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub tool_version: &'static str,
    pub command: String,
    pub seed: u64,
    pub config_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axioms: Option<AxiomReport>,
    pub reports: Vec<ProbeReport>,
    pub timestamp: String,
}

impl RunReport {
    pub fn new(command: &str, seed: u64, config_digest: String) -> Self {
        Self {
            tool_version: TOOL_VERSION,
            command: command.to_string(),
            seed,
            config_digest,
            axioms: None,
            reports: Vec::new(),
            timestamp: now_rfc3339(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, self.to_json())
    }

    /// Every probe report matched its expectation (and axioms, if any, all
    /// passed).
    pub fn as_expected(&self) -> bool {
        self.axioms.as_ref().is_none_or(AxiomReport::all_passed) && self.reports.iter().all(ProbeReport::as_expected)
    }
}

fn now_rfc3339() -> String {
    time::OffsetDateTime::now_utc()
        .format(&time::format_description::well_known::Rfc3339)
        .expect("UTC timestamps format")
}

/// `sha256:<hex>` over the config sources and the overrides that change
/// results.
pub fn config_digest<'a>(sources: impl IntoIterator<Item = &'a str>, overrides: &Overrides) -> String {
    let mut h = Sha256::new();
    for s in sources {
        h.update((s.len() as u64).to_le_bytes());
        h.update(s.as_bytes());
    }
    h.update(format!("seed={:?};epsilon={:?};window={:?}", overrides.seed, overrides.epsilon, overrides.window).as_bytes());
    let digest = h.finalize();
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_depends_on_text_and_overrides() {
        let none = Overrides::default();
        let a = config_digest(["seed = 1"], &none);
        assert_eq!(a, config_digest(["seed = 1"], &none));
        assert_ne!(a, config_digest(["seed = 2"], &none));
        assert_ne!(a, config_digest(["seed = 1"], &Overrides { epsilon: Some(0.1), ..none }));
        assert_ne!(a, config_digest(["seed = 1"], &Overrides { seed: Some(1), ..none }));
        // the length prefix keeps ["ab", "c"] and ["a", "bc"] apart
        assert_ne!(config_digest(["ab", "c"], &none), config_digest(["a", "bc"], &none));
        assert!(a.starts_with("sha256:") && a.len() == 7 + 64);
    }

    #[test]
    fn json_layout() {
        let r = RunReport::new("reproduce", 42, "sha256:00".into());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["command", "config_digest", "reports", "seed", "timestamp", "tool_version"]);
        assert!(r.timestamp.ends_with('Z'));
    }
}
