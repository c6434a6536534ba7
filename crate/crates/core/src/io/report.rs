//! Report files: pretty-printed JSON with a fixed field order and a SHA-256
//! digest over everything except the timestamp and the digest itself.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cache::sha256_hex;
use crate::error::{Error, Result};
use crate::extremal::{ExtremalRecord, HypothesisReport, LevelSummary, ScenarioPattern, Theorem1Report};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Per-graph summary used by `check`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub index: usize,
    pub order: usize,
    pub size: usize,
    pub radius: usize,
    pub diameter: usize,
    pub polyhedral: bool,
    pub prism: Option<usize>,
    pub question1_counterexample: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Record {
    Extremal(ExtremalRecord),
    Exhausted {
        r: usize,
        cap: usize,
    },
    Levels {
        levels: Vec<LevelSummary>,
    },
    Theorem1(Theorem1Report),
    Graph(GraphSummary),
    Hypothesis {
        graph: usize,
        #[serde(flatten)]
        report: HypothesisReport,
    },
    Scenario {
        graph: usize,
        root: usize,
        #[serde(flatten)]
        scenario: ScenarioPattern,
    },
    /// Informational observation that is not a pass/fail check.
    Observation {
        name: String,
        holds: bool,
        detail: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphPayload {
    pub name: String,
    /// `planar_code` (hex) or `graph6`.
    pub format: String,
    pub data: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    /// Seconds since the Unix epoch. Not covered by the digest.
    pub timestamp: Option<u64>,
    pub records: Vec<Record>,
    pub graphs: Vec<GraphPayload>,
    pub digest: String,
}

impl ReportDocument {
    pub fn new(command: &str, parameters: BTreeMap<String, String>) -> Self {
        ReportDocument {
            tool_version: TOOL_VERSION.to_string(),
            command: command.to_string(),
            parameters,
            timestamp: None,
            records: Vec::new(),
            graphs: Vec::new(),
            digest: String::new(),
        }
    }

    pub fn compute_digest(&self) -> String {
        let mut unsealed = self.clone();
        unsealed.timestamp = None;
        unsealed.digest = String::new();
        sha256_hex(&serde_json::to_vec(&unsealed).expect("report serializes"))
    }

    /// Stamps the time (if given) and the digest.
    pub fn seal(&mut self, timestamp: Option<u64>) {
        self.timestamp = timestamp;
        self.digest = self.compute_digest();
    }

    pub fn verify(&self) -> bool {
        self.digest == self.compute_digest()
    }

    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Parses and checks the digest.
    pub fn from_text(text: &str) -> Result<Self> {
        let doc: ReportDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
            offset: 0,
            message: format!("report: {e}"),
        })?;
        if !doc.verify() {
            return Err(Error::Parse {
                offset: 0,
                message: "report digest does not match its content".into(),
            });
        }
        Ok(doc)
    }
}
