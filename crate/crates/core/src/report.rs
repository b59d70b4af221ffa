//! Machine-readable outcome of an identity or consistency check.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// Where two sides of a check first disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Discrepancy {
    /// A coefficient mismatch at an exponent vector of a series identity.
    Exponent {
        exponent: Vec<i64>,
        lhs: String,
        rhs: String,
    },
    /// A structural difference between two graphs or configurations.
    Diff { diff: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    /// Name of the identity or check, e.g. `"pentagon"`.
    pub identity: String,
    /// Named integer parameters (`n`, `degree`, `order`, ...), sorted by key.
    pub params: BTreeMap<String, i64>,
    pub status: Status,
    /// `None` exactly when the check passed.
    pub first_discrepancy: Option<Discrepancy>,
    /// Wall-clock runtime; omitted from JSON when not requested, so identical
    /// configurations serialize identically.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl Report {
    pub fn pass(identity: impl Into<String>) -> Self {
        Report {
            identity: identity.into(),
            params: BTreeMap::new(),
            status: Status::Pass,
            first_discrepancy: None,
            runtime_ms: None,
        }
    }

    pub fn fail(identity: impl Into<String>, discrepancy: Discrepancy) -> Self {
        Report {
            identity: identity.into(),
            params: BTreeMap::new(),
            status: Status::Fail,
            first_discrepancy: Some(discrepancy),
            runtime_ms: None,
        }
    }

    pub fn with_param(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn with_runtime(mut self, ms: u64) -> Self {
        self.runtime_ms = Some(ms);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One-line human summary for stderr.
    pub fn summary(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        let mut line = format!("{} [{}]: {}", self.identity, params.join(", "), status);
        match &self.first_discrepancy {
            Some(Discrepancy::Exponent { exponent, lhs, rhs }) => {
                line.push_str(&format!(
                    " (first discrepancy at {exponent:?}: lhs={lhs} rhs={rhs})"
                ));
            }
            Some(Discrepancy::Diff { diff }) => line.push_str(&format!(" ({diff})")),
            None => {}
        }
        if let Some(ms) = self.runtime_ms {
            line.push_str(&format!(" [{ms} ms]"));
        }
        line
    }
}
