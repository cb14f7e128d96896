use std::time::Duration;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Machine-readable record of one CLI run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: Vec<String>,
    /// `sha256:` followed by the hex digest of the input bytes.
    pub input_digest: String,
    pub version: String,
    pub wall_time_ms: f64,
    pub result: serde_json::Value,
}

impl RunReport {
    pub fn new(
        command: Vec<String>,
        input: &[u8],
        elapsed: Duration,
        result: serde_json::Value,
    ) -> Self {
        RunReport {
            command,
            input_digest: digest(input),
            version: env!("CARGO_PKG_VERSION").to_string(),
            wall_time_ms: elapsed.as_secs_f64() * 1e3,
            result,
        }
    }
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}
