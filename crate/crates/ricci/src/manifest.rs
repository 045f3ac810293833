//! Run manifests: what was run, on which inputs, producing which files.

use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputHash {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub config: serde_json::Value,
    pub inputs: Vec<InputHash>,
    pub tool_version: String,
    pub outputs: Vec<String>,
    /// Seconds since the epoch; the only field allowed to differ between
    /// otherwise identical runs.
    pub timestamp: u64,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl RunManifest {
    pub fn new(subcommand: &str, config: serde_json::Value) -> Self {
        RunManifest {
            subcommand: subcommand.into(),
            config,
            inputs: vec![],
            tool_version: env!("CARGO_PKG_VERSION").into(),
            outputs: vec![],
            timestamp: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
        }
    }

    pub fn add_input(&mut self, path: &str, bytes: &[u8]) {
        self.inputs.push(InputHash { path: path.into(), sha256: sha256_hex(bytes) });
    }

    pub fn add_output(&mut self, path: &str) {
        self.outputs.push(path.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes")
    }

    /// The manifest without its timestamp, for comparing runs.
    pub fn without_timestamp(&self) -> RunManifest {
        RunManifest { timestamp: 0, ..self.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sha256_of_empty_input() {
        assert_eq!(sha256_hex(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    #[test]
    fn timestamps_are_the_only_difference() {
        let mut a = RunManifest::new("curvature", serde_json::json!({"scheme": "combinatorial"}));
        a.add_input("g.g6", b"Bw");
        let mut b = a.clone();
        b.timestamp += 7;
        assert_ne!(a, b);
        assert_eq!(a.without_timestamp(), b.without_timestamp());
    }
}
