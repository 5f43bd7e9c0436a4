use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// Machine-readable record of one invocation.
#[derive(Debug, Default)]
pub struct RunReport {
    pub command: Vec<String>,
    pub seed: u64,
    pub mode: Option<&'static str>,
    pub inputs: Vec<PathBuf>,
    pub results: Value,
}

impl RunReport {
    pub fn new(command: Vec<String>, seed: u64) -> Self {
        RunReport {
            command,
            seed,
            results: Value::Null,
            ..Default::default()
        }
    }

    pub fn add_input(&mut self, path: &Path) {
        if !self.inputs.iter().any(|p| p == path) {
            self.inputs.push(path.to_path_buf());
        }
    }

    pub fn to_json(&self, runtime_ms: u128) -> Result<Value> {
        let inputs = self
            .inputs
            .iter()
            .map(|p| {
                let bytes = std::fs::read(p).with_context(|| format!("reading {}", p.display()))?;
                Ok(json!({
                    "path": p.display().to_string(),
                    "sha256": hex::encode(Sha256::digest(&bytes)),
                }))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(json!({
            "schema": 1,
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "seed": self.seed,
            "mode": self.mode,
            "inputs": inputs,
            "results": self.results,
            "runtime_ms": runtime_ms,
        }))
    }

    pub fn write(&self, path: &Path, runtime_ms: u128) -> Result<()> {
        let text = serde_json::to_string_pretty(&self.to_json(runtime_ms)?)?;
        std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
    }
}
