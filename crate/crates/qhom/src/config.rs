use std::path::Path;

use anyhow::{Context, Result};
use serde::Deserialize;

/// Optional settings file; command-line flags take precedence.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    /// Largest chain degree homology and cohomology will touch.
    pub max_degree: Option<usize>,
    /// Largest number of generators allowed in a single chain group.
    pub max_generators: Option<usize>,
    /// Primes used by the dihedral and conjecture checks.
    pub primes: Option<Vec<u64>>,
    /// Highest degree for the operator identity and homotopy suites.
    pub homotopy_degree: Option<usize>,
    pub workers: Option<usize>,
    pub slow: Option<bool>,
}

pub const DEFAULT_MAX_DEGREE: usize = 6;
pub const DEFAULT_MAX_GENERATORS: usize = 400_000;

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree.unwrap_or(DEFAULT_MAX_DEGREE)
    }

    pub fn max_generators(&self) -> usize {
        self.max_generators.unwrap_or(DEFAULT_MAX_GENERATORS)
    }
}
