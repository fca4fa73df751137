//! Run configuration: built-in defaults, then an optional TOML file, then
//! command-line flags.

use std::path::Path;

use corona_core::oracle::MAX_ORACLE_LIMIT;
use corona_core::verify::Limits;
use serde::Deserialize;

/// Names the config file read when `--config` is absent.
pub const CONFIG_ENV: &str = "CORONA_CONFIG";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Table,
}

/// Every field is optional; missing ones fall back to the defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub oracle_limit: Option<usize>,
    pub omega_cap: Option<usize>,
    pub cycle_cap: Option<u64>,
    pub recognizer_limit: Option<usize>,
    pub workers: Option<usize>,
    pub format: Option<OutputFormat>,
    pub seed: Option<u64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    /// Fields set in `over` win.
    pub fn overlay(self, over: FileConfig) -> FileConfig {
        FileConfig {
            oracle_limit: over.oracle_limit.or(self.oracle_limit),
            omega_cap: over.omega_cap.or(self.omega_cap),
            cycle_cap: over.cycle_cap.or(self.cycle_cap),
            recognizer_limit: over.recognizer_limit.or(self.recognizer_limit),
            workers: over.workers.or(self.workers),
            format: over.format.or(self.format),
            seed: over.seed.or(self.seed),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub limits: Limits,
    pub workers: usize,
    pub format: OutputFormat,
}

impl Config {
    pub fn resolve(file: FileConfig) -> Result<Config, String> {
        let d = Limits::default();
        let workers = file
            .workers
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        let config = Config {
            limits: Limits {
                oracle_limit: file.oracle_limit.unwrap_or(d.oracle_limit),
                omega_cap: file.omega_cap.unwrap_or(d.omega_cap),
                cycle_cap: file.cycle_cap.unwrap_or(d.cycle_cap),
                recognizer_limit: file.recognizer_limit.unwrap_or(d.recognizer_limit),
                seed: file.seed.unwrap_or(d.seed),
            },
            workers,
            format: file.format.unwrap_or_default(),
        };
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<(), String> {
        let l = &self.limits;
        for (name, v) in [
            ("oracle-limit", l.oracle_limit as u64),
            ("omega-cap", l.omega_cap as u64),
            ("cycle-cap", l.cycle_cap),
            ("recognizer-limit", l.recognizer_limit as u64),
            ("workers", self.workers as u64),
        ] {
            if v == 0 {
                return Err(format!("{name} must be positive"));
            }
        }
        if l.oracle_limit > MAX_ORACLE_LIMIT {
            return Err(format!("oracle-limit may not exceed {MAX_ORACLE_LIMIT}"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_overlay() {
        let c = Config::resolve(FileConfig { workers: Some(2), ..Default::default() }).unwrap();
        assert_eq!(c.limits, Limits::default());
        assert_eq!(c.format, OutputFormat::Json);

        let file: FileConfig = toml::from_str("omega-cap = 10\nformat = \"table\"\nseed = 3").unwrap();
        let flags = FileConfig { seed: Some(9), workers: Some(1), ..Default::default() };
        let c = Config::resolve(file.overlay(flags)).unwrap();
        assert_eq!((c.limits.omega_cap, c.limits.seed, c.format), (10, 9, OutputFormat::Table));
    }

    #[test]
    fn rejects_bad_values() {
        assert!(toml::from_str::<FileConfig>("bogus = 1").is_err());
        let zero = FileConfig { cycle_cap: Some(0), ..Default::default() };
        assert_eq!(Config::resolve(zero).unwrap_err(), "cycle-cap must be positive");
        let big = FileConfig { oracle_limit: Some(30), ..Default::default() };
        assert!(Config::resolve(big).is_err());
    }
}
