use std::fmt;
use std::path::{Path, PathBuf};

use serde::Deserialize;

/// Settings read from a TOML file given with `--config`.
#[derive(Debug, Default, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub budget: Option<u64>,
    pub trust_external: Option<bool>,
    /// STRINGCONE v1 files searched when an external cone is requested
    /// without `--cone-file`; relative paths are taken from the config's
    /// directory.
    #[serde(default)]
    pub cones: Vec<PathBuf>,
}

#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "config: {}", self.0)
    }
}

impl std::error::Error for ConfigError {}

impl Config {
    pub fn parse(text: &str) -> Result<Config, ConfigError> {
        toml::from_str(text).map_err(|e| ConfigError(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Config, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError(format!("{}: {e}", path.display())))?;
        let mut c = Config::parse(&text)?;
        let dir = path.parent().unwrap_or(Path::new("."));
        for p in &mut c.cones {
            if p.is_relative() {
                *p = dir.join(&*p);
            }
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_keys() {
        let c = Config::parse("budget = 10\ntrust_external = true\ncones = [\"a.cone\"]\n").unwrap();
        assert_eq!(c.budget, Some(10));
        assert_eq!(c.trust_external, Some(true));
        assert_eq!(c.cones, vec![PathBuf::from("a.cone")]);
        assert_eq!(Config::parse("").unwrap(), Config::default());
        assert!(Config::parse("bogus = 1").is_err());
    }
}
