//! Flat `key = value` config files and flag/config/default resolution.
//!
//! ```text
//! # comments and blank lines are ignored
//! benefit = 10
//! cost = 2
//! transfer = 1
//! ```
//!
//! Keys are the long flag names of the subcommand. Unknown keys are rejected.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::CliError;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigFile {
    entries: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn parse(text: &str, origin: &str) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| CliError::Parse {
                origin: origin.to_string(),
                line: n + 1,
                message,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| parse_err(format!("expected `key = value`, got `{line}`")))?;
            let key = key.trim();
            if key.is_empty() {
                return Err(parse_err("empty key".into()));
            }
            if entries
                .insert(key.to_string(), value.trim().to_string())
                .is_some()
            {
                return Err(parse_err(format!("duplicate key `{key}`")));
            }
        }
        Ok(Self { entries })
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }
}

/// Resolves each setting from the command line, then the config file, then a
/// default.
#[derive(Debug, Clone)]
pub struct Resolver {
    config: ConfigFile,
}

impl Resolver {
    /// Fails if the config names a key outside `allowed`.
    pub fn new(config: ConfigFile, allowed: &[&str]) -> Result<Self, CliError> {
        if let Some(key) = config.keys().find(|k| !allowed.contains(k)) {
            return Err(CliError::Usage(format!(
                "unknown config key `{key}` (allowed: {})",
                allowed.join(", ")
            )));
        }
        Ok(Self { config })
    }

    pub fn optional<T: FromStr>(&self, key: &str, flag: Option<T>) -> Result<Option<T>, CliError> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.config.entries.get(key) {
            None => Ok(None),
            Some(raw) => raw
                .parse()
                .map(Some)
                .map_err(|_| CliError::Usage(format!("config key `{key}`: cannot parse `{raw}`"))),
        }
    }

    pub fn or<T: FromStr>(&self, key: &str, flag: Option<T>, default: T) -> Result<T, CliError> {
        Ok(self.optional(key, flag)?.unwrap_or(default))
    }

    pub fn required<T: FromStr>(&self, key: &str, flag: Option<T>) -> Result<T, CliError> {
        self.optional(key, flag)?
            .ok_or_else(|| CliError::Usage(format!("missing required setting `--{key}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flat_pairs() {
        let c = ConfigFile::parse("# demo\nbenefit = 10\n\ncost=2\n", "cfg").unwrap();
        assert_eq!(c.keys().collect::<Vec<_>>(), vec!["benefit", "cost"]);
    }

    #[test]
    fn reports_line_numbers() {
        let err = ConfigFile::parse("benefit = 1\nnonsense\n", "cfg").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 2, .. }));
        let err = ConfigFile::parse("a=1\na=2\n", "cfg").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 2, .. }));
    }

    #[test]
    fn flags_override_config_override_defaults() {
        let c = ConfigFile::parse("benefit = 10\ncost = 2\n", "cfg").unwrap();
        let r = Resolver::new(c, &["benefit", "cost", "transfer"]).unwrap();
        assert_eq!(r.or("benefit", Some(5.0), 1.0).unwrap(), 5.0);
        assert_eq!(r.or("cost", None, 1.0).unwrap(), 2.0);
        assert_eq!(r.or("transfer", None::<f64>, 1.0).unwrap(), 1.0);
        assert!(r.required::<f64>("transfer", None).is_err());
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        let c = ConfigFile::parse("bogus = 1\n", "cfg").unwrap();
        assert!(matches!(
            Resolver::new(c, &["benefit"]),
            Err(CliError::Usage(_))
        ));
        let c = ConfigFile::parse("benefit = ten\n", "cfg").unwrap();
        let r = Resolver::new(c, &["benefit"]).unwrap();
        assert!(r.required::<f64>("benefit", None).is_err());
    }
}
