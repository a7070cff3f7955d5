//! Optional JSON config file carrying default parameter grids.
//!
//! Shape: `{"defaults": {"k": "2..6", "d": "3"}}`. Precedence, highest
//! first: command-line flag, config default, nothing (an error only when
//! the evaluated family requires the parameter). Only scalar sweep flags
//! take config defaults; list-valued flags are command-line only.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::error::CliError;
use crate::sweep::RangeArg;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default)]
    pub defaults: BTreeMap<String, String>,
}

pub fn load(path: Option<&Path>) -> Result<Config, CliError> {
    let Some(path) = path else {
        return Ok(Config::default());
    };
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::shape(format!("config {}: {e}", path.display())))
}

impl Config {
    /// Resolves one scalar sweep flag: the command-line value wins, then the
    /// config default, then `None`.
    pub fn range(
        &self,
        flag: &'static str,
        cli: Option<RangeArg>,
    ) -> Result<Option<RangeArg>, CliError> {
        if cli.is_some() {
            return Ok(cli);
        }
        match self.defaults.get(flag) {
            Some(text) => text
                .parse::<RangeArg>()
                .map(Some)
                .map_err(|e| CliError::shape(format!("config default for {flag:?}: {e}"))),
            None => Ok(None),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_flag_wins_over_config_default() {
        let cfg: Config = serde_json::from_str(r#"{"defaults": {"k": "2..6"}}"#).unwrap();
        let from_cli = cfg.range("k", Some(RangeArg::single(9))).unwrap().unwrap();
        assert_eq!(from_cli, RangeArg::single(9));
        let from_cfg = cfg.range("k", None).unwrap().unwrap();
        assert_eq!((from_cfg.lo, from_cfg.hi), (2, 6));
        assert!(cfg.range("d", None).unwrap().is_none());
    }

    #[test]
    fn malformed_defaults_are_rejected() {
        let cfg: Config = serde_json::from_str(r#"{"defaults": {"k": "6..2"}}"#).unwrap();
        assert!(cfg.range("k", None).is_err());
        assert!(serde_json::from_str::<Config>(r#"{"unknown": 1}"#).is_err());
    }
}
