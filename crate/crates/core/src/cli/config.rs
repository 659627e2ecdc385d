use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Settings read from a `key = value` file. Blank lines and `#` comments are
/// ignored; keys are flag names without the leading dashes.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigFile {
    values: BTreeMap<String, (String, usize)>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once('=') else {
                return Err(Error::ItineraryParse { line, message: format!("expected `key = value`, got `{content}`") });
            };
            let key = key.trim().trim_start_matches('-').to_string();
            if key.is_empty() {
                return Err(Error::ItineraryParse { line, message: "empty key".into() });
            }
            if values.insert(key.clone(), (value.trim().to_string(), line)).is_some() {
                return Err(Error::ItineraryParse { line, message: format!("`{key}` set twice") });
            }
        }
        Ok(Self { values })
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Fills `flag` from the file when it was not given on the command line.
    pub fn fill<T: std::str::FromStr>(&self, flag: &mut Option<T>, key: &str) -> Result<()> {
        if flag.is_some() {
            return Ok(());
        }
        if let Some((raw, line)) = self.values.get(key) {
            let parsed = raw
                .parse::<T>()
                .map_err(|_| Error::ItineraryParse { line: *line, message: format!("bad value `{raw}` for `{key}`") })?;
            *flag = Some(parsed);
        }
        Ok(())
    }

    /// Boolean switches: a flag given on the command line wins; otherwise
    /// `key = true|false` from the file.
    pub fn switch(&self, flag: &mut bool, key: &str) -> Result<()> {
        let mut value = None;
        self.fill::<bool>(&mut value, key)?;
        if !*flag {
            *flag = value.unwrap_or(false);
        }
        Ok(())
    }

    /// Keys not in `known`, with their line numbers.
    pub fn unknown_keys(&self, known: &[&str]) -> Vec<(String, usize)> {
        self.values
            .iter()
            .filter(|(k, _)| !known.contains(&k.as_str()))
            .map(|(k, (_, line))| (k.clone(), *line))
            .collect()
    }
}
