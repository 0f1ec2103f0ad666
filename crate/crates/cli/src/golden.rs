//! Versioned expected values for the acceptance runner.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

pub const GOLDEN_VERSION: u32 = 1;

pub fn default_path() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/golden/golden.json"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Quoted from the source publication.
    Published,
    Trivial,
    /// Computed by a named oracle when the file was blessed.
    Derived,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoldenEntry {
    pub value: Value,
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl GoldenEntry {
    pub fn published(value: impl Into<Value>, note: &str) -> Self {
        GoldenEntry {
            value: value.into(),
            provenance: Provenance::Published,
            oracle: None,
            note: Some(note.into()),
        }
    }

    pub fn derived(value: impl Into<Value>, oracle: &str) -> Self {
        GoldenEntry {
            value: value.into(),
            provenance: Provenance::Derived,
            oracle: Some(oracle.into()),
            note: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoldenFile {
    #[serde(default)]
    pub version: Option<u32>,
    pub entries: BTreeMap<String, GoldenEntry>,
}

impl GoldenFile {
    pub fn new(entries: BTreeMap<String, GoldenEntry>) -> Self {
        GoldenFile {
            version: Some(GOLDEN_VERSION),
            entries,
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let g: GoldenFile =
            serde_json::from_str(text).map_err(|e| CliError::Golden(format!("unreadable: {e}")))?;
        g.validate()?;
        Ok(g)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Golden(format!("{}: {e}", path.display())))?;
        GoldenFile::parse(&text)
    }

    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        self.validate()?;
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        let mut text = serde_json::to_string_pretty(self).expect("golden file serializes");
        text.push('\n');
        fs::write(path, text)?;
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        match self.version {
            None => return Err(CliError::Golden("golden file carries no version".into())),
            Some(v) if v != GOLDEN_VERSION => {
                return Err(CliError::Golden(format!(
                    "golden file version {v}, this build expects {GOLDEN_VERSION}"
                )))
            }
            _ => {}
        }
        if let Some((id, _)) = self
            .entries
            .iter()
            .find(|(_, e)| e.provenance == Provenance::Derived && e.oracle.is_none())
        {
            return Err(CliError::Golden(format!("derived entry {id} names no oracle")));
        }
        Ok(())
    }

    pub fn get(&self, id: &str) -> Result<&Value, CliError> {
        self.entries
            .get(id)
            .map(|e| &e.value)
            .ok_or_else(|| CliError::Golden(format!("missing entry {id}")))
    }

    pub fn f64(&self, id: &str) -> Result<f64, CliError> {
        self.get(id)?
            .as_f64()
            .ok_or_else(|| CliError::Golden(format!("entry {id} is not a number")))
    }

    pub fn i64(&self, id: &str) -> Result<i64, CliError> {
        self.get(id)?
            .as_i64()
            .ok_or_else(|| CliError::Golden(format!("entry {id} is not an integer")))
    }

    pub fn str(&self, id: &str) -> Result<&str, CliError> {
        self.get(id)?
            .as_str()
            .ok_or_else(|| CliError::Golden(format!("entry {id} is not a string")))
    }
}

/// Values quoted from the source publication and their locations.
pub fn published_entries() -> BTreeMap<String, GoldenEntry> {
    let mut m = BTreeMap::new();
    for (n, v) in [(6, 0.1888), (7, 0.1891), (50, 0.2070), (70, 0.2084)] {
        m.insert(
            format!("lambda.n{n}"),
            GoldenEntry::published(v, "section 1, table of first positive eigenvalues of links"),
        );
    }
    m.insert("h1.B.n4".into(), GoldenEntry::published(1, "section 4, table of M: 1 if n=4"));
    m.insert("h1.B.n5".into(), GoldenEntry::published(4, "section 4, table of M: 4 if n=5"));
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unversioned_file_is_refused() {
        let err = GoldenFile::parse(r#"{"entries": {}}"#).unwrap_err();
        assert!(err.to_string().contains("no version"));
        assert!(GoldenFile::parse(r#"{"version": 99, "entries": {}}"#).is_err());
        assert!(GoldenFile::parse(r#"{"version": 1, "entries": {}}"#).is_ok());
    }

    #[test]
    fn derived_entries_need_an_oracle() {
        let text = r#"{"version": 1, "entries": {"x": {"value": 3, "provenance": "derived"}}}"#;
        assert!(GoldenFile::parse(text).is_err());
    }

    #[test]
    fn round_trip() {
        let mut entries = published_entries();
        entries.insert("p".into(), GoldenEntry::derived(3, "angle classes"));
        let g = GoldenFile::new(entries);
        let text = serde_json::to_string(&g).unwrap();
        let back = GoldenFile::parse(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.i64("p").unwrap(), 3);
        assert!((back.f64("lambda.n6").unwrap() - 0.1888).abs() < 1e-12);
    }
}
