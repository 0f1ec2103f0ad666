//! Report envelopes, CSV tables and file placement.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;

pub const TOOL: &str = "moduli-lab";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// A rectangular table destined for CSV, with a JSON rendering as a list of
/// objects keyed by header.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        let row: Vec<String> = row.into_iter().map(|x| x.to_string()).collect();
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::CRLF)
            .from_writer(Vec::new());
        w.write_record(&self.headers)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| {
                    let obj: serde_json::Map<String, Value> = self
                        .headers
                        .iter()
                        .cloned()
                        .zip(r.iter().map(|s| Value::String(s.clone())))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

/// What a subcommand produced.
#[derive(Clone, Debug)]
pub enum Payload {
    /// A structured result; rendered as JSON, or as a one-row table in CSV
    /// mode when a table is given.
    Report { value: Value, table: Option<Table> },
    Table(Table),
    /// Plain text export (edge lists, face lists, matrices).
    Text { body: String, extension: &'static str },
}

impl Payload {
    pub fn report<T: Serialize>(value: &T) -> Self {
        Payload::Report {
            value: serde_json::to_value(value).expect("reports serialize"),
            table: None,
        }
    }

    pub fn report_with_table<T: Serialize>(value: &T, table: Table) -> Self {
        Payload::Report {
            value: serde_json::to_value(value).expect("reports serialize"),
            table: Some(table),
        }
    }
}

/// Output metadata carried by every report.
pub fn envelope(config: &Value, seconds: f64, seed: u64, result: Option<Value>) -> Value {
    let mut v = json!({
        "tool": TOOL,
        "version": VERSION,
        "config": config,
        "seconds": seconds,
        "seed": seed,
    });
    if let Some(r) = result {
        v["result"] = r;
    }
    v
}

pub fn file_name(command: &str, label: &str, extension: &str) -> String {
    format!("{command}-n{label}.{extension}")
}

fn write_file(dir: &Path, name: &str, body: &str) -> Result<PathBuf, CliError> {
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    fs::write(&path, body)?;
    Ok(path)
}

pub struct Emit<'a> {
    pub command: &'a str,
    pub label: String,
    pub format: Format,
    pub out: Option<&'a Path>,
    pub config: Value,
    pub seed: u64,
    pub seconds: f64,
}

impl Emit<'_> {
    /// Writes `payload` to stdout or under the output directory. CSV and text
    /// bodies are kept pure; their metadata goes to stderr or a
    /// `.meta.json` sidecar.
    pub fn write(&self, payload: Payload, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
        let (body, ext, meta) = match (payload, self.format) {
            (Payload::Report { value, .. }, Format::Json) => {
                (json_text(&self.meta(Some(value))), "json", None)
            }
            (Payload::Report { table: Some(t), .. }, Format::Csv) => (t.to_csv()?, "csv", Some(self.meta(None))),
            (Payload::Report { value, table: None }, Format::Csv) => {
                writeln!(stderr, "no tabular form for {}; writing JSON", self.command)?;
                (json_text(&self.meta(Some(value))), "json", None)
            }
            (Payload::Table(t), Format::Json) => (json_text(&self.meta(Some(t.to_json()))), "json", None),
            (Payload::Table(t), Format::Csv) => (t.to_csv()?, "csv", Some(self.meta(None))),
            (Payload::Text { body, extension }, _) => (body, extension, Some(self.meta(None))),
        };
        match self.out {
            Some(dir) => {
                let name = file_name(self.command, &self.label, ext);
                let path = write_file(dir, &name, &body)?;
                if let Some(m) = meta {
                    write_file(dir, &format!("{name}.meta.json"), &json_text(&m))?;
                }
                writeln!(stderr, "wrote {}", path.display())?;
            }
            None => {
                stdout.write_all(body.as_bytes())?;
                if let Some(m) = meta {
                    stderr.write_all(json_text(&m).as_bytes())?;
                }
            }
        }
        Ok(())
    }

    fn meta(&self, result: Option<Value>) -> Value {
        envelope(&self.config, self.seconds, self.seed, result)
    }
}

pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_and_crlf() {
        let mut t = Table::new(["a", "b"]);
        t.push(["x,y", "plain"]);
        t.push(["say \"hi\"", "2"]);
        assert_eq!(t.to_csv().unwrap(), "a,b\r\n\"x,y\",plain\r\n\"say \"\"hi\"\"\",2\r\n");
    }

    #[test]
    fn envelope_keys_are_sorted() {
        let v = envelope(&json!({"z": 1, "a": 2}), 0.5, 7, Some(json!({"k": 1})));
        let text = serde_json::to_string(&v).unwrap();
        let keys: Vec<&str> = ["config", "result", "seconds", "seed", "tool", "version"].to_vec();
        let mut last = 0;
        for k in keys {
            let at = text.find(&format!("\"{k}\"")).unwrap();
            assert!(at >= last, "{k} out of order in {text}");
            last = at;
        }
        assert!(text.find("\"a\"").unwrap() < text.find("\"z\"").unwrap());
    }

    #[test]
    fn file_names_are_fixed() {
        assert_eq!(file_name("counts", "6", "csv"), "counts-n6.csv");
    }
}
