use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// Writes one record at a time in the chosen format.
///
/// JSON output is one compact value per line. CSV output flattens each record
/// to its top-level fields; nested values are written as JSON text. Scalar
/// records become a single `value` column.
pub struct Emitter<W: Write> {
    format: Format,
    out: W,
    header_written: bool,
}

impl<W: Write> Emitter<W> {
    pub fn new(format: Format, out: W) -> Self {
        Emitter { format, out, header_written: false }
    }

    pub fn emit(&mut self, record: &impl Serialize, pretty: impl FnOnce() -> String) -> std::io::Result<()> {
        match self.format {
            Format::Json => writeln!(self.out, "{}", serde_json::to_string(record)?),
            Format::Pretty => writeln!(self.out, "{}", pretty()),
            Format::Csv => {
                let fields = flatten(serde_json::to_value(record)?);
                let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
                if !self.header_written {
                    writer.write_record(fields.keys())?;
                    self.header_written = true;
                }
                writer.write_record(fields.values().map(cell))?;
                let bytes = writer.into_inner().map_err(|e| e.into_error())?;
                self.out.write_all(&bytes)
            }
        }
    }

    pub fn finish(mut self) -> std::io::Result<()> {
        self.out.flush()
    }
}

fn flatten(value: Value) -> Map<String, Value> {
    match value {
        Value::Object(map) => map,
        other => {
            let mut map = Map::new();
            map.insert("value".into(), other);
            map
        }
    }
}

fn cell(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Inverse of the CSV encoding: each cell is parsed as JSON, falling back
/// to a plain string.
pub fn parse_csv(text: &str) -> Result<Vec<Value>, csv::Error> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers()?.clone();
    let mut out = Vec::new();
    for row in reader.records() {
        let row = row?;
        let mut map = Map::new();
        for (h, c) in headers.iter().zip(row.iter()) {
            let v = serde_json::from_str(c).unwrap_or_else(|_| Value::String(c.to_string()));
            map.insert(h.to_string(), v);
        }
        out.push(match (map.len(), map.get("value")) {
            (1, Some(v)) => v.clone(),
            _ => Value::Object(map),
        });
    }
    Ok(out)
}
