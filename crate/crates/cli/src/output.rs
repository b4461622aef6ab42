use clap::ValueEnum;
use serde_json::{Map, Value};
use std::collections::BTreeSet;
use std::io::{self, Write};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One result line: machine fields plus a human rendering.
pub struct Record {
    pub fields: Map<String, Value>,
    pub text: String,
}

impl Record {
    pub fn error(line: usize, input: &str, msg: String) -> Self {
        let mut fields = Map::new();
        fields.insert("line".into(), line.into());
        fields.insert("input".into(), input.into());
        fields.insert("error".into(), msg.clone().into());
        Record {
            fields,
            text: format!("line {line}: error: {msg}"),
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Bool(_) | Value::Number(_) => v.to_string(),
        _ => serde_json::to_string(v).expect("json value"),
    }
}

/// JSON lines, CSV with the sorted union of keys as header, or text lines.
pub fn emit(format: Format, records: &[Record]) -> io::Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Text => {
            for r in records {
                writeln!(out, "{}", r.text)?;
            }
        }
        Format::Json => {
            for r in records {
                writeln!(out, "{}", serde_json::to_string(&r.fields).expect("json map"))?;
            }
        }
        Format::Csv => {
            if records.is_empty() {
                return Ok(());
            }
            let cols: BTreeSet<&String> = records.iter().flat_map(|r| r.fields.keys()).collect();
            let mut w = csv::Writer::from_writer(out);
            w.write_record(cols.iter().map(|c| c.as_str()))?;
            for r in records {
                w.write_record(cols.iter().map(|c| r.fields.get(*c).map(cell).unwrap_or_default()))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Writes a report that already knows how to serialize itself.
pub fn emit_report(format: Format, json: impl FnOnce() -> String, csv: impl FnOnce() -> String, text: impl FnOnce() -> String) -> io::Result<()> {
    let body = match format {
        Format::Json => json() + "\n",
        Format::Csv => csv(),
        Format::Text => text(),
    };
    io::stdout().lock().write_all(body.as_bytes())
}
