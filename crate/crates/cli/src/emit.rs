//! CSV, JSON and aligned-text renderings of result tables.

use std::path::Path;

use serde_json::{Map, Number, Value};

use fraciter::bench::Table;

use crate::config::Format;
use crate::error::CliError;

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Bool(bool),
    /// Missing value: empty in CSV and text, null in JSON.
    Empty,
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Num(v) => format_sci(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) => Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Int(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Bool(b) => Value::from(*b),
            Cell::Empty => Value::Null,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct OutTable {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

const INTEGER_COLUMNS: [&str; 2] = ["case", "k"];

impl From<&Table> for OutTable {
    fn from(t: &Table) -> Self {
        let rows = t
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(&t.columns)
                    .map(|(&v, name)| {
                        if INTEGER_COLUMNS.contains(&name.as_str()) && v.fract() == 0.0 {
                            Cell::Int(v as i64)
                        } else {
                            Cell::Num(v)
                        }
                    })
                    .collect()
            })
            .collect();
        OutTable {
            title: t.title.clone(),
            columns: t.columns.clone(),
            rows,
        }
    }
}

/// Six significant digits with a signed two-digit exponent, e.g.
/// `1.33000E-07`. Non-finite values render as an empty string.
pub fn format_sci(v: f64) -> String {
    if !v.is_finite() {
        return String::new();
    }
    let s = format!("{v:.5E}");
    let (mantissa, exp) = s.split_once('E').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}E{sign}{:02}", exp.abs())
}

pub fn to_csv(t: &OutTable) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::Necessary)
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::Output(e.to_string());
    w.write_record(&t.columns).map_err(fail)?;
    for row in &t.rows {
        w.write_record(row.iter().map(Cell::render)).map_err(fail)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}

pub fn to_json_value(t: &OutTable) -> Value {
    Value::Array(
        t.rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = t
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(k, c)| (k.clone(), c.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect(),
    )
}

pub fn to_json(t: &OutTable) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(&to_json_value(t)).map_err(|e| CliError::Output(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn to_text(t: &OutTable) -> String {
    let cells: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(Cell::render).collect()).collect();
    let widths: Vec<usize> = t
        .columns
        .iter()
        .enumerate()
        .map(|(j, c)| cells.iter().map(|r| r[j].len()).chain([c.len()]).max().unwrap_or(0))
        .collect();
    let line = |items: &[String]| {
        items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = String::new();
    if !t.title.is_empty() {
        out.push_str(&t.title);
        out.push('\n');
    }
    out.push_str(&line(&t.columns));
    out.push('\n');
    for r in &cells {
        out.push_str(&line(r));
        out.push('\n');
    }
    out
}

pub fn render(t: &OutTable, format: Format) -> Result<String, CliError> {
    match format {
        Format::Csv => to_csv(t),
        Format::Json => to_json(t),
        Format::Text => Ok(to_text(t)),
    }
}

/// Writes `text` to `path`, or to stdout when no path is given.
pub fn write_output(text: &str, path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}
