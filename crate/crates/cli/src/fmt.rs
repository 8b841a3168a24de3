//! Table rendering. Both writers are hand-rolled so that reruns are
//! byte-identical: floats always print as nine significant digits in
//! scientific notation, row order is fully determined by the task code,
//! and the JSON writer emits one row object per line in column order.

use crate::args::OutputFormat;
use crate::error::CliResult;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    /// A value that may legitimately be absent (e.g. no solution at this
    /// grid point): empty CSV cell, JSON null.
    OptNum(Option<f64>),
    Str(String),
    Bool(bool),
}

/// Nine significant digits, scientific notation: `1.23456789e-2`.
/// Infinity renders as `inf` (CSV) / `null` (JSON); negative zero is
/// canonicalized so `-0` can never leak into output.
pub fn sci9(x: f64) -> String {
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.8e}")
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn json_quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(x) => x.to_string(),
            Cell::Num(x) => sci9(*x),
            Cell::OptNum(Some(x)) => sci9(*x),
            Cell::OptNum(None) => String::new(),
            Cell::Str(s) => csv_quote(s),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Int(x) => x.to_string(),
            Cell::Num(x) if x.is_infinite() => "null".into(),
            Cell::Num(x) => sci9(*x),
            Cell::OptNum(Some(x)) if x.is_infinite() => "null".into(),
            Cell::OptNum(Some(x)) => sci9(*x),
            Cell::OptNum(None) => "null".into(),
            Cell::Str(s) => json_quote(s),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

#[derive(Debug)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let mut out = String::from("[\n");
        for (i, row) in self.rows.iter().enumerate() {
            let fields: Vec<String> = self
                .columns
                .iter()
                .zip(row)
                .map(|(name, cell)| format!("{}: {}", json_quote(name), cell.json()))
                .collect();
            out.push_str("  {");
            out.push_str(&fields.join(", "));
            out.push('}');
            if i + 1 < self.rows.len() {
                out.push(',');
            }
            out.push('\n');
        }
        out.push_str("]\n");
        out
    }

    /// Write `<dir>/<basename>.<ext>` and return the path written.
    pub fn write(&self, dir: &Path, basename: &str, format: OutputFormat) -> CliResult<PathBuf> {
        std::fs::create_dir_all(dir)?;
        let path = dir.join(format!("{basename}.{}", format.extension()));
        let body = match format {
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => self.render_json(),
        };
        let mut file = std::fs::File::create(&path)?;
        file.write_all(body.as_bytes())?;
        Ok(path)
    }
}
