use std::fs;
use std::io::{self, Write};
use std::path::Path;

use micz_core::numeric_verify::VerificationReport;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::args::Format;

pub const SCHEMA: &str = "su11-micz/1";

#[derive(Debug, Clone)]
pub enum Cell {
    Text(String),
    Num(f64),
    Bool(bool),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Num(x) => format_float(*x),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Num(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
            Cell::Bool(b) => Value::Bool(*b),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

/// 17 significant digits in scientific notation.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Table { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }

    pub fn to_text(&self) -> String {
        let rendered: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::render).collect()).collect();
        let widths: Vec<usize> = (0..self.header.len())
            .map(|c| rendered.iter().map(|r| r[c].len()).chain([self.header[c].len()]).max().unwrap_or(0))
            .collect();
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            padded.join("  ").trim_end().to_owned() + "\n"
        };
        let mut out = line(self.header.clone());
        for r in &rendered {
            out += &line(r.iter().map(String::as_str).collect());
        }
        out
    }

    pub fn to_json_rows(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| {
                    let obj: Map<String, Value> =
                        self.header.iter().zip(r).map(|(h, c)| (h.to_string(), c.to_json())).collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

pub fn json_document(config: &impl Serialize, reports: Value) -> String {
    let mut doc = Map::new();
    doc.insert("schema".into(), Value::String(SCHEMA.into()));
    doc.insert("config".into(), serde_json::to_value(config).expect("config serializes"));
    doc.insert("reports".into(), reports);
    serde_json::to_string_pretty(&Value::Object(doc)).expect("document serializes") + "\n"
}

fn joined(map: impl IntoIterator<Item = (String, String)>) -> String {
    map.into_iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

pub fn reports_table(reports: &[VerificationReport]) -> Table {
    let mut t = Table::new(vec!["check", "status", "residual", "tolerance", "inputs", "measured"]);
    for r in reports {
        t.push(vec![
            Cell::Text(r.check_name.clone()),
            Cell::Text(if r.passed { "PASS" } else { "FAIL" }.into()),
            r.residual.into(),
            r.tolerance.into(),
            Cell::Text(joined(r.inputs.clone())),
            Cell::Text(joined(r.measured.iter().map(|(k, v)| (k.clone(), format_float(*v))))),
        ]);
    }
    t
}

pub fn reports_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed { "PASS" } else { "FAIL" };
        out += &format!(
            "{status} {} residual={} tol={} [{}]",
            r.check_name,
            format_float(r.residual),
            format_float(r.tolerance),
            joined(r.inputs.clone())
        );
        if let Some(ms) = r.runtime_ms {
            out += &format!(" {ms:.3} ms");
        }
        out.push('\n');
    }
    out
}

pub fn render_reports(format: Format, config: &impl Serialize, reports: &[VerificationReport]) -> String {
    match format {
        Format::Text => reports_text(reports),
        Format::Csv => reports_table(reports).to_csv(),
        Format::Json => json_document(config, serde_json::to_value(reports).expect("reports serialize")),
    }
}

pub fn render_table(format: Format, config: &impl Serialize, table: &Table) -> String {
    match format {
        Format::Text => table.to_text(),
        Format::Csv => table.to_csv(),
        Format::Json => json_document(config, table.to_json_rows()),
    }
}

pub fn emit(text: &str, out: Option<&Path>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_uses_lf_and_fixed_floats() {
        let mut t = Table::new(vec!["a", "b"]);
        t.push(vec![Cell::Text("1/2".into()), (-0.08).into()]);
        assert_eq!(t.to_csv(), "a,b\n1/2,-8.0000000000000002e-2\n");
    }

    #[test]
    fn json_rows_keep_numbers() {
        let mut t = Table::new(vec!["E"]);
        t.push(vec![(-0.5).into()]);
        assert_eq!(t.to_json_rows().to_string(), r#"[{"E":-0.5}]"#);
    }

    #[test]
    fn text_is_aligned() {
        let mut t = Table::new(vec!["n", "E"]);
        t.push(vec![Cell::Text("1".into()), Cell::Text("x".into())]);
        assert_eq!(t.to_text(), "n  E\n1  x\n");
    }
}
