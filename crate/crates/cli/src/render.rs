//! Table, TSV and JSON rendering shared by the subcommands.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::ValueEnum;
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Tsv,
    Json,
}

/// A cell is either an exact integer or text; integers stay integers in
/// every format.
#[derive(Debug, Clone)]
pub enum Cell {
    Int(String),
    Text(String),
}

impl Cell {
    pub fn int(v: impl ToString) -> Cell {
        Cell::Int(v.to_string())
    }

    pub fn text(v: impl Into<String>) -> Cell {
        Cell::Text(v.into())
    }

    fn as_str(&self) -> &str {
        match self {
            Cell::Int(s) | Cell::Text(s) => s,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(s) => Value::Number(Number::from_str(s).expect("integer literal")),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }
}

/// Column-oriented records with optional scalar fields for the JSON object.
#[derive(Debug, Clone, Default)]
pub struct Records {
    pub fields: Vec<(&'static str, Cell)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Records {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Records { fields: Vec::new(), columns, rows: Vec::new() }
    }

    pub fn field(mut self, name: &'static str, value: Cell) -> Self {
        self.fields.push((name, value));
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Human layout: header, then right-aligned columns. With `header`
    /// false, rows are joined by single spaces.
    pub fn table(&self, header: bool) -> String {
        let mut out = String::new();
        if !header {
            for row in &self.rows {
                let line: Vec<&str> = row.iter().map(Cell::as_str).collect();
                let _ = writeln!(out, "{}", line.join(" "));
            }
            return out;
        }
        for (name, value) in &self.fields {
            let _ = writeln!(out, "# {name} = {}", value.as_str());
        }
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| {
                self.rows.iter().map(|r| r[i].as_str().len()).max().unwrap_or(0).max(c.len())
            })
            .collect();
        let line = |cells: Vec<&str>| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        let _ = writeln!(out, "{}", line(self.columns.clone()));
        for row in &self.rows {
            let _ = writeln!(out, "{}", line(row.iter().map(Cell::as_str).collect()));
        }
        out
    }

    pub fn tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.columns.join("\t"));
        for row in &self.rows {
            let line: Vec<&str> = row.iter().map(Cell::as_str).collect();
            let _ = writeln!(out, "{}", line.join("\t"));
        }
        out
    }

    pub fn json(&self) -> String {
        let mut top = Map::new();
        for (name, value) in &self.fields {
            top.insert((*name).to_string(), value.to_json());
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| ((*c).to_string(), v.to_json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        top.insert("rows".to_string(), Value::Array(rows));
        let mut s = serde_json::to_string_pretty(&Value::Object(top)).expect("serializable");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format, header: bool) -> String {
        match format {
            Format::Table => self.table(header),
            Format::Tsv => self.tsv(),
            Format::Json => self.json(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Records {
        let mut r = Records::new(vec!["s", "heady"]).field("n", Cell::int(3));
        r.push(vec![Cell::int(1), Cell::int("123456789012345678901234567890")]);
        r.push(vec![Cell::int(-1), Cell::int(7)]);
        r
    }

    #[test]
    fn formats_carry_identical_numbers() {
        let r = sample();
        assert_eq!(r.tsv(), "s\theady\n1\t123456789012345678901234567890\n-1\t7\n");
        assert_eq!(r.table(false), "1 123456789012345678901234567890\n-1 7\n");
        let json = r.json();
        assert!(json.contains("\"heady\": 123456789012345678901234567890"));
        assert!(json.contains("\"n\": 3"));
        let t = r.table(true);
        assert!(t.starts_with("# n = 3\n"));
        assert!(t.contains("123456789012345678901234567890"));
    }
}
