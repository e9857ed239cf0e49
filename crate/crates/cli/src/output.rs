use std::fmt::Write as _;

use serde_json::Value;

/// Shortest representation that parses back to the same `f64`.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}

#[derive(Debug, Clone)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Self {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// What a command produces: a JSON summary and possibly a table of rows.
pub struct Report {
    pub summary: Value,
    pub table: Option<Table>,
}

impl Report {
    pub fn summary(summary: Value) -> Self {
        Self {
            summary,
            table: None,
        }
    }

    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.summary).expect("summary serializes");
        s.push('\n');
        s
    }

    /// The table if there is one, otherwise the flat summary as a one-row CSV.
    pub fn csv(&self) -> String {
        if let Some(t) = &self.table {
            return t.to_csv();
        }
        let Value::Object(map) = &self.summary else {
            return format!("value\n{}\n", csv_cell(&self.summary));
        };
        let mut out = String::new();
        let keys: Vec<&str> = map.keys().map(String::as_str).collect();
        let _ = writeln!(out, "{}", keys.join(","));
        let cells: Vec<String> = map.values().map(csv_cell).collect();
        let _ = writeln!(out, "{}", cells.join(","));
        out
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) if !s.contains([',', '"', '\n']) => s.clone(),
        Value::Number(n) => match n.as_f64() {
            Some(x) if n.is_f64() => num(x),
            _ => n.to_string(),
        },
        Value::Bool(b) => b.to_string(),
        other => {
            let text = match other {
                Value::String(s) => s.clone(),
                _ => other.to_string(),
            };
            format!("\"{}\"", text.replace('"', "\"\""))
        }
    }
}
