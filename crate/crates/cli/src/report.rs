//! Deterministic rendering of reports as aligned text, JSON or CSV.
//!
//! Reals are written in scientific notation with 9 significant digits
//! (`2.41507196e-3`), independent of locale. Keys keep insertion order.
//! Every rendering ends with exactly one newline.

use crate::config::Format;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Real(f64),
    Int(i64),
    Text(String),
    Bool(bool),
    Null,
}

impl Value {
    pub fn text(s: impl Into<String>) -> Self {
        Value::Text(s.into())
    }

    fn plain(&self) -> String {
        match self {
            Value::Real(x) => format_real(*x),
            Value::Int(i) => i.to_string(),
            Value::Text(s) => s.clone(),
            Value::Bool(b) => b.to_string(),
            Value::Null => String::new(),
        }
    }

    fn json(&self) -> String {
        match self {
            Value::Real(x) if x.is_finite() => format_real(*x),
            Value::Real(_) | Value::Null => "null".into(),
            Value::Int(i) => i.to_string(),
            Value::Text(s) => serde_json::to_string(s).expect("strings serialize"),
            Value::Bool(b) => b.to_string(),
        }
    }

    fn csv(&self) -> String {
        let s = self.plain();
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s
        }
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Real(x)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<u32> for Value {
    fn from(i: u32) -> Self {
        Value::Int(i64::from(i))
    }
}

impl From<usize> for Value {
    fn from(i: usize) -> Self {
        Value::Int(i as i64)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(v: Option<T>) -> Self {
        v.map_or(Value::Null, Into::into)
    }
}

/// 9 significant digits, scientific notation, no negative zero.
pub fn format_real(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.8e}")
}

/// A flat record plus an optional table of rows.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub command: String,
    pub fields: Vec<(String, Value)>,
    /// Key under which rows appear in JSON.
    pub rows_key: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            ..Default::default()
        }
    }

    pub fn field(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn table(mut self, key: &str, columns: &[&str]) -> Self {
        self.rows_key = key.to_string();
        self.columns = columns.iter().map(|c| c.to_string()).collect();
        self
    }

    pub fn row(mut self, values: Vec<Value>) -> Self {
        debug_assert_eq!(values.len(), self.columns.len());
        self.rows.push(values);
        self
    }

    pub fn has_table(&self) -> bool {
        !self.columns.is_empty()
    }
}

pub fn render(report: &Report, format: Format) -> String {
    let mut out = match format {
        Format::Table => render_table(report),
        Format::Json => render_json(report),
        Format::Csv => render_csv(report),
    };
    while out.ends_with('\n') {
        out.pop();
    }
    out.push('\n');
    out
}

fn render_table(r: &Report) -> String {
    let mut out = format!("# {}\n", r.command);
    let width = r.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in &r.fields {
        let shown = match v {
            Value::Null => "-".to_string(),
            other => other.plain(),
        };
        out.push_str(&format!("{k:<width$}  {shown}\n"));
    }
    if r.has_table() {
        if !r.fields.is_empty() {
            out.push('\n');
        }
        let cells: Vec<Vec<String>> = r
            .rows
            .iter()
            .map(|row| row.iter().map(Value::plain).collect())
            .collect();
        let widths: Vec<usize> = r
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| {
                cells
                    .iter()
                    .map(|row| row[i].len())
                    .fold(c.len(), usize::max)
            })
            .collect();
        let line = |items: Vec<&str>| {
            items
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        out.push_str(&line(r.columns.iter().map(String::as_str).collect()));
        out.push('\n');
        out.push_str(&line(
            widths
                .iter()
                .map(|w| "-".repeat(*w))
                .collect::<Vec<_>>()
                .iter()
                .map(String::as_str)
                .collect(),
        ));
        out.push('\n');
        for row in &cells {
            out.push_str(&line(row.iter().map(String::as_str).collect()));
            out.push('\n');
        }
    }
    out
}

fn render_json(r: &Report) -> String {
    let mut parts = vec![format!("  \"command\": {}", Value::text(&r.command).json())];
    for (k, v) in &r.fields {
        parts.push(format!("  {}: {}", Value::text(k).json(), v.json()));
    }
    if r.has_table() {
        let rows: Vec<String> = r
            .rows
            .iter()
            .map(|row| {
                let kv: Vec<String> = r
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| format!("{}: {}", Value::text(c).json(), v.json()))
                    .collect();
                format!("    {{{}}}", kv.join(", "))
            })
            .collect();
        let body = if rows.is_empty() {
            "[]".to_string()
        } else {
            format!("[\n{}\n  ]", rows.join(",\n"))
        };
        parts.push(format!("  {}: {}", Value::text(&r.rows_key).json(), body));
    }
    format!("{{\n{}\n}}", parts.join(",\n"))
}

/// Rows only when the report has a table, otherwise a single record.
fn render_csv(r: &Report) -> String {
    let join = |vals: Vec<String>| vals.join(",");
    if r.has_table() {
        let mut out = join(r.columns.iter().map(|c| Value::text(c).csv()).collect());
        for row in &r.rows {
            out.push('\n');
            out.push_str(&join(row.iter().map(Value::csv).collect()));
        }
        out
    } else {
        format!(
            "{}\n{}",
            join(r.fields.iter().map(|(k, _)| Value::text(k).csv()).collect()),
            join(r.fields.iter().map(|(_, v)| v.csv()).collect())
        )
    }
}
