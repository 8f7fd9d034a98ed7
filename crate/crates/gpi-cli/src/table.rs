//! Tabular results and their JSON/CSV encodings.

use std::collections::BTreeMap;

use gpi::Complex64;
use serde_json::{json, Value as Json};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Num(f64),
    Complex(Complex64),
    Text(String),
    Bool(bool),
    Null,
}

// Adding +0.0 turns -0.0 into 0.0.
impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Num(x + 0.0)
    }
}

impl From<Complex64> for Value {
    fn from(z: Complex64) -> Self {
        Value::Complex(Complex64::new(z.re + 0.0, z.im + 0.0))
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Int(n as i64)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(o: Option<T>) -> Self {
        o.map_or(Value::Null, Into::into)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Self {
            name: name.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

// Non-finite floats are written as the strings `inf`, `-inf` and `NaN` in
// both encodings.
fn float_json(x: f64) -> Json {
    if x.is_finite() {
        json!(x)
    } else {
        json!(x.to_string())
    }
}

fn to_json(v: &Value) -> Json {
    match v {
        Value::Int(n) => json!(n),
        Value::Num(x) => float_json(*x),
        Value::Complex(z) => Json::Array(vec![float_json(z.re), float_json(z.im)]),
        Value::Text(s) => json!(s),
        Value::Bool(b) => json!(b),
        Value::Null => Json::Null,
    }
}

pub fn render_json(tables: &[Table]) -> String {
    let mut out = serde_json::Map::new();
    for t in tables {
        let rows: Vec<Json> = t
            .rows
            .iter()
            .map(|row| {
                let obj: BTreeMap<&str, Json> =
                    t.columns.iter().map(String::as_str).zip(row.iter().map(to_json)).collect();
                json!(obj)
            })
            .collect();
        out.insert(t.name.clone(), Json::Array(rows));
    }
    let mut s = serde_json::to_string_pretty(&Json::Object(out)).expect("JSON encoding");
    s.push('\n');
    s
}

fn complex_columns(t: &Table) -> Vec<bool> {
    (0..t.columns.len())
        .map(|j| t.rows.iter().any(|r| matches!(r[j], Value::Complex(_))))
        .collect()
}

fn csv_fields(v: &Value, complex: bool) -> Vec<String> {
    match v {
        Value::Int(n) => vec![n.to_string()],
        Value::Num(x) => vec![x.to_string()],
        Value::Complex(z) => vec![z.re.to_string(), z.im.to_string()],
        Value::Text(s) => vec![s.clone()],
        Value::Bool(b) => vec![b.to_string()],
        Value::Null if complex => vec![String::new(), String::new()],
        Value::Null => vec![String::new()],
    }
}

/// One `# name` line per table, then a header and the rows. Complex
/// columns split into `<name>_re` and `<name>_im`.
pub fn render_csv(tables: &[Table]) -> String {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for t in tables {
        w.write_record([format!("# {}", t.name)]).expect("in-memory write");
        let cx = complex_columns(t);
        let header: Vec<String> = t
            .columns
            .iter()
            .zip(&cx)
            .flat_map(|(c, &z)| {
                if z {
                    vec![format!("{c}_re"), format!("{c}_im")]
                } else {
                    vec![c.clone()]
                }
            })
            .collect();
        w.write_record(&header).expect("in-memory write");
        for row in &t.rows {
            let fields: Vec<String> = row.iter().zip(&cx).flat_map(|(v, &z)| csv_fields(v, z)).collect();
            w.write_record(&fields).expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV is UTF-8")
}

pub fn render(tables: &[Table], format: Format) -> String {
    match format {
        Format::Json => render_json(tables),
        Format::Csv => render_csv(tables),
    }
}
