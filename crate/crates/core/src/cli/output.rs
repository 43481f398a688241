//! Deterministic JSON and CSV rendering.

use serde::Serialize;
use serde_json::{Map, Value};

/// Number formatting policy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    /// Six decimals, fixed.
    Fixed6,
    /// Shortest round-trip representation.
    Full,
}

impl Precision {
    pub fn float(self, x: f64) -> String {
        if !x.is_finite() {
            return if x.is_nan() {
                "NaN".into()
            } else if x > 0.0 {
                "inf".into()
            } else {
                "-inf".into()
            };
        }
        match self {
            Precision::Fixed6 => {
                let s = format!("{x:.6}");
                if s == "-0.000000" {
                    "0.000000".into()
                } else {
                    s
                }
            }
            Precision::Full => {
                serde_json::Number::from_f64(x).map_or_else(|| x.to_string(), |n| n.to_string())
            }
        }
    }
}

/// Top-level document written by every command.
#[derive(Debug, Clone)]
pub struct Envelope {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub version: &'static str,
}

impl Envelope {
    pub fn new(command: &str, inputs: impl Serialize, results: Value) -> Self {
        Self {
            command: command.to_string(),
            inputs: serde_json::to_value(inputs).unwrap_or(Value::Null),
            results,
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn to_json(&self, precision: Precision) -> String {
        let mut doc = Map::new();
        doc.insert("command".into(), Value::String(self.command.clone()));
        doc.insert("inputs".into(), self.inputs.clone());
        doc.insert("results".into(), self.results.clone());
        doc.insert("version".into(), Value::String(self.version.into()));
        let mut out = String::new();
        write_value(&mut out, &Value::Object(doc), precision, 0);
        out.push('\n');
        out
    }
}

fn write_value(out: &mut String, v: &Value, precision: Precision, depth: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => match (n.as_i64(), n.as_u64(), n.as_f64()) {
            (Some(i), _, _) if !n.is_f64() => out.push_str(&i.to_string()),
            (_, Some(u), _) if !n.is_f64() => out.push_str(&u.to_string()),
            (_, _, Some(f)) => out.push_str(&precision.float(f)),
            _ => out.push_str(&n.to_string()),
        },
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            // arrays of scalars stay on one line
            if items.iter().all(|x| !x.is_array() && !x.is_object()) {
                out.push('[');
                for (i, x) in items.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    write_value(out, x, precision, depth);
                }
                out.push(']');
                return;
            }
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(out, x, precision, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, precision, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
    }
}

/// A CSV cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Empty,
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::Text(x.to_string())
    }
}

impl From<String> for Cell {
    fn from(x: String) -> Self {
        Cell::Text(x)
    }
}

impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::Text(x.to_string())
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Num)
    }
}

/// Rectangular view of a command's results for `--format csv`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Self {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        self.rows.push(row);
    }

    pub fn to_csv(&self, precision: Precision) -> String {
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Num(x) => precision.float(*x),
                    Cell::Int(i) => i.to_string(),
                    Cell::Text(s) => s.clone(),
                    Cell::Empty => String::new(),
                })
                .collect();
            w.write_record(&cells).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn fixed_formatting() {
        assert_eq!(Precision::Fixed6.float(0.75), "0.750000");
        assert_eq!(Precision::Fixed6.float(-1e-9), "0.000000");
        assert_eq!(Precision::Full.float(0.1), "0.1");
        assert_eq!(Precision::Fixed6.float(f64::INFINITY), "inf");
    }

    #[test]
    fn json_layout_is_stable() {
        let env = Envelope::new(
            "x",
            json!({"b": 1, "a": 2.5}),
            json!({"v": [1.0, 2.0], "rows": [{"k": 3}]}),
        );
        let text = env.to_json(Precision::Fixed6);
        assert!(text.contains("\"b\": 1,\n    \"a\": 2.500000"));
        assert!(text.contains("\"v\": [1.000000, 2.000000]"));
        let parsed: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed["results"]["rows"][0]["k"], 3);
    }

    #[test]
    fn csv_rendering() {
        let mut t = Table::new(&["y", "label"]);
        t.push(vec![Cell::Num(1.0), "a,b".into()]);
        t.push(vec![Cell::Empty, Cell::Int(3)]);
        assert_eq!(
            t.to_csv(Precision::Fixed6),
            "y,label\n1.000000,\"a,b\"\n,3\n"
        );
    }
}
