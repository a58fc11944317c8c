//! Output plumbing: exact numbers into JSON or CSV.
//!
//! Integers are emitted as JSON numbers (the arbitrary-precision feature
//! keeps them exact at any size); rationals are emitted as `"p/q"` strings,
//! or a bare decimal string when the denominator is 1. Keys are sorted, so
//! identical invocations produce identical bytes.

use cubecomp::{Int, Rational};
use num_traits::One;
use serde_json::{json, Value};

pub const SCHEMA: &str = "cubecomp/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// One command result: a JSON document and its CSV row rendering.
pub struct Output {
    pub json: Value,
    pub csv_header: String,
    pub csv_rows: Vec<String>,
}

impl Output {
    pub fn print(&self, format: Format) {
        match format {
            Format::Json => {
                let mut doc = json!({ "schema": SCHEMA });
                if let (Value::Object(doc), Value::Object(body)) = (&mut doc, &self.json) {
                    for (k, v) in body {
                        doc.insert(k.clone(), v.clone());
                    }
                }
                println!("{doc}");
            }
            Format::Csv => {
                println!("{}", self.csv_header);
                for row in &self.csv_rows {
                    println!("{row}");
                }
            }
        }
    }
}

pub fn json_int(x: &Int) -> Value {
    Value::Number(
        x.to_string()
            .parse()
            .expect("decimal integer parses as a JSON number"),
    )
}

pub fn rational_str(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn json_rational(x: &Rational) -> Value {
    Value::String(rational_str(x))
}
