use std::io::Write;

use super::args::Format;
use super::CliError;

pub const SCHEMA_VERSION: i64 = 1;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    F(f64),
    I(i64),
    S(String),
    B(bool),
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::F(v)
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::I(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::S(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::S(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::B(v)
    }
}

// Shortest decimal that round-trips, same text in both formats.
fn number(x: f64) -> String {
    if x.is_finite() {
        serde_json::to_string(&x).expect("finite f64 serializes")
    } else if x.is_nan() {
        "NaN".into()
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

impl Value {
    fn json(&self) -> String {
        match self {
            Value::F(x) if x.is_finite() => number(*x),
            Value::F(x) => serde_json::to_string(&number(*x)).unwrap(),
            Value::I(i) => i.to_string(),
            Value::S(s) => serde_json::to_string(s).unwrap(),
            Value::B(b) => b.to_string(),
        }
    }

    fn csv(&self) -> String {
        match self {
            Value::F(x) => number(*x),
            Value::I(i) => i.to_string(),
            Value::S(s) => s.clone(),
            Value::B(b) => b.to_string(),
        }
    }
}

/// Record stream with the fixed `{schema_version, command, hbar, mass}`
/// prefix on every record.
pub struct Emitter<'w> {
    format: Format,
    command: &'static str,
    hbar: f64,
    mass: f64,
    columns: Vec<&'static str>,
    json: Option<&'w mut dyn Write>,
    csv: Option<csv::Writer<&'w mut dyn Write>>,
}

impl<'w> Emitter<'w> {
    pub fn new(
        sink: &'w mut dyn Write,
        format: Format,
        command: &'static str,
        hbar: f64,
        mass: f64,
        columns: &[&'static str],
    ) -> Result<Self, CliError> {
        let mut e = Emitter {
            format,
            command,
            hbar,
            mass,
            columns: columns.to_vec(),
            json: None,
            csv: None,
        };
        match format {
            Format::Json => {
                let cols: Vec<String> = columns.iter().map(|c| serde_json::to_string(c).unwrap()).collect();
                writeln!(
                    sink,
                    "{{\"schema_version\":{SCHEMA_VERSION},\"command\":\"{command}\",\"hbar\":{},\"mass\":{},\"record\":\"header\",\"columns\":[{}]}}",
                    number(hbar),
                    number(mass),
                    cols.join(",")
                )
                .map_err(io)?;
                e.json = Some(sink);
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().from_writer(sink);
                let mut head = vec!["schema_version", "command", "hbar", "mass"];
                head.extend_from_slice(columns);
                w.write_record(&head).map_err(|e| CliError::Io(e.to_string()))?;
                e.csv = Some(w);
            }
        }
        Ok(e)
    }

    pub fn record(&mut self, values: Vec<Value>) -> Result<(), CliError> {
        assert_eq!(values.len(), self.columns.len(), "record width");
        match self.format {
            Format::Json => {
                let mut s = format!(
                    "{{\"schema_version\":{SCHEMA_VERSION},\"command\":\"{}\",\"hbar\":{},\"mass\":{}",
                    self.command,
                    number(self.hbar),
                    number(self.mass)
                );
                for (c, v) in self.columns.iter().zip(&values) {
                    s.push_str(&format!(",\"{c}\":{}", v.json()));
                }
                s.push('}');
                writeln!(self.json.as_mut().unwrap(), "{s}").map_err(io)
            }
            Format::Csv => {
                let mut row = vec![
                    SCHEMA_VERSION.to_string(),
                    self.command.to_string(),
                    number(self.hbar),
                    number(self.mass),
                ];
                row.extend(values.iter().map(Value::csv));
                self.csv
                    .as_mut()
                    .unwrap()
                    .write_record(&row)
                    .map_err(|e| CliError::Io(e.to_string()))
            }
        }
    }

    pub fn finish(mut self) -> Result<(), CliError> {
        if let Some(w) = self.csv.as_mut() {
            w.flush().map_err(io)?;
        }
        if let Some(w) = self.json.as_mut() {
            w.flush().map_err(io)?;
        }
        Ok(())
    }
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io(e.to_string())
}
