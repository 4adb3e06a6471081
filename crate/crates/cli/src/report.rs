//! Result records printed at the end of every run.

use std::path::Path;

use serde_json::{json, Map, Value};

/// One run's outcome. `fields` holds the family-specific keys (`class`,
/// `colors`, `size`, ...); `lines` is the human-readable summary.
#[derive(Debug)]
pub struct Report {
    pub ok: bool,
    pub family: String,
    pub params: Map<String, Value>,
    pub fields: Map<String, Value>,
    pub construction: Option<String>,
    pub seed: Option<u64>,
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(family: &str) -> Self {
        Report {
            ok: true,
            family: family.to_string(),
            params: Map::new(),
            fields: Map::new(),
            construction: None,
            seed: None,
            lines: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), v.into());
        self
    }

    pub fn field(&mut self, key: &str, v: impl Into<Value>) {
        self.fields.insert(key.to_string(), v.into());
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn fail(&mut self, s: impl Into<String>) {
        self.ok = false;
        self.lines.push(s.into());
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("ok".into(), json!(self.ok));
        out.insert("family".into(), json!(self.family));
        out.insert("params".into(), Value::Object(self.params.clone()));
        for (k, v) in &self.fields {
            out.insert(k.clone(), v.clone());
        }
        out.insert("construction".into(), json!(self.construction));
        out.insert("seed".into(), json!(self.seed));
        if !self.ok {
            out.insert("detail".into(), json!(self.lines));
        }
        Value::Object(out)
    }

    pub fn print(&self, as_json: bool) {
        if as_json {
            println!("{}", self.to_json());
        } else {
            for l in &self.lines {
                eprintln!("{l}");
            }
            eprintln!("{}", if self.ok { "ok" } else { "FAILED" });
        }
    }
}

/// Writes an artifact to `out`, or to stdout when no path is given and the
/// run is not in JSON mode.
pub fn emit(out: Option<&Path>, as_json: bool, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| anyhow::anyhow!("cannot write {}: {e}", p.display())),
        None if !as_json => {
            print!("{text}");
            if !text.ends_with('\n') && !text.is_empty() {
                println!();
            }
            Ok(())
        }
        None => Ok(()),
    }
}
