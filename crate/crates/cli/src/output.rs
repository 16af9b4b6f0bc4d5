use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use anyhow::{Context, Result};
use clap::ValueEnum;
use fano35_core::{FixtureOutcome, Gate, Verdict};
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Serialize)]
pub struct Report {
    meta: Value,
    fixtures: Vec<FixtureOutcome>,
    gates: Vec<Gate>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    details: Option<Value>,
    refutations: usize,
    verdict: Verdict,
}

impl Report {
    pub fn new(
        mut meta: Value,
        fixtures: Vec<FixtureOutcome>,
        gates: Vec<Gate>,
        notes: Vec<String>,
        details: Option<Value>,
    ) -> Self {
        meta["tool"] = Value::from("fano35");
        meta["version"] = Value::from(env!("CARGO_PKG_VERSION"));
        meta["grid"] = Value::from("equally spaced over each validity interval, endpoints included");
        meta["approximations"] = Value::from("*_approx fields are truncated decimals for reading only");
        let refutations = fixtures.iter().filter(|f| !f.verdict.is_confirmed()).count()
            + gates.iter().filter(|g| !g.passed).count();
        Self {
            meta,
            fixtures,
            gates,
            notes,
            details,
            refutations,
            verdict: Verdict::from_bool(refutations == 0),
        }
    }

    pub fn refutations(&self) -> usize {
        self.refutations
    }

    pub fn render(&self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Json => serde_json::to_string_pretty(self)? + "\n",
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        })
    }

    fn csv(&self) -> String {
        let mut out = String::from("kind,id,paper_location,u,expected,computed,match,verdict\n");
        for f in &self.fixtures {
            for s in &f.samples {
                let _ = writeln!(
                    out,
                    "fixture,{},{},{},{},{},{},{}",
                    quote(&f.id),
                    quote(&f.paper_location),
                    quote(&s.u),
                    quote(&s.expected),
                    quote(&s.computed),
                    s.matches,
                    f.verdict
                );
            }
        }
        for g in &self.gates {
            let _ = writeln!(
                out,
                "gate,{},{},,{},{},{},{}",
                quote(&g.id),
                quote(&g.paper_location),
                quote(g.value.as_deref().unwrap_or("")),
                quote(&g.detail),
                g.passed,
                if g.passed { "confirmed" } else { "refuted" }
            );
        }
        out
    }

    fn text(&self) -> String {
        let mut out = String::new();
        for f in &self.fixtures {
            let _ = writeln!(out, "[{}] {} ({})", f.verdict, f.id, f.paper_location);
            if !f.verdict.is_confirmed() {
                for s in f.samples.iter().filter(|s| !s.matches).take(2) {
                    let _ = writeln!(out, "    u = {}: expected {}, computed {}", s.u, s.expected, s.computed);
                }
                if let Some(n) = &f.note {
                    let _ = writeln!(out, "    {n}");
                }
            }
        }
        for g in &self.gates {
            let _ = writeln!(
                out,
                "[{}] {} ({}): {}",
                if g.passed { "pass" } else { "FAIL" },
                g.id,
                g.paper_location,
                g.detail
            );
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        let _ = writeln!(out, "verdict: {} ({} refutations)", self.verdict, self.refutations);
        out
    }
}

pub fn quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}
