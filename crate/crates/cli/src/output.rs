use std::fs;
use std::io::Write;

use anyhow::{Context, Result};
use clap::ValueEnum;
use serde_json::Value;

use crate::{usage, Common};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A command result: JSON always, a flat table when CSV makes sense.
pub struct Report {
    name: &'static str,
    json: Value,
    table: Option<(Vec<String>, Vec<Vec<String>>)>,
    ok: bool,
}

impl Report {
    pub fn new(name: &'static str, json: Value) -> Self {
        Report { name, json, table: None, ok: true }
    }

    pub fn table(mut self, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.table = Some((header.iter().map(|s| s.to_string()).collect(), rows));
        self
    }

    pub fn passing(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    fn render(&self, format: Format) -> Result<Vec<u8>> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_vec_pretty(&self.json)?;
                s.push(b'\n');
                Ok(s)
            }
            Format::Csv => {
                let (head, rows) = self.table.as_ref().ok_or_else(|| usage(format!("{} has no CSV form", self.name)))?;
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(head)?;
                for r in rows {
                    w.write_record(r)?;
                }
                Ok(w.into_inner().map_err(|e| anyhow::anyhow!(e.to_string()))?)
            }
        }
    }

    /// Write to `--out/<name>.<ext>` or stdout. Returns the pass flag.
    pub fn emit(self, common: &Common) -> Result<bool> {
        let bytes = self.render(common.format)?;
        match &common.out {
            Some(dir) => {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                let ext = match common.format {
                    Format::Json => "json",
                    Format::Csv => "csv",
                };
                let path = dir.join(format!("{}.{ext}", self.name));
                fs::write(&path, bytes).with_context(|| format!("writing {}", path.display()))?;
            }
            None => std::io::stdout().write_all(&bytes)?,
        }
        Ok(self.ok)
    }
}
