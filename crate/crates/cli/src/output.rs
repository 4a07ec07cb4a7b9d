use std::io::Write;

use anyhow::{bail, Result};
use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// CSV for tabular commands, JSON otherwise.
    Auto,
    Json,
    Csv,
}

/// Result of one command. Nothing time-dependent goes into the payload.
pub struct Report {
    pub command: &'static str,
    pub json: Value,
    pub table: Option<Table>,
    pub prefer_table: bool,
    /// False when a check ran and failed; the report is still printed.
    pub passed: bool,
    /// Single-line note for stderr on failure.
    pub failure: Option<String>,
}

pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn write_csv(&self, out: &mut impl Write) -> std::io::Result<()> {
        writeln!(out, "{}", self.header.join(","))?;
        for row in &self.rows {
            writeln!(out, "{}", row.join(","))?;
        }
        Ok(())
    }
}

impl Report {
    pub fn json(command: &'static str, json: Value) -> Self {
        Report {
            command,
            json,
            table: None,
            prefer_table: false,
            passed: true,
            failure: None,
        }
    }

    pub fn tabular(command: &'static str, json: Value, table: Table) -> Self {
        Report {
            command,
            json,
            table: Some(table),
            prefer_table: true,
            passed: true,
            failure: None,
        }
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn failed(mut self, why: String) -> Self {
        self.passed = false;
        self.failure = Some(why);
        self
    }

    /// Writes the report to stdout; returns whether the command's checks
    /// passed.
    pub fn emit(self, format: Format) -> Result<bool> {
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        let csv = match format {
            Format::Csv => true,
            Format::Json => false,
            Format::Auto => self.prefer_table,
        };
        if csv {
            let Some(t) = &self.table else {
                bail!("`{}` has no CSV output", self.command);
            };
            t.write_csv(&mut out)?;
        } else {
            serde_json::to_writer_pretty(&mut out, &self.json)?;
            writeln!(out)?;
        }
        if let Some(why) = &self.failure {
            eprintln!("{}: {why}", self.command);
        }
        Ok(self.passed)
    }
}
