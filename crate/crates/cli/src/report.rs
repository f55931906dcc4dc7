use std::io::{self, Write};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use qconv::sim::{Fit, TrialReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Text,
    Human,
}

/// Flat record; column order is part of the output format.
#[derive(Serialize)]
struct Row<'a> {
    code: &'a str,
    decoder: &'a str,
    p: f64,
    trials: u64,
    failures: u64,
    detected: u64,
    rate: f64,
    rate_per_qubit: f64,
    c: f64,
    c_lo: f64,
    c_hi: f64,
    seed: u64,
}

impl<'a> From<&'a TrialReport> for Row<'a> {
    fn from(r: &'a TrialReport) -> Row<'a> {
        Row {
            code: &r.code,
            decoder: r.decoder.id(),
            p: r.p,
            trials: r.trials,
            failures: r.failures,
            detected: r.detected,
            rate: r.rate,
            rate_per_qubit: r.rate_per_qubit,
            c: r.c,
            c_lo: r.c_lo,
            c_hi: r.c_hi,
            seed: r.seed,
        }
    }
}

#[derive(Serialize)]
struct FitRecord<'a> {
    code: &'a str,
    #[serde(flatten)]
    fit: Fit,
}

/// Writes reports to stdout as they complete, flushing after each one.
pub struct ReportWriter {
    format: Format,
    csv: Option<csv::Writer<io::Stdout>>,
    started: bool,
}

impl ReportWriter {
    pub fn new(format: Format) -> ReportWriter {
        let csv = (format == Format::Csv).then(|| csv::Writer::from_writer(io::stdout()));
        ReportWriter {
            format,
            csv,
            started: false,
        }
    }

    fn header(&mut self) -> io::Result<()> {
        if !self.started {
            self.started = true;
            if self.format != Format::Human {
                let mut out = io::stdout().lock();
                writeln!(out, "# qconv {}", env!("CARGO_PKG_VERSION"))?;
            }
        }
        Ok(())
    }

    pub fn report(&mut self, r: &TrialReport) -> io::Result<()> {
        self.header()?;
        match self.format {
            Format::Csv => {
                let w = self.csv.as_mut().expect("csv writer");
                w.serialize(Row::from(r))?;
                w.flush()?;
            }
            Format::Text => {
                let body = toml::to_string(&Row::from(r)).map_err(io::Error::other)?;
                let mut out = io::stdout().lock();
                writeln!(out, "[[report]]\n{body}")?;
                out.flush()?;
            }
            Format::Human => {
                let mut out = io::stdout().lock();
                writeln!(
                    out,
                    "{} ({}) p={}: {}/{} failed, {} detected, c = {:.3} [{:.3}, {:.3}]",
                    r.code, r.decoder, r.p, r.failures, r.trials, r.detected, r.c, r.c_lo, r.c_hi
                )?;
                out.flush()?;
            }
        }
        Ok(())
    }

    pub fn fit(&mut self, code: &str, fit: Option<Fit>) -> io::Result<()> {
        self.header()?;
        let mut out = io::stdout().lock();
        match (self.format, fit) {
            (_, None) => writeln!(out, "# fit {code}: not enough points with failures")?,
            (Format::Text, Some(fit)) => {
                let body = toml::to_string(&FitRecord { code, fit }).map_err(io::Error::other)?;
                writeln!(out, "[[fit]]\n{body}")?;
            }
            (_, Some(fit)) => writeln!(
                out,
                "# fit {code}: slope {:.4}, coefficient {:.4} over {} points",
                fit.slope, fit.coefficient, fit.points
            )?,
        }
        out.flush()
    }
}
