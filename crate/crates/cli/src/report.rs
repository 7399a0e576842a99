//! Rendering of single-knot results as text, csv or json.

use std::io::Write;

use dln_core::linking::DlnResult;
use dln_core::Coloring;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DlnFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Serialize)]
pub struct ColoringReport {
    pub colors: Vec<u32>,
    pub matrix: Vec<Vec<String>>,
    pub multiset: Vec<String>,
}

impl ColoringReport {
    pub fn new(c: &Coloring, r: &DlnResult) -> Self {
        Self {
            colors: c.colors().to_vec(),
            matrix: r.matrix_strings(),
            multiset: r.multiset.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct KnotReport {
    pub name: String,
    pub p: u32,
    pub colorings: Vec<ColoringReport>,
}

pub fn write_report<W: Write>(
    out: &mut W,
    report: &KnotReport,
    format: DlnFormat,
) -> std::io::Result<()> {
    match format {
        DlnFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)
        }
        DlnFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["colors", "j", "k", "lk"])?;
            for c in &report.colorings {
                let colors = join_colors(&c.colors);
                for (j, row) in c.matrix.iter().enumerate() {
                    for (k, v) in row.iter().enumerate() {
                        w.write_record([colors.as_str(), &j.to_string(), &k.to_string(), v])?;
                    }
                }
            }
            w.flush()
        }
        DlnFormat::Text => {
            writeln!(out, "{} p={}", report.name, report.p)?;
            if report.colorings.is_empty() {
                writeln!(out, "no nontrivial {}-colorings", report.p)?;
            }
            for c in &report.colorings {
                writeln!(out, "coloring {}", join_colors(&c.colors))?;
                write_matrix(out, &c.matrix)?;
                writeln!(out, "multiset: {}", c.multiset.join(", "))?;
            }
            Ok(())
        }
    }
}

fn write_matrix<W: Write>(out: &mut W, m: &[Vec<String>]) -> std::io::Result<()> {
    let width = m.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in m {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        writeln!(out, "  {}", cells.join(" "))?;
    }
    Ok(())
}

pub fn join_colors(colors: &[u32]) -> String {
    colors
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
