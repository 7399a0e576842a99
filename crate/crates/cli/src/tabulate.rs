//! Batch tabulation of a CSV knot list.

use std::io::{Read, Write};
use std::panic::{self, AssertUnwindSafe};

use dln_core::linking::{self, ExtendedRational};
use rayon::prelude::*;

use crate::report::join_colors;
use crate::{coloring_classes, CliError, EXIT_FAILURE, EXIT_PARSE};

/// One input row: `name,braid[,determinant]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub braid: String,
    pub determinant: Option<u64>,
}

/// Values over all coloring classes of one knot, deduplicated and sorted
/// with `∞` last. `per_coloring` keeps each class's full multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabulationRow {
    pub name: String,
    pub p: u32,
    pub values: Vec<ExtendedRational>,
    pub per_coloring: Vec<(Vec<u32>, Vec<ExtendedRational>)>,
}

/// A row that could not be processed, with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowError {
    pub line: usize,
    pub name: String,
    pub message: String,
}

/// A parsed input row, or why it was rejected, with its line number.
pub type InputRow = (usize, Result<KnotRecord, RowError>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Csv,
    Text,
}

#[derive(Debug, Default)]
pub struct Tabulation {
    pub rows: Vec<TabulationRow>,
    pub errors: Vec<RowError>,
    /// Rows parsed and processed without error, colorable or not.
    pub processed: usize,
}

/// Reads the input table. Rows with the wrong shape or a bad determinant come
/// back as errors so the rest of the batch still runs.
pub fn read_records<R: Read>(input: R) -> Result<Vec<InputRow>, CliError> {
    let mut rdr = csv::ReaderBuilder::new()
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(input);
    let headers = rdr
        .headers()
        .map_err(|e| CliError::new(EXIT_PARSE, format!("cannot read header: {e}")))?
        .clone();
    let col = |want: &str| headers.iter().position(|h| h.eq_ignore_ascii_case(want));
    let (Some(name_col), Some(braid_col)) = (col("name"), col("braid")) else {
        return Err(CliError::new(
            EXIT_PARSE,
            "input header must contain name and braid columns",
        ));
    };
    let det_col = col("determinant");

    let mut out = Vec::new();
    for (idx, rec) in rdr.records().enumerate() {
        let line = idx + 2;
        let parsed = match rec {
            Err(e) => Err(RowError {
                line,
                name: String::new(),
                message: e.to_string(),
            }),
            Ok(rec) => parse_record(&rec, line, name_col, braid_col, det_col),
        };
        out.push((line, parsed));
    }
    Ok(out)
}

fn parse_record(
    rec: &csv::StringRecord,
    line: usize,
    name_col: usize,
    braid_col: usize,
    det_col: Option<usize>,
) -> Result<KnotRecord, RowError> {
    let name = rec.get(name_col).unwrap_or("").to_string();
    let err = |message: String| RowError {
        line,
        name: name.clone(),
        message,
    };
    if name.is_empty() {
        return Err(err("empty name".into()));
    }
    let braid = rec
        .get(braid_col)
        .filter(|b| !b.is_empty())
        .ok_or_else(|| err("missing braid word".into()))?
        .to_string();
    let determinant = match det_col.and_then(|c| rec.get(c)).filter(|s| !s.is_empty()) {
        None => None,
        Some(s) => match s.parse::<u64>() {
            Ok(d) if d > 0 => Some(d),
            _ => return Err(err(format!("bad determinant {s:?}"))),
        },
    };
    Ok(KnotRecord {
        name,
        braid,
        determinant,
    })
}

/// `None` when the knot has no nontrivial p-coloring.
pub fn tabulate_record(rec: &KnotRecord, p: u32) -> dln_core::Result<Option<TabulationRow>> {
    let d = dln_core::knot::diagram_from_braid(&rec.braid)?;
    let classes = coloring_classes(&d, p)?;
    if classes.is_empty() {
        return Ok(None);
    }
    let mut per_coloring = Vec::with_capacity(classes.len());
    let mut values = Vec::new();
    for c in &classes {
        let r = linking::dln(&d, c)?;
        values.extend(r.multiset.iter().cloned());
        per_coloring.push((c.colors().to_vec(), r.multiset));
    }
    values.sort();
    values.dedup();
    Ok(Some(TabulationRow {
        name: rec.name.clone(),
        p,
        values,
        per_coloring,
    }))
}

fn guarded(rec: &KnotRecord, p: u32) -> Result<Option<TabulationRow>, String> {
    match panic::catch_unwind(AssertUnwindSafe(|| tabulate_record(rec, p))) {
        Ok(r) => r.map_err(|e| e.to_string()),
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "internal error".into());
            Err(format!("internal error: {msg}"))
        }
    }
}

/// Processes every record on a pool of `jobs` threads. Output order follows
/// input order whatever the pool size.
pub fn tabulate(records: Vec<InputRow>, p: u32, jobs: usize) -> Result<Tabulation, CliError> {
    dln_core::coloring::check_p(p)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::new(EXIT_FAILURE, e.to_string()))?;
    let results: Vec<Result<Option<TabulationRow>, RowError>> = pool.install(|| {
        records
            .into_par_iter()
            .map(|(line, rec)| {
                let rec = rec?;
                guarded(&rec, p).map_err(|message| RowError {
                    line,
                    name: rec.name.clone(),
                    message,
                })
            })
            .collect()
    });

    let mut t = Tabulation::default();
    for r in results {
        match r {
            Ok(row) => {
                t.processed += 1;
                t.rows.extend(row);
            }
            Err(e) => t.errors.push(e),
        }
    }
    Ok(t)
}

pub fn values_string(values: &[ExtendedRational]) -> String {
    linking::join(values)
}

/// Inverse of [`values_string`].
pub fn parse_values(text: &str) -> dln_core::Result<Vec<ExtendedRational>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<ExtendedRational>()
                .map_err(|_| dln_core::Error::BadToken(t.to_string()))
        })
        .collect()
}

fn per_coloring_string(row: &TabulationRow) -> String {
    row.per_coloring
        .iter()
        .map(|(colors, m)| format!("{}: {}", join_colors(colors), values_string(m)))
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn write_table<W: Write>(
    out: W,
    rows: &[TabulationRow],
    format: TableFormat,
    per_coloring: bool,
) -> std::io::Result<()> {
    match format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header = vec!["name", "p", "values"];
            if per_coloring {
                header.push("per_coloring");
            }
            w.write_record(&header)?;
            for row in rows {
                let mut rec = vec![
                    row.name.clone(),
                    row.p.to_string(),
                    values_string(&row.values),
                ];
                if per_coloring {
                    rec.push(per_coloring_string(row));
                }
                w.write_record(&rec)?;
            }
            w.flush()
        }
        TableFormat::Text => {
            let mut out = out;
            let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
            for row in rows {
                writeln!(out, "{:<width$} | {}", row.name, values_string(&row.values))?;
                if per_coloring {
                    for (colors, m) in &row.per_coloring {
                        writeln!(
                            out,
                            "{:<width$} |   {}: {}",
                            "",
                            join_colors(colors),
                            values_string(m)
                        )?;
                    }
                }
            }
            out.flush()
        }
    }
}

pub fn write_errors<W: Write>(mut out: W, errors: &[RowError]) -> std::io::Result<()> {
    for e in errors {
        writeln!(out, "line {} ({}): {}", e.line, e.name, e.message)?;
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn records(text: &str) -> Vec<InputRow> {
        read_records(text.as_bytes()).unwrap()
    }

    #[test]
    fn reads_optional_determinant() {
        let r = records("name,braid,determinant\n4_1,1 -2 1 -2,5\n3_1,1 1 1,\n");
        assert_eq!(r[0].1.as_ref().unwrap().determinant, Some(5));
        assert_eq!(r[1].1.as_ref().unwrap().determinant, None);
        let r = records("name,braid\n3_1,1 1 1\n");
        assert_eq!(r[0].1.as_ref().unwrap().braid, "1 1 1");
        assert!(read_records("knot,word\n".as_bytes()).is_err());
    }

    #[test]
    fn bad_rows_are_reported_not_fatal() {
        let r = records(
            "name,braid,determinant\nx,1 q 1,3\n4_1,1 -2 1 -2,5\ny,,3\nz,1 1 1,-3\nu,1 1 1 1,\n",
        );
        let t = tabulate(r, 5, 2).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[0].name, "4_1");
        let lines: Vec<usize> = t.errors.iter().map(|e| e.line).collect();
        assert_eq!(lines, vec![2, 4, 5, 6]);
        assert_eq!(t.processed, 1);
    }

    #[test]
    fn figure_eight_row() {
        let rec = KnotRecord {
            name: "4_1".into(),
            braid: "1 -2 1 -2".into(),
            determinant: Some(5),
        };
        let row = tabulate_record(&rec, 5).unwrap().unwrap();
        assert_eq!(values_string(&row.values), "-2, 0, 2");
        assert!(tabulate_record(&rec, 3).unwrap().is_none());
    }

    #[test]
    fn values_round_trip() {
        let v = parse_values("-18/5, 2/5, inf").unwrap();
        assert_eq!(values_string(&v), "-18/5, 2/5, inf");
        assert!(!v[2].is_finite());
        assert!(parse_values("1/0").is_err());
    }

    #[test]
    fn unsupported_p_is_fatal() {
        assert_eq!(
            tabulate(Vec::new(), 4, 1).unwrap_err().code,
            crate::EXIT_UNSUPPORTED_P
        );
    }
}
