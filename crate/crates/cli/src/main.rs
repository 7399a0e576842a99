use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dln_cli::report::{write_report, ColoringReport, DlnFormat, KnotReport};
use dln_cli::tabulate::{self, TableFormat};
use dln_cli::{coloring_classes, CliError, KnotInput, EXIT_FAILURE, EXIT_PARSE};
use dln_core::coloring::{self, Coloring};
use dln_core::linking;

#[derive(Parser)]
#[command(
    name = "dln",
    version,
    about = "Dihedral linking invariants of Fox-colored knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List coloring classes, one canonical representative per line.
    Colorings {
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        knot: KnotArgs,
    },
    /// Linking matrix and multiset for each coloring class, or for one coloring.
    Dln {
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        knot: KnotArgs,
        /// Comma-separated residues, one per arc.
        #[arg(long)]
        coloring: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: DlnFormat,
        /// Negate every crossing sign first.
        #[arg(long)]
        mirror: bool,
        /// Name used in the report; defaults to the knot input.
        #[arg(long)]
        name: Option<String>,
    },
    /// Tabulate a CSV with header name,braid[,determinant].
    Tabulate {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also emit each coloring class's full multiset.
        #[arg(long)]
        per_coloring: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = true)]
struct KnotArgs {
    /// Braid word, e.g. "1 -2 1 -2".
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["overstrands", "signs"])]
    braid: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "signs")]
    overstrands: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "overstrands")]
    signs: Option<String>,
}

impl KnotArgs {
    fn input(self) -> KnotInput {
        match (self.braid, self.overstrands, self.signs) {
            (Some(b), _, _) => KnotInput::Braid(b),
            (None, Some(o), Some(s)) => KnotInput::Lists {
                overstrands: o,
                signs: s,
            },
            _ => unreachable!("clap enforces a complete knot input"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Colorings { p, knot } => {
            coloring::check_p(p)?;
            let d = knot.input().diagram()?;
            let mut out = io::stdout().lock();
            for c in coloring_classes(&d, p)? {
                writeln!(out, "{c}")?;
            }
            Ok(())
        }
        Command::Dln {
            p,
            knot,
            coloring,
            format,
            mirror,
            name,
        } => {
            coloring::check_p(p)?;
            let input = knot.input();
            let mut d = input.diagram()?;
            if mirror {
                d = d.mirror();
            }
            let colorings = match coloring {
                Some(text) => vec![Coloring::new(&d, p, coloring::parse_colors(&text)?)?],
                None => coloring_classes(&d, p)?,
            };
            let mut reports = Vec::with_capacity(colorings.len());
            for c in &colorings {
                let r = linking::dln(&d, c)?;
                reports.push(ColoringReport::new(c, &r));
            }
            let report = KnotReport {
                name: name.unwrap_or_else(|| input.label()),
                p,
                colorings: reports,
            };
            let mut out = io::stdout().lock();
            write_report(&mut out, &report, format)?;
            Ok(())
        }
        Command::Tabulate {
            p,
            input,
            output,
            format,
            jobs,
            per_coloring,
        } => {
            coloring::check_p(p)?;
            let file = File::open(&input)
                .map_err(|e| CliError::new(EXIT_PARSE, format!("{}: {e}", input.display())))?;
            let records = tabulate::read_records(file)?;
            let total = records.len();
            let t = tabulate::tabulate(records, p, jobs)?;

            let out = BufWriter::new(File::create(&output)?);
            tabulate::write_table(out, &t.rows, format, per_coloring)?;
            let mut log = output.clone().into_os_string();
            log.push(".errors");
            tabulate::write_errors(BufWriter::new(File::create(&log)?), &t.errors)?;

            if !t.errors.is_empty() {
                eprintln!(
                    "{} of {total} rows failed, see {}",
                    t.errors.len(),
                    PathBuf::from(log).display()
                );
            }
            if total > 0 && t.processed == 0 {
                return Err(CliError::new(EXIT_FAILURE, "no rows could be processed"));
            }
            Ok(())
        }
    }
}
