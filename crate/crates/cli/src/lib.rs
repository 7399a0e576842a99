//! Command-line front end: single-knot queries, coloring listings and batch
//! tabulation over a CSV of braid words.

pub mod report;
pub mod tabulate;

use std::fmt;

use dln_core::coloring::{self, Coloring};
use dln_core::knot::{self, OrientedDiagram};
use dln_core::Error;

/// Exit status and message for a failed command.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNSUPPORTED_P: i32 = 3;
pub const EXIT_INVALID_COLORING: i32 = 4;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnsupportedP(_) => EXIT_UNSUPPORTED_P,
        Error::InvalidColoring(_) => EXIT_INVALID_COLORING,
        Error::EmptyWord
        | Error::ZeroLetter(_)
        | Error::BadToken(_)
        | Error::NotAKnot(_)
        | Error::OddLength(_)
        | Error::LengthMismatch { .. }
        | Error::RangeError(_) => EXIT_PARSE,
        _ => EXIT_FAILURE,
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self::new(exit_code(&e), e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::new(EXIT_FAILURE, e.to_string())
    }
}

/// A knot given either as a braid word or as overstrand and sign lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotInput {
    Braid(String),
    Lists { overstrands: String, signs: String },
}

impl KnotInput {
    /// Braid words of odd length are stabilized once so the diagram has an
    /// even number of crossings.
    pub fn diagram(&self) -> dln_core::Result<OrientedDiagram> {
        match self {
            Self::Braid(w) => knot::diagram_from_braid(w),
            Self::Lists { overstrands, signs } => knot::parse_lists(overstrands, signs),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Self::Braid(w) => w.trim().to_string(),
            Self::Lists { overstrands, .. } => format!("[{}]", overstrands.trim()),
        }
    }
}

/// Canonical representatives of the coloring classes of `d`.
pub fn coloring_classes(d: &OrientedDiagram, p: u32) -> dln_core::Result<Vec<Coloring>> {
    Ok(coloring::equivalence_classes(&coloring::fox_colorings(
        d, p,
    )?))
}
