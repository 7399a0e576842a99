//! Dihedral linking numbers of Fox p-colored knots.
//!
//! The pipeline runs from a knot diagram (a braid word or raw overstrand/sign
//! lists) through Fox colorings, per-arc configuration diagrams of the
//! irregular dihedral cover, exact rational 2-chain systems, and finally the
//! matrix of linking numbers between the branch curves `K^0, ..., K^q`.
//!
//! ```
//! use dln_core::{knot, coloring, linking};
//!
//! let word = knot::parse_braid("1 -2 1 -2").unwrap();
//! let diagram = knot::braid_closure(&knot::ensure_even(word)).unwrap();
//! let classes = coloring::equivalence_classes(&coloring::fox_colorings(&diagram, 5).unwrap());
//! let result = linking::dln(&diagram, &classes[0]).unwrap();
//! assert_eq!(result.multiset_string(), "-2, 0, 2");
//! ```

pub mod chains;
pub mod coloring;
pub mod cover;
mod error;
pub mod knot;
pub mod linking;
pub mod modp;

pub use chains::{ChainSolution, LinearSystem, Rational, SolveStatus};
pub use coloring::Coloring;
pub use cover::{Arrow, CoefficientTable, ConfigurationDiagram, CrossingCoefficients};
pub use error::{Error, Result};
pub use knot::{BraidWord, OrientedDiagram};
pub use linking::{DlnResult, ExtendedRational};
