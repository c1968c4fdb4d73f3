//! Extended perfect binary codes built from check sums over GF(2^m), the partition of the
//! odd-weight words into extended Hamming codes, product codes `∪ C_l × C_π(l)`, and
//! exhaustive analysis of their components, switchings and perfect colorings.

pub mod codes;
pub mod coloring;
pub mod components;
pub mod error;
pub mod gf;
pub mod io;
pub mod linalg;
pub mod partition;
pub mod product;
pub mod report;
pub mod suite;
pub mod word;

pub use error::{Counterexample, Error, Result};
pub use gf::{make_field, Coord, Elem, Field};
pub use report::{CheckRecord, Report, Status};
pub use suite::{run_all, RunConfig};
pub use word::{Code, Word};
