//! Dual characters of flagged Weyl modules of diagrams.
//!
//! The crate computes `chi_D` exactly for any diagram `D`, specializes it to
//! Schubert polynomials (Rothe diagrams) and key polynomials (skyline
//! diagrams), and sweeps families of diagrams to check lower and upper
//! bounds on the principal specialization `chi_D(1, ..., 1)`.

pub mod diagram;
pub mod error;
pub mod linalg;
pub mod pattern;
pub mod perm;
pub mod poly;
pub mod schubert;
pub mod verify;
pub mod weyl;

pub use diagram::{column_leq, Cell, ColumnSet, Diagram, UnstablePair, DEFAULT_ENUMERATION_CAP};
pub use error::{Error, ParseError, Result};
pub use pattern::{contains_pattern, CellRule, PatternGrid};
pub use perm::{Composition, Permutation};
pub use poly::{invlex_less, Monomial, SparsePolynomial};
pub use schubert::{key, macdonald_specialization, reduced_words, schubert};
pub use weyl::{
    character_support, coefficient_rank, column_determinant, determinant_product, dual_character, YMonomial,
    YPolynomial,
};
