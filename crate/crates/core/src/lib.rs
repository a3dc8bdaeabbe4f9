//! Triangles whose sides and medians are all integers.
//!
//! * [`arith`]: exact integers and rationals.
//! * [`construction`]: the two-parameter family, as a rational pipeline and
//!   as closed polynomial forms.
//! * [`triangle`]: verification, duality, normalization and similarity.
//! * [`search`]: exhaustive enumeration and coverage of the family.
//! * [`record`] and [`cli`]: JSON lines / CSV interchange and the command line.

pub mod arith;
pub mod cli;
pub mod construction;
pub mod error;
pub mod record;
pub mod search;
pub mod triangle;

pub use arith::{gcd, is_perfect_square, Integer, Rational};
pub use construction::{
    assemble_triangle, closed_form, compute_mn, compute_pq_rational, compute_tu, construct, integerize, Classification,
    ConstructionOutcome, ConstructionTrace, Parameters, Route,
};
pub use error::{Error, Result};
pub use search::{coverage, enumerate, CoverageReport, SearchBound};
pub use triangle::{dual, median_squares, normalize, similar, verify, MedianTriangle, Sextuple, VerificationReport};
