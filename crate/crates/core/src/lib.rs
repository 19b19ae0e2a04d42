//! Exact-arithmetic calculus on jet spaces: prolongations, Spencer operator,
//! algebroid brackets, distributions and their invariants, and tensor-product
//! splitting of field extensions, together with a registry of reproducible
//! scenarios exercising all of it.

pub mod dist;
pub mod expr;
pub mod fieldops;
pub mod fileio;
pub mod galois;
pub mod jets;
pub mod linalg;
pub mod mpoly;
pub mod rat;
pub mod ratfunc;
pub mod scenarios;

pub use expr::{parse_expr, parse_expr_with, ParseError};
pub use linalg::{determinant, generic_rank, in_span, solve_linear, LinearOutcome, Matrix, RankResult};
pub use mpoly::{mpoly_gcd, squarefree_part, MPoly, Mono, Var};
pub use rat::{rat, rint, Rat};
pub use ratfunc::{ExactError, RatFunc};
