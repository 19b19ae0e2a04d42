//! Classical Galois theory by computation: factorization over Q and over
//! simple extensions, tensor-product splitting, finite rational group
//! actions, Hopf comorphisms, and linear disjointness probes.

mod disjoint;
mod factor;
mod hopf;
mod numberfield;
mod poly;
mod ratmap;
mod split;
mod zassenhaus;

pub use disjoint::{linear_disjointness_probe, product_family, DisjointnessReport};
pub use factor::{extend_field, factor_ext, factor_q, poly_over, qpoly, Factorization};
pub use hopf::{hopf_comorphisms, verify_hopf_axioms, HopfImages};
pub use numberfield::{fmt_poly, El, FieldH, NumberField};
pub use poly::{resultant, Coef, Poly};
pub use ratmap::{
    generating_invariant_check, verify_group, FiniteRationalGroup, GroupReport, InvariantReport,
    RatMap,
};
pub use split::{cubic_discriminant, difference_quotient, is_galois, split_tensor, SplitResult};

use std::fmt;

/// Errors out of the Galois layer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GaloisError {
    /// A claimed group fails closure, identity, or inverses.
    NotAGroup(String),
    /// A comorphism rewriting does not exist.
    NotExpressible(String),
    /// A minimal polynomial failed its irreducibility check.
    Reducible(String),
    BadInput(String),
}

impl fmt::Display for GaloisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaloisError::NotAGroup(m) => write!(f, "not a group: {m}"),
            GaloisError::NotExpressible(m) => write!(f, "not expressible: {m}"),
            GaloisError::Reducible(m) => write!(f, "reducible: {m}"),
            GaloisError::BadInput(m) => write!(f, "bad input: {m}"),
        }
    }
}

impl std::error::Error for GaloisError {}
