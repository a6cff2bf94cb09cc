//! Exact computations with the non-repeating intersection invariants of
//! Whitney towers.
//!
//! * [`tree`]: decorated unitrivalent trees, their formal sums, canonical
//!   coordinates in the groups `Λ_n(π,m)`, and the surface operations.
//! * [`lie`]: the reduced free Lie algebra and the maps `η^i` from trees.
//! * [`milnor`]: Magnus expansions of longitudes and Milnor invariants.
//! * [`indeterminacy`]: the INT subgroups and the quadratic INT₂ image.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod group;
pub mod indeterminacy;
pub mod lattice;
pub mod lie;
pub mod linear;
pub mod milnor;
pub mod parse;
pub mod tree;

use thiserror::Error;

pub use group::{GroupElement, GroupKind, GroupRingElement};
pub use parse::ParseError;

/// Any failure surfaced by the library.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Tree(#[from] tree::TreeError),
    #[error(transparent)]
    Lie(#[from] lie::LieError),
    #[error(transparent)]
    Milnor(#[from] milnor::MilnorError),
    #[error(transparent)]
    Int(#[from] indeterminacy::IntError),
}

impl Error {
    /// The name of the error variant, as printed by the command line.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::Tree(e) => e.name(),
            Error::Lie(e) => e.name(),
            Error::Milnor(e) => e.name(),
            Error::Int(e) => e.name(),
        }
    }
}
