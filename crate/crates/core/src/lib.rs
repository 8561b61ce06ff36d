//! Fractional hedonic games: exact modelling, core/strict-core verification,
//! constructive solvers for tractable graph classes, and a catalogue of
//! benchmark instances and instance transformations.
//!
//! A fractional hedonic game assigns each player a valuation of every other
//! player; the utility of a coalition is the *average* valuation of its
//! members. All arithmetic is exact rational so that stability verdicts never
//! depend on floating-point rounding.
//!
//! The crate is organised as:
//!
//! * [`model`]: games, partitions, utilities, basic graph queries;
//! * [`stability`]: blocking-coalition search, core/strict-core verdicts,
//!   exhaustive enumeration, deviation walks;
//! * [`solvers`]: constructive partition builders for degree-2 graphs,
//!   forests, complete multipartite games, bipartite perfect matchings, and
//!   girth-5 graphs (star-packing local search);
//! * [`instances`]: named benchmark gadgets and instance transformations
//!   (subsidy elimination, grid-clique encoding, clique verification);
//! * [`io`]: text formats for games and partitions;
//! * [`cli`]: the `fhg` command-line front end.

pub mod cli;
pub mod instances;
pub mod io;
pub mod model;
pub mod rational;
pub mod solvers;
pub mod stability;

pub use model::{Game, Partition, TypeSpace};
pub use rational::Rat;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A caller violated an operation's contract (e.g. `i ∉ S`).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A solver or search precondition does not hold for the given input.
    #[error("{0}")]
    Unsupported(String),

    /// The graph is bipartite but admits no perfect matching, so the
    /// matching-based construction does not apply.
    #[error("no perfect matching exists")]
    NoPerfectMatching,

    /// Exhaustive enumeration was requested above the configured bound.
    #[error("player count {n} exceeds the exhaustive bound {bound}; use a budgeted search instead")]
    BoundExceeded { n: usize, bound: usize },

    /// Unknown gadget name.
    #[error("unknown gadget '{name}'; available: {available}")]
    UnknownGadget { name: String, available: String },

    /// Malformed input text.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
