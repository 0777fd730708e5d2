//! Optimal quaternary sequences of odd length and the objects equivalent to
//! them: generalized optimal binary arrays and sequences, quasi-orthogonal
//! cocycles over Z2 x Zm, and almost supplementary difference sets.
//!
//! Everything is exact integer arithmetic. The modules build on each other:
//!
//! - [`seqcore`]: periodic, cross and negaperiodic correlation; OQS predicate
//! - [`arrays`]: s-arrays, type-vector expansion, GPBA/GOBA/GOBS predicates
//! - [`transforms`]: quaternary ↔ (2,m)-array ↔ length-2m sequence maps
//! - [`cocycles`]: coboundaries, the λ cocycle, cocyclic matrices, row excess
//! - [`asds`]: difference counts, classification, Gram and amicability checks
//! - [`search`]: exhaustive (parallel) enumeration
//! - [`cli`]: the `optseq` command line

pub mod arrays;
pub mod asds;
pub mod cli;
pub mod cocycles;
pub mod error;
pub mod group;
pub mod search;
pub mod seqcore;
pub mod transforms;

pub use error::{Error, Result};
pub use seqcore::{BinarySeq, GaussianInt, QuaternarySeq};
