//! Exact-arithmetic toolkit for polyhedral surrogate losses.
//!
//! Everything here runs on arbitrary-precision rationals: the simplex
//! solver, polyhedral queries, discrete-loss structure (Bayes risks,
//! level sets, trim), surrogate analysis (representative sets, optimal
//! sets), embedding construction and verification, thickened-link
//! construction, and regret-transfer constants. There is no floating
//! point in any decision path.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the CLI
//! live in the companion `polylink-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod discrete;
pub mod embedding;
pub mod link;
pub mod lp;
pub mod polyhedron;
pub mod rat;
pub mod regret;
pub mod sample;
pub mod surrogate;
pub mod zoo;

pub use discrete::{DiscreteLoss, LevelSet, SimplexComplex};
pub use link::{ConsistencyVerdict, LinkArtifact};
pub use lp::{lp_solve, LpOutcome, Sense};
pub use polyhedron::Polyhedron;
pub use rat::Rat;
pub use surrogate::{OptimalSetFamily, PolyhedralLoss};
