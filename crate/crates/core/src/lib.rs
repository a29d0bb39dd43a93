//! Exact combinatorics of Borel orbits attached to involutions of `S_n`.
//!
//! The crate covers rank-matrix orders on involutions (`<=*`, the Melnikov
//! order and Bruhat order), the explicit cover moves that generate `<=*`,
//! degeneration curves witnessing orbit closures over `Q(ε)`, orbit dimensions
//! via stabilizers, and the rank-plus-quadric variety containing each orbit
//! closure. Everything is exact: rationals, rational functions and prime
//! fields, never floating point.

pub mod closure;
pub mod error;
pub mod field;
pub mod matrix;
pub mod moves;
pub mod orbit;
pub mod perm;
pub mod poset;
pub mod rank;
pub mod verify;
pub mod ratfunc;

pub use error::{Error, Result};
pub use field::Q;
pub use closure::ZSpec;
pub use matrix::{Matrix, QMatrix};
pub use moves::{Move, MoveKind, NearSets};
pub use orbit::{Degeneration, Factor, RFMatrix, XiMap};
pub use perm::{enumerate_involutions, parse_involution, Arc, Involution, Permutation};
pub use poset::{build_poset, LSets, Poset};
pub use rank::{OrderKind, RankMatrix, RookMatrix};
pub use ratfunc::{Poly, RatFunc};
pub use verify::{run_suite, Suite, SuiteOptions, SuiteReport};
