//! Cellular automata whose local rules are invariant under permutations of
//! the neighborhood.
//!
//! The crate is split along the natural seams of the problem:
//!
//! - [`rule`]: symmetric rules, birth/survival notation, the black-white
//!   state swap, orbit counting and enumeration.
//! - [`lattice`]: finite k-regular cell graphs (wrapped Euclidean grids,
//!   Platonic solids, fullerenes, hyperbolic patches) and their topological
//!   checks.
//! - [`f2poly`]: rules as polynomials over GF(2) and exhaustive checking of
//!   implied relations.
//! - [`engine`]: synchronous evolution with a bit-sliced binary path.
//! - [`pattern`]: run-length pattern import and text grids.

pub mod engine;
pub mod f2poly;
pub mod lattice;
pub mod pattern;
pub mod rule;

pub use engine::{CaState, Census, Cycle};
pub use f2poly::{F2Poly, RelationTemplate};
pub use lattice::{Lattice, Surface, TilingClass};
pub use rule::{BsRule, Level, SymmetricRule};
