//! Exact combinatorics of type-B derangements.
//!
//! The crate computes the derangement polynomial of the hyperoctahedral group,
//! its symmetric decomposition into `f⁺` and `f⁻`, the half Eulerian
//! polynomials, and the local h-polynomial of the cubical barycentric
//! subdivision `K_n`, cross-checking every value along independent paths.
//!
//! Modules, bottom-up:
//!
//! - [`exactpoly`]: big-integer and rational polynomials, truncated EGFs.
//! - [`signedperm`]: permutations, signed permutations, statistics, enumeration.
//! - [`bijections`]: the map from type-B derangements to permutation sequences.
//! - [`families`]: the polynomial families with multi-method agreement.
//! - [`simplicial`]: complexes, subdivisions, posets, local h-polynomials.
//! - [`analysis`]: symmetry, unimodality, gamma vectors, real-rootedness.
//! - [`cli`]: the command-line surface used by the `bderange` binary.

pub mod analysis;
pub mod bijections;
pub mod cli;
pub mod error;
pub mod exactpoly;
pub mod families;
pub mod signedperm;
pub mod simplicial;

pub use error::{Error, Result};
pub use exactpoly::{EgfSeries, IntPoly, RatPoly};
