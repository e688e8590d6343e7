//! Exact singularity spectra of Newton non-degenerate hypersurface germs.
//!
//! The crate works purely at the level of combinatorial data:
//!
//! - [`lattice`]: Newton polyhedra of convenient supports, the compact face
//!   poset, the Newton weight and the coordinate-plane volumes entering
//!   Kouchnirenko's Milnor number formula.
//! - [`spectrum`]: truncated Poincaré series of face cones and the assembly of
//!   the spectrum polynomial from the face poset.
//! - [`curve`]: value-semigroup invariants of irreducible plane branches.
//! - [`dist`]: the Irwin–Hall limit law and distances between a discrete
//!   spectrum and that law.
//!
//! All quantities that decide a sign are exact rationals ([`Q`]); floating
//! point only appears in Fourier-domain diagnostics.

pub mod curve;
pub mod dist;
mod error;
pub mod io;
pub mod lattice;
mod linalg;
pub mod par;
pub mod rational;
pub mod spectrum;

pub use error::{Error, Result};
pub use rational::Q;
