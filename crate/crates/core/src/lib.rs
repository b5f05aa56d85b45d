//! Constructive fixed-point machinery for commuting operator semigroups at
//! finite dimension.
//!
//! The crate computes, for finitely generated commuting matrix semigroups and
//! for finite semigroups given by multiplication tables:
//!
//! * right invariant means (linear-programming feasibility with Farkas
//!   certificates) and the mean-to-fixed-point construction,
//! * mean ergodic decompositions `X = N ⊕ R` with the projection-norm bound,
//! * projections onto invariant subspaces commuting with the whole semigroup,
//!   plus minimal-norm refinement,
//! * extensions of intertwining operators,
//! * invariant Gram matrices, joint similarity to isometries, and invariant
//!   renormings with sandwich constants.
//!
//! Everything is deterministic: reductions run in fixed order, the averaging
//! engine walks a fixed box schedule, and all tolerances are explicit. The
//! crate is `no_std` + `alloc`; IO and file formats live in the companion CLI
//! crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod action;
pub mod ergodic;
pub mod error;
pub mod folner;
pub mod intertwine;
pub mod isometrize;
pub mod linalg;
pub mod matrix;
pub mod mean;
pub mod mesh;
pub mod projection;
pub mod semigroup;
pub mod subspace;

mod simplex;

pub use action::{AbelianAction, BoundsEstimate};
pub use error::Error;
pub use folner::{AffineSet, ConvergenceReport, FolnerSchedule, OrbitMap, TerminationStatus};
pub use linalg::NormKind;
pub use matrix::{Field, Matrix};
pub use subspace::Subspace;

/// Default relative rank tolerance: singular values below `rtol * sigma_max`
/// are treated as zero.
pub const DEFAULT_RTOL: f64 = 1e-9;
