//! Explicit motion planners and numerical verification tools for spheres,
//! real/complex projective spaces, and lens spaces.
//!
//! The crate has four layers:
//!
//! * [`geometry`] - unit vectors, quotient-space points with canonical
//!   representatives, deck-minimized metrics, orthonormal 2-frames.
//! * [`bilinear`], [`pair_maps`], [`embedding`], [`equivariance`],
//!   [`relations`] - symmetric/biequivariant bilinear maps, the sum/difference
//!   pair splitting, the frame deformation retraction, Hopf-style embeddings
//!   and their Haefliger difference maps, plus seeded sampling checks of the
//!   defining relation sets.
//! * [`planner`] - explicit motion-planning sections: the rotation planner
//!   driven by a symmetric bilinear map and the chord-lift planner on
//!   quotients, with a section-property verification harness.
//! * [`bounds`] - integer arithmetic for topological-complexity bounds:
//!   binomial valuations via carry counting, high/low-torsion lens-space
//!   facts, tabulated projective bounds, and witness-driven upper bounds.
//!
//! Everything is deterministic: samplers derive one RNG stream per sample
//! index from a master seed, so reports are reproducible bit-for-bit.

pub mod actions;
pub mod bilinear;
pub mod bounds;
pub mod embedding;
pub mod equivariance;
pub mod error;
pub mod geometry;
pub mod pair_maps;
pub mod planner;
pub mod relations;
pub mod report;
pub mod sampling;
pub mod suites;

mod vecmath;

pub use error::Error;

/// Norm threshold below which a vector is treated as numerically zero.
pub const EPS_SINGULAR: f64 = 1e-12;

/// Minimum orbit separation for a pair to count as off-diagonal.
pub const EPS_SEPARATION: f64 = 1e-9;

/// Default residual tolerance for verification reports.
pub const DEFAULT_TOL: f64 = 1e-9;
