use thiserror::Error;

/// Errors shared by the geometry, map, planner, and bounds layers.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    /// A vector that must be normalized has norm at or below the
    /// singularity threshold (input on an excluded diagonal/antipodal locus,
    /// or a nonsingularity violation of a bilinear map).
    #[error("vector norm {norm:.3e} is at or below the singularity threshold")]
    NearZeroVector { norm: f64 },

    /// Ambient dimensions of the operands do not match.
    #[error("dimension mismatch: expected ambient length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The two points generate the same orbit (pair lies on the deleted
    /// diagonal of the configuration space).
    #[error("points generate the same orbit (separation {separation:.3e} <= threshold)")]
    DiagonalPair { separation: f64 },

    /// The pair is too close to the degenerate locus x = ±y for the frame
    /// retraction to apply.
    #[error("pair is degenerate: |<u1,u2>| = {inner:.17} is too close to 1")]
    DegeneratePair { inner: f64 },

    /// An embedding evaluated to (numerically) equal images on two distinct
    /// points - an injectivity failure.
    #[error("embedding images coincide (distance {distance:.3e})")]
    CoincidentImages { distance: f64 },

    /// Every component of the bilinear map vanished on the pair, so no local
    /// planning rule applies (nonsingularity violation).
    #[error("no planning rule found: all components below {threshold:.1e}")]
    NoRuleFound { threshold: f64 },

    /// The requested construction is not provided for these parameters.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A bound was requested from a witness map without passing verification
    /// reports for the required relations.
    #[error("unverified witness: {0}")]
    UnverifiedWitness(String),

    /// The argument passed as a prime is not prime.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Malformed textual input (space descriptors, data files, coordinates).
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors that signal a numerical singularity (excluded locus)
    /// rather than bad usage.
    pub fn is_singularity(&self) -> bool {
        matches!(
            self,
            Error::NearZeroVector { .. }
                | Error::DiagonalPair { .. }
                | Error::DegeneratePair { .. }
                | Error::CoincidentImages { .. }
                | Error::NoRuleFound { .. }
        )
    }
}
