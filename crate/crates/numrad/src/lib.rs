//! Numerical radius computation and certified bound evaluation for dense
//! complex matrices.
//!
//! The numerical radius of a square complex matrix `A` is
//! `w(A) = max { |⟨Ax, x⟩| : ‖x‖ = 1 }`. This crate computes it exactly
//! (up to solver tolerance) through the rotation identity
//! `w(A) = max_θ λ_max(Re(e^{iθ}A))`, and evaluates a family of certified
//! lower and upper bounds on `w(A)` built from operator norms, Cartesian
//! decompositions, Aluthge transforms, and fractional powers of `|A|` and
//! `|A*|`, together with product and commutator variants for pairs of
//! matrices.
//!
//! Everything is deterministic: random corpora are seeded, and the
//! certification harness ([`certify`]) produces byte-identical JSON reports
//! for identical configurations.
//!
//! ```
//! use numrad::{matrix::CMatrix, radius::numerical_radius, bounds};
//! use num_complex::Complex64;
//!
//! let j = CMatrix::new(2, vec![
//!     Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0),
//!     Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0),
//! ]).unwrap();
//! let w = numerical_radius(&j, 1e-10).unwrap().value;
//! assert!((w - 0.5).abs() < 1e-10);
//! let lo = bounds::lower_half_norm(&j).unwrap().value;
//! let hi = bounds::upper_norm(&j).unwrap().value;
//! assert!(lo <= w + 1e-10 && w <= hi + 1e-10);
//! ```

pub mod bounds;
pub mod certify;
pub mod corpus;
pub mod io;
pub mod lemmas;
pub mod linalg;
pub mod matrix;
pub mod radius;
pub mod transform;

pub use bounds::{AlphaCurve, BoundReport, Side, Sign, Target};
pub use certify::{run_certification, CertConfig, CertReport};
pub use matrix::CMatrix;
pub use radius::{numerical_radius, NumRadResult};

/// Library error type. Numerically distinct failure modes stay distinct so
/// callers can route them to different exit paths.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix must be nonempty")]
    Empty,
    #[error("matrix entries must be finite")]
    NonFinite,
    #[error("operand dimensions differ: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("not Hermitian: deviation {deviation:.3e} exceeds gate {gate:.3e}")]
    NotHermitian { deviation: f64, gate: f64 },
    #[error("not positive semidefinite: eigenvalue {min_eig:.6e} below tolerance band {band:.3e}")]
    NotPsd { min_eig: f64, band: f64 },
    #[error("eigenvalue/singular value iteration did not converge")]
    Convergence,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal numerical inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Pinned tolerance policy. All inequality checks are relative; scale factors
/// are `1 + magnitude` so the absolute and relative regimes agree near zero.
pub mod tol {
    /// Default relative tolerance for certified inequality checks.
    pub const CHECK: f64 = 1e-8;
    /// Default numerical-radius solver tolerance.
    pub const RADIUS: f64 = 1e-10;
    /// Hermitian deviation gate: inputs farther than this from their own
    /// adjoint are rejected rather than silently symmetrized.
    pub const HERM_GATE: f64 = 1e-8;
    /// Strict gate for dispatching the Hermitian fast path of the radius
    /// solver; misclassification here would change semantics, not accuracy.
    pub const HERM_FAST: f64 = 1e-12;
    /// Eigenvalues of a PSD operand within this relative band of zero are
    /// treated as exact zeros by the functional calculus.
    pub const PSD_BAND: f64 = 1e-10;
    /// Singular directions below this relative cutoff fall outside the
    /// support of the polar isometry.
    pub const RANK_CUTOFF: f64 = 1e-10;

    /// Absolute tolerance at a given magnitude: `eps * (1 + magnitude)`.
    #[inline]
    pub fn at(eps: f64, magnitude: f64) -> f64 {
        eps * (1.0 + magnitude)
    }
}
