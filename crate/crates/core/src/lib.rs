//! Splitting types of `f*T_X` for rational curves `f: P^1 -> X` on
//! hypersurfaces, computed with exact arithmetic over the rationals or a prime
//! field, together with the dimension bookkeeping that goes with them: the
//! expected-dimension formulas for spaces of curves, lines on hypersurfaces
//! over finite fields, and homology classes on Hirzebruch surfaces.
//!
//! The pipeline is plain linear algebra on binary forms. The Jacobian row of
//! the defining equation, pulled back along `f`, is a surjection of split
//! bundles on `P^1`; its kernel is computed degree by degree
//! ([`syzygy::kernel_bundle`]). The Euler section is then expressed in that
//! kernel and the dual of `f*T_X` is obtained as one more kernel.

pub mod dimension;
pub mod exact;
pub mod fano;
pub mod hirzebruch;
pub mod sampling;
pub mod syzygy;
pub mod tangent;

pub use exact::{BinaryForm, Field, Grading, Matrix, MultiForm, PrimeField, Rationals};
pub use syzygy::{GradedMatrix, SplittingType};
pub use tangent::{AmbientSpace, Hypersurface, RationalCurve};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("all forms are zero")]
    AllFormsZero,
    #[error("map has a base point: {0}")]
    BasePoint(String),
    #[error("invalid ambient space: {0}")]
    InvalidAmbient(String),
    #[error("map of graded free modules is not surjective")]
    NotSurjective,
    #[error("generator search exceeded twist {0}")]
    BudgetExceeded(i64),
    #[error("section is not in the image of the kernel inclusion")]
    NotInKernel,
    #[error("curve does not lie on the hypersurface")]
    NotOnHypersurface,
    #[error("hypersurface is singular along the curve")]
    SingularAlongCurve,
    #[error("Euler sections do not span a subbundle")]
    DegenerateEulerFrame,
    #[error("too many candidates: {candidates} exceeds budget {budget}")]
    SearchTooLarge { candidates: u128, budget: u128 },
    #[error("classes on different surfaces: F_{0} and F_{1}")]
    MixedContexts(u32, u32),
    #[error("transport to F_0 needs an even ruling index, got {0}")]
    OddRulingIndex(u32),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidField(_) => "InvalidField",
            Error::ArityMismatch(_) => "ArityMismatch",
            Error::DegreeMismatch(_) => "DegreeMismatch",
            Error::AllFormsZero => "AllFormsZero",
            Error::BasePoint(_) => "BasePoint",
            Error::InvalidAmbient(_) => "InvalidAmbient",
            Error::NotSurjective => "NotSurjective",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::NotInKernel => "NotInKernel",
            Error::NotOnHypersurface => "NotOnHypersurface",
            Error::SingularAlongCurve => "SingularAlongCurve",
            Error::DegenerateEulerFrame => "DegenerateEulerFrame",
            Error::SearchTooLarge { .. } => "BudgetExceeded",
            Error::MixedContexts(..) => "MixedContexts",
            Error::OddRulingIndex(_) => "OddRulingIndex",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Inconsistent(_) => "Inconsistent",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
