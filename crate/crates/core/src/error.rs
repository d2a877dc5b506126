use std::fmt;

/// Causal type a Gram-Schmidt residual was required to have but did not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeFailure {
    /// The residual landed in the opposite cone.
    WrongCone,
    /// The residual is null to tolerance; the element sits on a cell boundary.
    Boundary,
}

impl fmt::Display for ConeFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeFailure::WrongCone => f.write_str("wrong cone"),
            ConeFailure::Boundary => f.write_str("null residual (cell boundary)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("eigen solver did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("leading principal minor {0} vanishes to tolerance")]
    SingularMinor(usize),
    #[error("matrix is not Hermitian to tolerance")]
    NotHermitian,
    #[error("triangular factor has a zero diagonal entry at {0}")]
    SingularDiagonal(usize),
    #[error("zero vector has no causal type")]
    ZeroVector,
    #[error("vector is not timelike")]
    NotTimelike,
    #[error("matrix is not a member of {0}")]
    NotMember(&'static str),
    #[error("not decomposable: column {column}: {kind}")]
    NotDecomposable { column: usize, kind: ConeFailure },
    #[error("pivot {index} has the wrong sign for the signature")]
    WrongInertia { index: usize },
    #[error("not admissible: {0}")]
    NotAdmissible(String),
    #[error("non-finite value in input")]
    NonFinite,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable snake-case identifier, used in machine-readable reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::NoConvergence { .. } => "no_convergence",
            Error::SingularMinor(_) => "singular_minor",
            Error::NotHermitian => "not_hermitian",
            Error::SingularDiagonal(_) => "singular_diagonal",
            Error::ZeroVector => "zero_vector",
            Error::NotTimelike => "not_timelike",
            Error::NotMember(_) => "not_member",
            Error::NotDecomposable { .. } => "not_decomposable",
            Error::WrongInertia { .. } => "wrong_inertia",
            Error::NotAdmissible(_) => "not_admissible",
            Error::NonFinite => "non_finite",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }

    /// True for the errors that mean "this element lies outside G₀·AN".
    pub fn is_not_decomposable(&self) -> bool {
        matches!(
            self,
            Error::NotDecomposable { .. } | Error::WrongInertia { .. } | Error::SingularMinor(_)
        )
    }

    pub(crate) fn dims(expected: impl fmt::Display, found: impl fmt::Display) -> Self {
        Error::DimensionMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
