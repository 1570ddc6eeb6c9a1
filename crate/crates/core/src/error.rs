use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
///
/// Variants fall into three families, reported by [`Error::category`]:
/// malformed or out-of-domain input, exhausted resource caps, and broken
/// invariants. The last family never fires on correct code; it exists so a
/// bug surfaces loudly instead of producing a wrong table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation {index} ({i}, {j}) closes a cycle")]
    Cycle { index: usize, i: usize, j: usize },
    #[error("element {value} is outside the ground set 1..={n}")]
    Range { value: usize, n: usize },
    #[error("{what} exceeded the cap of {cap}")]
    CapExceeded { what: &'static str, cap: u64 },
    #[error("{0} elements exceed the supported size")]
    SizeOverflow(usize),
    #[error("{0} is not an ideal")]
    NotAnIdeal(String),
    #[error("induced subposet is not a rooted tree: {0}")]
    NotATree(String),
    #[error("map is not an order isomorphism: {0}")]
    NotAnIsomorphism(String),
    #[error("poset is not self-dual")]
    NotSelfDual,
    #[error("poset lacks the ideal-extension property")]
    IeViolation,
    #[error("shape is undefined here: {0}")]
    ShapeDomain(String),
    #[error("malformed isometry: {0}")]
    MalformedIsometry(String),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("poset is not graded: {0}")]
    NotGraded(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown command `{0}`")]
    UnknownCommand(String),
    #[error("{0}")]
    Usage(String),
    #[error("association scheme axiom violated: {0}")]
    AxiomViolation(String),
    #[error("character sum is not a rational integer: {0}")]
    NonIntegralEigenvalue(String),
    #[error("second eigenmatrix entry is not integral: {0}")]
    NonIntegralQ(String),
    #[error("transform is not integral: {0}")]
    NonIntegralResult(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    Validation,
    Cap,
    Breach,
}

impl Error {
    pub fn category(&self) -> Category {
        match self {
            Error::CapExceeded { .. } | Error::SizeOverflow(_) => Category::Cap,
            Error::AxiomViolation(_)
            | Error::NonIntegralEigenvalue(_)
            | Error::NonIntegralQ(_)
            | Error::NonIntegralResult(_) => Category::Breach,
            _ => Category::Validation,
        }
    }

    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self.category() {
            Category::Validation => 2,
            Category::Cap => 3,
            Category::Breach => 4,
        }
    }
}
