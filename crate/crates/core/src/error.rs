use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic {0} is neither 0 nor a prime")]
    NotPrime(u64),
    #[error("characteristic 2 is outside the standing assumptions; pass an explicit override")]
    Char2Rejected,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields (characteristic {0} vs {1})")]
    MixedFields(u64, u64),
    #[error("{m} is not invertible in characteristic {p}: the modular case admits no conversion")]
    ModularObstruction { m: u64, p: u64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("group closure exceeded the cap of {0} elements")]
    GroupCapExceeded(usize),
    #[error("element is not a member of the group")]
    NotInGroup,
    #[error("operation requires the full symmetric group acting by permutations")]
    NotSymmetricGroup,
    #[error("unsupported dimension n = {n}: {reason}")]
    UnsupportedDimension { n: usize, reason: &'static str },
    #[error(
        "the five-condition test is only stated for characteristic != 2; \
         use the confluence method (or force the check explicitly)"
    )]
    Char2CheckerRefused,
    #[error("a_1{i} and a_1{j} must be distinct")]
    DistinctnessViolation { i: usize, j: usize },
    #[error("family expects {expected} parameters, got {found}")]
    FamilyArity { expected: usize, found: usize },
    #[error("rewrite step budget of {0} exceeded")]
    StepBudgetExceeded(u64),
    #[error("rewriting system is not confluent")]
    NotConfluent,
    #[error("input parameters do not define a PBW deformation")]
    NotPbwInput,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
