use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("{what}: size {size} exceeds guard {limit}")]
    EnumerationLimit {
        what: &'static str,
        size: u64,
        limit: u64,
    },
    #[error("division by zero")]
    DivisionByZero,
    #[error("table has {found} entries, expected {expected}")]
    WrongArity { expected: usize, found: usize },
    #[error("q(0) = {0} is not 0")]
    NotNormalized(String),
    #[error("q(-g) != q(g) at g = {0}")]
    NotEven(String),
    #[error("b is not biadditive at {0}")]
    NotQuadratic(String),
    #[error("subgroup is not isotropic")]
    NotIsotropic,
    #[error("form is not anisotropic: q vanishes at {0}")]
    NotAnisotropic(String),
    #[error("form is degenerate")]
    NotMetric,
    #[error("internal consistency failure: {0}")]
    ClassificationBug(String),
    #[error("unit law fails: {0}")]
    UnitFail(String),
    #[error("duality fails: {0}")]
    DualityFail(String),
    #[error("associativity fails: {0}")]
    AssociativityFail(String),
    #[error("Frobenius symmetry fails: {0}")]
    FrobeniusFail(String),
    #[error("numerical failure: {0}")]
    NumericalFail(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("ring is not weakly integral: {0}")]
    NotWeaklyIntegral(String),
    #[error("not a fusion subring: {0}")]
    NotASubring(String),
    #[error("twist of the unit is not 1")]
    UnitTwistFail,
    #[error("dimension of the unit is not 1")]
    UnitDimFail,
    #[error("d({0}) = 0")]
    ZeroDim(String),
    #[error("d(X*) != conj d(X) at {0}")]
    DualDimFail(String),
    #[error("S-matrix symmetry fails: {0}")]
    SymmetryFail(String),
    #[error("Verlinde relation fails at X={0}, Y={1}, Z={2}")]
    VerlindeFail(String, String, String),
    #[error("not a character: {0}")]
    NotCharacter(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("datum is degenerate")]
    Degenerate,
}
