use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    SpecMismatch { left: String, right: String },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid ring spec `{0}` (expected `int`, `zp:<p>` or `zp:<p>[<var>]`)")]
    BadRingSpec(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("coefficient not in ring: {0}")]
    CoefficientNotInRing(String),

    #[error("variable lists differ: [{left}] vs [{right}]")]
    VarListMismatch { left: String, right: String },

    #[error("duplicate or invalid variable name `{0}`")]
    BadVariable(String),

    #[error("monomial has {got} exponents, polynomial has {expected} variables")]
    MonomialLength { expected: usize, got: usize },

    #[error("expected a bivariate polynomial over (x, y), got variables [{0}]")]
    WrongArity(String),

    #[error("family condition violated: {0}")]
    ConditionViolated(String),

    #[error("family requires characteristic 3, ring has characteristic {0}")]
    CharMismatch(u64),

    #[error("{n} is not in s_2({p})")]
    NotInS2 { n: u64, p: u64 },

    #[error("{n} is not in s_1({p})")]
    NotInS1 { n: u64, p: u64 },

    #[error("enumeration space has {count} candidates, budget is {budget}")]
    BudgetExceeded { count: String, budget: u64 },

    #[error("unsupported ring for this operation: {0}")]
    UnsupportedSpec(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("polynomial of degree <= 1 in each variable satisfies the identity but matches no family: {0}")]
    Unclassified(String),
}
