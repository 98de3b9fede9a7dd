use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {0} exceeds the supported maximum of 65536")]
    FieldTooLarge(u128),
    #[error("modulus must be monic of degree {expected}")]
    BadModulus { expected: u32 },
    #[error("modulus {0} is reducible")]
    ReducibleModulus(String),
    #[error("operands belong to different fields ({0} vs {1})")]
    ContextMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value {value} is out of range for {field}")]
    OutOfRange { value: String, field: String },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("gcd of two zero polynomials is undefined")]
    UndefinedGcd,
    #[error("polynomial must be non-constant")]
    ConstantPolynomial,
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("polynomial {0} is not monic")]
    NotMonic(String),
    #[error("polynomial {0} has zero constant term")]
    ZeroConstantTerm(String),
    #[error("{0} is not a trinomial of the form x^n - a*x^i - b with a, b nonzero")]
    NotTrinomial(String),
    #[error("multiplicative order exceeds 64-bit range")]
    OrderOverflow,

    #[error("generator {g} does not divide {f}")]
    NotADivisor { g: String, f: String },
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("enumeration of {needed} codewords exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("requires characteristic {expected}, got {got}")]
    WrongCharacteristic { expected: u32, got: u32 },
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown reproduction id {0}")]
    UnknownItem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
