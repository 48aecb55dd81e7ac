use alloc::string::String;
use core::fmt;

/// Errors raised by construction and analysis routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A field characteristic that is not prime.
    NonPrime(u64),
    /// Field order p^m does not fit the supported range.
    FieldTooLarge { p: u64, m: u32 },
    /// Operands belong to different fields.
    MixedFields,
    /// Element encoding outside [0, q).
    ElementOutOfRange(u64),
    /// Multiplicative inverse of zero requested.
    InversionOfZero,
    /// gcd(a, b) = 1 required but violated.
    GcdViolation { a: u64, b: u64 },
    /// A set of exponents is not closed under multiplication by q mod n.
    NotCosetClosed(u64),
    /// Vector or matrix dimensions do not match.
    DimensionMismatch,
    /// Generator matrix is rank deficient.
    RankDeficient { expected: usize, actual: usize },
    /// The component collection is linearly dependent; carries an offending
    /// subset of component indices.
    DependentCollection(alloc::vec::Vec<usize>),
    /// Operation requires an irreducible cyclic code.
    NotIrreducible,
    /// Code has an empty nonzero set (zero ideal).
    ZeroIdeal,
    /// Even-weight subcode requested of a code already lacking 0 in its
    /// nonzero set.
    AlreadyEvenWeight,
    /// A precondition on construction parameters failed.
    InvalidParameter(String),
    /// Enumeration would exceed the configured exhaustive budget.
    BudgetExceeded,
    /// The distance profile contains non-exact entries, so the query is
    /// undecidable rather than false.
    Undecidable,
    /// Coordinate map is not a bijection.
    NotAPermutation,
    /// Matrix is not in systematic [I | G] form.
    NotSystematic,
    /// Empty subset where a nonempty one is required.
    EmptySubset,
    /// Side-information set covers all messages; nothing to decode.
    NothingToDecode,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPrime(p) => write!(f, "{p} is not prime"),
            Error::FieldTooLarge { p, m } => write!(f, "field GF({p}^{m}) exceeds supported size"),
            Error::MixedFields => write!(f, "operands belong to different fields"),
            Error::ElementOutOfRange(v) => write!(f, "element encoding {v} out of range"),
            Error::InversionOfZero => write!(f, "inversion of zero"),
            Error::GcdViolation { a, b } => write!(f, "gcd({a}, {b}) must be 1"),
            Error::NotCosetClosed(i) => write!(f, "set not closed under q-multiplication at {i}"),
            Error::DimensionMismatch => write!(f, "dimension mismatch"),
            Error::RankDeficient { expected, actual } => {
                write!(f, "rank {actual}, expected {expected}")
            }
            Error::DependentCollection(s) => write!(f, "linearly dependent components {s:?}"),
            Error::NotIrreducible => write!(f, "cyclic code is not irreducible"),
            Error::ZeroIdeal => write!(f, "empty nonzero set (zero ideal)"),
            Error::AlreadyEvenWeight => write!(f, "code is already even-weight (0 not a nonzero)"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::BudgetExceeded => write!(f, "enumeration budget exceeded"),
            Error::Undecidable => write!(f, "profile has non-exact entries; undecidable"),
            Error::NotAPermutation => write!(f, "coordinate map is not a bijection"),
            Error::NotSystematic => write!(f, "matrix is not systematic [I | G]"),
            Error::EmptySubset => write!(f, "subset must be nonempty"),
            Error::NothingToDecode => write!(f, "side information covers every message"),
        }
    }
}

#[cfg(test)]
impl std::error::Error for Error {}
