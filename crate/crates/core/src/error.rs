use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The brute-force enumerator refused a request outside its resource guard.
    #[error("brute-force limit exceeded for d={d}, n={n} (limit d<={max_d}, n<={max_n}); use another engine")]
    LimitExceeded {
        d: usize,
        n: u64,
        max_d: usize,
        max_n: u64,
    },

    #[error(
        "corrupted coefficients: polynomial for d={d} evaluates to non-integer {value} at n={n}"
    )]
    CorruptedCoefficients { d: usize, n: u64, value: String },

    #[error("no closed form for c(d, d-{0}); closed forms exist only for j <= 4")]
    UnsupportedIndex(usize),

    #[error("symmetric sum of order {j} requested over only {len} values")]
    OrderTooLarge { j: usize, len: usize },
}
