//! Exact counting of the distinct endpoints of `n`-step nearest-neighbour
//! walks on the `d`-dimensional integer lattice.
//!
//! Five independent engines compute the same count (brute-force frontier
//! expansion, a parity-constrained L1-ball count, the dimension recurrence,
//! the binomial closed form and generating-function convolution) and a sixth
//! evaluates the degree-`d` polynomial whose coefficients come from the
//! Faulhaber transfer-matrix chain. [`verify`] cross-checks all of them.

pub mod arith;
pub mod bench;
pub mod bernoulli;
pub mod coefficients;
pub mod engines;
mod error;
pub mod identities;
pub mod verify;

pub use arith::{binomial, factorial, format_rational, rational, BigInt, Rational};
pub use bench::{digests_agree, run_bench, BenchRecord};
pub use bernoulli::{bernoulli, faulhaber_poly, power_sum, BernoulliTable, FaulhaberPoly};
pub use coefficients::{
    coeff_closed_form, coeff_vector, coeff_via_symmetric_sums, transfer_matrix, CoeffCache,
    CoeffVector, TransferMatrix,
};
pub use engines::{
    count_bruteforce, count_closed_form, count_parity_ball, count_polynomial, count_recurrence,
    series_counts, BruteLimit, Counter, Engine, Position, SeriesTable, WalkSpec,
};
pub use error::{Error, Result};
pub use identities::{
    elementary_symmetric, pair_product_sum, pair_sum, range_symmetric_sum, weighted_binom_sum,
    IntRange,
};
pub use verify::{verify, CoeffCheck, GridCell, VerifyReport};
