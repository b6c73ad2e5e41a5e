//! Engines for `|P_n^d|`, the number of distinct endpoints of `n`-step walks
//! on `Z^d` where each step moves one unit along one axis.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::{binomial, rat_int, BigInt, Rational};
use crate::coefficients::{CoeffCache, CoeffVector};
use crate::error::{Error, Result};

pub const BRUTE_LIMIT_ENV: &str = "LATCOUNT_BRUTE_LIMIT";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WalkSpec {
    d: usize,
    n: u64,
}

impl WalkSpec {
    pub fn new(d: usize, n: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument(
                "dimension d must be at least 1".into(),
            ));
        }
        Ok(WalkSpec { d, n })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> u64 {
        self.n
    }
}

/// A lattice point of `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position(pub Vec<i64>);

impl Position {
    pub fn origin(d: usize) -> Self {
        Position(vec![0; d])
    }

    pub fn l1_norm(&self) -> u64 {
        self.0.iter().map(|c| c.unsigned_abs()).sum()
    }
}

/// Resource guard for the brute-force enumerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteLimit {
    pub max_d: usize,
    pub max_n: u64,
}

impl Default for BruteLimit {
    fn default() -> Self {
        BruteLimit {
            max_d: 4,
            max_n: 12,
        }
    }
}

impl BruteLimit {
    pub fn allows(&self, spec: WalkSpec) -> bool {
        spec.d <= self.max_d && spec.n <= self.max_n
    }

    /// Reads `LATCOUNT_BRUTE_LIMIT` (`"d,n"`), falling back to the default.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BRUTE_LIMIT_ENV) {
            Ok(raw) => raw.parse(),
            Err(_) => Ok(BruteLimit::default()),
        }
    }
}

impl FromStr for BruteLimit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::InvalidArgument(format!(
                "{BRUTE_LIMIT_ENV} must look like \"d,n\", got {s:?}"
            ))
        };
        let (d, n) = s.split_once(',').ok_or_else(bad)?;
        Ok(BruteLimit {
            max_d: d.trim().parse().map_err(|_| bad())?,
            max_n: n.trim().parse().map_err(|_| bad())?,
        })
    }
}

/// All endpoints of `n`-step walks, by expanding the frontier one step at a
/// time from the origin.
pub fn endpoints_bruteforce(spec: WalkSpec, limit: BruteLimit) -> Result<HashSet<Position>> {
    if !limit.allows(spec) {
        return Err(Error::LimitExceeded {
            d: spec.d,
            n: spec.n,
            max_d: limit.max_d,
            max_n: limit.max_n,
        });
    }
    let mut frontier = HashSet::from([Position::origin(spec.d)]);
    for _ in 0..spec.n {
        let mut next = HashSet::with_capacity(frontier.len() * 2);
        for pos in &frontier {
            for axis in 0..spec.d {
                for delta in [-1, 1] {
                    let mut moved = pos.clone();
                    moved.0[axis] += delta;
                    next.insert(moved);
                }
            }
        }
        frontier = next;
    }
    Ok(frontier)
}

pub fn count_bruteforce(spec: WalkSpec) -> Result<BigInt> {
    count_bruteforce_with(spec, BruteLimit::default())
}

pub fn count_bruteforce_with(spec: WalkSpec, limit: BruteLimit) -> Result<BigInt> {
    endpoints_bruteforce(spec, limit).map(|set| BigInt::from(set.len()))
}

/// `N_d(j)` = number of points of `Z^d` with L1 norm exactly `j`, for `j = 0..=n`.
fn sphere_sizes(d: usize, n: u64) -> Vec<BigInt> {
    let len = n as usize + 1;
    let mut sizes: Vec<BigInt> = (0..len)
        .map(|j| BigInt::from(if j == 0 { 1 } else { 2 }))
        .collect();
    for _ in 1..d {
        // Split on the last coordinate: 0 leaves N(j), +-m leaves N(j-m).
        let mut below = BigInt::zero();
        let mut next = Vec::with_capacity(len);
        for size in &sizes {
            next.push(size + &below * 2u32);
            below += size;
        }
        sizes = next;
    }
    sizes
}

/// Lattice points with `|x|_1 <= n` and `|x|_1 = n (mod 2)`.
pub fn count_parity_ball(spec: WalkSpec) -> BigInt {
    sphere_sizes(spec.d, spec.n)
        .into_iter()
        .enumerate()
        .filter(|(j, _)| (*j as u64 % 2) == spec.n % 2)
        .map(|(_, size)| size)
        .sum()
}

/// Builds the `d = 1` row `1, 2, ..., n+1` and lifts it one dimension at a
/// time with `|P_m^{d+1}| = 2 sum_{k<=m} |P_k^d| - |P_m^d|`.
pub fn count_recurrence(spec: WalkSpec) -> BigInt {
    let mut row: Vec<BigInt> = (1..=spec.n + 1).map(BigInt::from).collect();
    for _ in 1..spec.d {
        let mut prefix = BigInt::zero();
        for cell in row.iter_mut() {
            prefix += &*cell;
            *cell = &prefix * 2u32 - &*cell;
        }
    }
    row.pop().expect("row has n+1 entries")
}

/// `sum_{k=0}^{d-1} C(d-1, k) C(d+n-k, d)`.
pub fn count_closed_form(spec: WalkSpec) -> BigInt {
    let d = spec.d as u64;
    (0..d)
        .map(|k| binomial(d - 1, k as i64) * binomial(d + spec.n - k, d as i64))
        .sum()
}

/// Exact counts `|P_0^d| ..= |P_{n_max}^d|` at fixed dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTable {
    pub d: usize,
    pub counts: Vec<BigInt>,
}

impl SeriesTable {
    pub fn n_max(&self) -> u64 {
        self.counts.len() as u64 - 1
    }
}

/// Power-series coefficients of `(1+x)^{d-1} / (1-x)^{d+1}`, by convolving the
/// numerator polynomial with the series `sum_m C(d+m, d) x^m`.
pub fn series_counts(d: usize, n_max: u64) -> Result<SeriesTable> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "dimension d must be at least 1".into(),
        ));
    }
    let len = n_max as usize + 1;
    let numerator: Vec<BigInt> = (0..d).map(|l| binomial(d as u64 - 1, l as i64)).collect();

    let mut denominator = Vec::with_capacity(len);
    let mut term = BigInt::one();
    for m in 0..len as u64 {
        denominator.push(term.clone());
        // C(d+m+1, d) = C(d+m, d) * (d+m+1) / (m+1)
        term = term * (d as u64 + m + 1) / (m + 1);
    }

    let counts = (0..len)
        .map(|i| {
            numerator
                .iter()
                .take(i + 1)
                .enumerate()
                .map(|(l, a)| a * &denominator[i - l])
                .sum()
        })
        .collect();
    Ok(SeriesTable { d, counts })
}

/// Evaluates `c_d . (n^d, ..., n, 1)`. A non-integral value means the
/// coefficients are wrong.
pub fn count_polynomial(spec: WalkSpec, coeffs: &CoeffVector) -> Result<BigInt> {
    if coeffs.d() != spec.d {
        return Err(Error::InvalidArgument(format!(
            "coefficient vector has dimension {}, walk has dimension {}",
            coeffs.d(),
            spec.d
        )));
    }
    let x = rat_int(spec.n);
    let value = coeffs
        .entries()
        .iter()
        .fold(Rational::zero(), |acc, c| acc * &x + c);
    if !value.is_integer() {
        return Err(Error::CorruptedCoefficients {
            d: spec.d,
            n: spec.n,
            value: value.to_string(),
        });
    }
    Ok(value.to_integer())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Engine {
    Brute,
    Parity,
    Recurrence,
    Closed,
    Series,
    Poly,
}

impl Engine {
    pub const ALL: [Engine; 6] = [
        Engine::Brute,
        Engine::Parity,
        Engine::Recurrence,
        Engine::Closed,
        Engine::Series,
        Engine::Poly,
    ];

    /// Every engine except the enumerator.
    pub const ANALYTIC: [Engine; 5] = [
        Engine::Parity,
        Engine::Recurrence,
        Engine::Closed,
        Engine::Series,
        Engine::Poly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Brute => "brute",
            Engine::Parity => "parity",
            Engine::Recurrence => "recurrence",
            Engine::Closed => "closed",
            Engine::Series => "series",
            Engine::Poly => "poly",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown engine {s:?}")))
    }
}

/// Dispatches to the engines, sharing one coefficient cache across calls.
#[derive(Debug, Default)]
pub struct Counter {
    pub brute_limit: BruteLimit,
    pub coeffs: CoeffCache,
}

impl Counter {
    pub fn new(brute_limit: BruteLimit) -> Self {
        Counter {
            brute_limit,
            coeffs: CoeffCache::new(),
        }
    }

    pub fn count(&self, engine: Engine, spec: WalkSpec) -> Result<BigInt> {
        match engine {
            Engine::Brute => count_bruteforce_with(spec, self.brute_limit),
            Engine::Parity => Ok(count_parity_ball(spec)),
            Engine::Recurrence => Ok(count_recurrence(spec)),
            Engine::Closed => Ok(count_closed_form(spec)),
            Engine::Series => {
                let table = series_counts(spec.d, spec.n)?;
                Ok(table.counts.into_iter().last().expect("non-empty series"))
            }
            Engine::Poly => count_polynomial(spec, &self.coeffs.get(spec.d)?),
        }
    }
}
