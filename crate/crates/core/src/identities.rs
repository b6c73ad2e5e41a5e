//! Summation identities behind the symmetric-sum coefficient route, in
//! executable form. Each direct sum is paired with its closed form.

use num_traits::{One, Zero};

use crate::arith::{binomial, BigInt};
use crate::error::{Error, Result};

/// `sum_{k=1}^{n} k^power C(n, k)` for `power` 1 or 2.
pub fn weighted_binom_sum(n: u64, power: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "weighted binomial sum needs n >= 1".into(),
        ));
    }
    if !(1..=2).contains(&power) {
        return Err(Error::InvalidArgument(format!(
            "weighted binomial sum supports power 1 or 2, got {power}"
        )));
    }
    let direct: BigInt = (1..=n)
        .map(|k| binomial(n, k as i64) * BigInt::from(k).pow(power))
        .sum();
    debug_assert_eq!(direct, weighted_binom_closed_form(n, power));
    Ok(direct)
}

/// `n 2^{n-1}` for power 1, `n (n+1) 2^{n-2}` for power 2.
pub fn weighted_binom_closed_form(n: u64, power: u32) -> BigInt {
    let n_big = BigInt::from(n);
    match power {
        1 => n_big << (n - 1),
        // Written as n(n+1)2^n / 4 so n = 1 stays integral.
        _ => ((&n_big * (&n_big + 1u32)) << n) >> 2,
    }
}

fn check_pairs(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "pair sums need n >= 2, got {n}"
        )));
    }
    Ok(())
}

/// `sum_{1 <= i < j <= n} (i + j)`.
pub fn pair_sum(n: u64) -> Result<BigInt> {
    check_pairs(n)?;
    let mut total = BigInt::zero();
    for j in 2..=n {
        for i in 1..j {
            total += i + j;
        }
    }
    debug_assert_eq!(total, pair_sum_closed_form(n));
    Ok(total)
}

/// `n (n+1) (n-1) / 2`.
pub fn pair_sum_closed_form(n: u64) -> BigInt {
    let n = BigInt::from(n);
    &n * (&n + 1u32) * (&n - 1u32) / 2u32
}

/// `sum_{1 <= i < j <= n} i j`.
pub fn pair_product_sum(n: u64) -> Result<BigInt> {
    check_pairs(n)?;
    let mut total = BigInt::zero();
    for j in 2..=n {
        for i in 1..j {
            total += BigInt::from(i) * j;
        }
    }
    debug_assert_eq!(total, pair_product_sum_closed_form(n));
    Ok(total)
}

/// `n (n+1) (3n+2) (n-1) / 24`.
pub fn pair_product_sum_closed_form(n: u64) -> BigInt {
    let n = BigInt::from(n);
    &n * (&n + 1u32) * (&n * 3u32 + 2u32) * (&n - 1u32) / 24u32
}

/// `e_j(values)`, the sum of all products of `j` distinct entries.
pub fn elementary_symmetric(values: &[BigInt], j: usize) -> Result<BigInt> {
    if j > values.len() {
        return Err(Error::OrderTooLarge {
            j,
            len: values.len(),
        });
    }
    // e[t] holds e_t of the prefix seen so far; update high to low.
    let mut e = vec![BigInt::zero(); j + 1];
    e[0] = BigInt::one();
    for (seen, v) in values.iter().enumerate() {
        for t in (1..=j.min(seen + 1)).rev() {
            let step = v * &e[t - 1];
            e[t] += step;
        }
    }
    Ok(e.swap_remove(j))
}

/// The integers `lo..=hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    lo: i64,
    hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidArgument(format!("empty range {lo}..={hi}")));
        }
        Ok(IntRange { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> Vec<BigInt> {
        (self.lo..=self.hi).map(BigInt::from).collect()
    }
}

/// `sum_{lo <= i_1 < ... < i_j <= hi} i_1 ... i_j`.
pub fn range_symmetric_sum(range: IntRange, j: usize) -> Result<BigInt> {
    elementary_symmetric(&range.values(), j)
}

/// Second path for [`range_symmetric_sum`]: peel off the smallest index,
/// `S(a, b, j) = sum_{s=a}^{b-j+1} s S(s+1, b, j-1)`. Exponential in `j`;
/// meant for cross-checking small ranges only.
pub fn range_symmetric_sum_recursive(range: IntRange, j: usize) -> Result<BigInt> {
    if j > range.len() {
        return Err(Error::OrderTooLarge {
            j,
            len: range.len(),
        });
    }
    Ok(peel(range.lo, range.hi, j))
}

fn peel(lo: i64, hi: i64, j: usize) -> BigInt {
    if j == 0 {
        return BigInt::one();
    }
    let last_start = hi - j as i64 + 1;
    (lo..=last_start)
        .map(|s| BigInt::from(s) * peel(s + 1, hi, j - 1))
        .sum()
}
