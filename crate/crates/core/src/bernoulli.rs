//! Bernoulli numbers and Faulhaber's power-sum polynomials.
//!
//! Bernoulli numbers follow the `B_1 = -1/2` convention. Faulhaber only
//! consumes indices `k >= 2`, where both conventions agree.

use num_traits::{One, Zero};

use crate::arith::{binomial, rat_int, BigInt, Rational};
use crate::error::{Error, Result};

/// `B_0..=B_max_index`, filled by the defining recurrence
/// `sum_{j=0}^{m} C(m+1, j) B_j = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn new(max_index: usize) -> Self {
        let mut table = BernoulliTable {
            values: vec![Rational::one()],
        };
        table.extend_to(max_index);
        table
    }

    /// Grows the table in place. Existing entries are never touched.
    pub fn extend_to(&mut self, max_index: usize) {
        for m in self.values.len()..=max_index {
            let next = if m >= 3 && m % 2 == 1 {
                Rational::zero()
            } else {
                let m1 = (m + 1) as u64;
                let acc: Rational = self
                    .values
                    .iter()
                    .enumerate()
                    .map(|(j, b)| b * rat_int(binomial(m1, j as i64)))
                    .sum();
                -acc / rat_int(m1)
            };
            self.values.push(next);
        }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    /// Panics if `k` is beyond the table.
    pub fn get(&self, k: usize) -> &Rational {
        &self.values[k]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

pub fn bernoulli(k: usize) -> Rational {
    BernoulliTable::new(k).get(k).clone()
}

/// The polynomial in `n` equal to `sum_{k=0}^{n} k^degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaulhaberPoly {
    degree: usize,
    /// Coefficients of `n^{degree+1}` down to `n^0`.
    coeffs: Vec<Rational>,
}

impl FaulhaberPoly {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn evaluate(&self, n: &BigInt) -> Rational {
        let x = rat_int(n.clone());
        self.coeffs
            .iter()
            .fold(Rational::zero(), |acc, c| acc * &x + c)
    }
}

pub fn faulhaber_poly(d: usize) -> Result<FaulhaberPoly> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "Faulhaber polynomial degree must be at least 1".into(),
        ));
    }
    Ok(faulhaber_with(d, &BernoulliTable::new(d)))
}

pub(crate) fn faulhaber_with(d: usize, bernoulli: &BernoulliTable) -> FaulhaberPoly {
    let d1 = (d + 1) as u64;
    let mut coeffs = vec![Rational::zero(); d + 2];
    coeffs[0] = Rational::new(BigInt::one(), BigInt::from(d1));
    coeffs[1] = Rational::new(BigInt::one(), BigInt::from(2));
    // B_k C(d+1, k) / (d+1) multiplies n^{d+1-k}, which sits at index k.
    for (k, slot) in coeffs.iter_mut().enumerate().take(d + 1).skip(2) {
        *slot = bernoulli.get(k) * rat_int(binomial(d1, k as i64)) / rat_int(d1);
    }
    FaulhaberPoly { degree: d, coeffs }
}

/// `sum_{k=0}^{n} k^d`, with `0^0 = 1` so that `power_sum(n, 0) = n + 1`.
pub fn power_sum(n: u64, d: usize) -> BigInt {
    if d == 0 {
        return BigInt::from(n) + 1;
    }
    let value = faulhaber_with(d, &BernoulliTable::new(d)).evaluate(&BigInt::from(n));
    debug_assert!(value.is_integer(), "Faulhaber value must be integral");
    value.to_integer()
}
