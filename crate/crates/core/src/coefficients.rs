//! Coefficients of the degree-`d` polynomial `|P_n^d| = c_d . (n^d, ..., n, 1)`.
//!
//! Two routes are provided. The transfer-matrix chain lifts `c_d` to
//! `c_{d+1}` by substituting Faulhaber's formula into the dimension
//! recurrence. The symmetric-sum route expands the binomial closed form
//! directly. Closed forms for the top five coefficients sit alongside.

use std::sync::RwLock;

use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, factorial, rat_int, BigInt, Rational};
use crate::bernoulli::BernoulliTable;
use crate::error::{Error, Result};
use crate::identities::elementary_symmetric;

/// `c(d,d), c(d,d-1), ..., c(d,0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffVector {
    entries: Vec<Rational>,
}

impl CoeffVector {
    /// The base of the chain, `c_1 = (1, 1)`.
    pub fn base() -> Self {
        CoeffVector {
            entries: vec![Rational::one(), Rational::one()],
        }
    }

    pub fn from_entries(entries: Vec<Rational>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidArgument(
                "a coefficient vector needs at least two entries".into(),
            ));
        }
        Ok(CoeffVector { entries })
    }

    pub fn d(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// `c(d, d-j)`.
    pub fn top(&self, j: usize) -> &Rational {
        &self.entries[j]
    }
}

/// The `(d+2) x (d+1)` matrix taking `c_d` to `c_{d+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferMatrix {
    d: usize,
    rows: Vec<Vec<Rational>>,
}

impl TransferMatrix {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.rows.first().map_or(0, Vec::len))
    }

    pub fn apply(&self, c: &CoeffVector) -> Result<CoeffVector> {
        if c.d() != self.d {
            return Err(Error::InvalidArgument(format!(
                "transfer matrix for d={} applied to c_{}",
                self.d,
                c.d()
            )));
        }
        let entries = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&c.entries)
                    .filter(|(m, _)| !m.is_zero())
                    .map(|(m, x)| m * x)
                    .sum()
            })
            .collect();
        Ok(CoeffVector { entries })
    }
}

pub fn transfer_matrix(d: usize) -> Result<TransferMatrix> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "transfer matrix needs d >= 1".into(),
        ));
    }
    Ok(transfer_matrix_with(d, &BernoulliTable::new(d)))
}

fn transfer_matrix_with(d: usize, bernoulli: &BernoulliTable) -> TransferMatrix {
    // Column i holds c(d, p) with p = d - i; row r produces c(d+1, q) with
    // q = d + 1 - r. The summed power sum 2 c(d,p) sum_k k^p contributes
    // 2/(p+1) to n^{p+1}, cancels the -c(d,p) n^p term for p >= 1, and adds
    // 2 B_s C(p+1, s)/(p+1) to n^{p+1-s} for s >= 2. For p = 0 the sum is
    // n + 1, leaving 2 on n and 1 on the constant.
    let rows = (0..d + 2)
        .map(|r| {
            let q = d + 1 - r;
            (0..d + 1)
                .map(|i| {
                    let p = d - i;
                    if q == p + 1 {
                        Rational::new(BigInt::from(2), BigInt::from(p + 1))
                    } else if p == 0 && q == 0 {
                        Rational::one()
                    } else if q >= 1 && q < p {
                        let s = p + 1 - q;
                        bernoulli.get(s) * rat_int(binomial(p as u64 + 1, s as i64) * 2u32)
                            / rat_int(p as u64 + 1)
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    TransferMatrix { d, rows }
}

/// Append-only memo of `c_1, c_2, ...`. Readers share the lock; a miss
/// extends the chain under the write lock so no one sees a partial entry.
#[derive(Debug, Default)]
pub struct CoeffCache {
    chain: RwLock<Vec<CoeffVector>>,
}

impl CoeffCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, d: usize) -> Result<CoeffVector> {
        if d == 0 {
            return Err(Error::InvalidArgument(
                "coefficient vector needs d >= 1".into(),
            ));
        }
        {
            let chain = self.chain.read().expect("coefficient cache poisoned");
            if let Some(c) = chain.get(d - 1) {
                return Ok(c.clone());
            }
        }
        let mut chain = self.chain.write().expect("coefficient cache poisoned");
        if chain.is_empty() {
            chain.push(CoeffVector::base());
        }
        let bernoulli = BernoulliTable::new(d);
        while chain.len() < d {
            let last = chain.last().expect("chain is non-empty");
            let next = transfer_matrix_with(last.d(), &bernoulli).apply(last)?;
            chain.push(next);
        }
        Ok(chain[d - 1].clone())
    }

    pub fn len(&self) -> usize {
        self.chain.read().expect("coefficient cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `c_d = M_{d-1} ... M_2 M_1 c_1`.
pub fn coeff_vector(d: usize) -> Result<CoeffVector> {
    CoeffCache::new().get(d)
}

fn pow2(exp: i64) -> Rational {
    let magnitude = BigInt::one() << exp.unsigned_abs();
    if exp >= 0 {
        rat_int(magnitude)
    } else {
        Rational::new(BigInt::one(), magnitude)
    }
}

fn fact(n: usize) -> Rational {
    rat_int(factorial(n as u64))
}

/// Closed forms for `c(d, d-j)`, `0 <= j <= 4`.
pub fn coeff_closed_form(d: usize, j: usize) -> Result<Rational> {
    if j > 4 {
        return Err(Error::UnsupportedIndex(j));
    }
    if d == 0 || j > d {
        return Err(Error::InvalidArgument(format!(
            "c(d, d-j) needs 1 <= d and j <= d, got d={d}, j={j}"
        )));
    }
    let di = d as i64;
    let value = match j {
        0 => pow2(di - 1) / fact(d),
        1 => pow2(di - 1) / fact(d - 1),
        2 => pow2(di - 2) * rat_int(di + 4) / (rat_int(6) * fact(d - 2)),
        3 => pow2(di - 2) * rat_int(di) / (rat_int(6) * fact(d - 3)),
        _ => pow2(di - 6) * rat_int(5 * di * di + 33 * di - 32) / (rat_int(45) * fact(d - 4)),
    };
    Ok(value)
}

/// The commonly quoted form `2^{d-2} d / (d-3)!` for `c(d, d-3)`. It is off
/// by a factor of 6 from the true coefficient and is kept only so reports
/// can show the discrepancy.
pub fn published_coeff_d_minus_3(d: usize) -> Result<Rational> {
    if d < 3 {
        return Err(Error::InvalidArgument(format!(
            "c(d, d-3) needs d >= 3, got {d}"
        )));
    }
    Ok(pow2(d as i64 - 2) * rat_int(d as u64) / fact(d - 3))
}

/// `c(d, d-j) = (1/d!) sum_k C(d-1, k) (-1)^j e_j(k-1, ..., k-d)`.
pub fn coeff_via_symmetric_sums(d: usize, j: usize) -> Result<Rational> {
    if d == 0 || j >= d {
        return Err(Error::InvalidArgument(format!(
            "symmetric-sum route needs 0 <= j <= d-1, got d={d}, j={j}"
        )));
    }
    let mut total = BigInt::zero();
    for k in 0..d as i64 {
        let shifted: Vec<BigInt> = (1..=d as i64).map(|i| BigInt::from(k - i)).collect();
        total += binomial(d as u64 - 1, k) * elementary_symmetric(&shifted, j)?;
    }
    if j % 2 == 1 {
        total = -total;
    }
    Ok(rat_int(total) / fact(d))
}

/// Checks the structural invariants of a coefficient vector: positive
/// entries, `c(d,0) = 1`, leading entry `2^{d-1}/d!`, integral at `n <= 2d`.
pub fn check_coeff_invariants(c: &CoeffVector) -> bool {
    let d = c.d();
    let leading = pow2(d as i64 - 1) / fact(d);
    let integral = (0..=2 * d as u64).all(|n| {
        let x = rat_int(n);
        c.entries
            .iter()
            .fold(Rational::zero(), |acc, e| acc * &x + e)
            .is_integer()
    });
    c.entries.iter().all(Signed::is_positive)
        && c.entries[d].is_one()
        && c.entries[0] == leading
        && integral
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use crate::engines::{count_closed_form, count_polynomial, WalkSpec};

    fn r(n: i64, d: i64) -> Rational {
        rational(n, d).unwrap()
    }

    fn matrix(rows: &[&[(i64, i64)]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|row| row.iter().map(|&(n, d)| r(n, d)).collect())
            .collect()
    }

    #[test]
    fn printed_transfer_matrices() {
        let m1 = matrix(&[&[(1, 1), (0, 1)], &[(0, 1), (2, 1)], &[(0, 1), (1, 1)]]);
        assert_eq!(transfer_matrix(1).unwrap().rows(), m1.as_slice());
        let m2 = matrix(&[
            &[(2, 3), (0, 1), (0, 1)],
            &[(0, 1), (1, 1), (0, 1)],
            &[(1, 3), (0, 1), (2, 1)],
            &[(0, 1), (0, 1), (1, 1)],
        ]);
        assert_eq!(transfer_matrix(2).unwrap().rows(), m2.as_slice());
        let m3 = matrix(&[
            &[(1, 2), (0, 1), (0, 1), (0, 1)],
            &[(0, 1), (2, 3), (0, 1), (0, 1)],
            &[(1, 2), (0, 1), (1, 1), (0, 1)],
            &[(0, 1), (1, 3), (0, 1), (2, 1)],
            &[(0, 1), (0, 1), (0, 1), (1, 1)],
        ]);
        assert_eq!(transfer_matrix(3).unwrap().rows(), m3.as_slice());
        assert!(transfer_matrix(0).is_err());
    }

    #[test]
    fn transfer_matrix_structure() {
        let bern = BernoulliTable::new(21);
        for d in 1..=20usize {
            let m = transfer_matrix(d).unwrap();
            assert_eq!(m.shape(), (d + 2, d + 1));
            let rows = m.rows();
            assert_eq!(rows[0][0], r(2, d as i64 + 1));
            assert!(rows[0][1..].iter().all(Zero::is_zero));
            assert!(rows[d + 1][..d].iter().all(Zero::is_zero));
            assert!(rows[d + 1][d].is_one());
            for (row_idx, row) in rows.iter().enumerate().take(d + 1).skip(1) {
                // Row j+1 produces c(d+1, d-j).
                let j = row_idx - 1;
                for (i, entry) in row.iter().enumerate() {
                    let expected = if i == j + 1 {
                        r(2, (d - j) as i64)
                    } else if i < j {
                        let s = j + 1 - i;
                        let top = (d + 1 - i) as u64;
                        bern.get(s) * rat_int(binomial(top, s as i64) * 2u32) / rat_int(top)
                    } else {
                        Rational::zero()
                    };
                    assert_eq!(entry, &expected, "d={d} row={row_idx} col={i}");
                    if i < j && (j + 1 - i) >= 3 && (j + 1 - i) % 2 == 1 {
                        assert!(entry.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn coefficient_vector_examples() {
        assert_eq!(coeff_vector(1).unwrap().entries(), &[r(1, 1), r(1, 1)]);
        assert_eq!(
            coeff_vector(2).unwrap().entries(),
            &[r(1, 1), r(2, 1), r(1, 1)]
        );
        assert_eq!(
            coeff_vector(3).unwrap().entries(),
            &[r(2, 3), r(2, 1), r(7, 3), r(1, 1)]
        );
        assert_eq!(
            coeff_vector(4).unwrap().entries(),
            &[r(1, 3), r(4, 3), r(8, 3), r(8, 3), r(1, 1)]
        );
        assert_eq!(
            coeff_vector(5).unwrap().entries(),
            &[r(2, 15), r(2, 3), r(2, 1), r(10, 3), r(43, 15), r(1, 1)]
        );
        assert!(coeff_vector(0).is_err());
    }

    #[test]
    fn fifth_vector_from_printed_fourth() {
        let c4 =
            CoeffVector::from_entries(vec![r(1, 3), r(4, 3), r(8, 3), r(8, 3), r(1, 1)]).unwrap();
        let c5 = transfer_matrix(4).unwrap().apply(&c4).unwrap();
        assert_eq!(c5, coeff_vector(5).unwrap());
        assert!(transfer_matrix(3).unwrap().apply(&c4).is_err());
    }

    #[test]
    fn cache_is_append_only_and_consistent() {
        let cache = CoeffCache::new();
        assert!(cache.is_empty());
        let c6 = cache.get(6).unwrap();
        assert_eq!(cache.len(), 6);
        let c3 = cache.get(3).unwrap();
        assert_eq!(cache.len(), 6);
        assert_eq!(c3, coeff_vector(3).unwrap());
        assert_eq!(c6, coeff_vector(6).unwrap());
    }

    #[test]
    fn cache_is_shareable_across_threads() {
        let cache = CoeffCache::new();
        let expected = coeff_vector(9).unwrap();
        std::thread::scope(|s| {
            for d in [9, 4, 9, 7] {
                let cache = &cache;
                s.spawn(move || cache.get(d).unwrap());
            }
        });
        assert_eq!(cache.get(9).unwrap(), expected);
    }

    #[test]
    fn coefficient_vector_invariants() {
        for d in 1..=15 {
            assert!(check_coeff_invariants(&coeff_vector(d).unwrap()), "d={d}");
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(coeff_closed_form(4, 2).unwrap(), r(8, 3));
        assert_eq!(coeff_closed_form(5, 4).unwrap(), r(43, 15));
        assert_eq!(r(258, 90), r(43, 15));
        assert_eq!(coeff_closed_form(5, 3).unwrap(), r(10, 3));
        assert_eq!(coeff_closed_form(4, 3).unwrap(), r(8, 3));
        assert_eq!(coeff_closed_form(3, 5), Err(Error::UnsupportedIndex(5)));
        assert!(coeff_closed_form(2, 3).is_err());
    }

    #[test]
    fn published_form_is_off_by_six() {
        assert_eq!(published_coeff_d_minus_3(4).unwrap(), r(16, 1));
        assert_eq!(published_coeff_d_minus_3(5).unwrap(), r(20, 1));
        for d in 3..=12 {
            assert_eq!(
                published_coeff_d_minus_3(d).unwrap(),
                coeff_closed_form(d, 3).unwrap() * rat_int(6)
            );
        }
    }

    #[test]
    fn symmetric_sum_examples() {
        assert_eq!(coeff_via_symmetric_sums(3, 1).unwrap(), r(2, 1));
        assert_eq!(coeff_via_symmetric_sums(4, 2).unwrap(), r(8, 3));
        assert_eq!(coeff_via_symmetric_sums(5, 3).unwrap(), r(10, 3));
        assert!(coeff_via_symmetric_sums(3, 3).is_err());
    }

    #[test]
    fn three_routes_reconcile() {
        for d in 1..=12usize {
            let c = coeff_vector(d).unwrap();
            for j in 0..d {
                assert_eq!(
                    &coeff_via_symmetric_sums(d, j).unwrap(),
                    c.top(j),
                    "d={d} j={j}"
                );
                if j <= 4 {
                    assert_eq!(&coeff_closed_form(d, j).unwrap(), c.top(j), "d={d} j={j}");
                }
            }
        }
    }

    #[test]
    fn first_row_product_telescopes() {
        for d in 1..=15usize {
            let product: Rational = (1..d)
                .map(|dd| transfer_matrix(dd).unwrap().rows()[0][0].clone())
                .product();
            assert_eq!(product, pow2(d as i64 - 1) / fact(d));
        }
    }

    #[test]
    fn polynomial_matches_closed_form_counts() {
        for d in 1..=8usize {
            let c = coeff_vector(d).unwrap();
            for n in 0..=30 {
                let spec = WalkSpec::new(d, n).unwrap();
                assert_eq!(count_polynomial(spec, &c).unwrap(), count_closed_form(spec));
            }
        }
    }
}
