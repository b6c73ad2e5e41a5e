//! Exact integer and rational kernel.
//!
//! Big integers come from `num-bigint`; rationals are `num-rational`'s
//! `BigRational`, which reduces at construction and keeps the denominator
//! positive, so structural equality is value equality.

use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

/// Builds the canonical fraction `num/den`.
pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num.into(), den))
}

/// Shorthand for an integer-valued rational.
pub fn rat_int(value: impl Into<BigInt>) -> Rational {
    Rational::from_integer(value.into())
}

/// `C(n, k)`, zero when `k` lies outside `0..=n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division is exact.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `"7/3"`, `"-1/2"`, or `"2"` when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Inverse of [`format_rational`]; accepts `"a/b"` or a bare integer.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidArgument(format!("not a rational: {text:?}"));
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            rational(num, den)
        }
        None => Ok(rat_int(text.trim().parse::<BigInt>().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use num_traits::Signed;
    use proptest::prelude::*;

    fn pascal_table(rows: usize) -> Vec<Vec<BigInt>> {
        let mut table: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=rows {
            let prev = &table[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let left = if k == 0 {
                        BigInt::zero()
                    } else {
                        prev[k - 1].clone()
                    };
                    let right = prev.get(k).cloned().unwrap_or_default();
                    left + right
                })
                .collect();
            table.push(row);
        }
        table
    }

    fn is_canonical(r: &Rational) -> bool {
        r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
    }

    #[test]
    fn rational_examples() {
        assert_eq!(rational(2, 4).unwrap(), rational(1, 2).unwrap());
        assert_eq!(format_rational(&rational(2, 4).unwrap()), "1/2");
        let zero = rational(0, 5).unwrap();
        assert_eq!(zero.numer(), &BigInt::zero());
        assert_eq!(zero.denom(), &BigInt::one());
        let neg = rational(-3, -6).unwrap();
        assert_eq!(format_rational(&neg), "1/2");
        assert_eq!(format_rational(&rational(3, -6).unwrap()), "-1/2");
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(rational(1, 0), Err(Error::ZeroDenominator));
        assert_eq!(Error::ZeroDenominator.to_string(), "zero denominator");
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(7, 9), BigInt::zero());
        assert_eq!(binomial(7, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::from(1));
        let pascal = pascal_table(10);
        assert_eq!(pascal[10][3], BigInt::from(120));
        assert_eq!(binomial(10, 3), pascal[10][3]);
    }

    #[test]
    fn binomial_matches_pascal_table() {
        let pascal = pascal_table(64);
        for n in 0..=64u64 {
            for k in 0..=n {
                assert_eq!(
                    binomial(n, k as i64),
                    pascal[n as usize][k as usize],
                    "C({n},{k})"
                );
            }
        }
    }

    #[test]
    fn binomial_symmetry_and_row_sums() {
        for n in 0..=64u64 {
            let mut sum = BigInt::zero();
            for k in 0..=n as i64 {
                assert_eq!(binomial(n, k), binomial(n, n as i64 - k));
                if n > 0 {
                    assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
                }
                sum += binomial(n, k);
            }
            assert_eq!(sum, BigInt::one() << n);
        }
    }

    #[test]
    fn absorption_identity() {
        for n in 1..=40u64 {
            for k in 0..=n as i64 {
                assert_eq!(binomial(n, k) * k, binomial(n - 1, k - 1) * n);
            }
        }
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(1), BigInt::one());
        let mut product = BigInt::one();
        for i in 1..=5u32 {
            product *= i;
        }
        assert_eq!(factorial(5), product);
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn parse_round_trip() {
        for text in ["7/3", "-1/2", "0", "5/66", "123456789012345678901234567890"] {
            assert_eq!(format_rational(&parse_rational(text).unwrap()), text);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..30).prop_map(|(n, d)| rational(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn rational_field_laws(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!(is_canonical(&(&a + &b)));
            prop_assert!(is_canonical(&(&a * &b)));
            prop_assert!(is_canonical(&(&a - &c)));
        }

        #[test]
        fn construction_is_canonical(n in -1000i64..1000, d in -1000i64..1000) {
            prop_assume!(d != 0);
            let r = rational(n, d).unwrap();
            prop_assert!(is_canonical(&r));
            prop_assert_eq!(r.numer() * d, r.denom() * n);
        }

        #[test]
        fn bigint_decimal_round_trip(digits in "-?[1-9][0-9]{0,60}") {
            let value: BigInt = digits.parse().unwrap();
            prop_assert_eq!(value.to_string(), digits);
        }
    }
}
