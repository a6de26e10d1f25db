//! Exact scalar arithmetic and the combinatorial primitives every
//! coefficient formula in this crate is assembled from.
//!
//! All quantities are arbitrary-precision: integers are [`ExactInt`] and
//! rationals are [`ExactRational`], which is kept in lowest terms with a
//! positive denominator by construction. Nothing in this crate ever rounds.

use num_traits::{One, Zero};

/// Arbitrary-precision signed integer.
pub type ExactInt = num_bigint::BigInt;

/// Arbitrary-precision rational, always reduced and with positive denominator.
pub type ExactRational = num_rational::BigRational;

/// Binomial coefficient C(m, r), zero outside `0 <= r <= m`.
///
/// `r` is signed because the expansion and inversion sums here rely on the
/// conventions C(m, -1) = 0 and C(m, r) = 0 for r > m to keep their index
/// ranges uniform.
pub fn binomial(m: u64, r: i64) -> ExactInt {
    if r < 0 || r as u64 > m {
        return ExactInt::zero();
    }
    let r = (r as u64).min(m - r as u64);
    let mut acc = ExactInt::one();
    for i in 0..r {
        // Division is exact at every step: the partial product is C(m, i+1).
        acc = acc * (m - i) / (i + 1);
    }
    acc
}

/// Falling factorial x(x-1)...(x-m+1); the empty product (m = 0) is 1.
pub fn falling_factorial(x: i64, m: u64) -> ExactInt {
    let mut acc = ExactInt::one();
    for i in 0..m {
        acc *= x - i as i64;
    }
    acc
}

/// Iverson bracket: 1 when the condition holds, 0 otherwise.
pub fn iverson(condition: bool) -> ExactInt {
    if condition {
        ExactInt::one()
    } else {
        ExactInt::zero()
    }
}

/// n! as an exact integer.
pub fn factorial(n: u64) -> ExactInt {
    falling_factorial(n as i64, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle for `binomial`: build Pascal's triangle row by row
    /// using only additions.
    fn pascal(m: usize, r: usize) -> ExactInt {
        let mut row = vec![ExactInt::one()];
        for _ in 0..m {
            let mut next = vec![ExactInt::one()];
            for i in 1..row.len() {
                next.push(&row[i - 1] + &row[i]);
            }
            next.push(ExactInt::one());
            row = next;
        }
        row.get(r).cloned().unwrap_or_else(ExactInt::zero)
    }

    #[test]
    fn binomial_matches_pascal_oracle_to_64() {
        for m in 0..=64usize {
            for r in 0..=m {
                assert_eq!(binomial(m as u64, r as i64), pascal(m, r), "C({m}, {r})");
            }
        }
    }

    #[test]
    fn binomial_spot_values() {
        assert_eq!(binomial(6, 2), ExactInt::from(15));
        assert_eq!(binomial(4, 0), ExactInt::one());
        assert_eq!(binomial(0, 0), ExactInt::one());
        assert_eq!(
            binomial(64, 32),
            "1832624140942590534".parse::<ExactInt>().unwrap()
        );
    }

    #[test]
    fn binomial_zero_outside_range() {
        assert_eq!(binomial(3, -1), ExactInt::zero());
        assert_eq!(binomial(3, 4), ExactInt::zero());
        assert_eq!(binomial(0, 1), ExactInt::zero());
        assert_eq!(binomial(0, -5), ExactInt::zero());
    }

    #[test]
    fn binomial_symmetry_to_64() {
        for m in 0..=64i64 {
            for r in 0..=m {
                assert_eq!(binomial(m as u64, r), binomial(m as u64, m - r));
            }
        }
    }

    #[test]
    fn binomial_pascal_rule_with_edge_conventions() {
        // C(m, r) = C(m-1, r-1) + C(m-1, r), including r = 0 (left term
        // vanishes) and r = m (right term vanishes).
        for m in 1..=64u64 {
            for r in 0..=m as i64 {
                assert_eq!(
                    binomial(m, r),
                    binomial(m - 1, r - 1) + binomial(m - 1, r),
                    "Pascal rule at ({m}, {r})"
                );
            }
        }
    }

    #[test]
    fn falling_factorial_spot_values() {
        assert_eq!(falling_factorial(5, 3), ExactInt::from(60));
        assert_eq!(falling_factorial(7, 0), ExactInt::one());
        assert_eq!(falling_factorial(0, 0), ExactInt::one());
        // A factor hits zero as soon as m exceeds a nonnegative x.
        assert_eq!(falling_factorial(2, 4), ExactInt::zero());
        // Negative arguments alternate sign: (-2)(-3)(-4) = -24.
        assert_eq!(falling_factorial(-2, 3), ExactInt::from(-24));
    }

    #[test]
    fn falling_factorial_completes_factorial() {
        // x(x-1)...(x-m+1) * (x-m)! = x! for 0 <= m <= x.
        for x in 0..=64u64 {
            for m in 0..=x {
                assert_eq!(
                    falling_factorial(x as i64, m) * factorial(x - m),
                    factorial(x),
                    "({x})_({m})"
                );
            }
        }
    }

    #[test]
    fn factorial_spot_values() {
        assert_eq!(factorial(0), ExactInt::one());
        assert_eq!(factorial(1), ExactInt::one());
        assert_eq!(factorial(10), ExactInt::from(3_628_800));
    }

    #[test]
    fn iverson_is_a_zero_one_indicator() {
        assert_eq!(iverson(true), ExactInt::one());
        assert_eq!(iverson(false), ExactInt::zero());
        assert_eq!(iverson((3 - 1) % 2 == 0), ExactInt::one());
        assert_eq!(iverson((4 - 1) % 2 == 0), ExactInt::zero());
    }
}
