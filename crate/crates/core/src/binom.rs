//! Exact binomial coefficients.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Exact non-negative integer used for every count of sets.
pub type Natural = BigUint;

/// `C(a, b)` for arbitrary integers, with `C(a, b) = 0` whenever `b < 0`,
/// `b > a` or `a < 0`. Sums such as `C(n - q, k - q + p)` rely on this
/// truncation to drop out-of-range terms.
pub fn binomial(a: i64, b: i64) -> Natural {
    if a < 0 || b < 0 || b > a {
        return Natural::zero();
    }
    let b = b.min(a - b);
    if let Some(v) = binomial_u128(a as u128, b as u128) {
        return Natural::from(v);
    }
    binomial_big(a as u64, b as u64)
}

/// `C(a, b)` as a `u64` when it fits. Used by search code that is
/// budget-limited and never sees values above `u64::MAX`.
pub fn binomial_u64(a: i64, b: i64) -> Option<u64> {
    if a < 0 || b < 0 || b > a {
        return Some(0);
    }
    let b = b.min(a - b);
    binomial_u128(a as u128, b as u128).and_then(|v| u64::try_from(v).ok())
}

// Multiplicative formula; each partial product r * (a - b + i) / i is an
// exact binomial, so only the intermediate product can overflow.
fn binomial_u128(a: u128, b: u128) -> Option<u128> {
    let mut r: u128 = 1;
    for i in 1..=b {
        r = r.checked_mul(a - b + i)? / i;
    }
    Some(r)
}

fn binomial_big(a: u64, b: u64) -> Natural {
    let mut r = Natural::one();
    for i in 1..=b {
        r *= a - b + i;
        r /= i;
    }
    r
}

/// Converts a natural that is known to be small (a rank, a size bounded by a
/// search budget) to `u64`.
pub fn to_u64(x: &Natural) -> Option<u64> {
    u64::try_from(x).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn pascal(rows: usize) -> Vec<Vec<Natural>> {
        let mut t: Vec<Vec<Natural>> = vec![vec![Natural::one()]];
        for a in 1..=rows {
            let prev = &t[a - 1];
            let mut row = vec![Natural::one(); a + 1];
            for b in 1..a {
                row[b] = &prev[b - 1] + &prev[b];
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn small_values() {
        assert_eq!(binomial(9, 3), Natural::from(84u32));
        assert_eq!(binomial(7, 0), Natural::one());
        assert_eq!(binomial(5, 7), Natural::zero());
        assert_eq!(binomial(5, -1), Natural::zero());
        assert_eq!(binomial(-3, 0), Natural::zero());
        assert_eq!(binomial(0, 0), Natural::one());
    }

    #[test]
    fn matches_pascal_triangle_to_200() {
        // u128 fast path and BigUint path against pure additions.
        let t = pascal(200);
        for a in 0..=200usize {
            for b in 0..=a {
                assert_eq!(binomial(a as i64, b as i64), t[a][b], "C({a},{b})");
            }
        }
    }

    #[test]
    fn fast_path_agrees_with_big_path_to_64() {
        for a in 0..=64u64 {
            for b in 0..=a {
                let fast = binomial_u128(a as u128, b.min(a - b) as u128).unwrap();
                assert_eq!(Natural::from(fast), binomial_big(a, b.min(a - b)));
            }
        }
    }

    #[test]
    fn pascal_rule_to_60() {
        for a in 1..=60i64 {
            for b in 1..=a {
                assert_eq!(
                    binomial(a, b),
                    binomial(a - 1, b - 1) + binomial(a - 1, b),
                    "C({a},{b})"
                );
            }
        }
    }

    #[test]
    fn zero_exactly_out_of_range() {
        for a in -3..=30i64 {
            for b in -3..=33i64 {
                let z = binomial(a, b).is_zero();
                assert_eq!(z, b < 0 || b > a || a < 0, "C({a},{b})");
            }
        }
    }

    #[test]
    fn u64_variant() {
        assert_eq!(binomial_u64(11, 5), Some(462));
        assert_eq!(binomial_u64(3, 5), Some(0));
        assert_eq!(binomial_u64(200, 100), None);
    }
}
