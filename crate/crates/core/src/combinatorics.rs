//! Exact binomial and multinomial coefficients.
//!
//! Both follow the vanishing convention: a coefficient is zero whenever a
//! lower part is negative or the lower parts do not add up to the upper
//! index.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `n!` as an arbitrary-precision integer.
pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)` with signed arguments.
///
/// Returns zero when `n < 0`, `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    // The running product stays integral: after step i it equals C(n - k + i, i).
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// Multinomial coefficient `(n; parts...)`.
///
/// All parts of the upper index must be listed: the coefficient vanishes
/// unless every part is non-negative and the parts sum to `n`.
pub fn multinomial(n: i64, parts: &[i64]) -> BigUint {
    if n < 0 || parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != n {
        return BigUint::zero();
    }
    // Product of successive binomials avoids dividing one huge factorial.
    let mut acc = BigUint::one();
    let mut upper = 0i64;
    for &p in parts {
        upper += p;
        acc *= binomial(upper, p);
    }
    acc
}

/// Cached `0!, 1!, ..., n!` for repeated multinomials with a common upper index.
#[derive(Debug, Clone)]
pub struct FactorialTable {
    table: Vec<BigUint>,
}

impl FactorialTable {
    pub fn new(max: u64) -> Self {
        let mut table = Vec::with_capacity(max as usize + 1);
        table.push(BigUint::one());
        for k in 1..=max {
            let next = &table[k as usize - 1] * k;
            table.push(next);
        }
        FactorialTable { table }
    }

    pub fn max(&self) -> u64 {
        self.table.len() as u64 - 1
    }

    pub fn factorial(&self, n: u64) -> &BigUint {
        &self.table[n as usize]
    }

    /// Multinomial with the same vanishing convention as [`multinomial`].
    ///
    /// Panics if `n` exceeds the table size.
    pub fn multinomial(&self, n: i64, parts: &[i64]) -> BigUint {
        if n < 0 || parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != n {
            return BigUint::zero();
        }
        let denom = parts
            .iter()
            .fold(BigUint::one(), |acc, &p| acc * self.factorial(p as u64));
        self.factorial(n as u64) / denom
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(5, 0), BigUint::one());
        assert_eq!(binomial(5, 5), BigUint::one());
        assert_eq!(binomial(5, 6), BigUint::zero());
        assert_eq!(binomial(5, -1), BigUint::zero());
        assert_eq!(binomial(-2, 0), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn binomial_matches_pascal_rows() {
        let mut row = vec![BigUint::one()];
        for n in 1..=40i64 {
            let mut next = vec![BigUint::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for k in 0..=n {
                assert_eq!(binomial(n, k), row[k as usize], "C({n},{k})");
            }
        }
    }

    #[test]
    fn multinomial_values_and_convention() {
        assert_eq!(multinomial(6, &[2, 2, 2, 0, 0, 0]), BigUint::from(90u32));
        assert_eq!(multinomial(6, &[1, 1, 1, 1, 1, 1]), BigUint::from(720u32));
        assert_eq!(multinomial(10, &[3, 3, 4]), BigUint::from(4200u32));
        assert_eq!(multinomial(0, &[0, 0]), BigUint::one());
        // parts must account for the whole upper index
        assert_eq!(multinomial(6, &[2, 2, 1]), BigUint::zero());
        assert_eq!(multinomial(6, &[3, 4, -1]), BigUint::zero());
    }

    #[test]
    fn table_agrees_with_direct_multinomial() {
        let table = FactorialTable::new(20);
        assert_eq!(table.factorial(10), &factorial(10));
        for parts in [
            [2i64, 3, 4, 0, 1, 0],
            [1, 2, 3, 1, 2, 1],
            [0, 1, 2, 2, 3, 2],
        ] {
            assert_eq!(table.multinomial(10, &parts), multinomial(10, &parts));
        }
        assert_eq!(table.multinomial(10, &[-1, 11]), BigUint::zero());
    }
}
