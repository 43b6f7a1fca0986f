//! Lattice path counting in the monoid of 3x3 semi-magic squares.
//!
//! A lattice path from the zero square to `M` adds one permutation matrix
//! per step, so it is a word in `P1..P6` whose letter counts form some
//! sextuple representing `M`. For the upshifted sextuple `a` with
//! `m0 = min(a1, a2, a3)`, those representatives are
//! `(a1-t, a2-t, a3-t, a4+t, a5+t, a6+t)` for `t = 0..=m0`, giving the path
//! number as a sum of `m0 + 1` multinomials. Weighting the `t`-th term by
//! `z^t` gives the path polynomial `F(M, z)`.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::combinatorics::{binomial, multinomial, FactorialTable};
use crate::square::{upshifted_with_line_sum, SemiMagicSquare, Sextuple, PERMUTATION_MATRICES};

/// Coefficients of `F(M, z)`, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPolynomial {
    coeffs: Vec<BigUint>,
    rho: BigUint,
}

impl PathPolynomial {
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Line sum of the square the polynomial was built from.
    pub fn rho(&self) -> &BigUint {
        &self.rho
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn evaluate(&self, z: &BigInt) -> BigInt {
        // Horner, highest coefficient first
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * z + BigInt::from(c.clone()))
    }

    /// `F(M, 1)`, the path number.
    pub fn at_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// `F(M, -1)`, the alternating coefficient sum.
    pub fn at_minus_one(&self) -> BigInt {
        self.evaluate(&BigInt::from(-1))
    }
}

/// `F(M, z)` for the square represented by `a`.
pub fn path_polynomial(a: &Sextuple) -> PathPolynomial {
    let slots = a.to_i64();
    let rho: i64 = slots.iter().sum();
    let m0 = slots[..3].iter().copied().min().expect("three slots");
    debug_assert_eq!(
        BigUint::from(m0 as u64),
        a.min_max().0,
        "min(a1,a2,a3) is the minimum entry for an upshifted sextuple"
    );
    let table = FactorialTable::new(rho as u64);
    let coeffs = (0..=m0)
        .map(|t| {
            let parts: [i64; 6] =
                std::array::from_fn(|i| if i < 3 { slots[i] - t } else { slots[i] + t });
            table.multinomial(rho, &parts)
        })
        .collect();
    PathPolynomial {
        coeffs,
        rho: a.line_sum(),
    }
}

/// Number of lattice paths from the zero square to the square of `a`.
pub fn path_number(a: &Sextuple) -> BigUint {
    path_polynomial(a).at_one()
}

/// The path-number sum started from an arbitrary representative and taken
/// over every integer shift; terms with a negative part vanish.
pub fn path_number_from_representative(raw: [i64; 6]) -> BigUint {
    let rho: i64 = raw.iter().sum();
    // outside this window some part is negative
    let lo = -raw[3..].iter().copied().min().expect("three slots");
    let hi = raw[..3].iter().copied().min().expect("three slots");
    (lo..=hi)
        .map(|t| {
            let parts: [i64; 6] =
                std::array::from_fn(|i| if i < 3 { raw[i] - t } else { raw[i] + t });
            multinomial(rho, &parts)
        })
        .sum()
}

/// Terms `q(a, t)`, `t = 0..=m0`, of the factorization
/// `v(M) = multinomial(rho; a1..a6) * sum_t q(a, t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergeometricFactor {
    pub base: BigUint,
    pub terms: Vec<BigRational>,
}

impl HypergeometricFactor {
    pub fn sum(&self) -> BigRational {
        self.terms.iter().sum()
    }

    /// `base * sum q`, an integer whenever the factorization is right.
    pub fn product(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.base.clone())) * self.sum()
    }
}

/// `q(a, t) = [C(a1,t) C(a2,t) C(a3,t)] / [C(a4+t,t) C(a5+t,t) C(a6+t,t)]`.
pub fn hypergeometric_factor(a: &Sextuple) -> HypergeometricFactor {
    let slots = a.to_i64();
    let rho: i64 = slots.iter().sum();
    let m0 = slots[..3].iter().copied().min().expect("three slots");
    let terms = (0..=m0)
        .map(|t| {
            let num: BigUint = slots[..3].iter().map(|&x| binomial(x, t)).product();
            let den: BigUint = slots[3..].iter().map(|&x| binomial(x + t, t)).product();
            BigRational::new(num.into(), den.into())
        })
        .collect();
    HypergeometricFactor {
        base: multinomial(rho, &slots),
        terms,
    }
}

/// Parameters of the terminating `3F2` whose value at `-z` is
/// `F(M, z) / multinomial(rho; a1..a6)`.
///
/// Numerators are `-a1, -a2, -a3`; denominators are `a4+1, a5+1, a6+1` with
/// one unit parameter dropped (an upshifted sextuple has a zero among
/// `a4, a5, a6`, and that `(1)_t = t!` is the series' own factorial).
pub fn hypergeometric_parameters(a: &Sextuple) -> ([i64; 3], [i64; 2]) {
    let s = a.to_i64();
    let zero_slot = (3..6).find(|&i| s[i] == 0).expect("upshifted sextuple");
    let mut den = (3..6).filter(|&i| i != zero_slot).map(|i| s[i] + 1);
    (
        [-s[0], -s[1], -s[2]],
        [
            den.next().expect("two slots"),
            den.next().expect("two slots"),
        ],
    )
}

/// `(6^t, sum of v(M) over all squares with line sum t)`.
pub fn row_sum_check(t: u64) -> (BigUint, BigUint) {
    let total = upshifted_with_line_sum(t).iter().map(path_number).sum();
    (Pow::pow(BigUint::from(6u32), t), total)
}

/// Franel number `sum_t C(s, t)^3`.
pub fn franel(s: u64) -> BigUint {
    let s = s as i64;
    (0..=s).map(|t| Pow::pow(binomial(s, t), 3u32)).sum()
}

/// `p(s) = v(sJ) = multinomial(3s; s, s, s) * franel(s)`.
pub fn p_of_s(s: u64) -> BigUint {
    let si = s as i64;
    multinomial(3 * si, &[si, si, si]) * franel(s)
}

/// `(s+1)^2 F(s+1) = (7s^2+7s+2) F(s) + 8 s^2 F(s-1)` for given values.
pub fn franel_recurrence_holds(s: u64, prev: &BigUint, cur: &BigUint, next: &BigUint) -> bool {
    let s = BigUint::from(s);
    let lhs = (&s + 1u32).pow(2u32) * next;
    let rhs = (&s * &s * 7u32 + &s * 7u32 + 2u32) * cur + &s * &s * 8u32 * prev;
    lhs == rhs
}

pub fn franel_recurrence_check(s: u64) -> bool {
    assert!(s >= 1, "recurrence needs s >= 1");
    franel_recurrence_holds(s, &franel(s - 1), &franel(s), &franel(s + 1))
}

/// `(s+1)^4 p(s+1) = 3(3s+2)(3s+1)(7s^2+7s+2) p(s) + 72(9s^2-4)(9s^2-1) p(s-1)`
/// for given values.
pub fn p_recurrence_holds(s: u64, prev: &BigUint, cur: &BigUint, next: &BigUint) -> bool {
    assert!(s >= 1, "recurrence needs s >= 1");
    let s = BigUint::from(s);
    let lhs = (&s + 1u32).pow(4u32) * next;
    let sq = &s * &s;
    let first =
        (&s * 3u32 + 2u32) * (&s * 3u32 + 1u32) * (&sq * 7u32 + &s * 7u32 + 2u32) * 3u32 * cur;
    let second = (&sq * 9u32 - 4u32) * (&sq * 9u32 - 1u32) * 72u32 * prev;
    lhs == first + second
}

pub fn p_recurrence_check(s: u64) -> bool {
    p_recurrence_holds(s, &p_of_s(s - 1), &p_of_s(s), &p_of_s(s + 1))
}

/// Path count by dynamic programming over squares, independent of the
/// closed form: `v(0) = 1` and `v(N) = sum_i v(N - P_i)`, built one line sum
/// at a time over the squares below `M`.
///
/// Panics if an entry of `m` does not fit in `u64`.
pub fn oracle_path_count(m: &SemiMagicSquare) -> BigUint {
    let target = m
        .to_u64_grid()
        .expect("oracle requires machine-size entries");
    let rho: u64 = target[0].iter().sum();
    let mut level: HashMap<[[u64; 3]; 3], BigUint> = HashMap::from([([[0; 3]; 3], BigUint::one())]);
    for _ in 0..rho {
        let mut next: HashMap<[[u64; 3]; 3], BigUint> = HashMap::new();
        for (grid, count) in &level {
            for p in &PERMUTATION_MATRICES {
                let mut stepped = *grid;
                let mut fits = true;
                for r in 0..3 {
                    for c in 0..3 {
                        stepped[r][c] += u64::from(p[r][c]);
                        fits &= stepped[r][c] <= target[r][c];
                    }
                }
                if fits {
                    *next.entry(stepped).or_default() += count;
                }
            }
        }
        level = next;
    }
    level.remove(&target).unwrap_or_default()
}

/// CSV table `s,franel,p_of_s` for `s = 0..=max`.
pub fn sequences_csv(max: u64) -> String {
    let mut out = String::from("s,franel,p_of_s\n");
    for s in 0..=max {
        writeln!(out, "{s},{},{}", franel(s), p_of_s(s)).expect("write to string");
    }
    out
}

/// CSV table `t,six_pow_t,sum_v` for `t = 0..=max`.
pub fn row_sum_csv(max: u64) -> String {
    let mut out = String::from("t,six_pow_t,sum_v\n");
    for t in 0..=max {
        let (lhs, rhs) = row_sum_check(t);
        writeln!(out, "{t},{lhs},{rhs}").expect("write to string");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{act_slots, all_elements};
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn s(a: [u64; 6]) -> Sextuple {
        Sextuple::from_u64(a)
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn coeffs(a: [u64; 6]) -> Vec<u64> {
        path_polynomial(&s(a))
            .coeffs()
            .iter()
            .map(|c| c.to_u64().unwrap())
            .collect()
    }

    #[test]
    fn path_number_examples() {
        assert_eq!(path_number(&s([2, 2, 2, 0, 0, 0])), big(900));
        assert_eq!(coeffs([2, 2, 2, 0, 0, 0]), vec![90, 720, 90]);
        assert_eq!(path_number(&s([1, 1, 1, 0, 0, 0])), big(12));
        assert_eq!(path_number(&s([2, 2, 1, 0, 0, 0])), big(150));
        assert_eq!(path_number(&s([2, 1, 1, 0, 0, 0])), big(36));
        assert_eq!(path_number(&s([1, 1, 0, 1, 1, 0])), big(24));
        assert_eq!(path_number(&Sextuple::zero()), big(1));
    }

    #[test]
    fn path_polynomial_examples() {
        // 10!/(2!3!4!1!), 10!/(1!2!3!1!2!1!), 10!/(1!2!2!3!2!)
        assert_eq!(coeffs([2, 3, 4, 0, 1, 0]), vec![12600, 151200, 75600]);
        assert_eq!(coeffs([1, 1, 1, 0, 0, 0]), vec![6, 6]);
        assert_eq!(coeffs([1, 0, 0, 0, 0, 0]), vec![1]);
        let p = path_polynomial(&s([2, 3, 4, 0, 1, 0]));
        assert_eq!(p.degree(), 2);
        assert_eq!(p.rho(), &big(10));
        assert_eq!(p.at_one(), big(239400));
        assert_eq!(p.at_minus_one(), BigInt::from(-63000));
        assert_eq!(
            p.evaluate(&BigInt::from(2)),
            BigInt::from(12600 + 2 * 151200 + 4 * 75600)
        );
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            oracle_path_count(&SemiMagicSquare::multiple_of_ones(&big(2))),
            big(900)
        );
        for t in 0..6 {
            assert_eq!(
                oracle_path_count(&SemiMagicSquare::permutation_matrix(t)),
                big(1)
            );
        }
        let m = SemiMagicSquare::from_u64([[2, 5, 3], [4, 2, 4], [4, 3, 3]]).unwrap();
        assert_eq!(oracle_path_count(&m), big(239400));
        assert_eq!(oracle_path_count(&SemiMagicSquare::zero()), big(1));
    }

    #[test]
    fn hypergeometric_examples() {
        let h = hypergeometric_factor(&s([2, 2, 2, 0, 0, 0]));
        assert_eq!(h.base, big(90));
        let expected: Vec<BigRational> = [1, 8, 1]
            .iter()
            .map(|&v| BigRational::from_integer(v.into()))
            .collect();
        assert_eq!(h.terms, expected);
        assert_eq!(h.product(), BigRational::from_integer(900.into()));

        let h = hypergeometric_factor(&s([0, 3, 5, 2, 0, 1]));
        assert_eq!(h.sum(), BigRational::one());

        let h = hypergeometric_factor(&s([1, 1, 1, 0, 0, 0]));
        assert_eq!(h.base, big(6));
        assert_eq!(h.sum(), BigRational::from_integer(2.into()));
        assert_eq!(h.product(), BigRational::from_integer(12.into()));

        // terms can be proper fractions: q((2,3,4;0,1,0), 1) = 2*3*4 / (1*2*1)
        let h = hypergeometric_factor(&s([2, 3, 4, 0, 1, 0]));
        assert_eq!(h.terms[1], BigRational::from_integer(12.into()));
        assert_eq!(h.terms[2], BigRational::from_integer(6.into()));
    }

    /// Standard terminating series `sum_t prod (n_i)_t / prod (d_j)_t * x^t / t!`
    /// with rising factorials.
    fn terminating_3f2(num: [i64; 3], den: [i64; 2], x: i64) -> BigRational {
        let rising =
            |a: i64, t: i64| (0..t).fold(BigInt::one(), |acc, k| acc * BigInt::from(a + k));
        let mut total = BigRational::zero();
        for t in 0.. {
            let n: BigInt = num.iter().map(|&a| rising(a, t)).product();
            if n.is_zero() {
                break;
            }
            let d: BigInt = den.iter().map(|&b| rising(b, t)).product::<BigInt>() * rising(1, t);
            total += BigRational::new(n * BigInt::from(x).pow(t as u32), d);
        }
        total
    }

    #[test]
    fn hypergeometric_form_matches_series() {
        for rho in 0..=7 {
            for a in upshifted_with_line_sum(rho) {
                let (num, den) = hypergeometric_parameters(&a);
                let h = hypergeometric_factor(&a);
                // F(M, z) / base evaluated at z = 1 and z = -1
                assert_eq!(terminating_3f2(num, den, -1), h.sum(), "{a}");
                let p = path_polynomial(&a);
                let at_minus_one = BigRational::from_integer(p.at_minus_one());
                assert_eq!(
                    terminating_3f2(num, den, 1) * BigRational::from_integer(h.base.clone().into()),
                    at_minus_one,
                    "{a}"
                );
            }
        }
    }

    #[test]
    fn row_sum_examples() {
        assert_eq!(row_sum_check(0), (big(1), big(1)));
        assert_eq!(row_sum_check(1), (big(6), big(6)));
        assert_eq!(row_sum_check(2), (big(36), big(36)));
        for t in 3..=6 {
            let (lhs, rhs) = row_sum_check(t);
            assert_eq!(lhs, rhs, "t = {t}");
        }
    }

    #[test]
    fn sequence_values() {
        let franels: Vec<_> = (0..=5).map(franel).collect();
        assert_eq!(franels, [1u64, 2, 10, 56, 346, 2252].map(big));
        let ps: Vec<_> = (0..=5).map(p_of_s).collect();
        assert_eq!(ps, [1u64, 12, 900, 94080, 11988900, 1704214512].map(big));
        for v in 0..=8 {
            assert_eq!(p_of_s(v), path_number(&Sextuple::multiple_of_j(&big(v))));
        }
    }

    #[test]
    fn franel_ten_from_recurrence() {
        // run the recurrence forward from F(0), F(1)
        let mut vals = vec![big(1), big(2)];
        for s in 1..10u64 {
            let sb = big(s);
            let rhs = (&sb * &sb * 7u32 + &sb * 7u32 + 2u32) * &vals[s as usize]
                + &sb * &sb * 8u32 * &vals[s as usize - 1];
            let denom = (&sb + 1u32).pow(2u32);
            assert!((&rhs % &denom).is_zero());
            vals.push(rhs / denom);
        }
        assert_eq!(franel(10), vals[10]);
        for s in 1..=20 {
            assert!(franel_recurrence_check(s), "s = {s}");
        }
    }

    #[test]
    fn p_recurrence() {
        // 16 * 900 = 3*5*4*16*12 + 72*5*8*1
        assert_eq!(16 * 900, 3 * 5 * 4 * 16 * 12 + 72 * 5 * 8);
        assert!(p_recurrence_check(1));
        for v in 2..=8 {
            assert!(p_recurrence_check(v), "s = {v}");
        }
        assert!(!p_recurrence_holds(1, &big(1), &big(12), &big(901)));
        // p(6) two ways
        let from_recurrence = {
            let s = big(5);
            let sq = &s * &s;
            let rhs = (&s * 3u32 + 2u32)
                * (&s * 3u32 + 1u32)
                * (&sq * 7u32 + &s * 7u32 + 2u32)
                * 3u32
                * p_of_s(5)
                + (&sq * 9u32 - 4u32) * (&sq * 9u32 - 1u32) * 72u32 * p_of_s(4);
            rhs / (&s + 1u32).pow(4u32)
        };
        assert_eq!(p_of_s(6), from_recurrence);
    }

    #[test]
    fn csv_tables() {
        assert_eq!(
            sequences_csv(2),
            "s,franel,p_of_s\n0,1,1\n1,2,12\n2,10,900\n"
        );
        assert_eq!(row_sum_csv(1), "t,six_pow_t,sum_v\n0,1,1\n1,6,6\n");
    }

    #[test]
    fn orbit_invariance_small() {
        for rho in 0..=5 {
            for a in upshifted_with_line_sum(rho) {
                let v = path_number(&a);
                for g in all_elements() {
                    assert_eq!(path_number(&act_slots(g, &a)), v);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn representative_independence(a in prop::array::uniform6(0u64..6), shift in -5i64..5) {
            let up = Sextuple::from_u64(a);
            let mut raw = up.to_i64();
            for (i, v) in raw.iter_mut().enumerate() {
                *v += if i < 3 { shift } else { -shift };
            }
            prop_assert_eq!(path_number_from_representative(raw), path_number(&up));
        }

        #[test]
        fn factorization_is_exact(a in prop::array::uniform6(0u64..7)) {
            let a = Sextuple::from_u64(a);
            let h = hypergeometric_factor(&a);
            prop_assert_eq!(h.terms[0].clone(), BigRational::one());
            let p = path_polynomial(&a);
            prop_assert_eq!(h.product(), BigRational::from_integer(p.at_one().into()));
            prop_assert_eq!(p.coeffs().len(), h.terms.len());
            prop_assert!(!p.coeffs()[0].is_zero() && !p.coeffs().last().unwrap().is_zero());
        }
    }
}
