//! Un-normalized Clebsch-Gordan coefficients indexed by semi-magic squares.
//!
//! The tensor-product indices `(m, n, k, i, j)` of `c_{m,n,k}(i, j)` and the
//! doubled 3-j indices are projections of the square
//!
//! ```text
//! [ n-k   m-k   k     ]     [ -j1+j2+j3  j1-j2+j3  j1+j2-j3 ]
//! [ i     j     m'    ]  =  [ j1-m1      j2-m2     j3-m3    ]
//! [ m-i   n-j   i+j-k ]     [ j1+m1      j2+m2     j3+m3    ]
//! ```
//!
//! with `m' = m + n - i - j - k`. Evaluating the path polynomial at `z = -1`
//! links `C(M)` to path counting, and the group action on the polynomial
//! yields the 72 Regge symmetries as explicit identities.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::combinatorics::{binomial, multinomial};
use crate::enumeration::path_polynomial;
use crate::error::{Error, Result};
use crate::group::{act_slots, all_elements, GroupElement};
use crate::square::{json_to_bigint, parse_integer_list, SemiMagicSquare, Sextuple};

/// Tensor-product indices of `c_{m,n,k}(i, j)`.
///
/// The weight relation behind the coefficient involves a lowering operator
/// `f` and highest weight vectors `φ_N` of `V(N)`; those play no
/// computational role and are not modeled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CGIndex {
    pub m: i64,
    pub n: i64,
    pub k: i64,
    pub i: i64,
    pub j: i64,
}

impl CGIndex {
    pub fn new(m: i64, n: i64, k: i64, i: i64, j: i64) -> Self {
        CGIndex { m, n, k, i, j }
    }

    /// `m' = m + n - i - j - k`.
    pub fn m_prime(&self) -> i64 {
        self.m + self.n - self.i - self.j - self.k
    }

    /// Line sum of the square, `m + n - k`.
    pub fn rho(&self) -> i64 {
        self.m + self.n - self.k
    }

    /// `[2j1, 2j2, 2j3, 2m1, 2m2, 2m3]`.
    pub fn three_j_doubled(&self) -> [i64; 6] {
        let &CGIndex { m, n, k, i, j } = self;
        [
            m,
            n,
            m + n - 2 * k,
            m - 2 * i,
            n - 2 * j,
            2 * (i + j) - m - n,
        ]
    }

    /// The nine dictionary entries, row by row, with their symbolic names.
    fn dictionary(&self) -> [[(i64, &'static str); 3]; 3] {
        let &CGIndex { m, n, k, i, j } = self;
        [
            [(n - k, "n-k"), (m - k, "m-k"), (k, "k")],
            [(i, "i"), (j, "j"), (self.m_prime(), "m'")],
            [(m - i, "m-i"), (n - j, "n-j"), (i + j - k, "i+j-k")],
        ]
    }

    /// `3-j` symbol with half-integers written as `p/2`.
    pub fn three_j_notation(&self) -> String {
        let d = self.three_j_doubled();
        let half = |v: i64| {
            if v % 2 == 0 {
                (v / 2).to_string()
            } else {
                format!("{v}/2")
            }
        };
        format!(
            "({} {} {} | {} {} {})",
            half(d[0]),
            half(d[1]),
            half(d[2]),
            half(d[3]),
            half(d[4]),
            half(d[5])
        )
    }

    /// `c_{m,n,k}(i,j)`.
    pub fn tensor_notation(&self) -> String {
        format!(
            "c_{{{},{},{}}}({},{})",
            self.m, self.n, self.k, self.i, self.j
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "i": self.i,
            "j": self.j,
            "m_prime": self.m_prime(),
            "three_j_doubled": self.three_j_doubled().to_vec(),
        })
    }

    /// Reads `{"m", "n", "k", "i", "j"}`; derived fields are ignored.
    pub fn from_json(value: &Value) -> Result<Self> {
        let field = |name: &str| -> Result<i64> {
            let v = value
                .get(name)
                .ok_or_else(|| Error::Parse(format!("cg index is missing field `{name}`")))?;
            json_to_bigint(v)?
                .to_i64()
                .ok_or_else(|| Error::Parse(format!("cg index field `{name}` is out of range")))
        };
        Ok(CGIndex::new(
            field("m")?,
            field("n")?,
            field("k")?,
            field("i")?,
            field("j")?,
        ))
    }

    /// Parses `m,n,k,i,j`.
    pub fn parse(text: &str) -> Result<Self> {
        let values = parse_integer_list(text)?;
        if values.len() != 5 {
            return Err(Error::Parse(format!(
                "expected five indices m,n,k,i,j, found {}",
                values.len()
            )));
        }
        let v: Vec<i64> = values
            .iter()
            .map(|x| {
                x.to_i64()
                    .ok_or_else(|| Error::Parse(format!("index {x} is out of range")))
            })
            .collect::<Result<_>>()?;
        Ok(CGIndex::new(v[0], v[1], v[2], v[3], v[4]))
    }
}

/// Builds the square of a tensor-product index.
pub fn square_from_cg(idx: &CGIndex) -> Result<SemiMagicSquare> {
    let dict = idx.dictionary();
    let mut entries: [[BigInt; 3]; 3] = Default::default();
    for (row, cells) in dict.iter().enumerate() {
        for (col, &(value, name)) in cells.iter().enumerate() {
            if value < 0 {
                return Err(Error::InvalidIndex {
                    index: format!(
                        "(m,n,k,i,j) = ({},{},{},{},{})",
                        idx.m, idx.n, idx.k, idx.i, idx.j
                    ),
                    entry: name,
                });
            }
            entries[row][col] = BigInt::from(value);
        }
    }
    SemiMagicSquare::new(entries)
}

/// Reads the tensor-product index off a square.
///
/// Panics if an entry does not fit in `i64`.
pub fn cg_from_square(m: &SemiMagicSquare) -> CGIndex {
    let e = |r: usize, c: usize| m.entry(r, c).to_i64().expect("square entry fits in i64");
    let k = e(0, 2);
    CGIndex::new(e(0, 1) + k, e(0, 0) + k, k, e(1, 0), e(1, 1))
}

/// `C(M) = sum_t (-1)^t C(i+j-k, i-t) C(m-i, k-t) C(n-j, t)`.
///
/// Panics if an entry does not fit in `i64`.
pub fn cg_coefficient(m: &SemiMagicSquare) -> BigInt {
    let CGIndex { m, n, k, i, j } = cg_from_square(m);
    let low = 0.max(i - (i + j - k)).max(k - (m - i));
    let high = i.min(k).min(n - j);
    let mut total = BigInt::zero();
    for t in low..=high {
        let term =
            BigInt::from(binomial(i + j - k, i - t) * binomial(m - i, k - t) * binomial(n - j, t));
        if t % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `(rho; a1+a5, a2+a6, a3+a4)`, the multinomial pairing `F(M, -1)` with `C(M)`.
pub fn reciprocity_multinomial(a: &Sextuple) -> BigUint {
    let s = a.to_i64();
    multinomial(s.iter().sum(), &[s[0] + s[4], s[1] + s[5], s[2] + s[3]])
}

/// Both sides of the reciprocity law and the path number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reciprocity {
    /// `F(M, -1)`.
    pub lhs: BigInt,
    /// `(-1)^a2 (rho; a1+a5, a2+a6, a3+a4) C(M)`.
    pub rhs: BigInt,
    /// `F(M, 1) = v(M)`.
    pub v: BigUint,
}

impl Reciprocity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
            "v": self.v.to_string(),
            "holds": self.holds(),
        })
    }
}

/// Evaluates `F(M, -1) = (-1)^a2 (rho; a1+a5, a2+a6, a3+a4) C(M)`.
///
/// The sign carries no `m0` term: reindexing the sum for `C(M)` by
/// `t -> a2 - t` maps it term by term onto the path polynomial.
pub fn reciprocity_check(a: &Sextuple) -> Reciprocity {
    let poly = path_polynomial(a);
    let s = a.to_i64();
    let rhs =
        signed(s[1]) * BigInt::from(reciprocity_multinomial(a)) * cg_coefficient(&a.to_square());
    Reciprocity {
        lhs: poly.at_minus_one(),
        rhs,
        v: poly.at_one(),
    }
}

fn signed(exponent: i64) -> BigInt {
    if exponent.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Image of `a` under `g` and whether `g` exchanges the slot rows, in which
/// case the path polynomial of the target is the reversal of the source's.
pub fn transform_polynomial(g: &GroupElement, a: &Sextuple) -> (Sextuple, bool) {
    (act_slots(g, a), !g.slot_perm().preserves_rows())
}

/// `left·C(source) = sign·right·C(target)`, checked in exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReggeIdentity {
    pub g: GroupElement,
    pub source: Sextuple,
    pub target: Sextuple,
    pub reversed: bool,
    pub sign: i8,
    pub left_multinomial: BigUint,
    pub right_multinomial: BigUint,
    pub c_source: BigInt,
    pub c_target: BigInt,
    pub rendered: String,
}

impl ReggeIdentity {
    /// Common value of both sides.
    pub fn value(&self) -> BigInt {
        BigInt::from(self.left_multinomial.clone()) * &self.c_source
    }

    pub fn is_self_relation(&self) -> bool {
        self.source == self.target
    }

    pub fn to_json(&self) -> Value {
        json!({
            "g": self.g.to_json(),
            "sign": self.sign,
            "left_multinomial": self.left_multinomial.to_string(),
            "right_multinomial": self.right_multinomial.to_string(),
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "reversed": self.reversed,
            "c_source": self.c_source.to_string(),
            "c_target": self.c_target.to_string(),
            "value": self.value().to_string(),
            "rendered": self.rendered,
        })
    }
}

/// Regge symmetry of `C(M)` induced by `g`.
///
/// Evaluating `F(M, z) = F(M', z)` or `F(M, z) = z^m0 F(M', 1/z)` at
/// `z = -1` and applying reciprocity on both sides gives
/// `L·C(M) = (-1)^(a2 + a'2 + [reversed]·m0)·R·C(M')`, which reduces to
/// `(-1)^(a2 + a_p)` with `p` the slot that `g` moves to slot 2.
///
/// Panics if the identity fails, which would indicate an arithmetic defect.
pub fn regge_identity(g: &GroupElement, a: &Sextuple) -> ReggeIdentity {
    let (target, reversed) = transform_polynomial(g, a);
    let src = a.to_i64();
    let tgt = target.to_i64();
    let m0 = src[0].min(src[1]).min(src[2]);
    let sign_big = signed(src[1] + tgt[1] + if reversed { m0 } else { 0 });
    let sign: i8 = if sign_big.is_one() { 1 } else { -1 };

    let m = a.to_square();
    let m_prime = target.to_square();
    let left_multinomial = reciprocity_multinomial(a);
    let right_multinomial = reciprocity_multinomial(&target);
    let c_source = cg_coefficient(&m);
    let c_target = cg_coefficient(&m_prime);

    let lhs = BigInt::from(left_multinomial.clone()) * &c_source;
    let rhs = &sign_big * BigInt::from(right_multinomial.clone()) * &c_target;
    assert_eq!(lhs, rhs, "Regge identity failed for g = {g} at {a}");

    let preimage_of_2 = g.slot_perm().inverse().apply(1);
    debug_assert_eq!(sign_big, signed(src[1] + src[preimage_of_2]));

    let rendered = render_identity(
        g,
        a,
        &target,
        reversed,
        sign,
        (&left_multinomial, &right_multinomial),
        (&c_source, &c_target),
    );
    ReggeIdentity {
        g: *g,
        source: a.clone(),
        target,
        reversed,
        sign,
        left_multinomial,
        right_multinomial,
        c_source,
        c_target,
        rendered,
    }
}

/// One identity per group element.
pub fn regge_orbit_table(a: &Sextuple) -> Vec<ReggeIdentity> {
    all_elements()
        .iter()
        .map(|g| regge_identity(g, a))
        .collect()
}

/// Symbolic form of the identity in terms of the source slots, e.g.
/// `(ρ; a1+a5, a2+a6, a3+a4)·C(M) = (-1)^(a2+a5)·(ρ; a4+a2, a5+a3, a6+a1)·C(M')`.
pub fn symbolic_identity(g: &GroupElement) -> String {
    let inv = g.slot_perm().inverse();
    // slot t of g·a holds a_{inv(t)}
    let slot = |t: usize| format!("a{}", inv.apply(t) + 1);
    let right = format!(
        "(ρ; {}+{}, {}+{}, {}+{})",
        slot(0),
        slot(4),
        slot(1),
        slot(5),
        slot(2),
        slot(3)
    );
    let sign = if inv.apply(1) == 1 {
        String::new()
    } else {
        format!("(-1)^(a2+{})·", slot(1))
    };
    format!("(ρ; a1+a5, a2+a6, a3+a4)·C(M) = {sign}{right}·C(M')")
}

fn render_identity(
    g: &GroupElement,
    source: &Sextuple,
    target: &Sextuple,
    reversed: bool,
    sign: i8,
    multinomials: (&BigUint, &BigUint),
    coefficients: (&BigInt, &BigInt),
) -> String {
    let parts = |a: &Sextuple| {
        let s = a.to_i64();
        format!(
            "({}; {}, {}, {})",
            s.iter().sum::<i64>(),
            s[0] + s[4],
            s[1] + s[5],
            s[2] + s[3]
        )
    };
    let sign_text = if sign < 0 { "-" } else { "+" };
    let (ms, mt) = (source.to_square(), target.to_square());
    let (is, it) = (cg_from_square(&ms), cg_from_square(&mt));
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "g = {g}").unwrap();
    writeln!(
        w,
        "M = {source}  M' = {target}  ({})",
        if reversed { "reversed" } else { "order kept" }
    )
    .unwrap();
    writeln!(w, "{}", symbolic_identity(g)).unwrap();
    writeln!(
        w,
        "tensor: {}·{} = {sign_text}{}·{}",
        parts(source),
        is.tensor_notation(),
        parts(target),
        it.tensor_notation()
    )
    .unwrap();
    writeln!(
        w,
        "3-j:    {}·{} = {sign_text}{}·{}",
        parts(source),
        is.three_j_notation(),
        parts(target),
        it.three_j_notation()
    )
    .unwrap();
    let value = BigInt::from(multinomials.0.clone()) * coefficients.0;
    write!(
        w,
        "check:  {}·{} = {sign_text}{}·{} = {value}",
        multinomials.0, coefficients.0, multinomials.1, coefficients.1
    )
    .unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{orbit, SlotPerm};
    use crate::square::upshifted_with_line_sum;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn s(a: [u64; 6]) -> Sextuple {
        Sextuple::from_u64(a)
    }

    fn sq(rows: [[u64; 3]; 3]) -> SemiMagicSquare {
        SemiMagicSquare::from_u64(rows).unwrap()
    }

    fn cycles(text: &str) -> GroupElement {
        GroupElement::from_slot_perm(SlotPerm::parse_cycles(text).unwrap()).unwrap()
    }

    #[test]
    fn dictionary_examples() {
        let example = sq([[2, 5, 3], [4, 2, 4], [4, 3, 3]]);
        assert_eq!(
            square_from_cg(&CGIndex::new(8, 5, 3, 4, 2)).unwrap(),
            example
        );
        assert_eq!(cg_from_square(&example), CGIndex::new(8, 5, 3, 4, 2));
        assert_eq!(
            square_from_cg(&CGIndex::new(2, 2, 1, 1, 1)).unwrap(),
            SemiMagicSquare::multiple_of_ones(&BigUint::from(1u32))
        );
        assert_eq!(
            square_from_cg(&CGIndex::new(0, 0, 0, 0, 0)).unwrap(),
            SemiMagicSquare::zero()
        );
        assert_eq!(
            cg_from_square(&SemiMagicSquare::multiple_of_ones(&BigUint::from(2u32))),
            CGIndex::new(4, 4, 2, 2, 2)
        );
        assert_eq!(
            cg_from_square(&SemiMagicSquare::zero()),
            CGIndex::new(0, 0, 0, 0, 0)
        );
    }

    #[test]
    fn invalid_indices() {
        let err = square_from_cg(&CGIndex::new(2, 2, 3, 1, 1)).unwrap_err();
        assert!(matches!(err, Error::InvalidIndex { entry: "n-k", .. }));
        let err = square_from_cg(&CGIndex::new(4, 4, 2, 0, 1)).unwrap_err();
        assert!(matches!(err, Error::InvalidIndex { entry: "i+j-k", .. }));
        let err = square_from_cg(&CGIndex::new(2, 2, 2, 2, 2)).unwrap_err();
        assert!(matches!(err, Error::InvalidIndex { entry: "m'", .. }));
    }

    #[test]
    fn three_j_block() {
        let idx = CGIndex::new(8, 5, 3, 4, 2);
        assert_eq!(idx.m_prime(), 4);
        assert_eq!(idx.three_j_doubled(), [8, 5, 7, 0, 1, -1]);
        assert_eq!(idx.three_j_notation(), "(4 5/2 7/2 | 0 1/2 -1/2)");
        // the 3-j form of the square reproduces the same entries
        let d = idx.three_j_doubled();
        let (j1, j2, j3, m1, m2, m3) = (d[0], d[1], d[2], d[3], d[4], d[5]);
        let doubled = [
            [-j1 + j2 + j3, j1 - j2 + j3, j1 + j2 - j3],
            [j1 - m1, j2 - m2, j3 - m3],
            [j1 + m1, j2 + m2, j3 + m3],
        ];
        let square = square_from_cg(&idx).unwrap();
        for (r, row) in doubled.iter().enumerate() {
            for (c, &value) in row.iter().enumerate() {
                assert_eq!(BigUint::from((value / 2) as u64), *square.entry(r, c));
            }
        }
        assert_eq!(d[3] + d[4] + d[5], 0);
    }

    #[test]
    fn json_round_trip() {
        let idx = CGIndex::new(8, 5, 3, 4, 2);
        let j = idx.to_json();
        assert_eq!(j["m_prime"], 4);
        assert_eq!(j["three_j_doubled"], json!([8, 5, 7, 0, 1, -1]));
        assert_eq!(CGIndex::from_json(&j).unwrap(), idx);
        assert_eq!(CGIndex::parse("8,5,3,4,2").unwrap(), idx);
        assert!(CGIndex::parse("8,5,3").is_err());
        assert!(CGIndex::from_json(&json!({"m": 1})).is_err());
    }

    #[test]
    fn dictionary_round_trip_exhaustive() {
        for rho in 0..=8 {
            for a in upshifted_with_line_sum(rho) {
                let m = a.to_square();
                let idx = cg_from_square(&m);
                assert_eq!(square_from_cg(&idx).unwrap(), m);
                assert_eq!(idx.rho(), rho as i64);
                // rows 2 and 3 add column-wise to the line sum
                let e = |r: usize, c: usize| m.entry(r, c).to_i64().unwrap();
                assert_eq!(e(1, 0) + e(1, 1), idx.i + idx.j);
                assert_eq!(e(2, 0) + e(2, 1), (idx.m - idx.i) + (idx.n - idx.j));
                for c in 0..3 {
                    assert_eq!(e(0, c) + e(1, c) + e(2, c), rho as i64);
                }
            }
        }
    }

    #[test]
    fn coefficient_examples() {
        let ones = |k: u32| SemiMagicSquare::multiple_of_ones(&BigUint::from(k));
        assert_eq!(cg_coefficient(&ones(1)), BigInt::from(0));
        assert_eq!(cg_coefficient(&ones(2)), BigInt::from(-6));
        assert_eq!(cg_coefficient(&SemiMagicSquare::zero()), BigInt::from(1));
        assert_eq!(
            cg_coefficient(&s([2, 3, 4, 0, 1, 0]).to_square()),
            BigInt::from(15)
        );
        assert_eq!(
            cg_coefficient(&s([2, 3, 2, 0, 1, 2]).to_square()),
            BigInt::from(25)
        );
    }

    #[test]
    fn reciprocity_examples() {
        let r = reciprocity_check(&s([2, 2, 2, 0, 0, 0]));
        assert_eq!(
            (r.lhs.clone(), r.rhs.clone()),
            (BigInt::from(-540), BigInt::from(-540))
        );
        assert_eq!(r.v, BigUint::from(900u32));
        let r = reciprocity_check(&s([2, 3, 4, 0, 1, 0]));
        assert_eq!(r.lhs, BigInt::from(-63000));
        assert!(r.holds());
        assert_eq!(
            reciprocity_multinomial(&s([2, 3, 4, 0, 1, 0])),
            BigUint::from(4200u32)
        );
        // odd m0
        let r = reciprocity_check(&s([1, 1, 1, 0, 0, 1]));
        assert_eq!(
            (r.lhs.clone(), r.rhs.clone()),
            (BigInt::from(12), BigInt::from(12))
        );
        let r = reciprocity_check(&s([1, 0, 0, 0, 0, 0]));
        assert_eq!(
            (r.lhs, r.rhs, r.v),
            (BigInt::from(1), BigInt::from(1), BigUint::from(1u32))
        );
    }

    #[test]
    fn reciprocity_exhaustive_and_random() {
        for rho in 0..=8 {
            for a in upshifted_with_line_sum(rho) {
                assert!(reciprocity_check(&a).holds(), "{a}");
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let rho = rng.gen_range(0..=14u64);
            let mut raw = [0u64; 6];
            for _ in 0..rho {
                raw[rng.gen_range(0..6)] += 1;
            }
            let a = s(raw);
            assert!(reciprocity_check(&a).holds(), "{a}");
        }
    }

    #[test]
    fn transform_examples() {
        let a = s([2, 3, 4, 0, 1, 0]);
        let (t, rev) = transform_polynomial(&cycles("(12)"), &a);
        assert_eq!((t.clone(), rev), (s([3, 2, 4, 0, 1, 0]), false));
        assert_eq!(path_polynomial(&t).coeffs(), path_polynomial(&a).coeffs());

        let (t, rev) = transform_polynomial(&cycles("(14)(25)(36)"), &a);
        assert_eq!((t.clone(), rev), (s([2, 3, 2, 0, 1, 2]), true));
        let expected: Vec<BigUint> = [75600u32, 151200, 12600]
            .iter()
            .map(|&v| BigUint::from(v))
            .collect();
        assert_eq!(path_polynomial(&t).coeffs(), expected.as_slice());

        let (t, rev) = transform_polynomial(&GroupElement::identity(), &a);
        assert_eq!((t, rev), (a, false));
    }

    #[test]
    fn transformation_law() {
        for rho in 0..=6 {
            for a in upshifted_with_line_sum(rho) {
                let source = path_polynomial(&a);
                for g in all_elements() {
                    let (t, rev) = transform_polynomial(g, &a);
                    let target = path_polynomial(&t);
                    let mut expected = source.coeffs().to_vec();
                    if rev {
                        expected.reverse();
                    }
                    assert_eq!(target.coeffs(), expected.as_slice(), "g = {g}, a = {a}");
                    assert_eq!(
                        target.at_minus_one().magnitude(),
                        source.at_minus_one().magnitude()
                    );
                }
            }
        }
    }

    #[test]
    fn row_swap_identity() {
        let g = cycles("(14)(25)(36)");
        assert_eq!(
            symbolic_identity(&g),
            "(ρ; a1+a5, a2+a6, a3+a4)·C(M) = (-1)^(a2+a5)·(ρ; a4+a2, a5+a3, a6+a1)·C(M')"
        );
        let id = regge_identity(&g, &s([2, 3, 4, 0, 1, 0]));
        assert_eq!(id.target, s([2, 3, 2, 0, 1, 2]));
        assert_eq!(id.sign, 1);
        assert_eq!(id.left_multinomial, BigUint::from(4200u32));
        assert_eq!(id.right_multinomial, BigUint::from(2520u32));
        assert_eq!(
            (id.c_source.clone(), id.c_target.clone()),
            (BigInt::from(15), BigInt::from(25))
        );
        assert_eq!(id.value(), BigInt::from(63000));
        assert!(id.rendered.contains("c_{8,5,3}(4,2)"));
        assert!(id.rendered.ends_with("4200·15 = +2520·25 = 63000"));
        let j = id.to_json();
        assert_eq!(j["sign"], 1);
        assert_eq!(j["left_multinomial"], "4200");
        assert_eq!(j["right_multinomial"], "2520");

        // a2 + a5 odd flips the sign
        let id = regge_identity(&g, &s([1, 2, 3, 0, 1, 0]));
        assert_eq!(id.sign, -1);
    }

    #[test]
    fn identity_element() {
        let e = GroupElement::identity();
        assert_eq!(
            symbolic_identity(&e),
            "(ρ; a1+a5, a2+a6, a3+a4)·C(M) = (ρ; a1+a5, a2+a6, a3+a4)·C(M')"
        );
        let id = regge_identity(&e, &s([2, 3, 4, 0, 1, 0]));
        assert!(id.is_self_relation());
        assert_eq!(id.left_multinomial, id.right_multinomial);
        assert_eq!(id.sign, 1);
    }

    #[test]
    fn orbit_tables() {
        let table = regge_orbit_table(&s([1, 1, 1, 0, 0, 0]));
        assert_eq!(table.len(), 72);
        assert!(table
            .iter()
            .all(|id| id.value().is_zero() && id.is_self_relation()));

        let table = regge_orbit_table(&s([3, 3, 3, 0, 0, 0]));
        assert!(table.iter().all(ReggeIdentity::is_self_relation));

        let a = s([0, 1, 2, 0, 3, 5]);
        assert_eq!(orbit(&a.to_square()).size, 72);
        let table = regge_orbit_table(&a);
        let targets: std::collections::BTreeSet<_> =
            table.iter().map(|id| id.target.clone()).collect();
        assert_eq!(targets.len(), 72);
        let value = table[0].value();
        assert!(table.iter().all(|id| id.value() == value));
    }

    #[test]
    fn identities_hold_on_small_squares() {
        for rho in 0..=5 {
            for a in upshifted_with_line_sum(rho) {
                for id in regge_orbit_table(&a) {
                    let stabilizes = act_slots(&id.g, &a) == a;
                    assert_eq!(stabilizes, id.is_self_relation());
                }
            }
        }
    }
}
