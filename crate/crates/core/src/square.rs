//! Semi-magic squares of size three and their sextuple representation.
//!
//! Every 3x3 semi-magic square is a non-negative combination
//! `a1*P1 + ... + a6*P6` of the six permutation matrices listed in
//! [`PERMUTATION_MATRICES`]. The combination is unique up to the single
//! relation `P1 + P2 + P3 = P4 + P5 + P6 = J`, so a square is stored
//! canonically by its *upshifted* sextuple, the one with
//! `min(a4, a5, a6) = 0`. Drawn as a two-row rectangle, the first row holds
//! `a1 a2 a3` and the second `a4 a5 a6`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Grid of 0/1 entries for a permutation matrix.
pub type Grid01 = [[u8; 3]; 3];

/// `P1..P6` in sextuple slot order: `e, (123), (132), (13), (12), (23)`.
pub const PERMUTATION_MATRICES: [Grid01; 6] = [
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
    [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
    [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
    [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
    [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
];

/// For each matrix position, the two sextuple slots whose sum is the entry.
///
/// Row `r`, column `c` of a square equals `a[SLOT_PAIRS[r][c].0] + a[SLOT_PAIRS[r][c].1]`
/// (zero-based slots), one slot from each rectangle row.
pub const SLOT_PAIRS: [[(usize, usize); 3]; 3] = [
    [(0, 5), (2, 4), (1, 3)],
    [(1, 4), (0, 3), (2, 5)],
    [(2, 3), (1, 5), (0, 4)],
];

/// A 3x3 grid of non-negative integers with all row and column sums equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemiMagicSquare {
    entries: [[BigUint; 3]; 3],
    line_sum: BigUint,
}

impl SemiMagicSquare {
    /// Validates a grid of signed integers.
    pub fn new(entries: [[BigInt; 3]; 3]) -> Result<Self> {
        let mut unsigned: [[BigUint; 3]; 3] = Default::default();
        for r in 0..3 {
            for c in 0..3 {
                unsigned[r][c] =
                    entries[r][c]
                        .to_biguint()
                        .ok_or_else(|| Error::NegativeEntry {
                            position: 3 * r + c,
                            value: entries[r][c].to_string(),
                        })?;
            }
        }
        Self::from_unsigned(unsigned)
    }

    pub fn from_u64(entries: [[u64; 3]; 3]) -> Result<Self> {
        Self::from_unsigned(entries.map(|row| row.map(BigUint::from)))
    }

    fn from_unsigned(entries: [[BigUint; 3]; 3]) -> Result<Self> {
        let line_sum: BigUint = entries[0].iter().sum();
        for (r, row) in entries.iter().enumerate().skip(1) {
            let sum: BigUint = row.iter().sum();
            if sum != line_sum {
                return Err(Error::NotSemiMagic {
                    line: format!("row {}", r + 1),
                    found: sum.to_string(),
                    expected: line_sum.to_string(),
                });
            }
        }
        for c in 0..3 {
            let sum: BigUint = entries.iter().map(|row| &row[c]).sum();
            if sum != line_sum {
                return Err(Error::NotSemiMagic {
                    line: format!("column {}", c + 1),
                    found: sum.to_string(),
                    expected: line_sum.to_string(),
                });
            }
        }
        Ok(SemiMagicSquare { entries, line_sum })
    }

    /// Builds a square known to be semi-magic, skipping validation.
    pub(crate) fn from_parts_unchecked(entries: [[BigUint; 3]; 3], line_sum: BigUint) -> Self {
        debug_assert!(Self::from_unsigned(entries.clone()).is_ok());
        SemiMagicSquare { entries, line_sum }
    }

    pub fn zero() -> Self {
        Self::multiple_of_ones(&BigUint::zero())
    }

    /// `sJ`, the square with every entry equal to `s`.
    pub fn multiple_of_ones(s: &BigUint) -> Self {
        let entries = std::array::from_fn(|_| std::array::from_fn(|_| s.clone()));
        SemiMagicSquare {
            entries,
            line_sum: s * 3u32,
        }
    }

    pub fn permutation_matrix(slot: usize) -> Self {
        let grid = PERMUTATION_MATRICES[slot].map(|row| row.map(BigUint::from));
        SemiMagicSquare {
            entries: grid,
            line_sum: BigUint::from(1u32),
        }
    }

    pub fn entries(&self) -> &[[BigUint; 3]; 3] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigUint {
        &self.entries[row][col]
    }

    /// The common line sum, which is also the rank in the poset of squares.
    pub fn line_sum(&self) -> &BigUint {
        &self.line_sum
    }

    pub fn min_entry(&self) -> &BigUint {
        self.entries.iter().flatten().min().expect("nine entries")
    }

    pub fn max_entry(&self) -> &BigUint {
        self.entries.iter().flatten().max().expect("nine entries")
    }

    pub fn transpose(&self) -> Self {
        let entries = std::array::from_fn(|r| std::array::from_fn(|c| self.entries[c][r].clone()));
        SemiMagicSquare {
            entries,
            line_sum: self.line_sum.clone(),
        }
    }

    /// Entrywise sum; semi-magic squares are closed under addition.
    pub fn add(&self, other: &Self) -> Self {
        let entries = std::array::from_fn(|r| {
            std::array::from_fn(|c| &self.entries[r][c] + &other.entries[r][c])
        });
        SemiMagicSquare {
            entries,
            line_sum: &self.line_sum + &other.line_sum,
        }
    }

    /// Entrywise difference, or `None` when some entry would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if !other.is_below(self) {
            return None;
        }
        let entries = std::array::from_fn(|r| {
            std::array::from_fn(|c| &self.entries[r][c] - &other.entries[r][c])
        });
        Some(SemiMagicSquare {
            entries,
            line_sum: &self.line_sum - &other.line_sum,
        })
    }

    /// Entrywise comparison `self <= other`, the partial order on squares.
    pub fn is_below(&self, other: &Self) -> bool {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .all(|(x, y)| x <= y)
    }

    /// Entries as machine integers, if they all fit.
    pub fn to_u64_grid(&self) -> Option<[[u64; 3]; 3]> {
        let mut out = [[0u64; 3]; 3];
        for (out_row, row) in out.iter_mut().zip(&self.entries) {
            for (cell, entry) in out_row.iter_mut().zip(row) {
                *cell = entry.to_u64()?;
            }
        }
        Some(out)
    }

    /// The unique upshifted sextuple representing this square.
    pub fn to_sextuple(&self) -> Sextuple {
        let m = |r: usize, c: usize| BigInt::from(self.entries[r][c].clone());
        // Closed-form inversion of the slot-pair table with a4 = t.
        let t = [BigInt::zero(), m(2, 0) - m(0, 1), m(1, 1) - m(0, 0)]
            .into_iter()
            .max()
            .expect("three candidates");
        let a1 = m(1, 1) - &t;
        let a2 = m(0, 2) - &t;
        let a3 = m(2, 0) - &t;
        let a5 = m(0, 1) - &a3;
        let a6 = m(0, 0) - &a1;
        let raw = [a1, a2, a3, t, a5, a6];
        Sextuple::upshift(raw).expect("every 3x3 semi-magic square has a non-negative sextuple")
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .entries
            .iter()
            .map(|row| Value::Array(row.iter().map(big_to_json).collect()))
            .collect();
        json!({ "matrix": rows })
    }

    /// Parses `{"matrix": [[...],[...],[...]]}`.
    pub fn from_json(value: &Value) -> Result<Self> {
        let rows = value
            .get("matrix")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("expected {\"matrix\": [[..],[..],[..]]}".into()))?;
        if rows.len() != 3 {
            return Err(Error::Parse("matrix must have three rows".into()));
        }
        let mut entries: [[BigInt; 3]; 3] = Default::default();
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_array().filter(|row| row.len() == 3).ok_or_else(|| {
                Error::Parse(format!("matrix row {} must have three entries", r + 1))
            })?;
            for (c, v) in row.iter().enumerate() {
                entries[r][c] = json_to_bigint(v)?;
            }
        }
        Self::new(entries)
    }

    /// Parses `"2,5,3;4,2,4;4,3,3"` (rows separated by `;` or `/`).
    pub fn parse_rows(text: &str) -> Result<Self> {
        let rows: Vec<&str> = text.split([';', '/']).map(str::trim).collect();
        if rows.len() != 3 {
            return Err(Error::Parse(format!("expected three rows in `{text}`")));
        }
        let mut entries: [[BigInt; 3]; 3] = Default::default();
        for (r, row) in rows.iter().enumerate() {
            let values = parse_integer_list(row)?;
            if values.len() != 3 {
                return Err(Error::Parse(format!("row `{row}` must have three entries")));
            }
            for (c, v) in values.into_iter().enumerate() {
                entries[r][c] = v;
            }
        }
        Self::new(entries)
    }
}

impl fmt::Display for SemiMagicSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .flatten()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        for (r, row) in self.entries.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (c, e) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", e.to_string())?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Validates a grid of signed integers as a semi-magic square.
pub fn validate_square(entries: [[BigInt; 3]; 3]) -> Result<SemiMagicSquare> {
    SemiMagicSquare::new(entries)
}

/// Coefficients of `P1..P6` in upshifted form: `min(a4, a5, a6) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sextuple([BigUint; 6]);

impl Sextuple {
    /// Normalizes a raw coefficient vector to its upshifted representative.
    ///
    /// The shift `t*(1,1,1,-1,-1,-1)` with `t = min(a4, a5, a6)` zeroes the
    /// smallest second-row slot; the call fails when the shifted vector still
    /// has a negative entry.
    pub fn upshift(raw: [BigInt; 6]) -> Result<Self> {
        let t = raw[3..].iter().min().expect("three slots").clone();
        let mut out: [BigUint; 6] = Default::default();
        for (i, v) in raw.iter().enumerate() {
            let shifted = if i < 3 { v + &t } else { v - &t };
            out[i] = shifted
                .to_biguint()
                .ok_or_else(|| Error::Unrepresentable(format_raw(&raw)))?;
        }
        Ok(Sextuple(out))
    }

    /// Upshifts a non-negative vector; never fails.
    pub fn from_u64(raw: [u64; 6]) -> Self {
        Self::upshift(raw.map(BigInt::from)).expect("non-negative input")
    }

    pub fn from_unsigned(raw: [BigUint; 6]) -> Self {
        Self::upshift(raw.map(BigInt::from)).expect("non-negative input")
    }

    pub fn zero() -> Self {
        Sextuple(Default::default())
    }

    /// `(s, s, s, 0, 0, 0)`, the sextuple of `sJ`.
    pub fn multiple_of_j(s: &BigUint) -> Self {
        let z = BigUint::zero();
        Sextuple([s.clone(), s.clone(), s.clone(), z.clone(), z.clone(), z])
    }

    pub fn slots(&self) -> &[BigUint; 6] {
        &self.0
    }

    pub fn slot(&self, i: usize) -> &BigUint {
        &self.0[i]
    }

    pub fn to_signed(&self) -> [BigInt; 6] {
        self.0.clone().map(BigInt::from)
    }

    /// Slots as `i64`, for counting routines whose cost already bounds the size.
    ///
    /// Panics if a slot does not fit in `i64`.
    pub fn to_i64(&self) -> [i64; 6] {
        std::array::from_fn(|i| {
            self.0[i]
                .to_i64()
                .expect("sextuple slot too large for exact enumeration")
        })
    }

    /// `a1 + ... + a6`, the line sum of the represented square.
    pub fn line_sum(&self) -> BigUint {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `min(a1, a2, a3)`, which for an upshifted sextuple is the minimum
    /// entry of the square.
    pub fn m0(&self) -> &BigUint {
        self.0[..3].iter().min().expect("three slots")
    }

    pub fn to_square(&self) -> SemiMagicSquare {
        let entries = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                let (i, j) = SLOT_PAIRS[r][c];
                &self.0[i] + &self.0[j]
            })
        });
        SemiMagicSquare::from_parts_unchecked(entries, self.line_sum())
    }

    /// Splits off the largest multiple of `j = (1,1,1,0,0,0)`.
    pub fn reduce(&self) -> ReducedDecomposition {
        let m0 = self.m0().clone();
        let mut reduced = self.0.clone();
        for slot in reduced.iter_mut().take(3) {
            *slot -= &m0;
        }
        ReducedDecomposition {
            m0,
            reduced: Sextuple(reduced),
        }
    }

    /// Minimum and maximum entry of the represented square.
    pub fn min_max(&self) -> (BigUint, BigUint) {
        let (lo, hi) = min_max_entries(&self.to_signed());
        (
            lo.to_biguint().expect("non-negative"),
            hi.to_biguint().expect("non-negative"),
        )
    }

    /// The sextuple of `sJ - M`.
    ///
    /// With `m1 = max(a4, a5, a6)` and `s1 = s - m1`, the result is
    /// `(s1-a1, s1-a2, s1-a3, m1-a4, m1-a5, m1-a6)`, already upshifted.
    pub fn dual(&self, s: &BigUint) -> Result<Self> {
        let (_, max) = self.min_max();
        if &max > s {
            return Err(Error::OutOfBounds {
                max: max.to_string(),
                bound: s.to_string(),
            });
        }
        let m1 = self.0[3..].iter().max().expect("three slots").clone();
        let s1 = s - &m1;
        let out = std::array::from_fn(|i| {
            if i < 3 {
                &s1 - &self.0[i]
            } else {
                &m1 - &self.0[i]
            }
        });
        Ok(Sextuple(out))
    }

    /// Two-line rectangle picture.
    pub fn rectangle(&self) -> String {
        let width = self
            .0
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let row = |slots: &[BigUint]| {
            slots
                .iter()
                .map(|v| format!("{:>width$}", v.to_string()))
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!("{}\n{}", row(&self.0[..3]), row(&self.0[3..]))
    }

    pub fn to_json(&self) -> Value {
        json!({ "a": self.0.iter().map(big_to_json).collect::<Vec<_>>() })
    }

    /// Parses `{"a": [a1, ..., a6]}`; the vector is upshifted on entry.
    pub fn from_json(value: &Value) -> Result<Self> {
        let slots = value
            .get("a")
            .and_then(Value::as_array)
            .filter(|a| a.len() == 6)
            .ok_or_else(|| Error::Parse("expected {\"a\": [a1, a2, a3, a4, a5, a6]}".into()))?;
        let mut raw: [BigInt; 6] = Default::default();
        for (i, v) in slots.iter().enumerate() {
            raw[i] = json_to_bigint(v)?;
        }
        from_sextuple(&raw)?;
        Self::upshift(raw)
    }
}

impl FromStr for Sextuple {
    type Err = Error;

    /// Parses `"2,3,4,0,1,0"`; a `;` or `/` may separate the two rows.
    fn from_str(text: &str) -> Result<Self> {
        let values = parse_integer_list(&text.replace([';', '/'], ","))?;
        let raw: [BigInt; 6] = values
            .try_into()
            .map_err(|_| Error::Parse(format!("expected six integers in `{text}`")))?;
        from_sextuple(&raw)?;
        Self::upshift(raw)
    }
}

impl fmt::Display for Sextuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4, a5, a6] = &self.0;
        write!(f, "({a1},{a2},{a3};{a4},{a5},{a6})")
    }
}

/// `M = m0*J + M_red`, where the reduced part has a zero in each rectangle row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedDecomposition {
    pub m0: BigUint,
    pub reduced: Sextuple,
}

impl ReducedDecomposition {
    /// Reassembles `m0*j + reduced`.
    pub fn recombine(&self) -> Sextuple {
        let mut slots = self.reduced.0.clone();
        for slot in slots.iter_mut().take(3) {
            *slot += &self.m0;
        }
        Sextuple(slots)
    }

    pub fn to_json(&self) -> Value {
        json!({ "m0": big_to_json(&self.m0), "reduced": self.reduced.to_json() })
    }
}

/// `sum a_t P_t` for any non-negative coefficient vector, upshifted or not.
pub fn from_sextuple(raw: &[BigInt; 6]) -> Result<SemiMagicSquare> {
    let mut slots: [BigUint; 6] = Default::default();
    for (i, v) in raw.iter().enumerate() {
        slots[i] = v.to_biguint().ok_or_else(|| Error::NegativeEntry {
            position: i,
            value: v.to_string(),
        })?;
    }
    Ok(Sextuple(slots).to_square())
}

/// Extreme entries of the square represented by any coefficient vector.
///
/// Each entry is a sum of one first-row slot and one second-row slot, and
/// every such pair occurs, so the extremes are sums of row extremes.
pub fn min_max_entries(a: &[BigInt; 6]) -> (BigInt, BigInt) {
    let lo = a[..3].iter().min().unwrap() + a[3..].iter().min().unwrap();
    let hi = a[..3].iter().max().unwrap() + a[3..].iter().max().unwrap();
    (lo, hi)
}

/// All upshifted sextuples with the given line sum, in lexicographic order.
///
/// Each square of that line sum appears exactly once.
pub fn upshifted_with_line_sum(rho: u64) -> Vec<Sextuple> {
    let mut out = Vec::new();
    for_each_composition(rho, &mut |a| {
        if a[3].min(a[4]).min(a[5]) == 0 {
            out.push(Sextuple(a.map(BigUint::from)));
        }
    });
    out
}

fn for_each_composition(total: u64, f: &mut impl FnMut([u64; 6])) {
    fn rec(slot: usize, left: u64, cur: &mut [u64; 6], f: &mut impl FnMut([u64; 6])) {
        if slot == 5 {
            cur[5] = left;
            f(*cur);
            return;
        }
        for v in 0..=left {
            cur[slot] = v;
            rec(slot + 1, left - v, cur, f);
        }
    }
    rec(0, total, &mut [0; 6], f);
}

pub(crate) fn big_to_json<T: ToString>(v: &T) -> Value {
    Value::Number(v.to_string().parse().expect("decimal integer"))
}

pub(crate) fn json_to_bigint(v: &Value) -> Result<BigInt> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => return Err(Error::Parse(format!("expected an integer, found {other}"))),
    };
    text.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("`{text}` is not an integer")))
}

pub(crate) fn parse_integer_list(text: &str) -> Result<Vec<BigInt>> {
    text.split([',', ' '])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("`{s}` is not an integer")))
        })
        .collect()
}

fn format_raw(raw: &[BigInt; 6]) -> String {
    let parts: Vec<String> = raw.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}
