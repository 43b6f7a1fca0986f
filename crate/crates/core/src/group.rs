//! The order-72 group of line-sum preserving symmetries.
//!
//! An element is a row permutation `sigma`, a column permutation `tau` and an
//! optional transpose, acting by `M -> P_sigma M P_tau^-1` or
//! `M -> P_sigma M^T P_tau^-1`. Each element permutes the six permutation
//! matrices among themselves, so it also acts on sextuple slots; on the
//! rectangle picture this is the wreath product action (permute the two rows,
//! permute within each row).
//!
//! The slot permutation of every element is found by applying the matrix
//! action to each `P_t` and looking up which `P_u` comes out.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::square::{SemiMagicSquare, Sextuple, PERMUTATION_MATRICES};

pub const GROUP_ORDER: usize = 72;

/// Permutation of `{0, 1, 2}` stored as its image list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm3([u8; 3]);

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3([0, 1, 2]);

    pub fn new(images: [u8; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for &i in &images {
            if i > 2 || std::mem::replace(&mut seen[i as usize], true) {
                return None;
            }
        }
        Some(Perm3(images))
    }

    /// All six permutations, lexicographic by image list.
    pub fn all() -> [Perm3; 6] {
        [
            Perm3([0, 1, 2]),
            Perm3([0, 2, 1]),
            Perm3([1, 0, 2]),
            Perm3([1, 2, 0]),
            Perm3([2, 0, 1]),
            Perm3([2, 1, 0]),
        ]
    }

    pub fn apply(self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Perm3) -> Perm3 {
        Perm3(other.0.map(|i| self.0[i as usize]))
    }

    pub fn inverse(self) -> Perm3 {
        let mut inv = [0u8; 3];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img as usize] = i as u8;
        }
        Perm3(inv)
    }

    /// One-line notation on `1..3`, e.g. `"321"`.
    pub fn one_line(self) -> String {
        self.0.iter().map(|i| char::from(b'1' + i)).collect()
    }

    pub fn parse_one_line(text: &str) -> Result<Self> {
        let digits: Vec<u8> = text
            .trim()
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<_>>()
            .ok_or_else(|| {
                Error::Parse(format!("`{text}` is not a one-line permutation of 123"))
            })?;
        let images: [u8; 3] = digits
            .iter()
            .map(|d| d.wrapping_sub(1))
            .collect::<Vec<_>>()
            .try_into()
            .map_err(|_| Error::Parse(format!("`{text}` must list three images")))?;
        Perm3::new(images)
            .ok_or_else(|| Error::Parse(format!("`{text}` is not a permutation of 123")))
    }
}

/// Permutation of the six sextuple slots, stored as images: slot `t`
/// moves to slot `images[t]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlotPerm([u8; 6]);

impl SlotPerm {
    pub const IDENTITY: SlotPerm = SlotPerm([0, 1, 2, 3, 4, 5]);

    pub fn new(images: [u8; 6]) -> Option<Self> {
        let mut seen = [false; 6];
        for &i in &images {
            if i > 5 || std::mem::replace(&mut seen[i as usize], true) {
                return None;
            }
        }
        Some(SlotPerm(images))
    }

    pub fn images(self) -> [u8; 6] {
        self.0
    }

    pub fn apply(self, t: usize) -> usize {
        self.0[t] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: SlotPerm) -> SlotPerm {
        SlotPerm(other.0.map(|i| self.0[i as usize]))
    }

    pub fn inverse(self) -> SlotPerm {
        let mut inv = [0u8; 6];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img as usize] = i as u8;
        }
        SlotPerm(inv)
    }

    /// True when `{1,2,3}` and `{4,5,6}` are each mapped to themselves.
    pub fn preserves_rows(self) -> bool {
        self.0[..3].iter().all(|&i| i < 3)
    }

    /// Moves coefficients: the result has `a[t]` in slot `images[t]`.
    pub fn permute<T: Clone + Default>(self, a: &[T; 6]) -> [T; 6] {
        let mut out: [T; 6] = Default::default();
        for (t, v) in a.iter().enumerate() {
            out[self.0[t] as usize] = v.clone();
        }
        out
    }

    /// Parses disjoint cycle notation on `1..6`, e.g. `"(14)(25)(36)"`; `"()"` or `"e"` is the identity.
    pub fn parse_cycles(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "e" || text.is_empty() {
            return Ok(SlotPerm::IDENTITY);
        }
        let bad = || Error::Parse(format!("`{text}` is not cycle notation on 1..6"));
        let mut images = [0u8, 1, 2, 3, 4, 5];
        let mut used = [false; 6];
        let mut rest = text;
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let cycle: Vec<u8> = body[..close]
                .chars()
                .filter(|c| !matches!(c, ' ' | ','))
                .map(|c| match c.to_digit(10) {
                    Some(d @ 1..=6) => Ok(d as u8 - 1),
                    _ => Err(bad()),
                })
                .collect::<Result<_>>()?;
            for &p in &cycle {
                if std::mem::replace(&mut used[p as usize], true) {
                    return Err(bad());
                }
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p as usize] = cycle[(k + 1) % cycle.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(SlotPerm(images))
    }

    /// Disjoint cycle notation on `1..6`, fixed points omitted; `"e"` for the identity.
    pub fn cycles(self) -> String {
        let mut seen = [false; 6];
        let mut out = String::new();
        for start in 0..6 {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            out.push('(');
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                out.push(char::from(b'1' + i as u8));
                i = self.0[i] as usize;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push('e');
        }
        out
    }
}

impl fmt::Display for SlotPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycles())
    }
}

/// An element `R(sigma) C(tau) T^epsilon` of the symmetry group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    row: Perm3,
    col: Perm3,
    transpose: bool,
    slots: SlotPerm,
}

impl GroupElement {
    pub fn new(row: Perm3, col: Perm3, transpose: bool) -> Self {
        let slots = slot_perm_of(row, col, transpose);
        GroupElement {
            row,
            col,
            transpose,
            slots,
        }
    }

    pub fn identity() -> Self {
        Self::new(Perm3::IDENTITY, Perm3::IDENTITY, false)
    }

    pub fn row_perm(&self) -> Perm3 {
        self.row
    }

    pub fn col_perm(&self) -> Perm3 {
        self.col
    }

    pub fn is_transpose(&self) -> bool {
        self.transpose
    }

    pub fn slot_perm(&self) -> SlotPerm {
        self.slots
    }

    pub fn is_identity(&self) -> bool {
        self.slots == SlotPerm::IDENTITY
    }

    /// The element whose slot permutation is `perm`, if there is one.
    pub fn from_slot_perm(perm: SlotPerm) -> Option<Self> {
        all_elements().iter().copied().find(|g| g.slots == perm)
    }

    /// `self ∘ other`: act by `other` first.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        if self.transpose {
            // transposing swaps the roles of the inner row and column permutations
            Self::new(
                self.row.compose(other.col),
                self.col.compose(other.row),
                !other.transpose,
            )
        } else {
            Self::new(
                self.row.compose(other.row),
                self.col.compose(other.col),
                other.transpose,
            )
        }
    }

    pub fn inverse(&self) -> GroupElement {
        if self.transpose {
            Self::new(self.col.inverse(), self.row.inverse(), true)
        } else {
            Self::new(self.row.inverse(), self.col.inverse(), false)
        }
    }

    /// Matrix action on a grid: entry `(i, j)` of the (possibly transposed)
    /// input lands at `(sigma(i), tau(j))`.
    pub fn act_grid<T: Clone + Default>(&self, grid: &[[T; 3]; 3]) -> [[T; 3]; 3] {
        let mut out: [[T; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                let v = if self.transpose {
                    &grid[j][i]
                } else {
                    &grid[i][j]
                };
                out[self.row.apply(i)][self.col.apply(j)] = v.clone();
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "row": self.row.one_line(),
            "col": self.col.one_line(),
            "transpose": u8::from(self.transpose),
            "slots": self.slots.0.iter().map(|i| i + 1).collect::<Vec<_>>(),
        })
    }

    /// `R=sigma,C=tau,T=0|1` rendering.
    pub fn matrix_notation(&self) -> String {
        format!(
            "R={},C={},T={}",
            self.row.one_line(),
            self.col.one_line(),
            u8::from(self.transpose)
        )
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.slots, self.matrix_notation())
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    /// Accepts slot cycle notation (`"(14)(25)(36)"`) or `"R=321,C=123,T=0"`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.contains('=') {
            let (mut row, mut col, mut transpose) = (Perm3::IDENTITY, Perm3::IDENTITY, false);
            for part in text.split(',') {
                let (key, value) = part
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("`{part}` is not KEY=VALUE")))?;
                match key.trim() {
                    "R" | "r" => row = Perm3::parse_one_line(value)?,
                    "C" | "c" => col = Perm3::parse_one_line(value)?,
                    "T" | "t" => {
                        transpose = match value.trim() {
                            "0" => false,
                            "1" => true,
                            other => {
                                return Err(Error::Parse(format!(
                                    "T must be 0 or 1, got `{other}`"
                                )))
                            }
                        }
                    }
                    other => {
                        return Err(Error::Parse(format!(
                            "unknown key `{other}` (expected R, C or T)"
                        )))
                    }
                }
            }
            Ok(GroupElement::new(row, col, transpose))
        } else {
            let perm = SlotPerm::parse_cycles(text)?;
            GroupElement::from_slot_perm(perm).ok_or_else(|| {
                Error::InvalidGroupElement(format!(
                    "{text} does not preserve the rectangle structure"
                ))
            })
        }
    }
}

fn slot_perm_of(row: Perm3, col: Perm3, transpose: bool) -> SlotPerm {
    let g = GroupElement {
        row,
        col,
        transpose,
        slots: SlotPerm::IDENTITY,
    };
    let mut images = [0u8; 6];
    for (t, p) in PERMUTATION_MATRICES.iter().enumerate() {
        let image = g.act_grid(p);
        images[t] = PERMUTATION_MATRICES
            .iter()
            .position(|q| *q == image)
            .expect("permutation matrices are permuted among themselves") as u8;
    }
    SlotPerm(images)
}

/// The 72 elements, ordered by `(transpose, row, col)`.
pub fn all_elements() -> &'static [GroupElement] {
    static ELEMENTS: OnceLock<Vec<GroupElement>> = OnceLock::new();
    ELEMENTS.get_or_init(|| {
        let mut out = Vec::with_capacity(GROUP_ORDER);
        for transpose in [false, true] {
            for row in Perm3::all() {
                for col in Perm3::all() {
                    out.push(GroupElement::new(row, col, transpose));
                }
            }
        }
        out
    })
}

/// `g . M` via the matrix action.
pub fn act(g: &GroupElement, m: &SemiMagicSquare) -> SemiMagicSquare {
    let entries = g.act_grid(m.entries());
    SemiMagicSquare::from_parts_unchecked(entries, m.line_sum().clone())
}

/// `g . a` on sextuple slots, followed by upshifting.
pub fn act_slots(g: &GroupElement, a: &Sextuple) -> Sextuple {
    Sextuple::from_unsigned(g.slots.permute(a.slots()))
}

/// Orbit classes of the reduced part, with their orbit sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitClass {
    /// `000/000`: the multiples of `J`.
    Zero,
    /// `aa0/000`, `a00/000`.
    Class6,
    /// `aa0/aa0`, `a00/a00`.
    Class9,
    /// `ab0/000`.
    Class12,
    /// `aa0/bb0`, `aa0/d00`, `a00/b00`.
    Class18,
    /// `aa0/ab0`, `aa0/bc0`, `ab0/d00`.
    Class36a,
    /// `ab0/ab0`, symmetric only under the row swap.
    Class36b,
    /// No symmetry.
    Class72,
}

impl OrbitClass {
    pub fn orbit_size(self) -> usize {
        match self {
            OrbitClass::Zero => 1,
            OrbitClass::Class6 => 6,
            OrbitClass::Class9 => 9,
            OrbitClass::Class12 => 12,
            OrbitClass::Class18 => 18,
            OrbitClass::Class36a | OrbitClass::Class36b => 36,
            OrbitClass::Class72 => 72,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            OrbitClass::Zero => "zero",
            OrbitClass::Class6 => "class6",
            OrbitClass::Class9 => "class9",
            OrbitClass::Class12 => "class12",
            OrbitClass::Class18 => "class18",
            OrbitClass::Class36a => "class36a",
            OrbitClass::Class36b => "class36b",
            OrbitClass::Class72 => "class72",
        }
    }

    /// Isomorphism type of the stabilizer.
    pub fn stabilizer_label(self) -> &'static str {
        match self {
            OrbitClass::Zero => "G",
            OrbitClass::Class6 => "D12",
            OrbitClass::Class9 => "D8",
            OrbitClass::Class12 => "S3",
            OrbitClass::Class18 => "Z2xZ2",
            OrbitClass::Class36a | OrbitClass::Class36b => "Z2",
            OrbitClass::Class72 => "trivial",
        }
    }
}

impl fmt::Display for OrbitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Table-based classification of an orbit from its reduced rectangle.
///
/// The input is reduced first, so any upshifted sextuple is accepted. A
/// rectangle row holding a zero has 1, 3, 3 or 6 distinct arrangements
/// (shapes `000`, `a00`, `aa0`, `ab0`); the row swap doubles the count unless
/// both rows carry the same multiset.
pub fn classify_reduced(a: &Sextuple) -> OrbitClass {
    let reduced = a.reduce().reduced;
    let slots = reduced.slots();
    let sorted_row = |r: &[BigUint]| {
        let mut row = r.to_vec();
        row.sort();
        row
    };
    let top = sorted_row(&slots[..3]);
    let bottom = sorted_row(&slots[3..]);
    let arrangements = |row: &[BigUint]| match (row[1] == row[0], row[2] == row[1]) {
        (true, true) => 1,
        (true, false) | (false, true) => 3,
        (false, false) => 6,
    };
    let same_rows = top == bottom;
    let size = arrangements(&top) * arrangements(&bottom) * if same_rows { 1 } else { 2 };
    match size {
        1 => OrbitClass::Zero,
        6 => OrbitClass::Class6,
        9 => OrbitClass::Class9,
        12 => OrbitClass::Class12,
        18 => OrbitClass::Class18,
        36 if same_rows => OrbitClass::Class36b,
        36 => OrbitClass::Class36a,
        72 => OrbitClass::Class72,
        _ => unreachable!("row arrangement counts multiply to a Table-1 size"),
    }
}

/// Orbit of a square under all 72 elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    /// Lexicographically greatest upshifted sextuple in the orbit.
    pub representative: Sextuple,
    pub size: usize,
    pub stabilizer_order: usize,
    /// Elements fixing the input square.
    pub stabilizer: Vec<GroupElement>,
    pub orbit_class: OrbitClass,
    pub members: BTreeSet<SemiMagicSquare>,
}

impl OrbitReport {
    pub fn to_json(&self) -> Value {
        json!({
            "rep": self.representative.to_json(),
            "size": self.size,
            "stab_order": self.stabilizer_order,
            "class": self.orbit_class.tag(),
        })
    }
}

pub fn orbit(m: &SemiMagicSquare) -> OrbitReport {
    let mut members = BTreeSet::new();
    let mut stabilizer = Vec::new();
    for g in all_elements() {
        let image = act(g, m);
        if &image == m {
            stabilizer.push(*g);
        }
        members.insert(image);
    }
    let representative = members
        .iter()
        .map(SemiMagicSquare::to_sextuple)
        .max()
        .expect("orbit is non-empty");
    OrbitReport {
        orbit_class: classify_reduced(&representative),
        representative,
        size: members.len(),
        stabilizer_order: stabilizer.len(),
        stabilizer,
        members,
    }
}

/// Canonical orbit representative: the lexicographically greatest image.
pub fn canonical_representative(a: &Sextuple) -> Sextuple {
    all_elements()
        .iter()
        .map(|g| act_slots(g, a))
        .max()
        .expect("group is non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::square::upshifted_with_line_sum;
    use std::collections::{HashSet, VecDeque};

    fn s(a: [u64; 6]) -> Sextuple {
        Sextuple::from_u64(a)
    }

    fn cycles(text: &str) -> GroupElement {
        text.parse().unwrap()
    }

    /// Closure of a generating set under composition, by breadth-first search.
    fn generated(gens: &[SlotPerm]) -> HashSet<SlotPerm> {
        let mut seen = HashSet::from([SlotPerm::IDENTITY]);
        let mut queue = VecDeque::from([SlotPerm::IDENTITY]);
        while let Some(p) = queue.pop_front() {
            for g in gens {
                let q = g.compose(p);
                if seen.insert(q) {
                    queue.push_back(q);
                }
            }
        }
        seen
    }

    #[test]
    fn seventy_two_distinct_elements() {
        let elements = all_elements();
        assert_eq!(elements.len(), GROUP_ORDER);
        let slot_perms: HashSet<_> = elements.iter().map(|g| g.slot_perm()).collect();
        assert_eq!(slot_perms.len(), GROUP_ORDER);
        let identity = elements.iter().find(|g| g.is_identity()).unwrap();
        assert_eq!(identity, &GroupElement::identity());
    }

    #[test]
    fn slot_perms_form_the_wreath_subgroup() {
        let gens = ["(12)", "(23)", "(14)(25)(36)"].map(|c| SlotPerm::parse_cycles(c).unwrap());
        let subgroup = generated(&gens);
        assert_eq!(subgroup.len(), GROUP_ORDER);
        for g in all_elements() {
            assert!(subgroup.contains(&g.slot_perm()), "{g}");
        }
        for gen in gens {
            assert!(GroupElement::from_slot_perm(gen).is_some(), "{gen}");
        }
        // composing generators stays inside
        let prod = gens[0].compose(gens[2]);
        assert!(GroupElement::from_slot_perm(prod).is_some());
    }

    #[test]
    fn closed_under_composition_and_inverse() {
        let slot_perms: HashSet<_> = all_elements().iter().map(|g| g.slot_perm()).collect();
        for g in all_elements() {
            assert_eq!(g.compose(&g.inverse()), GroupElement::identity());
            for h in all_elements() {
                let gh = g.compose(h);
                assert_eq!(gh.slot_perm(), g.slot_perm().compose(h.slot_perm()));
                assert!(slot_perms.contains(&gh.slot_perm()));
            }
        }
    }

    #[test]
    fn row_swap_is_the_row_exchange_on_rectangles() {
        let g: GroupElement = "R=321,C=123,T=0".parse().unwrap();
        assert_eq!(g.slot_perm().cycles(), "(14)(25)(36)");
        let m = SemiMagicSquare::from_u64([[2, 5, 3], [4, 2, 4], [4, 3, 3]]).unwrap();
        assert_eq!(
            act(&g, &m),
            SemiMagicSquare::from_u64([[4, 3, 3], [4, 2, 4], [2, 5, 3]]).unwrap()
        );
        let t: GroupElement = "R=123,C=123,T=1".parse().unwrap();
        assert_eq!(act(&t, &m), m.transpose());
    }

    #[test]
    fn multiples_of_j_are_fixed() {
        let m = SemiMagicSquare::multiple_of_ones(&BigUint::from(4u32));
        for g in all_elements() {
            assert_eq!(act(g, &m), m);
        }
    }

    #[test]
    fn act_slots_examples() {
        let a = s([2, 3, 4, 0, 1, 0]);
        assert_eq!(
            act_slots(&cycles("(14)(25)(36)"), &a),
            s([2, 3, 2, 0, 1, 2])
        );
        assert_eq!(act_slots(&cycles("(12)"), &a), s([3, 2, 4, 0, 1, 0]));
        assert_eq!(act_slots(&GroupElement::identity(), &a), a);
    }

    #[test]
    fn action_laws_exhaustive_small() {
        for rho in 0..=3 {
            for a in upshifted_with_line_sum(rho) {
                let m = a.to_square();
                assert_eq!(act(&GroupElement::identity(), &m), m);
                for g in all_elements() {
                    let gm = act(g, &m);
                    assert_eq!(gm.line_sum(), m.line_sum());
                    for h in all_elements() {
                        assert_eq!(act(g, &act(h, &m)), act(&g.compose(h), &m));
                    }
                }
            }
        }
    }

    #[test]
    fn matrix_and_slot_actions_agree() {
        for rho in 0..=4 {
            for a in upshifted_with_line_sum(rho) {
                let m = a.to_square();
                for g in all_elements() {
                    assert_eq!(act_slots(g, &a).to_square(), act(g, &m), "{g} on {a}");
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let report = orbit(&s([1, 1, 0, 0, 0, 0]).to_square());
        assert_eq!((report.size, report.stabilizer_order), (6, 12));
        assert_eq!(report.orbit_class, OrbitClass::Class6);

        let report = orbit(&s([1, 0, 0, 1, 0, 0]).to_square());
        assert_eq!((report.size, report.stabilizer_order), (9, 8));
        assert_eq!(report.orbit_class, OrbitClass::Class9);

        let report = orbit(&SemiMagicSquare::multiple_of_ones(&BigUint::from(2u32)));
        assert_eq!((report.size, report.stabilizer_order), (1, 72));
        assert_eq!(report.orbit_class, OrbitClass::Zero);
        assert_eq!(report.representative, s([2, 2, 2, 0, 0, 0]));
    }

    #[test]
    fn representative_prefers_the_full_top_row() {
        // (1,1,1;1,1,0) and (2,2,1;0,0,0) share an orbit; the latter is the representative
        let a = orbit(&s([1, 1, 1, 1, 1, 0]).to_square());
        let b = orbit(&s([2, 2, 1, 0, 0, 0]).to_square());
        assert_eq!(a.representative, s([2, 2, 1, 0, 0, 0]));
        assert_eq!(a.members, b.members);
        assert_eq!(
            canonical_representative(&s([1, 1, 1, 1, 1, 0])),
            a.representative
        );
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_reduced(&s([2, 2, 1, 0, 0, 0])), OrbitClass::Class6);
        assert_eq!(
            classify_reduced(&s([2, 1, 0, 1, 0, 0])),
            OrbitClass::Class36a
        );
        assert_eq!(
            classify_reduced(&s([3, 1, 0, 2, 1, 0])),
            OrbitClass::Class72
        );
        assert_eq!(
            classify_reduced(&s([2, 1, 0, 2, 1, 0])),
            OrbitClass::Class36b
        );
        assert_eq!(classify_reduced(&Sextuple::zero()), OrbitClass::Zero);
    }

    #[test]
    fn classification_agrees_with_brute_force_orbits() {
        for rho in 0..=7 {
            for a in upshifted_with_line_sum(rho) {
                let report = orbit(&a.to_square());
                assert_eq!(report.size * report.stabilizer_order, GROUP_ORDER);
                assert_eq!(classify_reduced(&a).orbit_size(), report.size, "{a}");
                assert_eq!(report.orbit_class, classify_reduced(&a));
            }
        }
    }

    #[test]
    fn stabilizer_generators_from_table() {
        // stabilizer of aa0/000 is <(12), (45), (56)>
        let report = orbit(&s([1, 1, 0, 0, 0, 0]).to_square());
        let stab: HashSet<_> = report.stabilizer.iter().map(|g| g.slot_perm()).collect();
        let gens = ["(12)", "(45)", "(56)"].map(|c| SlotPerm::parse_cycles(c).unwrap());
        assert_eq!(stab, generated(&gens));

        let report = orbit(&s([1, 0, 0, 1, 0, 0]).to_square());
        let stab: HashSet<_> = report.stabilizer.iter().map(|g| g.slot_perm()).collect();
        let gens = ["(23)", "(56)", "(14)(25)(36)"].map(|c| SlotPerm::parse_cycles(c).unwrap());
        assert_eq!(stab, generated(&gens));
    }

    #[test]
    fn parsing_and_rendering() {
        let g = cycles("(14)(25)(36)");
        assert_eq!(g.matrix_notation(), "R=321,C=123,T=0");
        assert_eq!(
            g.to_json().to_string(),
            r#"{"col":"123","row":"321","slots":[4,5,6,1,2,3],"transpose":0}"#
        );
        assert_eq!(cycles("e"), GroupElement::identity());
        assert!(matches!(
            "(15)".parse::<GroupElement>(),
            Err(Error::InvalidGroupElement(_))
        ));
        assert!("(17)".parse::<GroupElement>().is_err());
        assert!("(12)(23)".parse::<GroupElement>().is_err());
        assert!("R=112".parse::<GroupElement>().is_err());
        for g in all_elements() {
            assert_eq!(g.slot_perm().cycles().parse::<GroupElement>().unwrap(), *g);
            assert_eq!(g.matrix_notation().parse::<GroupElement>().unwrap(), *g);
        }
    }
}
