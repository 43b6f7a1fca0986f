//! The finite graded posets `M(3, s)` of squares with entries at most `s`.
//!
//! Elements are ranked by line sum, from the zero square at rank 0 to `sJ`
//! at rank `3s`. `N` covers `M` when `N = M + P_t` for a permutation matrix
//! `P_t`. The map `M -> sJ - M` reverses ranks, so the path numbers on dual
//! rank levels pair up into the convolution identity
//! `v(sJ) = sum over rank k of v(M) * v(sJ - M)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::group::canonical_representative;
use crate::square::{SemiMagicSquare, Sextuple};

/// Largest `s` that [`build`] accepts without an explicit limit.
pub const DEFAULT_MAX_S: u64 = 6;

#[derive(Debug, Clone)]
pub struct GradedPoset {
    s: u64,
    /// Elements of each rank, sorted by descending sextuple.
    levels: Vec<Vec<Sextuple>>,
    index: HashMap<Sextuple, (usize, usize)>,
    /// `covers[k][i]`: positions in level `k + 1` covering element `i` of level `k`.
    covers: Vec<Vec<Vec<usize>>>,
    path_numbers: Vec<Vec<BigUint>>,
}

/// `M(3, s)` with covers and path numbers, for `s <= DEFAULT_MAX_S`.
pub fn build(s: u64) -> Result<GradedPoset> {
    build_with_limit(s, DEFAULT_MAX_S)
}

pub fn build_with_limit(s: u64, limit: u64) -> Result<GradedPoset> {
    if s > limit {
        return Err(Error::ResourceBound {
            requested: s,
            limit,
        });
    }
    let mut levels: Vec<Vec<Sextuple>> = vec![Vec::new(); 3 * s as usize + 1];
    // max entry = max(a1,a2,a3) + max(a4,a5,a6), so bound the second row first
    for bottom in bounded_triples(s) {
        if bottom.iter().min() != Some(&0) {
            continue;
        }
        let m1 = *bottom.iter().max().expect("three slots");
        for top in bounded_triples(s - m1) {
            let a = [top[0], top[1], top[2], bottom[0], bottom[1], bottom[2]];
            let rank: u64 = a.iter().sum();
            levels[rank as usize].push(Sextuple::from_u64(a));
        }
    }
    for level in &mut levels {
        level.sort_by(|x, y| y.cmp(x));
    }
    let index: HashMap<Sextuple, (usize, usize)> = levels
        .iter()
        .enumerate()
        .flat_map(|(k, level)| {
            level
                .iter()
                .enumerate()
                .map(move |(i, a)| (a.clone(), (k, i)))
        })
        .collect();

    let bound = BigUint::from(s);
    let mut covers = Vec::with_capacity(levels.len());
    for (k, level) in levels.iter().enumerate() {
        let mut level_covers = Vec::with_capacity(level.len());
        for a in level {
            let mut up: Vec<usize> = (0..6)
                .filter_map(|t| {
                    let mut slots = a.slots().clone();
                    slots[t] += 1u32;
                    let b = Sextuple::from_unsigned(slots);
                    if b.min_max().1 > bound {
                        return None;
                    }
                    let &(rank, pos) = index.get(&b).expect("bounded square is enumerated");
                    debug_assert_eq!(rank, k + 1);
                    Some(pos)
                })
                .collect();
            up.sort_unstable();
            up.dedup();
            level_covers.push(up);
        }
        covers.push(level_covers);
    }

    let mut path_numbers: Vec<Vec<BigUint>> = levels
        .iter()
        .map(|l| vec![BigUint::default(); l.len()])
        .collect();
    path_numbers[0][0] = BigUint::from(1u32);
    for k in 0..levels.len() - 1 {
        let (done, rest) = path_numbers.split_at_mut(k + 1);
        for (i, v) in done[k].iter().enumerate() {
            for &j in &covers[k][i] {
                rest[0][j] += v;
            }
        }
    }

    Ok(GradedPoset {
        s,
        levels,
        index,
        covers,
        path_numbers,
    })
}

fn bounded_triples(max: u64) -> impl Iterator<Item = [u64; 3]> {
    (0..=max).flat_map(move |x| (0..=max).flat_map(move |y| (0..=max).map(move |z| [x, y, z])))
}

impl GradedPoset {
    pub fn s(&self) -> u64 {
        self.s
    }

    /// Highest rank, `3s`.
    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, k: usize) -> &[Sextuple] {
        &self.levels[k]
    }

    pub fn levels(&self) -> &[Vec<Sextuple>] {
        &self.levels
    }

    pub fn level_squares(&self, k: usize) -> Vec<SemiMagicSquare> {
        self.levels[k].iter().map(Sextuple::to_square).collect()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.covers.iter().flatten().map(Vec::len).sum()
    }

    pub fn contains(&self, a: &Sextuple) -> bool {
        self.index.contains_key(a)
    }

    /// Elements covering `a`.
    pub fn covers_of(&self, a: &Sextuple) -> Option<Vec<&Sextuple>> {
        let &(k, i) = self.index.get(a)?;
        Some(
            self.covers[k][i]
                .iter()
                .map(|&j| &self.levels[k + 1][j])
                .collect(),
        )
    }

    /// Elements covered by `a`.
    pub fn covered_by(&self, a: &Sextuple) -> Option<Vec<&Sextuple>> {
        let &(k, _) = self.index.get(a)?;
        if k == 0 {
            return Some(Vec::new());
        }
        let (_, i) = self.index[a];
        Some(
            self.covers[k - 1]
                .iter()
                .enumerate()
                .filter(|(_, up)| up.contains(&i))
                .map(|(j, _)| &self.levels[k - 1][j])
                .collect(),
        )
    }

    /// Number of saturated chains from the zero square to `a`.
    pub fn path_number(&self, a: &Sextuple) -> Option<&BigUint> {
        let &(k, i) = self.index.get(a)?;
        Some(&self.path_numbers[k][i])
    }

    pub fn level_path_numbers(&self, k: usize) -> &[BigUint] {
        &self.path_numbers[k]
    }

    /// `sJ - M`.
    pub fn dual(&self, a: &Sextuple) -> Option<Sextuple> {
        self.contains(a).then(|| {
            a.dual(&BigUint::from(self.s))
                .expect("elements are bounded by s")
        })
    }

    pub fn to_json(&self) -> Value {
        let levels: Vec<Value> = self
            .levels
            .iter()
            .map(|level| Value::Array(level.iter().map(|a| a.to_square().to_json()).collect()))
            .collect();
        let mut v = Map::new();
        for (k, level) in self.levels.iter().enumerate() {
            for (i, a) in level.iter().enumerate() {
                v.insert(
                    a.to_string(),
                    Value::String(self.path_numbers[k][i].to_string()),
                );
            }
        }
        json!({ "s": self.s, "levels": levels, "v": v })
    }
}

/// One orbit's contribution `o_M * v(M) * v(sJ - M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvolutionTerm {
    pub representative: Sextuple,
    pub orbit_size: usize,
    pub path_number: BigUint,
    pub dual_path_number: BigUint,
    pub product: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvolutionReport {
    pub s: u64,
    pub k: usize,
    /// `v(sJ)`.
    pub total: BigUint,
    /// `sum of v(M) v(sJ - M)` over rank `k`, element by element.
    pub level_sum: BigUint,
    /// Orbit-grouped terms, representatives in descending order.
    pub breakdown: Vec<ConvolutionTerm>,
}

impl ConvolutionReport {
    pub fn holds(&self) -> bool {
        let grouped: BigUint = self.breakdown.iter().map(|t| &t.product).sum();
        self.level_sum == self.total && grouped == self.total
    }

    /// `900 = 12·3·3 + 1·12·12 + 18·6·6`.
    pub fn equation(&self) -> String {
        let terms: Vec<String> = self
            .breakdown
            .iter()
            .map(|t| format!("{}·{}·{}", t.orbit_size, t.path_number, t.dual_path_number))
            .collect();
        format!("{} = {}", self.total, terms.join(" + "))
    }

    pub fn to_json(&self) -> Value {
        let breakdown: Vec<Value> = self
            .breakdown
            .iter()
            .map(|t| {
                json!({
                    "rep": t.representative.to_json(),
                    "orbit_size": t.orbit_size,
                    "v": t.path_number.to_string(),
                    "v_dual": t.dual_path_number.to_string(),
                    "product": t.product.to_string(),
                })
            })
            .collect();
        json!({
            "s": self.s,
            "k": self.k,
            "total": self.total.to_string(),
            "level_sum": self.level_sum.to_string(),
            "holds": self.holds(),
            "breakdown": breakdown,
        })
    }
}

/// Evaluates the convolution identity on rank `k` of `poset`.
pub fn vandermonde_check(poset: &GradedPoset, k: usize) -> ConvolutionReport {
    let top = Sextuple::multiple_of_j(&BigUint::from(poset.s));
    let total = poset
        .path_number(&top)
        .expect("sJ is the top element")
        .clone();
    let mut level_sum = BigUint::default();
    // representative -> (orbit size, v(M), v(M*))
    let mut orbits: BTreeMap<Sextuple, (usize, BigUint, BigUint)> = BTreeMap::new();
    for (i, a) in poset.level(k).iter().enumerate() {
        let v = &poset.path_numbers[k][i];
        let dual = poset.dual(a).expect("element of the poset");
        let v_dual = poset.path_number(&dual).expect("dual lies in the poset");
        level_sum += v * v_dual;
        let entry = orbits
            .entry(canonical_representative(a))
            .or_insert_with(|| (0, v.clone(), v_dual.clone()));
        entry.0 += 1;
    }
    let breakdown = orbits
        .into_iter()
        .rev()
        .map(
            |(representative, (orbit_size, path_number, dual_path_number))| ConvolutionTerm {
                product: &path_number * &dual_path_number * orbit_size,
                representative,
                orbit_size,
                path_number,
                dual_path_number,
            },
        )
        .collect();
    ConvolutionReport {
        s: poset.s,
        k,
        total,
        level_sum,
        breakdown,
    }
}

/// Aligned text mirroring the rank-pair layout, one line per rank up to the middle.
pub fn convolution_table(poset: &GradedPoset) -> String {
    let rank = poset.rank();
    let mut out = String::new();
    for k in 0..=rank / 2 {
        let report = vandermonde_check(poset, k);
        let label = if 2 * k == rank {
            format!("Rank  {k}")
        } else {
            format!("Ranks {k}, {}", rank - k)
        };
        writeln!(out, "{label:<12}: {}", report.equation()).expect("write to string");
    }
    out
}

/// Number of semi-magic squares `N <= M` entrywise.
pub fn order_ideal_size(m: &SemiMagicSquare) -> usize {
    let grid = m
        .to_u64_grid()
        .expect("order ideal requires machine-size entries");
    let rho: u64 = grid[0].iter().sum();
    // every slot of a representative of N <= M is at most rho(M)
    (0..=rho)
        .flat_map(crate::square::upshifted_with_line_sum)
        .filter(|a| a.to_square().is_below(m))
        .count()
}

/// Node label style for [`export_dot`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelStyle {
    Matrix,
    Rectangle,
    PathNumber,
}

impl FromStr for LabelStyle {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text {
            "matrix" => Ok(LabelStyle::Matrix),
            "rectangle" => Ok(LabelStyle::Rectangle),
            "path-number" => Ok(LabelStyle::PathNumber),
            other => Err(Error::Parse(format!(
                "unknown label style `{other}` (expected matrix, rectangle or path-number)"
            ))),
        }
    }
}

impl fmt::Display for LabelStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LabelStyle::Matrix => "matrix",
            LabelStyle::Rectangle => "rectangle",
            LabelStyle::PathNumber => "path-number",
        })
    }
}

/// Hasse diagram as a DOT digraph, one same-rank subgraph per level and
/// one edge per cover, pointing upward.
pub fn export_dot(poset: &GradedPoset, labels: LabelStyle) -> String {
    let mut out = String::new();
    let w = &mut out;
    let node = |k: usize, i: usize| format!("n{k}_{i}");
    writeln!(w, "digraph M3_{} {{", poset.s).unwrap();
    writeln!(w, "  rankdir=BT;").unwrap();
    writeln!(w, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for (k, level) in poset.levels.iter().enumerate() {
        writeln!(w, "  subgraph rank_{k} {{").unwrap();
        writeln!(w, "    rank=same;").unwrap();
        for (i, a) in level.iter().enumerate() {
            let label = match labels {
                LabelStyle::Matrix => grid_label(&a.to_square()),
                LabelStyle::Rectangle => a.rectangle().replace('\n', "\\n"),
                LabelStyle::PathNumber => {
                    format!(
                        "{}\\nv = {}",
                        a.rectangle().replace('\n', "\\n"),
                        poset.path_numbers[k][i]
                    )
                }
            };
            writeln!(w, "    {} [label=\"{label}\"];", node(k, i)).unwrap();
        }
        writeln!(w, "  }}").unwrap();
    }
    for (k, level_covers) in poset.covers.iter().enumerate() {
        for (i, up) in level_covers.iter().enumerate() {
            for &j in up {
                writeln!(w, "  {} -> {};", node(k, i), node(k + 1, j)).unwrap();
            }
        }
    }
    writeln!(w, "}}").unwrap();
    out
}

fn grid_label(m: &SemiMagicSquare) -> String {
    m.entries()
        .iter()
        .map(|row| {
            row.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\\n")
}

/// `(orbit size, path number)` pairs of a level, sorted.
pub fn level_orbit_profile(poset: &GradedPoset, k: usize) -> Vec<(usize, BigUint)> {
    let mut profile: Vec<(usize, BigUint)> = vandermonde_check(poset, k)
        .breakdown
        .into_iter()
        .map(|t| (t.orbit_size, t.path_number))
        .collect();
    profile.sort();
    profile
}
