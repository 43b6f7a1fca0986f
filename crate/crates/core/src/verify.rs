//! Invariant suites, run from the command line with `verify --suite NAME`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cg::{
    cg_from_square, reciprocity_check, regge_identity, square_from_cg, transform_polynomial,
};
use crate::enumeration::{
    franel_recurrence_check, hypergeometric_factor, oracle_path_count, p_of_s, p_recurrence_check,
    path_number, path_polynomial, row_sum_check,
};
use crate::error::{Error, Result};
use crate::group::{act, act_slots, all_elements, orbit, GROUP_ORDER};
use crate::poset::{build, vandermonde_check};
use crate::square::{upshifted_with_line_sum, SemiMagicSquare, Sextuple};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Core,
    Group,
    Enumeration,
    Poset,
    Cg,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["core", "group", "enumeration", "poset", "cg", "all"];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text {
            "core" => Ok(Suite::Core),
            "group" => Ok(Suite::Group),
            "enumeration" => Ok(Suite::Enumeration),
            "poset" => Ok(Suite::Poset),
            "cg" => Ok(Suite::Cg),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse(format!(
                "unknown suite `{other}` (expected one of {})",
                Suite::NAMES.join(", ")
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::Core => "core",
            Suite::Group => "group",
            Suite::Enumeration => "enumeration",
            Suite::Poset => "poset",
            Suite::Cg => "cg",
            Suite::All => "all",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
        })
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status}  {}/{}: {}", self.suite, self.name, self.detail)
    }
}

/// Runs a suite; `All` runs every module suite in order.
pub fn run_suite(suite: Suite) -> Vec<CheckResult> {
    match suite {
        Suite::Core => core_suite(),
        Suite::Group => group_suite(),
        Suite::Enumeration => enumeration_suite(),
        Suite::Poset => poset_suite(),
        Suite::Cg => cg_suite(),
        Suite::All => [
            core_suite(),
            group_suite(),
            enumeration_suite(),
            poset_suite(),
            cg_suite(),
        ]
        .concat(),
    }
}

/// First failing item of `items`, described by `describe`.
fn check<T>(
    suite: &'static str,
    name: &'static str,
    items: impl IntoIterator<Item = T>,
    mut ok: impl FnMut(&T) -> bool,
    describe: impl Fn(&T) -> String,
) -> CheckResult {
    let mut count = 0usize;
    for item in items {
        count += 1;
        if !ok(&item) {
            return CheckResult {
                suite,
                name,
                passed: false,
                detail: format!("counterexample {}", describe(&item)),
            };
        }
    }
    CheckResult {
        suite,
        name,
        passed: true,
        detail: format!("{count} cases"),
    }
}

fn squares_up_to(rho: u64) -> Vec<Sextuple> {
    (0..=rho).flat_map(upshifted_with_line_sum).collect()
}

/// Sum of `rho` random permutation matrices.
pub fn random_sextuple(rng: &mut impl Rng, rho: u64) -> Sextuple {
    let mut raw = [0u64; 6];
    for _ in 0..rho {
        raw[rng.gen_range(0..6)] += 1;
    }
    Sextuple::from_u64(raw)
}

fn scan_min_max(m: &SemiMagicSquare) -> (BigUint, BigUint) {
    let cells = m.entries().iter().flatten();
    let min = cells.clone().min().expect("nine entries").clone();
    let max = cells.max().expect("nine entries").clone();
    (min, max)
}

fn core_suite() -> Vec<CheckResult> {
    const S: &str = "core";
    let small = squares_up_to(8);
    let syzygy = [1, 1, 1, -1, -1, -1].map(BigInt::from);
    vec![
        check(
            S,
            "round-trip",
            &small,
            |a| a.to_square().to_sextuple() == **a,
            |a| a.to_string(),
        ),
        check(
            S,
            "syzygy",
            &small,
            |a| {
                let shifted: [BigInt; 6] =
                    std::array::from_fn(|t| a.to_signed()[t].clone() + &syzygy[t]);
                shifted.iter().any(|x| x < &BigInt::zero())
                    || crate::square::from_sextuple(&shifted).ok().as_ref() == Some(&a.to_square())
            },
            |a| a.to_string(),
        ),
        check(
            S,
            "line-sum-additivity",
            &small,
            |a| *a.to_square().line_sum() == a.line_sum(),
            |a| a.to_string(),
        ),
        check(
            S,
            "reduce-decomposition",
            &small,
            |a| {
                let d = a.reduce();
                d.recombine() == **a && (a.is_zero() || d.reduced.to_square().min_entry().is_zero())
            },
            |a| a.to_string(),
        ),
        check(
            S,
            "dual-involution",
            &small,
            |a| {
                let s = a.min_max().1;
                let d = a.dual(&s).expect("max entry bound");
                d.dual(&s).ok().as_ref() == Some(*a)
                    && a.to_square().add(&d.to_square()) == SemiMagicSquare::multiple_of_ones(&s)
            },
            |a| a.to_string(),
        ),
        check(
            S,
            "min-max-scan",
            &small,
            |a| a.min_max() == scan_min_max(&a.to_square()),
            |a| a.to_string(),
        ),
    ]
}

fn group_suite() -> Vec<CheckResult> {
    const S: &str = "group";
    let small = squares_up_to(4);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let elements = all_elements();
    let pairs: Vec<(usize, usize, Sextuple)> = (0..300)
        .map(|_| {
            let rho = rng.gen_range(0..=9);
            (
                rng.gen_range(0..GROUP_ORDER),
                rng.gen_range(0..GROUP_ORDER),
                random_sextuple(&mut rng, rho),
            )
        })
        .collect();
    vec![
        check(
            S,
            "group-order",
            [elements.len()],
            |&n| n == GROUP_ORDER,
            |n| format!("{n} elements"),
        ),
        check(
            S,
            "action-laws",
            &pairs,
            |(g, h, a)| {
                let (g, h) = (&elements[*g], &elements[*h]);
                let m = a.to_square();
                act(g, &act(h, &m)) == act(&g.compose(h), &m)
                    && act(&crate::GroupElement::identity(), &m) == m
            },
            |(g, h, a)| format!("g = {}, h = {}, a = {a}", elements[*g], elements[*h]),
        ),
        check(
            S,
            "matrix-slot-coherence",
            &small,
            |a| {
                elements
                    .iter()
                    .all(|g| act(g, &a.to_square()) == act_slots(g, a).to_square())
            },
            |a| a.to_string(),
        ),
        check(
            S,
            "orbit-stabilizer",
            &small,
            |a| {
                let r = orbit(&a.to_square());
                r.size * r.stabilizer_order == GROUP_ORDER && r.size == r.orbit_class.orbit_size()
            },
            |a| a.to_string(),
        ),
        check(
            S,
            "dual-orbit-sizes",
            &small,
            |a| {
                let s = a.min_max().1;
                let d = a.dual(&s).expect("max entry bound");
                orbit(&a.to_square()).size == orbit(&d.to_square()).size
            },
            |a| a.to_string(),
        ),
    ]
}

fn enumeration_suite() -> Vec<CheckResult> {
    const S: &str = "enumeration";
    let small = squares_up_to(6);
    let mut rng = ChaCha8Rng::seed_from_u64(0xface);
    let random: Vec<Sextuple> = (0..100)
        .map(|_| {
            let rho = rng.gen_range(0..=12);
            random_sextuple(&mut rng, rho)
        })
        .collect();
    let sample = squares_up_to(5);
    vec![
        check(
            S,
            "formula-oracle",
            small.iter().chain(&random),
            |a| path_number(a) == oracle_path_count(&a.to_square()),
            |a| a.to_string(),
        ),
        check(
            S,
            "orbit-invariance",
            &sample,
            |a| {
                let v = path_number(a);
                all_elements()
                    .iter()
                    .all(|g| path_number(&act_slots(g, a)) == v)
            },
            |a| a.to_string(),
        ),
        check(
            S,
            "row-sums",
            0..=7u64,
            |&t| {
                let (lhs, rhs) = row_sum_check(t);
                lhs == rhs
            },
            |t| format!("t = {t}"),
        ),
        check(
            S,
            "hypergeometric-factorization",
            &sample,
            |a| {
                let h = hypergeometric_factor(a);
                let total: BigUint = path_polynomial(a).coeffs().iter().sum();
                h.product() == num_rational::BigRational::from_integer(BigInt::from(total))
            },
            |a| a.to_string(),
        ),
        check(
            S,
            "p-of-s",
            0..=8u64,
            |&s| p_of_s(s) == path_number(&Sextuple::multiple_of_j(&BigUint::from(s))),
            |s| format!("s = {s}"),
        ),
        check(
            S,
            "franel-recurrence",
            1..=20u64,
            |&s| franel_recurrence_check(s),
            |s| format!("s = {s}"),
        ),
        check(
            S,
            "p-recurrence",
            1..=8u64,
            |&s| p_recurrence_check(s),
            |s| format!("s = {s}"),
        ),
    ]
}

fn poset_suite() -> Vec<CheckResult> {
    const S: &str = "poset";
    let posets: Vec<_> = (0..=3)
        .map(|s| build(s).expect("within default bound"))
        .collect();
    vec![
        check(
            S,
            "self-duality",
            &posets,
            |p| {
                let sizes = p.level_sizes();
                sizes.iter().eq(sizes.iter().rev())
                    && p.levels().iter().enumerate().all(|(k, level)| {
                        level.iter().all(|a| {
                            let d = p.dual(a).expect("element");
                            p.level(p.rank() - k).contains(&d)
                        })
                    })
            },
            |p| format!("s = {}", p.s()),
        ),
        check(
            S,
            "convolution",
            posets.iter().skip(1),
            |p| (0..=p.rank()).all(|k| vandermonde_check(p, k).holds()),
            |p| format!("s = {}", p.s()),
        ),
        check(
            S,
            "dp-formula-agreement",
            &posets,
            |p| {
                p.levels()
                    .iter()
                    .flatten()
                    .all(|a| p.path_number(a) == Some(&path_number(a)))
            },
            |p| format!("s = {}", p.s()),
        ),
        check(
            S,
            "extreme-covers",
            posets.iter().skip(1),
            |p| {
                let top = Sextuple::multiple_of_j(&BigUint::from(p.s()));
                p.covers_of(&Sextuple::zero()).map(|c| c.len()) == Some(6)
                    && p.covered_by(&top).map(|c| c.len()) == Some(6)
            },
            |p| format!("s = {}", p.s()),
        ),
        check(
            S,
            "orbit-closure",
            &posets,
            |p| {
                p.levels().iter().all(|level| {
                    level.iter().all(|a| {
                        all_elements()
                            .iter()
                            .all(|g| level.contains(&act_slots(g, a)))
                    })
                })
            },
            |p| format!("s = {}", p.s()),
        ),
    ]
}

fn cg_suite() -> Vec<CheckResult> {
    const S: &str = "cg";
    let small = squares_up_to(8);
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0ffee);
    let random: Vec<Sextuple> = (0..200)
        .map(|_| {
            let rho = rng.gen_range(0..=14);
            random_sextuple(&mut rng, rho)
        })
        .collect();
    let law = squares_up_to(6);
    let regge: Vec<Sextuple> = random.iter().take(20).cloned().collect();
    vec![
        check(
            S,
            "dictionary-round-trip",
            &small,
            |a| {
                let m = a.to_square();
                square_from_cg(&cg_from_square(&m)).ok().as_ref() == Some(&m)
            },
            |a| a.to_string(),
        ),
        check(
            S,
            "reciprocity",
            small.iter().chain(&random),
            |a| reciprocity_check(a).holds(),
            |a| a.to_string(),
        ),
        check(
            S,
            "transformation-law",
            &law,
            |a| {
                let source = path_polynomial(a);
                all_elements().iter().all(|g| {
                    let (t, reversed) = transform_polynomial(g, a);
                    let mut expected = source.coeffs().to_vec();
                    if reversed {
                        expected.reverse();
                    }
                    path_polynomial(&t).coeffs() == expected.as_slice()
                })
            },
            |a| a.to_string(),
        ),
        check(
            S,
            "regge-identities",
            &regge,
            |a| {
                // regge_identity panics on a failed identity
                std::panic::catch_unwind(|| {
                    all_elements().iter().for_each(|g| {
                        regge_identity(g, a);
                    })
                })
                .is_ok()
            },
            |a| a.to_string(),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn check_reports_counterexample() {
        let r = check("t", "even", [2, 4, 5, 6], |x| x % 2 == 0, |x| x.to_string());
        assert!(!r.passed);
        assert_eq!(r.detail, "counterexample 5");
        let r = check("t", "even", [2, 4], |x| x % 2 == 0, |x| x.to_string());
        assert_eq!(r.to_string(), "PASS  t/even: 2 cases");
    }

    #[test]
    fn core_suite_passes() {
        assert!(run_suite(Suite::Core).iter().all(|r| r.passed));
    }
}
