//! `semimagic` command-line interface.

use std::fmt::Write as _;
use std::io::{self, Read as _, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Value};

use semimagic::cg::{
    cg_coefficient, cg_from_square, reciprocity_check, regge_identity, regge_orbit_table,
    square_from_cg, CGIndex,
};
use semimagic::enumeration::{
    franel, franel_recurrence_check, hypergeometric_parameters, p_of_s, p_recurrence_check,
    path_polynomial, row_sum_check, row_sum_csv, sequences_csv,
};
use semimagic::group::orbit;
use semimagic::poset::{
    build_with_limit, convolution_table, export_dot, vandermonde_check, GradedPoset, LabelStyle,
    DEFAULT_MAX_S,
};
use semimagic::verify::{run_suite, Suite};
use semimagic::{Error, GroupElement, SemiMagicSquare, Sextuple};

/// Environment variable overriding the largest poset bound `s`.
const MAX_S_VAR: &str = "SEMIMAGIC_MAX_S";

#[derive(Debug, Parser)]
#[command(
    name = "semimagic",
    version,
    about = "Exact computations on 3x3 semi-magic squares"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

/// One way of naming a square.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SquareInput {
    /// Sextuple `a1,a2,a3,a4,a5,a6` (any representative).
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,

    /// Matrix rows, e.g. `2,5,3;4,2,4;4,3,3`.
    #[arg(long, allow_hyphen_values = true)]
    matrix: Option<String>,

    /// Tensor-product index `m,n,k,i,j`.
    #[arg(long, allow_hyphen_values = true)]
    cg: Option<String>,

    /// Inline JSON: `{"matrix": ..}`, `{"a": ..}` or `{"m": .., "n": .., ..}`.
    #[arg(long)]
    data: Option<String>,

    /// JSON file with one of the `--data` shapes; `-` reads stdin.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Show a square as matrix, sextuple, rectangle and tensor-product index.
    Convert(SquareInput),
    /// Split off the largest multiple of J.
    Reduce(SquareInput),
    /// Complement `sJ - M`.
    Dual {
        #[command(flatten)]
        square: SquareInput,
        #[arg(long)]
        s: String,
    },
    /// Path number v(M).
    V(SquareInput),
    /// Path polynomial F(M, z).
    Poly(SquareInput),
    /// Orbit under the 72-element group.
    Orbit(SquareInput),
    /// The graded poset M(3, s).
    Poset {
        #[arg(long)]
        s: u64,
        /// Emit a DOT digraph.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// DOT node labels: matrix, rectangle or path-number.
        #[arg(long, default_value = "rectangle")]
        labels: String,
    },
    /// Orbit-grouped convolution identity on M(3, s).
    Convolve {
        #[arg(long)]
        s: u64,
        /// Single rank; all ranks up to the middle when omitted.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Franel numbers and p(s) with recurrence checks.
    Sequences {
        #[arg(long)]
        max: u64,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
    },
    /// Sum of v(M) over line sum t against 6^t.
    Rowsum {
        #[arg(long)]
        t: u64,
        /// Table for every line sum up to t.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
    },
    /// Un-normalized Clebsch-Gordan coefficient C(M).
    Cg(SquareInput),
    /// Both sides of the reciprocity law at z = -1.
    Reciprocity(SquareInput),
    /// Regge symmetry identities for a square.
    Regge {
        #[command(flatten)]
        square: SquareInput,
        /// Group element: slot cycles `(14)(25)(36)` or `R=321,C=123,T=0`.
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        g: Option<String>,
        /// All 72 identities.
        #[arg(long)]
        all: bool,
    },
    /// Run an invariant suite: core, group, enumeration, poset, cg or all.
    Verify {
        #[arg(long)]
        suite: String,
    },
}

/// Output and whether the command succeeded.
struct Outcome {
    text: String,
    success: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            success: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_mode = cli.json;
    match run(&cli) {
        Ok(outcome) => {
            let mut text = outcome.text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => match io::stdout().write_all(text.as_bytes()) {
                    Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
                        Err(format!("cannot write output: {e}"))
                    }
                    _ => Ok(()),
                },
            };
            if let Err(message) = written {
                report_error(json_mode, "Io", &message);
                return ExitCode::from(1);
            }
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Domain(e)) => {
            report_error(json_mode, e.kind(), &e.to_string());
            ExitCode::from(1)
        }
        Err(CliError::Io(message)) => {
            report_error(json_mode, "Io", &message);
            ExitCode::from(1)
        }
    }
}

fn report_error(json_mode: bool, kind: &str, message: &str) {
    if json_mode {
        eprintln!(
            "{}",
            json!({ "error": { "kind": kind, "message": message } })
        );
    } else {
        eprintln!("error[{kind}]: {message}");
    }
}

enum CliError {
    Domain(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values serialize")
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    let json_mode = cli.json;
    let text = match &cli.command {
        Command::Convert(input) => {
            let m = read_square(input)?;
            let a = m.to_sextuple();
            let idx = cg_from_square(&m);
            if json_mode {
                pretty(
                    &json!({ "matrix": m.to_json()["matrix"], "a": a.to_json()["a"], "cg": idx.to_json() }),
                )
            } else {
                format!(
                    "matrix:\n{m}\nsextuple: {a}\nrectangle:\n{}\ncg: (m,n,k,i,j) = ({},{},{},{},{}), m' = {}\n3-j: {}",
                    a.rectangle(),
                    idx.m,
                    idx.n,
                    idx.k,
                    idx.i,
                    idx.j,
                    idx.m_prime(),
                    idx.three_j_notation()
                )
            }
        }
        Command::Reduce(input) => {
            let d = read_square(input)?.to_sextuple().reduce();
            if json_mode {
                pretty(&d.to_json())
            } else {
                format!(
                    "m0 = {}\nreduced: {}\n{}",
                    d.m0,
                    d.reduced,
                    d.reduced.rectangle()
                )
            }
        }
        Command::Dual { square, s } => {
            let bound: BigUint = s.trim().parse().map_err(|_| {
                Error::Parse(format!("--s expects a non-negative integer, got `{s}`"))
            })?;
            let a = read_square(square)?.to_sextuple();
            let d = a.dual(&bound)?;
            if json_mode {
                pretty(
                    &json!({ "a": d.to_json()["a"], "matrix": d.to_square().to_json()["matrix"] }),
                )
            } else {
                format!("{d}\n{}\n{}", d.rectangle(), d.to_square())
            }
        }
        Command::V(input) => {
            let a = read_square(input)?.to_sextuple();
            let v = path_polynomial(&a).at_one();
            if json_mode {
                pretty(&json!({ "v": v.to_string() }))
            } else {
                v.to_string()
            }
        }
        Command::Poly(input) => {
            let a = read_square(input)?.to_sextuple();
            let poly = path_polynomial(&a);
            let coeffs: Vec<String> = poly.coeffs().iter().map(ToString::to_string).collect();
            let (upper, lower) = hypergeometric_parameters(&a);
            if json_mode {
                pretty(&json!({
                    "a": a.to_json()["a"],
                    "coeffs": coeffs,
                    "at_one": poly.at_one().to_string(),
                    "at_minus_one": poly.at_minus_one().to_string(),
                    "hypergeometric": { "upper": upper.to_vec(), "lower": lower.to_vec() },
                }))
            } else {
                format!(
                    "coefficients: [{}]\nF(M, 1) = {}\nF(M, -1) = {}\n3F2 parameters: upper {:?}, lower {:?}",
                    coeffs.join(", "),
                    poly.at_one(),
                    poly.at_minus_one(),
                    upper,
                    lower
                )
            }
        }
        Command::Orbit(input) => {
            let report = orbit(&read_square(input)?);
            if json_mode {
                pretty(&report.to_json())
            } else {
                format!(
                    "representative: {}\n{}\norbit size: {}\nstabilizer order: {} ({})\nclass: {}",
                    report.representative,
                    report.representative.rectangle(),
                    report.size,
                    report.stabilizer_order,
                    report.orbit_class.stabilizer_label(),
                    report.orbit_class.tag()
                )
            }
        }
        Command::Poset { s, dot, labels } => {
            let labels: LabelStyle = labels.parse()?;
            let poset = build_poset(*s)?;
            if *dot {
                export_dot(&poset, labels)
            } else if json_mode {
                pretty(&poset.to_json())
            } else {
                poset_text(&poset)
            }
        }
        Command::Convolve { s, k } => {
            let poset = build_poset(*s)?;
            match k {
                Some(k) if *k > poset.rank() => {
                    return Err(Error::Parse(format!(
                        "rank {k} exceeds the top rank {}",
                        poset.rank()
                    ))
                    .into())
                }
                Some(k) => {
                    let report = vandermonde_check(&poset, *k);
                    if json_mode {
                        pretty(&report.to_json())
                    } else {
                        report.equation()
                    }
                }
                None if json_mode => pretty(&Value::Array(
                    (0..=poset.rank())
                        .map(|k| vandermonde_check(&poset, k).to_json())
                        .collect(),
                )),
                None => convolution_table(&poset),
            }
        }
        Command::Sequences { max, csv } => {
            if *csv {
                sequences_csv(*max)
            } else if json_mode {
                let rows: Vec<Value> = (0..=*max)
                    .map(|s| json!({ "s": s, "franel": franel(s).to_string(), "p_of_s": p_of_s(s).to_string() }))
                    .collect();
                pretty(&json!({ "rows": rows, "recurrences": recurrence_flags(*max) }))
            } else {
                sequences_text(*max)
            }
        }
        Command::Rowsum { t, csv } => {
            if *csv {
                row_sum_csv(*t)
            } else {
                let (six, total) = row_sum_check(*t);
                if json_mode {
                    pretty(
                        &json!({ "t": t, "six_pow_t": six.to_string(), "sum_v": total.to_string(), "equal": six == total }),
                    )
                } else {
                    format!(
                        "6^{t} = {six}\nsum of v(M) over line sum {t} = {total}\nequal: {}",
                        six == total
                    )
                }
            }
        }
        Command::Cg(input) => {
            let m = read_square(input)?;
            let idx = cg_from_square(&m);
            let c = cg_coefficient(&m);
            if json_mode {
                pretty(&json!({ "cg": idx.to_json(), "C": c.to_string() }))
            } else {
                format!(
                    "{} = {c}\n3-j: {}",
                    idx.tensor_notation(),
                    idx.three_j_notation()
                )
            }
        }
        Command::Reciprocity(input) => {
            let a = read_square(input)?.to_sextuple();
            let r = reciprocity_check(&a);
            if json_mode {
                pretty(&r.to_json())
            } else {
                format!(
                    "F(M, -1) = {}\n(-1)^a2 (rho; a1+a5, a2+a6, a3+a4) C(M) = {}\nF(M, 1) = v(M) = {}\nholds: {}",
                    r.lhs,
                    r.rhs,
                    r.v,
                    r.holds()
                )
            }
        }
        Command::Regge { square, g, all } => {
            let a = read_square(square)?.to_sextuple();
            let identities = if *all {
                regge_orbit_table(&a)
            } else {
                let spec = g.as_deref().expect("clap requires --g without --all");
                let g: GroupElement = spec.parse()?;
                vec![regge_identity(&g, &a)]
            };
            if json_mode {
                let values: Vec<Value> = identities.iter().map(|id| id.to_json()).collect();
                if *all {
                    pretty(&Value::Array(values))
                } else {
                    pretty(&values[0])
                }
            } else {
                identities
                    .iter()
                    .map(|id| id.rendered.clone())
                    .collect::<Vec<_>>()
                    .join("\n\n")
            }
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let results = run_suite(suite);
            let success = results.iter().all(|r| r.passed);
            let text = if json_mode {
                pretty(&json!({
                    "suite": suite.to_string(),
                    "passed": success,
                    "checks": results.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                }))
            } else {
                let mut out: Vec<String> = results.iter().map(ToString::to_string).collect();
                let failed = results.iter().filter(|r| !r.passed).count();
                out.push(format!("{} checks, {failed} failed", results.len()));
                out.join("\n")
            };
            return Ok(Outcome { text, success });
        }
    };
    Ok(Outcome::ok(text))
}

fn max_s() -> CliResult<u64> {
    match std::env::var(MAX_S_VAR) {
        Ok(value) => value.trim().parse().map_err(|_| {
            Error::Parse(format!(
                "{MAX_S_VAR} must be a non-negative integer, got `{value}`"
            ))
            .into()
        }),
        Err(_) => Ok(DEFAULT_MAX_S),
    }
}

fn build_poset(s: u64) -> CliResult<GradedPoset> {
    Ok(build_with_limit(s, max_s()?)?)
}

fn read_square(input: &SquareInput) -> CliResult<SemiMagicSquare> {
    if let Some(text) = &input.a {
        return Ok(text.parse::<Sextuple>()?.to_square());
    }
    if let Some(text) = &input.matrix {
        return Ok(SemiMagicSquare::parse_rows(text)?);
    }
    if let Some(text) = &input.cg {
        return Ok(square_from_cg(&CGIndex::parse(text)?)?);
    }
    let raw = match (&input.data, &input.input) {
        (Some(data), _) => data.clone(),
        (None, Some(path)) if path.as_os_str() == "-" => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Io(format!("cannot read stdin: {e}")))?;
            buf
        }
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => unreachable!("clap requires one square input"),
    };
    square_from_json(&raw)
}

fn square_from_json(raw: &str) -> CliResult<SemiMagicSquare> {
    let value: Value =
        serde_json::from_str(raw).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    if value.get("matrix").is_some() {
        Ok(SemiMagicSquare::from_json(&value)?)
    } else if value.get("a").is_some() {
        Ok(Sextuple::from_json(&value)?.to_square())
    } else if value.get("m").is_some() {
        Ok(square_from_cg(&CGIndex::from_json(&value)?)?)
    } else {
        Err(Error::Parse("JSON input needs a `matrix`, `a` or `m` field".into()).into())
    }
}

fn poset_text(poset: &GradedPoset) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "M(3,{}): {} elements, {} cover edges, level sizes {:?}",
        poset.s(),
        poset.len(),
        poset.edge_count(),
        poset.level_sizes()
    )
    .unwrap();
    for (k, level) in poset.levels().iter().enumerate() {
        writeln!(out, "rank {k}:").unwrap();
        for (a, v) in level.iter().zip(poset.level_path_numbers(k)) {
            writeln!(out, "  {a}  v = {v}").unwrap();
        }
    }
    out
}

fn recurrence_flags(max: u64) -> Value {
    let ss: Vec<u64> = (1..max.max(1)).collect();
    json!({
        "franel": ss.iter().all(|&s| franel_recurrence_check(s)),
        "p_of_s": ss.iter().all(|&s| p_recurrence_check(s)),
        "checked_s": ss,
    })
}

fn sequences_text(max: u64) -> String {
    let rows: Vec<(u64, String, String)> = (0..=max)
        .map(|s| (s, franel(s).to_string(), p_of_s(s).to_string()))
        .collect();
    let fw = rows
        .iter()
        .map(|r| r.1.len())
        .max()
        .unwrap_or(0)
        .max("franel".len());
    let pw = rows
        .iter()
        .map(|r| r.2.len())
        .max()
        .unwrap_or(0)
        .max("p(s)".len());
    let mut out = String::new();
    writeln!(out, "{:>3}  {:>fw$}  {:>pw$}", "s", "franel", "p(s)").unwrap();
    for (s, f, p) in &rows {
        writeln!(out, "{s:>3}  {f:>fw$}  {p:>pw$}").unwrap();
    }
    // recurrences link s-1, s, s+1, so they are checked for s = 1..max-1
    if max >= 2 {
        let franel_ok = (1..max).all(franel_recurrence_check);
        let p_ok = (1..max).all(p_recurrence_check);
        writeln!(
            out,
            "franel recurrence (s = 1..{}): {}",
            max - 1,
            if franel_ok { "holds" } else { "FAILS" }
        )
        .unwrap();
        write!(
            out,
            "p(s) recurrence (s = 1..{}): {}",
            max - 1,
            if p_ok { "holds" } else { "FAILS" }
        )
        .unwrap();
    }
    out
}
