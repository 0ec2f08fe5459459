//! Argument parsing and dispatch for the `dlrev` binary.
//!
//! All numbers cross the interface as exact rational strings (`"n"` or
//! `"n/d"`). Output goes to the supplied writers so the dispatcher can be
//! exercised without spawning a process.

use std::io::Write;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dlrev::combinatorics as comb;
use dlrev::hankel;
use dlrev::interp;
use dlrev::reversion::DLSequence;
use dlrev::verify::{self, VerifyConfig};
use dlrev::{Error, Rational, TruncatedSeries, UniPoly};

#[derive(Parser, Debug)]
#[command(name = "dlrev", version, about = "Exact power series reversion, Hankel transforms and combinatorial oracles")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compositional inverse of a series with zero constant term.
    Revert {
        #[arg(long)]
        coeffs: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// The polynomials P_n and Q_n for n = 1..=n.
    Dl {
        #[arg(long)]
        coeffs: String,
        #[arg(long)]
        n: usize,
    },
    /// The series q with q = t s(q), to order n + 1.
    Qser {
        #[arg(long)]
        coeffs: String,
        #[arg(long)]
        n: usize,
    },
    /// Deformation F_tau between inversion and reversion of a unit series A.
    Interp {
        #[arg(long)]
        coeffs: String,
        #[arg(long)]
        tau: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Hankel determinants det(a_{shift+i+j}) for sizes 1..=n.
    Hankel {
        #[arg(long)]
        seq: String,
        #[arg(long, default_value_t = 0)]
        shift: usize,
        #[arg(long)]
        n: usize,
    },
    /// J-fraction of depth n for a sequence, or the sequence of a J-fraction.
    Jfrac {
        /// Sequence to expand.
        #[arg(long, conflicts_with = "fraction")]
        seq: Option<String>,
        /// J-fraction JSON `{"d0", "p", "q"}` to contract.
        #[arg(long)]
        fraction: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Inverse transform (power k) or binomial transform (parameter x).
    Transform {
        #[arg(long)]
        seq: String,
        #[arg(long, value_enum)]
        kind: TransformKind,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value = "1")]
        x: String,
    },
    /// Enumerate combinatorial objects.
    Enum {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Total weight is -(k+1) for Łukasiewicz-type words.
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long)]
        weights: bool,
        #[arg(long)]
        orbits: bool,
    },
    /// Run a named self-check suite, or `all`.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TransformKind {
    Inverse,
    Binomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Luka,
    Motzkin,
    Trees,
}

/// Failure with its exit code.
#[derive(Debug)]
pub enum Failure {
    Validation(Error),
    Internal(String),
    /// A verify run completed but some check failed.
    ChecksFailed(Output),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::VerificationFailed(m) => Failure::Internal(m),
            e => Failure::Validation(e),
        }
    }
}

/// A JSON value plus its CSV rows.
#[derive(Debug)]
pub struct Output {
    pub json: Value,
    pub csv: Vec<Vec<String>>,
}

impl Output {
    fn row(items: Vec<String>) -> Self {
        Output { json: json!(items), csv: vec![items] }
    }
}

fn strings<R: ToString>(xs: &[R]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string()
}

fn parse_rational_value(v: &Value) -> Result<Rational, Error> {
    match v {
        Value::String(s) => Rational::from_str(s),
        Value::Number(n) if n.is_i64() => Ok(Rational::from(n.as_i64().unwrap())),
        other => Err(Error::MalformedRational(other.to_string())),
    }
}

/// Parses a JSON array of rational strings.
pub fn parse_sequence(text: &str) -> Result<Vec<Rational>, Error> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    let Value::Array(items) = v else {
        return Err(Error::Malformed("expected a JSON array".into()));
    };
    if items.is_empty() {
        return Err(Error::EmptyCoefficients);
    }
    items.iter().map(parse_rational_value).collect()
}

/// Parses `{"order": N, "coeffs": [...]}` or a bare coefficient array.
///
/// With `order` given, the coefficients are zero-padded or truncated to it.
pub fn parse_series(text: &str, order: Option<usize>) -> Result<TruncatedSeries<Rational>, Error> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    let (declared, items) = match v {
        Value::Array(items) => (None, items),
        Value::Object(mut m) => {
            let coeffs = match m.remove("coeffs") {
                Some(Value::Array(items)) => items,
                _ => return Err(Error::Malformed("missing `coeffs` array".into())),
            };
            let declared = match m.get("order") {
                Some(o) => Some(o.as_u64().ok_or_else(|| Error::Malformed("`order` must be a count".into()))? as usize),
                None => None,
            };
            (declared, coeffs)
        }
        _ => return Err(Error::Malformed("expected a JSON array or series object".into())),
    };
    if items.is_empty() {
        return Err(Error::EmptyCoefficients);
    }
    let mut coeffs: Vec<Rational> = items.iter().map(parse_rational_value).collect::<Result<_, _>>()?;
    if let Some(d) = declared {
        if d != coeffs.len() {
            return Err(Error::Malformed(format!("order {d} does not match {} coefficients", coeffs.len())));
        }
    }
    if let Some(n) = order {
        if n == 0 {
            return Err(Error::BadRange("order must be positive".into()));
        }
        coeffs.resize(n, Rational::zero());
    }
    TruncatedSeries::new(coeffs)
}

fn series_output(s: &TruncatedSeries<Rational>) -> Output {
    Output::row(strings(s.coeffs()))
}

fn poly_rows(label: &str, polys: impl Iterator<Item = (usize, Vec<String>)>) -> (Vec<Value>, Vec<Vec<String>>) {
    let mut js = Vec::new();
    let mut rows = Vec::new();
    for (n, cs) in polys {
        let mut row = vec![label.to_string(), n.to_string()];
        row.extend(cs.iter().cloned());
        rows.push(row);
        js.push(json!(cs));
    }
    (js, rows)
}

fn unipoly_strings(p: &UniPoly<Rational>, len: usize) -> Vec<String> {
    (0..len).map(|i| p.coeff(i).to_string()).collect()
}

pub fn execute(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Revert { coeffs, order } => {
            let s = parse_series(coeffs, *order)?;
            Ok(series_output(&s.revert()?))
        }
        Command::Dl { coeffs, n } => {
            let s = parse_series(coeffs, Some((*n).max(1)))?;
            let dl = DLSequence::build(&s, *n)?;
            let (p, mut rows) = poly_rows("P", (1..=*n).map(|k| (k, unipoly_strings(dl.p(k), k))));
            let (q, qrows) = poly_rows("Q", (1..=*n).map(|k| (k, unipoly_strings(dl.q(k), k))));
            rows.extend(qrows);
            Ok(Output { json: json!({ "n_max": n, "p": p, "q": q }), csv: rows })
        }
        Command::Qser { coeffs, n } => {
            let s = parse_series(coeffs, Some((*n).max(1)))?;
            Ok(series_output(&DLSequence::build(&s, *n)?.q_series()?))
        }
        Command::Interp { coeffs, tau, order } => {
            let a = parse_series(coeffs, *order)?;
            let tau = Rational::from_str(tau)?;
            Ok(series_output(&interp::deform_inversion_reversion(&a, &tau)?))
        }
        Command::Hankel { seq, shift, n } => {
            let a = parse_sequence(seq)?;
            Ok(Output::row(strings(&hankel::hankel_transform(&a, *shift, *n)?)))
        }
        Command::Jfrac { seq, fraction, n, order } => match (seq, fraction) {
            (Some(seq), None) => {
                let depth = n.ok_or_else(|| Error::BadRange("--n (depth) is required with --seq".into()))?;
                let a = parse_sequence(seq)?;
                let need = 2 * depth + 2;
                if a.len() < need {
                    return Err(Error::InsufficientSequence { needed: need, available: a.len() }.into());
                }
                let d = TruncatedSeries::new(a[..need].to_vec())?;
                let jf = hankel::jfraction_expand(&d, depth)?;
                let mut rows = vec![vec!["d0".to_string(), jf.d0.to_string()]];
                rows.push(std::iter::once("p".to_string()).chain(strings(&jf.p)).collect());
                rows.push(std::iter::once("q".to_string()).chain(strings(&jf.q)).collect());
                let js = serde_json::to_value(&jf).map_err(|e| Failure::Internal(e.to_string()))?;
                Ok(Output { json: js, csv: rows })
            }
            (None, Some(text)) => {
                let jf: hankel::JFraction<Rational> =
                    serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
                let jf = hankel::JFraction::new(jf.d0, jf.p, jf.q)?;
                let order = order.unwrap_or(2 * jf.depth() + 2);
                Ok(series_output(&hankel::jfraction_contract(&jf, order)?))
            }
            _ => Err(Error::BadRange("exactly one of --seq and --fraction is required".into()).into()),
        },
        Command::Transform { seq, kind, k, x } => {
            let a = parse_sequence(seq)?;
            let out = match kind {
                TransformKind::Inverse => {
                    let s = TruncatedSeries::new(a)?;
                    hankel::inverse_transform_power(&s, *k)?.into_coeffs()
                }
                TransformKind::Binomial => hankel::binomial_transform(&a, &Rational::from_str(x)?),
            };
            Ok(Output::row(strings(&out)))
        }
        Command::Enum { family, n, k, weights, orbits } => enumerate(*family, *n, *k, *weights, *orbits),
        Command::Verify { suite, order, seed } => {
            let reports = verify::run(suite, &VerifyConfig { order: *order, seed: *seed })?;
            let mut rows = Vec::new();
            for r in &reports {
                for c in &r.checks {
                    rows.push(vec![r.suite.clone(), c.name.clone(), if c.passed { "pass" } else { "fail" }.to_string()]);
                }
            }
            let passed = reports.iter().all(|r| r.passed);
            let out = Output {
                json: json!({ "passed": passed, "suites": reports }),
                csv: rows,
            };
            if passed {
                Ok(out)
            } else {
                Err(Failure::ChecksFailed(out))
            }
        }
    }
}

fn enumerate(family: Family, n: usize, k: usize, weights: bool, orbits: bool) -> Result<Output, Failure> {
    const LIMIT: usize = 14;
    if n > LIMIT {
        return Err(Error::InstanceTooLarge(format!("enumeration needs n <= {LIMIT}, got {n}")).into());
    }
    match family {
        Family::Luka => {
            let words = comb::enum_words(n, k);
            let rows: Vec<Vec<String>> = words.iter().map(|w| vec![w.to_string()]).collect();
            let js = words.iter().map(|w| json!(w.letters())).collect::<Vec<_>>();
            Ok(Output { json: json!(js), csv: rows })
        }
        Family::Motzkin => {
            let paths = comb::enum_motzkin(n);
            if weights {
                let items: Vec<(String, String)> =
                    paths.iter().map(|p| (p.to_string(), comb::motzkin_weight(p).to_string())).collect();
                let js = items.iter().map(|(p, w)| json!({ "path": p, "weight": w })).collect::<Vec<_>>();
                Ok(Output { json: json!(js), csv: items.into_iter().map(|(p, w)| vec![p, w]).collect() })
            } else {
                let items: Vec<String> = paths.iter().map(ToString::to_string).collect();
                Ok(Output { json: json!(items), csv: items.into_iter().map(|p| vec![p]).collect() })
            }
        }
        Family::Trees => {
            if orbits {
                let b = comb::dihedral_orbits(n, comb::TreeSide::Binary)?;
                let p = comb::dihedral_orbits(n, comb::TreeSide::Plane)?;
                let mut rows = Vec::new();
                for rep in [&b, &p] {
                    for (i, o) in rep.orbits.iter().enumerate() {
                        let mut row = vec![rep.side.to_string(), i.to_string()];
                        row.extend(o.iter().cloned());
                        rows.push(row);
                    }
                }
                Ok(Output { json: json!([b, p]), csv: rows })
            } else {
                let items: Vec<(String, String, String)> = comb::enum_binary_trees(n)
                    .iter()
                    .map(|t| {
                        let (l, r) = comb::tree_bijections(t);
                        (t.to_string(), l.to_string(), r.to_string())
                    })
                    .collect();
                let js = items
                    .iter()
                    .map(|(b, l, r)| json!({ "binary": b, "contract_left": l, "contract_right": r }))
                    .collect::<Vec<_>>();
                Ok(Output { json: json!(js), csv: items.into_iter().map(|(b, l, r)| vec![b, l, r]).collect() })
            }
        }
    }
}

fn render(out: &Output, format: Format) -> String {
    match format {
        Format::Json => out.json.to_string(),
        Format::Csv => out.csv.iter().map(|r| r.join(",")).collect::<Vec<_>>().join("\n"),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let msg = json!({ "error": "ParseError", "message": e.to_string().trim() });
            let _ = writeln!(stderr, "{msg}");
            return 2;
        }
    };
    let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| execute(&cli)));
    match result {
        Ok(Ok(out)) => {
            let _ = writeln!(stdout, "{}", render(&out, cli.format));
            0
        }
        Ok(Err(Failure::Validation(e))) => {
            let msg = json!({ "error": error_kind(&e), "message": e.to_string() });
            let _ = writeln!(stderr, "{msg}");
            2
        }
        Ok(Err(Failure::ChecksFailed(out))) => {
            let _ = writeln!(stdout, "{}", render(&out, cli.format));
            1
        }
        Ok(Err(Failure::Internal(m))) => {
            let _ = writeln!(stderr, "{}", json!({ "error": "Internal", "message": m }));
            1
        }
        Err(_) => {
            let _ = writeln!(stderr, "{}", json!({ "error": "Internal", "message": "unexpected panic" }));
            1
        }
    }
}
