//! The `bwl` command-line front end.
//!
//! Every subcommand produces a JSON value; CSV and text renderings are
//! derived from that value, so cached results render exactly like fresh
//! ones. Exit codes: 0 success, 2 validation, 3 capacity, 4 consistency.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::blattice::{self, index};
use crate::cgroup::{self, aut_backtrack, clifford_group, molien_series};
use crate::codes::{self, BinaryCode};
use crate::enumerate::{self, Which};
use crate::error::Error;
use crate::invariants::{self, cwe_tensor, harmonic_invariant_dimension};
use crate::qring::parse_rational;

const VERSION: &str = env!("CARGO_PKG_VERSION");
const GOLDEN: &str = include_str!("../golden/reproduce.json");
pub const CACHE_ENV: &str = "BWL_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "bwl", version, about = "Barnes-Wall lattices, Clifford groups and their invariants, in exact arithmetic")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,

    /// Result cache directory; falls back to $BWL_CACHE_DIR.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Ignore the cache for this invocation.
    #[arg(long, global = true)]
    no_cache: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    M,
    L,
    Lprime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LatticeArg {
    L,
    Lprime,
    M,
}

impl From<LatticeArg> for Which {
    fn from(w: LatticeArg) -> Which {
        match w {
            LatticeArg::L => Which::L,
            LatticeArg::Lprime => Which::LPrime,
            LatticeArg::M => Which::M,
        }
    }
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Basis and Gram matrix of M_m, L_m or L'_m.
    Construct {
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..=blattice::MAX_CONSTRUCT_M as u64))]
        m: u64,
        #[arg(long, value_enum, ignore_case = true, default_value_t = Target::M)]
        target: Target,
    },
    /// Theta series prefix of L_m or L'_m.
    Theta {
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..=enumerate::MAX_ENUM_M as u64))]
        m: u64,
        #[arg(long, value_enum, ignore_case = true, default_value_t = LatticeArg::L)]
        which: LatticeArg,
        #[command(flatten)]
        extent: ThetaExtent,
    },
    /// Number of minimal vectors.
    Kissing {
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..=enumerate::MAX_ENUM_M as u64))]
        m: u64,
        #[arg(long, value_enum, ignore_case = true, default_value_t = LatticeArg::L)]
        which: LatticeArg,
    },
    /// Exact spherical-design moment test on the minimal vectors.
    Design {
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..=enumerate::MAX_ENUM_M as u64))]
        m: u64,
        #[arg(long, value_enum, ignore_case = true, default_value_t = LatticeArg::L)]
        which: LatticeArg,
        #[arg(long, default_value_t = 8)]
        t_max: u32,
    },
    /// The Clifford group C_m: order, Molien series, cross-validation.
    Group {
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..=3))]
        m: u64,
        /// Report the order only.
        #[arg(long)]
        order: bool,
        /// Molien coefficients through this degree.
        #[arg(long, value_name = "D")]
        molien: Option<usize>,
        /// Compare generator closure with automorphism backtracking.
        #[arg(long)]
        validate: bool,
    },
    /// Self-dual binary codes.
    #[command(subcommand)]
    Codes(CodesCommand),
    /// Complete weight enumerator of C ⊗ GF(2^m).
    Cwe {
        #[arg(long, value_name = "FILE")]
        code: PathBuf,
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..=3))]
        m: u64,
    },
    /// Do the code enumerators of length 2k span the degree-2k invariants?
    Runge {
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..=2))]
        m: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=6))]
        k: u64,
    },
    /// The degree-8 harmonic invariant and the degree-10 harmonic dimension.
    Harmonic {
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..=2))]
        m: u64,
    },
    /// Run every reference check and compare with the stored values.
    Reproduce,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct ThetaExtent {
    /// Count vectors of norm at most X (a rational).
    #[arg(long, value_name = "X")]
    max_norm: Option<String>,
    /// Count the first K shells, the zero vector being the first.
    #[arg(long, value_name = "K")]
    shells: Option<usize>,
}

#[derive(Subcommand, Debug, Clone)]
enum CodesCommand {
    /// Classify self-dual codes of length n up to equivalence.
    Classify {
        #[arg(short, value_parser = clap::value_parser!(u64).range(2..=codes::MAX_CLASSIFY_EXTENDED as u64))]
        n: u64,
        /// Allow lengths 14 and 16.
        #[arg(long)]
        extended: bool,
    },
    /// Properties of one code read from a file.
    Check {
        #[arg(long, value_name = "FILE")]
        code: PathBuf,
    },
}

/// Failures of a CLI run, each mapped to an exit code.
#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Io(String),
    Mismatch(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::Capacity(_)) => 3,
            CliError::Lib(Error::Consistency(_)) | CliError::Mismatch(_) => 4,
            CliError::Lib(_) | CliError::Io(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(s) => write!(f, "i/o error: {s}"),
            CliError::Mismatch(n) => write!(f, "{n} reference check(s) disagree with the stored values"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Entry point used by the `bwl` binary.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut stdout = std::io::stdout().lock();
    match execute(&cli, &mut stdout) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bwl: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Runs a parsed invocation, writing the rendered result to `out`.
///
/// A reproduction mismatch still prints its table before failing.
pub fn execute(cli: &Cli, out: &mut dyn std::io::Write) -> CliResult<()> {
    if let Some(t) = cli.threads {
        // a second initialisation (e.g. in-process tests) is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t as usize).build_global();
    }
    let value = match &cli.command {
        Command::Reproduce => reproduce()?,
        cmd => cached(cli, cmd)?,
    };
    let text = render(&cli.command, &value, cli.format)?;
    out.write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string()))?;
    if let Command::Reproduce = cli.command {
        let failed = value["checks"].as_array().map_or(0, |a| a.iter().filter(|c| c["pass"] != json!(true)).count());
        if failed > 0 {
            return Err(CliError::Mismatch(failed));
        }
    }
    Ok(())
}

// ---- cache ----

fn cache_dir(cli: &Cli) -> Option<PathBuf> {
    if cli.no_cache {
        return None;
    }
    cli.cache_dir.clone().or_else(|| std::env::var_os(CACHE_ENV).filter(|s| !s.is_empty()).map(PathBuf::from))
}

fn cache_key(cmd: &Command) -> CliResult<String> {
    let mut h = Sha256::new();
    h.update(format!("bwl {VERSION}\n{cmd:?}\n").as_bytes());
    // commands reading a file are keyed by its contents, not its name
    if let Command::Cwe { code, .. } | Command::Codes(CodesCommand::Check { code }) = cmd {
        h.update(read_file(code)?.as_bytes());
    }
    Ok(h.finalize().iter().map(|b| format!("{b:02x}")).collect())
}

fn cached(cli: &Cli, cmd: &Command) -> CliResult<Value> {
    let Some(dir) = cache_dir(cli) else {
        return dispatch(cmd);
    };
    let path = dir.join(format!("{}.json", cache_key(cmd)?));
    if let Some(v) = fs::read_to_string(&path).ok().and_then(|s| serde_json::from_str(&s).ok()) {
        return Ok(v);
    }
    let v = dispatch(cmd)?;
    // failures to write the cache are not failures of the command
    if fs::create_dir_all(&dir).is_ok() {
        let tmp = path.with_extension("tmp");
        if fs::write(&tmp, pretty(&v)).is_ok() {
            let _ = fs::rename(&tmp, &path);
        }
    }
    Ok(v)
}

// ---- commands ----

fn read_file(p: &Path) -> CliResult<String> {
    fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))
}

fn read_code(p: &Path) -> CliResult<BinaryCode> {
    Ok(BinaryCode::parse(&read_file(p)?)?)
}

fn dispatch(cmd: &Command) -> CliResult<Value> {
    Ok(match cmd {
        Command::Construct { m, target } => {
            let m = *m as usize;
            let bw = blattice::balanced_bw(m)?;
            match target {
                Target::M => bw.to_json(),
                Target::L => blattice::rational_part(&bw)?.to_json(Some(m)),
                Target::Lprime => {
                    let lp = blattice::irrational_part(&bw)?;
                    let idx = index(&blattice::rational_part(&bw)?, &lp)?;
                    let mut v = lp.to_json(Some(m));
                    v["index_of_L"] = json!(idx.to_string());
                    v
                }
            }
        }
        Command::Theta { m, which, extent } => {
            let l = enumerate::classical_lattice(*m as usize, (*which).into())?;
            let theta = match (&extent.max_norm, extent.shells) {
                (Some(x), _) => {
                    let bound = parse_rational(x)?;
                    if bound < num_rational::BigRational::from_integer(BigInt::from(0)) {
                        return Err(Error::Domain("--max-norm must be non-negative".into()).into());
                    }
                    enumerate::theta_prefix(&l, &bound)?
                }
                (None, Some(k)) => enumerate::theta_shells(&l, k)?,
                (None, None) => unreachable!("clap enforces one of --max-norm/--shells"),
            };
            let mut v = theta.to_json();
            v["m"] = json!(m);
            v["which"] = json!(which_name(*which));
            v
        }
        Command::Kissing { m, which } => {
            json!({ "m": m, "which": which_name(*which), "kissing": enumerate::kissing_number(*m as usize, (*which).into())? })
        }
        Command::Design { m, which, t_max } => {
            let vecs = match which {
                LatticeArg::M => enumerate::minimal_vectors_bw(&blattice::balanced_bw(*m as usize)?)?,
                w => enumerate::minimal_vectors(&enumerate::classical_lattice(*m as usize, (*w).into())?)?,
            };
            let mut v = enumerate::design_moment_test(&vecs, *t_max)?.to_json();
            v["m"] = json!(m);
            v["which"] = json!(which_name(*which));
            v
        }
        Command::Group { m, order, molien, validate } => group(*m as usize, *order, *molien, *validate)?,
        Command::Codes(CodesCommand::Classify { n, extended }) => {
            let c = codes::classify_self_dual_with(*n as usize, *extended)?;
            c.to_json()
        }
        Command::Codes(CodesCommand::Check { code }) => {
            let c = read_code(code)?;
            json!({
                "code": c.to_json(),
                "self_dual": c.is_self_dual(),
                "self_orthogonal": c.is_self_orthogonal(),
                "doubly_even": c.is_doubly_even(),
                "weight2_generated": c.weight2_generated(),
                "weight_distribution": c.weight_distribution(),
                "aut_order": codes::automorphism_group_order(&c).to_string(),
            })
        }
        Command::Cwe { code, m } => {
            let c = read_code(code)?;
            let p = cwe_tensor(&c, *m as usize);
            let mut v = p.to_json();
            v["polynomial"] = json!(p.to_string());
            v["n"] = json!(c.n());
            v
        }
        Command::Runge { m, k } => invariants::runge_span_check(*m as usize, *k as usize)?.to_json(),
        Command::Harmonic { m } => {
            let m = *m as usize;
            let h = invariants::harmonic_invariant_degree8(m)?;
            let g = clifford_group(m)?;
            json!({
                "m": m,
                "c": h.c.to_string(),
                "degree8_harmonic_dim": harmonic_invariant_dimension(&g, 8)?,
                "degree10_harmonic_dim": harmonic_invariant_dimension(&g, 10)?,
                "invariant": h.poly.to_json()["terms"],
            })
        }
        Command::Reproduce => reproduce()?,
    })
}

fn which_name(w: LatticeArg) -> &'static str {
    match w {
        LatticeArg::L => "L",
        LatticeArg::Lprime => "Lprime",
        LatticeArg::M => "M",
    }
}

fn group(m: usize, order_only: bool, molien: Option<usize>, validate: bool) -> CliResult<Value> {
    let g = clifford_group(m)?;
    if order_only && molien.is_none() && !validate {
        return Ok(json!({ "m": m, "order": g.order().to_string() }));
    }
    let series = molien.map(|d| molien_series(&g, d)).transpose()?;
    let mut v = g.to_json(series.as_deref());
    if validate {
        if m > cgroup::MAX_BACKTRACK_M {
            return Err(Error::Unsupported(format!("--validate needs m <= {}", cgroup::MAX_BACKTRACK_M)).into());
        }
        let back = aut_backtrack(&blattice::balanced_bw(m)?)?;
        let agree = back.order() == g.order() && back.same_elements(&g);
        if !agree {
            return Err(Error::Consistency(format!(
                "generator closure has order {} but backtracking finds {}",
                g.order(),
                back.order()
            ))
            .into());
        }
        v["validation"] = json!({
            "closure_order": g.order().to_string(),
            "backtrack_order": back.order().to_string(),
            "agree": agree,
        });
    }
    Ok(v)
}

// ---- reproduction ----

fn reproduce() -> CliResult<Value> {
    let golden: Value = serde_json::from_str(GOLDEN).expect("embedded reference file is valid JSON");
    let mut checks = Vec::new();
    for c in golden["checks"].as_array().expect("checks array") {
        let name = c["name"].as_str().expect("name");
        let line = c["command"].as_str().expect("command");
        let pointer = c["pointer"].as_str().expect("pointer");
        let expected = &c["expected"];
        let args = std::iter::once("bwl").chain(line.split_whitespace());
        let cli = Cli::try_parse_from(args).unwrap_or_else(|e| panic!("bad reference command {line:?}: {e}"));
        let (actual, pass) = match dispatch(&cli.command) {
            Ok(v) => {
                let got = v.pointer(pointer).cloned().unwrap_or(Value::Null);
                let pass = &got == expected;
                (got, pass)
            }
            Err(e) => (json!(format!("error: {e}")), false),
        };
        checks.push(json!({ "name": name, "command": line, "expected": expected, "actual": actual, "pass": pass }));
    }
    let passed = checks.iter().filter(|c| c["pass"] == json!(true)).count();
    Ok(json!({ "checks": checks, "passed": passed, "total": checks.len() }))
}

// ---- rendering ----

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// The tabular view of a result, when the command has one.
fn table(cmd: &Command, v: &Value) -> Option<(Vec<String>, Vec<Vec<String>>)> {
    let head = |h: &[&str]| h.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let rows_of = |key: &str, cols: &[&str]| -> Vec<Vec<String>> {
        v[key].as_array().map_or_else(Vec::new, |a| {
            a.iter().map(|r| cols.iter().map(|c| scalar(&r[*c])).collect()).collect()
        })
    };
    match cmd {
        Command::Theta { .. } => Some((
            head(&["norm", "count"]),
            v["norms"].as_array()?.iter().map(|p| vec![scalar(&p[0]), scalar(&p[1])]).collect(),
        )),
        Command::Design { .. } => Some((head(&["t", "discrepancy", "pass"]), rows_of("moments", &["t", "discrepancy", "pass"]))),
        Command::Group { .. } if !v["molien"].is_null() => Some((
            head(&["degree", "coefficient"]),
            v["molien"].as_array()?.iter().enumerate().map(|(d, c)| vec![d.to_string(), scalar(c)]).collect(),
        )),
        Command::Codes(CodesCommand::Classify { .. }) => Some((
            head(&["class", "k", "aut_order", "doubly_even", "weight2_generated", "rows"]),
            v["classes"]
                .as_array()?
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let rows: Vec<String> = c["code"]["rows"].as_array().map_or_else(Vec::new, |r| r.iter().map(scalar).collect());
                    vec![
                        i.to_string(),
                        scalar(&c["code"]["k"]),
                        scalar(&c["aut_order"]),
                        scalar(&c["doubly_even"]),
                        scalar(&c["weight2_generated"]),
                        rows.join(" "),
                    ]
                })
                .collect(),
        )),
        Command::Cwe { .. } => Some((
            head(&["exponents", "coefficient"]),
            v["terms"]
                .as_array()?
                .iter()
                .map(|t| {
                    let e: Vec<String> = t["exp"].as_array().map_or_else(Vec::new, |e| e.iter().map(scalar).collect());
                    vec![e.join(" "), scalar(&t["coef"])]
                })
                .collect(),
        )),
        Command::Reproduce => Some((
            head(&["name", "command", "expected", "actual", "pass"]),
            v["checks"]
                .as_array()?
                .iter()
                .map(|c| vec![scalar(&c["name"]), scalar(&c["command"]), c["expected"].to_string(), c["actual"].to_string(), scalar(&c["pass"])])
                .collect(),
        )),
        _ => None,
    }
}

fn render(cmd: &Command, v: &Value, format: Format) -> CliResult<String> {
    match format {
        Format::Json => Ok(pretty(v)),
        Format::Csv => {
            let (header, rows) = table(cmd, v).unwrap_or_else(|| flat_pairs(v));
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&header).map_err(|e| CliError::Io(e.to_string()))?;
            for r in &rows {
                w.write_record(r).map_err(|e| CliError::Io(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        Format::Text => {
            let (header, rows) = table(cmd, v).unwrap_or_else(|| flat_pairs(v));
            Ok(aligned(&header, &rows))
        }
    }
}

/// Top-level scalar fields as `field,value` rows; nested values are
/// written as compact JSON.
fn flat_pairs(v: &Value) -> (Vec<String>, Vec<Vec<String>>) {
    let rows = match v.as_object() {
        Some(map) => map
            .iter()
            .map(|(k, x)| {
                let s = match x {
                    Value::Array(_) | Value::Object(_) => x.to_string(),
                    _ => scalar(x),
                };
                vec![k.clone(), s]
            })
            .collect(),
        None => vec![vec!["value".into(), v.to_string()]],
    };
    (vec!["field".into(), "value".into()], rows)
}

fn aligned(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(c);
            } else {
                s.push_str(&format!("{c:<w$}  "));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header);
    for r in rows {
        out.push_str(&line(r));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (CliResult<()>, String) {
        let cli = Cli::try_parse_from(std::iter::once("bwl").chain(args.iter().copied())).expect("valid arguments");
        let mut buf = Vec::new();
        let r = execute(&cli, &mut buf);
        (r, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn theta_of_square_grid() {
        let (r, out) = run_args(&["theta", "-m", "1", "--which", "lprime", "--max-norm", "4", "--no-cache"]);
        r.unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["norms"], json!([["0", 1], ["1", 4], ["2", 4], ["4", 4]]));
    }

    #[test]
    fn m_zero_is_a_usage_error() {
        let e = Cli::try_parse_from(["bwl", "construct", "-m", "0"]).unwrap_err();
        assert!(e.use_stderr());
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn theta_needs_exactly_one_extent() {
        assert!(Cli::try_parse_from(["bwl", "theta", "-m", "1"]).is_err());
        assert!(Cli::try_parse_from(["bwl", "theta", "-m", "1", "--shells", "2", "--max-norm", "3"]).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Lib(Error::Capacity("x".into())).exit_code(), 3);
        assert_eq!(CliError::Lib(Error::Consistency("x".into())).exit_code(), 4);
        assert_eq!(CliError::Lib(Error::Domain("x".into())).exit_code(), 2);
        assert_eq!(CliError::Lib(Error::Unsupported("x".into())).exit_code(), 2);
        assert_eq!(CliError::Io("x".into()).exit_code(), 2);
        assert_eq!(CliError::Mismatch(1).exit_code(), 4);
    }

    #[test]
    fn csv_and_text_mirror_the_table() {
        let (_, csv) = run_args(&["theta", "-m", "1", "--which", "lprime", "--shells", "3", "--format", "csv", "--no-cache"]);
        assert_eq!(csv, "norm,count\n0,1\n1,4\n2,4\n");
        let (_, text) = run_args(&["kissing", "-m", "2", "--format", "text", "--no-cache"]);
        assert!(text.contains("kissing  24"));
    }

    #[test]
    fn cache_is_transparent() {
        let dir = std::env::temp_dir().join(format!("bwl-cache-test-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        let d = dir.to_str().unwrap();
        let (_, fresh) = run_args(&["group", "-m", "1", "--molien", "8", "--cache-dir", d]);
        assert_eq!(fs::read_dir(&dir).unwrap().count(), 1);
        let (_, hit) = run_args(&["group", "-m", "1", "--molien", "8", "--cache-dir", d]);
        let (_, off) = run_args(&["group", "-m", "1", "--molien", "8", "--no-cache"]);
        assert_eq!(fresh, hit);
        assert_eq!(fresh, off);
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn unreadable_code_file() {
        let (r, _) = run_args(&["cwe", "--code", "/nonexistent/code.txt", "-m", "1", "--no-cache"]);
        assert_eq!(r.unwrap_err().exit_code(), 2);
    }

    #[test]
    fn golden_commands_parse() {
        let golden: Value = serde_json::from_str(GOLDEN).unwrap();
        for c in golden["checks"].as_array().unwrap() {
            let line = c["command"].as_str().unwrap();
            Cli::try_parse_from(std::iter::once("bwl").chain(line.split_whitespace())).unwrap();
        }
    }
}
