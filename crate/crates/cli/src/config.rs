//! Command-line and config-file parsing.
//!
//! Settings are layered: command line, then `FRACITER_TERM_CAP`, then the
//! `--config` file, then built-in defaults.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_rational::Rational64;

use fraciter::bench::{Convention, TableId, CASE_IDS};
use fraciter::exponent::parse_ratio;
use fraciter::fracseries::DEFAULT_TERM_CAP;
use fraciter::profiler::Budget;
use fraciter::{DecompositionKind, FracExponent};

use crate::error::CliError;

pub const TERM_CAP_ENV: &str = "FRACITER_TERM_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Solve,
    Bench,
    Cost,
    Table,
    List,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Csv,
    Json,
    Text,
}

/// Fully resolved settings for one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub cases: Vec<u8>,
    pub kinds: Vec<DecompositionKind>,
    pub k: Option<usize>,
    pub alpha: Option<FracExponent>,
    pub beta: Option<FracExponent>,
    pub c: Option<Rational64>,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub budget: Budget,
    pub term_cap: usize,
    pub convention: Convention,
    pub jobs: usize,
    pub allow_partial: bool,
    pub table: Option<TableId>,
    pub published: bool,
    pub float: bool,
    /// Evaluation points (t, x) for `solve`.
    pub points: Option<Vec<(f64, f64)>>,
    pub iterates: bool,
}

#[derive(Debug, Parser)]
#[command(name = "fraciter", version, about = "Iterative Laplace transform solver for fractional PDEs")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Run one case and print partial sums on its grid.
    Solve(Opts),
    /// Absolute errors against the exact solution, one row per (case, kind, k, t, x).
    Bench(Opts),
    /// Profile time, terms, multiplications and memory of both decompositions.
    Cost(Opts),
    /// Regenerate one of the published tables.
    Table(Opts),
    /// List the benchmark cases and tables.
    List(Opts),
}

#[derive(Debug, Default, Args)]
struct Opts {
    /// Case ids, comma separated (1-5).
    #[arg(long = "case", value_delimiter = ',')]
    case: Vec<String>,
    /// he, dj or both.
    #[arg(long)]
    kind: Option<String>,
    /// Number of iterations K.
    #[arg(long, allow_negative_numbers = true)]
    k: Option<String>,
    /// Time order as p/q.
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<String>,
    /// Space order as p/q (case 4).
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<String>,
    /// Wave parameter as p/q (case 5).
    #[arg(long, allow_negative_numbers = true)]
    c: Option<String>,
    /// csv, json or text.
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
    /// key=value settings file.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true)]
    budget_seconds: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    budget_bytes: Option<String>,
    /// Maximum spatial basis terms per series.
    #[arg(long, allow_negative_numbers = true)]
    term_cap: Option<String>,
    /// consistent or as-printed.
    #[arg(long)]
    convention: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    jobs: Option<String>,
    /// Exit 0 on budget failures and mark the affected rows.
    #[arg(long)]
    allow_partial: bool,
    /// Table id: 1-8 or case5.
    #[arg(long)]
    id: Option<String>,
    /// Print the published values instead of recomputing.
    #[arg(long)]
    published: bool,
    /// Use f64 coefficients even at integral orders.
    #[arg(long)]
    float: bool,
    /// Evaluation points for solve, as t:x pairs separated by commas.
    #[arg(long)]
    points: Option<String>,
    /// Also print the canonical iterates (solve, text format).
    #[arg(long)]
    iterates: bool,
}

const KEYS: [&str; 18] = [
    "case",
    "kind",
    "k",
    "alpha",
    "beta",
    "c",
    "format",
    "output",
    "budget_seconds",
    "budget_bytes",
    "term_cap",
    "convention",
    "jobs",
    "allow_partial",
    "id",
    "published",
    "float",
    "points",
];

/// Raw string settings from one source.
type Layer = BTreeMap<&'static str, String>;

fn canonical_key(raw: &str) -> Option<&'static str> {
    let k = raw.trim().replace('-', "_");
    KEYS.iter().copied().find(|&key| key == k)
}

/// Parses a `key=value` file. Blank lines and `#` comments are ignored.
pub fn parse_config_text(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut out = BTreeMap::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::config(
                format!("line {}", n + 1),
                "key=value",
                line,
            ));
        };
        let key = key.trim();
        let Some(canon) = canonical_key(key) else {
            return Err(CliError::UnknownKey(key.to_string()));
        };
        out.insert(canon.to_string(), value.trim().to_string());
    }
    Ok(out)
}

fn layer_from_opts(o: &Opts) -> Layer {
    let mut l = Layer::new();
    let mut put = |k: &'static str, v: &Option<String>| {
        if let Some(v) = v {
            l.insert(k, v.clone());
        }
    };
    put("kind", &o.kind);
    put("k", &o.k);
    put("alpha", &o.alpha);
    put("beta", &o.beta);
    put("c", &o.c);
    put("format", &o.format);
    put("output", &o.output.as_ref().map(|p| p.display().to_string()));
    put("budget_seconds", &o.budget_seconds);
    put("budget_bytes", &o.budget_bytes);
    put("term_cap", &o.term_cap);
    put("convention", &o.convention);
    put("jobs", &o.jobs);
    put("id", &o.id);
    put("points", &o.points);
    if !o.case.is_empty() {
        l.insert("case", o.case.join(","));
    }
    for (key, set) in [("allow_partial", o.allow_partial), ("published", o.published), ("float", o.float)] {
        if set {
            l.insert(key, "true".into());
        }
    }
    l
}

fn parse_usize(key: &str, v: &str) -> Result<usize, CliError> {
    v.trim()
        .parse::<usize>()
        .map_err(|_| CliError::config(key, "a nonnegative integer", v))
}

fn parse_bool(key: &str, v: &str) -> Result<bool, CliError> {
    match v.trim().to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" | "on" => Ok(true),
        "false" | "no" | "0" | "off" => Ok(false),
        _ => Err(CliError::config(key, "true or false", v)),
    }
}

fn parse_exponent(key: &str, v: &str) -> Result<FracExponent, CliError> {
    let expected = "a positive rational p/q with q > 0";
    let r = parse_ratio(v).map_err(|_| CliError::config(key, expected, v))?;
    if r <= Rational64::from_integer(0) {
        return Err(CliError::config(key, expected, v));
    }
    FracExponent::from_ratio(r).map_err(|_| CliError::config(key, expected, v))
}

fn parse_cases(v: &str) -> Result<Vec<u8>, CliError> {
    let mut out = Vec::new();
    for part in v.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let id: u8 = part
            .parse()
            .ok()
            .filter(|id| CASE_IDS.contains(id))
            .ok_or_else(|| CliError::config("case", "case ids between 1 and 5", v))?;
        if !out.contains(&id) {
            out.push(id);
        }
    }
    if out.is_empty() {
        return Err(CliError::config("case", "case ids between 1 and 5", v));
    }
    Ok(out)
}

fn parse_kinds(v: &str) -> Result<Vec<DecompositionKind>, CliError> {
    if v.trim().eq_ignore_ascii_case("both") {
        return Ok(DecompositionKind::ALL.to_vec());
    }
    v.parse::<DecompositionKind>()
        .map(|k| vec![k])
        .map_err(|_| CliError::config("kind", "he, dj or both", v))
}

fn parse_points(v: &str) -> Result<Vec<(f64, f64)>, CliError> {
    let bad = || CliError::config("points", "t:x pairs separated by commas", v);
    v.split(',')
        .map(|pair| {
            let (t, x) = pair.split_once(':').ok_or_else(bad)?;
            let t: f64 = t.trim().parse().map_err(|_| bad())?;
            let x: f64 = x.trim().parse().map_err(|_| bad())?;
            if !(t.is_finite() && x.is_finite()) || t < 0.0 {
                return Err(bad());
            }
            Ok((t, x))
        })
        .collect()
}

fn resolve(command: Command, cli: Layer, env: Option<String>, file: Layer, iterates: bool) -> Result<RunConfig, CliError> {
    let get = |key: &str| -> Option<&String> {
        cli.get(key).or_else(|| file.get(key))
    };
    let mut cfg = RunConfig {
        command,
        cases: CASE_IDS.to_vec(),
        kinds: DecompositionKind::ALL.to_vec(),
        k: None,
        alpha: None,
        beta: None,
        c: None,
        format: Format::Csv,
        output: None,
        budget: Budget::default(),
        term_cap: DEFAULT_TERM_CAP,
        convention: Convention::Consistent,
        jobs: 1,
        allow_partial: false,
        table: None,
        published: false,
        float: false,
        points: None,
        iterates,
    };
    if let Some(v) = get("case") {
        cfg.cases = parse_cases(v)?;
    }
    if let Some(v) = get("kind") {
        cfg.kinds = parse_kinds(v)?;
    }
    if let Some(v) = get("k") {
        cfg.k = Some(parse_usize("k", v)?);
    }
    if let Some(v) = get("alpha") {
        cfg.alpha = Some(parse_exponent("alpha", v)?);
    }
    if let Some(v) = get("beta") {
        cfg.beta = Some(parse_exponent("beta", v)?);
    }
    if let Some(v) = get("c") {
        cfg.c = Some(parse_exponent("c", v)?.ratio());
    }
    if let Some(v) = get("format") {
        cfg.format = match v.trim().to_ascii_lowercase().as_str() {
            "csv" => Format::Csv,
            "json" => Format::Json,
            "text" => Format::Text,
            _ => return Err(CliError::config("format", "csv, json or text", v)),
        };
    }
    if let Some(v) = get("output") {
        cfg.output = Some(PathBuf::from(v));
    }
    if let Some(v) = get("budget_seconds") {
        let s: f64 = v
            .trim()
            .parse()
            .ok()
            .filter(|s: &f64| s.is_finite() && *s > 0.0)
            .ok_or_else(|| CliError::config("budget_seconds", "a positive number of seconds", v))?;
        cfg.budget.seconds = s;
    }
    if let Some(v) = get("budget_bytes") {
        let b = parse_usize("budget_bytes", v)?;
        if b == 0 {
            return Err(CliError::config("budget_bytes", "a positive byte count", v));
        }
        cfg.budget.bytes = b;
    }
    let term_cap = match (cli.get("term_cap"), env, file.get("term_cap")) {
        (Some(v), _, _) => Some(("term_cap", v.clone())),
        (None, Some(v), _) => Some((TERM_CAP_ENV, v)),
        (None, None, Some(v)) => Some(("term_cap", v.clone())),
        _ => None,
    };
    if let Some((key, v)) = term_cap {
        let cap = parse_usize(key, &v)?;
        if cap == 0 {
            return Err(CliError::config(key, "a positive integer", &v));
        }
        cfg.term_cap = cap;
    }
    if let Some(v) = get("convention") {
        cfg.convention = v
            .parse()
            .map_err(|_| CliError::config("convention", "consistent or as-printed", v))?;
    }
    if let Some(v) = get("jobs") {
        let j = parse_usize("jobs", v)?;
        if j == 0 {
            return Err(CliError::config("jobs", "a positive integer", v));
        }
        cfg.jobs = j;
    }
    if let Some(v) = get("allow_partial") {
        cfg.allow_partial = parse_bool("allow_partial", v)?;
    }
    if let Some(v) = get("published") {
        cfg.published = parse_bool("published", v)?;
    }
    if let Some(v) = get("float") {
        cfg.float = parse_bool("float", v)?;
    }
    if let Some(v) = get("id") {
        cfg.table = Some(
            v.parse()
                .map_err(|_| CliError::config("id", "a table id: 1-8 or case5", v))?,
        );
    }
    if let Some(v) = get("points") {
        cfg.points = Some(parse_points(v)?);
    }
    if command == Command::Table && cfg.table.is_none() {
        return Err(CliError::config("id", "a table id: 1-8 or case5", ""));
    }
    Ok(cfg)
}

/// Parses `argv` (including the program name). `env` looks up environment
/// variables.
pub fn parse_config<I, T>(argv: I, env: impl Fn(&str) -> Option<String>) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let (command, opts) = match &cli.command {
        Sub::Solve(o) => (Command::Solve, o),
        Sub::Bench(o) => (Command::Bench, o),
        Sub::Cost(o) => (Command::Cost, o),
        Sub::Table(o) => (Command::Table, o),
        Sub::List(o) => (Command::List, o),
    };
    let mut file = Layer::new();
    if let Some(path) = &opts.config {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        for (k, v) in parse_config_text(&text)? {
            let key = canonical_key(&k).expect("validated key");
            file.insert(key, v);
        }
    }
    resolve(command, layer_from_opts(opts), env(TERM_CAP_ENV), file, opts.iterates)
}
