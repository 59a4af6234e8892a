//! The `overcolored` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 cross-check mismatch, 3 a claim
//! did not meet its expectation, 4 conjecture counterexample.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::lab::{
    conjecture_claims, das_specialization_suite, identities_suite, lemma22_suite, run_claims, theorem3_suite,
    theorem4_suite, theorem5_claims, theorem6_claims, theorem7_claims, theorem8_claims, CongruenceClaim,
    IdentityConfig, Thm5Grid, Thm6Grid,
};
use crate::oracle::{count_colored, count_overcolored, enumerate_small};
use crate::qseries::{gf_colored, gf_even_over, gf_odd_over, gf_overcolored, ColorParams};
use crate::report::SuiteReport;
use crate::ring::Integers;
use crate::series::IntSeries;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_VIOLATION: u8 = 3;
pub const EXIT_COUNTEREXAMPLE: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "overcolored", version, about = "Overlined colored partitions: values, identities and congruences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Series order. Must cover every index the command needs; defaults to
    /// exactly that.
    #[arg(long, global = true)]
    order: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// abar_{r,s}
    Overcolored,
    /// a_{r,s}
    Colored,
    /// abar*_r: even parts in r colors
    EvenOver,
    /// abar_s: odd parts in s colors
    OddOver,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Thm3,
    Thm4,
    Thm5,
    Thm6,
    Thm7,
    Thm8,
    Das,
    Identities,
    Lemma22,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print coefficients from the eta-quotient route.
    Compute(ComputeArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Search the open families for counterexamples.
    Scan(ScanArgs),
    /// List every object counted by abar_{r,s}(n).
    List(ListArgs),
}

#[derive(Debug, Args)]
struct ComputeArgs {
    #[arg(long, default_value_t = 1)]
    r: i64,
    #[arg(long, default_value_t = 1)]
    s: i64,
    /// Single index.
    #[arg(long, conflicts_with_all = ["from", "to"])]
    n: Option<u64>,
    #[arg(long, requires = "to")]
    from: Option<u64>,
    #[arg(long, requires = "from")]
    to: Option<u64>,
    #[arg(long, value_enum, default_value_t = Kind::Overcolored)]
    kind: Kind,
    /// Reduce values modulo this.
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    modulus: Option<u64>,
    /// Also count with the combinatorial oracle; exit 2 on disagreement.
    #[arg(long)]
    cross_check: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Largest progression index (or coefficient index for profiles).
    #[arg(long)]
    nmax: Option<u64>,
    #[arg(long)]
    kmax: Option<u32>,
    #[arg(long)]
    imax: Option<i64>,
    #[arg(long)]
    jmax: Option<i64>,
    /// Largest free color count.
    #[arg(long)]
    rmax: Option<i64>,
    /// Odd primes for the modulus-p families.
    #[arg(long, value_delimiter = ',')]
    primes: Option<Vec<u64>>,
    /// Add parameters outside the side conditions, expected to fail.
    #[arg(long)]
    negative_controls: bool,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long, default_value_t = 3)]
    kmax: u32,
    #[arg(long, default_value_t = 2)]
    imax: i64,
    #[arg(long, default_value_t = 2)]
    jmax: i64,
    #[arg(long, default_value_t = 1000)]
    nmax: u64,
}

#[derive(Debug, Args)]
struct ListArgs {
    #[arg(long, default_value_t = 1)]
    r: i64,
    #[arg(long, default_value_t = 1)]
    s: i64,
    #[arg(long)]
    n: u64,
}

/// Fatal condition with its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn main_from_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j as usize);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    match pool.install(|| run(&cli)) {
        Ok((text, code)) => match emit(&cli, &text) {
            Ok(()) => code,
            Err(f) => {
                eprintln!("error: {}", f.message);
                f.code
            }
        },
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| usage(format!("cannot write output: {e}")))
        }
    }
}

fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    match &cli.command {
        Command::Compute(a) => compute(cli, a),
        Command::Verify(a) => verify(cli, a),
        Command::Scan(a) => scan(cli, a),
        Command::List(a) => list(cli, a),
    }
}

/// Order to use given what the command needs.
fn resolve_order(cli: &Cli, required: usize) -> Result<usize, Failure> {
    match cli.order {
        Some(o) if o < required => Err(usage(format!("--order {o} is below the required order {required}"))),
        Some(o) => Ok(o),
        None => Ok(required),
    }
}

fn colors(r: i64, s: i64) -> Result<ColorParams, Failure> {
    ColorParams::new(r, s).map_err(|e| usage(e.to_string()))
}

#[derive(Serialize)]
struct Value {
    n: u64,
    value: String,
}

fn compute(cli: &Cli, a: &ComputeArgs) -> Result<(String, u8), Failure> {
    let (from, to) = match (a.n, a.from, a.to) {
        (Some(n), _, _) => (n, n),
        (None, Some(f), Some(t)) if f <= t => (f, t),
        (None, Some(f), Some(t)) => return Err(usage(format!("--from {f} exceeds --to {t}"))),
        _ => return Err(usage("give --n or --from/--to")),
    };
    // even-over and odd-over are specializations of the two-parameter family
    let p = match a.kind {
        Kind::Overcolored | Kind::Colored => colors(a.r, a.s)?,
        Kind::EvenOver => colors(a.r, 1)?,
        Kind::OddOver => colors(1, a.s)?,
    };
    let order = resolve_order(cli, to as usize + 1)?;
    let series: IntSeries = match a.kind {
        Kind::Overcolored => gf_overcolored(p, order, &Integers),
        Kind::Colored => gf_colored(p, order, &Integers),
        Kind::EvenOver => gf_even_over(p.r(), order, &Integers),
        Kind::OddOver => gf_odd_over(p.s(), order, &Integers),
    };
    let reduce = |v: &BigInt| match a.modulus {
        Some(m) => {
            let m = BigInt::from(m);
            ((v % &m) + &m) % &m
        }
        None => v.clone(),
    };
    let mut code = EXIT_OK;
    if a.cross_check {
        let oracle = match a.kind {
            Kind::Colored => count_colored(p, order),
            _ => count_overcolored(p, order),
        };
        let bad: Vec<u64> = (from..=to).filter(|&n| oracle[n as usize] != *series.coeff(n as usize)).collect();
        if !bad.is_empty() {
            eprintln!("cross-check mismatch at n = {bad:?}");
            code = EXIT_MISMATCH;
        }
    }
    let values: Vec<Value> = (from..=to)
        .map(|n| Value { n, value: reduce(series.coeff(n as usize)).to_string() })
        .collect();
    let text = match cli.format {
        Format::Plain if from == to => format!("{}\n", values[0].value),
        Format::Plain => values.iter().map(|v| format!("{} {}\n", v.n, v.value)).collect(),
        Format::Json => json(&values)?,
        Format::Csv => csv(&values)?,
    };
    Ok((text, code))
}

fn json<T: Serialize + ?Sized>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| usage(e.to_string()))
}

fn csv<T: Serialize>(rows: &[T]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| usage(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| usage(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| usage(e.to_string()))
}

fn render(cli: &Cli, report: &SuiteReport) -> Result<String, Failure> {
    match cli.format {
        Format::Json => report.to_json().map(|s| s + "\n").map_err(|e| usage(e.to_string())),
        Format::Csv => report.to_csv().map_err(|e| usage(e.to_string())),
        Format::Plain => Ok(report.to_plain()),
    }
}

fn grid<const N: usize>(entries: [(&str, String); N]) -> BTreeMap<String, String> {
    entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn max_required(claims: &[CongruenceClaim], n_max: u64) -> usize {
    claims.iter().map(|c| c.required_order(n_max)).max().unwrap_or(1)
}

fn verify(cli: &Cli, a: &VerifyArgs) -> Result<(String, u8), Failure> {
    let (name, grid_map, claims) = match a.suite {
        Suite::Thm3 | Suite::Thm4 => {
            let n_max = a.nmax.unwrap_or(2000);
            let rs_max = a.rmax.unwrap_or(6);
            let order = resolve_order(cli, n_max as usize + 1)?;
            let (name, reports) = if a.suite == Suite::Thm3 {
                ("thm3", theorem3_suite(rs_max, order))
            } else {
                ("thm4", theorem4_suite(rs_max, order))
            };
            (name, grid([("rs_max", rs_max.to_string()), ("n_max", (order - 1).to_string())]), reports)
        }
        Suite::Thm5 => {
            let n_max = a.nmax.unwrap_or(1000);
            let g = Thm5Grid { rs_max: a.rmax.unwrap_or(6), ij_max: a.imax.or(a.jmax).unwrap_or(2) };
            let claims = theorem5_claims(g, a.negative_controls);
            resolve_order(cli, max_required(&claims, n_max))?;
            let m = grid([
                ("rs_max", g.rs_max.to_string()),
                ("ij_max", g.ij_max.to_string()),
                ("n_max", n_max.to_string()),
                ("negative_controls", a.negative_controls.to_string()),
            ]);
            ("thm5", m, run_claims(&claims, n_max))
        }
        Suite::Thm6 => {
            let n_max = a.nmax.unwrap_or(500);
            let g = Thm6Grid {
                k_max: a.kmax.unwrap_or(3),
                i_max: a.imax.unwrap_or(2),
                j_max: a.jmax.unwrap_or(2),
                r_max: a.rmax.unwrap_or(6),
            };
            let claims = theorem6_claims(g);
            resolve_order(cli, max_required(&claims, n_max))?;
            let m = grid([
                ("k_max", g.k_max.to_string()),
                ("i_max", g.i_max.to_string()),
                ("j_max", g.j_max.to_string()),
                ("r_max", g.r_max.to_string()),
                ("n_max", n_max.to_string()),
            ]);
            ("thm6", m, run_claims(&claims, n_max))
        }
        Suite::Thm7 => {
            let n_max = a.nmax.unwrap_or(500);
            let k_max = a.kmax.unwrap_or(2) as i64;
            let claims = theorem7_claims(k_max);
            resolve_order(cli, max_required(&claims, n_max))?;
            let m = grid([("k_max", k_max.to_string()), ("n_max", n_max.to_string())]);
            ("thm7", m, run_claims(&claims, n_max))
        }
        Suite::Thm8 => {
            let n_max = a.nmax.unwrap_or(500);
            let k_max = a.kmax.unwrap_or(2) as i64;
            let primes = a.primes.clone().unwrap_or_else(|| vec![3, 5, 7, 11]);
            let claims = theorem8_claims(&primes, k_max).map_err(|e| usage(e.to_string()))?;
            resolve_order(cli, max_required(&claims, n_max))?;
            let listed: Vec<String> = primes.iter().map(u64::to_string).collect();
            let m = grid([
                ("primes", listed.join(",")),
                ("k_max", k_max.to_string()),
                ("n_max", n_max.to_string()),
            ]);
            ("thm8", m, run_claims(&claims, n_max))
        }
        Suite::Das => {
            let n_max = a.nmax.unwrap_or(500);
            let r_max = a.rmax.unwrap_or(6);
            if r_max < 1 {
                return Err(usage("--rmax must be at least 1"));
            }
            resolve_order(cli, n_max as usize + 1)?;
            let m = grid([("r_max", r_max.to_string()), ("n_max", n_max.to_string())]);
            ("das", m, das_specialization_suite(r_max as u64, n_max))
        }
        Suite::Identities => {
            let order = cli.order.unwrap_or(2048);
            if order < 2 {
                return Err(usage("--order must be at least 2"));
            }
            let cfg = IdentityConfig { order, seed: a.seed, ..IdentityConfig::default() };
            let m = grid([
                ("order", cfg.order.to_string()),
                ("product_order", cfg.product_order.to_string()),
                ("binomial_order", cfg.binomial_order.to_string()),
                ("seed", cfg.seed.to_string()),
            ]);
            ("identities", m, identities_suite(cfg))
        }
        Suite::Lemma22 => {
            let n_max = a.nmax.unwrap_or(200);
            let m = grid([("n_max", n_max.to_string())]);
            ("lemma22", m, lemma22_suite(n_max))
        }
    };
    let report = SuiteReport::new(name, grid_map, claims);
    let code = if report.all_as_expected() { EXIT_OK } else { EXIT_VIOLATION };
    Ok((render(cli, &report)?, code))
}

fn scan(cli: &Cli, a: &ScanArgs) -> Result<(String, u8), Failure> {
    let claims = conjecture_claims(a.kmax, a.imax, a.jmax);
    resolve_order(cli, max_required(&claims, a.nmax))?;
    let reports = run_claims(&claims, a.nmax);
    let mut m = grid([
        ("k_max", a.kmax.to_string()),
        ("i_max", a.imax.to_string()),
        ("j_max", a.jmax.to_string()),
        ("n_max", a.nmax.to_string()),
    ]);
    for c in &claims {
        let depth = c.progression.at(a.nmax);
        let key = format!("depth.{}", c.label);
        let e = m.entry(key).or_insert_with(|| "0".into());
        if e.parse::<u64>().unwrap_or(0) < depth {
            *e = depth.to_string();
        }
    }
    let report = SuiteReport::new("conjecture", m, reports);
    let found = report.claims.iter().any(|c| !c.counterexamples.is_empty());
    let mut text = render(cli, &report)?;
    if cli.format == Format::Plain {
        if report.claims.is_empty() {
            text.push_str("empty grid: no claims checked\n");
        } else if !found {
            text.push_str(&format!("consistent at depth n <= {}\n", a.nmax));
        } else {
            text.push_str("counterexample found\n");
        }
    }
    Ok((text, if found { EXIT_COUNTEREXAMPLE } else { EXIT_OK }))
}

fn list(cli: &Cli, a: &ListArgs) -> Result<(String, u8), Failure> {
    let p = colors(a.r, a.s)?;
    let objects = enumerate_small(p, a.n).map_err(|e| usage(e.to_string()))?;
    let lines: Vec<String> = objects.iter().map(ToString::to_string).collect();
    let text = match cli.format {
        Format::Json => json(&lines)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                partition: &'a str,
            }
            csv(&lines.iter().map(|l| Row { partition: l }).collect::<Vec<_>>())?
        }
        Format::Plain => lines.iter().map(|l| format!("{l}\n")).collect(),
    };
    Ok((text, EXIT_OK))
}
