//! Batch command-line surface: emit series, matrices, polynomial families,
//! posets, and verification reports. Exit codes: 0 success, 1 verification
//! failure (with a JSON witness), 2 usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use monops::instances;
use monops::posets::{
    build_poset_monoid, build_poset_monop, build_poset_operad, check_interval_factorization,
    counting_matrix, mobius_matrix,
};
use monops::powerseries::{rat_from_string, rat_to_string, ExactSeries};
use monops::riordan::AdmissiblePair;
use monops::sheffer::PolySeq;
use monops::species::{Monoid, Monop, Operad};
use monops::{check_monoid_axioms, check_monop_axioms, check_operad_axioms, LabelSet, Report};

const SCHEMA_VERSION: u32 = 1;

/// Environment variable capping the ground-set size for exhaustive
/// computations; requests above the cap need --force.
const MAX_N_ENV: &str = "MONOPS_MAX_N";

#[derive(Parser)]
#[command(name = "monops", version, about = "Exact Riordan arrays, Sheffer families, and posets from species monoids, operads, and monops")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every registered instance id
    Catalog(CatalogCmd),
    /// Emit the generating series of an instance
    Series(SeriesCmd),
    /// Emit a Riordan pair and its matrix, by instance or explicit coefficients
    Riordan(RiordanCmd),
    /// Emit the polynomial family of a monop
    Sheffer(ShefferCmd),
    /// Build the poset of an instance over {1..n}
    Poset(PosetCmd),
    /// Emit the counting or Möbius matrix of a monop poset family
    Matrix(MatrixCmd),
    /// Run a verification suite; exit code reflects the report
    Verify(VerifyCmd),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Args)]
struct Common {
    /// Instance id from the catalog
    #[arg(long)]
    instance: String,
    /// Ground-set size / truncation order
    #[arg(long)]
    n: usize,
    /// Write to this path instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Ignore the instance n_max and the MONOPS_MAX_N cap
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct CatalogCmd {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SeriesCmd {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct RiordanCmd {
    /// Instance id (alternative to --f/--g)
    #[arg(long, conflicts_with_all = ["f", "g"])]
    instance: Option<String>,
    /// Coefficients of F as comma-separated rationals, e.g. "1,1,1/2"
    #[arg(long, requires = "g")]
    f: Option<String>,
    /// Coefficients of G (G[0] must be 0)
    #[arg(long, requires = "f")]
    g: Option<String>,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Rows of the counting matrix (the ŝ family)
    Counting,
    /// Rows of its inverse (the Möbius / s family)
    Mobius,
}

#[derive(Args)]
struct ShefferCmd {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value = "counting")]
    family: Family,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct PosetCmd {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value = "dot")]
    format: Format,
}

#[derive(Args)]
struct MatrixCmd {
    #[arg(value_enum)]
    which: Family,
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    /// counting_matrix * mobius_matrix = identity, both sides
    Inverse,
    /// Exhaustive monoid/operad/monop axioms
    Axioms,
    /// Interval factorization and coideal isomorphism
    Intervals,
    /// Poset counting matrix equals the closed-form pair matrix
    Functoriality,
}

#[derive(Args)]
struct VerifyCmd {
    #[arg(value_enum)]
    check: Check,
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

/// A usage error (exit 2) or a verification failure (exit 1, JSON witness).
enum CliError {
    Usage(String),
    Verification(serde_json::Value),
}

impl From<monops::Error> for CliError {
    fn from(e: monops::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult = Result<(), CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn emit(text: &str, output: &Option<PathBuf>) -> CliResult {
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| usage(format!("cannot write {path:?}: {e}")))
        }
        None => {
            use std::io::Write;
            let mut out = std::io::stdout();
            if let Err(e) = writeln!(out, "{}", text.trim_end_matches('\n')) {
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    std::process::exit(0);
                }
                return Err(usage(format!("cannot write to stdout: {e}")));
            }
            Ok(())
        }
    }
}

fn emit_json(value: serde_json::Value, output: &Option<PathBuf>) -> CliResult {
    let mut text = serde_json::to_string_pretty(&value).expect("json serializes");
    text.push('\n');
    emit(&text, output)
}

enum Instance {
    Monoid(Box<dyn Monoid + Send + Sync>),
    Operad(Box<dyn Operad + Send + Sync>),
    Monop(Box<dyn Monop + Send + Sync>),
}

/// Resolve an id against the registry and report its default n bound.
fn resolve(id: &str) -> Result<(Instance, usize), CliError> {
    let catalog_n = instances::catalog()
        .into_iter()
        .find(|e| e.id == id)
        .map(|e| e.n_max);
    if let Ok(mp) = instances::monop(id) {
        let n = catalog_n.unwrap_or_else(|| mp.default_n_max());
        return Ok((Instance::Monop(mp), n));
    }
    if let Ok(m) = instances::monoid(id) {
        return Ok((Instance::Monoid(m), catalog_n.unwrap_or(6)));
    }
    if let Ok(o) = instances::operad(id) {
        return Ok((Instance::Operad(o), catalog_n.unwrap_or(6)));
    }
    Err(usage(format!(
        "unknown instance '{id}'; run `monops catalog` for the registry"
    )))
}

/// Enforce n <= min(instance bound, MONOPS_MAX_N) unless --force.
fn guard(n: usize, instance_max: usize, force: bool) -> CliResult {
    if force {
        return Ok(());
    }
    let mut cap = instance_max;
    let mut source = "instance n_max";
    if let Ok(env_cap) = std::env::var(MAX_N_ENV) {
        let env_cap: usize = env_cap
            .parse()
            .map_err(|_| usage(format!("{MAX_N_ENV} must be an unsigned integer")))?;
        if env_cap < cap {
            cap = env_cap;
            source = MAX_N_ENV;
        }
    }
    if n > cap {
        return Err(usage(format!(
            "n = {n} exceeds {source} = {cap}; pass --force to override"
        )));
    }
    Ok(())
}

fn run_catalog(cmd: &CatalogCmd) -> CliResult {
    let entries = instances::catalog();
    match cmd.format {
        Format::Json => emit_json(
            json!({ "schema_version": SCHEMA_VERSION, "instances": entries }),
            &cmd.output,
        ),
        Format::Text => {
            let lines: Vec<String> = entries
                .iter()
                .map(|e| {
                    format!(
                        "{:<16} {:<7} n_max={:<2} {}",
                        e.id,
                        format!("{:?}", e.kind).to_lowercase(),
                        e.n_max,
                        e.description
                    )
                })
                .collect();
            emit(&lines.join("\n"), &cmd.output)
        }
        _ => Err(usage("catalog supports --format text or json")),
    }
}

fn series_text(label: &str, s: &ExactSeries) -> String {
    let coeffs: Vec<String> = (0..=s.trunc_order())
        .map(|n| rat_to_string(s.coeff(n)))
        .collect();
    format!("{label}[0..={}] = {}", s.trunc_order(), coeffs.join(", "))
}

fn run_series(cmd: &SeriesCmd) -> CliResult {
    let c = &cmd.common;
    let (inst, n_max) = resolve(&c.instance)?;
    guard(c.n, n_max, c.force)?;
    // Monoids and operads have one series; a monop carries its pair (F, G).
    let series: Vec<(&str, ExactSeries)> = match inst {
        Instance::Monoid(_) | Instance::Operad(_) => {
            vec![("F", instances::species_egf(&c.instance, c.n)?)]
        }
        Instance::Monop(mp) => {
            let pair = mp
                .counting_pair(c.n)
                .ok_or_else(|| usage(format!("{} has no closed-form pair", c.instance)))?;
            vec![("F", pair.f().clone()), ("G", pair.g().clone())]
        }
    };
    match cmd.format {
        Format::Json => emit_json(
            json!({
                "schema_version": SCHEMA_VERSION,
                "instance": c.instance,
                "series": series
                    .iter()
                    .map(|(k, s)| (k.to_string(), s.to_json()))
                    .collect::<serde_json::Map<_, _>>(),
            }),
            &c.output,
        ),
        Format::Text => {
            let lines: Vec<String> = series.iter().map(|(k, s)| series_text(k, s)).collect();
            emit(&lines.join("\n"), &c.output)
        }
        _ => Err(usage("series supports --format text or json")),
    }
}

fn parse_series(spec: &str, trunc: usize) -> Result<ExactSeries, CliError> {
    let coeffs = spec
        .split(',')
        .map(|s| rat_from_string(s.trim()).map_err(|e| usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.len() != trunc + 1 {
        return Err(usage(format!(
            "expected {} coefficients (orders 0..={trunc}), got {}",
            trunc + 1,
            coeffs.len()
        )));
    }
    Ok(ExactSeries::from_coeffs(coeffs))
}

fn instance_pair(id: &str, trunc: usize) -> Result<AdmissiblePair, CliError> {
    match resolve(id)? {
        (Instance::Monop(mp), _) => mp
            .counting_pair(trunc)
            .ok_or_else(|| usage(format!("{id} has no closed-form pair"))),
        _ => Err(usage(format!("{id} is not a monop; pass --f/--g instead"))),
    }
}

fn run_riordan(cmd: &RiordanCmd) -> CliResult {
    let pair = match (&cmd.instance, &cmd.f, &cmd.g) {
        (Some(id), None, None) => {
            let (_, n_max) = resolve(id)?;
            guard(cmd.n, n_max, cmd.force)?;
            instance_pair(id, cmd.n)?
        }
        (None, Some(f), Some(g)) => {
            let f = parse_series(f, cmd.n)?;
            let g = parse_series(g, cmd.n)?;
            AdmissiblePair::new(f, g).map_err(|e| usage(e.to_string()))?
        }
        _ => return Err(usage("pass either --instance or both --f and --g")),
    };
    if !pair.is_riordan() {
        return Err(usage("pair is admissible but not Riordan (need F[0] != 0, G[1] != 0)"));
    }
    let matrix = pair.matrix(cmd.n)?;
    match cmd.format {
        Format::Csv => emit(&matrix.to_csv(), &cmd.output),
        Format::Json => emit_json(
            json!({
                "schema_version": SCHEMA_VERSION,
                "f": pair.f().to_json(),
                "g": pair.g().to_json(),
                "matrix": matrix.to_json(),
            }),
            &cmd.output,
        ),
        Format::Text => {
            let mut lines = vec![series_text("F", pair.f()), series_text("G", pair.g())];
            for n in 0..=matrix.n_max() {
                let row: Vec<String> = matrix.row(n).iter().map(rat_to_string).collect();
                lines.push(row.join(" "));
            }
            emit(&lines.join("\n"), &cmd.output)
        }
        Format::Dot => Err(usage("riordan supports --format text, csv, or json")),
    }
}

fn run_sheffer(cmd: &ShefferCmd) -> CliResult {
    let c = &cmd.common;
    let (inst, n_max) = resolve(&c.instance)?;
    guard(c.n, n_max, c.force)?;
    let mp = match inst {
        Instance::Monop(mp) => mp,
        _ => return Err(usage(format!("{} is not a monop", c.instance))),
    };
    let pair = mp
        .counting_pair(c.n)
        .ok_or_else(|| usage(format!("{} has no closed-form pair", c.instance)))?;
    let matrix = pair.matrix(c.n)?;
    let seq = match cmd.family {
        Family::Counting => PolySeq::from_matrix(&matrix, Some(pair)),
        Family::Mobius => PolySeq::from_matrix(&matrix.inverse()?, None),
    };
    match cmd.format {
        Format::Json => emit_json(
            json!({
                "schema_version": SCHEMA_VERSION,
                "instance": c.instance,
                "family": seq.to_json(),
            }),
            &c.output,
        ),
        Format::Text => {
            let lines: Vec<String> = seq
                .polys()
                .iter()
                .enumerate()
                .map(|(n, p)| format!("s_{n}(x) = {p}"))
                .collect();
            emit(&lines.join("\n"), &c.output)
        }
        _ => Err(usage("sheffer supports --format text or json")),
    }
}

fn run_poset(cmd: &PosetCmd) -> CliResult {
    let c = &cmd.common;
    let (inst, n_max) = resolve(&c.instance)?;
    guard(c.n, n_max, c.force)?;
    let ground = LabelSet::atoms(c.n);
    let poset = match inst {
        Instance::Monoid(m) => build_poset_monoid(m.as_ref(), &ground)?.poset,
        Instance::Operad(o) => build_poset_operad(o.as_ref(), &ground)?.poset,
        Instance::Monop(mp) => build_poset_monop(mp.as_ref(), &ground)?.poset,
    };
    match cmd.format {
        Format::Dot => emit(
            &poset.to_dot(&format!("{} over {{1..{}}}", c.instance, c.n)),
            &c.output,
        ),
        Format::Json => emit_json(
            json!({
                "schema_version": SCHEMA_VERSION,
                "instance": c.instance,
                "n": c.n,
                "poset": poset.to_json(),
            }),
            &c.output,
        ),
        Format::Text => {
            let mut lines = vec![format!("{} elements, {} covers", poset.len(), poset.covers().len())];
            for (lo, hi) in poset.covers() {
                lines.push(format!("{} < {}", poset.name(lo), poset.name(hi)));
            }
            emit(&lines.join("\n"), &c.output)
        }
        Format::Csv => Err(usage("poset supports --format dot, json, or text")),
    }
}

fn run_matrix(cmd: &MatrixCmd) -> CliResult {
    let c = &cmd.common;
    let (inst, n_max) = resolve(&c.instance)?;
    guard(c.n, n_max, c.force)?;
    let mp = match inst {
        Instance::Monop(mp) => mp,
        _ => return Err(usage(format!("{} is not a monop", c.instance))),
    };
    let matrix = match cmd.which {
        Family::Counting => counting_matrix(mp.as_ref(), c.n)?,
        Family::Mobius => mobius_matrix(mp.as_ref(), c.n)?,
    };
    match cmd.format {
        Format::Csv => emit(&matrix.to_csv(), &c.output),
        Format::Json => emit_json(
            json!({
                "schema_version": SCHEMA_VERSION,
                "instance": c.instance,
                "matrix": matrix.to_json(),
            }),
            &c.output,
        ),
        Format::Text => {
            let lines: Vec<String> = (0..=matrix.n_max())
                .map(|n| {
                    matrix
                        .row(n)
                        .iter()
                        .map(rat_to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            emit(&lines.join("\n"), &c.output)
        }
        Format::Dot => Err(usage("matrix supports --format csv, json, or text")),
    }
}

fn report_json(report: &Report) -> serde_json::Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "status": if report.passed { "pass" } else { "fail" },
        "report": report.to_json(),
    })
}

fn run_verify(cmd: &VerifyCmd) -> CliResult {
    let c = &cmd.common;
    let (inst, n_max) = resolve(&c.instance)?;
    guard(c.n, n_max, c.force)?;
    let report = match cmd.check {
        Check::Axioms => match &inst {
            Instance::Monoid(m) => check_monoid_axioms(m.as_ref(), c.n),
            Instance::Operad(o) => check_operad_axioms(o.as_ref(), c.n),
            Instance::Monop(mp) => check_monop_axioms(mp.as_ref(), c.n),
        },
        Check::Intervals => match &inst {
            Instance::Monop(mp) => check_interval_factorization(mp.as_ref(), c.n)?,
            _ => return Err(usage(format!("{} is not a monop", c.instance))),
        },
        Check::Inverse => match &inst {
            Instance::Monop(mp) => {
                let mut report = Report::new(format!("inverse theorem for {}", c.instance), c.n);
                let counting = counting_matrix(mp.as_ref(), c.n)?;
                let mobius = mobius_matrix(mp.as_ref(), c.n)?;
                let identity = monops::LowerTriangular::identity(c.n);
                let witness = |m: &monops::LowerTriangular| {
                    (0..=m.n_max())
                        .flat_map(|n| (0..=n).map(move |k| (n, k)))
                        .find(|&(n, k)| m.entry(n, k) != identity.entry(n, k))
                        .map(|(n, k)| {
                            format!("entry ({n}, {k}) = {}", rat_to_string(&m.entry(n, k)))
                        })
                };
                report.record("counting * mobius = identity", witness(&counting.mul(&mobius)?));
                report.record("mobius * counting = identity", witness(&mobius.mul(&counting)?));
                report
            }
            _ => return Err(usage(format!("{} is not a monop", c.instance))),
        },
        Check::Functoriality => match &inst {
            Instance::Monop(mp) => {
                let mut report = Report::new(format!("functoriality for {}", c.instance), c.n);
                let counted = counting_matrix(mp.as_ref(), c.n)?;
                let pair = mp
                    .counting_pair(c.n)
                    .ok_or_else(|| usage(format!("{} has no closed-form pair", c.instance)))?;
                let derived = pair.matrix(c.n)?;
                let witness = (0..=c.n)
                    .flat_map(|n| (0..=n).map(move |k| (n, k)))
                    .find(|&(n, k)| counted.entry(n, k) != derived.entry(n, k))
                    .map(|(n, k)| {
                        format!(
                            "entry ({n}, {k}): poset count {} vs pair {}",
                            rat_to_string(&counted.entry(n, k)),
                            rat_to_string(&derived.entry(n, k))
                        )
                    });
                report.record("poset counting matrix = pair matrix", witness);
                report
            }
            _ => return Err(usage(format!("{} is not a monop", c.instance))),
        },
    };
    let value = report_json(&report);
    if !report.passed {
        return Err(CliError::Verification(value));
    }
    match cmd.format {
        Format::Json => emit_json(value, &c.output),
        Format::Text => {
            let lines: Vec<String> = std::iter::once(format!(
                "PASS {} at n = {}",
                c.instance, c.n
            ))
            .chain(report.checks.iter().map(|ch| format!("  ok {}", ch.law)))
            .collect();
            emit(&lines.join("\n"), &c.output)
        }
        _ => Err(usage("verify supports --format json or text")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Catalog(cmd) => run_catalog(cmd),
        Command::Series(cmd) => run_series(cmd),
        Command::Riordan(cmd) => run_riordan(cmd),
        Command::Sheffer(cmd) => run_sheffer(cmd),
        Command::Poset(cmd) => run_poset(cmd),
        Command::Matrix(cmd) => run_matrix(cmd),
        Command::Verify(cmd) => run_verify(cmd),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Verification(witness)) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&witness).expect("json serializes")
            );
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
