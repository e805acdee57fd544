//! Command-line front end. The binary is a thin wrapper around [`run_cli`],
//! which takes its argument list and output streams explicitly so the whole
//! surface stays testable in-process.
//!
//! Exit codes: 0 success (or all checks passed), 1 verification failure,
//! 2 usage error, 3 resource cap exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::corpus::CorpusFile;
use crate::decompose::{
    associated_primes, bight, canonical_primary_decomposition, embedded_primes,
    irreducible_decomposition, minimal_primes, PrimeSupport,
};
use crate::error::ScanError;
use crate::harness::{run_suite, Statement, SuiteConfig};
use crate::ideal::MonomialIdeal;
use crate::parse::parse_ideal;
use crate::powers::{
    analytic_spread, ir_polynomial, ir_sequence, symbolic_ir_polynomial, symbolic_power,
    ScanConfig,
};
use crate::ratpoly::fit_polynomial;
use crate::report::{
    decomposition_json, json_to_string, polynomial_json, prime_json, scan_report_csv,
    scan_report_json, suite_json,
};
use crate::socle::{associated_primes_via_socle, ir, ir_verified, socle_dimension_at};
use crate::vars::VariableSet;

#[derive(Parser)]
#[command(
    name = "irred",
    version,
    about = "Exact decompositions and indices of reducibility for monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an ideal and print its canonical minimal form
    Parse {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Irredundant primary decomposition (or irreducible with --irreducible)
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Emit the irreducible decomposition instead of the primary one
        #[arg(long)]
        irreducible: bool,
    },
    /// Associated, minimal and embedded primes
    Assoc {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Index of reducibility
    Ir {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Also run the component count and require agreement
        #[arg(long)]
        check: bool,
    },
    /// Socle dimensions at the associated primes (or one prime)
    Socle {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Comma-separated variables of a single prime to probe
        #[arg(long)]
        prime: Option<String>,
    },
    /// Power scan: ir/mu sequences, exact fits, degree bounds
    Scan {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        window: WindowArgs,
        /// Also write the scan as CSV (columns n, ir, mu)
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Fit an exact polynomial to values or to an ideal's ir sequence
    Fit {
        #[command(flatten)]
        input: OptionalInputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        window: WindowArgs,
        /// Comma-separated integer values to fit directly
        #[arg(long, conflicts_with_all = ["vars", "ideal", "file"])]
        values: Option<String>,
        /// Argument of the first value (with --values)
        #[arg(long, default_value_t = 1)]
        start: i64,
    },
    /// Analytic spread via the degree of the fitted mu polynomial
    Ell {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Big height: maximal height of a minimal prime
    Bight {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Symbolic powers: one power with --n, otherwise a full scan
    Symbolic {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        window: WindowArgs,
        /// Compute the single n-th symbolic power
        #[arg(long)]
        n: Option<u32>,
    },
    /// Run the verification suite over the bundled examples and a seeded corpus
    Verify {
        #[command(flatten)]
        output: OutputArgs,
        /// `all` or a comma-separated list of statement ids
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Scan window for the asymptotic statements (default 7)
        #[arg(long)]
        max_n: Option<u32>,
        /// Generator cap for power scans
        #[arg(long, default_value_t = 200_000)]
        cap: usize,
    },
    /// Generate a deterministic random corpus file
    GenRandom {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        arity: u32,
        #[arg(long, default_value_t = 5)]
        gens: u32,
        #[arg(long, default_value_t = 4)]
        max_exp: u32,
        #[arg(long, default_value_t = 10)]
        count: u32,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Comma-separated ambient variables (with --ideal)
    #[arg(long, requires = "ideal")]
    vars: Option<String>,
    /// Ideal text, e.g. "x^2, x*y"
    #[arg(long, requires = "vars", conflicts_with = "file")]
    ideal: Option<String>,
    /// Corpus file; the subcommand applies to every entry
    #[arg(long)]
    file: Option<PathBuf>,
}

/// Same fields as [`InputArgs`] but an ideal source is not mandatory
/// (used by `fit`, which may take --values instead).
#[derive(Args)]
struct OptionalInputArgs {
    #[arg(long, requires = "ideal")]
    vars: Option<String>,
    #[arg(long, requires = "vars", conflicts_with = "file")]
    ideal: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the JSON report to this file instead of stdout
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct WindowArgs {
    /// Largest power in the scan window
    #[arg(long, default_value_t = 6)]
    max_n: u32,
    /// Abort when a power accumulates more generators than this
    #[arg(long, default_value_t = 200_000)]
    cap: usize,
}

impl WindowArgs {
    fn scan_config(&self) -> ScanConfig {
        ScanConfig { n_max: self.max_n, gen_cap: self.cap }
    }
}

enum CliError {
    Usage(String),
    ResourceCap(String),
}

impl CliError {
    fn usage(err: impl ToString) -> Self {
        CliError::Usage(err.to_string())
    }
}

fn map_scan_error(err: ScanError) -> CliError {
    match err {
        ScanError::GeneratorCap { .. } => CliError::ResourceCap(err.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

struct CmdOut {
    body: Value,
    /// Raw text output (corpus files); bypasses JSON rendering.
    raw: Option<String>,
    json_path: Option<PathBuf>,
    exit: i32,
}

impl CmdOut {
    fn json(body: Value, output: OutputArgs) -> Self {
        CmdOut { body, raw: None, json_path: output.json, exit: 0 }
    }

    fn raw(text: String) -> Self {
        CmdOut { body: Value::Null, raw: Some(text), json_path: None, exit: 0 }
    }
}

/// Named inputs: a single `--ideal` keeps results bare, a corpus file maps
/// entry names to results.
enum Inputs {
    Single(MonomialIdeal),
    Batch(Vec<(String, MonomialIdeal)>),
}

fn resolve_inputs(input: &InputArgs) -> Result<Inputs, CliError> {
    resolve_optional(&OptionalInputArgs {
        vars: input.vars.clone(),
        ideal: input.ideal.clone(),
        file: input.file.clone(),
    })?
    .ok_or_else(|| CliError::Usage("provide --vars/--ideal or --file".into()))
}

fn resolve_optional(input: &OptionalInputArgs) -> Result<Option<Inputs>, CliError> {
    if let (Some(vars), Some(ideal)) = (&input.vars, &input.ideal) {
        let vars = VariableSet::parse_csv(vars).map_err(CliError::Usage)?;
        let ideal = parse_ideal(ideal, &vars).map_err(CliError::usage)?;
        return Ok(Some(Inputs::Single(ideal)));
    }
    if let Some(path) = &input.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let corpus = CorpusFile::parse(&text).map_err(CliError::usage)?;
        return Ok(Some(Inputs::Batch(corpus.entries().to_vec())));
    }
    Ok(None)
}

/// Applies `f` to every input, producing a bare value or a name-keyed map.
fn over_inputs(
    inputs: Inputs,
    mut f: impl FnMut(&MonomialIdeal) -> Result<Value, CliError>,
) -> Result<Value, CliError> {
    match inputs {
        Inputs::Single(ideal) => f(&ideal),
        Inputs::Batch(entries) => {
            let mut map = Map::new();
            for (name, ideal) in &entries {
                map.insert(name.clone(), f(ideal)?);
            }
            Ok(Value::Object(map))
        }
    }
}

fn parse_prime(names: &str, ideal: &MonomialIdeal) -> Result<PrimeSupport, CliError> {
    let parts: Vec<&str> = names.split(',').map(str::trim).collect();
    PrimeSupport::from_names(&parts, ideal.vars())
        .ok_or_else(|| CliError::Usage(format!("`{names}` is not a prime of the ambient ring")))
}

fn primes_value(primes: impl IntoIterator<Item = PrimeSupport>, vars: &VariableSet) -> Value {
    Value::Array(primes.into_iter().map(|p| prime_json(&p, vars)).collect())
}

fn execute(cli: Cli) -> Result<CmdOut, CliError> {
    match cli.command {
        Command::Parse { input, output } => {
            let body = over_inputs(resolve_inputs(&input)?, |ideal| {
                Ok(json!({
                    "vars": ideal.vars().names(),
                    "ideal": ideal.to_string(),
                    "num_gens": ideal.num_gens(),
                }))
            })?;
            Ok(CmdOut::json(body, output))
        }
        Command::Decompose { input, output, irreducible } => {
            let body = over_inputs(resolve_inputs(&input)?, |ideal| {
                if irreducible {
                    let comps = irreducible_decomposition(ideal).map_err(CliError::usage)?;
                    let components: Vec<Value> = comps
                        .iter()
                        .map(|c| {
                            json!({
                                "prime": c.support().map_or(Value::Array(Vec::new()), |p| {
                                    prime_json(&p, ideal.vars())
                                }),
                                "ideal": c.as_ideal(ideal.vars()).to_string(),
                            })
                        })
                        .collect();
                    Ok(json!({ "target": ideal.to_string(), "components": components }))
                } else {
                    let dec = canonical_primary_decomposition(ideal).map_err(CliError::usage)?;
                    Ok(decomposition_json(&dec))
                }
            })?;
            Ok(CmdOut::json(body, output))
        }
        Command::Assoc { input, output } => {
            let body = over_inputs(resolve_inputs(&input)?, |ideal| {
                let ass = associated_primes(ideal).map_err(CliError::usage)?;
                let min = minimal_primes(ideal).map_err(CliError::usage)?;
                let emb = embedded_primes(ideal).map_err(CliError::usage)?;
                Ok(json!({
                    "associated": primes_value(ass, ideal.vars()),
                    "minimal": primes_value(min, ideal.vars()),
                    "embedded": primes_value(emb, ideal.vars()),
                }))
            })?;
            Ok(CmdOut::json(body, output))
        }
        Command::Ir { input, output, check } => {
            let body = over_inputs(resolve_inputs(&input)?, |ideal| {
                let value = if check {
                    ir_verified(ideal).map_err(CliError::usage)?
                } else {
                    ir(ideal).map_err(CliError::usage)?
                };
                Ok(json!(value))
            })?;
            Ok(CmdOut::json(body, output))
        }
        Command::Socle { input, output, prime } => {
            let body = over_inputs(resolve_inputs(&input)?, |ideal| {
                if let Some(names) = &prime {
                    let p = parse_prime(names, ideal)?;
                    return Ok(json!(socle_dimension_at(ideal, &p)));
                }
                let ass = associated_primes_via_socle(ideal).map_err(CliError::usage)?;
                let primes: Vec<Value> = ass
                    .iter()
                    .map(|p| {
                        json!({
                            "prime": prime_json(p, ideal.vars()),
                            "dim": socle_dimension_at(ideal, p),
                        })
                    })
                    .collect();
                Ok(json!({
                    "ir": ir(ideal).map_err(CliError::usage)?,
                    "primes": primes,
                }))
            })?;
            Ok(CmdOut::json(body, output))
        }
        Command::Scan { input, output, window, csv } => {
            let config = window.scan_config();
            let inputs = resolve_inputs(&input)?;
            if csv.is_some() && matches!(inputs, Inputs::Batch(_)) {
                return Err(CliError::Usage("--csv needs a single --ideal input".into()));
            }
            let mut csv_text = None;
            let body = over_inputs(inputs, |ideal| {
                let report = ir_polynomial(ideal, config).map_err(map_scan_error)?;
                if csv.is_some() {
                    csv_text = Some(scan_report_csv(&report));
                }
                Ok(scan_report_json(&report))
            })?;
            if let (Some(path), Some(text)) = (&csv, &csv_text) {
                std::fs::write(path, text)
                    .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            }
            Ok(CmdOut::json(body, output))
        }
        Command::Fit { input, output, window, values, start } => {
            if let Some(values) = values {
                let parsed: Result<Vec<u64>, _> =
                    values.split(',').map(|v| v.trim().parse::<u64>()).collect();
                let parsed = parsed.map_err(|e| CliError::Usage(format!("bad --values: {e}")))?;
                let body = match fit_polynomial(&parsed, start) {
                    Ok(poly) => polynomial_json(&poly),
                    Err(crate::error::FitError::NotStabilized) => json!("not stabilized"),
                    Err(e) => return Err(CliError::usage(e)),
                };
                return Ok(CmdOut::json(body, output));
            }
            let Some(inputs) = resolve_optional(&input)? else {
                return Err(CliError::Usage("provide --values or an ideal input".into()));
            };
            let config = window.scan_config();
            let body = over_inputs(inputs, |ideal| {
                let seq = ir_sequence(ideal, config).map_err(map_scan_error)?;
                let fitted = match fit_polynomial(&seq, 1) {
                    Ok(poly) => polynomial_json(&poly),
                    Err(_) => json!("not stabilized"),
                };
                Ok(json!({ "values": seq, "fitted": fitted }))
            })?;
            Ok(CmdOut::json(body, output))
        }
        Command::Ell { input, output, window } => {
            let config = window.scan_config();
            let body = over_inputs(resolve_inputs(&input)?, |ideal| {
                match analytic_spread(ideal, config) {
                    Ok(ell) => Ok(json!(ell)),
                    Err(ScanError::NotStabilized { .. }) => Ok(json!("not stabilized")),
                    Err(e) => Err(map_scan_error(e)),
                }
            })?;
            Ok(CmdOut::json(body, output))
        }
        Command::Bight { input, output } => {
            let body = over_inputs(resolve_inputs(&input)?, |ideal| {
                Ok(json!(bight(ideal).map_err(CliError::usage)?))
            })?;
            Ok(CmdOut::json(body, output))
        }
        Command::Symbolic { input, output, window, n } => {
            let body = over_inputs(resolve_inputs(&input)?, |ideal| {
                if let Some(n) = n {
                    if n == 0 {
                        return Err(CliError::Usage("--n must be at least 1".into()));
                    }
                    let power = symbolic_power(ideal, n).map_err(map_scan_error)?;
                    Ok(json!({ "n": n, "ideal": power.to_string() }))
                } else {
                    let report =
                        symbolic_ir_polynomial(ideal, window.scan_config()).map_err(map_scan_error)?;
                    Ok(scan_report_json(&report))
                }
            })?;
            Ok(CmdOut::json(body, output))
        }
        Command::Verify { output, suite, seed, max_n, cap } => {
            let mut config = SuiteConfig::for_seed(seed);
            if let Some(n) = max_n {
                config.scan.n_max = n;
            }
            config.scan.gen_cap = cap;
            if suite != "all" {
                let statements: Result<Vec<Statement>, String> =
                    suite.split(',').map(|s| s.trim().parse()).collect();
                config.statements = statements.map_err(CliError::Usage)?;
            }
            let outcome = run_suite(&config);
            let exit = if outcome.all_passed() { 0 } else { 1 };
            let mut cmd = CmdOut::json(suite_json(&outcome, seed), output);
            cmd.exit = exit;
            Ok(cmd)
        }
        Command::GenRandom { seed, arity, gens, max_exp, count } => {
            let spec = crate::harness::CorpusSpec { seed, arity, n_gens: gens, max_exp, count };
            let ideals = crate::harness::random_monomial_ideals(&spec).map_err(CliError::usage)?;
            let vars = VariableSet::numbered("x", arity as usize);
            let entries = ideals
                .into_iter()
                .enumerate()
                .map(|(i, ideal)| (format!("r{i:04}"), ideal))
                .collect();
            let corpus = CorpusFile::new(vars, entries);
            Ok(CmdOut::raw(corpus.to_text()))
        }
    }
}

/// Parses the argument list, runs the subcommand, and writes its report.
/// Returns the process exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{rendered}");
                0
            } else {
                let _ = write!(err, "{rendered}");
                2
            };
        }
    };
    match execute(cli) {
        Ok(cmd) => {
            if let Some(text) = cmd.raw {
                let _ = write!(out, "{text}");
                return cmd.exit;
            }
            let rendered = json_to_string(&cmd.body);
            match cmd.json_path {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, rendered) {
                        let _ = writeln!(err, "error: {}: {e}", path.display());
                        return 2;
                    }
                }
                None => {
                    let _ = write!(out, "{rendered}");
                }
            }
            cmd.exit
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(CliError::ResourceCap(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            3
        }
    }
}
