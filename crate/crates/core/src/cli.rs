//! The `gbcodex` command line.
//!
//! Exit status is 0 on success, 1 when a computation or verification fails
//! and 2 for usage errors (bad flags, out-of-range parameters).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use crate::arithmetic::{sweep_catalog, SweepConfig};
use crate::catalog::{self, CatalogHeader};
use crate::css::DEFAULT_ORACLE_CAP;
use crate::distance::{
    determine, lattice_lower_bound_uv, Budget, DistanceReport, LowerBoundSource,
};
use crate::error::{Error, Result};
use crate::gbcode::GbSpec;
use crate::lattice::Lattice2D;

#[derive(Debug, Parser)]
#[command(
    name = "gbcodex",
    version,
    about = "Weight-two generalized bicycle codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a GB code and print its parameters.
    #[command(group(ArgGroup::new("spec").required(true).args(["a", "alpha"])))]
    Construct {
        /// First generator, e.g. `1+x`.
        #[arg(long, requires = "b", allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, requires = "a")]
        b: Option<String>,
        /// Canonical form `GB(1 + x, 1 + x^alpha, n)`.
        #[arg(long, conflicts_with_all = ["a", "b"])]
        alpha: Option<usize>,
        #[arg(long)]
        n: usize,
    },
    /// Certified distance of `GB(1 + x, 1 + x^alpha, n)`.
    Distance {
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Catalog the best code for every admissible n.
    Sweep {
        #[arg(long, default_value_t = 200)]
        max_length: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = SweepConfig::default().seed)]
        seed: u64,
        /// Worker threads (overrides GBCODEX_THREADS).
        #[arg(long)]
        threads: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Recompute every invariant of a catalog file.
    Verify { path: PathBuf },
    /// Lower bound for `GB(1 + x^u, 1 + x^v, n)`.
    Bound {
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, clap::Args)]
struct BudgetArgs {
    /// Largest kernel dimension for the exhaustive oracle.
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    #[arg(long)]
    no_parity_refinement: bool,
    /// Extra L1 radius when searching certificates.
    #[arg(long, default_value_t = 0)]
    slack: u64,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            oracle_cap: self.oracle_cap,
            parity_refinement: !self.no_parity_refinement,
            certificate_slack: self.slack,
            ..Budget::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Parses `std::env::args` and runs; returns the exit status.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_)
        | Error::Parse { .. }
        | Error::PolynomialTooWide { .. }
        | Error::ZeroModulus
        | Error::NotReducible { .. }
        | Error::NotWeightTwo(_)
        | Error::ZeroGenerator
        | Error::DegenerateGraph { .. }
        | Error::NoSquareRootOfMinusOne(_) => 2,
        _ => 1,
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Construct { a, b, alpha, n } => {
            let spec = match (a, b, alpha) {
                (Some(a), Some(b), None) => GbSpec::parse(&a, &b, n)?,
                (None, None, Some(alpha)) => GbSpec::canonical(alpha, n)?,
                _ => unreachable!("clap enforces one spec form"),
            };
            construct(&spec, out).map_err(io)?;
            Ok(0)
        }
        Command::Distance {
            alpha,
            n,
            budget,
            json,
        } => {
            let report = determine(alpha, n, &budget.budget())?;
            if json {
                let text = serde_json::to_string_pretty(&report)
                    .map_err(|e| Error::InvalidInput(e.to_string()))?;
                writeln!(out, "{text}").map_err(io)?;
            } else {
                print_report(&report, out).map_err(io)?;
            }
            Ok(0)
        }
        Command::Sweep {
            max_length,
            output,
            format,
            seed,
            threads,
            budget,
        } => {
            let config = SweepConfig {
                max_length,
                budget: budget.budget(),
                seed,
                threads,
            };
            let entries = sweep_catalog(&config)?;
            let text = match format {
                Format::Json => {
                    catalog::render_ndjson(&CatalogHeader::for_sweep(&config), &entries)?
                }
                Format::Csv => catalog::render_csv(&entries),
            };
            match output {
                Some(path) => {
                    catalog::write_file(&path, &text)?;
                    writeln!(err, "wrote {} entries to {}", entries.len(), path.display())
                        .map_err(io)?;
                }
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            Ok(0)
        }
        Command::Verify { path } => {
            let outcome = catalog::verify(&path)?;
            for w in &outcome.warnings {
                writeln!(err, "warning: {w}").map_err(io)?;
            }
            for f in &outcome.failures {
                match f.n {
                    Some(n) => writeln!(out, "FAIL line {} (n = {n}): {}", f.line, f.message),
                    None => writeln!(out, "FAIL line {}: {}", f.line, f.message),
                }
                .map_err(io)?;
            }
            if outcome.ok() {
                writeln!(out, "ok: {} records", outcome.records).map_err(io)?;
                Ok(0)
            } else {
                writeln!(
                    out,
                    "{} of {} records failed",
                    outcome.failures.len(),
                    outcome.records
                )
                .map_err(io)?;
                Ok(1)
            }
        }
        Command::Bound { u, v, n } => {
            let bound = lattice_lower_bound_uv(u, v, n)?;
            writeln!(
                out,
                "GB(1+x^{u}, 1+x^{v}, {n}): λ²={} d >= {}",
                bound.lambda_sq, bound.value
            )
            .map_err(io)?;
            Ok(0)
        }
    }
}

fn construct(spec: &GbSpec, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "GB({}, {}, {})", spec.a(), spec.b(), spec.n())?;
    let code = match spec.build() {
        Ok(code) => code,
        Err(e) => return writeln!(out, "error: {e}"),
    };
    let (k, k_formula) = (code.dimension(), spec.dimension_formula());
    let canonical = spec.canonicalize(false);
    let lattice = canonical.as_ref().ok().map(|c| {
        Lattice2D::gb(c.alpha, c.n)
            .expect("canonical alpha is in range")
            .summary()
    });
    match lattice {
        Some(s) => writeln!(
            out,
            "[[{}, {k}]] λ²={} minL1={}",
            code.length(),
            s.lambda_sq,
            s.min_l1
        )?,
        None => writeln!(out, "[[{}, {k}]]", code.length())?,
    }
    let agreement = if k == k_formula { "agree" } else { "DISAGREE" };
    writeln!(out, "k: rank {k}, gcd formula {k_formula} ({agreement})")?;
    if k == 0 {
        writeln!(out, "distance: infinite")?;
    }
    match canonical {
        Ok(c) => {
            writeln!(out, "canonical: alpha = {} (n = {})", c.alpha, c.n)?;
            if c.swapped {
                writeln!(out, "generators swapped")?;
            }
        }
        Err(e) => writeln!(out, "canonical form: {e}")?,
    }
    Ok(())
}

fn print_report(r: &DistanceReport, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "GB(1+x, 1+x^{}, {})  [[{}, 2]]", r.alpha, r.n, 2 * r.n)?;
    let hypothesis = if r.lattice_bound_proven {
        ""
    } else {
        " (n < 6: not a proven bound)"
    };
    writeln!(
        out,
        "lower: {} (λ²={}){hypothesis}",
        r.lower_bound, r.lambda_sq
    )?;
    if let Some(p) = r.parity_refined_lower {
        writeln!(out, "parity-refined lower: {p}")?;
    }
    let [x, y] = r.certificate_displacement;
    writeln!(out, "upper: {} (staircase ({x}, {y}))", r.upper_bound)?;
    match r.exact {
        Some(d) => writeln!(out, "exact: {d}")?,
        None => writeln!(
            out,
            "exact: unknown, {} <= d <= {}",
            r.certified_lower(),
            r.upper_bound
        )?,
    }
    let closed = match r.closed_by {
        Some(LowerBoundSource::Lattice) => " (lattice bound)",
        Some(LowerBoundSource::ParityRefined) => " (parity-refined bound)",
        None => "",
    };
    writeln!(out, "method: {}{closed}", r.method.as_str())?;
    let indices: Vec<String> = r.certificate.iter().map(usize::to_string).collect();
    writeln!(out, "certificate: {}", indices.join(" "))?;
    if let Some(d) = r.d_x_oracle {
        writeln!(out, "oracle d_X: {d}")?;
    }
    if let Some(d) = r.d_z_oracle {
        writeln!(out, "oracle d_Z: {d}")?;
    }
    let z = match r.z_side {
        crate::distance::ZSide::OracleVerified => "oracle-verified",
        crate::distance::ZSide::AssumedEqual => "assumed equal to d_X",
    };
    writeln!(out, "z-side: {z}")
}
