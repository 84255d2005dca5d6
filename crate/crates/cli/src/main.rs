//! Batch front end: build and combine truncated ideals, run verification
//! suites, and emit machine-checkable reports.
//!
//! Exit codes: 0 all assertions pass, 1 assertion failure, 2 usage error,
//! 3 budget exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sinfty_cli::checks;
use sinfty_cli::formats::{
    character_table_csv, field_from_string, ideal_from_json, ideal_to_json,
    parse_inf_partition_spec, parse_partition, repn_to_file, system_from_file, system_to_file,
};
use sinfty_cli::report::{Header, Report};
use sinfty_core::ideals::{
    dagger, ideal_j_minus, ideal_j_plus, ideal_of_phi, ideal_prime_char0, ideal_schur_weyl, join,
    phi_of, unit_ideal, zero_ideal, TruncatedIdeal,
};
use sinfty_core::rep::specht_action;
use sinfty_core::scalar::FieldKind;

#[derive(Parser)]
#[command(
    name = "sinfty",
    version,
    about = "Exact computations with truncated ideals of infinite symmetric group algebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build, combine and inspect truncated ideals.
    Ideal {
        #[command(subcommand)]
        cmd: IdealCmd,
    },
    /// Run a verification suite and emit a report.
    Check {
        /// One of: semiring, tprime, dimension, growth, verlinde, thoma.
        suite: String,
        /// Prime for the verlinde suite.
        #[arg(long)]
        p: Option<u32>,
        /// Single-ideal mode for the dimension suite: a builtin name
        /// (j_plus, j_minus, P_<m>_<n>) or a path to an ideal file.
        #[arg(long)]
        ideal: Option<String>,
        /// Loop value for the single-ideal dimension check.
        #[arg(long)]
        delta: Option<i64>,
        /// Truncation level override (each suite has its own default).
        #[arg(long = "N")]
        n_levels: Option<usize>,
        /// Scalar field: q or fp:<p>.
        #[arg(long, default_value = "q")]
        field: String,
        /// Memory budget in bytes for centralizer solves.
        #[arg(long, default_value_t = 268435456)]
        budget: usize,
        /// Report format: json, csv or human.
        #[arg(long, default_value = "json")]
        format: String,
        /// Seed recorded in the report header (suites are deterministic).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the ordinary character table as CSV.
    Chartable {
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the integral module action for a partition label as JSON.
    Specht {
        /// Partition, comma separated, e.g. 2,1.
        lambda: String,
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum IdealCmd {
    /// Build an ideal from a named constructor.
    ///
    /// Constructors: j_plus | j_minus | zero | unit | schur_weyl <m> <n> |
    /// prime_char0 <label> | of_phi <system.json>. Labels read as
    /// inf:<m|inf>[,head:<a+b+..>][,tail:<t>].
    Build {
        /// Constructor name followed by its parameters.
        #[arg(required = true)]
        spec: Vec<String>,
        #[arg(long = "N", default_value_t = 4)]
        n_levels: usize,
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Combine two ideal files with join or dagger.
    Op {
        /// join or dagger.
        op: String,
        lhs: PathBuf,
        rhs: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extract the inductive system of an ideal file.
    Phi {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Ideal { cmd } => run_ideal(cmd),
        Cmd::Check {
            suite,
            p,
            ideal,
            delta,
            n_levels,
            field,
            budget,
            format,
            seed,
            out,
        } => run_check(
            &suite, p, ideal, delta, n_levels, &field, budget, &format, seed, out,
        ),
        Cmd::Chartable { n, out } => {
            write_output(out.as_deref(), &character_table_csv(n))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Specht { lambda, field, out } => {
            let lam = parse_partition(&lambda).map_err(|e| e.to_string())?;
            let field = field_from_string(&field).map_err(|e| e.to_string())?;
            let action = specht_action(&lam, field);
            let mut json =
                serde_json::to_string_pretty(&repn_to_file(&action)).expect("serialisable");
            json.push('\n');
            write_output(out.as_deref(), &json)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_ideal(cmd: IdealCmd) -> Result<ExitCode, String> {
    match cmd {
        IdealCmd::Build {
            spec,
            n_levels,
            field,
            out,
        } => {
            let field = field_from_string(&field).map_err(|e| e.to_string())?;
            let ideal = build_ideal(&spec, n_levels, field)?;
            write_output(out.as_deref(), &ideal_to_json(&ideal))?;
            Ok(ExitCode::SUCCESS)
        }
        IdealCmd::Op { op, lhs, rhs, out } => {
            let a = read_ideal(&lhs)?;
            let b = read_ideal(&rhs)?;
            let result = match op.as_str() {
                "join" => join(&a, &b),
                "dagger" => dagger(&a, &b),
                other => return Err(format!("unknown operation {other}")),
            }
            .map_err(|e| e.to_string())?;
            write_output(out.as_deref(), &ideal_to_json(&result))?;
            Ok(ExitCode::SUCCESS)
        }
        IdealCmd::Phi { input, out } => {
            let ideal = read_ideal(&input)?;
            let phi = phi_of(&ideal);
            let mut json =
                serde_json::to_string_pretty(&system_to_file(&phi)).expect("serialisable");
            json.push('\n');
            write_output(out.as_deref(), &json)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn build_ideal(
    spec: &[String],
    n_levels: usize,
    field: FieldKind,
) -> Result<TruncatedIdeal, String> {
    if n_levels < 1 {
        return Err("N must be at least 1".into());
    }
    let name = spec[0].as_str();
    let args = &spec[1..];
    let expect_args = |k: usize| -> Result<(), String> {
        if args.len() == k {
            Ok(())
        } else {
            Err(format!("{name} takes {k} parameter(s), got {}", args.len()))
        }
    };
    match name {
        "j_plus" => {
            expect_args(0)?;
            Ok(ideal_j_plus(n_levels, field))
        }
        "j_minus" => {
            expect_args(0)?;
            Ok(ideal_j_minus(n_levels, field))
        }
        "zero" => {
            expect_args(0)?;
            Ok(zero_ideal(n_levels, field))
        }
        "unit" => {
            expect_args(0)?;
            Ok(unit_ideal(n_levels, field))
        }
        "schur_weyl" => {
            expect_args(2)?;
            let m: u32 = args[0].parse().map_err(|_| "bad m".to_string())?;
            let n: u32 = args[1].parse().map_err(|_| "bad n".to_string())?;
            Ok(ideal_schur_weyl(m, n, n_levels, field))
        }
        "prime_char0" => {
            expect_args(1)?;
            if field != FieldKind::Rational {
                return Err("prime_char0 requires the rational field".into());
            }
            let label = parse_inf_partition_spec(&args[0]).map_err(|e| e.to_string())?;
            Ok(ideal_prime_char0(&label, n_levels))
        }
        "of_phi" => {
            expect_args(1)?;
            let text =
                std::fs::read_to_string(&args[0]).map_err(|e| format!("{}: {e}", args[0]))?;
            let file = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let phi = system_from_file(&file).map_err(|e| e.to_string())?;
            if phi.n_levels() < n_levels {
                return Err(format!(
                    "system has {} levels, {n_levels} requested",
                    phi.n_levels()
                ));
            }
            ideal_of_phi(&phi, field).map_err(|e| e.to_string())
        }
        other => Err(format!("unknown constructor {other}")),
    }
}

fn read_ideal(path: &Path) -> Result<TruncatedIdeal, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    ideal_from_json(&text).map_err(|e| e.to_string())
}

#[allow(clippy::too_many_arguments)]
fn run_check(
    suite: &str,
    p: Option<u32>,
    ideal: Option<String>,
    delta: Option<i64>,
    n_levels: Option<usize>,
    field: &str,
    budget_bytes: usize,
    format: &str,
    seed: u64,
    out: Option<PathBuf>,
) -> Result<ExitCode, String> {
    let field_kind = field_from_string(field).map_err(|e| e.to_string())?;
    // dense centralizer matrices cost about 16 bytes per entry
    let tensor_budget = ((budget_bytes / 16) as f64).sqrt() as usize;
    let (assertions, n_used) = match suite {
        "semiring" => {
            let n = n_levels.unwrap_or(4);
            (checks::semiring::run(n), n)
        }
        "tprime" => {
            let n = n_levels.unwrap_or(4);
            (checks::tprime::run(n), n)
        }
        "dimension" => {
            let n = n_levels.unwrap_or(5);
            match (&ideal, delta) {
                (Some(name), Some(d)) => {
                    let target = resolve_ideal(name, n, field_kind)?;
                    let dval = field_kind.from_i64(d);
                    let admitted = sinfty_core::ideals::admits_dimension(&target, &dval)
                        .map_err(|e| e.to_string())?;
                    (
                        vec![sinfty_cli::report::Assertion::check(
                            format!("dimension.admits.{name}"),
                            "the ideal admits the requested loop value",
                            format!("delta={d}, N={n}, field {field_kind}"),
                            if admitted { "admitted" } else { "rejected" },
                            "admitted",
                            admitted,
                        )],
                        n,
                    )
                }
                (None, None) => (checks::dimension::run(n), n),
                _ => return Err("--ideal and --delta must be given together".into()),
            }
        }
        "growth" => {
            let n = n_levels.unwrap_or(5);
            (checks::growth::run(n), n)
        }
        "verlinde" => {
            let n = n_levels.unwrap_or(4);
            let asserts = match p {
                None => checks::verlinde::run(3, tensor_budget),
                Some(q) => {
                    if q < 3 || !(2..q).all(|d| q % d != 0) {
                        return Err(format!("{q} is not an odd prime"));
                    }
                    let mut a = vec![checks::verlinde::run_ver4_det()];
                    a.extend(checks::verlinde::run_verp_det(q));
                    a.extend(checks::verlinde::run_growth_bound(q, 2, n, tensor_budget));
                    a
                }
            };
            (asserts, n)
        }
        "thoma" => {
            let n = n_levels.unwrap_or(4);
            (checks::thoma::run(n), n)
        }
        other => return Err(format!("unknown suite {other}")),
    };
    let report = Report::new(
        Header {
            suite: suite.to_string(),
            timestamp: timestamp(),
            field: field_kind.to_string(),
            n_levels: n_used,
            seed,
            budget: budget_bytes,
        },
        assertions,
    );
    let rendered = match format {
        "json" => report.to_json(),
        "csv" => report.to_csv(),
        "human" => report.to_human(),
        other => return Err(format!("unknown format {other}")),
    };
    write_output(out.as_deref(), &rendered)?;
    Ok(ExitCode::from(report.exit_code() as u8))
}

fn resolve_ideal(name: &str, n_levels: usize, field: FieldKind) -> Result<TruncatedIdeal, String> {
    match name {
        "j_plus" => return Ok(ideal_j_plus(n_levels, field)),
        "j_minus" => return Ok(ideal_j_minus(n_levels, field)),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("P_") {
        if let Some((m, n)) = rest.split_once('_') {
            let m: u32 = m.parse().map_err(|_| "bad parameter".to_string())?;
            let n: u32 = n.parse().map_err(|_| "bad parameter".to_string())?;
            return Ok(ideal_schur_weyl(m, n, n_levels, field));
        }
    }
    if Path::new(name).exists() {
        return read_ideal(Path::new(name));
    }
    Err(format!("unknown ideal {name}"))
}

fn timestamp() -> String {
    if let Ok(epoch) = std::env::var("SOURCE_DATE_EPOCH") {
        return epoch;
    }
    match std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH) {
        Ok(d) => d.as_secs().to_string(),
        Err(_) => "0".to_string(),
    }
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
