//! `qhdeform`: verification suites, coefficient tables and matrix exports for
//! the map from `U_q(sl(2))` to `U_{q,h}(sl(2))`.
//!
//! Exit status: 0 if every check passes, 1 if any check fails, 2 on a
//! configuration error.

mod config;
mod export;
mod output;
mod suites;
mod tables;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::bail;
use clap::{Parser, Subcommand};
use qhdeform::{Basis, RepSpec, TensorRep, VerificationReport};

use config::{check_two_j_max, ModeArg, NumericArgs, NumericPoint, OutputArgs};
use export::Format;
use output::{print_summary, Environment, ReportDocument, TruncationOrder};
use suites::{Perturbation, Which};

/// Largest twoJ accepted by the single-representation suites.
const TWO_J_LIMIT: u32 = 12;
/// Largest tensor-product dimension accepted by the coproduct suites.
const TENSOR_DIM_LIMIT: usize = 36;
/// Largest table order; exact β's beyond this take minutes.
const MAX_N_LIMIT: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "qhdeform", version, about = "Verify the nonlinear map U_q(sl(2)) -> U_{q,h}(sl(2)) on finite-dimensional representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tables of the map coefficients alpha_n and inverse coefficients beta_n.
    Coeffs {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[command(flatten)]
        numeric: NumericArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Dump the generator matrices of one representation and their images.
    Rep {
        #[arg(long)]
        two_j: u32,
        #[arg(long, default_value = "polynomial")]
        basis: Basis,
        #[command(flatten)]
        numeric: NumericArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every single-representation identity for twoJ = 0..=N.
    Verify {
        #[arg(long, default_value_t = 4)]
        two_j_max: u32,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        #[command(flatten)]
        numeric: NumericArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Fault injection: add 1 to alpha_N before building the map.
        #[arg(long)]
        perturb_alpha: Option<usize>,
    },
    /// Check a coproduct on the tensor product of two representations.
    Coproduct {
        #[arg(long)]
        two_j_left: u32,
        #[arg(long)]
        two_j_right: u32,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        #[command(flatten)]
        numeric: NumericArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the Jordanian (q = 1) and h -> 0 limits.
    Limits {
        #[arg(long, default_value_t = 3)]
        two_j_max: u32,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        #[command(flatten)]
        numeric: NumericArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Coefficient tables, verify, limits and the coproduct suites in one report.
    All {
        #[arg(long, default_value_t = 3)]
        two_j_max: u32,
        #[arg(long, value_enum, default_value = "both")]
        mode: ModeArg,
        #[command(flatten)]
        numeric: NumericArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// q-integers `[k]` up to this index must not vanish for representations up to `two_j_max`.
fn generic_index(two_j_max: u32) -> i64 {
    2 * two_j_max as i64 + 4
}

fn points(mode: ModeArg, numeric: &NumericArgs, two_j_max: u32) -> anyhow::Result<Vec<NumericPoint>> {
    if mode.numeric() {
        numeric.resolve(generic_index(two_j_max))
    } else {
        Ok(Vec::new())
    }
}

fn environment(mode: ModeArg, numeric: &NumericArgs, pts: Vec<NumericPoint>) -> Environment {
    let sampled = mode.numeric() && numeric.numeric_q.is_none();
    let mut env = Environment::new(pts);
    env.mode = Some(format!("{mode:?}").to_lowercase());
    env.seed = sampled.then_some(numeric.seed);
    env
}

fn finish<T: serde::Serialize>(
    command: &str,
    env: Environment,
    tables: Option<T>,
    reports: Vec<VerificationReport>,
    output: &OutputArgs,
) -> anyhow::Result<bool> {
    let doc = ReportDocument::new(command, env, tables, reports);
    doc.emit(output.target(command).as_deref())?;
    print_summary(command, &doc.summary);
    Ok(doc.summary.all_pass())
}

fn coproduct_pairs() -> [TensorRep; 2] {
    [TensorRep::new(1, 1), TensorRep::new(1, 2)]
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Coeffs { max_n, numeric, output } => {
            if max_n > MAX_N_LIMIT {
                bail!("--max-n {max_n} exceeds the supported maximum {MAX_N_LIMIT}");
            }
            let pts = match numeric.numeric_q {
                Some(_) => numeric.resolve(2 * max_n as i64 + 1)?,
                None => Vec::new(),
            };
            let t = tables::coeff_tables(max_n, pts.first().map(NumericPoint::ctx))?;
            let reports = tables::coeff_checks(&t);
            let mut env = Environment::new(pts);
            env.mode = Some(if numeric.numeric_q.is_some() { "numeric" } else { "exact" }.into());
            env.truncation_orders = vec![TruncationOrder { subject: "coefficients".into(), order: max_n }];
            finish("coeffs", env, Some(t), reports, &output)
        }
        Command::Rep { two_j, basis, numeric, format, out } => {
            check_two_j_max(two_j, TWO_J_LIMIT)?;
            let spec = RepSpec { two_j, basis };
            let dump = match (numeric.numeric_q, basis) {
                (None, Basis::Polynomial) => export::exact_dump(two_j)?,
                (None, Basis::Symmetric) => {
                    bail!("the symmetric basis needs square roots: pass --numeric-q with a real positive q")
                }
                (Some(q), _) => {
                    if basis == Basis::Symmetric && !(q.im == 0.0 && q.re > 0.0) {
                        bail!("the symmetric basis needs a real positive q, got {q}");
                    }
                    let p = numeric.resolve(generic_index(two_j))?[0];
                    export::numeric_dump(spec, &p.ctx())?
                }
            };
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&dump)? + "\n",
                Format::Csv => export::to_csv(&dump)?,
            };
            match out {
                Some(path) => std::fs::write(&path, text)?,
                None => print!("{text}"),
            }
            Ok(true)
        }
        Command::Verify { two_j_max, mode, numeric, output, perturb_alpha } => {
            check_two_j_max(two_j_max, TWO_J_LIMIT)?;
            let pts = points(mode, &numeric, two_j_max)?;
            let perturb = Perturbation { alpha_index: perturb_alpha };
            let reports = suites::verify(two_j_max, mode.exact(), &pts, perturb);
            let mut env = environment(mode, &numeric, pts).with_spins(0..=two_j_max);
            env.perturbed_alpha = perturb_alpha;
            finish::<()>("verify", env, None, reports, &output)
        }
        Command::Coproduct { two_j_left, two_j_right, which, mode, numeric, output } => {
            let t = TensorRep::new(two_j_left, two_j_right);
            if t.dim() > TENSOR_DIM_LIMIT {
                bail!("tensor dimension {} exceeds the supported maximum {TENSOR_DIM_LIMIT}", t.dim());
            }
            let top = two_j_left + two_j_right;
            let pts = points(mode, &numeric, top)?;
            let reports = suites::coproduct(t, which, mode.exact(), &pts);
            let mut env = environment(mode, &numeric, pts);
            env.truncation_orders = vec![TruncationOrder { subject: t.label(), order: t.dim() - 1 }];
            finish::<()>("coproduct", env, None, reports, &output)
        }
        Command::Limits { two_j_max, mode, numeric, output } => {
            check_two_j_max(two_j_max, TWO_J_LIMIT)?;
            let pts = points(mode, &numeric, two_j_max)?;
            let reports = suites::limits(two_j_max, &pts);
            let env = environment(mode, &numeric, pts).with_spins(0..=two_j_max);
            finish::<()>("limits", env, None, reports, &output)
        }
        Command::All { two_j_max, mode, numeric, output } => {
            check_two_j_max(two_j_max, TWO_J_LIMIT)?;
            let pairs = coproduct_pairs();
            let top = pairs.iter().map(|t| t.left.two_j + t.right.two_j).max().unwrap_or(0).max(two_j_max);
            let pts = points(mode, &numeric, top)?;
            let t = tables::coeff_tables(6, None)?;
            let mut reports = tables::coeff_checks(&t);
            reports.extend(suites::verify(two_j_max, mode.exact(), &pts, Perturbation::default()));
            reports.extend(suites::limits(two_j_max, &pts));
            for pair in pairs {
                for which in [Which::Uq, Which::Qh, Which::Uh] {
                    reports.extend(suites::coproduct(pair, which, mode.exact(), &pts));
                }
            }
            let env = environment(mode, &numeric, pts).with_spins(0..=two_j_max);
            finish("all", env, Some(t), reports, &output)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
