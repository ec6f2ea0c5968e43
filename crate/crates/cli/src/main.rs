use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use idinf::oracle::Side;
use idinf_cli::checks::{run_checks, CheckConfig};
use idinf_cli::commands::{self, Output};
use idinf_cli::scan::scan;
use idinf_cli::CliError;

const AFTER_HELP: &str = "\
Elements are written <SIGNx+A|{I1,I2,...}>, e.g. <+x+3|{0,2}> is x -> x+3 \
undefined at 0 and 2, and <-x-1|{}> is the reflection x -> -x-1.

Expressions: E * F is the product that applies E first, then F (right \
action, (x)(EF) = ((x)E)F). E^-1 is the inverse and binds tighter than *. \
Parentheses group. Products evaluate left to right.

Output is one JSON object per line. Exit codes: 0 ok, 1 failed check, \
2 malformed input, 4 integer overflow, 5 enumeration too large, \
64 unknown command.";

#[derive(Parser)]
#[command(name = "idinf", version, about = "Exact computation with partial cofinite isometries of the integers", after_help = AFTER_HELP)]
struct Cli {
    /// Pretty-print JSON instead of one object per line.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression to its canonical literal.
    Eval { expr: String },
    /// Natural partial order: is E1 a restriction of E2?
    Leq { e1: String, e2: String },
    /// Every element above E in the natural order.
    Upset { e: String },
    /// All X with A * X = B.
    SolveRight { a: String, b: String },
    /// All X with X * A = B.
    SolveLeft { a: String, b: String },
    /// The maximum of the class of E under the minimum group congruence.
    SigmaMax { e: String },
    /// Whether E1 and E2 are congruent under the minimum group congruence.
    SigmaEq { e1: String, e2: String },
    /// Green's relations L, R, H, D between E1 and E2.
    Green { e1: String, e2: String },
    /// (isometry, excluded set of the range idempotent).
    ToSemidirect { e: String },
    /// Inverse of to-semidirect; G is an isometry like -x+2, SET like {0,3}.
    FromSemidirect {
        #[arg(allow_hyphen_values = true)]
        g: String,
        set: String,
    },
    /// (excluded set of E E^-1, class maximum).
    McEmbed { e: String },
    /// Product (F, U) o (G, V) of two pairs given as SET ISOMETRY SET ISOMETRY.
    McMul {
        f: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
        g: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Minimal gaps between the points e^{ik}, |k| <= n, against 2pi/(2n+1).
    CircleDemo {
        #[arg(long, default_value_t = 100)]
        max_n: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Print every K-th row.
        #[arg(long, default_value_t = 1)]
        every: u64,
    },
    /// Differential test of the closed forms against the pointwise oracle.
    OracleCheck {
        /// Coordinates and shifts are drawn from [-N, N].
        #[arg(long, default_value_t = 50)]
        window: i64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, env = "IDINF_SEED", default_value_t = 0)]
        seed: u64,
        /// Largest excluded-set size drawn.
        #[arg(long, default_value_t = 6)]
        max_excl: usize,
        /// Worker threads; 0 uses every core. Output does not depend on it.
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Search all equations with coordinates in [-B, B] for a solvable one
    /// without a unit solution.
    Prop38Scan {
        #[arg(long, default_value_t = 3)]
        coord_bound: i64,
    },
}

fn run(cli: Cli, out: &mut Output) -> Result<bool, CliError> {
    use Command::*;
    match cli.command {
        Eval { expr } => commands::eval(out, &expr)?,
        Leq { e1, e2 } => commands::leq(out, &e1, &e2)?,
        Upset { e } => commands::upset_cmd(out, &e)?,
        SolveRight { a, b } => commands::solve_right_cmd(out, &a, &b)?,
        SolveLeft { a, b } => commands::solve_left_cmd(out, &a, &b)?,
        SigmaMax { e } => commands::sigma_max_cmd(out, &e)?,
        SigmaEq { e1, e2 } => commands::sigma_eq_cmd(out, &e1, &e2)?,
        Green { e1, e2 } => commands::green_cmd(out, &e1, &e2)?,
        ToSemidirect { e } => commands::to_semidirect_cmd(out, &e)?,
        FromSemidirect { g, set } => commands::from_semidirect_cmd(out, &g, &set)?,
        McEmbed { e } => commands::mc_embed_cmd(out, &e)?,
        McMul { f, u, g, v } => commands::mc_mul_cmd(out, &f, &u, &g, &v)?,
        CircleDemo { max_n, tol, every } => commands::circle_demo(out, max_n, tol, every)?,
        OracleCheck { window, samples, seed, max_excl, threads } => {
            if window < 1 {
                return Err(CliError::Usage("--window must be at least 1".into()));
            }
            let cfg = CheckConfig { window, samples, seed, max_excl, threads };
            let reports = run_checks(&cfg);
            let pass = reports.iter().all(|r| r.pass);
            for r in &reports {
                out.emit(r);
            }
            out.emit(&serde_json::json!({
                "seed": seed, "samples": samples, "window": window, "pass": pass
            }));
            return Ok(pass);
        }
        Prop38Scan { coord_bound } => {
            if !(0..=6).contains(&coord_bound) {
                return Err(CliError::Usage("--coord-bound must be in 0..=6".into()));
            }
            for side in [Side::Right, Side::Left] {
                out.emit(&scan(side, coord_bound)?);
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                ErrorKind::InvalidSubcommand => 64,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = Output::new(cli.pretty);
    let result = run(cli, &mut out);
    for line in &out.lines {
        println!("{line}");
    }
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
