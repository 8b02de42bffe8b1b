use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sl2dyn::Config;
use sl2dyn_cli::commands::{self, CommandError, Flow};
use sl2dyn_cli::suites::{self, Ctx};

/// Exact computations in ℂ((t)) and the type-space flows of its additive,
/// multiplicative, Borel and SL₂ groups.
#[derive(Parser, Debug)]
#[command(name = "sl2dyn", version)]
struct Cli {
    /// Coefficients compared when exact comparison is unavailable.
    #[arg(long, global = true, default_value_t = 32)]
    precision: usize,
    /// Infinite levels s1..sL available to realizations.
    #[arg(long, global = true, default_value_t = 8)]
    levels: usize,
    /// Bound on leading-term searches in lazy series.
    #[arg(long, global = true, default_value_t = 256)]
    horizon: usize,
    /// Coset labels range over [-B, B].
    #[arg(long, global = true, default_value_t = 5)]
    coset_bound: i64,
    /// Seed of the verification samples.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The 1-type over ℂ((t)) of an element such as "t^-1 + s1".
    Classify { element: String },
    /// Splits a determinant-one matrix as z · (1 0; α 1) · (β γ; 0 β⁻¹).
    Decompose { matrix: String },
    /// The product q * p of two types.
    Tprod {
        q: String,
        p: String,
        #[arg(long, value_enum, default_value_t = FlowArg::Add)]
        flow: FlowArg,
    },
    /// The orbit of the idempotent (I, pinf[k=0], pj[k=0]), labels truncated.
    Orbit,
    /// Runs verification suites against the realization oracle.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FlowArg {
    Add,
    Mul,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    All,
    Series,
    Hensel,
    Types,
    Flows,
    Borel,
    Sl2,
    Ellis,
}

impl SuiteArg {
    fn name(self) -> &'static str {
        match self {
            SuiteArg::All => "all",
            SuiteArg::Series => "series",
            SuiteArg::Hensel => "hensel",
            SuiteArg::Types => "types",
            SuiteArg::Flows => "flows",
            SuiteArg::Borel => "borel",
            SuiteArg::Sl2 => "sl2",
            SuiteArg::Ellis => "ellis",
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let cfg = Config { precision: cli.precision, levels: cli.levels, horizon: cli.horizon };
    let result = match &cli.command {
        Command::Classify { element } => commands::classify_element(element, &cfg),
        Command::Decompose { matrix } => commands::decompose_matrix(matrix, &cfg),
        Command::Tprod { q, p, flow } => {
            let flow = match flow {
                FlowArg::Add => Flow::Add,
                FlowArg::Mul => Flow::Mul,
            };
            commands::type_product(q, p, flow, &cfg)
        }
        Command::Orbit => commands::orbit_listing(cli.coset_bound),
        Command::Verify { suite } => {
            if cli.coset_bound < 0 {
                eprintln!("error: --coset-bound must be non-negative");
                return ExitCode::from(2);
            }
            let ctx = Ctx { cfg, bound: cli.coset_bound, seed: cli.seed };
            let report = suites::verify(suite.name(), &ctx).expect("suite names come from the value enum");
            emit(&if cli.json { report.to_json() + "\n" } else { report.to_text() });
            return ExitCode::from(report.exit_code() as u8);
        }
    };
    match result {
        Ok(out) => {
            let text = out.render(cli.json);
            emit(&if cli.json { text + "\n" } else { text });
            ExitCode::SUCCESS
        }
        Err(e) => report_error(&e),
    }
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn report_error(e: &CommandError) -> ExitCode {
    eprintln!("error: {}", e);
    ExitCode::from(e.exit_code() as u8)
}
