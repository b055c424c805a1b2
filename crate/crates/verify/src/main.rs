use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use queerhom::FieldSpec;
use queerhom_verify::{run_scenario, AlgebraSource, Options, Scenario, VerifyError};

/// Run one verification scenario and report PASS/FAIL/SKIP per check.
///
/// Exit status: 0 when every check that ran passed, 1 on any failure,
/// 2 on usage errors or when a precondition skipped everything.
#[derive(Debug, Parser)]
#[command(name = "verify", version)]
struct Cli {
    /// One of: iso-queer-gl, perfectness, sq1-abelian, loop-iso, qtogl-sqrt-1,
    /// pair-relations, hc1-shift, kahler-oracle, h2-main, psq-central,
    /// slnn-identity, an-vanishing.
    scenario: String,
    /// `builtin:NAME` (e.g. builtin:grassmann(1)) or a JSON description file.
    #[arg(long)]
    algebra: String,
    /// Matrix size; each scenario has its own default.
    #[arg(long)]
    n: Option<usize>,
    /// Q, Qi or Fp:P. Builtins default to Q; files use their own field.
    #[arg(long)]
    field: Option<String>,
    /// Write the JSON report here (`-` for standard output).
    #[arg(long)]
    report: Option<PathBuf>,
    /// Largest Λ³ dimension to attempt; larger complexes are skipped.
    #[arg(long)]
    budget: Option<usize>,
}

fn run(cli: &Cli) -> Result<i32, VerifyError> {
    let scenario: Scenario = cli.scenario.parse()?;
    let field = cli
        .field
        .as_deref()
        .map(|f| f.parse::<FieldSpec>().map_err(|e| VerifyError::Usage(e.to_string())))
        .transpose()?;
    let opts = Options { algebra: cli.algebra.parse::<AlgebraSource>()?, n: cli.n, field, budget: cli.budget };
    let report = run_scenario(scenario, &opts)?;
    match cli.report.as_deref() {
        Some(path) if path.as_os_str() == "-" => {
            eprint!("{report}");
            print!("{}", report.to_json());
        }
        Some(path) => {
            report.write(path).map_err(|e| VerifyError::Usage(format!("cannot write {}: {e}", path.display())))?;
            print!("{report}");
        }
        None => print!("{report}"),
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(&cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.exit_code()
    });
    ExitCode::from(code as u8)
}
