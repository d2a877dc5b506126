use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use iwasawa::validation::SuiteConfig;
use iwasawa_cli::{
    cmd_check, cmd_classify, cmd_decompose, cmd_dress, cmd_selftest, cmd_sym, CheckSet,
    MatrixDocument, Method, ParseError, Report,
};

#[derive(Parser)]
#[command(
    name = "iwasawa",
    version,
    about = "Decomposition g = s·b of SL(n, C) relative to SU(p, q)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Structural tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Print only the JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Input document (stdin when absent).
    #[arg(long = "in", global = true, value_name = "PATH")]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Factor g into an SU(p, q) part and an AN part.
    Decompose {
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
    /// Membership or admissibility test.
    Check {
        #[arg(long, value_enum)]
        set: CheckSet,
    },
    /// Dress b ∈ AN (from --in) by g ∈ SU(p, q) (from --g).
    Dress {
        #[arg(long, value_name = "PATH")]
        g: PathBuf,
    },
    /// b ↦ b†b.
    Sym,
    /// Cone class of each column vector.
    Classify,
    /// Run the property suites.
    Selftest {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

fn read_source(path: Option<&PathBuf>) -> Result<String, ParseError> {
    let mut text = String::new();
    let res = match path {
        Some(p) => std::fs::read_to_string(p).map(|t| text = t),
        None => std::io::stdin().read_to_string(&mut text).map(|_| ()),
    };
    res.map_err(|source| ParseError::Io {
        path: path.map_or("<stdin>".into(), |p| p.display().to_string()),
        source,
    })?;
    Ok(text)
}

fn read_doc(path: Option<&PathBuf>, columns_free: bool) -> Result<MatrixDocument, ParseError> {
    let doc: MatrixDocument = serde_json::from_str(&read_source(path)?)?;
    doc.validate(columns_free)?;
    Ok(doc)
}

fn run(cli: &Cli) -> Report {
    let tol = cli.tol;
    let input = cli.input.as_ref();
    let name = match &cli.command {
        Command::Decompose { .. } => "decompose",
        Command::Check { .. } => "check",
        Command::Dress { .. } => "dress",
        Command::Sym => "sym",
        Command::Classify => "classify",
        Command::Selftest { .. } => "selftest",
    };
    if !(tol > 0.0 && tol.is_finite()) {
        return Report::new(name).fail(
            "invalid_argument",
            format!("tolerance must be positive, got {tol}"),
            iwasawa_cli::ExitStatus::Precondition,
        );
    }
    let doc = |columns_free| read_doc(input, columns_free);
    let result = match &cli.command {
        Command::Decompose { method } => doc(false).map(|d| cmd_decompose(&d, *method, tol)),
        Command::Check { set } => doc(false).map(|d| cmd_check(&d, *set, tol)),
        Command::Dress { g } => doc(false)
            .and_then(|b| Ok((b, read_doc(Some(g), false)?)))
            .map(|(b, g)| cmd_dress(&b, &g, tol)),
        Command::Sym => doc(false).map(|d| cmd_sym(&d, tol)),
        Command::Classify => doc(true).map(|d| cmd_classify(&d, tol)),
        Command::Selftest {
            n_max,
            trials,
            seed,
            inject_fault,
        } => Ok(cmd_selftest(&SuiteConfig {
            n_max: *n_max,
            trials: *trials,
            seed: *seed,
            inject_fault: *inject_fault,
        })),
    };
    result.unwrap_or_else(|e| Report::new(name).parse_error(e))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli);
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.summary());
    }
    ExitCode::from(report.exit_status() as u8)
}
