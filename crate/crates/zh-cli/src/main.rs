use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use zh_cli::commands::{self, ScriptSource};
use zh_cli::Report;
use zh_kernel::Alternative;
use zh_semantics::DEFAULT_WIRE_CAP;

#[derive(Parser)]
#[command(name = "zh", version, about = "Exact verification for the phase-free ZH-calculus")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest number of open wires a diagram may have to be evaluated.
    #[arg(long, default_value_t = DEFAULT_WIRE_CAP, global = true)]
    wire_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact matrix of a .zh.json, .dzx.json or .qc file.
    Eval {
        file: PathBuf,
        /// Also print approximate decimals.
        #[arg(long)]
        decimals: bool,
    },
    /// Check every rule instance with parameters up to --max.
    CheckRules {
        #[arg(long, default_value_t = 4)]
        max: usize,
        /// Include derived and definitional rules, not just the axioms.
        #[arg(long)]
        all: bool,
    },
    /// Check the ΔZX rules directly and after translation to ZH.
    CheckDzxRules {
        /// Largest spider arity.
        #[arg(long, default_value_t = 4)]
        max: usize,
    },
    /// Replay .proof.json scripts (or the shipped ones) against the kernel.
    Replay {
        scripts: Vec<PathBuf>,
        /// Replay the scripts shipped with the kernel.
        #[arg(long)]
        shipped: bool,
        /// Check the semantics after every step.
        #[arg(long)]
        audit: bool,
    },
    /// Verify every registered lemma exactly.
    VerifyLemmas,
    /// Translate a ZH diagram to ΔZX.
    ToDzx {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Translate a ΔZX diagram to ZH.
    FromDzx {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that ZH → ΔZX → ZH preserves semantics, for a file or for
    /// random diagrams.
    Roundtrip {
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 300)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Compile a .qc circuit to a ZH diagram.
    Compile {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide semantic equality of two diagrams or circuits.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        /// Accept equality up to a nonzero scalar, and print it.
        #[arg(long)]
        up_to_scalar: bool,
    },
    /// Audit the axioms under alternative interpretations.
    AuditMinimality {
        /// One interpretation; all of them when omitted.
        #[arg(long)]
        interpretation: Option<Alternative>,
        #[arg(long, default_value_t = 3)]
        max: usize,
    },
    /// Dump the rule catalogue as JSON.
    DumpRules {
        #[arg(long, default_value_t = 2)]
        max: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: &Cli) -> Result<Report> {
    let cap = cli.wire_cap;
    match &cli.command {
        Command::Eval { file, decimals } => commands::eval(file, cap, *decimals),
        Command::CheckRules { max, all } => Ok(commands::check_rules(*max, *all)),
        Command::CheckDzxRules { max } => Ok(commands::check_dzx_rules(*max)),
        Command::Replay { scripts, shipped, audit } => {
            let source = if *shipped { ScriptSource::Shipped } else { ScriptSource::Files(scripts) };
            commands::replay(source, *audit)
        }
        Command::VerifyLemmas => Ok(commands::verify_lemmas()),
        Command::ToDzx { file, output } => commands::to_dzx(file, output.as_deref(), cap),
        Command::FromDzx { file, output } => commands::from_dzx(file, output.as_deref(), cap),
        Command::Roundtrip { file, samples, seed } => commands::roundtrip(file.as_deref(), *samples, *seed),
        Command::Compile { file, output } => commands::compile(file, output.as_deref()),
        Command::Equiv { first, second, up_to_scalar } => commands::equiv(first, second, *up_to_scalar, cap),
        Command::AuditMinimality { interpretation, max } => Ok(commands::audit(*interpretation, *max)),
        Command::DumpRules { max, output } => commands::dump_rules(*max, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json_pretty()),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
