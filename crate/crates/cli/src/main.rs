//! `braco <command> <file> [--format text|json] [--out path]`

use std::path::PathBuf;
use std::process::ExitCode;

use braco_core::io::{parse_input, run_command, Command, Format};
use braco_core::Error;
use clap::{Parser, ValueEnum};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CommandArg {
    Validate,
    Homology,
    Pairing,
    Signature,
    Det,
    Cover,
}

impl From<CommandArg> for Command {
    fn from(c: CommandArg) -> Self {
        match c {
            CommandArg::Validate => Command::Validate,
            CommandArg::Homology => Command::Homology,
            CommandArg::Pairing => Command::Pairing,
            CommandArg::Signature => Command::Signature,
            CommandArg::Det => Command::Det,
            CommandArg::Cover => Command::Cover,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

/// Homology, pairings and signatures of branched double covers from diagram data.
#[derive(Debug, Parser)]
#[command(name = "braco", version)]
struct Cli {
    /// What to compute.
    #[arg(value_enum)]
    command: CommandArg,
    /// Input document (JSON).
    file: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn run(cli: &Cli) -> Result<String, Error> {
    let bytes = std::fs::read(&cli.file)
        .map_err(|e| Error::InvalidValue(format!("cannot read {}: {e}", cli.file.display())))?;
    let doc = parse_input(&bytes)?;
    let report = run_command(cli.command.into(), &doc)?;
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    Ok(report.render(format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
