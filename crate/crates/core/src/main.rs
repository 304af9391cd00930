use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use innerform::cli::{self, Fault, Format, Options};
use innerform::Error;

#[derive(Parser)]
#[command(
    name = "innerform",
    version,
    about = "Exact conjugacy-class and measure computations for inner forms of GL_n",
    after_help = "Verbs: classify, enumerate, induce, centralizer, closure, transfer, local-global, \
                  elliptic, gamma, volk, arthur, oracle.\nEach reads a JSON payload from FILE or stdin."
)]
struct Args {
    /// Seed for the sampling verbs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a {"verb": ..., "payload": ...} document.
    Run { file: Option<PathBuf> },
    /// Run the property checks at desk scale.
    Selftest {
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
    #[command(external_subcommand)]
    Verb(Vec<String>),
}

fn read_input(file: Option<&str>) -> Result<String, Error> {
    match file {
        Some(f) if f != "-" => std::fs::read_to_string(f).map_err(|e| Error::Parse(format!("{f}: {e}"))),
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let opts = Options {
        seed: args.seed,
        format: args.format.unwrap_or(Format::Json),
    };
    let result = match &args.command {
        Command::Selftest { inject_fault } => {
            let results = cli::selftest(args.seed, *inject_fault);
            match args.format {
                Some(f) => print!("{}", cli::render(&cli::selftest_value(&results), f)),
                None => print!("{}", cli::selftest_lines(&results)),
            }
            let ok = results.iter().all(|r| r.passed());
            return if ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
        Command::Run { file } => {
            let path = file.as_ref().map(|p| p.to_string_lossy().into_owned());
            read_input(path.as_deref()).and_then(|t| cli::run_document(&t, &opts))
        }
        Command::Verb(words) => {
            if words.len() > 2 {
                Err(Error::Schema(format!("unexpected arguments after `{}`", words[1])))
            } else {
                read_input(words.get(1).map(String::as_str)).and_then(|t| cli::run_verb(&words[0], &t, &opts))
            }
        }
    };
    match result {
        Ok(v) => {
            print!("{}", cli::render(&v, opts.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            print!("{}", cli::render(&cli::error_value(&e), opts.format));
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}
