mod args;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use glkm::Error;

use args::{Cli, Format};
use run::{Failure, Outcome};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn render(cli: &Cli, out: &Outcome) -> String {
    match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out.output).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => match &out.raw {
            Some(raw) => raw.clone(),
            None => {
                let mut s = out.output.report.to_text();
                if let Some(t) = &out.text {
                    s.push_str(t);
                }
                s
            }
        },
    }
}

fn emit(cli: &Cli, body: &str) -> std::io::Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let outcome = match run::execute(&cli) {
        Ok(o) => o,
        Err(Failure::Usage(msg)) | Err(Failure::Core(Error::InvalidParams(msg))) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(Failure::Core(e @ Error::Inadmissible(_))) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAIL);
        }
    };
    if let Err(e) = emit(&cli, &render(&cli, &outcome)) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_FAIL);
    }
    if outcome.output.report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}
