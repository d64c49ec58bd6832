mod args;
mod commands;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use args::Cli;

const EXIT_INVALID: u8 = 2;
const EXIT_UNDECIDED: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version go to stdout with status 0; usage errors to stderr with 2.
            let _ = e.print();
            return ExitCode::from(e.exit_code().clamp(0, 255) as u8);
        }
    };
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INVALID);
        }
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = commands::run(&cli.command, &cli.global, &mut out).and_then(|()| Ok(out.flush()?));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(failure_code(&e))
        }
    }
}

fn failure_code(e: &anyhow::Error) -> u8 {
    let undecided = e
        .downcast_ref::<subgen_core::Error>()
        .is_some_and(subgen_core::Error::is_undecided);
    if undecided {
        EXIT_UNDECIDED
    } else {
        EXIT_INVALID
    }
}

#[cfg(test)]
mod tests {
    use anyhow::Context;
    use subgen_core::Error;

    use super::*;

    #[test]
    fn undecided_errors_map_to_three() {
        let budget = anyhow::Error::from(Error::BudgetExhausted { attempts: 200 });
        assert_eq!(failure_code(&budget), EXIT_UNDECIDED);
        let wrapped: anyhow::Result<()> = Err(Error::EmptinessUndecided { bound: 7 }).context("checking position");
        assert_eq!(failure_code(&wrapped.unwrap_err()), EXIT_UNDECIDED);
        assert_eq!(failure_code(&Error::NotInPosition.into()), EXIT_INVALID);
        assert_eq!(failure_code(&anyhow::anyhow!("no such file")), EXIT_INVALID);
    }
}
