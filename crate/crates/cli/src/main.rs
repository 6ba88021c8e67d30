mod args;
mod commands;
mod input;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Exit status 2: bad input of any kind. Exit status 3: numerics failed.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Numeric(String),
}

impl From<empskit::Error> for CliError {
    fn from(e: empskit::Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Numeric(e.to_string())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Emps { state, out } => commands::emps(&state, &out),
        Command::Classify { state, out } => commands::classify(&state, &out),
        Command::Polytope {
            point,
            class,
            state,
            out,
        } => commands::polytope(point.as_deref(), class, &state, &out),
        Command::Orbit {
            samples,
            state,
            out,
        } => commands::orbit(samples, &state, &out),
        Command::Ising {
            chain,
            dump_state,
            out,
        } => commands::ising(&chain, dump_state.as_deref(), &out),
        Command::Sweep {
            chain,
            param,
            values,
            from,
            to,
            steps,
            out,
        } => {
            let values = commands::sweep_values(values.as_deref(), from, to, steps)?;
            commands::sweep(&chain, &param, &values, &out)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Numeric(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
