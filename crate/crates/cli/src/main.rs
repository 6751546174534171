mod args;
mod commands;

use std::io::{self, Write};
use std::process::ExitCode;

use braidkit::{Error, Limits};
use clap::Parser;

use args::Cli;

const HOLDS: u8 = 0;
const FAILS: u8 = 1;
const USAGE: u8 = 2;
const RESOURCE_LIMIT: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { HOLDS });
        }
    };

    let mut limits = Limits::default();
    if let Some(cap) = cli.limit {
        limits.sss_cap = cap;
        limits.search_steps = cap;
    }

    match commands::execute(&cli.command, &limits) {
        Ok(report) => {
            // a closed pipe downstream is not an error
            let _ = if cli.json {
                writeln!(io::stdout(), "{}", report.json)
            } else {
                writeln!(io::stdout(), "{}", report.text)
            };
            ExitCode::from(if report.holds { HOLDS } else { FAILS })
        }
        Err(e) => {
            eprintln!("braidkit: {e}");
            ExitCode::from(match e {
                Error::ResourceLimit { .. } => RESOURCE_LIMIT,
                _ => USAGE,
            })
        }
    }
}
