//! `stirbern` command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification or cross-check fails,
//! 2 on a usage error.

mod args;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};

use crate::args::{Cli, Command, Format};
use crate::output::OutputRecord;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn emit(record: &OutputRecord, format: Format) {
    let mut stdout = std::io::stdout().lock();
    // A closed pipe is not worth a panic.
    let _ = stdout.write_all(record.render(format).as_bytes());
}

fn usage_error(subcommand: &str, msg: &str) -> ExitCode {
    let mut cmd = Cli::command();
    cmd.build();
    let sub = cmd
        .find_subcommand_mut(subcommand)
        .expect("known subcommand");
    let err = sub.error(ErrorKind::ArgumentConflict, msg);
    eprint!("{}", err.render());
    ExitCode::from(EXIT_USAGE)
}

fn pass_fail(all_pass: Option<bool>) -> ExitCode {
    if all_pass == Some(true) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };

    match &cli.command {
        Command::Compute(args) => match commands::compute(args) {
            Ok(record) => {
                emit(&record, args.format);
                ExitCode::SUCCESS
            }
            Err(e) => usage_error("compute", &e.0),
        },
        Command::Verify(args) => {
            let record = commands::verify(args);
            emit(&record, args.format);
            if record.all_pass != Some(true) {
                eprintln!("verify: at least one identity failed");
            }
            pass_fail(record.all_pass)
        }
        Command::Selftest(args) => match commands::selftest(args) {
            Ok(outcome) => {
                emit(&outcome.record, args.format);
                if let Some(c) = outcome.first_failure() {
                    let idx = c.first_mismatch.expect("failed check has an index");
                    eprintln!(
                        "selftest: {} diverges from its oracle at index {idx}",
                        c.name
                    );
                }
                pass_fail(outcome.record.all_pass)
            }
            Err(e) => {
                eprintln!("selftest: {e}");
                ExitCode::from(EXIT_FAILURE)
            }
        },
        Command::Bench(args) => {
            let record = commands::bench(args);
            emit(&record, args.format);
            if record.all_pass != Some(true) {
                eprintln!("bench: recomputed values disagree with the reference");
            }
            pass_fail(record.all_pass)
        }
    }
}
