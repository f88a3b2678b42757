use std::fs;
use std::process::ExitCode;

use alexctl::{execute, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(mut outcome) => {
            let argv: Vec<String> = std::env::args().skip(1).collect();
            outcome.report.command = format!("alexctl {}", argv.join(" "));
            let text = outcome.report.render(cli.format);
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, text) {
                        eprintln!("alexctl: {path}: {e}");
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("alexctl: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
