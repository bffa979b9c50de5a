use std::process::ExitCode;

use clap::Parser;
use colorconn_cli::commands::{run, Cli};
use colorconn_cli::Exit;

fn main() -> ExitCode {
    let words: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                Exit::Error as u8
            } else {
                Exit::Yes as u8
            });
        }
    };
    match run(cli, words) {
        Ok(outcome) => {
            print!("{}", outcome.report.to_json());
            ExitCode::from(outcome.exit as u8)
        }
        Err(e) => {
            eprintln!("colorconn: {e}");
            ExitCode::from(Exit::Error as u8)
        }
    }
}
