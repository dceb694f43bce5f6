use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use gzeta::commands::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(record) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(record.render(cli.format).as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("gzeta: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
