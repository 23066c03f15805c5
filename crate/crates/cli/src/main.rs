mod args;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = match args::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let status = match run::run(cli.command, &mut out) {
        Ok(status) => status as u8,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            1
        }
    };
    let _ = out.flush();
    ExitCode::from(status)
}
