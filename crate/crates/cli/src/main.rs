use std::process::ExitCode;

use clap::Parser;
use hyperaccel_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match hyperaccel_cli::run(&cli, &mut stdout) {
        Ok(status) => status.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
