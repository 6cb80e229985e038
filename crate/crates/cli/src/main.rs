use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use regcap_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(regcap_cli::EXIT_IO as u8);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("regcap: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
