use clap::Parser;
use coint::cli::Cli;
use std::io::Write;

fn main() {
    let cli = Cli::parse();
    match cli.run() {
        Ok(bytes) => {
            std::io::stdout().write_all(&bytes).expect("write stdout");
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
