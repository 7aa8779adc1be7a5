mod args;
mod commands;
mod output;

use clap::Parser;

use crate::args::Cli;

fn main() {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    let code = match commands::run(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    std::process::exit(code);
}
