use std::process::ExitCode;

use clap::Parser;
use ript_sim::cli::{run, Args};

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args, &mut std::io::stdout().lock()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("ript-sim: {e:#}");
            ExitCode::from(2)
        }
    }
}
