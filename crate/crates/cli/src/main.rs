use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use dpf_cli::app::{render, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(render(&cli, &report).as_bytes());
    ExitCode::from(report.code as u8)
}
