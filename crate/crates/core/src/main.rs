mod cli;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = cli::Cli::parse();
    if let Some(n) = cli.workers() {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("warning: cannot set worker count: {e}");
        }
    }
    let outcome = cli::run(&cli);
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{}", outcome.verdict_line());
    let _ = stdout.write_all(outcome.body.as_bytes());
    let _ = stdout.flush();
    if !outcome.report.is_empty() {
        eprintln!("{}", outcome.report);
    }
    ExitCode::from(outcome.status.code() as u8)
}
