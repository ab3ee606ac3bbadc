use std::process::ExitCode;

use clap::Parser;
use roughspace_cli::{run, RunConfig};

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("ROUGHSPACE_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| format!("ROUGHSPACE_THREADS must be a positive integer, got `{value}`"))?;
    if threads == 0 {
        return Err("ROUGHSPACE_THREADS must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let config = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let outcome = run(&config);
    match &config.output {
        Some(path) if outcome.status != 2 => {
            if let Err(e) = std::fs::write(path, &outcome.stdout) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        _ => print!("{}", outcome.stdout),
    }
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.status)
}
