mod args;
mod commands;
mod render;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde::Serialize;
use serde_json::Value;

use args::{Cli, Format};
use sconf_core::par::Exec;

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Serialize)]
struct Report<'a> {
    schema_version: &'a str,
    command: Vec<String>,
    payload: &'a Value,
    elapsed_ms: u64,
}

/// Worker count from `SCONF_TWIST_WORKERS`; one worker runs sequentially.
fn configure_workers() -> Result<Exec, String> {
    let Ok(raw) = std::env::var("SCONF_TWIST_WORKERS") else {
        return Ok(Exec::Parallel);
    };
    let n: usize = raw.trim().parse().map_err(|_| format!("SCONF_TWIST_WORKERS: expected a positive integer, got `{raw}`"))?;
    if n == 0 {
        return Err("SCONF_TWIST_WORKERS must be at least 1".into());
    }
    if n == 1 {
        return Ok(Exec::Sequential);
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())?;
    Ok(Exec::Parallel)
}

fn usage_exit(msg: &str) -> ExitCode {
    eprintln!("error: {msg}\n\nUsage: sconf-twist [OPTIONS] <algebra|twist|centralizer|realform|verify> ...\nRun `sconf-twist --help` for details.");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let exec = match configure_workers() {
        Ok(e) => e,
        Err(msg) => return usage_exit(&msg),
    };
    let start = Instant::now();
    let outcome = match commands::run(&cli.verb, cli.seed, exec) {
        Ok(o) => o,
        Err(commands::UsageError(msg)) => return usage_exit(&msg),
    };
    let elapsed_ms = if cli.no_timing { 0 } else { start.elapsed().as_millis() as u64 };
    let command: Vec<String> = argv.iter().skip(1).cloned().collect();
    let text = match cli.format {
        Format::Json => {
            let report = Report { schema_version: SCHEMA_VERSION, command, payload: &outcome.payload, elapsed_ms };
            let mut s = serde_json::to_string_pretty(&report).expect("serializable");
            s.push('\n');
            s
        }
        Format::Markdown => outcome.markdown.clone().unwrap_or_else(|| render::generic(&command.join(" "), &outcome.payload)),
    };
    if let Err(e) = commands::write_output(cli.out.as_deref(), &text) {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
