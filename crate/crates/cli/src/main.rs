use std::process::ExitCode;

use fraciter_cli::{emit, execute, exit_code, parse_config, render_report, CliError};

fn main() -> ExitCode {
    let cfg = match parse_config(std::env::args_os(), |k| std::env::var(k).ok()) {
        Ok(cfg) => cfg,
        Err(CliError::Args(e)) => e.exit(),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = match execute(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match render_report(&report, cfg.format) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit::write_output(&text, cfg.output.as_deref()) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if cfg.format != fraciter_cli::Format::Text {
        for n in report.notes.iter().filter(|n| n.starts_with("warning:")) {
            eprintln!("{n}");
        }
    }
    ExitCode::from(exit_code(&report, &cfg) as u8)
}
