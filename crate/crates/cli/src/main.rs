mod args;
mod commands;
mod error;
mod manifest;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use serde_json::Value;

use trifree_core::cut::ParamConfig;
use trifree_core::experiments::{thread_count, with_threads};
use trifree_core::homology::HomologyLimits;

use args::{Cli, Command};
use commands::{Outcome, Payload};
use error::CliError;
use manifest::RunManifest;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let code = match parse(&argv) {
        Ok(cli) => match run(cli, argv) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("trifree: {e}");
                e.exit_code()
            }
        },
        Err(code) => code,
    };
    ExitCode::from(code as u8)
}

/// Parses `argv` (without the program name); help and version exit 0,
/// other parse failures exit 2.
fn parse(argv: &[String]) -> Result<Cli, i32> {
    Cli::try_parse_from(std::iter::once("trifree".to_string()).chain(argv.iter().cloned())).map_err(|e| {
        let _ = e.print();
        if e.use_stderr() {
            2
        } else {
            0
        }
    })
}

fn run(cli: Cli, argv: Vec<String>) -> Result<(), CliError> {
    if let Command::Rerun(r) = &cli.command {
        let text = std::fs::read_to_string(&r.manifest)?;
        let doc: Value = serde_json::from_str(&text)?;
        let recorded = manifest::extract(doc).map_err(|e| CliError::Usage(format!("{}: {e}", r.manifest.display())))?;
        let mut argv = recorded.argv;
        if let Some(out) = &cli.global.out {
            replace_out(&mut argv, out);
        }
        let inner = parse(&argv).map_err(|_| CliError::Usage("recorded arguments no longer parse".into()))?;
        if matches!(inner.command, Command::Rerun(_)) {
            return Err(CliError::Usage("a manifest cannot record a rerun".into()));
        }
        return run(inner, argv);
    }

    let started_at = manifest::timestamp();
    let values = commands::param_values(&cli.global)?;
    let cfg = ParamConfig::new(values)?;
    let limits = commands::limits_for(&cli.command, &cli.global);
    let threads = cli.global.threads.unwrap_or_else(thread_count);
    if threads == 0 {
        return Err(CliError::Usage("--threads must be positive".into()));
    }
    let hlimits = HomologyLimits::default();
    let outcome: Outcome = with_threads(Some(threads), || match &cli.command {
        Command::Sample(a) => commands::sample(a),
        Command::Solve(a) => commands::solve(a, &limits),
        Command::AnalyzeCut(a) => commands::analyze_cut(a, &cfg, &limits),
        Command::Homology(a) => commands::homology(a, &hlimits),
        Command::Sweep(a) => commands::sweep(a, &cfg, &limits),
        Command::Threshold(a) => commands::threshold(a, &limits),
        Command::Obstruct(a) => commands::obstruct(a),
        Command::Rerun(_) => unreachable!(),
    })?;

    let manifest = RunManifest {
        subcommand: cli.command.name().to_string(),
        argv,
        parameters: serde_json::to_value(&cli.command)?,
        config: values,
        limits,
        threads,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        started_at,
        finished_at: manifest::timestamp(),
        extra: outcome.extra,
    };
    emit(cli.global.out.as_deref(), outcome.payload, &manifest)?;
    if cli.global.out.is_some() {
        println!("{}", outcome.summary);
    } else {
        eprintln!("{}", outcome.summary);
    }
    Ok(())
}

/// JSON outputs embed the manifest under `"manifest"`; CSV and edge-list
/// outputs get it in `<out>.manifest.json`.
fn emit(out: Option<&Path>, payload: Payload, manifest: &RunManifest) -> Result<(), CliError> {
    let bytes = match payload {
        Payload::Json(mut v) => {
            v["manifest"] = serde_json::to_value(manifest)?;
            let mut s = serde_json::to_string_pretty(&v)?;
            s.push('\n');
            s.into_bytes()
        }
        Payload::Csv(b) => b,
        Payload::EdgeList(s) => s.into_bytes(),
    };
    let is_json = bytes.first() == Some(&b'{');
    match out {
        Some(path) => {
            std::fs::write(path, &bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            if !is_json {
                let side = sidecar(path);
                let mut text = serde_json::to_string_pretty(manifest)?;
                text.push('\n');
                std::fs::write(&side, text).map_err(|e| CliError::Io(format!("{}: {e}", side.display())))?;
            }
        }
        None => std::io::stdout().write_all(&bytes)?,
    }
    Ok(())
}

fn sidecar(path: &Path) -> PathBuf {
    let mut name = path.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    path.with_file_name(name)
}

fn replace_out(argv: &mut Vec<String>, out: &Path) {
    let out = out.display().to_string();
    if let Some(i) = argv.iter().position(|a| a == "--out") {
        if i + 1 < argv.len() {
            argv[i + 1] = out;
            return;
        }
    }
    if let Some(i) = argv.iter().position(|a| a.starts_with("--out=")) {
        argv[i] = format!("--out={out}");
        return;
    }
    argv.push("--out".into());
    argv.push(out);
}
