//! `solidmon`: check solid and rigid monoids from JSON definition files.
//!
//! Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 the
//! input was malformed, 3 a resource bound was exceeded.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use solidmon::catalog;
use solidmon::document::SCHEMA_VERSION;
use solidmon::Error;

use commands::{load, run, Ctx, EnrichmentArg};
use report::{error_exit_code, Outcome};

#[derive(Parser)]
#[command(name = "solidmon", version, about = "Solid and rigid monoid checker")]
struct Cli {
    /// Print a machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,

    /// Largest hom object or enumeration the checks may build.
    #[arg(long, global = true, default_value_t = 10000)]
    max_hom_size: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate any document: group, ring, module, functor, universe or suite.
    Check { file: PathBuf },
    /// Compute the core of a ring.
    Core { file: PathBuf },
    /// Decide whether a ring is solid.
    Solid { file: PathBuf },
    /// Decide whether a ring is rigid.
    Rigid {
        file: PathBuf,
        /// `identity` or `free-forget:<p>`.
        #[arg(long, default_value = "identity")]
        enrichment: String,
    },
    /// Check that a functor is a (co)localization on a test universe.
    FunctorCheck {
        file: PathBuf,
        #[arg(long)]
        universe: PathBuf,
    },
    /// Pass between solid monoids and smashing or mapping functors.
    Correspond { file: PathBuf },
    /// List the built-in examples, optionally writing them as files.
    Catalog {
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

fn execute(cli: &Cli) -> Outcome {
    let ctx = Ctx::new(cli.max_hom_size);
    let (name, file) = match &cli.command {
        Command::Check { file } => ("check", file),
        Command::Core { file } => ("core", file),
        Command::Solid { file } => ("solid", file),
        Command::Rigid { file, .. } => ("rigid", file),
        Command::FunctorCheck { file, .. } => ("functor-check", file),
        Command::Correspond { file } => ("correspond", file),
        Command::Catalog { .. } => unreachable!("handled separately"),
    };
    let failed = |error: Error| Outcome::Failed {
        command: name.into(),
        subject: file.display().to_string(),
        error,
    };
    let enrichment = match &cli.command {
        Command::Rigid { enrichment, .. } => match EnrichmentArg::parse(enrichment) {
            Ok(e) => e,
            Err(e) => return failed(e),
        },
        _ => EnrichmentArg::Identity,
    };
    let doc = match load(file) {
        Ok(d) => d,
        Err(e) => return failed(e),
    };
    let universe = match &cli.command {
        Command::FunctorCheck { universe, .. } => match load(universe) {
            Ok(u) => Some(u),
            Err(e) => return failed(e),
        },
        _ => None,
    };
    run(&ctx, name, &doc, universe.as_ref(), enrichment)
}

fn catalog_command(cli: &Cli, emit: Option<&PathBuf>) -> Result<Value, Error> {
    let cat = solidmon::fgab::FgAb::new(cli.max_hom_size);
    let docs = catalog::documents(&cat);
    let mut written = Vec::new();
    if let Some(dir) = emit {
        std::fs::create_dir_all(dir)
            .map_err(|e| Error::Input(format!("cannot create {}: {e}", dir.display())))?;
        for d in &docs {
            let path = dir.join(catalog::file_name(d));
            std::fs::write(&path, d.to_json() + "\n")
                .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
            written.push(path.display().to_string());
        }
    }
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "command": "catalog",
        "entries": docs,
        "written": written,
        "exit_code": "0",
    }))
}

/// Writes to stdout, ignoring a closed pipe.
fn write_out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    if let Command::Catalog { emit } = &cli.command {
        return match catalog_command(&cli, emit.as_ref()) {
            Ok(v) => {
                if cli.json {
                    write_out(&(serde_json::to_string_pretty(&v).expect("json") + "\n"));
                } else {
                    let mut out = String::new();
                    for e in v["entries"].as_array().into_iter().flatten() {
                        let expected = e.get("expected").map(Value::to_string).unwrap_or_default();
                        out.push_str(&format!(
                            "{:<9} {:<22} {expected}\n",
                            e["kind"].as_str().unwrap_or(""),
                            e["name"].as_str().unwrap_or("")
                        ));
                    }
                    for w in v["written"].as_array().into_iter().flatten() {
                        out.push_str(&format!("wrote {}\n", w.as_str().unwrap_or("")));
                    }
                    write_out(&out);
                }
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(error_exit_code(&e) as u8)
            }
        };
    }
    let outcome = execute(&cli);
    let elapsed = start.elapsed().as_millis();
    if cli.json {
        let mut v = outcome.to_json();
        v["timing"] = json!({ "elapsed_ms": elapsed.to_string() });
        write_out(&(serde_json::to_string_pretty(&v).expect("json") + "\n"));
    } else {
        let mut out = String::new();
        outcome.render(&mut out, 0);
        out.push_str(&format!("time: {elapsed} ms\n"));
        write_out(&out);
        if let Outcome::Failed { error, .. } = &outcome {
            eprintln!("error: {error}");
        }
    }
    ExitCode::from(outcome.exit_code() as u8)
}
