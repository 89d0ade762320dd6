use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser};
use matlis_cli::output::{render, Format};
use matlis_cli::presets::Preset;
use matlis_cli::{parse_script, ScriptError, Session, Settings};
use matlis_core::FieldSpec;

/// Graded modules, Matlis duality and homological invariants from a small
/// script language.
///
/// Scripts are read from SCRIPT, from --eval, or from standard input. Each
/// compute, verify and preset statement writes its results to standard output
/// as JSON lines (default) or as aligned tables.
///
/// Exit status: 0 on success, 1 when a verification or preset comparison
/// fails, 2 on usage, parse or evaluation errors.
#[derive(Parser, Debug)]
#[command(name = "matlis", version)]
#[command(group(ArgGroup::new("format").args(["json", "table"])))]
#[command(group(ArgGroup::new("input").args(["script", "eval", "preset", "suite"])))]
struct Cli {
    /// Script file; `-` or nothing reads standard input.
    script: Option<PathBuf>,

    /// Run the given script text.
    #[arg(short, long, value_name = "TEXT")]
    eval: Option<String>,

    /// Run a named preset, e.g. example-6-5 or example-6-5-general(2,1,3).
    #[arg(long, value_name = "NAME")]
    preset: Option<String>,

    /// Run the randomized property suite.
    #[arg(long)]
    suite: bool,

    /// Coefficient field: q or p:<prime>.
    #[arg(long, env = "MATLIS_DEFAULT_FIELD", default_value = "q", value_parser = parse_field)]
    field: FieldSpec,

    /// Seed of the randomized suite.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Number of random instances in the suite.
    #[arg(long, default_value_t = 100)]
    cases: usize,

    /// Stage window for artinian Ext/Tor (at most 5; default 3, or 5 for presets).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=5))]
    s_max: Option<u32>,

    /// Highest homological index for Betti/Bass numbers, presets and the suite.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(0..=3))]
    i_max: u64,

    /// Emit one JSON object per result (default).
    #[arg(long)]
    json: bool,

    /// Emit aligned human-readable tables.
    #[arg(long)]
    table: bool,

    /// Write results to this file instead of standard output.
    #[arg(short, long, value_name = "PATH")]
    output: Option<PathBuf>,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse::<FieldSpec>().map_err(|e| format!("{e} (expected q or p:<prime>)"))
}

const USAGE_ERROR: u8 = 2;

fn script_text(cli: &Cli) -> io::Result<String> {
    if let Some(text) = &cli.eval {
        return Ok(text.clone());
    }
    if let Some(p) = &cli.preset {
        return Ok(format!("preset {p};"));
    }
    if cli.suite {
        return Ok("verify suite;".into());
    }
    match &cli.script {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

/// Prints a diagnostic with the offending source line.
fn report(err: &ScriptError, src: &str) {
    eprintln!("matlis: {err}");
    if let Some(line) = src.lines().nth(err.pos.line.saturating_sub(1)) {
        eprintln!("  | {line}");
        eprintln!("  | {}^", " ".repeat(err.pos.column.saturating_sub(1)));
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(p) = &cli.preset {
        if let Err(msg) = Preset::parse(p) {
            eprintln!("matlis: {msg}");
            return ExitCode::from(USAGE_ERROR);
        }
    }
    let src = match script_text(&cli) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("matlis: cannot read script: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    };
    let statements = match parse_script(&src) {
        Ok(s) => s,
        Err(e) => {
            report(&e, &src);
            return ExitCode::from(USAGE_ERROR);
        }
    };
    let mut out: Box<dyn Write> = match &cli.output {
        Some(p) => match File::create(p) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("matlis: cannot create {}: {e}", p.display());
                return ExitCode::from(USAGE_ERROR);
            }
        },
        None => Box::new(io::stdout().lock()),
    };
    let format = if cli.table { Format::Table } else { Format::Json };
    let settings = Settings { field: cli.field, seed: cli.seed, cases: cli.cases, s_max: cli.s_max, i_max: cli.i_max as usize };
    let mut session = Session::new(settings);
    let mut failed = false;
    for st in &statements {
        match session.execute(st) {
            Ok(batch) => {
                failed |= batch.iter().any(|e| e.failed);
                if let Err(e) = out.write_all(render(&batch, format).as_bytes()) {
                    eprintln!("matlis: write failed: {e}");
                    return ExitCode::from(USAGE_ERROR);
                }
            }
            Err(e) => {
                let _ = out.flush();
                report(&e, &src);
                return ExitCode::from(USAGE_ERROR);
            }
        }
    }
    if let Err(e) = out.flush() {
        eprintln!("matlis: write failed: {e}");
        return ExitCode::from(USAGE_ERROR);
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
