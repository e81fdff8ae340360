//! Command-line front end: argument parsing, file handling and the exit-code
//! contract. `run` is the whole program minus process plumbing.

pub mod envelope;
pub mod exec;
pub mod verify;

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::{Path as FsPath, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use evenpair::generators::{generate, GenSpec};
use evenpair::io::{parse_graph, write_dimacs, write_edge_list, GraphFormat};
use evenpair::oracles::Oracle;
use evenpair::Graph;

use envelope::{Outcome, ResultEnvelope};
use exec::{Executed, OracleArgs, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Auto,
    Dimacs,
    Edgelist,
}

#[derive(Debug, Parser)]
#[command(name = "evenpair", version, about = "Even pairs, class detection and optimal colouring")]
struct Cli {
    /// Input graph format.
    #[arg(long, global = true, value_enum, default_value = "auto")]
    format: FormatArg,
    /// Add wall-clock timings to the JSON output (makes it non-deterministic).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Report membership in the class, with a witness when outside.
    Classify { file: PathBuf },
    /// Find a special even pair.
    Evenpair {
        file: PathBuf,
        /// Also run the exhaustive even-pair and snake oracles.
        #[arg(long)]
        audit: bool,
    },
    /// Colour with omega colours by even-pair contraction.
    Color {
        file: PathBuf,
        /// Check every intermediate graph for class membership (always on
        /// for at most 12 vertices).
        #[arg(long)]
        verify_trace: bool,
    },
    /// Re-check a result file against the graph.
    Verify { file: PathBuf, result: PathBuf },
    /// Generate an instance from a JSON spec.
    Gen {
        spec: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Overrides the seed in the spec.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "dimacs")]
        out_format: OutFormat,
    },
    /// Run one exhaustive oracle.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        op: String,
        /// Path for the lemma checks, comma-separated 1-based vertices.
        #[arg(long, value_delimiter = ',')]
        path: Vec<u64>,
        /// Vertex set T for the lemma checks.
        #[arg(long, value_delimiter = ',')]
        set: Vec<u64>,
        /// Vertex arguments (1-based).
        vertices: Vec<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Dimacs,
    Edgelist,
}

fn read_text(path: &FsPath) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_graph(path: &FsPath, format: FormatArg) -> Result<Graph, String> {
    let text = read_text(path)?;
    let format = match format {
        FormatArg::Auto => GraphFormat::detect(&text),
        FormatArg::Dimacs => GraphFormat::DimacsCol,
        FormatArg::Edgelist => GraphFormat::EdgeList,
    };
    parse_graph(&text, format).map_err(|e| format!("{}: {e}", path.display()))
}

/// Runs the program on `argv` (including the program name) and returns the
/// exit code: 0 success, 1 negative answer or failed check, 2 usage, parse
/// or oracle-bound errors.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn emit(g: &Graph, command: &str, ex: Executed, started: Instant, timings: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let mut env = ResultEnvelope::new(g, command, ex.outcome);
    if timings {
        let ms = started.elapsed().as_secs_f64() * 1000.0;
        env.timings = Some(BTreeMap::from([("total_ms".to_string(), ms)]));
    }
    out.write_all(env.to_json().as_bytes()).map_err(|e| e.to_string())?;
    if let Some(note) = ex.note {
        let _ = writeln!(err, "{command}: {note}");
    }
    Ok(ex.code)
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let oracle = Oracle::from_env();
    let started = Instant::now();
    match &cli.cmd {
        Cmd::Classify { file } => {
            let g = read_graph(file, cli.format)?;
            emit(&g, "classify", exec::classify(&g, &oracle), started, cli.timings, out, err)
        }
        Cmd::Evenpair { file, audit } => {
            let g = read_graph(file, cli.format)?;
            emit(&g, "evenpair", exec::evenpair(&g, *audit, &oracle), started, cli.timings, out, err)
        }
        Cmd::Color { file, verify_trace } => {
            let g = read_graph(file, cli.format)?;
            emit(&g, "color", exec::color(&g, *verify_trace, &oracle), started, cli.timings, out, err)
        }
        Cmd::Oracle { file, op, path, set, vertices } => {
            let g = read_graph(file, cli.format)?;
            let args = OracleArgs { vertices: vertices.clone(), path: path.clone(), set: set.clone() };
            let ex = exec::oracle(&g, op, &args, &oracle)?;
            emit(&g, "oracle", ex, started, cli.timings, out, err)
        }
        Cmd::Verify { file, result } => {
            let g = read_graph(file, cli.format)?;
            let text = read_text(result)?;
            let env: ResultEnvelope =
                serde_json::from_str(&text).map_err(|e| format!("{}: {e}", result.display()))?;
            let problems = verify::verify_envelope(&g, &env, &oracle);
            for p in &problems {
                let _ = writeln!(err, "verify: {p}");
            }
            let valid = problems.is_empty();
            let ex = Executed {
                outcome: Outcome::Verification { valid, problems },
                code: if valid { EXIT_OK } else { EXIT_NEGATIVE },
                note: None,
            };
            emit(&g, "verify", ex, started, cli.timings, out, err)
        }
        Cmd::Gen { spec, output, seed, out_format } => {
            let text = read_text(spec)?;
            let mut spec: GenSpec = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", spec.display()))?;
            if let Some(s) = seed {
                spec.seed = *s;
            }
            let g = match generate(&spec).map_err(|e| e.to_string())? {
                Some(g) => g,
                None => {
                    let _ = writeln!(err, "gen: no accepted sample within {} tries", spec.max_tries);
                    return Ok(EXIT_NEGATIVE);
                }
            };
            let body = match out_format {
                OutFormat::Dimacs => write_dimacs(&g),
                OutFormat::Edgelist => write_edge_list(&g),
            };
            match output {
                Some(path) => std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display()))?,
                None => out.write_all(body.as_bytes()).map_err(|e| e.to_string())?,
            }
            Ok(EXIT_OK)
        }
    }
}
