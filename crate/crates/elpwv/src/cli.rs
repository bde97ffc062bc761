//! Command-line front end: argument parsing, dispatch, and exit codes.
//!
//! Exit codes form a triage usable from shell scripts: 0 means the asked-for
//! object exists (or the programs are equivalent), 1 means a definite
//! negative answer, and 2 means the input could not be processed. An atom
//! guard refuses inputs whose enumeration would be intractable; it defaults
//! to 14 atoms and can be raised per invocation.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::engine::{
    candidate_world_views, check_correspondence, maximal_se_world_views, minimal_world_views,
    se_candidate_world_views,
};
use crate::equivalence::{equivalent, EquivalenceNotion};
use crate::output::{
    correspondence_json, qsat_encode_json, qsat_solve_json, render_correspondence_text,
    render_guess_views_text, render_verdict_text, render_world_views_text, se_result_json,
    verdict_json, world_view_result_json,
};
use crate::parse::parse_program;
use crate::qsat::{self, Guarantee};
use crate::syntax::Program;

const DEFAULT_MAX_ATOMS: usize = 14;
const MAX_ATOMS_ENV: &str = "ELPWV_MAX_ATOMS";

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(
    name = "elpwv",
    about = "World-view solver for ground epistemic logic programs"
)]
pub struct Cli {
    /// Refuse enumeration above this many atoms (default 14, env ELPWV_MAX_ATOMS).
    #[arg(long, global = true, value_name = "N")]
    pub max_atoms: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

/// One subcommand per capability.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate world views of an epistemic program.
    Solve {
        file: PathBuf,
        /// Which semantic objects to list.
        #[arg(long, value_enum, default_value_t = Mode::Wv)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether two programs are equivalent under a notion.
    Equiv {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, value_enum)]
        notion: Notion,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify the pairing between world views and admissible guesses.
    Correspond {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Ground a quantified formula into an epistemic program.
    QsatEncode {
        file: PathBuf,
        /// Print the ground program as text instead of the JSON summary.
        #[arg(long)]
        emit_elp: bool,
    },
    /// Solve a quantified formula through its world-view encoding.
    QsatSolve { file: PathBuf },
}

/// Semantic objects `solve` can list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Wv,
    Cwv,
    SeWv,
    SeCwv,
}

/// Output encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Equivalence notions `equiv` can decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Notion {
    Cwv,
    Wv,
    SeCwv,
    SeWv,
    Strong,
}

impl From<Notion> for EquivalenceNotion {
    fn from(n: Notion) -> EquivalenceNotion {
        match n {
            Notion::Cwv => EquivalenceNotion::Cwv,
            Notion::Wv => EquivalenceNotion::Wv,
            Notion::SeCwv => EquivalenceNotion::SeCwv,
            Notion::SeWv => EquivalenceNotion::SeWv,
            Notion::Strong => EquivalenceNotion::Strong,
        }
    }
}

fn emit(w: &mut dyn Write, text: &str) {
    let _ = w.write_all(text.as_bytes());
}

fn emitln(w: &mut dyn Write, text: &str) {
    emit(w, text);
    emit(w, "\n");
}

fn resolve_limit(flag: Option<usize>, err: &mut dyn Write) -> Result<usize, i32> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(MAX_ATOMS_ENV) {
        Ok(value) => value.trim().parse().map_err(|_| {
            emitln(err, &format!("{MAX_ATOMS_ENV} is set but is not a number"));
            2
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_ATOMS),
        Err(std::env::VarError::NotUnicode(_)) => {
            emitln(err, &format!("{MAX_ATOMS_ENV} is set but is not valid text"));
            Err(2)
        }
    }
}

fn check_limit(count: usize, limit: usize, what: &str, err: &mut dyn Write) -> Result<(), i32> {
    if count > limit {
        emitln(
            err,
            &format!(
                "{what} has {count} atoms, above the enumeration limit {limit}; \
                 raise it with --max-atoms or {MAX_ATOMS_ENV}"
            ),
        );
        return Err(2);
    }
    Ok(())
}

fn read_input(path: &Path, err: &mut dyn Write) -> Result<String, i32> {
    fs::read_to_string(path).map_err(|e| {
        emitln(err, &format!("cannot read {}: {e}", path.display()));
        2
    })
}

fn load_program(path: &Path, err: &mut dyn Write) -> Result<Program, i32> {
    let text = read_input(path, err)?;
    parse_program(&text).map_err(|e| {
        emitln(err, &format!("{}:{e}", path.display()));
        2
    })
}

fn json_line<T: serde::Serialize>(doc: &T, out: &mut dyn Write) {
    emitln(
        out,
        &serde_json::to_string(doc).expect("result serializes to JSON"),
    );
}

/// Executes a parsed command line, writing to the given streams, and
/// returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let limit = match resolve_limit(cli.max_atoms, err) {
        Ok(l) => l,
        Err(code) => return code,
    };
    match &cli.command {
        Command::Solve { file, mode, format } => cmd_solve(file, *mode, *format, limit, out, err),
        Command::Equiv {
            file1,
            file2,
            notion,
            format,
        } => cmd_equiv(file1, file2, *notion, *format, limit, out, err),
        Command::Correspond { file, format } => cmd_correspond(file, *format, limit, out, err),
        Command::QsatEncode { file, emit_elp } => cmd_qsat_encode(file, *emit_elp, out, err),
        Command::QsatSolve { file } => cmd_qsat_solve(file, limit, out, err),
    }
}

fn cmd_solve(
    file: &Path,
    mode: Mode,
    format: Format,
    limit: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let program = match load_program(file, err) {
        Ok(p) => p,
        Err(code) => return code,
    };
    if let Err(code) = check_limit(program.atom_count(), limit, "program", err) {
        return code;
    }
    let universe = program.universe();
    match mode {
        Mode::Wv | Mode::Cwv => {
            let candidates = candidate_world_views(&program);
            let minimal = minimal_world_views(&candidates);
            match format {
                Format::Text => {
                    let (views, label) = match mode {
                        Mode::Wv => (&minimal, "world view"),
                        _ => (&candidates, "candidate world view"),
                    };
                    emit(out, &render_world_views_text(views, universe, label));
                }
                Format::Json => {
                    json_line(&world_view_result_json(&minimal, &candidates, universe), out)
                }
            }
            if candidates.is_empty() {
                1
            } else {
                0
            }
        }
        Mode::SeWv | Mode::SeCwv => {
            let candidates = se_candidate_world_views(&program);
            let maximal = maximal_se_world_views(&candidates);
            match format {
                Format::Text => {
                    let (views, label) = match mode {
                        Mode::SeWv => (&maximal, "SE world view"),
                        _ => (&candidates, "SE candidate world view"),
                    };
                    emit(out, &render_guess_views_text(views, universe, label));
                }
                Format::Json => json_line(&se_result_json(&maximal, &candidates, universe), out),
            }
            if candidates.is_empty() {
                1
            } else {
                0
            }
        }
    }
}

fn cmd_equiv(
    file1: &Path,
    file2: &Path,
    notion: Notion,
    format: Format,
    limit: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let p1 = match load_program(file1, err) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let p2 = match load_program(file2, err) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let union: BTreeSet<&str> = p1.universe().names().chain(p2.universe().names()).collect();
    if let Err(code) = check_limit(union.len(), limit, "joint universe", err) {
        return code;
    }
    let verdict = equivalent(&p1, &p2, notion.into());
    match format {
        Format::Text => emit(out, &render_verdict_text(&verdict)),
        Format::Json => json_line(&verdict_json(&verdict), out),
    }
    if verdict.equal {
        0
    } else {
        1
    }
}

fn cmd_correspond(
    file: &Path,
    format: Format,
    limit: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let program = match load_program(file, err) {
        Ok(p) => p,
        Err(code) => return code,
    };
    if let Err(code) = check_limit(program.atom_count(), limit, "program", err) {
        return code;
    }
    let report = check_correspondence(&program);
    match format {
        Format::Text => emit(out, &render_correspondence_text(&report, program.universe())),
        Format::Json => json_line(&correspondence_json(&report, program.universe()), out),
    }
    if report.holds {
        0
    } else {
        1
    }
}

fn load_qdimacs(path: &Path, err: &mut dyn Write) -> Result<qsat::QbfInstance, i32> {
    let text = read_input(path, err)?;
    qsat::parse_qdimacs(&text).map_err(|e| {
        emitln(err, &format!("{}: {e}", path.display()));
        2
    })
}

fn warn_if_void(guarantee: Guarantee, err: &mut dyn Write) {
    if guarantee == Guarantee::Void {
        emitln(
            err,
            "warning: the all-true Y assignment does not satisfy every clause, \
             so the encoding's guarantee does not apply",
        );
    }
}

fn cmd_qsat_encode(file: &Path, emit_elp: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let q = match load_qdimacs(file, err) {
        Ok(q) => q,
        Err(code) => return code,
    };
    let program = match qsat::encode(&q) {
        Ok(p) => p,
        Err(e) => {
            emitln(err, &format!("{}: {e}", file.display()));
            return 2;
        }
    };
    let guarantee = if qsat::side_condition_holds(&q) {
        Guarantee::Ok
    } else {
        Guarantee::Void
    };
    warn_if_void(guarantee, err);
    if emit_elp {
        emit(out, &program.to_string());
    } else {
        json_line(&qsat_encode_json(&program, guarantee), out);
    }
    0
}

fn cmd_qsat_solve(file: &Path, limit: usize, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let q = match load_qdimacs(file, err) {
        Ok(q) => q,
        Err(code) => return code,
    };
    let core = 2 * q.x_vars.len() + 2;
    if let Err(code) = check_limit(core, limit, "epistemic core", err) {
        return code;
    }
    match qsat::solve(&q) {
        Ok(outcome) => {
            warn_if_void(outcome.guarantee, err);
            json_line(&qsat_solve_json(&outcome), out);
            if outcome.satisfiable {
                0
            } else {
                1
            }
        }
        Err(e) => {
            emitln(err, &format!("{}: {e}", file.display()));
            2
        }
    }
}
