//! World-view solver for ground epistemic logic programs.
//!
//! Epistemic logic programs extend disjunctive answer set programs with the
//! epistemic negation operator `not l`, read as "l is not provably true".
//! This crate parses such programs, computes their world views under a
//! three-valued semantics in which every atom is true, false or unknown,
//! and relates those world views to the guess-based semantics that works
//! with sets of epistemic literals. On top of the solver it offers
//! equivalence checks (from plain world-view agreement up to strong
//! equivalence under program extension) and a reduction from one-alternation
//! quantified Boolean formulas to world-view existence.
//!
//! The `examples/` directory walks through each capability; the `elpwv`
//! binary exposes them as subcommands.

pub mod asp;
pub mod cli;
pub mod engine;
pub mod equivalence;
pub mod output;
pub mod parse;
pub mod qsat;
pub mod syntax;

pub use asp::{compile_plain, strongly_equivalent, NotPlain, PlainProgram, SeModel};
pub use engine::{
    candidate_world_views, check_correspondence, cwi_reduct, guess_reduct, is_cwv,
    se_candidate_world_views, se_world_views, with_all_epistemic_literals, world_views,
    CandidateWorldView, CorrespondenceReport, GuessWorldView,
};
pub use equivalence::{
    equivalent, se_function, Counterexample, EquivalenceNotion, EquivalenceVerdict, Side,
};
pub use output::{program_from_json, program_json, ProgramJson, ProgramJsonError};
pub use parse::{parse_program, ParseError};
pub use qsat::{
    encode, parse_qdimacs, qbf_oracle, side_condition_holds, solve, Guarantee, QbfInstance,
    QdimacsError, QsatError, QsatOutcome, SignedLit, XAssignment,
};
pub use syntax::{
    extend_universe, union, AtomId, BodyElement, Cwi, EpistemicLiteral, Interpretation, Literal,
    Program, Rule, Universe, MAX_ATOMS,
};
