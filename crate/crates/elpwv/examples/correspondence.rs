//! Pairs interpretation-based world views with guess-based ones.
//!
//! After completing a program with inert constraints so that every
//! epistemic literal occurs in it, each candidate world view corresponds to
//! exactly one admissible guess with the same answer sets. The mapping
//! runs antitone: the more literals a guess contains, the less the paired
//! interpretation decides.

use elpwv::output::render_correspondence_text;
use elpwv::{check_correspondence, parse_program, with_all_epistemic_literals};

fn main() {
    let program = parse_program(include_str!("data/scholarship.elp")).unwrap();
    println!("program:");
    print!("{program}");

    let completed = with_all_epistemic_literals(&program);
    println!(
        "\ncompletion adds {} inert constraints (one per missing epistemic literal)",
        completed.rule_count() - program.rule_count()
    );

    let report = check_correspondence(&program);
    println!();
    print!("{}", render_correspondence_text(&report, program.universe()));
}
