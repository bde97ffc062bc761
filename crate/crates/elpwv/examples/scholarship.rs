//! Enumerates the world views of the scholarship program.
//!
//! The program cannot prove the student eligible or ineligible, so the
//! epistemic rule fires and the unique world view schedules an interview
//! while leaving the GPA atoms unknown.

use elpwv::syntax::{render_cwi, render_interpretation};
use elpwv::{candidate_world_views, parse_program, world_views};

fn main() {
    let program = parse_program(include_str!("data/scholarship.elp")).unwrap();
    let universe = program.universe();

    println!("program:");
    print!("{program}");

    let candidates = candidate_world_views(&program);
    println!("\ncandidate world views: {}", candidates.len());
    for view in &candidates {
        println!("  {}", render_cwi(view.interpretation, universe));
        for m in &view.answer_sets {
            println!("    answer set {}", render_interpretation(*m, universe));
        }
    }

    println!("\nworld views (subset-minimal candidates):");
    for view in world_views(&program) {
        println!("  {}", render_cwi(view.interpretation, universe));
    }
}
