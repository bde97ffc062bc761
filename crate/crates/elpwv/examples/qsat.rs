//! Solves an ∃∀∃ quantified formula through the world-view encoding.
//!
//! Each X variable becomes a pair of mutually exclusive epistemic guesses,
//! Y variables become plain disjunctive choice, and Z variables are backed
//! by saturation so that a failed clause collapses the branch. World views
//! of the ground program project exactly onto the accepting X-assignments,
//! which the example cross-checks against a truth-table oracle.

use elpwv::{encode, parse_qdimacs, qbf_oracle, side_condition_holds, solve};

fn main() {
    let text = include_str!("data/exists_forall_exists.qdimacs");
    print!("{text}");
    let q = parse_qdimacs(text).unwrap();

    println!("\nside condition holds: {}", side_condition_holds(&q));

    let program = encode(&q).unwrap();
    println!("\nground program ({} atoms, {} rules):", program.atom_count(), program.rule_count());
    print!("{program}");

    let outcome = solve(&q).unwrap();
    println!("\nsatisfiable: {}", outcome.satisfiable);
    for a in &outcome.x_assignments {
        println!("  accepting X-assignment: {a:?}");
    }

    let oracle = qbf_oracle(&q);
    println!("oracle agrees: {}", oracle == outcome.x_assignments);
}
