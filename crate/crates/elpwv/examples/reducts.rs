//! Shows how epistemic literals are resolved into plain programs.
//!
//! A reduct replaces each `not l` relative to a fixed stance on `l`: a
//! three-valued interpretation for the interpretation-based semantics, or a
//! guessed set of epistemic literals for the guess-based one. The plain
//! residue is then handed to an ordinary answer-set check.

use std::collections::BTreeSet;

use elpwv::syntax::{render_cwi, Cwi, EpistemicLiteral, Literal};
use elpwv::{cwi_reduct, guess_reduct, parse_program};

fn main() {
    let program = parse_program("interview :- not eligible, not ineligible.").unwrap();
    let universe = program.universe();
    println!("program:");
    print!("{program}");

    let all_unknown = Cwi::unknown_all();
    println!("\nreduct at {} :", render_cwi(all_unknown, universe));
    print!("{}", cwi_reduct(&program, all_unknown));

    let eligible = universe.id("eligible").unwrap();
    let ineligible = universe.id("ineligible").unwrap();
    let both_true = Cwi::new(eligible.mask() | ineligible.mask(), 0);
    println!("\nreduct at {} :", render_cwi(both_true, universe));
    print!("{}", cwi_reduct(&program, both_true));

    let guess = BTreeSet::from([
        EpistemicLiteral(Literal::pos(eligible)),
        EpistemicLiteral(Literal::pos(ineligible)),
    ]);
    println!("\nreduct for the guess {{not eligible, not ineligible}}:");
    print!("{}", guess_reduct(&program, &guess));

    println!("\nreduct for the empty guess:");
    print!("{}", guess_reduct(&program, &BTreeSet::new()));
}
