//! Compares two programs under several equivalence notions.
//!
//! The three-way disjunction and the loop variant have the same world
//! views, yet their epistemic guesses reach different answer-set
//! collections, so the interpretation-based notions accept the pair while
//! the guess-based ones separate it.

use elpwv::output::render_verdict_text;
use elpwv::{equivalent, parse_program, EquivalenceNotion};

fn main() {
    let p1 = parse_program("a | b | c.").unwrap();
    let p2 = parse_program("a | b. c :- b. b :- c.").unwrap();

    println!("program 1:");
    print!("{p1}");
    println!("\nprogram 2:");
    print!("{p2}");
    println!();

    for notion in [
        EquivalenceNotion::Cwv,
        EquivalenceNotion::Wv,
        EquivalenceNotion::SeCwv,
        EquivalenceNotion::SeWv,
    ] {
        print!("{}", render_verdict_text(&equivalent(&p1, &p2, notion)));
    }
}
