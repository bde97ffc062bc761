//! Separates world-view equivalence from strong equivalence.
//!
//! `a :- not ~ a.` and `a.` have the same world views on their own, but
//! they are not interchangeable inside a larger program: adding the
//! constraint `:- a.` leaves the first program with a world view while the
//! second loses all of them. Strong equivalence detects this without
//! searching contexts, by comparing SE-functions.

use elpwv::output::render_verdict_text;
use elpwv::syntax::render_cwi;
use elpwv::{equivalent, parse_program, union, world_views, EquivalenceNotion};

fn main() {
    let p1 = parse_program("a :- not ~ a.").unwrap();
    let p2 = parse_program("a.").unwrap();

    print!("program 1: {p1}");
    print!("program 2: {p2}");
    println!();
    print!("{}", render_verdict_text(&equivalent(&p1, &p2, EquivalenceNotion::Cwv)));
    print!("{}", render_verdict_text(&equivalent(&p1, &p2, EquivalenceNotion::Strong)));

    let context = parse_program(":- a.").unwrap();
    for (name, p) in [("program 1", &p1), ("program 2", &p2)] {
        let extended = union(p, &context);
        let views = world_views(&extended);
        println!("\n{name} with ':- a.' added has {} world view(s)", views.len());
        for view in views {
            println!("  {}", render_cwi(view.interpretation, extended.universe()));
        }
    }
}
