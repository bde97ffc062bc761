//! Seeded random generators shared by the integration suites.

#![allow(dead_code)]

use std::fmt::Write;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use elpwv::{parse_program, Program, QbfInstance, SignedLit};

pub const ATOM_NAMES: [&str; 4] = ["a", "b", "c", "d"];

fn body_element(shape: usize, atom: &str) -> String {
    match shape {
        0 => atom.to_owned(),
        1 => format!("~ {atom}"),
        2 => format!("~ ~ {atom}"),
        3 => format!("not {atom}"),
        4 => format!("not ~ {atom}"),
        5 => format!("~ not {atom}"),
        _ => format!("~ not ~ {atom}"),
    }
}

/// Deterministic random program source, emitting every body-element shape.
pub struct ProgramGen {
    rng: StdRng,
}

impl ProgramGen {
    pub fn new(seed: u64) -> ProgramGen {
        ProgramGen {
            rng: StdRng::seed_from_u64(seed),
        }
    }

    /// Random rules over the given atoms, without a universe directive.
    /// Heads have up to two atoms (possibly empty) and bodies up to three
    /// elements. `shapes` selects how many element forms to draw from, in
    /// the order positive, `~`, `~ ~`, `not`, `not ~`, `~ not`, `~ not ~`:
    /// 1 gives negation-free rules, 3 plain rules, 7 the full language.
    pub fn rules_text(&mut self, atoms: &[&str], max_rules: usize, shapes: usize) -> String {
        assert!((1..=7).contains(&shapes));
        let rules = self.rng.gen_range(1..=max_rules);
        let mut text = String::new();
        for _ in 0..rules {
            let head_size = self.rng.gen_range(0..=2usize.min(atoms.len()));
            let mut head: Vec<&str> = Vec::new();
            while head.len() < head_size {
                let a = atoms[self.rng.gen_range(0..atoms.len())];
                if !head.contains(&a) {
                    head.push(a);
                }
            }
            let body_size = self.rng.gen_range(0..=3);
            let body: Vec<String> = (0..body_size)
                .map(|_| {
                    body_element(
                        self.rng.gen_range(0..shapes),
                        atoms[self.rng.gen_range(0..atoms.len())],
                    )
                })
                .collect();
            write!(text, "{}", head.join(" | ")).unwrap();
            if !body.is_empty() || head.is_empty() {
                if !head.is_empty() {
                    text.push(' ');
                }
                write!(text, ":- {}", body.join(", ")).unwrap();
            }
            text.push_str(".\n");
        }
        text
    }

    /// A full program source over a random prefix of the atom pool.
    pub fn text(&mut self, max_atoms: usize, max_rules: usize, shapes: usize) -> String {
        let atom_count = self.rng.gen_range(1..=max_atoms.min(ATOM_NAMES.len()));
        let atoms = &ATOM_NAMES[..atom_count];
        let mut text = format!("#atoms {}.\n", atoms.join(", "));
        text.push_str(&self.rules_text(atoms, max_rules, shapes));
        text
    }

    pub fn program(&mut self, max_atoms: usize, max_rules: usize, shapes: usize) -> Program {
        let text = self.text(max_atoms, max_rules, shapes);
        parse_program(&text).unwrap_or_else(|e| panic!("generated source fails to parse: {e}\n{text}"))
    }

    /// A random quantified instance with up to two variables per block and
    /// up to four clauses. Universal literals are biased positive so that
    /// many instances satisfy the all-true-Y side condition.
    pub fn qbf(&mut self) -> Option<QbfInstance> {
        let x = self.rng.gen_range(0..=2usize);
        let y = self.rng.gen_range(0..=2usize);
        let z = self.rng.gen_range(0..=2usize);
        if x + y + z == 0 {
            return None;
        }
        let name = |prefix: &str, i: usize| format!("{prefix}{}", i + 1);
        let x_vars: Vec<String> = (0..x).map(|i| name("x", i)).collect();
        let y_vars: Vec<String> = (0..y).map(|i| name("y", i)).collect();
        let z_vars: Vec<String> = (0..z).map(|i| name("z", i)).collect();
        let pool: Vec<(String, bool)> = x_vars
            .iter()
            .map(|v| (v.clone(), false))
            .chain(y_vars.iter().map(|v| (v.clone(), true)))
            .chain(z_vars.iter().map(|v| (v.clone(), false)))
            .collect();
        let clauses = (0..self.rng.gen_range(1..=4usize))
            .map(|_| {
                let mut lit = || {
                    let (var, universal) = pool[self.rng.gen_range(0..pool.len())].clone();
                    let negated = if universal {
                        self.rng.gen_bool(0.2)
                    } else {
                        self.rng.gen_bool(0.5)
                    };
                    SignedLit { var, negated }
                };
                [lit(), lit(), lit()]
            })
            .collect();
        Some(QbfInstance {
            x_vars,
            y_vars,
            z_vars,
            clauses,
        })
    }
}
