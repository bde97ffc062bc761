//! Core data model for ground epistemic logic programs.
//!
//! A [`Program`] is a finite universe of atoms together with a set of rules.
//! Rule bodies mix four kinds of elements: plain atoms, default-negated
//! literals (`~ a`, `~ ~ a`), epistemic literals (`not a`, `not ~ a`) and
//! default-negated epistemic literals (`~ not a`). Default negation chains
//! collapse during construction, so a stored literal is never more than
//! doubly negated and the literal inside an epistemic operator is at most
//! singly negated.
//!
//! Atoms are interned to dense ids so that interpretations and three-valued
//! interpretations can live in single machine words. The universe is kept
//! sorted by atom name, which makes structural equality of programs line up
//! with equality of their printed forms.

use std::collections::BTreeSet;
use std::fmt;

/// Hard cap on universe size; interpretations are stored as `u32` bitmasks.
pub const MAX_ATOMS: usize = 32;

/// Dense index of an atom within a [`Universe`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomId(pub u32);

impl AtomId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn mask(self) -> u32 {
        1 << self.0
    }
}

/// Ordered set of atom names; ids are lexicographic ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    names: Vec<String>,
}

impl Universe {
    /// Builds a universe from any collection of names, deduplicating and
    /// sorting. Panics beyond [`MAX_ATOMS`] atoms; callers that accept
    /// untrusted input are expected to guard first.
    pub fn from_names<I, S>(names: I) -> Universe
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let set: BTreeSet<String> = names.into_iter().map(Into::into).collect();
        assert!(
            set.len() <= MAX_ATOMS,
            "universe of {} atoms exceeds the {MAX_ATOMS}-atom limit",
            set.len()
        );
        Universe {
            names: set.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn id(&self, name: &str) -> Option<AtomId> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(name))
            .ok()
            .map(|i| AtomId(i as u32))
    }

    pub fn name(&self, atom: AtomId) -> &str {
        &self.names[atom.index()]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn atoms(&self) -> impl Iterator<Item = AtomId> {
        (0..self.names.len() as u32).map(AtomId)
    }

    /// Bitmask with one bit set per atom in the universe.
    pub fn full_mask(&self) -> u32 {
        if self.names.is_empty() {
            0
        } else {
            u32::MAX >> (32 - self.names.len())
        }
    }
}

/// An atom or its single default negation (`a` or `~ a`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: AtomId,
    pub negated: bool,
}

impl Literal {
    pub fn pos(atom: AtomId) -> Literal {
        Literal {
            atom,
            negated: false,
        }
    }

    pub fn neg(atom: AtomId) -> Literal {
        Literal {
            atom,
            negated: true,
        }
    }
}

/// A literal under the epistemic operator, `not l`. Two epistemic literals
/// compare equal exactly when their inner literals do.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EpistemicLiteral(pub Literal);

/// One conjunct of a rule body.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BodyElement {
    /// Plain atom `a`.
    Pos(AtomId),
    /// Default negation of a literal: `~ a` or `~ ~ a`.
    Neg(Literal),
    /// Epistemic literal `not a` or `not ~ a`.
    Epistemic(Literal),
    /// Default-negated epistemic literal `~ not a` or `~ not ~ a`.
    NegEpistemic(Literal),
}

impl BodyElement {
    pub fn atom(&self) -> AtomId {
        match *self {
            BodyElement::Pos(a) => a,
            BodyElement::Neg(l) | BodyElement::Epistemic(l) | BodyElement::NegEpistemic(l) => {
                l.atom
            }
        }
    }

    pub fn is_epistemic(&self) -> bool {
        matches!(
            self,
            BodyElement::Epistemic(_) | BodyElement::NegEpistemic(_)
        )
    }
}

/// A rule `h1 | ... | hk :- b1, ..., bm.` with set semantics for both head
/// and body. An empty head is falsity (a constraint); an empty body is truth.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rule {
    pub head: BTreeSet<AtomId>,
    pub body: BTreeSet<BodyElement>,
}

impl Rule {
    pub fn new(head: BTreeSet<AtomId>, body: BTreeSet<BodyElement>) -> Rule {
        Rule { head, body }
    }

    pub fn has_epistemic_part(&self) -> bool {
        self.body.iter().any(BodyElement::is_epistemic)
    }
}

/// A ground epistemic logic program over a fixed universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    universe: Universe,
    rules: BTreeSet<Rule>,
}

impl Program {
    pub fn new(universe: Universe, rules: BTreeSet<Rule>) -> Program {
        debug_assert!(rules
            .iter()
            .all(|r| r.head.iter().all(|a| a.index() < universe.len())
                && r.body.iter().all(|e| e.atom().index() < universe.len())));
        Program { universe, rules }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter()
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    pub fn atom_count(&self) -> usize {
        self.universe.len()
    }

    /// The epistemic literals occurring in rule bodies, plain or under `~`.
    pub fn epistemic_literals(&self) -> BTreeSet<EpistemicLiteral> {
        let mut out = BTreeSet::new();
        for rule in &self.rules {
            for elem in &rule.body {
                match elem {
                    BodyElement::Epistemic(l) | BodyElement::NegEpistemic(l) => {
                        out.insert(EpistemicLiteral(*l));
                    }
                    _ => {}
                }
            }
        }
        out
    }

    /// Atoms occurring inside some epistemic literal, as a bitmask.
    pub fn epistemic_atom_mask(&self) -> u32 {
        self.epistemic_literals()
            .iter()
            .fold(0, |m, e| m | e.0.atom.mask())
    }
}

/// Joins two programs: union of universes, union of rule sets. Rules are
/// re-interned by atom name into the combined universe.
pub fn union(p1: &Program, p2: &Program) -> Program {
    let universe = Universe::from_names(p1.universe.names().chain(p2.universe.names()));
    let mut rules = BTreeSet::new();
    for (prog, _) in [(p1, 0), (p2, 1)] {
        for rule in &prog.rules {
            rules.insert(remap_rule(rule, &prog.universe, &universe));
        }
    }
    Program::new(universe, rules)
}

/// Grows the universe by additional atom names, keeping the rules unchanged.
/// Names already present are ignored.
pub fn extend_universe<I, S>(p: &Program, extra: I) -> Program
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let universe = Universe::from_names(
        p.universe
            .names()
            .map(str::to_owned)
            .chain(extra.into_iter().map(Into::into)),
    );
    let rules = p
        .rules
        .iter()
        .map(|r| remap_rule(r, &p.universe, &universe))
        .collect();
    Program::new(universe, rules)
}

fn remap_rule(rule: &Rule, from: &Universe, to: &Universe) -> Rule {
    let conv = |a: AtomId| to.id(from.name(a)).expect("atom must survive remap");
    let head = rule.head.iter().map(|&a| conv(a)).collect();
    let body = rule
        .body
        .iter()
        .map(|e| match *e {
            BodyElement::Pos(a) => BodyElement::Pos(conv(a)),
            BodyElement::Neg(l) => BodyElement::Neg(Literal {
                atom: conv(l.atom),
                negated: l.negated,
            }),
            BodyElement::Epistemic(l) => BodyElement::Epistemic(Literal {
                atom: conv(l.atom),
                negated: l.negated,
            }),
            BodyElement::NegEpistemic(l) => BodyElement::NegEpistemic(Literal {
                atom: conv(l.atom),
                negated: l.negated,
            }),
        })
        .collect();
    Rule::new(head, body)
}

/// A two-valued interpretation: the set of true atoms, as a bitmask over the
/// ids of some universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Interpretation(pub u32);

impl Interpretation {
    pub fn empty() -> Interpretation {
        Interpretation(0)
    }

    pub fn contains(self, atom: AtomId) -> bool {
        self.0 & atom.mask() != 0
    }

    pub fn insert(&mut self, atom: AtomId) {
        self.0 |= atom.mask();
    }

    pub fn is_subset(self, other: Interpretation) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Interpretation) -> bool {
        self.0 != other.0 && self.is_subset(other)
    }

    pub fn atoms(self) -> impl Iterator<Item = AtomId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros();
                bits &= bits - 1;
                Some(AtomId(i))
            }
        })
    }

    /// Atom names in universe order, for rendering and serialization.
    pub fn to_names(self, universe: &Universe) -> Vec<String> {
        self.atoms().map(|a| universe.name(a).to_owned()).collect()
    }
}

/// A consistent set of literals read as a three-valued interpretation:
/// atoms in `pos` are true, atoms in `neg` are false, the rest are unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cwi {
    pos: u32,
    neg: u32,
}

impl Cwi {
    pub fn new(pos: u32, neg: u32) -> Cwi {
        assert_eq!(pos & neg, 0, "an atom cannot be both true and false");
        Cwi { pos, neg }
    }

    /// The all-unknown interpretation.
    pub fn unknown_all() -> Cwi {
        Cwi { pos: 0, neg: 0 }
    }

    pub fn pos_mask(self) -> u32 {
        self.pos
    }

    pub fn neg_mask(self) -> u32 {
        self.neg
    }

    pub fn unknown_mask(self, universe: &Universe) -> u32 {
        universe.full_mask() & !(self.pos | self.neg)
    }

    /// Does the literal set contain the given literal?
    pub fn holds(self, literal: Literal) -> bool {
        if literal.negated {
            self.neg & literal.atom.mask() != 0
        } else {
            self.pos & literal.atom.mask() != 0
        }
    }

    /// Literal-set inclusion: every literal of `self` is a literal of `other`.
    pub fn is_subset(self, other: Cwi) -> bool {
        self.pos & !other.pos == 0 && self.neg & !other.neg == 0
    }

    pub fn is_proper_subset(self, other: Cwi) -> bool {
        self.is_subset(other) && (self.pos != other.pos || self.neg != other.neg)
    }
}

fn join_names(universe: &Universe, mask: u32, out: &mut String) {
    let mut first = true;
    for atom in Interpretation(mask).atoms() {
        if !first {
            out.push(' ');
        }
        out.push_str(universe.name(atom));
        first = false;
    }
}

/// Renders a three-valued interpretation as `T: ... / F: ... / U: ...`.
pub fn render_cwi(cwi: Cwi, universe: &Universe) -> String {
    let mut s = String::from("T: ");
    join_names(universe, cwi.pos_mask(), &mut s);
    s.push_str(" / F: ");
    join_names(universe, cwi.neg_mask(), &mut s);
    s.push_str(" / U: ");
    join_names(universe, cwi.unknown_mask(universe), &mut s);
    s
}

/// Renders an interpretation as `{a, b}`.
pub fn render_interpretation(i: Interpretation, universe: &Universe) -> String {
    let names = i.to_names(universe);
    format!("{{{}}}", names.join(", "))
}

struct DisplayElement<'a>(&'a BodyElement, &'a Universe);

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let DisplayElement(elem, universe) = self;
        match **elem {
            BodyElement::Pos(a) => write!(f, "{}", universe.name(a)),
            BodyElement::Neg(l) => {
                if l.negated {
                    write!(f, "~ ~ {}", universe.name(l.atom))
                } else {
                    write!(f, "~ {}", universe.name(l.atom))
                }
            }
            BodyElement::Epistemic(l) => {
                if l.negated {
                    write!(f, "not ~ {}", universe.name(l.atom))
                } else {
                    write!(f, "not {}", universe.name(l.atom))
                }
            }
            BodyElement::NegEpistemic(l) => {
                if l.negated {
                    write!(f, "~ not ~ {}", universe.name(l.atom))
                } else {
                    write!(f, "~ not {}", universe.name(l.atom))
                }
            }
        }
    }
}

/// Renders one rule in the concrete syntax, without a trailing newline.
pub fn render_rule(rule: &Rule, universe: &Universe) -> String {
    let mut s = String::new();
    let head: Vec<&str> = rule.head.iter().map(|&a| universe.name(a)).collect();
    s.push_str(&head.join(" | "));
    if !rule.body.is_empty() || head.is_empty() {
        if !head.is_empty() {
            s.push(' ');
        }
        s.push_str(":-");
        let body: Vec<String> = rule
            .body
            .iter()
            .map(|e| DisplayElement(e, universe).to_string())
            .collect();
        if body.is_empty() {
            s.push(' ');
        } else {
            s.push(' ');
            s.push_str(&body.join(", "));
        }
    }
    s.push('.');
    s
}

impl fmt::Display for Program {
    /// Prints a program in the concrete syntax. Parsing the output yields a
    /// structurally identical program: atoms that appear in no rule are
    /// preserved through a leading `#atoms` directive.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut occurring = 0u32;
        for rule in &self.rules {
            for &a in &rule.head {
                occurring |= a.mask();
            }
            for e in &rule.body {
                occurring |= e.atom().mask();
            }
        }
        let silent: Vec<&str> = self
            .universe
            .atoms()
            .filter(|a| occurring & a.mask() == 0)
            .map(|a| self.universe.name(a))
            .collect();
        if !silent.is_empty() {
            writeln!(f, "#atoms {}.", silent.join(", "))?;
        }
        for rule in &self.rules {
            writeln!(f, "{}", render_rule(rule, &self.universe))?;
        }
        Ok(())
    }
}

/// Iterates all three-valued interpretations over `n` atoms, ordered by
/// `(pos, neg)` bitmask value. The order is deterministic, so callers that
/// report the first interpretation with some property always report the
/// same one.
pub fn all_cwis(n: usize) -> impl Iterator<Item = Cwi> {
    assert!(n <= MAX_ATOMS);
    let full: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let mut pos: u32 = 0;
    let mut neg: u32 = 0;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let item = Cwi::new(pos, neg);
        let free = full & !pos;
        if neg == free {
            if pos == full {
                done = true;
            } else {
                pos += 1;
                neg = 0;
            }
        } else {
            neg = (neg.wrapping_sub(free)) & free;
        }
        Some(item)
    })
}
