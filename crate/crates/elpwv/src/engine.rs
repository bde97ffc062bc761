//! World views of epistemic programs, both three-valued and guess-based.
//!
//! The three-valued route evaluates a candidate interpretation `I` that
//! sorts atoms into true, false and unknown: epistemic literals are resolved
//! against `I`, the resulting plain program is solved, and `I` must be
//! compatible with the answer sets that come back. The guess-based route
//! instead picks the set of epistemic literals assumed to hold, resolves the
//! program against that guess, and checks the guess against the answer sets.
//! Both routes agree once the program mentions every epistemic literal over
//! its universe, which [`with_all_epistemic_literals`] arranges without
//! changing any world view; [`check_correspondence`] exercises that bridge.
//!
//! A world view is a subset-minimal compatible interpretation (read as a set
//! of literals), mirrored on the guess side by subset-maximal guesses.

use std::collections::BTreeSet;

use crate::asp::compile_plain;
use crate::syntax::{
    BodyElement, Cwi, EpistemicLiteral, Interpretation, Literal, Program, Rule, Universe,
};

fn reduct_by(program: &Program, mut to_neg: impl FnMut(Literal) -> bool) -> Program {
    let mut rules = BTreeSet::new();
    'rules: for rule in program.rules() {
        let mut body = BTreeSet::new();
        for elem in &rule.body {
            match *elem {
                BodyElement::Pos(_) | BodyElement::Neg(_) => {
                    body.insert(*elem);
                }
                BodyElement::Epistemic(l) => {
                    if to_neg(l) {
                        body.insert(BodyElement::Neg(l));
                    }
                }
                BodyElement::NegEpistemic(l) => {
                    if to_neg(l) {
                        body.insert(BodyElement::Neg(Literal {
                            atom: l.atom,
                            negated: !l.negated,
                        }));
                    } else {
                        continue 'rules;
                    }
                }
            }
        }
        rules.insert(Rule::new(rule.head.clone(), body));
    }
    Program::new(program.universe().clone(), rules)
}

/// Resolves epistemic negation against a three-valued interpretation:
/// `not l` becomes `~ l` when `l` is a literal of `i` and disappears
/// otherwise. A `~ not l` element dually becomes `~`-of-the-complement or
/// makes its rule vacuous. The result is a plain program.
pub fn cwi_reduct(program: &Program, i: Cwi) -> Program {
    reduct_by(program, |l| i.holds(l))
}

/// Resolves epistemic negation against a guess: `not l` disappears when it
/// is in the guess and becomes `~ l` otherwise.
pub fn guess_reduct(program: &Program, guess: &BTreeSet<EpistemicLiteral>) -> Program {
    reduct_by(program, |l| !guess.contains(&EpistemicLiteral(l)))
}

/// Whether `i` is compatible with a collection of answer sets: the
/// collection is nonempty, true atoms are in every member, false atoms in
/// none, and each unknown atom is in some member and missing from another.
pub fn compatible(i: Cwi, collection: &[Interpretation], universe: &Universe) -> bool {
    if collection.is_empty() {
        return false;
    }
    let mut inter = universe.full_mask();
    let mut uni = 0u32;
    for j in collection {
        inter &= j.0;
        uni |= j.0;
    }
    i.pos_mask() & !inter == 0
        && i.neg_mask() & uni == 0
        && i.unknown_mask(universe) & !(uni & !inter) == 0
}

/// The one interpretation that can be compatible with the collection:
/// intersection atoms are true, untouched atoms are false, the rest are
/// unknown. `None` when the collection is empty.
pub fn unique_compatible(collection: &[Interpretation], universe: &Universe) -> Option<Cwi> {
    if collection.is_empty() {
        return None;
    }
    let mut inter = universe.full_mask();
    let mut uni = 0u32;
    for j in collection {
        inter &= j.0;
        uni |= j.0;
    }
    Some(Cwi::new(inter, universe.full_mask() & !uni))
}

/// Whether `i` is a candidate world view: compatible with the answer sets
/// of its own reduct.
pub fn is_cwv(program: &Program, i: Cwi) -> bool {
    let reduct = compile_plain(&cwi_reduct(program, i)).expect("reduct is plain");
    compatible(i, &reduct.answer_sets(), program.universe())
}

/// A candidate world view together with the answer sets of its reduct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateWorldView {
    pub interpretation: Cwi,
    pub answer_sets: Vec<Interpretation>,
}

fn signature(elits: &[EpistemicLiteral], i: Cwi) -> u64 {
    let mut sig = 0u64;
    for (j, e) in elits.iter().enumerate() {
        if i.holds(e.0) {
            sig |= 1 << j;
        }
    }
    sig
}

/// All candidate world views, sorted by interpretation.
///
/// Only the atoms inside epistemic literals influence a reduct, so the
/// search walks the three-valued assignments of those atoms instead of the
/// whole universe, solves each distinct reduct once, and reconstructs the
/// only interpretation the resulting answer sets could be compatible with.
/// That interpretation is a candidate world view exactly when it induces
/// the reduct it came from.
pub fn candidate_world_views(program: &Program) -> Vec<CandidateWorldView> {
    let universe = program.universe();
    let elits: Vec<EpistemicLiteral> = program.epistemic_literals().into_iter().collect();
    let e_atoms: Vec<crate::syntax::AtomId> = universe
        .atoms()
        .filter(|a| program.epistemic_atom_mask() & a.mask() != 0)
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let total = 3u64.pow(e_atoms.len() as u32);
    for idx in 0..total {
        let mut rest = idx;
        let mut pos = 0u32;
        let mut neg = 0u32;
        for &a in &e_atoms {
            match rest % 3 {
                1 => pos |= a.mask(),
                2 => neg |= a.mask(),
                _ => {}
            }
            rest /= 3;
        }
        let class = Cwi::new(pos, neg);
        let sig = signature(&elits, class);
        if !seen.insert(sig) {
            continue;
        }
        let reduct = compile_plain(&cwi_reduct(program, class)).expect("reduct is plain");
        let sets = reduct.answer_sets();
        if sets.is_empty() {
            continue;
        }
        let candidate = unique_compatible(&sets, universe).expect("collection is nonempty");
        if signature(&elits, candidate) == sig {
            out.push(CandidateWorldView {
                interpretation: candidate,
                answer_sets: sets,
            });
        }
    }
    out.sort_by_key(|c| c.interpretation);
    out
}

/// The subset-minimal candidates, under literal-set inclusion.
pub fn minimal_world_views(candidates: &[CandidateWorldView]) -> Vec<CandidateWorldView> {
    candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|d| d.interpretation.is_proper_subset(c.interpretation))
        })
        .cloned()
        .collect()
}

/// The world views of the program: its subset-minimal candidate world views.
pub fn world_views(program: &Program) -> Vec<CandidateWorldView> {
    minimal_world_views(&candidate_world_views(program))
}

/// An admissible guess together with the answer sets of its reduct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuessWorldView {
    pub guess: BTreeSet<EpistemicLiteral>,
    pub answer_sets: Vec<Interpretation>,
}

fn model_holds(m: Interpretation, l: Literal) -> bool {
    m.contains(l.atom) != l.negated
}

/// All admissible guesses: subsets of the program's epistemic literals
/// whose reduct has answer sets, every guessed `not l` being refuted by
/// some answer set and every unguessed one being settled by all of them.
pub fn se_candidate_world_views(program: &Program) -> Vec<GuessWorldView> {
    let elits: Vec<EpistemicLiteral> = program.epistemic_literals().into_iter().collect();
    let k = elits.len();

    // A guess omitting both `not a` and `not ~ a` when the program mentions
    // both demands answer sets that contain and avoid `a` at once; skip it.
    let mut pair_masks = Vec::new();
    for (j1, e1) in elits.iter().enumerate() {
        if e1.0.negated {
            continue;
        }
        if let Some(j2) = elits
            .iter()
            .position(|e2| e2.0.atom == e1.0.atom && e2.0.negated)
        {
            pair_masks.push((1u64 << j1) | (1u64 << j2));
        }
    }

    let mut out = Vec::new();
    for phi in 0..(1u128 << k) {
        let phi = phi as u64;
        if pair_masks.iter().any(|&pm| phi & pm == 0) {
            continue;
        }
        let guess: BTreeSet<EpistemicLiteral> = elits
            .iter()
            .enumerate()
            .filter(|(j, _)| phi & (1 << j) != 0)
            .map(|(_, e)| *e)
            .collect();
        let reduct = compile_plain(&guess_reduct(program, &guess)).expect("reduct is plain");
        let sets = reduct.answer_sets();
        if sets.is_empty() {
            continue;
        }
        let admissible = elits.iter().enumerate().all(|(j, e)| {
            let refuted = sets.iter().any(|&m| !model_holds(m, e.0));
            refuted == (phi & (1 << j) != 0)
        });
        if admissible {
            out.push(GuessWorldView {
                guess,
                answer_sets: sets,
            });
        }
    }
    out
}

/// The subset-maximal admissible guesses.
pub fn maximal_se_world_views(candidates: &[GuessWorldView]) -> Vec<GuessWorldView> {
    candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|d| c.guess.is_subset(&d.guess) && c.guess != d.guess)
        })
        .cloned()
        .collect()
}

/// The guess-based world views of the program: subset-maximal among the
/// admissible guesses.
pub fn se_world_views(program: &Program) -> Vec<GuessWorldView> {
    maximal_se_world_views(&se_candidate_world_views(program))
}

/// Extends the program so every epistemic literal over its universe occurs,
/// by adding one vacuous constraint `:- a, ~ a, not l.` per missing literal.
/// The contradictory `a, ~ a` prefix keeps each added rule inert in every
/// reduct, so candidate world views and admissible guesses are unchanged
/// apart from ranging over the full set of epistemic literals.
pub fn with_all_epistemic_literals(program: &Program) -> Program {
    let present = program.epistemic_literals();
    let mut rules: BTreeSet<Rule> = program.rules().cloned().collect();
    for atom in program.universe().atoms() {
        for negated in [false, true] {
            let l = Literal { atom, negated };
            if present.contains(&EpistemicLiteral(l)) {
                continue;
            }
            let body = BTreeSet::from([
                BodyElement::Pos(atom),
                BodyElement::Neg(Literal::pos(atom)),
                BodyElement::Epistemic(l),
            ]);
            rules.insert(Rule::new(BTreeSet::new(), body));
        }
    }
    Program::new(program.universe().clone(), rules)
}

/// The guess that selects `not a` for false or unknown atoms and `not ~ a`
/// for true or unknown ones. Smaller interpretations map to larger guesses.
pub fn cwi_to_guess(i: Cwi, universe: &Universe) -> BTreeSet<EpistemicLiteral> {
    let mut out = BTreeSet::new();
    for a in universe.atoms() {
        if i.pos_mask() & a.mask() == 0 {
            out.insert(EpistemicLiteral(Literal::pos(a)));
        }
        if i.neg_mask() & a.mask() == 0 {
            out.insert(EpistemicLiteral(Literal::neg(a)));
        }
    }
    out
}

/// Inverse of [`cwi_to_guess`]: reads each atom's pair of epistemic literals
/// off the guess. `None` when some atom has neither, which no admissible
/// guess over a full epistemic vocabulary can exhibit.
pub fn guess_to_cwi(guess: &BTreeSet<EpistemicLiteral>, universe: &Universe) -> Option<Cwi> {
    let mut pos = 0u32;
    let mut neg = 0u32;
    for a in universe.atoms() {
        let has_not = guess.contains(&EpistemicLiteral(Literal::pos(a)));
        let has_not_neg = guess.contains(&EpistemicLiteral(Literal::neg(a)));
        match (has_not, has_not_neg) {
            (false, true) => pos |= a.mask(),
            (true, false) => neg |= a.mask(),
            (true, true) => {}
            (false, false) => return None,
        }
    }
    Some(Cwi::new(pos, neg))
}

/// One matched candidate world view / admissible guess pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondencePair {
    pub interpretation: Cwi,
    pub guess: BTreeSet<EpistemicLiteral>,
    pub answer_sets: Vec<Interpretation>,
}

/// Outcome of matching the three-valued and guess-based routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    /// Every candidate world view paired with exactly one admissible guess
    /// of the completed program, with identical answer sets, and vice versa.
    pub holds: bool,
    pub pairs: Vec<CorrespondencePair>,
    pub unmatched_interpretations: Vec<Cwi>,
    pub unmatched_guesses: Vec<BTreeSet<EpistemicLiteral>>,
}

/// Computes the candidate world views of the program and the admissible
/// guesses of its completion under [`with_all_epistemic_literals`], then
/// pairs them through [`cwi_to_guess`] and compares answer sets.
pub fn check_correspondence(program: &Program) -> CorrespondenceReport {
    let universe = program.universe();
    let cwvs = candidate_world_views(program);
    let saturated = with_all_epistemic_literals(program);
    let mut guesses = se_candidate_world_views(&saturated);

    let mut pairs = Vec::new();
    let mut unmatched_interpretations = Vec::new();
    for c in &cwvs {
        let want = cwi_to_guess(c.interpretation, universe);
        if let Some(idx) = guesses
            .iter()
            .position(|g| g.guess == want && g.answer_sets == c.answer_sets)
        {
            let g = guesses.remove(idx);
            pairs.push(CorrespondencePair {
                interpretation: c.interpretation,
                guess: g.guess,
                answer_sets: c.answer_sets.clone(),
            });
        } else {
            unmatched_interpretations.push(c.interpretation);
        }
    }
    let unmatched_guesses: Vec<BTreeSet<EpistemicLiteral>> =
        guesses.into_iter().map(|g| g.guess).collect();
    CorrespondenceReport {
        holds: unmatched_interpretations.is_empty() && unmatched_guesses.is_empty(),
        pairs,
        unmatched_interpretations,
        unmatched_guesses,
    }
}
