//! Equivalence of epistemic programs, from world-view agreement to strong
//! equivalence.
//!
//! Two programs can agree on their world views yet diverge once embedded in
//! a larger program. The notions here form a ladder: candidate-world-view
//! and world-view equivalence compare the three-valued results, the
//! guess-based variants compare answer-set collections, and strong
//! equivalence compares SE-functions, which assign every three-valued
//! interpretation the SE-models of the induced reduct, gated by whether
//! some nonempty set of the reduct's models is compatible with the
//! interpretation. Equal SE-functions survive any program extension.
//!
//! Programs over different universes are aligned to the union universe
//! first; absent atoms are false in every world view, so alignment shifts
//! both sides uniformly.

use std::collections::BTreeSet;

use crate::asp::{compile_plain, SeModel};
use crate::engine::{compatible, cwi_reduct, se_candidate_world_views, se_world_views};
use crate::syntax::{all_cwis, extend_universe, Cwi, Interpretation, Program, Universe};

/// Which comparison to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivalenceNotion {
    /// Same candidate world views.
    Cwv,
    /// Same world views.
    Wv,
    /// Same admissible-guess answer-set collections.
    SeCwv,
    /// Same answer-set collections under subset-maximal guesses.
    SeWv,
    /// Same SE-function, hence interchangeable under any extension.
    Strong,
}

impl EquivalenceNotion {
    /// The flag spelling used on the command line and in JSON output.
    pub fn label(self) -> &'static str {
        match self {
            EquivalenceNotion::Cwv => "cwv",
            EquivalenceNotion::Wv => "wv",
            EquivalenceNotion::SeCwv => "se-cwv",
            EquivalenceNotion::SeWv => "se-wv",
            EquivalenceNotion::Strong => "strong",
        }
    }
}

/// Which program a counterexample belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    P1,
    P2,
}

impl Side {
    pub fn label(self) -> &'static str {
        match self {
            Side::P1 => "p1",
            Side::P2 => "p2",
        }
    }
}

/// Evidence that the two programs differ under the chosen notion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    /// A (candidate) world view of one program only.
    WorldView { cwi: Cwi, only_in: Side },
    /// An admissible guess's answer-set collection reached by one program only.
    AnswerSetFamily {
        family: Vec<Interpretation>,
        only_in: Side,
    },
    /// An interpretation whose SE-functions differ, with one separating
    /// SE-model.
    SeFunction {
        cwi: Cwi,
        se_model: SeModel,
        only_in: Side,
    },
}

/// The outcome of an equivalence check, over the aligned universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    pub notion: EquivalenceNotion,
    pub equal: bool,
    pub universe: Universe,
    pub counterexample: Option<Counterexample>,
}

fn align(p1: &Program, p2: &Program) -> (Program, Program, Universe) {
    let n1: Vec<String> = p1.universe().names().map(str::to_owned).collect();
    let n2: Vec<String> = p2.universe().names().map(str::to_owned).collect();
    let a1 = extend_universe(p1, n2);
    let a2 = extend_universe(p2, n1);
    let universe = a1.universe().clone();
    (a1, a2, universe)
}

/// The SE-function of the program at `i`: the SE-models of the reduct when
/// some nonempty subset of the reduct's models is compatible with `i`, and
/// the empty set otherwise. Compatibility is decided on the filtered models
/// that already agree with the true and false parts of `i`: any compatible
/// subset lies inside that filter, and the filter itself is compatible
/// exactly when it is nonempty and covers the unknown atoms both ways.
pub fn se_function(program: &Program, i: Cwi) -> Vec<SeModel> {
    let reduct = compile_plain(&cwi_reduct(program, i)).expect("reduct is plain");
    let filtered: Vec<Interpretation> = reduct
        .models()
        .into_iter()
        .filter(|j| i.pos_mask() & !j.0 == 0 && i.neg_mask() & j.0 == 0)
        .collect();
    if compatible(i, &filtered, program.universe()) {
        reduct.se_models()
    } else {
        Vec::new()
    }
}

fn first_difference<T: Ord + Clone>(s1: &BTreeSet<T>, s2: &BTreeSet<T>) -> Option<(T, Side)> {
    let d1 = s1.difference(s2).next();
    let d2 = s2.difference(s1).next();
    match (d1, d2) {
        (Some(a), Some(b)) => {
            if a <= b {
                Some((a.clone(), Side::P1))
            } else {
                Some((b.clone(), Side::P2))
            }
        }
        (Some(a), None) => Some((a.clone(), Side::P1)),
        (None, Some(b)) => Some((b.clone(), Side::P2)),
        (None, None) => None,
    }
}

fn compare_cwi_sets(
    notion: EquivalenceNotion,
    universe: Universe,
    s1: BTreeSet<Cwi>,
    s2: BTreeSet<Cwi>,
) -> EquivalenceVerdict {
    let counterexample = first_difference(&s1, &s2)
        .map(|(cwi, only_in)| Counterexample::WorldView { cwi, only_in });
    EquivalenceVerdict {
        notion,
        equal: counterexample.is_none(),
        universe,
        counterexample,
    }
}

fn compare_families(
    notion: EquivalenceNotion,
    universe: Universe,
    s1: BTreeSet<Vec<Interpretation>>,
    s2: BTreeSet<Vec<Interpretation>>,
) -> EquivalenceVerdict {
    let counterexample = first_difference(&s1, &s2)
        .map(|(family, only_in)| Counterexample::AnswerSetFamily { family, only_in });
    EquivalenceVerdict {
        notion,
        equal: counterexample.is_none(),
        universe,
        counterexample,
    }
}

/// Runs the chosen equivalence check over the union universe.
pub fn equivalent(
    p1: &Program,
    p2: &Program,
    notion: EquivalenceNotion,
) -> EquivalenceVerdict {
    let (a1, a2, universe) = align(p1, p2);
    match notion {
        EquivalenceNotion::Cwv => {
            let s1 = cwi_set(crate::engine::candidate_world_views(&a1));
            let s2 = cwi_set(crate::engine::candidate_world_views(&a2));
            compare_cwi_sets(notion, universe, s1, s2)
        }
        EquivalenceNotion::Wv => {
            let s1 = cwi_set(crate::engine::world_views(&a1));
            let s2 = cwi_set(crate::engine::world_views(&a2));
            compare_cwi_sets(notion, universe, s1, s2)
        }
        EquivalenceNotion::SeCwv => {
            let s1 = family_set(se_candidate_world_views(&a1));
            let s2 = family_set(se_candidate_world_views(&a2));
            compare_families(notion, universe, s1, s2)
        }
        EquivalenceNotion::SeWv => {
            let s1 = family_set(se_world_views(&a1));
            let s2 = family_set(se_world_views(&a2));
            compare_families(notion, universe, s1, s2)
        }
        EquivalenceNotion::Strong => {
            for i in all_cwis(universe.len()) {
                let f1: BTreeSet<SeModel> = se_function(&a1, i).into_iter().collect();
                let f2: BTreeSet<SeModel> = se_function(&a2, i).into_iter().collect();
                if f1 != f2 {
                    let (se_model, only_in) =
                        first_difference(&f1, &f2).expect("sets differ");
                    return EquivalenceVerdict {
                        notion,
                        equal: false,
                        universe,
                        counterexample: Some(Counterexample::SeFunction {
                            cwi: i,
                            se_model,
                            only_in,
                        }),
                    };
                }
            }
            EquivalenceVerdict {
                notion,
                equal: true,
                universe,
                counterexample: None,
            }
        }
    }
}

fn cwi_set(candidates: Vec<crate::engine::CandidateWorldView>) -> BTreeSet<Cwi> {
    candidates.into_iter().map(|c| c.interpretation).collect()
}

fn family_set(guesses: Vec<crate::engine::GuessWorldView>) -> BTreeSet<Vec<Interpretation>> {
    guesses.into_iter().map(|g| g.answer_sets).collect()
}
