//! Stable textual and JSON presentations of solver results.
//!
//! Every serializer here is deterministic: atom lists are sorted, maps are
//! ordered, and struct fields serialize in a fixed order, so repeated runs
//! on the same input produce byte-identical output.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::engine::{CandidateWorldView, CorrespondenceReport, GuessWorldView};
use crate::equivalence::{Counterexample, EquivalenceVerdict};
use crate::qsat::{Guarantee, QsatOutcome, XAssignment};
use crate::syntax::{
    render_cwi, render_interpretation, BodyElement, Cwi, EpistemicLiteral, Interpretation,
    Literal, Program, Rule, Universe, MAX_ATOMS,
};

/// JSON form of a ground program.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProgramJson {
    pub atoms: Vec<String>,
    pub rules: Vec<RuleJson>,
}

/// One rule: head atoms and body elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleJson {
    pub head: Vec<String>,
    pub body: Vec<BodyElementJson>,
}

/// One body element. `kind` is `pos`, `neg`, `nneg`, `epis` or `negepis`;
/// for the epistemic kinds `inner` gives the polarity of the literal under
/// `not` and defaults to `pos` when absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BodyElementJson {
    pub kind: String,
    pub atom: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inner: Option<String>,
}

/// Error converting a JSON document back into a program.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct ProgramJsonError(pub String);

/// Serializes a program into its JSON form.
pub fn program_json(program: &Program) -> ProgramJson {
    let universe = program.universe();
    let name = |a| universe.name(a).to_owned();
    let rules = program
        .rules()
        .map(|rule| RuleJson {
            head: rule.head.iter().map(|&a| name(a)).collect(),
            body: rule
                .body
                .iter()
                .map(|elem| {
                    let (kind, atom, inner) = match *elem {
                        BodyElement::Pos(a) => ("pos", a, None),
                        BodyElement::Neg(l) if !l.negated => ("neg", l.atom, None),
                        BodyElement::Neg(l) => ("nneg", l.atom, None),
                        BodyElement::Epistemic(l) => ("epis", l.atom, Some(l.negated)),
                        BodyElement::NegEpistemic(l) => ("negepis", l.atom, Some(l.negated)),
                    };
                    BodyElementJson {
                        kind: kind.to_owned(),
                        atom: name(atom),
                        inner: inner.map(|negated| {
                            if negated { "neg".to_owned() } else { "pos".to_owned() }
                        }),
                    }
                })
                .collect(),
        })
        .collect();
    ProgramJson {
        atoms: universe.names().map(str::to_owned).collect(),
        rules,
    }
}

/// Rebuilds a program from its JSON form.
pub fn program_from_json(doc: &ProgramJson) -> Result<Program, ProgramJsonError> {
    let distinct: BTreeSet<&str> = doc.atoms.iter().map(String::as_str).collect();
    if distinct.len() > MAX_ATOMS {
        return Err(ProgramJsonError(format!(
            "{} atoms exceed the {MAX_ATOMS}-atom limit",
            distinct.len()
        )));
    }
    let universe = Universe::from_names(doc.atoms.clone());
    let atom = |name: &str| {
        universe
            .id(name)
            .ok_or_else(|| ProgramJsonError(format!("atom '{name}' is not listed in atoms")))
    };
    let inner_negated = |inner: &Option<String>| match inner.as_deref() {
        None | Some("pos") => Ok(false),
        Some("neg") => Ok(true),
        Some(other) => Err(ProgramJsonError(format!("unknown inner polarity '{other}'"))),
    };
    let mut rules = BTreeSet::new();
    for rule in &doc.rules {
        let mut head = BTreeSet::new();
        for name in &rule.head {
            head.insert(atom(name)?);
        }
        let mut body = BTreeSet::new();
        for elem in &rule.body {
            let a = atom(&elem.atom)?;
            let element = match elem.kind.as_str() {
                "pos" => BodyElement::Pos(a),
                "neg" => BodyElement::Neg(Literal::pos(a)),
                "nneg" => BodyElement::Neg(Literal::neg(a)),
                "epis" if inner_negated(&elem.inner)? => BodyElement::Epistemic(Literal::neg(a)),
                "epis" => BodyElement::Epistemic(Literal::pos(a)),
                "negepis" if inner_negated(&elem.inner)? => {
                    BodyElement::NegEpistemic(Literal::neg(a))
                }
                "negepis" => BodyElement::NegEpistemic(Literal::pos(a)),
                other => {
                    return Err(ProgramJsonError(format!("unknown body kind '{other}'")))
                }
            };
            body.insert(element);
        }
        rules.insert(Rule::new(head, body));
    }
    Ok(Program::new(universe, rules))
}

/// JSON form of a three-valued interpretation, keyed `true`/`false`/`unknown`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CwiJson {
    #[serde(rename = "true")]
    pub true_atoms: Vec<String>,
    #[serde(rename = "false")]
    pub false_atoms: Vec<String>,
    pub unknown: Vec<String>,
}

fn mask_names(mask: u32, universe: &Universe) -> Vec<String> {
    Interpretation(mask).to_names(universe)
}

/// Serializes one interpretation.
pub fn cwi_json(i: Cwi, universe: &Universe) -> CwiJson {
    CwiJson {
        true_atoms: mask_names(i.pos_mask(), universe),
        false_atoms: mask_names(i.neg_mask(), universe),
        unknown: mask_names(i.unknown_mask(universe), universe),
    }
}

/// JSON result of world-view enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WorldViewResultJson {
    pub world_views: Vec<CwiJson>,
    pub candidate_world_views: Vec<CwiJson>,
}

/// Assembles the enumeration result for JSON output.
pub fn world_view_result_json(
    world_views: &[CandidateWorldView],
    candidates: &[CandidateWorldView],
    universe: &Universe,
) -> WorldViewResultJson {
    WorldViewResultJson {
        world_views: world_views
            .iter()
            .map(|c| cwi_json(c.interpretation, universe))
            .collect(),
        candidate_world_views: candidates
            .iter()
            .map(|c| cwi_json(c.interpretation, universe))
            .collect(),
    }
}

/// Renders an epistemic literal as `not a` or `not ~ a`.
pub fn render_epistemic_literal(e: &EpistemicLiteral, universe: &Universe) -> String {
    if e.0.negated {
        format!("not ~ {}", universe.name(e.0.atom))
    } else {
        format!("not {}", universe.name(e.0.atom))
    }
}

fn guess_strings(guess: &BTreeSet<EpistemicLiteral>, universe: &Universe) -> Vec<String> {
    guess
        .iter()
        .map(|e| render_epistemic_literal(e, universe))
        .collect()
}

fn family_names(family: &[Interpretation], universe: &Universe) -> Vec<Vec<String>> {
    family.iter().map(|m| m.to_names(universe)).collect()
}

/// JSON form of one guess-based world view.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GuessWorldViewJson {
    pub guess: Vec<String>,
    pub answer_sets: Vec<Vec<String>>,
}

/// JSON result of guess-based enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeResultJson {
    pub se_world_views: Vec<GuessWorldViewJson>,
    pub se_candidate_world_views: Vec<GuessWorldViewJson>,
}

/// Assembles the guess-based enumeration result for JSON output.
pub fn se_result_json(
    world_views: &[GuessWorldView],
    candidates: &[GuessWorldView],
    universe: &Universe,
) -> SeResultJson {
    let convert = |views: &[GuessWorldView]| {
        views
            .iter()
            .map(|v| GuessWorldViewJson {
                guess: guess_strings(&v.guess, universe),
                answer_sets: family_names(&v.answer_sets, universe),
            })
            .collect()
    };
    SeResultJson {
        se_world_views: convert(world_views),
        se_candidate_world_views: convert(candidates),
    }
}

/// JSON form of an SE-model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeModelJson {
    pub x: Vec<String>,
    pub y: Vec<String>,
}

/// JSON form of an equivalence counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cwi: Option<CwiJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<Vec<Vec<String>>>,
    pub only_in: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub se_model: Option<SeModelJson>,
}

/// JSON form of an equivalence verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictJson {
    pub notion: String,
    pub equal: bool,
    pub universe: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleJson>,
}

/// Serializes an equivalence verdict.
pub fn verdict_json(verdict: &EquivalenceVerdict) -> VerdictJson {
    let universe = &verdict.universe;
    let counterexample = verdict.counterexample.as_ref().map(|c| match c {
        Counterexample::WorldView { cwi, only_in } => CounterexampleJson {
            cwi: Some(cwi_json(*cwi, universe)),
            family: None,
            only_in: only_in.label().to_owned(),
            se_model: None,
        },
        Counterexample::AnswerSetFamily { family, only_in } => CounterexampleJson {
            cwi: None,
            family: Some(family_names(family, universe)),
            only_in: only_in.label().to_owned(),
            se_model: None,
        },
        Counterexample::SeFunction {
            cwi,
            se_model,
            only_in,
        } => CounterexampleJson {
            cwi: Some(cwi_json(*cwi, universe)),
            family: None,
            only_in: only_in.label().to_owned(),
            se_model: Some(SeModelJson {
                x: se_model.x.to_names(universe),
                y: se_model.y.to_names(universe),
            }),
        },
    });
    VerdictJson {
        notion: verdict.notion.label().to_owned(),
        equal: verdict.equal,
        universe: universe.names().map(str::to_owned).collect(),
        counterexample,
    }
}

/// JSON form of one interpretation-to-guess pairing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondencePairJson {
    pub interpretation: CwiJson,
    pub guess: Vec<String>,
    pub answer_sets: Vec<Vec<String>>,
}

/// JSON form of a correspondence report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondenceJson {
    pub holds: bool,
    pub pairs: Vec<CorrespondencePairJson>,
    pub unmatched_interpretations: Vec<CwiJson>,
    pub unmatched_guesses: Vec<Vec<String>>,
}

/// Serializes a correspondence report.
pub fn correspondence_json(report: &CorrespondenceReport, universe: &Universe) -> CorrespondenceJson {
    CorrespondenceJson {
        holds: report.holds,
        pairs: report
            .pairs
            .iter()
            .map(|p| CorrespondencePairJson {
                interpretation: cwi_json(p.interpretation, universe),
                guess: guess_strings(&p.guess, universe),
                answer_sets: family_names(&p.answer_sets, universe),
            })
            .collect(),
        unmatched_interpretations: report
            .unmatched_interpretations
            .iter()
            .map(|&i| cwi_json(i, universe))
            .collect(),
        unmatched_guesses: report
            .unmatched_guesses
            .iter()
            .map(|g| guess_strings(g, universe))
            .collect(),
    }
}

fn guarantee_label(g: Guarantee) -> &'static str {
    match g {
        Guarantee::Ok => "ok",
        Guarantee::Void => "void",
    }
}

/// JSON form of a solved quantified-formula instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QsatSolveJson {
    pub satisfiable: bool,
    pub x_assignments: Vec<XAssignment>,
    pub guarantee: String,
}

/// Serializes a solving outcome.
pub fn qsat_solve_json(outcome: &QsatOutcome) -> QsatSolveJson {
    QsatSolveJson {
        satisfiable: outcome.satisfiable,
        x_assignments: outcome.x_assignments.clone(),
        guarantee: guarantee_label(outcome.guarantee).to_owned(),
    }
}

/// JSON summary of an encoded instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QsatEncodeJson {
    pub atom_count: usize,
    pub rule_count: usize,
    pub guarantee: String,
    pub program: ProgramJson,
}

/// Serializes an encoding summary together with the ground program.
pub fn qsat_encode_json(program: &Program, guarantee: Guarantee) -> QsatEncodeJson {
    QsatEncodeJson {
        atom_count: program.atom_count(),
        rule_count: program.rule_count(),
        guarantee: guarantee_label(guarantee).to_owned(),
        program: program_json(program),
    }
}

fn count_line(n: usize, label: &str) -> String {
    if n == 1 {
        format!("1 {label}")
    } else {
        format!("{n} {label}s")
    }
}

fn answer_set_line(family: &[Interpretation], universe: &Universe) -> String {
    let sets: Vec<String> = family
        .iter()
        .map(|&m| render_interpretation(m, universe))
        .collect();
    format!("  answer sets: {}", sets.join(" "))
}

/// Renders interpretation-based views as text, one `T/F/U` line each with
/// its witnessing answer sets.
pub fn render_world_views_text(
    views: &[CandidateWorldView],
    universe: &Universe,
    label: &str,
) -> String {
    let mut out = count_line(views.len(), label);
    for view in views {
        out.push('\n');
        out.push_str(&render_cwi(view.interpretation, universe));
        out.push('\n');
        out.push_str(&answer_set_line(&view.answer_sets, universe));
    }
    out.push('\n');
    out
}

/// Renders guess-based views as text.
pub fn render_guess_views_text(
    views: &[GuessWorldView],
    universe: &Universe,
    label: &str,
) -> String {
    let mut out = count_line(views.len(), label);
    for view in views {
        out.push('\n');
        out.push_str(&format!(
            "guess: {{{}}}",
            guess_strings(&view.guess, universe).join(", ")
        ));
        out.push('\n');
        out.push_str(&answer_set_line(&view.answer_sets, universe));
    }
    out.push('\n');
    out
}

/// Renders an equivalence verdict as text.
pub fn render_verdict_text(verdict: &EquivalenceVerdict) -> String {
    let notion = verdict.notion.label();
    if verdict.equal {
        return format!("equivalent ({notion})\n");
    }
    let universe = &verdict.universe;
    let mut out = format!("not equivalent ({notion})\n");
    match verdict.counterexample.as_ref() {
        Some(Counterexample::WorldView { cwi, only_in }) => {
            out.push_str(&format!(
                "counterexample: {} only in {}\n",
                render_cwi(*cwi, universe),
                only_in.label()
            ));
        }
        Some(Counterexample::AnswerSetFamily { family, only_in }) => {
            let sets: Vec<String> = family
                .iter()
                .map(|&m| render_interpretation(m, universe))
                .collect();
            out.push_str(&format!(
                "counterexample: answer sets {} only in {}\n",
                sets.join(" "),
                only_in.label()
            ));
        }
        Some(Counterexample::SeFunction {
            cwi,
            se_model,
            only_in,
        }) => {
            out.push_str(&format!(
                "counterexample: at {}, SE-model (X = {}, Y = {}) only in {}\n",
                render_cwi(*cwi, universe),
                render_interpretation(se_model.x, universe),
                render_interpretation(se_model.y, universe),
                only_in.label()
            ));
        }
        None => {}
    }
    out
}

/// Renders a correspondence report as a pairing table.
pub fn render_correspondence_text(report: &CorrespondenceReport, universe: &Universe) -> String {
    let mut out = if report.holds {
        format!(
            "correspondence holds: {}\n",
            count_line(report.pairs.len(), "pair")
        )
    } else {
        format!(
            "correspondence fails: {}, {} unmatched world view(s), {} unmatched guess(es)\n",
            count_line(report.pairs.len(), "pair"),
            report.unmatched_interpretations.len(),
            report.unmatched_guesses.len()
        )
    };
    for pair in &report.pairs {
        out.push_str(&render_cwi(pair.interpretation, universe));
        out.push('\n');
        out.push_str(&format!(
            "  guess: {{{}}}\n",
            guess_strings(&pair.guess, universe).join(", ")
        ));
        out.push_str(&answer_set_line(&pair.answer_sets, universe));
        out.push('\n');
    }
    for i in &report.unmatched_interpretations {
        out.push_str(&format!("unmatched world view: {}\n", render_cwi(*i, universe)));
    }
    for g in &report.unmatched_guesses {
        out.push_str(&format!(
            "unmatched guess: {{{}}}\n",
            guess_strings(g, universe).join(", ")
        ));
    }
    out
}
