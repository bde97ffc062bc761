//! Reduction from one-alternation quantified Boolean formulas to world-view
//! existence.
//!
//! An `∃X∀Y∃Z Ψ` instance with `Ψ` in 3-CNF becomes a ground epistemic
//! program whose candidate world views correspond exactly to the accepting
//! X-assignments. X variables are fixed by mutually exclusive epistemic
//! guesses, Y variables by plain disjunctive choice, and Z variables by
//! disjunctive choice backed by saturation: whenever the current assignment
//! falsifies some clause, `sat` is derived and floods both truth values of
//! every Z variable, collapsing the falsifying branches into one
//! non-minimal candidate. The rule `esat :- not esat, not ~ sat.` then
//! rejects any world view whose answer sets still mention `sat`, leaving
//! exactly the X-assignments under which every Y choice has a satisfying Z
//! completion.
//!
//! The construction's published guarantee assumes that setting every Y
//! variable true makes `Ψ` a tautology; [`side_condition_holds`] checks
//! this, and results for instances without it are flagged rather than
//! suppressed. An independent truth-table oracle is included for
//! cross-validation.

use std::collections::{BTreeMap, BTreeSet};

use crate::engine::candidate_world_views;
use crate::syntax::{BodyElement, Literal, Program, Rule, Universe, MAX_ATOMS};

/// One signed clause literal; `negated` is the η=1 case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedLit {
    pub var: String,
    pub negated: bool,
}

/// A parsed `∃X∀Y∃Z` 3-CNF instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QbfInstance {
    pub x_vars: Vec<String>,
    pub y_vars: Vec<String>,
    pub z_vars: Vec<String>,
    pub clauses: Vec<[SignedLit; 3]>,
}

/// A syntax or structure error in QDIMACS input, with its 1-based line.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct QdimacsError {
    pub line: usize,
    pub message: String,
}

/// Errors from grounding or solving an instance.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QsatError {
    #[error("ground program needs {0} atoms, more than the {MAX_ATOMS}-atom limit")]
    TooLarge(usize),
    #[error("a world view settles neither or both truth values of {0}")]
    UnsettledVariable(String),
}

/// Whether results fall under the encoding's published guarantee.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guarantee {
    /// The side condition holds; world views and accepting X-assignments
    /// coincide by construction.
    Ok,
    /// The side condition fails; results are reported as computed but are
    /// outside the construction's stated scope.
    Void,
}

/// A total assignment to the X variables, values 0 or 1.
pub type XAssignment = BTreeMap<String, u8>;

/// Outcome of [`solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QsatOutcome {
    pub satisfiable: bool,
    pub x_assignments: Vec<XAssignment>,
    pub guarantee: Guarantee,
}

fn qerr<T>(line: usize, message: impl Into<String>) -> Result<T, QdimacsError> {
    Err(QdimacsError {
        line,
        message: message.into(),
    })
}

/// Parses the three-block QDIMACS subset: a `p cnf n m` header, quantifier
/// lines `e ... 0`, `a ... 0`, `e ... 0` in that order (blocks may be
/// empty), and exactly `m` clause lines of three nonzero literals each.
/// Comment lines starting with `c` and blank lines are skipped. Variable
/// `i` is named `v{i}`.
pub fn parse_qdimacs(text: &str) -> Result<QbfInstance, QdimacsError> {
    let mut significant = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'));

    let (pline, p) = match significant.next() {
        Some(x) => x,
        None => return qerr(1, "missing 'p cnf' header"),
    };
    let parts: Vec<&str> = p.split_whitespace().collect();
    if parts.len() != 4 || parts[0] != "p" || parts[1] != "cnf" {
        return qerr(pline, "expected header 'p cnf <vars> <clauses>'");
    }
    let n: usize = match parts[2].parse() {
        Ok(v) => v,
        Err(_) => return qerr(pline, "variable count is not a number"),
    };
    let m: usize = match parts[3].parse() {
        Ok(v) => v,
        Err(_) => return qerr(pline, "clause count is not a number"),
    };

    let mut declared: BTreeMap<usize, usize> = BTreeMap::new();
    let mut blocks: Vec<Vec<String>> = Vec::new();
    for expected in ["e", "a", "e"] {
        let (line, text) = match significant.next() {
            Some(x) => x,
            None => return qerr(pline, format!("missing '{expected}' quantifier line")),
        };
        let mut toks = text.split_whitespace();
        match toks.next() {
            Some(q) if q == expected => {}
            Some("e") | Some("a") => {
                return qerr(line, format!("expected an '{expected}' quantifier line here"))
            }
            _ => return qerr(line, format!("expected an '{expected}' quantifier line")),
        }
        let mut vars = Vec::new();
        let mut terminated = false;
        for tok in toks {
            if terminated {
                return qerr(line, "content after the terminating 0");
            }
            let v: i64 = match tok.parse() {
                Ok(v) => v,
                Err(_) => return qerr(line, format!("bad token '{tok}' in quantifier line")),
            };
            if v == 0 {
                terminated = true;
                continue;
            }
            if v < 0 {
                return qerr(line, "negative variable in quantifier line");
            }
            let v = v as usize;
            if v > n {
                return qerr(line, format!("variable {v} exceeds the declared count {n}"));
            }
            if declared.insert(v, blocks.len()).is_some() {
                return qerr(line, format!("variable {v} is quantified twice"));
            }
            vars.push(format!("v{v}"));
        }
        if !terminated {
            return qerr(line, "quantifier line does not end with 0");
        }
        blocks.push(vars);
    }

    let mut clauses = Vec::new();
    for _ in 0..m {
        let (line, text) = match significant.next() {
            Some(x) => x,
            None => return qerr(pline, format!("expected {m} clause lines")),
        };
        let mut lits = Vec::new();
        let mut terminated = false;
        for tok in text.split_whitespace() {
            if terminated {
                return qerr(line, "content after the terminating 0");
            }
            let v: i64 = match tok.parse() {
                Ok(v) => v,
                Err(_) => return qerr(line, format!("bad token '{tok}' in clause")),
            };
            if v == 0 {
                terminated = true;
                continue;
            }
            let var = v.unsigned_abs() as usize;
            if var > n {
                return qerr(line, format!("variable {var} exceeds the declared count {n}"));
            }
            if !declared.contains_key(&var) {
                return qerr(line, format!("variable {var} is not quantified"));
            }
            lits.push(SignedLit {
                var: format!("v{var}"),
                negated: v < 0,
            });
        }
        if !terminated {
            return qerr(line, "clause does not end with 0");
        }
        if lits.len() != 3 {
            return qerr(line, format!("clause has {} literals, expected 3", lits.len()));
        }
        clauses.push([lits[0].clone(), lits[1].clone(), lits[2].clone()]);
    }
    if let Some((line, _)) = significant.next() {
        return qerr(line, format!("unexpected content after {m} clauses"));
    }

    let mut it = blocks.into_iter();
    Ok(QbfInstance {
        x_vars: it.next().unwrap(),
        y_vars: it.next().unwrap(),
        z_vars: it.next().unwrap(),
        clauses,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Block {
    X,
    Y,
    Z,
}

impl QbfInstance {
    fn var_blocks(&self) -> BTreeMap<&str, (Block, usize)> {
        let mut idx = BTreeMap::new();
        for (i, v) in self.x_vars.iter().enumerate() {
            idx.insert(v.as_str(), (Block::X, i));
        }
        for (i, v) in self.y_vars.iter().enumerate() {
            idx.insert(v.as_str(), (Block::Y, i));
        }
        for (i, v) in self.z_vars.iter().enumerate() {
            idx.insert(v.as_str(), (Block::Z, i));
        }
        idx
    }

    fn matrix_true(
        &self,
        idx: &BTreeMap<&str, (Block, usize)>,
        sx: u32,
        sy: u32,
        sz: u32,
    ) -> bool {
        self.clauses.iter().all(|clause| {
            clause.iter().any(|lit| {
                let (block, i) = idx[lit.var.as_str()];
                let value = match block {
                    Block::X => sx >> i & 1 == 1,
                    Block::Y => sy >> i & 1 == 1,
                    Block::Z => sz >> i & 1 == 1,
                };
                value != lit.negated
            })
        })
    }

    fn x_assignment(&self, sx: u32) -> XAssignment {
        self.x_vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), (sx >> i & 1) as u8))
            .collect()
    }
}

/// Whether setting every Y variable true makes the matrix a tautology over
/// the remaining variables.
pub fn side_condition_holds(q: &QbfInstance) -> bool {
    let idx = q.var_blocks();
    let all_y = (1u32 << q.y_vars.len()) - 1;
    for sx in 0..1u32 << q.x_vars.len() {
        for sz in 0..1u32 << q.z_vars.len() {
            if !q.matrix_true(&idx, sx, all_y, sz) {
                return false;
            }
        }
    }
    true
}

/// Brute-force reference: the X-assignments under which every Y assignment
/// admits a satisfying Z assignment, by full truth-table expansion.
pub fn qbf_oracle(q: &QbfInstance) -> Vec<XAssignment> {
    let idx = q.var_blocks();
    let mut out = Vec::new();
    for sx in 0..1u32 << q.x_vars.len() {
        let accepted = (0..1u32 << q.y_vars.len())
            .all(|sy| (0..1u32 << q.z_vars.len()).any(|sz| q.matrix_true(&idx, sx, sy, sz)));
        if accepted {
            out.push(q.x_assignment(sx));
        }
    }
    out.sort();
    out
}

/// Grounds the instance into an epistemic program over atoms
/// `assign_{var}_0/1`, `csat_{j}`, `sat` and `esat`.
pub fn encode(q: &QbfInstance) -> Result<Program, QsatError> {
    let var_count = q.x_vars.len() + q.y_vars.len() + q.z_vars.len();
    let atom_count = 2 * var_count + q.clauses.len() + 2;
    if atom_count > MAX_ATOMS {
        return Err(QsatError::TooLarge(atom_count));
    }

    let mut names: Vec<String> = Vec::with_capacity(atom_count);
    for v in q.x_vars.iter().chain(&q.y_vars).chain(&q.z_vars) {
        names.push(format!("assign_{v}_0"));
        names.push(format!("assign_{v}_1"));
    }
    for j in 1..=q.clauses.len() {
        names.push(format!("csat_{j}"));
    }
    names.push("sat".to_owned());
    names.push("esat".to_owned());
    let universe = Universe::from_names(names);
    debug_assert_eq!(universe.len(), atom_count, "atom names must not collide");

    let atom = |name: &str| universe.id(name).expect("atom was added to the universe");
    let assign = |v: &str, bit: u8| atom(&format!("assign_{v}_{bit}"));
    let sat = atom("sat");
    let esat = atom("esat");

    let mut rules = BTreeSet::new();
    for x in &q.x_vars {
        for bit in [0, 1] {
            rules.insert(Rule::new(
                BTreeSet::from([assign(x, bit)]),
                BTreeSet::from([BodyElement::Epistemic(Literal::pos(assign(x, 1 - bit)))]),
            ));
        }
    }
    for y in &q.y_vars {
        rules.insert(Rule::new(
            BTreeSet::from([assign(y, 0), assign(y, 1)]),
            BTreeSet::new(),
        ));
    }
    for z in &q.z_vars {
        rules.insert(Rule::new(
            BTreeSet::from([assign(z, 0), assign(z, 1)]),
            BTreeSet::new(),
        ));
        for bit in [0, 1] {
            rules.insert(Rule::new(
                BTreeSet::from([assign(z, bit)]),
                BTreeSet::from([BodyElement::Pos(sat)]),
            ));
        }
    }
    rules.insert(Rule::new(
        BTreeSet::from([esat]),
        BTreeSet::from([
            BodyElement::Epistemic(Literal::pos(esat)),
            BodyElement::Epistemic(Literal::neg(sat)),
        ]),
    ));
    for (j, clause) in q.clauses.iter().enumerate() {
        let falsifiers: BTreeSet<BodyElement> = clause
            .iter()
            .map(|lit| BodyElement::Pos(assign(&lit.var, lit.negated as u8)))
            .collect();
        let csat = atom(&format!("csat_{}", j + 1));
        rules.insert(Rule::new(BTreeSet::from([csat]), falsifiers));
        rules.insert(Rule::new(
            BTreeSet::from([sat]),
            BTreeSet::from([BodyElement::Pos(csat)]),
        ));
    }
    Ok(Program::new(universe, rules))
}

/// Solves the instance through the encoding: enumerates candidate world
/// views and projects each onto its X-assignment via the `assign_x_1`
/// atoms of the true part.
pub fn solve(q: &QbfInstance) -> Result<QsatOutcome, QsatError> {
    let program = encode(q)?;
    let universe = program.universe();
    let mut x_assignments = Vec::new();
    for c in candidate_world_views(&program) {
        let mut map = XAssignment::new();
        for x in &q.x_vars {
            let zero = universe
                .id(&format!("assign_{x}_0"))
                .expect("assignment atom exists");
            let one = universe
                .id(&format!("assign_{x}_1"))
                .expect("assignment atom exists");
            let pos = c.interpretation.pos_mask();
            match (pos & zero.mask() != 0, pos & one.mask() != 0) {
                (true, false) => map.insert(x.clone(), 0),
                (false, true) => map.insert(x.clone(), 1),
                _ => return Err(QsatError::UnsettledVariable(x.clone())),
            };
        }
        x_assignments.push(map);
    }
    x_assignments.sort();
    Ok(QsatOutcome {
        satisfiable: !x_assignments.is_empty(),
        x_assignments,
        guarantee: if side_condition_holds(q) {
            Guarantee::Ok
        } else {
            Guarantee::Void
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(var: &str, negated: bool) -> SignedLit {
        SignedLit {
            var: var.to_owned(),
            negated,
        }
    }

    fn instance(
        x: &[&str],
        y: &[&str],
        z: &[&str],
        clauses: &[[(&str, bool); 3]],
    ) -> QbfInstance {
        QbfInstance {
            x_vars: x.iter().map(|s| s.to_string()).collect(),
            y_vars: y.iter().map(|s| s.to_string()).collect(),
            z_vars: z.iter().map(|s| s.to_string()).collect(),
            clauses: clauses
                .iter()
                .map(|c| [lit(c[0].0, c[0].1), lit(c[1].0, c[1].1), lit(c[2].0, c[2].1)])
                .collect(),
        }
    }

    const SAMPLE: &str = "c sample\np cnf 3 1\ne 1 0\na 2 0\ne 3 0\n1 -2 3 0\n";

    #[test]
    fn parses_the_three_block_sample() {
        let q = parse_qdimacs(SAMPLE).unwrap();
        assert_eq!(q.x_vars, vec!["v1"]);
        assert_eq!(q.y_vars, vec!["v2"]);
        assert_eq!(q.z_vars, vec!["v3"]);
        assert_eq!(
            q.clauses,
            vec![[lit("v1", false), lit("v2", true), lit("v3", false)]]
        );
    }

    #[test]
    fn allows_empty_blocks_and_duplicate_clause_literals() {
        let q = parse_qdimacs("p cnf 1 1\ne 0\na 0\ne 1 0\n1 1 1 0\n").unwrap();
        assert!(q.x_vars.is_empty());
        assert!(q.y_vars.is_empty());
        assert_eq!(q.z_vars, vec!["v1"]);
    }

    #[test]
    fn rejects_malformed_input() {
        let missing_a = "p cnf 2 1\ne 1 0\ne 2 0\n1 1 2 0\n";
        let e = parse_qdimacs(missing_a).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("'a' quantifier"), "{}", e.message);

        let e = parse_qdimacs("p cnf 2 1\ne 1 0\na 2 0\ne 0\n1 2 0\n").unwrap_err();
        assert!(e.message.contains("2 literals"), "{}", e.message);

        let e = parse_qdimacs("p cnf 2 1\ne 1 0\na 2 0\ne 0\n1 2 3 0\n").unwrap_err();
        assert!(e.message.contains("exceeds"), "{}", e.message);

        let e = parse_qdimacs("p cnf 3 1\ne 1 0\na 2 0\ne 0\n1 2 3 0\n").unwrap_err();
        assert!(e.message.contains("not quantified"), "{}", e.message);

        let e = parse_qdimacs("p cnf 2 1\ne 1 0\na 1 0\ne 2 0\n1 1 2 0\n").unwrap_err();
        assert!(e.message.contains("quantified twice"), "{}", e.message);

        let e = parse_qdimacs("p cnf 1 1\ne 1 0\na 0\ne 0\n1 1 1 0\nextra\n").unwrap_err();
        assert!(e.message.contains("unexpected content"), "{}", e.message);

        let e = parse_qdimacs("p cnf 1 1\ne 1\na 0\ne 0\n1 1 1 0\n").unwrap_err();
        assert!(e.message.contains("end with 0"), "{}", e.message);
    }

    #[test]
    fn encoding_counts_atoms_and_rules() {
        let q = instance(&["x1"], &["y1"], &["z1"], &[[("x1", false), ("y1", false), ("z1", false)]]);
        let p = encode(&q).unwrap();
        assert_eq!(p.atom_count(), 9);
        assert_eq!(p.rule_count(), 9);
        assert_eq!(p.epistemic_literals().len(), 4);
        let text = p.to_string();
        assert!(text.contains("assign_x1_0 :- not assign_x1_1."));
        assert!(text.contains("assign_x1_1 :- not assign_x1_0."));
        assert!(text.contains("assign_y1_0 | assign_y1_1."));
        assert!(text.contains("assign_z1_0 :- sat."));
        assert!(text.contains("esat :- not esat, not ~ sat."));
        assert!(text.contains("csat_1 :- assign_x1_0, assign_y1_0, assign_z1_0."));
        assert!(text.contains("sat :- csat_1."));
    }

    #[test]
    fn encoding_refuses_oversized_instances() {
        let vars: Vec<String> = (0..16).map(|i| format!("z{i}")).collect();
        let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
        let q = instance(&[], &[], &refs, &[[("z0", false), ("z1", false), ("z2", false)]]);
        assert_eq!(encode(&q), Err(QsatError::TooLarge(35)));
    }

    #[test]
    fn solves_single_block_instances() {
        let exists_z = instance(&[], &[], &["z"], &[[("z", false), ("z", false), ("z", false)]]);
        let out = solve(&exists_z).unwrap();
        assert!(out.satisfiable);
        assert_eq!(out.x_assignments, vec![XAssignment::new()]);

        let forall_y = instance(&[], &["y"], &[], &[[("y", false), ("y", false), ("y", false)]]);
        let out = solve(&forall_y).unwrap();
        assert!(!out.satisfiable);
        assert!(out.x_assignments.is_empty());
        assert_eq!(out.guarantee, Guarantee::Ok);
        assert_eq!(qbf_oracle(&forall_y), Vec::<XAssignment>::new());

        let tautology = instance(&[], &["y"], &[], &[[("y", false), ("y", true), ("y", false)]]);
        let out = solve(&tautology).unwrap();
        assert_eq!(out.x_assignments, vec![XAssignment::new()]);
        assert_eq!(out.guarantee, Guarantee::Ok);
    }

    #[test]
    fn existential_choice_is_projected_from_the_world_view() {
        let q = instance(&["x"], &[], &[], &[[("x", false), ("x", false), ("x", false)]]);
        let out = solve(&q).unwrap();
        assert_eq!(out.x_assignments, vec![XAssignment::from([("x".to_owned(), 1)])]);
        assert_eq!(out.guarantee, Guarantee::Void);
        assert_eq!(out.x_assignments, qbf_oracle(&q));
    }

    #[test]
    fn tautological_clause_accepts_both_choices() {
        let q = instance(
            &["x"],
            &["y"],
            &[],
            &[[("x", false), ("x", true), ("y", false)]],
        );
        assert!(side_condition_holds(&q));
        let out = solve(&q).unwrap();
        assert_eq!(out.x_assignments, qbf_oracle(&q));
        assert_eq!(out.x_assignments.len(), 2);
    }

    #[test]
    fn alternation_sample_accepts_both_assignments() {
        let text = "p cnf 3 2\ne 1 0\na 2 0\ne 3 0\n1 2 3 0\n-1 2 -3 0\n";
        let q = parse_qdimacs(text).unwrap();
        assert!(side_condition_holds(&q));
        let out = solve(&q).unwrap();
        assert_eq!(out.guarantee, Guarantee::Ok);
        assert_eq!(out.x_assignments, qbf_oracle(&q));
        assert_eq!(out.x_assignments.len(), 2);
        assert!(out.satisfiable);
    }

    #[test]
    fn dependence_on_the_existential_witness() {
        let q = instance(
            &["x"],
            &["y"],
            &["z"],
            &[
                [("x", false), ("y", false), ("z", false)],
                [("x", true), ("y", false), ("z", true)],
            ],
        );
        assert!(side_condition_holds(&q));
        let out = solve(&q).unwrap();
        assert_eq!(out.x_assignments, qbf_oracle(&q));
    }

    #[test]
    fn oracle_handles_degenerate_empty_matrix() {
        let q = instance(&["x"], &[], &[], &[]);
        assert_eq!(qbf_oracle(&q).len(), 2);
        assert!(side_condition_holds(&q));
        let out = solve(&q).unwrap();
        assert_eq!(out.x_assignments.len(), 2);
        assert_eq!(out.guarantee, Guarantee::Ok);
    }
}
