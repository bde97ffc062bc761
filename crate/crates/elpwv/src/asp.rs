//! Answer sets, reducts and SE-models for plain (epistemic-free) programs.
//!
//! Rules are compiled to bitmask form: over a universe of at most 32 atoms,
//! a two-valued interpretation is a `u32` and every body check is a handful
//! of word operations. Candidate interpretations are enumerated in ascending
//! mask order, so every returned collection is deterministic.
//!
//! An interpretation satisfies `~ l` exactly when it does not satisfy `l`,
//! so `~ ~ a` holds exactly when `a` does. The reduct of a program with
//! respect to an interpretation `M` keeps the rules whose `~`-elements all
//! hold in `M` and strips those elements; an answer set is a model whose
//! reduct has no smaller model below it.

use std::collections::BTreeSet;

use crate::syntax::{BodyElement, Interpretation, Program};

/// Error for plain-program operations applied to a program that still
/// contains epistemic negation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("program contains epistemic negation; apply a reduct first")]
pub struct NotPlain;

#[derive(Debug, Clone, Copy)]
struct MaskRule {
    head: u32,
    /// Atoms required true by plain body atoms.
    pos: u32,
    /// Atoms required true by `~ ~ a` elements.
    need_in: u32,
    /// Atoms required false by `~ a` elements.
    need_out: u32,
}

impl MaskRule {
    fn body_holds(&self, m: u32) -> bool {
        (self.pos | self.need_in) & !m == 0 && self.need_out & m == 0
    }

    fn satisfied(&self, m: u32) -> bool {
        !self.body_holds(m) || self.head & m != 0
    }
}

/// A plain program in compiled bitmask form.
#[derive(Debug, Clone)]
pub struct PlainProgram {
    atom_count: usize,
    full: u32,
    rules: Vec<MaskRule>,
}

/// Compiles a program without epistemic negation into bitmask form.
pub fn compile_plain(program: &Program) -> Result<PlainProgram, NotPlain> {
    let mut rules = Vec::new();
    for rule in program.rules() {
        let mut head = 0u32;
        for &a in &rule.head {
            head |= a.mask();
        }
        let mut pos = 0u32;
        let mut need_in = 0u32;
        let mut need_out = 0u32;
        for elem in &rule.body {
            match *elem {
                BodyElement::Pos(a) => pos |= a.mask(),
                BodyElement::Neg(l) => {
                    if l.negated {
                        need_in |= l.atom.mask();
                    } else {
                        need_out |= l.atom.mask();
                    }
                }
                BodyElement::Epistemic(_) | BodyElement::NegEpistemic(_) => return Err(NotPlain),
            }
        }
        rules.push(MaskRule {
            head,
            pos,
            need_in,
            need_out,
        });
    }
    Ok(PlainProgram {
        atom_count: program.atom_count(),
        full: program.universe().full_mask(),
        rules,
    })
}

impl PlainProgram {
    pub fn atom_count(&self) -> usize {
        self.atom_count
    }

    /// Classical satisfaction: every rule whose body holds has a true head atom.
    pub fn satisfies(&self, m: Interpretation) -> bool {
        self.rules.iter().all(|r| r.satisfied(m.0))
    }

    /// All classical models, in ascending mask order.
    pub fn models(&self) -> Vec<Interpretation> {
        let mut out = Vec::new();
        let mut m = 0u32;
        loop {
            if self.satisfies(Interpretation(m)) {
                out.push(Interpretation(m));
            }
            if m == self.full {
                return out;
            }
            m += 1;
        }
    }

    /// The reduct with respect to `m`: rules whose `~`-elements hold in `m`,
    /// stripped down to plain-atom bodies.
    pub fn gl_reduct(&self, m: Interpretation) -> PlainProgram {
        let rules = self
            .rules
            .iter()
            .filter(|r| r.need_in & !m.0 == 0 && r.need_out & m.0 == 0)
            .map(|r| MaskRule {
                head: r.head,
                pos: r.pos,
                need_in: 0,
                need_out: 0,
            })
            .collect();
        PlainProgram {
            atom_count: self.atom_count,
            full: self.full,
            rules,
        }
    }

    /// Atoms forced into every model of this negation-free program that lies
    /// between `seed` and `m`: starting from `seed`, a rule whose body is
    /// forced and whose head meets `m` in a single atom forces that atom.
    fn forced_core(&self, m: u32, seed: u32) -> u32 {
        let mut forced = seed;
        loop {
            let mut grown = forced;
            for r in &self.rules {
                if r.pos & !forced == 0 {
                    let hm = r.head & m;
                    if hm.count_ones() == 1 {
                        grown |= hm;
                    }
                }
            }
            if grown == forced {
                return forced;
            }
            forced = grown;
        }
    }

    fn is_stable(&self, m: Interpretation, found: &[Interpretation]) -> bool {
        let reduct = self.gl_reduct(m);
        for &a in found {
            if a.is_proper_subset(m) && reduct.satisfies(a) {
                return false;
            }
        }
        let forced = reduct.forced_core(m.0, 0);
        if forced == m.0 {
            return true;
        }
        if reduct.satisfies(Interpretation(forced)) {
            return false;
        }
        let free = m.0 & !forced;
        let mut sub = 0u32;
        loop {
            sub = sub.wrapping_sub(free) & free;
            if sub == free {
                return true;
            }
            if reduct.satisfies(Interpretation(forced | sub)) {
                return false;
            }
        }
    }

    /// All answer sets, in ascending mask order: models of the program whose
    /// reduct has no model properly below them.
    pub fn answer_sets(&self) -> Vec<Interpretation> {
        let mut found = Vec::new();
        let mut m = 0u32;
        loop {
            let i = Interpretation(m);
            if self.satisfies(i) && self.is_stable(i, &found) {
                found.push(i);
            }
            if m == self.full {
                return found;
            }
            m += 1;
        }
    }

    /// All SE-models: pairs `(x, y)` where `y` is a model and `x` a
    /// submodel of the reduct with respect to `y`.
    pub fn se_models(&self) -> Vec<SeModel> {
        let mut out = Vec::new();
        for y in self.models() {
            let reduct = self.gl_reduct(y);
            let mut x = 0u32;
            loop {
                if reduct.satisfies(Interpretation(x)) {
                    out.push(SeModel {
                        x: Interpretation(x),
                        y,
                    });
                }
                if x == y.0 {
                    break;
                }
                x = x.wrapping_sub(y.0) & y.0;
            }
        }
        out
    }
}

/// An SE-model: the total part `y` is a model, the reduced part `x ⊆ y`
/// satisfies the reduct with respect to `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeModel {
    pub x: Interpretation,
    pub y: Interpretation,
}

/// Two plain programs are strongly equivalent when they have the same
/// SE-models over the union of their universes; extending both by the same
/// rules then always yields the same answer sets.
pub fn strongly_equivalent(p1: &Program, p2: &Program) -> Result<bool, NotPlain> {
    let u1: Vec<String> = p1.universe().names().map(str::to_owned).collect();
    let u2: Vec<String> = p2.universe().names().map(str::to_owned).collect();
    let a1 = crate::syntax::extend_universe(p1, u2);
    let a2 = crate::syntax::extend_universe(p2, u1);
    let c1 = compile_plain(&a1)?;
    let c2 = compile_plain(&a2)?;
    let s1: BTreeSet<SeModel> = c1.se_models().into_iter().collect();
    let s2: BTreeSet<SeModel> = c2.se_models().into_iter().collect();
    Ok(s1 == s2)
}
