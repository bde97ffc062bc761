//! Parser for the concrete rule syntax.
//!
//! ```text
//! program   := (directive | rule)*
//! directive := "#atoms" ident ("," ident)* "."
//! rule      := head "." | head ":-" body? "." | ":-" body? "."
//! head      := ident ("|" ident)*
//! body      := elem ("," elem)*
//! elem      := "~"* ident | ["~"] "not" "~"* ident
//! ```
//!
//! `~` is default negation, `not` is epistemic negation and a reserved
//! keyword, `%` starts a comment running to end of line. Identifiers match
//! `[a-z][A-Za-z0-9_]*`. Chains of `~` collapse by parity on either side of
//! `not`, more than one `~` in front of `not` is rejected, and `not` does
//! not nest. The `#atoms` directive declares atoms that need not occur in
//! any rule.

use std::collections::BTreeSet;

use crate::syntax::{BodyElement, Literal, Program, Rule, Universe, MAX_ATOMS};

/// A syntax error with its 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

fn err<T>(line: usize, col: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        col,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    AtomsDirective,
    Tilde,
    Pipe,
    Comma,
    Dot,
    Arrow,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl Lexer<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> char {
        let c = self.chars.next().expect("bump after successful peek");
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        c
    }

    fn word(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                s.push(self.bump());
            } else {
                break;
            }
        }
        s
    }
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut lx = Lexer {
        chars: text.chars().peekable(),
        line: 1,
        col: 1,
    };
    let mut tokens = Vec::new();
    while let Some(c) = lx.peek() {
        let (tline, tcol) = (lx.line, lx.col);
        let push = |tok: Tok, tokens: &mut Vec<Token>| {
            tokens.push(Token {
                tok,
                line: tline,
                col: tcol,
            });
        };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                lx.bump();
            }
            '%' => {
                while let Some(c) = lx.peek() {
                    lx.bump();
                    if c == '\n' {
                        break;
                    }
                }
            }
            '~' => {
                lx.bump();
                push(Tok::Tilde, &mut tokens);
            }
            '|' => {
                lx.bump();
                push(Tok::Pipe, &mut tokens);
            }
            ',' => {
                lx.bump();
                push(Tok::Comma, &mut tokens);
            }
            '.' => {
                lx.bump();
                push(Tok::Dot, &mut tokens);
            }
            ':' => {
                lx.bump();
                if lx.peek() == Some('-') {
                    lx.bump();
                    push(Tok::Arrow, &mut tokens);
                } else {
                    return err(tline, tcol, "expected ':-'");
                }
            }
            '#' => {
                lx.bump();
                let word = lx.word();
                if word == "atoms" {
                    push(Tok::AtomsDirective, &mut tokens);
                } else {
                    return err(tline, tcol, format!("unknown directive '#{word}'"));
                }
            }
            'a'..='z' => {
                let name = lx.word();
                let tok = if name == "not" { Tok::Not } else { Tok::Ident(name) };
                push(tok, &mut tokens);
            }
            _ => return err(tline, tcol, format!("unexpected character '{c}'")),
        }
    }
    Ok(tokens)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RawKind {
    Pos,
    Neg { inner_negated: bool },
    Epistemic { inner_negated: bool },
    NegEpistemic { inner_negated: bool },
}

#[derive(Debug)]
struct RawRule {
    head: Vec<String>,
    body: Vec<(RawKind, String)>,
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end_line: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        match self.tokens.get(self.pos) {
            Some(t) => (t.line, t.col),
            None => (self.end_line, self.end_col),
        }
    }

    fn advance(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|t| t.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok, what: &str) -> Result<(), ParseError> {
        let (line, col) = self.here();
        match self.peek() {
            Some(t) if t == want => {
                self.advance();
                Ok(())
            }
            Some(Tok::Not) => err(line, col, format!("expected {what}, found reserved keyword 'not'")),
            Some(_) => err(line, col, format!("expected {what}")),
            None => err(line, col, format!("expected {what}, found end of input")),
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<String, ParseError> {
        let (line, col) = self.here();
        match self.peek() {
            Some(Tok::Ident(_)) => {
                if let Some(Tok::Ident(name)) = self.advance() {
                    Ok(name)
                } else {
                    unreachable!()
                }
            }
            Some(Tok::Not) => err(line, col, format!("expected {what}, found reserved keyword 'not'")),
            Some(_) => err(line, col, format!("expected {what}")),
            None => err(line, col, format!("expected {what}, found end of input")),
        }
    }

    fn parse_elem(&mut self) -> Result<(RawKind, String), ParseError> {
        let (start_line, start_col) = self.here();
        let mut outer_tildes = 0usize;
        while self.peek() == Some(&Tok::Tilde) {
            self.advance();
            outer_tildes += 1;
        }
        if self.peek() == Some(&Tok::Not) {
            if outer_tildes > 1 {
                return err(
                    start_line,
                    start_col,
                    "at most one '~' may precede 'not'",
                );
            }
            self.advance();
            let mut inner_tildes = 0usize;
            while self.peek() == Some(&Tok::Tilde) {
                self.advance();
                inner_tildes += 1;
            }
            if self.peek() == Some(&Tok::Not) {
                let (line, col) = self.here();
                return err(line, col, "'not' cannot be nested under 'not'");
            }
            let name = self.expect_ident("an atom after 'not'")?;
            let inner_negated = inner_tildes % 2 == 1;
            let kind = if outer_tildes == 1 {
                RawKind::NegEpistemic { inner_negated }
            } else {
                RawKind::Epistemic { inner_negated }
            };
            Ok((kind, name))
        } else {
            let name = self.expect_ident("an atom")?;
            let kind = if outer_tildes == 0 {
                RawKind::Pos
            } else {
                RawKind::Neg {
                    inner_negated: outer_tildes.is_multiple_of(2),
                }
            };
            Ok((kind, name))
        }
    }

    fn parse_body(&mut self) -> Result<Vec<(RawKind, String)>, ParseError> {
        let mut body = Vec::new();
        if self.peek() == Some(&Tok::Dot) {
            self.advance();
            return Ok(body);
        }
        loop {
            body.push(self.parse_elem()?);
            match self.advance() {
                Some(Tok::Comma) => continue,
                Some(Tok::Dot) => return Ok(body),
                _ => {
                    let (line, col) = {
                        let i = self.pos.saturating_sub(1).min(self.tokens.len());
                        match self.tokens.get(i) {
                            Some(t) => (t.line, t.col),
                            None => (self.end_line, self.end_col),
                        }
                    };
                    return err(line, col, "expected ',' or '.' after body element");
                }
            }
        }
    }
}

/// Parses program text into a [`Program`] whose universe is every atom that
/// occurs in a rule or an `#atoms` directive.
pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    let tokens = lex(text)?;
    let end_line = text.lines().count().max(1);
    let end_col = text.lines().last().map_or(1, |l| l.chars().count() + 1);
    let mut p = Parser {
        tokens,
        pos: 0,
        end_line,
        end_col,
    };
    let mut declared: BTreeSet<String> = BTreeSet::new();
    let mut raw_rules: Vec<RawRule> = Vec::new();
    while let Some(tok) = p.peek() {
        match tok {
            Tok::AtomsDirective => {
                p.advance();
                loop {
                    declared.insert(p.expect_ident("an atom name")?);
                    match p.peek() {
                        Some(Tok::Comma) => {
                            p.advance();
                        }
                        _ => break,
                    }
                }
                p.expect(&Tok::Dot, "'.' after '#atoms' list")?;
            }
            Tok::Ident(_) => {
                let mut head = vec![p.expect_ident("an atom")?];
                while p.peek() == Some(&Tok::Pipe) {
                    p.advance();
                    head.push(p.expect_ident("an atom after '|'")?);
                }
                let body = match p.advance() {
                    Some(Tok::Dot) => Vec::new(),
                    Some(Tok::Arrow) => p.parse_body()?,
                    _ => {
                        let (line, col) = {
                            let i = p.pos.saturating_sub(1);
                            match p.tokens.get(i) {
                                Some(t) => (t.line, t.col),
                                None => (p.end_line, p.end_col),
                            }
                        };
                        return err(line, col, "expected '|', ':-' or '.' after rule head");
                    }
                };
                raw_rules.push(RawRule { head, body });
            }
            Tok::Arrow => {
                p.advance();
                let body = p.parse_body()?;
                raw_rules.push(RawRule {
                    head: Vec::new(),
                    body,
                });
            }
            Tok::Not => {
                let (line, col) = p.here();
                return err(line, col, "'not' is a reserved keyword and cannot head a rule");
            }
            _ => {
                let (line, col) = p.here();
                return err(line, col, "expected a rule or '#atoms' directive");
            }
        }
    }

    let mut names = declared;
    for rule in &raw_rules {
        names.extend(rule.head.iter().cloned());
        names.extend(rule.body.iter().map(|(_, n)| n.clone()));
    }
    if names.len() > MAX_ATOMS {
        return err(
            end_line,
            end_col,
            format!(
                "program uses {} atoms, more than the {MAX_ATOMS}-atom limit",
                names.len()
            ),
        );
    }
    let universe = Universe::from_names(names);
    let mut rules = BTreeSet::new();
    for raw in raw_rules {
        let head = raw
            .head
            .iter()
            .map(|n| universe.id(n).expect("head atom was collected"))
            .collect();
        let body = raw
            .body
            .iter()
            .map(|(kind, n)| {
                let atom = universe.id(n).expect("body atom was collected");
                match *kind {
                    RawKind::Pos => BodyElement::Pos(atom),
                    RawKind::Neg { inner_negated } => BodyElement::Neg(Literal {
                        atom,
                        negated: inner_negated,
                    }),
                    RawKind::Epistemic { inner_negated } => BodyElement::Epistemic(Literal {
                        atom,
                        negated: inner_negated,
                    }),
                    RawKind::NegEpistemic { inner_negated } => BodyElement::NegEpistemic(Literal {
                        atom,
                        negated: inner_negated,
                    }),
                }
            })
            .collect();
        rules.insert(Rule::new(head, body));
    }
    Ok(Program::new(universe, rules))
}
