//! Propositional sentences: abstract syntax, parsing, rendering, evaluation.
//!
//! The concrete syntax is ASCII: `!` (negation), `&` (conjunction), `|`
//! (disjunction), `->` (implication, right-associative), `<->` (equivalence,
//! right-associative), with that precedence order from tightest to loosest.
//! `⇒` is accepted as an alias for `->`. Atom names match
//! `[A-Za-z_][A-Za-z0-9_]*`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A propositional formula over named atoms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Sentence {
    Atom(String),
    Not(Box<Sentence>),
    And(Box<Sentence>, Box<Sentence>),
    Or(Box<Sentence>, Box<Sentence>),
    Implies(Box<Sentence>, Box<Sentence>),
    Iff(Box<Sentence>, Box<Sentence>),
}

impl Sentence {
    /// Builds an atom. Panics on names that the parser would reject.
    pub fn atom(name: impl Into<String>) -> Sentence {
        let name = name.into();
        assert!(is_identifier(&name), "invalid atom name `{name}`");
        Sentence::Atom(name)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(s: Sentence) -> Sentence {
        Sentence::Not(Box::new(s))
    }

    pub fn and(left: Sentence, right: Sentence) -> Sentence {
        Sentence::And(Box::new(left), Box::new(right))
    }

    pub fn or(left: Sentence, right: Sentence) -> Sentence {
        Sentence::Or(Box::new(left), Box::new(right))
    }

    pub fn implies(left: Sentence, right: Sentence) -> Sentence {
        Sentence::Implies(Box::new(left), Box::new(right))
    }

    pub fn iff(left: Sentence, right: Sentence) -> Sentence {
        Sentence::Iff(Box::new(left), Box::new(right))
    }

    /// Parses a formula from text.
    pub fn parse(text: &str) -> Result<Sentence> {
        let tokens = lex(text)?;
        if tokens.is_empty() {
            return Err(Error::EmptyFormula);
        }
        let end = text.chars().count() + 1;
        let mut parser = Parser {
            tokens,
            pos: 0,
            end,
        };
        let sentence = parser.iff()?;
        if let Some((_, position)) = parser.peek() {
            return Err(Error::Syntax {
                position,
                message: "unexpected trailing input".into(),
            });
        }
        Ok(sentence)
    }

    /// Canonical fully-parenthesized rendering; `parse` of the result
    /// reproduces the sentence structurally.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Two-valued evaluation under an atom assignment. Every atom of the
    /// sentence must be present in the assignment.
    pub fn evaluate(&self, assignment: &HashMap<String, bool>) -> Result<bool> {
        match self {
            Sentence::Atom(name) => assignment
                .get(name)
                .copied()
                .ok_or_else(|| Error::MissingAtom(name.clone())),
            Sentence::Not(child) => Ok(!child.evaluate(assignment)?),
            Sentence::And(l, r) => {
                let a = l.evaluate(assignment)?;
                let b = r.evaluate(assignment)?;
                Ok(a && b)
            }
            Sentence::Or(l, r) => {
                let a = l.evaluate(assignment)?;
                let b = r.evaluate(assignment)?;
                Ok(a || b)
            }
            Sentence::Implies(l, r) => {
                let a = l.evaluate(assignment)?;
                let b = r.evaluate(assignment)?;
                Ok(!a || b)
            }
            Sentence::Iff(l, r) => {
                let a = l.evaluate(assignment)?;
                let b = r.evaluate(assignment)?;
                Ok(a == b)
            }
        }
    }

    /// Distinct atoms in order of first appearance.
    pub fn atoms(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut Vec<String>) {
        match self {
            Sentence::Atom(name) => {
                if !out.iter().any(|a| a == name) {
                    out.push(name.clone());
                }
            }
            Sentence::Not(child) => child.collect_atoms(out),
            Sentence::And(l, r)
            | Sentence::Or(l, r)
            | Sentence::Implies(l, r)
            | Sentence::Iff(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }
}

impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sentence::Atom(name) => write!(f, "{name}"),
            Sentence::Not(child) => write!(f, "(!{child})"),
            Sentence::And(l, r) => write!(f, "({l} & {r})"),
            Sentence::Or(l, r) => write!(f, "({l} | {r})"),
            Sentence::Implies(l, r) => write!(f, "({l} -> {r})"),
            Sentence::Iff(l, r) => write!(f, "({l} <-> {r})"),
        }
    }
}

/// Ordered table of the distinct atoms appearing in a sentence list, in
/// first-appearance order. The order fixes the enumeration order of atom
/// assignments, so it must be deterministic for a given problem.
#[derive(Debug, Clone)]
pub struct AtomTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl AtomTable {
    pub fn from_sentences(sentences: &[Sentence]) -> AtomTable {
        let mut table = AtomTable {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for sentence in sentences {
            for atom in sentence.atoms() {
                if !table.index.contains_key(&atom) {
                    table.index.insert(atom.clone(), table.names.len());
                    table.names.push(atom);
                }
            }
        }
        table
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(name) => format!("`{name}`"),
            Token::Not => "`!`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Implies => "`->`".into(),
            Token::Iff => "`<->`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
        }
    }
}

/// Positions are 1-based character offsets into the formula text.
fn lex(text: &str) -> Result<Vec<(Token, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let position = i + 1;
        match c {
            c if c.is_whitespace() => i += 1,
            '!' => {
                tokens.push((Token::Not, position));
                i += 1;
            }
            '&' => {
                tokens.push((Token::And, position));
                i += 1;
            }
            '|' => {
                tokens.push((Token::Or, position));
                i += 1;
            }
            '(' => {
                tokens.push((Token::LParen, position));
                i += 1;
            }
            ')' => {
                tokens.push((Token::RParen, position));
                i += 1;
            }
            '⇒' => {
                tokens.push((Token::Implies, position));
                i += 1;
            }
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    tokens.push((Token::Implies, position));
                    i += 2;
                } else {
                    return Err(Error::Syntax {
                        position,
                        message: "expected `->`".into(),
                    });
                }
            }
            '<' => {
                if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') {
                    tokens.push((Token::Iff, position));
                    i += 3;
                } else {
                    return Err(Error::Syntax {
                        position,
                        message: "expected `<->`".into(),
                    });
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                tokens.push((Token::Ident(name), position));
            }
            other => {
                return Err(Error::Syntax {
                    position,
                    message: format!("unexpected character `{other}`"),
                });
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<(Token, usize)> {
        self.tokens.get(self.pos).cloned()
    }

    fn advance(&mut self) -> Option<(Token, usize)> {
        let t = self.peek();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn unexpected_end(&self) -> Error {
        Error::Syntax {
            position: self.end,
            message: "unexpected end of input".into(),
        }
    }

    fn iff(&mut self) -> Result<Sentence> {
        let left = self.implies()?;
        if let Some((Token::Iff, _)) = self.peek() {
            self.advance();
            let right = self.iff()?;
            return Ok(Sentence::iff(left, right));
        }
        Ok(left)
    }

    fn implies(&mut self) -> Result<Sentence> {
        let left = self.or()?;
        if let Some((Token::Implies, _)) = self.peek() {
            self.advance();
            let right = self.implies()?;
            return Ok(Sentence::implies(left, right));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<Sentence> {
        let mut left = self.and()?;
        while let Some((Token::Or, _)) = self.peek() {
            self.advance();
            let right = self.and()?;
            left = Sentence::or(left, right);
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Sentence> {
        let mut left = self.unary()?;
        while let Some((Token::And, _)) = self.peek() {
            self.advance();
            let right = self.unary()?;
            left = Sentence::and(left, right);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Sentence> {
        match self.advance() {
            Some((Token::Not, _)) => Ok(Sentence::not(self.unary()?)),
            Some((Token::Ident(name), _)) => Ok(Sentence::Atom(name)),
            Some((Token::LParen, _)) => {
                let inner = self.iff()?;
                match self.advance() {
                    Some((Token::RParen, _)) => Ok(inner),
                    Some((token, position)) => Err(Error::Syntax {
                        position,
                        message: format!("expected `)`, found {}", token.describe()),
                    }),
                    None => Err(self.unexpected_end()),
                }
            }
            Some((token, position)) => Err(Error::Syntax {
                position,
                message: format!("expected a formula, found {}", token.describe()),
            }),
            None => Err(self.unexpected_end()),
        }
    }
}
