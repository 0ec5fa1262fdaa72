//! Propositional formulas: parsing, evaluation, truth tables and
//! tautology / contradiction classification.
//!
//! Concrete syntax, loosest to tightest binding:
//!
//! ```text
//! formula := iff
//! iff     := imp ("<->" imp)*
//! imp     := xor ("->" imp)?
//! xor     := or ("^" or)*
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := ("!" | "~") unary | atom | "(" formula ")"
//! atom    := [a-z][a-z0-9]*
//! ```
//!
//! The Unicode connectives `¬ ∧ ∨ ⊻ ⇒ ⇔` are accepted as aliases.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest atom count accepted by the exhaustive table routines.
pub const MAX_ATOMS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Xor(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Self {
        Formula::Atom(name.to_string())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn xor(a: Formula, b: Formula) -> Self {
        Formula::Xor(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    /// Distinct atoms in order of first appearance, left to right.
    pub fn atoms(&self) -> Vec<String> {
        fn walk(f: &Formula, out: &mut Vec<String>) {
            match f {
                Formula::Atom(name) => {
                    if !out.contains(name) {
                        out.push(name.clone());
                    }
                }
                Formula::Not(a) => walk(a, out),
                Formula::And(a, b)
                | Formula::Or(a, b)
                | Formula::Xor(a, b)
                | Formula::Implies(a, b)
                | Formula::Iff(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Iff(..) => 1,
            Formula::Implies(..) => 2,
            Formula::Xor(..) => 3,
            Formula::Or(..) => 4,
            Formula::And(..) => 5,
            Formula::Not(..) => 6,
            Formula::Atom(..) => 7,
        }
    }

    /// Evaluates against a full assignment without allocating a map.
    fn eval_with(&self, lookup: &dyn Fn(&str) -> Option<bool>) -> Result<bool> {
        Ok(match self {
            Formula::Atom(name) => lookup(name).ok_or_else(|| Error::UnboundAtom(name.clone()))?,
            Formula::Not(a) => !a.eval_with(lookup)?,
            Formula::And(a, b) => a.eval_with(lookup)? & b.eval_with(lookup)?,
            Formula::Or(a, b) => a.eval_with(lookup)? | b.eval_with(lookup)?,
            Formula::Xor(a, b) => a.eval_with(lookup)? ^ b.eval_with(lookup)?,
            Formula::Implies(a, b) => !a.eval_with(lookup)? | b.eval_with(lookup)?,
            Formula::Iff(a, b) => a.eval_with(lookup)? == b.eval_with(lookup)?,
        })
    }
}

impl fmt::Display for Formula {
    /// Prints with the fewest parentheses the grammar needs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn child(f: &mut fmt::Formatter<'_>, c: &Formula, paren: bool) -> fmt::Result {
            if paren {
                write!(f, "({c})")
            } else {
                write!(f, "{c}")
            }
        }
        let p = self.precedence();
        let (a, b, op, right_assoc) = match self {
            Formula::Atom(name) => return write!(f, "{name}"),
            Formula::Not(a) => {
                write!(f, "!")?;
                return child(f, a, a.precedence() < p);
            }
            Formula::And(a, b) => (a, b, "&", false),
            Formula::Or(a, b) => (a, b, "|", false),
            Formula::Xor(a, b) => (a, b, "^", false),
            Formula::Implies(a, b) => (a, b, "->", true),
            Formula::Iff(a, b) => (a, b, "<->", false),
        };
        let (left_paren, right_paren) = if right_assoc {
            (a.precedence() <= p, b.precedence() < p)
        } else {
            (a.precedence() < p, b.precedence() <= p)
        };
        child(f, a, left_paren)?;
        write!(f, " {op} ")?;
        child(f, b, right_paren)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Atom(String),
    Not,
    And,
    Or,
    Xor,
    Implies,
    Iff,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let rest = &text[pos..];
        let (tok, width) = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '!' | '~' | '¬' => (Tok::Not, 1),
            '&' | '∧' => (Tok::And, 1),
            '|' | '∨' => (Tok::Or, 1),
            '^' | '⊻' => (Tok::Xor, 1),
            '⇒' => (Tok::Implies, 1),
            '⇔' => (Tok::Iff, 1),
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            '-' if rest.starts_with("->") => (Tok::Implies, 2),
            '<' if rest.starts_with("<->") => (Tok::Iff, 3),
            'a'..='z' => {
                let mut j = i;
                while j < chars.len() && (chars[j].1.is_ascii_lowercase() || chars[j].1.is_ascii_digit()) {
                    j += 1;
                }
                let end = chars.get(j).map_or(text.len(), |&(p, _)| p);
                (Tok::Atom(text[pos..end].to_string()), j - i)
            }
            other => return Err(Error::parse(pos, format!("unexpected character '{other}'"))),
        };
        out.push((pos, tok));
        i += width;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut lhs = self.imp()?;
        while self.eat(&Tok::Iff) {
            lhs = Formula::iff(lhs, self.imp()?);
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula> {
        let lhs = self.xor()?;
        if self.eat(&Tok::Implies) {
            return Ok(Formula::implies(lhs, self.imp()?));
        }
        Ok(lhs)
    }

    fn xor(&mut self) -> Result<Formula> {
        let mut lhs = self.or()?;
        while self.eat(&Tok::Xor) {
            lhs = Formula::xor(lhs, self.or()?);
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut lhs = self.and()?;
        while self.eat(&Tok::Or) {
            lhs = Formula::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::And) {
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        let pos = self.pos();
        match self.toks.get(self.at).map(|(_, t)| t.clone()) {
            Some(Tok::Not) => {
                self.at += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Tok::Atom(name)) => {
                self.at += 1;
                Ok(Formula::Atom(name))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.iff()?;
                if !self.eat(&Tok::RParen) {
                    return Err(Error::parse(self.pos(), "expected ')'"));
                }
                Ok(inner)
            }
            Some(t) => Err(Error::parse(pos, format!("unexpected token {t:?}"))),
            None => Err(Error::parse(pos, "unexpected end of formula")),
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula> {
    if text.trim().is_empty() {
        return Err(Error::parse(0, "empty formula"));
    }
    let mut p = Parser { toks: tokenize(text)?, at: 0, end: text.len() };
    let f = p.iff()?;
    if p.at != p.toks.len() {
        return Err(Error::parse(p.pos(), "trailing input"));
    }
    Ok(f)
}

impl FromStr for Formula {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_formula(s)
    }
}

pub fn evaluate(f: &Formula, asg: &HashMap<String, bool>) -> Result<bool> {
    f.eval_with(&|name| asg.get(name).copied())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthRow {
    pub values: Vec<bool>,
    pub result: bool,
}

/// All `2^n` assignments, first atom varying slowest, true before false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    pub atoms: Vec<String>,
    pub rows: Vec<TruthRow>,
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tf = |b: bool| if b { "T" } else { "F" };
        writeln!(f, "{} | result", self.atoms.join(" "))?;
        for row in &self.rows {
            let cells: Vec<String> = row
                .values
                .iter()
                .zip(&self.atoms)
                .map(|(&v, name)| format!("{:<width$}", tf(v), width = name.len()))
                .collect();
            writeln!(f, "{} | {}", cells.join(" "), tf(row.result))?;
        }
        Ok(())
    }
}

fn assignments(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u64..(1u64 << n)).map(move |i| (0..n).map(|j| (i >> (n - 1 - j)) & 1 == 0).collect())
}

fn eval_row(f: &Formula, atoms: &[String], values: &[bool]) -> Result<bool> {
    f.eval_with(&|name| atoms.iter().position(|a| a == name).map(|k| values[k]))
}

pub fn truth_table(f: &Formula) -> Result<TruthTable> {
    let atoms = f.atoms();
    if atoms.len() > MAX_ATOMS {
        return Err(Error::TooManyAtoms(atoms.len()));
    }
    let rows = assignments(atoms.len())
        .map(|values| {
            let result = eval_row(f, &atoms, &values)?;
            Ok(TruthRow { values, result })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TruthTable { atoms, rows })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Tautology,
    Contradiction,
    Contingent,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Tautology => "tautology",
            Classification::Contradiction => "contradiction",
            Classification::Contingent => "contingent",
        })
    }
}

pub fn classify(f: &Formula) -> Result<Classification> {
    let table = truth_table(f)?;
    let trues = table.rows.iter().filter(|r| r.result).count();
    Ok(if trues == table.rows.len() {
        Classification::Tautology
    } else if trues == 0 {
        Classification::Contradiction
    } else {
        Classification::Contingent
    })
}

/// Logical equivalence: `f <-> g` is a tautology.
pub fn equivalent(f: &Formula, g: &Formula) -> Result<bool> {
    Ok(classify(&Formula::iff(f.clone(), g.clone()))? == Classification::Tautology)
}
