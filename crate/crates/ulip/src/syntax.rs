//! Formulas of the modal and conditional languages.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("syntax error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Language(String),
    #[error("invalid atom name `{0}`")]
    BadAtom(String),
}

fn parse_err<T>(pos: usize, msg: impl Into<String>) -> Result<T, SyntaxError> {
    Err(SyntaxError::Parse { pos, msg: msg.into() })
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: &str) -> Result<Atom, SyntaxError> {
        let mut chars = name.chars();
        let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
            && name != "true"
            && name != "false";
        if ok {
            Ok(Atom(Arc::from(name)))
        } else {
            Err(SyntaxError::BadAtom(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Language {
    Modal,
    Conditional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Polarity {
    Pos,
    Neg,
}

impl Polarity {
    pub fn dual(self) -> Polarity {
        match self {
            Polarity::Pos => Polarity::Neg,
            Polarity::Neg => Polarity::Pos,
        }
    }

    pub fn sign(self) -> &'static str {
        match self {
            Polarity::Pos => "+",
            Polarity::Neg => "-",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Bot,
    Var(Atom),
    And(Formula, Formula),
    Or(Formula, Formula),
    Imp(Formula, Formula),
    Box(Formula),
    Cond(Formula, Formula),
}

impl Node {
    fn tag(&self) -> u8 {
        match self {
            Node::Bot => 0,
            Node::Var(_) => 1,
            Node::And(..) => 2,
            Node::Or(..) => 3,
            Node::Imp(..) => 4,
            Node::Box(_) => 5,
            Node::Cond(..) => 6,
        }
    }
}

const HAS_BOX: u8 = 1;
const HAS_COND: u8 = 2;

struct Inner {
    node: Node,
    weight: u32,
    hash: u64,
    flags: u8,
    vars: OnceLock<SignedVars>,
}

/// Immutable, cheaply clonable formula tree.
#[derive(Clone)]
pub struct Formula(Arc<Inner>);

/// Positive and negative variables of a formula or sequent.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedVars {
    pub pos: BTreeSet<Atom>,
    pub neg: BTreeSet<Atom>,
}

impl Serialize for Atom {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Atom {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Atom::new(&s).map_err(serde::de::Error::custom)
    }
}

impl SignedVars {
    pub fn get(&self, pol: Polarity) -> &BTreeSet<Atom> {
        match pol {
            Polarity::Pos => &self.pos,
            Polarity::Neg => &self.neg,
        }
    }

    pub fn all(&self) -> BTreeSet<Atom> {
        self.pos.union(&self.neg).cloned().collect()
    }

    pub fn dual(&self) -> SignedVars {
        SignedVars { pos: self.neg.clone(), neg: self.pos.clone() }
    }

    pub fn extend(&mut self, other: &SignedVars) {
        self.pos.extend(other.pos.iter().cloned());
        self.neg.extend(other.neg.iter().cloned());
    }

    /// Per-polarity inclusion.
    pub fn is_subset(&self, other: &SignedVars) -> bool {
        self.pos.is_subset(&other.pos) && self.neg.is_subset(&other.neg)
    }
}

fn mix(h: u64, x: u64) -> u64 {
    (h ^ x).wrapping_mul(0x100_0000_01b3).rotate_left(23) ^ 0x9e37_79b9_7f4a_7c15
}

fn str_hash(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

impl Formula {
    fn make(node: Node) -> Formula {
        let tag = node.tag() as u64;
        let (weight, hash, flags) = match &node {
            Node::Bot => (0, mix(tag, 0), 0),
            Node::Var(a) => (0, mix(tag, str_hash(a.name())), 0),
            Node::And(a, b) | Node::Or(a, b) | Node::Imp(a, b) => {
                (a.weight() + b.weight() + 1, mix(mix(tag, a.0.hash), b.0.hash), a.0.flags | b.0.flags)
            }
            Node::Box(a) => (a.weight() + 1, mix(tag, a.0.hash), a.0.flags | HAS_BOX),
            Node::Cond(a, b) => (
                a.weight() + b.weight() + 1,
                mix(mix(tag, a.0.hash), b.0.hash),
                a.0.flags | b.0.flags | HAS_COND,
            ),
        };
        Formula(Arc::new(Inner { node, weight, hash, flags, vars: OnceLock::new() }))
    }

    pub fn bot() -> Formula {
        thread_local! { static BOT: Formula = Formula::make(Node::Bot); }
        BOT.with(|b| b.clone())
    }

    pub fn top() -> Formula {
        Formula::imp(Formula::bot(), Formula::bot())
    }

    pub fn var(a: Atom) -> Formula {
        Formula::make(Node::Var(a))
    }

    /// Atom from a name; panics on an invalid identifier.
    pub fn atom(name: &str) -> Formula {
        Formula::var(Atom::new(name).expect("valid atom name"))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::make(Node::And(a, b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::make(Node::Or(a, b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::make(Node::Imp(a, b))
    }

    pub fn not(a: Formula) -> Formula {
        Formula::imp(a, Formula::bot())
    }

    pub fn boxed(a: Formula) -> Formula {
        Formula::make(Node::Box(a))
    }

    pub fn cond(a: Formula, b: Formula) -> Formula {
        Formula::make(Node::Cond(a, b))
    }

    /// Right-nested conjunction; empty conjunction is ⊤.
    pub fn conj(items: Vec<Formula>) -> Formula {
        let mut it = items.into_iter().rev();
        match it.next() {
            None => Formula::top(),
            Some(last) => it.fold(last, |acc, f| Formula::and(f, acc)),
        }
    }

    /// Right-nested disjunction; empty disjunction is ⊥.
    pub fn disj(items: Vec<Formula>) -> Formula {
        let mut it = items.into_iter().rev();
        match it.next() {
            None => Formula::bot(),
            Some(last) => it.fold(last, |acc, f| Formula::or(f, acc)),
        }
    }

    pub fn node(&self) -> &Node {
        &self.0.node
    }

    pub fn weight(&self) -> u32 {
        self.0.weight
    }

    pub fn is_bot(&self) -> bool {
        matches!(self.node(), Node::Bot)
    }

    pub fn is_top(&self) -> bool {
        matches!(self.node(), Node::Imp(a, b) if a.is_bot() && b.is_bot())
    }

    pub fn as_atom(&self) -> Option<&Atom> {
        match self.node() {
            Node::Var(a) => Some(a),
            _ => None,
        }
    }

    /// `Some(a)` when the formula is `a -> false`.
    pub fn as_not(&self) -> Option<&Formula> {
        match self.node() {
            Node::Imp(a, b) if b.is_bot() => Some(a),
            _ => None,
        }
    }

    /// Box or conditional at the root.
    pub fn is_modal(&self) -> bool {
        matches!(self.node(), Node::Box(_) | Node::Cond(..))
    }

    /// Atom, ⊥, box or conditional: nothing a propositional rule can decompose.
    pub fn is_flat(&self) -> bool {
        matches!(self.node(), Node::Bot | Node::Var(_) | Node::Box(_) | Node::Cond(..))
    }

    pub fn has_box(&self) -> bool {
        self.0.flags & HAS_BOX != 0
    }

    pub fn has_cond(&self) -> bool {
        self.0.flags & HAS_COND != 0
    }

    /// `None` for purely propositional formulas; `Err` if both operators occur.
    pub fn language(&self) -> Result<Option<Language>, SyntaxError> {
        match (self.has_box(), self.has_cond()) {
            (true, true) => Err(SyntaxError::Language(format!("formula `{self}` mixes [] and >"))),
            (true, false) => Ok(Some(Language::Modal)),
            (false, true) => Ok(Some(Language::Conditional)),
            (false, false) => Ok(None),
        }
    }

    pub fn fits(&self, lang: Language) -> bool {
        match lang {
            Language::Modal => !self.has_cond(),
            Language::Conditional => !self.has_box(),
        }
    }

    pub fn signed_vars(&self) -> &SignedVars {
        self.0.vars.get_or_init(|| {
            let mut sv = SignedVars::default();
            collect_vars(self, true, &mut sv);
            sv
        })
    }

    pub fn vars(&self) -> BTreeSet<Atom> {
        self.signed_vars().all()
    }

    pub fn is_free(&self, p: &Atom, pol: Polarity) -> bool {
        !self.signed_vars().get(pol).contains(p)
    }

    pub fn occurs(&self, p: &Atom) -> bool {
        let sv = self.signed_vars();
        sv.pos.contains(p) || sv.neg.contains(p)
    }

    /// Replace every occurrence of `p` by `g`.
    pub fn substitute(&self, p: &Atom, g: &Formula) -> Result<Formula, SyntaxError> {
        if (self.has_box() && g.has_cond()) || (self.has_cond() && g.has_box()) {
            return Err(SyntaxError::Language(format!(
                "cannot substitute `{g}` into `{self}`: language mismatch"
            )));
        }
        Ok(self.subst(p, g))
    }

    fn subst(&self, p: &Atom, g: &Formula) -> Formula {
        if !self.occurs(p) {
            return self.clone();
        }
        match self.node() {
            Node::Bot => self.clone(),
            Node::Var(a) => {
                if a == p {
                    g.clone()
                } else {
                    self.clone()
                }
            }
            Node::And(a, b) => Formula::and(a.subst(p, g), b.subst(p, g)),
            Node::Or(a, b) => Formula::or(a.subst(p, g), b.subst(p, g)),
            Node::Imp(a, b) => Formula::imp(a.subst(p, g), b.subst(p, g)),
            Node::Box(a) => Formula::boxed(a.subst(p, g)),
            Node::Cond(a, b) => Formula::cond(a.subst(p, g), b.subst(p, g)),
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self.node() {
            Node::Bot | Node::Var(_) => 1,
            Node::Box(a) => 1 + a.size(),
            Node::And(a, b) | Node::Or(a, b) | Node::Imp(a, b) | Node::Cond(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn parse(text: &str, lang: Language) -> Result<Formula, SyntaxError> {
        let mut p = Parser::new(text, lang)?;
        let f = p.formula()?;
        p.expect_end()?;
        Ok(f)
    }
}

fn collect_vars(f: &Formula, positive: bool, out: &mut SignedVars) {
    match f.node() {
        Node::Bot => {}
        Node::Var(a) => {
            if positive {
                out.pos.insert(a.clone());
            } else {
                out.neg.insert(a.clone());
            }
        }
        Node::And(a, b) | Node::Or(a, b) => {
            collect_vars(a, positive, out);
            collect_vars(b, positive, out);
        }
        Node::Imp(a, b) | Node::Cond(a, b) => {
            collect_vars(a, !positive, out);
            collect_vars(b, positive, out);
        }
        Node::Box(a) => collect_vars(a, positive, out),
    }
}

impl PartialEq for Formula {
    fn eq(&self, other: &Formula) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.hash == other.0.hash && self.0.weight == other.0.weight && self.0.node == other.0.node)
    }
}

impl Eq for Formula {}

impl Hash for Formula {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

impl Ord for Formula {
    fn cmp(&self, other: &Formula) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.node().tag().cmp(&other.node().tag()))
            .then_with(|| match (self.node(), other.node()) {
                (Node::Var(a), Node::Var(b)) => a.cmp(b),
                (Node::Box(a), Node::Box(b)) => a.cmp(b),
                (Node::And(a1, b1), Node::And(a2, b2))
                | (Node::Or(a1, b1), Node::Or(a2, b2))
                | (Node::Imp(a1, b1), Node::Imp(a2, b2))
                | (Node::Cond(a1, b1), Node::Cond(a2, b2)) => a1.cmp(a2).then_with(|| b1.cmp(b2)),
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for Formula {
    fn partial_cmp(&self, other: &Formula) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Printing levels, loosest first.
const LVL_IMP: u8 = 1;
const LVL_COND: u8 = 2;
const LVL_OR: u8 = 3;
const LVL_AND: u8 = 4;
const LVL_UNARY: u8 = 5;

fn level(f: &Formula) -> u8 {
    match f.node() {
        Node::And(..) => LVL_AND,
        Node::Or(..) => LVL_OR,
        Node::Cond(..) => LVL_COND,
        Node::Imp(_, b) if !b.is_bot() => LVL_IMP,
        _ => LVL_UNARY,
    }
}

fn write_formula(f: &Formula, min: u8, out: &mut String) {
    let paren = level(f) < min;
    if paren {
        out.push('(');
    }
    match f.node() {
        Node::Bot => out.push_str("false"),
        Node::Var(a) => out.push_str(a.name()),
        Node::Imp(a, b) if a.is_bot() && b.is_bot() => out.push_str("true"),
        Node::Imp(a, b) if b.is_bot() => {
            out.push('~');
            write_formula(a, LVL_UNARY, out);
        }
        Node::Box(a) => {
            out.push_str("[]");
            write_formula(a, LVL_UNARY, out);
        }
        Node::And(a, b) => {
            write_formula(a, LVL_AND, out);
            out.push_str(" & ");
            write_formula(b, LVL_UNARY, out);
        }
        Node::Or(a, b) => {
            write_formula(a, LVL_OR, out);
            out.push_str(" | ");
            write_formula(b, LVL_AND, out);
        }
        Node::Cond(a, b) => {
            write_formula(a, LVL_UNARY, out);
            out.push_str(" > ");
            write_formula(b, LVL_UNARY, out);
        }
        Node::Imp(a, b) => {
            write_formula(a, LVL_COND, out);
            out.push_str(" -> ");
            write_formula(b, LVL_IMP, out);
        }
    }
    if paren {
        out.push(')');
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_formula(self, LVL_IMP, &mut s);
        f.write_str(&s)
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Formula {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    True,
    False,
    Not,
    Box,
    And,
    Or,
    Imp,
    Cond,
    LParen,
    RParen,
    Comma,
    Arrow,
}

pub(crate) fn lex(text: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'~' => Tok::Not,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'>' => Tok::Cond,
            b'[' if bytes.get(i + 1) == Some(&b']') => {
                i += 1;
                Tok::Box
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Imp
            }
            b'=' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            c if c.is_ascii_alphabetic() => {
                while i + 1 < bytes.len() && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_') {
                    i += 1;
                }
                match &text[start..=i] {
                    "true" => Tok::True,
                    "false" => Tok::False,
                    s => Tok::Ident(s.to_string()),
                }
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return parse_err(i, format!("unexpected character `{ch}`"));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

pub(crate) struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    lang: Language,
}

impl Parser {
    pub(crate) fn new(text: &str, lang: Language) -> Result<Parser, SyntaxError> {
        Ok(Parser { toks: lex(text)?, pos: 0, end: text.len(), lang })
    }

    pub(crate) fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    pub(crate) fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect_end(&self) -> Result<(), SyntaxError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => parse_err(self.here(), format!("unexpected token {t:?}")),
        }
    }

    pub(crate) fn formula(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.cond()?;
        if self.eat(&Tok::Imp) {
            let rhs = self.formula()?;
            Ok(Formula::imp(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn cond(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.or()?;
        if self.peek() == Some(&Tok::Cond) {
            if self.lang != Language::Conditional {
                return parse_err(self.here(), "`>` is not part of the modal language");
            }
            self.pos += 1;
            let rhs = self.or()?;
            if self.peek() == Some(&Tok::Cond) {
                return parse_err(self.here(), "`>` is non-associative; add parentheses");
            }
            Ok(Formula::cond(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<Formula, SyntaxError> {
        let mut lhs = self.and()?;
        while self.eat(&Tok::Or) {
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, SyntaxError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::And) {
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        let at = self.here();
        let tok = match self.toks.get(self.pos) {
            Some((_, t)) => t.clone(),
            None => return parse_err(at, "unexpected end of input"),
        };
        self.pos += 1;
        match tok {
            Tok::Not => Ok(Formula::not(self.unary()?)),
            Tok::Box => {
                if self.lang != Language::Modal {
                    return parse_err(at, "`[]` is not part of the conditional language");
                }
                Ok(Formula::boxed(self.unary()?))
            }
            Tok::True => Ok(Formula::top()),
            Tok::False => Ok(Formula::bot()),
            Tok::Ident(s) => Ok(Formula::var(Atom::new(&s)?)),
            Tok::LParen => {
                let f = self.formula()?;
                if !self.eat(&Tok::RParen) {
                    return parse_err(self.here(), "expected `)`");
                }
                Ok(f)
            }
            t => parse_err(at, format!("unexpected token {t:?}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Formula {
        Formula::parse(s, Language::Modal).unwrap()
    }

    fn c(s: &str) -> Formula {
        Formula::parse(s, Language::Conditional).unwrap()
    }

    fn set(xs: &[&str]) -> BTreeSet<Atom> {
        xs.iter().map(|x| Atom::new(x).unwrap()).collect()
    }

    #[test]
    fn weights() {
        assert_eq!(Formula::bot().weight(), 0);
        assert_eq!(m("p -> q").weight(), 1);
        assert_eq!(m("[](p & q)").weight(), 2);
        assert_eq!(c("p > q").weight(), 1);
        assert_eq!(Formula::top().weight(), 1);
    }

    #[test]
    fn signed_variables() {
        let sv = m("p -> q").signed_vars().clone();
        assert_eq!(sv.pos, set(&["q"]));
        assert_eq!(sv.neg, set(&["p"]));
        let sv = c("(p > q) -> r").signed_vars().clone();
        assert_eq!(sv.pos, set(&["p", "r"]));
        assert_eq!(sv.neg, set(&["q"]));
        assert!(m("~p").is_free(&Atom::new("p").unwrap(), Polarity::Pos));
        assert!(!m("p").is_free(&Atom::new("p").unwrap(), Polarity::Pos));
        assert!(c("p > q").is_free(&Atom::new("q").unwrap(), Polarity::Neg));
    }

    #[test]
    fn substitution() {
        let p = Atom::new("p").unwrap();
        assert_eq!(m("p & q").substitute(&p, &Formula::bot()).unwrap(), m("false & q"));
        assert_eq!(m("[]p").substitute(&p, &m("~q")).unwrap(), m("[]~q"));
        let r = Atom::new("r").unwrap();
        let beta = m("[]p -> q");
        assert_eq!(beta.substitute(&r, &m("~q")).unwrap(), beta);
        assert!(m("[]p").substitute(&p, &c("q > r")).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(
            m("p & q -> []r"),
            Formula::imp(Formula::and(Formula::atom("p"), Formula::atom("q")), Formula::boxed(Formula::atom("r")))
        );
        assert_eq!(c("(p > q) | r"), Formula::or(Formula::cond(Formula::atom("p"), Formula::atom("q")), Formula::atom("r")));
        assert!(Formula::parse("p > q > r", Language::Conditional).is_err());
        assert!(Formula::parse("p > q", Language::Modal).is_err());
        assert!(Formula::parse("[]q", Language::Conditional).is_err());
        assert!(Formula::parse("p &", Language::Modal).is_err());
        assert_eq!(m("p -> q -> r"), Formula::imp(Formula::atom("p"), m("q -> r")));
        assert_eq!(m("true"), Formula::top());
        assert_eq!(m("~p"), Formula::not(Formula::atom("p")));
    }

    #[test]
    fn printing_round_trip() {
        for s in ["p & q -> []r", "(p -> q) -> r", "~(p | q) & ~~r", "[][]false", "p | q & r", "(p | q) & r", "true"] {
            let f = m(s);
            assert_eq!(m(&f.to_string()), f, "{s}");
        }
        for s in ["(p > q) | r", "(p & q) > ~r", "(p > q) > r", "p > (q > r)", "~(p > q) -> r"] {
            let f = c(s);
            assert_eq!(c(&f.to_string()), f, "{s}");
        }
    }

    #[test]
    fn total_order_is_weight_first() {
        assert!(m("p") < m("[]p"));
        assert!(m("false") < m("p"));
        assert!(m("p & q") < m("p | q"));
        assert_eq!(m("[]p").cmp(&m("[]p")), Ordering::Equal);
    }
}
