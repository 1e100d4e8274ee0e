//! Multiset sequents kept in canonical (sorted) form.

use std::fmt;

use serde::Serialize;

use crate::syntax::{Atom, Formula, Language, Parser, Polarity, SignedVars, SyntaxError, Tok};

/// `Γ ⇒ Δ` with both sides sorted by the total formula order, so that equal
/// multisets are equal values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Sequent {
    ant: Vec<Formula>,
    suc: Vec<Formula>,
}

impl Sequent {
    pub fn new(mut ant: Vec<Formula>, mut suc: Vec<Formula>) -> Sequent {
        ant.sort();
        suc.sort();
        Sequent { ant, suc }
    }

    pub fn empty() -> Sequent {
        Sequent::default()
    }

    /// `(⇒ f)`
    pub fn right(f: Formula) -> Sequent {
        Sequent { ant: vec![], suc: vec![f] }
    }

    /// `(f ⇒)`
    pub fn left(f: Formula) -> Sequent {
        Sequent { ant: vec![f], suc: vec![] }
    }

    /// `(a ⇒ b)`
    pub fn arrow(a: Formula, b: Formula) -> Sequent {
        Sequent { ant: vec![a], suc: vec![b] }
    }

    pub fn ant(&self) -> &[Formula] {
        &self.ant
    }

    pub fn suc(&self) -> &[Formula] {
        &self.suc
    }

    pub fn len(&self) -> usize {
        self.ant.len() + self.suc.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ant.is_empty() && self.suc.is_empty()
    }

    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.ant.iter().chain(self.suc.iter())
    }

    /// `S · T`: componentwise multiset union.
    pub fn compose(&self, other: &Sequent) -> Sequent {
        Sequent {
            ant: merge(&self.ant, &other.ant),
            suc: merge(&self.suc, &other.suc),
        }
    }

    pub fn add_ant(&self, f: Formula) -> Sequent {
        let mut ant = self.ant.clone();
        let i = ant.partition_point(|g| g <= &f);
        ant.insert(i, f);
        Sequent { ant, suc: self.suc.clone() }
    }

    pub fn add_suc(&self, f: Formula) -> Sequent {
        let mut suc = self.suc.clone();
        let i = suc.partition_point(|g| g <= &f);
        suc.insert(i, f);
        Sequent { ant: self.ant.clone(), suc }
    }

    pub fn remove_ant_at(&self, i: usize) -> Sequent {
        let mut ant = self.ant.clone();
        ant.remove(i);
        Sequent { ant, suc: self.suc.clone() }
    }

    pub fn remove_suc_at(&self, i: usize) -> Sequent {
        let mut suc = self.suc.clone();
        suc.remove(i);
        Sequent { ant: self.ant.clone(), suc }
    }

    /// Remove one occurrence of `f` from the antecedent.
    pub fn without_ant(&self, f: &Formula) -> Option<Sequent> {
        self.ant.iter().position(|g| g == f).map(|i| self.remove_ant_at(i))
    }

    /// Remove one occurrence of `f` from the succedent.
    pub fn without_suc(&self, f: &Formula) -> Option<Sequent> {
        self.suc.iter().position(|g| g == f).map(|i| self.remove_suc_at(i))
    }

    /// Multiset difference `self − other`, or `None` if `other` is not contained.
    pub fn minus(&self, other: &Sequent) -> Option<Sequent> {
        Some(Sequent { ant: sub(&self.ant, &other.ant)?, suc: sub(&self.suc, &other.suc)? })
    }

    pub fn contains(&self, other: &Sequent) -> bool {
        self.minus(other).is_some()
    }

    pub fn weight(&self) -> u32 {
        self.formulas().map(Formula::weight).sum()
    }

    /// `V⁺(S) = V⁻(Sᵃ) ∪ V⁺(Sˢ)`, `V⁻(S) = V⁺(Sᵃ) ∪ V⁻(Sˢ)`.
    pub fn signed_vars(&self) -> SignedVars {
        let mut out = SignedVars::default();
        for f in &self.ant {
            out.extend(&f.signed_vars().dual());
        }
        for f in &self.suc {
            out.extend(f.signed_vars());
        }
        out
    }

    pub fn is_free(&self, p: &Atom, pol: Polarity) -> bool {
        self.ant.iter().all(|f| f.is_free(p, pol.dual())) && self.suc.iter().all(|f| f.is_free(p, pol))
    }

    pub fn occurs(&self, p: &Atom) -> bool {
        self.formulas().any(|f| f.occurs(p))
    }

    pub fn language(&self) -> Result<Option<Language>, SyntaxError> {
        let mut lang = None;
        for f in self.formulas() {
            if let Some(l) = f.language()? {
                if lang.is_some() && lang != Some(l) {
                    return Err(SyntaxError::Language(format!("sequent `{self}` mixes [] and >")));
                }
                lang = Some(l);
            }
        }
        Ok(lang)
    }

    pub fn fits(&self, lang: Language) -> bool {
        self.formulas().all(|f| f.fits(lang))
    }

    /// The canonical memoization key; sequents are stored in normal form already.
    pub fn normal_form(&self) -> &Sequent {
        self
    }

    /// Parse `F, F => F, F`; either side may be empty. A bare formula `F`
    /// (no `=>`) is read as `=> F`.
    pub fn parse(text: &str, lang: Language) -> Result<Sequent, SyntaxError> {
        let mut p = Parser::new(text, lang)?;
        let mut first = Vec::new();
        if p.peek() != Some(&Tok::Arrow) && p.peek().is_some() {
            first.push(p.formula()?);
            while p.eat(&Tok::Comma) {
                first.push(p.formula()?);
            }
        }
        if !p.eat(&Tok::Arrow) {
            p.expect_end()?;
            if first.len() != 1 {
                return Err(SyntaxError::Parse { pos: text.len(), msg: "expected `=>`".into() });
            }
            return Ok(Sequent::new(vec![], first));
        }
        let mut second = Vec::new();
        if p.peek().is_some() {
            second.push(p.formula()?);
            while p.eat(&Tok::Comma) {
                second.push(p.formula()?);
            }
        }
        p.expect_end()?;
        Ok(Sequent::new(first, second))
    }
}

fn merge(a: &[Formula], b: &[Formula]) -> Vec<Formula> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i].clone());
            i += 1;
        } else {
            out.push(b[j].clone());
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn sub(a: &[Formula], b: &[Formula]) -> Option<Vec<Formula>> {
    let mut out = Vec::with_capacity(a.len());
    let mut j = 0;
    for f in a {
        if j < b.len() && f == &b[j] {
            j += 1;
        } else {
            out.push(f.clone());
        }
    }
    (j == b.len()).then_some(out)
}

fn write_side(f: &mut fmt::Formatter<'_>, side: &[Formula]) -> fmt::Result {
    for (i, g) in side.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{g}")?;
    }
    Ok(())
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_side(f, &self.ant)?;
        if !self.ant.is_empty() {
            f.write_str(" ")?;
        }
        f.write_str("=>")?;
        if !self.suc.is_empty() {
            f.write_str(" ")?;
        }
        write_side(f, &self.suc)
    }
}

impl fmt::Debug for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Sequent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn s(t: &str) -> Sequent {
        Sequent::parse(t, Language::Modal).unwrap()
    }

    fn cs(t: &str) -> Sequent {
        Sequent::parse(t, Language::Conditional).unwrap()
    }

    fn set(xs: &[&str]) -> BTreeSet<Atom> {
        xs.iter().map(|x| Atom::new(x).unwrap()).collect()
    }

    #[test]
    fn composition() {
        assert_eq!(s("p => q").compose(&s("=> r")), s("p => q, r"));
        assert_eq!(s("p => q").compose(&Sequent::empty()), s("p => q"));
        let d = s("p =>").compose(&s("p =>"));
        assert_eq!(d.ant().len(), 2);
        assert_eq!(d, s("p, p =>"));
    }

    #[test]
    fn weights() {
        assert_eq!(s("=>").weight(), 0);
        assert_eq!(s("[]p => []p").weight(), 2);
        assert_eq!(cs("p > q, r => false").weight(), 1);
    }

    #[test]
    fn signed_variables() {
        let v = s("p => q").signed_vars();
        assert_eq!(v.pos, set(&["q"]));
        assert_eq!(v.neg, set(&["p"]));
        assert_eq!(s("=>").signed_vars(), SignedVars::default());
        let v = cs("p > q => r").signed_vars();
        assert_eq!(v.pos, set(&["p", "r"]));
        assert_eq!(v.neg, set(&["q"]));
    }

    #[test]
    fn normal_forms() {
        assert_eq!(s("q, p =>"), s("p, q =>"));
        assert_ne!(s("p, p =>"), s("p =>"));
        let a = Sequent::right(Formula::boxed(Formula::atom("p")));
        let b = Sequent::right(Formula::boxed(Formula::atom("p")));
        assert_eq!(a.normal_form(), b.normal_form());
    }

    #[test]
    fn parse_and_print() {
        for t in ["=>", "p =>", "=> p", "p, []q => r | s, false"] {
            assert_eq!(s(&s(t).to_string()), s(t));
        }
        assert_eq!(s("p & q"), s("=> p & q"));
        assert!(Sequent::parse("p => q => r", Language::Modal).is_err());
        assert!(Sequent::parse("p, q", Language::Modal).is_err());
    }

    #[test]
    fn multiset_difference() {
        assert_eq!(s("p, p, q => r").minus(&s("p => r")), Some(s("p, q =>")));
        assert_eq!(s("p => r").minus(&s("q =>")), None);
    }
}
