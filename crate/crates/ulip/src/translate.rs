//! The `t` (□ ↦ ⊤▷) and `s` (▷ ↦ □) translations between the two languages.

use crate::syntax::{Formula, Node};

/// `(□φ)ᵗ = ⊤ ▷ φᵗ`, homomorphic on the propositional connectives.
pub fn translate_t(f: &Formula) -> Formula {
    match f.node() {
        Node::Bot | Node::Var(_) => f.clone(),
        Node::And(a, b) => Formula::and(translate_t(a), translate_t(b)),
        Node::Or(a, b) => Formula::or(translate_t(a), translate_t(b)),
        Node::Imp(a, b) => Formula::imp(translate_t(a), translate_t(b)),
        Node::Box(a) => Formula::cond(Formula::top(), translate_t(a)),
        Node::Cond(a, b) => Formula::cond(translate_t(a), translate_t(b)),
    }
}

/// `(θ ▷ ψ)ˢ = □ψˢ`; the antecedent of each conditional is discarded.
pub fn translate_s(f: &Formula) -> Formula {
    match f.node() {
        Node::Bot | Node::Var(_) => f.clone(),
        Node::And(a, b) => Formula::and(translate_s(a), translate_s(b)),
        Node::Or(a, b) => Formula::or(translate_s(a), translate_s(b)),
        Node::Imp(a, b) => Formula::imp(translate_s(a), translate_s(b)),
        Node::Box(a) => Formula::boxed(translate_s(a)),
        Node::Cond(_, b) => Formula::boxed(translate_s(b)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::Language;

    #[test]
    fn examples() {
        let m = |t: &str| Formula::parse(t, Language::Modal).unwrap();
        let c = |t: &str| Formula::parse(t, Language::Conditional).unwrap();
        assert_eq!(translate_t(&m("[]p")), c("true > p"));
        assert_eq!(translate_s(&c("q > p")), m("[]p"));
        let f = m("[](p & q)");
        assert_eq!(translate_s(&translate_t(&f)), f);
        assert_eq!(translate_t(&f).vars(), f.vars());
    }
}
