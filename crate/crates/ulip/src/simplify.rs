//! Equivalence-preserving clean-up of interpolant disjunctions and conjunctions.

use crate::calculus::LogicId;
use crate::prover::Prover;
use crate::sequent::Sequent;
use crate::syntax::{Formula, Node};

/// Builds conjunctions and disjunctions with ⊤/⊥ absorption, flattening,
/// duplicate removal and prover-checked subsumption. Never introduces atoms.
pub struct Simplifier {
    prover: &'static Prover,
    check: bool,
}

fn flatten(f: Formula, conj: bool, out: &mut Vec<Formula>) {
    match (f.node(), conj) {
        (Node::And(a, b), true) | (Node::Or(a, b), false) => {
            flatten(a.clone(), conj, out);
            flatten(b.clone(), conj, out);
        }
        _ => out.push(f),
    }
}

impl Simplifier {
    /// With `check` set, every result is verified equivalent to its input.
    pub fn new(prover: &'static Prover, check: bool) -> Simplifier {
        Simplifier { prover, check }
    }

    pub fn or(&self, logic: LogicId, items: Vec<Formula>) -> Formula {
        self.build(logic, items, false)
    }

    pub fn and(&self, logic: LogicId, items: Vec<Formula>) -> Formula {
        self.build(logic, items, true)
    }

    fn build(&self, logic: LogicId, items: Vec<Formula>, conj: bool) -> Formula {
        let raw = if conj { Formula::conj(items.clone()) } else { Formula::disj(items.clone()) };
        let out = self.reduce(logic, items, conj);
        if self.check {
            assert!(self.prover.equivalent(logic, &raw, &out), "simplifier changed the meaning of {raw} into {out}");
        }
        out
    }

    fn reduce(&self, logic: LogicId, items: Vec<Formula>, conj: bool) -> Formula {
        let (unit, zero) = if conj { (Formula::top(), Formula::bot()) } else { (Formula::bot(), Formula::top()) };
        let mut flat = Vec::new();
        for f in items {
            flatten(strip_double_negation(f), conj, &mut flat);
        }
        let mut kept: Vec<Formula> = Vec::new();
        for f in flat {
            if f == unit || kept.contains(&f) {
                continue;
            }
            if f == zero {
                return zero;
            }
            let trivial = if conj {
                self.prover.provable(logic, &Sequent::left(f.clone()))
            } else {
                self.prover.provable(logic, &Sequent::right(f.clone()))
            };
            if trivial {
                return zero;
            }
            let absorbed = !conj && self.prover.provable(logic, &Sequent::left(f.clone()))
                || conj && self.prover.provable(logic, &Sequent::right(f.clone()));
            if !absorbed {
                kept.push(f);
            }
        }
        // Drop members implied by (for ∨) or implying (for ∧) another member;
        // among equivalent members the first survives.
        let weaker = |a: &Formula, b: &Formula| {
            if conj {
                self.prover.entails(logic, a, b)
            } else {
                self.prover.entails(logic, b, a)
            }
        };
        let mut result: Vec<Formula> = Vec::new();
        for (i, f) in kept.iter().enumerate() {
            let redundant = kept.iter().enumerate().any(|(j, g)| {
                j != i && weaker(g, f) && (j < i || !weaker(f, g))
            });
            if !redundant {
                result.push(f.clone());
            }
        }
        if result.len() < 2 {
            return result.pop().unwrap_or(unit);
        }
        let out = if conj { Formula::conj(result) } else { Formula::disj(result) };
        let collapses = if conj {
            self.prover.provable(logic, &Sequent::left(out.clone()))
        } else {
            self.prover.provable(logic, &Sequent::right(out.clone()))
        };
        if collapses {
            zero
        } else {
            out
        }
    }
}

fn strip_double_negation(f: Formula) -> Formula {
    match f.as_not().and_then(Formula::as_not) {
        Some(g) => strip_double_negation(g.clone()),
        None => f,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prover;
    use crate::syntax::Language;

    fn f(t: &str) -> Formula {
        Formula::parse(t, Language::Modal).unwrap()
    }

    #[test]
    fn absorption_and_subsumption() {
        let s = Simplifier::new(prover::global(), true);
        let k = LogicId::K;
        assert_eq!(s.or(k, vec![f("false"), f("q")]), f("q"));
        assert_eq!(s.or(k, vec![f("q"), f("true")]), f("true"));
        assert_eq!(s.or(k, vec![f("q & r"), f("q")]), f("q"));
        assert_eq!(s.and(k, vec![f("q & r"), f("q")]), f("q & r"));
        assert_eq!(s.and(k, vec![f("q"), f("~q")]), f("false"));
        assert_eq!(s.or(k, vec![f("~~q"), f("q")]), f("q"));
        assert_eq!(s.or(k, vec![]), f("false"));
        assert_eq!(s.and(k, vec![]), f("true"));
        assert_eq!(s.or(k, vec![f("[]q"), f("[](q & q)")]), f("[]q"));
    }
}
