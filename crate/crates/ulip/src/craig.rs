//! Bounded exhaustive search for Craig interpolants.

use crate::calculus::LogicId;
use crate::generate::formulas_by_weight;
use crate::interpolation::InterpError;
use crate::prover::Prover;
use crate::syntax::{Atom, Formula};

/// The first formula over `alphabet` of weight at most `bound`, in enumeration
/// order, with `⊢ φ → θ` and `⊢ θ → ψ`. Requires `⊢ φ → ψ`.
pub fn search_craig_interpolant(
    prover: &Prover,
    logic: LogicId,
    phi: &Formula,
    psi: &Formula,
    alphabet: &[Atom],
    bound: u32,
) -> Result<Option<Formula>, InterpError> {
    if !prover.entails(logic, phi, psi) {
        return Err(InterpError::Unprovable(format!("{phi} => {psi}")));
    }
    let levels = formulas_by_weight(logic.language(), alphabet, bound);
    Ok(levels
        .into_iter()
        .flatten()
        .find(|t| prover.entails(logic, phi, t) && prover.entails(logic, t, psi)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::atoms;
    use crate::prover;
    use crate::syntax::Language;

    fn f(t: &str) -> Formula {
        Formula::parse(t, Language::Modal).unwrap()
    }

    #[test]
    fn trivial_and_k() {
        let pr = prover::global();
        let q = atoms(&["q"]);
        assert_eq!(search_craig_interpolant(pr, LogicId::K, &f("q"), &f("q"), &q, 0).unwrap(), Some(f("q")));
        let (phi, psi) = (f("[](~q & r)"), f("[](p & q) -> []false"));
        let t = search_craig_interpolant(pr, LogicId::K, &phi, &psi, &q, 4).unwrap().expect("K has interpolants");
        assert!(pr.entails(LogicId::K, &phi, &t) && pr.entails(LogicId::K, &t, &psi));
        assert!(t.vars().iter().all(|a| a.name() == "q"));
    }

    #[test]
    fn unentailed_pair_is_an_error() {
        let r = search_craig_interpolant(prover::global(), LogicId::K, &f("p"), &f("q"), &atoms(&["q"]), 1);
        assert!(r.is_err());
    }
}
