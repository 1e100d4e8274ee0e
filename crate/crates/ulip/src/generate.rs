//! Exhaustive formula enumeration by weight and seeded random generation.

use std::collections::HashSet;

use rand::Rng;

use crate::sequent::Sequent;
use crate::syntax::{Atom, Formula, Language, Node, SignedVars};

/// All formulas over `alphabet` (plus ⊥) of weight `0..=max`, indexed by
/// weight. Redundant shapes are skipped when a provably equivalent formula of
/// no greater weight is also produced: commuted or repeated `∧`/`∨` operands,
/// ⊥ or ⊤ operands of `∧`/`∨`, and implications from ⊥ or into ⊤ other than ⊤
/// itself. Propositional (modality-free) formulas are further kept only once
/// per truth table and signed-variable profile. Every logic here is closed
/// under replacement of equivalents, so nothing is lost up to provable
/// equivalence with the same polarity profile.
pub fn formulas_by_weight(lang: Language, alphabet: &[Atom], max: u32) -> Vec<Vec<Formula>> {
    assert!(alphabet.len() <= 6, "truth tables are limited to six atoms");
    let mut seen: HashSet<(u64, SignedVars)> = HashSet::new();
    let mut levels: Vec<Vec<Formula>> = Vec::new();
    let mut base: Vec<Formula> = alphabet.iter().cloned().map(Formula::var).collect();
    base.push(Formula::bot());
    base.sort();
    for f in &base {
        seen.insert((truth_table(f, alphabet).unwrap(), f.signed_vars().clone()));
    }
    levels.push(base);
    let top = Formula::top();
    let trivial = |f: &Formula| f.is_bot() || *f == top;
    for w in 1..=max {
        let mut out = Vec::new();
        let prev = &levels[w as usize - 1];
        match lang {
            Language::Modal => out.extend(prev.iter().map(|a| Formula::boxed(a.clone()))),
            Language::Conditional => {}
        }
        for wa in 0..w {
            let wb = w - 1 - wa;
            for a in &levels[wa as usize] {
                for b in &levels[wb as usize] {
                    if lang == Language::Conditional {
                        out.push(Formula::cond(a.clone(), b.clone()));
                    }
                    if a.is_bot() {
                        if b.is_bot() {
                            out.push(Formula::imp(a.clone(), b.clone()));
                        }
                    } else if *b != top && *a != top {
                        out.push(Formula::imp(a.clone(), b.clone()));
                    }
                    if a < b && !trivial(a) && !trivial(b) {
                        out.push(Formula::and(a.clone(), b.clone()));
                        out.push(Formula::or(a.clone(), b.clone()));
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out.retain(|f| match truth_table(f, alphabet) {
            Some(t) => seen.insert((t, f.signed_vars().clone())),
            None => true,
        });
        levels.push(out);
    }
    levels
}

/// Truth table of a modality-free formula over `alphabet` (row `i` assigns
/// bit `k` of `i` to the `k`-th atom), or `None` if a modality occurs.
pub fn truth_table(f: &Formula, alphabet: &[Atom]) -> Option<u64> {
    let rows = 1u32 << alphabet.len();
    let full = if rows == 64 { u64::MAX } else { (1u64 << rows) - 1 };
    fn go(f: &Formula, alphabet: &[Atom], full: u64) -> Option<u64> {
        Some(match f.node() {
            Node::Bot => 0,
            Node::Var(a) => {
                let k = alphabet.iter().position(|b| b == a)?;
                (0..64u32).filter(|i| i & (1 << k) != 0).fold(0u64, |m, i| m | (1 << i)) & full
            }
            Node::And(a, b) => go(a, alphabet, full)? & go(b, alphabet, full)?,
            Node::Or(a, b) => go(a, alphabet, full)? | go(b, alphabet, full)?,
            Node::Imp(a, b) => (!go(a, alphabet, full)? | go(b, alphabet, full)?) & full,
            Node::Box(_) | Node::Cond(..) => return None,
        })
    }
    go(f, alphabet, full)
}

fn random_with_weight<R: Rng>(rng: &mut R, lang: Language, atoms: &[Atom], w: u32) -> Formula {
    if w == 0 {
        return if rng.random_range(0..8) == 0 {
            Formula::bot()
        } else {
            Formula::var(atoms[rng.random_range(0..atoms.len())].clone())
        };
    }
    let unary = lang == Language::Modal && rng.random_range(0..4) == 0;
    if unary {
        return Formula::boxed(random_with_weight(rng, lang, atoms, w - 1));
    }
    let wa = rng.random_range(0..w);
    let a = random_with_weight(rng, lang, atoms, wa);
    let b = random_with_weight(rng, lang, atoms, w - 1 - wa);
    let kinds = if lang == Language::Conditional { 4 } else { 3 };
    match rng.random_range(0..kinds) {
        0 => Formula::and(a, b),
        1 => Formula::or(a, b),
        2 => Formula::imp(a, b),
        _ => Formula::cond(a, b),
    }
}

/// Random formula of weight at most `max`.
pub fn random_formula<R: Rng>(rng: &mut R, lang: Language, atoms: &[Atom], max: u32) -> Formula {
    let w = rng.random_range(0..=max);
    random_with_weight(rng, lang, atoms, w)
}

/// Random formula containing at least one modal operator (needs `max ≥ 1`).
pub fn random_modal_formula<R: Rng>(rng: &mut R, lang: Language, atoms: &[Atom], max: u32) -> Formula {
    loop {
        let f = random_formula(rng, lang, atoms, max);
        if f.has_box() || f.has_cond() {
            return f;
        }
    }
}

/// Random sequent of one to three formulas with total weight at most `max`.
pub fn random_sequent<R: Rng>(rng: &mut R, lang: Language, atoms: &[Atom], max: u32) -> Sequent {
    let n = rng.random_range(1..=3u32);
    let mut budget = rng.random_range(0..=max);
    let (mut ant, mut suc) = (Vec::new(), Vec::new());
    for i in 0..n {
        let w = if i + 1 == n { budget } else { rng.random_range(0..=budget) };
        budget -= w;
        let f = random_with_weight(rng, lang, atoms, w);
        if rng.random_bool(0.5) {
            ant.push(f);
        } else {
            suc.push(f);
        }
    }
    Sequent::new(ant, suc)
}

pub fn atoms(names: &[&str]) -> Vec<Atom> {
    names.iter().map(|n| Atom::new(n).expect("valid atom")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn enumeration_counts() {
        let l = formulas_by_weight(Language::Modal, &atoms(&["q"]), 1);
        assert_eq!(l[0].len(), 2);
        // []q, []false, q->q, q->false, false->false
        assert_eq!(l[1].len(), 5);
        let c = formulas_by_weight(Language::Conditional, &atoms(&["q"]), 1);
        assert_eq!(c[1].len(), 4 + 3);
    }

    #[test]
    fn random_respects_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let at = atoms(&["p", "q", "r"]);
        for _ in 0..500 {
            let s = random_sequent(&mut rng, Language::Conditional, &at, 5);
            assert!(s.weight() <= 5);
            assert!(s.fits(Language::Conditional));
            let f = random_formula(&mut rng, Language::Modal, &at, 4);
            assert!(f.weight() <= 4 && !f.has_cond());
        }
    }
}
