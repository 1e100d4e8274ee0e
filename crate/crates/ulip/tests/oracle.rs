//! Independent oracles for the prover: a naive exhaustive backward search
//! over the raw rule table and a truth-table evaluator for the
//! modality-free fragment.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ulip::calculus::{backward_instances, LogicId};
use ulip::generate::{atoms, random_sequent};
use ulip::prover::{check_proof, Prover};
use ulip::sequent::Sequent;
use ulip::syntax::{Atom, Formula, Language, Node};

/// Tries every backward instance; no invertibility, no modal-part reduction.
fn naive(logic: LogicId, s: &Sequent, memo: &mut HashMap<Sequent, bool>) -> bool {
    if let Some(&b) = memo.get(s) {
        return b;
    }
    let ok = backward_instances(logic, s)
        .iter()
        .any(|inst| inst.premises.iter().all(|p| naive(logic, p, memo)));
    memo.insert(s.clone(), ok);
    ok
}

fn eval(f: &Formula, v: &BTreeMap<Atom, bool>) -> bool {
    match f.node() {
        Node::Bot => false,
        Node::Var(a) => v[a],
        Node::And(a, b) => eval(a, v) && eval(b, v),
        Node::Or(a, b) => eval(a, v) || eval(b, v),
        Node::Imp(a, b) => !eval(a, v) || eval(b, v),
        Node::Box(_) | Node::Cond(..) => unreachable!("modality-free input"),
    }
}

fn valid(s: &Sequent, alphabet: &[Atom]) -> bool {
    (0..1u32 << alphabet.len()).all(|row| {
        let v: BTreeMap<Atom, bool> = alphabet.iter().enumerate().map(|(k, a)| (a.clone(), row & (1 << k) != 0)).collect();
        s.ant().iter().any(|f| !eval(f, &v)) || s.suc().iter().any(|f| eval(f, &v))
    })
}

#[test]
fn naive_search_agrees_with_prover() {
    let prover = Prover::default();
    let at = atoms(&["p", "q"]);
    for logic in LogicId::ALL {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0AC1E ^ logic.index() as u64);
        let mut memo = HashMap::new();
        let mut positives = 0;
        for _ in 0..300 {
            let s = random_sequent(&mut rng, logic.language(), &at, 6);
            let expected = naive(logic, &s, &mut memo);
            let got = prover.prove(logic, &s);
            assert_eq!(got.is_some(), expected, "{logic}: {s}");
            if let Some(proof) = got {
                positives += 1;
                assert_eq!(proof.conclusion, s);
                assert!(check_proof(logic, &proof), "{logic}: proof of {s} does not check");
            }
        }
        assert!(positives > 10, "{logic}: only {positives} provable samples");
    }
}

#[test]
fn propositional_fragment_matches_truth_tables() {
    let prover = Prover::default();
    let at = atoms(&["p", "q", "r"]);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut n = 0;
    while n < 400 {
        let lang = if rng.random_bool(0.5) { Language::Modal } else { Language::Conditional };
        let s = random_sequent(&mut rng, lang, &at, 7);
        if s.formulas().any(|f| f.has_box() || f.has_cond()) {
            continue;
        }
        n += 1;
        let expected = valid(&s, &at);
        for logic in [LogicId::E, LogicId::K, LogicId::EC, LogicId::CE, LogicId::CKCEMID] {
            assert_eq!(prover.provable(logic, &s), expected, "{logic}: {s}");
        }
    }
}
