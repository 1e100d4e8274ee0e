use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ulip::calculus::{backward_instances, LogicId};
use ulip::cutelim::{admissible_bot_elim, admissible_contraction, eliminate_cut, random_cut_proof};
use ulip::generate::{atoms, random_formula, random_sequent};
use ulip::interpolation::{self, Mode};
use ulip::prover::{self, check_proof, Proof};
use ulip::sequent::Sequent;
use ulip::syntax::{Atom, Formula, Language, Polarity};
use ulip::translate::{translate_s, translate_t};
use ulip::verify::verify_interpolant;

fn logic() -> impl Strategy<Value = LogicId> {
    (0..LogicId::MAIN.len()).prop_map(|i| LogicId::MAIN[i])
}

fn interpolating_logic() -> impl Strategy<Value = LogicId> {
    let all: Vec<LogicId> = LogicId::ULIP.iter().chain(&LogicId::UIP_ONLY).copied().collect();
    (0..all.len()).prop_map(move |i| all[i])
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn display_parses_back(seed: u64, modal: bool) {
        let lang = if modal { Language::Modal } else { Language::Conditional };
        let f = random_formula(&mut rng(seed), lang, &atoms(&["p", "q", "r"]), 8);
        prop_assert_eq!(Formula::parse(&f.to_string(), lang).unwrap(), f.clone());
        let s = Sequent::new(vec![f.clone()], vec![f]);
        prop_assert_eq!(Sequent::parse(&s.to_string(), lang).unwrap(), s);
    }

    #[test]
    fn premises_are_smaller(logic in logic(), seed: u64) {
        let s = random_sequent(&mut rng(seed), logic.language(), &atoms(&["p", "q"]), 7);
        for inst in backward_instances(logic, &s) {
            for p in &inst.premises {
                prop_assert!((p.weight(), p.len()) < (s.weight(), s.len()), "{} from {}", p, s);
            }
        }
    }

    #[test]
    fn proofs_check_and_round_trip(logic in logic(), seed: u64) {
        let s = random_sequent(&mut rng(seed), logic.language(), &atoms(&["p", "q", "r"]), 6);
        if let Some(p) = prover::prove(logic, &s) {
            prop_assert!(check_proof(logic, &p));
            prop_assert_eq!(Proof::from_json(&p.to_json(), logic.language()).unwrap(), p);
        }
    }

    #[test]
    fn translation_round_trip(seed: u64) {
        let f = random_formula(&mut rng(seed), Language::Modal, &atoms(&["p", "q"]), 8);
        let t = translate_t(&f);
        prop_assert!(t.fits(Language::Conditional));
        prop_assert_eq!(translate_s(&t), f);
    }

    #[test]
    fn contraction_is_admissible(logic in logic(), seed: u64) {
        let mut r = rng(seed);
        let s = random_sequent(&mut r, logic.language(), &atoms(&["p", "q"]), 4);
        let Some(a) = s.formulas().next().cloned() else { return Ok(()) };
        let doubled = if s.ant().contains(&a) { s.add_ant(a) } else { s.add_suc(a) };
        if prover::provable(logic, &doubled) {
            let p = admissible_contraction(prover::global(), logic, &doubled);
            let ok = p.as_ref().is_some_and(|p| {
                check_proof(logic, p) && doubled.contains(&p.conclusion) && p.conclusion.len() + 1 == doubled.len()
            });
            prop_assert!(ok, "{}", doubled);
        }
    }

    #[test]
    fn bot_elimination_is_admissible(logic in logic(), seed: u64) {
        let s = random_sequent(&mut rng(seed), logic.language(), &atoms(&["p", "q"]), 5);
        let with_bot = s.add_suc(Formula::bot());
        prop_assert_eq!(prover::provable(logic, &with_bot), prover::provable(logic, &s));
        if let Some(p) = admissible_bot_elim(prover::global(), logic, &with_bot) {
            prop_assert!(check_proof(logic, &p));
            prop_assert_eq!(p.conclusion, s);
        }
    }

    #[test]
    fn cuts_eliminate(logic in logic(), seed: u64) {
        let proof = random_cut_proof(prover::global(), logic, &mut rng(seed), &atoms(&["p", "q"]), 4);
        let out = eliminate_cut(prover::global(), logic, &proof).unwrap();
        prop_assert!(!out.has_cut());
        prop_assert!(check_proof(logic, &out));
        prop_assert_eq!(&out.conclusion, &proof.conclusion);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn uniform_interpolants_verify(logic in interpolating_logic(), seed: u64, neg: bool) {
        let p = Atom::new("p").unwrap();
        let alphabet = atoms(&["p", "q"]);
        let mode = if logic.is_ulip() {
            Mode::Lyndon(if neg { Polarity::Neg } else { Polarity::Pos })
        } else {
            Mode::Plain
        };
        let s = random_sequent(&mut rng(seed), logic.language(), &alphabet, 4);
        let interp = interpolation::global();
        let i = interp.forall_sequent(logic, mode, &p, &s).unwrap();
        let report = verify_interpolant(interp.prover(), logic, mode, &p, &s, &i, 2, &alphabet);
        prop_assert!(report.ok(), "{} {:?}: {} gives {}: {:?}", logic, mode, s, i, report.violations);
    }
}
