//! Uniform (Lyndon) interpolants by recursion on sequent weight.

use std::fmt;
use std::sync::OnceLock;

use dashmap::DashMap;
use serde::Serialize;
use thiserror::Error;

use crate::calculus::{backward_instances, LogicId, RuleId};
use crate::prover::{self, Prover};
use crate::sequent::Sequent;
use crate::simplify::Simplifier;
use crate::syntax::{Atom, Formula, Node, Polarity, SignedVars};

/// Which kind of uniform interpolant is requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Mode {
    /// `∀°p` for the given polarity `°`.
    Lyndon(Polarity),
    /// `∀p`, p-freeness in place of polarity-freeness.
    Plain,
}

impl Mode {
    /// Is `f` acceptable as a result, i.e. p°-free (p-free for `Plain`)?
    pub fn free(self, f: &Formula, p: &Atom) -> bool {
        match self {
            Mode::Lyndon(pol) => f.is_free(p, pol),
            Mode::Plain => !f.occurs(p),
        }
    }

    /// May a test sequent be composed with `S` in condition (ii)?
    pub fn test_free(self, t: &Sequent, p: &Atom) -> bool {
        match self {
            Mode::Lyndon(pol) => t.is_free(p, pol.dual()),
            Mode::Plain => !t.occurs(p),
        }
    }

    /// `V†(f) ⊆ V†(S)` for both polarities, or `V(f) ⊆ V(S)` for `Plain`.
    pub fn vars_within(self, f: &SignedVars, s: &SignedVars) -> bool {
        match self {
            Mode::Lyndon(_) => f.is_subset(s),
            Mode::Plain => f.all().is_subset(&s.all()),
        }
    }

    pub fn dual(self) -> Mode {
        match self {
            Mode::Lyndon(pol) => Mode::Lyndon(pol.dual()),
            Mode::Plain => Mode::Plain,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Lyndon(Polarity::Pos) => f.write_str("pos"),
            Mode::Lyndon(Polarity::Neg) => f.write_str("neg"),
            Mode::Plain => f.write_str("plain"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpError {
    #[error("{0} has no uniform Lyndon interpolation (it proves (q > r) | (q > ~r) but not (p > r) | (q > ~r)); use --pol plain")]
    NoLyndon(LogicId),
    #[error("{0} has no Craig interpolation, hence no uniform interpolants")]
    NoInterpolation(LogicId),
    #[error("sequent is not in the language of {0}")]
    Language(LogicId),
    #[error("`{0}` is not provable")]
    Unprovable(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

pub fn check_mode(logic: LogicId, mode: Mode) -> Result<(), InterpError> {
    if !logic.is_ulip() && !logic.is_uip_only() {
        return Err(InterpError::NoInterpolation(logic));
    }
    if logic.is_uip_only() && mode != Mode::Plain {
        return Err(InterpError::NoLyndon(logic));
    }
    Ok(())
}

type Key = (LogicId, Sequent, Atom, Mode);

#[derive(Clone)]
struct Entry {
    value: Formula,
    /// Top-level disjunction before simplification (kept only when debugging).
    raw: Option<Formula>,
}

/// Memoized interpolant construction.
pub struct Interpolator {
    prover: &'static Prover,
    simp: Simplifier,
    cache: DashMap<Key, Entry>,
    debug: bool,
}

/// Process-wide interpolator. Debug checks are on when `ULIP_DEBUG` is set.
pub fn global() -> &'static Interpolator {
    static I: OnceLock<Interpolator> = OnceLock::new();
    I.get_or_init(|| Interpolator::new(std::env::var_os("ULIP_DEBUG").is_some()))
}

fn neg(f: Formula) -> Formula {
    if let Some(g) = f.as_not() {
        return g.clone();
    }
    if f.is_bot() {
        return Formula::top();
    }
    if f.is_top() {
        return Formula::bot();
    }
    Formula::not(f)
}

fn box_arg(f: &Formula) -> Option<&Formula> {
    match f.node() {
        Node::Box(a) => Some(a),
        _ => None,
    }
}

fn cond_parts(f: &Formula) -> Option<(&Formula, &Formula)> {
    match f.node() {
        Node::Cond(a, b) => Some((a, b)),
        _ => None,
    }
}

impl Interpolator {
    pub fn new(debug: bool) -> Interpolator {
        Interpolator::with_prover(prover::global(), debug)
    }

    /// An interpolator with its own memo table over `prover`.
    pub fn with_prover(prover: &'static Prover, debug: bool) -> Interpolator {
        Interpolator { prover, simp: Simplifier::new(prover, debug), cache: DashMap::new(), debug }
    }

    pub fn prover(&self) -> &'static Prover {
        self.prover
    }

    /// `∀°p S` (or `∀p S` in `Plain` mode).
    pub fn forall_sequent(&self, logic: LogicId, mode: Mode, p: &Atom, s: &Sequent) -> Result<Formula, InterpError> {
        check_mode(logic, mode)?;
        if !s.fits(logic.language()) {
            return Err(InterpError::Language(logic));
        }
        if logic.is_ulip() && mode == Mode::Plain {
            let inner = self.fa(logic, Mode::Lyndon(Polarity::Neg), p, s);
            return Ok(self.fa(logic, Mode::Lyndon(Polarity::Pos), p, &Sequent::right(inner)));
        }
        Ok(self.fa(logic, mode, p, s))
    }

    /// `∀°p φ = ∀°p(⇒ φ)`.
    pub fn forall_formula(&self, logic: LogicId, mode: Mode, p: &Atom, f: &Formula) -> Result<Formula, InterpError> {
        self.forall_sequent(logic, mode, p, &Sequent::right(f.clone()))
    }

    /// `∃°p φ = ¬∀⋄p ¬φ`.
    pub fn exists_formula(&self, logic: LogicId, mode: Mode, p: &Atom, f: &Formula) -> Result<Formula, InterpError> {
        let inner = self.forall_formula(logic, mode.dual(), p, &Formula::not(f.clone()))?;
        Ok(neg(inner))
    }

    /// `∀p φ`: `∀⁺p ∀⁻p φ` for logics with uniform Lyndon interpolation, the
    /// plain construction for the CKCEM family.
    pub fn plain_forall(&self, logic: LogicId, p: &Atom, f: &Formula) -> Result<Formula, InterpError> {
        self.forall_formula(logic, Mode::Plain, p, f)
    }

    /// Lyndon interpolant `θ = ∃⁺P⁺ ∃⁻P⁻ φ` for a provable `φ → ψ`, with both
    /// implications and the signed variable conditions checked before return.
    pub fn lyndon_interpolant(&self, logic: LogicId, phi: &Formula, psi: &Formula) -> Result<Formula, InterpError> {
        check_mode(logic, Mode::Lyndon(Polarity::Pos))?;
        if !self.prover.entails(logic, phi, psi) {
            return Err(InterpError::Unprovable(format!("{phi} => {psi}")));
        }
        let (vp, vq) = (phi.signed_vars(), psi.signed_vars());
        let mut theta = phi.clone();
        for pol in [Polarity::Neg, Polarity::Pos] {
            for a in vp.get(pol).difference(vq.get(pol)) {
                theta = self.exists_formula(logic, Mode::Lyndon(pol), a, &theta)?;
            }
        }
        let shared = SignedVars {
            pos: vp.pos.intersection(&vq.pos).cloned().collect(),
            neg: vp.neg.intersection(&vq.neg).cloned().collect(),
        };
        if !theta.signed_vars().is_subset(&shared) {
            return Err(InterpError::Internal(format!("variables of {theta} exceed the shared ones")));
        }
        if !self.prover.entails(logic, phi, &theta) || !self.prover.entails(logic, &theta, psi) {
            return Err(InterpError::Internal(format!("{theta} does not interpolate {phi} => {psi}")));
        }
        Ok(theta)
    }

    /// The axiom interpolant: ⊤ if `S` is provable, otherwise the disjunction of
    /// the p°-free succedent formulas and the negated p⋄-free antecedent formulas.
    pub fn axiom_interpolant(&self, logic: LogicId, mode: Mode, p: &Atom, s: &Sequent) -> Formula {
        if self.prover.provable(logic, s) {
            return Formula::top();
        }
        let mut items: Vec<Formula> = s.suc().iter().filter(|f| mode.free(f, p)).cloned().collect();
        items.extend(s.ant().iter().filter(|f| mode.dual().free(f, p)).map(|f| Formula::not(f.clone())));
        items.dedup();
        Formula::disj(items)
    }

    fn fa(&self, logic: LogicId, mode: Mode, p: &Atom, s: &Sequent) -> Formula {
        self.fa_entry(logic, mode, p, s).value
    }

    fn fa_entry(&self, logic: LogicId, mode: Mode, p: &Atom, s: &Sequent) -> Entry {
        if self.prover.provable(logic, s) {
            return Entry { value: Formula::top(), raw: None };
        }
        let key = (logic, s.clone(), p.clone(), mode);
        if let Some(e) = self.cache.get(&key) {
            return e.clone();
        }
        let mut items = Vec::new();
        for inst in backward_instances(logic, s) {
            if inst.rule.is_modal() || matches!(inst.rule, RuleId::Ax | RuleId::LBot) {
                continue;
            }
            let parts: Vec<Formula> = inst.premises.iter().map(|t| self.fa(logic, mode, p, t)).collect();
            items.push(self.simp.and(logic, parts));
        }
        items.push(self.axiom_interpolant(logic, mode, p, s));
        items.push(self.modal_interpolant(logic, mode, p, s));
        let raw = self.debug.then(|| Formula::disj(items.clone()));
        let value = self.simp.or(logic, items);
        debug_assert!(mode.free(&value, p), "{value} is not free for {p}");
        let e = Entry { value, raw };
        self.cache.insert(key, e.clone());
        e
    }

    /// Provable equivalence `a ⇔ b`, also checked on the unsimplified form of
    /// `a` when debugging; disagreement is a bug.
    fn guard(&self, logic: LogicId, a: &Formula, a_raw: Option<Formula>, b: &Formula) -> bool {
        let v = self.prover.equivalent(logic, a, b);
        if let Some(r) = a_raw {
            let w = self.prover.equivalent(logic, &r, b);
            assert_eq!(v, w, "guard disagrees on raw and simplified forms of {a}");
        }
        v
    }

    fn fa_neg_entry(&self, logic: LogicId, mode: Mode, p: &Atom, s: &Sequent) -> (Formula, Option<Formula>) {
        let e = self.fa_entry(logic, mode, p, s);
        (neg(e.value), e.raw.map(Formula::not))
    }

    /// First candidate that is free for `p`, within the signed variables of
    /// `S`, and provably equivalent to every guard.
    fn choose_chi(
        &self,
        logic: LogicId,
        mode: Mode,
        p: &Atom,
        s: &Sequent,
        guards: &[&Formula],
        candidates: Vec<Formula>,
    ) -> Option<Formula> {
        let sv = s.signed_vars();
        candidates.into_iter().find(|chi| {
            mode.free(chi, p)
                && mode.vars_within(chi.signed_vars(), &sv)
                && guards.iter().all(|g| self.prover.equivalent(logic, chi, g))
        })
    }

    /// Interpolant with respect to the modal or conditional rules of the logic.
    pub fn modal_interpolant(&self, logic: LogicId, mode: Mode, p: &Atom, s: &Sequent) -> Formula {
        use LogicId::*;
        if self.prover.provable(logic, s) {
            return Formula::top();
        }
        let (ant, suc) = (s.ant(), s.suc());
        let fa = |t: Sequent| self.fa(logic, mode, p, &t);
        match logic {
            M | MN | MC | K | E | EN => {
                let args: Option<Vec<Formula>> = ant.iter().map(|f| box_arg(f).cloned()).collect();
                let Some(args) = args else { return Formula::bot() };
                let multi = matches!(logic, MC | K);
                match suc {
                    [] if args.len() == 1 || (multi && !args.is_empty()) => {
                        let t = Sequent::new(args.clone(), vec![]);
                        if matches!(logic, E | EN) {
                            let (nv, nraw) = self.fa_neg_entry(logic, mode, p, &t);
                            if !self.guard(logic, &nv, nraw, &args[0]) {
                                return Formula::bot();
                            }
                            return Formula::not(Formula::boxed(nv));
                        }
                        Formula::not(Formula::boxed(neg(fa(t))))
                    }
                    [b] if args.is_empty() || (multi && box_arg(b).is_some()) => {
                        let Some(y) = box_arg(b) else { return Formula::bot() };
                        let t = Sequent::new(args, vec![y.clone()]);
                        if matches!(logic, E | EN) {
                            let e = self.fa_entry(logic, mode, p, &t);
                            if !self.guard(logic, &e.value, e.raw, y) {
                                return Formula::bot();
                            }
                            return Formula::boxed(e.value);
                        }
                        Formula::boxed(fa(t))
                    }
                    _ => Formula::bot(),
                }
            }
            CE | CEN | CM | CMN => {
                let both = matches!(logic, CE | CEN);
                match (ant, suc) {
                    ([c1], []) => {
                        let Some((a1, b1)) = cond_parts(c1) else { return Formula::bot() };
                        let e = self.fa_entry(logic, mode, p, &Sequent::right(a1.clone()));
                        if !self.guard(logic, &e.value, e.raw, a1) {
                            return Formula::bot();
                        }
                        let (nb, nraw) = self.fa_neg_entry(logic, mode, p, &Sequent::left(b1.clone()));
                        if both && !self.guard(logic, &nb, nraw, b1) {
                            return Formula::bot();
                        }
                        Formula::not(Formula::cond(e.value, nb))
                    }
                    ([], [c0]) => {
                        let Some((a0, b0)) = cond_parts(c0) else { return Formula::bot() };
                        let (na, nraw) = self.fa_neg_entry(logic, mode, p, &Sequent::left(a0.clone()));
                        if !self.guard(logic, &na, nraw, a0) {
                            return Formula::bot();
                        }
                        let e = self.fa_entry(logic, mode, p, &Sequent::right(b0.clone()));
                        if both && !self.guard(logic, &e.value, e.raw, b0) {
                            return Formula::bot();
                        }
                        Formula::cond(na, e.value)
                    }
                    _ => Formula::bot(),
                }
            }
            CMC | CK | CKID => {
                let parts: Option<Vec<(&Formula, &Formula)>> = ant.iter().map(cond_parts).collect();
                let Some(parts) = parts else { return Formula::bot() };
                let tails: Vec<Formula> = parts.iter().map(|(_, b)| (*b).clone()).collect();
                match suc {
                    [] if !parts.is_empty() => {
                        let guards: Vec<&Formula> = parts.iter().map(|(a, _)| *a).collect();
                        let cands = guards.iter().map(|g| fa(Sequent::right((*g).clone()))).collect();
                        match self.choose_chi(logic, mode, p, s, &guards, cands) {
                            Some(chi) => Formula::not(Formula::cond(chi, neg(fa(Sequent::new(tails, vec![]))))),
                            None => Formula::bot(),
                        }
                    }
                    [c0] => {
                        let Some((a0, b0)) = cond_parts(c0) else { return Formula::bot() };
                        let (na, nraw) = self.fa_neg_entry(logic, mode, p, &Sequent::left(a0.clone()));
                        if !self.guard(logic, &na, nraw, a0) || !parts.iter().all(|(a, _)| self.prover.equivalent(logic, a0, a)) {
                            return Formula::bot();
                        }
                        let mut left = tails;
                        if logic == CKID {
                            left.push(a0.clone());
                        }
                        Formula::cond(na, fa(Sequent::new(left, vec![b0.clone()])))
                    }
                    _ => Formula::bot(),
                }
            }
            CKCEM | CKCEMID => {
                let ks: Option<Vec<(&Formula, &Formula)>> = ant.iter().map(cond_parts).collect();
                let ls: Option<Vec<(&Formula, &Formula)>> = suc.iter().map(cond_parts).collect();
                let (Some(ks), Some(ls)) = (ks, ls) else { return Formula::bot() };
                if ks.is_empty() && ls.is_empty() {
                    return Formula::bot();
                }
                let guards: Vec<&Formula> = ks.iter().chain(&ls).map(|(a, _)| *a).collect();
                let mut cands: Vec<Formula> = guards.iter().map(|g| fa(Sequent::right((*g).clone()))).collect();
                cands.extend(ls.iter().map(|(a, _)| neg(fa(Sequent::left((*a).clone())))));
                let Some(chi) = self.choose_chi(logic, mode, p, s, &guards, cands) else { return Formula::bot() };
                let mut left: Vec<Formula> = ks.iter().map(|(_, b)| (*b).clone()).collect();
                let right: Vec<Formula> = ls.iter().map(|(_, b)| (*b).clone()).collect();
                if ls.is_empty() {
                    return Formula::not(Formula::cond(chi, neg(fa(Sequent::new(left, vec![])))));
                }
                if logic == CKCEMID {
                    left.push(ls[0].0.clone());
                }
                Formula::cond(chi, fa(Sequent::new(left, right)))
            }
            EC | ECN | CEC | CECN => unreachable!("no interpolants for {logic}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::Language;

    fn at(x: &str) -> Atom {
        Atom::new(x).unwrap()
    }

    fn f(t: &str, l: Language) -> Formula {
        Formula::parse(t, l).unwrap()
    }

    #[test]
    fn axiom_interpolant_shape() {
        let i = global();
        let s = Sequent::parse("p => q", Language::Modal).unwrap();
        let v = i.axiom_interpolant(LogicId::K, Mode::Lyndon(Polarity::Pos), &at("p"), &s);
        assert_eq!(v, f("q | ~p", Language::Modal));
        let e = i.axiom_interpolant(LogicId::K, Mode::Lyndon(Polarity::Pos), &at("p"), &Sequent::empty());
        assert!(e.is_bot());
    }

    #[test]
    fn forall_of_atom() {
        let i = global();
        let s = Sequent::right(Formula::atom("p"));
        for l in LogicId::ULIP {
            let pos = i.forall_sequent(l, Mode::Lyndon(Polarity::Pos), &at("p"), &s).unwrap();
            assert!(i.prover().equivalent(l, &pos, &Formula::bot()), "{l}: {pos}");
            let neg = i.forall_sequent(l, Mode::Lyndon(Polarity::Neg), &at("p"), &s).unwrap();
            assert!(i.prover().equivalent(l, &neg, &Formula::atom("p")), "{l}: {neg}");
        }
    }

    #[test]
    fn exists_box_conjunction() {
        let i = global();
        let phi = f("[](p & q)", Language::Modal);
        let e = i.exists_formula(LogicId::K, Mode::Lyndon(Polarity::Pos), &at("p"), &phi).unwrap();
        assert!(i.prover().equivalent(LogicId::K, &e, &f("[]q", Language::Modal)), "{e}");
        let m = i.exists_formula(LogicId::M, Mode::Lyndon(Polarity::Pos), &at("p"), &Formula::atom("p")).unwrap();
        assert!(i.prover().equivalent(LogicId::M, &m, &Formula::top()), "{m}");
    }

    #[test]
    fn mode_errors() {
        let i = global();
        let s = Sequent::right(Formula::atom("p"));
        assert_eq!(
            i.forall_sequent(LogicId::CKCEM, Mode::Lyndon(Polarity::Pos), &at("p"), &s),
            Err(InterpError::NoLyndon(LogicId::CKCEM))
        );
        assert!(matches!(
            i.forall_sequent(LogicId::EC, Mode::Plain, &at("p"), &s),
            Err(InterpError::NoInterpolation(LogicId::EC))
        ));
        assert!(i.forall_sequent(LogicId::CKCEM, Mode::Plain, &at("p"), &s).is_ok());
    }

    #[test]
    fn lyndon_k_example() {
        let i = global();
        let phi = f("[](p & q)", Language::Modal);
        let psi = f("[]q -> r -> r", Language::Modal);
        let t = i.lyndon_interpolant(LogicId::K, &phi, &psi).unwrap();
        assert!(!t.occurs(&at("p")) && !t.occurs(&at("r")), "{t}");
        assert!(!t.signed_vars().pos.contains(&at("q")), "{t}");
        let same = i.lyndon_interpolant(LogicId::K, &phi, &phi).unwrap();
        assert_eq!(same, phi);
    }
}
