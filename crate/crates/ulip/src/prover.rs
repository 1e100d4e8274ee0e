//! Terminating backward proof search with memoization, proof reconstruction
//! and proof checking.

use std::sync::OnceLock;

use dashmap::DashMap;
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::calculus::{axiom_match, is_instance, modal_instances, prop_instance, LogicId, RuleId, RuleInstance};
use crate::sequent::Sequent;
use crate::syntax::{Formula, Language, Node, SyntaxError};

/// A derivation tree; each node is a rule application to its conclusion.
#[derive(Clone, PartialEq, Eq)]
pub struct Proof {
    pub rule: RuleId,
    pub conclusion: Sequent,
    pub premises: Vec<Proof>,
}

impl Proof {
    pub fn new(rule: RuleId, conclusion: Sequent, premises: Vec<Proof>) -> Proof {
        Proof { rule, conclusion, premises }
    }

    pub fn height(&self) -> usize {
        1 + self.premises.iter().map(Proof::height).max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Proof::size).sum::<usize>()
    }

    pub fn has_cut(&self) -> bool {
        self.rule == RuleId::Cut || self.premises.iter().any(Proof::has_cut)
    }

    pub fn premise_sequents(&self) -> Vec<Sequent> {
        self.premises.iter().map(|p| p.conclusion.clone()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("proofs serialize")
    }

    /// Read back the `{rule, sequent, premises}` format produced by [`Proof::to_json`].
    pub fn from_json(v: &serde_json::Value, lang: Language) -> Result<Proof, SyntaxError> {
        let bad = |m: &str| SyntaxError::Parse { pos: 0, msg: m.to_string() };
        let rule_name = v.get("rule").and_then(|r| r.as_str()).ok_or_else(|| bad("proof node without `rule`"))?;
        let rule = RuleId::from_name(rule_name).ok_or_else(|| bad(&format!("unknown rule `{rule_name}`")))?;
        let seq = v.get("sequent").and_then(|r| r.as_str()).ok_or_else(|| bad("proof node without `sequent`"))?;
        let conclusion = Sequent::parse(seq, lang)?;
        let premises = match v.get("premises") {
            None => Vec::new(),
            Some(serde_json::Value::Array(items)) => {
                items.iter().map(|p| Proof::from_json(p, lang)).collect::<Result<_, _>>()?
            }
            Some(_) => return Err(bad("`premises` must be an array")),
        };
        Ok(Proof { rule, conclusion, premises })
    }

    /// Indented tree rendering, conclusion first.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        self.pretty_into(0, &mut out);
        out
    }

    fn pretty_into(&self, depth: usize, out: &mut String) {
        out.push_str(&format!("{}{}  [{}]\n", "  ".repeat(depth), self.conclusion, self.rule));
        for p in &self.premises {
            p.pretty_into(depth + 1, out);
        }
    }
}

impl std::fmt::Debug for Proof {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl Serialize for Proof {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Proof", 3)?;
        st.serialize_field("rule", self.rule.name())?;
        st.serialize_field("sequent", &self.conclusion)?;
        st.serialize_field("premises", &self.premises)?;
        st.end()
    }
}

/// The unique invertible propositional step taken on a non-flat sequent:
/// L∧, R∨, R→ before R∧, L∨, L→, each on the first candidate in formula order.
pub fn invertible_step(s: &Sequent) -> Option<RuleInstance> {
    let first = |side: &[Formula], pick: fn(&Node) -> bool| side.iter().position(|f| pick(f.node()));
    if let Some(i) = first(s.ant(), |n| matches!(n, Node::And(..))) {
        return prop_instance(s, true, i);
    }
    if let Some(i) = first(s.suc(), |n| matches!(n, Node::Or(..) | Node::Imp(..))) {
        return prop_instance(s, false, i);
    }
    if let Some(i) = first(s.ant(), |n| matches!(n, Node::Or(..) | Node::Imp(..))) {
        return prop_instance(s, true, i);
    }
    if let Some(i) = first(s.suc(), |n| matches!(n, Node::And(..))) {
        return prop_instance(s, false, i);
    }
    None
}

/// The modal and conditional formulas of a flat sequent, duplicates removed.
pub fn modal_part(s: &Sequent) -> Sequent {
    let pick = |side: &[Formula]| {
        let mut v: Vec<Formula> = side.iter().filter(|f| f.is_modal()).cloned().collect();
        v.dedup();
        v
    };
    Sequent::new(pick(s.ant()), pick(s.suc()))
}

/// A modal rule application closing a flat sequent: the rule and its main
/// formulas (the designated succedent formula first).
#[derive(Debug, Clone)]
struct Witness {
    rule: RuleId,
    ant: Vec<Formula>,
    suc: Vec<Formula>,
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

fn cond_tail(f: &Formula) -> Formula {
    cond_parts(f).expect("conditional").1.clone()
}

/// Memoized decision procedure, one table per logic.
pub struct Prover {
    caches: Vec<DashMap<Sequent, bool>>,
}

impl Default for Prover {
    fn default() -> Prover {
        Prover { caches: LogicId::ALL.iter().map(|_| DashMap::new()).collect() }
    }
}

/// Process-wide prover shared by all entry points.
pub fn global() -> &'static Prover {
    static P: OnceLock<Prover> = OnceLock::new();
    P.get_or_init(Prover::default)
}

pub fn provable(logic: LogicId, s: &Sequent) -> bool {
    global().provable(logic, s)
}

pub fn prove(logic: LogicId, s: &Sequent) -> Option<Proof> {
    global().prove(logic, s)
}

impl Prover {
    pub fn cache_len(&self, logic: LogicId) -> usize {
        self.caches[logic.index()].len()
    }

    pub fn provable(&self, logic: LogicId, s: &Sequent) -> bool {
        if axiom_match(s).is_some() {
            return true;
        }
        let cache = &self.caches[logic.index()];
        if let Some(v) = cache.get(s) {
            return *v;
        }
        let v = self.decide(logic, s);
        cache.insert(s.clone(), v);
        v
    }

    pub fn entails(&self, logic: LogicId, a: &Formula, b: &Formula) -> bool {
        self.provable(logic, &Sequent::arrow(a.clone(), b.clone()))
    }

    pub fn equivalent(&self, logic: LogicId, a: &Formula, b: &Formula) -> bool {
        a == b || (self.entails(logic, a, b) && self.entails(logic, b, a))
    }

    fn decide(&self, logic: LogicId, s: &Sequent) -> bool {
        if let Some(step) = invertible_step(s) {
            return step.premises.iter().all(|p| self.provable(logic, p));
        }
        let m = modal_part(s);
        if m != *s {
            return self.provable(logic, &m);
        }
        self.witness(logic, s).is_some()
    }

    fn witness(&self, logic: LogicId, m: &Sequent) -> Option<Witness> {
        let prov = |s: Sequent| self.provable(logic, &s);
        let eq = |a: &Formula, b: &Formula| self.equivalent(logic, a, b);
        let found = |rule: RuleId, ant: Vec<Formula>, suc: Vec<Formula>| Some(Witness { rule, ant, suc });
        let boxes_l: Vec<&Formula> = m.ant().iter().filter(|f| box_arg(f).is_some()).collect();
        let boxes_r: Vec<&Formula> = m.suc().iter().filter(|f| box_arg(f).is_some()).collect();
        let conds_l: Vec<&Formula> = m.ant().iter().filter(|f| cond_parts(f).is_some()).collect();
        let conds_r: Vec<&Formula> = m.suc().iter().filter(|f| cond_parts(f).is_some()).collect();
        for &rule in logic.modal_rules() {
            match rule {
                RuleId::RuleE | RuleId::RuleM => {
                    for a in &boxes_l {
                        for b in &boxes_r {
                            let (x, y) = (box_arg(a).unwrap(), box_arg(b).unwrap());
                            let ok = if rule == RuleId::RuleE { eq(x, y) } else { prov(Sequent::arrow(x.clone(), y.clone())) };
                            if ok {
                                return found(rule, vec![(*a).clone()], vec![(*b).clone()]);
                            }
                        }
                    }
                }
                RuleId::RuleMC => {
                    if boxes_l.is_empty() {
                        continue;
                    }
                    let args: Vec<Formula> = boxes_l.iter().map(|f| box_arg(f).unwrap().clone()).collect();
                    for b in &boxes_r {
                        if prov(Sequent::new(args.clone(), vec![box_arg(b).unwrap().clone()])) {
                            return found(rule, boxes_l.iter().map(|f| (*f).clone()).collect(), vec![(*b).clone()]);
                        }
                    }
                }
                RuleId::RuleN | RuleId::RuleNW => {
                    for b in &boxes_r {
                        if prov(Sequent::right(box_arg(b).unwrap().clone())) {
                            return found(rule, vec![], vec![(*b).clone()]);
                        }
                    }
                }
                RuleId::RuleEC => {
                    for b in &boxes_r {
                        let y = box_arg(b).unwrap();
                        let sel: Vec<Formula> = boxes_l
                            .iter()
                            .filter(|a| prov(Sequent::arrow(y.clone(), box_arg(a).unwrap().clone())))
                            .map(|a| (*a).clone())
                            .collect();
                        if sel.is_empty() {
                            continue;
                        }
                        let args: Vec<Formula> = sel.iter().map(|f| box_arg(f).unwrap().clone()).collect();
                        if prov(Sequent::new(args, vec![y.clone()])) {
                            return found(rule, sel, vec![(*b).clone()]);
                        }
                    }
                }
                RuleId::RuleCE | RuleId::RuleCM => {
                    for c1 in &conds_l {
                        for c0 in &conds_r {
                            let ((a1, b1), (a0, b0)) = (cond_parts(c1).unwrap(), cond_parts(c0).unwrap());
                            let tail = if rule == RuleId::RuleCE {
                                eq(b0, b1)
                            } else {
                                prov(Sequent::arrow(b1.clone(), b0.clone()))
                            };
                            if eq(a0, a1) && tail {
                                return found(rule, vec![(*c1).clone()], vec![(*c0).clone()]);
                            }
                        }
                    }
                }
                RuleId::RuleCN | RuleId::RuleCNW => {
                    for c0 in &conds_r {
                        if prov(Sequent::right(cond_tail(c0))) {
                            return found(rule, vec![], vec![(*c0).clone()]);
                        }
                    }
                }
                RuleId::RuleCMC | RuleId::RuleCKID | RuleId::RuleCEC => {
                    for c0 in &conds_r {
                        let (a0, b0) = cond_parts(c0).unwrap();
                        let sel: Vec<Formula> = conds_l
                            .iter()
                            .filter(|c| {
                                let (a, b) = cond_parts(c).unwrap();
                                eq(a0, a) && (rule != RuleId::RuleCEC || prov(Sequent::arrow(b0.clone(), b.clone())))
                            })
                            .map(|c| (*c).clone())
                            .collect();
                        if sel.is_empty() && rule != RuleId::RuleCKID {
                            continue;
                        }
                        let mut left: Vec<Formula> = sel.iter().map(cond_tail).collect();
                        if rule == RuleId::RuleCKID {
                            left.push(a0.clone());
                        }
                        if prov(Sequent::new(left, vec![b0.clone()])) {
                            return found(rule, sel, vec![(*c0).clone()]);
                        }
                    }
                }
                RuleId::RuleCKCEM | RuleId::RuleCKCEMID => {
                    for (j, c0) in conds_r.iter().enumerate() {
                        let (a0, b0) = cond_parts(c0).unwrap();
                        let compatible = |c: &&&Formula| eq(a0, cond_parts(c).unwrap().0);
                        let sel_i: Vec<Formula> = conds_l.iter().filter(compatible).map(|c| (*c).clone()).collect();
                        let sel_j: Vec<Formula> = conds_r
                            .iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, c)| c)
                            .filter(compatible)
                            .map(|c| (*c).clone())
                            .collect();
                        let mut left: Vec<Formula> = sel_i.iter().map(cond_tail).collect();
                        if rule == RuleId::RuleCKCEMID {
                            left.push(a0.clone());
                        }
                        let mut right = vec![b0.clone()];
                        right.extend(sel_j.iter().map(cond_tail));
                        if prov(Sequent::new(left, right)) {
                            let mut suc = vec![(*c0).clone()];
                            suc.extend(sel_j);
                            return found(rule, sel_i, suc);
                        }
                    }
                }
                _ => unreachable!("not a modal rule: {rule}"),
            }
        }
        None
    }

    /// A cut-free proof in the logic's calculus, or `None` if unprovable.
    pub fn prove(&self, logic: LogicId, s: &Sequent) -> Option<Proof> {
        self.provable(logic, s).then(|| self.build(logic, s))
    }

    fn build(&self, logic: LogicId, s: &Sequent) -> Proof {
        if let Some(rule) = axiom_match(s) {
            return Proof::new(rule, s.clone(), vec![]);
        }
        if let Some(step) = invertible_step(s) {
            let premises = step.premises.iter().map(|p| self.build(logic, p)).collect();
            return Proof::new(step.rule, s.clone(), premises);
        }
        let m = modal_part(s);
        let w = self.witness(logic, &m).expect("build is only called on provable sequents");
        let target = if logic.has_weakening() { Sequent::new(w.ant.clone(), w.suc.clone()) } else { s.clone() };
        let inst = modal_instances(w.rule, &target)
            .into_iter()
            .find(|r| {
                let mut ant = r.principal.ant.clone();
                ant.sort();
                let mut want = w.ant.clone();
                want.sort();
                ant == want && r.principal.suc.first() == w.suc.first()
            })
            .expect("witness corresponds to a rule instance");
        let node = Proof::new(w.rule, target.clone(), inst.premises.iter().map(|p| self.build(logic, p)).collect());
        weaken_down(node, s)
    }
}

/// Extend a proof of `C` to a proof of `S ⊇ C` by a chain of weakenings
/// (antecedent formulas first, each side in formula order).
pub fn weaken_down(proof: Proof, s: &Sequent) -> Proof {
    let extra = s.minus(&proof.conclusion).expect("target contains the proved sequent");
    let mut chain = vec![s.clone()];
    let mut cur = s.clone();
    for f in extra.ant() {
        cur = cur.without_ant(f).unwrap();
        chain.push(cur.clone());
    }
    let n_ant = extra.ant().len();
    for f in extra.suc() {
        cur = cur.without_suc(f).unwrap();
        chain.push(cur.clone());
    }
    let mut p = proof;
    for k in (0..chain.len() - 1).rev() {
        let rule = if k < n_ant { RuleId::Lw } else { RuleId::Rw };
        p = Proof::new(rule, chain[k].clone(), vec![p]);
    }
    p
}

/// Every node of `proof` is an instance of a rule of the logic (no Cut).
pub fn check_proof(logic: LogicId, proof: &Proof) -> bool {
    is_instance(logic, proof.rule, &proof.conclusion, &proof.premise_sequents())
        && proof.premises.iter().all(|p| check_proof(logic, p))
}

/// The cut formula of a Cut node, if the node is a well-formed cut.
pub fn cut_formula(conclusion: &Sequent, left: &Sequent, right: &Sequent) -> Option<Formula> {
    let mut cands: Vec<&Formula> = left.suc().iter().filter(|f| right.ant().contains(f)).collect();
    cands.dedup();
    cands.into_iter().find(|a| {
        let l = left.without_suc(a).unwrap();
        let r = right.without_ant(a).unwrap();
        l.compose(&r) == *conclusion
    }).cloned()
}

/// Like [`check_proof`] but also accepts Cut nodes.
pub fn check_proof_with_cut(logic: LogicId, proof: &Proof) -> bool {
    let here = if proof.rule == RuleId::Cut {
        proof.premises.len() == 2
            && cut_formula(&proof.conclusion, &proof.premises[0].conclusion, &proof.premises[1].conclusion).is_some()
    } else {
        is_instance(logic, proof.rule, &proof.conclusion, &proof.premise_sequents())
    };
    here && proof.premises.iter().all(|p| check_proof_with_cut(logic, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(logic: LogicId, t: &str) -> bool {
        let s = Sequent::parse(t, logic.language()).unwrap();
        let p = prove(logic, &s);
        if let Some(p) = &p {
            assert!(check_proof(logic, p), "bad proof for {t} in {logic}:\n{}", p.pretty());
            assert_eq!(p.conclusion, s);
        }
        p.is_some()
    }

    #[test]
    fn propositional() {
        for l in LogicId::ALL {
            assert!(check(l, "p | ~p"));
            assert!(check(l, "(p -> q) -> (q -> r) -> p -> r"));
            assert!(!check(l, "p -> q"));
            assert!(check(l, "((p -> q) -> p) -> p"));
        }
    }

    #[test]
    fn modal_axioms() {
        use LogicId::*;
        let k = "[](p -> q) -> []p -> []q";
        let m = "[](p & q) -> []p";
        let c = "[]p & []q -> [](p & q)";
        let n = "[]true";
        for (l, ks, ms, cs, ns) in [
            (E, false, false, false, false),
            (M, false, true, false, false),
            (EN, false, false, false, true),
            (MN, false, true, false, true),
            (MC, true, true, true, false),
            (K, true, true, true, true),
            (EC, false, false, true, false),
            (ECN, false, false, true, true),
        ] {
            assert_eq!(check(l, k), ks, "{l} K");
            assert_eq!(check(l, m), ms, "{l} M");
            assert_eq!(check(l, c), cs, "{l} C");
            assert_eq!(check(l, n), ns, "{l} N");
        }
        assert!(check(E, "[](p & q) -> [](q & p)"));
    }

    #[test]
    fn conditional_axioms() {
        use LogicId::*;
        let id = "p > p";
        let cm = "(p > q & r) -> (p > q)";
        let cc = "(p > q) & (p > r) -> (p > q & r)";
        let cem = "(p > q) | (p > ~q)";
        for (l, ids, cms, ccs, cems) in [
            (CE, false, false, false, false),
            (CM, false, true, false, false),
            (CMC, false, true, true, false),
            (CK, false, true, true, false),
            (CKID, true, true, true, false),
            (CKCEM, false, true, true, true),
            (CKCEMID, true, true, true, true),
            (CEC, false, false, true, false),
        ] {
            assert_eq!(check(l, id), ids, "{l} ID");
            assert_eq!(check(l, cm), cms, "{l} CM");
            assert_eq!(check(l, cc), ccs, "{l} CC");
            assert_eq!(check(l, cem), cems, "{l} CEM");
        }
        assert!(check(CE, "(p & q > r) -> (q & p > r)"));
        assert!(check(CK, "p > true"));
        assert!(!check(CMC, "p > true"));
    }

    #[test]
    fn weakening_chain_shape() {
        let s = Sequent::parse("a, []p => []p, b", Language::Modal).unwrap();
        let p = prove(LogicId::M, &s).unwrap();
        assert_eq!(p.rule, RuleId::Lw);
        assert_eq!(p.premises[0].rule, RuleId::Rw);
        assert_eq!(p.premises[0].premises[0].rule, RuleId::RuleM);
        let q = prove(LogicId::EC, &s).unwrap();
        assert_eq!(q.rule, RuleId::RuleEC);
    }

    #[test]
    fn json_round_trip() {
        let s = Sequent::parse("[]p & []q => [](p & q)", Language::Modal).unwrap();
        let p = prove(LogicId::K, &s).unwrap();
        let back = Proof::from_json(&p.to_json(), Language::Modal).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rejects_tampered_proofs() {
        let s = Sequent::parse("[]p => []p", Language::Modal).unwrap();
        let mut p = prove(LogicId::M, &s).unwrap();
        assert!(check_proof(LogicId::M, &p));
        assert!(!check_proof(LogicId::E, &p));
        p.premises.clear();
        assert!(!check_proof(LogicId::M, &p));
    }
}
