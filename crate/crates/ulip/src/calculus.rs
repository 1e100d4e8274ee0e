//! Rule tables for all calculi and backward rule enumeration.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::sequent::Sequent;
use crate::syntax::{Formula, Language, Node};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LogicId {
    E,
    M,
    EN,
    MN,
    MC,
    K,
    EC,
    ECN,
    CE,
    CM,
    CEN,
    CMN,
    CMC,
    CK,
    CKID,
    CKCEM,
    CKCEMID,
    /// Conditional counterpart of EC, reached through the `t`/`s` translations.
    CEC,
    /// Conditional counterpart of ECN.
    CECN,
}

impl LogicId {
    /// The seventeen logics of the rule tables, in declaration order.
    pub const MAIN: [LogicId; 17] = [
        LogicId::E,
        LogicId::M,
        LogicId::EN,
        LogicId::MN,
        LogicId::MC,
        LogicId::K,
        LogicId::EC,
        LogicId::ECN,
        LogicId::CE,
        LogicId::CM,
        LogicId::CEN,
        LogicId::CMN,
        LogicId::CMC,
        LogicId::CK,
        LogicId::CKID,
        LogicId::CKCEM,
        LogicId::CKCEMID,
    ];

    pub const ALL: [LogicId; 19] = [
        LogicId::E,
        LogicId::M,
        LogicId::EN,
        LogicId::MN,
        LogicId::MC,
        LogicId::K,
        LogicId::EC,
        LogicId::ECN,
        LogicId::CE,
        LogicId::CM,
        LogicId::CEN,
        LogicId::CMN,
        LogicId::CMC,
        LogicId::CK,
        LogicId::CKID,
        LogicId::CKCEM,
        LogicId::CKCEMID,
        LogicId::CEC,
        LogicId::CECN,
    ];

    /// Logics with uniform Lyndon interpolation.
    pub const ULIP: [LogicId; 13] = [
        LogicId::E,
        LogicId::M,
        LogicId::EN,
        LogicId::MN,
        LogicId::MC,
        LogicId::K,
        LogicId::CE,
        LogicId::CM,
        LogicId::CEN,
        LogicId::CMN,
        LogicId::CMC,
        LogicId::CK,
        LogicId::CKID,
    ];

    /// Logics with uniform interpolation but without its Lyndon refinement.
    pub const UIP_ONLY: [LogicId; 2] = [LogicId::CKCEM, LogicId::CKCEMID];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            LogicId::E => "E",
            LogicId::M => "M",
            LogicId::EN => "EN",
            LogicId::MN => "MN",
            LogicId::MC => "MC",
            LogicId::K => "K",
            LogicId::EC => "EC",
            LogicId::ECN => "ECN",
            LogicId::CE => "CE",
            LogicId::CM => "CM",
            LogicId::CEN => "CEN",
            LogicId::CMN => "CMN",
            LogicId::CMC => "CMC",
            LogicId::CK => "CK",
            LogicId::CKID => "CKID",
            LogicId::CKCEM => "CKCEM",
            LogicId::CKCEMID => "CKCEMID",
            LogicId::CEC => "CEC",
            LogicId::CECN => "CECN",
        }
    }

    pub fn language(self) -> Language {
        match self {
            LogicId::E | LogicId::M | LogicId::EN | LogicId::MN | LogicId::MC | LogicId::K | LogicId::EC | LogicId::ECN => {
                Language::Modal
            }
            _ => Language::Conditional,
        }
    }

    /// G3W-based calculi; the EC family builds contexts into its modal rules instead.
    pub fn has_weakening(self) -> bool {
        !matches!(self, LogicId::EC | LogicId::ECN | LogicId::CEC | LogicId::CECN)
    }

    pub fn is_ulip(self) -> bool {
        LogicId::ULIP.contains(&self)
    }

    pub fn is_uip_only(self) -> bool {
        LogicId::UIP_ONLY.contains(&self)
    }

    /// The modal or conditional rules added to the propositional base.
    pub fn modal_rules(self) -> &'static [RuleId] {
        use RuleId::*;
        match self {
            LogicId::E => &[RuleE],
            LogicId::M => &[RuleM],
            LogicId::EN => &[RuleE, RuleN],
            LogicId::MN => &[RuleM, RuleN],
            LogicId::MC => &[RuleMC],
            LogicId::K => &[RuleMC, RuleN],
            LogicId::EC => &[RuleEC],
            LogicId::ECN => &[RuleEC, RuleNW],
            LogicId::CE => &[RuleCE],
            LogicId::CM => &[RuleCM],
            LogicId::CEN => &[RuleCE, RuleCN],
            LogicId::CMN => &[RuleCM, RuleCN],
            LogicId::CMC => &[RuleCMC],
            LogicId::CK => &[RuleCMC, RuleCN],
            LogicId::CKID => &[RuleCKID],
            LogicId::CKCEM => &[RuleCKCEM],
            LogicId::CKCEMID => &[RuleCKCEMID],
            LogicId::CEC => &[RuleCEC],
            LogicId::CECN => &[RuleCEC, RuleCNW],
        }
    }
}

impl fmt::Display for LogicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LogicId {
    type Err = String;

    fn from_str(s: &str) -> Result<LogicId, String> {
        LogicId::ALL
            .iter()
            .copied()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown logic `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RuleId {
    Ax,
    LBot,
    LAnd,
    RAnd,
    LOr,
    ROr,
    LImp,
    RImp,
    Lw,
    Rw,
    RuleE,
    RuleM,
    RuleMC,
    RuleN,
    RuleNW,
    RuleEC,
    RuleCE,
    RuleCM,
    RuleCMC,
    RuleCN,
    RuleCKID,
    RuleCKCEM,
    RuleCKCEMID,
    /// Conditional form of EC (calculus for CEC).
    RuleCEC,
    /// Conditional form of NW (calculus for CECN).
    RuleCNW,
    Cut,
}

impl RuleId {
    pub const PROPOSITIONAL: [RuleId; 8] =
        [RuleId::Ax, RuleId::LBot, RuleId::LAnd, RuleId::RAnd, RuleId::LOr, RuleId::ROr, RuleId::LImp, RuleId::RImp];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::Ax => "Ax",
            RuleId::LBot => "LBot",
            RuleId::LAnd => "LAnd",
            RuleId::RAnd => "RAnd",
            RuleId::LOr => "LOr",
            RuleId::ROr => "ROr",
            RuleId::LImp => "LImp",
            RuleId::RImp => "RImp",
            RuleId::Lw => "Lw",
            RuleId::Rw => "Rw",
            RuleId::RuleE => "E",
            RuleId::RuleM => "M",
            RuleId::RuleMC => "MC",
            RuleId::RuleN => "N",
            RuleId::RuleNW => "NW",
            RuleId::RuleEC => "EC",
            RuleId::RuleCE => "CE",
            RuleId::RuleCM => "CM",
            RuleId::RuleCMC => "CMC",
            RuleId::RuleCN => "CN",
            RuleId::RuleCKID => "CKID",
            RuleId::RuleCKCEM => "CKCEM",
            RuleId::RuleCKCEMID => "CKCEMID",
            RuleId::RuleCEC => "CEC",
            RuleId::RuleCNW => "CNW",
            RuleId::Cut => "Cut",
        }
    }

    pub const ALL: [RuleId; 26] = [
        RuleId::Ax,
        RuleId::LBot,
        RuleId::LAnd,
        RuleId::RAnd,
        RuleId::LOr,
        RuleId::ROr,
        RuleId::LImp,
        RuleId::RImp,
        RuleId::Lw,
        RuleId::Rw,
        RuleId::RuleE,
        RuleId::RuleM,
        RuleId::RuleMC,
        RuleId::RuleN,
        RuleId::RuleNW,
        RuleId::RuleEC,
        RuleId::RuleCE,
        RuleId::RuleCM,
        RuleId::RuleCMC,
        RuleId::RuleCN,
        RuleId::RuleCKID,
        RuleId::RuleCKCEM,
        RuleId::RuleCKCEMID,
        RuleId::RuleCEC,
        RuleId::RuleCNW,
        RuleId::Cut,
    ];

    pub fn from_name(name: &str) -> Option<RuleId> {
        RuleId::ALL.iter().copied().find(|r| r.name() == name)
    }

    pub fn is_modal(self) -> bool {
        !RuleId::PROPOSITIONAL.contains(&self) && !matches!(self, RuleId::Lw | RuleId::Rw | RuleId::Cut)
    }

    pub fn is_weakening(self) -> bool {
        matches!(self, RuleId::Lw | RuleId::Rw)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact rule set of a logic's calculus (Cut excluded).
pub fn calculus_for(logic: LogicId) -> Vec<RuleId> {
    let mut rules = RuleId::PROPOSITIONAL.to_vec();
    if logic.has_weakening() {
        rules.extend([RuleId::Lw, RuleId::Rw]);
    }
    rules.extend_from_slice(logic.modal_rules());
    rules
}

/// The formulas a rule acts on, plus the untouched context.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Principal {
    /// Main formulas in the antecedent (for the multi-premise modal rules, all selected ones).
    pub ant: Vec<Formula>,
    /// Main formulas in the succedent; for CKCEM-style rules the first one is designated.
    pub suc: Vec<Formula>,
    pub context: Sequent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleInstance {
    pub rule: RuleId,
    pub conclusion: Sequent,
    pub premises: Vec<Sequent>,
    pub principal: Principal,
}

/// `Ax` if an atom occurs on both sides, `LBot` if ⊥ is in the antecedent.
pub fn axiom_match(s: &Sequent) -> Option<RuleId> {
    if shared_atom(s).is_some() {
        Some(RuleId::Ax)
    } else if s.ant().iter().any(Formula::is_bot) {
        Some(RuleId::LBot)
    } else {
        None
    }
}

pub(crate) fn shared_atom(s: &Sequent) -> Option<&Formula> {
    s.ant().iter().filter(|f| f.as_atom().is_some()).find(|f| s.suc().contains(f))
}

fn principal(ant: Vec<Formula>, suc: Vec<Formula>, context: Sequent) -> Principal {
    Principal { ant, suc, context }
}

/// Indices of the first occurrence of each distinct formula.
fn distinct_positions(side: &[Formula]) -> impl Iterator<Item = usize> + '_ {
    (0..side.len()).filter(move |&i| i == 0 || side[i] != side[i - 1])
}

/// Backward propositional instances for one main formula occurrence.
pub(crate) fn prop_instance(s: &Sequent, left: bool, i: usize) -> Option<RuleInstance> {
    let (f, ctx) = if left { (&s.ant()[i], s.remove_ant_at(i)) } else { (&s.suc()[i], s.remove_suc_at(i)) };
    let (rule, premises) = match (left, f.node()) {
        (true, Node::And(a, b)) => (RuleId::LAnd, vec![ctx.add_ant(a.clone()).add_ant(b.clone())]),
        (false, Node::And(a, b)) => (RuleId::RAnd, vec![ctx.add_suc(a.clone()), ctx.add_suc(b.clone())]),
        (true, Node::Or(a, b)) => (RuleId::LOr, vec![ctx.add_ant(a.clone()), ctx.add_ant(b.clone())]),
        (false, Node::Or(a, b)) => (RuleId::ROr, vec![ctx.add_suc(a.clone()).add_suc(b.clone())]),
        (true, Node::Imp(a, b)) => (RuleId::LImp, vec![ctx.add_suc(a.clone()), ctx.add_ant(b.clone())]),
        (false, Node::Imp(a, b)) => (RuleId::RImp, vec![ctx.add_ant(a.clone()).add_suc(b.clone())]),
        _ => return None,
    };
    let p = if left { principal(vec![f.clone()], vec![], ctx) } else { principal(vec![], vec![f.clone()], ctx) };
    Some(RuleInstance { rule, conclusion: s.clone(), premises, principal: p })
}

fn is_branching(r: RuleId) -> bool {
    matches!(r, RuleId::RAnd | RuleId::LOr | RuleId::LImp)
}

fn boxed_arg(f: &Formula) -> Option<&Formula> {
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

fn eq_pair(a: &Formula, b: &Formula) -> [Sequent; 2] {
    [Sequent::arrow(a.clone(), b.clone()), Sequent::arrow(b.clone(), a.clone())]
}

/// All sub-multisets of a sorted multiset, as sorted vectors, smallest first.
pub(crate) fn sub_multisets(items: &[Formula]) -> Vec<Vec<Formula>> {
    let mut groups: Vec<(Formula, usize)> = Vec::new();
    for f in items {
        match groups.last_mut() {
            Some((g, n)) if g == f => *n += 1,
            _ => groups.push((f.clone(), 1)),
        }
    }
    let mut out = vec![Vec::new()];
    for (f, n) in groups {
        let mut next = Vec::new();
        for base in &out {
            for k in 0..=n {
                let mut v = base.clone();
                v.extend(std::iter::repeat_n(f.clone(), k));
                next.push(v);
            }
        }
        out = next;
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Modal/conditional rule instances of one rule with conclusion `s`.
pub fn modal_instances(rule: RuleId, s: &Sequent) -> Vec<RuleInstance> {
    let mut out = Vec::new();
    let inst = |premises: Vec<Sequent>, p: Principal| RuleInstance { rule, conclusion: s.clone(), premises, principal: p };
    let single_pair = s.ant().len() == 1 && s.suc().len() == 1;
    match rule {
        RuleId::RuleE | RuleId::RuleM if single_pair => {
            if let (Some(a), Some(b)) = (boxed_arg(&s.ant()[0]), boxed_arg(&s.suc()[0])) {
                let premises =
                    if rule == RuleId::RuleE { eq_pair(a, b).to_vec() } else { vec![Sequent::arrow(a.clone(), b.clone())] };
                out.push(inst(premises, principal(s.ant().to_vec(), s.suc().to_vec(), Sequent::empty())));
            }
        }
        RuleId::RuleMC if !s.ant().is_empty() && s.suc().len() == 1 => {
            let args: Option<Vec<Formula>> = s.ant().iter().map(|f| boxed_arg(f).cloned()).collect();
            if let (Some(args), Some(b)) = (args, boxed_arg(&s.suc()[0])) {
                out.push(inst(
                    vec![Sequent::new(args, vec![b.clone()])],
                    principal(s.ant().to_vec(), s.suc().to_vec(), Sequent::empty()),
                ));
            }
        }
        RuleId::RuleN if s.ant().is_empty() && s.suc().len() == 1 => {
            if let Some(b) = boxed_arg(&s.suc()[0]) {
                out.push(inst(vec![Sequent::right(b.clone())], principal(vec![], s.suc().to_vec(), Sequent::empty())));
            }
        }
        RuleId::RuleNW | RuleId::RuleCNW => {
            for j in distinct_positions(s.suc()) {
                let f = &s.suc()[j];
                let arg = if rule == RuleId::RuleNW { boxed_arg(f) } else { cond_parts(f).map(|(_, b)| b) };
                if let Some(b) = arg {
                    out.push(inst(vec![Sequent::right(b.clone())], principal(vec![], vec![f.clone()], s.remove_suc_at(j))));
                }
            }
        }
        RuleId::RuleEC => {
            let boxes: Vec<Formula> = s.ant().iter().filter(|f| boxed_arg(f).is_some()).cloned().collect();
            for j in distinct_positions(s.suc()) {
                let Some(b) = boxed_arg(&s.suc()[j]) else { continue };
                let rest = s.remove_suc_at(j);
                for sel in sub_multisets(&boxes).into_iter().filter(|v| !v.is_empty()) {
                    let args: Vec<Formula> = sel.iter().map(|f| boxed_arg(f).unwrap().clone()).collect();
                    let mut premises = vec![Sequent::new(args.clone(), vec![b.clone()])];
                    premises.extend(args.iter().map(|a| Sequent::arrow(b.clone(), a.clone())));
                    let context = rest.minus(&Sequent::new(sel.clone(), vec![])).expect("selection is in antecedent");
                    out.push(inst(premises, principal(sel, vec![s.suc()[j].clone()], context)));
                }
            }
        }
        RuleId::RuleCEC => {
            let conds: Vec<Formula> = s.ant().iter().filter(|f| cond_parts(f).is_some()).cloned().collect();
            for j in distinct_positions(s.suc()) {
                let Some((a0, b0)) = cond_parts(&s.suc()[j]) else { continue };
                let rest = s.remove_suc_at(j);
                for sel in sub_multisets(&conds).into_iter().filter(|v| !v.is_empty()) {
                    let parts: Vec<(&Formula, &Formula)> = sel.iter().map(|f| cond_parts(f).unwrap()).collect();
                    let mut premises = vec![Sequent::new(parts.iter().map(|(_, b)| (*b).clone()).collect(), vec![b0.clone()])];
                    premises.extend(parts.iter().map(|(_, b)| Sequent::arrow(b0.clone(), (*b).clone())));
                    for (a, _) in &parts {
                        premises.extend(eq_pair(a0, a));
                    }
                    let context = rest.minus(&Sequent::new(sel.clone(), vec![])).expect("selection is in antecedent");
                    out.push(inst(premises, principal(sel, vec![s.suc()[j].clone()], context)));
                }
            }
        }
        RuleId::RuleCE | RuleId::RuleCM if single_pair => {
            if let (Some((a1, b1)), Some((a0, b0))) = (cond_parts(&s.ant()[0]), cond_parts(&s.suc()[0])) {
                let mut premises = eq_pair(a0, a1).to_vec();
                if rule == RuleId::RuleCE {
                    premises.extend(eq_pair(b0, b1));
                } else {
                    premises.push(Sequent::arrow(b1.clone(), b0.clone()));
                }
                out.push(inst(premises, principal(s.ant().to_vec(), s.suc().to_vec(), Sequent::empty())));
            }
        }
        RuleId::RuleCMC | RuleId::RuleCKID if s.suc().len() == 1 => {
            if rule == RuleId::RuleCMC && s.ant().is_empty() {
                return out;
            }
            let parts: Option<Vec<(&Formula, &Formula)>> = s.ant().iter().map(cond_parts).collect();
            if let (Some(parts), Some((a0, b0))) = (parts, cond_parts(&s.suc()[0])) {
                let mut premises = Vec::new();
                for (a, _) in &parts {
                    premises.extend(eq_pair(a0, a));
                }
                let mut left: Vec<Formula> = parts.iter().map(|(_, b)| (*b).clone()).collect();
                if rule == RuleId::RuleCKID {
                    left.push(a0.clone());
                }
                premises.push(Sequent::new(left, vec![b0.clone()]));
                out.push(inst(premises, principal(s.ant().to_vec(), s.suc().to_vec(), Sequent::empty())));
            }
        }
        RuleId::RuleCN if s.ant().is_empty() && s.suc().len() == 1 => {
            if let Some((_, b0)) = cond_parts(&s.suc()[0]) {
                out.push(inst(vec![Sequent::right(b0.clone())], principal(vec![], s.suc().to_vec(), Sequent::empty())));
            }
        }
        RuleId::RuleCKCEM | RuleId::RuleCKCEMID => {
            let all_cond = s.formulas().all(|f| cond_parts(f).is_some());
            if !all_cond {
                return out;
            }
            for j in distinct_positions(s.suc()) {
                let (a0, b0) = cond_parts(&s.suc()[j]).unwrap();
                let others = s.remove_suc_at(j);
                let mut premises = Vec::new();
                for f in others.ant().iter().chain(others.suc()) {
                    premises.extend(eq_pair(a0, cond_parts(f).unwrap().0));
                }
                let mut left: Vec<Formula> = others.ant().iter().map(|f| cond_parts(f).unwrap().1.clone()).collect();
                if rule == RuleId::RuleCKCEMID {
                    left.push(a0.clone());
                }
                let mut right = vec![b0.clone()];
                right.extend(others.suc().iter().map(|f| cond_parts(f).unwrap().1.clone()));
                premises.push(Sequent::new(left, right));
                let mut suc = vec![s.suc()[j].clone()];
                suc.extend(others.suc().iter().cloned());
                out.push(inst(premises, principal(s.ant().to_vec(), suc, Sequent::empty())));
            }
        }
        _ => {}
    }
    out
}

/// Every backward instance of the logic's rules with conclusion `s`, in
/// search order: axioms, non-branching propositional rules, branching
/// propositional rules, modal/conditional rules, weakening.
pub fn backward_instances(logic: LogicId, s: &Sequent) -> Vec<RuleInstance> {
    let mut out = Vec::new();
    for i in distinct_positions(s.ant()) {
        let f = &s.ant()[i];
        if f.as_atom().is_some() && s.suc().contains(f) {
            let ctx = s.remove_ant_at(i).without_suc(f).expect("atom in succedent");
            out.push(RuleInstance {
                rule: RuleId::Ax,
                conclusion: s.clone(),
                premises: vec![],
                principal: principal(vec![f.clone()], vec![f.clone()], ctx),
            });
        }
    }
    if let Some(i) = s.ant().iter().position(Formula::is_bot) {
        out.push(RuleInstance {
            rule: RuleId::LBot,
            conclusion: s.clone(),
            premises: vec![],
            principal: principal(vec![Formula::bot()], vec![], s.remove_ant_at(i)),
        });
    }
    let mut props = Vec::new();
    for i in distinct_positions(s.ant()) {
        props.extend(prop_instance(s, true, i));
    }
    for i in distinct_positions(s.suc()) {
        props.extend(prop_instance(s, false, i));
    }
    let (branching, linear): (Vec<_>, Vec<_>) = props.into_iter().partition(|r| is_branching(r.rule));
    out.extend(linear);
    out.extend(branching);
    for &rule in logic.modal_rules() {
        out.extend(modal_instances(rule, s));
    }
    if logic.has_weakening() {
        for i in distinct_positions(s.ant()) {
            out.push(RuleInstance {
                rule: RuleId::Lw,
                conclusion: s.clone(),
                premises: vec![s.remove_ant_at(i)],
                principal: principal(vec![s.ant()[i].clone()], vec![], s.remove_ant_at(i)),
            });
        }
        for i in distinct_positions(s.suc()) {
            out.push(RuleInstance {
                rule: RuleId::Rw,
                conclusion: s.clone(),
                premises: vec![s.remove_suc_at(i)],
                principal: principal(vec![], vec![s.suc()[i].clone()], s.remove_suc_at(i)),
            });
        }
    }
    out
}

/// Does `(rule, conclusion, premises)` form an instance of the logic's calculus?
pub fn is_instance(logic: LogicId, rule: RuleId, conclusion: &Sequent, premises: &[Sequent]) -> bool {
    if rule == RuleId::Cut || !calculus_for(logic).contains(&rule) {
        return false;
    }
    match rule {
        RuleId::Ax => premises.is_empty() && shared_atom(conclusion).is_some(),
        RuleId::LBot => premises.is_empty() && conclusion.ant().iter().any(Formula::is_bot),
        RuleId::Lw => {
            premises.len() == 1
                && conclusion.ant().iter().any(|f| conclusion.without_ant(f).as_ref() == Some(&premises[0]))
        }
        RuleId::Rw => {
            premises.len() == 1
                && conclusion.suc().iter().any(|f| conclusion.without_suc(f).as_ref() == Some(&premises[0]))
        }
        _ if !rule.is_modal() => {
            let mut cands = Vec::new();
            for i in distinct_positions(conclusion.ant()) {
                cands.extend(prop_instance(conclusion, true, i));
            }
            for i in distinct_positions(conclusion.suc()) {
                cands.extend(prop_instance(conclusion, false, i));
            }
            cands.iter().any(|r| r.rule == rule && r.premises == premises)
        }
        _ => modal_instances(rule, conclusion).iter().any(|r| r.premises == premises),
    }
}

/// Machine-readable description of one rule.
#[derive(Debug, Clone, Serialize)]
pub struct RuleSchema {
    pub name: &'static str,
    pub premises: Vec<&'static str>,
    pub conclusion: &'static str,
    pub side_conditions: Vec<&'static str>,
}

fn schema(
    name: &'static str,
    premises: &[&'static str],
    conclusion: &'static str,
    side: &[&'static str],
) -> RuleSchema {
    RuleSchema { name, premises: premises.to_vec(), conclusion, side_conditions: side.to_vec() }
}

/// Registry of every rule with its premise schemas and side conditions.
pub fn rule_registry() -> Vec<RuleSchema> {
    vec![
        schema("Ax", &[], "G, p => p, D", &["p atomic"]),
        schema("LBot", &[], "G, false => D", &[]),
        schema("LAnd", &["G, A, B => D"], "G, A & B => D", &[]),
        schema("RAnd", &["G => A, D", "G => B, D"], "G => A & B, D", &[]),
        schema("LOr", &["G, A => D", "G, B => D"], "G, A | B => D", &[]),
        schema("ROr", &["G => A, B, D"], "G => A | B, D", &[]),
        schema("LImp", &["G => A, D", "G, B => D"], "G, A -> B => D", &[]),
        schema("RImp", &["G, A => B, D"], "G => A -> B, D", &[]),
        schema("Lw", &["G => D"], "G, A => D", &[]),
        schema("Rw", &["G => D"], "G => A, D", &[]),
        schema("E", &["A => B", "B => A"], "[]A => []B", &[]),
        schema("M", &["A => B"], "[]A => []B", &[]),
        schema("MC", &["A1, ..., An => B"], "[]A1, ..., []An => []B", &["n >= 1"]),
        schema("N", &["=> B"], "=> []B", &[]),
        schema("NW", &["=> B"], "S => []B, L", &["S, L arbitrary"]),
        schema(
            "EC",
            &["A1, ..., An => B", "B => A1", "...", "B => An"],
            "S, []A1, ..., []An => []B, L",
            &["n >= 1", "S, L arbitrary"],
        ),
        schema("CE", &["A0 => A1", "A1 => A0", "B0 => B1", "B1 => B0"], "A1 > B1 => A0 > B0", &[]),
        schema("CM", &["A0 => A1", "A1 => A0", "B1 => B0"], "A1 > B1 => A0 > B0", &[]),
        schema(
            "CMC",
            &["{A0 => Ai, Ai => A0 : 1 <= i <= n}", "B1, ..., Bn => B0"],
            "A1 > B1, ..., An > Bn => A0 > B0",
            &["n >= 1"],
        ),
        schema("CN", &["=> B0"], "=> A0 > B0", &[]),
        schema(
            "CKID",
            &["{A0 => Ai, Ai => A0 : i in I}", "A0, {Bi : i in I} => B0"],
            "{Ai > Bi : i in I} => A0 > B0",
            &["I possibly empty"],
        ),
        schema(
            "CKCEM",
            &["{A0 => Ar, Ar => A0 : r in I u J}", "{Bi : i in I} => B0, {Bj : j in J}"],
            "{Ai > Bi : i in I} => A0 > B0, {Aj > Bj : j in J}",
            &["I, J possibly empty"],
        ),
        schema(
            "CKCEMID",
            &["{A0 => Ar, Ar => A0 : r in I u J}", "A0, {Bi : i in I} => B0, {Bj : j in J}"],
            "{Ai > Bi : i in I} => A0 > B0, {Aj > Bj : j in J}",
            &["I, J possibly empty"],
        ),
        schema(
            "CEC",
            &["B1, ..., Bn => B0", "{B0 => Bi : 1 <= i <= n}", "{A0 => Ai, Ai => A0 : 1 <= i <= n}"],
            "S, A1 > B1, ..., An > Bn => A0 > B0, L",
            &["n >= 1", "S, L arbitrary"],
        ),
        schema("CNW", &["=> B0"], "S => A0 > B0, L", &["S, L arbitrary"]),
        schema("Cut", &["G1 => A, D1", "A, G2 => D2"], "G1, G2 => D1, D2", &["input proofs only"]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str, l: Language) -> Sequent {
        Sequent::parse(t, l).unwrap()
    }

    #[test]
    fn rule_sets() {
        let m = calculus_for(LogicId::M);
        assert!(m.contains(&RuleId::Lw) && m.contains(&RuleId::RuleM));
        let ec = calculus_for(LogicId::EC);
        assert!(!ec.contains(&RuleId::Lw) && !ec.contains(&RuleId::Rw) && ec.contains(&RuleId::RuleEC));
        let k = calculus_for(LogicId::K);
        assert!(k.contains(&RuleId::RuleMC) && k.contains(&RuleId::RuleN));
        assert!(calculus_for(LogicId::CE).contains(&RuleId::RuleCE));
        assert!(calculus_for(LogicId::ECN).contains(&RuleId::RuleNW));
        assert_eq!(calculus_for(LogicId::CKCEMID).len(), 11);
    }

    #[test]
    fn axioms() {
        let m = Language::Modal;
        assert_eq!(axiom_match(&s("p, q => p", m)), Some(RuleId::Ax));
        assert_eq!(axiom_match(&s("false =>", m)), Some(RuleId::LBot));
        assert_eq!(axiom_match(&s("p & q => p & q", m)), None);
    }

    #[test]
    fn k_box_instances() {
        let inst = backward_instances(LogicId::K, &s("[]p => []p", Language::Modal));
        let mc: Vec<_> = inst.iter().filter(|r| r.rule == RuleId::RuleMC).collect();
        assert_eq!(mc.len(), 1);
        assert_eq!(mc[0].premises, vec![s("p => p", Language::Modal)]);
        assert_eq!(inst.iter().filter(|r| r.rule.is_weakening()).count(), 2);
        assert_eq!(inst.len(), 3);
    }

    #[test]
    fn ckcem_instances() {
        let c = Language::Conditional;
        let inst = backward_instances(LogicId::CKCEM, &s("=> p > r, q > ~r", c));
        let main: Vec<_> = inst.iter().filter(|r| r.rule == RuleId::RuleCKCEM).collect();
        assert_eq!(main.len(), 2);
        for r in &main {
            assert_eq!(r.premises.len(), 3);
        }
        assert_eq!(main[0].premises[0], s("p => q", c));
        assert_eq!(main[0].premises[1], s("q => p", c));
        assert_eq!(main[0].premises[2], s("=> r, ~r", c));
    }

    #[test]
    fn ecn_contexts() {
        let sq = s("s, []a => []b, t", Language::Modal);
        let inst = backward_instances(LogicId::ECN, &sq);
        let ec: Vec<_> = inst.iter().filter(|r| r.rule == RuleId::RuleEC).collect();
        let nw: Vec<_> = inst.iter().filter(|r| r.rule == RuleId::RuleNW).collect();
        assert_eq!(ec.len(), 1);
        assert_eq!(ec[0].principal.context, s("s => t", Language::Modal));
        assert_eq!(nw.len(), 1);
        assert_eq!(nw[0].premises, vec![s("=> b", Language::Modal)]);
    }

    #[test]
    fn sub_multiset_enumeration() {
        let f = |x: &str| Formula::atom(x);
        let subs = sub_multisets(&[f("p"), f("p"), f("q")]);
        assert_eq!(subs.len(), 6);
        assert!(subs[0].is_empty());
    }

    #[test]
    fn instance_checking() {
        let m = Language::Modal;
        let c = s("[]p => []p", m);
        assert!(is_instance(LogicId::K, RuleId::RuleMC, &c, &[s("p => p", m)]));
        assert!(!is_instance(LogicId::E, RuleId::RuleMC, &c, &[s("p => p", m)]));
        assert!(!is_instance(LogicId::EN, RuleId::RuleN, &s("=> []p", m), &[s("=> q", m)]));
        assert!(is_instance(LogicId::EN, RuleId::RuleN, &s("=> []p", m), &[s("=> p", m)]));
        assert!(!is_instance(LogicId::MC, RuleId::RuleMC, &s("=> []p", m), &[s("=> p", m)]));
    }
}
