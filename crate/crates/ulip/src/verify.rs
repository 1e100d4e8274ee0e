//! Bounded checking of the interpolant conditions (var), (i) and (ii).
//!
//! Condition (ii) quantifies over all sequents; it is checked for every test
//! sequent `T` of at most two formulas over a fixed alphabet with total weight
//! within a bound. Classical propositional rules are invertible, so `S · T` is
//! provable iff every pairing of a flat leaf of `S` with a flat leaf of `T` is.
//! Test sequents are therefore grouped by their reduced leaf sets, computed
//! once per (language, alphabet, bound), and each distinct leaf is evaluated
//! once per query.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::calculus::{axiom_match, LogicId};
use crate::generate::formulas_by_weight;
use crate::interpolation::Mode;
use crate::prover::{invertible_step, Proof, Prover};
use crate::sequent::Sequent;
use crate::syntax::{Atom, Formula, Language, Polarity, SignedVars};

/// Flat leaves of the full invertible decomposition of `s`.
pub fn flat_leaves(s: &Sequent) -> Vec<Sequent> {
    let mut out = Vec::new();
    let mut stack = vec![s.clone()];
    while let Some(t) = stack.pop() {
        match invertible_step(&t) {
            Some(step) => stack.extend(step.premises),
            None => out.push(t),
        }
    }
    out
}

fn setify(s: &Sequent) -> Sequent {
    let mut ant = s.ant().to_vec();
    ant.dedup();
    let mut suc: Vec<Formula> = s.suc().iter().filter(|f| !f.is_bot()).cloned().collect();
    suc.dedup();
    Sequent::new(ant, suc)
}

/// Set-ified, non-axiomatic, inclusion-minimal leaves, sorted.
pub fn reduce_leaves(leaves: Vec<Sequent>) -> Vec<Sequent> {
    let mut ls: Vec<Sequent> = leaves.iter().map(setify).filter(|l| axiom_match(l).is_none()).collect();
    ls.sort();
    ls.dedup();
    let keep: Vec<bool> = (0..ls.len())
        .map(|i| !(0..ls.len()).any(|j| j != i && subset(&ls[j], &ls[i]) && (ls[j] != ls[i])))
        .collect();
    ls.into_iter().zip(keep).filter(|(_, k)| *k).map(|(l, _)| l).collect()
}

fn subset(a: &Sequent, b: &Sequent) -> bool {
    a.ant().iter().all(|f| b.ant().contains(f)) && a.suc().iter().all(|f| b.suc().contains(f))
}

/// A flat leaf split into atom bitmasks (over the universe alphabet) and its modal part.
#[derive(Debug, Clone)]
struct Leaf {
    ant_atoms: u64,
    suc_atoms: u64,
    modal_ant: Vec<Formula>,
    modal_suc: Vec<Formula>,
}

impl Leaf {
    fn new(s: &Sequent, alphabet: &[Atom]) -> Leaf {
        let mask = |side: &[Formula]| {
            side.iter()
                .filter_map(|f| f.as_atom())
                .filter_map(|a| alphabet.iter().position(|b| b == a))
                .fold(0u64, |m, i| m | (1 << i))
        };
        let modal = |side: &[Formula]| side.iter().filter(|f| f.is_modal()).cloned().collect();
        Leaf { ant_atoms: mask(s.ant()), suc_atoms: mask(s.suc()), modal_ant: modal(s.ant()), modal_suc: modal(s.suc()) }
    }

    /// Is the composition of two non-axiomatic flat leaves provable?
    fn compose_provable(&self, other: &Leaf, logic: LogicId, prover: &Prover) -> bool {
        if self.ant_atoms & other.suc_atoms != 0 || other.ant_atoms & self.suc_atoms != 0 {
            return true;
        }
        if self.modal_ant.is_empty() && self.modal_suc.is_empty() && other.modal_ant.is_empty() && other.modal_suc.is_empty()
        {
            return false;
        }
        let merge = |a: &[Formula], b: &[Formula]| {
            let mut v: Vec<Formula> = a.iter().chain(b).cloned().collect();
            v.sort();
            v.dedup();
            v
        };
        let m = Sequent::new(merge(&self.modal_ant, &other.modal_ant), merge(&self.modal_suc, &other.modal_suc));
        prover.provable(logic, &m)
    }
}

/// One class of test sequents sharing a reduced leaf set.
#[derive(Debug, Clone)]
struct Class {
    leaves: Vec<u32>,
    /// One example per distinct availability mask.
    examples: Vec<(u64, Sequent)>,
    avail: u64,
}

/// All test sequents for a language, alphabet and weight bound, grouped by leaf set.
pub struct Universe {
    alphabet: Vec<Atom>,
    bound: u32,
    leaves: Vec<Leaf>,
    classes: Vec<Class>,
    /// Number of test sequents enumerated (before grouping).
    pub size: usize,
}

fn avail_mask(t: &Sequent, alphabet: &[Atom]) -> u64 {
    let v = t.signed_vars();
    let mut m = 0u64;
    for (i, a) in alphabet.iter().enumerate() {
        if !v.pos.contains(a) {
            m |= 1 << (3 * i);
        }
        if !v.neg.contains(a) {
            m |= 1 << (3 * i + 1);
        }
        if !v.pos.contains(a) && !v.neg.contains(a) {
            m |= 1 << (3 * i + 2);
        }
    }
    m
}

/// Availability bit required of a test sequent for query atom `p` in `mode`,
/// or `None` when `p` is outside the alphabet (every test sequent qualifies).
fn required_bit(alphabet: &[Atom], p: &Atom, mode: Mode) -> Option<u64> {
    let i = alphabet.iter().position(|a| a == p)?;
    Some(match mode {
        Mode::Lyndon(Polarity::Pos) => 1 << (3 * i + 1),
        Mode::Lyndon(Polarity::Neg) => 1 << (3 * i),
        Mode::Plain => 1 << (3 * i + 2),
    })
}

struct Builder {
    alphabet: Vec<Atom>,
    leaf_ids: HashMap<Sequent, u32>,
    leaves: Vec<Leaf>,
    classes: HashMap<Vec<u32>, usize>,
    out: Vec<Class>,
    size: usize,
}

impl Builder {
    fn leaf_id(&mut self, l: &Sequent) -> u32 {
        if let Some(&i) = self.leaf_ids.get(l) {
            return i;
        }
        let i = self.leaves.len() as u32;
        self.leaves.push(Leaf::new(l, &self.alphabet));
        self.leaf_ids.insert(l.clone(), i);
        i
    }

    fn add(&mut self, t: Sequent, leaves: Vec<Sequent>) {
        self.size += 1;
        if leaves.is_empty() {
            return;
        }
        let mut ids: Vec<u32> = leaves.iter().map(|l| self.leaf_id(l)).collect();
        ids.sort_unstable();
        let mask = avail_mask(&t, &self.alphabet);
        let k = match self.classes.get(&ids) {
            Some(&k) => k,
            None => {
                self.out.push(Class { leaves: ids.clone(), examples: Vec::new(), avail: 0 });
                self.classes.insert(ids, self.out.len() - 1);
                self.out.len() - 1
            }
        };
        let c = &mut self.out[k];
        if !c.examples.iter().any(|(m, _)| *m == mask) {
            c.examples.push((mask, t));
        }
        c.avail |= mask;
    }
}

fn compose_leaf_sets(a: &[Sequent], b: &[Sequent]) -> Vec<Sequent> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.compose(y));
        }
    }
    reduce_leaves(out)
}

impl Universe {
    pub fn build(lang: Language, alphabet: &[Atom], bound: u32) -> Universe {
        assert!(alphabet.len() <= 21, "alphabet too large for availability masks");
        let levels = formulas_by_weight(lang, alphabet, bound);
        let mut b = Builder {
            alphabet: alphabet.to_vec(),
            leaf_ids: HashMap::new(),
            leaves: Vec::new(),
            classes: HashMap::new(),
            out: Vec::new(),
            size: 0,
        };
        // Single-formula test sequents with their reduced leaves, per side.
        let all: Vec<&Formula> = levels.iter().flatten().collect();
        let left: Vec<Vec<Sequent>> = all.iter().map(|f| reduce_leaves(flat_leaves(&Sequent::left((*f).clone())))).collect();
        let right: Vec<Vec<Sequent>> = all.iter().map(|f| reduce_leaves(flat_leaves(&Sequent::right((*f).clone())))).collect();
        b.add(Sequent::empty(), vec![Sequent::empty()]);
        for (i, f) in all.iter().enumerate() {
            b.add(Sequent::left((*f).clone()), left[i].clone());
            b.add(Sequent::right((*f).clone()), right[i].clone());
        }
        for i in 0..all.len() {
            for j in 0..all.len() {
                if all[i].weight() + all[j].weight() > bound {
                    continue;
                }
                let (f, g) = (all[i].clone(), all[j].clone());
                b.add(Sequent::arrow(f.clone(), g.clone()), compose_leaf_sets(&left[i], &right[j]));
                if i <= j {
                    b.add(Sequent::new(vec![f.clone(), g.clone()], vec![]), compose_leaf_sets(&left[i], &left[j]));
                    b.add(Sequent::new(vec![], vec![f, g]), compose_leaf_sets(&right[i], &right[j]));
                }
            }
        }
        Universe { alphabet: alphabet.to_vec(), bound, leaves: b.leaves, classes: b.out, size: b.size }
    }

    /// Shared universe for a (language, alphabet, bound) triple.
    pub fn shared(lang: Language, alphabet: &[Atom], bound: u32) -> Arc<Universe> {
        type Table = Mutex<HashMap<(Language, Vec<Atom>, u32), Arc<Universe>>>;
        static TABLE: OnceLock<Table> = OnceLock::new();
        let table = TABLE.get_or_init(|| Mutex::new(HashMap::new()));
        let key = (lang, alphabet.to_vec(), bound);
        if let Some(u) = table.lock().unwrap().get(&key) {
            return u.clone();
        }
        let u = Arc::new(Universe::build(lang, alphabet, bound));
        table.lock().unwrap().entry(key).or_insert(u).clone()
    }

    pub fn classes(&self) -> usize {
        self.classes.len()
    }

    pub fn distinct_leaves(&self) -> usize {
        self.leaves.len()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Query {
    pub logic: LogicId,
    pub sequent: Sequent,
    pub atom: Atom,
    pub mode: Mode,
}

#[derive(Debug, Clone, Serialize)]
pub struct VarCheck {
    pub free: bool,
    pub within: bool,
    pub interpolant_vars: SignedVars,
    pub sequent_vars: SignedVars,
}

#[derive(Debug, Clone, Serialize)]
pub struct Bound {
    pub weight: u32,
    pub max_formulas: usize,
    pub alphabet: Vec<Atom>,
    pub test_sequents: usize,
    pub classes_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: &'static str,
    pub witness: Option<Sequent>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub query: Query,
    pub interpolant: Formula,
    #[serde(rename = "varCheck")]
    pub var_check: VarCheck,
    #[serde(rename = "proofOfI")]
    pub proof_of_i: Option<Proof>,
    #[serde(rename = "iiBound")]
    pub ii_bound: Bound,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check (var), (i) and bounded (ii) for `candidate` as `∀°p S` (or `∀p S`).
pub fn verify_interpolant(
    prover: &Prover,
    logic: LogicId,
    mode: Mode,
    p: &Atom,
    s: &Sequent,
    candidate: &Formula,
    bound: u32,
    alphabet: &[Atom],
) -> Report {
    let mut violations = Vec::new();
    let sv = s.signed_vars();
    let var_check = VarCheck {
        free: mode.free(candidate, p),
        within: mode.vars_within(candidate.signed_vars(), &sv),
        interpolant_vars: candidate.signed_vars().clone(),
        sequent_vars: sv,
    };
    if !var_check.free {
        violations.push(Violation { condition: "var", witness: None, detail: format!("{candidate} is not free for {p}") });
    }
    if !var_check.within {
        violations.push(Violation {
            condition: "var",
            witness: None,
            detail: format!("variables of {candidate} are not among those of {s}"),
        });
    }
    let si = s.compose(&Sequent::left(candidate.clone()));
    let proof_of_i = prover.prove(logic, &si);
    if proof_of_i.is_none() {
        violations.push(Violation { condition: "i", witness: None, detail: format!("{si} is not provable") });
    }

    let universe = Universe::shared(logic.language(), alphabet, bound);
    let s_leaves: Vec<Leaf> = reduce_leaves(flat_leaves(s)).iter().map(|l| Leaf::new(l, alphabet)).collect();
    let i_leaves: Vec<Leaf> =
        reduce_leaves(flat_leaves(&Sequent::right(candidate.clone()))).iter().map(|l| Leaf::new(l, alphabet)).collect();
    // Per distinct test leaf: 0 = unknown, else bit 1 = pairs with all of S, bit 2 = pairs with all of I.
    let mut memo: Vec<u8> = vec![0; universe.leaves.len()];
    let mut eval = |id: u32| -> u8 {
        let m = memo[id as usize];
        if m != 0 {
            return m;
        }
        let l = &universe.leaves[id as usize];
        let ps = s_leaves.iter().all(|x| x.compose_provable(l, logic, prover));
        let pi = i_leaves.iter().all(|x| x.compose_provable(l, logic, prover));
        let v = 8 | (ps as u8) | ((pi as u8) << 1);
        memo[id as usize] = v;
        v
    };
    let bit = required_bit(alphabet, p, mode).unwrap_or(u64::MAX);
    let mut checked = 0;
    for class in &universe.classes {
        if class.avail & bit == 0 {
            continue;
        }
        checked += 1;
        let mut all_s = true;
        let mut all_i = true;
        for &id in &class.leaves {
            let v = eval(id);
            if v & 1 == 0 {
                all_s = false;
                break;
            }
            all_i &= v & 2 != 0;
        }
        if all_s && !all_i {
            let witness = class.examples.iter().find(|(m, _)| m & bit != 0).map(|(_, t)| t.clone());
            violations.push(Violation {
                condition: "ii",
                detail: match &witness {
                    Some(t) => format!("{} is provable but {} is not", s.compose(t), t.add_suc(candidate.clone())),
                    None => String::new(),
                },
                witness,
            });
        }
    }
    Report {
        query: Query { logic, sequent: s.clone(), atom: p.clone(), mode },
        interpolant: candidate.clone(),
        var_check,
        proof_of_i,
        ii_bound: Bound {
            weight: universe.bound,
            max_formulas: 2,
            alphabet: universe.alphabet.clone(),
            test_sequents: universe.size,
            classes_checked: checked,
        },
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::atoms;
    use crate::prover;

    fn s(t: &str) -> Sequent {
        Sequent::parse(t, Language::Modal).unwrap()
    }

    #[test]
    fn leaves_and_reduction() {
        assert_eq!(reduce_leaves(flat_leaves(&s("p | q => r"))), vec![s("p => r"), s("q => r")]);
        assert!(reduce_leaves(flat_leaves(&s("p => p | q"))).is_empty());
        assert_eq!(reduce_leaves(vec![s("p => q"), s("p, r => q")]), vec![s("p => q")]);
        assert_eq!(reduce_leaves(vec![s("p, p => q, false")]), vec![s("p => q")]);
    }

    #[test]
    fn known_violations() {
        let pr = prover::global();
        let q = Atom::new("q").unwrap();
        let p = Atom::new("p").unwrap();
        let alpha = atoms(&["p", "q"]);
        let mode = Mode::Lyndon(Polarity::Pos);
        let r = verify_interpolant(pr, LogicId::K, mode, &p, &s("=> q"), &Formula::bot(), 2, &alpha);
        assert!(r.violations.iter().any(|v| v.condition == "ii"), "{:?}", r.violations);
        let r = verify_interpolant(pr, LogicId::K, mode, &p, &s("=> q"), &Formula::top(), 2, &alpha);
        assert!(r.violations.iter().any(|v| v.condition == "i"));
        let r = verify_interpolant(pr, LogicId::K, mode, &p, &s("=> q"), &Formula::var(q), 2, &alpha);
        assert!(r.ok(), "{:?}", r.violations);
    }
}
