//! The acceptance suite: nine numbered criteria with a per-logic pass/fail
//! matrix. Reports contain no timings, so equal seeds give equal reports.

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::calculus::LogicId;
use crate::craig::search_craig_interpolant;
use crate::cutelim::{eliminate_cut, random_cut_proof};
use crate::generate::{atoms, random_formula, random_modal_formula, random_sequent};
use crate::interpolation::{InterpError, Interpolator, Mode};
use crate::prover::{check_proof, Prover};
use crate::sequent::Sequent;
use crate::syntax::{Atom, Formula, Language, Polarity};
use crate::translate::{translate_s, translate_t};
use crate::verify::verify_interpolant;

/// Numbered criteria, in order.
pub const CRITERIA: [(u8, &str); 9] = [
    (1, "axiom-matrix"),
    (2, "ulip-suite"),
    (3, "uip-suite"),
    (4, "cut-admissibility"),
    (5, "ec-no-cip"),
    (6, "ckcem-no-ulip"),
    (7, "translation"),
    (8, "lyndon"),
    (9, "determinism"),
];

/// Sizes of the randomized parts; [`Sizes::default`] is the acceptance setting.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Sizes {
    pub ulip_sequents: usize,
    pub uip_sequents: usize,
    pub cuts: usize,
    pub theorems: usize,
    pub round_trips: usize,
    pub implications: usize,
    pub verify_bound: u32,
}

impl Default for Sizes {
    fn default() -> Sizes {
        Sizes {
            ulip_sequents: 200,
            uip_sequents: 200,
            cuts: 300,
            theorems: 50,
            round_trips: 1000,
            implications: 100,
            verify_bound: 3,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Config {
    pub seed: u64,
    pub sizes: Sizes,
    /// Criteria to run (all when empty).
    pub only: Vec<u8>,
}

impl Config {
    pub fn new(seed: u64) -> Config {
        Config { seed, sizes: Sizes::default(), only: Vec::new() }
    }

    fn wants(&self, id: u8) -> bool {
        self.only.is_empty() || self.only.contains(&id)
    }
}

/// Prover and interpolator used by one run.
#[derive(Clone, Copy)]
pub struct Ctx {
    pub prover: &'static Prover,
    pub interp: &'static Interpolator,
}

impl Ctx {
    pub fn global() -> Ctx {
        let interp = crate::interpolation::global();
        Ctx { prover: interp.prover(), interp }
    }

    /// Fresh, empty memo tables (leaked; intended for a handful of runs).
    pub fn fresh() -> Ctx {
        let prover: &'static Prover = Box::leak(Box::default());
        let interp: &'static Interpolator = Box::leak(Box::new(Interpolator::with_prover(prover, false)));
        Ctx { prover, interp }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub summary: String,
    pub rows: Vec<Row>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub seed: u64,
    pub criteria: Vec<CriterionReport>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.criteria.iter().all(|c| c.pass)
    }

    pub fn render(&self) -> String {
        let mut out = format!("selftest seed {}\n", self.seed);
        for c in &self.criteria {
            out.push_str(&c.render());
        }
        out
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

impl CriterionReport {
    fn new(id: u8, rows: Vec<Row>, summary: String) -> CriterionReport {
        let name = CRITERIA.iter().find(|(i, _)| *i == id).expect("known criterion").1;
        CriterionReport { id, name, pass: rows.iter().all(|r| r.pass), summary, rows }
    }

    /// The one-line result.
    pub fn line(&self) -> String {
        format!("criterion {} {}: {} ({})", self.id, self.name, verdict(self.pass), self.summary)
    }

    pub fn render(&self) -> String {
        let mut out = self.line();
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(out, "  {:<10} {}  {}", r.label, if r.pass { "pass" } else { "FAIL" }, r.detail);
        }
        out
    }
}

fn row(label: impl Into<String>, pass: bool, detail: impl Into<String>) -> Row {
    Row { label: label.into(), pass, detail: detail.into() }
}

/// Seed for one (criterion, logic) stream.
fn stream(seed: u64, id: u8, logic: LogicId) -> ChaCha8Rng {
    let mix = seed ^ (u64::from(id) << 56) ^ ((logic.index() as u64 + 1) << 40);
    ChaCha8Rng::seed_from_u64(mix)
}

fn parse(t: &str, lang: Language) -> Formula {
    Formula::parse(t, lang).expect("built-in formula parses")
}

/// Run the selected criteria 1–8 and then, if selected, criterion 9, which
/// repeats 1–8 with fresh memo tables and compares the reports.
pub fn run(ctx: Ctx, cfg: &Config) -> Report {
    let mut criteria = Vec::new();
    for (id, _) in CRITERIA.iter().filter(|(id, _)| *id != 9) {
        if cfg.wants(*id) {
            criteria.push(run_one(ctx, cfg, *id));
        }
    }
    if cfg.wants(9) {
        let first = Report { seed: cfg.seed, criteria: criteria.clone() };
        criteria.push(determinism(cfg, &first));
    }
    Report { seed: cfg.seed, criteria }
}

/// Run a single criterion other than 9.
pub fn run_one(ctx: Ctx, cfg: &Config, id: u8) -> CriterionReport {
    match id {
        1 => axiom_matrix(ctx),
        2 => interpolant_suite(ctx, cfg, 2, &LogicId::ULIP, cfg.sizes.ulip_sequents),
        3 => interpolant_suite(ctx, cfg, 3, &LogicId::UIP_ONLY, cfg.sizes.uip_sequents),
        4 => cut_admissibility(ctx, cfg),
        5 => ec_no_cip(ctx),
        6 => ckcem_no_ulip(ctx),
        7 => translation(ctx, cfg),
        8 => lyndon(ctx, cfg),
        _ => panic!("criterion {id} is not a single run"),
    }
}

/// Criterion 9 given the report of a first run.
pub fn determinism(cfg: &Config, first: &Report) -> CriterionReport {
    let ids: Vec<u8> = first.criteria.iter().map(|c| c.id).collect();
    let cfg2 = Config { only: ids.clone(), ..cfg.clone() };
    let second = Report {
        seed: cfg.seed,
        criteria: ids.iter().map(|&id| run_one(Ctx::fresh(), &cfg2, id)).collect(),
    };
    let (a, b) = (first.render(), second.render());
    let diff = a.lines().zip(b.lines()).position(|(x, y)| x != y);
    let same = a == b;
    let detail = match (same, diff) {
        (true, _) => format!("{} bytes identical", a.len()),
        (false, Some(k)) => format!("first difference at line {}", k + 1),
        (false, None) => "reports differ in length".to_string(),
    };
    let summary = format!("criteria {ids:?} rerun with fresh caches");
    CriterionReport::new(9, vec![row("rerun", same, detail)], summary)
}

const MODAL_AXIOMS: [(&str, &str); 4] = [
    ("E", "[](p & q) -> [](q & p)"),
    ("M", "[](p & q) -> []p & []q"),
    ("C", "[]p & []q -> [](p & q)"),
    ("N", "[]true"),
];

const COND_AXIOMS: [(&str, &str); 6] = [
    ("CE", "(p & q) > (r & s) -> (q & p) > (s & r)"),
    ("CM", "p > (q & r) -> (p > q) & (p > r)"),
    ("CC", "(p > q) & (p > r) -> p > (q & r)"),
    ("CN", "p > true"),
    ("CEM", "(p > q) | (p > ~q)"),
    ("ID", "p > p"),
];

/// The axioms a logic is defined by (besides congruence, which all have).
fn defining_axioms(logic: LogicId) -> &'static [&'static str] {
    use LogicId::*;
    match logic {
        E => &["E"],
        M => &["E", "M"],
        EN => &["E", "N"],
        MN => &["E", "M", "N"],
        MC => &["E", "M", "C"],
        K => &["E", "M", "C", "N"],
        EC => &["E", "C"],
        ECN => &["E", "C", "N"],
        CE => &["CE"],
        CM => &["CE", "CM"],
        CEN => &["CE", "CN"],
        CMN => &["CE", "CM", "CN"],
        CMC => &["CE", "CM", "CC"],
        CK => &["CE", "CM", "CC", "CN"],
        CKID => &["CE", "CM", "CC", "CN", "ID"],
        CKCEM => &["CE", "CM", "CC", "CN", "CEM"],
        CKCEMID => &["CE", "CM", "CC", "CN", "CEM", "ID"],
        CEC => &["CE", "CC"],
        CECN => &["CE", "CC", "CN"],
    }
}

fn axiom_matrix(ctx: Ctx) -> CriterionReport {
    let (mut pos, mut neg) = (0, 0);
    let mut rows = Vec::new();
    for logic in LogicId::MAIN {
        let table: &[(&str, &str)] = match logic.language() {
            Language::Modal => &MODAL_AXIOMS,
            Language::Conditional => &COND_AXIOMS,
        };
        let mut ok = true;
        let mut cells = Vec::new();
        for (name, text) in table {
            let expected = defining_axioms(logic).contains(name);
            let got = ctx.prover.provable(logic, &Sequent::right(parse(text, logic.language())));
            if expected {
                pos += 1;
            } else {
                neg += 1;
            }
            ok &= got == expected;
            let mark = if got { "+" } else { "-" };
            cells.push(format!("{name}{mark}{}", if got == expected { "" } else { "!" }));
        }
        rows.push(row(logic.name(), ok, cells.join(" ")));
    }
    let enough = pos >= 12 && neg >= 6;
    rows.push(row("counts", enough, format!("{pos} positive, {neg} negative (need 12 and 6)")));
    CriterionReport::new(1, rows, format!("{pos} theorems, {neg} non-theorems"))
}

fn interpolant_suite(ctx: Ctx, cfg: &Config, id: u8, logics: &[LogicId], n: usize) -> CriterionReport {
    let alphabet = atoms(&["p", "q", "r"]);
    let p = alphabet[0].clone();
    let modes: Vec<Mode> =
        if id == 2 { vec![Mode::Lyndon(Polarity::Pos), Mode::Lyndon(Polarity::Neg)] } else { vec![Mode::Plain] };
    let bound = cfg.sizes.verify_bound;
    let rows: Vec<Row> = logics
        .par_iter()
        .map(|&logic| {
            let mut rng = stream(cfg.seed, id, logic);
            let (mut queries, mut violations) = (0, 0);
            let mut first = None;
            for _ in 0..n {
                let s = random_sequent(&mut rng, logic.language(), &alphabet, 5);
                for &mode in &modes {
                    queries += 1;
                    let bad = match ctx.interp.forall_sequent(logic, mode, &p, &s) {
                        Ok(i) => {
                            let r = verify_interpolant(ctx.prover, logic, mode, &p, &s, &i, bound, &alphabet);
                            (!r.ok()).then(|| (r.violations.len(), format!("{s} {mode}: {}", r.violations[0].detail)))
                        }
                        Err(e) => Some((1, format!("{s} {mode}: {e}"))),
                    };
                    if let Some((k, msg)) = bad {
                        violations += k;
                        first.get_or_insert(msg);
                    }
                }
            }
            let mut detail = format!("{n} sequents, {queries} queries, {violations} violations");
            if let Some(m) = first {
                detail.push_str(&format!("; first: {m}"));
            }
            row(logic.name(), violations == 0, detail)
        })
        .collect();
    let mode_text = if id == 2 { "both polarities" } else { "plain" };
    CriterionReport::new(id, rows, format!("{n} sequents per logic, {mode_text}, bound {bound}"))
}

fn cut_admissibility(ctx: Ctx, cfg: &Config) -> CriterionReport {
    let alphabet = atoms(&["p", "q", "r"]);
    let n = cfg.sizes.cuts;
    let rows: Vec<Row> = LogicId::MAIN
        .par_iter()
        .map(|&logic| {
            let mut rng = stream(cfg.seed, 4, logic);
            let mut failures = Vec::new();
            for _ in 0..n {
                let proof = random_cut_proof(ctx.prover, logic, &mut rng, &alphabet, 5);
                let end = &proof.conclusion;
                let searched = ctx.prover.provable(logic, end);
                let eliminated = match eliminate_cut(ctx.prover, logic, &proof) {
                    Ok(q) => !q.has_cut() && check_proof(logic, &q) && q.conclusion == *end,
                    Err(_) => false,
                };
                if !(searched && eliminated) {
                    failures.push(format!("{end} (search {searched}, elimination {eliminated})"));
                }
            }
            let mut detail = format!("{n} cuts, {} failures", failures.len());
            if let Some(f) = failures.first() {
                detail.push_str(&format!("; first: {f}"));
            }
            row(logic.name(), failures.is_empty(), detail)
        })
        .collect();
    CriterionReport::new(4, rows, format!("{n} random cuts per logic, weight ≤ 5"))
}

fn ec_no_cip(ctx: Ctx) -> CriterionReport {
    let phi = parse("[](~q & r)", Language::Modal);
    let psi = parse("[](p & q) -> []false", Language::Modal);
    let s = Sequent::new(vec![phi.clone(), parse("[](p & q)", Language::Modal)], vec![parse("[]false", Language::Modal)]);
    let q = atoms(&["q"]);
    let mut rows = Vec::new();
    for logic in [LogicId::EC, LogicId::ECN] {
        let proof = ctx.prover.prove(logic, &s);
        let proved = proof.as_ref().is_some_and(|p| check_proof(logic, p));
        rows.push(row(logic.name(), proved, format!("{s} {}", if proved { "proved" } else { "not proved" })));
        let found = search_craig_interpolant(ctx.prover, logic, &phi, &psi, &q, 4);
        let none = matches!(found, Ok(None));
        let detail = match &found {
            Ok(None) => "no interpolant over {q} up to weight 4".to_string(),
            Ok(Some(t)) => format!("unexpected interpolant {t}"),
            Err(e) => e.to_string(),
        };
        rows.push(row(logic.name(), none, detail));
    }
    let found = search_craig_interpolant(ctx.prover, LogicId::K, &phi, &psi, &q, 4);
    let checked = match &found {
        Ok(Some(t)) => {
            let ok = ctx.prover.entails(LogicId::K, &phi, t)
                && ctx.prover.entails(LogicId::K, t, &psi)
                && t.vars().iter().all(|a| q.contains(a));
            row("K", ok, format!("interpolant {t}"))
        }
        _ => row("K", false, "no interpolant found"),
    };
    rows.push(checked);
    CriterionReport::new(5, rows, "EC and ECN lack an interpolant that K has".to_string())
}

fn ckcem_no_ulip(ctx: Ctx) -> CriterionReport {
    let yes = Sequent::right(parse("(q > r) | (q > ~r)", Language::Conditional));
    let no = Sequent::right(parse("(p > r) | (q > ~r)", Language::Conditional));
    let p = atoms(&["p"])[0].clone();
    let mut rows = Vec::new();
    for logic in LogicId::UIP_ONLY {
        let a = ctx.prover.provable(logic, &yes);
        let b = ctx.prover.provable(logic, &no);
        rows.push(row(logic.name(), a && !b, format!("{yes} provable: {a}; {no} provable: {b}")));
        let refused = matches!(
            ctx.interp.forall_sequent(logic, Mode::Lyndon(Polarity::Pos), &p, &yes),
            Err(InterpError::NoLyndon(_))
        );
        rows.push(row(logic.name(), refused, "Lyndon mode refused"));
    }
    CriterionReport::new(6, rows, "CEM witness pair".to_string())
}

/// A random modal formula whose provability in `logic` is `want`.
fn random_sample<R: rand::Rng>(ctx: Ctx, logic: LogicId, rng: &mut R, alphabet: &[Atom], want: bool) -> Formula {
    loop {
        let f = random_modal_formula(rng, Language::Modal, alphabet, 6);
        if ctx.prover.provable(logic, &Sequent::right(f.clone())) == want {
            return f;
        }
    }
}

fn translation(ctx: Ctx, cfg: &Config) -> CriterionReport {
    let alphabet = atoms(&["p", "q"]);
    let n = cfg.sizes.theorems;
    let mut rows = Vec::new();
    for (modal, cond) in [(LogicId::EC, LogicId::CEC), (LogicId::ECN, LogicId::CECN)] {
        let mut rng = stream(cfg.seed, 7, modal);
        for want in [true, false] {
            let mut bad = Vec::new();
            for _ in 0..n {
                let f = random_sample(ctx, modal, &mut rng, &alphabet, want);
                let t = translate_t(&f);
                if ctx.prover.provable(cond, &Sequent::right(t.clone())) != want || t.vars() != f.vars() {
                    bad.push(f);
                }
            }
            let kind = if want { "theorems" } else { "non-theorems" };
            let mut detail = format!("{n} {kind} of {modal} map to {kind} of {cond}");
            if let Some(f) = bad.first() {
                detail = format!("{} of {n} {kind} fail; first: {f}", bad.len());
            }
            rows.push(row(format!("{modal}/{cond}"), bad.is_empty(), detail));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x7157);
    let m = cfg.sizes.round_trips;
    let mut bad = 0;
    for _ in 0..m {
        let f = random_formula(&mut rng, Language::Modal, &atoms(&["p", "q", "r"]), 8);
        let t = translate_t(&f);
        let back = translate_s(&t);
        if back != f || t.vars() != f.vars() || !back.vars().is_subset(&t.vars()) {
            bad += 1;
        }
    }
    rows.push(row("round-trip", bad == 0, format!("{m} formulas, {bad} mismatches")));
    CriterionReport::new(7, rows, format!("{n} theorems per pair, {m} round trips"))
}

fn lyndon(ctx: Ctx, cfg: &Config) -> CriterionReport {
    let alphabet = atoms(&["p", "q", "r"]);
    let n = cfg.sizes.implications;
    let rows: Vec<Row> = LogicId::ULIP
        .par_iter()
        .map(|&logic| {
            let lang = logic.language();
            let mut rng = stream(cfg.seed, 8, logic);
            let mut failures = Vec::new();
            let mut done = 0;
            while done < n {
                let phi = random_modal_formula(&mut rng, lang, &alphabet, 4);
                let psi = random_formula(&mut rng, lang, &alphabet, 4);
                let degenerate = ctx.prover.provable(logic, &Sequent::left(phi.clone()))
                    || ctx.prover.provable(logic, &Sequent::right(psi.clone()));
                if degenerate || !ctx.prover.entails(logic, &phi, &psi) {
                    continue;
                }
                done += 1;
                match ctx.interp.lyndon_interpolant(logic, &phi, &psi) {
                    Ok(theta) => {
                        let (a, b, t) = (phi.signed_vars(), psi.signed_vars(), theta.signed_vars());
                        let vars_ok =
                            t.pos.iter().all(|x| a.pos.contains(x) && b.pos.contains(x))
                                && t.neg.iter().all(|x| a.neg.contains(x) && b.neg.contains(x));
                        let ok = vars_ok && ctx.prover.entails(logic, &phi, &theta) && ctx.prover.entails(logic, &theta, &psi);
                        if !ok {
                            failures.push(format!("{phi} => {psi}: {theta}"));
                        }
                    }
                    Err(e) => failures.push(format!("{phi} => {psi}: {e}")),
                }
            }
            let mut detail = format!("{n} implications, {} failures", failures.len());
            if let Some(f) = failures.first() {
                detail.push_str(&format!("; first: {f}"));
            }
            row(logic.name(), failures.is_empty(), detail)
        })
        .collect();
    CriterionReport::new(8, rows, format!("{n} implications per logic"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Config {
        Config {
            seed: 5,
            sizes: Sizes {
                ulip_sequents: 4,
                uip_sequents: 4,
                cuts: 5,
                theorems: 3,
                round_trips: 20,
                implications: 3,
                verify_bound: 2,
            },
            only: Vec::new(),
        }
    }

    #[test]
    fn small_run_passes_and_repeats() {
        let r = run(Ctx::global(), &small());
        assert!(r.ok(), "{}", r.render());
        assert_eq!(r.criteria.len(), 9);
        assert!(r.render().contains("criterion 9 determinism: PASS"));
    }

    #[test]
    fn axiom_matrix_counts() {
        let c = run_one(Ctx::global(), &small(), 1);
        assert!(c.pass, "{}", c.render());
        assert_eq!(c.summary, "51 theorems, 35 non-theorems");
    }
}
