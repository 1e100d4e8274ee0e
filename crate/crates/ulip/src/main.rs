use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ulip::calculus::LogicId;
use ulip::craig::search_craig_interpolant;
use ulip::cutelim::eliminate_cut;
use ulip::interpolation::{self, InterpError, Mode};
use ulip::prover::{self, check_proof, check_proof_with_cut, Proof};
use ulip::selftest::{self, Config, Ctx, CRITERIA};
use ulip::sequent::Sequent;
use ulip::syntax::{Atom, Formula, Polarity};
use ulip::verify::verify_interpolant;

#[derive(Parser)]
#[command(name = "ulip", version, about = "Prover and uniform interpolant synthesizer for non-normal modal and conditional logics")]
struct Cli {
    /// Emit line-delimited JSON records.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pol {
    Pos,
    Neg,
    Plain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Quant {
    Forall,
    Exists,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a sequent and print a cut-free proof.
    Prove {
        #[arg(long)]
        logic: LogicId,
        /// Sequent such as "p, [](p -> q) => []q" (stdin if absent).
        input: Option<String>,
    },
    /// Compute and verify a uniform (Lyndon) interpolant.
    Interp {
        #[arg(long)]
        logic: LogicId,
        #[arg(long)]
        atom: String,
        #[arg(long, value_enum, default_value = "pos")]
        pol: Pol,
        #[arg(long, value_enum, default_value = "forall")]
        quant: Quant,
        /// Weight bound for the condition (ii) check.
        #[arg(long, default_value_t = 3)]
        bound: u32,
        /// Formula, or a sequent when it contains "=>" (forall only).
        input: Option<String>,
    },
    /// Search for a Craig interpolant of "φ => ψ" over an alphabet.
    Craig {
        #[arg(long)]
        logic: LogicId,
        /// Comma-separated atoms (default: atoms common to φ and ψ).
        #[arg(long, value_delimiter = ',')]
        atoms: Option<Vec<String>>,
        #[arg(long, default_value_t = 3)]
        bound: u32,
        input: Option<String>,
    },
    /// Check a JSON proof.
    Check {
        #[arg(long)]
        logic: LogicId,
        /// Accept Cut nodes.
        #[arg(long)]
        allow_cut: bool,
        input: Option<String>,
    },
    /// Eliminate cuts from a JSON proof.
    Cutelim {
        #[arg(long)]
        logic: LogicId,
        input: Option<String>,
    },
    /// Run the acceptance suite.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads for independent cases.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Run only these criteria (comma-separated numbers).
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<u8>>,
    },
}

/// Failure with its exit status.
struct Fail(u8, String);

fn usage(msg: impl ToString) -> Fail {
    Fail(2, msg.to_string())
}

fn read_input(arg: Option<String>) -> Result<String, Fail> {
    match arg {
        Some(s) if s != "-" => Ok(s),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(usage)?;
            Ok(s.trim().to_string())
        }
    }
}

fn emit(json: bool, record: serde_json::Value, text: &str) {
    if json {
        println!("{record}");
    } else {
        print!("{text}");
        if !text.ends_with('\n') {
            println!();
        }
    }
}

fn read_proof(logic: LogicId, input: Option<String>) -> Result<Proof, Fail> {
    let text = read_input(input)?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| usage(format!("invalid JSON: {e}")))?;
    let v = v.get("proof").cloned().unwrap_or(v);
    Proof::from_json(&v, logic.language()).map_err(usage)
}

fn run(cli: Cli) -> Result<u8, Fail> {
    let json = cli.json;
    match cli.command {
        Command::Prove { logic, input } => {
            let s = Sequent::parse(&read_input(input)?, logic.language()).map_err(usage)?;
            match prover::prove(logic, &s) {
                Some(p) => {
                    let rec = json!({"command": "prove", "logic": logic, "sequent": s, "provable": true, "proof": p});
                    emit(json, rec, &format!("provable in {logic}\n{}", p.pretty()));
                    Ok(0)
                }
                None => {
                    let rec = json!({"command": "prove", "logic": logic, "sequent": s, "provable": false});
                    emit(json, rec, &format!("unprovable in {logic}"));
                    Ok(1)
                }
            }
        }
        Command::Interp { logic, atom, pol, quant, bound, input } => {
            let p = Atom::new(&atom).map_err(usage)?;
            let mode = match pol {
                Pol::Pos => Mode::Lyndon(Polarity::Pos),
                Pol::Neg => Mode::Lyndon(Polarity::Neg),
                Pol::Plain => Mode::Plain,
            };
            interpolation::check_mode(logic, mode).map_err(usage)?;
            let text = read_input(input)?;
            let interp = interpolation::global();
            let lang = logic.language();
            let (query, verify_mode, result, candidate) = if text.contains("=>") {
                if quant == Quant::Exists {
                    return Err(usage("--quant exists takes a formula, not a sequent"));
                }
                let s = Sequent::parse(&text, lang).map_err(usage)?;
                let i = interp.forall_sequent(logic, mode, &p, &s).map_err(interp_fail)?;
                (s, mode, i.clone(), i)
            } else {
                let f = Formula::parse(&text, lang).map_err(usage)?;
                match quant {
                    Quant::Forall => {
                        let i = interp.forall_formula(logic, mode, &p, &f).map_err(interp_fail)?;
                        (Sequent::right(f), mode, i.clone(), i)
                    }
                    // ∃°p φ = ¬∀^dual p ¬φ; the universal part is what gets verified.
                    Quant::Exists => {
                        let e = interp.exists_formula(logic, mode, &p, &f).map_err(interp_fail)?;
                        let nf = Formula::not(f);
                        let inner = interp.forall_formula(logic, mode.dual(), &p, &nf).map_err(interp_fail)?;
                        (Sequent::right(nf), mode.dual(), e, inner)
                    }
                }
            };
            let mut alphabet: Vec<Atom> = query.signed_vars().all().into_iter().collect();
            if !alphabet.contains(&p) {
                alphabet.push(p.clone());
                alphabet.sort();
            }
            if alphabet.len() > 6 {
                return Err(usage("verification alphabet is limited to six atoms"));
            }
            let report = verify_interpolant(interp.prover(), logic, verify_mode, &p, &query, &candidate, bound, &alphabet);
            let quant_name = if quant == Quant::Forall { "forall" } else { "exists" };
            let rec = json!({"command": "interp", "quant": quant_name, "result": result, "report": report});
            let mut text = format!("{quant_name} {atom} ({mode}) in {logic}: {result}\n");
            text.push_str(&format!(
                "verified {} against {} with bound {} over {{{}}}: {} test sequents, {} violations\n",
                candidate,
                query,
                bound,
                alphabet.iter().map(Atom::to_string).collect::<Vec<_>>().join(","),
                report.ii_bound.test_sequents,
                report.violations.len()
            ));
            for v in &report.violations {
                text.push_str(&format!("  ({}) {}\n", v.condition, v.detail));
            }
            emit(json, rec, &text);
            Ok(if report.ok() { 0 } else { 1 })
        }
        Command::Craig { logic, atoms, bound, input } => {
            let s = Sequent::parse(&read_input(input)?, logic.language()).map_err(usage)?;
            let (phi, psi) = match (s.ant(), s.suc()) {
                ([a], [b]) => (a.clone(), b.clone()),
                _ => return Err(usage("craig expects exactly one formula on each side of =>")),
            };
            let alphabet: Vec<Atom> = match atoms {
                Some(names) => names.iter().map(|n| Atom::new(n)).collect::<Result<_, _>>().map_err(usage)?,
                None => phi.vars().intersection(&psi.vars()).cloned().collect(),
            };
            if alphabet.len() > 6 {
                return Err(usage("search alphabet is limited to six atoms"));
            }
            let found = search_craig_interpolant(prover::global(), logic, &phi, &psi, &alphabet, bound).map_err(interp_fail)?;
            let rec = json!({"command": "craig", "logic": logic, "phi": phi, "psi": psi, "alphabet": alphabet, "bound": bound, "interpolant": found});
            let names = alphabet.iter().map(Atom::to_string).collect::<Vec<_>>().join(",");
            match found {
                Some(t) => {
                    emit(json, rec, &format!("interpolant: {t}"));
                    Ok(0)
                }
                None => {
                    emit(json, rec, &format!("no interpolant over {{{names}}} up to weight {bound}"));
                    Ok(1)
                }
            }
        }
        Command::Check { logic, allow_cut, input } => {
            let p = read_proof(logic, input)?;
            let ok = if allow_cut { check_proof_with_cut(logic, &p) } else { check_proof(logic, &p) };
            let rec = json!({"command": "check", "logic": logic, "sequent": p.conclusion, "valid": ok, "cut": p.has_cut()});
            emit(json, rec, if ok { "valid" } else { "invalid" });
            Ok(if ok { 0 } else { 1 })
        }
        Command::Cutelim { logic, input } => {
            let p = read_proof(logic, input)?;
            let q = eliminate_cut(prover::global(), logic, &p).map_err(usage)?;
            let rec = json!({"command": "cutelim", "logic": logic, "sequent": q.conclusion, "proof": q});
            emit(json, rec, &q.pretty());
            Ok(0)
        }
        Command::Selftest { seed, jobs, only } => {
            let only = only.unwrap_or_default();
            if let Some(bad) = only.iter().find(|i| !CRITERIA.iter().any(|(c, _)| c == *i)) {
                return Err(usage(format!("no criterion {bad}")));
            }
            let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().map_err(usage)?;
            let cfg = Config { seed, only, ..Config::new(seed) };
            let report = pool.install(|| selftest::run(Ctx::global(), &cfg));
            if json {
                for c in &report.criteria {
                    println!("{}", serde_json::to_value(c).expect("report serializes"));
                }
            } else {
                print!("{}", report.render());
            }
            Ok(if report.ok() { 0 } else { 1 })
        }
    }
}

fn interp_fail(e: InterpError) -> Fail {
    match e {
        InterpError::Unprovable(_) => Fail(1, e.to_string()),
        InterpError::Internal(_) => Fail(1, e.to_string()),
        _ => usage(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            if json {
                println!("{}", json!({"error": msg, "status": code}));
            }
            eprintln!("ulip: {msg}");
            ExitCode::from(code)
        }
    }
}
