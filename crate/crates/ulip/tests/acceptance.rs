//! Acceptance run at the default sizes with seed 0. Prints one line per
//! criterion and exits non-zero if any criterion or time limit fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ulip::selftest::{self, Config, Ctx, Report, CRITERIA};

const SEED: u64 = 0;

/// Wall-clock limits per criterion.
fn limit(id: u8) -> Option<Duration> {
    match id {
        1 => Some(Duration::from_secs(5)),
        2 => Some(Duration::from_secs(600)),
        5 => Some(Duration::from_secs(60)),
        _ => None,
    }
}

fn main() -> ExitCode {
    let cfg = Config::new(SEED);
    let mut first = Report { seed: SEED, criteria: Vec::new() };
    let mut ok = true;
    for (id, _) in CRITERIA {
        let start = Instant::now();
        let report = if id == 9 {
            selftest::determinism(&cfg, &first)
        } else {
            selftest::run_one(Ctx::global(), &cfg, id)
        };
        let took = start.elapsed();
        let timing = match limit(id) {
            Some(max) => format!("{:.2} s, limit {} s", took.as_secs_f64(), max.as_secs()),
            None => format!("{:.2} s", took.as_secs_f64()),
        };
        let in_time = limit(id).is_none_or(|max| took < max);
        if !in_time {
            println!("criterion {id}: FAIL (time limit exceeded)");
        }
        println!("{} [{timing}]", report.line());
        if !report.pass {
            for r in report.rows.iter().filter(|r| !r.pass) {
                println!("    {} {}", r.label, r.detail);
            }
        }
        ok &= report.pass && in_time;
        if id != 9 {
            first.criteria.push(report);
        }
    }
    println!("acceptance: {}", if ok { "PASS" } else { "FAIL" });
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
