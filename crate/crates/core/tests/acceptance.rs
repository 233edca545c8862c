//! Acceptance driver. Prints one line per criterion and exits non-zero if
//! any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hoopforge::corpus::Corpus;
use hoopforge::morph::DEFAULT_BUDGET;
use hoopforge::suite::{run_suite_on, Preset, SuiteOptions, SuiteReport, CHAIN_MAX};

/// Corpus bound for the axiom, filter and L-algebra sweeps.
const CORPUS_ORDER: usize = 5;
/// Corpus bound for everything built from pairs.
const PAIR_ORDER: usize = 3;
const JOBS: usize = 4;

// wall-clock limits, generous against the unoptimized test profile
const AXIOMS_LIMIT: Duration = Duration::from_secs(10);
const FILTERS_LIMIT: Duration = Duration::from_secs(120);
const BIJECTION_LIMIT: Duration = Duration::from_secs(600);
const DEFAULT_LIMIT: Duration = Duration::from_secs(300);

struct Criterion {
    id: u8,
    title: &'static str,
    preset: Preset,
    max_order: usize,
    oracle: bool,
    limit: Duration,
}

const CRITERIA: [Criterion; 9] = [
    Criterion {
        id: 1,
        title: "axioms and classification of chains, dual route",
        preset: Preset::Axioms,
        max_order: CORPUS_ORDER,
        oracle: false,
        limit: AXIOMS_LIMIT,
    },
    Criterion {
        id: 2,
        title: "filter and congruence duality",
        preset: Preset::Filters,
        max_order: CORPUS_ORDER,
        oracle: false,
        limit: FILTERS_LIMIT,
    },
    Criterion {
        id: 3,
        title: "general semidirect bijection over searched extensions",
        preset: Preset::Semidirect,
        max_order: PAIR_ORDER,
        oracle: true,
        limit: DEFAULT_LIMIT,
    },
    Criterion {
        id: 4,
        title: "strong extensions correspond to actions",
        preset: Preset::Bijection,
        max_order: PAIR_ORDER,
        oracle: true,
        limit: BIJECTION_LIMIT,
    },
    Criterion {
        id: 5,
        title: "lattice formulas match brute force",
        preset: Preset::Lattice,
        max_order: PAIR_ORDER,
        oracle: false,
        limit: DEFAULT_LIMIT,
    },
    Criterion {
        id: 6,
        title: "regular and dense decomposition",
        preset: Preset::DoubleNegation,
        max_order: PAIR_ORDER,
        oracle: false,
        limit: DEFAULT_LIMIT,
    },
    Criterion {
        id: 7,
        title: "Godel closure",
        preset: Preset::Godel,
        max_order: PAIR_ORDER,
        oracle: false,
        limit: DEFAULT_LIMIT,
    },
    Criterion {
        id: 8,
        title: "naturality of the action functor",
        preset: Preset::Naturality,
        max_order: PAIR_ORDER,
        oracle: false,
        limit: DEFAULT_LIMIT,
    },
    Criterion {
        id: 9,
        title: "L-algebra layer",
        preset: Preset::Lalg,
        max_order: CORPUS_ORDER,
        oracle: false,
        limit: DEFAULT_LIMIT,
    },
];

fn options(max_order: usize, oracle: bool) -> SuiteOptions {
    SuiteOptions {
        max_order: Some(max_order),
        oracle,
        jobs: JOBS,
        ..SuiteOptions::default()
    }
}

/// Extra structural requirements beyond every check passing.
fn coverage(id: u8, r: &SuiteReport) -> Result<(), String> {
    let has = |name: &str| r.checks.iter().any(|c| c.name == name);
    match id {
        1 => {
            let missing: Vec<String> = (1..=CHAIN_MAX)
                .flat_map(|n| [format!("axioms/L{n}"), format!("axioms/G{n}")])
                .filter(|n| !has(n))
                .collect();
            if CHAIN_MAX < 16 || !missing.is_empty() {
                return Err(format!("chains not covered: {missing:?}"));
            }
        }
        2 | 9 => {
            let corpus_checks = r.checks.iter().filter(|c| c.name.contains("/h5-")).count();
            if corpus_checks == 0 {
                return Err("no order-5 hoop was checked".into());
            }
        }
        6 => {
            for name in [
                "double-negation/G3",
                "double-negation/G4",
                "double-negation/G3xL2",
            ] {
                if !has(name) {
                    return Err(format!("{name} missing"));
                }
            }
        }
        _ => {}
    }
    if r.checks.is_empty() {
        return Err("no checks ran".into());
    }
    Ok(())
}

fn main() -> ExitCode {
    let corpus = Corpus::enumerate(CORPUS_ORDER, DEFAULT_BUDGET, JOBS).expect("corpus enumerates");
    let mut all_ok = true;
    for c in &CRITERIA {
        let start = Instant::now();
        let r = run_suite_on(
            c.preset,
            &options(c.max_order, c.oracle),
            corpus.clone().up_to(c.max_order),
        );
        let elapsed = start.elapsed();
        let failures: Vec<String> = r
            .failures()
            .take(3)
            .map(|f| format!("{}: {}", f.name, f.witness.as_deref().unwrap_or("")))
            .collect();
        let verdict = if !failures.is_empty() {
            Err(failures.join("; "))
        } else if elapsed > c.limit {
            Err(format!("took {elapsed:.1?}, limit {:?}", c.limit))
        } else {
            coverage(c.id, &r)
        };
        all_ok &= verdict.is_ok();
        let status = if verdict.is_ok() { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status}: {} ({} checks, {elapsed:.2?}){}",
            c.id,
            c.title,
            r.checks.len(),
            verdict.err().map(|e| format!(" {e}")).unwrap_or_default()
        );
        for note in &r.notes {
            println!("             note: {note}");
        }
    }

    // run the full suite twice and compare everything but timing
    let start = Instant::now();
    let opts = SuiteOptions {
        oracle: true,
        jobs: JOBS,
        ..SuiteOptions::default()
    };
    let first = run_suite_on(Preset::All, &opts, corpus.clone());
    let second = run_suite_on(Preset::All, &opts, corpus);
    let same = first.without_timing().to_json() == second.without_timing().to_json();
    all_ok &= same;
    println!(
        "criterion 10 {}: two full runs give identical reports modulo timing ({} checks, {:.2?})",
        if same { "PASS" } else { "FAIL" },
        first.checks.len(),
        start.elapsed()
    );

    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
