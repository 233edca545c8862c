use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hoopforge::action::{
    enumerate_actions, mu, mv_trivialization_check, tau, thss_agreement, validate_action,
    verify_bijection, verify_naturality, ActionError,
};
use hoopforge::corpus::Corpus;
use hoopforge::descriptor::{load_action, load_action_tables, load_extension, DescriptorError};
use hoopforge::extension::{
    has_strong_section, regular_dense_decomposition, semidirect_report, SplitExtension,
};
use hoopforge::format::{parse_algebra_text, parse_lalgebra, write_algebra, ParseError};
use hoopforge::lalg::{coincidence_check, embedding_check, operation_from_action, rump_semidirect};
use hoopforge::morph::{all_homs, filters, quotient, Filter, DEFAULT_BUDGET};
use hoopforge::suite::{
    dual_route_axioms, filter_congruence_duality, run_suite, CheckOutcome, Preset, SuiteOptions,
    SuiteParams, SuiteReport, TOOL_VERSION,
};
use hoopforge::term::{holds, parse_identity_file};
use hoopforge::{FiniteHoop, StrongExternalAction, Variety};

#[derive(Parser)]
#[command(
    name = "hoopforge",
    version,
    about = "Finite-model workbench for hoops"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Variety to check against or restrict to.
    #[arg(long, global = true)]
    variety: Option<Variety>,
    /// Largest algebra order in corpus sweeps.
    #[arg(long, global = true)]
    max_order: Option<usize>,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Node limit for each search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Also run the slow independent oracles.
    #[arg(long, global = true)]
    oracle: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra file and classify it.
    Check { algebra: PathBuf },
    /// Check every identity of a file on an algebra.
    CheckIdentity {
        algebra: PathBuf,
        identities: PathBuf,
    },
    /// Enumerate hoops up to isomorphism.
    Enumerate {
        /// Write the corpus to this directory.
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// List the filters of an algebra.
    Filters { algebra: PathBuf },
    /// Quotient by the filter with the given members.
    Quotient {
        algebra: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        filter: Vec<usize>,
    },
    #[command(subcommand)]
    Splitext(SplitextCmd),
    #[command(subcommand)]
    Actions(ActionsCmd),
    #[command(subcommand)]
    Lalg(LalgCmd),
    /// Run a named preset of checks.
    Suite {
        preset: Preset,
        /// Run only the check with this name.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Subcommand)]
enum SplitextCmd {
    /// Validate an extension descriptor and its semidirect decomposition.
    Validate { descriptor: PathBuf },
    /// Decide whether the section is strong.
    Strong { descriptor: PathBuf },
    /// Decompose a bounded algebra into regular and dense parts.
    Mvd { algebra: PathBuf },
}

#[derive(Subcommand)]
enum ActionsCmd {
    /// Validate an action descriptor.
    Validate { descriptor: PathBuf },
    /// All actions of B on X.
    Enumerate { b: PathBuf, x: PathBuf },
    /// The extension built from an action.
    Mu { descriptor: PathBuf },
    /// The action of a strong extension.
    Tau { descriptor: PathBuf },
    /// Compare actions with strong extensions of B by X.
    VerifyBijection { b: PathBuf, x: PathBuf },
    /// Naturality along every homomorphism from B' to B.
    VerifyNaturality {
        b_src: PathBuf,
        b: PathBuf,
        x: PathBuf,
    },
}

#[derive(Subcommand)]
enum LalgCmd {
    /// Check L1 to L3 on an algebra file.
    Validate { algebra: PathBuf },
    /// The semidirect L-algebra of an action descriptor.
    Semidirect { descriptor: PathBuf },
    /// Compare the semidirect implication with the extension on its carrier.
    Coincide { descriptor: PathBuf },
}

/// Errors that stop a command before any check runs.
#[derive(Debug, thiserror::Error)]
enum Fatal {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
}

/// A command result: named checks plus optional data.
struct Outcome {
    checks: Vec<(String, Result<(), String>)>,
    data: Option<Value>,
}

impl Outcome {
    fn one(name: &str, r: Result<(), String>, data: Option<Value>) -> Self {
        Outcome {
            checks: vec![(name.to_string(), r)],
            data,
        }
    }
}

fn read(path: &Path) -> Result<String, Fatal> {
    fs::read_to_string(path).map_err(|source| Fatal::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Loads a hoop. Syntax errors are fatal; axiom failures are returned.
fn algebra(path: &Path) -> Result<Result<FiniteHoop, String>, Fatal> {
    let text = parse_algebra_text(&read(path)?)
        .map_err(|e| Fatal::Input(format!("{}: {e}", path.display())))?;
    let Some(mul) = text.mul else {
        return Err(Fatal::Input(format!(
            "{}: expected a hoop file",
            path.display()
        )));
    };
    Ok(
        FiniteHoop::new(text.order, text.unit, mul, text.imp, text.bottom)
            .map_err(|e| format!("{e:?}")),
    )
}

fn valid_algebra(path: &Path) -> Result<Arc<FiniteHoop>, Fatal> {
    algebra(path)?
        .map(Arc::new)
        .map_err(|e| Fatal::Input(format!("{}: {e}", path.display())))
}

/// Descriptor loading: malformed input is fatal, invalid structure is a
/// failed check.
fn descriptor<T>(r: Result<T, DescriptorError>) -> Result<Result<T, String>, Fatal> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e @ (DescriptorError::Extension { .. } | DescriptorError::Action { .. })) => {
            Ok(Err(e.to_string()))
        }
        Err(DescriptorError::Algebra {
            source: ParseError::Invalid(inner),
            path,
        }) => Ok(Err(format!("{}: {inner:?}", path.display()))),
        Err(e) => Err(Fatal::Input(e.to_string())),
    }
}

fn err_str(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn rows(t: &[usize], width: usize) -> Vec<Vec<usize>> {
    t.chunks(width.max(1)).map(<[usize]>::to_vec).collect()
}

fn extension_json(e: &SplitExtension) -> Value {
    json!({
        "a": write_algebra("A", e.a()),
        "k": e.k(),
        "p": e.p(),
        "s": e.s(),
        "strong": e.is_strong(),
    })
}

fn action_json(act: &StrongExternalAction) -> Value {
    json!({
        "f": act.f_rows(),
        "g": act.g_rows(),
        "certificates": act.certificates(),
    })
}

fn run(cmd: Command, g: &Global) -> Result<Outcome, Fatal> {
    let variety = g.variety.unwrap_or(Variety::Hoop);
    Ok(match cmd {
        Command::Check { algebra: path } => match algebra(&path)? {
            Err(w) => Outcome::one("check/axioms", Err(w), None),
            Ok(h) => {
                let report = h.classify().clone();
                let mut checks = vec![("check/axioms".to_string(), dual_route_axioms(&h))];
                if let Some(v) = g.variety {
                    let r = if report.in_variety(v) {
                        Ok(())
                    } else {
                        Err(report
                            .counterexamples
                            .iter()
                            .find(|c| c.flag == v.name())
                            .map_or_else(|| format!("not in {v}"), |c| format!("{c:?}")))
                    };
                    checks.push((format!("check/variety/{v}"), r));
                }
                Outcome {
                    checks,
                    data: Some(json!({ "order": h.order(), "classification": report })),
                }
            }
        },
        Command::CheckIdentity {
            algebra: path,
            identities,
        } => {
            let h = valid_algebra(&path)?;
            let ids = parse_identity_file(&read(&identities)?)
                .map_err(|e| Fatal::Input(format!("{}: {e}", identities.display())))?;
            let checks = ids
                .iter()
                .map(|id| {
                    let r = match holds(&h, id) {
                        Ok(v) => match v.counterexample {
                            None => Ok(()),
                            Some(cx) => Err(format!("{cx:?}")),
                        },
                        Err(e) => Err(e.to_string()),
                    };
                    (format!("identity/{} = {}", id.lhs, id.rhs), r)
                })
                .collect();
            Outcome { checks, data: None }
        }
        Command::Enumerate { save } => {
            let max = g.max_order.unwrap_or(3);
            let mut corpus = Corpus::enumerate(max, g.budget, g.jobs)
                .map_err(|e| Fatal::Input(e.to_string()))?;
            if let Some(v) = g.variety {
                corpus.entries.retain(|e| e.hoop.classify().in_variety(v));
            }
            let counts: Vec<usize> = (1..=max)
                .map(|n| corpus.iter().filter(|e| e.hoop.order() == n).count())
                .collect();
            if let Some(dir) = save {
                corpus.save(&dir).map_err(|e| Fatal::Input(e.to_string()))?;
            }
            let names: Vec<&str> = corpus.iter().map(|e| e.name.as_str()).collect();
            Outcome::one(
                "enumerate",
                Ok(()),
                Some(json!({ "counts": counts, "names": names })),
            )
        }
        Command::Filters { algebra: path } => {
            let h = valid_algebra(&path)?;
            let fs: Vec<Vec<usize>> = filters(&h).iter().map(|f| f.members().to_vec()).collect();
            Outcome::one(
                "filters/duality",
                filter_congruence_duality(&h),
                Some(json!({ "filters": fs })),
            )
        }
        Command::Quotient {
            algebra: path,
            filter,
        } => {
            let h = valid_algebra(&path)?;
            match Filter::new(&h, &filter).and_then(|f| quotient(&h, &f)) {
                Err(e) => Outcome::one("quotient", Err(e.to_string()), None),
                Ok((q, proj)) => Outcome::one(
                    "quotient",
                    Ok(()),
                    Some(json!({
                        "order": q.order(),
                        "projection": proj.map(),
                        "algebra": write_algebra("quotient", &q),
                    })),
                ),
            }
        }
        Command::Splitext(c) => splitext(c)?,
        Command::Actions(c) => actions(c, g, variety)?,
        Command::Lalg(c) => lalg(c, variety)?,
        Command::Suite { .. } => unreachable!("handled by main"),
    })
}

fn splitext(c: SplitextCmd) -> Result<Outcome, Fatal> {
    Ok(match c {
        SplitextCmd::Validate { descriptor: path } => match descriptor(load_extension(&path))? {
            Err(w) => Outcome::one("splitext/valid", Err(w), None),
            Ok(e) => {
                let r = semidirect_report(&e).map_err(err_str);
                let data = r.as_ref().ok().map(|r| json!(r));
                let check = r.and_then(|r| {
                    if r.ok() {
                        Ok(())
                    } else {
                        Err(format!("{r:?}"))
                    }
                });
                Outcome {
                    checks: vec![
                        ("splitext/valid".into(), Ok(())),
                        ("splitext/semidirect".into(), check),
                    ],
                    data,
                }
            }
        },
        SplitextCmd::Strong { descriptor: path } => match descriptor(load_extension(&path))? {
            Err(w) => Outcome::one("splitext/valid", Err(w), None),
            Ok(e) => {
                let r = has_strong_section(&e);
                let check = match r.witness {
                    None => Ok(()),
                    Some((a, b)) => Err(format!(
                        "a={a}, b={b}: a -> s(b) differs from sp(a) -> s(b)"
                    )),
                };
                Outcome::one("splitext/strong", check, Some(json!(r)))
            }
        },
        SplitextCmd::Mvd { algebra: path } => {
            let mut h = valid_algebra(&path)?;
            // a finite hoop always has a least element to serve as bottom
            if h.bottom().is_none() {
                h = Arc::new(h.with_least_bottom());
            }
            match regular_dense_decomposition(&h) {
                Err(e) => Outcome::one("splitext/mvd", Err(e.to_string()), None),
                Ok(e) => {
                    let mut checks = vec![(
                        "splitext/mvd".to_string(),
                        if e.is_strong() {
                            Ok(())
                        } else {
                            Err("section is not strong".into())
                        },
                    )];
                    let mut data = extension_json(&e);
                    if h.classify().is_wajsberg {
                        let r = mv_trivialization_check(&e).map_err(err_str);
                        data["mv"] = r.as_ref().map_or(Value::Null, |r| json!(r));
                        checks.push((
                            "splitext/mvd/trivial".into(),
                            r.and_then(|r| {
                                if r.p_bijective {
                                    Ok(())
                                } else {
                                    Err(format!("{r:?}"))
                                }
                            }),
                        ));
                    }
                    Outcome {
                        checks,
                        data: Some(data),
                    }
                }
            }
        }
    })
}

fn action_from(
    path: &Path,
    variety: Variety,
) -> Result<Result<StrongExternalAction, String>, Fatal> {
    descriptor(load_action(path, variety))
}

fn actions(c: ActionsCmd, g: &Global, variety: Variety) -> Result<Outcome, Fatal> {
    Ok(match c {
        ActionsCmd::Validate { descriptor: path } => {
            let (b, x, f, gt) = match descriptor(load_action_tables(&path))? {
                Ok(t) => t,
                Err(w) => return Ok(Outcome::one("actions/valid", Err(w), None)),
            };
            match validate_action(b, x, f, gt, variety) {
                Ok(act) => Outcome::one("actions/valid", Ok(()), Some(action_json(&act))),
                Err(e @ ActionError::AxiomViolation { .. }) => {
                    Outcome::one("actions/valid", Err(format!("{e:?}")), None)
                }
                Err(e) => Outcome::one("actions/valid", Err(e.to_string()), None),
            }
        }
        ActionsCmd::Enumerate { b, x } => {
            let (b, x) = (valid_algebra(&b)?, valid_algebra(&x)?);
            match enumerate_actions(&b, &x, variety, g.budget) {
                Err(e) => Outcome::one("actions/enumerate", Err(e.to_string()), None),
                Ok(acts) => {
                    let list: Vec<Value> = acts.iter().map(action_json).collect();
                    Outcome::one(
                        "actions/enumerate",
                        Ok(()),
                        Some(json!({ "count": acts.len(), "actions": list })),
                    )
                }
            }
        }
        ActionsCmd::Mu { descriptor: path } => match action_from(&path, variety)? {
            Err(w) => Outcome::one("actions/valid", Err(w), None),
            Ok(act) => match mu(&act) {
                Err(e) => Outcome::one("actions/mu", Err(e.to_string()), None),
                Ok(e) => {
                    let r = thss_agreement(&e).map_err(err_str).and_then(|r| {
                        if r.ok() {
                            Ok(())
                        } else {
                            Err(format!("{r:?}"))
                        }
                    });
                    Outcome::one("actions/mu", r, Some(extension_json(&e)))
                }
            },
        },
        ActionsCmd::Tau { descriptor: path } => match descriptor(load_extension(&path))? {
            Err(w) => Outcome::one("splitext/valid", Err(w), None),
            Ok(e) => match tau(&e) {
                Err(err) => Outcome::one("actions/tau", Err(err.to_string()), None),
                Ok(act) => Outcome::one("actions/tau", Ok(()), Some(action_json(&act))),
            },
        },
        ActionsCmd::VerifyBijection { b, x } => {
            let (b, x) = (valid_algebra(&b)?, valid_algebra(&x)?);
            match verify_bijection(&b, &x, variety, g.oracle, g.budget) {
                Err(e) => Outcome::one("actions/verify-bijection", Err(e.to_string()), None),
                Ok(r) => {
                    let check = if r.ok() {
                        Ok(())
                    } else {
                        Err(format!("{r:?}"))
                    };
                    Outcome::one("actions/verify-bijection", check, Some(json!(r)))
                }
            }
        }
        ActionsCmd::VerifyNaturality { b_src, b, x } => {
            let (src, b, x) = (
                valid_algebra(&b_src)?,
                valid_algebra(&b)?,
                valid_algebra(&x)?,
            );
            let homs = all_homs(&src, &b, g.budget).map_err(|e| Fatal::Input(e.to_string()))?;
            let checks = homs
                .iter()
                .map(|phi| {
                    let r = verify_naturality(phi, &x, variety, g.budget)
                        .map_err(err_str)
                        .and_then(|r| r.witness.map_or(Ok(()), Err));
                    (format!("actions/verify-naturality/{:?}", phi.map()), r)
                })
                .collect();
            Outcome {
                checks,
                data: Some(json!({ "homomorphisms": homs.len() })),
            }
        }
    })
}

fn lalg(c: LalgCmd, variety: Variety) -> Result<Outcome, Fatal> {
    Ok(match c {
        LalgCmd::Validate { algebra: path } => match parse_lalgebra(&read(&path)?) {
            Ok(l) => Outcome::one("lalg/axioms", Ok(()), Some(json!({ "order": l.order() }))),
            Err(e @ ParseError::Syntax { .. }) => {
                return Err(Fatal::Input(format!("{}: {e}", path.display())))
            }
            Err(ParseError::Invalid(e)) => Outcome::one("lalg/axioms", Err(format!("{e:?}")), None),
            Err(ParseError::InvalidLAlgebra(e)) => {
                Outcome::one("lalg/axioms", Err(format!("{e:?}")), None)
            }
        },
        LalgCmd::Semidirect { descriptor: path } => match action_from(&path, variety)? {
            Err(w) => Outcome::one("actions/valid", Err(w), None),
            Ok(act) => match operation_from_action(&act).and_then(|op| rump_semidirect(&op)) {
                Err(e) => Outcome::one("lalg/semidirect", Err(format!("{e:?}")), None),
                Ok(l) => Outcome::one(
                    "lalg/semidirect",
                    Ok(()),
                    Some(json!({ "order": l.order(), "imp": rows(l.imp_table(), l.order()) })),
                ),
            },
        },
        LalgCmd::Coincide { descriptor: path } => match descriptor(load_extension(&path))? {
            Err(w) => Outcome::one("splitext/valid", Err(w), None),
            Ok(e) => {
                let c = coincidence_check(&e).map_err(err_str);
                let emb = embedding_check(&e).map_err(err_str);
                let data = json!({
                    "coincidence": c.as_ref().ok(),
                    "embedding": emb.as_ref().ok(),
                });
                Outcome {
                    checks: vec![
                        (
                            "lalg/coincide".into(),
                            c.and_then(|c| {
                                if c.holds() {
                                    Ok(())
                                } else {
                                    Err(format!("{:?}", c.witness))
                                }
                            }),
                        ),
                        (
                            "lalg/embedding".into(),
                            emb.and_then(|r| {
                                if r.ok() {
                                    Ok(())
                                } else {
                                    Err(format!("{r:?}"))
                                }
                            }),
                        ),
                    ],
                    data: Some(data),
                }
            }
        },
    })
}

fn emit(report: &SuiteReport, out: Option<&Path>) -> Result<(), Fatal> {
    let text = report.to_json() + "\n";
    match out {
        Some(path) => fs::write(path, text).map_err(|source| Fatal::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let g = cli.global;
    let start = Instant::now();
    let report = match cli.command {
        Command::Suite { preset, only } => {
            let opts = SuiteOptions {
                max_order: g.max_order,
                variety: g.variety,
                budget: g.budget,
                oracle: g.oracle,
                jobs: g.jobs.max(1),
                only,
            };
            match run_suite(preset, &opts) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("hoopforge: {e}");
                    return ExitCode::from(2);
                }
            }
        }
        cmd => {
            let name = command_name(&cmd);
            let replay = std::iter::once("hoopforge".to_string())
                .chain(std::env::args().skip(1))
                .collect::<Vec<_>>()
                .join(" ");
            match run(cmd, &g) {
                Ok(o) => SuiteReport {
                    suite: name,
                    tool_version: TOOL_VERSION.to_string(),
                    params: SuiteParams {
                        max_order: g.max_order,
                        variety: g.variety.map(|v| v.name().to_string()),
                        budget: g.budget,
                        oracle: g.oracle,
                        corpus: "none".into(),
                        only: None,
                    },
                    checks: o
                        .checks
                        .into_iter()
                        .map(|(name, r)| CheckOutcome {
                            replay: replay.clone(),
                            name,
                            passed: r.is_ok(),
                            witness: r.err(),
                        })
                        .collect(),
                    notes: Vec::new(),
                    data: o.data,
                    timing_ms: start.elapsed().as_millis() as u64,
                },
                Err(e) => {
                    eprintln!("hoopforge: {e}");
                    return ExitCode::from(2);
                }
            }
        }
    };
    for f in report.failures() {
        eprintln!("FAIL {}: {}", f.name, f.witness.as_deref().unwrap_or(""));
    }
    if let Err(e) = emit(&report, g.out.as_deref()) {
        eprintln!("hoopforge: {e}");
        return ExitCode::from(2);
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn command_name(cmd: &Command) -> String {
    match cmd {
        Command::Check { .. } => "check",
        Command::CheckIdentity { .. } => "check-identity",
        Command::Enumerate { .. } => "enumerate",
        Command::Filters { .. } => "filters",
        Command::Quotient { .. } => "quotient",
        Command::Splitext(c) => match c {
            SplitextCmd::Validate { .. } => "splitext validate",
            SplitextCmd::Strong { .. } => "splitext strong",
            SplitextCmd::Mvd { .. } => "splitext mvd",
        },
        Command::Actions(c) => match c {
            ActionsCmd::Validate { .. } => "actions validate",
            ActionsCmd::Enumerate { .. } => "actions enumerate",
            ActionsCmd::Mu { .. } => "actions mu",
            ActionsCmd::Tau { .. } => "actions tau",
            ActionsCmd::VerifyBijection { .. } => "actions verify-bijection",
            ActionsCmd::VerifyNaturality { .. } => "actions verify-naturality",
        },
        Command::Lalg(c) => match c {
            LalgCmd::Validate { .. } => "lalg validate",
            LalgCmd::Semidirect { .. } => "lalg semidirect",
            LalgCmd::Coincide { .. } => "lalg coincide",
        },
        Command::Suite { .. } => "suite",
    }
    .to_string()
}
