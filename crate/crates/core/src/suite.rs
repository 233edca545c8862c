//! Named presets of exhaustive checks over a corpus, with JSON reports whose
//! failures can be replayed one check at a time.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::action::{
    enumerate_actions, enumerate_splext_ss, godel_closure_check, lattice_sweep, mu,
    mv_trivialization_check, ops_sweep, thss_agreement, verify_bijection, verify_naturality,
    ActionError,
};
use crate::corpus::{Corpus, CorpusEntry, CorpusError};
use crate::extension::{regular_dense_decomposition, semidirect_report, SplitExtension};
use crate::hoop::{direct_product, godel_chain, lukasiewicz_chain, FiniteHoop, Variety};
use crate::lalg::{
    coincidence_check, embedding_check, hoop_to_lalgebra, lalg_strong_section_of,
    operation_from_action, rump_semidirect, self_similar_check, FiniteLAlgebra,
};
use crate::morph::{
    all_homs, congruence_of_filter, filter_of_congruence, filters_by_closure, filters_by_subsets,
    kernel, quotient, Congruence,
};
use crate::search::split_extensions;
use crate::term::{holds, identities, parse_identity};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Largest chain checked by the axiom preset.
pub const CHAIN_MAX: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
    pub replay: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteParams {
    pub max_order: Option<usize>,
    pub variety: Option<String>,
    pub budget: u64,
    pub oracle: bool,
    pub corpus: String,
    pub only: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub tool_version: String,
    pub params: SuiteParams,
    pub checks: Vec<CheckOutcome>,
    /// Findings that are reported without being asserted.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Command output other than checks, such as computed tables.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
    pub timing_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// The report with its timing zeroed, for comparing runs.
    pub fn without_timing(&self) -> SuiteReport {
        SuiteReport {
            timing_ms: 0,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    Axioms,
    Filters,
    Semidirect,
    Bijection,
    Lattice,
    DoubleNegation,
    Godel,
    Naturality,
    Lalg,
    All,
}

impl Preset {
    pub const ALL: [Preset; 10] = [
        Preset::Axioms,
        Preset::Filters,
        Preset::Semidirect,
        Preset::Bijection,
        Preset::Lattice,
        Preset::DoubleNegation,
        Preset::Godel,
        Preset::Naturality,
        Preset::Lalg,
        Preset::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Axioms => "axioms",
            Preset::Filters => "filters",
            Preset::Semidirect => "semidirect",
            Preset::Bijection => "bijection",
            Preset::Lattice => "lattice",
            Preset::DoubleNegation => "double-negation",
            Preset::Godel => "godel",
            Preset::Naturality => "naturality",
            Preset::Lalg => "lalg",
            Preset::All => "all",
        }
    }

    /// Corpus bound used when `--max-order` is not given.
    pub fn default_max_order(self) -> usize {
        match self {
            Preset::Axioms | Preset::Filters | Preset::Lalg | Preset::All => 5,
            _ => 3,
        }
    }

    fn parts(self) -> Vec<Preset> {
        match self {
            Preset::All => Preset::ALL[..Preset::ALL.len() - 1].to_vec(),
            p => vec![p],
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Preset::ALL
            .iter()
            .copied()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Preset::ALL.iter().map(|p| p.name()).collect();
                format!("unknown suite `{s}`; expected one of {}", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOptions {
    pub max_order: Option<usize>,
    pub variety: Option<Variety>,
    pub budget: u64,
    pub oracle: bool,
    pub jobs: usize,
    pub only: Option<String>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_order: None,
            variety: None,
            budget: crate::morph::DEFAULT_BUDGET,
            oracle: false,
            jobs: 1,
            only: None,
        }
    }
}

type Outcome = Result<(), String>;

struct Task {
    name: String,
    run: Box<dyn Fn() -> Outcome + Send + Sync>,
}

fn task(name: String, run: impl Fn() -> Outcome + Send + Sync + 'static) -> Task {
    Task {
        name,
        run: Box::new(run),
    }
}

fn fail_if(cond: bool, witness: impl FnOnce() -> String) -> Outcome {
    if cond {
        Err(witness())
    } else {
        Ok(())
    }
}

fn err_str(e: impl fmt::Display) -> String {
    e.to_string()
}

struct Ctx {
    corpus: Corpus,
    opts: SuiteOptions,
    notes: Vec<String>,
}

impl Ctx {
    fn max(&self, preset: Preset) -> usize {
        self.opts.max_order.unwrap_or(preset.default_max_order())
    }

    fn upto(&self, n: usize) -> Vec<CorpusEntry> {
        self.corpus
            .iter()
            .filter(|e| e.hoop.order() <= n)
            .cloned()
            .collect()
    }

    fn pairs(&self, n: usize) -> Vec<(CorpusEntry, CorpusEntry)> {
        let es = self.upto(n);
        es.iter()
            .flat_map(|b| es.iter().map(move |x| (b.clone(), x.clone())))
            .collect()
    }

    /// Varieties selected by `--variety`, or all those with actions.
    fn varieties(&self) -> Vec<Variety> {
        match self.opts.variety {
            Some(v) => vec![v],
            None => vec![
                Variety::Hoop,
                Variety::Basic,
                Variety::Wajsberg,
                Variety::Godel,
            ],
        }
    }
}

/// Runs a preset. The corpus comes from `HOOPFORGE_CORPUS` or is enumerated.
pub fn run_suite(preset: Preset, opts: &SuiteOptions) -> Result<SuiteReport, CorpusError> {
    let max = opts.max_order.unwrap_or_else(|| {
        preset
            .parts()
            .iter()
            .map(|p| p.default_max_order())
            .max()
            .unwrap_or(3)
    });
    let corpus = Corpus::from_env_or_enumerate(max, opts.budget, opts.jobs)?;
    Ok(run_suite_on(preset, opts, corpus))
}

pub fn run_suite_on(preset: Preset, opts: &SuiteOptions, corpus: Corpus) -> SuiteReport {
    let start = Instant::now();
    let mut ctx = Ctx {
        corpus,
        opts: opts.clone(),
        notes: Vec::new(),
    };
    let mut tasks = Vec::new();
    for p in preset.parts() {
        tasks.extend(match p {
            Preset::Axioms => axioms(&ctx),
            Preset::Filters => filters(&ctx),
            Preset::Semidirect => semidirect(&ctx),
            Preset::Bijection => bijection(&ctx),
            Preset::Lattice => lattice(&ctx),
            Preset::DoubleNegation => double_negation(&mut ctx),
            Preset::Godel => godel(&ctx),
            Preset::Naturality => naturality(&ctx),
            Preset::Lalg => lalg(&ctx),
            Preset::All => Vec::new(),
        });
    }
    if let Some(only) = &opts.only {
        tasks.retain(|t| &t.name == only);
    }
    let replay_prefix = replay_prefix(preset, opts);
    let run = |t: &Task| {
        let result = (t.run)();
        CheckOutcome {
            name: t.name.clone(),
            passed: result.is_ok(),
            witness: result.err(),
            replay: format!("{replay_prefix} --only '{}'", t.name),
        }
    };
    let checks: Vec<CheckOutcome> = if opts.jobs > 1 {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
        {
            Ok(pool) => pool.install(|| tasks.par_iter().map(run).collect()),
            Err(_) => tasks.iter().map(run).collect(),
        }
    } else {
        tasks.iter().map(run).collect()
    };
    SuiteReport {
        suite: preset.name().to_string(),
        tool_version: TOOL_VERSION.to_string(),
        params: SuiteParams {
            max_order: opts.max_order,
            variety: opts.variety.map(|v| v.name().to_string()),
            budget: opts.budget,
            oracle: opts.oracle,
            corpus: ctx
                .corpus
                .source
                .as_ref()
                .map_or_else(|| "enumerated".to_string(), |p| p.display().to_string()),
            only: opts.only.clone(),
        },
        checks,
        notes: ctx.notes,
        data: None,
        timing_ms: start.elapsed().as_millis() as u64,
    }
}

fn replay_prefix(preset: Preset, opts: &SuiteOptions) -> String {
    let mut s = format!("hoopforge suite {preset}");
    if let Some(m) = opts.max_order {
        s += &format!(" --max-order {m}");
    }
    if let Some(v) = opts.variety {
        s += &format!(" --variety {v}");
    }
    if opts.budget != crate::morph::DEFAULT_BUDGET {
        s += &format!(" --budget {}", opts.budget);
    }
    if opts.oracle {
        s += " --oracle";
    }
    s
}

/// Native validation and classification against the identity language.
pub fn dual_route_axioms(h: &FiniteHoop) -> Outcome {
    FiniteHoop::new(
        h.order(),
        h.unit(),
        h.mul_table().to_vec(),
        h.imp_table().to_vec(),
        h.bottom(),
    )
    .map_err(err_str)?;
    let check = |text: &str| -> Result<bool, String> {
        let id = parse_identity(text).map_err(err_str)?;
        Ok(holds(h, &id).map_err(err_str)?.holds())
    };
    for text in identities::HOOP_AXIOMS {
        if !check(text)? {
            return Err(format!("native checker accepts but `{text}` fails"));
        }
    }
    if h.bottom().is_some() && !check(identities::BOTTOM)? {
        return Err("bottom identity fails on a bounded hoop".into());
    }
    let r = h.classify();
    let basic = check(identities::BASIC)?;
    let mut pairs = vec![
        ("basic", r.is_basic, basic),
        ("wajsberg", r.is_wajsberg, check(identities::WAJSBERG)?),
        (
            "godel",
            r.is_godel,
            basic && check(identities::IDEMPOTENCY)?,
        ),
        (
            "product",
            r.is_product,
            basic && check(identities::PRODUCT)?,
        ),
    ];
    if let Some(inv) = r.is_involutive {
        pairs.push(("involutive", inv, check(identities::INVOLUTIVITY)?));
    }
    for (flag, native, dsl) in pairs {
        if native != dsl {
            return Err(format!("{flag}: native {native}, identity {dsl}"));
        }
    }
    Ok(())
}

fn axioms(ctx: &Ctx) -> Vec<Task> {
    let mut out = Vec::new();
    for n in 1..=CHAIN_MAX {
        out.push(task(format!("axioms/L{n}"), move || {
            let h = lukasiewicz_chain(n);
            dual_route_axioms(&h)?;
            let r = h.classify();
            fail_if(!(r.is_wajsberg && r.is_bounded), || {
                format!("classified as {r:?}")
            })
        }));
        out.push(task(format!("axioms/G{n}"), move || {
            let h = godel_chain(n);
            dual_route_axioms(&h)?;
            let r = h.classify();
            fail_if(!(r.is_godel && r.is_bounded), || {
                format!("classified as {r:?}")
            })
        }));
    }
    for e in ctx.upto(ctx.max(Preset::Axioms)) {
        let h = e.hoop.clone();
        out.push(task(format!("axioms/{}", e.name), move || {
            dual_route_axioms(&h)?;
            dual_route_axioms(&h.with_least_bottom())
        }));
    }
    out
}

/// Every partition of `0..n` as restricted growth strings.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut labels = vec![0; n];
    fn rec(i: usize, max: usize, labels: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == labels.len() {
            out.push(labels.clone());
            return;
        }
        for l in 0..=max + 1 {
            labels[i] = l;
            rec(i + 1, max.max(l), labels, out);
        }
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    rec(1, 0, &mut labels, &mut out);
    out
}

/// Filter and congruence lattices of `h` correspond.
pub fn filter_congruence_duality(h: &Arc<FiniteHoop>) -> Outcome {
    let fs = filters_by_subsets(h);
    if fs != filters_by_closure(h) {
        return Err("subset scan and closure disagree".into());
    }
    let mut thetas = Vec::with_capacity(fs.len());
    for f in &fs {
        let theta = congruence_of_filter(h, f).map_err(err_str)?;
        let back = filter_of_congruence(h, &theta).map_err(err_str)?;
        if &back != f {
            return Err(format!(
                "filter {:?} returns as {:?}",
                f.members(),
                back.members()
            ));
        }
        let (_, proj) = quotient(h, f).map_err(err_str)?;
        let ker = kernel(&proj);
        if &ker != f {
            return Err(format!(
                "kernel of the projection by {:?} is {:?}",
                f.members(),
                ker.members()
            ));
        }
        thetas.push(theta);
    }
    for (i, f1) in fs.iter().enumerate() {
        for (j, f2) in fs.iter().enumerate() {
            let sub = f1.members().iter().all(|&x| f2.contains(x));
            let finer = h.elements().all(|x| {
                h.elements()
                    .all(|y| !thetas[i].related(x, y) || thetas[j].related(x, y))
            });
            if sub != finer {
                return Err(format!(
                    "order mismatch between {:?} and {:?}",
                    f1.members(),
                    f2.members()
                ));
            }
        }
    }
    let congruences: Vec<Congruence> = partitions(h.order())
        .into_iter()
        .filter_map(|l| Congruence::new(h, &l).ok())
        .collect();
    if congruences.len() != fs.len() {
        return Err(format!(
            "{} filters but {} congruences",
            fs.len(),
            congruences.len()
        ));
    }
    for c in &congruences {
        let f = filter_of_congruence(h, c).map_err(err_str)?;
        if &congruence_of_filter(h, &f).map_err(err_str)? != c {
            return Err(format!("congruence {:?} does not return", c.labels()));
        }
    }
    Ok(())
}

fn filters(ctx: &Ctx) -> Vec<Task> {
    ctx.upto(ctx.max(Preset::Filters))
        .into_iter()
        .map(|e| {
            let h = e.hoop.clone();
            task(format!("filters/{}", e.name), move || {
                filter_congruence_duality(&h)
            })
        })
        .collect()
}

fn describe(e: &SplitExtension) -> String {
    format!(
        "|A|={} k={:?} p={:?} s={:?}",
        e.a().order(),
        e.k(),
        e.p(),
        e.s()
    )
}

fn semidirect(ctx: &Ctx) -> Vec<Task> {
    let budget = ctx.opts.budget;
    ctx.pairs(ctx.max(Preset::Semidirect))
        .into_iter()
        .map(|(b, x)| {
            let (bh, xh) = (b.hoop.clone(), x.hoop.clone());
            task(format!("semidirect/{}/{}", b.name, x.name), move || {
                let exts = split_extensions(&xh, &bh, budget).map_err(err_str)?;
                if exts.is_empty() {
                    return Err("no split extension found; the direct product is missing".into());
                }
                for e in &exts {
                    let r = semidirect_report(e).map_err(err_str)?;
                    if !r.ok() {
                        return Err(format!("{}: {r:?}", describe(e)));
                    }
                }
                Ok(())
            })
        })
        .collect()
}

fn in_variety(e: &CorpusEntry, v: Variety) -> bool {
    e.hoop.classify().in_variety(v)
}

fn bijection(ctx: &Ctx) -> Vec<Task> {
    let (budget, oracle) = (ctx.opts.budget, ctx.opts.oracle);
    let mut out = Vec::new();
    for v in ctx.varieties() {
        for (b, x) in ctx.pairs(ctx.max(Preset::Bijection)) {
            if !in_variety(&b, v) || !in_variety(&x, v) {
                continue;
            }
            let (bh, xh) = (b.hoop.clone(), x.hoop.clone());
            out.push(task(
                format!("bijection/{v}/{}/{}", b.name, x.name),
                move || {
                    let r = verify_bijection(&bh, &xh, v, oracle, budget).map_err(err_str)?;
                    if !r.ok() {
                        return Err(serde_json::to_string(&r).map_err(err_str)?);
                    }
                    for act in enumerate_actions(&bh, &xh, v, budget).map_err(err_str)? {
                        let sweep = ops_sweep(&act).map_err(err_str)?;
                        if let Some(w) = sweep.first_mismatch {
                            return Err(format!(
                                "operations differ at {w:?} for f={:?} g={:?}",
                                act.f_table(),
                                act.g_table()
                            ));
                        }
                        let e = mu(&act).map_err(err_str)?;
                        let t = thss_agreement(&e).map_err(err_str)?;
                        if !t.ok() {
                            return Err(format!("{}: {t:?}", describe(&e)));
                        }
                    }
                    Ok(())
                },
            ));
        }
    }
    out
}

fn lattice(ctx: &Ctx) -> Vec<Task> {
    let budget = ctx.opts.budget;
    ctx.pairs(ctx.max(Preset::Lattice))
        .into_iter()
        .filter(|(b, x)| in_variety(b, Variety::Basic) && in_variety(x, Variety::Basic))
        .map(|(b, x)| {
            let (bh, xh) = (b.hoop.clone(), x.hoop.clone());
            task(format!("lattice/{}/{}", b.name, x.name), move || {
                for act in enumerate_actions(&bh, &xh, Variety::Basic, budget).map_err(err_str)? {
                    let sweep = lattice_sweep(&act).map_err(err_str)?;
                    if let Some(w) = sweep.first_mismatch {
                        return Err(format!(
                            "lattice formulas differ at {w:?} for f={:?} g={:?}",
                            act.f_table(),
                            act.g_table()
                        ));
                    }
                }
                Ok(())
            })
        })
        .collect()
}

/// Whether `e` is isomorphic to the direct product of its ends.
fn is_split_trivially(e: &SplitExtension) -> bool {
    crate::extension::iso_extensions(
        e,
        &SplitExtension::direct_product(e.x().clone(), e.b().clone()),
    )
    .is_some()
}

fn double_negation(ctx: &mut Ctx) -> Vec<Task> {
    let mut out = Vec::new();
    let strong_cases: [(&str, fn() -> FiniteHoop); 3] = [
        ("G3", || godel_chain(3)),
        ("G4", || godel_chain(4)),
        ("G3xL2", || {
            direct_product(&godel_chain(3), &lukasiewicz_chain(2))
        }),
    ];
    for (name, make) in strong_cases {
        out.push(task(format!("double-negation/{name}"), move || {
            let a = Arc::new(make());
            let e = regular_dense_decomposition(&a).map_err(err_str)?;
            fail_if(!e.is_strong(), || "section is not strong".into())?;
            let act = crate::action::tau(&e).map_err(err_str)?;
            // f_b(x) = b -> b*x and g_b(x) = b -> x, read in A
            for b in e.b().elements() {
                for x in e.x().elements() {
                    let (sb, kx) = (e.s()[b], e.k()[x]);
                    if e.k()[act.f(b, x)] != a.imp(sb, a.mul(sb, kx))
                        || e.k()[act.g(b, x)] != a.imp(sb, kx)
                    {
                        return Err(format!("action differs at b={b}, x={x}"));
                    }
                }
            }
            Ok(())
        }));
    }
    for n in 2..=8 {
        out.push(task(format!("double-negation/L{n}"), move || {
            let e =
                regular_dense_decomposition(&Arc::new(lukasiewicz_chain(n))).map_err(err_str)?;
            let bijective = e.x().order() == 1 && e.b().order() == n;
            fail_if(!bijective, || describe(&e))?;
            let r = mv_trivialization_check(&e).map_err(err_str)?;
            fail_if(!r.p_bijective, || format!("{r:?}"))
        }));
    }
    // bounded Wajsberg pairs: strong extensions whose section keeps the bottom
    let budget = ctx.opts.budget;
    let mut nontrivial = Vec::new();
    for (b, x) in ctx.pairs(ctx.max(Preset::DoubleNegation)) {
        if !in_variety(&b, Variety::Wajsberg) || !in_variety(&x, Variety::Wajsberg) {
            continue;
        }
        if let Ok(exts) = enumerate_splext_ss(&b.hoop, &x.hoop, Variety::Wajsberg, budget) {
            if exts.iter().any(|e| !is_split_trivially(e)) {
                nontrivial.push(format!("{}/{}", b.name, x.name));
            }
        }
        let (bh, xh) = (b.hoop.clone(), x.hoop.clone());
        out.push(task(format!("mv/{}/{}", b.name, x.name), move || {
            let exts = enumerate_splext_ss(&bh, &xh, Variety::Wajsberg, budget).map_err(err_str)?;
            for e in exts {
                let bounded = bounded_version(&e).map_err(err_str)?;
                match mv_trivialization_check(&bounded) {
                    Ok(r) if !r.p_bijective => return Err(format!("{}: {r:?}", describe(&e))),
                    Ok(_) | Err(ActionError::PreconditionUnmet(_)) => {}
                    Err(err) => return Err(err_str(err)),
                }
            }
            Ok(())
        }));
    }
    ctx.notes.push(if nontrivial.is_empty() {
        format!(
            "no strong split extension of Wajsberg hoops of order <= {} differs from the direct product",
            ctx.max(Preset::DoubleNegation)
        )
    } else {
        format!("strong Wajsberg extensions other than direct products over {}", nontrivial.join(", "))
    });
    out
}

/// The same extension with the least elements of `A` and `B` as bottoms.
fn bounded_version(e: &SplitExtension) -> Result<SplitExtension, crate::extension::ExtensionError> {
    SplitExtension::new(
        e.x().clone(),
        Arc::new(e.a().with_least_bottom()),
        Arc::new(e.b().with_least_bottom()),
        e.k().to_vec(),
        e.p().to_vec(),
        e.s().to_vec(),
    )
}

fn godel(ctx: &Ctx) -> Vec<Task> {
    let budget = ctx.opts.budget;
    ctx.pairs(ctx.max(Preset::Godel))
        .into_iter()
        .filter(|(b, x)| in_variety(b, Variety::Godel) && in_variety(x, Variety::Godel))
        .map(|(b, x)| {
            let (bh, xh) = (b.hoop.clone(), x.hoop.clone());
            task(format!("godel/{}/{}", b.name, x.name), move || {
                for act in enumerate_actions(&bh, &xh, Variety::Basic, budget).map_err(err_str)? {
                    let r = godel_closure_check(&act).map_err(err_str)?;
                    if let Some(w) = r.witness {
                        return Err(format!(
                            "({}, {}) is not idempotent for f={:?}",
                            w.0,
                            w.1,
                            act.f_table()
                        ));
                    }
                }
                Ok(())
            })
        })
        .collect()
}

fn naturality(ctx: &Ctx) -> Vec<Task> {
    let budget = ctx.opts.budget;
    let n = ctx.max(Preset::Naturality);
    let es = ctx.upto(n);
    let mut out = Vec::new();
    for src in &es {
        for tgt in &es {
            let Ok(homs) = all_homs(&src.hoop, &tgt.hoop, budget) else {
                continue;
            };
            for phi in homs {
                for x in &es {
                    let (phi, xh) = (phi.clone(), x.hoop.clone());
                    let name = format!(
                        "naturality/{}->{}/{:?}/{}",
                        src.name,
                        tgt.name,
                        phi.map(),
                        x.name
                    );
                    out.push(task(name, move || {
                        let r =
                            verify_naturality(&phi, &xh, Variety::Hoop, budget).map_err(err_str)?;
                        match r.witness {
                            Some(w) => Err(w),
                            None => Ok(()),
                        }
                    }));
                }
            }
        }
    }
    out
}

/// Corpus bound for the action sweeps of the L-algebra preset.
const LALG_PAIR_ORDER: usize = 3;
/// Largest middle algebra for the coincidence sweep.
const LALG_MIDDLE_ORDER: usize = 4;

fn lalg(ctx: &Ctx) -> Vec<Task> {
    let budget = ctx.opts.budget;
    let max = ctx.max(Preset::Lalg);
    let mut out = Vec::new();
    for e in ctx.upto(max) {
        let h = e.hoop.clone();
        out.push(task(format!("lalg/reduct/{}", e.name), move || {
            FiniteLAlgebra::new(h.order(), h.unit(), h.imp_table().to_vec())
                .map(|_| ())
                .map_err(err_str)
        }));
    }
    for (b, x) in ctx.pairs(max.min(LALG_PAIR_ORDER)) {
        let (bh, xh) = (b.hoop.clone(), x.hoop.clone());
        out.push(task(
            format!("lalg/operates/{}/{}", b.name, x.name),
            move || {
                for act in enumerate_actions(&bh, &xh, Variety::Hoop, budget).map_err(err_str)? {
                    let lop = operation_from_action(&act).map_err(err_str)?;
                    rump_semidirect(&lop).map_err(err_str)?;
                    let ss = self_similar_check(&act);
                    fail_if(!ss.holds(), || format!("f={:?}: {ss:?}", act.f_table()))?;
                }
                Ok(())
            },
        ));
    }
    let middle = max.min(LALG_MIDDLE_ORDER);
    for (b, x) in ctx.pairs(middle) {
        if b.hoop.order() + x.hoop.order() > middle + 1 {
            continue;
        }
        let (bh, xh) = (b.hoop.clone(), x.hoop.clone());
        out.push(task(
            format!("lalg/coincide/{}/{}", b.name, x.name),
            move || {
                for e in enumerate_splext_ss(&bh, &xh, Variety::Hoop, budget).map_err(err_str)? {
                    if e.a().order() > middle {
                        continue;
                    }
                    if !lalg_strong_section_of(&e).map_err(err_str)? {
                        return Err(format!("{}: reduct section is not strong", describe(&e)));
                    }
                    let emb = embedding_check(&e).map_err(err_str)?;
                    fail_if(!emb.ok(), || format!("{}: {emb:?}", describe(&e)))?;
                    let c = coincidence_check(&e).map_err(err_str)?;
                    fail_if(!c.holds(), || format!("{}: {c:?}", describe(&e)))?;
                }
                Ok(())
            },
        ));
    }
    // reducts of the chains used elsewhere
    for n in [3, 4] {
        out.push(task(format!("lalg/reduct/L{n}"), move || {
            hoop_to_lalgebra(&lukasiewicz_chain(n));
            Ok(())
        }));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts_are_bell_numbers() {
        let counts: Vec<usize> = (0..=5).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 15, 52]);
    }

    #[test]
    fn preset_names_parse() {
        for p in Preset::ALL {
            assert_eq!(p.name().parse::<Preset>().unwrap(), p);
        }
        assert!("nope".parse::<Preset>().is_err());
    }

    #[test]
    fn only_selects_one_check() {
        let corpus = Corpus::enumerate(3, 1_000_000, 1).unwrap();
        let opts = SuiteOptions {
            only: Some("axioms/G3".into()),
            ..SuiteOptions::default()
        };
        let r = run_suite_on(Preset::Axioms, &opts, corpus);
        assert_eq!(r.checks.len(), 1);
        assert!(r.passed());
        assert!(r.checks[0].replay.ends_with("--only 'axioms/G3'"));
    }
}
