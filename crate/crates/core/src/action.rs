//! Strong external actions `f, g : B × X -> X` and the semidirect product
//! they define.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::extension::{iso_extensions, pullback, ExtensionError, SplitExtension};
use crate::hoop::{first_failure, Elem, FiniteHoop, HoopError, Variety};
use crate::morph::{Homomorphism, MorphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ActionAxiom {
    E1,
    E2,
    E3,
    E4,
    B2,
    W2,
}

impl ActionAxiom {
    fn vars(self) -> &'static [&'static str] {
        match self {
            ActionAxiom::E1 => &["b"],
            ActionAxiom::E2 => &["x"],
            ActionAxiom::E3 | ActionAxiom::W2 => &["b1", "b2", "x", "y"],
            ActionAxiom::E4 | ActionAxiom::B2 => &["b1", "b2", "b3", "x", "y", "z"],
        }
    }
}

impl fmt::Display for ActionAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("malformed action table: {0}")]
    Shape(String),
    #[error("axiom {axiom} fails at {witness:?}")]
    AxiomViolation {
        axiom: ActionAxiom,
        witness: Vec<(&'static str, Elem)>,
    },
    #[error("{algebra} is not in the variety {variety}")]
    VarietyMismatch {
        algebra: &'static str,
        variety: Variety,
    },
    #[error("actions of product hoops have no axiomatisation here")]
    ProductUnsupported,
    #[error("section is not strong: a = {a}, b = {b}")]
    NotStrong { a: Elem, b: Elem },
    #[error("the action lacks the basic certificate")]
    NotBasic,
    #[error("({x}, {b}) is not in the carrier")]
    NotInCarrier { x: Elem, b: Elem },
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error(transparent)]
    Morph(#[from] MorphError),
    #[error(transparent)]
    Hoop(#[from] HoopError),
}

/// Which variety-specific axioms an action satisfies, with both algebras in
/// that variety.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Certificates {
    pub hoop: bool,
    pub basic: bool,
    pub wajsberg: bool,
}

/// A validated strong external action. `f` and `g` are `|B|×|X|` row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongExternalAction {
    b: Arc<FiniteHoop>,
    x: Arc<FiniteHoop>,
    f: Vec<Elem>,
    g: Vec<Elem>,
    certificates: Certificates,
}

/// Read-only view used by the axiom checks, so enumeration can run them on
/// partially filled tables.
struct View<'a> {
    b: &'a FiniteHoop,
    x: &'a FiniteHoop,
    f: &'a [Elem],
    g: &'a [Elem],
}

impl View<'_> {
    #[inline]
    fn f(&self, b: Elem, x: Elem) -> Elem {
        self.f[b * self.x.order() + x]
    }

    #[inline]
    fn g(&self, b: Elem, x: Elem) -> Elem {
        self.g[b * self.x.order() + x]
    }

    fn e1(&self, v: &[Elem]) -> bool {
        let u = self.x.unit();
        self.f(v[0], u) == u && self.g(v[0], u) == u
    }

    fn e2(&self, v: &[Elem]) -> bool {
        let one = self.b.unit();
        self.f(one, v[0]) == v[0] && self.g(one, v[0]) == v[0]
    }

    fn e3(&self, v: &[Elem]) -> bool {
        let (bh, xh) = (self.b, self.x);
        let (b1, b2, x, y) = (v[0], v[1], v[2], v[3]);
        let b12 = bh.mul(b1, b2);
        let xy = xh.imp(x, y);
        self.f(b12, xh.mul(x, self.g(b1, xy))) == self.f(b12, xh.mul(x, xy))
    }

    fn e3_refs(&self, v: &[Elem]) -> [Elem; 2] {
        [self.b.mul(v[0], v[1]), v[0]]
    }

    /// Whether `(v[i], v[i+k])` lies in `Y'` for each of the `k` base variables.
    fn in_carrier(&self, v: &[Elem], k: usize) -> bool {
        (0..k).all(|i| self.f(v[i], v[i + k]) == v[i + k])
    }

    fn e4(&self, v: &[Elem]) -> bool {
        if !self.in_carrier(v, 3) {
            return true;
        }
        let (bh, xh) = (self.b, self.x);
        let (b1, b2, b3, x, y, z) = (v[0], v[1], v[2], v[3], v[4], v[5]);
        let b12 = bh.mul(b1, b2);
        let lhs = self.g(bh.imp(b3, b12), xh.imp(self.f(b12, xh.mul(x, y)), z));
        let inner = self.g(bh.imp(b3, b2), xh.imp(y, z));
        let rhs = self.g(bh.imp(bh.imp(b2, b3), b1), xh.imp(x, inner));
        lhs == rhs
    }

    fn e4_refs(&self, v: &[Elem]) -> [Elem; 7] {
        let bh = self.b;
        let (b1, b2, b3) = (v[0], v[1], v[2]);
        let b12 = bh.mul(b1, b2);
        [
            b1,
            b2,
            b3,
            bh.imp(b3, b12),
            b12,
            bh.imp(bh.imp(b2, b3), b1),
            bh.imp(b3, b2),
        ]
    }

    fn b2(&self, v: &[Elem]) -> bool {
        let (bh, xh) = (self.b, self.x);
        let (b1, b2, b3, x, y, z) = (v[0], v[1], v[2], v[3], v[4], v[5]);
        let [bt, c1, c2, c3, c4] = self.b2_refs(v);
        let _ = (bh, b1, b2, b3);
        let first = self.g(c1, xh.imp(self.g(c2, xh.imp(x, y)), z));
        let second = self.g(c3, xh.imp(self.g(c4, xh.imp(y, x)), z));
        self.g(bt, xh.imp(first, xh.imp(second, z))) == xh.unit()
    }

    fn b2_refs(&self, v: &[Elem]) -> [Elem; 5] {
        let bh = self.b;
        let (b1, b2, b3) = (v[0], v[1], v[2]);
        let b21 = bh.imp(b2, b1);
        let b12 = bh.imp(b1, b2);
        let bt = bh.imp(bh.imp(bh.imp(b21, b3), b3), bh.imp(b12, b3));
        [bt, bh.imp(b3, b12), b21, bh.imp(b3, b21), b12]
    }

    fn w2(&self, v: &[Elem]) -> bool {
        let (bh, xh) = (self.b, self.x);
        let (b1, b2, x, y) = (v[0], v[1], v[2], v[3]);
        let lhs = xh.imp(self.g(bh.imp(b2, b1), xh.imp(x, y)), y);
        let rhs = xh.imp(self.g(bh.imp(b1, b2), xh.imp(y, x)), x);
        lhs == rhs
    }

    fn w2_refs(&self, v: &[Elem]) -> [Elem; 2] {
        [self.b.imp(v[1], v[0]), self.b.imp(v[0], v[1])]
    }

    /// First failure of an axiom over all assignments.
    fn failure(&self, axiom: ActionAxiom) -> Option<Vec<Elem>> {
        let (nb, nx) = (self.b.order(), self.x.order());
        match axiom {
            ActionAxiom::E1 => first_failure(nb, 1, |v| self.e1(v)),
            ActionAxiom::E2 => first_failure(nx, 1, |v| self.e2(v)),
            ActionAxiom::E3 => first_failure_mixed(nb, 2, nx, 2, |v| self.e3(v)),
            ActionAxiom::E4 => first_failure_mixed(nb, 3, nx, 3, |v| self.e4(v)),
            ActionAxiom::B2 => first_failure_mixed(nb, 3, nx, 3, |v| self.b2(v)),
            ActionAxiom::W2 => first_failure_mixed(nb, 2, nx, 2, |v| self.w2(v)),
        }
    }

    /// Whether an axiom holds on every assignment whose referenced rows are
    /// all marked in `known`.
    fn holds_on_known(&self, axiom: ActionAxiom, known: &[bool]) -> bool {
        let (nb, nx) = (self.b.order(), self.x.order());
        let all = |refs: &[Elem]| refs.iter().all(|&r| known[r]);
        let w = match axiom {
            ActionAxiom::E1 | ActionAxiom::E2 => None,
            ActionAxiom::E3 => {
                first_failure_mixed(nb, 2, nx, 2, |v| !all(&self.e3_refs(v)) || self.e3(v))
            }
            ActionAxiom::E4 => {
                first_failure_mixed(nb, 3, nx, 3, |v| !all(&self.e4_refs(v)) || self.e4(v))
            }
            ActionAxiom::B2 => {
                first_failure_mixed(nb, 3, nx, 3, |v| !all(&self.b2_refs(v)) || self.b2(v))
            }
            ActionAxiom::W2 => {
                first_failure_mixed(nb, 2, nx, 2, |v| !all(&self.w2_refs(v)) || self.w2(v))
            }
        };
        w.is_none()
    }
}

/// Like [`first_failure`] with the first `kb` variables ranging over `0..nb`
/// and the remaining `kx` over `0..nx`.
fn first_failure_mixed(
    nb: usize,
    kb: usize,
    nx: usize,
    kx: usize,
    mut ok: impl FnMut(&[Elem]) -> bool,
) -> Option<Vec<Elem>> {
    let bound: Vec<usize> = std::iter::repeat_n(nb, kb)
        .chain(std::iter::repeat_n(nx, kx))
        .collect();
    if bound.contains(&0) {
        return None;
    }
    let mut v = vec![0; kb + kx];
    loop {
        if !ok(&v) {
            return Some(v);
        }
        let mut i = v.len();
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < bound[i] {
                break;
            }
            v[i] = 0;
        }
    }
}

fn axioms_for(variety: Variety) -> Result<&'static [ActionAxiom], ActionError> {
    use ActionAxiom::*;
    match variety {
        Variety::Hoop => Ok(&[E1, E2, E3, E4]),
        Variety::Basic | Variety::Godel => Ok(&[E1, E2, E3, E4, B2]),
        Variety::Wajsberg => Ok(&[E1, E2, E3, E4, W2]),
        Variety::Product => Err(ActionError::ProductUnsupported),
    }
}

fn check_variety(b: &FiniteHoop, x: &FiniteHoop, variety: Variety) -> Result<(), ActionError> {
    for (name, h) in [("B", b), ("X", x)] {
        if !h.classify().in_variety(variety) {
            return Err(ActionError::VarietyMismatch {
                algebra: name,
                variety,
            });
        }
    }
    Ok(())
}

/// Checks E1–E4 and the axioms of `variety`, and computes certificates.
pub fn validate_action(
    b: Arc<FiniteHoop>,
    x: Arc<FiniteHoop>,
    f: Vec<Elem>,
    g: Vec<Elem>,
    variety: Variety,
) -> Result<StrongExternalAction, ActionError> {
    let required = axioms_for(variety)?;
    let (nb, nx) = (b.order(), x.order());
    for (name, t) in [("f", &f), ("g", &g)] {
        if t.len() != nb * nx {
            return Err(ActionError::Shape(format!(
                "{name} has {} entries, expected {}",
                t.len(),
                nb * nx
            )));
        }
        if let Some(pos) = t.iter().position(|&v| v >= nx) {
            return Err(ActionError::Shape(format!(
                "{name}[{}][{}] = {} is out of range",
                pos / nx,
                pos % nx,
                t[pos]
            )));
        }
    }
    check_variety(&b, &x, variety)?;
    let view = View {
        b: &b,
        x: &x,
        f: &f,
        g: &g,
    };
    for &axiom in required {
        if let Some(w) = view.failure(axiom) {
            return Err(ActionError::AxiomViolation {
                axiom,
                witness: axiom.vars().iter().copied().zip(w).collect(),
            });
        }
    }
    let both = |v: Variety| b.classify().in_variety(v) && x.classify().in_variety(v);
    let certificates = Certificates {
        hoop: true,
        basic: both(Variety::Basic) && view.failure(ActionAxiom::B2).is_none(),
        wajsberg: both(Variety::Wajsberg) && view.failure(ActionAxiom::W2).is_none(),
    };
    Ok(StrongExternalAction {
        b,
        x,
        f,
        g,
        certificates,
    })
}

/// First failing axiom among `axioms`, for reporting without constructing.
pub fn action_failure(
    b: &FiniteHoop,
    x: &FiniteHoop,
    f: &[Elem],
    g: &[Elem],
    axiom: ActionAxiom,
) -> Option<Vec<(&'static str, Elem)>> {
    let view = View { b, x, f, g };
    view.failure(axiom)
        .map(|w| axiom.vars().iter().copied().zip(w).collect())
}

impl StrongExternalAction {
    /// `f_b = g_b = id` for every `b`.
    pub fn identity(b: Arc<FiniteHoop>, x: Arc<FiniteHoop>) -> Self {
        let row: Vec<Elem> = x.elements().collect();
        let f = row.repeat(b.order());
        validate_action(b, x, f.clone(), f, Variety::Hoop).expect("identity action")
    }

    pub fn b(&self) -> &Arc<FiniteHoop> {
        &self.b
    }

    pub fn x(&self) -> &Arc<FiniteHoop> {
        &self.x
    }

    #[inline]
    pub fn f(&self, b: Elem, x: Elem) -> Elem {
        self.f[b * self.x.order() + x]
    }

    #[inline]
    pub fn g(&self, b: Elem, x: Elem) -> Elem {
        self.g[b * self.x.order() + x]
    }

    pub fn f_table(&self) -> &[Elem] {
        &self.f
    }

    pub fn g_table(&self) -> &[Elem] {
        &self.g
    }

    pub fn f_rows(&self) -> Vec<Vec<Elem>> {
        self.f.chunks(self.x.order()).map(<[_]>::to_vec).collect()
    }

    pub fn g_rows(&self) -> Vec<Vec<Elem>> {
        self.g.chunks(self.x.order()).map(<[_]>::to_vec).collect()
    }

    pub fn certificates(&self) -> Certificates {
        self.certificates
    }

    pub fn in_variety(&self, v: Variety) -> bool {
        match v {
            Variety::Hoop => true,
            Variety::Basic => self.certificates.basic,
            Variety::Godel => {
                self.certificates.basic && self.b.classify().is_godel && self.x.classify().is_godel
            }
            Variety::Wajsberg => self.certificates.wajsberg,
            Variety::Product => false,
        }
    }
}

/// All strong external actions of `b` on `x` satisfying the axioms of
/// `variety`, sorted by `(f, g)`.
pub fn enumerate_actions(
    b: &Arc<FiniteHoop>,
    x: &Arc<FiniteHoop>,
    variety: Variety,
    budget: u64,
) -> Result<Vec<StrongExternalAction>, ActionError> {
    let required = axioms_for(variety)?;
    check_variety(b, x, variety)?;
    let (nb, nx) = (b.order(), x.order());
    let ident: Vec<Elem> = x.elements().collect();
    let mut f = vec![x.unit(); nb * nx];
    let mut g = vec![x.unit(); nb * nx];
    f[b.unit() * nx..(b.unit() + 1) * nx].copy_from_slice(&ident);
    g[b.unit() * nx..(b.unit() + 1) * nx].copy_from_slice(&ident);
    let mut known = vec![false; nb];
    known[b.unit()] = true;
    let rows: Vec<Elem> = b.elements().filter(|&r| r != b.unit()).collect();
    let free: Vec<Elem> = x.elements().filter(|&v| v != x.unit()).collect();
    let pruning: Vec<ActionAxiom> = required
        .iter()
        .copied()
        .filter(|a| !matches!(a, ActionAxiom::E1 | ActionAxiom::E2))
        .collect();

    struct Search<'a> {
        b: &'a FiniteHoop,
        x: &'a FiniteHoop,
        rows: &'a [Elem],
        free: &'a [Elem],
        pruning: &'a [ActionAxiom],
        nodes: u64,
        budget: u64,
        found: Vec<(Vec<Elem>, Vec<Elem>)>,
    }

    fn fill(
        s: &mut Search<'_>,
        depth: usize,
        f: &mut Vec<Elem>,
        g: &mut Vec<Elem>,
        known: &mut Vec<bool>,
    ) -> Result<(), ActionError> {
        if depth == s.rows.len() {
            s.found.push((f.clone(), g.clone()));
            return Ok(());
        }
        let nx = s.x.order();
        let r = s.rows[depth];
        let cells = 2 * s.free.len();
        let mut digits = vec![0usize; cells];
        loop {
            s.nodes += 1;
            if s.nodes > s.budget {
                return Err(HoopError::BudgetExceeded { limit: s.budget }.into());
            }
            for (i, &xx) in s.free.iter().enumerate() {
                f[r * nx + xx] = digits[i];
                g[r * nx + xx] = digits[s.free.len() + i];
            }
            known[r] = true;
            let view = View {
                b: s.b,
                x: s.x,
                f,
                g,
            };
            if s.pruning.iter().all(|&a| view.holds_on_known(a, known)) {
                fill(s, depth + 1, f, g, known)?;
            }
            known[r] = false;
            // odometer over the free cells, first cell slowest
            let mut i = cells;
            loop {
                if i == 0 {
                    for &xx in s.free {
                        f[r * nx + xx] = s.x.unit();
                        g[r * nx + xx] = s.x.unit();
                    }
                    return Ok(());
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < nx {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    let mut search = Search {
        b,
        x,
        rows: &rows,
        free: &free,
        pruning: &pruning,
        nodes: 0,
        budget,
        found: Vec::new(),
    };
    fill(&mut search, 0, &mut f, &mut g, &mut known)?;
    let mut found = search.found;
    found.sort();
    found
        .into_iter()
        .map(|(f, g)| validate_action(b.clone(), x.clone(), f, g, variety))
        .collect()
}

/// `f_b(x) = s(b) -> (s(b)*x)` and `g_b(x) = s(b) -> x`, computed in `A` and
/// read back through `k`.
pub fn tau(e: &SplitExtension) -> Result<StrongExternalAction, ActionError> {
    if let Some((a, b)) = crate::extension::has_strong_section(e).witness {
        return Err(ActionError::NotStrong { a, b });
    }
    let (h, x, b) = (e.a(), e.x(), e.b());
    let mut f = Vec::with_capacity(b.order() * x.order());
    let mut g = Vec::with_capacity(b.order() * x.order());
    for bb in b.elements() {
        let sb = e.s()[bb];
        for xx in x.elements() {
            let kx = e.k()[xx];
            let back = |v: Elem| {
                e.k_inv(v).ok_or_else(|| {
                    ActionError::Inconsistent(format!("tau leaves the kernel at ({bb}, {xx})"))
                })
            };
            f.push(back(h.imp(sb, h.mul(sb, kx)))?);
            g.push(back(h.imp(sb, kx))?);
        }
    }
    validate_action(b.clone(), x.clone(), f, g, Variety::Hoop)
}

/// `Y' = {(x, b) : f_b(x) = x}` in lexicographic order.
pub fn mu_carrier(act: &StrongExternalAction) -> Vec<(Elem, Elem)> {
    act.x
        .elements()
        .flat_map(|x| act.b.elements().map(move |b| (x, b)))
        .filter(|&(x, b)| act.f(b, x) == x)
        .collect()
}

/// The split extension `X -> Y' <-> B` built from an action.
pub fn mu(act: &StrongExternalAction) -> Result<SplitExtension, ActionError> {
    Ok(SemidirectModel::new(act)?.ext)
}

/// An action together with its semidirect product and carrier bookkeeping.
#[derive(Debug, Clone)]
pub struct SemidirectModel {
    pub act: StrongExternalAction,
    pub ext: SplitExtension,
    pub pairs: Vec<(Elem, Elem)>,
    index: Vec<Option<usize>>,
}

impl SemidirectModel {
    pub fn new(act: &StrongExternalAction) -> Result<Self, ActionError> {
        let (x, b) = (&act.x, &act.b);
        let nb = b.order();
        let pairs = mu_carrier(act);
        let mut index = vec![None; x.order() * nb];
        for (i, &(xx, bb)) in pairs.iter().enumerate() {
            index[xx * nb + bb] = Some(i);
        }
        let idx = |xx: Elem, bb: Elem| -> Result<usize, ActionError> {
            index[xx * nb + bb].ok_or_else(|| {
                ActionError::Inconsistent(format!("({xx}, {bb}) escapes the carrier"))
            })
        };
        let m = pairs.len();
        let mut mul = Vec::with_capacity(m * m);
        let mut imp = Vec::with_capacity(m * m);
        for &(xx, b1) in &pairs {
            for &(yy, b2) in &pairs {
                mul.push(idx(act.f(b.mul(b1, b2), x.mul(xx, yy)), b.mul(b1, b2))?);
                imp.push(idx(act.g(b.imp(b2, b1), x.imp(xx, yy)), b.imp(b1, b2))?);
            }
        }
        let unit = idx(x.unit(), b.unit())?;
        let a = FiniteHoop::new(m, unit, mul, imp, None)
            .map_err(|e| ActionError::Inconsistent(format!("Y' is not a hoop: {e}")))?;
        let r = a.classify();
        let claims = [
            (act.certificates.basic, r.is_basic, "basic"),
            (act.certificates.wajsberg, r.is_wajsberg, "Wajsberg"),
            (act.in_variety(Variety::Godel), r.is_godel, "Gödel"),
        ];
        for (cert, holds, name) in claims {
            if cert && !holds {
                return Err(ActionError::Inconsistent(format!("Y' is not {name}")));
            }
        }
        let a = Arc::new(a);
        let k = x
            .elements()
            .map(|xx| idx(xx, b.unit()))
            .collect::<Result<_, _>>()?;
        let p = pairs.iter().map(|&(_, bb)| bb).collect();
        let s = b
            .elements()
            .map(|bb| idx(x.unit(), bb))
            .collect::<Result<_, _>>()?;
        let ext = SplitExtension::new(x.clone(), a, b.clone(), k, p, s)?;
        if !ext.is_strong() {
            return Err(ActionError::Inconsistent(
                "mu produced a non-strong section".into(),
            ));
        }
        Ok(SemidirectModel {
            act: act.clone(),
            ext,
            pairs,
            index,
        })
    }

    pub fn index_of(&self, (x, b): (Elem, Elem)) -> Result<usize, ActionError> {
        let nb = self.act.b.order();
        if x >= self.act.x.order() || b >= nb {
            return Err(ActionError::NotInCarrier { x, b });
        }
        self.index[x * nb + b].ok_or(ActionError::NotInCarrier { x, b })
    }

    fn pair(&self, i: usize) -> (Elem, Elem) {
        self.pairs[i]
    }

    /// `(g_{b'->b}(x->y), b->b')`.
    pub fn op1(&self, (x, b): (Elem, Elem), (y, b2): (Elem, Elem)) -> (Elem, Elem) {
        let (bh, xh) = (&self.act.b, &self.act.x);
        (self.act.g(bh.imp(b2, b), xh.imp(x, y)), bh.imp(b, b2))
    }

    /// `(f_{b*b'}(x*y), b*b')`.
    pub fn op2(&self, (x, b): (Elem, Elem), (y, b2): (Elem, Elem)) -> (Elem, Elem) {
        let (bh, xh) = (&self.act.b, &self.act.x);
        (self.act.f(bh.mul(b, b2), xh.mul(x, y)), bh.mul(b, b2))
    }

    fn back(&self, a: Elem) -> Result<Elem, ActionError> {
        self.ext
            .k_inv(a)
            .ok_or_else(|| ActionError::Inconsistent(format!("{a} is not in the kernel")))
    }

    /// `(s(b'->b) -> (x->y), b->b')` evaluated in the middle algebra.
    pub fn thss_imp(&self, p: (Elem, Elem), q: (Elem, Elem)) -> Result<(Elem, Elem), ActionError> {
        thss_imp_in(&self.ext, p, q)
    }

    /// `(s(b*b') -> (s(b*b')*x*y), b*b')` evaluated in the middle algebra.
    pub fn thss_mul(&self, p: (Elem, Elem), q: (Elem, Elem)) -> Result<(Elem, Elem), ActionError> {
        thss_mul_in(&self.ext, p, q)
    }

    /// The middle algebra's own operation, as a pair.
    pub fn table_imp(&self, p: (Elem, Elem), q: (Elem, Elem)) -> Result<(Elem, Elem), ActionError> {
        let (i, j) = (self.index_of(p)?, self.index_of(q)?);
        Ok(self.pair(self.ext.a().imp(i, j)))
    }

    pub fn table_mul(&self, p: (Elem, Elem), q: (Elem, Elem)) -> Result<(Elem, Elem), ActionError> {
        let (i, j) = (self.index_of(p)?, self.index_of(q)?);
        Ok(self.pair(self.ext.a().mul(i, j)))
    }

    /// `(f_{b∧b'}(x∧y), b∧b')`.
    pub fn meet_action(&self, (x, b): (Elem, Elem), (y, b2): (Elem, Elem)) -> (Elem, Elem) {
        let (bh, xh) = (&self.act.b, &self.act.x);
        let m = bh.meet(b, b2);
        (self.act.f(m, xh.meet(x, y)), m)
    }

    /// `(f_{b∨b'}((g_{b'->b}(x->y) -> y) ∧ (g_{b->b'}(y->x) -> x)), b∨b')`.
    pub fn join_action(&self, (x, b): (Elem, Elem), (y, b2): (Elem, Elem)) -> (Elem, Elem) {
        let (bh, xh) = (&self.act.b, &self.act.x);
        let j = bh.join_unchecked(b, b2);
        let l = xh.imp(self.act.g(bh.imp(b2, b), xh.imp(x, y)), y);
        let r = xh.imp(self.act.g(bh.imp(b, b2), xh.imp(y, x)), x);
        (self.act.f(j, xh.meet(l, r)), j)
    }

    /// `(s(b∧b') -> (s(b∧b')*(x∧y)), b∧b')` in the middle algebra.
    pub fn meet_section(
        &self,
        (x, b): (Elem, Elem),
        (y, b2): (Elem, Elem),
    ) -> Result<(Elem, Elem), ActionError> {
        let (e, a, bh) = (&self.ext, self.ext.a(), &self.act.b);
        let m = bh.meet(b, b2);
        let sm = e.s()[m];
        let v = a.imp(sm, a.mul(sm, a.meet(e.k()[x], e.k()[y])));
        Ok((self.back(v)?, m))
    }

    /// The section-level join formula in the middle algebra.
    pub fn join_section(
        &self,
        (x, b): (Elem, Elem),
        (y, b2): (Elem, Elem),
    ) -> Result<(Elem, Elem), ActionError> {
        let (e, a, bh) = (&self.ext, self.ext.a(), &self.act.b);
        let (kx, ky) = (e.k()[x], e.k()[y]);
        let j = bh.join_unchecked(b, b2);
        let sj = e.s()[j];
        let l = a.imp(a.imp(e.s()[bh.imp(b2, b)], a.imp(kx, ky)), ky);
        let r = a.imp(a.imp(e.s()[bh.imp(b, b2)], a.imp(ky, kx)), kx);
        let v = a.imp(sj, a.mul(sj, a.meet(l, r)));
        Ok((self.back(v)?, j))
    }

    /// Infimum and supremum by scanning the natural order of `Y'`.
    pub fn inf_sup(
        &self,
        p: (Elem, Elem),
        q: (Elem, Elem),
    ) -> Result<((Elem, Elem), Option<(Elem, Elem)>), ActionError> {
        let (i, j) = (self.index_of(p)?, self.index_of(q)?);
        let a = self.ext.a();
        let lower: Vec<Elem> = a.elements().filter(|&z| a.le(z, i) && a.le(z, j)).collect();
        let inf = lower
            .iter()
            .copied()
            .find(|&z| lower.iter().all(|&w| a.le(w, z)))
            .ok_or_else(|| ActionError::Inconsistent("no infimum".into()))?;
        let upper: Vec<Elem> = a.elements().filter(|&z| a.le(i, z) && a.le(j, z)).collect();
        let sup = upper
            .iter()
            .copied()
            .find(|&z| upper.iter().all(|&w| a.le(z, w)));
        Ok((self.pair(inf), sup.map(|s| self.pair(s))))
    }
}

fn thss_imp_in(
    e: &SplitExtension,
    (x, b): (Elem, Elem),
    (y, b2): (Elem, Elem),
) -> Result<(Elem, Elem), ActionError> {
    let (a, bh) = (e.a(), e.b());
    let v = a.imp(e.s()[bh.imp(b2, b)], a.imp(e.k()[x], e.k()[y]));
    let back = e
        .k_inv(v)
        .ok_or_else(|| ActionError::Inconsistent(format!("{v} is not in the kernel")))?;
    Ok((back, bh.imp(b, b2)))
}

fn thss_mul_in(
    e: &SplitExtension,
    (x, b): (Elem, Elem),
    (y, b2): (Elem, Elem),
) -> Result<(Elem, Elem), ActionError> {
    let (a, bh) = (e.a(), e.b());
    let sm = e.s()[bh.mul(b, b2)];
    let v = a.imp(sm, a.mul(a.mul(sm, e.k()[x]), e.k()[y]));
    let back = e
        .k_inv(v)
        .ok_or_else(|| ActionError::Inconsistent(format!("{v} is not in the kernel")))?;
    Ok((back, bh.mul(b, b2)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpsResult {
    pub imp: (Elem, Elem),
    pub mul: (Elem, Elem),
    pub agree: bool,
}

/// Both presentations of `->` and `*` on a pair of carrier elements.
pub fn semidirect_ops_strong(
    act: &StrongExternalAction,
    p: (Elem, Elem),
    q: (Elem, Elem),
) -> Result<OpsResult, ActionError> {
    let m = SemidirectModel::new(act)?;
    ops_on_model(&m, p, q)
}

fn ops_on_model(
    m: &SemidirectModel,
    p: (Elem, Elem),
    q: (Elem, Elem),
) -> Result<OpsResult, ActionError> {
    let imp = m.op1(p, q);
    let mul = m.op2(p, q);
    let agree = m.thss_imp(p, q)? == imp
        && m.thss_mul(p, q)? == mul
        && m.table_imp(p, q)? == imp
        && m.table_mul(p, q)? == mul;
    Ok(OpsResult { imp, mul, agree })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeResult {
    pub meet_action: (Elem, Elem),
    pub meet_section: (Elem, Elem),
    pub join_action: (Elem, Elem),
    pub join_section: (Elem, Elem),
    pub inf: (Elem, Elem),
    pub sup: Option<(Elem, Elem)>,
    pub agree: bool,
}

/// Meet and join by the action formulas, the section formulas and by scan.
pub fn semidirect_lattice(
    act: &StrongExternalAction,
    p: (Elem, Elem),
    q: (Elem, Elem),
) -> Result<LatticeResult, ActionError> {
    if !act.certificates.basic {
        return Err(ActionError::NotBasic);
    }
    let m = SemidirectModel::new(act)?;
    lattice_on_model(&m, p, q)
}

pub(crate) fn lattice_on_model(
    m: &SemidirectModel,
    p: (Elem, Elem),
    q: (Elem, Elem),
) -> Result<LatticeResult, ActionError> {
    let (inf, sup) = m.inf_sup(p, q)?;
    let meet_action = m.meet_action(p, q);
    let meet_section = m.meet_section(p, q)?;
    let join_action = m.join_action(p, q);
    let join_section = m.join_section(p, q)?;
    let agree = meet_action == inf
        && meet_section == inf
        && Some(join_action) == sup
        && Some(join_section) == sup;
    Ok(LatticeResult {
        meet_action,
        meet_section,
        join_action,
        join_section,
        inf,
        sup,
        agree,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpsSweep {
    pub carrier_size: usize,
    pub pairs_checked: usize,
    pub first_mismatch: Option<((Elem, Elem), (Elem, Elem))>,
}

/// Every pair of the carrier through [`semidirect_ops_strong`].
pub fn ops_sweep(act: &StrongExternalAction) -> Result<OpsSweep, ActionError> {
    let m = SemidirectModel::new(act)?;
    let mut first_mismatch = None;
    let mut pairs_checked = 0;
    'outer: for &p in &m.pairs {
        for &q in &m.pairs {
            pairs_checked += 1;
            if !ops_on_model(&m, p, q)?.agree {
                first_mismatch = Some((p, q));
                break 'outer;
            }
        }
    }
    Ok(OpsSweep {
        carrier_size: m.pairs.len(),
        pairs_checked,
        first_mismatch,
    })
}

/// Every pair of the carrier through [`semidirect_lattice`].
pub fn lattice_sweep(act: &StrongExternalAction) -> Result<OpsSweep, ActionError> {
    if !act.certificates.basic {
        return Err(ActionError::NotBasic);
    }
    let m = SemidirectModel::new(act)?;
    let mut first_mismatch = None;
    let mut pairs_checked = 0;
    'outer: for &p in &m.pairs {
        for &q in &m.pairs {
            pairs_checked += 1;
            if !lattice_on_model(&m, p, q)?.agree {
                first_mismatch = Some((p, q));
                break 'outer;
            }
        }
    }
    Ok(OpsSweep {
        carrier_size: m.pairs.len(),
        pairs_checked,
        first_mismatch,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThssReport {
    pub carrier_size: usize,
    /// `{(x,b) : s(b) -> (s(b)*x) = x}` equals `{(x,b) : f_b(x) = x}` for `f = tau(e)`.
    pub carriers_match: bool,
    /// `a ↦ (sp(a) -> a, p(a))` is a bijection onto the carrier with inverse `(x,b) ↦ s(b)*x`.
    pub bijection: bool,
    /// First pair where the closed formulas, the action formulas and the
    /// middle algebra's tables disagree.
    pub first_mismatch: Option<((Elem, Elem), (Elem, Elem))>,
}

impl ThssReport {
    pub fn ok(&self) -> bool {
        self.carriers_match && self.bijection && self.first_mismatch.is_none()
    }
}

/// Compares, on a strong extension `e`, the closed operations on `Y'`, the
/// operations of `tau(e)` and the tables of `A` transported to `Y'`.
pub fn thss_agreement(e: &SplitExtension) -> Result<ThssReport, ActionError> {
    let act = tau(e)?;
    let (a, x, b) = (e.a(), e.x(), e.b());
    let carrier: Vec<(Elem, Elem)> = x
        .elements()
        .flat_map(|xx| b.elements().map(move |bb| (xx, bb)))
        .filter(|&(xx, bb)| {
            let sb = e.s()[bb];
            a.imp(sb, a.mul(sb, e.k()[xx])) == e.k()[xx]
        })
        .collect();
    let carriers_match = carrier == mu_carrier(&act);
    let embed =
        |aa: Elem| -> Option<(Elem, Elem)> { e.k_inv(a.imp(e.sp(aa), aa)).map(|v| (v, e.p()[aa])) };
    let unembed = |(xx, bb): (Elem, Elem)| a.mul(e.s()[bb], e.k()[xx]);
    let mut images: Vec<(Elem, Elem)> = a.elements().filter_map(embed).collect();
    let bijection =
        images.len() == a.order() && a.elements().all(|aa| embed(aa).map(unembed) == Some(aa)) && {
            images.sort_unstable();
            images == carrier
        };
    let model = SemidirectModel::new(&act)?;
    let mut first_mismatch = None;
    'outer: for &p in &carrier {
        for &q in &carrier {
            let imp = thss_imp_in(e, p, q)?;
            let mul = thss_mul_in(e, p, q)?;
            let via_a_imp = embed(a.imp(unembed(p), unembed(q)));
            let via_a_mul = embed(a.mul(unembed(p), unembed(q)));
            if imp != model.op1(p, q)
                || mul != model.op2(p, q)
                || via_a_imp != Some(imp)
                || via_a_mul != Some(mul)
            {
                first_mismatch = Some((p, q));
                break 'outer;
            }
        }
    }
    Ok(ThssReport {
        carrier_size: carrier.len(),
        carriers_match,
        bijection,
        first_mismatch,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GReport {
    /// `(b, x, y)` with `x <= y` but `g_b(x) > g_b(y)`.
    pub monotone: Option<(Elem, Elem, Elem)>,
    /// `(b, b', x)` with `g_{b*b'}(x) != g_b(g_{b'}(x))`.
    pub composition: Option<(Elem, Elem, Elem)>,
    /// `(b, x, y)` with `g_b(x->y) != g_b(x) -> g_b(y)`.
    pub distributes: Option<(Elem, Elem, Elem)>,
}

impl GReport {
    pub fn ok(&self) -> bool {
        self.monotone.is_none() && self.composition.is_none() && self.distributes.is_none()
    }
}

pub fn g_properties(act: &StrongExternalAction) -> GReport {
    let (b, x) = (&act.b, &act.x);
    let triple = |w: Option<Vec<Elem>>| w.map(|v| (v[0], v[1], v[2]));
    let monotone = triple(first_failure_mixed(b.order(), 1, x.order(), 2, |v| {
        !x.le(v[1], v[2]) || x.le(act.g(v[0], v[1]), act.g(v[0], v[2]))
    }));
    let composition = triple(first_failure_mixed(b.order(), 2, x.order(), 1, |v| {
        act.g(b.mul(v[0], v[1]), v[2]) == act.g(v[0], act.g(v[1], v[2]))
    }));
    let distributes = triple(first_failure_mixed(b.order(), 1, x.order(), 2, |v| {
        act.g(v[0], x.imp(v[1], v[2])) == x.imp(act.g(v[0], v[1]), act.g(v[0], v[2]))
    }));
    GReport {
        monotone,
        composition,
        distributes,
    }
}

/// `f'(b', x) = f(phi(b'), x)` and likewise for `g`.
pub fn restrict(
    act: &StrongExternalAction,
    phi: &Homomorphism,
) -> Result<StrongExternalAction, ActionError> {
    if **phi.target() != *act.b {
        return Err(ActionError::PreconditionUnmet(
            "homomorphism does not land in the acting hoop".into(),
        ));
    }
    let nx = act.x.order();
    let mut f = Vec::with_capacity(phi.source().order() * nx);
    let mut g = Vec::with_capacity(phi.source().order() * nx);
    for b2 in phi.source().elements() {
        let r = phi.apply(b2);
        f.extend_from_slice(&act.f[r * nx..(r + 1) * nx]);
        g.extend_from_slice(&act.g[r * nx..(r + 1) * nx]);
    }
    validate_action(phi.source().clone(), act.x.clone(), f, g, Variety::Hoop)
}

/// Strong split extensions of `b` by `x` up to isomorphism, through actions
/// and `mu`.
pub fn enumerate_splext_ss(
    b: &Arc<FiniteHoop>,
    x: &Arc<FiniteHoop>,
    variety: Variety,
    budget: u64,
) -> Result<Vec<SplitExtension>, ActionError> {
    let mut out: Vec<SplitExtension> = Vec::new();
    for act in enumerate_actions(b, x, variety, budget)? {
        let e = mu(&act)?;
        if !out.iter().any(|o| iso_extensions(o, &e).is_some()) {
            out.push(e);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub actions: usize,
    /// Classes of `mu` images under extension isomorphism.
    pub extension_classes: usize,
    /// Classes of strong extensions found by direct search, when requested.
    pub oracle_classes: Option<usize>,
    pub tau_mu_identity: bool,
    pub mu_tau_isomorphic: bool,
    pub witness: Option<String>,
}

impl BijectionReport {
    pub fn ok(&self) -> bool {
        self.tau_mu_identity
            && self.mu_tau_isomorphic
            && self.actions == self.extension_classes
            && self.oracle_classes.is_none_or(|c| c == self.actions)
    }
}

/// Checks that `tau` and `mu` are mutually inverse between actions and
/// strong extensions of `b` by `x`. With `oracle`, the extension side is
/// also enumerated by direct search over middle algebras.
pub fn verify_bijection(
    b: &Arc<FiniteHoop>,
    x: &Arc<FiniteHoop>,
    variety: Variety,
    oracle: bool,
    budget: u64,
) -> Result<BijectionReport, ActionError> {
    let acts = enumerate_actions(b, x, variety, budget)?;
    let mut witness = None;
    let mut classes: Vec<SplitExtension> = Vec::new();
    let mut tau_mu_identity = true;
    for act in &acts {
        let e = mu(act)?;
        let back = tau(&e)?;
        if back.f != act.f || back.g != act.g {
            tau_mu_identity = false;
            witness.get_or_insert_with(|| format!("tau(mu(f={:?}, g={:?})) differs", act.f, act.g));
        }
        if !classes.iter().any(|o| iso_extensions(o, &e).is_some()) {
            classes.push(e);
        }
    }
    let mut mu_tau_isomorphic = true;
    let mut oracle_classes = None;
    let direct: Vec<SplitExtension> = if oracle {
        let found = crate::search::split_extensions(x, b, budget)?;
        let strong: Vec<SplitExtension> = found
            .into_iter()
            .filter(|e| e.is_strong() && e.a().classify().in_variety(variety))
            .collect();
        oracle_classes = Some(strong.len());
        strong
    } else {
        classes.clone()
    };
    for e in &direct {
        let act = tau(e)?;
        if !act.in_variety(variety) {
            mu_tau_isomorphic = false;
            witness.get_or_insert_with(|| "tau(e) misses the variety axioms".into());
            continue;
        }
        let back = mu(&act)?;
        if iso_extensions(e, &back).is_none() {
            mu_tau_isomorphic = false;
            witness.get_or_insert_with(|| {
                format!(
                    "mu(tau(e)) not isomorphic for k={:?} p={:?} s={:?}",
                    e.k(),
                    e.p(),
                    e.s()
                )
            });
        }
    }
    Ok(BijectionReport {
        actions: acts.len(),
        extension_classes: classes.len(),
        oracle_classes,
        tau_mu_identity,
        mu_tau_isomorphic,
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NaturalityReport {
    pub extensions: usize,
    pub commutes: bool,
    pub witness: Option<String>,
}

/// For every strong extension `e` over the codomain of `phi`, compares
/// `tau(pullback(e, phi))` with the restriction of `tau(e)` along `phi`.
pub fn verify_naturality(
    phi: &Homomorphism,
    x: &Arc<FiniteHoop>,
    variety: Variety,
    budget: u64,
) -> Result<NaturalityReport, ActionError> {
    let exts = enumerate_splext_ss(phi.target(), x, variety, budget)?;
    let mut witness = None;
    for e in &exts {
        let left = tau(&pullback(e, phi)?)?;
        let right = restrict(&tau(e)?, phi)?;
        if left.f != right.f || left.g != right.g {
            witness = Some(format!(
                "phi={:?}: pullback gives f={:?} g={:?}, restriction gives f={:?} g={:?}",
                phi.map(),
                left.f,
                left.g,
                right.f,
                right.g
            ));
            break;
        }
    }
    Ok(NaturalityReport {
        extensions: exts.len(),
        commutes: witness.is_none(),
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MvReport {
    pub p_bijective: bool,
    /// Some `a` with `a != s(p(a))`.
    pub witness: Option<Elem>,
}

/// For a strong extension of Wajsberg hoops whose section preserves the
/// least element, checks `a = s(p(a))` for every `a`.
pub fn mv_trivialization_check(e: &SplitExtension) -> Result<MvReport, ActionError> {
    if !e.is_strong() {
        return Err(ActionError::PreconditionUnmet(
            "section is not strong".into(),
        ));
    }
    if !e.a().classify().is_wajsberg || !e.b().classify().is_wajsberg {
        return Err(ActionError::PreconditionUnmet(
            "middle and base must be Wajsberg".into(),
        ));
    }
    if e.s()[e.b().least()] != e.a().least() {
        return Err(ActionError::PreconditionUnmet(
            "section does not preserve the bottom".into(),
        ));
    }
    let witness = e.a().elements().find(|&a| e.sp(a) != a);
    Ok(MvReport {
        p_bijective: witness.is_none(),
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GodelReport {
    pub idempotent: bool,
    pub witness: Option<(Elem, Elem)>,
}

/// For a basic action between Gödel hoops, checks that `Y'` is idempotent.
pub fn godel_closure_check(act: &StrongExternalAction) -> Result<GodelReport, ActionError> {
    if !act.b.classify().is_godel || !act.x.classify().is_godel {
        return Err(ActionError::PreconditionUnmet(
            "both hoops must be Gödel".into(),
        ));
    }
    if !act.certificates.basic {
        return Err(ActionError::PreconditionUnmet(
            "action lacks the basic certificate".into(),
        ));
    }
    let m = SemidirectModel::new(act)?;
    let a = m.ext.a();
    let witness = a.elements().find(|&i| a.mul(i, i) != i).map(|i| m.pairs[i]);
    Ok(GodelReport {
        idempotent: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::regular_dense_decomposition;
    use crate::hoop::{godel_chain, lukasiewicz_chain, terminal};
    use crate::morph::{all_homs, iso, DEFAULT_BUDGET};

    fn arc(h: FiniteHoop) -> Arc<FiniteHoop> {
        Arc::new(h)
    }

    /// B = {0,1}, X = {a,1} as indices 0,1; f_0(a) = g_0(a) = 1.
    fn g3_action() -> StrongExternalAction {
        let c2 = arc(godel_chain(2).without_bottom());
        validate_action(
            c2.clone(),
            c2,
            vec![1, 1, 0, 1],
            vec![1, 1, 0, 1],
            Variety::Hoop,
        )
        .unwrap()
    }

    #[test]
    fn identity_action_is_valid() {
        let c2 = arc(lukasiewicz_chain(2));
        let l3 = arc(lukasiewicz_chain(3));
        let id = StrongExternalAction::identity(c2.clone(), l3.clone());
        assert!(id.certificates().basic && id.certificates().wajsberg);
        let e = mu(&id).unwrap();
        assert_eq!(e.a().order(), 6);
        assert!(g_properties(&id).ok());
    }

    #[test]
    fn g3_model_action() {
        let act = g3_action();
        let c = act.certificates();
        assert!(c.hoop && c.basic && !c.wajsberg);
        let c2 = act.b().clone();
        let err = validate_action(
            c2.clone(),
            c2,
            vec![1, 1, 0, 1],
            vec![1, 1, 0, 1],
            Variety::Wajsberg,
        )
        .unwrap_err();
        match err {
            ActionError::AxiomViolation { axiom, witness } => {
                assert_eq!(axiom, ActionAxiom::W2);
                assert_eq!(witness, vec![("b1", 0), ("b2", 1), ("x", 1), ("y", 0)]);
            }
            e => panic!("unexpected {e:?}"),
        }
        // the mirrored assignment fails as well: LHS = 1, RHS = a
        let view = View {
            b: act.b(),
            x: act.x(),
            f: act.f_table(),
            g: act.g_table(),
        };
        assert!(!view.w2(&[1, 0, 0, 1]));

        let m = SemidirectModel::new(&act).unwrap();
        assert_eq!(m.pairs, vec![(0, 1), (1, 0), (1, 1)]);
        assert!(iso(m.ext.a(), &arc(godel_chain(3).without_bottom())).is_some());
        assert_eq!(m.op1((0, 1), (1, 0)), (1, 0));
        assert_eq!(m.op2((1, 0), (1, 0)), (1, 0));
        assert!(ops_sweep(&act).unwrap().first_mismatch.is_none());
        let l = semidirect_lattice(&act, (0, 1), (1, 0)).unwrap();
        assert_eq!(l.meet_action, (1, 0));
        assert_eq!(l.join_action, (0, 1));
        assert!(l.agree);
        assert!(godel_closure_check(&act).unwrap().idempotent);
    }

    #[test]
    fn tau_of_double_negation_is_the_g3_action() {
        let e = regular_dense_decomposition(&arc(godel_chain(3))).unwrap();
        let act = tau(&e).unwrap();
        assert_eq!(act.f_table(), &[1, 1, 0, 1]);
        assert_eq!(act.g_table(), &[1, 1, 0, 1]);
        assert!(thss_agreement(&e).unwrap().ok());
    }

    #[test]
    fn tau_mu_round_trip() {
        let c2 = arc(lukasiewicz_chain(2));
        let d = SplitExtension::direct_product(c2.clone(), c2.clone());
        let id = tau(&d).unwrap();
        assert_eq!(id, StrongExternalAction::identity(c2.clone(), c2.clone()));
        assert!(iso_extensions(&d, &mu(&id).unwrap()).is_some());
    }

    #[test]
    fn enumeration_matches_raw_scan() {
        let c2 = arc(lukasiewicz_chain(2));
        let acts = enumerate_actions(&c2, &c2, Variety::Hoop, DEFAULT_BUDGET).unwrap();
        // raw scan over all 2x2 tables
        let mut raw = 0;
        for code in 0..256usize {
            let t: Vec<Elem> = (0..8).map(|i| code >> i & 1).collect();
            let (f, g) = (t[..4].to_vec(), t[4..].to_vec());
            if validate_action(c2.clone(), c2.clone(), f, g, Variety::Hoop).is_ok() {
                raw += 1;
            }
        }
        assert_eq!(acts.len(), raw);
        assert_eq!(
            enumerate_actions(&arc(terminal()), &c2, Variety::Hoop, DEFAULT_BUDGET)
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn product_variety_is_rejected() {
        let c2 = arc(lukasiewicz_chain(2));
        assert_eq!(
            enumerate_actions(&c2, &c2, Variety::Product, DEFAULT_BUDGET).unwrap_err(),
            ActionError::ProductUnsupported
        );
    }

    #[test]
    fn restriction_and_naturality() {
        let c2 = arc(godel_chain(2).without_bottom());
        let act = g3_action();
        for phi in all_homs(&c2, &c2, DEFAULT_BUDGET).unwrap() {
            restrict(&act, &phi).unwrap();
            assert!(
                verify_naturality(&phi, &c2, Variety::Hoop, DEFAULT_BUDGET)
                    .unwrap()
                    .commutes
            );
        }
        let from_t = Homomorphism::from_terminal(c2.clone());
        let r = restrict(&act, &from_t).unwrap();
        assert_eq!(r.f_table(), &[0, 1]);
    }

    #[test]
    fn mv_trivialization_on_l3() {
        let e = regular_dense_decomposition(&arc(lukasiewicz_chain(3))).unwrap();
        assert!(mv_trivialization_check(&e).unwrap().p_bijective);
    }
}
