//! L-algebras, operations of one L-algebra on another, and Rump's
//! semidirect product.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::action::{mu_carrier, tau, ActionError, StrongExternalAction};
use crate::extension::SplitExtension;
use crate::hoop::{first_failure, Elem, FiniteHoop};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LAxiom {
    L1,
    L2,
    L3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OAxiom {
    O1,
    O2,
    O3,
}

impl fmt::Display for LAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for OAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LAlgError {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("axiom {axiom} fails at {witness:?}")]
    AxiomViolation {
        axiom: LAxiom,
        witness: Vec<(&'static str, Elem)>,
    },
    #[error("operation axiom {axiom} fails at {witness:?}")]
    OperationViolation {
        axiom: OAxiom,
        witness: Vec<(&'static str, Elem)>,
    },
    #[error("p(s({b})) != {b}")]
    SectionFailure { b: Elem },
    #[error("{0} does not preserve the implication and unit")]
    NotAHomomorphism(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteLAlgebra {
    order: usize,
    unit: Elem,
    imp: Vec<Elem>,
}

impl FiniteLAlgebra {
    /// Validates L1–L3 exhaustively.
    pub fn new(order: usize, unit: Elem, imp: Vec<Elem>) -> Result<Self, LAlgError> {
        if order == 0 {
            return Err(LAlgError::MalformedTable("empty carrier".into()));
        }
        if unit >= order {
            return Err(LAlgError::MalformedTable(format!(
                "unit {unit} out of range"
            )));
        }
        if imp.len() != order * order {
            return Err(LAlgError::MalformedTable(format!(
                "imp has {} entries, expected {}",
                imp.len(),
                order * order
            )));
        }
        if let Some(pos) = imp.iter().position(|&v| v >= order) {
            return Err(LAlgError::MalformedTable(format!(
                "imp[{}][{}] = {} out of range",
                pos / order,
                pos % order,
                imp[pos]
            )));
        }
        let l = FiniteLAlgebra { order, unit, imp };
        if let Some((axiom, witness)) = l.failure() {
            return Err(LAlgError::AxiomViolation { axiom, witness });
        }
        Ok(l)
    }

    fn failure(&self) -> Option<(LAxiom, Vec<(&'static str, Elem)>)> {
        let (n, u) = (self.order, self.unit);
        if let Some(w) = first_failure(n, 1, |v| {
            let x = v[0];
            self.imp(u, x) == x && self.imp(x, x) == u && self.imp(x, u) == u
        }) {
            return Some((LAxiom::L1, vec![("x", w[0])]));
        }
        if let Some(w) = first_failure(n, 3, |v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            self.imp(self.imp(x, y), self.imp(x, z)) == self.imp(self.imp(y, x), self.imp(y, z))
        }) {
            return Some((LAxiom::L2, vec![("x", w[0]), ("y", w[1]), ("z", w[2])]));
        }
        if let Some(w) = first_failure(n, 2, |v| {
            let (x, y) = (v[0], v[1]);
            !(self.imp(x, y) == u && self.imp(y, x) == u) || x == y
        }) {
            return Some((LAxiom::L3, vec![("x", w[0]), ("y", w[1])]));
        }
        None
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn unit(&self) -> Elem {
        self.unit
    }

    #[inline]
    pub fn imp(&self, x: Elem, y: Elem) -> Elem {
        self.imp[x * self.order + y]
    }

    pub fn imp_table(&self) -> &[Elem] {
        &self.imp
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }
}

/// Forgets the multiplication.
pub fn hoop_to_lalgebra(h: &FiniteHoop) -> FiniteLAlgebra {
    FiniteLAlgebra::new(h.order(), h.unit(), h.imp_table().to_vec())
        .expect("the implication reduct of a hoop is an L-algebra")
}

/// `B` operating on `X` by `(b, x) ↦ op[b][x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LOperation {
    b: FiniteLAlgebra,
    x: FiniteLAlgebra,
    op: Vec<Elem>,
}

impl LOperation {
    pub fn b(&self) -> &FiniteLAlgebra {
        &self.b
    }

    pub fn x(&self) -> &FiniteLAlgebra {
        &self.x
    }

    #[inline]
    pub fn apply(&self, b: Elem, x: Elem) -> Elem {
        self.op[b * self.x.order + x]
    }

    pub fn table(&self) -> &[Elem] {
        &self.op
    }
}

/// Checks O1–O3 exhaustively.
pub fn validate_operation(
    b: FiniteLAlgebra,
    x: FiniteLAlgebra,
    op: Vec<Elem>,
) -> Result<LOperation, LAlgError> {
    if op.len() != b.order * x.order {
        return Err(LAlgError::MalformedTable(format!(
            "operation has {} entries, expected {}",
            op.len(),
            b.order * x.order
        )));
    }
    if op.iter().any(|&v| v >= x.order) {
        return Err(LAlgError::MalformedTable(
            "operation entry out of range".into(),
        ));
    }
    let lop = LOperation { b, x, op };
    let (bl, xl) = (&lop.b, &lop.x);
    let (nb, nx) = (bl.order, xl.order);
    // variables are (b, x, y) with b over B, x and y over X
    if let Some(w) = first_failure(nb.max(nx), 3, |v| {
        let (b, x, y) = (v[0], v[1], v[2]);
        b >= nb
            || x >= nx
            || y >= nx
            || lop.apply(b, xl.imp(x, y)) == xl.imp(lop.apply(b, x), lop.apply(b, y))
    }) {
        return Err(LAlgError::OperationViolation {
            axiom: OAxiom::O1,
            witness: vec![("b", w[0]), ("x", w[1]), ("y", w[2])],
        });
    }
    if let Some(w) = first_failure(nb.max(nx), 3, |v| {
        let (b, b2, x) = (v[0], v[1], v[2]);
        b >= nb
            || b2 >= nb
            || x >= nx
            || lop.apply(bl.imp(b, b2), lop.apply(b, x))
                == lop.apply(bl.imp(b2, b), lop.apply(b2, x))
    }) {
        return Err(LAlgError::OperationViolation {
            axiom: OAxiom::O2,
            witness: vec![("b", w[0]), ("b'", w[1]), ("x", w[2])],
        });
    }
    if let Some(x) = xl.elements().find(|&x| lop.apply(bl.unit, x) != x) {
        return Err(LAlgError::OperationViolation {
            axiom: OAxiom::O3,
            witness: vec![("x", x)],
        });
    }
    Ok(lop)
}

/// The operation `(b, x) ↦ g_b(x)` on the implication reducts.
pub fn operation_from_action(act: &StrongExternalAction) -> Result<LOperation, LAlgError> {
    validate_operation(
        hoop_to_lalgebra(act.b()),
        hoop_to_lalgebra(act.x()),
        act.g_table().to_vec(),
    )
}

/// `X × B` with `(x,b) -> (y,b') = ((b->b')x -> (b'->b)y, b->b')`. The pair
/// `(x, b)` has index `x*|B| + b`.
pub fn rump_semidirect(lop: &LOperation) -> Result<FiniteLAlgebra, LAlgError> {
    let (bl, xl) = (&lop.b, &lop.x);
    let nb = bl.order;
    let n = xl.order * nb;
    let mut imp = Vec::with_capacity(n * n);
    for i in 0..n {
        let (x, b) = (i / nb, i % nb);
        for j in 0..n {
            let (y, b2) = (j / nb, j % nb);
            let first = xl.imp(lop.apply(bl.imp(b, b2), x), lop.apply(bl.imp(b2, b), y));
            imp.push(first * nb + bl.imp(b, b2));
        }
    }
    FiniteLAlgebra::new(n, xl.unit * nb + bl.unit, imp)
}

/// Whether `a -> s(b) = sp(a) -> s(b)` for all `a`, `b`, after checking that
/// `p∘s = id` and that `k`, `p`, `s` preserve implication and unit.
pub fn lalg_strong_section(
    x: &FiniteLAlgebra,
    a: &FiniteLAlgebra,
    b: &FiniteLAlgebra,
    k: &[Elem],
    p: &[Elem],
    s: &[Elem],
) -> Result<bool, LAlgError> {
    let shapes = [
        ("k", k.len() == x.order && k.iter().all(|&v| v < a.order)),
        ("p", p.len() == a.order && p.iter().all(|&v| v < b.order)),
        ("s", s.len() == b.order && s.iter().all(|&v| v < a.order)),
    ];
    for (name, ok) in shapes {
        if !ok {
            return Err(LAlgError::MalformedTable(format!(
                "map {name} has the wrong shape"
            )));
        }
    }
    if let Some(bb) = b.elements().find(|&bb| p[s[bb]] != bb) {
        return Err(LAlgError::SectionFailure { b: bb });
    }
    let preserves = |src: &FiniteLAlgebra, dst: &FiniteLAlgebra, m: &[Elem]| {
        m[src.unit] == dst.unit
            && src.elements().all(|u| {
                src.elements()
                    .all(|v| m[src.imp(u, v)] == dst.imp(m[u], m[v]))
            })
    };
    for (name, ok) in [
        ("k", preserves(x, a, k)),
        ("p", preserves(a, b, p)),
        ("s", preserves(b, a, s)),
    ] {
        if !ok {
            return Err(LAlgError::NotAHomomorphism(name));
        }
    }
    Ok(a.elements().all(|aa| {
        b.elements()
            .all(|bb| a.imp(aa, s[bb]) == a.imp(s[p[aa]], s[bb]))
    }))
}

/// The L-algebra reduct of a hoop extension, checked for a strong section.
pub fn lalg_strong_section_of(e: &SplitExtension) -> Result<bool, LAlgError> {
    lalg_strong_section(
        &hoop_to_lalgebra(e.x()),
        &hoop_to_lalgebra(e.a()),
        &hoop_to_lalgebra(e.b()),
        e.k(),
        e.p(),
        e.s(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub middle_size: usize,
    pub product_size: usize,
    pub image: Vec<(Elem, Elem)>,
    pub injective: bool,
    pub image_is_carrier: bool,
    /// First `(a, a')` where the map fails to carry `a -> a'` to Rump's
    /// implication of the images.
    pub imp_failure: Option<(Elem, Elem)>,
}

impl EmbeddingReport {
    pub fn ok(&self) -> bool {
        self.injective && self.image_is_carrier && self.imp_failure.is_none()
    }
}

/// Studies `a ↦ (sp(a) -> a, p(a))` from `A` into Rump's `X ⋊ B` for the
/// operation `(b, x) ↦ s(b) -> x`.
pub fn embedding_check(e: &SplitExtension) -> Result<EmbeddingReport, ActionError> {
    let act = tau(e)?;
    let lop = operation_from_action(&act)
        .map_err(|err| ActionError::Inconsistent(format!("g does not operate: {err}")))?;
    let rump = rump_semidirect(&lop)
        .map_err(|err| ActionError::Inconsistent(format!("Rump product invalid: {err}")))?;
    let (a, nb) = (e.a(), e.b().order());
    let mut image = Vec::with_capacity(a.order());
    for aa in a.elements() {
        let x = e.k_inv(a.imp(e.sp(aa), aa)).ok_or_else(|| {
            ActionError::Inconsistent(format!("sp({aa}) -> {aa} is not in the kernel"))
        })?;
        image.push((x, e.p()[aa]));
    }
    let mut sorted = image.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let injective = sorted.len() == image.len();
    let image_is_carrier = sorted == mu_carrier(&act);
    let idx = |(x, b): (Elem, Elem)| x * nb + b;
    let imp_failure = a
        .elements()
        .flat_map(|u| a.elements().map(move |v| (u, v)))
        .find(|&(u, v)| idx(image[a.imp(u, v)]) != rump.imp(idx(image[u]), idx(image[v])));
    Ok(EmbeddingReport {
        middle_size: a.order(),
        product_size: rump.order(),
        image,
        injective,
        image_is_carrier,
        imp_failure,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoincidenceReport {
    pub carrier_size: usize,
    pub product_size: usize,
    pub pairs_checked: usize,
    /// First pair of carrier elements where the two implications differ.
    pub witness: Option<((Elem, Elem), (Elem, Elem))>,
}

impl CoincidenceReport {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// On `Y'`, compares `(s(b->b')->x) -> (s(b'->b)->y)` with
/// `s(b'->b) -> (x->y)`, both computed in `A`.
pub fn coincidence_check(e: &SplitExtension) -> Result<CoincidenceReport, ActionError> {
    let act = tau(e)?;
    let carrier = mu_carrier(&act);
    let (a, bh) = (e.a(), e.b());
    let k = e.k();
    let s = e.s();
    let mut witness = None;
    let mut pairs_checked = 0;
    'outer: for &(x, b) in &carrier {
        for &(y, b2) in &carrier {
            pairs_checked += 1;
            let (fwd, back) = (bh.imp(b, b2), bh.imp(b2, b));
            let rump = a.imp(a.imp(s[fwd], k[x]), a.imp(s[back], k[y]));
            let thss = a.imp(s[back], a.imp(k[x], k[y]));
            if rump != thss {
                witness = Some(((x, b), (y, b2)));
                break 'outer;
            }
        }
    }
    Ok(CoincidenceReport {
        carrier_size: carrier.len(),
        product_size: e.x().order() * bh.order(),
        pairs_checked,
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfSimilarReport {
    /// Whether every `f_b` is the identity.
    pub premise: bool,
    /// Whether `Y'` is all of `X × B`.
    pub full_carrier: bool,
}

impl SelfSimilarReport {
    pub fn holds(&self) -> bool {
        !self.premise || self.full_carrier
    }
}

/// If every `f_b` is the identity then `Y' = X × B`.
pub fn self_similar_check(act: &StrongExternalAction) -> SelfSimilarReport {
    let premise = act
        .b()
        .elements()
        .all(|b| act.x().elements().all(|x| act.f(b, x) == x));
    SelfSimilarReport {
        premise,
        full_carrier: mu_carrier(act).len() == act.b().order() * act.x().order(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{validate_action, StrongExternalAction};
    use crate::extension::regular_dense_decomposition;
    use crate::hoop::{godel_chain, lukasiewicz_chain, terminal, Variety};
    use std::sync::Arc;

    fn g3_action() -> StrongExternalAction {
        let c2 = Arc::new(godel_chain(2).without_bottom());
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
    fn reducts_are_l_algebras() {
        assert_eq!(hoop_to_lalgebra(&terminal()).order(), 1);
        hoop_to_lalgebra(&lukasiewicz_chain(3));
        hoop_to_lalgebra(&godel_chain(3));
        hoop_to_lalgebra(&lukasiewicz_chain(4));
    }

    #[test]
    fn axiom_witnesses() {
        // x -> x = 0 for x = 0
        let err = FiniteLAlgebra::new(2, 1, vec![0, 1, 0, 1]).unwrap_err();
        assert_eq!(
            err,
            LAlgError::AxiomViolation {
                axiom: LAxiom::L1,
                witness: vec![("x", 0)]
            }
        );
        // 0 and 1 imply each other; L1 and L2 hold
        let err = FiniteLAlgebra::new(3, 2, vec![2, 2, 2, 2, 2, 2, 0, 1, 2]).unwrap_err();
        assert_eq!(
            err,
            LAlgError::AxiomViolation {
                axiom: LAxiom::L3,
                witness: vec![("x", 0), ("y", 1)]
            }
        );
    }

    #[test]
    fn g3_operation_and_rump_product() {
        let act = g3_action();
        let lop = operation_from_action(&act).unwrap();
        assert_eq!(lop.table(), &[1, 1, 0, 1]);
        let r = rump_semidirect(&lop).unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(r.unit(), 3);
    }

    #[test]
    fn rump_over_terminal_is_x() {
        let x = hoop_to_lalgebra(&lukasiewicz_chain(3));
        let t = hoop_to_lalgebra(&terminal());
        let lop = validate_operation(t, x.clone(), vec![0, 1, 2]).unwrap();
        assert_eq!(rump_semidirect(&lop).unwrap(), x);
    }

    #[test]
    fn non_section_is_rejected() {
        let c2 = hoop_to_lalgebra(&lukasiewicz_chain(2));
        assert_eq!(
            lalg_strong_section(&c2, &c2, &c2, &[0, 1], &[1, 1], &[0, 1]),
            Err(LAlgError::SectionFailure { b: 0 })
        );
    }

    #[test]
    fn g3_embedding_and_coincidence() {
        let e = regular_dense_decomposition(&Arc::new(godel_chain(3))).unwrap();
        assert!(lalg_strong_section_of(&e).unwrap());
        let r = embedding_check(&e).unwrap();
        // X = {a, 1}, B = {0, 1}; A = {0, a, 1} maps to (1,0), (a,1), (1,1)
        assert_eq!(r.image, vec![(1, 0), (0, 1), (1, 1)]);
        assert!(r.ok());
        let c = coincidence_check(&e).unwrap();
        assert!(c.holds());
        assert_eq!(c.carrier_size, 3);
        assert_eq!(c.product_size, 4);
    }

    #[test]
    fn self_similar_premise() {
        let c2 = Arc::new(lukasiewicz_chain(2));
        let id = StrongExternalAction::identity(c2.clone(), c2);
        assert!(self_similar_check(&id).premise && self_similar_check(&id).holds());
        let g = self_similar_check(&g3_action());
        assert!(!g.premise && g.holds());
    }
}
