//! Finite hoops stored as operation tables.
//!
//! A [`FiniteHoop`] is a carrier `0..n` together with a unit, a multiplication
//! table, an implication table and optionally a bottom constant. Values are
//! only constructed through [`FiniteHoop::new`], which checks every hoop axiom
//! exhaustively, so holding a `FiniteHoop` is a certificate that the tables
//! describe a hoop.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

/// Index of an element of a finite algebra.
pub type Elem = usize;

/// The defining axioms of (bounded) hoops, in the order they are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum HoopAxiom {
    Commutativity,
    Associativity,
    UnitLaw,
    SelfImplication,
    Divisibility,
    Residuation,
    BottomLeast,
}

impl fmt::Display for HoopAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HoopAxiom::Commutativity => "(i) x*y = y*x",
            HoopAxiom::Associativity => "(i) (x*y)*z = x*(y*z)",
            HoopAxiom::UnitLaw => "(i) x*1 = x",
            HoopAxiom::SelfImplication => "(ii) x->x = 1",
            HoopAxiom::Divisibility => "(iii) x*(x->y) = y*(y->x)",
            HoopAxiom::Residuation => "(iv) (x*y)->z = x->(y->z)",
            HoopAxiom::BottomLeast => "(v) 0->x = 1",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HoopError {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("axiom {axiom} fails at {witness:?}")]
    AxiomViolation {
        axiom: HoopAxiom,
        witness: Vec<Elem>,
    },
    #[error("element {index} out of range for an algebra of order {order}")]
    IndexOutOfRange { index: Elem, order: usize },
    #[error("operation requires a basic hoop")]
    NotBasic,
    #[error("operation requires a bounded hoop")]
    NotBounded,
    #[error("search budget of {limit} nodes exceeded")]
    BudgetExceeded { limit: u64 },
}

/// A failing assignment for one of the variety identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// The flag this counterexample refutes.
    pub flag: &'static str,
    /// The identity that failed (for derived flags this may be a prerequisite).
    pub identity: &'static str,
    pub assignment: Vec<(&'static str, Elem)>,
}

/// Membership of a hoop in the subvarieties of interest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VarietyReport {
    pub is_hoop: bool,
    pub is_bounded: bool,
    pub is_basic: bool,
    pub is_wajsberg: bool,
    pub is_godel: bool,
    pub is_product: bool,
    /// Only meaningful for bounded hoops.
    pub is_involutive: Option<bool>,
    pub counterexamples: Vec<Counterexample>,
}

impl VarietyReport {
    pub fn counterexample(&self) -> Option<&Counterexample> {
        self.counterexamples.first()
    }

    pub fn in_variety(&self, v: Variety) -> bool {
        match v {
            Variety::Hoop => self.is_hoop,
            Variety::Basic => self.is_basic,
            Variety::Wajsberg => self.is_wajsberg,
            Variety::Godel => self.is_godel,
            Variety::Product => self.is_product,
        }
    }
}

/// Varieties of hoops used as filters throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variety {
    Hoop,
    Basic,
    Wajsberg,
    Godel,
    Product,
}

impl Variety {
    pub const ALL: [Variety; 5] = [
        Variety::Hoop,
        Variety::Basic,
        Variety::Wajsberg,
        Variety::Godel,
        Variety::Product,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variety::Hoop => "hoop",
            Variety::Basic => "basic",
            Variety::Wajsberg => "wajsberg",
            Variety::Godel => "godel",
            Variety::Product => "product",
        }
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Variety {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "hoop" | "hoops" => Ok(Variety::Hoop),
            "basic" => Ok(Variety::Basic),
            "wajsberg" => Ok(Variety::Wajsberg),
            "godel" | "gödel" => Ok(Variety::Godel),
            "product" => Ok(Variety::Product),
            other => Err(format!("unknown variety `{other}`")),
        }
    }
}

/// A validated finite hoop.
#[derive(Clone)]
pub struct FiniteHoop {
    order: usize,
    unit: Elem,
    mul: Vec<Elem>,
    imp: Vec<Elem>,
    bottom: Option<Elem>,
    report: OnceLock<VarietyReport>,
}

impl PartialEq for FiniteHoop {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.unit == other.unit
            && self.bottom == other.bottom
            && self.mul == other.mul
            && self.imp == other.imp
    }
}

impl Eq for FiniteHoop {}

impl std::hash::Hash for FiniteHoop {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.unit.hash(state);
        self.bottom.hash(state);
        self.mul.hash(state);
        self.imp.hash(state);
    }
}

impl fmt::Debug for FiniteHoop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteHoop")
            .field("order", &self.order)
            .field("unit", &self.unit)
            .field("bottom", &self.bottom)
            .field("mul", &self.mul_rows())
            .field("imp", &self.imp_rows())
            .finish()
    }
}

/// Iterates over all assignments of `arity` variables in `0..n`, last variable
/// fastest, and returns the first one rejected by `ok`.
pub(crate) fn first_failure(
    n: usize,
    arity: usize,
    mut ok: impl FnMut(&[Elem]) -> bool,
) -> Option<Vec<Elem>> {
    if n == 0 {
        return None;
    }
    let mut vars = vec![0; arity];
    loop {
        if !ok(&vars) {
            return Some(vars);
        }
        let mut i = arity;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            vars[i] += 1;
            if vars[i] < n {
                break;
            }
            vars[i] = 0;
        }
    }
}

impl FiniteHoop {
    /// Validates flat row-major tables and returns the hoop they describe.
    pub fn new(
        order: usize,
        unit: Elem,
        mul: Vec<Elem>,
        imp: Vec<Elem>,
        bottom: Option<Elem>,
    ) -> Result<Self, HoopError> {
        if order == 0 {
            return Err(HoopError::MalformedTable("order must be positive".into()));
        }
        for (name, table) in [("mul", &mul), ("imp", &imp)] {
            if table.len() != order * order {
                return Err(HoopError::MalformedTable(format!(
                    "{name} has {} entries, expected {}",
                    table.len(),
                    order * order
                )));
            }
            if let Some(pos) = table.iter().position(|&v| v >= order) {
                return Err(HoopError::MalformedTable(format!(
                    "{name}[{}][{}] = {} is out of range",
                    pos / order,
                    pos % order,
                    table[pos]
                )));
            }
        }
        for (name, c) in [("unit", Some(unit)), ("bottom", bottom)] {
            if let Some(c) = c {
                if c >= order {
                    return Err(HoopError::MalformedTable(format!(
                        "{name} {c} is out of range"
                    )));
                }
            }
        }
        let hoop = FiniteHoop {
            order,
            unit,
            mul,
            imp,
            bottom,
            report: OnceLock::new(),
        };
        if let Some((axiom, witness)) = hoop.first_axiom_violation() {
            return Err(HoopError::AxiomViolation { axiom, witness });
        }
        Ok(hoop)
    }

    /// Validates tables given as rows.
    pub fn from_rows(
        unit: Elem,
        mul: &[Vec<Elem>],
        imp: &[Vec<Elem>],
        bottom: Option<Elem>,
    ) -> Result<Self, HoopError> {
        let order = mul.len();
        if imp.len() != order {
            return Err(HoopError::MalformedTable(format!(
                "mul has {order} rows but imp has {}",
                imp.len()
            )));
        }
        for (name, rows) in [("mul", mul), ("imp", imp)] {
            if let Some(r) = rows.iter().position(|r| r.len() != order) {
                return Err(HoopError::MalformedTable(format!(
                    "{name} row {r} has {} entries, expected {order}",
                    rows[r].len()
                )));
            }
        }
        Self::new(order, unit, mul.concat(), imp.concat(), bottom)
    }

    fn first_axiom_violation(&self) -> Option<(HoopAxiom, Vec<Elem>)> {
        let n = self.order;
        let (m, i, u) = (|x, y| self.mul(x, y), |x, y| self.imp(x, y), self.unit);
        let checks: [(HoopAxiom, usize, &dyn Fn(&[Elem]) -> bool); 6] = [
            (HoopAxiom::Commutativity, 2, &|v| {
                m(v[0], v[1]) == m(v[1], v[0])
            }),
            (HoopAxiom::Associativity, 3, &|v| {
                m(m(v[0], v[1]), v[2]) == m(v[0], m(v[1], v[2]))
            }),
            (HoopAxiom::UnitLaw, 1, &|v| m(v[0], u) == v[0]),
            (HoopAxiom::SelfImplication, 1, &|v| i(v[0], v[0]) == u),
            (HoopAxiom::Divisibility, 2, &|v| {
                m(v[0], i(v[0], v[1])) == m(v[1], i(v[1], v[0]))
            }),
            (HoopAxiom::Residuation, 3, &|v| {
                i(m(v[0], v[1]), v[2]) == i(v[0], i(v[1], v[2]))
            }),
        ];
        for (axiom, arity, ok) in checks {
            if let Some(w) = first_failure(n, arity, ok) {
                return Some((axiom, w));
            }
        }
        if let Some(z) = self.bottom {
            if let Some(w) = first_failure(n, 1, |v| i(z, v[0]) == u) {
                return Some((HoopAxiom::BottomLeast, w));
            }
        }
        None
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn unit(&self) -> Elem {
        self.unit
    }

    #[inline]
    pub fn bottom(&self) -> Option<Elem> {
        self.bottom
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x * self.order + y]
    }

    #[inline]
    pub fn imp(&self, x: Elem, y: Elem) -> Elem {
        self.imp[x * self.order + y]
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn mul_table(&self) -> &[Elem] {
        &self.mul
    }

    pub fn imp_table(&self) -> &[Elem] {
        &self.imp
    }

    pub fn mul_rows(&self) -> Vec<Vec<Elem>> {
        self.mul.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn imp_rows(&self) -> Vec<Vec<Elem>> {
        self.imp.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn check_index(&self, x: Elem) -> Result<(), HoopError> {
        if x < self.order {
            Ok(())
        } else {
            Err(HoopError::IndexOutOfRange {
                index: x,
                order: self.order,
            })
        }
    }

    /// Natural order: `x <= y` iff `x -> y = 1`.
    pub fn leq(&self, x: Elem, y: Elem) -> Result<bool, HoopError> {
        self.check_index(x)?;
        self.check_index(y)?;
        Ok(self.le(x, y))
    }

    #[inline]
    pub(crate) fn le(&self, x: Elem, y: Elem) -> bool {
        self.imp(x, y) == self.unit
    }

    /// The divisibility form of the natural order: some `z` with `x = z*y`.
    pub fn divides(&self, x: Elem, y: Elem) -> bool {
        self.elements().any(|z| self.mul(z, y) == x)
    }

    /// `x ∧ y = x*(x->y)`.
    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.mul(x, self.imp(x, y))
    }

    /// `x ∨ y = ((x->y)->y) ∧ ((y->x)->x)`, the supremum in basic hoops.
    pub fn join(&self, x: Elem, y: Elem) -> Result<Elem, HoopError> {
        if !self.classify().is_basic {
            return Err(HoopError::NotBasic);
        }
        Ok(self.join_unchecked(x, y))
    }

    #[inline]
    pub(crate) fn join_unchecked(&self, x: Elem, y: Elem) -> Elem {
        let l = self.imp(self.imp(x, y), y);
        let r = self.imp(self.imp(y, x), x);
        self.meet(l, r)
    }

    /// `¬x = x -> 0`.
    pub fn neg(&self, x: Elem) -> Result<Elem, HoopError> {
        let z = self.bottom.ok_or(HoopError::NotBounded)?;
        Ok(self.imp(x, z))
    }

    /// The least element in the natural order.
    pub fn least(&self) -> Elem {
        self.elements()
            .find(|&x| self.elements().all(|y| self.le(x, y)))
            .expect("a finite hoop has a least element")
    }

    /// The same hoop with its least element declared as bottom.
    pub fn with_least_bottom(&self) -> FiniteHoop {
        let mut h = self.clone();
        h.bottom = Some(self.least());
        h.report = OnceLock::new();
        h
    }

    /// The same hoop with the bottom constant forgotten.
    pub fn without_bottom(&self) -> FiniteHoop {
        let mut h = self.clone();
        h.bottom = None;
        h.report = OnceLock::new();
        h
    }

    /// Variety membership, computed once and cached.
    pub fn classify(&self) -> &VarietyReport {
        self.report.get_or_init(|| classify_tables(self))
    }

    /// The subalgebra on `members` (sorted ascending), if it is closed under
    /// both operations and contains the unit. Elements are renumbered in
    /// ascending order of their index in `self`.
    pub fn subalgebra(&self, members: &[Elem], keep_bottom: bool) -> Option<FiniteHoop> {
        let mut pos = vec![usize::MAX; self.order];
        for (i, &m) in members.iter().enumerate() {
            pos[m] = i;
        }
        if pos[self.unit] == usize::MAX {
            return None;
        }
        let k = members.len();
        let mut mul = Vec::with_capacity(k * k);
        let mut imp = Vec::with_capacity(k * k);
        for &x in members {
            for &y in members {
                let (a, b) = (pos[self.mul(x, y)], pos[self.imp(x, y)]);
                if a == usize::MAX || b == usize::MAX {
                    return None;
                }
                mul.push(a);
                imp.push(b);
            }
        }
        let bottom = if keep_bottom {
            match self.bottom.map(|z| pos[z]) {
                Some(usize::MAX) => return None,
                b => b,
            }
        } else {
            None
        };
        FiniteHoop::new(k, pos[self.unit], mul, imp, bottom).ok()
    }

    /// Relabels the carrier: element `x` of `self` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[Elem]) -> FiniteHoop {
        let n = self.order;
        let mut mul = vec![0; n * n];
        let mut imp = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                mul[perm[x] * n + perm[y]] = perm[self.mul(x, y)];
                imp[perm[x] * n + perm[y]] = perm[self.imp(x, y)];
            }
        }
        FiniteHoop {
            order: n,
            unit: perm[self.unit],
            mul,
            imp,
            bottom: self.bottom.map(|z| perm[z]),
            report: self.report.clone(),
        }
    }

    /// Builds a hoop without validation. Callers must guarantee the axioms.
    pub(crate) fn from_trusted(
        order: usize,
        unit: Elem,
        mul: Vec<Elem>,
        imp: Vec<Elem>,
        bottom: Option<Elem>,
    ) -> FiniteHoop {
        debug_assert!(FiniteHoop::new(order, unit, mul.clone(), imp.clone(), bottom).is_ok());
        FiniteHoop {
            order,
            unit,
            mul,
            imp,
            bottom,
            report: OnceLock::new(),
        }
    }
}

fn classify_tables(h: &FiniteHoop) -> VarietyReport {
    let n = h.order();
    let (m, i) = (|x, y| h.mul(x, y), |x, y| h.imp(x, y));
    let u = h.unit();
    let mut cex = Vec::new();
    let mut record = |flag: &'static str,
                      identity: &'static str,
                      names: &[&'static str],
                      w: Option<Vec<Elem>>| {
        match w {
            None => true,
            Some(w) => {
                cex.push(Counterexample {
                    flag,
                    identity,
                    assignment: names.iter().copied().zip(w).collect(),
                });
                false
            }
        }
    };

    let basic_w = first_failure(n, 3, |v| {
        let (x, y, z) = (v[0], v[1], v[2]);
        i(i(i(x, y), z), i(i(i(y, x), z), z)) == u
    });
    let is_basic = record("basic", "basic", &["x", "y", "z"], basic_w.clone());

    let waj_w = first_failure(n, 2, |v| {
        let (x, y) = (v[0], v[1]);
        i(i(x, y), y) == i(i(y, x), x)
    });
    let is_wajsberg = record("wajsberg", "wajsberg", &["x", "y"], waj_w);

    let is_godel = if is_basic {
        let w = first_failure(n, 1, |v| m(v[0], v[0]) == v[0]);
        record("godel", "idempotency", &["x"], w)
    } else {
        record("godel", "basic", &["x", "y", "z"], basic_w.clone())
    };

    let is_product = if is_basic {
        let w = first_failure(n, 3, |v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            h.join_unchecked(i(y, z), i(i(y, m(x, y)), x)) == u
        });
        record("product", "product", &["x", "y", "z"], w)
    } else {
        record("product", "basic", &["x", "y", "z"], basic_w)
    };

    let is_involutive = h.bottom().map(|z| {
        let w = first_failure(n, 1, |v| i(i(v[0], z), z) == v[0]);
        record("involutive", "involutivity", &["x"], w)
    });

    VarietyReport {
        is_hoop: true,
        is_bounded: h.bottom().is_some(),
        is_basic,
        is_wajsberg,
        is_godel,
        is_product,
        is_involutive,
        counterexamples: cex,
    }
}

/// The `n`-element Łukasiewicz chain `{0, 1/(n-1), ..., 1}`; index `i` is `i/(n-1)`.
pub fn lukasiewicz_chain(n: usize) -> FiniteHoop {
    assert!(n >= 1, "a chain needs at least one element");
    let top = n - 1;
    let mut mul = Vec::with_capacity(n * n);
    let mut imp = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            mul.push((x + y).saturating_sub(top));
            imp.push((top - x + y).min(top));
        }
    }
    FiniteHoop::new(n, top, mul, imp, Some(0)).expect("Łukasiewicz chain is a hoop")
}

/// The `n`-element Gödel chain with `x*y = min(x,y)`.
pub fn godel_chain(n: usize) -> FiniteHoop {
    assert!(n >= 1, "a chain needs at least one element");
    let top = n - 1;
    let mut mul = Vec::with_capacity(n * n);
    let mut imp = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            mul.push(x.min(y));
            imp.push(if x <= y { top } else { y });
        }
    }
    FiniteHoop::new(n, top, mul, imp, Some(0)).expect("Gödel chain is a hoop")
}

/// The one-element hoop.
pub fn terminal() -> FiniteHoop {
    FiniteHoop::from_trusted(1, 0, vec![0], vec![0], None)
}

/// Componentwise product; the pair `(a, b)` has index `a * |H2| + b`.
pub fn direct_product(h1: &FiniteHoop, h2: &FiniteHoop) -> FiniteHoop {
    let (n1, n2) = (h1.order(), h2.order());
    let n = n1 * n2;
    let idx = |a: Elem, b: Elem| a * n2 + b;
    let mut mul = vec![0; n * n];
    let mut imp = vec![0; n * n];
    for a in 0..n1 {
        for b in 0..n2 {
            for c in 0..n1 {
                for d in 0..n2 {
                    let (p, q) = (idx(a, b), idx(c, d));
                    mul[p * n + q] = idx(h1.mul(a, c), h2.mul(b, d));
                    imp[p * n + q] = idx(h1.imp(a, c), h2.imp(b, d));
                }
            }
        }
    }
    let bottom = match (h1.bottom(), h2.bottom()) {
        (Some(z1), Some(z2)) => Some(idx(z1, z2)),
        _ => None,
    };
    FiniteHoop::from_trusted(n, idx(h1.unit(), h2.unit()), mul, imp, bottom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l3() -> FiniteHoop {
        FiniteHoop::from_rows(
            2,
            &[vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 2]],
            &[vec![2, 2, 2], vec![1, 2, 2], vec![0, 1, 2]],
            Some(0),
        )
        .unwrap()
    }

    #[test]
    fn terminal_is_valid_and_in_every_variety() {
        let t = FiniteHoop::new(1, 0, vec![0], vec![0], None).unwrap();
        let r = t.classify();
        assert!(r.is_basic && r.is_wajsberg && r.is_godel && r.is_product);
        assert!(r.counterexamples.is_empty());
        assert_eq!(t, terminal());
    }

    #[test]
    fn l3_tables_match_chain() {
        assert_eq!(l3(), lukasiewicz_chain(3));
    }

    #[test]
    fn mutated_l3_violates_divisibility() {
        let mut mul = lukasiewicz_chain(3).mul_table().to_vec();
        mul[4] = 1;
        let err = FiniteHoop::new(3, 2, mul, l3().imp_table().to_vec(), Some(0)).unwrap_err();
        match err {
            HoopError::AxiomViolation { axiom, witness } => {
                assert_eq!(axiom, HoopAxiom::Divisibility);
                // a*(a->0) = a*a = a but 0*(0->a) = 0
                assert_eq!(witness, vec![0, 1]);
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn malformed_tables_are_rejected() {
        let e = FiniteHoop::new(2, 1, vec![0, 0, 0], vec![1, 1, 0, 1], None).unwrap_err();
        assert!(matches!(e, HoopError::MalformedTable(_)));
        let e = FiniteHoop::new(2, 1, vec![0, 0, 0, 5], vec![1, 1, 0, 1], None).unwrap_err();
        assert!(matches!(e, HoopError::MalformedTable(_)));
        let e = FiniteHoop::new(2, 3, vec![0, 0, 0, 1], vec![1, 1, 0, 1], None).unwrap_err();
        assert!(matches!(e, HoopError::MalformedTable(_)));
    }

    #[test]
    fn bottom_must_be_least() {
        let c2 = lukasiewicz_chain(2);
        let e = FiniteHoop::new(
            2,
            1,
            c2.mul_table().to_vec(),
            c2.imp_table().to_vec(),
            Some(1),
        )
        .unwrap_err();
        assert!(matches!(
            e,
            HoopError::AxiomViolation {
                axiom: HoopAxiom::BottomLeast,
                ..
            }
        ));
    }

    #[test]
    fn order_examples() {
        let l3 = l3();
        for x in l3.elements() {
            assert!(l3.leq(x, l3.unit()).unwrap());
        }
        assert!(!l3.leq(1, 0).unwrap());
        assert!(l3.leq(0, 1).unwrap());
        assert!(matches!(
            l3.leq(0, 3),
            Err(HoopError::IndexOutOfRange { index: 3, .. })
        ));
    }

    #[test]
    fn meet_and_join_examples() {
        let l3 = l3();
        for x in l3.elements() {
            assert_eq!(l3.meet(x, l3.unit()), x);
        }
        // a*(a->a) = a*1 = a
        assert_eq!(l3.meet(1, 1), 1);
        assert_eq!(godel_chain(3).join(1, 0).unwrap(), 1);
    }

    #[test]
    fn join_needs_basic() {
        // The five-element non-prelinear hoop is built in the enumeration tests;
        // here we only check the guard on a basic hoop passes.
        assert!(lukasiewicz_chain(4).join(1, 2).is_ok());
    }

    #[test]
    fn classify_examples() {
        let r = l3().classify().clone();
        assert!(r.is_wajsberg && r.is_basic && !r.is_godel);
        let g = r
            .counterexamples
            .iter()
            .find(|c| c.flag == "godel")
            .unwrap();
        assert_eq!(g.assignment, vec![("x", 1)]);

        let r = godel_chain(3).classify().clone();
        assert!(r.is_godel && r.is_basic && !r.is_wajsberg);
        let w = r
            .counterexamples
            .iter()
            .find(|c| c.flag == "wajsberg")
            .unwrap();
        // first failing pair in lexicographic order; its mirror (a, 0) fails too
        assert_eq!(w.assignment, vec![("x", 0), ("y", 1)]);
    }

    #[test]
    fn chains_are_hoops_up_to_16() {
        for n in 1..=16 {
            let l = lukasiewicz_chain(n);
            let g = godel_chain(n);
            assert!(l.classify().is_wajsberg && l.classify().is_bounded);
            assert!(g.classify().is_godel && g.classify().is_bounded);
            assert_eq!(l.classify().is_involutive, Some(true));
        }
    }

    #[test]
    fn products_classify_as_conjunctions() {
        let c2 = lukasiewicz_chain(2);
        let p = direct_product(&c2, &c2);
        assert_eq!(p.order(), 4);
        let r = p.classify();
        assert!(r.is_bounded && r.is_wajsberg);

        // the two-element chain is Boolean, so G3 x C2 stays Gödel
        let q = direct_product(&godel_chain(3), &c2);
        let r = q.classify();
        assert!(r.is_basic && r.is_godel && !r.is_wajsberg);

        let q = direct_product(&godel_chain(3), &lukasiewicz_chain(3));
        let r = q.classify();
        assert!(r.is_basic && !r.is_godel && !r.is_wajsberg);
    }

    #[test]
    fn least_element() {
        let h = direct_product(&godel_chain(3), &lukasiewicz_chain(2)).without_bottom();
        assert_eq!(h.least(), 0);
        assert_eq!(h.with_least_bottom().bottom(), Some(0));
    }
}
