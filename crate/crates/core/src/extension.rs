//! Split extensions `X --k--> A <--s-- --p--> B` of finite hoops.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::hoop::{Elem, FiniteHoop, HoopError};
use crate::morph::{is_homomorphism, HomFailure, Homomorphism, MorphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("{map} is not a homomorphism: fails at {failure:?}")]
    NotAHomomorphism {
        map: &'static str,
        failure: HomFailure,
    },
    #[error(transparent)]
    Morph(#[from] MorphError),
    #[error(transparent)]
    Hoop(#[from] HoopError),
    #[error("p(s({b})) = {got}, expected {b}")]
    SectionFailure { b: Elem, got: Elem },
    #[error("k is not injective: k({x1}) = k({x2})")]
    NotInjective { x1: Elem, x2: Elem },
    #[error("image of k differs from the kernel of p at {a}")]
    KernelMismatch { a: Elem },
    #[error("section is not strong: a = {a}, b = {b}")]
    NotStrong { a: Elem, b: Elem },
    #[error("extensions do not share the same kernel and base")]
    DifferentEnds,
    #[error("semidirect bijection failed: {0}")]
    Bijection(String),
}

/// A validated split extension. `k`, `p`, `s` are index maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitExtension {
    x: Arc<FiniteHoop>,
    a: Arc<FiniteHoop>,
    b: Arc<FiniteHoop>,
    k: Vec<Elem>,
    p: Vec<Elem>,
    s: Vec<Elem>,
    k_inv: Vec<Option<Elem>>,
    strong_witness: Option<(Elem, Elem)>,
}

impl SplitExtension {
    pub fn new(
        x: Arc<FiniteHoop>,
        a: Arc<FiniteHoop>,
        b: Arc<FiniteHoop>,
        k: Vec<Elem>,
        p: Vec<Elem>,
        s: Vec<Elem>,
    ) -> Result<Self, ExtensionError> {
        for (name, src, tgt, map) in [("k", &x, &a, &k), ("p", &a, &b, &p), ("s", &b, &a, &s)] {
            if let Some(failure) = is_homomorphism(src, tgt, map, false)? {
                return Err(ExtensionError::NotAHomomorphism { map: name, failure });
            }
        }
        for bb in b.elements() {
            let got = p[s[bb]];
            if got != bb {
                return Err(ExtensionError::SectionFailure { b: bb, got });
            }
        }
        let mut k_inv = vec![None; a.order()];
        for xx in x.elements() {
            if let Some(prev) = k_inv[k[xx]] {
                return Err(ExtensionError::NotInjective { x1: prev, x2: xx });
            }
            k_inv[k[xx]] = Some(xx);
        }
        for aa in a.elements() {
            if k_inv[aa].is_some() != (p[aa] == b.unit()) {
                return Err(ExtensionError::KernelMismatch { a: aa });
            }
        }
        let strong_witness = strong_failure(&a, &b, &p, &s);
        Ok(SplitExtension {
            x,
            a,
            b,
            k,
            p,
            s,
            k_inv,
            strong_witness,
        })
    }

    /// `X -> X×B <- B` with `k(x) = (x,1)`, `p` the projection, `s(b) = (1,b)`.
    pub fn direct_product(x: Arc<FiniteHoop>, b: Arc<FiniteHoop>) -> Self {
        let a = Arc::new(crate::hoop::direct_product(&x, &b));
        let nb = b.order();
        let k = x.elements().map(|xx| xx * nb + b.unit()).collect();
        let p = a.elements().map(|i| i % nb).collect();
        let s = b.elements().map(|bb| x.unit() * nb + bb).collect();
        Self::new(x, a, b, k, p, s).expect("direct product is a split extension")
    }

    pub fn x(&self) -> &Arc<FiniteHoop> {
        &self.x
    }

    pub fn a(&self) -> &Arc<FiniteHoop> {
        &self.a
    }

    pub fn b(&self) -> &Arc<FiniteHoop> {
        &self.b
    }

    pub fn k(&self) -> &[Elem] {
        &self.k
    }

    pub fn p(&self) -> &[Elem] {
        &self.p
    }

    pub fn s(&self) -> &[Elem] {
        &self.s
    }

    /// Inverse of `k` on its image.
    pub fn k_inv(&self, a: Elem) -> Option<Elem> {
        self.k_inv[a]
    }

    pub fn is_strong(&self) -> bool {
        self.strong_witness.is_none()
    }

    /// `s(p(a))`.
    #[inline]
    pub fn sp(&self, a: Elem) -> Elem {
        self.s[self.p[a]]
    }

    pub fn k_hom(&self) -> Homomorphism {
        Homomorphism::new(self.x.clone(), self.a.clone(), self.k.clone()).expect("validated")
    }

    pub fn p_hom(&self) -> Homomorphism {
        Homomorphism::new(self.a.clone(), self.b.clone(), self.p.clone()).expect("validated")
    }

    pub fn s_hom(&self) -> Homomorphism {
        Homomorphism::new(self.b.clone(), self.a.clone(), self.s.clone()).expect("validated")
    }
}

fn strong_failure(a: &FiniteHoop, b: &FiniteHoop, p: &[Elem], s: &[Elem]) -> Option<(Elem, Elem)> {
    for aa in a.elements() {
        for bb in b.elements() {
            if a.imp(aa, s[bb]) != a.imp(s[p[aa]], s[bb]) {
                return Some((aa, bb));
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongSectionReport {
    pub strong: bool,
    /// First `(a, b)` with `a -> s(b) != sp(a) -> s(b)`.
    pub witness: Option<(Elem, Elem)>,
    /// Whether `k(x) -> s(b) = s(b)` for all `x`, `b`.
    pub kernel_form: bool,
}

pub fn has_strong_section(e: &SplitExtension) -> StrongSectionReport {
    let kernel_form = e.x.elements().all(|xx| {
        e.b.elements()
            .all(|bb| e.a.imp(e.k[xx], e.s[bb]) == e.s[bb])
    });
    StrongSectionReport {
        strong: e.is_strong(),
        witness: e.strong_witness,
        kernel_form,
    }
}

/// `psi(a) = (a -> sp(a), ((a -> sp(a)) -> sp(a)) -> a, p(a))`, first two
/// coordinates read back through `k`.
pub fn psi(e: &SplitExtension, a: Elem) -> (Elem, Elem, Elem) {
    let h = &e.a;
    let sp = e.sp(a);
    let c1 = h.imp(a, sp);
    let c2 = h.imp(h.imp(c1, sp), a);
    let back = |c: Elem| e.k_inv(c).expect("lies in the kernel of p");
    (back(c1), back(c2), e.p[a])
}

/// `phi(x, x', b) = (k(x) -> s(b)) * k(x')`.
pub fn phi(e: &SplitExtension, x: Elem, x2: Elem, b: Elem) -> Elem {
    let h = &e.a;
    h.mul(h.imp(e.k[x], e.s[b]), e.k[x2])
}

/// The unique candidate morphism of extensions `e1 -> e2`, verified.
pub fn iso_extensions(e1: &SplitExtension, e2: &SplitExtension) -> Option<Vec<Elem>> {
    if *e1.x != *e2.x || *e1.b != *e2.b || e1.a.order() != e2.a.order() {
        return None;
    }
    let map: Vec<Elem> =
        e1.a.elements()
            .map(|a| {
                let (x, x2, b) = psi(e1, a);
                phi(e2, x, x2, b)
            })
            .collect();
    let commutes = e1.x.elements().all(|x| map[e1.k[x]] == e2.k[x])
        && e1.b.elements().all(|b| map[e1.s[b]] == e2.s[b])
        && e1.a.elements().all(|a| e2.p[map[a]] == e1.p[a]);
    let hom = is_homomorphism(&e1.a, &e2.a, &map, false).ok()?.is_none();
    let mut seen = vec![false; map.len()];
    let bijective = map.iter().all(|&m| !std::mem::replace(&mut seen[m], true));
    (commutes && hom && bijective).then_some(map)
}

/// Change of base along `phi: B' -> B`. The carrier lists the pairs
/// `(a, b')` with `p(a) = phi(b')` in lexicographic order.
pub fn pullback(e: &SplitExtension, f: &Homomorphism) -> Result<SplitExtension, ExtensionError> {
    if **f.target() != *e.b {
        return Err(ExtensionError::DifferentEnds);
    }
    let b2 = f.source().clone();
    let pairs: Vec<(Elem, Elem)> =
        e.a.elements()
            .flat_map(|a| b2.elements().map(move |bb| (a, bb)))
            .filter(|&(a, bb)| e.p[a] == f.apply(bb))
            .collect();
    let index: HashMap<(Elem, Elem), Elem> =
        pairs.iter().enumerate().map(|(i, &pr)| (pr, i)).collect();
    let m = pairs.len();
    let mut mul = Vec::with_capacity(m * m);
    let mut imp = Vec::with_capacity(m * m);
    for &(a, bb) in &pairs {
        for &(c, dd) in &pairs {
            mul.push(index[&(e.a.mul(a, c), b2.mul(bb, dd))]);
            imp.push(index[&(e.a.imp(a, c), b2.imp(bb, dd))]);
        }
    }
    let bottom = match (e.a.bottom(), b2.bottom()) {
        (Some(z), Some(w)) => index.get(&(z, w)).copied(),
        _ => None,
    };
    let unit = index[&(e.a.unit(), b2.unit())];
    let a2 = Arc::new(FiniteHoop::new(m, unit, mul, imp, bottom)?);
    let k =
        e.x.elements()
            .map(|x| index[&(e.k[x], b2.unit())])
            .collect();
    let p = pairs.iter().map(|&(_, bb)| bb).collect();
    let s = b2
        .elements()
        .map(|bb| index[&(e.s[f.apply(bb)], bb)])
        .collect();
    SplitExtension::new(e.x.clone(), a2, b2, k, p, s)
}

/// The carrier `Y ⊆ X×X×B` of the general semidirect product together with
/// the two bijections and the operation tables computed on `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralSemidirect {
    pub carrier: Vec<(Elem, Elem, Elem)>,
    /// `phi` on carrier indices, into `A`.
    pub phi: Vec<Elem>,
    /// `psi` from `A` into carrier indices.
    pub psi: Vec<usize>,
    /// `omega_Y` for `*` and `->` by the generic term formula, on carrier indices.
    pub omega_mul: Vec<usize>,
    pub omega_imp: Vec<usize>,
    /// The same operations by the closed formulas for hoops.
    pub explicit_mul: Vec<usize>,
    pub explicit_imp: Vec<usize>,
}

impl GeneralSemidirect {
    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemidirectReport {
    pub carrier_size: usize,
    pub middle_size: usize,
    pub phi_psi_identity: bool,
    pub psi_phi_identity: bool,
    /// The defining equations select exactly the fixed points of `psi ∘ phi`.
    pub equations_match_fixed_points: bool,
    /// `psi(a1 op a2) = omega_Y(psi a1, psi a2)` for both operations.
    pub omega_reproduces_middle: bool,
    pub explicit_agrees_with_omega: bool,
    /// For strong extensions: the first coordinate is always the unit and the
    /// third-coordinate condition reduces to `s(b) -> (s(b)*x') = x'`.
    pub strong_reduction: Option<bool>,
}

impl SemidirectReport {
    pub fn ok(&self) -> bool {
        self.phi_psi_identity
            && self.psi_phi_identity
            && self.equations_match_fixed_points
            && self.omega_reproduces_middle
            && self.explicit_agrees_with_omega
            && self.strong_reduction != Some(false)
    }
}

/// Builds `Y` from its two defining equations and the operations on it.
pub fn general_semidirect(e: &SplitExtension) -> Result<GeneralSemidirect, ExtensionError> {
    let (h, x, b) = (&e.a, &e.x, &e.b);
    let mut carrier = Vec::new();
    for x1 in x.elements() {
        for x2 in x.elements() {
            for bb in b.elements() {
                let sb = e.s[bb];
                let t = phi(e, x1, x2, bb);
                let eq1 = h.imp(t, sb) == e.k[x1];
                let eq2 = h.imp(h.imp(h.imp(t, sb), sb), t) == e.k[x2];
                if eq1 && eq2 {
                    carrier.push((x1, x2, bb));
                }
            }
        }
    }
    let index: HashMap<(Elem, Elem, Elem), usize> =
        carrier.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let phi_tab: Vec<Elem> = carrier.iter().map(|&(a, c, bb)| phi(e, a, c, bb)).collect();
    let mut psi_tab = Vec::with_capacity(h.order());
    for a in h.elements() {
        let t = psi(e, a);
        match index.get(&t) {
            Some(&i) => psi_tab.push(i),
            None => {
                return Err(ExtensionError::Bijection(format!(
                    "psi({a}) = {t:?} is not in Y"
                )))
            }
        }
    }
    for (i, &a) in phi_tab.iter().enumerate() {
        if psi_tab[a] != i {
            return Err(ExtensionError::Bijection(format!(
                "psi(phi({:?})) differs",
                carrier[i]
            )));
        }
    }
    for a in h.elements() {
        if phi_tab[psi_tab[a]] != a {
            return Err(ExtensionError::Bijection(format!("phi(psi({a})) != {a}")));
        }
    }

    let lookup = |t: (Elem, Elem, Elem)| -> Result<usize, ExtensionError> {
        index
            .get(&t)
            .copied()
            .ok_or_else(|| ExtensionError::Bijection(format!("{t:?} is not in Y")))
    };
    // alpha applied to (c, t): (c -> t, ((c -> t) -> t) -> c) read back through k
    let alpha = |c: Elem, t: Elem| -> Result<(Elem, Elem), ExtensionError> {
        let a1 = h.imp(c, t);
        let a2 = h.imp(h.imp(a1, t), c);
        match (e.k_inv(a1), e.k_inv(a2)) {
            (Some(u), Some(v)) => Ok((u, v)),
            _ => Err(ExtensionError::Bijection(format!(
                "alpha({c}, {t}) leaves the kernel"
            ))),
        }
    };
    let m = carrier.len();
    let mut omega_mul = Vec::with_capacity(m * m);
    let mut omega_imp = Vec::with_capacity(m * m);
    let mut explicit_mul = Vec::with_capacity(m * m);
    let mut explicit_imp = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            let (b1, b2) = (carrier[i].2, carrier[j].2);
            let (t1, t2) = (phi_tab[i], phi_tab[j]);
            // generic formula: alpha(omega_A(theta(y1), theta(y2)), omega_A(s(b1), s(b2)))
            let (u, v) = alpha(h.mul(t1, t2), h.mul(e.s[b1], e.s[b2]))?;
            omega_mul.push(lookup((u, v, b.mul(b1, b2)))?);
            let (u, v) = alpha(h.imp(t1, t2), h.imp(e.s[b1], e.s[b2]))?;
            omega_imp.push(lookup((u, v, b.imp(b1, b2)))?);

            // closed formulas with s(b*b') and s(b->b')
            let sm = e.s[b.mul(b1, b2)];
            let c = h.mul(t1, t2);
            let first = h.imp(c, sm);
            let second = h.imp(h.imp(first, sm), c);
            let pair = (e.k_inv(first), e.k_inv(second));
            let (Some(u), Some(v)) = pair else {
                return Err(ExtensionError::Bijection(
                    "closed product leaves the kernel".into(),
                ));
            };
            explicit_mul.push(lookup((u, v, b.mul(b1, b2)))?);
            let si = e.s[b.imp(b1, b2)];
            let c = h.imp(t1, t2);
            let first = h.imp(c, si);
            let second = h.imp(h.imp(first, si), c);
            let pair = (e.k_inv(first), e.k_inv(second));
            let (Some(u), Some(v)) = pair else {
                return Err(ExtensionError::Bijection(
                    "closed implication leaves the kernel".into(),
                ));
            };
            explicit_imp.push(lookup((u, v, b.imp(b1, b2)))?);
        }
    }
    Ok(GeneralSemidirect {
        carrier,
        phi: phi_tab,
        psi: psi_tab,
        omega_mul,
        omega_imp,
        explicit_mul,
        explicit_imp,
    })
}

/// Runs every check on the general semidirect product of `e`.
pub fn semidirect_report(e: &SplitExtension) -> Result<SemidirectReport, ExtensionError> {
    let g = general_semidirect(e)?;
    let h = &e.a;
    let n = h.order();
    let m = g.len();
    let phi_psi_identity = h.elements().all(|a| g.phi[g.psi[a]] == a);
    let psi_phi_identity = (0..m).all(|i| g.psi[g.phi[i]] == i);
    let fixed: Vec<(Elem, Elem, Elem)> =
        e.x.elements()
            .flat_map(|x1| e.x.elements().map(move |x2| (x1, x2)))
            .flat_map(|(x1, x2)| e.b.elements().map(move |bb| (x1, x2, bb)))
            .filter(|&(x1, x2, bb)| psi(e, phi(e, x1, x2, bb)) == (x1, x2, bb))
            .collect();
    let equations_match_fixed_points = fixed == g.carrier;
    let mut omega_reproduces_middle = m == n;
    for a1 in h.elements() {
        for a2 in h.elements() {
            let (i, j) = (g.psi[a1], g.psi[a2]);
            omega_reproduces_middle &= g.omega_mul[i * m + j] == g.psi[h.mul(a1, a2)];
            omega_reproduces_middle &= g.omega_imp[i * m + j] == g.psi[h.imp(a1, a2)];
        }
    }
    let explicit_agrees_with_omega = g.explicit_mul == g.omega_mul && g.explicit_imp == g.omega_imp;
    let strong_reduction = e.is_strong().then(|| {
        let u = e.x.unit();
        let reduced: Vec<(Elem, Elem, Elem)> =
            e.x.elements()
                .flat_map(|x2| e.b.elements().map(move |bb| (x2, bb)))
                .filter(|&(x2, bb)| {
                    let sb = e.s[bb];
                    h.imp(sb, h.mul(sb, e.k[x2])) == e.k[x2]
                })
                .map(|(x2, bb)| (u, x2, bb))
                .collect();
        let mut sorted = reduced;
        sorted.sort_unstable();
        g.carrier.iter().all(|t| t.0 == u) && sorted == g.carrier
    });
    Ok(SemidirectReport {
        carrier_size: m,
        middle_size: n,
        phi_psi_identity,
        psi_phi_identity,
        equations_match_fixed_points,
        omega_reproduces_middle,
        explicit_agrees_with_omega,
        strong_reduction,
    })
}

/// `D(A) --> A <--> MV(A)` with `p = ¬¬`.
pub fn regular_dense_decomposition(a: &Arc<FiniteHoop>) -> Result<SplitExtension, ExtensionError> {
    a.bottom().ok_or(HoopError::NotBounded)?;
    if !a.classify().is_basic {
        return Err(HoopError::NotBasic.into());
    }
    let nn: Vec<Elem> = a
        .elements()
        .map(|x| a.neg(a.neg(x).expect("bounded")).expect("bounded"))
        .collect();
    let regular: Vec<Elem> = a.elements().filter(|&x| nn[x] == x).collect();
    let dense: Vec<Elem> = a.elements().filter(|&x| nn[x] == a.unit()).collect();
    let mv = a
        .subalgebra(&regular, true)
        .ok_or_else(|| ExtensionError::Bijection("regular elements are not a subalgebra".into()))?;
    let d = a
        .subalgebra(&dense, false)
        .ok_or_else(|| ExtensionError::Bijection("dense elements are not a subalgebra".into()))?;
    let pos = |set: &[Elem], v: Elem| set.binary_search(&v).expect("member");
    let p = a.elements().map(|x| pos(&regular, nn[x])).collect();
    let e = SplitExtension::new(
        Arc::new(d),
        a.clone(),
        Arc::new(mv),
        dense.clone(),
        p,
        regular.clone(),
    )?;
    if let Some((aa, bb)) = e.strong_witness {
        return Err(ExtensionError::NotStrong { a: aa, b: bb });
    }
    Ok(e)
}
