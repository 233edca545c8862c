//! Homomorphisms, filters, congruences and quotients.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::hoop::{Elem, FiniteHoop, HoopError};

/// Where a map first fails to be a homomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HomFailure {
    Unit,
    Bottom,
    Mul(Elem, Elem),
    Imp(Elem, Elem),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphError {
    #[error("map has {found} entries, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error(transparent)]
    Hoop(#[from] HoopError),
    #[error("not a homomorphism: fails at {0:?}")]
    NotAHomomorphism(HomFailure),
    #[error("not a filter: {0}")]
    NotAFilter(String),
    #[error("not a congruence: {0}")]
    NotACongruence(String),
}

/// Checks that `map` preserves the unit, `*`, `->` and, when `bounded` is set,
/// the bottom. Returns the first failure in the order unit, bottom, then `*`
/// and `->` over pairs in lexicographic order.
pub fn is_homomorphism(
    source: &FiniteHoop,
    target: &FiniteHoop,
    map: &[Elem],
    bounded: bool,
) -> Result<Option<HomFailure>, MorphError> {
    if map.len() != source.order() {
        return Err(MorphError::WrongLength {
            expected: source.order(),
            found: map.len(),
        });
    }
    for &y in map {
        target.check_index(y)?;
    }
    if map[source.unit()] != target.unit() {
        return Ok(Some(HomFailure::Unit));
    }
    if bounded {
        match (source.bottom(), target.bottom()) {
            (Some(z), Some(w)) if map[z] == w => {}
            _ => return Ok(Some(HomFailure::Bottom)),
        }
    }
    for x in source.elements() {
        for y in source.elements() {
            if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                return Ok(Some(HomFailure::Mul(x, y)));
            }
        }
    }
    for x in source.elements() {
        for y in source.elements() {
            if map[source.imp(x, y)] != target.imp(map[x], map[y]) {
                return Ok(Some(HomFailure::Imp(x, y)));
            }
        }
    }
    Ok(None)
}

/// A validated homomorphism of hoops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: Arc<FiniteHoop>,
    target: Arc<FiniteHoop>,
    map: Vec<Elem>,
}

impl Homomorphism {
    pub fn new(
        source: Arc<FiniteHoop>,
        target: Arc<FiniteHoop>,
        map: Vec<Elem>,
    ) -> Result<Self, MorphError> {
        if let Some(w) = is_homomorphism(&source, &target, &map, false)? {
            return Err(MorphError::NotAHomomorphism(w));
        }
        Ok(Homomorphism {
            source,
            target,
            map,
        })
    }

    pub fn identity(h: Arc<FiniteHoop>) -> Self {
        let map = h.elements().collect();
        Homomorphism {
            source: h.clone(),
            target: h,
            map,
        }
    }

    /// The unique homomorphism from the one-element hoop.
    pub fn from_terminal(target: Arc<FiniteHoop>) -> Self {
        let map = vec![target.unit()];
        Homomorphism {
            source: Arc::new(crate::hoop::terminal()),
            target,
            map,
        }
    }

    pub fn source(&self) -> &Arc<FiniteHoop> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteHoop> {
        &self.target
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism, MorphError> {
        if *self.target != *other.source {
            return Err(MorphError::WrongLength {
                expected: self.target.order(),
                found: other.source.order(),
            });
        }
        Ok(Homomorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let set: BTreeSet<_> = self.map.iter().collect();
        set.len() == self.map.len()
    }

    pub fn is_surjective(&self) -> bool {
        let set: BTreeSet<_> = self.map.iter().collect();
        set.len() == self.target.order()
    }
}

/// An upward-closed submonoid, stored as a sorted member list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Filter {
    members: Vec<Elem>,
}

impl Filter {
    pub fn new(h: &FiniteHoop, members: &[Elem]) -> Result<Self, MorphError> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            h.check_index(m)?;
        }
        if let Some(reason) = filter_violation(h, &mask(h.order(), &members)) {
            return Err(MorphError::NotAFilter(reason));
        }
        Ok(Filter { members })
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn mask(n: usize, members: &[Elem]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &x in members {
        m[x] = true;
    }
    m
}

fn filter_violation(h: &FiniteHoop, inside: &[bool]) -> Option<String> {
    if !inside[h.unit()] {
        return Some("does not contain the unit".into());
    }
    for x in h.elements().filter(|&x| inside[x]) {
        for y in h.elements() {
            if inside[y] && !inside[h.mul(x, y)] {
                return Some(format!("not closed under * at ({x}, {y})"));
            }
            if h.le(x, y) && !inside[y] {
                return Some(format!("not upward closed: {x} <= {y}"));
            }
        }
    }
    None
}

/// The preimage of the target's unit.
pub fn kernel(f: &Homomorphism) -> Filter {
    let members: Vec<Elem> = f
        .source
        .elements()
        .filter(|&x| f.map[x] == f.target.unit())
        .collect();
    debug_assert!(filter_violation(&f.source, &mask(f.source.order(), &members)).is_none());
    Filter { members }
}

/// The smallest filter containing `gens`.
pub fn generated_filter(h: &FiniteHoop, gens: &[Elem]) -> Filter {
    let mut inside = vec![false; h.order()];
    inside[h.unit()] = true;
    for &g in gens {
        inside[g] = true;
    }
    loop {
        let mut changed = false;
        for x in h.elements() {
            if !inside[x] {
                continue;
            }
            for y in h.elements() {
                let xy = h.mul(x, y);
                if inside[y] && !inside[xy] {
                    inside[xy] = true;
                    changed = true;
                }
                if h.le(x, y) && !inside[y] {
                    inside[y] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Filter {
        members: h.elements().filter(|&x| inside[x]).collect(),
    }
}

fn sort_filters(mut fs: Vec<Filter>) -> Vec<Filter> {
    fs.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.members.cmp(&b.members))
    });
    fs
}

/// All filters by raw subset scan.
pub fn filters_by_subsets(h: &FiniteHoop) -> Vec<Filter> {
    let n = h.order();
    assert!(
        n < usize::BITS as usize,
        "subset scan needs n < {}",
        usize::BITS
    );
    let mut out = Vec::new();
    for bits in 0usize..(1 << n) {
        let inside: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
        if filter_violation(h, &inside).is_none() {
            out.push(Filter {
                members: (0..n).filter(|&i| inside[i]).collect(),
            });
        }
    }
    sort_filters(out)
}

/// All filters by closing generated filters under adding one element.
pub fn filters_by_closure(h: &FiniteHoop) -> Vec<Filter> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![generated_filter(h, &[])];
    while let Some(f) = stack.pop() {
        if !seen.insert(f.clone()) {
            continue;
        }
        for x in h.elements().filter(|&x| !f.contains(x)) {
            let mut gens = f.members.clone();
            gens.push(x);
            let g = generated_filter(h, &gens);
            if !seen.contains(&g) {
                stack.push(g);
            }
        }
    }
    sort_filters(seen.into_iter().collect())
}

/// All filters of `h`, sorted by size and then by members.
pub fn filters(h: &FiniteHoop) -> Vec<Filter> {
    if h.order() <= 6 {
        filters_by_subsets(h)
    } else {
        filters_by_closure(h)
    }
}

/// A partition of the carrier, stored as the class index of each element.
/// Classes are numbered in order of their smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Congruence {
    class_of: Vec<usize>,
}

impl Congruence {
    /// Builds a congruence from class labels, checking compatibility.
    pub fn new(h: &FiniteHoop, labels: &[usize]) -> Result<Self, MorphError> {
        if labels.len() != h.order() {
            return Err(MorphError::WrongLength {
                expected: h.order(),
                found: labels.len(),
            });
        }
        let c = Congruence {
            class_of: normalize(labels),
        };
        if let Some(reason) = c.incompatibility(h) {
            return Err(MorphError::NotACongruence(reason));
        }
        Ok(c)
    }

    pub fn class_of(&self, x: Elem) -> usize {
        self.class_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn num_classes(&self) -> usize {
        self.class_of.iter().max().map_or(0, |m| m + 1)
    }

    pub fn classes(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    pub fn related(&self, x: Elem, y: Elem) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    fn incompatibility(&self, h: &FiniteHoop) -> Option<String> {
        for x in h.elements() {
            for y in h.elements().filter(|&y| self.related(x, y)) {
                for z in h.elements() {
                    for (name, a, b) in [
                        ("*", h.mul(x, z), h.mul(y, z)),
                        ("->", h.imp(x, z), h.imp(y, z)),
                        ("->", h.imp(z, x), h.imp(z, y)),
                    ] {
                        if !self.related(a, b) {
                            return Some(format!("{x} ~ {y} but {name} with {z} separates them"));
                        }
                    }
                }
            }
        }
        None
    }
}

fn normalize(labels: &[usize]) -> Vec<usize> {
    let mut rename = std::collections::HashMap::new();
    labels
        .iter()
        .map(|l| {
            let next = rename.len();
            *rename.entry(*l).or_insert(next)
        })
        .collect()
}

/// `x θ y` iff `(x->y)*(y->x)` lies in the filter.
pub fn congruence_of_filter(h: &FiniteHoop, f: &Filter) -> Result<Congruence, MorphError> {
    if let Some(reason) = filter_violation(h, &mask(h.order(), &f.members)) {
        return Err(MorphError::NotAFilter(reason));
    }
    let n = h.order();
    let rel = |x: Elem, y: Elem| f.contains(h.mul(h.imp(x, y), h.imp(y, x)));
    let mut labels = vec![usize::MAX; n];
    for x in 0..n {
        if labels[x] == usize::MAX {
            labels[x] = x;
            for y in x + 1..n {
                if rel(x, y) {
                    labels[y] = x;
                }
            }
        }
    }
    // the relation must be an equivalence whose classes we just read off
    for x in 0..n {
        for y in 0..n {
            if rel(x, y) != (labels[x] == labels[y]) {
                return Err(MorphError::NotACongruence(format!(
                    "relation induced by the filter is not transitive at ({x}, {y})"
                )));
            }
        }
    }
    Congruence::new(h, &labels)
}

/// The class of the unit.
pub fn filter_of_congruence(h: &FiniteHoop, c: &Congruence) -> Result<Filter, MorphError> {
    if let Some(reason) = c.incompatibility(h) {
        return Err(MorphError::NotACongruence(reason));
    }
    let u = c.class_of(h.unit());
    let members: Vec<Elem> = h.elements().filter(|&x| c.class_of(x) == u).collect();
    Filter::new(h, &members)
}

/// `H/F` together with the projection. Class `i` of the quotient is the
/// `i`-th class in order of smallest member.
pub fn quotient(
    h: &Arc<FiniteHoop>,
    f: &Filter,
) -> Result<(Arc<FiniteHoop>, Homomorphism), MorphError> {
    let c = congruence_of_filter(h, f)?;
    let k = c.num_classes();
    let reps: Vec<Elem> = c.classes().iter().map(|cl| cl[0]).collect();
    let mut mul = Vec::with_capacity(k * k);
    let mut imp = Vec::with_capacity(k * k);
    for &x in &reps {
        for &y in &reps {
            mul.push(c.class_of(h.mul(x, y)));
            imp.push(c.class_of(h.imp(x, y)));
        }
    }
    let bottom = h.bottom().map(|z| c.class_of(z));
    let q = Arc::new(FiniteHoop::new(k, c.class_of(h.unit()), mul, imp, bottom)?);
    let proj = Homomorphism::new(h.clone(), q.clone(), c.class_of.clone())?;
    Ok((q, proj))
}

/// Backtracking search over unit-preserving maps, unit first and then in
/// index order. `visit` returns `false` to stop the search early.
fn search_homs(
    src: &FiniteHoop,
    tgt: &FiniteHoop,
    injective: bool,
    budget: u64,
    visit: &mut dyn FnMut(&[Elem]) -> bool,
) -> Result<(), HoopError> {
    let n = src.order();
    let mut order: Vec<Elem> = vec![src.unit()];
    order.extend(src.elements().filter(|&x| x != src.unit()));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; tgt.order()];
    let mut nodes = 0u64;

    // checks every pair involving `x` whose operands and results are assigned
    let consistent = |map: &[Elem], x: Elem| -> bool {
        for y in src.elements().filter(|&y| map[y] != usize::MAX) {
            for (a, b) in [(x, y), (y, x)] {
                let m = map[src.mul(a, b)];
                if m != usize::MAX && m != tgt.mul(map[a], map[b]) {
                    return false;
                }
                let i = map[src.imp(a, b)];
                if i != usize::MAX && i != tgt.imp(map[a], map[b]) {
                    return false;
                }
            }
        }
        // results equal to x computed from earlier pairs
        for a in src.elements().filter(|&a| map[a] != usize::MAX) {
            for b in src.elements().filter(|&b| map[b] != usize::MAX) {
                if src.mul(a, b) == x && map[x] != tgt.mul(map[a], map[b]) {
                    return false;
                }
                if src.imp(a, b) == x && map[x] != tgt.imp(map[a], map[b]) {
                    return false;
                }
            }
        }
        true
    };

    fn go(
        depth: usize,
        order: &[Elem],
        map: &mut Vec<Elem>,
        used: &mut Vec<bool>,
        tgt: &FiniteHoop,
        injective: bool,
        nodes: &mut u64,
        budget: u64,
        consistent: &dyn Fn(&[Elem], Elem) -> bool,
        visit: &mut dyn FnMut(&[Elem]) -> bool,
    ) -> Result<bool, HoopError> {
        if depth == order.len() {
            return Ok(visit(map));
        }
        let x = order[depth];
        let choices: Vec<Elem> = if depth == 0 {
            vec![tgt.unit()]
        } else {
            tgt.elements().collect()
        };
        for v in choices {
            if injective && used[v] {
                continue;
            }
            *nodes += 1;
            if *nodes > budget {
                return Err(HoopError::BudgetExceeded { limit: budget });
            }
            map[x] = v;
            if consistent(map, x) {
                used[v] = true;
                let keep_going = go(
                    depth + 1,
                    order,
                    map,
                    used,
                    tgt,
                    injective,
                    nodes,
                    budget,
                    consistent,
                    visit,
                )?;
                used[v] = false;
                if !keep_going {
                    map[x] = usize::MAX;
                    return Ok(false);
                }
            }
            map[x] = usize::MAX;
        }
        Ok(true)
    }

    go(
        0,
        &order,
        &mut map,
        &mut used,
        tgt,
        injective,
        &mut nodes,
        budget,
        &consistent,
        visit,
    )?;
    Ok(())
}

/// Default node limit for backtracking searches.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Every homomorphism `h1 -> h2`, in lexicographic order of the map.
pub fn all_homs(
    h1: &Arc<FiniteHoop>,
    h2: &Arc<FiniteHoop>,
    budget: u64,
) -> Result<Vec<Homomorphism>, HoopError> {
    let mut maps = Vec::new();
    search_homs(h1, h2, false, budget, &mut |m| {
        maps.push(m.to_vec());
        true
    })?;
    maps.sort();
    Ok(maps
        .into_iter()
        .map(|map| Homomorphism {
            source: h1.clone(),
            target: h2.clone(),
            map,
        })
        .collect())
}

/// Some isomorphism `h1 -> h2`, if one exists.
pub fn iso(h1: &Arc<FiniteHoop>, h2: &Arc<FiniteHoop>) -> Option<Homomorphism> {
    if h1.order() != h2.order() {
        return None;
    }
    let mut found = None;
    search_homs(h1, h2, true, u64::MAX, &mut |m| {
        found = Some(m.to_vec());
        false
    })
    .ok()?;
    found.map(|map| Homomorphism {
        source: h1.clone(),
        target: h2.clone(),
        map,
    })
}

/// Largest order accepted by [`canonical_form`] (it scans all permutations).
pub const CANONICAL_MAX_ORDER: usize = 10;

/// The relabelling with the unit last whose `(mul, imp)` tables are
/// lexicographically least.
pub fn canonical_form(h: &FiniteHoop) -> Result<FiniteHoop, HoopError> {
    let n = h.order();
    if n > CANONICAL_MAX_ORDER {
        let limit = (1..n as u64).product();
        return Err(HoopError::BudgetExceeded { limit });
    }
    let others: Vec<Elem> = h.elements().filter(|&x| x != h.unit()).collect();
    let mut slots: Vec<Elem> = (0..n - 1).collect();
    let mut best: Option<FiniteHoop> = None;
    let mut perm = vec![0; n];
    perm[h.unit()] = n - 1;
    loop {
        for (i, &x) in others.iter().enumerate() {
            perm[x] = slots[i];
        }
        let cand = h.relabel(&perm);
        let better = match &best {
            None => true,
            Some(b) => (cand.mul_table(), cand.imp_table()) < (b.mul_table(), b.imp_table()),
        };
        if better {
            best = Some(cand);
        }
        if !next_permutation(&mut slots) {
            break;
        }
    }
    Ok(best.expect("at least one permutation"))
}

/// Advances to the next permutation in lexicographic order.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hoop::{direct_product, godel_chain, lukasiewicz_chain, terminal};

    fn arc(h: FiniteHoop) -> Arc<FiniteHoop> {
        Arc::new(h)
    }

    #[test]
    fn identity_and_double_negation() {
        let l3 = lukasiewicz_chain(3);
        assert_eq!(is_homomorphism(&l3, &l3, &[0, 1, 2], true).unwrap(), None);
        let g3 = godel_chain(3);
        let nn: Vec<Elem> = g3
            .elements()
            .map(|x| g3.neg(g3.neg(x).unwrap()).unwrap())
            .collect();
        assert_eq!(nn, vec![0, 2, 2]);
        assert_eq!(is_homomorphism(&g3, &g3, &nn, false).unwrap(), None);
        assert_eq!(
            is_homomorphism(&l3, &l3, &[0, 2, 2], false).unwrap(),
            Some(HomFailure::Mul(1, 1))
        );
        assert!(matches!(
            is_homomorphism(&l3, &l3, &[0, 1, 3], false),
            Err(MorphError::Hoop(HoopError::IndexOutOfRange { .. }))
        ));
    }

    #[test]
    fn kernels() {
        let g3 = arc(godel_chain(3));
        assert_eq!(kernel(&Homomorphism::identity(g3.clone())).members(), &[2]);
        let nn = Homomorphism::new(g3.clone(), g3.clone(), vec![0, 2, 2]).unwrap();
        assert_eq!(kernel(&nn).members(), &[1, 2]);
        let t = arc(terminal());
        let to_t = Homomorphism::new(g3.clone(), t, vec![0, 0, 0]).unwrap();
        assert_eq!(kernel(&to_t).members(), &[0, 1, 2]);
    }

    #[test]
    fn filter_lists() {
        assert_eq!(filters(&terminal()).len(), 1);
        let l3: Vec<Vec<Elem>> = filters(&lukasiewicz_chain(3))
            .iter()
            .map(|f| f.members().to_vec())
            .collect();
        assert_eq!(l3, vec![vec![2], vec![0, 1, 2]]);
        let g3: Vec<Vec<Elem>> = filters(&godel_chain(3))
            .iter()
            .map(|f| f.members().to_vec())
            .collect();
        assert_eq!(g3, vec![vec![2], vec![1, 2], vec![0, 1, 2]]);
    }

    #[test]
    fn both_filter_scans_agree() {
        let hs = [
            direct_product(&godel_chain(3), &lukasiewicz_chain(2)),
            direct_product(&lukasiewicz_chain(3), &lukasiewicz_chain(2)),
            godel_chain(6),
            lukasiewicz_chain(5),
        ];
        for h in &hs {
            assert_eq!(filters_by_subsets(h), filters_by_closure(h));
        }
    }

    #[test]
    fn congruences_and_quotients() {
        let g3 = arc(godel_chain(3));
        let f = Filter::new(&g3, &[1, 2]).unwrap();
        let c = congruence_of_filter(&g3, &f).unwrap();
        assert_eq!(c.classes(), vec![vec![0], vec![1, 2]]);
        assert_eq!(filter_of_congruence(&g3, &c).unwrap(), f);
        let (q, proj) = quotient(&g3, &f).unwrap();
        assert_eq!(*q, godel_chain(2));
        assert_eq!(kernel(&proj), f);

        let trivial = Filter::new(&g3, &[2]).unwrap();
        let (q, _) = quotient(&g3, &trivial).unwrap();
        assert!(iso(&q, &g3).is_some());
        assert!(matches!(
            Filter::new(&g3, &[0, 2]),
            Err(MorphError::NotAFilter(_))
        ));
    }

    #[test]
    fn isomorphisms() {
        let l3 = arc(lukasiewicz_chain(3));
        let g3 = arc(godel_chain(3));
        assert_eq!(iso(&l3, &l3).unwrap().map(), &[0, 1, 2]);
        assert!(iso(&l3, &g3).is_none());
    }

    #[test]
    fn hom_count_matches_naive_scan() {
        let l2 = arc(lukasiewicz_chain(2));
        let l3 = arc(lukasiewicz_chain(3));
        for (a, b) in [(&l2, &l3), (&l3, &l3), (&l3, &l2)] {
            let mut naive = 0;
            for code in 0..b.order().pow(a.order() as u32) {
                let map: Vec<Elem> = (0..a.order())
                    .map(|i| code / b.order().pow(i as u32) % b.order())
                    .collect();
                if is_homomorphism(a, b, &map, false).unwrap().is_none() {
                    naive += 1;
                }
            }
            assert_eq!(all_homs(a, b, DEFAULT_BUDGET).unwrap().len(), naive);
        }
    }

    #[test]
    fn canonical_form_is_idempotent_and_isomorphic() {
        let h = direct_product(&godel_chain(3), &lukasiewicz_chain(2));
        let c = canonical_form(&h).unwrap();
        assert_eq!(c.unit(), c.order() - 1);
        assert_eq!(canonical_form(&c).unwrap(), c);
        assert!(iso(&arc(h), &arc(c)).is_some());
    }
}
