//! Direct search for split extensions `X -> A <-> B`, independent of actions.
//!
//! The middle algebra is laid out fiber by fiber over `B`. The kernel fiber
//! holds `k(X)` in the order of `X`; every other fiber starts with `s(b)`.
//! Products are searched cell by cell inside the fiber that `p` forces, with
//! associativity pruning, and implications are recovered by residuation.

use std::sync::Arc;

use crate::extension::{iso_extensions, SplitExtension};
use crate::hoop::{Elem, FiniteHoop, HoopError};

struct Layout {
    order: usize,
    p: Vec<Elem>,
    k: Vec<Elem>,
    s: Vec<Elem>,
    fibers: Vec<Vec<Elem>>,
}

fn layout(x: &FiniteHoop, b: &FiniteHoop, sizes: &[usize]) -> Layout {
    let mut p = Vec::new();
    let mut fibers = vec![Vec::new(); b.order()];
    for bb in b.elements() {
        for _ in 0..sizes[bb] {
            fibers[bb].push(p.len());
            p.push(bb);
        }
    }
    let k = fibers[b.unit()].clone();
    let s = b
        .elements()
        .map(|bb| {
            if bb == b.unit() {
                k[x.unit()]
            } else {
                fibers[bb][0]
            }
        })
        .collect();
    Layout {
        order: p.len(),
        p,
        k,
        s,
        fibers,
    }
}

/// A commutative multiplication table under construction.
pub(crate) struct PartialTable {
    m: usize,
    cells: Vec<Option<Elem>>,
}

impl PartialTable {
    pub(crate) fn new(m: usize) -> Self {
        PartialTable {
            m,
            cells: vec![None; m * m],
        }
    }

    #[inline]
    pub(crate) fn get(&self, i: Elem, j: Elem) -> Option<Elem> {
        self.cells[i * self.m + j]
    }

    pub(crate) fn set(&mut self, i: Elem, j: Elem, v: Option<Elem>) {
        self.cells[i * self.m + j] = v;
        self.cells[j * self.m + i] = v;
    }

    fn triple_ok(&self, u: Elem, v: Elem, w: Elem) -> bool {
        let left = self.get(u, v).and_then(|uv| self.get(uv, w));
        let right = self.get(v, w).and_then(|vw| self.get(u, vw));
        match (left, right) {
            (Some(l), Some(r)) => l == r,
            _ => true,
        }
    }

    /// Associativity on every triple whose evaluation reads the cell `(i, j)`.
    pub(crate) fn assoc_ok(&self, i: Elem, j: Elem) -> bool {
        let m = self.m;
        for t in 0..m {
            for (a, c) in [(i, j), (j, i)] {
                if !self.triple_ok(a, c, t) || !self.triple_ok(t, a, c) {
                    return false;
                }
            }
        }
        for u in 0..m {
            for v in 0..m {
                let Some(uv) = self.get(u, v) else { continue };
                for (a, c) in [(i, j), (j, i)] {
                    if uv == a && (!self.triple_ok(u, v, c) || !self.triple_ok(c, u, v)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Unassigned cells on or above the diagonal, row by row.
    pub(crate) fn open_cells(&self) -> Vec<(Elem, Elem)> {
        let m = self.m;
        (0..m)
            .flat_map(|i| (i..m).map(move |j| (i, j)))
            .filter(|&(i, j)| self.get(i, j).is_none())
            .collect()
    }

    pub(crate) fn complete(&self) -> Vec<Elem> {
        self.cells
            .iter()
            .map(|v| v.expect("complete table"))
            .collect()
    }
}

/// `a -> c` as the largest `z` with `z*a <= c` in the divisibility order, or
/// `None` if some such set has no largest element.
pub(crate) fn residuate(m: usize, mul: &[Elem]) -> Option<Vec<Elem>> {
    let mut le = vec![false; m * m];
    for z in 0..m {
        for y in 0..m {
            le[mul[z * m + y] * m + y] = true;
        }
    }
    let mut imp = Vec::with_capacity(m * m);
    for a in 0..m {
        for c in 0..m {
            let below: Vec<Elem> = (0..m).filter(|&z| le[mul[z * m + a] * m + c]).collect();
            let top = below
                .iter()
                .copied()
                .find(|&z| below.iter().all(|&w| le[w * m + z]))?;
            imp.push(top);
        }
    }
    Some(imp)
}

struct Search<'a> {
    x: &'a Arc<FiniteHoop>,
    b: &'a Arc<FiniteHoop>,
    lay: Layout,
    table: PartialTable,
    cells: Vec<(Elem, Elem)>,
    nodes: u64,
    budget: u64,
    found: Vec<SplitExtension>,
}

impl Search<'_> {
    fn dfs(&mut self, depth: usize) -> Result<(), HoopError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(HoopError::BudgetExceeded { limit: self.budget });
        }
        if depth == self.cells.len() {
            self.finish();
            return Ok(());
        }
        let (i, j) = self.cells[depth];
        let target = self.b.mul(self.lay.p[i], self.lay.p[j]);
        let unit = self.lay.k[self.x.unit()];
        for idx in 0..self.lay.fibers[target].len() {
            let c = self.lay.fibers[target][idx];
            if c == unit {
                continue;
            }
            self.table.set(i, j, Some(c));
            if self.table.assoc_ok(i, j) {
                self.dfs(depth + 1)?;
            }
        }
        self.table.set(i, j, None);
        Ok(())
    }

    fn finish(&mut self) {
        let m = self.lay.order;
        let mul = self.table.complete();
        let Some(imp) = residuate(m, &mul) else {
            return;
        };
        let unit = self.lay.k[self.x.unit()];
        let Ok(a) = FiniteHoop::new(m, unit, mul, imp, None) else {
            return;
        };
        if let Ok(e) = SplitExtension::new(
            self.x.clone(),
            Arc::new(a),
            self.b.clone(),
            self.lay.k.clone(),
            self.lay.p.clone(),
            self.lay.s.clone(),
        ) {
            if !self.found.iter().any(|o| iso_extensions(o, &e).is_some()) {
                self.found.push(e);
            }
        }
    }
}

/// All split extensions of `b` by `x` whose fibers have at most `|X|`
/// elements, one per isomorphism class, in order of discovery.
pub fn split_extensions(
    x: &Arc<FiniteHoop>,
    b: &Arc<FiniteHoop>,
    budget: u64,
) -> Result<Vec<SplitExtension>, HoopError> {
    let (nx, nb) = (x.order(), b.order());
    let mut sizes = vec![1; nb];
    sizes[b.unit()] = nx;
    let mut out: Vec<SplitExtension> = Vec::new();
    let mut nodes = 0;
    loop {
        let lay = layout(x, b, &sizes);
        let m = lay.order;
        let mut table = PartialTable::new(m);
        let unit = lay.k[x.unit()];
        for a in 0..m {
            table.set(a, unit, Some(a));
        }
        for u in x.elements() {
            for v in x.elements() {
                table.set(lay.k[u], lay.k[v], Some(lay.k[x.mul(u, v)]));
            }
        }
        for u in b.elements() {
            for v in b.elements() {
                table.set(lay.s[u], lay.s[v], Some(lay.s[b.mul(u, v)]));
            }
        }
        let cells = table.open_cells();
        let mut search = Search {
            x,
            b,
            lay,
            table,
            cells,
            nodes,
            budget,
            found: Vec::new(),
        };
        search.dfs(0)?;
        nodes = search.nodes;
        for e in search.found {
            if !out.iter().any(|o| iso_extensions(o, &e).is_some()) {
                out.push(e);
            }
        }
        // next fiber-size vector; the kernel fiber stays at |X|
        let mut i = 0;
        loop {
            if i == nb {
                return Ok(out);
            }
            if i != b.unit() && sizes[i] < nx {
                sizes[i] += 1;
                break;
            }
            if i != b.unit() {
                sizes[i] = 1;
            }
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hoop::{godel_chain, lukasiewicz_chain, terminal};
    use crate::morph::{iso, DEFAULT_BUDGET};

    #[test]
    fn over_terminal_base() {
        let c2 = Arc::new(lukasiewicz_chain(2));
        let t = Arc::new(terminal());
        let found = split_extensions(&c2, &t, DEFAULT_BUDGET).unwrap();
        assert_eq!(found.len(), 1);
        let found = split_extensions(&t, &c2, DEFAULT_BUDGET).unwrap();
        assert_eq!(found.len(), 1);
    }

    #[test]
    fn two_chain_by_two_chain() {
        let c2 = Arc::new(godel_chain(2).without_bottom());
        let found = split_extensions(&c2, &c2, DEFAULT_BUDGET).unwrap();
        let sizes: Vec<usize> = found.iter().map(|e| e.a().order()).collect();
        assert!(sizes.contains(&3) && sizes.contains(&4));
        let g3 = Arc::new(godel_chain(3).without_bottom());
        assert!(found.iter().any(|e| iso(e.a(), &g3).is_some()));
        assert!(found.iter().any(|e| !e.is_strong()));
    }
}
