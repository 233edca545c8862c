//! Enumeration of finite hoops up to isomorphism.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::hoop::{Elem, FiniteHoop, HoopError, Variety};
use crate::morph::canonical_form;
use crate::search::{residuate, PartialTable};

struct Run {
    n: usize,
    cells: Vec<(Elem, Elem)>,
    nodes: u64,
    budget: u64,
    found: BTreeSet<(Vec<Elem>, Vec<Elem>)>,
}

impl Run {
    fn dfs(&mut self, table: &mut PartialTable, depth: usize) -> Result<(), HoopError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(HoopError::BudgetExceeded { limit: self.budget });
        }
        if depth == self.cells.len() {
            return self.finish(table);
        }
        let (i, j) = self.cells[depth];
        // only the unit multiplies to the unit
        for c in 0..self.n - 1 {
            table.set(i, j, Some(c));
            if table.assoc_ok(i, j) {
                self.dfs(table, depth + 1)?;
            }
        }
        table.set(i, j, None);
        Ok(())
    }

    fn finish(&mut self, table: &PartialTable) -> Result<(), HoopError> {
        let mul = table.complete();
        let Some(imp) = residuate(self.n, &mul) else {
            return Ok(());
        };
        if let Ok(h) = FiniteHoop::new(self.n, self.n - 1, mul, imp, None) {
            let c = canonical_form(&h)?;
            self.found
                .insert((c.mul_table().to_vec(), c.imp_table().to_vec()));
        }
        Ok(())
    }
}

fn start(n: usize) -> PartialTable {
    let mut table = PartialTable::new(n);
    for a in 0..n {
        table.set(a, n - 1, Some(a));
    }
    table
}

/// All hoops of order exactly `n` up to isomorphism, in canonical form with
/// the unit last, sorted by their tables. `variety` filters the output. The
/// search tree is split on the first free cell and shared over `jobs`
/// workers; `budget` caps the nodes visited by each worker.
pub fn enumerate_hoops(
    n: usize,
    variety: Variety,
    budget: u64,
    jobs: usize,
) -> Result<Vec<FiniteHoop>, HoopError> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let cells = start(n).open_cells();
    let branches: Vec<Option<Elem>> = match cells.first() {
        None => vec![None],
        Some(_) => (0..n - 1).map(Some).collect(),
    };
    let work = |first: &Option<Elem>| -> Result<BTreeSet<(Vec<Elem>, Vec<Elem>)>, HoopError> {
        let mut table = start(n);
        let mut run = Run {
            n,
            cells: cells.clone(),
            nodes: 0,
            budget,
            found: BTreeSet::new(),
        };
        match *first {
            None => run.dfs(&mut table, 0)?,
            Some(c) => {
                let (i, j) = cells[0];
                table.set(i, j, Some(c));
                if table.assoc_ok(i, j) {
                    run.dfs(&mut table, 1)?;
                }
            }
        }
        Ok(run.found)
    };
    let parts: Vec<_> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| HoopError::MalformedTable(format!("thread pool: {e}")))?;
        pool.install(|| branches.par_iter().map(work).collect::<Result<_, _>>())?
    } else {
        branches.iter().map(work).collect::<Result<_, _>>()?
    };
    let merged: BTreeSet<_> = parts.into_iter().flatten().collect();
    Ok(merged
        .into_iter()
        .map(|(mul, imp)| FiniteHoop::new(n, n - 1, mul, imp, None).expect("validated earlier"))
        .filter(|h| h.classify().in_variety(variety))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hoop::{godel_chain, lukasiewicz_chain};
    use crate::morph::{iso, DEFAULT_BUDGET};
    use std::sync::Arc;

    #[test]
    fn small_counts() {
        let count = |n| {
            enumerate_hoops(n, Variety::Hoop, DEFAULT_BUDGET, 1)
                .unwrap()
                .len()
        };
        assert_eq!(count(1), 1);
        assert_eq!(count(2), 1);
        assert_eq!(count(3), 2);
    }

    #[test]
    fn order_three_is_both_chains() {
        let found = enumerate_hoops(3, Variety::Hoop, DEFAULT_BUDGET, 1).unwrap();
        let found: Vec<Arc<FiniteHoop>> = found.into_iter().map(Arc::new).collect();
        for chain in [lukasiewicz_chain(3), godel_chain(3)] {
            let c = Arc::new(chain.without_bottom());
            assert_eq!(found.iter().filter(|h| iso(h, &c).is_some()).count(), 1);
        }
    }

    #[test]
    fn parallel_matches_serial() {
        let a = enumerate_hoops(4, Variety::Hoop, DEFAULT_BUDGET, 1).unwrap();
        let b = enumerate_hoops(4, Variety::Hoop, DEFAULT_BUDGET, 3).unwrap();
        assert_eq!(a, b);
    }
}
