//! Unpruned scan over every commutative multiplication with the top element
//! as unit. Implication is recovered by residuation in the divisibility order
//! and isomorphic copies are merged by trying every relabelling.

use std::collections::BTreeSet;

use hoopforge::enumerate::enumerate_hoops;
use hoopforge::morph::DEFAULT_BUDGET;
use hoopforge::{FiniteHoop, Variety};

type Tables = (Vec<usize>, Vec<usize>);

fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(m - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, m - 1);
            out.push(q);
        }
    }
    out
}

fn smallest_relabelling(n: usize, mul: &[usize], imp: &[usize], perms: &[Vec<usize>]) -> Tables {
    let mut best: Option<Tables> = None;
    for p in perms {
        // the unit n-1 stays fixed
        let map = |x: usize| if x == n - 1 { x } else { p[x] };
        let mut m2 = vec![0; n * n];
        let mut i2 = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                m2[map(x) * n + map(y)] = map(mul[x * n + y]);
                i2[map(x) * n + map(y)] = map(imp[x * n + y]);
            }
        }
        let cand = (m2, i2);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.expect("at least one permutation")
}

fn residuate(n: usize, mul: &[usize]) -> Option<Vec<usize>> {
    let le = |x: usize, y: usize| (0..n).any(|z| mul[z * n + y] == x);
    let mut imp = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let cands: Vec<usize> = (0..n).filter(|&z| le(mul[z * n + x], y)).collect();
            imp[x * n + y] = *cands.iter().find(|&&c| cands.iter().all(|&z| le(z, c)))?;
        }
    }
    Some(imp)
}

fn naive(n: usize) -> BTreeSet<Tables> {
    let unit = n - 1;
    let cells: Vec<(usize, usize)> = (0..unit)
        .flat_map(|i| (i..unit).map(move |j| (i, j)))
        .collect();
    let perms = permutations(unit);
    let mut found = BTreeSet::new();
    let total = n.pow(cells.len() as u32);
    let mut mul = vec![0; n * n];
    for x in 0..n {
        mul[unit * n + x] = x;
        mul[x * n + unit] = x;
    }
    for code in 0..total {
        let mut c = code;
        for &(i, j) in &cells {
            mul[i * n + j] = c % n;
            mul[j * n + i] = c % n;
            c /= n;
        }
        let assoc = (0..n).all(|x| {
            (0..n)
                .all(|y| (0..n).all(|z| mul[mul[x * n + y] * n + z] == mul[x * n + mul[y * n + z]]))
        });
        if !assoc {
            continue;
        }
        let Some(imp) = residuate(n, &mul) else {
            continue;
        };
        if FiniteHoop::new(n, unit, mul.clone(), imp.clone(), None).is_ok() {
            found.insert(smallest_relabelling(n, &mul, &imp, &perms));
        }
    }
    found
}

fn pruned(n: usize) -> BTreeSet<Tables> {
    enumerate_hoops(n, Variety::Hoop, DEFAULT_BUDGET, 1)
        .unwrap()
        .into_iter()
        .map(|h| {
            let perms = permutations(n - 1);
            smallest_relabelling(n, h.mul_table(), h.imp_table(), &perms)
        })
        .collect()
}

#[test]
fn pruned_search_matches_full_scan_through_order_four() {
    for n in 1..=4 {
        let a = naive(n);
        let b = pruned(n);
        assert_eq!(a, b, "order {n}");
    }
    assert_eq!(
        (1..=4).map(|n| naive(n).len()).collect::<Vec<_>>(),
        [1, 1, 2, 5]
    );
}

#[test]
fn pruned_search_matches_full_scan_at_order_five() {
    let a = naive(5);
    assert_eq!(a.len(), 10);
    assert_eq!(a, pruned(5));
}
