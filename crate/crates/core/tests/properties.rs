use std::sync::Arc;

use proptest::prelude::*;

use hoopforge::action::{enumerate_actions, mu, mu_carrier, tau, SemidirectModel};
use hoopforge::corpus::Corpus;
use hoopforge::format::{parse_algebra, write_algebra};
use hoopforge::hoop::{direct_product, godel_chain, lukasiewicz_chain};
use hoopforge::lalg::{hoop_to_lalgebra, FiniteLAlgebra};
use hoopforge::morph::{canonical_form, filters, generated_filter, iso, DEFAULT_BUDGET};
use hoopforge::suite::dual_route_axioms;
use hoopforge::term::{parse_term, Term};
use hoopforge::{FiniteHoop, Variety};

fn corpus(n: usize) -> Vec<Arc<FiniteHoop>> {
    Corpus::enumerate(n, DEFAULT_BUDGET, 1)
        .unwrap()
        .entries
        .into_iter()
        .map(|e| e.hoop)
        .collect()
}

fn chain(kind: bool, n: usize) -> FiniteHoop {
    if kind {
        lukasiewicz_chain(n)
    } else {
        godel_chain(n)
    }
}

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["x", "y", "z"]).prop_map(Term::var),
        Just(Term::One),
        Just(Term::Zero),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        (inner.clone(), inner, 0..4u8).prop_map(|(l, r, op)| match op {
            0 => Term::mul(l, r),
            1 => Term::imp(l, r),
            2 => Term::meet(l, r),
            _ => Term::join(l, r),
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn products_of_chains_agree_across_routes(k1: bool, n1 in 1usize..5, k2: bool, n2 in 1usize..5) {
        let h = direct_product(&chain(k1, n1), &chain(k2, n2));
        prop_assert_eq!(dual_route_axioms(&h), Ok(()));
    }

    #[test]
    fn canonical_form_ignores_labels(idx in 0usize..19, seed: u64) {
        let all = corpus(5);
        let h = &all[idx % all.len()];
        let n = h.order();
        // shuffle driven by the seed
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let r = h.relabel(&perm);
        prop_assert_eq!(canonical_form(&r).unwrap(), canonical_form(h).unwrap());
        prop_assert!(iso(&Arc::new(r), h).is_some());
    }

    #[test]
    fn text_format_round_trips(idx in 0usize..19) {
        let all = corpus(5);
        let h = &all[idx % all.len()];
        prop_assert_eq!(&parse_algebra(&write_algebra("H", h)).unwrap(), h.as_ref());
    }

    #[test]
    fn generated_filters_are_filters(idx in 0usize..19, mask: u8) {
        let all = corpus(5);
        let h = &all[idx % all.len()];
        let gens: Vec<usize> = h.elements().filter(|&x| mask >> x & 1 == 1).collect();
        let f = generated_filter(h, &gens);
        prop_assert!(gens.iter().all(|&g| f.contains(g)));
        prop_assert!(filters(h).contains(&f));
    }

    #[test]
    fn terms_reparse(t in term()) {
        prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn reducts_are_lalgebras(k: bool, n in 1usize..9) {
        let h = chain(k, n);
        let l = hoop_to_lalgebra(&h);
        prop_assert!(FiniteLAlgebra::new(l.order(), l.unit(), l.imp_table().to_vec()).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tau_inverts_mu(bi in 0usize..4, xi in 0usize..4, pick: usize) {
        let all = corpus(3);
        let (b, x) = (&all[bi % all.len()], &all[xi % all.len()]);
        let acts = enumerate_actions(b, x, Variety::Hoop, DEFAULT_BUDGET).unwrap();
        let act = &acts[pick % acts.len()];
        let back = tau(&mu(act).unwrap()).unwrap();
        prop_assert_eq!(back.f_table(), act.f_table());
        prop_assert_eq!(back.g_table(), act.g_table());
    }

    #[test]
    fn carrier_is_closed(bi in 0usize..4, xi in 0usize..4, pick: usize) {
        let all = corpus(3);
        let (b, x) = (&all[bi % all.len()], &all[xi % all.len()]);
        let acts = enumerate_actions(b, x, Variety::Hoop, DEFAULT_BUDGET).unwrap();
        let act = &acts[pick % acts.len()];
        let model = SemidirectModel::new(act).unwrap();
        let carrier = mu_carrier(act);
        for &p in &carrier {
            for &q in &carrier {
                prop_assert!(carrier.contains(&model.op1(p, q)));
                prop_assert!(carrier.contains(&model.op2(p, q)));
            }
        }
    }
}
