mod common;

use common::{brute_minimal_primes, in_ideal, monomials_up_to};
use kclean::polarize::polarize;
use kclean::primes::{associated_primes, irreducible_decomposition, minimal_primes};
use kclean::{Monomial, MonomialIdeal, VarSet};
use proptest::prelude::*;

fn ideal_strategy(max_n: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=6).prop_filter_map(
            "unit generator",
            move |gens| {
                if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
                    return None;
                }
                let refs: Vec<&[u32]> = gens.iter().map(Vec::as_slice).collect();
                Some(MonomialIdeal::from_exponents(n, &refs).unwrap())
            },
        )
    })
}

fn with_monomials(
    max_n: usize,
    max_exp: u32,
) -> impl Strategy<Value = (MonomialIdeal, Monomial, Monomial)> {
    ideal_strategy(max_n, max_exp).prop_flat_map(move |i| {
        let n = i.n();
        let m = prop::collection::vec(0..=max_exp, n).prop_map(Monomial::from_exponents);
        (Just(i), m.clone(), m)
    })
}

fn minimal(i: &MonomialIdeal) -> bool {
    let g = i.gens();
    g.iter()
        .enumerate()
        .all(|(a, u)| g.iter().enumerate().all(|(b, v)| a == b || !u.divides(v)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn operations_keep_generators_minimal((i, u, v) in with_monomials(6, 3)) {
        prop_assert!(minimal(&i));
        prop_assert!(minimal(&i.colon(&u).unwrap()));
        prop_assert!(minimal(&i.add_monomial(&v).unwrap()));
        prop_assert!(minimal(&i.radical()));
        let j = MonomialIdeal::new(i.ctx().clone(), [u.clone()]).unwrap();
        prop_assert!(minimal(&i.intersect(&j).unwrap()));
        prop_assert!(minimal(&i.sum(&j).unwrap()));
    }

    #[test]
    fn colon_laws((i, u, v) in with_monomials(5, 3)) {
        let uv = Monomial::from_exponents(u.exponents().iter().zip(v.exponents()).map(|(a, b)| a + b).collect());
        prop_assert_eq!(i.colon(&u).unwrap().colon(&v).unwrap(), i.colon(&uv).unwrap());
        prop_assert!(i.is_subset(&i.colon(&u).unwrap()).unwrap());
        prop_assert_eq!(i.colon(&u).unwrap().is_unit(), i.contains(&u).unwrap());
    }

    #[test]
    fn radical_is_idempotent_and_keeps_minimal_primes(i in ideal_strategy(6, 3)) {
        let r = i.radical();
        prop_assert_eq!(r.radical(), r.clone());
        prop_assert_eq!(minimal_primes(&i).unwrap(), minimal_primes(&r).unwrap());
        let mut mins: Vec<VarSet> = minimal_primes(&i).unwrap().into_iter().map(|p| p.0).collect();
        mins.sort();
        prop_assert_eq!(mins, brute_minimal_primes(&i));
    }

    #[test]
    fn squarefree_associated_primes_are_minimal(i in ideal_strategy(6, 1)) {
        prop_assert_eq!(associated_primes(&i).unwrap(), minimal_primes(&i).unwrap());
    }

    #[test]
    fn irreducible_components_intersect_to_the_ideal(i in ideal_strategy(5, 3)) {
        let components = irreducible_decomposition(&i).unwrap();
        let mut acc: Option<MonomialIdeal> = None;
        for c in &components {
            let ci = c.to_ideal(i.ctx());
            acc = Some(match acc {
                None => ci,
                Some(a) => a.intersect(&ci).unwrap(),
            });
        }
        prop_assert_eq!(acc.unwrap(), i.clone());
        // irredundant
        for (a, c) in components.iter().enumerate() {
            prop_assert!(components.iter().enumerate().all(|(b, d)| a == b || !d.is_subset(c)));
        }
    }

    #[test]
    fn polarization_round_trip(i in ideal_strategy(5, 3)) {
        let (p, map) = polarize(&i).unwrap();
        prop_assert!(p.is_squarefree());
        prop_assert_eq!(map.depolarize(&p).unwrap(), i);
    }

    /// `π(I^p : u^p) = I : π(u^p)` and `π(I^p + (u^p)) = I + (π(u^p))`.
    #[test]
    fn depolarization_commutes((i, u, _) in with_monomials(4, 3)) {
        let (p, map) = polarize(&i).unwrap();
        let capped = Monomial::from_exponents(
            u.exponents().iter().zip(map.copies()).map(|(&e, &c)| e.min(c)).collect(),
        );
        prop_assume!(!capped.is_unit());
        let up = map.polarize_monomial(&capped).unwrap();
        prop_assert_eq!(map.project(&up).unwrap(), capped.clone());
        prop_assert_eq!(map.depolarize(&p.colon(&up).unwrap()).unwrap(), i.colon(&capped).unwrap());
        prop_assert_eq!(map.depolarize(&p.add_monomial(&up).unwrap()).unwrap(), i.add_monomial(&capped).unwrap());
    }
}

#[test]
fn membership_through_components_on_a_grid() {
    let i = MonomialIdeal::from_exponents(3, &[&[2, 1, 0], &[0, 2, 1], &[1, 0, 3]]).unwrap();
    let components = irreducible_decomposition(&i).unwrap();
    for w in monomials_up_to(3, 5) {
        let through = components
            .iter()
            .all(|c| in_ideal(c.to_ideal(i.ctx()).gens(), &w));
        assert_eq!(in_ideal(i.gens(), &w), through);
    }
}
