//! Random generators and brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use kclean::simplicial::SimplicialComplex;
use kclean::{minimal_sets, Monomial, MonomialIdeal, VarSet};
use rand::Rng;

pub fn random_ideal<R: Rng>(rng: &mut R, n: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    let mut gens: Vec<Vec<u32>> = Vec::with_capacity(count);
    while gens.len() < count {
        let g: Vec<u32> = (0..n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    rng.gen_range(1..=max_exp)
                } else {
                    0
                }
            })
            .collect();
        if g.iter().any(|&e| e > 0) {
            gens.push(g);
        }
    }
    let refs: Vec<&[u32]> = gens.iter().map(Vec::as_slice).collect();
    MonomialIdeal::from_exponents(n, &refs).unwrap()
}

/// Squarefree ideal whose generators all have degree at least `min_degree`.
pub fn random_squarefree<R: Rng>(
    rng: &mut R,
    n: usize,
    max_gens: usize,
    min_degree: usize,
) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    let mut sets: Vec<Vec<usize>> = Vec::with_capacity(count);
    while sets.len() < count {
        let s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
        if s.len() >= min_degree.max(1) {
            sets.push(s);
        }
    }
    let refs: Vec<&[usize]> = sets.iter().map(Vec::as_slice).collect();
    MonomialIdeal::from_sets(n, &refs).unwrap()
}

/// A complex on `[n]` that is neither void nor the full simplex.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize) -> SimplicialComplex {
    let count = rng.gen_range(1..=6);
    let top = (n - 1).min(4);
    let facets: Vec<VarSet> = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=top);
            let mut f = VarSet::EMPTY;
            while f.len() < size {
                f.insert(rng.gen_range(0..n));
            }
            f
        })
        .collect();
    SimplicialComplex::new(n, facets)
}

pub fn random_monomial<R: Rng>(rng: &mut R, n: usize, max_exp: u32) -> Monomial {
    Monomial::from_exponents((0..n).map(|_| rng.gen_range(0..=max_exp)).collect())
}

pub fn in_ideal(gens: &[Monomial], u: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(u))
}

/// Inclusion-minimal variable sets meeting every generator, by enumerating all `2^n` subsets.
pub fn brute_minimal_primes(ideal: &MonomialIdeal) -> Vec<VarSet> {
    let n = ideal.n();
    let hits: Vec<VarSet> = VarSet::full(n)
        .subsets()
        .filter(|s| ideal.gens().iter().all(|g| !g.support().is_disjoint(*s)))
        .collect();
    let mut out = minimal_sets(hits);
    out.sort();
    out
}

/// Variable sets `P` with `I : w = P` for some monomial `w`, searched over all `w` with
/// exponents at most the generator maxima.
pub fn brute_associated_primes(ideal: &MonomialIdeal) -> Vec<VarSet> {
    let caps = ideal.max_exponents();
    let mut out = Vec::new();
    let mut w = vec![0u32; ideal.n()];
    loop {
        let wm = Monomial::from_exponents(w.clone());
        if !in_ideal(ideal.gens(), &wm) {
            let quotients: Vec<Monomial> = ideal.gens().iter().map(|g| g.colon(&wm)).collect();
            let vars: VarSet = quotients
                .iter()
                .filter(|q| q.degree() == 1)
                .map(|q| q.support().min().unwrap())
                .collect();
            if !vars.is_empty()
                && quotients.iter().all(|q| !q.support().is_disjoint(vars))
                && !out.contains(&vars)
            {
                out.push(vars);
            }
        }
        let mut i = 0;
        loop {
            if i == w.len() {
                out.sort();
                return out;
            }
            if w[i] < caps[i] {
                w[i] += 1;
                break;
            }
            w[i] = 0;
            i += 1;
        }
    }
}

/// Every monomial of total degree at most `d` in `n` variables.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == n {
            out.push(Monomial::from_exponents(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur.push(e);
            go(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    out
}

/// `I : u` from the generator quotients, minimalized by pairwise division.
pub fn colon_gens(ideal: &MonomialIdeal, u: &Monomial) -> Vec<Monomial> {
    let qs: Vec<Monomial> = ideal.gens().iter().map(|g| g.colon(u)).collect();
    let mut out: Vec<Monomial> = Vec::new();
    for (a, q) in qs.iter().enumerate() {
        let dominated = qs
            .iter()
            .enumerate()
            .any(|(b, r)| r.divides(q) && (r != q || b < a));
        if !dominated {
            out.push(q.clone());
        }
    }
    out.sort();
    out
}

pub fn sorted(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens
}
