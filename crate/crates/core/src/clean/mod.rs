//! Cleaner monomials, the k-clean decision and its ideal-tree certificates.

mod filtration;
mod invariants;
mod verify;

use std::collections::HashMap;
use std::sync::Arc;

pub use filtration::{check_filtration, clean_filtration, Filtration, FiltrationStep};
pub use invariants::{invariants_from_certificate, HomologicalInvariants};
pub use verify::verify_certificate;

use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, VariablePrime};
use crate::monomial::{check_same, Monomial};
use crate::primes::{has_embedded_primes, minimal_prime_sets};
use crate::search::{Budget, Memo};
use crate::varset::{minimal_sets, VarSet};

/// Length and tree of a shortest certificate.
type Shortest = (usize, Arc<IdealTree>);

/// Certificate of k-cleanness: a cleaner per internal node, a prime per leaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealTree {
    Leaf(VariablePrime),
    Node {
        cleaner: Monomial,
        colon: Arc<IdealTree>,
        sum: Arc<IdealTree>,
    },
}

impl IdealTree {
    /// `l(T)`: the number of cleaner monomials in the tree.
    pub fn length(&self) -> usize {
        match self {
            IdealTree::Leaf(_) => 0,
            IdealTree::Node { colon, sum, .. } => 1 + colon.length() + sum.length(),
        }
    }

    /// Cleaners in pre-order (node, colon subtree, sum subtree).
    pub fn cleaners(&self) -> Vec<&Monomial> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect<'a>(&'a self, out: &mut Vec<&'a Monomial>) {
        if let IdealTree::Node {
            cleaner,
            colon,
            sum,
        } = self
        {
            out.push(cleaner);
            colon.collect(out);
            sum.collect(out);
        }
    }

    /// Largest cleaner support minus one; the smallest k this tree certifies (0 for a leaf).
    pub fn required_k(&self) -> usize {
        self.cleaners()
            .iter()
            .map(|u| u.support().len().saturating_sub(1))
            .max()
            .unwrap_or(0)
    }
}

fn reject_trivial(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        Err(Error::ZeroIdeal)
    } else if ideal.is_unit() {
        Err(Error::UnitIdeal)
    } else {
        Ok(())
    }
}

/// `min(I + Su) ⊆ min(I)`, using `min(I + Su) = Min{P ∪ {i} : P ∈ min(I), i ∈ supp u}`.
fn cleans(min_primes: &[VarSet], u: &Monomial) -> bool {
    let support = u.support();
    let mut extended = Vec::new();
    for &p in min_primes {
        if !p.is_disjoint(support) {
            extended.push(p);
        } else {
            extended.extend(support.iter().map(|i| p.with(i)));
        }
    }
    minimal_sets(extended)
        .iter()
        .all(|q| min_primes.binary_search(q).is_ok())
}

/// Whether `u` is a cleaner monomial of `I`.
pub fn is_cleaner(ideal: &MonomialIdeal, u: &Monomial) -> Result<bool> {
    reject_trivial(ideal)?;
    check_same(ideal.n(), u.n())?;
    if let Some(p) = ideal.is_prime() {
        return Err(Error::PrimeIdeal(p.display(ideal.ctx()).to_string()));
    }
    if u.is_unit() || ideal.contains_unchecked(u) {
        return Ok(false);
    }
    let mut mins = minimal_prime_sets(ideal);
    mins.sort();
    Ok(cleans(&mins, u))
}

/// Candidates in canonical order: `u ∉ I`, `1 ≤ |supp u| ≤ k+1`, `ν_i(u) ≤ d_i`, `I : u ≠ I`.
///
/// For squarefree `I` every `d_i ≤ 1`, so only squarefree monomials appear.
pub fn candidate_cleaners(ideal: &MonomialIdeal, k: usize) -> Vec<Monomial> {
    let caps = ideal.max_exponents();
    let vars: Vec<usize> = ideal.support().to_vec();
    let n = ideal.n();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];

    fn walk(
        vars: &[usize],
        caps: &[u32],
        left: usize,
        exps: &mut Vec<u32>,
        used: usize,
        out: &mut Vec<Monomial>,
    ) {
        let Some((&v, rest)) = vars.split_first() else {
            if used > 0 {
                out.push(Monomial::from_exponents(exps.clone()));
            }
            return;
        };
        walk(rest, caps, left, exps, used, out);
        if left > 0 {
            for e in 1..=caps[v] {
                exps[v] = e;
                walk(rest, caps, left - 1, exps, used + 1, out);
            }
            exps[v] = 0;
        }
    }
    walk(&vars, &caps, k.saturating_add(1), &mut exps, 0, &mut out);

    out.retain(|u| !ideal.contains_unchecked(u) && ideal.colon_unchecked(u) != *ideal);
    out.sort();
    out
}

/// Memoized exhaustive search for k-clean certificates.
///
/// One engine may answer many queries; the memo is keyed on `(ideal, k)` and caches
/// negative answers as well.
pub struct CleanEngine {
    memo: HashMap<(MonomialIdeal, usize), Memo<Arc<IdealTree>>>,
    lengths: HashMap<(MonomialIdeal, usize), Option<Shortest>>,
    budget: Budget,
}

impl Default for CleanEngine {
    fn default() -> Self {
        Self::new(Budget::unlimited())
    }
}

impl CleanEngine {
    pub fn new(budget: Budget) -> Self {
        CleanEngine {
            memo: HashMap::new(),
            lengths: HashMap::new(),
            budget,
        }
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len() + self.lengths.len()
    }

    /// `Some(certificate)` iff `I` is k-clean; the certificate uses the first successful
    /// cleaner in candidate order at every node.
    pub fn is_k_clean(&mut self, ideal: &MonomialIdeal, k: usize) -> Result<Option<IdealTree>> {
        reject_trivial(ideal)?;
        Ok(self.search(ideal, k)?.map(|t| (*t).clone()))
    }

    fn search(&mut self, ideal: &MonomialIdeal, k: usize) -> Result<Option<Arc<IdealTree>>> {
        if let Some(p) = ideal.is_prime() {
            return Ok(Some(Arc::new(IdealTree::Leaf(p))));
        }
        let key = (ideal.clone(), k);
        match self.memo.get(&key) {
            Some(Memo::Done(r)) => return Ok(r.clone()),
            Some(Memo::InProgress) => return Ok(None),
            None => {}
        }
        self.budget.tick(self.memo_len())?;
        self.memo.insert(key.clone(), Memo::InProgress);

        let mut found = None;
        if !has_embedded_primes(ideal)? {
            let mut mins = minimal_prime_sets(ideal);
            mins.sort();
            for u in candidate_cleaners(ideal, k) {
                if !cleans(&mins, &u) {
                    continue;
                }
                let Some(colon) = self.search(&ideal.colon_unchecked(&u), k)? else {
                    continue;
                };
                let Some(sum) = self.search(&ideal.add_unchecked(&u), k)? else {
                    continue;
                };
                found = Some(Arc::new(IdealTree::Node {
                    cleaner: u,
                    colon,
                    sum,
                }));
                break;
            }
        }
        self.memo.insert(key, Memo::Done(found.clone()));
        Ok(found)
    }

    /// A k-clean certificate with the fewest cleaners, or `None` when `I` is not k-clean.
    pub fn minimal_certificate(
        &mut self,
        ideal: &MonomialIdeal,
        k: usize,
    ) -> Result<Option<IdealTree>> {
        reject_trivial(ideal)?;
        Ok(self.shortest(ideal, k)?.map(|(_, t)| (*t).clone()))
    }

    /// `l(I)` over k-clean certificates.
    pub fn cleanness_length(&mut self, ideal: &MonomialIdeal, k: usize) -> Result<Option<usize>> {
        reject_trivial(ideal)?;
        Ok(self.shortest(ideal, k)?.map(|(len, _)| len))
    }

    fn shortest(&mut self, ideal: &MonomialIdeal, k: usize) -> Result<Option<Shortest>> {
        if let Some(p) = ideal.is_prime() {
            return Ok(Some((0, Arc::new(IdealTree::Leaf(p)))));
        }
        let key = (ideal.clone(), k);
        if let Some(r) = self.lengths.get(&key) {
            return Ok(r.clone());
        }
        self.budget.tick(self.memo_len())?;

        let mut best: Option<Shortest> = None;
        if !has_embedded_primes(ideal)? {
            let mut mins = minimal_prime_sets(ideal);
            mins.sort();
            for u in candidate_cleaners(ideal, k) {
                if !cleans(&mins, &u) {
                    continue;
                }
                let Some((lc, colon)) = self.shortest(&ideal.colon_unchecked(&u), k)? else {
                    continue;
                };
                let Some((ls, sum)) = self.shortest(&ideal.add_unchecked(&u), k)? else {
                    continue;
                };
                let len = 1 + lc + ls;
                if best.as_ref().is_none_or(|(b, _)| len < *b) {
                    best = Some((
                        len,
                        Arc::new(IdealTree::Node {
                            cleaner: u,
                            colon,
                            sum,
                        }),
                    ));
                }
                if len == 1 {
                    break;
                }
            }
        }
        self.lengths.insert(key, best.clone());
        Ok(best)
    }
}

/// `Some(certificate)` iff `I` is k-clean (unlimited budget).
pub fn is_k_clean(ideal: &MonomialIdeal, k: usize) -> Result<Option<IdealTree>> {
    CleanEngine::default().is_k_clean(ideal, k)
}

/// `l(I)` with the default expansion budget.
pub fn cleanness_length(ideal: &MonomialIdeal, k: usize) -> Result<Option<usize>> {
    CleanEngine::new(Budget::default()).cleanness_length(ideal, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;

    fn sets(n: usize, s: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_sets(n, s).unwrap()
    }

    fn mono(i: &MonomialIdeal, text: &str) -> Monomial {
        i.parse_monomial(text).unwrap()
    }

    fn names(i: &MonomialIdeal, us: &[Monomial]) -> Vec<String> {
        us.iter()
            .map(|u| i.display_monomial(u).to_string())
            .collect()
    }

    fn star_ideal() -> MonomialIdeal {
        sets(4, &[&[0, 1], &[0, 2], &[0, 3]])
    }

    #[test]
    fn cleaner_examples() {
        let j = star_ideal();
        assert!(is_cleaner(&j, &mono(&j, "x1")).unwrap());
        assert!(!is_cleaner(&j, &mono(&j, "x2")).unwrap());
        let p = sets(3, &[&[0, 1]]);
        assert!(!is_cleaner(&p, &mono(&p, "x3")).unwrap());
        assert!(!is_cleaner(&p, &mono(&p, "1")).unwrap());
        let prime = sets(3, &[&[0], &[2]]);
        assert!(matches!(
            is_cleaner(&prime, &mono(&prime, "x2")),
            Err(Error::PrimeIdeal(_))
        ));
        let unit = MonomialIdeal::unit(j.ctx().clone());
        assert_eq!(is_cleaner(&unit, &mono(&j, "x1")), Err(Error::UnitIdeal));
    }

    #[test]
    fn candidate_streams() {
        let i = sets(3, &[&[0, 1]]);
        assert_eq!(names(&i, &candidate_cleaners(&i, 0)), ["x1", "x2"]);
        let i = parse_ideal("vars x1 x2\nx1^2\nx2\n").unwrap();
        assert_eq!(names(&i, &candidate_cleaners(&i, 0)), ["x1"]);
        let i = sets(4, &[&[0, 1], &[2, 3]]);
        let c = candidate_cleaners(&i, 1);
        assert!(c
            .iter()
            .all(|u| u.is_squarefree() && u.support().len() <= 2));
        assert_eq!(c.len(), 4 + 4);
    }

    #[test]
    fn star_ideal_is_zero_clean() {
        let j = star_ideal();
        let t = is_k_clean(&j, 0).unwrap().unwrap();
        assert_eq!(
            names(&j, &t.cleaners().into_iter().cloned().collect::<Vec<_>>()),
            ["x1"]
        );
        assert_eq!(t.length(), 1);
        assert_eq!(cleanness_length(&j, 0).unwrap(), Some(1));
        verify_certificate(&j, &t, 0).unwrap();
    }

    #[test]
    fn primes_are_leaves() {
        let p = sets(4, &[&[1], &[3]]);
        for k in 0..3 {
            assert_eq!(
                is_k_clean(&p, k).unwrap(),
                Some(IdealTree::Leaf(VariablePrime([1, 3].into_iter().collect())))
            );
        }
        assert_eq!(cleanness_length(&p, 0).unwrap(), Some(0));
    }

    #[test]
    fn embedded_primes_block_cleanness() {
        let i = parse_ideal("vars x1 x2\nx1^2\nx1*x2\n").unwrap();
        for k in 0..2 {
            assert_eq!(is_k_clean(&i, k).unwrap(), None);
        }
    }

    #[test]
    fn trivial_ideals_are_rejected() {
        let j = star_ideal();
        assert_eq!(
            is_k_clean(&MonomialIdeal::zero(j.ctx().clone()), 0),
            Err(Error::ZeroIdeal)
        );
        assert_eq!(
            is_k_clean(&MonomialIdeal::unit(j.ctx().clone()), 0),
            Err(Error::UnitIdeal)
        );
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let i = sets(6, &[&[0, 1], &[2, 3], &[4, 5]]);
        let mut engine = CleanEngine::new(Budget::new(1));
        assert!(matches!(
            engine.is_k_clean(&i, 0),
            Err(Error::BudgetExhausted { budget: 1, .. })
        ));
    }
}
