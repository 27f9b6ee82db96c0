//! Irreducible decomposition, associated and minimal primes, prime powers.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, VariablePrime};
use crate::monomial::Monomial;
use crate::ring::RingContext;
use crate::varset::{minimal_transversals, VarSet};

/// An irreducible monomial ideal `(x_i^{a_i} : i ∈ support)`.
///
/// `exps[i]` is the exponent of the pure power of `x_i` among the generators, or 0 when
/// `x_i` does not occur.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IrreducibleComponent {
    exps: Vec<u32>,
}

impl IrreducibleComponent {
    /// Reads the pure powers off an ideal generated by them.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Option<Self> {
        if !ideal.is_irreducible() {
            return None;
        }
        let mut exps = vec![0; ideal.n()];
        for g in ideal.gens() {
            let i = g.pure_power_variable()?;
            exps[i] = g.nu(i);
        }
        Some(IrreducibleComponent { exps })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn to_ideal(&self, ctx: &Arc<RingContext>) -> MonomialIdeal {
        let n = self.exps.len();
        MonomialIdeal::from_minimal(
            ctx.clone(),
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| Monomial::var_pow(n, i, e)),
        )
    }

    pub fn radical(&self) -> VariablePrime {
        VariablePrime(
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect(),
        )
    }

    /// `self ⊆ other`: every pure power of `self` is a multiple of one in `other`.
    pub fn is_subset(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || (b > 0 && b <= a))
    }
}

fn ensure_proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        Err(Error::ZeroIdeal)
    } else if ideal.is_unit() {
        Err(Error::UnitIdeal)
    } else {
        Ok(())
    }
}

/// Drops every component that contains another one.
fn prune(mut comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    comps.sort();
    comps.dedup();
    let keep: Vec<bool> = comps
        .iter()
        .enumerate()
        .map(|(i, c)| {
            !comps
                .iter()
                .enumerate()
                .any(|(j, d)| i != j && d.is_subset(c))
        })
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

struct Decomposer {
    memo: HashMap<MonomialIdeal, Vec<IrreducibleComponent>>,
}

impl Decomposer {
    fn run(&mut self, ideal: &MonomialIdeal) -> Vec<IrreducibleComponent> {
        if let Some(done) = self.memo.get(ideal) {
            return done.clone();
        }
        // first non-pure-power generator in canonical order, split at its first variable
        let split = ideal
            .gens()
            .iter()
            .find(|g| g.pure_power_variable().is_none());
        let result = match split {
            None => vec![IrreducibleComponent::from_ideal(ideal).expect("pure powers")],
            Some(u) => {
                let i = u.support().min().expect("non-unit generator");
                let v = Monomial::var_pow(ideal.n(), i, u.nu(i));
                let w = u.colon(&v);
                let mut comps = self.run(&ideal.add_unchecked(&v));
                comps.extend(self.run(&ideal.add_unchecked(&w)));
                prune(comps)
            }
        };
        self.memo.insert(ideal.clone(), result.clone());
        result
    }
}

/// Irredundant irreducible decomposition `I = ⋂ C_j`, sorted.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    ensure_proper_nonzero(ideal)?;
    let mut d = Decomposer {
        memo: HashMap::new(),
    };
    Ok(d.run(ideal))
}

/// `Ass(S/I)`: radicals of the irreducible components.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<VariablePrime>> {
    if ideal.is_squarefree() {
        return minimal_primes(ideal);
    }
    let set: BTreeSet<VariablePrime> = irreducible_decomposition(ideal)?
        .iter()
        .map(IrreducibleComponent::radical)
        .collect();
    Ok(set.into_iter().collect())
}

/// `min(I)`: minimal transversals of the generator supports.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<VariablePrime>> {
    ensure_proper_nonzero(ideal)?;
    Ok(minimal_prime_sets(ideal)
        .into_iter()
        .map(VariablePrime)
        .collect())
}

pub(crate) fn minimal_prime_sets(ideal: &MonomialIdeal) -> Vec<VarSet> {
    let supports: Vec<VarSet> = ideal.gens().iter().map(Monomial::support).collect();
    minimal_transversals(&supports)
}

/// Whether some associated prime is not minimal.
pub fn has_embedded_primes(ideal: &MonomialIdeal) -> Result<bool> {
    ensure_proper_nonzero(ideal)?;
    if ideal.is_squarefree() {
        return Ok(false);
    }
    Ok(associated_primes(ideal)? != minimal_primes(ideal)?)
}

/// `I ∩ J`.
pub fn intersect(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    i.intersect(j)
}

/// `P^m`: all degree-`m` monomials in the variables of `P`.
pub fn prime_power(ctx: &Arc<RingContext>, prime: &VariablePrime, m: u32) -> Result<MonomialIdeal> {
    if m == 0 {
        return Err(Error::InvalidArgument("the power must be positive".into()));
    }
    ctx.check_exponent(u64::from(m))?;
    let n = ctx.n();
    let vars = prime.vars().to_vec();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn fill(vars: &[usize], left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        match vars {
            [] => {}
            [last] => {
                exps[*last] = left;
                out.push(Monomial::from_exponents(exps.clone()));
                exps[*last] = 0;
            }
            [first, rest @ ..] => {
                for e in (0..=left).rev() {
                    exps[*first] = e;
                    fill(rest, left - e, exps, out);
                }
                exps[*first] = 0;
            }
        }
    }
    fill(&vars, m, &mut exps, &mut out);
    Ok(MonomialIdeal::from_minimal(ctx.clone(), out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    fn primes(ps: &[VariablePrime]) -> Vec<Vec<usize>> {
        ps.iter().map(|p| p.vars().to_vec()).collect()
    }

    #[test]
    fn decomposition_examples() {
        let i = ideal(2, &[&[1, 1]]);
        let d = irreducible_decomposition(&i).unwrap();
        let ctx = i.ctx();
        let d: Vec<String> = d.iter().map(|c| c.to_ideal(ctx).to_string()).collect();
        assert_eq!(d, ["(x2)", "(x1)"]);

        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let d = irreducible_decomposition(&i).unwrap();
        let mut d: Vec<String> = d.iter().map(|c| c.to_ideal(ctx).to_string()).collect();
        d.sort();
        assert_eq!(d, ["(x1)", "(x2, x1^2)"]);

        let irr = ideal(3, &[&[2, 0, 0], &[0, 0, 3]]);
        let d = irreducible_decomposition(&irr).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].to_ideal(irr.ctx()), irr);
    }

    #[test]
    fn decomposition_rejects_trivial_ideals() {
        let ctx = RingContext::standard(2).unwrap();
        assert_eq!(
            irreducible_decomposition(&MonomialIdeal::zero(ctx.clone())),
            Err(Error::ZeroIdeal)
        );
        assert_eq!(
            minimal_primes(&MonomialIdeal::unit(ctx)),
            Err(Error::UnitIdeal)
        );
    }

    #[test]
    fn associated_and_minimal() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(
            primes(&associated_primes(&i).unwrap()),
            vec![vec![0], vec![0, 1]]
        );
        assert_eq!(primes(&minimal_primes(&i).unwrap()), vec![vec![0]]);
        assert!(has_embedded_primes(&i).unwrap());

        let i = ideal(3, &[&[0, 1, 1]]);
        assert_eq!(primes(&minimal_primes(&i).unwrap()), vec![vec![1], vec![2]]);

        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(
            primes(&minimal_primes(&i).unwrap()),
            vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]
        );
        assert_eq!(associated_primes(&i).unwrap(), minimal_primes(&i).unwrap());

        let p = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(primes(&associated_primes(&p).unwrap()), vec![vec![0, 1]]);
        let irr = ideal(3, &[&[3, 0, 0], &[0, 2, 0]]);
        assert!(!has_embedded_primes(&irr).unwrap());
    }

    #[test]
    fn prime_powers() {
        let ctx = RingContext::standard(3).unwrap();
        let p = |xs: &[usize]| VariablePrime(xs.iter().copied().collect());
        assert_eq!(
            prime_power(&ctx, &p(&[0]), 2).unwrap().to_string(),
            "(x1^2)"
        );
        assert_eq!(
            prime_power(&ctx, &p(&[0, 1]), 2).unwrap().to_string(),
            "(x1^2, x1*x2, x2^2)"
        );
        assert_eq!(
            prime_power(&ctx, &p(&[0, 1, 2]), 1).unwrap().to_string(),
            "(x1, x2, x3)"
        );
        assert!(prime_power(&ctx, &p(&[0]), 0).is_err());
    }
}
