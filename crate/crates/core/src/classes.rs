//! Constructors for irreducible ideals, complete intersections, powers and uniform matroids.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, VariablePrime};
use crate::monomial::Monomial;
use crate::polarize::PolarizationMap;
use crate::primes::prime_power;
use crate::ring::RingContext;
use crate::simplicial::SimplicialComplex;
use crate::varset::VarSet;

/// `(x_i^{a_i} : (i, a_i) ∈ powers)`.
pub fn make_irreducible(ctx: &Arc<RingContext>, powers: &[(usize, u32)]) -> Result<MonomialIdeal> {
    if powers.is_empty() {
        return Err(Error::InvalidArgument(
            "an irreducible ideal needs at least one power".into(),
        ));
    }
    let n = ctx.n();
    let mut seen = VarSet::EMPTY;
    let mut gens = Vec::with_capacity(powers.len());
    for &(i, a) in powers {
        if i >= n || a == 0 || seen.contains(i) {
            return Err(Error::InvalidArgument(format!(
                "invalid pure power: variable index {i}, exponent {a}"
            )));
        }
        seen.insert(i);
        gens.push(Monomial::var_pow(n, i, a));
    }
    MonomialIdeal::new(ctx.clone(), gens)
}

/// The ideal of pairwise coprime non-unit generators.
pub fn make_complete_intersection(
    ctx: &Arc<RingContext>,
    gens: Vec<Monomial>,
) -> Result<MonomialIdeal> {
    if gens.is_empty() {
        return Err(Error::InvalidArgument("no generators".into()));
    }
    for (a, u) in gens.iter().enumerate() {
        if u.n() != ctx.n() {
            return Err(Error::ContextMismatch {
                expected: ctx.n(),
                found: u.n(),
            });
        }
        if u.is_unit() {
            return Err(Error::UnitIdeal);
        }
        for v in &gens[a + 1..] {
            if !u.support().is_disjoint(v.support()) {
                return Err(Error::NotCoprime(
                    u.display(ctx).to_string(),
                    v.display(ctx).to_string(),
                ));
            }
        }
    }
    MonomialIdeal::new(ctx.clone(), gens)
}

/// `I^{(m)} = ⋂_F (P_{F^c})^m` over the facets of `Δ`.
///
/// Matroids only unless `allow_non_matroid` is set.
pub fn symbolic_power(
    complex: &SimplicialComplex,
    m: u32,
    allow_non_matroid: bool,
) -> Result<MonomialIdeal> {
    symbolic_power_in(
        &RingContext::standard(complex.n())?,
        complex,
        m,
        allow_non_matroid,
    )
}

pub fn symbolic_power_in(
    ctx: &Arc<RingContext>,
    complex: &SimplicialComplex,
    m: u32,
    allow_non_matroid: bool,
) -> Result<MonomialIdeal> {
    if m == 0 {
        return Err(Error::InvalidArgument("the power must be positive".into()));
    }
    if ctx.n() != complex.n() {
        return Err(Error::ContextMismatch {
            expected: ctx.n(),
            found: complex.n(),
        });
    }
    if complex.is_void() {
        return Err(Error::InvalidArgument(
            "the void complex has the unit ideal".into(),
        ));
    }
    if !allow_non_matroid && !complex.is_matroid() {
        return Err(Error::NotMatroid);
    }
    let n = complex.n();
    let mut result: Option<MonomialIdeal> = None;
    for f in complex.facets() {
        let p = prime_power(ctx, &VariablePrime(f.complement(n)), m)?;
        result = Some(match result {
            None => p,
            Some(acc) => acc.intersect(&p)?,
        });
    }
    Ok(result.expect("a non-void complex has a facet"))
}

/// `I^m`, minimalized.
pub fn ordinary_power(ideal: &MonomialIdeal, m: u32) -> Result<MonomialIdeal> {
    if m == 0 {
        return Err(Error::InvalidArgument("the power must be positive".into()));
    }
    let ctx = ideal.ctx();
    let mut acc = ideal.clone();
    for _ in 1..m {
        let mut gens = Vec::with_capacity(acc.gens().len() * ideal.gens().len());
        for g in acc.gens() {
            for h in ideal.gens() {
                gens.push(g.mul(h, ctx)?);
            }
        }
        acc = MonomialIdeal::new(ctx.clone(), gens)?;
    }
    Ok(acc)
}

/// `U_{r,n}`: all `r`-subsets of `[n]` as facets.
pub fn uniform_matroid(r: usize, n: usize) -> Result<SimplicialComplex> {
    if r == 0 || r > n || n > crate::varset::MAX_VARS {
        return Err(Error::InvalidArgument(format!(
            "U({r},{n}) needs 1 <= r <= n"
        )));
    }
    let facets = VarSet::full(n).subsets().filter(|s| s.len() == r);
    Ok(SimplicialComplex::new(n, facets))
}

/// Target variables of a polarization, largest first: `x_{i,j} > x_{i',j'}` when `j < j'`,
/// or `j = j'` and `i < i'`.
pub fn copy_major_order(map: &PolarizationMap) -> Vec<usize> {
    let mut vars: Vec<usize> = (0..map.target().n()).collect();
    vars.sort_by_key(|&t| {
        let (i, j) = map.origin(t);
        (j, i)
    });
    vars
}
