//! Polarization `I ↦ I^p` and the specialization `π(x_{i,j}) = x_i` back.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{check_same, Monomial};
use crate::ring::RingContext;

/// Bookkeeping between a ring and its polarized ring.
///
/// Source variable `x_i` receives `copies[i] = max_g ν_i(g)` target variables
/// `x_{i,1}, …, x_{i,copies[i]}`, laid out by `i` then `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationMap {
    source: Arc<RingContext>,
    target: Arc<RingContext>,
    copies: Vec<u32>,
    offsets: Vec<usize>,
    origin: Vec<(usize, u32)>,
}

impl PolarizationMap {
    pub fn new(source: Arc<RingContext>, copies: Vec<u32>) -> Result<Self> {
        check_same(source.n(), copies.len())?;
        let mut offsets = Vec::with_capacity(copies.len());
        let mut origin = Vec::new();
        let mut names = Vec::new();
        for (i, &c) in copies.iter().enumerate() {
            offsets.push(origin.len());
            for j in 1..=c {
                origin.push((i, j));
                names.push(format!("{}_{}", source.name(i), j));
            }
        }
        if names.is_empty() {
            return Err(Error::InvalidArgument(
                "polarization needs at least one variable with a positive exponent".into(),
            ));
        }
        let target = RingContext::with_max_exponent(names, source.max_exponent())?;
        Ok(PolarizationMap {
            source,
            target,
            copies,
            offsets,
            origin,
        })
    }

    pub fn source(&self) -> &Arc<RingContext> {
        &self.source
    }

    pub fn target(&self) -> &Arc<RingContext> {
        &self.target
    }

    pub fn copies(&self) -> &[u32] {
        &self.copies
    }

    /// Index of `x_{i,j}` in the target ring (`j` is 1-based).
    pub fn target_index(&self, i: usize, j: u32) -> Option<usize> {
        (j >= 1 && j <= *self.copies.get(i)?).then(|| self.offsets[i] + (j - 1) as usize)
    }

    /// The pair `(i, j)` behind a target variable.
    pub fn origin(&self, target_var: usize) -> (usize, u32) {
        self.origin[target_var]
    }

    /// `u^p`; `None` when some exponent exceeds the number of copies.
    pub fn polarize_monomial(&self, u: &Monomial) -> Option<Monomial> {
        if u.n() != self.source.n() {
            return None;
        }
        let mut exps = vec![0; self.target.n()];
        for (i, &e) in u.exponents().iter().enumerate() {
            for j in 1..=e {
                exps[self.target_index(i, j)?] = 1;
            }
        }
        Some(Monomial::from_exponents(exps))
    }

    /// `π(u)`.
    pub fn project(&self, u: &Monomial) -> Result<Monomial> {
        check_same(self.target.n(), u.n())?;
        let mut exps = vec![0u32; self.source.n()];
        for (t, &e) in u.exponents().iter().enumerate() {
            exps[self.origin[t].0] += e;
        }
        Ok(Monomial::from_exponents(exps))
    }

    /// `π(J)`, minimalized.
    pub fn depolarize(&self, j: &MonomialIdeal) -> Result<MonomialIdeal> {
        if j.ctx() != &self.target && **j.ctx() != *self.target {
            return Err(Error::ContextMismatch {
                expected: self.target.n(),
                found: j.n(),
            });
        }
        let gens = j
            .gens()
            .iter()
            .map(|g| self.project(g))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(self.source.clone(), gens)
    }

    /// Polarizes an ideal of the source ring into the target ring of this map.
    pub fn polarize_ideal(&self, i: &MonomialIdeal) -> Result<MonomialIdeal> {
        let gens = i
            .gens()
            .iter()
            .map(|g| {
                self.polarize_monomial(g).ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "{} exceeds the polarization's copies",
                        g.display(&self.source)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(self.target.clone(), gens)
    }
}

/// `I^p` together with its map; the target ring has exactly `max_g ν_i(g)` copies of `x_i`.
pub fn polarize(i: &MonomialIdeal) -> Result<(MonomialIdeal, PolarizationMap)> {
    let map = PolarizationMap::new(i.ctx().clone(), i.max_exponents())?;
    let p = map.polarize_ideal(i)?;
    Ok((p, map))
}
