use std::cmp::{Ordering, Reverse};
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::RingContext;
use crate::varset::VarSet;

/// A monomial `x^a`, stored as its exponent vector `a ∈ ℕ^n`.
///
/// Monomials do not carry their ring; the owning [`crate::MonomialIdeal`] does. Binary
/// operations on monomials of different lengths panic; the ideal-level API checks lengths
/// and reports [`Error::ContextMismatch`] instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn unit(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn var(n: usize, i: usize) -> Self {
        Self::var_pow(n, i, 1)
    }

    pub fn var_pow(n: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; n];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// `x^σ` for a set of variables.
    pub fn from_set(n: usize, set: VarSet) -> Self {
        let mut exps = vec![0; n];
        for i in set.iter() {
            exps[i] = 1;
        }
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    /// `ν_i`, the exponent of the i-th variable.
    pub fn nu(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn support(&self) -> VarSet {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// `x^{supp(a)}`.
    pub fn squarefree_part(&self) -> Self {
        Monomial {
            exps: self.exps.iter().map(|&e| e.min(1)).collect(),
        }
    }

    /// `Some(i)` when the monomial is a power of the single variable `x_i`.
    pub fn pure_power_variable(&self) -> Option<usize> {
        let s = self.support();
        (s.len() == 1).then(|| s.min().unwrap())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.n(), other.n(), "monomials from different rings");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn try_divides(&self, other: &Monomial) -> Result<bool> {
        check_same(self.n(), other.n())?;
        Ok(self.divides(other))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.max(b))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.min(b))
    }

    /// `self / gcd(self, other)`: the generator of the principal colon `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }

    /// Exact quotient; `None` unless `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.colon(other))
    }

    /// Product, bounded by the ring's exponent limit.
    pub fn mul(&self, other: &Monomial, ctx: &RingContext) -> Result<Monomial> {
        check_same(self.n(), other.n())?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| ctx.check_exponent(u64::from(a) + u64::from(b)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        assert_eq!(self.n(), other.n(), "monomials from different rings");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn display<'a>(&'a self, ctx: &'a RingContext) -> DisplayMonomial<'a> {
        DisplayMonomial { mono: self, ctx }
    }
}

pub(crate) fn check_same(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::ContextMismatch { expected, found })
    }
}

/// Canonical order: total degree, then lexicographic with `x_1 > x_2 > …`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), Reverse(&self.exps)).cmp(&(other.degree(), Reverse(&other.exps)))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?}", self.exps)
    }
}

/// Text form in the ideal file syntax, e.g. `x1^2*x3`; the unit monomial prints as `1`.
pub struct DisplayMonomial<'a> {
    mono: &'a Monomial,
    ctx: &'a RingContext,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_unit() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ctx.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
