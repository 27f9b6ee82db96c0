use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{check_same, Monomial};
use crate::ring::RingContext;
use crate::varset::VarSet;

/// A monomial ideal, held as its minimal generating set `G(I)` in canonical order.
///
/// Two ideals over the same ring are equal exactly when their generator lists are equal,
/// so ideals serve directly as memoization keys.
#[derive(Clone)]
pub struct MonomialIdeal {
    ctx: Arc<RingContext>,
    gens: Vec<Monomial>,
}

/// A prime generated by a set of variables, `P = (x_i : i ∈ vars)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VariablePrime(pub VarSet);

impl VariablePrime {
    pub fn vars(&self) -> VarSet {
        self.0
    }

    pub fn to_ideal(&self, ctx: &Arc<RingContext>) -> MonomialIdeal {
        let n = ctx.n();
        MonomialIdeal::from_minimal(ctx.clone(), self.0.iter().map(|i| Monomial::var(n, i)))
    }

    pub fn display<'a>(&'a self, ctx: &'a RingContext) -> impl fmt::Display + 'a {
        DisplayPrime { set: self.0, ctx }
    }
}

struct DisplayPrime<'a> {
    set: VarSet,
    ctx: &'a RingContext,
}

impl fmt::Display for DisplayPrime<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.set.iter().map(|i| self.ctx.name(i)).collect();
        write!(f, "({})", names.join(", "))
    }
}

/// Minimal generators of the ideal spanned by `gens`, canonically sorted.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // divisors have no larger degree, so they were already seen
        if !kept.iter().any(|h| h.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, after minimalization. Exponents are checked against
    /// the ring's limit.
    pub fn new(ctx: Arc<RingContext>, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let n = ctx.n();
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            check_same(n, g.n())?;
            for &e in g.exponents() {
                ctx.check_exponent(u64::from(e))?;
            }
        }
        Ok(MonomialIdeal {
            gens: minimalize(gens),
            ctx,
        })
    }

    /// Builds from generators that are known to lie in `ctx` (lengths match).
    pub(crate) fn from_minimal(
        ctx: Arc<RingContext>,
        gens: impl IntoIterator<Item = Monomial>,
    ) -> Self {
        MonomialIdeal {
            gens: minimalize(gens.into_iter().collect()),
            ctx,
        }
    }

    /// Convenience constructor from exponent vectors in the standard ring `x1, …, xn`.
    pub fn from_exponents(n: usize, gens: &[&[u32]]) -> Result<Self> {
        let ctx = RingContext::standard(n)?;
        Self::new(
            ctx,
            gens.iter().map(|e| Monomial::from_exponents(e.to_vec())),
        )
    }

    /// Squarefree ideal from variable index sets (0-based) in the standard ring.
    pub fn from_sets(n: usize, sets: &[&[usize]]) -> Result<Self> {
        let ctx = RingContext::standard(n)?;
        Ok(Self::from_minimal(
            ctx,
            sets.iter()
                .map(|s| Monomial::from_set(n, s.iter().copied().collect())),
        ))
    }

    pub fn zero(ctx: Arc<RingContext>) -> Self {
        MonomialIdeal {
            ctx,
            gens: Vec::new(),
        }
    }

    pub fn unit(ctx: Arc<RingContext>) -> Self {
        let n = ctx.n();
        MonomialIdeal {
            ctx,
            gens: vec![Monomial::unit(n)],
        }
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_unit)
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// `d_i = max_{g ∈ G(I)} ν_i(g)` for every variable.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut d = vec![0; self.n()];
        for g in &self.gens {
            for (di, &e) in d.iter_mut().zip(g.exponents()) {
                *di = (*di).max(e);
            }
        }
        d
    }

    /// Variables occurring in some generator.
    pub fn support(&self) -> VarSet {
        self.gens
            .iter()
            .fold(VarSet::EMPTY, |acc, g| acc.union(g.support()))
    }

    pub fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                expected: self.n(),
                found: other.n(),
            })
        }
    }

    fn check(&self, u: &Monomial) -> Result<()> {
        check_same(self.n(), u.n())
    }

    /// Membership: some generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        self.check(u)?;
        Ok(self.contains_unchecked(u))
    }

    pub(crate) fn contains_unchecked(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Ideal containment `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    /// `I : u`, generated by `g / gcd(g, u)`.
    pub fn colon(&self, u: &Monomial) -> Result<Self> {
        self.check(u)?;
        Ok(self.colon_unchecked(u))
    }

    pub(crate) fn colon_unchecked(&self, u: &Monomial) -> Self {
        Self::from_minimal(self.ctx.clone(), self.gens.iter().map(|g| g.colon(u)))
    }

    /// `I + (u)`.
    pub fn add_monomial(&self, u: &Monomial) -> Result<Self> {
        self.check(u)?;
        Ok(self.add_unchecked(u))
    }

    pub(crate) fn add_unchecked(&self, u: &Monomial) -> Self {
        if self.contains_unchecked(u) {
            return self.clone();
        }
        let mut gens: Vec<Monomial> = self
            .gens
            .iter()
            .filter(|g| !u.divides(g))
            .cloned()
            .collect();
        gens.push(u.clone());
        gens.sort();
        MonomialIdeal {
            ctx: self.ctx.clone(),
            gens,
        }
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self::from_minimal(
            self.ctx.clone(),
            self.gens.iter().chain(&other.gens).cloned(),
        ))
    }

    /// `I ∩ J`, generated by the pairwise least common multiples.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self::from_minimal(
            self.ctx.clone(),
            self.gens
                .iter()
                .flat_map(|g| other.gens.iter().map(move |h| g.lcm(h))),
        ))
    }

    /// `√I`, generated by the squarefree parts of the generators.
    pub fn radical(&self) -> Self {
        Self::from_minimal(
            self.ctx.clone(),
            self.gens.iter().map(Monomial::squarefree_part),
        )
    }

    /// The variable set when the ideal is generated by distinct variables.
    pub fn is_prime(&self) -> Option<VariablePrime> {
        if self.gens.is_empty() {
            return None;
        }
        let mut vars = VarSet::EMPTY;
        for g in &self.gens {
            if g.degree() != 1 {
                return None;
            }
            vars = vars.union(g.support());
        }
        Some(VariablePrime(vars))
    }

    /// Whether every generator is a power of a single variable.
    pub fn is_irreducible(&self) -> bool {
        !self.is_zero() && self.gens.iter().all(|g| g.pure_power_variable().is_some())
    }

    /// Parses a monomial written with this ring's variable names.
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        crate::parse::parse_monomial(&self.ctx, text)
    }

    pub fn to_text(&self) -> String {
        crate::parse::write_ideal(self)
    }

    pub fn display_monomial<'a>(&'a self, u: &'a Monomial) -> impl fmt::Display + 'a {
        u.display(&self.ctx)
    }
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens && self.same_ring(other).is_ok()
    }
}

impl Eq for MonomialIdeal {}

impl Hash for MonomialIdeal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.gens.hash(state);
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.ctx))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn membership() {
        let i = ideal(5, &[&[1, 1, 0, 0, 0], &[0, 0, 1, 0, 0]]);
        assert!(i.contains(&mono(&[1, 1, 0, 0, 1])).unwrap());
        assert!(!i.contains(&mono(&[1, 0, 0, 0, 0])).unwrap());
        let zero = MonomialIdeal::zero(i.ctx().clone());
        assert!(!zero.contains(&mono(&[1, 1, 1, 1, 1])).unwrap());
        assert!(i.contains(&mono(&[1])).is_err());
    }

    #[test]
    fn colon_examples() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(
            i.colon(&mono(&[1, 0, 0])).unwrap(),
            ideal(3, &[&[0, 1, 0], &[0, 0, 1]])
        );

        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(
            i.colon(&mono(&[1, 0])).unwrap(),
            ideal(2, &[&[1, 0], &[0, 3]])
        );

        let j = ideal(4, &[&[1, 1, 0, 0], &[1, 0, 1, 0], &[1, 0, 0, 1]]);
        assert_eq!(
            j.colon(&mono(&[1, 0, 0, 0])).unwrap(),
            ideal(4, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])
        );
    }

    #[test]
    fn sum_examples() {
        let i = ideal(2, &[&[2, 0], &[0, 1]]);
        assert_eq!(
            i.add_monomial(&mono(&[1, 0])).unwrap(),
            ideal(2, &[&[1, 0], &[0, 1]])
        );

        let j = ideal(4, &[&[1, 1, 0, 0], &[1, 0, 1, 0], &[1, 0, 0, 1]]);
        assert_eq!(
            j.add_monomial(&mono(&[1, 0, 0, 0])).unwrap(),
            ideal(4, &[&[1, 0, 0, 0]])
        );
        assert_eq!(j.add_monomial(&mono(&[1, 1, 1, 0])).unwrap(), j);
    }

    #[test]
    fn radical_examples() {
        let i = ideal(3, &[&[2, 1, 0], &[0, 0, 3]]);
        assert_eq!(i.radical(), ideal(3, &[&[1, 1, 0], &[0, 0, 1]]));
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.radical(), ideal(2, &[&[1, 0]]));
        let p = ideal(3, &[&[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(p.radical(), p);
    }

    #[test]
    fn prime_recognition() {
        let p = ideal(3, &[&[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(p.is_prime().unwrap().vars().to_vec(), vec![0, 2]);
        assert!(ideal(1, &[&[2]]).is_prime().is_none());
        assert!(ideal(2, &[&[1, 1]]).is_prime().is_none());
        assert!(MonomialIdeal::zero(p.ctx().clone()).is_prime().is_none());
    }

    #[test]
    fn intersections() {
        assert_eq!(
            ideal(2, &[&[1, 0]])
                .intersect(&ideal(2, &[&[0, 1]]))
                .unwrap(),
            ideal(2, &[&[1, 1]])
        );
        assert_eq!(
            ideal(2, &[&[2, 0]])
                .intersect(&ideal(2, &[&[0, 2]]))
                .unwrap(),
            ideal(2, &[&[2, 2]])
        );
        assert_eq!(
            ideal(2, &[&[1, 0]])
                .intersect(&ideal(2, &[&[2, 0], &[0, 1]]))
                .unwrap(),
            ideal(2, &[&[2, 0], &[1, 1]])
        );
    }

    #[test]
    fn unit_and_zero() {
        let ctx = RingContext::standard(2).unwrap();
        let unit = MonomialIdeal::unit(ctx.clone());
        assert!(unit.is_unit());
        assert!(!unit.is_proper_nonzero());
        let i = ideal(2, &[&[1, 1]]);
        assert!(i.colon(&mono(&[1, 1])).unwrap().is_unit());
        assert!(MonomialIdeal::zero(ctx).is_zero());
    }
}
