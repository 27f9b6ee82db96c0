//! k-decomposable monomial ideals and the weakly polymatroidal test.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::search::{Budget, Memo};

/// `[u, v] = 1`: `ν_i(v) < ν_i(u)` for every `i ∈ supp(u)`.
pub fn bracket(u: &Monomial, v: &Monomial) -> bool {
    u.support().iter().all(|i| v.nu(i) < u.nu(i))
}

/// `(I^v, I_v)`: generators with `[v, g] ≠ 1` and with `[v, g] = 1`.
pub fn split(ideal: &MonomialIdeal, v: &Monomial) -> (MonomialIdeal, MonomialIdeal) {
    let (lower, upper): (Vec<Monomial>, Vec<Monomial>) =
        ideal.gens().iter().cloned().partition(|g| bracket(v, g));
    let ctx = ideal.ctx();
    (
        MonomialIdeal::from_minimal(ctx.clone(), upper),
        MonomialIdeal::from_minimal(ctx.clone(), lower),
    )
}

/// `v` is a shedding monomial: `I_v ≠ 0` and for each `u ∈ G(I_v)` and `l ∈ supp(v)` some
/// `w ∈ G(I^v)` has `w : u = x_l`.
pub fn is_shedding_monomial(ideal: &MonomialIdeal, v: &Monomial) -> bool {
    let (upper, lower) = split(ideal, v);
    if lower.is_zero() || v.is_unit() {
        return false;
    }
    let n = ideal.n();
    lower.gens().iter().all(|u| {
        v.support().iter().all(|l| {
            let target = Monomial::var(n, l);
            upper.gens().iter().any(|w| w.colon(u) == target)
        })
    })
}

/// Certificate of ideal k-decomposability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionTree {
    Generator(Monomial),
    Node {
        shedding: Monomial,
        upper: Arc<DecompositionTree>,
        lower: Arc<DecompositionTree>,
    },
}

impl DecompositionTree {
    /// Shedding monomials in pre-order (node, upper subtree, lower subtree).
    pub fn shedding_monomials(&self) -> Vec<&Monomial> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            if let DecompositionTree::Node {
                shedding,
                upper,
                lower,
            } = t
            {
                out.push(shedding);
                stack.push(lower);
                stack.push(upper);
            }
        }
        out
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

/// Non-unit monomials with `|supp v| ≤ k+1` and `ν_i(v) ≤ d_i`, in canonical order.
fn candidates(ideal: &MonomialIdeal, k: usize) -> Vec<Monomial> {
    let caps = ideal.max_exponents();
    let mut out = Vec::new();
    let mut exps = vec![0u32; ideal.n()];
    fn walk(
        vars: &[usize],
        caps: &[u32],
        left: usize,
        exps: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        let Some((&v, rest)) = vars.split_first() else {
            if exps.iter().any(|&e| e > 0) {
                out.push(Monomial::from_exponents(exps.clone()));
            }
            return;
        };
        walk(rest, caps, left, exps, out);
        if left > 0 {
            for e in 1..=caps[v] {
                exps[v] = e;
                walk(rest, caps, left - 1, exps, out);
            }
            exps[v] = 0;
        }
    }
    walk(
        &ideal.support().to_vec(),
        &caps,
        k.saturating_add(1),
        &mut exps,
        &mut out,
    );
    out.sort();
    out
}

/// Memoized exhaustive search for shedding-monomial decompositions.
pub struct IdealDecomposer {
    memo: HashMap<(MonomialIdeal, usize), Memo<Arc<DecompositionTree>>>,
    budget: Budget,
}

impl Default for IdealDecomposer {
    fn default() -> Self {
        Self::new(Budget::unlimited())
    }
}

impl IdealDecomposer {
    pub fn new(budget: Budget) -> Self {
        IdealDecomposer {
            memo: HashMap::new(),
            budget,
        }
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn decide(&mut self, ideal: &MonomialIdeal, k: usize) -> Result<Option<DecompositionTree>> {
        reject_trivial(ideal)?;
        Ok(self.search(ideal, k)?.map(|t| (*t).clone()))
    }

    fn search(
        &mut self,
        ideal: &MonomialIdeal,
        k: usize,
    ) -> Result<Option<Arc<DecompositionTree>>> {
        if let [g] = ideal.gens() {
            return Ok(Some(Arc::new(DecompositionTree::Generator(g.clone()))));
        }
        let key = (ideal.clone(), k);
        match self.memo.get(&key) {
            Some(Memo::Done(r)) => return Ok(r.clone()),
            Some(Memo::InProgress) => return Ok(None),
            None => {}
        }
        self.budget.tick(self.memo.len())?;
        self.memo.insert(key.clone(), Memo::InProgress);

        let mut found = None;
        for v in candidates(ideal, k) {
            if !is_shedding_monomial(ideal, &v) {
                continue;
            }
            let (upper_ideal, lower_ideal) = split(ideal, &v);
            let Some(upper) = self.search(&upper_ideal, k)? else {
                continue;
            };
            let Some(lower) = self.search(&lower_ideal, k)? else {
                continue;
            };
            found = Some(Arc::new(DecompositionTree::Node {
                shedding: v,
                upper,
                lower,
            }));
            break;
        }
        self.memo.insert(key, Memo::Done(found.clone()));
        Ok(found)
    }
}

/// `Some(certificate)` iff `I` is a k-decomposable ideal.
pub fn is_k_decomposable_ideal(
    ideal: &MonomialIdeal,
    k: usize,
) -> Result<Option<DecompositionTree>> {
    IdealDecomposer::default().decide(ideal, k)
}

/// Re-derives every node condition.
pub fn verify_decomposition(
    ideal: &MonomialIdeal,
    tree: &DecompositionTree,
    k: usize,
) -> Result<()> {
    verify_at(ideal, tree, k, "root")
}

fn verify_at(ideal: &MonomialIdeal, tree: &DecompositionTree, k: usize, path: &str) -> Result<()> {
    let fail = |reason: String| {
        Err(Error::InvalidCertificate {
            path: path.to_string(),
            reason,
        })
    };
    match tree {
        DecompositionTree::Generator(g) => {
            if ideal.gens() != std::slice::from_ref(g) {
                return fail(format!(
                    "{ideal} is not generated by {}",
                    ideal.display_monomial(g)
                ));
            }
        }
        DecompositionTree::Node {
            shedding,
            upper,
            lower,
        } => {
            if shedding.n() != ideal.n() {
                return fail("shedding monomial lives in a different ring".into());
            }
            let shown = ideal.display_monomial(shedding).to_string();
            if shedding.support().len() > k + 1 {
                return fail(format!("{shown} has more than {} variables", k + 1));
            }
            if !is_shedding_monomial(ideal, shedding) {
                return fail(format!("{shown} is not a shedding monomial of {ideal}"));
            }
            let (u, l) = split(ideal, shedding);
            verify_at(&u, upper, k, &format!("{path}.upper"))?;
            verify_at(&l, lower, k, &format!("{path}.lower"))?;
        }
    }
    Ok(())
}

/// Lexicographic exchange test; `order` lists every variable index, largest first.
///
/// For generators `u >_lex v` first differing at `x_t` (with `ν_t(u) > ν_t(v)`), some `x_j`
/// after `x_t` in the order must divide `v` with `x_t·v/x_j ∈ I`.
pub fn is_weakly_polymatroidal(ideal: &MonomialIdeal, order: &[usize]) -> Result<bool> {
    let n = ideal.n();
    let mut seen = vec![false; n];
    for &i in order {
        if i >= n || std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidArgument(
                "the variable order must list every variable exactly once".into(),
            ));
        }
    }
    if order.len() != n {
        return Err(Error::InvalidArgument(
            "the variable order must list every variable exactly once".into(),
        ));
    }
    let ctx = ideal.ctx();
    let gens = ideal.gens();
    for u in gens {
        for v in gens {
            let Some(pos) = order.iter().position(|&i| u.nu(i) != v.nu(i)) else {
                continue;
            };
            let t = order[pos];
            if u.nu(t) < v.nu(t) {
                continue;
            }
            let xt = Monomial::var(n, t);
            let exchanged = order[pos + 1..].iter().any(|&j| {
                v.nu(j) > 0
                    && v.colon(&Monomial::var(n, j))
                        .mul(&xt, ctx)
                        .is_ok_and(|w| ideal.contains_unchecked(&w))
            });
            if !exchanged {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
