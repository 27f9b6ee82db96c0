use super::{verify_certificate, IdealTree};
use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, VariablePrime};
use crate::monomial::Monomial;
use crate::primes::minimal_primes;

/// One step `H_{i-1} ⊂ H_i = H_{i-1} + S·u_i` with `H_{i-1} : u_i = P_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationStep {
    pub ideal: MonomialIdeal,
    pub monomial: Monomial,
    pub prime: VariablePrime,
    /// Multidegree `a_i` of the shifted quotient `S/P_i(-a_i)`.
    pub shift: Vec<u32>,
}

/// A clean prime filtration `I = H_0 ⊂ H_1 ⊂ … ⊂ H_s = S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub start: MonomialIdeal,
    pub steps: Vec<FiltrationStep>,
}

impl Filtration {
    /// The primes `P_i` in step order (with repetitions).
    pub fn primes(&self) -> Vec<VariablePrime> {
        self.steps.iter().map(|s| s.prime).collect()
    }
}

/// Flattens a certificate into a filtration.
///
/// The colon subtree's filtration is multiplied through by the cleaner `u`, which walks from
/// `I` up to `I + Su`; the sum subtree's filtration then continues to `S`.
pub fn clean_filtration(ideal: &MonomialIdeal, tree: &IdealTree) -> Result<Filtration> {
    verify_certificate(ideal, tree, ideal.n())?;
    let mut pairs = Vec::new();
    collect(ideal, tree, &Monomial::unit(ideal.n()), &mut pairs)?;
    let mut steps = Vec::with_capacity(pairs.len());
    let mut current = ideal.clone();
    for (u, prime) in pairs {
        current = current.add_unchecked(&u);
        steps.push(FiltrationStep {
            ideal: current.clone(),
            shift: u.exponents().to_vec(),
            monomial: u,
            prime,
        });
    }
    Ok(Filtration {
        start: ideal.clone(),
        steps,
    })
}

fn collect(
    ideal: &MonomialIdeal,
    tree: &IdealTree,
    factor: &Monomial,
    out: &mut Vec<(Monomial, VariablePrime)>,
) -> Result<()> {
    match tree {
        IdealTree::Leaf(p) => out.push((factor.clone(), *p)),
        IdealTree::Node {
            cleaner,
            colon,
            sum,
        } => {
            let lifted = factor.mul(cleaner, ideal.ctx())?;
            collect(&ideal.colon_unchecked(cleaner), colon, &lifted, out)?;
            collect(&ideal.add_unchecked(cleaner), sum, factor, out)?;
        }
    }
    Ok(())
}

/// Recomputes every step condition and `Supp ⊆ min(I)`.
pub fn check_filtration(filtration: &Filtration) -> Result<()> {
    let fail = |i: usize, reason: String| {
        Err(Error::InvalidCertificate {
            path: format!("step {i}"),
            reason,
        })
    };
    let start = &filtration.start;
    let mins = minimal_primes(start)?;
    let ctx = start.ctx();
    let mut previous = start.clone();
    for (i, step) in filtration.steps.iter().enumerate() {
        let i = i + 1;
        let colon = previous.colon(&step.monomial)?;
        if colon != step.prime.to_ideal(ctx) {
            return fail(
                i,
                format!("H : u = {colon}, expected {}", step.prime.display(ctx)),
            );
        }
        let next = previous.add_monomial(&step.monomial)?;
        if next != step.ideal {
            return fail(i, format!("H + Su = {next}, recorded {}", step.ideal));
        }
        if step.shift != step.monomial.exponents() {
            return fail(i, "shift differs from the multidegree of u".into());
        }
        if !mins.contains(&step.prime) {
            return fail(
                i,
                format!("{} is not a minimal prime", step.prime.display(ctx)),
            );
        }
        previous = next;
    }
    if !previous.is_unit() {
        return fail(
            filtration.steps.len(),
            format!("ends at {previous}, not at S"),
        );
    }
    Ok(())
}
