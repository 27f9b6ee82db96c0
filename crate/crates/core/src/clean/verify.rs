use super::IdealTree;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::primes::{associated_primes, minimal_primes};

/// Re-derives every node condition of `tree` against `I` and `k`.
///
/// Minimal and associated primes are recomputed from scratch at each node. On failure the
/// error carries the path of the first failing node, e.g. `root.colon.sum`.
pub fn verify_certificate(ideal: &MonomialIdeal, tree: &IdealTree, k: usize) -> Result<()> {
    verify_at(ideal, tree, k, "root")
}

fn verify_at(ideal: &MonomialIdeal, tree: &IdealTree, k: usize, path: &str) -> Result<()> {
    let fail = |reason: String| {
        Err(Error::InvalidCertificate {
            path: path.to_string(),
            reason,
        })
    };
    if ideal.is_zero() || ideal.is_unit() {
        return fail(format!("{ideal} is not a proper nonzero ideal"));
    }
    match tree {
        IdealTree::Leaf(p) => {
            if ideal.is_prime() != Some(*p) {
                return fail(format!(
                    "{ideal} is not the prime {}",
                    p.display(ideal.ctx())
                ));
            }
        }
        IdealTree::Node {
            cleaner: u,
            colon,
            sum,
        } => {
            if u.n() != ideal.n() {
                return fail("cleaner lives in a different ring".into());
            }
            let shown = ideal.display_monomial(u).to_string();
            if u.is_unit() {
                return fail("the cleaner is the unit monomial".into());
            }
            if u.support().len() > k + 1 {
                return fail(format!("{shown} has more than {} variables", k + 1));
            }
            if ideal.contains_unchecked(u) {
                return fail(format!("{shown} lies in {ideal}"));
            }
            let mins = minimal_primes(ideal)?;
            if associated_primes(ideal)? != mins {
                return fail(format!("{ideal} has embedded primes"));
            }
            let sum_ideal = ideal.add_unchecked(u);
            let sum_mins = minimal_primes(&sum_ideal)?;
            if let Some(q) = sum_mins.iter().find(|q| !mins.contains(q)) {
                return fail(format!(
                    "{shown} is not a cleaner: {} is a new minimal prime",
                    q.display(ideal.ctx())
                ));
            }
            verify_at(
                &ideal.colon_unchecked(u),
                colon,
                k,
                &format!("{path}.colon"),
            )?;
            verify_at(&sum_ideal, sum, k, &format!("{path}.sum"))?;
        }
    }
    Ok(())
}
