use std::collections::HashMap;
use std::sync::Arc;

use super::{FaceDisplay, SimplicialComplex};
use crate::error::{Error, Result};
use crate::search::{Budget, Memo};
use crate::varset::VarSet;

/// Certificate of k-decomposability: a shedding face per internal node, a simplex (or the
/// void complex) per leaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SheddingTree {
    Void,
    Simplex(VarSet),
    Node {
        face: VarSet,
        link: Arc<SheddingTree>,
        deletion: Arc<SheddingTree>,
    },
}

impl SheddingTree {
    /// Shedding faces in pre-order (node, link subtree, deletion subtree).
    pub fn shedding_sequence(&self) -> Vec<VarSet> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<VarSet>) {
        if let SheddingTree::Node {
            face,
            link,
            deletion,
        } = self
        {
            out.push(*face);
            link.collect(out);
            deletion.collect(out);
        }
    }

    /// Number of shedding faces.
    pub fn length(&self) -> usize {
        match self {
            SheddingTree::Node { link, deletion, .. } => 1 + link.length() + deletion.length(),
            _ => 0,
        }
    }
}

/// Literal shedding test: no facet of `(star σ) \ σ` is a facet of `Δ \ σ`.
pub fn is_shedding_face(complex: &SimplicialComplex, sigma: VarSet) -> Result<bool> {
    if sigma.is_empty() || !complex.contains_face(sigma) {
        return Err(Error::NotAFace(FaceDisplay(sigma).to_string()));
    }
    Ok(shedding_unchecked(complex, sigma))
}

fn shedding_unchecked(complex: &SimplicialComplex, sigma: VarSet) -> bool {
    let star_minus = complex.star(sigma).deletion(sigma);
    let deletion = complex.deletion(sigma);
    star_minus
        .facets()
        .iter()
        .all(|f| deletion.facets().binary_search(f).is_err())
}

/// Exhaustive memoized search for a k-decomposition.
///
/// `k = -1` is accepted; only the void and the empty complex qualify then.
pub struct ComplexSearch {
    memo: HashMap<(SimplicialComplex, i64), Memo<Arc<SheddingTree>>>,
    budget: Budget,
}

impl Default for ComplexSearch {
    fn default() -> Self {
        Self::new(Budget::unlimited())
    }
}

impl ComplexSearch {
    pub fn new(budget: Budget) -> Self {
        ComplexSearch {
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

    pub fn decide(&mut self, complex: &SimplicialComplex, k: i64) -> Result<Option<SheddingTree>> {
        if k < -1 {
            return Err(Error::InvalidArgument(format!("k = {k} is below -1")));
        }
        Ok(self.search(complex, k)?.map(|t| (*t).clone()))
    }

    fn search(&mut self, complex: &SimplicialComplex, k: i64) -> Result<Option<Arc<SheddingTree>>> {
        if complex.is_void() {
            return Ok(Some(Arc::new(SheddingTree::Void)));
        }
        if complex.is_empty_complex() {
            return Ok(Some(Arc::new(SheddingTree::Simplex(VarSet::EMPTY))));
        }
        if k < 0 {
            return Ok(None);
        }
        if complex.is_simplex() {
            return Ok(Some(Arc::new(SheddingTree::Simplex(complex.facets()[0]))));
        }
        let key = (complex.clone(), k);
        match self.memo.get(&key) {
            Some(Memo::Done(r)) => return Ok(r.clone()),
            Some(Memo::InProgress) => return Ok(None),
            None => {}
        }
        self.budget.tick(self.memo.len())?;
        self.memo.insert(key.clone(), Memo::InProgress);

        let max_size = (k + 1) as usize;
        let mut found = None;
        for sigma in complex.faces() {
            if sigma.is_empty() {
                continue;
            }
            if sigma.len() > max_size {
                break;
            }
            if !shedding_unchecked(complex, sigma) {
                continue;
            }
            let Some(link) = self.search(&complex.link(sigma), k)? else {
                continue;
            };
            let Some(deletion) = self.search(&complex.deletion(sigma), k)? else {
                continue;
            };
            found = Some(Arc::new(SheddingTree::Node {
                face: sigma,
                link,
                deletion,
            }));
            break;
        }
        self.memo.insert(key, Memo::Done(found.clone()));
        Ok(found)
    }
}

/// `Some(certificate)` iff `Δ` is k-decomposable; `None` as well for `k < -1`.
pub fn is_k_decomposable(complex: &SimplicialComplex, k: i64) -> Option<SheddingTree> {
    ComplexSearch::default().decide(complex, k).ok().flatten()
}

/// Re-derives every node condition from scratch.
pub fn verify_shedding_certificate(
    complex: &SimplicialComplex,
    tree: &SheddingTree,
    k: i64,
) -> Result<()> {
    verify_at(complex, tree, k, "root")
}

fn verify_at(complex: &SimplicialComplex, tree: &SheddingTree, k: i64, path: &str) -> Result<()> {
    let fail = |reason: String| {
        Err(Error::InvalidCertificate {
            path: path.to_string(),
            reason,
        })
    };
    match tree {
        SheddingTree::Void => {
            if !complex.is_void() {
                return fail(format!("{complex} is not the void complex"));
            }
        }
        SheddingTree::Simplex(face) => {
            if complex.facets() != [*face] {
                return fail(format!(
                    "{complex} is not the simplex {}",
                    FaceDisplay(*face)
                ));
            }
            if k < 0 && !face.is_empty() {
                return fail("only {} and the void complex are (-1)-decomposable".into());
            }
        }
        SheddingTree::Node {
            face,
            link,
            deletion,
        } => {
            if face.is_empty() || !complex.contains_face(*face) {
                return fail(format!("{} is not a non-empty face", FaceDisplay(*face)));
            }
            if face.len() as i64 > k + 1 {
                return fail(format!("{} has dimension above {k}", FaceDisplay(*face)));
            }
            if !shedding_unchecked(complex, *face) {
                return fail(format!("{} is not a shedding face", FaceDisplay(*face)));
            }
            verify_at(&complex.link(*face), link, k, &format!("{path}.link"))?;
            verify_at(
                &complex.deletion(*face),
                deletion,
                k,
                &format!("{path}.deletion"),
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets).unwrap()
    }

    fn set(vs: &[usize]) -> VarSet {
        vs.iter().map(|v| v - 1).collect()
    }

    #[test]
    fn shedding_faces_of_a_path() {
        let d = cx(3, &[&[1, 2], &[1, 3]]);
        assert!(is_shedding_face(&d, set(&[2])).unwrap());
        assert!(!is_shedding_face(&d, set(&[1])).unwrap());
        assert!(is_shedding_face(&d, set(&[2, 3])).is_err());
        assert!(is_shedding_face(&d, VarSet::EMPTY).is_err());
    }

    #[test]
    fn simplices_and_degenerate_complexes() {
        let s = cx(3, &[&[1, 2, 3]]);
        for k in 0..3 {
            assert_eq!(
                is_k_decomposable(&s, k),
                Some(SheddingTree::Simplex(set(&[1, 2, 3])))
            );
        }
        assert_eq!(is_k_decomposable(&s, -1), None);
        assert!(is_k_decomposable(&SimplicialComplex::void(2), -1).is_some());
        assert!(is_k_decomposable(&SimplicialComplex::empty(2), -1).is_some());
    }

    #[test]
    fn two_disjoint_edges_are_not_shellable() {
        let d = cx(4, &[&[1, 2], &[3, 4]]);
        for k in 0..3 {
            assert!(is_k_decomposable(&d, k).is_none());
        }
        // a disconnected 0-dimensional complex is vertex decomposable
        let pts = cx(3, &[&[1], &[2], &[3]]);
        let t = is_k_decomposable(&pts, 0).unwrap();
        verify_shedding_certificate(&pts, &t, 0).unwrap();
    }

    #[test]
    fn verifier_rejects_tampering() {
        let d = cx(3, &[&[1, 2], &[1, 3]]);
        let t = is_k_decomposable(&d, 0).unwrap();
        verify_shedding_certificate(&d, &t, 0).unwrap();
        let bad = SheddingTree::Node {
            face: set(&[1]),
            link: Arc::new(SheddingTree::Void),
            deletion: Arc::new(SheddingTree::Void),
        };
        let err = verify_shedding_certificate(&d, &bad, 0).unwrap_err();
        assert!(matches!(err, Error::InvalidCertificate { ref path, .. } if path == "root"));
    }
}
