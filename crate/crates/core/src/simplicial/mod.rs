//! Simplicial complexes on `{1, …, n}`, the Stanley–Reisner correspondence, Alexander
//! duality and matroid recognition.
//!
//! Vertices are 0-based internally and 1-based in every text form.

mod decompose;

pub use decompose::{
    is_k_decomposable, is_shedding_face, verify_shedding_certificate, ComplexSearch, SheddingTree,
};

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::primes::minimal_prime_sets;
use crate::ring::RingContext;
use crate::varset::{maximal_sets, minimal_transversals, VarSet};

/// A complex given by its facets, an antichain of vertex sets.
///
/// The void complex has no facets; the empty complex `{∅}` has the single facet `∅`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    /// The complex generated by `faces`; non-maximal entries are dropped.
    pub fn new(n: usize, faces: impl IntoIterator<Item = VarSet>) -> Self {
        let faces: Vec<VarSet> = faces.into_iter().collect();
        debug_assert!(faces.iter().all(|f| f.is_subset(VarSet::full(n))));
        SimplicialComplex {
            n,
            facets: maximal_sets(faces),
        }
    }

    /// From 1-based vertex lists, as written in the literature.
    pub fn from_facets(n: usize, facets: &[&[usize]]) -> Result<Self> {
        let mut out = Vec::with_capacity(facets.len());
        for f in facets {
            let mut s = VarSet::EMPTY;
            for &v in *f {
                if v == 0 || v > n {
                    return Err(Error::InvalidArgument(format!(
                        "vertex {v} outside 1..={n}"
                    )));
                }
                s.insert(v - 1);
            }
            out.push(s);
        }
        Ok(Self::new(n, out))
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: Vec::new(),
        }
    }

    pub fn empty(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VarSet::EMPTY],
        }
    }

    pub fn simplex(n: usize, face: VarSet) -> Self {
        SimplicialComplex {
            n,
            facets: vec![face],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets == [VarSet::EMPTY]
    }

    /// A single facet (this includes `{∅}`).
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// `max |F| - 1`; `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn vertices(&self) -> VarSet {
        self.facets.iter().fold(VarSet::EMPTY, |a, f| a.union(*f))
    }

    pub fn contains_face(&self, sigma: VarSet) -> bool {
        self.facets.iter().any(|f| sigma.is_subset(*f))
    }

    /// Every face, sorted by size then lexicographically.
    pub fn faces(&self) -> Vec<VarSet> {
        let mut all: Vec<VarSet> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        all.sort_by_key(|s| (s.len(), *s));
        all.dedup();
        all
    }

    /// `link_Δ(σ) = {F : σ ∩ F = ∅, σ ∪ F ∈ Δ}`; void when σ is not a face.
    pub fn link(&self, sigma: VarSet) -> Self {
        Self::new(
            self.n,
            self.facets
                .iter()
                .filter(|f| sigma.is_subset(**f))
                .map(|f| f.difference(sigma)),
        )
    }

    /// `star_Δ(σ) = {F : σ ∪ F ∈ Δ}`; void when σ is not a face.
    pub fn star(&self, sigma: VarSet) -> Self {
        Self::new(
            self.n,
            self.facets.iter().copied().filter(|f| sigma.is_subset(*f)),
        )
    }

    /// `Δ \ σ = {F ∈ Δ : σ ⊄ F}`.
    pub fn deletion(&self, sigma: VarSet) -> Self {
        let mut faces = Vec::new();
        for &f in &self.facets {
            if sigma.is_subset(f) {
                faces.extend(sigma.iter().map(|t| f.without(t)));
            } else {
                faces.push(f);
            }
        }
        Self::new(self.n, faces)
    }

    /// `Δ^c`, generated by the complements of the facets.
    pub fn complement_complex(&self) -> Self {
        Self::new(self.n, self.facets.iter().map(|f| f.complement(self.n)))
    }

    /// Facets of the Alexander dual: complements of the minimal non-faces.
    pub fn alexander_dual(&self) -> Self {
        Self::new(
            self.n,
            self.minimal_nonfaces()
                .into_iter()
                .map(|g| g.complement(self.n)),
        )
    }

    /// Minimal non-faces: minimal transversals of the facet complements.
    pub fn minimal_nonfaces(&self) -> Vec<VarSet> {
        let complements: Vec<VarSet> = self.facets.iter().map(|f| f.complement(self.n)).collect();
        minimal_transversals(&complements)
    }

    /// `I_Δ` in the ring `x1, …, xn`.
    pub fn stanley_reisner(&self) -> MonomialIdeal {
        let ctx = RingContext::standard(self.n).expect("vertex count checked on construction");
        self.stanley_reisner_in(&ctx)
    }

    /// `I_Δ` in a given ring with `n` variables.
    pub fn stanley_reisner_in(&self, ctx: &Arc<RingContext>) -> MonomialIdeal {
        assert_eq!(ctx.n(), self.n);
        MonomialIdeal::from_minimal(
            ctx.clone(),
            self.minimal_nonfaces()
                .into_iter()
                .map(|g| Monomial::from_set(self.n, g)),
        )
    }

    /// Whether the facets are the bases of a matroid: purity plus basis exchange.
    pub fn is_matroid(&self) -> bool {
        if self.facets.is_empty() || !self.is_pure() {
            return false;
        }
        self.facets.iter().all(|&b1| {
            self.facets.iter().all(|&b2| {
                b1.difference(b2).iter().all(|x| {
                    b2.difference(b1)
                        .iter()
                        .any(|y| self.facets.binary_search(&b1.without(x).with(y)).is_ok())
                })
            })
        })
    }
}

/// `Δ` with `I_Δ = I`, for a squarefree ideal. The unit ideal gives the void complex.
pub fn complex_of(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree(ideal.to_string()));
    }
    let n = ideal.n();
    Ok(SimplicialComplex::new(
        n,
        minimal_prime_sets(ideal)
            .into_iter()
            .map(|p| p.complement(n)),
    ))
}

/// `I∨ = I_{Δ∨}` for a squarefree ideal; generators are the products of the variables of the
/// minimal primes of `I`.
pub fn dual_ideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let delta = complex_of(ideal)?;
    Ok(delta.alexander_dual().stanley_reisner_in(ideal.ctx()))
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `⟨{1,2},{1,3}⟩` style, 1-based.
impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", FaceDisplay(*facet))?;
        }
        f.write_str(">")
    }
}

/// A face as a 1-based vertex list, `{2,3}`.
pub struct FaceDisplay(pub VarSet);

impl fmt::Display for FaceDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verts: Vec<String> = self.0.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "{{{}}}", verts.join(","))
    }
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
    fn link_star_deletion() {
        let d = cx(3, &[&[1, 2], &[1, 3]]);
        assert_eq!(d.link(set(&[1])), cx(3, &[&[2], &[3]]));
        assert_eq!(d.link(VarSet::EMPTY), d);
        assert_eq!(d.star(VarSet::EMPTY), d);
        assert_eq!(d.deletion(set(&[1])), cx(3, &[&[2], &[3]]));
        assert!(d.link(set(&[2, 3])).is_void());
        assert_eq!(d.deletion(set(&[2, 3])), d);
    }

    #[test]
    fn stanley_reisner_examples() {
        let d = cx(3, &[&[1, 2], &[1, 3]]);
        assert_eq!(d.stanley_reisner().to_string(), "(x2*x3)");
        assert!(cx(3, &[&[1, 2, 3]]).stanley_reisner().is_zero());
        assert!(SimplicialComplex::void(2).stanley_reisner().is_unit());
        assert_eq!(
            SimplicialComplex::empty(2).stanley_reisner().to_string(),
            "(x1, x2)"
        );
        assert_eq!(complex_of(&d.stanley_reisner()).unwrap(), d);
    }

    fn digits(list: &[usize]) -> Vec<Vec<usize>> {
        list.iter()
            .map(|f| f.to_string().bytes().map(|b| (b - b'0') as usize).collect())
            .collect()
    }

    fn sorted_gens(i: &MonomialIdeal) -> Vec<String> {
        let mut got: Vec<String> = i
            .gens()
            .iter()
            .map(|g| g.display(i.ctx()).to_string())
            .collect();
        got.sort();
        got
    }

    #[test]
    fn eleven_facet_complex_and_eleven_generator_ideal_are_not_paired() {
        let list = [124, 125, 126, 135, 136, 145, 236, 245, 256, 345, 346];
        let facets = digits(&list);
        let refs: Vec<&[usize]> = facets.iter().map(Vec::as_slice).collect();
        let d = SimplicialComplex::from_facets(6, &refs).unwrap();
        let want: Vec<String> = [
            "x1*x2*x3",
            "x1*x2*x4*x5",
            "x1*x3*x4",
            "x1*x4*x6",
            "x1*x5*x6",
            "x2*x3*x4",
            "x2*x3*x5",
            "x2*x4*x6",
            "x3*x5*x6",
            "x4*x5*x6",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        assert_eq!(sorted_gens(&d.stanley_reisner()), want);

        // the same list read as generators gives a nine-facet complex
        let mut text = String::from("vars x1 x2 x3 x4 x5 x6\n");
        for f in &facets {
            let names: Vec<String> = f.iter().map(|v| format!("x{v}")).collect();
            text.push_str(&names.join("*"));
            text.push('\n');
        }
        let i = crate::parse::parse_ideal(&text).unwrap();
        let nine = SimplicialComplex::from_facets(
            6,
            &digits(&[123, 134, 146, 156, 234, 235, 246, 356, 456])
                .iter()
                .map(Vec::as_slice)
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(complex_of(&i).unwrap(), nine);
    }

    #[test]
    fn alexander_duality() {
        let d = cx(3, &[&[1, 2], &[1, 3]]);
        assert_eq!(d.alexander_dual(), cx(3, &[&[1]]));
        assert_eq!(
            dual_ideal(&d.stanley_reisner()).unwrap().to_string(),
            "(x2, x3)"
        );
        assert_eq!(d.alexander_dual().alexander_dual(), d);
        assert_eq!(
            SimplicialComplex::void(3).alexander_dual(),
            cx(3, &[&[1, 2, 3]])
        );
        assert!(cx(3, &[&[1, 2, 3]]).alexander_dual().is_void());
    }

    #[test]
    fn matroids() {
        assert!(cx(3, &[&[1, 2], &[1, 3], &[2, 3]]).is_matroid());
        assert!(!cx(4, &[&[1, 2], &[3, 4]]).is_matroid());
        assert!(cx(4, &[&[1, 2, 4]]).is_matroid());
        assert!(!SimplicialComplex::void(2).is_matroid());
    }

    #[test]
    fn complements() {
        let u23 = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(u23.complement_complex(), cx(3, &[&[3], &[2], &[1]]));
        assert!(cx(3, &[&[1, 2, 3]]).complement_complex().is_empty_complex());
        assert!(u23.complement_complex().is_matroid());
    }
}
