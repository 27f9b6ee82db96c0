//! Reduced simplicial homology over the rationals and Betti-number invariants of
//! squarefree quotients.
//!
//! `β_{i,σ}(S/I_Δ) = dim H̃_{|σ|-i-1}(Δ_σ)`; `pd` and `reg` are read off these numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::clean::HomologicalInvariants;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::polarize::polarize;
use crate::simplicial::{complex_of, SimplicialComplex};
use crate::varset::VarSet;

/// Largest vertex count accepted by [`reduced_homology_ranks`].
pub const MAX_HOMOLOGY_VERTICES: usize = 14;
/// Largest ring accepted by the Betti-number routines.
pub const MAX_BETTI_VARIABLES: usize = 10;

/// Sparse boundary map from the `d`-faces to the `(d-1)`-faces, one column per `d`-face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub rows: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl BoundaryMatrix {
    /// `self ∘ inner` is the zero map (`inner` maps into the domain of `self`).
    pub fn composes_to_zero(&self, inner: &BoundaryMatrix) -> bool {
        inner.columns.iter().all(|col| {
            let mut acc = vec![0i64; self.rows];
            for &(r, s) in col {
                for &(r2, s2) in &self.columns[r] {
                    acc[r2] += s * s2;
                }
            }
            acc.iter().all(|&x| x == 0)
        })
    }

    pub fn rank(&self) -> usize {
        if self.columns.is_empty() || self.rows == 0 {
            return 0;
        }
        let mut dense = vec![vec![0i64; self.columns.len()]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, s) in col {
                dense[r][c] = s;
            }
        }
        rank_of(dense)
    }
}

/// Faces of `Δ` grouped by dimension `-1, 0, 1, …`, each group sorted.
pub fn faces_by_dimension(complex: &SimplicialComplex) -> Vec<Vec<VarSet>> {
    let mut groups: Vec<Vec<VarSet>> = Vec::new();
    for f in complex.faces() {
        let d = f.len();
        if groups.len() <= d {
            groups.resize(d + 1, Vec::new());
        }
        groups[d].push(f);
    }
    for g in &mut groups {
        g.sort();
    }
    groups
}

/// `∂_d` with the sign `(-1)^j` for dropping the `j`-th vertex of a face.
pub fn boundary_matrix(lower: &[VarSet], upper: &[VarSet]) -> BoundaryMatrix {
    let columns = upper
        .iter()
        .map(|f| {
            f.iter()
                .enumerate()
                .map(|(j, v)| {
                    let row = lower
                        .binary_search(&f.without(v))
                        .expect("faces of a complex are closed under subsets");
                    (row, if j % 2 == 0 { 1 } else { -1 })
                })
                .collect()
        })
        .collect();
    BoundaryMatrix {
        rows: lower.len(),
        columns,
    }
}

/// Ranks of `H̃_d(Δ; Q)` for `d = -1, …, dim Δ`; empty for the void complex.
pub fn reduced_homology_ranks(complex: &SimplicialComplex) -> Result<Vec<usize>> {
    if complex.n() > MAX_HOMOLOGY_VERTICES {
        return Err(Error::HomologyBudget(format!(
            "{} vertices (at most {MAX_HOMOLOGY_VERTICES})",
            complex.n()
        )));
    }
    Ok(homology_unchecked(complex))
}

fn homology_unchecked(complex: &SimplicialComplex) -> Vec<usize> {
    let groups = faces_by_dimension(complex);
    if groups.is_empty() {
        return Vec::new();
    }
    // ranks[d] = rank of the map out of faces of size d
    let maps: Vec<BoundaryMatrix> = (1..groups.len())
        .map(|d| boundary_matrix(&groups[d - 1], &groups[d]))
        .collect();
    for w in maps.windows(2) {
        assert!(
            w[0].composes_to_zero(&w[1]),
            "boundary of a boundary must vanish"
        );
    }
    let ranks: Vec<usize> = maps.iter().map(BoundaryMatrix::rank).collect();
    (0..groups.len())
        .map(|size| {
            let out_rank = if size == 0 { 0 } else { ranks[size - 1] };
            let in_rank = ranks.get(size).copied().unwrap_or(0);
            groups[size].len() - out_rank - in_rank
        })
        .collect()
}

/// `Σ (-1)^d f_d` over dimensions `d ≥ -1`.
pub fn reduced_euler_characteristic(complex: &SimplicialComplex) -> i64 {
    faces_by_dimension(complex)
        .iter()
        .enumerate()
        .map(|(size, g)| {
            if size % 2 == 1 {
                g.len() as i64
            } else {
                -(g.len() as i64)
            }
        })
        .sum()
}

/// Induced subcomplex on `sigma`.
pub fn restriction(complex: &SimplicialComplex, sigma: VarSet) -> SimplicialComplex {
    SimplicialComplex::new(
        complex.n(),
        complex.facets().iter().map(|f| f.intersection(sigma)),
    )
}

/// Graded Betti numbers `β_{i,j}(S/I)` of a squarefree ideal, as `(i, j, β)` with `β > 0`.
pub fn betti_numbers(ideal: &MonomialIdeal) -> Result<Vec<(usize, usize, usize)>> {
    check_betti_input(ideal)?;
    let complex = complex_of(ideal)?;
    let mut table = std::collections::BTreeMap::new();
    for sigma in VarSet::full(ideal.n()).subsets() {
        let ranks = homology_unchecked(&restriction(&complex, sigma));
        for (size, &r) in ranks.iter().enumerate() {
            // homological dimension size - 1, so i = |σ| - size
            if r > 0 {
                *table.entry((sigma.len() - size, sigma.len())).or_insert(0) += r;
            }
        }
    }
    Ok(table.into_iter().map(|((i, j), b)| (i, j, b)).collect())
}

fn check_betti_input(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree(ideal.to_string()));
    }
    if ideal.n() > MAX_BETTI_VARIABLES {
        return Err(Error::HomologyBudget(format!(
            "{} variables (at most {MAX_BETTI_VARIABLES})",
            ideal.n()
        )));
    }
    Ok(())
}

/// Exact `pd(S/I)`, `reg(S/I)` and depth of a squarefree ideal.
pub fn pd_reg_squarefree(ideal: &MonomialIdeal) -> Result<HomologicalInvariants> {
    let betti = betti_numbers(ideal)?;
    let pd = betti.iter().map(|&(i, _, _)| i).max().unwrap_or(0);
    let reg = betti
        .iter()
        .map(|&(i, j, _)| (j - i) as u64)
        .max()
        .unwrap_or(0);
    Ok(HomologicalInvariants::new(ideal.n(), pd, reg))
}

/// `pd` and `reg` of any proper ideal through its polarization, which preserves both.
pub fn pd_reg(ideal: &MonomialIdeal) -> Result<HomologicalInvariants> {
    if ideal.is_squarefree() {
        return pd_reg_squarefree(ideal);
    }
    let (p, _) = polarize(ideal)?;
    let inv = pd_reg_squarefree(&p)?;
    Ok(HomologicalInvariants::new(ideal.n(), inv.pd, inv.reg))
}

/// Scalar for fraction-free elimination; `None` signals overflow.
trait RankScalar: Clone {
    fn is_zero(&self) -> bool;
    fn mul_sub_div(a: &Self, b: &Self, c: &Self, d: &Self, p: &Self) -> Option<Self>;
}

impl RankScalar for i128 {
    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn mul_sub_div(a: &Self, b: &Self, c: &Self, d: &Self, p: &Self) -> Option<Self> {
        let x = a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?;
        Some(x / p)
    }
}

impl RankScalar for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn mul_sub_div(a: &Self, b: &Self, c: &Self, d: &Self, p: &Self) -> Option<Self> {
        Some((a * b - c * d) / p)
    }
}

/// Bareiss elimination; `None` if an intermediate value overflows `T`.
fn bareiss<T: RankScalar>(mut m: Vec<Vec<T>>, one: T) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = one;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for cc in c + 1..cols {
                let v = T::mul_sub_div(&m[rank][c], &m[r][cc], &m[r][c], &m[rank][cc], &prev)?;
                m[r][cc] = v;
            }
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

/// Exact rank over the rationals, trying `i128` before falling back to big integers.
fn rank_of(dense: Vec<Vec<i64>>) -> usize {
    let small: Vec<Vec<i128>> = dense
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    if let Some(r) = bareiss(small, 1i128) {
        return r;
    }
    let big: Vec<Vec<BigInt>> = dense
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    bareiss(big, BigInt::one()).expect("big integers do not overflow")
}
