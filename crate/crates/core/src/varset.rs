//! Small fixed-width sets of variable (or vertex) indices.

use std::cmp::Ordering;
use std::fmt;

/// Largest number of variables a ring context may carry.
pub const MAX_VARS: usize = 128;

/// A subset of `{0, …, MAX_VARS - 1}` stored as a bitmask.
///
/// The ordering is lexicographic on the sorted element lists, so `{0, 1} < {0, 2} < {1}`,
/// which is the order used everywhere for faces, primes and supports.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VarSet(u128);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_VARS);
        VarSet(1u128 << i)
    }

    /// `{0, …, n - 1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VARS);
        if n == MAX_VARS {
            VarSet(u128::MAX)
        } else {
            VarSet((1u128 << n) - 1)
        }
    }

    pub fn from_bits(bits: u128) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VARS && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn with(self, i: usize) -> Self {
        VarSet(self.0 | 1u128 << i)
    }

    pub fn without(self, i: usize) -> Self {
        VarSet(self.0 & !(1u128 << i))
    }

    pub fn union(self, other: Self) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VarSet(self.0 & !other.0)
    }

    /// Complement inside `{0, …, n - 1}`.
    pub fn complement(self, n: usize) -> Self {
        VarSet::full(n).difference(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self`, in no particular order.
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        let mask = self.0;
        let mut next = Some(0u128);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(VarSet(cur))
        })
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VarSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Keeps only the inclusion-minimal sets, sorted and deduplicated.
pub fn minimal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by_key(|s| (s.len(), *s));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Keeps only the inclusion-maximal sets, sorted and deduplicated.
pub fn maximal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by_key(|s| (std::cmp::Reverse(s.len()), *s));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// All inclusion-minimal transversals (hitting sets) of `edges`, sorted.
///
/// An empty edge cannot be hit, so its presence yields no transversal at all; an empty edge
/// list yields the single transversal `∅`.
pub fn minimal_transversals(edges: &[VarSet]) -> Vec<VarSet> {
    let edges = minimal_sets(edges.to_vec());
    if edges.iter().any(|e| e.is_empty()) {
        return Vec::new();
    }
    let mut out = Vec::new();
    transversal_search(&edges, VarSet::EMPTY, VarSet::EMPTY, &mut out);
    out.sort();
    out
}

fn has_private_edges(edges: &[VarSet], chosen: VarSet) -> bool {
    chosen.iter().all(|v| {
        edges
            .iter()
            .any(|e| e.intersection(chosen) == VarSet::singleton(v))
    })
}

fn transversal_search(edges: &[VarSet], chosen: VarSet, forbidden: VarSet, out: &mut Vec<VarSet>) {
    // a chosen vertex that lost every private edge never regains one
    if !has_private_edges(edges, chosen) {
        return;
    }
    let Some(edge) = edges.iter().find(|e| e.is_disjoint(chosen)) else {
        out.push(chosen);
        return;
    };
    let mut banned = forbidden;
    for v in edge.difference(forbidden).iter() {
        transversal_search(edges, chosen.with(v), banned, out);
        banned.insert(v);
    }
}
