//! Exact row-echelon spans of sparse vectors.
//!
//! Each stored row is normalized so that its largest key (the pivot) has
//! coefficient 1. Reducing a vector walks its keys from the top down and
//! cancels every key that is a pivot; the vector lies in the span exactly
//! when the residual is zero.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::sparse::{Combination, Rational};

/// Largest key of `v` strictly below `bound` (any key when `bound` is
/// `None`) that is a pivot of `rows`.
fn next_pivot<K: Ord + Clone, R>(
    v: &Combination<K>,
    rows: &BTreeMap<K, R>,
    bound: Option<&K>,
) -> Option<K> {
    v.keys()
        .rev()
        .filter(|k| bound.is_none_or(|b| *k < b))
        .find(|k| rows.contains_key(*k))
        .cloned()
}

/// A linear span held in echelon form.
#[derive(Clone)]
pub struct SubspaceBasis<K> {
    rows: BTreeMap<K, Combination<K>>,
}

impl<K: Ord + Clone> Default for SubspaceBasis<K> {
    fn default() -> Self {
        SubspaceBasis {
            rows: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> SubspaceBasis<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a>(vectors: impl IntoIterator<Item = &'a Combination<K>>) -> Self
    where
        K: 'a,
    {
        let mut b = Self::new();
        for v in vectors {
            b.insert(v);
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Echelon rows, ordered by pivot.
    pub fn vectors(&self) -> impl Iterator<Item = &Combination<K>> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    pub fn reduce(&self, v: &Combination<K>) -> Combination<K> {
        let mut v = v.clone();
        let mut bound: Option<K> = None;
        while let Some(p) = next_pivot(&v, &self.rows, bound.as_ref()) {
            let c = v.coeff(&p);
            v.add_scaled(&self.rows[&p], &-c);
            bound = Some(p);
        }
        v
    }

    pub fn contains(&self, v: &Combination<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns `true` when the dimension grew.
    pub fn insert(&mut self, v: &Combination<K>) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.max_key().cloned() else {
            return false;
        };
        let lead = r.coeff(&p);
        self.rows.insert(p, r.scale(&lead.recip()));
        true
    }

    /// `true` when every row of `self` lies in `other`.
    pub fn is_subspace_of(&self, other: &SubspaceBasis<K>) -> bool {
        self.vectors().all(|v| other.contains(v))
    }

    pub fn same_span(&self, other: &SubspaceBasis<K>) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }
}

/// A span that also remembers how each row was built from labelled input
/// vectors, so that a vector in the span can be written in terms of the
/// inputs.
#[derive(Clone)]
pub struct TrackedBasis<K, L> {
    rows: BTreeMap<K, (Combination<K>, Combination<L>)>,
}

impl<K: Ord + Clone, L: Ord + Clone> Default for TrackedBasis<K, L> {
    fn default() -> Self {
        TrackedBasis {
            rows: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone, L: Ord + Clone> TrackedBasis<K, L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Returns `(residual, combination)` with
    /// `v = Σ combination[l] · input(l) + residual`.
    pub fn reduce(&self, v: &Combination<K>) -> (Combination<K>, Combination<L>) {
        let mut v = v.clone();
        let mut used = Combination::zero();
        let mut bound: Option<K> = None;
        while let Some(p) = next_pivot(&v, &self.rows, bound.as_ref()) {
            let c = v.coeff(&p);
            let (row, prov) = &self.rows[&p];
            v.add_scaled(row, &-c.clone());
            used.add_scaled(prov, &c);
            bound = Some(p);
        }
        (v, used)
    }

    /// Adds the input vector `v` labelled `label`. Returns `false` when `v`
    /// was already in the span.
    pub fn insert(&mut self, label: L, v: &Combination<K>) -> bool {
        let (r, used) = self.reduce(v);
        let Some(p) = r.max_key().cloned() else {
            return false;
        };
        // r = v - Σ used·inputs
        let mut prov = Combination::basis(label);
        prov -= &used;
        let lead: Rational = r.coeff(&p);
        debug_assert!(!lead.is_zero());
        let inv = lead.recip();
        self.rows.insert(p, (r.scale(&inv), prov.scale(&inv)));
        true
    }

    /// Coordinates of `v` in terms of the labelled inputs, or `None` if `v`
    /// is outside the span.
    pub fn solve(&self, v: &Combination<K>) -> Option<Combination<L>> {
        let (r, used) = self.reduce(v);
        r.is_zero().then_some(used)
    }
}
