//! Length-truncated Lie ideal generated by the bracketings `⟦a²bⁿ⟧`.
//!
//! The ideal is spanned by `(ad x_1)...(ad x_j)(⟦a²bⁿ⟧)` with each `x_i` a
//! letter. Every such element is homogeneous and `ad x` raises length by
//! one, so the part of the ideal in length `ℓ` only involves elements of
//! length at most `ℓ`. Truncating at a length therefore loses nothing below
//! it.

use std::collections::BTreeMap;

use super::{require, Failure, VerificationReport};
use crate::error::Result;
use crate::freealg::{homogeneous_components, word_poly, FreePoly};
use crate::linalg::SubspaceBasis;
use crate::lyndon::{bracketing, enumerate_regular_words};
use crate::sparse::commutator;
use crate::words::{is_regular, ExponentForm, Word};

type Degree = (usize, usize);

/// Whether the regular word `w` lies outside `{b} ∪ {abⁿ : n >= 0}`.
pub fn in_complement_of_normal_part(w: &Word) -> bool {
    if !is_regular(w) || *w == Word::beta() {
        return false;
    }
    let is_a_b_power = w.letters()[0] == crate::words::Letter::Alpha && w.alpha_count() == 1;
    !is_a_b_power
}

/// The ideal truncated to words of length at most `truncation`, kept as one
/// span per multidegree and per closure depth.
pub struct IdealTruncation {
    truncation: usize,
    /// `layers[j]` spans the elements obtained with exactly `j`
    /// applications of `ad a` or `ad b`.
    layers: Vec<BTreeMap<Degree, SubspaceBasis<Word>>>,
    total: BTreeMap<Degree, SubspaceBasis<Word>>,
}

/// Builds the truncation of the ideal at the given length.
pub fn ideal_truncation(truncation: usize) -> IdealTruncation {
    let letters = [word_poly(&Word::alpha()), word_poly(&Word::beta())];
    let mut layer: BTreeMap<Degree, SubspaceBasis<Word>> = BTreeMap::new();
    for n in 1..=truncation.saturating_sub(2) {
        let g = Word::from_runs(&[2, n]);
        let poly = bracketing(&g).expect("a^2 b^n is regular");
        layer.entry(g.multidegree()).or_default().insert(&poly);
    }
    let mut layers = Vec::new();
    while !layer.is_empty() {
        let mut next: BTreeMap<Degree, SubspaceBasis<Word>> = BTreeMap::new();
        for ((p, q), span) in &layer {
            if p + q >= truncation {
                continue;
            }
            for (i, x) in letters.iter().enumerate() {
                let deg = if i == 0 { (p + 1, *q) } else { (*p, q + 1) };
                let target = next.entry(deg).or_default();
                for v in span.vectors() {
                    target.insert(&commutator(x, v));
                }
            }
        }
        next.retain(|_, s| !s.is_zero());
        layers.push(std::mem::replace(&mut layer, next));
    }
    let mut total: BTreeMap<Degree, SubspaceBasis<Word>> = BTreeMap::new();
    for l in &layers {
        for (deg, span) in l {
            let t = total.entry(*deg).or_default();
            for v in span.vectors() {
                t.insert(v);
            }
        }
    }
    IdealTruncation {
        truncation,
        layers,
        total,
    }
}

impl IdealTruncation {
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Dimension of the truncated ideal in each multidegree.
    pub fn dims(&self) -> BTreeMap<Degree, usize> {
        self.total.iter().map(|(d, s)| (*d, s.dim())).collect()
    }

    pub fn span(&self, degree: Degree) -> Option<&SubspaceBasis<Word>> {
        self.total.get(&degree)
    }

    /// Whether `f` lies in the ideal. Components longer than the truncation
    /// are reported as not contained.
    pub fn contains(&self, f: &FreePoly) -> bool {
        homogeneous_components(f)
            .iter()
            .all(|(deg, part)| self.total.get(deg).is_some_and(|span| span.contains(part)))
    }

    /// Smallest number of `ad` applications needed to reach `f` (which
    /// must be homogeneous), or `None` if `f` is outside the truncation.
    pub fn membership_depth(&self, f: &FreePoly) -> Option<usize> {
        let parts = homogeneous_components(f);
        let [(deg, part)] = parts.as_slice() else {
            return if f.is_zero() { Some(0) } else { None };
        };
        let mut acc = SubspaceBasis::new();
        for (j, layer) in self.layers.iter().enumerate() {
            if let Some(span) = layer.get(deg) {
                for v in span.vectors() {
                    acc.insert(v);
                }
            }
            if acc.contains(part) {
                return Some(j);
            }
        }
        None
    }

    /// Whether every span of `self` sits inside the matching span of
    /// `other`.
    pub fn is_subspace_of(&self, other: &IdealTruncation) -> bool {
        self.total
            .iter()
            .all(|(deg, span)| other.total.get(deg).is_some_and(|o| span.is_subspace_of(o)))
    }
}

/// [`verify_ideal_membership_with`] with targets and truncation both at
/// length `d`.
pub fn verify_ideal_membership(d: u32) -> Result<VerificationReport> {
    verify_ideal_membership_with(d, d)
}

/// Checks that `⟦W⟧` lies in the ideal truncated at length `truncation` for
/// every regular `W` of length at most `target_len` other than `b` and
/// `abⁿ`, and that `⟦b⟧` and `⟦abⁿ⟧` do not.
pub fn verify_ideal_membership_with(
    target_len: u32,
    truncation: u32,
) -> Result<VerificationReport> {
    require(target_len >= 1, || {
        "ideal-membership needs bound >= 1".to_string()
    })?;
    require(truncation >= target_len, || {
        format!("ideal-membership needs cap >= bound (got cap {truncation}, bound {target_len})")
    })?;
    let mut report = VerificationReport::new(
        "ideal-membership",
        vec![target_len as u64, truncation as u64],
    );
    let ideal = ideal_truncation(truncation as usize);
    let mut depth_notes: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for len in 1..=target_len as usize {
        for w in enumerate_regular_words(len) {
            let poly = bracketing(&w)?;
            if in_complement_of_normal_part(&w) {
                let depth = ideal.membership_depth(&poly);
                report.check(depth.is_some(), || Failure {
                    input: format!("[[{w}]]"),
                    expected: "member of the truncated ideal".to_string(),
                    actual: "nonzero residual".to_string(),
                });
                if let Some(j) = depth {
                    let form = ExponentForm::of_word(&w)
                        .map(|f| f.to_string())
                        .unwrap_or_else(|_| w.to_string());
                    depth_notes
                        .entry(len)
                        .or_default()
                        .push(format!("{form}:{j}"));
                }
            } else {
                report.check(!ideal.contains(&poly), || Failure {
                    input: format!("[[{w}]]"),
                    expected: "outside the truncated ideal".to_string(),
                    actual: "member".to_string(),
                });
            }
        }
    }
    for (len, entries) in depth_notes {
        report.note(format!(
            "closure depth at length {len}: {}",
            entries.join(", ")
        ));
    }
    Ok(report)
}
