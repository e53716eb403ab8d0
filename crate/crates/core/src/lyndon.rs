//! Regular bracketing, the Lyndon-Shirshov basis of the free Lie algebra,
//! the adjoint-chain decomposition around a regular subword, and inclusion
//! compositions.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freealg::{
    apply_ad_chain, homogeneous_components, rational_from_parts, rational_parts, AdChain, AdLink,
    FreePoly,
};
use crate::linalg::TrackedBasis;
use crate::sparse::{ad, commutator, Combination, Rational, Sign};
use crate::words::{
    compare, is_regular, regular_decomposition, regular_factoring, Word, WordOrdering,
};

fn bracketing_unchecked(w: &Word) -> FreePoly {
    if w.len() == 1 {
        return FreePoly::basis(w.clone());
    }
    let (l, r) = regular_factoring(w).expect("caller checked regularity");
    commutator(&bracketing_unchecked(&l), &bracketing_unchecked(&r))
}

/// The regular bracketing `⟦w⟧`: letters map to themselves and
/// `⟦w⟧ = [⟦l⟧, ⟦r⟧]` for the regular factoring `w = l ⋆ r`.
pub fn bracketing(w: &Word) -> Result<FreePoly> {
    if !is_regular(w) {
        return Err(Error::NotRegular(w.clone()));
    }
    Ok(bracketing_unchecked(w))
}

/// Nested-bracket rendering of `⟦w⟧`, e.g. `[[a,b],b]` for `abb`.
pub fn nested_bracket_string(w: &Word) -> Result<String> {
    if !is_regular(w) {
        return Err(Error::NotRegular(w.clone()));
    }
    fn go(w: &Word) -> String {
        if w.len() == 1 {
            return w.to_string();
        }
        let (l, r) = regular_factoring(w).expect("regular");
        format!("[{},{}]", go(&l), go(&r))
    }
    Ok(go(w))
}

fn sort_descending(words: &mut [Word]) {
    words.sort_by(|x, y| match compare(y, x) {
        WordOrdering::Greater => std::cmp::Ordering::Greater,
        WordOrdering::Less => std::cmp::Ordering::Less,
        WordOrdering::Equivalent => std::cmp::Ordering::Equal,
    });
}

/// All regular words of length `n`, greatest first. Empty for `n = 0`.
pub fn enumerate_regular_words(n: usize) -> Vec<Word> {
    let mut out: Vec<Word> = Word::all_of_length(n).filter(is_regular).collect();
    sort_descending(&mut out);
    out
}

/// Regular words with the given numbers of `a` and `b`, greatest first.
pub fn regular_words_with_multidegree(alphas: usize, betas: usize) -> Vec<Word> {
    let mut out: Vec<Word> = Word::all_of_length(alphas + betas)
        .filter(|w| w.alpha_count() == alphas && is_regular(w))
        .collect();
    sort_descending(&mut out);
    out
}

/// A Lie polynomial written in the Lyndon-Shirshov basis: a sparse map from
/// regular words `W` to coefficients, standing for `Σ c_W ⟦W⟧`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LyndonCombination {
    terms: Combination<Word>,
}

impl LyndonCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Result<Self> {
        let terms: Combination<Word> = terms.into_iter().collect();
        if let Some(bad) = terms.keys().find(|w| !is_regular(w)) {
            return Err(Error::NotRegular(bad.clone()));
        }
        Ok(LyndonCombination { terms })
    }

    pub fn singleton(w: Word) -> Result<Self> {
        Self::from_terms([(w, Rational::one())])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.coeff(w)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms, longest first and greatest first within a length.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter().rev()
    }

    /// `Σ c_W ⟦W⟧` in the free algebra.
    pub fn expand(&self) -> FreePoly {
        self.terms
            .map_linear(|w| bracketing(w).expect("keys are regular"))
    }

    /// The term whose word is greatest under [`compare`].
    pub fn leading(&self) -> Option<(&Word, &Rational)> {
        self.terms.iter().fold(None, |best, (w, c)| match best {
            Some((bw, _)) if compare(w, bw) != WordOrdering::Greater => best,
            _ => Some((w, c)),
        })
    }

    /// `c * [[a,b],b] + ...` rendering.
    pub fn to_nested_string(&self) -> String {
        render_lyndon(self, |w| nested_bracket_string(w).expect("regular"))
    }

    /// `c * LSW(abb) + ...` rendering.
    pub fn to_flat_string(&self) -> String {
        render_lyndon(self, |w| format!("LSW({w})"))
    }

    pub fn to_json(&self) -> Vec<LyndonTermJson> {
        self.iter()
            .map(|(w, c)| {
                let (num, den) = rational_parts(c);
                LyndonTermJson {
                    word: w.clone(),
                    nested: nested_bracket_string(w).expect("regular"),
                    num,
                    den,
                }
            })
            .collect()
    }

    pub fn from_json(terms: &[LyndonTermJson]) -> Result<Self> {
        let parsed = terms
            .iter()
            .map(|t| Ok((t.word.clone(), rational_from_parts(&t.num, &t.den)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(parsed)
    }
}

fn render_lyndon(c: &LyndonCombination, body: impl Fn(&Word) -> String) -> String {
    if c.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (w, coeff)) in c.iter().enumerate() {
        let neg = coeff.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&format!("{} * {}", coeff.abs(), body(w)));
    }
    out
}

impl fmt::Display for LyndonCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_nested_string())
    }
}

impl fmt::Debug for LyndonCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LyndonCombination({})", self.to_flat_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LyndonTermJson {
    pub word: Word,
    pub nested: String,
    pub num: String,
    pub den: String,
}

/// Rewrites free-algebra elements in the Lyndon-Shirshov basis.
///
/// Every homogeneous component is solved exactly against the bracketings of
/// the regular words of that multidegree; the per-multidegree spans are
/// cached, so reuse one solver for many queries.
#[derive(Default)]
pub struct LyndonSolver {
    spans: HashMap<(usize, usize), TrackedBasis<Word, Word>>,
}

impl LyndonSolver {
    pub fn new() -> Self {
        Self::default()
    }

    fn span(&mut self, alphas: usize, betas: usize) -> &TrackedBasis<Word, Word> {
        self.spans.entry((alphas, betas)).or_insert_with(|| {
            let mut tb = TrackedBasis::new();
            for w in regular_words_with_multidegree(alphas, betas) {
                let inserted = tb.insert(w.clone(), &bracketing_unchecked(&w));
                assert!(inserted, "bracketing of {w} is linearly dependent");
            }
            tb
        })
    }

    /// Dimension of the span of `{⟦W⟧ : W regular of this multidegree}`.
    pub fn span_dim(&mut self, alphas: usize, betas: usize) -> usize {
        self.span(alphas, betas).dim()
    }

    pub fn to_lyndon_basis(&mut self, f: &FreePoly) -> Result<LyndonCombination> {
        let mut out = Combination::zero();
        for ((alphas, betas), part) in homogeneous_components(f) {
            let coords = self
                .span(alphas, betas)
                .solve(&part)
                .ok_or(Error::NotLiePolynomial { alphas, betas })?;
            out += &coords;
        }
        Ok(LyndonCombination { terms: out })
    }
}

/// The unique Lyndon-Shirshov coordinates of `f`, or
/// [`Error::NotLiePolynomial`] when `f` is not a Lie polynomial.
pub fn to_lyndon_basis(f: &FreePoly) -> Result<LyndonCombination> {
    LyndonSolver::new().to_lyndon_basis(f)
}

/// `⟦w⟧ = chain(⟦head⟧)` with `head = v · u_tail` regular.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiDecomposition {
    pub chain: AdChain,
    pub head: Word,
    pub u_tail: Word,
}

fn descend(w: &Word, v: &Word, start: usize) -> Result<PhiDecomposition> {
    if start == 0 && v.len() == w.len() {
        return Ok(PhiDecomposition {
            chain: AdChain::identity(),
            head: w.clone(),
            u_tail: Word::empty(),
        });
    }
    let (l, r) = regular_factoring(w)?;
    let end = start + v.len();
    if end <= l.len() {
        let mut inner = descend(&l, v, start)?;
        inner.chain.push_outer(AdLink::new(Sign::Minus, r)?);
        Ok(inner)
    } else if start >= l.len() {
        let mut inner = descend(&r, v, start - l.len())?;
        inner.chain.push_outer(AdLink::new(Sign::Plus, l)?);
        Ok(inner)
    } else if start == 0 {
        Ok(PhiDecomposition {
            chain: AdChain::identity(),
            head: w.clone(),
            u_tail: w.suffix_from(v.len()),
        })
    } else {
        Err(Error::InvalidOccurrence {
            word: w.clone(),
            pattern: v.clone(),
            position: start,
        })
    }
}

fn check_regular_pair(w: &Word, v: &Word) -> Result<()> {
    if !is_regular(w) {
        return Err(Error::NotRegular(w.clone()));
    }
    if !is_regular(v) {
        return Err(Error::NotRegular(v.clone()));
    }
    Ok(())
}

/// Start position of the `occurrence`-th (0-based, left to right)
/// occurrence of `v` in `w`.
pub fn occurrence_position(w: &Word, v: &Word, occurrence: usize) -> Result<usize> {
    w.occurrences(v)
        .get(occurrence)
        .copied()
        .ok_or_else(|| Error::OccurrenceNotFound {
            word: w.clone(),
            pattern: v.clone(),
            occurrence,
        })
}

/// Follows the regular factorings of `w` down to the chosen occurrence of
/// the regular subword `v`: an occurrence inside the left factor adds the
/// outer link `(-ad⟦R⟧)`, one inside the right factor adds `(ad⟦L⟧)`, and
/// the descent stops once `v` is a beginning of the current word that does
/// not fit inside its left factor.
pub fn phi_decomposition(w: &Word, v: &Word, occurrence: usize) -> Result<PhiDecomposition> {
    check_regular_pair(w, v)?;
    let pos = occurrence_position(w, v, occurrence)?;
    descend(w, v, pos)
}

/// As [`phi_decomposition`], addressing the occurrence by start position.
pub fn phi_decomposition_at(w: &Word, v: &Word, position: usize) -> Result<PhiDecomposition> {
    check_regular_pair(w, v)?;
    if !w.occurrences(v).contains(&position) {
        return Err(Error::OccurrenceNotFound {
            word: w.clone(),
            pattern: v.clone(),
            occurrence: position,
        });
    }
    descend(w, v, position)
}

/// `⟨w_v⟩` from a decomposition: `⟦v · u_tail⟧` is replaced by
/// `(-ad⟦C_l⟧)...(-ad⟦C_1⟧)(⟦v⟧)` where `u_tail = C_1...C_l` is the regular
/// decomposition.
pub fn angle_from_decomposition(d: &PhiDecomposition, v: &Word) -> FreePoly {
    let mut inner = bracketing_unchecked(v);
    if !d.u_tail.is_empty() {
        let factors = regular_decomposition(&d.u_tail).expect("nonempty");
        for c in &factors {
            inner = ad(Sign::Minus, &bracketing_unchecked(c), &inner);
        }
    }
    apply_ad_chain(&d.chain, &inner)
}

pub fn angle_bracket(w: &Word, v: &Word, occurrence: usize) -> Result<FreePoly> {
    let d = phi_decomposition(w, v, occurrence)?;
    Ok(angle_from_decomposition(&d, v))
}

pub fn angle_bracket_at(w: &Word, v: &Word, position: usize) -> Result<FreePoly> {
    let d = phi_decomposition_at(w, v, position)?;
    Ok(angle_from_decomposition(&d, v))
}

/// Everything computed while forming the inclusion composition of `w` with
/// `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InclusionComposition {
    pub decomposition: PhiDecomposition,
    pub angle: FreePoly,
    /// `⟦w⟧ - ⟨w_v⟩` before normalization.
    pub raw: FreePoly,
    pub lyndon: LyndonCombination,
    /// Greatest regular word in `raw` with its coefficient `c_n`.
    pub leading: Option<(Word, Rational)>,
    /// `(1/c_n) · raw`, or 0 for a trivial composition.
    pub normalized: FreePoly,
}

impl InclusionComposition {
    pub fn is_trivial(&self) -> bool {
        self.raw.is_zero()
    }
}

fn compose(
    w: &Word,
    v: &Word,
    d: PhiDecomposition,
    solver: &mut LyndonSolver,
) -> Result<InclusionComposition> {
    let angle = angle_from_decomposition(&d, v);
    let raw = &bracketing_unchecked(w) - &angle;
    if raw.is_zero() {
        return Ok(InclusionComposition {
            decomposition: d,
            angle,
            raw,
            lyndon: LyndonCombination::zero(),
            leading: None,
            normalized: FreePoly::zero(),
        });
    }
    let lyndon = solver
        .to_lyndon_basis(&raw)
        .map_err(|e| Error::InternalNotLie(e.to_string()))?;
    let (lw, lc) = lyndon
        .leading()
        .map(|(w, c)| (w.clone(), c.clone()))
        .expect("nonzero Lie polynomial has a leading term");
    let normalized = raw.scale(&lc.recip());
    Ok(InclusionComposition {
        decomposition: d,
        angle,
        raw,
        lyndon,
        leading: Some((lw, lc)),
        normalized,
    })
}

pub fn inclusion_composition_detail(
    w: &Word,
    v: &Word,
    occurrence: usize,
) -> Result<InclusionComposition> {
    let d = phi_decomposition(w, v, occurrence)?;
    compose(w, v, d, &mut LyndonSolver::new())
}

/// As [`inclusion_composition_detail`] with the occurrence given by start
/// position and a caller-owned solver.
pub fn inclusion_composition_at(
    w: &Word,
    v: &Word,
    position: usize,
    solver: &mut LyndonSolver,
) -> Result<InclusionComposition> {
    let d = phi_decomposition_at(w, v, position)?;
    compose(w, v, d, solver)
}

/// The normalized inclusion composition `(1/c_n)(⟦w⟧ - ⟨w_v⟩)`; zero when
/// the composition is trivial.
pub fn inclusion_composition(w: &Word, v: &Word, occurrence: usize) -> Result<FreePoly> {
    inclusion_composition_detail(w, v, occurrence).map(|c| c.normalized)
}
