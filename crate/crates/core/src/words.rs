//! Words over the two-letter alphabet `{a, b}` (`a` stands for α, `b` for β)
//! together with the order, regularity test and the factorizations built on
//! top of it.
//!
//! The alphabet is ordered with `a > b`. Two words `v`, `w` of possibly
//! different lengths are compared by comparing the concatenations `vw` and
//! `wv` letter by letter; the words are [`WordOrdering::Equivalent`] exactly
//! when `vw = wv`. A nonempty word is *regular* when it is greater than every
//! proper ending `R` of each split `w = LR`, compared against the matching
//! beginning `L`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    // Declaration order gives `Beta < Alpha`.
    Beta,
    Alpha,
}

impl Letter {
    pub fn to_char(self) -> char {
        match self {
            Letter::Alpha => 'a',
            Letter::Beta => 'b',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::Alpha),
            'b' => Some(Letter::Beta),
            _ => None,
        }
    }

    /// Rank used by the min-oriented scans: `a` ranks below `b`, so the
    /// regular words are exactly the words that are strictly rank-smaller
    /// than all of their nontrivial rotations.
    fn rank(self) -> u8 {
        match self {
            Letter::Alpha => 0,
            Letter::Beta => 1,
        }
    }
}

/// Result of [`compare`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordOrdering {
    Greater,
    Less,
    Equivalent,
}

/// A finite, possibly empty, sequence of letters.
///
/// The [`Ord`] impl sorts by length first and then letterwise with `a > b`;
/// it is the storage order used by the sparse maps, and on words of equal
/// length it agrees with [`compare`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn letter(l: Letter) -> Word {
        Word { letters: vec![l] }
    }

    pub fn alpha() -> Word {
        Word::letter(Letter::Alpha)
    }

    pub fn beta() -> Word {
        Word::letter(Letter::Beta)
    }

    /// `a^count`.
    pub fn alpha_pow(count: usize) -> Word {
        Word {
            letters: vec![Letter::Alpha; count],
        }
    }

    /// `b^count`.
    pub fn beta_pow(count: usize) -> Word {
        Word {
            letters: vec![Letter::Beta; count],
        }
    }

    /// Builds `a^{e0} b^{e1} a^{e2} ...`, alternating from `a`. Zero
    /// exponents are allowed and simply contribute nothing.
    pub fn from_runs(exponents: &[usize]) -> Word {
        let mut letters = Vec::with_capacity(exponents.iter().sum());
        for (i, &e) in exponents.iter().enumerate() {
            let l = if i % 2 == 0 {
                Letter::Alpha
            } else {
                Letter::Beta
            };
            letters.extend(std::iter::repeat_n(l, e));
        }
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn alpha_count(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::Alpha).count()
    }

    pub fn beta_count(&self) -> usize {
        self.len() - self.alpha_count()
    }

    /// `(number of a, number of b)`.
    pub fn multidegree(&self) -> (usize, usize) {
        (self.alpha_count(), self.beta_count())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn pow(&self, times: usize) -> Word {
        Word {
            letters: self.letters.repeat(times),
        }
    }

    /// The subword occupying positions `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word {
            letters: self.letters[start..end].to_vec(),
        }
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.slice(0, len)
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        self.slice(start, self.len())
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        self.letters.starts_with(&other.letters)
    }

    /// Starting positions of every (possibly overlapping) occurrence of
    /// `pattern`, left to right. Empty for an empty pattern.
    pub fn occurrences(&self, pattern: &Word) -> Vec<usize> {
        if pattern.is_empty() || pattern.len() > self.len() {
            return Vec::new();
        }
        self.letters
            .windows(pattern.len())
            .enumerate()
            .filter(|(_, w)| *w == pattern.letters.as_slice())
            .map(|(i, _)| i)
            .collect()
    }

    /// All `2^len` words of the given length, in storage order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        assert!(
            len < usize::BITS as usize,
            "length {len} too large to enumerate"
        );
        (0..(1usize << len)).map(move |bits| {
            let letters = (0..len)
                .rev()
                .map(|i| {
                    if bits >> i & 1 == 1 {
                        Letter::Alpha
                    } else {
                        Letter::Beta
                    }
                })
                .collect();
            Word { letters }
        })
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts a string of `a`/`b` letters; `1` (or the empty string) is the
    /// empty word.
    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| {
                Letter::from_char(c)
                    .ok_or_else(|| Error::Parse(format!("invalid letter `{c}` in word `{s}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::from_letters)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Word, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Compares `v` and `w` through the concatenations `vw` and `wv`.
pub fn compare(v: &Word, w: &Word) -> WordOrdering {
    let n = v.len() + w.len();
    let at = |first: &Word, second: &Word, i: usize| {
        if i < first.len() {
            first.letters[i]
        } else {
            second.letters[i - first.len()]
        }
    };
    for i in 0..n {
        let x = at(v, w, i);
        let y = at(w, v, i);
        match x.cmp(&y) {
            Ordering::Greater => return WordOrdering::Greater,
            Ordering::Less => return WordOrdering::Less,
            Ordering::Equal => {}
        }
    }
    WordOrdering::Equivalent
}

/// `true` when `compare(v, w)` is `Greater` or `Equivalent`.
pub fn greater_or_equivalent(v: &Word, w: &Word) -> bool {
    compare(v, w) != WordOrdering::Less
}

/// Splits `letters` into its regular decomposition and returns the factor
/// boundaries as `(start, end)` pairs, left to right.
///
/// This is Duval's scan run on ranks (`a` below `b`): a regular word is
/// rank-smaller than every nontrivial rotation, so the rank-Lyndon
/// factorization is the regular decomposition.
fn duval_factors(letters: &[Letter]) -> Vec<(usize, usize)> {
    let n = letters.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && letters[k].rank() <= letters[j].rank() {
            if letters[k].rank() < letters[j].rank() {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push((i, i + j - k));
            i += j - k;
        }
    }
    out
}

pub fn is_regular(w: &Word) -> bool {
    !w.is_empty() && duval_factors(&w.letters).len() == 1
}

/// Regular factoring `w = l ⋆ r`: `r` is the longest proper ending of `w`
/// that is regular.
pub fn regular_factoring(w: &Word) -> Result<(Word, Word)> {
    if !is_regular(w) {
        return Err(Error::NotRegular(w.clone()));
    }
    if w.len() < 2 {
        return Err(Error::TooShort(w.clone()));
    }
    let split = (1..w.len())
        .find(|&i| is_regular(&w.suffix_from(i)))
        .expect("the last letter is always a regular ending");
    Ok((w.prefix(split), w.suffix_from(split)))
}

/// The unique factorization `w = v_1 v_2 ... v_k` into regular words with
/// `v_{i+1} >= v_i` for every `i`.
pub fn regular_decomposition(w: &Word) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(duval_factors(&w.letters)
        .into_iter()
        .map(|(s, e)| w.slice(s, e))
        .collect())
}

/// Number of (possibly overlapping) occurrences of `v` as a contiguous
/// subword of `w`.
pub fn deg_subword(w: &Word, v: &Word) -> Result<usize> {
    if v.is_empty() {
        return Err(Error::EmptyPattern);
    }
    Ok(w.occurrences(v).len())
}

/// `a^{m_1} b^{n_1} ... a^{m_k} b^{n_k}` with every exponent positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentForm {
    pairs: Vec<(usize, usize)>,
}

impl ExponentForm {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<ExponentForm> {
        if pairs.is_empty() {
            return Err(Error::EmptyWord);
        }
        if pairs.iter().any(|&(m, n)| m == 0 || n == 0) {
            return Err(Error::Parse(
                "exponent form requires positive exponents".to_string(),
            ));
        }
        Ok(ExponentForm { pairs })
    }

    /// Run-length decomposition of any word that starts with `a` and ends
    /// with `b`.
    pub fn of_word(w: &Word) -> Result<ExponentForm> {
        let letters = w.letters();
        if letters.first() != Some(&Letter::Alpha) || letters.last() != Some(&Letter::Beta) {
            return Err(Error::MalformedShape { word: w.clone() });
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut idx = 0;
        while idx < letters.len() {
            let a_start = idx;
            while idx < letters.len() && letters[idx] == Letter::Alpha {
                idx += 1;
            }
            let b_start = idx;
            while idx < letters.len() && letters[idx] == Letter::Beta {
                idx += 1;
            }
            pairs.push((b_start - a_start, idx - b_start));
        }
        Ok(ExponentForm { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of blocks `k`.
    pub fn blocks(&self) -> usize {
        self.pairs.len()
    }

    pub fn to_word(&self) -> Word {
        let runs: Vec<usize> = self.pairs.iter().flat_map(|&(m, n)| [m, n]).collect();
        Word::from_runs(&runs)
    }

    /// 1-based index `s` of the first block among blocks `2..=k` whose
    /// `a`-exponent is maximal among those blocks. `None` when `k = 1`.
    pub fn peak_block(&self) -> Option<usize> {
        let tail = self.pairs.get(1..).filter(|t| !t.is_empty())?;
        let max = tail.iter().map(|&(m, _)| m).max()?;
        tail.iter().position(|&(m, _)| m == max).map(|p| p + 2)
    }
}

impl fmt::Display for ExponentForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(m, n)| format!("a^{m} b^{n}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Exponent form of a regular word of length at least 2.
pub fn exponent_form(w: &Word) -> Result<ExponentForm> {
    if !is_regular(w) {
        return Err(Error::NotRegular(w.clone()));
    }
    if w.len() < 2 {
        return Err(Error::TooShort(w.clone()));
    }
    ExponentForm::of_word(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn compare_examples() {
        assert_eq!(compare(&w("a"), &w("b")), WordOrdering::Greater);
        assert_eq!(compare(&w("b"), &w("a")), WordOrdering::Less);
        assert_eq!(compare(&w("a"), &w("aa")), WordOrdering::Equivalent);
        assert_eq!(compare(&w("a"), &w("ab")), WordOrdering::Greater);
        assert_eq!(compare(&w("ab"), &w("abab")), WordOrdering::Equivalent);
        assert_eq!(compare(&Word::empty(), &w("ab")), WordOrdering::Equivalent);
    }

    #[test]
    fn regular_small_cases() {
        assert!(is_regular(&w("a")));
        assert!(is_regular(&w("b")));
        assert!(is_regular(&w("ab")));
        assert!(!is_regular(&w("ba")));
        assert!(!is_regular(&w("aa")));
        assert!(!is_regular(&w("bb")));
        assert!(!is_regular(&Word::empty()));
        assert!(!is_regular(&w("abab")));
    }

    #[test]
    fn factoring_rejects_bad_input() {
        assert_eq!(regular_factoring(&w("ba")), Err(Error::NotRegular(w("ba"))));
        assert_eq!(regular_factoring(&w("a")), Err(Error::TooShort(w("a"))));
        assert_eq!(
            regular_factoring(&Word::empty()),
            Err(Error::NotRegular(Word::empty()))
        );
    }

    #[test]
    fn decomposition_edge_cases() {
        assert_eq!(regular_decomposition(&Word::empty()), Err(Error::EmptyWord));
        assert_eq!(regular_decomposition(&w("ab")).unwrap(), vec![w("ab")]);
        assert_eq!(
            regular_decomposition(&w("bb")).unwrap(),
            vec![w("b"), w("b")]
        );
        assert_eq!(
            regular_decomposition(&w("abab")).unwrap(),
            vec![w("ab"), w("ab")]
        );
    }

    #[test]
    fn subword_counts() {
        assert_eq!(deg_subword(&w("ab"), &w("ab")), Ok(1));
        assert_eq!(deg_subword(&w("bbbb"), &w("bb")), Ok(3));
        assert_eq!(
            deg_subword(&w("ab"), &Word::empty()),
            Err(Error::EmptyPattern)
        );
        assert_eq!(deg_subword(&w("ab"), &w("abb")), Ok(0));
    }

    #[test]
    fn exponent_form_examples() {
        let e = exponent_form(&w("aabbb")).unwrap();
        assert_eq!(e.pairs(), &[(2, 3)]);
        assert_eq!(e.peak_block(), None);
        assert_eq!(e.to_string(), "a^2 b^3");

        let e = exponent_form(&w("aaabaabb")).unwrap();
        assert_eq!(e.pairs(), &[(3, 1), (2, 2)]);
        assert_eq!(e.peak_block(), Some(2));

        let e = exponent_form(&w("aabaabb")).unwrap();
        assert_eq!(e.pairs(), &[(2, 1), (2, 2)]);
        assert_eq!(e.peak_block(), Some(2));
        assert_eq!(e.to_word(), w("aabaabb"));

        assert_eq!(exponent_form(&w("a")), Err(Error::TooShort(w("a"))));
        assert_eq!(exponent_form(&w("ba")), Err(Error::NotRegular(w("ba"))));
        assert!(matches!(
            ExponentForm::of_word(&w("ba")),
            Err(Error::MalformedShape { .. })
        ));
    }

    #[test]
    fn peak_block_takes_first_maximum() {
        let e = ExponentForm::new(vec![(3, 1), (1, 1), (2, 1), (2, 2)]).unwrap();
        assert_eq!(e.peak_block(), Some(3));
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(w("1"), Word::empty());
        assert_eq!(Word::empty().to_string(), "1");
        assert_eq!(w("abba").to_string(), "abba");
        assert!("abc".parse::<Word>().is_err());
        assert_eq!(Word::from_runs(&[2, 1, 0, 3]), w("aabbbb"));
    }

    #[test]
    fn storage_order_is_length_then_letters() {
        assert!(w("b") < w("a"));
        assert!(w("a") < w("bb"));
        assert!(w("ba") < w("ab"));
    }
}
