//! The free associative algebra on `a`, `b` over the rationals, with
//! commutators and chains of adjoint maps.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{self, Alphabet};
use crate::lyndon::bracketing;
use crate::sparse::{apply_ad_links, Combination, Monomial, Rational, Sign};
use crate::words::{is_regular, Letter, Word};

/// Element of the free algebra: a sparse combination of words, the empty
/// word being the identity.
pub type FreePoly = Combination<Word>;

impl Monomial for Word {
    fn one() -> Word {
        Word::empty()
    }

    fn product(&self, other: &Word) -> Combination<Word> {
        Combination::basis(self.concat(other))
    }
}

impl Alphabet for Word {
    fn generator(c: char) -> Option<Word> {
        Letter::from_char(c).map(Word::letter)
    }
}

pub fn word_poly(w: &Word) -> FreePoly {
    FreePoly::basis(w.clone())
}

pub fn parse_free(input: &str) -> Result<FreePoly> {
    expr::parse(input)
}

/// Longest words first; within a length, greater words first.
impl fmt::Display for Combination<Word> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = expr::render_terms(self.iter().rev(), false, |w: &Word| {
            (!w.is_empty()).then(|| w.to_string())
        });
        f.write_str(&s)
    }
}

impl fmt::Debug for Combination<Word> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreePoly({self})")
    }
}

/// Splits a polynomial into its homogeneous components, keyed by
/// `(number of a, number of b)`.
pub fn homogeneous_components(f: &FreePoly) -> Vec<((usize, usize), FreePoly)> {
    let mut parts: std::collections::BTreeMap<(usize, usize), FreePoly> = Default::default();
    for (w, c) in f.iter() {
        parts
            .entry(w.multidegree())
            .or_default()
            .add_term(w.clone(), c.clone());
    }
    parts.into_iter().collect()
}

/// One factor `sign · ad⟦word⟧` of an [`AdChain`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AdLink {
    pub sign: i8,
    pub word: Word,
}

impl AdLink {
    pub fn new(sign: Sign, word: Word) -> Result<AdLink> {
        if !is_regular(&word) {
            return Err(Error::NotRegular(word));
        }
        Ok(AdLink {
            sign: sign.to_i8(),
            word,
        })
    }

    pub fn sign(&self) -> Sign {
        if self.sign < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

/// The composition `(s_1 ad⟦U_1⟧)(s_2 ad⟦U_2⟧)...(s_k ad⟦U_k⟧)`; the
/// empty chain is the identity map.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AdChain {
    links: Vec<AdLink>,
}

impl AdChain {
    pub fn identity() -> AdChain {
        AdChain::default()
    }

    pub fn new(links: Vec<(Sign, Word)>) -> Result<AdChain> {
        let links = links
            .into_iter()
            .map(|(s, w)| AdLink::new(s, w))
            .collect::<Result<Vec<_>>>()?;
        Ok(AdChain { links })
    }

    pub fn links(&self) -> &[AdLink] {
        &self.links
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    /// Puts `link` in front, making it the outermost map.
    pub(crate) fn push_outer(&mut self, link: AdLink) {
        self.links.insert(0, link);
    }

    /// Appends `other`'s links after this chain's (they act first).
    pub fn then(&self, other: &AdChain) -> AdChain {
        let mut links = self.links.clone();
        links.extend(other.links.iter().cloned());
        AdChain { links }
    }
}

impl fmt::Display for AdChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.links.is_empty() {
            return f.write_str("id");
        }
        for link in &self.links {
            let s = if link.sign < 0 { "-" } else { "" };
            write!(f, "({s}ad {})", link.word)?;
        }
        Ok(())
    }
}

/// Applies the chain right to left, each link acting as
/// `g ↦ sign · [⟦U⟧, g]`.
pub fn apply_ad_chain(chain: &AdChain, f: &FreePoly) -> FreePoly {
    let links: Vec<(Sign, FreePoly)> = chain
        .links
        .iter()
        .map(|l| {
            let b = bracketing(&l.word).expect("ad-chain links hold regular words");
            (l.sign(), b)
        })
        .collect();
    apply_ad_links(&links, f)
}

/// One term of the JSON form of a word-keyed combination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordTermJson {
    pub word: Word,
    pub num: String,
    pub den: String,
}

pub(crate) fn rational_parts(c: &Rational) -> (String, String) {
    (c.numer().to_string(), c.denom().to_string())
}

pub(crate) fn rational_from_parts(num: &str, den: &str) -> Result<Rational> {
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator `{num}`")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator `{den}`")))?;
    if d == BigInt::from(0) {
        return Err(Error::Parse("zero denominator".to_string()));
    }
    Ok(Rational::new(n, d))
}

pub fn free_to_json(f: &FreePoly) -> Vec<WordTermJson> {
    f.iter()
        .rev()
        .map(|(w, c)| {
            let (num, den) = rational_parts(c);
            WordTermJson {
                word: w.clone(),
                num,
                den,
            }
        })
        .collect()
}

pub fn free_from_json(terms: &[WordTermJson]) -> Result<FreePoly> {
    terms
        .iter()
        .map(|t| Ok((t.word.clone(), rational_from_parts(&t.num, &t.den)?)))
        .collect()
}
