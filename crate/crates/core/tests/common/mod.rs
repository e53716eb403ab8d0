//! Independent oracles and random generators shared by the integration
//! tests. The oracles work on plain strings over `a`/`b` and never call the
//! library's word or bracket routines.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeMap;

use hwlie::freealg::FreePoly;
use hwlie::sparse::{Combination, Rational};
use hwlie::weyl::{WeylMonomial, WeylPoly};
use hwlie::words::Word;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Compares `v` and `w` by scanning `vw` against `wv`, with `a > b`.
pub fn naive_compare(v: &str, w: &str) -> Ordering {
    let x = format!("{v}{w}");
    let y = format!("{w}{v}");
    for (p, q) in x.chars().zip(y.chars()) {
        if p != q {
            // 'a' sorts before 'b' as a char, but a > b in the word order.
            return q.cmp(&p);
        }
    }
    Ordering::Equal
}

/// Regular: nonempty and `L > R` for every split into nonempty `L`, `R`.
pub fn naive_is_regular(w: &str) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| naive_compare(&w[..i], &w[i..]) == Ordering::Greater)
}

pub fn all_words(len: usize) -> Vec<String> {
    (0..1u32 << len)
        .map(|bits| {
            (0..len)
                .map(|i| {
                    if bits >> (len - 1 - i) & 1 == 0 {
                        'a'
                    } else {
                        'b'
                    }
                })
                .collect()
        })
        .collect()
}

/// Every way to write `w` as regular factors `V_1 ... V_k` with each factor
/// greater than or equivalent to the one before it.
pub fn brute_force_decompositions(w: &str) -> Vec<Vec<String>> {
    fn go(rest: &str, prev: Option<&str>, acc: &mut Vec<String>, out: &mut Vec<Vec<String>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for end in 1..=rest.len() {
            let piece = &rest[..end];
            if !naive_is_regular(piece) {
                continue;
            }
            if let Some(p) = prev {
                if naive_compare(piece, p) == Ordering::Less {
                    continue;
                }
            }
            acc.push(piece.to_string());
            go(&rest[end..], Some(piece), acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(w, None, &mut Vec::new(), &mut out);
    out
}

/// The longest regular proper ending, by trying every split.
pub fn naive_factoring(w: &str) -> (String, String) {
    for i in 1..w.len() {
        if naive_is_regular(&w[i..]) {
            return (w[..i].to_string(), w[i..].to_string());
        }
    }
    panic!("{w} has no regular proper ending");
}

pub type StrPoly = BTreeMap<String, Rational>;

fn str_add(p: &mut StrPoly, k: String, c: Rational) {
    let e = p.entry(k.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        p.remove(&k);
    }
}

pub fn str_commutator(f: &StrPoly, g: &StrPoly) -> StrPoly {
    let mut out = StrPoly::new();
    for (u, c) in f {
        for (v, d) in g {
            str_add(&mut out, format!("{u}{v}"), c * d);
            str_add(&mut out, format!("{v}{u}"), -(c * d));
        }
    }
    out
}

/// Regular bracketing computed on strings with the naive factoring.
pub fn naive_bracketing(w: &str) -> StrPoly {
    if w.len() == 1 {
        return [(w.to_string(), Rational::one())].into_iter().collect();
    }
    let (l, r) = naive_factoring(w);
    str_commutator(&naive_bracketing(&l), &naive_bracketing(&r))
}

pub fn to_free(p: &StrPoly) -> FreePoly {
    p.iter()
        .map(|(k, c)| (k.parse::<Word>().unwrap(), c.clone()))
        .collect()
}

/// Rank of a dense rational matrix by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                let pivot_row = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row).skip(c) {
                    *x -= p * &f;
                }
            }
        }
        r += 1;
    }
    r
}

/// Rows of coefficients of the given polynomials over the union of their
/// words.
pub fn dense_rows(polys: &[StrPoly]) -> Vec<Vec<Rational>> {
    let keys: Vec<&String> = {
        let mut ks: Vec<&String> = polys.iter().flat_map(|p| p.keys()).collect();
        ks.sort();
        ks.dedup();
        ks
    };
    polys
        .iter()
        .map(|p| {
            keys.iter()
                .map(|k| p.get(*k).cloned().unwrap_or_else(Rational::zero))
                .collect()
        })
        .collect()
}

// Random generators.

pub fn arb_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(prop_oneof![Just('a'), Just('b')], 0..=max_len)
        .prop_map(|cs| cs.into_iter().collect::<String>().parse::<Word>().unwrap())
}

pub fn arb_free(max_terms: usize, max_len: usize) -> impl Strategy<Value = FreePoly> {
    proptest::collection::vec((arb_word(max_len), arb_rational()), 0..=max_terms)
        .prop_map(|terms| terms.into_iter().collect::<FreePoly>())
}

pub fn arb_weyl(max_terms: usize, max_exp: u32) -> impl Strategy<Value = WeylPoly> {
    proptest::collection::vec(
        ((0..=max_exp), (0..=max_exp), arb_rational()),
        0..=max_terms,
    )
    .prop_map(|terms| {
        terms
            .into_iter()
            .map(|(b, a, c)| (WeylMonomial::new(b, a), c))
            .collect::<Combination<WeylMonomial>>()
    })
}

// Property checks shared by the property tests and the acceptance target.

use hwlie::sparse::commutator;
use hwlie::weyl::{from_free, phi};
use proptest::test_runner::TestCaseError;

pub fn free_associative(f: &FreePoly, g: &FreePoly, h: &FreePoly) -> Result<(), TestCaseError> {
    prop_assert_eq!(&(f * g) * h, f * &(g * h));
    Ok(())
}

pub fn weyl_associative(f: &WeylPoly, g: &WeylPoly, h: &WeylPoly) -> Result<(), TestCaseError> {
    prop_assert_eq!(&(f * g) * h, f * &(g * h));
    Ok(())
}

pub fn free_jacobi(f: &FreePoly, g: &FreePoly, h: &FreePoly) -> Result<(), TestCaseError> {
    prop_assert_eq!(commutator(f, g), -commutator(g, f));
    prop_assert!(commutator(f, f).is_zero());
    let sum = &(&commutator(f, &commutator(g, h)) + &commutator(g, &commutator(h, f)))
        + &commutator(h, &commutator(f, g));
    prop_assert!(sum.is_zero(), "Jacobi sum {}", sum);
    Ok(())
}

pub fn weyl_jacobi(f: &WeylPoly, g: &WeylPoly, h: &WeylPoly) -> Result<(), TestCaseError> {
    prop_assert_eq!(commutator(f, g), -commutator(g, f));
    prop_assert!(commutator(f, f).is_zero());
    let sum = &(&commutator(f, &commutator(g, h)) + &commutator(g, &commutator(h, f)))
        + &commutator(h, &commutator(f, g));
    prop_assert!(sum.is_zero(), "Jacobi sum {}", sum);
    Ok(())
}

pub fn from_free_homomorphism(f: &FreePoly, g: &FreePoly) -> Result<(), TestCaseError> {
    prop_assert_eq!(from_free(&(f * g)), &from_free(f) * &from_free(g));
    prop_assert_eq!(from_free(&(f + g)), &from_free(f) + &from_free(g));
    Ok(())
}

pub fn from_free_kills_relation(h: &FreePoly, h2: &FreePoly) -> Result<(), TestCaseError> {
    let rel = hwlie::freealg::parse_free("-ab + ba + 1").unwrap();
    prop_assert!(from_free(&(&(h * &rel) * h2)).is_zero());
    Ok(())
}

pub fn phi_homomorphism(f: &WeylPoly, g: &WeylPoly) -> Result<(), TestCaseError> {
    prop_assert_eq!(phi(&(f * g)), &phi(f) * &phi(g));
    prop_assert_eq!(phi(&(f + g)), &phi(f) + &phi(g));
    Ok(())
}
