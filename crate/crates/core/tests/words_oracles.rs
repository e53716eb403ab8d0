mod common;

use std::cmp::Ordering;

use common::*;
use hwlie::lyndon::enumerate_regular_words;
use hwlie::words::{
    compare, deg_subword, exponent_form, is_regular, regular_decomposition, regular_factoring,
    Word, WordOrdering,
};

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn ord(o: WordOrdering) -> Ordering {
    match o {
        WordOrdering::Greater => Ordering::Greater,
        WordOrdering::Less => Ordering::Less,
        WordOrdering::Equivalent => Ordering::Equal,
    }
}

#[test]
fn census_matches_exhaustive_definition() {
    let expected = [2, 1, 2, 3, 6, 9, 18, 30];
    for (i, &count) in expected.iter().enumerate() {
        let len = i + 1;
        let naive = all_words(len)
            .iter()
            .filter(|s| naive_is_regular(s))
            .count();
        assert_eq!(naive, count, "oracle census at length {len}");
        assert_eq!(
            enumerate_regular_words(len).len(),
            count,
            "library census at length {len}"
        );
    }
}

#[test]
fn regularity_agrees_with_naive_definition() {
    for len in 1..=13 {
        for s in all_words(len) {
            assert_eq!(is_regular(&w(&s)), naive_is_regular(&s), "{s}");
        }
    }
}

#[test]
fn enumeration_is_exactly_the_regular_words() {
    for len in 1..=10 {
        let mut lib: Vec<String> = enumerate_regular_words(len)
            .iter()
            .map(|x| x.to_string())
            .collect();
        let mut naive: Vec<String> = all_words(len)
            .into_iter()
            .filter(|s| naive_is_regular(s))
            .collect();
        lib.sort();
        naive.sort();
        assert_eq!(lib, naive, "length {len}");
    }
}

#[test]
fn compare_agrees_with_naive_and_is_a_total_preorder() {
    let words: Vec<String> = (1..=5).flat_map(all_words).collect();
    for x in &words {
        for y in &words {
            let lib = ord(compare(&w(x), &w(y)));
            assert_eq!(lib, naive_compare(x, y), "{x} vs {y}");
            assert_eq!(
                lib.reverse(),
                ord(compare(&w(y), &w(x))),
                "antisymmetry {x} {y}"
            );
        }
    }
    let small: Vec<String> = (1..=4).flat_map(all_words).collect();
    for x in &small {
        for y in &small {
            for z in &small {
                let xy = naive_compare(x, y);
                let yz = naive_compare(y, z);
                if xy != Ordering::Less && yz != Ordering::Less {
                    assert_ne!(
                        ord(compare(&w(x), &w(z))),
                        Ordering::Less,
                        "transitivity {x} >= {y} >= {z}"
                    );
                }
            }
        }
    }
}

#[test]
fn equivalence_means_common_root() {
    // vw = wv exactly when v and w are powers of one word.
    assert_eq!(compare(&w("ab"), &w("abab")), WordOrdering::Equivalent);
    assert_eq!(compare(&w("a"), &w("aaa")), WordOrdering::Equivalent);
    assert_eq!(compare(&w("a"), &w("b")), WordOrdering::Greater);
    assert_eq!(compare(&w("ab"), &w("b")), WordOrdering::Greater);
    assert_eq!(compare(&w("ab"), &w("a")), WordOrdering::Less);
}

#[test]
fn factoring_is_the_longest_regular_ending() {
    for len in 2..=12 {
        for x in enumerate_regular_words(len) {
            let s = x.to_string();
            let (l, r) = regular_factoring(&x).unwrap();
            let (nl, nr) = naive_factoring(&s);
            assert_eq!((l.to_string(), r.to_string()), (nl, nr), "{s}");
            assert!(is_regular(&l) && is_regular(&r), "{s}: factors are regular");
            assert_eq!(compare(&l, &r), WordOrdering::Greater, "{s}: L > R");
        }
    }
}

#[test]
fn factoring_examples() {
    let cases = [
        ("ab", "a", "b"),
        ("abb", "ab", "b"),
        ("aab", "a", "ab"),
        ("aabab", "aab", "ab"),
        ("ababb", "ab", "abb"),
    ];
    for (word, l, r) in cases {
        let (fl, fr) = regular_factoring(&w(word)).unwrap();
        assert_eq!(
            (fl.to_string().as_str(), fr.to_string().as_str()),
            (l, r),
            "{word}"
        );
    }
    assert!(regular_factoring(&w("ba")).is_err());
    assert!(regular_factoring(&w("a")).is_err());
}

#[test]
fn regular_concatenation_of_ordered_regular_words() {
    // For regular v > w, the word vw is regular.
    let words: Vec<Word> = (1..=6).flat_map(enumerate_regular_words).collect();
    for v in &words {
        for x in &words {
            if v.len() + x.len() > 12 {
                continue;
            }
            if compare(v, x) == WordOrdering::Greater {
                let joined = v.concat(x);
                assert!(naive_is_regular(&joined.to_string()), "{v} * {x}");
            }
        }
    }
}

#[test]
fn decomposition_is_unique_and_matches_brute_force() {
    for len in 1..=10 {
        for s in all_words(len) {
            let all = brute_force_decompositions(&s);
            assert_eq!(all.len(), 1, "{s} has {} decompositions", all.len());
            let lib: Vec<String> = regular_decomposition(&w(&s))
                .unwrap()
                .iter()
                .map(|x| x.to_string())
                .collect();
            assert_eq!(lib, all[0], "{s}");
        }
    }
}

#[test]
fn decomposition_examples() {
    let dec = |s: &str| -> Vec<String> {
        regular_decomposition(&w(s))
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect()
    };
    assert_eq!(dec("baab"), ["b", "aab"]);
    assert_eq!(dec("bba"), ["b", "b", "a"]);
    assert_eq!(dec("aabab"), ["aabab"]);
    assert_eq!(dec("abba"), ["abb", "a"]);
    assert!(regular_decomposition(&Word::empty()).is_err());
}

#[test]
fn subword_degrees() {
    let ba = w("ba");
    assert_eq!(deg_subword(&w("aabab"), &ba).unwrap(), 1);
    assert_eq!(deg_subword(&w("ababab"), &ba).unwrap(), 2);
    assert_eq!(deg_subword(&w("aaa"), &w("aa")).unwrap(), 2);
    assert_eq!(deg_subword(&w("abb"), &ba).unwrap(), 0);
    assert!(deg_subword(&w("ab"), &Word::empty()).is_err());
}

#[test]
fn exponent_forms_round_trip() {
    for len in 2..=12 {
        for x in enumerate_regular_words(len) {
            let form = exponent_form(&x).unwrap();
            assert_eq!(form.to_word(), x);
            let pairs = form.pairs();
            assert!(pairs.iter().all(|&(m, n)| m >= 1 && n >= 1), "{x}");
            // Regular words of length >= 2 start with the longest run of a.
            let m1 = pairs[0].0;
            assert!(pairs.iter().all(|&(m, _)| m <= m1), "{x}");
        }
    }
    let form = exponent_form(&w("aabaabbb")).unwrap();
    assert_eq!(form.pairs(), &[(2, 1), (2, 3)]);
    assert!(exponent_form(&w("ba")).is_err());
}

#[test]
fn parse_rejects_foreign_letters() {
    assert!("abc".parse::<Word>().is_err());
    assert_eq!("1".parse::<Word>().unwrap(), Word::empty());
    assert_eq!(Word::from_runs(&[2, 1, 1, 3]).to_string(), "aababbb");
    assert_eq!(Word::from_runs(&[0, 1, 1]).to_string(), "ba");
}
