//! The homomorphism from the free Lie algebra onto the Lie subalgebra
//! spanned by `BA²` and the powers of `A`.

use std::collections::HashMap;

use super::{ideal::in_complement_of_normal_part, require, Failure, VerificationReport};
use crate::error::Result;
use crate::linalg::SubspaceBasis;
use crate::lyndon::{bracketing, enumerate_regular_words};
use crate::sparse::{ad, ad_pow, commutator, factorial, Rational, Sign};
use crate::weyl::{from_free_with, gen_a, mono, WeylPoly};
use crate::words::{regular_factoring, Letter, Word};

/// Image of `⟦w⟧` under the Lie homomorphism `a ↦ image_a`, `b ↦ image_b`,
/// computed through the bracket structure of `w` (never through the
/// associative expansion).
pub fn lie_image(w: &Word, image_a: &WeylPoly, image_b: &WeylPoly) -> Result<WeylPoly> {
    let mut memo = HashMap::new();
    lie_image_memo(w, image_a, image_b, &mut memo)
}

fn lie_image_memo(
    w: &Word,
    image_a: &WeylPoly,
    image_b: &WeylPoly,
    memo: &mut HashMap<Word, WeylPoly>,
) -> Result<WeylPoly> {
    if let Some(v) = memo.get(w) {
        return Ok(v.clone());
    }
    let v = if w.len() == 1 {
        match w.letters()[0] {
            Letter::Alpha => image_a.clone(),
            Letter::Beta => image_b.clone(),
        }
    } else {
        let (l, r) = regular_factoring(w)?;
        let lv = lie_image_memo(&l, image_a, image_b, memo)?;
        let rv = lie_image_memo(&r, image_a, image_b, memo)?;
        commutator(&lv, &rv)
    };
    memo.insert(w.clone(), v.clone());
    Ok(v)
}

/// With `a ↦ A` and `b ↦ Ω = BA²`, checks for `n <= n_max`:
///
/// * `⟦a²bⁿ⟧ ↦ 0` and `⟦abⁿ⟧ ↦ n! A^{n+1}`;
/// * the images of `b` and `⟦abⁿ⟧` are linearly independent;
/// * `A` commutes with each image of `⟦abⁿ⟧`;
/// * the relations `(ad A)(-ad Ω)ⁿ(A) = 0`;
/// * every regular word of length at most `n_max + 2` other than `b` and
///   `abⁿ` maps to 0, and the bracket-structure image agrees with the
///   associative substitution image (words up to length 10).
pub fn verify_presentation_kernel(n_max: u32) -> Result<VerificationReport> {
    require(n_max >= 1, || {
        "presentation-kernel needs bound >= 1".to_string()
    })?;
    let mut report = VerificationReport::new("presentation-kernel", vec![n_max as u64]);
    let a = gen_a();
    let omega = mono(1, 2);
    let image = |w: &Word| lie_image(w, &a, &omega).expect("enumerated words are regular");
    let n = n_max as usize;

    let word_len = n + 2;
    let mut complement_words = 0usize;
    for len in 1..=word_len {
        for w in enumerate_regular_words(len) {
            let img = image(&w);
            if len <= 10 {
                let assoc = from_free_with(&bracketing(&w)?, &a, &omega);
                report.check_eq(
                    || format!("bracket image vs substitution image of [[{w}]]"),
                    &assoc,
                    &img,
                );
            }
            if in_complement_of_normal_part(&w) {
                complement_words += 1;
                report.check_eq(|| format!("image of [[{w}]]"), &WeylPoly::zero(), &img);
            }
        }
    }
    report.note(format!(
        "{complement_words} regular words of length <= {word_len} outside {{b, ab^n}} checked to map to 0"
    ));

    let mut independent = SubspaceBasis::new();
    independent.insert(&image(&Word::beta()));
    for k in 0..=n {
        let w = Word::from_runs(&[1, k]);
        let img = image(&w);
        let expected = mono(0, k as u32 + 1).scale(&Rational::from_integer(factorial(k as u32)));
        report.check_eq(|| format!("image of [[{w}]]"), &expected, &img);
        report.check_eq(
            || format!("[A, image of [[{w}]]]"),
            &WeylPoly::zero(),
            &commutator(&a, &img),
        );
        independent.insert(&img);
        if k >= 1 {
            let g = Word::from_runs(&[2, k]);
            report.check_eq(
                || format!("image of [[{g}]]"),
                &WeylPoly::zero(),
                &image(&g),
            );
            let rel = ad(Sign::Plus, &a, &ad_pow(Sign::Minus, &omega, k as u32, &a));
            report.check_eq(
                || format!("(ad A)(-ad BA^2)^{k}(A)"),
                &WeylPoly::zero(),
                &rel,
            );
        }
    }
    let dim = independent.dim();
    report.check(dim == n + 2, || Failure {
        input: format!("images of b and [[ab^k]] for k <= {n}"),
        expected: format!("{} linearly independent elements", n + 2),
        actual: format!("span of dimension {dim}"),
    });

    let b2a = mono(2, 1);
    let ab = lie_image(&Word::from_runs(&[1, 1]), &a, &b2a)?;
    let aab = lie_image(&Word::from_runs(&[2, 1]), &a, &b2a)?;
    report.note(format!(
        "with b mapped to B^2A instead, [[ab]] maps to {ab} and [[aab]] maps to {aab}"
    ));
    Ok(report)
}
