//! `ℋ = (𝔤 ⊕ φ(𝔤)) + [𝔤, φ(𝔤)]`, where `𝔤` is spanned by `BA²` and the
//! powers of `A`.

use super::{require, Failure, VerificationReport};
use crate::error::Result;
use crate::linalg::SubspaceBasis;
use crate::sparse::{binomial, commutator, factorial, rat, Rational};
use crate::weyl::{gen_a, mono, phi, phi_inverse, phi_power, WeylMonomial, WeylPoly};

/// `Σ_{k=2}^{min(m,n)+1} C(m+1,k) C(n+1,k) k! B^{m+1-k} A^{n+1-k}`.
fn lower_sum(m: u32, n: u32) -> WeylPoly {
    let mut out = WeylPoly::zero();
    for k in 2..=(m + 1).min(n + 1) {
        let c = binomial(m + 1, k) * binomial(n + 1, k) * factorial(k);
        out.add_scaled(&mono(m + 1 - k, n + 1 - k), &Rational::from_integer(c));
    }
    out
}

fn g_basis(cap: u32) -> Vec<WeylPoly> {
    std::iter::once(mono(1, 2))
        .chain((1..=cap).map(|n| mono(0, n)))
        .collect()
}

fn g_bar_basis(cap: u32) -> Vec<WeylPoly> {
    std::iter::once(mono(2, 1))
        .chain((1..=cap).map(|n| mono(n, 0)))
        .collect()
}

/// Checks, with `𝔤` and `𝔤̄ = Span{B²A, Bⁿ}` truncated at exponent `cap`:
///
/// * `B^m A^n = (1/((m+1)(n+1))) ([A^{n+1}, φ(A^{m+1})] - Σ_{k>=2} ...)`
///   for `m + n <= max_degree`;
/// * every `B^m A^n` with `m + n <= max_degree` lies in
///   `𝔤 + 𝔤̄ + [𝔤, 𝔤̄]` (needs `cap > max_degree`);
/// * `𝔤 ∩ 𝔤̄ = 0` and `φ(𝔤) = 𝔤̄`;
/// * `φ(Aⁿ) = Bⁿ`, `φ(BA²) = -AB² = -B²A - 2B`, `B²A = -φ(BA² + 2A)` and
///   `B²A = -φ(BA²) - 2φ(A)`;
/// * `φ⁴ = id` and `φ ∘ φ⁻¹ = id` on `B^m A^n` with `m + n <= max_degree`.
pub fn verify_decomposition(max_degree: u32, cap: u32) -> Result<VerificationReport> {
    require(max_degree >= 1, || {
        "decomposition needs bound >= 1".to_string()
    })?;
    require(cap > max_degree, || {
        format!("decomposition needs cap > bound (got cap {cap}, bound {max_degree})")
    })?;
    let mut report = VerificationReport::new("decomposition", vec![max_degree as u64, cap as u64]);

    let g = g_basis(cap);
    let g_bar = g_bar_basis(cap);
    let mut sum = SubspaceBasis::from_vectors(g.iter().chain(&g_bar));
    for x in &g {
        for y in &g_bar {
            sum.insert(&commutator(x, y));
        }
    }

    let mut printed_negated = 0usize;
    let mut total = 0usize;
    for deg in 0..=max_degree {
        for m in 0..=deg {
            let n = deg - m;
            let target = mono(m, n);
            let c = Rational::new(1.into(), ((m + 1) * (n + 1)).into());
            let top = commutator(&mono(0, n + 1), &phi(&mono(0, m + 1)));
            let rhs = (&top - &lower_sum(m, n)).scale(&c);
            report.check_eq(
                || format!("B^{m}A^{n} from [A^{}, phi(A^{})]", n + 1, m + 1),
                &target,
                &rhs,
            );
            let printed = &top.scale(&-c.clone()) + &lower_sum(m, n).scale(&c);
            total += 1;
            if printed == -target.clone() {
                printed_negated += 1;
            }
            report.check(sum.contains(&target), || Failure {
                input: format!("B^{m}A^{n}"),
                expected: "inside g + phi(g) + [g, phi(g)]".to_string(),
                actual: "outside".to_string(),
            });
            let round = phi_power(&target, 4);
            report.check_eq(|| format!("phi^4(B^{m}A^{n})"), &target, &round);
            report.check_eq(
                || format!("phi(phi^-1(B^{m}A^{n}))"),
                &target,
                &phi(&phi_inverse(&target)),
            );
        }
    }
    report.note(format!(
        "the sum written with -1/((m+1)(n+1)) before the bracket and + before the sum \
         evaluates to -B^mA^n for {printed_negated} of {total} exponent pairs"
    ));

    let g_span = SubspaceBasis::from_vectors(&g);
    let g_bar_span = SubspaceBasis::from_vectors(&g_bar);
    let joint = SubspaceBasis::from_vectors(g.iter().chain(&g_bar));
    report.check(joint.dim() == g_span.dim() + g_bar_span.dim(), || Failure {
        input: format!("g and its conjugate at cap {cap}"),
        expected: format!("dim of sum = {} + {}", g_span.dim(), g_bar_span.dim()),
        actual: format!("dim of sum = {}", joint.dim()),
    });

    let images: Vec<WeylPoly> = g.iter().map(phi).collect();
    let image_span = SubspaceBasis::<WeylMonomial>::from_vectors(&images);
    report.check(image_span.same_span(&g_bar_span), || Failure {
        input: format!("phi(g) at cap {cap}"),
        expected: "Span{B^2A, B^n}".to_string(),
        actual: images
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(", "),
    });

    for n in 1..=cap {
        report.check_eq(|| format!("phi(A^{n})"), &mono(n, 0), &phi(&mono(0, n)));
    }
    let a = gen_a();
    let ba2 = mono(1, 2);
    let b2a = mono(2, 1);
    let ab2 = &a * &mono(2, 0);
    let minus_b2a_minus_2b = &-b2a.clone() - &mono(1, 0).scale(&rat(2));
    report.check_eq(
        || "AB^2".to_string(),
        &(&b2a + &mono(1, 0).scale(&rat(2))),
        &ab2,
    );
    report.check_eq(|| "phi(BA^2)".to_string(), &minus_b2a_minus_2b, &phi(&ba2));
    report.check_eq(
        || "phi(BA^2) = -AB^2".to_string(),
        &-ab2.clone(),
        &phi(&ba2),
    );

    let a2b = &mono(0, 2) * &mono(1, 0);
    let ba2_plus_2a = &ba2 + &a.scale(&rat(2));
    report.check_eq(|| "A^2B".to_string(), &ba2_plus_2a, &a2b);
    report.check_eq(
        || "B^2A = -phi(BA^2 + 2A)".to_string(),
        &b2a,
        &-phi(&ba2_plus_2a),
    );
    if phi(&ba2_plus_2a) == -b2a.clone() {
        report.note("phi(A^2B) = phi(BA^2 + 2A) equals -B^2A, not B^2A");
    }

    let corollary = &-phi(&ba2) - &phi(&a).scale(&rat(2));
    report.check_eq(
        || "B^2A = -phi(BA^2) - 2 phi(A)".to_string(),
        &b2a,
        &corollary,
    );
    let printed = &phi(&ba2) - &phi(&a).scale(&rat(2));
    report.note(format!("phi(BA^2) - 2 phi(A) evaluates to {printed}"));
    Ok(report)
}
