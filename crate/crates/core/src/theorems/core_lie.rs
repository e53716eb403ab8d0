//! The solvable, non-nilpotent Lie subalgebra spanned by `BA²` and the
//! powers of `A`.

use super::{require, Failure, VerificationReport};
use crate::error::{Error, Result};
use crate::linalg::SubspaceBasis;
use crate::sparse::{commutator, rat};
use crate::weyl::{mono, WeylMonomial, WeylPoly};

/// Basis `BA², A, A², ..., A^cap` of the truncated subalgebra.
fn basis(cap: u32) -> Vec<WeylPoly> {
    std::iter::once(mono(1, 2))
        .chain((1..=cap).map(|n| mono(0, n)))
        .collect()
}

fn within_cap(f: &WeylPoly, cap: u32) -> bool {
    f.keys().all(|m: &WeylMonomial| m.b <= 1 && m.a <= cap)
}

fn span_of_powers(from: u32, to: u32) -> SubspaceBasis<WeylMonomial> {
    let powers: Vec<WeylPoly> = (from..=to).map(|n| mono(0, n)).collect();
    SubspaceBasis::from_vectors(&powers)
}

/// With the basis truncated at `A^cap`, checks that brackets of basis
/// elements stay in the span, that the `k`-th term of the lower central
/// series is `Span{A^n : k+1 <= n <= cap}` for `1 <= k <= k_max` and never
/// zero, and that the derived algebra is abelian. Brackets whose value
/// would leave the truncation are skipped.
pub fn verify_core_lie(cap: u32, k_max: u32) -> Result<VerificationReport> {
    require(k_max >= 1, || {
        "core-lie needs a series depth >= 1".to_string()
    })?;
    if cap < k_max + 2 {
        return Err(Error::CapTooSmall { cap, depth: k_max });
    }
    let mut report = VerificationReport::new("core-lie", vec![k_max as u64, cap as u64]);
    let g = basis(cap);
    let g_span = SubspaceBasis::from_vectors(&g);
    let ba2 = mono(1, 2);

    for n in 1..cap {
        let expected = mono(0, n + 1).scale(&rat(-(n as i64)));
        report.check_eq(
            || format!("[BA^2, A^{n}]"),
            &expected,
            &commutator(&ba2, &mono(0, n)),
        );
    }
    for x in &g {
        for y in &g {
            let br = commutator(x, y);
            if !within_cap(&br, cap) {
                continue;
            }
            report.check(g_span.contains(&br), || Failure {
                input: format!("[{x}, {y}]"),
                expected: "inside Span{BA^2, A^n}".to_string(),
                actual: br.to_string(),
            });
        }
    }

    let mut term = g_span.clone();
    let mut derived: Option<SubspaceBasis<WeylMonomial>> = None;
    for k in 1..=k_max {
        let mut next = SubspaceBasis::new();
        for x in &g {
            for y in term.vectors() {
                let br = commutator(x, y);
                if within_cap(&br, cap) {
                    next.insert(&br);
                }
            }
        }
        let expected = span_of_powers(k + 1, cap);
        report.check(next.same_span(&expected), || Failure {
            input: format!("term {k} of the lower central series"),
            expected: format!("Span{{A^n : {} <= n <= {cap}}}", k + 1),
            actual: format!(
                "span of {}",
                next.vectors()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        });
        report.check(!next.is_zero(), || Failure {
            input: format!("term {k} of the lower central series"),
            expected: "nonzero".to_string(),
            actual: "zero".to_string(),
        });
        if k == 1 {
            derived = Some(next.clone());
        }
        term = next;
    }

    let derived = derived.expect("k_max >= 1");
    for x in derived.vectors() {
        for y in derived.vectors() {
            report.check_eq(
                || format!("[{x}, {y}] in the derived algebra"),
                &WeylPoly::zero(),
                &commutator(x, y),
            );
        }
    }
    Ok(report)
}
