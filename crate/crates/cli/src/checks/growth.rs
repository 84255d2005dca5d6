//! Growth data of the standard ideals and the symmetriser survival
//! invariants over small prime fields.

use crate::estimates::{growth_estimate, root_sequence, roots_nondecreasing};
use crate::report::Assertion;
use sinfty_core::ideals::{
    dagger, ideal_j_plus, ideal_schur_weyl, growth_sequence, invariant_a, invariant_s,
    TruncatedValue,
};
use sinfty_core::partitions::partitions_of;
use sinfty_core::scalar::FieldKind;

const Q: FieldKind = FieldKind::Rational;

/// Criterion: the codimension sequence of the 1|1 kernel matches the
/// hook-square oracle, its roots stay at or below the known growth rate 2
/// and never decrease, and the augmentation ideal has constant codimension
/// one.
pub fn run_growth_sequences(n_levels: usize) -> Vec<Assertion> {
    let mut out = Vec::new();

    // independent oracle: sum of squared tableau counts over hook shapes
    let oracle: Vec<u64> = (1..=n_levels as u32)
        .map(|n| {
            partitions_of(n)
                .into_iter()
                .filter(|l| l.row(1) <= 1)
                .map(|l| l.dimension().pow(2))
                .sum()
        })
        .collect();
    let p11 = ideal_schur_weyl(1, 1, n_levels, Q);
    let g = growth_sequence(&p11).unwrap();
    out.push(Assertion::check(
        "growth.P(1,1).sequence",
        "codimensions equal the hook-square sums (central binomials)",
        format!("N={n_levels}, field Q"),
        format!("{g:?}"),
        format!("{oracle:?}"),
        g == oracle,
    ));

    let roots = root_sequence(&g);
    let bounded = roots.iter().all(|&r| r <= 2.0 + 1e-12);
    let monotone = roots_nondecreasing(&g);
    out.push(Assertion::check(
        "growth.P(1,1).roots",
        "every 2n-th root is at most the growth rate 2 and the roots never decrease",
        format!("roots of {g:?}"),
        format!(
            "max root {:.6}, nondecreasing: {monotone}",
            growth_estimate(&g)
        ),
        "max root <= 2, nondecreasing: true",
        bounded && monotone,
    ));

    let jp = ideal_j_plus(n_levels, Q);
    let gjp = growth_sequence(&jp).unwrap();
    let ones = vec![1u64; n_levels];
    out.push(Assertion::check(
        "growth.J+.sequence",
        "the augmentation ideal has codimension one at every level",
        format!("N={n_levels}, field Q"),
        format!("{gjp:?}"),
        format!("{ones:?}"),
        gjp == ones,
    ));
    out
}

/// Criterion: symmetriser and skew-symmetriser survival over small prime
/// fields, with the additivity of the survival level under the dagger;
/// unreachable witnesses are reported as skips, not failures.
pub fn run_symmetriser_invariants() -> Vec<Assertion> {
    let mut out = Vec::new();
    for p in [2u32, 3, 5] {
        let field = FieldKind::Prime(p);
        let n_levels = (2 * p as usize - 1).min(6);
        let jp = ideal_j_plus(n_levels, field);
        let s = invariant_s(&jp);
        out.push(Assertion::check(
            format!("growth.s-invariant.J+.p{p}"),
            "the last surviving symmetriser level of the augmentation ideal is p-1",
            format!("N={n_levels}, field Fp:{p}"),
            format!("{s:?}"),
            format!("{:?}", TruncatedValue::Value(p - 1)),
            s == TruncatedValue::Value(p - 1),
        ));
        let a = invariant_a(&jp);
        out.push(Assertion::check(
            format!("growth.a-invariant.J+.p{p}"),
            "the last surviving skew symmetriser level of the augmentation ideal is 1",
            format!("N={n_levels}, field Fp:{p}"),
            format!("{a:?}"),
            format!("{:?}", TruncatedValue::Value(1)),
            a == TruncatedValue::Value(1),
        ));

        // additivity under the dagger, where the witness is reachable
        let target = 2 * (p - 1);
        if target as usize >= n_levels {
            out.push(Assertion::skip(
                format!("growth.s-invariant.dagger.p{p}"),
                "the symmetriser survival level adds under the dagger",
                format!("target level {target}, truncation N={n_levels}"),
                format!("witness level {} unreachable within N={n_levels}", target + 1),
            ));
            continue;
        }
        let jj = dagger(&jp, &jp).unwrap();
        let s2 = invariant_s(&jj);
        out.push(Assertion::check(
            format!("growth.s-invariant.dagger.p{p}"),
            "the symmetriser survival level adds under the dagger",
            format!("dagger(J+, J+), N={n_levels}, field Fp:{p}"),
            format!("{s2:?}"),
            format!("{:?}", TruncatedValue::Value(target)),
            s2 == TruncatedValue::Value(target),
        ));
    }
    out
}

pub fn run(n_levels: usize) -> Vec<Assertion> {
    let mut out = run_growth_sequences(n_levels.max(5));
    out.extend(run_symmetriser_invariants());
    out
}
