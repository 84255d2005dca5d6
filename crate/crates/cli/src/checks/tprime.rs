//! Primeness classification witnesses, the correspondence round trip, and
//! the exhaustive induced-character row bound.

use crate::report::Assertion;
use sinfty_core::ideals::{
    ideal_of_phi, ideal_prime_char0, ideal_schur_weyl, is_tprime_at, phi_of, phi_of_label,
    t_indecomposable_at,
};
use sinfty_core::partitions::{lr_bound_holds, partitions_of, InfPartition, InfRows};
use sinfty_core::scalar::FieldKind;

const Q: FieldKind = FieldKind::Rational;

/// Criterion: the two-parameter kernels pass the primeness test at every
/// bidegree within reach, while the non-hook prime fails at (2,2), seen by
/// both the subspace route and the tableau-counting route.
pub fn run_classification(n_levels: usize) -> Vec<Assertion> {
    let mut out = Vec::new();
    let witnesses: Vec<((u32, u32), &str)> = vec![
        ((0, 1), "P(0,1)"),
        ((1, 0), "P(1,0)"),
        ((1, 1), "P(1,1)"),
        ((2, 0), "P(2,0)"),
    ];
    for ((m, n), name) in witnesses {
        let ideal = ideal_schur_weyl(m, n, n_levels, Q);
        let mut fail: Option<String> = None;
        let mut pairs = 0usize;
        for a in 1..n_levels {
            for b in 1..n_levels {
                if a + b > n_levels {
                    continue;
                }
                pairs += 1;
                if !is_tprime_at(&ideal, a, b).unwrap() {
                    fail.get_or_insert(format!("({a},{b})"));
                }
            }
        }
        out.push(Assertion::check(
            format!("tprime.holds.{name}"),
            "kernels of the graded tensor actions are prime for the embedding product",
            format!("{pairs} bidegrees with m+n <= {n_levels}, field Q"),
            fail.clone().unwrap_or_else(|| "prime at all bidegrees".into()),
            "prime at all bidegrees",
            fail.is_none(),
        ));
    }

    // the label with a removable box fails at (2,2)
    let label = InfPartition::new(InfRows::Finite(1), vec![1], 0);
    let ideal = ideal_prime_char0(&label, n_levels);
    let subspace_fails = !is_tprime_at(&ideal, 2, 2).unwrap();
    out.push(Assertion::check(
        "tprime.fails.subspace-route",
        "the prime labelled (inf,1,0...) is not prime for the embedding product",
        format!("label {label}, bidegree (2,2), N={n_levels}, field Q"),
        if subspace_fails { "fails at (2,2)" } else { "holds at (2,2)" },
        "fails at (2,2)",
        subspace_fails,
    ));
    let phi = phi_of_label(&label, n_levels);
    let combinatorial_fails = !t_indecomposable_at(&phi, 2, 2, Q).unwrap();
    out.push(Assertion::check(
        "tprime.fails.tableau-route",
        "the same failure from vanishing induction multiplicities",
        format!("label system of {label} at bidegree (2,2)"),
        if combinatorial_fails {
            "no witness above the pair ((1,1),(1,1))"
        } else {
            "witness found"
        },
        "no witness above the pair ((1,1),(1,1))",
        combinatorial_fails,
    ));
    out
}

/// Criterion: the ideal-to-system-to-ideal round trip is the identity over
/// the rationals at the truncation.
pub fn run_round_trip(n_levels: usize) -> Vec<Assertion> {
    let samples = vec![
        ("J+", ideal_schur_weyl(1, 0, n_levels, Q)),
        ("J-", ideal_schur_weyl(0, 1, n_levels, Q)),
        ("P(1,1)", ideal_schur_weyl(1, 1, n_levels, Q)),
        (
            "I(inf,1,0...)",
            ideal_prime_char0(&InfPartition::new(InfRows::Finite(1), vec![1], 0), n_levels),
        ),
    ];
    samples
        .into_iter()
        .map(|(name, ideal)| {
            let back = ideal_of_phi(&phi_of(&ideal), Q).unwrap();
            let pass = back.same_levels(&ideal) && back.all_exact();
            Assertion::check(
                format!("tprime.round-trip.{name}"),
                "ideal_of_phi(phi_of(I)) = I levelwise",
                format!("N={n_levels}, field Q"),
                if pass { "identity" } else { "differs" },
                "identity",
                pass,
            )
        })
        .collect()
}

/// Criterion: the induced-character row bound holds exhaustively for shapes
/// with at most eight boxes and both offsets at most two.
pub fn run_lr_bound() -> Vec<Assertion> {
    let mut checked = 0usize;
    let mut fail: Option<String> = None;
    for total in 0..=8u32 {
        for kappa in partitions_of(total) {
            for a in 0..=total {
                for lambda in partitions_of(a) {
                    for nu in partitions_of(total - a) {
                        for s in 0..=2u32 {
                            for t in 0..=2u32 {
                                if nu.row(s as usize) > t {
                                    continue;
                                }
                                checked += 1;
                                if !lr_bound_holds(&kappa, &lambda, &nu, s, t) {
                                    fail.get_or_insert(format!(
                                        "kappa={kappa} lambda={lambda} nu={nu} s={s} t={t}"
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    vec![Assertion::check(
        "tprime.lr-row-bound",
        "nonzero multiplicity forces kappa_(s+i) <= t + lambda_i",
        format!("{checked} admissible (kappa,lambda,nu,s,t) tuples, |kappa| <= 8, s,t <= 2"),
        fail.clone().unwrap_or_else(|| "bound holds everywhere".into()),
        "bound holds everywhere",
        fail.is_none(),
    )]
}

pub fn run(n_levels: usize) -> Vec<Assertion> {
    let mut out = run_classification(n_levels);
    out.extend(run_round_trip(n_levels));
    out.extend(run_lr_bound());
    out
}
