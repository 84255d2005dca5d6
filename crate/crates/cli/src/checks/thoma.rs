//! Support oracle equivalence over the character simplex catalogue and the
//! spherical annihilator label realised as a truncated ideal.

use crate::report::Assertion;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use sinfty_core::ideals::{ideal_of_phi, ideal_schur_weyl, InductiveSystemTrunc};
use sinfty_core::partitions::{partitions_of, InfPartition, Partition};
use sinfty_core::scalar::FieldKind;
use sinfty_core::thoma::{coherent_weight, spherical_annihilator_label, support_contains, ThomaParam};
use std::collections::BTreeSet;

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// All non-increasing lists over the denominators-at-most-4 grid with total
/// mass at most one.
fn small_lists() -> Vec<Vec<BigRational>> {
    let values = [
        rat(1, 1),
        rat(3, 4),
        rat(2, 3),
        rat(1, 2),
        rat(1, 3),
        rat(1, 4),
    ];
    let mut out = vec![Vec::new()];
    fn extend(
        values: &[BigRational],
        current: Vec<BigRational>,
        out: &mut Vec<Vec<BigRational>>,
    ) {
        for v in values {
            if let Some(last) = current.last() {
                if v > last {
                    continue;
                }
            }
            let total: BigRational = current.iter().sum::<BigRational>() + v;
            if total > rat(1, 1) {
                continue;
            }
            let mut next = current.clone();
            next.push(v.clone());
            out.push(next.clone());
            extend(values, next, out);
        }
    }
    extend(&values, Vec::new(), &mut out);
    out
}

/// The catalogue: all simplex points on the grid that either have leftover
/// mass or exhaust it with at most three rows and columns in total.
fn catalogue() -> Vec<ThomaParam> {
    let lists = small_lists();
    let mut out = Vec::new();
    for alpha in &lists {
        for beta in &lists {
            let Ok(omega) = ThomaParam::new(alpha.clone(), beta.clone()) else {
                continue;
            };
            let m = omega.alpha().len();
            let n = omega.beta().len();
            if omega.gamma_is_positive() || m + n <= 3 {
                out.push(omega);
            }
        }
    }
    out
}

/// Criterion: support membership matches the nonvanishing of the coherent
/// weight across the whole catalogue.
pub fn run_support_oracle() -> Vec<Assertion> {
    let cat = catalogue();
    let mut checked = 0usize;
    let mut fail: Option<String> = None;
    for omega in &cat {
        for size in 1..=5u32 {
            for lam in partitions_of(size) {
                checked += 1;
                let by_support = support_contains(omega, &lam);
                let by_weight = !coherent_weight(omega, &lam).is_zero();
                if by_support != by_weight {
                    fail.get_or_insert(format!(
                        "alpha={:?} beta={:?} lambda={lam}",
                        omega.alpha(),
                        omega.beta()
                    ));
                }
            }
        }
    }
    vec![Assertion::check(
        "thoma.support-oracle",
        "support membership iff nonzero coherent weight",
        format!(
            "{} simplex points (denominators <= 4), labels up to 5 boxes, {checked} pairs",
            cat.len()
        ),
        fail.clone().unwrap_or_else(|| "equivalent everywhere".into()),
        "equivalent everywhere",
        fail.is_none(),
    )]
}

/// Criterion: the spherical label of the balanced 1/2 + 1/2 point names the
/// 1|1 kernel, and for every zero-deficit point with at most two rows and
/// columns the truncated ideal of the support system equals the
/// corresponding tensor kernel levelwise.
pub fn run_spherical_label(n_levels: usize) -> Vec<Assertion> {
    let balanced = ThomaParam::new(vec![rat(1, 2)], vec![rat(1, 2)]).unwrap();
    let label = spherical_annihilator_label(&balanced);
    let mut out = vec![Assertion::check(
        "thoma.spherical-label",
        "the annihilator label of the balanced point is the (inf^1, 1^inf) shape",
        "alpha = (1/2), beta = (1/2)",
        label.to_string(),
        InfPartition::hook(1, 1).to_string(),
        label == InfPartition::hook(1, 1),
    )];

    // realise each support as a truncated system and compare ideals
    let points: Vec<(u32, u32, ThomaParam)> = vec![
        (1, 0, ThomaParam::new(vec![rat(1, 1)], vec![]).unwrap()),
        (0, 1, ThomaParam::new(vec![], vec![rat(1, 1)]).unwrap()),
        (
            2,
            0,
            ThomaParam::new(vec![rat(1, 2), rat(1, 2)], vec![]).unwrap(),
        ),
        (1, 1, balanced),
        (
            0,
            2,
            ThomaParam::new(vec![], vec![rat(1, 2), rat(1, 2)]).unwrap(),
        ),
    ];
    for (m, n, omega) in points {
        let levels: Vec<BTreeSet<Partition>> = (1..=n_levels as u32)
            .map(|size| {
                partitions_of(size)
                    .into_iter()
                    .filter(|lam| support_contains(&omega, lam))
                    .collect()
            })
            .collect();
        let phi = InductiveSystemTrunc::new(levels);
        let from_support = ideal_of_phi(&phi, FieldKind::Rational).unwrap();
        let kernel = ideal_schur_weyl(m, n, n_levels, FieldKind::Rational);
        let pass = from_support.same_levels(&kernel);
        let id = if (m, n) == (1, 1) {
            "thoma.spherical-ideal".to_string()
        } else {
            format!("thoma.spherical-ideal.{m}-{n}")
        };
        out.push(Assertion::check(
            id,
            "the ideal of the support system equals the graded tensor kernel levelwise",
            format!("m={m}, n={n}, N={n_levels}, field Q"),
            if pass { "equal at all levels" } else { "differs" },
            "equal at all levels",
            pass,
        ));
    }
    out
}

pub fn run(n_levels: usize) -> Vec<Assertion> {
    let mut out = run_support_oracle();
    out.extend(run_spherical_label(n_levels));
    out
}
