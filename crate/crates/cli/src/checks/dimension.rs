//! Dimension admittance: the strand-removal stability of the two-parameter
//! kernels at the difference of the parameters, residue uniqueness over
//! prime fields, and the skew-symmetriser contraction identity.

use crate::report::Assertion;
use sinfty_core::group_algebra::{antisymmetriser, remove_strand};
use sinfty_core::ideals::{admits_dimension, ideal_schur_weyl};
use sinfty_core::scalar::FieldKind;

const Q: FieldKind = FieldKind::Rational;

const PARAMS: [(u32, u32); 5] = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)];

/// Over the rationals the kernel of the m|n tensor action admits exactly the
/// loop value m - n.
pub fn run_rational(n_levels: usize) -> Vec<Assertion> {
    PARAMS
        .iter()
        .map(|&(m, n)| {
            let ideal = ideal_schur_weyl(m, n, n_levels, Q);
            let delta = Q.from_i64(m as i64 - n as i64);
            let pass = admits_dimension(&ideal, &delta).unwrap();
            Assertion::check(
                format!("dimension.admits.P({m},{n})"),
                "the kernel of the m|n tensor action admits the loop value m-n",
                format!("N={n_levels}, field Q, delta={}", m as i64 - n as i64),
                if pass { "admitted" } else { "rejected" },
                "admitted",
                pass,
            )
        })
        .collect()
}

/// Over a prime field the admitted loop value is the unique residue of m-n.
pub fn run_residue_uniqueness(n_levels: usize) -> Vec<Assertion> {
    let mut out = Vec::new();
    for p in [2u32, 3, 5] {
        let field = FieldKind::Prime(p);
        let mut fail: Option<String> = None;
        for &(m, n) in &PARAMS {
            let ideal = ideal_schur_weyl(m, n, n_levels, field);
            let expected = (m as i64 - n as i64).rem_euclid(p as i64);
            let admitted: Vec<i64> = (0..p as i64)
                .filter(|&d| admits_dimension(&ideal, &field.from_i64(d)).unwrap())
                .collect();
            if admitted != vec![expected] {
                fail.get_or_insert(format!("P({m},{n}) admits {admitted:?}"));
            }
        }
        out.push(Assertion::check(
            format!("dimension.residue-unique.p{p}"),
            "exactly one residue is admitted, the image of m-n",
            format!("parameters with m+n <= 2, N={n_levels}, field Fp:{p}"),
            fail.clone().unwrap_or_else(|| "unique everywhere".into()),
            "unique everywhere",
            fail.is_none(),
        ));
    }
    out
}

/// The contraction identity on skew symmetrisers: removing a strand from
/// the one on n+1 letters gives (delta - n) times the one on n letters. The
/// map is affine in delta, so agreement at two values proves the symbolic
/// identity; four values are checked.
pub fn run_contraction_identity() -> Vec<Assertion> {
    let mut fail: Option<String> = None;
    let mut checked = 0usize;
    for n in 1..=4usize {
        for d in [0i64, 1, 2, 5] {
            checked += 1;
            let delta = Q.from_i64(d);
            let lhs = remove_strand(&antisymmetriser(n + 1, Q), &delta);
            let rhs = antisymmetriser(n, Q).scale(&Q.from_i64(d - n as i64));
            if lhs != rhs {
                fail.get_or_insert(format!("n={n} delta={d}"));
            }
        }
    }
    vec![Assertion::check(
        "dimension.contraction-identity",
        "strand removal sends the skew symmetriser to (delta - n) times the smaller one",
        format!("{checked} (n, delta) samples, n <= 4; affine in delta, so symbolic"),
        fail.clone().unwrap_or_else(|| "identity holds".into()),
        "identity holds",
        fail.is_none(),
    )]
}

pub fn run(n_levels: usize) -> Vec<Assertion> {
    let mut out = run_rational(n_levels);
    out.extend(run_residue_uniqueness(n_levels));
    out.extend(run_contraction_identity());
    out
}
