//! Injectivity determinants of the annihilator map on semisimplified
//! cyclic-group categories and the quantum-dimension growth bound.

use crate::estimates::{root_sequence, roots_nondecreasing, sine_ratio_bound};
use crate::report::Assertion;
use sinfty_core::verlinde::{
    det_exact, negligible_growth_sequence, ver4_x_matrix, verp_x_matrix, RepCpObject,
    VerlindeError, XMatrixMode,
};

/// The 3x3 invariant matrix of the three characteristic-2 indecomposables
/// has determinant exactly -16.
pub fn run_ver4_det() -> Assertion {
    let v4 = ver4_x_matrix();
    let d4 = det_exact(&v4);
    Assertion::check(
        "verlinde.det.three-object-matrix",
        "det [[1,2,4],[2,4,4],[4,4,8]] = -16",
        "multiplicity invariants of the three indecomposables",
        d4.to_string(),
        "-16",
        d4 == -16,
    )
}

/// Criterion: the closed and oracle invariant matrices agree entrywise and
/// the determinant has absolute value p^(p-2); the sign is recorded, not
/// asserted.
pub fn run_verp_det(p: u32) -> Vec<Assertion> {
    let closed = verp_x_matrix(p, XMatrixMode::Closed);
    let oracle = verp_x_matrix(p, XMatrixMode::Oracle);
    let mut out = vec![Assertion::check(
        format!("verlinde.modes-agree.p{p}"),
        "displayed invariant values match the block-decomposition oracle entrywise",
        format!("(p-1)x(p-1) matrix, p={p}"),
        if closed == oracle {
            "entrywise equal".to_string()
        } else {
            format!("closed {closed:?} vs oracle {oracle:?}")
        },
        "entrywise equal",
        closed == oracle,
    )];
    let det = det_exact(&oracle);
    let expected = (p as i128).pow(p - 2);
    out.push(Assertion::check(
        format!("verlinde.det.p{p}"),
        "|det| = p^(p-2); the sign is recorded, not asserted",
        format!("oracle matrix {oracle:?}"),
        format!("det = {det} (sign {})", if det < 0 { "-" } else { "+" }),
        format!("|det| = {expected}"),
        det.abs() == expected,
    ));
    out
}

/// Criterion: the codimension roots of the annihilator of the j-th simple
/// stay below the sine-ratio bound and never decrease.
pub fn run_growth_bound(p: u32, j: u32, n_max: usize, budget: usize) -> Vec<Assertion> {
    let x = RepCpObject::indecomposable(p, j);
    match negligible_growth_sequence(&x, n_max, budget) {
        Ok(g) => {
            let bound = sine_ratio_bound(p, j) + 1e-6;
            let roots = root_sequence(&g);
            let bounded = roots.iter().all(|&r| r <= bound);
            let monotone = roots_nondecreasing(&g);
            vec![Assertion::check(
                format!("verlinde.growth-bound.p{p}.j{j}"),
                "all 2n-th codimension roots lie below sin(pi j/p)/sin(pi/p) and never decrease",
                format!("g = {g:?}, n <= {n_max}"),
                format!(
                    "max root {:.6}, bound {:.6}, nondecreasing: {monotone}",
                    roots.iter().cloned().fold(0.0, f64::max),
                    bound
                ),
                "all roots <= bound, nondecreasing: true",
                bounded && monotone,
            )]
        }
        Err(VerlindeError::BudgetExceeded { needed, budget }) => {
            vec![Assertion::skip(
                format!("verlinde.growth-bound.p{p}.j{j}"),
                "all 2n-th codimension roots lie below sin(pi j/p)/sin(pi/p)",
                format!("n <= {n_max}"),
                format!("budget exceeded: tensor dimension {needed} > {budget}"),
            )]
        }
        Err(e) => vec![Assertion::check(
            format!("verlinde.growth-bound.p{p}.j{j}"),
            "growth bound",
            format!("n <= {n_max}"),
            format!("error: {e}"),
            "a computed sequence",
            false,
        )],
    }
}

pub fn run(p: u32, budget: usize) -> Vec<Assertion> {
    let mut out = vec![run_ver4_det()];
    let mut primes = vec![3u32, 5];
    if p >= 3 && !primes.contains(&p) {
        primes.push(p);
    }
    for q in primes {
        out.extend(run_verp_det(q));
    }
    out.extend(run_growth_bound(5, 2, 4, budget));
    out
}
