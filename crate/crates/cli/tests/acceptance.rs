//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Every tolerance and truncation level is pinned here.

use sinfty_cli::checks;
use sinfty_cli::report::{Assertion, Status};

fn assert_criterion(number: u32, title: &str, assertions: &[Assertion], allowed_skips: &[&str]) {
    let mut failed = Vec::new();
    for a in assertions {
        match a.status {
            Status::Pass => {}
            Status::Skip => {
                assert!(
                    allowed_skips.iter().any(|s| a.id.contains(s)),
                    "criterion {number}: unexpected skip {} ({})",
                    a.id,
                    a.note
                );
            }
            Status::Fail => failed.push(a),
        }
    }
    if failed.is_empty() {
        println!("[criterion {number:02}] PASS - {title}");
    } else {
        println!("[criterion {number:02}] FAIL - {title}");
        for a in &failed {
            println!(
                "    {}: computed {}, expected {} (inputs {})",
                a.id, a.computed, a.expected, a.inputs
            );
        }
        panic!("criterion {number} failed");
    }
}

#[test]
fn criterion_01_semiring_laws() {
    assert_criterion(
        1,
        "semiring laws on the one-step closure of {unit, J+, J-, P(1,1)} at N=4 over Q",
        &checks::semiring::run_laws(4),
        &[],
    );
}

#[test]
fn criterion_02_sign_square() {
    assert_criterion(
        2,
        "join(J-, J-) = J+ exactly at levels <= 5 over Q and Fp:3",
        &checks::semiring::run_sign_square(),
        &[],
    );
}

#[test]
fn criterion_03_classification_witnesses() {
    assert_criterion(
        3,
        "primeness holds for P(0,1), P(1,0), P(1,1), P(2,0) at all bidegrees <= 4 and fails at (2,2) for the (inf,1,0...) label by both routes",
        &checks::tprime::run_classification(4),
        &[],
    );
}

#[test]
fn criterion_04_two_parameter_arithmetic() {
    assert_criterion(
        4,
        "dagger adds and join multiplies the two-parameter family like N[x]/(x^2-1), levels <= 4",
        &checks::semiring::run_two_parameter_family(4),
        &[],
    );
}

#[test]
fn criterion_05_growth_sequences() {
    assert_criterion(
        5,
        "P(1,1) codimensions equal the hook-square oracle with roots <= 2 nondecreasing; J+ stays at one",
        &checks::growth::run_growth_sequences(5),
        &[],
    );
}

#[test]
fn criterion_06_symmetriser_invariants() {
    // the p = 5 dagger witness sits above the level cap and must be
    // reported as a skip, never as a pass or failure
    let assertions = checks::growth::run_symmetriser_invariants();
    assert!(assertions
        .iter()
        .any(|a| a.id == "growth.s-invariant.dagger.p5" && a.status == Status::Skip));
    assert_criterion(
        6,
        "s(J+) = p-1 and a(J+) = 1 for p in {2,3,5}; s doubles under the dagger where reachable",
        &assertions,
        &["growth.s-invariant.dagger.p5"],
    );
}

#[test]
fn criterion_07_dimension_admittance() {
    assert_criterion(
        7,
        "P(m,n) admits exactly delta = m-n (unique residue mod 2, 3, 5) at N=5; contraction identity for n <= 4",
        &checks::dimension::run(5),
        &[],
    );
}

#[test]
fn criterion_08_injectivity_determinants() {
    let mut assertions = vec![checks::verlinde::run_ver4_det()];
    assertions.extend(checks::verlinde::run_verp_det(3));
    assertions.extend(checks::verlinde::run_verp_det(5));
    assert_criterion(
        8,
        "det of the three-object matrix is -16; closed = oracle with |det| = p^(p-2) for p in {3,5}",
        &assertions,
        &[],
    );
}

#[test]
fn criterion_09_growth_bound() {
    assert_criterion(
        9,
        "codimension roots for p=5, j=2, n <= 4 stay below the golden ratio + 1e-6 and never decrease",
        &checks::verlinde::run_growth_bound(5, 2, 4, 4096),
        &[],
    );
}

#[test]
fn criterion_10_thoma_oracle() {
    assert_criterion(
        10,
        "support membership iff nonzero coherent weight over the catalogue; the balanced point names the 1|1 kernel at N=4",
        &checks::thoma::run(4),
        &[],
    );
}

#[test]
fn criterion_11_round_trip() {
    assert_criterion(
        11,
        "ideal_of_phi(phi_of(I)) = I levelwise for the four standard ideals at N=4 over Q",
        &checks::tprime::run_round_trip(4),
        &[],
    );
}

#[test]
fn criterion_12_lr_row_bound() {
    assert_criterion(
        12,
        "the induced-character row bound holds exhaustively for |kappa| <= 8, s,t <= 2",
        &checks::tprime::run_lr_bound(),
        &[],
    );
}
