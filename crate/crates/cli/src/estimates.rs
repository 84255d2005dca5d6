//! Floating-point summaries of exact growth data: root sequences, the
//! supremum estimate, and the trigonometric growth bounds. The core crate
//! stays float-free; everything here is a view over exact integers.

/// The 2n-th roots of a codimension sequence (n = 1-based position).
pub fn root_sequence(g: &[u64]) -> Vec<f64> {
    g.iter()
        .enumerate()
        .map(|(i, &v)| (v as f64).powf(1.0 / (2.0 * (i as f64 + 1.0))))
        .collect()
}

/// The growth estimate: the largest available 2n-th root. The true growth
/// rate is the supremum over all levels, so this is a certified lower bound.
pub fn growth_estimate(g: &[u64]) -> f64 {
    root_sequence(g).into_iter().fold(0.0, f64::max)
}

/// Whether the root sequence is nondecreasing up to a tiny tolerance.
pub fn roots_nondecreasing(g: &[u64]) -> bool {
    let r = root_sequence(g);
    r.windows(2).all(|w| w[0] <= w[1] + 1e-12)
}

/// The quantum-dimension growth bound `sin(pi j / p) / sin(pi / p)`.
pub fn sine_ratio_bound(p: u32, j: u32) -> f64 {
    let pi = std::f64::consts::PI;
    (pi * j as f64 / p as f64).sin() / (pi / p as f64).sin()
}
