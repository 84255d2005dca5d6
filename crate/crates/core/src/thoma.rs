//! Parameters of extreme characters of the infinite symmetric group, the
//! character evaluation by power sums, coherent-system weights as an
//! independent support oracle, and spherical annihilator labels.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::partitions::{hook_member, partitions_of, InfPartition, Partition};
use crate::rep::character_value;

/// A point of the character simplex: two finite non-increasing lists of
/// positive rationals with total mass at most one. The remaining mass is
/// the gamma coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThomaParam {
    alpha: Vec<BigRational>,
    beta: Vec<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThomaError {
    NotSimplex(&'static str),
    Inadmissible,
}

impl fmt::Display for ThomaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThomaError::NotSimplex(why) => write!(f, "not a simplex point: {why}"),
            ThomaError::Inadmissible => write!(f, "inadmissible parameter triple"),
        }
    }
}

fn is_valid_list(list: &[BigRational]) -> Result<(), ThomaError> {
    for w in list.windows(2) {
        if w[0] < w[1] {
            return Err(ThomaError::NotSimplex("list must be non-increasing"));
        }
    }
    for x in list {
        if !x.is_positive() || x > &BigRational::one() {
            return Err(ThomaError::NotSimplex("entries must lie in (0, 1]"));
        }
    }
    Ok(())
}

impl ThomaParam {
    pub fn new(alpha: Vec<BigRational>, beta: Vec<BigRational>) -> Result<Self, ThomaError> {
        is_valid_list(&alpha)?;
        is_valid_list(&beta)?;
        let total: BigRational = alpha.iter().chain(beta.iter()).sum();
        if total > BigRational::one() {
            return Err(ThomaError::NotSimplex("total mass exceeds one"));
        }
        Ok(ThomaParam { alpha, beta })
    }

    pub fn alpha(&self) -> &[BigRational] {
        &self.alpha
    }

    pub fn beta(&self) -> &[BigRational] {
        &self.beta
    }

    /// The mass not carried by the two lists.
    pub fn gamma(&self) -> BigRational {
        BigRational::one() - self.alpha.iter().chain(self.beta.iter()).sum::<BigRational>()
    }

    pub fn gamma_is_positive(&self) -> bool {
        self.gamma().is_positive()
    }

    /// Power sum `p_k = sum alpha_i^k + (-1)^{k+1} sum beta_j^k`.
    pub fn power_sum(&self, k: u32) -> BigRational {
        let mut acc: BigRational = self.alpha.iter().map(|a| pow_rat(a, k)).sum();
        let beta_part: BigRational = self.beta.iter().map(|b| pow_rat(b, k)).sum();
        if k % 2 == 1 {
            acc += beta_part;
        } else {
            acc -= beta_part;
        }
        acc
    }
}

fn pow_rat(x: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

/// The extreme character evaluated on a conjugacy class: the product of
/// power sums over the nontrivial cycle lengths (fixed points contribute 1).
pub fn thoma_character(omega: &ThomaParam, cycle_type: &Partition) -> BigRational {
    let mut acc = BigRational::one();
    for &k in cycle_type.parts() {
        if k >= 2 {
            acc *= omega.power_sum(k);
        }
    }
    acc
}

/// Coherent-system weight of a partition: the probability the character
/// assigns to the simple labelled by it at its level, recovered by character
/// orthogonality.
pub fn coherent_weight(omega: &ThomaParam, lambda: &Partition) -> BigRational {
    let n = lambda.size();
    let fact: BigInt = (1..=n as i64).product::<i64>().max(1).into();
    let mut acc = BigRational::zero();
    for class in partitions_of(n) {
        let weight = BigRational::from_integer(BigInt::from(class.class_size()));
        let chi_l = BigRational::from_integer(BigInt::from(character_value(lambda, &class)));
        acc += weight * thoma_character(omega, &class) * chi_l;
    }
    BigRational::from_integer(BigInt::from(lambda.dimension())) * acc
        / BigRational::from_integer(fact)
}

/// Membership of a label in the support of the character: everything when
/// mass is missing, otherwise the hook-shape membership test.
pub fn support_contains(omega: &ThomaParam, lambda: &Partition) -> bool {
    if omega.gamma_is_positive() {
        return true;
    }
    let m = omega.alpha.len() as u32;
    let n = omega.beta.len() as u32;
    hook_member(m, n, lambda)
}

/// The annihilator label of the spherical representation attached to the
/// parameter: the all-infinite shape (the zero ideal) when mass is missing,
/// otherwise the hook shape counting the nonzero entries.
pub fn spherical_annihilator_label(omega: &ThomaParam) -> InfPartition {
    if omega.gamma_is_positive() {
        return InfPartition::all_infinite();
    }
    InfPartition::hook(omega.alpha.len() as u32, omega.beta.len() as u32)
}

/// A finitely supported assignment of partitions to rational points of
/// `[-1, 1]`; the size is the total number of boxes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungDistribution {
    points: BTreeMap<BigRational, Partition>,
}

impl YoungDistribution {
    pub fn new(points: BTreeMap<BigRational, Partition>) -> Result<Self, ThomaError> {
        let one = BigRational::one();
        for (x, lam) in &points {
            if x.abs() > one {
                return Err(ThomaError::NotSimplex("support must lie in [-1, 1]"));
            }
            if lam.is_empty() {
                return Err(ThomaError::NotSimplex("empty partitions should be omitted"));
            }
        }
        Ok(YoungDistribution { points })
    }

    pub fn empty() -> Self {
        YoungDistribution {
            points: BTreeMap::new(),
        }
    }

    pub fn size(&self) -> u32 {
        self.points.values().map(|p| p.size()).sum()
    }

    pub fn at(&self, x: &BigRational) -> Partition {
        self.points.get(x).cloned().unwrap_or_else(Partition::empty)
    }

    pub fn at_zero(&self) -> Partition {
        self.at(&BigRational::zero())
    }

    pub fn support(&self) -> impl Iterator<Item = (&BigRational, &Partition)> {
        self.points.iter()
    }
}

/// The admissibility test for a parameter with two distributions: lengths at
/// positive points are bounded by the multiplicity in the first list, and
/// transposed lengths at negative points by the multiplicity in the second.
pub fn validate_admissible(
    omega: &ThomaParam,
    lambda_dist: &YoungDistribution,
    mu_dist: &YoungDistribution,
) -> Result<(), ThomaError> {
    if lambda_dist.size() != mu_dist.size() {
        return Err(ThomaError::Inadmissible);
    }
    let mut xs: Vec<BigRational> = lambda_dist
        .support()
        .map(|(x, _)| x.clone())
        .chain(mu_dist.support().map(|(x, _)| x.clone()))
        .collect();
    xs.sort();
    xs.dedup();
    for x in xs {
        if x.is_zero() {
            continue; // unconstrained point
        }
        if x.is_positive() {
            let count = omega.alpha.iter().filter(|&a| a == &x).count();
            let need = lambda_dist.at(&x).len() + mu_dist.at(&x).len();
            if need > count {
                return Err(ThomaError::Inadmissible);
            }
        } else {
            let neg = -x.clone();
            let count = omega.beta.iter().filter(|&b| b == &neg).count();
            let need = lambda_dist.at(&x).transpose().len() + mu_dist.at(&x).transpose().len();
            if need > count {
                return Err(ThomaError::Inadmissible);
            }
        }
    }
    Ok(())
}

/// One step of the explicit staircase path converging to a zero-deficit
/// parameter: the first row soaks up the leftover boxes, later rows follow
/// the alpha fractions, and the transposed tail follows the beta fractions.
/// `None` while the step is too small to form a valid partition.
pub fn staircase_step(omega: &ThomaParam, r: u32) -> Option<Partition> {
    if omega.gamma_is_positive() {
        return None;
    }
    let m = omega.alpha.len();
    let n = omega.beta.len();
    let floor = |x: &BigRational| -> i64 {
        let f = x.floor();
        let (sign, digits) = f.numer().to_u32_digits();
        let v = digits.first().copied().unwrap_or(0) as i64;
        if sign == num_bigint::Sign::Minus {
            -v
        } else {
            v
        }
    };
    let r_rat = BigRational::from_integer(BigInt::from(r));
    let mut q_parts: Vec<u32> = Vec::new();
    for b in &omega.beta {
        let val = floor(&(&r_rat * b)) - m as i64;
        if val < 0 {
            return None;
        }
        if val > 0 {
            q_parts.push(val as u32);
        }
    }
    let q = Partition::from_unsorted(q_parts);
    let qt = q.transpose();
    let mut rows: Vec<u32> = Vec::new();
    for a in omega.alpha.iter().skip(1) {
        let val = floor(&(&r_rat * a));
        if val < 0 {
            return None;
        }
        rows.push(val as u32);
    }
    rows.extend(qt.parts().iter().copied());
    let other: u32 = rows.iter().sum();
    if other > r {
        return None;
    }
    let f = r - other;
    if n > 0 && m == 0 {
        return None; // the formula needs a first alpha row
    }
    let mut parts = Vec::with_capacity(rows.len() + 1);
    parts.push(f);
    parts.extend(rows);
    // must be a genuine partition
    for w in parts.windows(2) {
        if w[0] < w[1] {
            return None;
        }
    }
    if parts.contains(&0) {
        let nz: Vec<u32> = parts.into_iter().filter(|&x| x > 0).collect();
        return Some(Partition::new(nz));
    }
    Some(Partition::new(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn omega(alpha: &[(i64, i64)], beta: &[(i64, i64)]) -> ThomaParam {
        ThomaParam::new(
            alpha.iter().map(|&(n, d)| rat(n, d)).collect(),
            beta.iter().map(|&(n, d)| rat(n, d)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn simplex_validation() {
        assert!(ThomaParam::new(vec![rat(1, 2), rat(2, 3)], vec![]).is_err());
        assert!(ThomaParam::new(vec![rat(2, 3), rat(2, 3)], vec![]).is_err());
        assert!(ThomaParam::new(vec![rat(1, 2)], vec![rat(1, 2)]).is_ok());
    }

    #[test]
    fn trivial_and_sign_characters() {
        let triv = omega(&[(1, 1)], &[]);
        let sgn = omega(&[], &[(1, 1)]);
        for n in 1..=5u32 {
            for class in partitions_of(n) {
                assert_eq!(thoma_character(&triv, &class), BigRational::one());
                let expected = BigRational::from_integer(BigInt::from(class.class_sign()));
                assert_eq!(thoma_character(&sgn, &class), expected);
            }
        }
    }

    #[test]
    fn two_block_character_on_a_transposition() {
        let w = omega(&[(1, 2), (1, 2)], &[]);
        let mut ct = p(&[2]);
        assert_eq!(thoma_character(&w, &ct), rat(1, 2));
        ct = p(&[2, 1, 1]);
        assert_eq!(thoma_character(&w, &ct), rat(1, 2));
    }

    #[test]
    fn coherent_weights_form_a_distribution() {
        let samples = [
            omega(&[(1, 1)], &[]),
            omega(&[(1, 2), (1, 2)], &[]),
            omega(&[(1, 2)], &[(1, 2)]),
            omega(&[(1, 2)], &[(1, 4)]),
            omega(&[(1, 3), (1, 3)], &[(1, 3)]),
        ];
        for w in &samples {
            for n in 1..=5u32 {
                let mut total = BigRational::zero();
                for lam in partitions_of(n) {
                    let weight = coherent_weight(w, &lam);
                    assert!(!weight.is_negative(), "weight of {lam} under {w:?}");
                    total += weight;
                }
                assert_eq!(total, BigRational::one());
            }
        }
    }

    #[test]
    fn coherent_weight_examples() {
        let triv = omega(&[(1, 1)], &[]);
        for n in 1..=5u32 {
            for lam in partitions_of(n) {
                let expected = if lam == p(&[n]) {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                assert_eq!(coherent_weight(&triv, &lam), expected);
            }
        }
        // two alpha blocks of 1/2: columns beyond 2 rows vanish
        let w2 = omega(&[(1, 2), (1, 2)], &[]);
        assert_eq!(coherent_weight(&w2, &p(&[1, 1, 1])), BigRational::zero());
        assert!(coherent_weight(&w2, &p(&[2, 1])).is_positive());
        // one alpha and one beta block: hooks survive
        let w11 = omega(&[(1, 2)], &[(1, 2)]);
        for lam in [p(&[3]), p(&[2, 1]), p(&[1, 1, 1])] {
            assert!(coherent_weight(&w11, &lam).is_positive(), "{lam}");
        }
    }

    #[test]
    fn support_matches_weight_oracle() {
        let samples = [
            omega(&[(1, 2)], &[]),              // gamma = 1/2
            omega(&[(1, 4), (1, 4)], &[]),      // gamma = 1/2
            omega(&[(1, 1)], &[]),              // gamma = 0, m=1 n=0
            omega(&[(1, 2)], &[(1, 2)]),        // gamma = 0, m=1 n=1
            omega(&[(1, 2), (1, 2)], &[]),      // gamma = 0, m=2 n=0
            omega(&[], &[(2, 3), (1, 3)]),      // gamma = 0, m=0 n=2
        ];
        for w in &samples {
            for n in 1..=5u32 {
                for lam in partitions_of(n) {
                    assert_eq!(
                        support_contains(w, &lam),
                        !coherent_weight(w, &lam).is_zero(),
                        "omega={w:?} lambda={lam}"
                    );
                }
            }
        }
    }

    #[test]
    fn spherical_labels() {
        assert!(spherical_annihilator_label(&omega(&[(1, 2)], &[])).is_all_infinite());
        assert_eq!(
            spherical_annihilator_label(&omega(&[(1, 2)], &[(1, 2)])),
            InfPartition::hook(1, 1)
        );
        assert_eq!(
            spherical_annihilator_label(&omega(&[(1, 3), (1, 3), (1, 3)], &[])),
            InfPartition::hook(3, 0)
        );
    }

    #[test]
    fn coherence_of_the_weight_system() {
        // P^n(lambda) = sum over covers mu of P^{n+1}(mu) dim(lambda)/dim(mu)
        let samples = [
            omega(&[(1, 2)], &[(1, 2)]),
            omega(&[(1, 2), (1, 4)], &[]),
            omega(&[(1, 3)], &[(1, 3)]),
        ];
        for w in &samples {
            for n in 1..=4u32 {
                for lam in partitions_of(n) {
                    let mut rhs = BigRational::zero();
                    for mu in lam.covers_above() {
                        let ratio = BigRational::new(
                            BigInt::from(lam.dimension()),
                            BigInt::from(mu.dimension()),
                        );
                        rhs += coherent_weight(w, &mu) * ratio;
                    }
                    assert_eq!(coherent_weight(w, &lam), rhs, "omega={w:?} lambda={lam}");
                }
            }
        }
    }

    #[test]
    fn admissibility_checks() {
        let w = omega(&[(1, 2), (1, 2)], &[]);
        let lam_dist = YoungDistribution::new(
            [(rat(1, 2), p(&[1, 1]))].into_iter().collect(),
        )
        .unwrap();
        let mu_dist = YoungDistribution::new(
            [(rat(0, 1), p(&[2]))].into_iter().collect(),
        )
        .unwrap();
        // l(1,1) = 2 <= 2 multiplicities of 1/2
        assert!(validate_admissible(&w, &lam_dist, &mu_dist).is_ok());

        let w1 = omega(&[(1, 2)], &[]);
        assert_eq!(
            validate_admissible(&w1, &lam_dist, &mu_dist),
            Err(ThomaError::Inadmissible)
        );
        assert!(validate_admissible(
            &w,
            &YoungDistribution::empty(),
            &YoungDistribution::empty()
        )
        .is_ok());
        // size mismatch
        assert_eq!(
            validate_admissible(&w, &lam_dist, &YoungDistribution::empty()),
            Err(ThomaError::Inadmissible)
        );
    }

    #[test]
    fn beta_side_admissibility() {
        let w = omega(&[], &[(1, 2), (1, 2)]);
        // at x = -1/2 the transposed lengths are bounded by 2
        let tall = YoungDistribution::new(
            [(rat(-1, 2), p(&[2]))].into_iter().collect(),
        )
        .unwrap();
        let other = YoungDistribution::new(
            [(rat(0, 1), p(&[2]))].into_iter().collect(),
        )
        .unwrap();
        assert!(validate_admissible(&w, &tall, &other).is_ok());
        let too_wide = YoungDistribution::new(
            [(rat(-1, 2), p(&[3]))].into_iter().collect(),
        )
        .unwrap();
        let other3 = YoungDistribution::new(
            [(rat(0, 1), p(&[3]))].into_iter().collect(),
        )
        .unwrap();
        assert_eq!(
            validate_admissible(&w, &too_wide, &other3),
            Err(ThomaError::Inadmissible)
        );
    }

    #[test]
    fn staircase_path_ratios_approach_the_parameter() {
        let w = omega(&[(1, 2)], &[(1, 4), (1, 4)]);
        let m = 1i64;
        let n = 2i64;
        let slack = m + n + m * n + 2;
        for r in 20..=60u32 {
            let step = staircase_step(&w, r).expect("large steps are valid");
            assert_eq!(step.size(), r);
            // rowwise ratio bound for the alpha block
            for (i, a) in w.alpha().iter().enumerate() {
                let row = BigRational::from_integer(BigInt::from(step.row(i)));
                let target = BigRational::from_integer(BigInt::from(r)) * a;
                let diff = (row - target).abs();
                assert!(
                    diff <= BigRational::from_integer(BigInt::from(slack)),
                    "row {i} off by {diff} at r={r}"
                );
            }
            // columnwise ratio bound for the beta block: the first columns
            // of the step count the alpha rows plus the q-block rows
            let t = step.transpose();
            for (j, b) in w.beta().iter().enumerate() {
                let col = BigRational::from_integer(BigInt::from(t.row(j)));
                let target = BigRational::from_integer(BigInt::from(r)) * b;
                let diff = (col - target).abs();
                assert!(
                    diff <= BigRational::from_integer(BigInt::from(slack)),
                    "column {j} off by {diff} at r={r}"
                );
            }
        }
    }
}
