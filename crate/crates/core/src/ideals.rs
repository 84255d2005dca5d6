//! Truncated two-sided ideals of the infinite symmetric group algebra:
//! constructors for the classical annihilator ideals, the join and dagger
//! semiring operations, primeness and dimension-admittance predicates, the
//! size invariants, and the correspondence with inductive systems.
//!
//! An ideal is carried as its levels 1..=N, each a canonical subspace of the
//! group algebra in lexicographic permutation coordinates, together with an
//! exactness flag per level. Operations propagate the weakest flag.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::group_algebra::{
    all_perms, antisymmetriser, factorial, remove_strand, symmetriser, GroupAlgebraElement, Perm,
};
use crate::linalg::Subspace;
use crate::partitions::{partitions_of, InfPartition, Partition};
use crate::rep::{
    annihilator_subspace, brauer_constituents, induced_action, modular_simple,
    quotient_action_matrices, regular_action, restriction_multiplicity, specht_action,
    ActionTable, RepnAction,
};
use crate::scalar::{FieldKind, Scalar};
use crate::thoma::{ThomaParam, YoungDistribution};

/// Exactness of a computed level: `Exact` levels are the true intersection
/// of the ideal with the finite group algebra; `UpperApprox` levels are
/// only guaranteed to contain it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    Exact,
    UpperApprox,
}

#[derive(Debug, Clone)]
pub struct Level {
    pub subspace: Subspace,
    pub exactness: Exactness,
}

/// A family of levels `I_1, ..., I_N` standing in for an ideal of the
/// infinite group algebra.
#[derive(Debug, Clone)]
pub struct TruncatedIdeal {
    field: FieldKind,
    levels: Vec<Level>,
    provenance: String,
}

/// Levelwise sets of simple-module labels closed under restriction: the
/// finite shadow of an inductive system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductiveSystemTrunc {
    levels: Vec<BTreeSet<Partition>>,
}

impl InductiveSystemTrunc {
    pub fn new(levels: Vec<BTreeSet<Partition>>) -> Self {
        for (i, lv) in levels.iter().enumerate() {
            for lam in lv {
                assert_eq!(lam.size() as usize, i + 1, "level {} label size", i + 1);
            }
        }
        InductiveSystemTrunc { levels }
    }

    pub fn n_levels(&self) -> usize {
        self.levels.len()
    }

    pub fn level(&self, n: usize) -> &BTreeSet<Partition> {
        &self.levels[n - 1]
    }

    /// The inductive-system condition at the truncation: a label appears at
    /// level n iff some level-(n+1) label restricts onto it.
    pub fn is_restriction_closed(&self, field: FieldKind) -> bool {
        for n in 1..self.levels.len() {
            let here = &self.levels[n - 1];
            let above = &self.levels[n];
            for v in here {
                let witnessed = above.iter().any(|u| {
                    restriction_constituents(u, field)
                        .iter()
                        .any(|(w, m)| w == v && *m > 0)
                });
                if !witnessed {
                    return false;
                }
            }
            for u in above {
                for (w, m) in restriction_constituents(u, field) {
                    if m > 0 && !here.contains(&w) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Constituents of the restriction of a simple to the next smaller
/// symmetric group.
pub fn restriction_constituents(lambda: &Partition, field: FieldKind) -> Vec<(Partition, u64)> {
    match field {
        FieldKind::Rational => lambda
            .covers_below()
            .into_iter()
            .map(|mu| (mu, 1))
            .collect(),
        FieldKind::Prime(p) => {
            let action = modular_simple(lambda, p).expect("p-regular label");
            let restricted = action.restrict_to(lambda.size() as usize - 1);
            brauer_constituents(&restricted).into_iter().collect()
        }
    }
}

/// Errors surfaced by ideal computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealError {
    FieldMismatch,
    LevelMismatch,
    OutOfLevels { requested: usize, available: usize },
    DegenerateIdeal(&'static str),
    Inexact,
}

impl core::fmt::Display for IdealError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            IdealError::FieldMismatch => write!(f, "operand fields differ"),
            IdealError::LevelMismatch => write!(f, "operand truncation levels differ"),
            IdealError::OutOfLevels {
                requested,
                available,
            } => write!(f, "level {requested} requested, {available} available"),
            IdealError::DegenerateIdeal(what) => write!(f, "ideal is {what} in the truncation"),
            IdealError::Inexact => write!(f, "operation requires exact levels"),
        }
    }
}

impl TruncatedIdeal {
    pub fn from_levels(field: FieldKind, levels: Vec<Level>, provenance: String) -> Self {
        for (i, lv) in levels.iter().enumerate() {
            assert_eq!(lv.subspace.ambient(), factorial(i + 1));
            assert_eq!(lv.subspace.field(), field);
        }
        TruncatedIdeal {
            field,
            levels,
            provenance,
        }
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn n_levels(&self) -> usize {
        self.levels.len()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn level(&self, n: usize) -> &Subspace {
        &self.levels[n - 1].subspace
    }

    pub fn level_exactness(&self, n: usize) -> Exactness {
        self.levels[n - 1].exactness
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn all_exact(&self) -> bool {
        self.levels.iter().all(|l| l.exactness == Exactness::Exact)
    }

    /// Levelwise subspace equality (provenance and flags ignored).
    pub fn same_levels(&self, other: &TruncatedIdeal) -> bool {
        self.field == other.field
            && self.levels.len() == other.levels.len()
            && self
                .levels
                .iter()
                .zip(&other.levels)
                .all(|(a, b)| a.subspace == b.subspace)
    }

    pub fn is_zero_throughout(&self) -> bool {
        self.levels.iter().all(|l| l.subspace.dim() == 0)
    }

    pub fn is_unit_throughout(&self) -> bool {
        self.levels
            .iter()
            .all(|l| l.subspace.dim() == l.subspace.ambient())
    }

    /// Membership of a group algebra element at its degree.
    pub fn contains_element(&self, x: &GroupAlgebraElement) -> Result<bool, IdealError> {
        let n = x.degree();
        if n == 0 || n > self.levels.len() {
            return Err(IdealError::OutOfLevels {
                requested: n,
                available: self.levels.len(),
            });
        }
        Ok(self.level(n).contains(&x.to_dense()))
    }

    /// Two-sidedness at every level: closure under left and right
    /// multiplication by the adjacent transpositions.
    pub fn is_two_sided(&self) -> bool {
        for (idx, lv) in self.levels.iter().enumerate() {
            let n = idx + 1;
            for g in 0..n.saturating_sub(1) {
                let s = Perm::adjacent_transposition(n, g);
                for row in lv.subspace.basis() {
                    let left = permute_coords(row, &s, true, self.field);
                    let right = permute_coords(row, &s, false, self.field);
                    if !lv.subspace.contains(&left) || !lv.subspace.contains(&right) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The intersection of level n+1 with the smaller group algebra,
    /// expressed in level-n coordinates.
    pub fn restricted_level(&self, n: usize) -> Subspace {
        let big = self.level(n + 1);
        let embedded: Vec<usize> = all_perms(n)
            .iter()
            .map(|p| p.embed(n + 1).lex_rank())
            .collect();
        let coord_sub = Subspace::from_rows(
            embedded
                .iter()
                .map(|&r| {
                    let mut v = vec![self.field.zero(); factorial(n + 1)];
                    v[r] = self.field.one();
                    v
                })
                .collect(),
            factorial(n + 1),
            self.field,
        );
        let inter = big.intersect(&coord_sub);
        let rows: Vec<Vec<Scalar>> = inter
            .basis()
            .iter()
            .map(|v| embedded.iter().map(|&r| v[r].clone()).collect())
            .collect();
        Subspace::from_rows(rows, factorial(n), self.field)
    }

    /// Restriction compatibility: every level equals the intersection of the
    /// next level with the smaller algebra.
    pub fn is_restriction_compatible(&self) -> bool {
        (1..self.levels.len()).all(|n| self.restricted_level(n) == *self.level(n))
    }
}

fn permute_coords(row: &[Scalar], s: &Perm, left: bool, field: FieldKind) -> Vec<Scalar> {
    let n = s.degree();
    let mut out = vec![field.zero(); row.len()];
    for (r, v) in row.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let sigma = Perm::from_lex_rank(n, r);
        let image = if left {
            s.compose(&sigma)
        } else {
            sigma.compose(s)
        };
        out[image.lex_rank()] = v.clone();
    }
    out
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

pub fn zero_ideal(n_max: usize, field: FieldKind) -> TruncatedIdeal {
    let levels = (1..=n_max)
        .map(|n| Level {
            subspace: Subspace::zero(factorial(n), field),
            exactness: Exactness::Exact,
        })
        .collect();
    TruncatedIdeal::from_levels(field, levels, String::from("zero"))
}

pub fn unit_ideal(n_max: usize, field: FieldKind) -> TruncatedIdeal {
    let levels = (1..=n_max)
        .map(|n| Level {
            subspace: Subspace::full(factorial(n), field),
            exactness: Exactness::Exact,
        })
        .collect();
    TruncatedIdeal::from_levels(field, levels, String::from("unit"))
}

/// The annihilator of the trivial module: the augmentation kernel at every
/// level.
pub fn ideal_j_plus(n_max: usize, field: FieldKind) -> TruncatedIdeal {
    let levels = (1..=n_max)
        .map(|n| {
            let ones = vec![field.one(); factorial(n)];
            Level {
                subspace: Subspace::kernel_of_functionals(vec![ones], factorial(n), field),
                exactness: Exactness::Exact,
            }
        })
        .collect();
    TruncatedIdeal::from_levels(field, levels, String::from("j_plus"))
}

/// The annihilator of the sign module: the kernel of the sign-weighted sum.
pub fn ideal_j_minus(n_max: usize, field: FieldKind) -> TruncatedIdeal {
    let levels = (1..=n_max)
        .map(|n| {
            let signs: Vec<Scalar> = all_perms(n)
                .iter()
                .map(|p| field.from_i64(p.sign()))
                .collect();
            Level {
                subspace: Subspace::kernel_of_functionals(vec![signs], factorial(n), field),
                exactness: Exactness::Exact,
            }
        })
        .collect();
    TruncatedIdeal::from_levels(field, levels, String::from("j_minus"))
}

/// The prime ideal of characteristic zero labelled by an infinite
/// partition: level n is the common annihilator of the simples fitting
/// inside the label.
pub fn ideal_prime_char0(label: &InfPartition, n_max: usize) -> TruncatedIdeal {
    let field = FieldKind::Rational;
    let levels = (1..=n_max)
        .map(|n| {
            let anns: Vec<Subspace> = partitions_of(n as u32)
                .into_iter()
                .filter(|mu| label.contains(mu))
                .map(|mu| annihilator_subspace(&specht_action(&mu, field)))
                .collect();
            let subspace = if anns.is_empty() {
                Subspace::full(factorial(n), field)
            } else {
                Subspace::intersect_all(anns)
            };
            Level {
                subspace,
                exactness: Exactness::Exact,
            }
        })
        .collect();
    TruncatedIdeal::from_levels(field, levels, format!("prime_char0({label})"))
}

/// The kernel of the signed permutation action on tensor powers of an
/// `m|n`-graded space, truncated at `n_max` levels.
pub fn ideal_schur_weyl(m: u32, n_odd: u32, n_max: usize, field: FieldKind) -> TruncatedIdeal {
    if m == 0 && n_odd == 0 {
        // the empty space kills everything; by convention this is the unit
        let mut unit = unit_ideal(n_max, field);
        unit.provenance = String::from("schur_weyl(0,0)");
        return unit;
    }
    let levels = (1..=n_max)
        .map(|i| Level {
            subspace: ActionTable::superspace(m as usize, n_odd as usize, i, field).annihilator(),
            exactness: Exactness::Exact,
        })
        .collect();
    TruncatedIdeal::from_levels(field, levels, format!("schur_weyl({m},{n_odd})"))
}

// ---------------------------------------------------------------------------
// Level modules
// ---------------------------------------------------------------------------

/// Labels of the simples surviving in the quotient by a level subspace,
/// over the rationals: exactly those the whole level acts on as zero.
fn level_constituents_char0(sub: &Subspace, n: usize) -> Vec<Partition> {
    partitions_of(n as u32)
        .into_iter()
        .filter(|lam| {
            let action = specht_action(lam, FieldKind::Rational);
            acts_as_zero(sub, &action)
        })
        .collect()
}

fn acts_as_zero(sub: &Subspace, action: &RepnAction) -> bool {
    use crate::linalg::Mat;
    let table = action.full_table();
    sub.basis().iter().all(|row| {
        let mut acc = Mat::zero(action.dim(), action.dim(), action.field());
        for (idx, coeff) in row.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            acc = acc.add(&table[idx].scale(coeff));
        }
        acc.is_zero()
    })
}

/// A module whose annihilator is the given level: over the rationals, the
/// multiplicity-free sum of the surviving simples (same annihilator by
/// semisimplicity, much smaller); over a prime field, the regular quotient.
/// `None` when the quotient vanishes (the level is the whole algebra).
fn level_module(ideal: &TruncatedIdeal, n: usize) -> Option<RepnAction> {
    let sub = ideal.level(n);
    if sub.dim() == sub.ambient() {
        return None;
    }
    match ideal.field {
        FieldKind::Rational => {
            let mut parts = level_constituents_char0(sub, n).into_iter();
            let first = parts.next().expect("proper level has a surviving simple");
            let mut acc = specht_action(&first, ideal.field);
            for lam in parts {
                acc = acc.direct_sum(&specht_action(&lam, ideal.field));
            }
            Some(acc)
        }
        FieldKind::Prime(_) => {
            let reg = regular_action(n, ideal.field);
            let (gens, dim) = quotient_action_matrices(reg.generators(), sub, ideal.field);
            assert!(dim > 0);
            Some(RepnAction::new(n, dim, ideal.field, gens))
        }
    }
}

// ---------------------------------------------------------------------------
// Semiring operations
// ---------------------------------------------------------------------------

fn check_compat(a: &TruncatedIdeal, b: &TruncatedIdeal) -> Result<(), IdealError> {
    if a.field != b.field {
        return Err(IdealError::FieldMismatch);
    }
    if a.levels.len() != b.levels.len() {
        return Err(IdealError::LevelMismatch);
    }
    Ok(())
}

/// The join at level n only reads the operands' level n; the dagger reads
/// the whole prefix.
fn join_exactness(a: &TruncatedIdeal, b: &TruncatedIdeal, n: usize) -> Exactness {
    if a.levels[n - 1].exactness == Exactness::Exact
        && b.levels[n - 1].exactness == Exactness::Exact
    {
        Exactness::Exact
    } else {
        Exactness::UpperApprox
    }
}

fn dagger_exactness(a: &TruncatedIdeal, b: &TruncatedIdeal, n: usize) -> Exactness {
    if a.levels[..n]
        .iter()
        .chain(&b.levels[..n])
        .all(|l| l.exactness == Exactness::Exact)
    {
        Exactness::Exact
    } else {
        Exactness::UpperApprox
    }
}

/// Memo shared across characteristic-zero semiring computations: simple
/// annihilators, ideals of label sets, and constituent extractions are all
/// reused heavily inside law suites.
#[derive(Default)]
pub struct SemiringCtx {
    ann: BTreeMap<Partition, Subspace>,
    set_subspace: BTreeMap<(usize, Vec<Partition>), Subspace>,
    constituents: BTreeMap<(usize, Vec<Vec<Scalar>>), Vec<Partition>>,
}

impl SemiringCtx {
    pub fn new() -> Self {
        SemiringCtx::default()
    }

    fn ann_of(&mut self, lam: &Partition) -> Subspace {
        if let Some(s) = self.ann.get(lam) {
            return s.clone();
        }
        let s = annihilator_subspace(&specht_action(lam, FieldKind::Rational));
        self.ann.insert(lam.clone(), s.clone());
        s
    }

    fn subspace_of_set(&mut self, n: usize, set: &BTreeSet<Partition>) -> Subspace {
        let key = (n, set.iter().cloned().collect::<Vec<_>>());
        if let Some(s) = self.set_subspace.get(&key) {
            return s.clone();
        }
        let s = if set.is_empty() {
            Subspace::full(factorial(n), FieldKind::Rational)
        } else {
            Subspace::intersect_all(set.iter().map(|lam| self.ann_of(lam)).collect())
        };
        self.set_subspace.insert(key, s.clone());
        s
    }

    fn constituents_of(&mut self, sub: &Subspace, n: usize) -> Vec<Partition> {
        let key = (n, sub.basis().to_vec());
        if let Some(c) = self.constituents.get(&key) {
            return c.clone();
        }
        let c = level_constituents_char0(sub, n);
        self.constituents.insert(key, c.clone());
        c
    }
}

/// The join: level n is the annihilator of the tensor product of modules
/// realising the two levels, mirroring tensor products of representations.
///
/// Over the rationals the annihilator is computed through constituent sets
/// (the inner tensor product support) and cached simple annihilators; over
/// a prime field the actual regular-quotient tensor module is used.
pub fn join(a: &TruncatedIdeal, b: &TruncatedIdeal) -> Result<TruncatedIdeal, IdealError> {
    match a.field {
        FieldKind::Rational => join_with(&mut SemiringCtx::new(), a, b),
        FieldKind::Prime(_) => join_via_modules(a, b),
    }
}

/// The dagger: level n intersects the annihilators of the modules induced
/// from outer products over all Young subgroups, mirroring direct sums. The
/// two boundary terms are the operand levels themselves.
///
/// Field-dependent strategy as for [`join`].
pub fn dagger(a: &TruncatedIdeal, b: &TruncatedIdeal) -> Result<TruncatedIdeal, IdealError> {
    match a.field {
        FieldKind::Rational => dagger_with(&mut SemiringCtx::new(), a, b),
        FieldKind::Prime(_) => dagger_via_modules(a, b),
    }
}

/// Join over the rationals with a shared memo.
pub fn join_with(
    ctx: &mut SemiringCtx,
    a: &TruncatedIdeal,
    b: &TruncatedIdeal,
) -> Result<TruncatedIdeal, IdealError> {
    check_compat(a, b)?;
    if a.field != FieldKind::Rational {
        return join_via_modules(a, b);
    }
    let mut levels = Vec::with_capacity(a.levels.len());
    for n in 1..=a.levels.len() {
        let ka = ctx.constituents_of(a.level(n), n);
        let kb = ctx.constituents_of(b.level(n), n);
        let mut support: BTreeSet<Partition> = BTreeSet::new();
        for nu in partitions_of(n as u32) {
            'outer: for lam in &ka {
                for mu in &kb {
                    if crate::rep::kronecker_coefficient(lam, mu, &nu) > 0 {
                        support.insert(nu.clone());
                        break 'outer;
                    }
                }
            }
        }
        levels.push(Level {
            subspace: ctx.subspace_of_set(n, &support),
            exactness: join_exactness(a, b, n),
        });
    }
    Ok(TruncatedIdeal::from_levels(
        a.field,
        levels,
        format!("join({},{})", a.provenance, b.provenance),
    ))
}

/// Dagger over the rationals with a shared memo: the level-n support is the
/// union over splittings of the outer-product induction supports, which the
/// box-counting rule computes without building any induced module.
pub fn dagger_with(
    ctx: &mut SemiringCtx,
    a: &TruncatedIdeal,
    b: &TruncatedIdeal,
) -> Result<TruncatedIdeal, IdealError> {
    check_compat(a, b)?;
    if a.field != FieldKind::Rational {
        return dagger_via_modules(a, b);
    }
    use crate::partitions::lr_coefficient;
    let mut levels = Vec::with_capacity(a.levels.len());
    for n in 1..=a.levels.len() {
        let mut support: BTreeSet<Partition> = BTreeSet::new();
        // boundary splittings: the whole level of one operand
        support.extend(ctx.constituents_of(a.level(n), n));
        support.extend(ctx.constituents_of(b.level(n), n));
        for i in 1..n {
            let ka = ctx.constituents_of(a.level(i), i);
            let kb = ctx.constituents_of(b.level(n - i), n - i);
            for lam in &ka {
                for mu in &kb {
                    for nu in partitions_of(n as u32) {
                        if lr_coefficient(&nu, lam, mu) > 0 {
                            support.insert(nu);
                        }
                    }
                }
            }
        }
        levels.push(Level {
            subspace: ctx.subspace_of_set(n, &support),
            exactness: dagger_exactness(a, b, n),
        });
    }
    Ok(TruncatedIdeal::from_levels(
        a.field,
        levels,
        format!("dagger({},{})", a.provenance, b.provenance),
    ))
}

/// Reference route for the join: the annihilator of the literal tensor
/// product of level modules. Always used over prime fields; over the
/// rationals it must agree with the constituent route.
pub fn join_via_modules(
    a: &TruncatedIdeal,
    b: &TruncatedIdeal,
) -> Result<TruncatedIdeal, IdealError> {
    check_compat(a, b)?;
    let field = a.field;
    let mut levels = Vec::with_capacity(a.levels.len());
    for n in 1..=a.levels.len() {
        let subspace = match (level_module(a, n), level_module(b, n)) {
            (Some(ma), Some(mb)) => {
                let ta = ActionTable::from_action(&ma);
                let tb = ActionTable::from_action(&mb);
                ta.tensor(&tb).annihilator()
            }
            // a vanishing factor makes the tensor module vanish
            _ => Subspace::full(factorial(n), field),
        };
        levels.push(Level {
            subspace,
            exactness: join_exactness(a, b, n),
        });
    }
    Ok(TruncatedIdeal::from_levels(
        field,
        levels,
        format!("join({},{})", a.provenance, b.provenance),
    ))
}

/// Reference route for the dagger: annihilators of the literal induced
/// modules. Always used over prime fields.
pub fn dagger_via_modules(
    a: &TruncatedIdeal,
    b: &TruncatedIdeal,
) -> Result<TruncatedIdeal, IdealError> {
    check_compat(a, b)?;
    let field = a.field;
    let mut levels = Vec::with_capacity(a.levels.len());
    for n in 1..=a.levels.len() {
        let mut terms: Vec<Subspace> = Vec::new();
        // i = n: induction over S_n x S_0 is the quotient by the level itself
        terms.push(a.level(n).clone());
        // i = 0, symmetrically
        terms.push(b.level(n).clone());
        for i in 1..n {
            let (Some(ma), Some(mb)) = (level_module(a, i), level_module(b, n - i)) else {
                continue; // vanishing factor: the induced module is zero
            };
            let ind = induced_action(&ma, &mb);
            terms.push(annihilator_subspace(&ind));
        }
        levels.push(Level {
            subspace: Subspace::intersect_all(terms),
            exactness: dagger_exactness(a, b, n),
        });
    }
    Ok(TruncatedIdeal::from_levels(
        field,
        levels,
        format!("dagger({},{})", a.provenance, b.provenance),
    ))
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

/// The primeness condition at a bidegree: the level-(m+n) component meets
/// the Young subalgebra exactly in the sum of the two padded levels.
pub fn is_tprime_at(ideal: &TruncatedIdeal, m: usize, n: usize) -> Result<bool, IdealError> {
    if m == 0 || n == 0 || m + n > ideal.n_levels() {
        return Err(IdealError::OutOfLevels {
            requested: m + n,
            available: ideal.n_levels(),
        });
    }
    let field = ideal.field;
    let big_order = factorial(m + n);
    // ranks of the Young-subgroup permutations a bullet b
    let perms_m = all_perms(m);
    let perms_n = all_perms(n);
    let mut bullet_rank = vec![vec![0usize; perms_n.len()]; perms_m.len()];
    for (i, pa) in perms_m.iter().enumerate() {
        for (j, pb) in perms_n.iter().enumerate() {
            let a = GroupAlgebraElement::from_perm(pa.clone(), field);
            let b = GroupAlgebraElement::from_perm(pb.clone(), field);
            let prod = a.bullet(&b);
            let (perm, _) = prod.terms().next().expect("single term");
            bullet_rank[i][j] = perm.lex_rank();
        }
    }
    let coord_rows: Vec<Vec<Scalar>> = bullet_rank
        .iter()
        .flatten()
        .map(|&r| {
            let mut v = vec![field.zero(); big_order];
            v[r] = field.one();
            v
        })
        .collect();
    let young = Subspace::from_rows(coord_rows, big_order, field);
    let lhs = ideal.level(m + n).intersect(&young);

    // I_m bullet kS_n + kS_m bullet I_n
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for row in ideal.level(m).basis() {
        for j in 0..perms_n.len() {
            let mut v = vec![field.zero(); big_order];
            for (i, coeff) in row.iter().enumerate() {
                if !coeff.is_zero() {
                    v[bullet_rank[i][j]] = coeff.clone();
                }
            }
            rows.push(v);
        }
    }
    for row in ideal.level(n).basis() {
        for i in 0..perms_m.len() {
            let mut v = vec![field.zero(); big_order];
            for (j, coeff) in row.iter().enumerate() {
                if !coeff.is_zero() {
                    v[bullet_rank[i][j]] = coeff.clone();
                }
            }
            rows.push(v);
        }
    }
    let rhs = Subspace::from_rows(rows, big_order, field);
    assert!(
        lhs.contains_subspace(&rhs),
        "padded levels always land in the ideal"
    );
    Ok(lhs == rhs)
}

/// The combinatorial mirror of the primeness condition on an inductive
/// system: every pair of labels has a witness above it with a nonzero
/// restriction multiplicity.
pub fn t_indecomposable_at(
    phi: &InductiveSystemTrunc,
    m: usize,
    n: usize,
    field: FieldKind,
) -> Result<bool, IdealError> {
    if m == 0 || n == 0 || m + n > phi.n_levels() {
        return Err(IdealError::OutOfLevels {
            requested: m + n,
            available: phi.n_levels(),
        });
    }
    for lam in phi.level(m) {
        for mu in phi.level(n) {
            let witnessed = phi.level(m + n).iter().any(|kappa| {
                restriction_multiplicity(kappa, lam, mu, field)
                    .map(|c| c > 0)
                    .unwrap_or(false)
            });
            if !witnessed {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether every level maps into the one below under strand removal with
/// the given loop parameter.
pub fn admits_dimension(ideal: &TruncatedIdeal, delta: &Scalar) -> Result<bool, IdealError> {
    if delta.field() != ideal.field {
        return Err(IdealError::FieldMismatch);
    }
    if ideal.is_zero_throughout() {
        return Err(IdealError::DegenerateIdeal("zero"));
    }
    if ideal.is_unit_throughout() {
        return Err(IdealError::DegenerateIdeal("the identity"));
    }
    for n in 1..ideal.n_levels() {
        for row in ideal.level(n + 1).basis() {
            let x = GroupAlgebraElement::from_dense(n + 1, ideal.field, row);
            let image = remove_strand(&x, delta);
            if !ideal.level(n).contains(&image.to_dense()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Invariant values that may be undetermined at the truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TruncatedValue {
    Value(u32),
    /// The defining witness does not occur within the truncation; the true
    /// value is at least this.
    AtLeast(u32),
}

/// The last level at which the ideal vanishes (0 when level 1 is already
/// nonzero). A fully zero truncation yields the level count as a lower
/// bound.
pub fn invariant_d(ideal: &TruncatedIdeal) -> TruncatedValue {
    let mut last_zero = 0u32;
    for n in 1..=ideal.n_levels() {
        if ideal.level(n).dim() == 0 {
            last_zero = n as u32;
        }
    }
    if last_zero == ideal.n_levels() as u32 {
        TruncatedValue::AtLeast(last_zero)
    } else {
        TruncatedValue::Value(last_zero)
    }
}

/// The last level whose symmetriser stays outside the ideal. Membership of
/// symmetrisers is monotone in the level, so the first containment decides.
pub fn invariant_s(ideal: &TruncatedIdeal) -> TruncatedValue {
    for n in 1..=ideal.n_levels() {
        let s = symmetriser(n, ideal.field);
        if ideal.level(n).contains(&s.to_dense()) {
            return TruncatedValue::Value(n as u32 - 1);
        }
    }
    TruncatedValue::AtLeast(ideal.n_levels() as u32)
}

/// The last level whose skew symmetriser stays outside the ideal.
pub fn invariant_a(ideal: &TruncatedIdeal) -> TruncatedValue {
    for n in 1..=ideal.n_levels() {
        let a = antisymmetriser(n, ideal.field);
        if ideal.level(n).contains(&a.to_dense()) {
            return TruncatedValue::Value(n as u32 - 1);
        }
    }
    TruncatedValue::AtLeast(ideal.n_levels() as u32)
}

/// Codimensions of the levels: the dimension sequence of the quotient
/// algebras. Requires every level to be exact.
pub fn growth_sequence(ideal: &TruncatedIdeal) -> Result<Vec<u64>, IdealError> {
    if !ideal.all_exact() {
        return Err(IdealError::Inexact);
    }
    Ok((1..=ideal.n_levels())
        .map(|n| (factorial(n) - ideal.level(n).dim()) as u64)
        .collect())
}

// ---------------------------------------------------------------------------
// Correspondence with inductive systems
// ---------------------------------------------------------------------------

/// The inductive system of an ideal: per level, the labels of the simple
/// constituents of the quotient module.
pub fn phi_of(ideal: &TruncatedIdeal) -> InductiveSystemTrunc {
    let mut levels = Vec::with_capacity(ideal.n_levels());
    for n in 1..=ideal.n_levels() {
        let set: BTreeSet<Partition> = match level_module(ideal, n) {
            None => BTreeSet::new(),
            Some(module) => brauer_constituents(&module)
                .into_iter()
                .filter(|(_, m)| *m > 0)
                .map(|(lam, _)| lam)
                .collect(),
        };
        levels.push(set);
    }
    InductiveSystemTrunc::new(levels)
}

/// The ideal of an inductive system. Over the rationals each level is the
/// common annihilator of the level's simples and the result is exact; over
/// a prime field the intersection runs over all higher truncated levels and
/// the result is an upper approximation (the untruncated intersection runs
/// over every higher level).
pub fn ideal_of_phi(
    phi: &InductiveSystemTrunc,
    field: FieldKind,
) -> Result<TruncatedIdeal, IdealError> {
    let n_max = phi.n_levels();
    let mut levels = Vec::with_capacity(n_max);
    match field {
        FieldKind::Rational => {
            for n in 1..=n_max {
                let anns: Vec<Subspace> = phi
                    .level(n)
                    .iter()
                    .map(|lam| annihilator_subspace(&specht_action(lam, field)))
                    .collect();
                let subspace = if anns.is_empty() {
                    Subspace::full(factorial(n), field)
                } else {
                    Subspace::intersect_all(anns)
                };
                levels.push(Level {
                    subspace,
                    exactness: Exactness::Exact,
                });
            }
        }
        FieldKind::Prime(p) => {
            for n in 1..=n_max {
                let mut anns: Vec<Subspace> = Vec::new();
                for m in n..=n_max {
                    for lam in phi.level(m) {
                        let action = modular_simple(lam, p).map_err(|_| {
                            IdealError::DegenerateIdeal("labelled by a p-singular partition")
                        })?;
                        let restricted = action.restrict_to(n);
                        anns.push(annihilator_subspace(&restricted));
                    }
                }
                let subspace = if anns.is_empty() {
                    Subspace::full(factorial(n), field)
                } else {
                    Subspace::intersect_all(anns)
                };
                levels.push(Level {
                    subspace,
                    exactness: Exactness::UpperApprox,
                });
            }
        }
    }
    Ok(TruncatedIdeal::from_levels(
        field,
        levels,
        String::from("of_phi"),
    ))
}

/// The truncated inductive system generated by an infinite-partition label:
/// per level, all simples fitting inside the label.
pub fn phi_of_label(label: &InfPartition, n_max: usize) -> InductiveSystemTrunc {
    let levels = (1..=n_max)
        .map(|n| {
            partitions_of(n as u32)
                .into_iter()
                .filter(|mu| label.contains(mu))
                .collect()
        })
        .collect();
    InductiveSystemTrunc::new(levels)
}

// ---------------------------------------------------------------------------
// Annihilator labels of admissible representations
// ---------------------------------------------------------------------------

/// Annihilator labels of an admissible representation datum: the left label
/// grows the hook shape by the partition attached to 0 by the first
/// distribution, the right label by the second. The all-infinite shape
/// encodes the zero ideal (the deficit-mass case).
pub fn adm_annihilator_label(
    omega: &ThomaParam,
    lambda_dist: &YoungDistribution,
    mu_dist: &YoungDistribution,
) -> Result<(InfPartition, InfPartition), crate::thoma::ThomaError> {
    crate::thoma::validate_admissible(omega, lambda_dist, mu_dist)?;
    if omega.gamma_is_positive() {
        return Ok((InfPartition::all_infinite(), InfPartition::all_infinite()));
    }
    let m = omega.alpha().len() as u32;
    let n = omega.beta().len() as u32;
    let make = |tail_partition: &Partition| {
        let head: Vec<u32> = tail_partition.parts().iter().map(|&l| n + l).collect();
        InfPartition::new(crate::partitions::InfRows::Finite(m), head, n)
    };
    Ok((make(&lambda_dist.at_zero()), make(&mu_dist.at_zero())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::InfRows;

    const Q: FieldKind = FieldKind::Rational;
    const F2: FieldKind = FieldKind::Prime(2);
    const F3: FieldKind = FieldKind::Prime(3);

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn j_plus_levels_have_codimension_one() {
        for field in [Q, F3] {
            let jp = ideal_j_plus(5, field);
            assert_eq!(jp.level(1).dim(), 0, "the level-1 algebra is the scalars");
            for n in 2..=5 {
                assert_eq!(jp.level(n).dim(), factorial(n) - 1);
            }
            assert!(jp.is_two_sided());
            assert!(jp.is_restriction_compatible());
        }
    }

    #[test]
    fn j_minus_equals_j_plus_mod_2() {
        let jm = ideal_j_minus(4, F2);
        let jp = ideal_j_plus(4, F2);
        assert!(jm.same_levels(&jp));
    }

    #[test]
    fn prime_char0_reproduces_the_classical_ideals() {
        let n = 4;
        assert!(ideal_prime_char0(&InfPartition::hook(1, 0), n).same_levels(&ideal_j_plus(n, Q)));
        assert!(
            ideal_prime_char0(&InfPartition::new(InfRows::Finite(0), vec![], 1), n)
                .same_levels(&ideal_j_minus(n, Q))
        );
        assert!(ideal_prime_char0(&InfPartition::all_infinite(), n).same_levels(&zero_ideal(n, Q)));
    }

    #[test]
    fn schur_weyl_lines_are_the_maximal_ideals() {
        for field in [Q, F3] {
            assert!(ideal_schur_weyl(1, 0, 4, field).same_levels(&ideal_j_plus(4, field)));
            assert!(ideal_schur_weyl(0, 1, 4, field).same_levels(&ideal_j_minus(4, field)));
        }
    }

    #[test]
    fn schur_weyl_2_0_small_levels() {
        let p20 = ideal_schur_weyl(2, 0, 3, Q);
        assert_eq!(p20.level(1).dim(), 0);
        assert_eq!(p20.level(2).dim(), 0);
        // dim kS_3 / level 3 = 1 + 4
        assert_eq!(factorial(3) - p20.level(3).dim(), 5);
        assert!(p20.contains_element(&antisymmetriser(3, Q)).unwrap());
        assert!(p20.is_two_sided());
        assert!(p20.is_restriction_compatible());
    }

    #[test]
    fn schur_weyl_agrees_with_prime_label() {
        for (m, n_odd) in [(1u32, 1u32), (2, 0)] {
            let sw = ideal_schur_weyl(m, n_odd, 4, Q);
            let pl = ideal_prime_char0(&InfPartition::hook(m, n_odd), 4);
            assert!(sw.same_levels(&pl), "m={m} n={n_odd}");
        }
    }

    #[test]
    fn join_with_j_plus_is_identity() {
        for i in [ideal_j_minus(4, Q), ideal_schur_weyl(1, 1, 4, Q)] {
            let joined = join(&i, &ideal_j_plus(4, Q)).unwrap();
            assert!(joined.same_levels(&i), "{}", i.provenance());
        }
    }

    #[test]
    fn join_with_unit_is_unit() {
        let i = ideal_j_minus(4, Q);
        let joined = join(&i, &unit_ideal(4, Q)).unwrap();
        assert!(joined.same_levels(&unit_ideal(4, Q)));
    }

    #[test]
    fn join_j_minus_squared_is_j_plus() {
        for field in [Q, F3] {
            let jm = ideal_j_minus(5, field);
            let jj = join(&jm, &jm).unwrap();
            assert!(jj.same_levels(&ideal_j_plus(5, field)), "field={field:?}");
        }
    }

    #[test]
    fn dagger_with_unit_is_identity() {
        for i in [ideal_j_plus(4, Q), ideal_schur_weyl(1, 1, 4, Q)] {
            let d = dagger(&i, &unit_ideal(4, Q)).unwrap();
            assert!(d.same_levels(&i), "{}", i.provenance());
        }
    }

    #[test]
    fn dagger_builds_schur_weyl_kernels() {
        let jp = ideal_j_plus(4, Q);
        let jm = ideal_j_minus(4, Q);
        let p11 = dagger(&jp, &jm).unwrap();
        assert!(p11.same_levels(&ideal_schur_weyl(1, 1, 4, Q)));
        let p20 = dagger(&jp, &jp).unwrap();
        assert!(p20.same_levels(&ideal_schur_weyl(2, 0, 4, Q)));
    }

    #[test]
    fn constituent_route_matches_module_route_char0() {
        let samples = [
            ideal_j_plus(4, Q),
            ideal_j_minus(4, Q),
            ideal_schur_weyl(1, 1, 4, Q),
            unit_ideal(4, Q),
            zero_ideal(4, Q),
        ];
        for a in &samples {
            for b in &samples {
                assert!(
                    join(a, b).unwrap().same_levels(&join_via_modules(a, b).unwrap()),
                    "join {} {}",
                    a.provenance(),
                    b.provenance()
                );
                assert!(
                    dagger(a, b)
                        .unwrap()
                        .same_levels(&dagger_via_modules(a, b).unwrap()),
                    "dagger {} {}",
                    a.provenance(),
                    b.provenance()
                );
            }
        }
    }

    #[test]
    fn dagger_and_join_are_commutative() {
        let a = ideal_j_plus(3, Q);
        let b = ideal_schur_weyl(1, 1, 3, Q);
        assert!(dagger(&a, &b)
            .unwrap()
            .same_levels(&dagger(&b, &a).unwrap()));
        assert!(join(&a, &b).unwrap().same_levels(&join(&b, &a).unwrap()));
    }

    #[test]
    fn tprime_holds_for_maximal_and_schur_weyl_ideals() {
        let jp = ideal_schur_weyl(1, 0, 5, Q);
        let p11 = ideal_schur_weyl(1, 1, 4, Q);
        for m in 1..=4 {
            for n in 1..=4 {
                if m + n <= 5 {
                    assert!(is_tprime_at(&jp, m, n).unwrap(), "jp at ({m},{n})");
                }
                if m + n <= 4 {
                    assert!(is_tprime_at(&p11, m, n).unwrap(), "p11 at ({m},{n})");
                }
            }
        }
    }

    #[test]
    fn hook_system_is_t_indecomposable_up_to_6() {
        let phi = phi_of_label(&InfPartition::hook(1, 1), 6);
        for m in 1..=5usize {
            for n in 1..=5usize {
                if m + n <= 6 {
                    assert!(
                        t_indecomposable_at(&phi, m, n, Q).unwrap(),
                        "hooks at ({m},{n})"
                    );
                }
            }
        }
    }

    #[test]
    fn tprime_fails_for_non_hook_label() {
        let label = InfPartition::new(InfRows::Finite(1), vec![1], 0);
        let ideal = ideal_prime_char0(&label, 4);
        assert!(!is_tprime_at(&ideal, 2, 2).unwrap());
        // the combinatorial route sees the same failure
        let phi = phi_of_label(&label, 4);
        assert!(!t_indecomposable_at(&phi, 2, 2, Q).unwrap());
        assert!(phi.is_restriction_closed(Q));
    }

    #[test]
    fn phi_of_simple_ideals() {
        let jp = ideal_j_plus(4, Q);
        let phi = phi_of(&jp);
        for n in 1..=4usize {
            assert_eq!(
                phi.level(n).iter().cloned().collect::<Vec<_>>(),
                vec![p(&[n as u32])]
            );
        }
        let phi0 = phi_of(&zero_ideal(3, Q));
        for n in 1..=3usize {
            assert_eq!(phi0.level(n).len(), partitions_of(n as u32).len());
        }
        let phiu = phi_of(&unit_ideal(3, Q));
        for n in 1..=3usize {
            assert!(phiu.level(n).is_empty());
        }
    }

    #[test]
    fn phi_of_schur_weyl_2_0_is_two_row_partitions() {
        let p20 = ideal_schur_weyl(2, 0, 4, Q);
        let phi = phi_of(&p20);
        for n in 1..=4usize {
            let expected: BTreeSet<Partition> = partitions_of(n as u32)
                .into_iter()
                .filter(|l| l.len() <= 2)
                .collect();
            assert_eq!(phi.level(n), &expected);
        }
    }

    #[test]
    fn ideal_of_phi_round_trip_char0() {
        for ideal in [
            ideal_j_plus(4, Q),
            ideal_j_minus(4, Q),
            ideal_schur_weyl(1, 1, 4, Q),
            ideal_prime_char0(&InfPartition::new(InfRows::Finite(1), vec![1], 0), 4),
        ] {
            let phi = phi_of(&ideal);
            let back = ideal_of_phi(&phi, Q).unwrap();
            assert!(back.same_levels(&ideal), "{}", ideal.provenance());
            assert!(back.all_exact());
        }
    }

    #[test]
    fn ideal_of_phi_char_p_is_upper_bound() {
        let jp = ideal_j_plus(4, F3);
        let phi = phi_of(&jp);
        let back = ideal_of_phi(&phi, F3).unwrap();
        for n in 1..=4 {
            assert!(back.level(n).contains_subspace(jp.level(n)));
        }
        assert!(!back.all_exact());
    }

    #[test]
    fn admits_dimension_examples() {
        let jp = ideal_schur_weyl(1, 0, 4, Q);
        assert!(admits_dimension(&jp, &Q.from_i64(1)).unwrap());
        assert!(!admits_dimension(&jp, &Q.from_i64(0)).unwrap());
        let p11 = ideal_schur_weyl(1, 1, 4, Q);
        assert!(admits_dimension(&p11, &Q.from_i64(0)).unwrap());
        assert!(!admits_dimension(&p11, &Q.from_i64(1)).unwrap());
        assert!(admits_dimension(&zero_ideal(3, Q), &Q.one()).is_err());
        assert!(admits_dimension(&unit_ideal(3, Q), &Q.one()).is_err());
    }

    #[test]
    fn admits_dimension_unique_residue_mod_3() {
        let jp = ideal_j_plus(5, F3);
        let mut admitted = Vec::new();
        for d in 0..3 {
            if admits_dimension(&jp, &F3.from_i64(d)).unwrap() {
                admitted.push(d);
            }
        }
        assert_eq!(admitted, vec![1]);
    }

    #[test]
    fn invariants_of_j_plus() {
        let jp = ideal_j_plus(5, F3);
        assert_eq!(invariant_d(&jp), TruncatedValue::Value(1));
        assert_eq!(invariant_s(&jp), TruncatedValue::Value(2)); // p - 1
        assert_eq!(invariant_a(&jp), TruncatedValue::Value(1));
        let unit = unit_ideal(3, F3);
        assert_eq!(invariant_s(&unit), TruncatedValue::Value(0));
        assert_eq!(invariant_d(&unit), TruncatedValue::Value(0));
        let zero = zero_ideal(3, F3);
        assert_eq!(invariant_d(&zero), TruncatedValue::AtLeast(3));
        assert_eq!(invariant_s(&zero), TruncatedValue::AtLeast(3));
    }

    #[test]
    fn growth_of_j_plus_is_constant_one() {
        let jp = ideal_j_plus(5, Q);
        assert_eq!(growth_sequence(&jp).unwrap(), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn growth_of_p11_is_the_hook_square_sum() {
        // independent oracle: the quotient dimension at level n is the sum
        // of squared tableau counts over hook shapes (the simples surviving
        // the 1|1 tensor action), which is the central binomial sequence
        let p11 = ideal_schur_weyl(1, 1, 5, Q);
        let oracle: Vec<u64> = (1..=5u32)
            .map(|n| {
                partitions_of(n)
                    .into_iter()
                    .filter(|l| l.row(1) <= 1)
                    .map(|l| l.dimension().pow(2))
                    .sum()
            })
            .collect();
        assert_eq!(oracle, vec![1, 2, 6, 20, 70]);
        assert_eq!(growth_sequence(&p11).unwrap(), oracle);
    }

    #[test]
    fn d_invariant_superadditive_under_dagger() {
        let jp = ideal_j_plus(4, Q);
        let jj = dagger(&jp, &jp).unwrap();
        let TruncatedValue::Value(d) = invariant_d(&jj) else {
            panic!("determined at this truncation");
        };
        assert!(d >= 2);
        assert_eq!(d, 2);
    }

    #[test]
    fn levelwise_growth_bound_for_join() {
        let a = ideal_j_minus(4, Q);
        let b = ideal_schur_weyl(1, 1, 4, Q);
        let j = join(&a, &b).unwrap();
        let ga = growth_sequence(&a).unwrap();
        let gb = growth_sequence(&b).unwrap();
        let gj = growth_sequence(&j).unwrap();
        for n in 0..4 {
            assert!(gj[n] <= ga[n] * gb[n]);
        }
    }

    #[test]
    fn levelwise_growth_bound_for_dagger() {
        // g_n(I dagger J) <= sum_i binom(n,i)^2 g_i(I) g_{n-i}(J), with the
        // level-0 quotients counting 1
        fn binom(n: u64, k: u64) -> u64 {
            let mut r: u128 = 1;
            for i in 0..k {
                r = r * (n - i) as u128 / (i + 1) as u128;
            }
            r as u64
        }
        let a = ideal_j_plus(4, Q);
        let b = ideal_schur_weyl(1, 1, 4, Q);
        let d = dagger(&a, &b).unwrap();
        let ga = growth_sequence(&a).unwrap();
        let gb = growth_sequence(&b).unwrap();
        let gd = growth_sequence(&d).unwrap();
        let at = |g: &[u64], i: usize| if i == 0 { 1 } else { g[i - 1] };
        for n in 1..=4usize {
            let bound: u64 = (0..=n)
                .map(|i| binom(n as u64, i as u64).pow(2) * at(&ga, i) * at(&gb, n - i))
                .sum();
            assert!(gd[n - 1] <= bound, "level {n}: {} > {bound}", gd[n - 1]);
            // the dagger shrinks neither operand's growth
            assert!(gd[n - 1] >= ga[n - 1].max(gb[n - 1]));
        }
    }

    #[test]
    fn tprime_equivalence_with_indecomposability_char0() {
        let samples = [
            ideal_schur_weyl(1, 0, 4, Q),
            ideal_schur_weyl(1, 1, 4, Q),
            ideal_prime_char0(&InfPartition::new(InfRows::Finite(1), vec![1], 0), 4),
        ];
        for ideal in &samples {
            let phi = phi_of(ideal);
            for m in 1..=3usize {
                for n in 1..=3usize {
                    if m + n > 4 {
                        continue;
                    }
                    assert_eq!(
                        is_tprime_at(ideal, m, n).unwrap(),
                        t_indecomposable_at(&phi, m, n, Q).unwrap(),
                        "{} at ({m},{n})",
                        ideal.provenance()
                    );
                }
            }
        }
    }

    #[test]
    fn join_and_dagger_preserve_primeness() {
        // joins and daggers of ideals passing the primeness test pass it
        // again at every tested bidegree
        let generators = [
            ideal_j_plus(4, Q),
            ideal_j_minus(4, Q),
            ideal_schur_weyl(1, 1, 4, Q),
        ];
        let all_bidegrees_prime = |ideal: &TruncatedIdeal| -> bool {
            (1..4usize).all(|m| {
                (1..4usize)
                    .filter(|n| m + n <= 4)
                    .all(|n| is_tprime_at(ideal, m, n).unwrap())
            })
        };
        for g in &generators {
            assert!(all_bidegrees_prime(g), "{}", g.provenance());
        }
        for a in &generators {
            for b in &generators {
                let j = join(a, b).unwrap();
                assert!(all_bidegrees_prime(&j), "{}", j.provenance());
                let d = dagger(a, b).unwrap();
                assert!(all_bidegrees_prime(&d), "{}", d.provenance());
            }
        }
    }

    #[test]
    fn admissible_label_degenerates_to_the_spherical_one() {
        use crate::thoma::{spherical_annihilator_label, ThomaParam, YoungDistribution};
        use num_bigint::BigInt;
        use num_rational::BigRational;
        let rat = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        let samples = [
            ThomaParam::new(vec![rat(1, 2)], vec![rat(1, 2)]).unwrap(),
            ThomaParam::new(vec![rat(1, 3), rat(1, 3), rat(1, 3)], vec![]).unwrap(),
            ThomaParam::new(vec![rat(1, 2)], vec![]).unwrap(), // deficit mass
        ];
        for omega in &samples {
            let (l, r) = adm_annihilator_label(
                omega,
                &YoungDistribution::empty(),
                &YoungDistribution::empty(),
            )
            .unwrap();
            let spherical = spherical_annihilator_label(omega);
            assert_eq!(l, spherical);
            assert_eq!(r, spherical);
        }
    }

    #[test]
    fn restriction_compatibility_of_constructors() {
        for ideal in [
            ideal_j_plus(4, Q),
            ideal_j_minus(4, Q),
            ideal_schur_weyl(1, 1, 4, Q),
            ideal_schur_weyl(2, 0, 4, Q),
            ideal_prime_char0(&InfPartition::new(InfRows::Finite(1), vec![1], 0), 4),
        ] {
            assert!(ideal.is_restriction_compatible(), "{}", ideal.provenance());
        }
        for ideal in [ideal_j_plus(4, F3), ideal_schur_weyl(1, 1, 4, F3)] {
            assert!(ideal.is_restriction_compatible(), "{}", ideal.provenance());
        }
    }

    #[test]
    fn phi_reverses_inclusions() {
        // the smaller ideal carries the larger system
        let jp = ideal_j_plus(4, Q);
        let p20 = dagger(&jp, &jp).unwrap();
        for n in 1..=4 {
            assert!(jp.level(n).contains_subspace(p20.level(n)));
        }
        let phi_big = phi_of(&jp);
        let phi_small = phi_of(&p20);
        for n in 1..=4 {
            assert!(phi_small.level(n).is_superset(phi_big.level(n)));
        }
    }

    #[test]
    fn phi_of_is_restriction_closed() {
        for ideal in [ideal_j_plus(4, Q), ideal_schur_weyl(1, 1, 4, Q)] {
            assert!(phi_of(&ideal).is_restriction_closed(Q));
        }
        let jp3 = ideal_j_plus(4, F3);
        assert!(phi_of(&jp3).is_restriction_closed(F3));
    }

    #[test]
    fn admissible_labels() {
        use crate::thoma::{ThomaParam, YoungDistribution};
        use num_bigint::BigInt;
        use num_rational::BigRational;
        let rat = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));

        // spherical degeneration: empty distributions give the hook label
        let w = ThomaParam::new(vec![rat(1, 2)], vec![rat(1, 2)]).unwrap();
        let (l, r) = adm_annihilator_label(
            &w,
            &YoungDistribution::empty(),
            &YoungDistribution::empty(),
        )
        .unwrap();
        assert_eq!(l, InfPartition::hook(1, 1));
        assert_eq!(r, InfPartition::hook(1, 1));

        // deficit mass: zero-ideal labels
        let w2 = ThomaParam::new(vec![rat(1, 2)], vec![]).unwrap();
        let (l2, r2) = adm_annihilator_label(
            &w2,
            &YoungDistribution::empty(),
            &YoungDistribution::empty(),
        )
        .unwrap();
        assert!(l2.is_all_infinite() && r2.is_all_infinite());

        // a partition at zero shifts the head rows
        let lam_dist =
            YoungDistribution::new([(rat(0, 1), p(&[2]))].into_iter().collect()).unwrap();
        let mu_dist =
            YoungDistribution::new([(rat(0, 1), p(&[1, 1]))].into_iter().collect()).unwrap();
        let (l3, r3) = adm_annihilator_label(&w, &lam_dist, &mu_dist).unwrap();
        assert_eq!(l3, InfPartition::new(InfRows::Finite(1), vec![3], 1));
        assert_eq!(r3, InfPartition::new(InfRows::Finite(1), vec![2, 2], 1));
    }
}
