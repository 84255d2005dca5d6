//! Matrix representations of symmetric groups: Specht modules over any
//! field, ordinary characters, modular simples via the radical of the
//! canonical bilinear form, induction and restriction, and Brauer-character
//! constituent extraction.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::group_algebra::{all_perms, factorial, Perm};
use crate::linalg::{solve_in_basis, KernelAccumulator, Mat, Subspace};
use crate::partitions::{partitions_of, Partition};
use crate::scalar::{FieldKind, Scalar};

/// A representation of `S_n` given by the images of the adjacent
/// transpositions. Constructing one verifies the defining relations.
#[derive(Debug, Clone)]
pub struct RepnAction {
    degree: usize,
    dim: usize,
    field: FieldKind,
    gens: Vec<Mat>,
}

impl RepnAction {
    pub fn new(degree: usize, dim: usize, field: FieldKind, gens: Vec<Mat>) -> Self {
        assert_eq!(gens.len(), degree.saturating_sub(1));
        for g in &gens {
            assert_eq!((g.rows, g.cols), (dim, dim));
        }
        let action = RepnAction {
            degree,
            dim,
            field,
            gens,
        };
        action.assert_coxeter_relations();
        action
    }

    fn assert_coxeter_relations(&self) {
        let id = Mat::identity(self.dim, self.field);
        for (i, g) in self.gens.iter().enumerate() {
            assert_eq!(g.mul(g), id, "generator {i} is not an involution");
        }
        for i in 0..self.gens.len().saturating_sub(1) {
            let a = &self.gens[i];
            let b = &self.gens[i + 1];
            assert_eq!(
                a.mul(b).mul(a),
                b.mul(a).mul(b),
                "braid relation fails at {i}"
            );
        }
        for i in 0..self.gens.len() {
            for j in i + 2..self.gens.len() {
                let a = &self.gens[i];
                let b = &self.gens[j];
                assert_eq!(
                    a.mul(b),
                    b.mul(a),
                    "distant generators {i},{j} do not commute"
                );
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn generator(&self, i: usize) -> &Mat {
        &self.gens[i]
    }

    pub fn generators(&self) -> &[Mat] {
        &self.gens
    }

    /// The matrix of an arbitrary permutation, by a reduced-word product.
    pub fn act(&self, p: &Perm) -> Mat {
        assert_eq!(p.degree(), self.degree);
        let mut acc = Mat::identity(self.dim, self.field);
        for i in p.reduced_word() {
            acc = acc.mul(&self.gens[i]);
        }
        acc
    }

    /// Matrices of every permutation, indexed by lexicographic rank.
    ///
    /// Each permutation beyond the identity costs one product with a
    /// generator (peeling its first descent).
    pub fn full_table(&self) -> Vec<Mat> {
        let n = self.degree;
        let size = factorial(n);
        let mut table: Vec<Option<Mat>> = vec![None; size];
        table[Perm::identity(n).lex_rank()] = Some(Mat::identity(self.dim, self.field));
        let mut perms: Vec<Perm> = all_perms(n);
        perms.sort_by_key(|p| p.reduced_word().len());
        for p in &perms {
            let r = p.lex_rank();
            if table[r].is_some() {
                continue;
            }
            let i = first_descent(p).expect("non-identity permutation has a descent");
            let shorter = p.compose(&Perm::adjacent_transposition(n, i));
            let m = table[shorter.lex_rank()]
                .as_ref()
                .expect("shorter permutation already computed")
                .mul(&self.gens[i]);
            table[r] = Some(m);
        }
        table.into_iter().map(|m| m.unwrap()).collect()
    }

    /// Restriction to `S_m` for any `m <= n`: keep the first `m-1`
    /// generators.
    pub fn restrict_to(&self, m: usize) -> RepnAction {
        assert!(m >= 1 && m <= self.degree);
        RepnAction {
            degree: m,
            dim: self.dim,
            field: self.field,
            gens: self.gens[..m - 1].to_vec(),
        }
    }

    /// Direct sum with another action of the same group.
    pub fn direct_sum(&self, other: &RepnAction) -> RepnAction {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.field, other.field);
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        RepnAction {
            degree: self.degree,
            dim: self.dim + other.dim,
            field: self.field,
            gens,
        }
    }

    /// Inner tensor product (diagonal action).
    pub fn tensor(&self, other: &RepnAction) -> RepnAction {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.field, other.field);
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| a.kron(b))
            .collect();
        RepnAction {
            degree: self.degree,
            dim: self.dim * other.dim,
            field: self.field,
            gens,
        }
    }

    /// Trace on a canonical representative of the given conjugacy class.
    pub fn trace_on_class(&self, cycle_type: &Partition) -> Scalar {
        self.act(&class_representative(cycle_type, self.degree))
            .trace()
    }
}

fn first_descent(p: &Perm) -> Option<usize> {
    (0..p.degree().saturating_sub(1)).find(|&i| p.apply(i) > p.apply(i + 1))
}

/// A canonical representative of the conjugacy class with the given cycle
/// type: consecutive cycles on consecutive letters.
pub fn class_representative(cycle_type: &Partition, degree: usize) -> Perm {
    assert_eq!(cycle_type.size() as usize, degree);
    let mut word: Vec<u8> = (0..degree as u8).collect();
    let mut start = 0usize;
    for &len in cycle_type.parts() {
        let len = len as usize;
        for k in 0..len {
            word[start + k] = (start + (k + 1) % len) as u8;
        }
        start += len;
    }
    Perm::from_word(word)
}

/// The trivial one-dimensional action.
pub fn trivial_action(n: usize, field: FieldKind) -> RepnAction {
    let gens = vec![Mat::identity(1, field); n.saturating_sub(1)];
    RepnAction::new(n, 1, field, gens)
}

/// The sign one-dimensional action.
pub fn sign_action(n: usize, field: FieldKind) -> RepnAction {
    let mut m = Mat::identity(1, field);
    m.set(0, 0, field.from_i64(-1));
    let gens = vec![m; n.saturating_sub(1)];
    RepnAction::new(n, 1, field, gens)
}

/// The left regular module as an explicit action on the permutation basis.
pub fn regular_action(n: usize, field: FieldKind) -> RepnAction {
    assert!(n >= 1);
    let perms = all_perms(n);
    let dim = perms.len();
    let mut gens = Vec::new();
    for g in 0..n.saturating_sub(1) {
        let s = Perm::adjacent_transposition(n, g);
        let mut m = Mat::zero(dim, dim, field);
        for (c, sigma) in perms.iter().enumerate() {
            m.set(s.compose(sigma).lex_rank(), c, field.one());
        }
        gens.push(m);
    }
    RepnAction::new(n, dim, field, gens)
}

// ---------------------------------------------------------------------------
// Specht modules
// ---------------------------------------------------------------------------

/// Row tabloid of a given shape: rows as sorted sets of letters.
type Tabloid = Vec<Vec<u8>>;

fn tabloid_of_tableau(t: &[Vec<u8>]) -> Tabloid {
    let mut rows: Tabloid = t.to_vec();
    for r in &mut rows {
        r.sort_unstable();
    }
    rows
}

fn enumerate_tabloids(shape: &Partition) -> Vec<Tabloid> {
    fn go(shape: &[u32], avail: &[u8], acc: &mut Vec<Vec<u8>>, out: &mut Vec<Tabloid>) {
        if shape.is_empty() {
            out.push(acc.clone());
            return;
        }
        let k = shape[0] as usize;
        let m = avail.len();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let row: Vec<u8> = idx.iter().map(|&i| avail[i]).collect();
            let rest: Vec<u8> = avail
                .iter()
                .enumerate()
                .filter(|(i, _)| !idx.contains(i))
                .map(|(_, &v)| v)
                .collect();
            acc.push(row);
            go(&shape[1..], &rest, acc, out);
            acc.pop();
            // next k-combination of 0..m
            let mut i = k;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                if idx[i] != i + m - k {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    let n = shape.size() as usize;
    let letters: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::new();
    go(shape.parts(), &letters, &mut Vec::new(), &mut out);
    out
}

/// Standard Young tableaux of the given shape (letters 0-based), rows and
/// columns increasing.
pub fn standard_tableaux(shape: &Partition) -> Vec<Vec<Vec<u8>>> {
    fn go(
        next: usize,
        n: usize,
        shape: &Partition,
        fill: &mut Vec<Vec<u8>>,
        out: &mut Vec<Vec<Vec<u8>>>,
    ) {
        if next == n {
            out.push(fill.clone());
            return;
        }
        for r in 0..fill.len() {
            let c = fill[r].len();
            if c as u32 >= shape.row(r) {
                continue;
            }
            if r > 0 && fill[r - 1].len() <= c {
                continue;
            }
            fill[r].push(next as u8);
            go(next + 1, n, shape, fill, out);
            fill[r].pop();
        }
    }
    let n = shape.size() as usize;
    let mut fill: Vec<Vec<u8>> = (0..shape.len()).map(|_| Vec::new()).collect();
    let mut out = Vec::new();
    go(0, n, shape, &mut fill, &mut out);
    out
}

/// Sign-weighted column-stabiliser substitutions of a tableau.
fn column_group(t: &[Vec<u8>], shape: &Partition) -> Vec<(BTreeMap<u8, u8>, i64)> {
    let ncols = shape.row(0) as usize;
    let mut columns: Vec<Vec<u8>> = vec![Vec::new(); ncols];
    for row in t {
        for (c, &v) in row.iter().enumerate() {
            columns[c].push(v);
        }
    }
    let mut result: Vec<(BTreeMap<u8, u8>, i64)> = vec![(BTreeMap::new(), 1)];
    for col in &columns {
        let perms = all_perms(col.len());
        let mut next = Vec::with_capacity(result.len() * perms.len());
        for (map, sign) in &result {
            for p in &perms {
                let mut m = map.clone();
                for (i, &v) in col.iter().enumerate() {
                    m.insert(v, col[p.apply(i)]);
                }
                next.push((m, sign * p.sign()));
            }
        }
        result = next;
    }
    result
}

/// The polytabloid of a tableau as a vector in tabloid coordinates.
fn polytabloid(
    t: &[Vec<u8>],
    shape: &Partition,
    index: &BTreeMap<Tabloid, usize>,
    field: FieldKind,
) -> Vec<Scalar> {
    let mut v = vec![field.zero(); index.len()];
    for (map, sign) in column_group(t, shape) {
        let image: Vec<Vec<u8>> = t
            .iter()
            .map(|row| row.iter().map(|x| *map.get(x).unwrap_or(x)).collect())
            .collect();
        let tab = tabloid_of_tableau(&image);
        let idx = index[&tab];
        v[idx] = v[idx].add(&field.from_i64(sign));
    }
    v
}

struct SpechtBasis {
    tabloids: Vec<Tabloid>,
    index: BTreeMap<Tabloid, usize>,
    basis: Vec<Vec<Scalar>>,
}

fn specht_basis(shape: &Partition) -> SpechtBasis {
    let q = FieldKind::Rational;
    let tabloids = enumerate_tabloids(shape);
    let index: BTreeMap<Tabloid, usize> = tabloids
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let basis: Vec<Vec<Scalar>> = standard_tableaux(shape)
        .iter()
        .map(|t| polytabloid(t, shape, &index, q))
        .collect();
    SpechtBasis {
        tabloids,
        index,
        basis,
    }
}

/// Generator matrices of the Specht module on the standard polytabloid
/// basis, over the rationals. All entries come out integral, so the same
/// matrices define the module over any field.
fn specht_generators_rational(shape: &Partition) -> (usize, Vec<Mat>) {
    let q = FieldKind::Rational;
    let n = shape.size() as usize;
    let sb = specht_basis(shape);
    let dim = sb.basis.len();

    // The tabloid permutation action sends coordinate t to sigma(t), and the
    // polytabloid of sigma T is exactly the permuted vector of T's, so the
    // generator image of each basis vector is a coordinate shuffle.
    let mut gens = Vec::new();
    for g in 0..n.saturating_sub(1) {
        let s = Perm::adjacent_transposition(n, g);
        let mut perm_of_tabloid = vec![0usize; sb.tabloids.len()];
        for (i, tab) in sb.tabloids.iter().enumerate() {
            let image: Tabloid = tab
                .iter()
                .map(|row| {
                    let mut r: Vec<u8> =
                        row.iter().map(|&x| s.apply(x as usize) as u8).collect();
                    r.sort_unstable();
                    r
                })
                .collect();
            perm_of_tabloid[i] = sb.index[&image];
        }
        let targets: Vec<Vec<Scalar>> = sb
            .basis
            .iter()
            .map(|v| {
                let mut w = vec![q.zero(); v.len()];
                for (i, val) in v.iter().enumerate() {
                    if !val.is_zero() {
                        w[perm_of_tabloid[i]] = val.clone();
                    }
                }
                w
            })
            .collect();
        let coeffs = solve_in_basis(&sb.basis, &targets, q);
        let mut m = Mat::zero(dim, dim, q);
        for (col, coeff) in coeffs.iter().enumerate() {
            for (row, val) in coeff.iter().enumerate() {
                assert!(
                    val.to_integer().is_some(),
                    "polytabloid straightening must be integral"
                );
                m.set(row, col, val.clone());
            }
        }
        gens.push(m);
    }
    (dim, gens)
}

fn map_matrix_to_field(m: &Mat, field: FieldKind) -> Mat {
    match field {
        FieldKind::Rational => m.clone(),
        FieldKind::Prime(p) => {
            let mut out = Mat::zero(m.rows, m.cols, field);
            for r in 0..m.rows {
                for c in 0..m.cols {
                    out.set(r, c, m.get(r, c).reduce_mod(p));
                }
            }
            out
        }
    }
}

/// The Specht module action on the standard polytabloid basis. The
/// construction is integral and hence valid over every field; over the
/// rationals it realises the simple module labelled by the shape.
pub fn specht_action(shape: &Partition, field: FieldKind) -> RepnAction {
    assert!(shape.size() >= 1, "need a nonempty shape");
    let (dim, gens_q) = specht_generators_rational(shape);
    let gens = gens_q
        .iter()
        .map(|m| map_matrix_to_field(m, field))
        .collect();
    RepnAction::new(shape.size() as usize, dim, field, gens)
}

/// Gram matrix of the canonical bilinear form on the standard polytabloid
/// basis (tabloids are orthonormal).
fn specht_gram(shape: &Partition, field: FieldKind) -> Mat {
    let q = FieldKind::Rational;
    let sb = specht_basis(shape);
    let f = sb.basis.len();
    let mut g = Mat::zero(f, f, q);
    for i in 0..f {
        for j in 0..f {
            let mut acc = q.zero();
            for t in 0..sb.tabloids.len() {
                if !sb.basis[i][t].is_zero() && !sb.basis[j][t].is_zero() {
                    acc = acc.add(&sb.basis[i][t].mul(&sb.basis[j][t]));
                }
            }
            g.set(i, j, acc);
        }
    }
    map_matrix_to_field(&g, field)
}

/// Errors from representation constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepError {
    NotPRegular(Partition, u32),
    SizeMismatch,
}

impl core::fmt::Display for RepError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            RepError::NotPRegular(lam, p) => write!(f, "partition {lam} is not {p}-regular"),
            RepError::SizeMismatch => write!(f, "partition sizes are incompatible"),
        }
    }
}

/// The modular simple module: the Specht module modulo the radical of its
/// canonical bilinear form over the prime field.
pub fn modular_simple(shape: &Partition, p: u32) -> Result<RepnAction, RepError> {
    if !shape.is_p_regular(p) {
        return Err(RepError::NotPRegular(shape.clone(), p));
    }
    let field = FieldKind::Prime(p);
    let specht = specht_action(shape, field);
    let gram = specht_gram(shape, field);
    let radical = Subspace::kernel_of_functionals(gram.data.clone(), specht.dim(), field);
    let (gens, dim) = quotient_action_matrices(specht.generators(), &radical, field);
    assert!(
        dim > 0,
        "simple quotient of a p-regular Specht module is nonzero"
    );
    Ok(RepnAction::new(shape.size() as usize, dim, field, gens))
}

/// Matrices induced on the quotient by an invariant subspace: generator
/// images on the free coordinates, plus the quotient dimension.
pub fn quotient_action_matrices(
    gens: &[Mat],
    sub: &Subspace,
    field: FieldKind,
) -> (Vec<Mat>, usize) {
    let free = sub.free_coordinates();
    let dim = free.len();
    let ambient = sub.ambient();
    for b in sub.basis() {
        for g in gens {
            let mut img = vec![field.zero(); ambient];
            for (j, coef) in b.iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                for r in 0..ambient {
                    let e = g.get(r, j);
                    if !e.is_zero() {
                        img[r] = img[r].add(&coef.mul(e));
                    }
                }
            }
            assert!(sub.contains(&img), "subspace is not invariant");
        }
    }
    let mut out = Vec::new();
    for g in gens {
        let mut m = Mat::zero(dim, dim, field);
        for (qc, &f) in free.iter().enumerate() {
            let col: Vec<Scalar> = (0..ambient).map(|r| g.get(r, f).clone()).collect();
            let red = sub.reduce(&col);
            for (qr, &fr) in free.iter().enumerate() {
                if !red[fr].is_zero() {
                    m.set(qr, qc, red[fr].clone());
                }
            }
        }
        out.push(m);
    }
    (out, dim)
}

// ---------------------------------------------------------------------------
// Ordinary characters (border-strip recursion)
// ---------------------------------------------------------------------------

/// Value of the ordinary irreducible character labelled by `lambda` on the
/// class with the given cycle type, by the border-strip recursion on
/// beta-sets.
pub fn character_value(lambda: &Partition, cycle_type: &Partition) -> i64 {
    assert_eq!(
        lambda.size(),
        cycle_type.size(),
        "character argument size mismatch"
    );
    fn go(betas: &mut Vec<i64>, parts: &[u32]) -> i64 {
        let Some((&k, rest)) = parts.split_first() else {
            return 1;
        };
        let k = k as i64;
        let mut total = 0i64;
        for i in 0..betas.len() {
            let b = betas[i];
            if b < k || betas.contains(&(b - k)) {
                continue;
            }
            let height = betas.iter().filter(|&&x| b - k < x && x < b).count();
            let sign = if height % 2 == 0 { 1 } else { -1 };
            betas[i] = b - k;
            total += sign * go(betas, rest);
            betas[i] = b;
        }
        total
    }
    let len = lambda.len().max(1);
    let mut betas: Vec<i64> = (0..len)
        .map(|i| lambda.row(i) as i64 + (len - 1 - i) as i64)
        .collect();
    go(&mut betas, cycle_type.parts())
}

/// One row of the ordinary character table: values on all cycle types,
/// in the order produced by [`partitions_of`].
pub fn character_row(lambda: &Partition) -> Vec<i64> {
    partitions_of(lambda.size())
        .iter()
        .map(|ct| character_value(lambda, ct))
        .collect()
}

/// Multiplicity of the third simple in the inner tensor product of the
/// first two, over the rationals, by the triple character inner product.
pub fn kronecker_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let n = lambda.size();
    assert!(mu.size() == n && nu.size() == n, "sizes must agree");
    let mut acc: i64 = 0;
    for class in partitions_of(n) {
        acc += class.class_size() as i64
            * character_value(lambda, &class)
            * character_value(mu, &class)
            * character_value(nu, &class);
    }
    let order = factorial(n as usize) as i64;
    assert!(acc >= 0 && acc % order == 0, "inner product must be a nonnegative integer");
    (acc / order) as u64
}

// ---------------------------------------------------------------------------
// Brauer characters and constituents
// ---------------------------------------------------------------------------

fn divisors(k: u64) -> Vec<u64> {
    (1..=k).filter(|x| k.is_multiple_of(*x)).collect()
}

fn moebius(mut n: u64) -> i64 {
    let mut mu = 1i64;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm_of_parts(cycle_type: &Partition) -> u64 {
    cycle_type
        .parts()
        .iter()
        .fold(1u64, |acc, &p| acc / gcd(acc, p as u64) * p as u64)
}

/// A conjugacy class is p-regular when the element order is coprime to p.
pub fn is_p_regular_class(cycle_type: &Partition, p: u32) -> bool {
    cycle_type.parts().iter().all(|&part| part % p != 0)
}

fn scalar_to_u64(s: &Scalar) -> u64 {
    let as_int = s.to_integer().expect("value must be integral");
    let (sign, digits) = as_int.to_u32_digits();
    assert!(sign != num_bigint::Sign::Minus, "value must be nonnegative");
    match digits.len() {
        0 => 0,
        1 => digits[0] as u64,
        2 => digits[0] as u64 | (digits[1] as u64) << 32,
        _ => panic!("value out of range"),
    }
}

/// Brauer character value of an action over a prime field on a p-regular
/// class, as a rational integer.
///
/// The class matrix is semisimple with root-of-unity eigenvalues of order
/// dividing the element order `k`; kernel dimensions of `rho^d - 1` over the
/// prime field recover the multiplicity of each eigenvalue order. Symmetric
/// group classes are closed under coprime powers, so multiplicities are
/// constant on the primitive d-th roots and the lifted trace collapses to an
/// integer via the Moebius function.
pub fn brauer_character_value(action: &RepnAction, cycle_type: &Partition) -> i64 {
    let p = match action.field() {
        FieldKind::Prime(p) => p,
        FieldKind::Rational => panic!("Brauer characters require a prime field"),
    };
    assert!(is_p_regular_class(cycle_type, p), "class must be p-regular");
    let rho = action.act(&class_representative(cycle_type, action.degree()));
    let k = lcm_of_parts(cycle_type);
    let divs = divisors(k);
    let minus_id = Mat::identity(action.dim(), action.field()).scale(&action.field().from_i64(-1));
    let mut kernel_dim: BTreeMap<u64, i64> = BTreeMap::new();
    for &d in &divs {
        let m = rho.pow(d as usize).add(&minus_id);
        kernel_dim.insert(d, (action.dim() - m.rank()) as i64);
    }
    let mut value = 0i64;
    for &d in &divs {
        let mut exact_order_count = 0i64;
        for &e in divisors(d).iter() {
            exact_order_count += moebius(d / e) * kernel_dim[&e];
        }
        let phi = euler_phi(d) as i64;
        assert!(
            exact_order_count % phi == 0,
            "eigenvalue orbits must have full size"
        );
        value += (exact_order_count / phi) * moebius(d);
    }
    value
}

/// All p-regular partitions of `n` (labels of the modular simples).
pub fn p_regular_partitions(n: u32, p: u32) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|l| l.is_p_regular(p))
        .collect()
}

/// All p-regular cycle types of `n`.
pub fn p_regular_classes(n: u32, p: u32) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|c| is_p_regular_class(c, p))
        .collect()
}

/// Composition multiplicities of the simple modules in an action.
///
/// Over the rationals this is ordinary character decomposition; over a prime
/// field the Brauer trace on p-regular classes is decomposed against the
/// Brauer characters of the modular simples. The simple system is always
/// solvable; failure indicates a bug upstream.
pub fn brauer_constituents(action: &RepnAction) -> BTreeMap<Partition, u64> {
    let n = action.degree() as u32;
    match action.field() {
        FieldKind::Rational => {
            let q = FieldKind::Rational;
            let classes = partitions_of(n);
            let fact = q.from_i64(factorial(n as usize) as i64);
            let traces: Vec<Scalar> = classes.iter().map(|c| action.trace_on_class(c)).collect();
            let mut out = BTreeMap::new();
            for lam in partitions_of(n) {
                let mut acc = q.zero();
                for (c, tr) in classes.iter().zip(&traces) {
                    let weight = q
                        .from_i64(c.class_size() as i64)
                        .mul(&q.from_i64(character_value(&lam, c)));
                    acc = acc.add(&weight.mul(tr));
                }
                let m = scalar_to_u64(&acc.div(&fact));
                if m > 0 {
                    out.insert(lam, m);
                }
            }
            out
        }
        FieldKind::Prime(p) => {
            let labels = p_regular_partitions(n, p);
            let classes = p_regular_classes(n, p);
            assert_eq!(labels.len(), classes.len());
            let q = FieldKind::Rational;
            let basis_cols: Vec<Vec<Scalar>> = labels
                .iter()
                .map(|lam| {
                    let simple = modular_simple(lam, p).expect("p-regular label");
                    classes
                        .iter()
                        .map(|c| q.from_i64(brauer_character_value(&simple, c)))
                        .collect()
                })
                .collect();
            let target_col: Vec<Scalar> = classes
                .iter()
                .map(|c| q.from_i64(brauer_character_value(action, c)))
                .collect();
            let solution = solve_in_basis(&basis_cols, &[target_col], q);
            let mut out = BTreeMap::new();
            for (lam, coeff) in labels.iter().zip(&solution[0]) {
                let m = scalar_to_u64(coeff);
                if m > 0 {
                    out.insert(lam.clone(), m);
                }
            }
            out
        }
    }
}

// ---------------------------------------------------------------------------
// Restriction multiplicities
// ---------------------------------------------------------------------------

/// Composition multiplicity of the outer product of two simples in the
/// restriction of a simple of the combined group to the Young subgroup.
///
/// Over the rationals computed by character inner products (independently of
/// the tableau enumeration route); over a prime field by Brauer characters
/// on pairs of p-regular classes.
pub fn restriction_multiplicity(
    kappa: &Partition,
    lambda: &Partition,
    mu: &Partition,
    field: FieldKind,
) -> Result<u64, RepError> {
    let m = lambda.size();
    let n = mu.size();
    if kappa.size() != m + n {
        return Err(RepError::SizeMismatch);
    }
    match field {
        FieldKind::Rational => {
            let q = FieldKind::Rational;
            let mut acc = q.zero();
            for c1 in partitions_of(m) {
                for c2 in partitions_of(n) {
                    let mut joined: Vec<u32> = c1.parts().to_vec();
                    joined.extend_from_slice(c2.parts());
                    let joint = Partition::from_unsorted(joined);
                    let w = (c1.class_size() as i64) * (c2.class_size() as i64);
                    let term = q.from_i64(w).mul(&q.from_i64(
                        character_value(kappa, &joint)
                            * character_value(lambda, &c1)
                            * character_value(mu, &c2),
                    ));
                    acc = acc.add(&term);
                }
            }
            let denom = q.from_i64((factorial(m as usize) * factorial(n as usize)) as i64);
            Ok(scalar_to_u64(&acc.div(&denom)))
        }
        FieldKind::Prime(p) => {
            if !kappa.is_p_regular(p) {
                return Err(RepError::NotPRegular(kappa.clone(), p));
            }
            if !lambda.is_p_regular(p) {
                return Err(RepError::NotPRegular(lambda.clone(), p));
            }
            if !mu.is_p_regular(p) {
                return Err(RepError::NotPRegular(mu.clone(), p));
            }
            let big = modular_simple(kappa, p)?;
            let labels_l = p_regular_partitions(m, p);
            let labels_r = p_regular_partitions(n, p);
            let classes_l = p_regular_classes(m, p);
            let classes_r = p_regular_classes(n, p);
            let rows_l: Vec<Vec<i64>> = labels_l
                .iter()
                .map(|l| {
                    let s = modular_simple(l, p).unwrap();
                    classes_l
                        .iter()
                        .map(|c| brauer_character_value(&s, c))
                        .collect()
                })
                .collect();
            let rows_r: Vec<Vec<i64>> = labels_r
                .iter()
                .map(|l| {
                    let s = modular_simple(l, p).unwrap();
                    classes_r
                        .iter()
                        .map(|c| brauer_character_value(&s, c))
                        .collect()
                })
                .collect();
            // Brauer trace of the restricted module on the pair (a, b): the
            // Young-subgroup element with those cycle lengths is conjugate in
            // the big group to the canonical representative of the merged
            // type, and Brauer values are class functions.
            let q = FieldKind::Rational;
            let mut target_col = Vec::new();
            for ca in &classes_l {
                for cb in &classes_r {
                    let mut joined: Vec<u32> = ca.parts().to_vec();
                    joined.extend_from_slice(cb.parts());
                    let joint = Partition::from_unsorted(joined);
                    target_col.push(q.from_i64(brauer_character_value(&big, &joint)));
                }
            }
            let mut basis_cols = Vec::new();
            let mut pair_labels = Vec::new();
            for (il, ll) in labels_l.iter().enumerate() {
                for (ir, lr) in labels_r.iter().enumerate() {
                    let mut col = Vec::new();
                    for a in 0..classes_l.len() {
                        for b in 0..classes_r.len() {
                            col.push(q.from_i64(rows_l[il][a] * rows_r[ir][b]));
                        }
                    }
                    basis_cols.push(col);
                    pair_labels.push((ll.clone(), lr.clone()));
                }
            }
            let solution = solve_in_basis(&basis_cols, &[target_col], q);
            let mut result = 0u64;
            for (k, (ll, lr)) in pair_labels.iter().enumerate() {
                if ll == lambda && lr == mu {
                    result = scalar_to_u64(&solution[0][k]);
                }
            }
            Ok(result)
        }
    }
}

// ---------------------------------------------------------------------------
// Induced and superspace actions
// ---------------------------------------------------------------------------

/// Minimal-length coset representatives of the Young subgroup `S_i x S_j`
/// inside `S_{i+j}`, indexed by the image subset of the first block, subsets
/// in lexicographic order.
fn shuffle_cosets(n: usize, i: usize) -> Vec<(Vec<u8>, Perm)> {
    if i == 0 || i == n {
        return vec![(
            (0..i as u8).collect(),
            Perm::identity(n),
        )];
    }
    let mut out = Vec::new();
    let mut subset: Vec<u8> = (0..i as u8).collect();
    loop {
        let mut word = subset.clone();
        let chosen: BTreeSet<u8> = subset.iter().copied().collect();
        word.extend((0..n as u8).filter(|x| !chosen.contains(x)));
        out.push((subset.clone(), Perm::from_word(word)));
        let mut k = i;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if subset[k] != (k + n - i) as u8 {
                subset[k] += 1;
                for j in k + 1..i {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The module induced from an outer tensor product over the Young subgroup,
/// on the basis of minimal-length coset representatives tensored with the
/// factor bases.
pub fn induced_action(left: &RepnAction, right: &RepnAction) -> RepnAction {
    assert_eq!(left.field(), right.field());
    let i = left.degree();
    let j = right.degree();
    let n = i + j;
    assert!(n >= 1);
    let field = left.field();
    let cosets = shuffle_cosets(n, i);
    let coset_index: BTreeMap<Vec<u8>, usize> = cosets
        .iter()
        .enumerate()
        .map(|(k, (s, _))| (s.clone(), k))
        .collect();
    let d1 = left.dim();
    let d2 = right.dim();
    let dim = cosets.len() * d1 * d2;
    let mut gens = Vec::new();
    for g in 0..n - 1 {
        let s = Perm::adjacent_transposition(n, g);
        let mut m = Mat::zero(dim, dim, field);
        for (ci, (_, c)) in cosets.iter().enumerate() {
            let sc = s.compose(c);
            let mut image_subset: Vec<u8> = (0..i).map(|x| sc.apply(x) as u8).collect();
            image_subset.sort_unstable();
            let ci2 = coset_index[&image_subset];
            let c2 = &cosets[ci2].1;
            let u = c2.inverse().compose(&sc);
            let a = Perm::from_word((0..i).map(|x| u.apply(x) as u8).collect());
            let b = Perm::from_word((i..n).map(|x| (u.apply(x) - i) as u8).collect());
            let ma = left.act(&a);
            let mb = right.act(&b);
            for x_new in 0..d1.max(1) {
                for x_old in 0..d1.max(1) {
                    let va = if d1 == 0 { field.zero() } else { ma.get(x_new, x_old).clone() };
                    if d1 != 0 && va.is_zero() {
                        continue;
                    }
                    for y_new in 0..d2.max(1) {
                        for y_old in 0..d2.max(1) {
                            if d1 == 0 || d2 == 0 {
                                continue;
                            }
                            let vb = mb.get(y_new, y_old);
                            if vb.is_zero() {
                                continue;
                            }
                            let row = (ci2 * d1 + x_new) * d2 + y_new;
                            let col = (ci * d1 + x_old) * d2 + y_old;
                            m.set(row, col, va.mul(vb));
                        }
                    }
                }
            }
        }
        gens.push(m);
    }
    RepnAction::new(n, dim, field, gens)
}

/// The signed permutation action of the symmetric group on tensor powers of
/// a graded space with `m` even and `n_odd` odd basis letters: transposing
/// two odd letters picks up a sign.
pub fn superspace_action(
    m: usize,
    n_odd: usize,
    tensor_power: usize,
    field: FieldKind,
) -> RepnAction {
    assert!(m + n_odd >= 1);
    assert!(tensor_power >= 1);
    let letters = m + n_odd;
    let dim = letters.pow(tensor_power as u32);
    let mut gens = Vec::new();
    for g in 0..tensor_power.saturating_sub(1) {
        let mut mat = Mat::zero(dim, dim, field);
        for w in 0..dim {
            let word = unrank_word(w, letters, tensor_power);
            let mut img = word.clone();
            img.swap(g, g + 1);
            let both_odd = word[g] >= m && word[g + 1] >= m;
            let sign = if both_odd { -1 } else { 1 };
            mat.set(rank_word(&img, letters), w, field.from_i64(sign));
        }
        gens.push(mat);
    }
    RepnAction::new(tensor_power, dim, field, gens)
}

fn unrank_word(mut r: usize, letters: usize, len: usize) -> Vec<usize> {
    let mut w = vec![0usize; len];
    for k in (0..len).rev() {
        w[k] = r % letters;
        r /= letters;
    }
    w
}

fn rank_word(w: &[usize], letters: usize) -> usize {
    w.iter().fold(0usize, |acc, &x| acc * letters + x)
}

// ---------------------------------------------------------------------------
// Sparse action tables and annihilators
// ---------------------------------------------------------------------------

/// Sparse matrix as (row, col, value) triplets.
#[derive(Debug, Clone)]
pub struct SparseMat {
    pub dim: usize,
    pub entries: Vec<(u32, u32, Scalar)>,
}

/// The matrices of every permutation of the group, stored sparsely and
/// indexed by lexicographic rank: the input format for annihilator kernels.
pub struct ActionTable {
    pub degree: usize,
    pub dim: usize,
    pub field: FieldKind,
    pub mats: Vec<SparseMat>,
}

impl ActionTable {
    pub fn from_action(action: &RepnAction) -> Self {
        let mats = action
            .full_table()
            .into_iter()
            .map(|m| {
                let mut entries = Vec::new();
                for r in 0..m.rows {
                    for c in 0..m.cols {
                        if !m.get(r, c).is_zero() {
                            entries.push((r as u32, c as u32, m.get(r, c).clone()));
                        }
                    }
                }
                SparseMat {
                    dim: m.rows,
                    entries,
                }
            })
            .collect();
        ActionTable {
            degree: action.degree(),
            dim: action.dim(),
            field: action.field(),
            mats,
        }
    }

    /// Direct construction for the signed permutation action on tensor
    /// powers: one nonzero per column, so the table stays linear in the
    /// number of basis words even for large powers.
    pub fn superspace(m: usize, n_odd: usize, tensor_power: usize, field: FieldKind) -> Self {
        assert!(m + n_odd >= 1);
        let letters = m + n_odd;
        let dim = letters.pow(tensor_power as u32);
        let perms = all_perms(tensor_power);
        let mut mats = Vec::with_capacity(perms.len());
        for sigma in &perms {
            let inv = sigma.inverse();
            let mut entries = Vec::with_capacity(dim);
            for w in 0..dim {
                let word = unrank_word(w, letters, tensor_power);
                // slot k of the image holds the letter from slot inv(k)
                let img: Vec<usize> = (0..tensor_power).map(|k| word[inv.apply(k)]).collect();
                // Koszul sign: each pair of odd letters whose order flips
                let mut sign = 1i64;
                for a in 0..tensor_power {
                    for b in a + 1..tensor_power {
                        if sigma.apply(a) > sigma.apply(b) && word[a] >= m && word[b] >= m {
                            sign = -sign;
                        }
                    }
                }
                entries.push((
                    rank_word(&img, letters) as u32,
                    w as u32,
                    field.from_i64(sign),
                ));
            }
            mats.push(SparseMat { dim, entries });
        }
        ActionTable {
            degree: tensor_power,
            dim,
            field,
            mats,
        }
    }

    /// Entrywise tensor product (diagonal action on the tensor module).
    pub fn tensor(&self, other: &ActionTable) -> ActionTable {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.field, other.field);
        let dim = self.dim * other.dim;
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| {
                let mut entries = Vec::with_capacity(a.entries.len() * b.entries.len());
                for (r1, c1, v1) in &a.entries {
                    for (r2, c2, v2) in &b.entries {
                        entries.push((
                            r1 * other.dim as u32 + r2,
                            c1 * other.dim as u32 + c2,
                            v1.mul(v2),
                        ));
                    }
                }
                SparseMat { dim, entries }
            })
            .collect();
        ActionTable {
            degree: self.degree,
            dim,
            field: self.field,
            mats,
        }
    }

    /// The common kernel of all assignments `x -> rho(x)`: the annihilator
    /// of the module inside the group algebra, as a canonical subspace in
    /// permutation coordinates.
    pub fn annihilator(&self) -> Subspace {
        let order = factorial(self.degree);
        assert_eq!(self.mats.len(), order);
        if self.dim == 0 {
            return Subspace::full(order, self.field);
        }
        let mut constraints: BTreeMap<(u32, u32), Vec<(usize, Scalar)>> = BTreeMap::new();
        for (sigma, m) in self.mats.iter().enumerate() {
            for (r, c, v) in &m.entries {
                constraints
                    .entry((*r, *c))
                    .or_default()
                    .push((sigma, v.clone()));
            }
        }
        let mut acc = KernelAccumulator::new(order, self.field);
        for (_, sparse) in constraints {
            acc.add_constraint(&sparse);
        }
        acc.into_subspace()
    }
}

/// The annihilator of a module: the kernel of the algebra map into its
/// endomorphism ring, inside the group algebra of the acting group.
pub fn annihilator_subspace(action: &RepnAction) -> Subspace {
    ActionTable::from_action(action).annihilator()
}
