//! Exact dense linear algebra over the configured field: reduced row echelon
//! forms, canonical subspaces, kernels and quotient actions.
//!
//! Subspace bases are always kept in reduced row echelon form with pivots in
//! increasing column order, so subspace equality is matrix equality and
//! serialised bases are bit-stable.

use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::{FieldKind, Scalar};

/// A dense matrix with rows as vectors of scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Scalar>>,
    pub field: FieldKind,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize, field: FieldKind) -> Self {
        Mat {
            rows,
            cols,
            data: vec![vec![field.zero(); cols]; rows],
            field,
        }
    }

    pub fn identity(n: usize, field: FieldKind) -> Self {
        let mut m = Mat::zero(n, n, field);
        for i in 0..n {
            m.data[i][i] = field.one();
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<Scalar>>, cols: usize, field: FieldKind) -> Self {
        for r in &data {
            assert_eq!(r.len(), cols);
        }
        Mat {
            rows: data.len(),
            cols,
            data,
            field,
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r][c] = v;
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i][j] = out.data[i][j].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i][j] = out.data[i][j].add(&other.data[i][j]);
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        let mut out = self.clone();
        for row in &mut out.data {
            for v in row {
                *v = v.mul(c);
            }
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut t = self.field.zero();
        for i in 0..self.rows {
            t = t.add(&self.data[i][i]);
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(|v| v.is_zero()))
    }

    /// Kronecker (tensor) product.
    pub fn kron(&self, other: &Mat) -> Mat {
        let mut out = Mat::zero(self.rows * other.rows, self.cols * other.cols, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self.data[i][j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other.data[k][l];
                        if b.is_zero() {
                            continue;
                        }
                        out.data[i * other.rows + k][j * other.cols + l] = a.mul(b);
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Mat) -> Mat {
        let mut out = Mat::zero(self.rows + other.rows, self.cols + other.cols, self.field);
        for i in 0..self.rows {
            out.data[i][..self.cols].clone_from_slice(&self.data[i]);
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.data[self.rows + i][self.cols + j] = other.data[i][j].clone();
            }
        }
        out
    }

    /// Matrix power by repeated multiplication.
    pub fn pow(&self, k: usize) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut acc = Mat::identity(self.rows, self.field);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Rank via row reduction (the matrix is consumed by value).
    pub fn rank(mut self) -> usize {
        rref_in_place(&mut self.data, self.cols).len()
    }
}

/// In-place reduced row echelon form. Returns the pivot columns in order;
/// zero rows are dropped. Deterministic: the first nonzero candidate row is
/// always chosen as the pivot.
pub fn rref_in_place(rows: &mut Vec<Vec<Scalar>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = rows[r][c].inv();
        for j in c..cols {
            if !rows[r][j].is_zero() {
                rows[r][j] = rows[r][j].mul(&inv);
            }
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in c..cols {
                    if !rows[r][j].is_zero() {
                        rows[i][j] = rows[i][j].sub(&factor.mul(&rows[r][j]));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// A linear subspace of a coordinate space, stored as a reduced row echelon
/// basis. Row order follows pivot columns, so equal subspaces have equal
/// representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    field: FieldKind,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize, field: FieldKind) -> Self {
        Subspace {
            ambient,
            field,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize, field: FieldKind) -> Self {
        Subspace::from_rows(
            (0..ambient)
                .map(|i| {
                    let mut v = vec![field.zero(); ambient];
                    v[i] = field.one();
                    v
                })
                .collect(),
            ambient,
            field,
        )
    }

    /// Builds the row space of the given spanning vectors.
    pub fn from_rows(mut rows: Vec<Vec<Scalar>>, ambient: usize, field: FieldKind) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ambient);
        }
        let pivots = rref_in_place(&mut rows, ambient);
        Subspace {
            ambient,
            field,
            basis: rows,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates without a pivot, indexing a basis of the quotient space.
    pub fn free_coordinates(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// Reduces a vector modulo the subspace; the result has zeros in all
    /// pivot coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for j in p..self.ambient {
                if !row[j].is_zero() {
                    out[j] = out[j].sub(&factor.mul(&row[j]));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::from_rows(rows, self.ambient, self.field)
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let n = self.ambient;
        let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(self.dim() + other.dim());
        for v in &self.basis {
            let mut row = v.clone();
            row.extend(v.iter().cloned());
            rows.push(row);
        }
        for v in &other.basis {
            let mut row = v.clone();
            row.extend(vec![self.field.zero(); n]);
            rows.push(row);
        }
        rref_in_place(&mut rows, 2 * n);
        let inter_rows: Vec<Vec<Scalar>> = rows
            .into_iter()
            .filter(|r| r[..n].iter().all(|x| x.is_zero()))
            .map(|r| r[n..].to_vec())
            .collect();
        Subspace::from_rows(inter_rows, n, self.field)
    }

    /// Intersection of many subspaces, smallest first to shrink early.
    pub fn intersect_all(mut spaces: Vec<Subspace>) -> Subspace {
        assert!(!spaces.is_empty());
        spaces.sort_by_key(|s| s.dim());
        let mut acc = spaces.remove(0);
        for s in spaces {
            if acc.dim() == 0 {
                break;
            }
            acc = acc.intersect(&s);
        }
        acc
    }

    /// The common kernel of a list of linear functionals on the ambient space.
    pub fn kernel_of_functionals(
        functionals: Vec<Vec<Scalar>>,
        ambient: usize,
        field: FieldKind,
    ) -> Subspace {
        let mut ker = KernelAccumulator::new(ambient, field);
        for f in functionals {
            let sparse: Vec<(usize, Scalar)> = f
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect();
            ker.add_constraint(&sparse);
        }
        ker.into_subspace()
    }
}

/// Incrementally intersects the full space with constraint hyperplanes.
///
/// Constraints arrive as sparse functionals; the accumulator keeps a basis
/// of the current solution space and reduces it by one dimension per novel
/// constraint. This keeps annihilator computations linear in the number of
/// nonzero action-matrix entries.
pub struct KernelAccumulator {
    ambient: usize,
    field: FieldKind,
    basis: Vec<Vec<Scalar>>,
}

impl KernelAccumulator {
    pub fn new(ambient: usize, field: FieldKind) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        KernelAccumulator {
            ambient,
            field,
            basis,
        }
    }

    pub fn current_dim(&self) -> usize {
        self.basis.len()
    }

    /// Imposes `sum_j c_j x_j = 0` given the nonzero `(j, c_j)` pairs.
    pub fn add_constraint(&mut self, sparse: &[(usize, Scalar)]) {
        if sparse.is_empty() || self.basis.is_empty() {
            return;
        }
        let dots: Vec<Scalar> = self
            .basis
            .iter()
            .map(|b| {
                let mut acc = self.field.zero();
                for (j, c) in sparse {
                    if !b[*j].is_zero() {
                        acc = acc.add(&c.mul(&b[*j]));
                    }
                }
                acc
            })
            .collect();
        let Some(pivot) = dots.iter().position(|d| !d.is_zero()) else {
            return; // constraint already satisfied
        };
        let pivot_row = self.basis.swap_remove(pivot);
        let mut dots = dots;
        let pivot_dot = dots.swap_remove(pivot);
        let inv = pivot_dot.inv();
        for (b, d) in self.basis.iter_mut().zip(dots) {
            if d.is_zero() {
                continue;
            }
            let factor = d.mul(&inv);
            for (x, p) in b.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.sub(&factor.mul(p));
                }
            }
        }
    }

    /// Finishes and canonicalises the solution space.
    pub fn into_subspace(self) -> Subspace {
        Subspace::from_rows(self.basis, self.ambient, self.field)
    }
}

/// Solves `B X = T` for `X` where the columns of `B` are linearly
/// independent; panics if the system is inconsistent. `B` is given by
/// columns, `T` by columns; the result is the list of coefficient columns.
pub fn solve_in_basis(
    basis_cols: &[Vec<Scalar>],
    target_cols: &[Vec<Scalar>],
    field: FieldKind,
) -> Vec<Vec<Scalar>> {
    let dim_ambient = basis_cols.first().map(|c| c.len()).unwrap_or(0);
    let f = basis_cols.len();
    let m = target_cols.len();
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(dim_ambient);
    for r in 0..dim_ambient {
        let mut row = Vec::with_capacity(f + m);
        for col in basis_cols {
            row.push(col[r].clone());
        }
        for col in target_cols {
            row.push(col[r].clone());
        }
        rows.push(row);
    }
    let pivots = rref_in_place(&mut rows, f + m);
    assert!(
        pivots.iter().all(|&p| p < f),
        "target outside the span of the basis"
    );
    assert_eq!(pivots.len(), f, "basis columns are not independent");
    let mut out = vec![vec![field.zero(); f]; m];
    for (row_idx, &p) in pivots.iter().enumerate() {
        for j in 0..m {
            out[j][p] = rows[row_idx][f + j].clone();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldKind = FieldKind::Rational;

    fn v(entries: &[i64]) -> Vec<Scalar> {
        entries.iter().map(|&e| Q.from_i64(e)).collect()
    }

    #[test]
    fn rref_is_canonical() {
        let a = Subspace::from_rows(vec![v(&[1, 2, 3]), v(&[0, 1, 1])], 3, Q);
        let b = Subspace::from_rows(vec![v(&[1, 3, 4]), v(&[2, 5, 7])], 3, Q);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn membership_and_reduction() {
        let s = Subspace::from_rows(vec![v(&[1, 0, -1]), v(&[0, 1, 2])], 3, Q);
        assert!(s.contains(&v(&[2, 3, 4])));
        assert!(!s.contains(&v(&[1, 1, 0])));
        let red = s.reduce(&v(&[5, 5, 5]));
        assert!(red[0].is_zero() && red[1].is_zero());
    }

    #[test]
    fn sum_and_intersection_dimensions() {
        let a = Subspace::from_rows(vec![v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0])], 4, Q);
        let b = Subspace::from_rows(vec![v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0])], 4, Q);
        assert_eq!(a.sum(&b).dim(), 3);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v(&[0, 1, 0, 0])));
    }

    #[test]
    fn intersection_respects_modular_law_sample() {
        let a = Subspace::from_rows(vec![v(&[1, 1, 0]), v(&[0, 0, 1])], 3, Q);
        let b = Subspace::from_rows(vec![v(&[1, 1, 1])], 3, Q);
        assert!(a.contains_subspace(&a.intersect(&b)));
        assert!(a.intersect(&b).contains(&v(&[1, 1, 1])));
    }

    #[test]
    fn kernel_accumulator_matches_functional_kernel() {
        // x0 + x1 = 0 and x2 - x3 = 0 in dimension 4
        let funcs = vec![v(&[1, 1, 0, 0]), v(&[0, 0, 1, -1])];
        let k1 = Subspace::kernel_of_functionals(funcs, 4, Q);
        assert_eq!(k1.dim(), 2);
        assert!(k1.contains(&v(&[1, -1, 0, 0])));
        assert!(k1.contains(&v(&[0, 0, 1, 1])));

        let mut acc = KernelAccumulator::new(4, Q);
        acc.add_constraint(&[(0, Q.one()), (1, Q.one())]);
        acc.add_constraint(&[(2, Q.one()), (3, Q.from_i64(-1))]);
        // duplicate constraint must not change the dimension
        acc.add_constraint(&[(0, Q.from_i64(2)), (1, Q.from_i64(2))]);
        assert_eq!(acc.into_subspace(), k1);
    }

    #[test]
    fn solve_in_basis_recovers_coefficients() {
        let b1 = v(&[1, 0, 1]);
        let b2 = v(&[0, 1, 1]);
        let t = v(&[2, 3, 5]); // 2 b1 + 3 b2
        let x = solve_in_basis(&[b1, b2], &[t], Q);
        assert_eq!(x[0], v(&[2, 3]));
    }

    #[test]
    fn kron_and_trace() {
        let a = Mat::from_rows(vec![v(&[1, 2]), v(&[3, 4])], 2, Q);
        let b = Mat::identity(2, Q);
        let k = a.kron(&b);
        assert_eq!(k.rows, 4);
        assert_eq!(k.trace(), Q.from_i64(10));
        assert_eq!(a.clone().rank(), 2);
        let singular = Mat::from_rows(vec![v(&[1, 2]), v(&[2, 4])], 2, Q);
        assert_eq!(singular.rank(), 1);
    }

    #[test]
    fn fp_linear_algebra() {
        let f = FieldKind::Prime(5);
        let s = |e: &[i64]| -> Vec<Scalar> { e.iter().map(|&x| f.from_i64(x)).collect() };
        let sub = Subspace::from_rows(vec![s(&[2, 1, 0]), s(&[0, 3, 1])], 3, f);
        assert_eq!(sub.dim(), 2);
        assert!(sub.contains(&s(&[2, 4, 1])));
    }
}
