//! Partition combinatorics: inclusion order, transposition, the Young graph,
//! Littlewood-Richardson coefficients and hook-length dimension counts.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A finite partition: a non-increasing list of positive integers.
///
/// The empty list is the unique partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, panicking if the parts are not positive and
    /// non-increasing.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be non-increasing"
        );
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive"
        );
        Partition { parts }
    }

    /// Builds a partition from an arbitrary list by sorting and dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of (nonzero) rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th row length, 0-indexed, zero beyond the last row.
    pub fn row(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Rowwise inclusion of diagrams: `other` fits inside `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| other.row(i) <= self.row(i))
    }

    /// The conjugate diagram (columns become rows).
    pub fn transpose(&self) -> Partition {
        let cols = self.row(0) as usize;
        let mut t = Vec::with_capacity(cols);
        for c in 0..cols {
            t.push(self.parts.iter().take_while(|&&r| r as usize > c).count() as u32);
        }
        Partition { parts: t }
    }

    /// True if no part is repeated `p` or more times.
    pub fn is_p_regular(&self, p: u32) -> bool {
        assert!(p >= 2);
        let mut i = 0;
        while i < self.parts.len() {
            let mut run = 1;
            while i + run < self.parts.len() && self.parts[i + run] == self.parts[i] {
                run += 1;
            }
            if run as u32 >= p {
                return false;
            }
            i += run;
        }
        true
    }

    fn hook_len(&self, t: &Partition, r: usize, c: usize) -> u64 {
        (self.row(r) as u64 - c as u64) + (t.row(c) as u64 - r as u64) - 1
    }

    /// Number of standard Young tableaux of this shape (hook length formula).
    pub fn dimension(&self) -> u64 {
        let n = self.size() as u64;
        if n == 0 {
            return 1;
        }
        let t = self.transpose();
        let mut numer: u128 = 1;
        for k in 1..=n {
            numer *= k as u128;
        }
        let mut denom: u128 = 1;
        for r in 0..self.len() {
            for c in 0..self.row(r) as usize {
                denom *= self.hook_len(&t, r, c) as u128;
            }
        }
        assert!(numer.is_multiple_of(denom));
        (numer / denom) as u64
    }

    /// Partitions covering `self` in the Young graph (one box added).
    pub fn covers_above(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            let here = self.row(i);
            let above = if i == 0 { u32::MAX } else { self.row(i - 1) };
            if here < above {
                let mut parts = self.parts.clone();
                if i == self.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Partitions covered by `self` (one box removed).
    pub fn covers_below(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            let below = self.row(i + 1);
            if self.row(i) > below {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Sign of the conjugacy class with this cycle type.
    pub fn class_sign(&self) -> i64 {
        let transpositions: u32 = self.parts.iter().map(|&k| k - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Size of the conjugacy class in `S_n` with this cycle type.
    pub fn class_size(&self) -> u64 {
        let n = self.size() as u64;
        let mut fact: u128 = 1;
        for k in 1..=n {
            fact *= k as u128;
        }
        // centralizer order z = prod_i i^{m_i} m_i!
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let mut mult = 0u32;
            while i < self.parts.len() && self.parts[i] == v {
                mult += 1;
                i += 1;
            }
            for m in 1..=mult {
                z *= m as u128;
            }
            for _ in 0..mult {
                z *= v as u128;
            }
        }
        assert!(fact.is_multiple_of(z));
        (fact / z) as u64
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, in lexicographically decreasing order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let hi = max.min(remaining);
        for part in (1..=hi).rev() {
            current.push(part);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of infinite rows of an [`InfPartition`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InfRows {
    Finite(u32),
    /// The distinguished all-infinite shape labelling the zero ideal.
    Infinite,
}

/// A partition allowed to take infinite values: `m` rows equal to infinity,
/// then a finite head, then a constant tail.
///
/// The shape is `(inf^m, head..., tail, tail, ...)`; it always has infinite
/// total size, matching the labels that index the prime-ideal lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InfPartition {
    inf_rows: InfRows,
    head: Vec<u32>,
    tail: u32,
}

impl InfPartition {
    /// Builds the shape `(inf^m, head..., tail^inf)`.
    ///
    /// The head must be non-increasing with every part at least the tail
    /// constant; trailing head parts equal to the tail are normalised away.
    pub fn new(inf_rows: InfRows, head: Vec<u32>, tail: u32) -> Self {
        assert!(
            head.windows(2).all(|w| w[0] >= w[1]),
            "head must be non-increasing"
        );
        assert!(
            head.iter().all(|&h| h >= tail),
            "head parts must dominate the tail constant"
        );
        let mut head = head;
        while head.last() == Some(&tail) {
            head.pop();
        }
        if matches!(inf_rows, InfRows::Infinite) {
            assert!(
                head.is_empty() && tail == 0,
                "the all-infinite shape has no finite data"
            );
        }
        InfPartition {
            inf_rows,
            head,
            tail,
        }
    }

    /// The all-infinite shape `(inf^inf)`, the label of the zero ideal.
    pub fn all_infinite() -> Self {
        InfPartition {
            inf_rows: InfRows::Infinite,
            head: Vec::new(),
            tail: 0,
        }
    }

    /// The shape `(inf^m, n^inf)` indexing the Schur-Weyl kernels.
    pub fn hook(m: u32, n: u32) -> Self {
        InfPartition::new(InfRows::Finite(m), Vec::new(), n)
    }

    pub fn inf_rows(&self) -> InfRows {
        self.inf_rows
    }

    pub fn head(&self) -> &[u32] {
        &self.head
    }

    pub fn tail(&self) -> u32 {
        self.tail
    }

    pub fn is_all_infinite(&self) -> bool {
        matches!(self.inf_rows, InfRows::Infinite)
    }

    /// The `i`-th row, 0-indexed; `None` encodes infinity.
    pub fn row(&self, i: usize) -> Option<u32> {
        match self.inf_rows {
            InfRows::Infinite => None,
            InfRows::Finite(m) => {
                if i < m as usize {
                    None
                } else {
                    let j = i - m as usize;
                    Some(self.head.get(j).copied().unwrap_or(self.tail))
                }
            }
        }
    }

    /// Rowwise inclusion: does the finite partition `p` fit inside this shape?
    pub fn contains(&self, p: &Partition) -> bool {
        (0..p.len()).all(|i| match self.row(i) {
            None => true,
            Some(bound) => p.row(i) <= bound,
        })
    }
}

impl fmt::Display for InfPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.inf_rows {
            InfRows::Infinite => write!(f, "(inf^inf)"),
            InfRows::Finite(m) => {
                write!(f, "(inf^{m}")?;
                for h in &self.head {
                    write!(f, ",{h}")?;
                }
                write!(f, ",{}^inf)", self.tail)
            }
        }
    }
}

/// Membership in the shape `(inf^m, n^inf)`: true iff `p_{m+1} <= n`.
pub fn hook_member(m: u32, n: u32, p: &Partition) -> bool {
    p.row(m as usize) <= n
}

/// A finite initial segment of a path in the Young graph: `steps[k]` is a
/// partition of `k+1` contained in `steps[k+1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungPath {
    steps: Vec<Partition>,
}

/// Rowwise suprema over a truncated Young-graph path, with a stabilisation
/// report. The flag is a heuristic only: a finite segment can never certify
/// the true limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathLimit {
    pub sup: Partition,
    /// True if the last two steps agree on every row that changed during the
    /// final quarter of the path.
    pub stabilized: bool,
}

impl YoungPath {
    pub fn new(steps: Vec<Partition>) -> Self {
        assert!(!steps.is_empty(), "path must be nonempty");
        for (k, s) in steps.iter().enumerate() {
            assert_eq!(s.size() as usize, k + 1, "step {k} must have size {}", k + 1);
        }
        for w in steps.windows(2) {
            assert!(w[1].contains(&w[0]), "consecutive steps must be nested");
        }
        YoungPath { steps }
    }

    pub fn steps(&self) -> &[Partition] {
        &self.steps
    }

    /// Rowwise supremum over the available steps plus a stabilisation flag.
    pub fn limit(&self) -> PathLimit {
        // Steps are nested, so the last one is the rowwise maximum.
        let sup = self.steps.last().unwrap().clone();
        if self.steps.len() < 2 {
            return PathLimit {
                sup,
                stabilized: false,
            };
        }
        let quarter_len = (self.steps.len() / 4).max(1);
        let window = &self.steps[self.steps.len() - 1 - quarter_len..];
        let mut changed_rows = Vec::new();
        for w in window.windows(2) {
            for r in 0..w[1].len() {
                if w[0].row(r) != w[1].row(r) {
                    changed_rows.push(r);
                }
            }
        }
        let a = &self.steps[self.steps.len() - 2];
        let b = &self.steps[self.steps.len() - 1];
        let stabilized = changed_rows.iter().all(|&r| a.row(r) == b.row(r));
        PathLimit { sup, stabilized }
    }
}

/// Littlewood-Richardson coefficient `c^kappa_{lambda,nu}`.
///
/// Counts semistandard skew tableaux of shape `kappa/lambda` and content
/// `nu` whose reverse reading word is a lattice word. Zero when the sizes do
/// not match or the shapes do not nest.
pub fn lr_coefficient(kappa: &Partition, lambda: &Partition, nu: &Partition) -> u64 {
    if kappa.size() != lambda.size() + nu.size() {
        return 0;
    }
    if !kappa.contains(lambda) {
        return 0;
    }
    if nu.is_empty() {
        return 1;
    }

    // Cells in reverse reading order: rows top to bottom, each row right to
    // left. This makes the lattice-word condition checkable online.
    let mut cells = Vec::new();
    for r in 0..kappa.len() {
        for c in (lambda.row(r)..kappa.row(r)).rev() {
            cells.push((r, c as usize));
        }
    }

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        kappa: &Partition,
        lambda: &Partition,
        nu: &Partition,
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<u32>,
        total: &mut u64,
    ) {
        if idx == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[idx];
        // Rows weakly increase left to right; we fill right to left, so the
        // right neighbour (already placed) is an upper bound.
        let right_bound = if (c as u32) + 1 < kappa.row(r) {
            grid[r][c + 1]
        } else {
            usize::MAX
        };
        // Columns strictly increase; the cell above is a strict lower bound.
        let above: isize =
            if r > 0 && (c as u32) >= lambda.row(r - 1) && (c as u32) < kappa.row(r - 1) {
                grid[r - 1][c] as isize
            } else {
                -1
            };
        let lo = (above + 1) as usize;
        let hi = right_bound.min(nu.len() - 1);
        let mut v = lo;
        while v <= hi {
            let ok_content = counts[v] < nu.row(v);
            let ok_lattice = v == 0 || counts[v] < counts[v - 1];
            if ok_content && ok_lattice {
                grid[r][c] = v;
                counts[v] += 1;
                fill(idx + 1, cells, kappa, lambda, nu, grid, counts, total);
                counts[v] -= 1;
                grid[r][c] = usize::MAX;
            }
            v += 1;
        }
    }

    let mut grid = vec![vec![usize::MAX; kappa.row(0) as usize]; kappa.len()];
    let mut counts = vec![0u32; nu.len()];
    let mut total = 0u64;
    fill(
        0,
        &cells,
        kappa,
        lambda,
        nu,
        &mut grid,
        &mut counts,
        &mut total,
    );
    total
}

/// Property predicate behind the induced-character row bound: whenever
/// `c^kappa_{lambda,nu}` is nonzero and `nu_{s+1} <= t`, the rows of `kappa`
/// obey `kappa_{s+i} <= t + lambda_i` for all `i > 0`.
///
/// Callers must ensure the precondition `nu_{s+1} <= t`; the return value is
/// the truth of the implication.
pub fn lr_bound_holds(
    kappa: &Partition,
    lambda: &Partition,
    nu: &Partition,
    s: u32,
    t: u32,
) -> bool {
    assert!(
        nu.row(s as usize) <= t,
        "invalid test configuration: nu_(s+1) > t"
    );
    if lr_coefficient(kappa, lambda, nu) == 0 {
        return true;
    }
    (s as usize..kappa.len()).all(|idx| {
        // idx = s+i-1 with i >= 1, so the bound row of lambda is idx-s.
        kappa.row(idx) <= t + lambda.row(idx - s as usize)
    })
}

/// Compares two partitions in the inclusion order, if comparable.
pub fn inclusion_cmp(a: &Partition, b: &Partition) -> Option<Ordering> {
    match (a.contains(b), b.contains(a)) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Greater),
        (false, true) => Some(Ordering::Less),
        (false, false) => None,
    }
}
