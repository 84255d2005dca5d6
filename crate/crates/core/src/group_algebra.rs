//! The exact-scalar group algebra of a finite symmetric group: permutations
//! in one-line notation, formal linear combinations, the Young-subgroup
//! embedding product, comultiplication, (anti)symmetrisers and the
//! strand-removal map.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use crate::scalar::{FieldKind, Scalar};

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// Internally images are 0-based; `word[i]` is the image of `i`. The
/// canonical inclusion into the next symmetric group fixes the new letter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    word: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            word: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from a 0-based image list.
    pub fn from_word(word: Vec<u8>) -> Self {
        let n = word.len();
        let mut seen = vec![false; n];
        for &w in &word {
            assert!((w as usize) < n && !seen[w as usize], "not a permutation");
            seen[w as usize] = true;
        }
        Perm { word }
    }

    /// Builds a permutation from a 1-based image list (the serialised form).
    pub fn from_one_based(word: &[u32]) -> Self {
        Perm::from_word(word.iter().map(|&w| (w - 1) as u8).collect())
    }

    pub fn one_based(&self) -> Vec<u32> {
        self.word.iter().map(|&w| w as u32 + 1).collect()
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.word[i] as usize
    }

    /// The adjacent transposition swapping letters `i+1` and `i+2` (0-based
    /// slot `i`) in `S_n`.
    pub fn adjacent_transposition(n: usize, i: usize) -> Self {
        assert!(i + 1 < n);
        let mut word: Vec<u8> = (0..n as u8).collect();
        word.swap(i, i + 1);
        Perm { word }
    }

    /// Composition acting on the left: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            word: other.word.iter().map(|&i| self.word[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut word = vec![0u8; self.word.len()];
        for (i, &w) in self.word.iter().enumerate() {
            word[w as usize] = i as u8;
        }
        Perm { word }
    }

    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.word.len()];
        let mut sign = 1i64;
        for start in 0..self.word.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.word[cur] as usize;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Cycle type as a partition of `n` (fixed points included).
    pub fn cycle_type(&self) -> crate::partitions::Partition {
        let mut seen = vec![false; self.word.len()];
        let mut lens = Vec::new();
        for start in 0..self.word.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.word[cur] as usize;
                len += 1;
            }
            lens.push(len);
        }
        crate::partitions::Partition::from_unsorted(lens)
    }

    /// Extends by fixed points to degree `n`.
    pub fn embed(&self, n: usize) -> Perm {
        assert!(n >= self.degree());
        let mut word = self.word.clone();
        word.extend(self.degree() as u8..n as u8);
        Perm { word }
    }

    /// True if the last letter is fixed, i.e. the permutation lies in the
    /// previous symmetric group under the canonical inclusion.
    pub fn fixes_last(&self) -> bool {
        let n = self.degree();
        n == 0 || self.word[n - 1] as usize == n - 1
    }

    /// Deletes the last letter from the disjoint-cycle expression: the image
    /// chain through the removed letter is spliced together.
    pub fn delete_last_letter(&self) -> Perm {
        let n = self.degree();
        assert!(n >= 1);
        let last = (n - 1) as u8;
        let mut word = Vec::with_capacity(n - 1);
        for i in 0..n - 1 {
            let im = self.word[i];
            word.push(if im == last { self.word[n - 1] } else { im });
        }
        Perm { word }
    }

    /// A reduced word in adjacent transpositions, as 0-based slot indices,
    /// multiplying left to right.
    pub fn reduced_word(&self) -> Vec<usize> {
        // bubble-sort the one-line word back to the identity
        let mut w = self.word.clone();
        let mut out = Vec::new();
        loop {
            let mut swapped = false;
            for i in 0..w.len().saturating_sub(1) {
                if w[i] > w[i + 1] {
                    w.swap(i, i + 1);
                    out.push(i);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        out.reverse();
        out
    }

    /// Rank of the one-line word in lexicographic order over all of `S_n`.
    pub fn lex_rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0usize;
        let mut fact = factorial(n);
        let mut remaining: Vec<u8> = (0..n as u8).collect();
        for i in 0..n {
            fact /= n - i;
            let pos = remaining.iter().position(|&x| x == self.word[i]).unwrap();
            rank += pos * fact;
            remaining.remove(pos);
        }
        rank
    }

    pub fn from_lex_rank(n: usize, mut rank: usize) -> Perm {
        let mut fact = factorial(n);
        let mut remaining: Vec<u8> = (0..n as u8).collect();
        let mut word = Vec::with_capacity(n);
        for i in 0..n {
            fact /= n - i;
            let pos = rank / fact;
            rank %= fact;
            word.push(remaining.remove(pos));
        }
        Perm { word }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, w) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", w + 1)?;
        }
        write!(f, "]")
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// All permutations of `S_n` in lexicographic order of one-line words.
pub fn all_perms(n: usize) -> Vec<Perm> {
    (0..factorial(n))
        .map(|r| Perm::from_lex_rank(n, r))
        .collect()
}

/// A formal linear combination of permutations of a fixed degree.
///
/// Zero coefficients are never stored. The field is carried explicitly so
/// the zero element knows its scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    field: FieldKind,
    terms: BTreeMap<Perm, Scalar>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize, field: FieldKind) -> Self {
        GroupAlgebraElement {
            degree,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(degree: usize, field: FieldKind) -> Self {
        Self::from_perm(Perm::identity(degree), field)
    }

    pub fn from_perm(p: Perm, field: FieldKind) -> Self {
        let degree = p.degree();
        let mut terms = BTreeMap::new();
        terms.insert(p, field.one());
        GroupAlgebraElement {
            degree,
            field,
            terms,
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Perm, Scalar)>>(
        degree: usize,
        field: FieldKind,
        terms: I,
    ) -> Self {
        let mut out = Self::zero(degree, field);
        for (p, c) in terms {
            out.add_term(p, c);
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Perm) -> Scalar {
        self.terms
            .get(p)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    fn add_term(&mut self, p: Perm, c: Scalar) {
        assert_eq!(p.degree(), self.degree, "degree mismatch");
        assert_eq!(c.field(), self.field, "field mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree, self.field);
        }
        GroupAlgebraElement {
            degree: self.degree,
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(p, v)| (p.clone(), v.mul(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    /// Convolution product. Degrees must agree; pad with [`Self::embedded`]
    /// first when needed.
    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = Self::zero(self.degree, self.field);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose(q), a.mul(b));
            }
        }
        out
    }

    /// The image under the canonical inclusion into degree `n`.
    pub fn embedded(&self, n: usize) -> Self {
        GroupAlgebraElement {
            degree: n,
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.embed(n), c.clone()))
                .collect(),
        }
    }

    /// The Young-subgroup embedding product: the second factor acts on the
    /// letters shifted past the first factor's degree.
    pub fn bullet(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "field mismatch");
        let m = self.degree;
        let mut out = Self::zero(m + other.degree, self.field);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                let mut word: Vec<u8> = p.word.clone();
                word.extend(q.word.iter().map(|&w| w + m as u8));
                out.add_term(Perm { word }, a.mul(b));
            }
        }
        out
    }

    /// The diagonal coproduct: every group element is grouplike, so the
    /// coproduct of a combination is the same combination of paired terms.
    pub fn comultiply(&self) -> Vec<(Perm, Perm, Scalar)> {
        self.terms
            .iter()
            .map(|(p, c)| (p.clone(), p.clone(), c.clone()))
            .collect()
    }

    /// Sum of all coefficients.
    pub fn augmentation(&self) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.terms.values() {
            acc = acc.add(c);
        }
        acc
    }

    /// Sign-weighted sum of coefficients.
    pub fn sign_map(&self) -> Scalar {
        let mut acc = self.field.zero();
        for (p, c) in &self.terms {
            acc = acc.add(&c.mul(&self.field.from_i64(p.sign())));
        }
        acc
    }

    /// Dense coordinates in the canonical (lexicographic) permutation order.
    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); factorial(self.degree)];
        for (p, c) in &self.terms {
            v[p.lex_rank()] = c.clone();
        }
        v
    }

    pub fn from_dense(degree: usize, field: FieldKind, dense: &[Scalar]) -> Self {
        assert_eq!(dense.len(), factorial(degree));
        Self::from_terms(
            degree,
            field,
            dense
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(r, c)| (Perm::from_lex_rank(degree, r), c.clone())),
        )
    }
}

/// The full symmetriser `s_n`, the sum of all permutations.
pub fn symmetriser(n: usize, field: FieldKind) -> GroupAlgebraElement {
    GroupAlgebraElement::from_terms(n, field, all_perms(n).into_iter().map(|p| (p, field.one())))
}

/// The skew symmetriser `a_n`, the sign-weighted sum of all permutations.
pub fn antisymmetriser(n: usize, field: FieldKind) -> GroupAlgebraElement {
    GroupAlgebraElement::from_terms(
        n,
        field,
        all_perms(n).into_iter().map(|p| {
            let s = field.from_i64(p.sign());
            (p, s)
        }),
    )
}

/// The strand-removal map from degree `n+1` to degree `n`: a permutation
/// fixing the last letter picks up the factor `delta` (the removed strand
/// closes into a loop), any other permutation has the last letter deleted
/// from its cycle expression.
pub fn remove_strand(x: &GroupAlgebraElement, delta: &Scalar) -> GroupAlgebraElement {
    assert!(x.degree() >= 1, "cannot remove a strand from degree 0");
    assert_eq!(delta.field(), x.field(), "field mismatch");
    let mut out = GroupAlgebraElement::zero(x.degree() - 1, x.field());
    for (p, c) in &x.terms {
        if p.fixes_last() {
            out.add_term(p.delete_last_letter(), c.mul(delta));
        } else {
            out.add_term(p.delete_last_letter(), c.clone());
        }
    }
    out
}
