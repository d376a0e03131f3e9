//! Partitions, bipartitions and linear algebra over the two-element field.

use std::cmp::Ordering;
use std::fmt;

/// A partition stored with weakly increasing parts and no zero parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order; zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable();
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Parts in weakly increasing order.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts, l(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Multiplicity c_i of the part size `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Distinct part sizes, increasing.
    pub fn distinct(&self) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.dedup();
        v
    }

    /// The parts left-padded with zeros to `len` entries.
    ///
    /// Panics if `len` is shorter than the number of parts.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        assert!(len >= self.parts.len(), "padding shorter than partition");
        let mut v = vec![0; len - self.parts.len()];
        v.extend_from_slice(&self.parts);
        v
    }

    /// Parts in weakly decreasing order.
    pub fn decreasing(&self) -> Vec<u32> {
        self.parts.iter().rev().copied().collect()
    }

    /// Partitions obtained by removing one removable box.
    pub fn remove_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for (i, &p) in self.parts.iter().enumerate() {
            if i == 0 || self.parts[i - 1] != p {
                let mut q = self.parts.clone();
                q[i] -= 1;
                out.push(Partition::new(q));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n`, ordered lexicographically on the decreasing form.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=max.min(rem) {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out.into_iter().map(Partition::new).collect()
}

/// An ordered or unordered pair of partitions.
///
/// Unordered values are stored in a canonical orientation, so derived
/// equality identifies (α,β) with (β,α). A degenerate unordered pair
/// (α,α) with α nonempty carries a copy tag in {0,1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    alpha: Partition,
    beta: Partition,
    ordered: bool,
    copy: u8,
}

/// Compares two partitions through their zero-padded increasing sequences.
pub(crate) fn padded_cmp(a: &Partition, b: &Partition) -> Ordering {
    let len = a.len().max(b.len());
    a.padded(len).cmp(&b.padded(len))
}

impl Bipartition {
    pub fn ordered(alpha: Partition, beta: Partition) -> Self {
        Bipartition { alpha, beta, ordered: true, copy: 0 }
    }

    /// An unordered pair; `copy` is kept only for degenerate pairs.
    pub fn unordered(alpha: Partition, beta: Partition, copy: u8) -> Self {
        let (alpha, beta) = if padded_cmp(&alpha, &beta) == Ordering::Greater {
            (beta, alpha)
        } else {
            (alpha, beta)
        };
        let degenerate = alpha == beta && !alpha.is_empty();
        Bipartition { alpha, beta, ordered: false, copy: if degenerate { copy.min(1) } else { 0 } }
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn is_ordered(&self) -> bool {
        self.ordered
    }

    pub fn copy_tag(&self) -> u8 {
        self.copy
    }

    /// True for an unordered pair (α,α) with α nonempty.
    pub fn is_degenerate(&self) -> bool {
        !self.ordered && self.alpha == self.beta && !self.alpha.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.alpha.size() + self.beta.size()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ordered {
            write!(f, "({};{})", self.alpha, self.beta)
        } else {
            write!(f, "{{{};{}}}", self.alpha, self.beta)?;
            if self.is_degenerate() {
                f.write_str(if self.copy == 0 { "'" } else { "''" })?;
            }
            Ok(())
        }
    }
}

/// All bipartitions of `n`.
///
/// In the unordered case each degenerate pair (α,α) appears twice, once per
/// copy tag. The empty pair of rank 0 is not doubled.
pub fn bipartitions_of(n: u32, ordered: bool) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for a in partitions_of(k) {
            for b in partitions_of(n - k) {
                if ordered {
                    out.push(Bipartition::ordered(a.clone(), b));
                } else {
                    match padded_cmp(&a, &b) {
                        Ordering::Less => out.push(Bipartition::unordered(a.clone(), b, 0)),
                        Ordering::Equal => {
                            out.push(Bipartition::unordered(a.clone(), b.clone(), 0));
                            if !a.is_empty() {
                                out.push(Bipartition::unordered(a.clone(), b, 1));
                            }
                        }
                        Ordering::Greater => {}
                    }
                }
            }
        }
    }
    out
}

const WORD: usize = 64;

/// A dense matrix over GF(2), rows packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GF2Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: String = (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

impl GF2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(WORD).max(1);
        GF2Matrix { rows, cols, words, data: vec![0; rows * words] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = GF2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from 0/1 rows. All rows must have equal length.
    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = GF2Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, x & 1 == 1);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "index out of range");
        (self.data[i * self.words + j / WORD] >> (j % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let w = &mut self.data[i * self.words + j / WORD];
        if v {
            *w |= 1 << (j % WORD);
        } else {
            *w &= !(1 << (j % WORD));
        }
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        let v = self.get(i, j);
        self.set(i, j, !v);
    }

    /// Row `i` as a bit vector.
    pub fn row(&self, i: usize) -> Vec<bool> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn col(&self, j: usize) -> Vec<bool> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// 0/1 rows, row-major.
    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j) as u8).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = GF2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut m = GF2Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    let (src, dst) = (k * other.words, i * m.words);
                    for w in 0..m.words {
                        m.data[dst + w] ^= other.data[src + w];
                    }
                }
            }
        }
        m
    }

    pub fn pow(&self, e: u32) -> Self {
        assert_eq!(self.rows, self.cols, "power of non-square matrix");
        let mut acc = GF2Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Matrix times column vector.
    pub fn apply(&self, x: &[bool]) -> Vec<bool> {
        assert_eq!(x.len(), self.cols, "shape mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).filter(|&j| x[j] && self.get(i, j)).count() % 2 == 1)
            .collect()
    }

    /// The bilinear value xᵀ M y.
    pub fn bilinear(&self, x: &[bool], y: &[bool]) -> bool {
        let my = self.apply(y);
        x.iter().zip(&my).filter(|(a, b)| **a && **b).count() % 2 == 1
    }

    /// Reduced row echelon form and its pivot columns.
    fn rref(&self) -> (GF2Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c)) else { continue };
            m.swap_rows(r, p);
            for i in 0..m.rows {
                if i != r && m.get(i, c) {
                    m.xor_row(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for w in 0..self.words {
                self.data.swap(a * self.words + w, b * self.words + w);
            }
        }
    }

    fn xor_row(&mut self, dst: usize, src: usize) {
        for w in 0..self.words {
            let v = self.data[src * self.words + w];
            self.data[dst * self.words + w] ^= v;
        }
    }

    /// Solves M x = b, returning one solution if any exists.
    pub fn solve(&self, b: &[bool]) -> Option<Vec<bool>> {
        assert_eq!(b.len(), self.rows, "shape mismatch");
        let mut aug = GF2Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    aug.set(i, j, true);
                }
            }
            aug.set(i, self.cols, b[i]);
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![false; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = red.get(r, self.cols);
        }
        Some(x)
    }
}

/// Rank over GF(2).
pub fn gf2_rank(m: &GF2Matrix) -> usize {
    m.rref().1.len()
}

/// A basis of the right kernel {x : M x = 0}.
pub fn gf2_kernel_basis(m: &GF2Matrix) -> Vec<Vec<bool>> {
    let (red, pivots) = m.rref();
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![false; m.cols];
            x[f] = true;
            for (r, &c) in pivots.iter().enumerate() {
                if red.get(r, f) {
                    x[c] = true;
                }
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(2), vec![Partition::new(vec![1, 1]), Partition::new(vec![2])]);
        assert_eq!(partitions_of(4).len(), 5);
    }

    #[test]
    fn bipartition_counts() {
        assert_eq!(bipartitions_of(2, true).len(), 5);
        assert_eq!(bipartitions_of(0, true).len(), 1);
        let un = bipartitions_of(2, false);
        assert_eq!(un.len(), 4);
        assert_eq!(un.iter().filter(|b| b.is_degenerate()).count(), 2);
    }

    #[test]
    fn unordered_equality_ignores_orientation() {
        let a = Partition::new(vec![2]);
        let b = Partition::new(vec![1]);
        assert_eq!(
            Bipartition::unordered(a.clone(), b.clone(), 0),
            Bipartition::unordered(b.clone(), a.clone(), 0)
        );
        assert_ne!(Bipartition::ordered(a.clone(), b.clone()), Bipartition::ordered(b, a));
    }

    #[test]
    fn rank_and_kernel_examples() {
        assert_eq!(gf2_rank(&GF2Matrix::identity(3)), 3);
        assert_eq!(gf2_rank(&GF2Matrix::zeros(2, 5)), 0);
        assert_eq!(gf2_rank(&GF2Matrix::from_rows(&[vec![1, 0], vec![1, 1]])), 2);
        assert!(gf2_kernel_basis(&GF2Matrix::identity(4)).is_empty());
        assert_eq!(gf2_kernel_basis(&GF2Matrix::zeros(1, 3)).len(), 3);
        assert_eq!(gf2_kernel_basis(&GF2Matrix::from_rows(&[vec![1, 1]])), vec![vec![true, true]]);
    }

    #[test]
    fn wide_matrices_cross_word_boundaries() {
        let n = 130;
        let mut m = GF2Matrix::identity(n);
        m.set(0, 129, true);
        assert_eq!(gf2_rank(&m), n);
        assert_eq!(m.mul(&m).get(0, 129), false);
        let x = m.solve(&vec![true; n]).unwrap();
        assert_eq!(m.apply(&x), vec![true; n]);
    }

    #[test]
    fn box_removal() {
        let p = Partition::new(vec![1, 2, 2]);
        let got = p.remove_box();
        assert_eq!(got, vec![Partition::new(vec![2, 2]), Partition::new(vec![1, 1, 2])]);
    }
}
