//! Explicit matrices: the v-invariant alternating form of a regular
//! unipotent element in characteristic two, its quadratic refinement with a
//! hyperbolic basis, and the split elements assembled from such blocks.
//!
//! Characteristic two is realized over GF(2). Odd characteristic is realized
//! over the integers with entries in {−1, 0, 1}; every identity checked there
//! holds integrally and so over any field of odd characteristic.
//!
//! Basis order of an assembly: blocks in the order of the parts of λ taken
//! decreasingly, each block in the order of its basis listing below.

use std::collections::BTreeSet;
use std::fmt;

use crate::combinat::{gf2_kernel_basis, gf2_rank, GF2Matrix, Partition};
use crate::error::{Error, Result};
use crate::uniclass::{CharParity, ClassLabel, Eps, EpsilonMap, Family, Frobenius, GroupDescriptor, SplitTag};

/// Largest kernel dimension [`epsilon_of`] enumerates by default.
pub const DEFAULT_KERNEL_CAP: usize = 20;

/// A dense integer matrix, used for odd characteristic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for r in self.to_rows() {
            let s: Vec<String> = r.iter().map(|x| format!("{x:>2}")).collect();
            writeln!(f, "  {}", s.join(" "))?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, x);
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

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut m = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    m.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        m
    }

    pub fn pow(&self, e: u32) -> Self {
        assert_eq!(self.rows, self.cols, "power of non-square matrix");
        (0..e).fold(IntMatrix::identity(self.rows), |acc, _| acc.mul(self))
    }

    /// Rank over the rationals, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<i128>> = self.to_rows().into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect();
        let mut rank = 0;
        let mut prev: i128 = 1;
        for c in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| m[r][c] != 0) else { continue };
            m.swap(rank, p);
            for r in rank + 1..self.rows {
                for k in c + 1..self.cols {
                    m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
                }
                m[r][c] = 0;
            }
            prev = m[rank][c];
            rank += 1;
        }
        rank
    }
}

/// A matrix over GF(2) or over the integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormMatrix {
    Gf2(GF2Matrix),
    Int(IntMatrix),
}

impl FormMatrix {
    pub fn dim(&self) -> usize {
        match self {
            FormMatrix::Gf2(m) => m.rows(),
            FormMatrix::Int(m) => m.rows(),
        }
    }

    /// Row-major entries; GF(2) entries as 0/1.
    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        match self {
            FormMatrix::Gf2(m) => m.to_rows().into_iter().map(|r| r.into_iter().map(i64::from).collect()).collect(),
            FormMatrix::Int(m) => m.to_rows(),
        }
    }

    pub fn as_gf2(&self) -> Option<&GF2Matrix> {
        match self {
            FormMatrix::Gf2(m) => Some(m),
            FormMatrix::Int(_) => None,
        }
    }

    pub fn as_int(&self) -> Option<&IntMatrix> {
        match self {
            FormMatrix::Int(m) => Some(m),
            FormMatrix::Gf2(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    CharTwoAlternating,
    CharTwoQuadratic,
    OddCharAlternating,
    OddCharSymmetric,
}

/// A quadratic form over GF(2): its values on the basis and its polar form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticData {
    pub values: Vec<bool>,
    pub polarization: GF2Matrix,
}

impl QuadraticData {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// Q(x) = Σ x_i Q(e_i) + Σ_{i<j} x_i x_j f(e_i, e_j).
    pub fn eval(&self, x: &[bool]) -> bool {
        let mut acc = false;
        for i in 0..x.len() {
            if !x[i] {
                continue;
            }
            acc ^= self.values[i];
            for j in i + 1..x.len() {
                acc ^= x[j] && self.polarization.get(i, j);
            }
        }
        acc
    }

    pub fn is_nondegenerate(&self) -> bool {
        gf2_rank(&self.polarization) == self.dim()
    }

    /// Whether `g` preserves Q. Q∘g − Q is additive once g preserves the
    /// polar form, so the basis suffices.
    pub fn is_invariant_under(&self, g: &GF2Matrix) -> bool {
        if !preserves_gf2(g, &self.polarization) {
            return false;
        }
        (0..self.dim()).all(|i| self.eval(&g.col(i)) == self.values[i])
    }

    /// The form in a new basis given by the columns of `b`.
    pub fn in_basis(&self, b: &GF2Matrix) -> QuadraticData {
        let values = (0..b.cols()).map(|i| self.eval(&b.col(i))).collect();
        let polarization = b.transpose().mul(&self.polarization).mul(b);
        QuadraticData { values, polarization }
    }
}

/// One regular unipotent block with its invariant form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicFormBlock {
    pub dim: usize,
    pub gram: FormMatrix,
    pub element: FormMatrix,
    pub kind: FormKind,
}

/// The unique alternating form over GF(2) invariant under the regular
/// unipotent v with f(e_1, e_N) = 1 and f(e_i, e_N) = 0 for i > N/2.
pub fn basic_form(dim: usize) -> Result<BasicFormBlock> {
    Ok(BasicFormBlock {
        dim,
        gram: FormMatrix::Gf2(basic_gram(dim)?),
        element: FormMatrix::Gf2(regular_unipotent(dim)),
        kind: FormKind::CharTwoAlternating,
    })
}

/// Gram matrix of [`basic_form`].
pub fn basic_gram(dim: usize) -> Result<GF2Matrix> {
    if dim == 0 || dim % 2 == 1 {
        return Err(Error::OddDimension(dim));
    }
    let n = dim / 2;
    // 1-based; zero for i + j ≤ N and on the block i, j > n, one on the
    // antidiagonal, and the remaining entries of rows i ≤ n column by column.
    let mut val = vec![vec![false; dim + 2]; dim + 2];
    for i in 1..=dim {
        val[i][dim + 1 - i] = true;
    }
    for j in n + 2..=dim {
        for i in dim + 2 - j..=n {
            val[i][j] = val[i][j - 1] ^ val[i + 1][j - 1];
        }
    }
    let mut f = GF2Matrix::zeros(dim, dim);
    for i in 1..=dim {
        for j in 1..=dim {
            if val[i][j] {
                f.set(i - 1, j - 1, true);
                f.set(j - 1, i - 1, true);
            }
        }
    }
    Ok(f)
}

/// The unipotent v with (v − 1)e_j = e_{j−1}.
pub fn regular_unipotent(dim: usize) -> GF2Matrix {
    let mut v = GF2Matrix::identity(dim);
    for j in 1..dim {
        v.set(j - 1, j, true);
    }
    v
}

fn regular_nilpotent(dim: usize) -> IntMatrix {
    let mut x = IntMatrix::zeros(dim, dim);
    for j in 1..dim {
        x.set(j - 1, j, 1);
    }
    x
}

/// The n×n matrix A = (f(e_i, e_{N−j+1})) for N = 2n.
///
/// Row n is all ones and a_{i−1,j−1} = a_{i,j} + a_{i−1,j}, so A is the
/// lower right n×n corner of Pascal's triangle mod 2 of size 2^k ≥ n. For
/// n = 2^k it is the whole triangle and A_{k+1} = (A_k 0; A_k A_k).
pub fn pascal_block_matrix(n: usize) -> GF2Matrix {
    let mut a = GF2Matrix::zeros(n, n);
    if n == 0 {
        return a;
    }
    for j in 0..n {
        a.set(n - 1, j, true);
    }
    for i in (1..n).rev() {
        for j in (1..n).rev() {
            let v = a.get(i, j) ^ a.get(i - 1, j);
            a.set(i - 1, j - 1, v);
        }
    }
    a
}

/// Marks of A^{(j)} for the full triangle of size `m` = 2^k: the block
/// (1 0; 1 1) for j = 1, then (M 0; M M) while j lies in the upper half, or
/// the mark set of j − m/2 moved into the lower right copy.
fn triangle_marks(j: usize, m: usize) -> BTreeSet<(usize, usize)> {
    if m == 1 {
        return [(1, 1)].into();
    }
    let h = m / 2;
    if j <= h {
        let base = triangle_marks(j, h);
        let mut out = base.clone();
        out.extend(base.iter().flat_map(|&(r, c)| [(r + h, c), (r + h, c + h)]));
        out
    } else {
        triangle_marks(j - h, h).into_iter().map(|(r, c)| (r + h, c + h)).collect()
    }
}

/// The marks of A^{(j)} inside [`pascal_block_matrix`]`(n)`, as 1-based
/// (row, column) pairs: row j carries one mark, every other row an even
/// number, and a column with a mark has no unmarked ones.
pub fn marked_positions(j: usize, n: usize) -> BTreeSet<(usize, usize)> {
    assert!(1 <= j && j <= n, "mark index out of range");
    let m = n.next_power_of_two();
    let s = m - n;
    // Marks of j + s lie in rows and columns ≥ j + s, inside the corner.
    triangle_marks(j + s, m).into_iter().map(|(r, c)| (r - s, c - s)).collect()
}

/// Columns e′_1 … e′_N of a hyperbolic basis for [`quadratic_form`]:
/// Q(e′_i) = 0 and f(e′_i, e′_j) = 1 exactly when i + j = N + 1.
pub fn hyperbolic_basis(dim: usize) -> Result<GF2Matrix> {
    if dim == 0 || dim % 2 == 1 {
        return Err(Error::OddDimension(dim));
    }
    let n = dim / 2;
    let mut b = GF2Matrix::zeros(dim, dim);
    for i in 1..n {
        b.set(i - 1, i - 1, true);
    }
    b.set(n - 1, n - 1, true);
    b.set(n, n - 1, true);
    for j in 1..=n {
        let target = dim - j;
        let cols: BTreeSet<usize> = marked_positions(j, n).into_iter().map(|(_, c)| c).collect();
        for k in cols {
            b.set(dim - k, target, true);
        }
    }
    Ok(b)
}

/// The v-invariant quadratic form polarizing to [`basic_form`] with
/// Q(e_N) = 0, namely Q(e_i) = f(e_i, e_{i+1}).
pub fn quadratic_form(dim: usize) -> Result<QuadraticData> {
    let f = basic_gram(dim)?;
    let values = (0..dim).map(|i| i + 1 < dim && f.get(i, i + 1)).collect();
    Ok(QuadraticData { values, polarization: f })
}

/// The Arf invariant, via a symplectic basis a_i, b_i and Σ Q(a_i)Q(b_i).
pub fn arf_invariant(q: &QuadraticData) -> Result<u8> {
    let f = &q.polarization;
    let dim = q.dim();
    let mut rest: Vec<Vec<bool>> = (0..dim).map(|i| unit(dim, i)).collect();
    let mut arf = false;
    while let Some(a) = rest.pop() {
        let Some(pos) = rest.iter().position(|w| f.bilinear(&a, w)) else {
            return Err(Error::Degenerate);
        };
        let b = rest.swap_remove(pos);
        arf ^= q.eval(&a) && q.eval(&b);
        for w in rest.iter_mut() {
            let (fb, fa) = (f.bilinear(w, &b), f.bilinear(w, &a));
            for i in 0..dim {
                w[i] ^= (fb && a[i]) ^ (fa && b[i]);
            }
        }
    }
    Ok(arf as u8)
}

/// x_1x_{n+1} + … + x_nx_{2n}, plus x_n² + x_{2n}² for the non-split form
/// (α = 1, as X² + X + 1 is irreducible over GF(2)).
pub fn reference_quadratic(n: usize, sign: Frobenius) -> QuadraticData {
    let dim = 2 * n;
    let mut polarization = GF2Matrix::zeros(dim, dim);
    for i in 0..n {
        polarization.set(i, n + i, true);
        polarization.set(n + i, i, true);
    }
    let mut values = vec![false; dim];
    if sign == Frobenius::NonSplit && n > 0 {
        values[n - 1] = true;
        values[dim - 1] = true;
    }
    QuadraticData { values, polarization }
}

/// How a summand M_j of an assembly is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SummandCase {
    /// ε = 1: a single regular block.
    Single,
    /// ε = ω: two equal parts, joined by L^⊥/L (characteristic two) or by a
    /// pairing form (odd characteristic).
    Pair,
    /// ε = 0: two equal even parts joined by N^⊥/N.
    PairZero,
}

/// A summand M_j of an assembly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    /// 1-based indices j into λ taken decreasingly.
    pub parts: Vec<usize>,
    pub part: u32,
    pub case: SummandCase,
    /// Dimension n_j of each V_j before any quotient.
    pub block_dim: usize,
    pub offset: usize,
    pub dim: usize,
}

/// A split element with its form and centralizer generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormAssembly {
    pub group: GroupDescriptor,
    pub label: ClassLabel,
    pub summands: Vec<Summand>,
    pub gram: FormMatrix,
    /// Unipotent u in characteristic two, nilpotent X otherwise.
    pub element: FormMatrix,
    /// The quadratic form, for orthogonal groups in characteristic two.
    pub quadratic: Option<QuadraticData>,
    /// (j, ā_j) for each qualifying part index j.
    pub generators: Vec<(usize, FormMatrix)>,
}

impl FormAssembly {
    pub fn dim(&self) -> usize {
        self.gram.dim()
    }

    pub fn kind(&self) -> FormKind {
        match (self.group.char_parity, self.group.family) {
            (CharParity::Two, Family::Sp) => FormKind::CharTwoAlternating,
            (CharParity::Two, _) => FormKind::CharTwoQuadratic,
            (CharParity::Odd, Family::Sp) => FormKind::OddCharAlternating,
            (CharParity::Odd, _) => FormKind::OddCharSymmetric,
        }
    }

    /// Whether the element preserves the form: u multiplicatively (and Q),
    /// X additively.
    pub fn element_preserves_form(&self) -> bool {
        match (&self.element, &self.gram) {
            (FormMatrix::Gf2(u), FormMatrix::Gf2(f)) => match &self.quadratic {
                Some(q) => q.is_invariant_under(u),
                None => preserves_gf2(u, f),
            },
            (FormMatrix::Int(x), FormMatrix::Int(f)) => x.transpose().mul(f).add(&f.mul(x)).is_zero(),
            _ => false,
        }
    }

    /// Whether a group element `g` preserves the form (and Q).
    pub fn group_element_preserves_form(&self, g: &FormMatrix) -> bool {
        match (g, &self.gram) {
            (FormMatrix::Gf2(g), FormMatrix::Gf2(f)) => match &self.quadratic {
                Some(q) => q.is_invariant_under(g),
                None => preserves_gf2(g, f),
            },
            (FormMatrix::Int(g), FormMatrix::Int(f)) => &g.transpose().mul(f).mul(g) == f,
            _ => false,
        }
    }

    pub fn commutes_with_element(&self, g: &FormMatrix) -> bool {
        match (g, &self.element) {
            (FormMatrix::Gf2(g), FormMatrix::Gf2(u)) => g.mul(u) == u.mul(g),
            (FormMatrix::Int(g), FormMatrix::Int(x)) => g.mul(x) == x.mul(g),
            _ => false,
        }
    }

    /// Alternating (Sp) or symmetric (orthogonal) as appropriate, and
    /// nondegenerate.
    pub fn gram_has_expected_type(&self) -> bool {
        match &self.gram {
            FormMatrix::Gf2(f) => {
                f == &f.transpose() && (0..f.rows()).all(|i| !f.get(i, i)) && gf2_rank(f) == f.rows()
            }
            FormMatrix::Int(f) => {
                let t = f.transpose();
                let ok = if self.group.family == Family::Sp { t == f.neg() } else { &t == f };
                ok && f.rank() == f.rows()
            }
        }
    }
}

/// The split element of `c`, dispatching on the characteristic.
pub fn assemble(g: &GroupDescriptor, c: &ClassLabel) -> Result<FormAssembly> {
    match g.char_parity {
        CharParity::Two => assemble_char_two(g, c),
        CharParity::Odd => assemble_odd_char(g, c),
    }
}

fn check_label(g: &GroupDescriptor, c: &ClassLabel, parity: CharParity) -> Result<()> {
    if g.char_parity != parity {
        return Err(Error::InvalidGroup(format!("{g} has the wrong characteristic for this construction")));
    }
    if g.frobenius != Frobenius::Split {
        return Err(Error::InvalidGroup(format!("{g}: only split forms are assembled")));
    }
    c.validate(g)
}

/// Groups the parts of λ (decreasing, 1-based index) into summands.
fn layout(lambda: &Partition, eps: impl Fn(u32) -> Eps) -> Vec<(Vec<usize>, u32, SummandCase)> {
    let parts = lambda.decreasing();
    let mut out = Vec::new();
    let mut j = 0;
    while j < parts.len() {
        let h = parts[j];
        match eps(h) {
            Eps::One => {
                out.push((vec![j + 1], h, SummandCase::Single));
                j += 1;
            }
            e => {
                let case = if e == Eps::Zero { SummandCase::PairZero } else { SummandCase::Pair };
                out.push((vec![j + 1, j + 2], h, case));
                j += 2;
            }
        }
    }
    out
}

/// Split element in characteristic two, over GF(2).
///
/// Each part gets V_j of dimension n_j = λ_j, λ_j + 1 or λ_j + 2 as
/// ε(λ_j) = 1, ω or 0, with [`basic_form`] and v_j. A pair of equal parts is
/// joined on V_j ⊕ V_{j−1} through the quotient by L = ⟨e^j_1 + e^{j−1}_1⟩
/// (ε = ω) or N = ⟨e^j_1 + e^{j−1}_1, e^j_2 + e^{j−1}_2⟩ (ε = 0), with the
/// coset representatives
///
/// - ω: e^j_n + e^{j−1}_n, e^j_{n−1}, e^{j−1}_{n−1}, …, e^j_2, e^{j−1}_2, e^j_1
/// - 0: e^j_n + e^{j−1}_n, e^j_{n−1} + e^{j−1}_{n−1}, e^j_{n−2}, e^{j−1}_{n−2},
///   …, e^j_3, e^{j−1}_3, e^j_2, e^j_1
///
/// where n = n_j and V_j precedes V_{j−1}. For orthogonal groups each V_j
/// carries [`quadratic_form`] and Q descends. The '' half of a split class
/// is the conjugate of the ' element by an orthogonal transvection.
pub fn assemble_char_two(g: &GroupDescriptor, c: &ClassLabel) -> Result<FormAssembly> {
    check_label(g, c, CharParity::Two)?;
    let orth = g.is_orthogonal();
    let mut summands = Vec::new();
    let mut grams = Vec::new();
    let mut elements = Vec::new();
    let mut qvalues = Vec::new();
    // (j, ā_j restricted to its summand, summand index)
    let mut local_gens: Vec<(usize, GF2Matrix, usize)> = Vec::new();
    let mut offset = 0;
    for (parts, h, case) in layout(&c.lambda, |h| c.eps.get(h)) {
        let extra = match case {
            SummandCase::Single => 0,
            SummandCase::Pair => 1,
            SummandCase::PairZero => 2,
        };
        let m = h as usize + extra;
        let f = basic_gram(m)?;
        let v = regular_unipotent(m);
        let q = quadratic_form(m)?;
        let (gram, element, values, gens) = match case {
            SummandCase::Single => (f, v.clone(), q.values, vec![(parts[0], v)]),
            _ => {
                let big_f = block_diag_gf2(&[&f, &f]);
                let big_v = block_diag_gf2(&[&v, &v]);
                let big_q = [q.values.clone(), q.values].concat();
                let (reps, radical) = pair_quotient_basis(m, case);
                let quot = Quotient::new(&big_f, reps, radical)?;
                let id = GF2Matrix::identity(m);
                let mut gens = Vec::new();
                if case == SummandCase::Pair {
                    // parts[1] is V_j, listed first; parts[0] is V_{j−1}.
                    gens.push((parts[0], quot.induce(&block_diag_gf2(&[&id, &v]))?));
                    gens.push((parts[1], quot.induce(&block_diag_gf2(&[&v, &id]))?));
                }
                let values = quot.reps.iter().map(|r| QuadraticData { values: big_q.clone(), polarization: big_f.clone() }.eval(r)).collect();
                (quot.gram(), quot.induce(&big_v)?, values, gens)
            }
        };
        let dim = gram.rows();
        for (j, a) in gens {
            local_gens.push((j, a, summands.len()));
        }
        summands.push(Summand { parts, part: h, case, block_dim: m, offset, dim });
        offset += dim;
        grams.push(gram);
        elements.push(element);
        qvalues.extend(values);
    }
    let gram = block_diag_gf2(&grams.iter().collect::<Vec<_>>());
    let mut element = block_diag_gf2(&elements.iter().collect::<Vec<_>>());
    let mut generators: Vec<(usize, GF2Matrix)> = local_gens
        .into_iter()
        .map(|(j, a, s)| {
            let blocks: Vec<GF2Matrix> = summands
                .iter()
                .enumerate()
                .map(|(i, sm)| if i == s { a.clone() } else { GF2Matrix::identity(sm.dim) })
                .collect();
            (j, block_diag_gf2(&blocks.iter().collect::<Vec<_>>()))
        })
        .collect();
    generators.sort_by_key(|(j, _)| *j);
    let quadratic = orth.then(|| QuadraticData { values: qvalues, polarization: gram.clone() });
    if c.split == SplitTag::DoublePrime {
        let q = quadratic.as_ref().ok_or_else(|| Error::Internal("split class without a quadratic form".into()))?;
        let t = orthogonal_transvection(q)?;
        element = t.mul(&element).mul(&t);
        for (_, a) in generators.iter_mut() {
            *a = t.mul(a).mul(&t);
        }
    }
    Ok(FormAssembly {
        group: *g,
        label: c.clone(),
        summands,
        gram: FormMatrix::Gf2(gram),
        element: FormMatrix::Gf2(element),
        quadratic,
        generators: generators.into_iter().map(|(j, a)| (j, FormMatrix::Gf2(a))).collect(),
    })
}

/// Coset representatives and radical for the pair constructions, in
/// coordinates of V_j ⊕ V_{j−1} with V_j first.
fn pair_quotient_basis(m: usize, case: SummandCase) -> (Vec<Vec<bool>>, Vec<Vec<bool>>) {
    let e = |which: usize, i: usize| unit(2 * m, which * m + i - 1);
    let both = |i: usize| xor(&e(0, i), &e(1, i));
    let mut reps = vec![both(m)];
    let (low, radical) = if case == SummandCase::Pair {
        (2, vec![both(1)])
    } else {
        reps.push(both(m - 1));
        (3, vec![both(1), both(2)])
    };
    let top = if case == SummandCase::Pair { m - 1 } else { m - 2 };
    for i in (low..=top).rev() {
        reps.push(e(0, i));
        reps.push(e(1, i));
    }
    if case == SummandCase::PairZero {
        reps.push(e(0, 2));
    }
    reps.push(e(0, 1));
    (reps, radical)
}

/// A quotient W^⊥/W presented by coset representatives of W^⊥ modulo W.
struct Quotient<'a> {
    form: &'a GF2Matrix,
    reps: Vec<Vec<bool>>,
    span: GF2Matrix,
}

impl<'a> Quotient<'a> {
    fn new(form: &'a GF2Matrix, reps: Vec<Vec<bool>>, radical: Vec<Vec<bool>>) -> Result<Self> {
        let dim = form.rows();
        let all: Vec<&Vec<bool>> = reps.iter().chain(&radical).collect();
        let mut span = GF2Matrix::zeros(dim, all.len());
        for (c, v) in all.iter().enumerate() {
            for (r, &x) in v.iter().enumerate() {
                span.set(r, c, x);
            }
        }
        if gf2_rank(&span) != all.len() {
            return Err(Error::Internal("quotient representatives are dependent".into()));
        }
        for w in &radical {
            if all.iter().any(|v| form.bilinear(w, v)) {
                return Err(Error::Internal("representative outside the orthogonal".into()));
            }
        }
        Ok(Quotient { form, reps, span })
    }

    fn gram(&self) -> GF2Matrix {
        let k = self.reps.len();
        let mut g = GF2Matrix::zeros(k, k);
        for a in 0..k {
            for b in 0..k {
                g.set(a, b, self.form.bilinear(&self.reps[a], &self.reps[b]));
            }
        }
        g
    }

    /// The map induced by `op`, which must stabilize W and W^⊥.
    fn induce(&self, op: &GF2Matrix) -> Result<GF2Matrix> {
        let k = self.reps.len();
        let mut m = GF2Matrix::zeros(k, k);
        for (c, r) in self.reps.iter().enumerate() {
            let x = self
                .span
                .solve(&op.apply(r))
                .ok_or_else(|| Error::Internal("operator does not stabilize the quotient".into()))?;
            for (row, &bit) in x.iter().take(k).enumerate() {
                m.set(row, c, bit);
            }
        }
        Ok(m)
    }
}

/// x ↦ x + f(x, a)a for the first basis vector, or sum of two, with Q(a) = 1.
fn orthogonal_transvection(q: &QuadraticData) -> Result<GF2Matrix> {
    let dim = q.dim();
    let a = (0..dim)
        .flat_map(|i| (i..dim).map(move |k| (i, k)))
        .map(|(i, k)| if i == k { unit(dim, i) } else { xor(&unit(dim, i), &unit(dim, k)) })
        .find(|a| q.eval(a))
        .ok_or(Error::Degenerate)?;
    let fa = q.polarization.apply(&a);
    let mut t = GF2Matrix::identity(dim);
    for r in 0..dim {
        for c in 0..dim {
            if a[r] && fa[c] {
                t.flip(r, c);
            }
        }
    }
    Ok(t)
}

/// Split nilpotent element in odd characteristic, over the integers.
///
/// A part with ε = 1 gets e_1 … e_h with f(e_{h−i+1}, e_i) = (−1)^{δ_j − i},
/// δ_j = λ_j/2 + j (Sp) or (λ_j − 1)/2 + j (orthogonal), j the global index
/// in λ taken decreasingly. Two equal parts with ε = ω get
/// e^j_1 … e^j_h, e^{j−1}_1 … e^{j−1}_h with f(e^j_{h−i+1}, e^{j−1}_i) =
/// (−1)^{i−1} and the transposed entry multiplied by −1 (Sp) or 1.
/// The generator ā_j is −1 on its block. The '' half of a split class is
/// the conjugate by a reflection.
pub fn assemble_odd_char(g: &GroupDescriptor, c: &ClassLabel) -> Result<FormAssembly> {
    check_label(g, c, CharParity::Odd)?;
    let skew: i64 = if g.family == Family::Sp { -1 } else { 1 };
    let mut summands = Vec::new();
    let mut grams = Vec::new();
    let mut elements = Vec::new();
    let mut offset = 0;
    for (parts, h, case) in layout(&c.lambda, |h| c.eps.get(h)) {
        let hu = h as usize;
        let (gram, x) = if case == SummandCase::Single {
            let j = parts[0] as i64;
            let delta = if g.family == Family::Sp { h as i64 / 2 + j } else { (h as i64 - 1) / 2 + j };
            let mut f = IntMatrix::zeros(hu, hu);
            for i in 1..=hu {
                f.set(hu - i, i - 1, sign(delta - i as i64));
            }
            (f, regular_nilpotent(hu))
        } else {
            let mut f = IntMatrix::zeros(2 * hu, 2 * hu);
            for i in 1..=hu {
                let s = sign(i as i64 - 1);
                f.set(hu - i, hu + i - 1, s);
                f.set(hu + i - 1, hu - i, skew * s);
            }
            (f, block_diag_int(&[regular_nilpotent(hu), regular_nilpotent(hu)]))
        };
        let dim = gram.rows();
        summands.push(Summand { parts, part: h, case, block_dim: hu, offset, dim });
        offset += dim;
        grams.push(gram);
        elements.push(x);
    }
    let gram = block_diag_int(&grams);
    let mut element = block_diag_int(&elements);
    let mut generators: Vec<(usize, IntMatrix)> = summands
        .iter()
        .filter(|s| s.case == SummandCase::Single)
        .map(|s| {
            let mut a = IntMatrix::identity(offset);
            for i in s.offset..s.offset + s.dim {
                a.set(i, i, -1);
            }
            (s.parts[0], a)
        })
        .collect();
    if c.split == SplitTag::DoublePrime {
        let s = reflection(&gram)?;
        element = s.mul(&element).mul(&s);
        for (_, a) in generators.iter_mut() {
            *a = s.mul(a).mul(&s);
        }
    }
    Ok(FormAssembly {
        group: *g,
        label: c.clone(),
        summands,
        gram: FormMatrix::Int(gram),
        element: FormMatrix::Int(element),
        quadratic: None,
        generators: generators.into_iter().map(|(j, a)| (j, FormMatrix::Int(a))).collect(),
    })
}

/// The reflection in a = e_p + e_q with f(e_p, e_q) = 1 and f(a, a) = 2.
fn reflection(f: &IntMatrix) -> Result<IntMatrix> {
    let dim = f.rows();
    let (p, q) = (0..dim)
        .flat_map(|p| (p + 1..dim).map(move |q| (p, q)))
        .find(|&(p, q)| f.get(p, q) == 1 && f.get(p, p) == 0 && f.get(q, q) == 0)
        .ok_or(Error::Degenerate)?;
    let mut a = vec![0i64; dim];
    a[p] = 1;
    a[q] = 1;
    let fa: Vec<i64> = (0..dim).map(|c| (0..dim).map(|k| a[k] * f.get(k, c)).sum()).collect();
    let mut s = IntMatrix::identity(dim);
    for r in 0..dim {
        for c in 0..dim {
            s.set(r, c, s.get(r, c) - a[r] * fa[c]);
        }
    }
    Ok(s)
}

/// The generator ā_j of an assembly.
pub fn centralizer_generator(a: &FormAssembly, j: usize) -> Result<FormMatrix> {
    a.generators
        .iter()
        .find(|(k, _)| *k == j)
        .map(|(_, m)| m.clone())
        .ok_or_else(|| Error::NoGenerator(format!("part index {j} of {} has no generator", a.label)))
}

/// Jordan type of a unipotent matrix over GF(2) or a nilpotent integer
/// matrix, from the ranks of successive powers of u − 1 or X.
pub fn jordan_type(m: &FormMatrix) -> Result<Partition> {
    let dim = m.dim();
    let mut ranks = vec![dim];
    match m {
        FormMatrix::Gf2(u) => {
            let x = u.add(&GF2Matrix::identity(dim));
            let mut p = GF2Matrix::identity(dim);
            for _ in 0..dim {
                p = p.mul(&x);
                ranks.push(gf2_rank(&p));
            }
        }
        FormMatrix::Int(x) => {
            let mut p = IntMatrix::identity(dim);
            for _ in 0..dim {
                p = p.mul(x);
                ranks.push(p.rank());
            }
        }
    }
    if ranks[dim] != 0 {
        return Err(Error::NotUnipotent);
    }
    // r_{k−1} − r_k blocks have size ≥ k.
    let at_least: Vec<usize> = (1..=dim).map(|k| ranks[k - 1] - ranks[k]).collect();
    let mut parts = Vec::new();
    for k in 1..=dim {
        let next = at_least.get(k).copied().unwrap_or(0);
        parts.extend(std::iter::repeat(k as u32).take(at_least[k - 1] - next));
    }
    Ok(Partition::new(parts))
}

/// Recovers ε of a unipotent u preserving the alternating form f, with the
/// default kernel cap.
pub fn epsilon_of(u: &GF2Matrix, f: &GF2Matrix) -> Result<EpsilonMap> {
    epsilon_of_capped(u, f, DEFAULT_KERNEL_CAP)
}

/// For each even part size i: ε(i) = 0 if h_i(x) = f((u − 1)^{i−1}x, x)
/// vanishes on Ker(u − 1)^i, else 1. h_i is not linear, so the kernel is
/// enumerated, and a kernel of dimension above `cap` is an error.
pub fn epsilon_of_capped(u: &GF2Matrix, f: &GF2Matrix, cap: usize) -> Result<EpsilonMap> {
    let lambda = jordan_type(&FormMatrix::Gf2(u.clone()))?;
    let dim = u.rows();
    let x = u.add(&GF2Matrix::identity(dim));
    let mut eps = EpsilonMap::new();
    for i in lambda.distinct().into_iter().filter(|i| i % 2 == 0) {
        let kernel = gf2_kernel_basis(&x.pow(i));
        if kernel.len() > cap {
            return Err(Error::KernelTooLarge { dim: kernel.len(), cap });
        }
        let a = x.pow(i - 1);
        let mut v = vec![false; dim];
        let mut vanishes = true;
        // Gray code walk over the kernel.
        for step in 1u64..(1u64 << kernel.len()) {
            let bit = step.trailing_zeros() as usize;
            for (vi, ki) in v.iter_mut().zip(&kernel[bit]) {
                *vi ^= ki;
            }
            if f.bilinear(&a.apply(&v), &v) {
                vanishes = false;
                break;
            }
        }
        eps.set(i, if vanishes { Eps::Zero } else { Eps::One });
    }
    Ok(eps)
}

/// Whether gᵀ f g = f.
pub fn preserves_gf2(g: &GF2Matrix, f: &GF2Matrix) -> bool {
    &g.transpose().mul(f).mul(g) == f
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn unit(dim: usize, i: usize) -> Vec<bool> {
    let mut v = vec![false; dim];
    v[i] = true;
    v
}

fn xor(a: &[bool], b: &[bool]) -> Vec<bool> {
    a.iter().zip(b).map(|(x, y)| x ^ y).collect()
}

fn block_diag_gf2(blocks: &[&GF2Matrix]) -> GF2Matrix {
    let dim = blocks.iter().map(|b| b.rows()).sum();
    let mut m = GF2Matrix::zeros(dim, dim);
    let mut o = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                if b.get(i, j) {
                    m.set(o + i, o + j, true);
                }
            }
        }
        o += b.rows();
    }
    m
}

fn block_diag_int(blocks: &[IntMatrix]) -> IntMatrix {
    let dim = blocks.iter().map(|b| b.rows()).sum();
    let mut m = IntMatrix::zeros(dim, dim);
    let mut o = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                m.set(o + i, o + j, b.get(i, j));
            }
        }
        o += b.rows();
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uniclass::enumerate_classes;

    #[test]
    fn basic_form_small_cases() {
        assert_eq!(basic_gram(2).unwrap(), GF2Matrix::from_rows(&[vec![0, 1], vec![1, 0]]));
        assert_eq!(basic_gram(3), Err(Error::OddDimension(3)));
        for dim in (2..=32).step_by(2) {
            let f = basic_gram(dim).unwrap();
            for i in 1..=dim {
                for j in 1..=dim {
                    if i + j <= dim {
                        assert!(!f.get(i - 1, j - 1));
                    }
                    if i + j == dim + 1 {
                        assert!(f.get(i - 1, j - 1));
                    }
                    if i > dim / 2 && j > dim / 2 {
                        assert!(!f.get(i - 1, j - 1));
                    }
                }
            }
            assert!(preserves_gf2(&regular_unipotent(dim), &f));
        }
    }

    #[test]
    fn regular_unipotent_shape() {
        assert_eq!(regular_unipotent(1), GF2Matrix::identity(1));
        let v = regular_unipotent(3);
        let x = v.add(&GF2Matrix::identity(3));
        assert_eq!(x, GF2Matrix::from_rows(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]));
        assert_eq!(jordan_type(&FormMatrix::Gf2(v)).unwrap(), Partition::new(vec![3]));
    }

    #[test]
    fn pascal_blocks() {
        let a = pascal_block_matrix(2);
        assert_eq!(a, GF2Matrix::from_rows(&[vec![1, 0], vec![1, 1]]));
        assert_eq!(pascal_block_matrix(3), GF2Matrix::from_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 1]]));
        let a8 = pascal_block_matrix(8);
        let a4 = pascal_block_matrix(4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a8.get(i, j), a4.get(i, j));
                assert_eq!(a8.get(i + 4, j), a4.get(i, j));
                assert_eq!(a8.get(i + 4, j + 4), a4.get(i, j));
                assert!(!a8.get(i, j + 4));
            }
        }
    }

    #[test]
    fn marks_of_the_four_by_four_examples() {
        assert_eq!(marked_positions(3, 4), [(3, 3), (4, 3), (4, 4)].into());
        assert_eq!(marked_positions(4, 4), [(4, 4)].into());
        assert_eq!(marked_positions(1, 1), [(1, 1)].into());
        assert_eq!(marked_positions(1, 3), [(1, 1), (3, 1), (3, 3)].into());
        assert_eq!(marked_positions(5, 8).len(), 9);
    }

    #[test]
    fn quadratic_values_before_the_change_of_basis() {
        for dim in (2..=16).step_by(2) {
            let q = quadratic_form(dim).unwrap();
            for i in 0..dim {
                assert_eq!(q.values[i], i + 1 == dim / 2);
            }
            let b = hyperbolic_basis(dim).unwrap();
            let n = dim / 2;
            assert!(!q.eval(&b.col(n - 1)));
            assert!(q.polarization.bilinear(&b.col(n - 1), &b.col(n)));
        }
    }

    #[test]
    fn reference_forms() {
        let plus = reference_quadratic(1, Frobenius::Split);
        assert_eq!(plus.values, vec![false, false]);
        assert_eq!(arf_invariant(&plus).unwrap(), 0);
        let minus = reference_quadratic(1, Frobenius::NonSplit);
        assert_eq!(minus.values, vec![true, true]);
        assert_eq!(arf_invariant(&minus).unwrap(), 1);
        let q = QuadraticData { values: vec![false; 2], polarization: GF2Matrix::zeros(2, 2) };
        assert_eq!(arf_invariant(&q), Err(Error::Degenerate));
    }

    #[test]
    fn int_rank() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, -1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(IntMatrix::identity(4).rank(), 4);
    }

    fn label(lambda: Vec<u32>, eps: &[(u32, Eps)], split: SplitTag) -> ClassLabel {
        ClassLabel::new(Partition::new(lambda), EpsilonMap::from_pairs(eps.iter().copied()), split)
    }

    #[test]
    fn char_two_examples() {
        let sp4 = GroupDescriptor::split(Family::Sp, 2, CharParity::Two);
        let a = assemble_char_two(&sp4, &label(vec![4], &[(4, Eps::One)], SplitTag::None)).unwrap();
        assert_eq!(a.summands[0].block_dim, 4);
        let u = a.element.as_gf2().unwrap();
        assert_eq!(u, &regular_unipotent(4));
        assert_eq!(epsilon_of(u, a.gram.as_gf2().unwrap()).unwrap().get(4), Eps::One);
        assert_eq!(centralizer_generator(&a, 1).unwrap(), a.element);

        let a = assemble_char_two(&sp4, &label(vec![2, 2], &[(2, Eps::Zero)], SplitTag::None)).unwrap();
        assert_eq!((a.summands[0].block_dim, a.dim()), (4, 4));
        assert_eq!(epsilon_of(a.element.as_gf2().unwrap(), a.gram.as_gf2().unwrap()).unwrap().get(2), Eps::Zero);
        assert!(centralizer_generator(&a, 1).is_err());

        let sp2 = GroupDescriptor::split(Family::Sp, 1, CharParity::Two);
        let a = assemble_char_two(&sp2, &label(vec![1, 1], &[], SplitTag::None)).unwrap();
        assert_eq!((a.summands[0].block_dim, a.dim()), (2, 2));
        assert!(a.element_preserves_form());
        assert_eq!(jordan_type(&a.element).unwrap(), Partition::new(vec![1, 1]));
    }

    #[test]
    fn so_char_two_split_payload() {
        let so4 = GroupDescriptor::split(Family::SoEven, 2, CharParity::Two);
        for split in [SplitTag::Prime, SplitTag::DoublePrime] {
            let a = assemble_char_two(&so4, &label(vec![2, 2], &[(2, Eps::Zero)], split)).unwrap();
            assert!(a.element_preserves_form());
            assert_eq!(arf_invariant(a.quadratic.as_ref().unwrap()).unwrap(), 0);
        }
    }

    #[test]
    fn odd_char_examples() {
        let sp2 = GroupDescriptor::split(Family::Sp, 1, CharParity::Odd);
        let a = assemble_odd_char(&sp2, &ClassLabel::odd_char(Partition::new(vec![2]), Family::Sp)).unwrap();
        let f = a.gram.as_int().unwrap();
        // δ_1 = 2
        assert_eq!(f.get(1, 0), -1);
        assert_eq!(f.get(0, 1), 1);

        let a = assemble_odd_char(&sp2, &ClassLabel::odd_char(Partition::new(vec![1, 1]), Family::Sp)).unwrap();
        let f = a.gram.as_int().unwrap();
        assert_eq!((f.get(0, 1), f.get(1, 0)), (1, -1));
        assert!(a.element_preserves_form());
    }

    #[test]
    fn every_small_assembly_is_consistent() {
        for n in 0..=4 {
            for g in GroupDescriptor::all_split(n) {
                for c in enumerate_classes(&g) {
                    let a = assemble(&g, &c).unwrap();
                    assert_eq!(a.dim() as u32, g.dimension());
                    assert!(a.gram_has_expected_type(), "{g} {c}");
                    assert!(a.element_preserves_form(), "{g} {c}");
                    assert_eq!(jordan_type(&a.element).unwrap(), c.lambda, "{g} {c}");
                    if let (FormMatrix::Gf2(u), FormMatrix::Gf2(f)) = (&a.element, &a.gram) {
                        assert_eq!(epsilon_of(u, f).unwrap(), c.eps, "{g} {c}");
                    }
                    for (_, x) in &a.generators {
                        assert!(a.commutes_with_element(x) && a.group_element_preserves_form(x), "{g} {c}");
                    }
                }
            }
        }
    }
}
