//! (r,s)-symbols: rank and defect, shift equivalence, the special symbols
//! Λ_d, the bipartition bijections, similarity classes, intervals and
//! semi-intervals.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::combinat::{Bipartition, Partition};
use crate::error::{Error, Result};
use crate::uniclass::{DefectSet, Eps, EpsilonMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolParams {
    pub r: u32,
    pub s: u32,
}

impl SymbolParams {
    pub const fn new(r: u32, s: u32) -> Self {
        SymbolParams { r, s }
    }

    /// Minimal gap r+s between entries of one row.
    pub fn gap(&self) -> u32 {
        self.r + self.s
    }

    /// Families with s = 0 use unordered symbols.
    pub fn is_unordered(&self) -> bool {
        self.s == 0 && self.r > 0
    }

    fn add(self, o: SymbolParams) -> SymbolParams {
        SymbolParams::new(self.r + o.r, self.s + o.s)
    }
}

impl fmt::Display for SymbolParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

fn floor_half(d: i64) -> i64 {
    d.div_euclid(2)
}

/// Σa + Σb − rank for a symbol with |B| = m and defect d.
fn rank_offset(p: SymbolParams, m: i64, d: i64) -> i64 {
    let (g, r) = (p.gap() as i64, p.r as i64);
    let h = floor_half(d);
    g * (m + h) * (m + d - h) - r * (m + h)
}

/// Rank n_0 of Λ_d^{r,s}.
pub fn special_rank(p: SymbolParams, d: i64) -> i64 {
    let (g, s) = (p.gap() as i64, p.s as i64);
    let h = floor_half(d);
    g * h * (d - h) - s * h
}

/// An (r,s)-symbol up to shift.
///
/// The stored rows are one representative; equality, hashing and ordering
/// use the normalized (and, when unordered, oriented) representative.
#[derive(Clone, Debug)]
pub struct Symbol {
    a: Vec<u32>,
    b: Vec<u32>,
    params: SymbolParams,
    unordered: bool,
    copy: u8,
}

fn check_row(row: &[u32], gap: u32, name: &str) -> Result<()> {
    for w in row.windows(2) {
        if w[1] < w[0] || w[1] - w[0] < gap {
            return Err(Error::InvalidSymbol(format!("{name} entries {} and {} closer than {gap}", w[0], w[1])));
        }
    }
    Ok(())
}

fn join(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl Symbol {
    /// Validates the gap conditions and b_1 ≥ s.
    pub fn new(a: Vec<u32>, b: Vec<u32>, params: SymbolParams, unordered: bool) -> Result<Symbol> {
        check_row(&a, params.gap(), "A")?;
        check_row(&b, params.gap(), "B")?;
        if let Some(&b1) = b.first() {
            if b1 < params.s {
                return Err(Error::InvalidSymbol(format!("b_1 = {b1} < s = {}", params.s)));
            }
        }
        if unordered && params.s != 0 {
            return Err(Error::InvalidSymbol("unordered symbols need s = 0".into()));
        }
        Ok(Symbol { a, b, params, unordered, copy: 0 })
    }

    /// Sets the copy tag; it only has an effect on degenerate symbols.
    pub fn with_copy(mut self, copy: u8) -> Symbol {
        self.copy = copy.min(1);
        self
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn b(&self) -> &[u32] {
        &self.b
    }

    pub fn params(&self) -> SymbolParams {
        self.params
    }

    pub fn is_unordered(&self) -> bool {
        self.unordered
    }

    pub fn copy_tag(&self) -> u8 {
        if self.is_degenerate() {
            self.copy
        } else {
            0
        }
    }

    /// (A,A) with A nonempty after normalization, for unordered symbols.
    pub fn is_degenerate(&self) -> bool {
        let (a, b) = self.normal_rows();
        self.unordered && a == b && !a.is_empty()
    }

    fn normal_rows(&self) -> (Vec<u32>, Vec<u32>) {
        let (mut a, mut b) = (self.a.clone(), self.b.clone());
        let (g, s) = (self.params.gap(), self.params.s);
        while !a.is_empty() && !b.is_empty() && a[0] == 0 && b[0] == s {
            a.remove(0);
            b.remove(0);
            a.iter_mut().for_each(|x| *x -= g);
            b.iter_mut().for_each(|x| *x -= g);
        }
        if self.unordered {
            let swap = match a.len().cmp(&b.len()) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => a > b,
            };
            if swap {
                std::mem::swap(&mut a, &mut b);
            }
        }
        (a, b)
    }

    fn key(&self) -> (SymbolParams, bool, Vec<u32>, Vec<u32>, u8) {
        let (a, b) = self.normal_rows();
        (self.params, self.unordered, a, b, self.copy_tag())
    }

    /// |A| − |B|, taken after orientation for unordered symbols.
    pub fn defect(&self) -> i64 {
        let (a, b) = if self.unordered { self.normal_rows() } else { (self.a.clone(), self.b.clone()) };
        a.len() as i64 - b.len() as i64
    }

    /// |A| − |B| of the stored representative.
    fn raw_defect(&self) -> i64 {
        self.a.len() as i64 - self.b.len() as i64
    }

    pub fn rank(&self) -> Result<i64> {
        let sum: i64 = self.a.iter().chain(&self.b).map(|&x| x as i64).sum();
        let n = sum - rank_offset(self.params, self.b.len() as i64, self.raw_defect());
        if n < 0 {
            Err(Error::NegativeRank(n))
        } else {
            Ok(n)
        }
    }

    pub fn shift_up(&self) -> Symbol {
        let (g, s) = (self.params.gap(), self.params.s);
        let a = std::iter::once(0).chain(self.a.iter().map(|x| x + g)).collect();
        let b = std::iter::once(s).chain(self.b.iter().map(|x| x + g)).collect();
        Symbol { a, b, ..self.clone() }
    }

    /// The minimal representative, oriented when unordered.
    pub fn normalize(&self) -> Symbol {
        let (a, b) = self.normal_rows();
        Symbol { a, b, ..self.clone() }
    }

    /// The same symbol with A and B exchanged (unordered symbols only).
    pub fn swapped(&self) -> Symbol {
        Symbol { a: self.b.clone(), b: self.a.clone(), ..self.clone() }
    }

    /// a_1 ≤ b_1 ≤ a_2 ≤ ⋯ for defect 0 or 1.
    pub fn is_distinguished(&self) -> bool {
        let (a, b) = self.normal_rows();
        let d = a.len() as i64 - b.len() as i64;
        if d != 0 && d != 1 {
            return false;
        }
        let mut merged = Vec::with_capacity(a.len() + b.len());
        for i in 0..a.len() {
            merged.push(a[i]);
            if i < b.len() {
                merged.push(b[i]);
            }
        }
        merged.windows(2).all(|w| w[0] <= w[1])
    }
}

impl PartialEq for Symbol {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for Symbol {}

impl Hash for Symbol {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.normal_rows();
        write!(f, "{}|{}", join(&a), join(&b))?;
        if self.is_degenerate() {
            f.write_str(if self.copy == 0 { "'" } else { "''" })?;
        }
        Ok(())
    }
}

/// Validating constructor; see [`Symbol::new`].
pub fn make_symbol(a: Vec<u32>, b: Vec<u32>, params: SymbolParams, unordered: bool) -> Result<Symbol> {
    Symbol::new(a, b, params, unordered)
}

/// The symbol Λ_d^{r,s}.
pub fn lambda_special(params: SymbolParams, d: i64) -> Symbol {
    let g = params.gap();
    let (a, b) = match d.cmp(&0) {
        Ordering::Greater => ((0..d as u32).map(|i| i * g).collect(), vec![]),
        Ordering::Less => (vec![], (0..(-d) as u32).map(|i| params.s + i * g).collect()),
        Ordering::Equal => (vec![], vec![]),
    };
    Symbol { a, b, params, unordered: params.is_unordered(), copy: 0 }
}

/// Entry-wise sum of two symbols of equal defect, at a common shape.
///
/// The parameters add, so a (0,0) symbol plus Λ_d^{r,s} is an (r,s)-symbol.
pub fn add_symbols(x: &Symbol, y: &Symbol) -> Result<Symbol> {
    if x.raw_defect() != y.raw_defect() {
        return Err(Error::DefectMismatch(x.raw_defect(), y.raw_defect()));
    }
    let (mut x, mut y) = (x.clone(), y.clone());
    while x.b.len() < y.b.len() {
        x = x.shift_up();
    }
    while y.b.len() < x.b.len() {
        y = y.shift_up();
    }
    let a = x.a.iter().zip(&y.a).map(|(p, q)| p + q).collect();
    let b = x.b.iter().zip(&y.b).map(|(p, q)| p + q).collect();
    let params = x.params.add(y.params);
    let unordered = params.is_unordered() || x.unordered || y.unordered;
    Ok(Symbol::new(a, b, params, unordered)?.with_copy(x.copy.max(y.copy)))
}

/// The symbol of the character `b` of W_{n−n_0} at defect `d`.
pub fn from_bipartition(bp: &Bipartition, d: i64, params: SymbolParams) -> Result<Symbol> {
    if !bp.is_ordered() && d != 0 {
        return Err(Error::InvalidBipartition("unordered bipartitions only occur at defect 0".into()));
    }
    let (la, lb) = (bp.alpha().len() as i64, bp.beta().len() as i64);
    let m = lb.max(la - d).max(-d).max(0);
    let alpha = bp.alpha().padded((m + d) as usize);
    let beta = bp.beta().padded(m as usize);
    let raw = Symbol { a: alpha, b: beta, params: SymbolParams::new(0, 0), unordered: !bp.is_ordered(), copy: bp.copy_tag() };
    add_symbols(&raw, &lambda_special(params, d))
}

/// Inverse of [`from_bipartition`]: subtracts Λ_d at the symbol's shape.
pub fn to_bipartition(sym: &Symbol) -> Result<(Bipartition, i64)> {
    let norm = sym.normalize();
    let d = norm.raw_defect();
    let mut lam = lambda_special(sym.params, d);
    while lam.b.len() < norm.b.len() || lam.a.len() < norm.a.len() {
        lam = lam.shift_up();
    }
    let sub = |x: &[u32], y: &[u32]| -> Result<Partition> {
        let v: Vec<i64> = x.iter().zip(y).map(|(p, q)| *p as i64 - *q as i64).collect();
        if v.iter().any(|&t| t < 0) || v.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidSymbol(format!("{sym} does not come from a bipartition")));
        }
        Ok(Partition::new(v.into_iter().map(|t| t as u32).collect()))
    };
    let alpha = sub(&norm.a, &lam.a)?;
    let beta = sub(&norm.b, &lam.b)?;
    let bp = if sym.unordered && d == 0 {
        Bipartition::unordered(alpha, beta, sym.copy_tag())
    } else {
        Bipartition::ordered(alpha, beta)
    };
    Ok((bp, d))
}

/// A maximal run of S = (A∪B)∖(A∩B) with consecutive differences below r+s.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub entries: Vec<u32>,
    pub initial: bool,
}

impl Interval {
    pub fn tail(&self) -> u32 {
        self.entries[0]
    }
}

/// The sorted entries of S for the stored representative.
fn difference_set(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut s: Vec<u32> = a.iter().filter(|x| !b.contains(x)).chain(b.iter().filter(|x| !a.contains(x))).copied().collect();
    s.sort_unstable();
    s
}

/// Intervals of the stored representative, in increasing order.
pub fn intervals(sym: &Symbol) -> Vec<Interval> {
    let s = difference_set(&sym.a, &sym.b);
    let g = sym.params.gap();
    let mut out: Vec<Interval> = Vec::new();
    for x in s {
        match out.last_mut() {
            Some(iv) if x - iv.entries.last().unwrap() < g => iv.entries.push(x),
            _ => out.push(Interval { entries: vec![x], initial: x < sym.params.s }),
        }
    }
    out
}

/// Moves the entries of the given intervals to the other row.
pub fn flip_intervals(sym: &Symbol, flips: &[&Interval]) -> Result<Symbol> {
    let moved = |x: &u32| flips.iter().any(|iv| iv.entries.contains(x));
    let mut a: Vec<u32> = sym.a.iter().filter(|x| !moved(x) || sym.b.contains(x)).copied().collect();
    let mut b: Vec<u32> = sym.b.iter().filter(|x| !moved(x) || sym.a.contains(x)).copied().collect();
    a.extend(sym.b.iter().filter(|x| moved(x) && !sym.a.contains(x)));
    b.extend(sym.a.iter().filter(|x| moved(x) && !sym.b.contains(x)));
    a.sort_unstable();
    b.sort_unstable();
    Ok(Symbol::new(a, b, sym.params, sym.unordered)?.with_copy(sym.copy))
}

/// Symbols sharing A∪B and A∩B, with the F_2-structure given by intervals.
#[derive(Clone, Debug)]
pub struct SimilarityClass {
    pub members: Vec<Symbol>,
    pub distinguished: Symbol,
    pub non_initial_intervals: Vec<Interval>,
}

/// The distinguished symbol similar to `sym`, at the same shape.
pub fn distinguished_of(sym: &Symbol) -> Result<Symbol> {
    let mut all: Vec<u32> = sym.a.iter().chain(&sym.b).copied().collect();
    all.sort_unstable();
    let a = all.iter().step_by(2).copied().collect();
    let b = all.iter().skip(1).step_by(2).copied().collect();
    Ok(Symbol::new(a, b, sym.params, sym.unordered)?.with_copy(sym.copy))
}

pub fn similarity_class(sym: &Symbol) -> Result<SimilarityClass> {
    if sym.is_degenerate() {
        let members = vec![sym.clone().with_copy(0), sym.clone().with_copy(1)];
        return Ok(SimilarityClass { members, distinguished: sym.clone(), non_initial_intervals: vec![] });
    }
    let dist = distinguished_of(sym)?;
    let flippable: Vec<Interval> = intervals(&dist).into_iter().filter(|iv| !iv.initial).collect();
    let free = if sym.unordered { flippable.len().saturating_sub(1) } else { flippable.len() };
    let mut members = Vec::with_capacity(1 << free);
    for mask in 0u64..1 << free {
        let chosen: Vec<&Interval> = (0..free).filter(|i| mask >> i & 1 == 1).map(|i| &flippable[i]).collect();
        members.push(flip_intervals(&dist, &chosen)?);
    }
    Ok(SimilarityClass { members, distinguished: dist, non_initial_intervals: flippable })
}

/// Rows (gap ≥ `gap`, first entry ≥ `start`) of the given length whose
/// entries exceed the minimal row start, start+gap, … by `excess` in total.
fn rows_with_excess(len: usize, start: u32, gap: u32, excess: u32) -> Vec<Vec<u32>> {
    // p is weakly increasing; row entry t is start + t·gap + p_t
    fn rec(t: usize, len: usize, lo: u32, rest: u32, p: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if t == len {
            if rest == 0 {
                out.push(p.clone());
            }
            return;
        }
        let left = (len - t) as u32;
        if t + 1 == len {
            if rest >= lo {
                p.push(rest);
                out.push(p.clone());
                p.pop();
            }
            return;
        }
        let mut x = lo;
        while x * left <= rest {
            p.push(x);
            rec(t + 1, len, x, rest - x, p, out);
            p.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    rec(0, len, 0, excess, &mut Vec::new(), &mut out);
    for row in &mut out {
        for (t, x) in row.iter_mut().enumerate() {
            *x += start + t as u32 * gap;
        }
    }
    out
}

/// Normalized symbols of rank `n` whose defect lies in `defects`.
///
/// For unordered parameters only d ≥ 0 is used and degenerate symbols are
/// listed twice (copy tags 0 and 1); the empty symbol is listed once.
pub fn enumerate_symbols(n: u32, params: SymbolParams, defects: DefectSet) -> Vec<Symbol> {
    let unordered = params.is_unordered();
    let (g, s) = (params.gap(), params.s);
    let bound = 2 * n as i64 + 4;
    let mut out = Vec::new();
    for d in -bound..=bound {
        if !defects.contains(d) || (unordered && d < 0) {
            continue;
        }
        let n0 = special_rank(params, d);
        if n0 < 0 || n0 > n as i64 {
            continue;
        }
        for m in (-d).max(0)..=(n as i64 + d.abs() + 1) {
            let total = n as i64 + rank_offset(params, m, d);
            if total < 0 {
                continue;
            }
            let (la, lb) = ((m + d) as usize, m as usize);
            let min_a = (0..la as i64).map(|t| t * g as i64).sum::<i64>();
            let min_b = (0..lb as i64).map(|t| s as i64 + t * g as i64).sum::<i64>();
            let excess = total - min_a - min_b;
            if excess < 0 {
                continue;
            }
            let excess = excess as u32;
            for ea in 0..=excess {
                for a in rows_with_excess(la, 0, g, ea) {
                    for b in rows_with_excess(lb, s, g, excess - ea) {
                        if la > 0 && lb > 0 && a[0] == 0 && b[0] == s {
                            continue;
                        }
                        if unordered && d == 0 && a > b {
                            continue;
                        }
                        let sym = Symbol { a: a.clone(), b, params, unordered, copy: 0 };
                        if sym.is_degenerate() {
                            out.push(sym.clone().with_copy(1));
                        }
                        out.push(sym);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Position data of the ν-sequence attached to a class (the block layout
/// used to build distinguished symbols).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuEntry {
    /// Part size of the row, 0 for padding rows.
    pub part: u32,
    /// Kind of the block the row belongs to.
    pub kind: Eps,
    pub value: u32,
}

/// The ν-sequence of (λ, ε) for the parameter set of a family, padded to
/// `len` rows. Rows of paired kind must come in runs of even length.
pub fn nu_sequence(lambda: &Partition, eps: &EpsilonMap, params: SymbolParams, len: usize) -> Result<Vec<NuEntry>> {
    let rows = lambda.padded(len);
    let kind_of = |h: u32| -> Eps {
        match (params.r, params.s) {
            (1, 1) => if h % 2 == 0 { Eps::One } else { Eps::Omega },
            (2, 0) => if h % 2 == 1 { Eps::One } else { Eps::Omega },
            (2, 2) if h == 0 => Eps::One,
            (4, 0) if h == 0 => Eps::Zero,
            _ => if h % 2 == 1 { Eps::Omega } else { eps.get(h) },
        }
    };
    let step: i64 = if params.r == 1 || params.s == 0 && params.r == 2 { 1 } else { 2 };
    // ν offsets per kind: (singleton, first row of pair, second row minus first)
    let (single, omega, zero): (i64, i64, i64) = match (params.r, params.s) {
        (1, 1) => (0, 1, 0),
        (2, 0) => (-3, -2, 0),
        (2, 2) => (0, 1, 2),
        (4, 0) => (-6, -5, -4),
        _ => return Err(Error::InvalidSymbol(format!("no block layout for parameters {params}"))),
    };
    let mut out = Vec::with_capacity(len);
    let mut i = 0;
    while i < rows.len() {
        let h = rows[i];
        let k = kind_of(h);
        let pos = step * (i as i64 + 1);
        match k {
            Eps::One => {
                out.push((h, k, (h as i64 + single) / 2 + pos));
                i += 1;
            }
            _ => {
                if i + 1 >= rows.len() || rows[i + 1] != h {
                    return Err(Error::InvalidClass(format!("row {h} has no partner")));
                }
                let (first, second) = if k == Eps::Zero || step == 1 {
                    let off = if step == 1 { omega } else { zero };
                    let v = (h as i64 + off) / 2 + pos;
                    (v, v)
                } else {
                    let v = (h as i64 + omega) / 2 + pos;
                    (v, v + 1)
                };
                out.push((h, k, first));
                out.push((h, k, second));
                i += 2;
            }
        }
    }
    out.into_iter()
        .map(|(part, kind, v)| {
            if v < 0 {
                Err(Error::Internal(format!("negative ν entry for row {part}")))
            } else {
                Ok(NuEntry { part, kind, value: v as u32 })
            }
        })
        .collect()
}

/// The rows I_h of the ν-layout belonging to one part size h > 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiInterval {
    pub part: u32,
    pub kind: Eps,
    pub entries: Vec<u32>,
}

impl SemiInterval {
    pub fn new(part: u32, kind: Eps, mut entries: Vec<u32>) -> Self {
        entries.sort_unstable();
        SemiInterval { part, kind, entries }
    }

    pub fn tail(&self) -> u32 {
        self.entries[0]
    }

    pub fn max(&self) -> u32 {
        *self.entries.last().unwrap()
    }
}

/// Minimal padding for the block layout of `params`.
pub fn minimal_padding(lambda: &Partition, params: SymbolParams) -> usize {
    let l = lambda.len();
    if params.s > 0 {
        l + l % 2
    } else {
        l
    }
}

/// Semi-intervals of (λ, ε) for the parameters of a family, by part size.
///
/// In characteristic two the shapes are {a, a+2, …}, {a, a, a+4, a+4, …}
/// and {a, a+1, a+4, a+5, …} for kinds 1, 0 and ω. With (1,1) or (2,0)
/// they are {a, a+1, …} for kind 1 and {a, a, a+2, a+2, …} for kind ω.
pub fn semi_intervals(lambda: &Partition, eps: &EpsilonMap, params: SymbolParams) -> Result<Vec<SemiInterval>> {
    let nu = nu_sequence(lambda, eps, params, minimal_padding(lambda, params))?;
    Ok(lambda
        .distinct()
        .into_iter()
        .map(|h| {
            let rows: Vec<&NuEntry> = nu.iter().filter(|e| e.part == h).collect();
            SemiInterval::new(h, rows[0].kind, rows.iter().map(|e| e.value).collect())
        })
        .collect())
}

/// tail(upper) − max(lower); the lower one must lie entirely below.
pub fn semi_interval_distance(upper: &SemiInterval, lower: &SemiInterval) -> Result<i64> {
    if lower.max() >= upper.tail() {
        return Err(Error::Overlap);
    }
    Ok(upper.tail() as i64 - lower.max() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P11: SymbolParams = SymbolParams::new(1, 1);
    const P22: SymbolParams = SymbolParams::new(2, 2);
    const P20: SymbolParams = SymbolParams::new(2, 0);

    fn sym(a: &[u32], b: &[u32], p: SymbolParams) -> Symbol {
        Symbol::new(a.to_vec(), b.to_vec(), p, p.is_unordered()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(make_symbol(vec![0, 6], vec![2], P22, false).is_ok());
        assert!(make_symbol(vec![0, 2], vec![1], P22, false).is_err());
        let e = make_symbol(vec![], vec![], P11, false).unwrap();
        assert_eq!((e.rank().unwrap(), e.defect()), (0, 0));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(sym(&[0, 5], &[3], P22).rank().unwrap(), 2);
        assert_eq!(sym(&[0, 3], &[2], P11).rank().unwrap(), 2);
        let s = sym(&[], &[2], P22);
        assert_eq!((s.rank().unwrap(), s.defect()), (2, -1));
    }

    #[test]
    fn shift_and_normalize() {
        let s = sym(&[2], &[], P22);
        let up = s.shift_up();
        assert_eq!((up.a(), up.b()), (&[0, 6][..], &[2][..]));
        let back = up.normalize();
        assert_eq!((back.a(), back.b()), (&[2][..], &[][..]));
        assert_eq!(s, up);
    }

    #[test]
    fn special_symbols() {
        let l = lambda_special(P22, 1);
        assert_eq!((l.a(), l.b()), (&[0][..], &[][..]));
        assert_eq!(special_rank(P22, 1), 0);
        let l = lambda_special(P22, -1);
        assert_eq!((l.a(), l.b()), (&[][..], &[2][..]));
        assert_eq!(special_rank(P22, -1), 2);
        assert_eq!(lambda_special(P11, 0), sym(&[], &[], P11));
    }

    #[test]
    fn addition() {
        let raw = Symbol::new(vec![0, 1], vec![1], SymbolParams::new(0, 0), false).unwrap();
        let s = add_symbols(&raw, &lambda_special(P22, 1)).unwrap();
        assert_eq!((s.a(), s.b()), (&[0, 5][..], &[3][..]));
        let raw = Symbol::new(vec![1, 1], vec![0], SymbolParams::new(0, 0), false).unwrap();
        let s = add_symbols(&raw, &sym(&[0, 4], &[2], P22)).unwrap();
        assert_eq!((s.a(), s.b()), (&[1, 5][..], &[2][..]));
        assert!(add_symbols(&sym(&[0], &[], P11), &sym(&[], &[1], P11)).is_err());
    }

    #[test]
    fn bipartition_round_trip_examples() {
        let bp = Bipartition::ordered(Partition::new(vec![2]), Partition::empty());
        let s = from_bipartition(&bp, 1, P22).unwrap();
        assert_eq!(s, sym(&[2], &[], P22));
        assert_eq!(to_bipartition(&s).unwrap(), (bp, 1));
        let bp = Bipartition::ordered(Partition::new(vec![1]), Partition::new(vec![1]));
        assert_eq!(from_bipartition(&bp, 1, P11).unwrap(), sym(&[0, 3], &[2], P11));
        let e = Bipartition::ordered(Partition::empty(), Partition::empty());
        assert_eq!(from_bipartition(&e, -1, P22).unwrap(), lambda_special(P22, -1));
    }

    #[test]
    fn distinguished_examples() {
        assert!(sym(&[0, 3], &[2], P11).is_distinguished());
        assert!(!sym(&[0], &[2, 6], P22).is_distinguished());
        assert!(sym(&[1, 3], &[1, 3], P20).is_distinguished());
    }

    #[test]
    fn similarity_examples() {
        let c = similarity_class(&sym(&[0, 6], &[2], P22)).unwrap();
        assert_eq!(c.members.len(), 2);
        assert!(c.members.contains(&sym(&[0], &[2, 6], P22)));
        assert_eq!(c.non_initial_intervals.len(), 1);
        assert_eq!(c.non_initial_intervals[0].entries, vec![6]);
        assert_eq!(similarity_class(&sym(&[0, 5], &[3], P22)).unwrap().members.len(), 1);
        let c = similarity_class(&sym(&[0, 3], &[1, 4], P20)).unwrap();
        assert_eq!(c.members.len(), 2);
        assert_eq!(c.non_initial_intervals.len(), 2);
    }

    #[test]
    fn interval_examples() {
        let iv = intervals(&sym(&[0, 4], &[1], P11));
        assert_eq!(iv, vec![
            Interval { entries: vec![0, 1], initial: true },
            Interval { entries: vec![4], initial: false }
        ]);
        assert!(intervals(&sym(&[], &[], P11)).is_empty());
        assert_eq!(intervals(&sym(&[0, 4], &[4], P22)), vec![Interval { entries: vec![0], initial: true }]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_symbols(2, P22, DefectSet::Odd).len(), 6);
        assert_eq!(enumerate_symbols(2, P11, DefectSet::Odd).len(), 7);
        assert_eq!(enumerate_symbols(0, P20, DefectSet::Only(0)).len(), 1);
    }

    #[test]
    fn semi_interval_examples() {
        let lam = Partition::new(vec![2, 4]);
        let eps = EpsilonMap::from_pairs([(2, Eps::One), (4, Eps::One)]);
        let si = semi_intervals(&lam, &eps, P22).unwrap();
        assert_eq!(si.len(), 2);
        assert!(si.iter().all(|x| x.kind == Eps::One));
        assert_eq!(semi_interval_distance(&si[1], &si[0]).unwrap(), 3);

        let lam = Partition::new(vec![2, 2]);
        let eps = EpsilonMap::from_pairs([(2, Eps::Zero)]);
        let si = semi_intervals(&lam, &eps, P22).unwrap();
        assert_eq!(si, vec![SemiInterval::new(2, Eps::Zero, vec![4, 4])]);

        let hi = SemiInterval::new(4, Eps::One, vec![6, 8]);
        let lo = SemiInterval::new(2, Eps::One, vec![1, 3]);
        assert_eq!(semi_interval_distance(&hi, &lo).unwrap(), 3);
        assert_eq!(semi_interval_distance(&lo, &hi), Err(Error::Overlap));
    }
}
