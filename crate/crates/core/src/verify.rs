//! Exhaustive verification suites. Each suite counts the checks it runs and
//! collects a line per failure; notes carry findings that are not failures.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::branching::{descent_search, verify_restriction};
use crate::combinat::{gf2_rank, Bipartition, GF2Matrix, Partition};
use crate::error::Result;
use crate::springer::{pair_to_symbol, preferred_extension, rho, rho_inverse, symbol_to_pair, weyl_character_count};
use crate::splitforms::{
    arf_invariant, assemble, basic_gram, epsilon_of, hyperbolic_basis, jordan_type, marked_positions,
    pascal_block_matrix, quadratic_form, regular_unipotent, FormMatrix, SummandCase,
};
use crate::symbols::{enumerate_symbols, semi_interval_distance, semi_intervals, similarity_class, Symbol};
use crate::uniclass::{
    component_group, enumerate_classes, enumerate_pairs, local_systems, splits_in_so, CharParity, Eps,
    Family, GroupDescriptor,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Cardinality,
    Similarity,
    Bijection,
    Restriction,
    Forms,
    Assembly,
    Descent,
    Preferred,
    Splitting,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Cardinality,
        Suite::Similarity,
        Suite::Bijection,
        Suite::Restriction,
        Suite::Forms,
        Suite::Assembly,
        Suite::Descent,
        Suite::Preferred,
        Suite::Splitting,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Cardinality => "cardinality",
            Suite::Similarity => "similarity",
            Suite::Bijection => "bijection",
            Suite::Restriction => "restriction",
            Suite::Forms => "forms",
            Suite::Assembly => "assembly",
            Suite::Descent => "descent",
            Suite::Preferred => "preferred",
            Suite::Splitting => "splitting",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    /// The bound each suite runs to by default. It is the rank n, except
    /// for `forms` (the dimension N) and `assembly` (|λ|).
    pub fn default_max(&self) -> u32 {
        match self {
            Suite::Restriction => 6,
            Suite::Forms => 32,
            Suite::Assembly => 12,
            _ => 8,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: u32,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, max_n: u32) -> Self {
        SuiteReport { suite, max_n, checks: 0, failures: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn check_result<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        self.checks += 1;
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.failures.push(format!("{}: {e}", what()));
                None
            }
        }
    }
}

pub fn run_suite(suite: Suite, max_n: u32) -> SuiteReport {
    let mut r = SuiteReport::new(suite, max_n);
    match suite {
        Suite::Cardinality => cardinality(&mut r),
        Suite::Similarity => similarity(&mut r),
        Suite::Bijection => bijection(&mut r),
        Suite::Restriction => restriction(&mut r),
        Suite::Forms => forms(&mut r),
        Suite::Assembly => assembly(&mut r),
        Suite::Descent => descent(&mut r),
        Suite::Preferred => preferred(&mut r),
        Suite::Splitting => splitting(&mut r),
    }
    r
}

fn groups(max_n: u32) -> impl Iterator<Item = GroupDescriptor> {
    (0..=max_n).flat_map(GroupDescriptor::all_split)
}

fn cardinality(r: &mut SuiteReport) {
    for g in groups(r.max_n) {
        let (pairs, chars) = (enumerate_pairs(&g).len(), weyl_character_count(&g));
        r.check(pairs == chars, || format!("{g}: {pairs} pairs vs {chars} characters"));
    }
    if r.max_n >= 2 {
        for (ch, want) in [(CharParity::Odd, 7), (CharParity::Two, 6)] {
            let g = GroupDescriptor::split(Family::Sp, 2, ch);
            let got = enumerate_pairs(&g).len();
            r.check(got == want, || format!("{g}: {got} pairs, expected {want}"));
        }
    }
}

fn similarity(r: &mut SuiteReport) {
    for g in groups(r.max_n) {
        for c in enumerate_classes(&g) {
            let Some(sym) = r.check_result(rho(&g, &c), || format!("{g} {c}: rho")) else { continue };
            let Some(class) = r.check_result(similarity_class(&sym), || format!("{g} {sym}: similarity class")) else {
                continue;
            };
            // A degenerate class lists both copies of each member.
            let copies = if sym.is_degenerate() { 2 } else { 1 };
            let distinguished = class.members.iter().filter(|s| s.is_distinguished()).count();
            r.check(distinguished == copies, || format!("{g} {c}: {distinguished} distinguished symbols"));
            let want = if sym.is_degenerate() { 1 } else { local_systems(&component_group(&g, &c)).len() };
            let size = class.members.len() / copies;
            r.check(size == want, || format!("{g} {c}: class of size {size}, |A(u)^| = {want}"));
        }
    }
}

fn bijection(r: &mut SuiteReport) {
    for g in groups(r.max_n) {
        let all: HashSet<Symbol> = enumerate_symbols(g.n, g.symbol_params(), g.defects()).into_iter().collect();
        let mut seen = HashSet::new();
        for (c, ls) in enumerate_pairs(&g) {
            let Some(s) = r.check_result(pair_to_symbol(&g, &c, &ls), || format!("{g} {c} {ls}")) else { continue };
            r.check(all.contains(&s), || format!("{g} {c} {ls}: {s} is not a symbol of the group"));
            r.check(seen.insert(s.clone()), || format!("{g}: {s} reached twice"));
            let back = symbol_to_pair(&g, &s).ok();
            r.check(back.as_ref() == Some(&(c.clone(), ls.clone())), || format!("{g} {c} {ls}: round trip via {s}"));
        }
        r.check(seen.len() == all.len(), || format!("{g}: {} of {} symbols reached", seen.len(), all.len()));
        for c in enumerate_classes(&g) {
            let back = rho(&g, &c).and_then(|s| rho_inverse(&g, &s));
            r.check(back.as_ref() == Ok(&c), || format!("{g} {c}: rho_inverse(rho) = {back:?}"));
        }
    }
}

fn restriction(r: &mut SuiteReport) {
    for g in groups(r.max_n).filter(|g| g.n > 0) {
        let Some(rep) = r.check_result(verify_restriction(&g), || format!("{g}: restriction")) else { continue };
        r.checks += rep.checked;
        r.failures.extend(rep.mismatches);
    }
}

/// Unknowns f(e_a, e_b), a < b, of an alternating form on GF(2)^N.
fn pair_index(dim: usize, a: usize, b: usize) -> usize {
    a * dim - a * (a + 1) / 2 + (b - a - 1)
}

/// Solves the linear system for an alternating v-invariant f with the
/// normalizations at e_N; returns the solution if it is unique.
pub fn solve_basic_form(dim: usize) -> Option<GF2Matrix> {
    let v = regular_unipotent(dim);
    let unknowns = dim * (dim - 1) / 2;
    let mut rows: Vec<(Vec<bool>, bool)> = Vec::new();
    for a in 0..dim {
        for b in a + 1..dim {
            let mut row = vec![false; unknowns];
            row[pair_index(dim, a, b)] ^= true;
            for k in 0..dim {
                for l in 0..dim {
                    if k != l && v.get(k, a) && v.get(l, b) {
                        row[pair_index(dim, k.min(l), k.max(l))] ^= true;
                    }
                }
            }
            rows.push((row, false));
        }
    }
    let mut pin = |a: usize, val: bool| {
        let mut row = vec![false; unknowns];
        row[pair_index(dim, a, dim - 1)] = true;
        rows.push((row, val));
    };
    pin(0, true);
    for i in dim / 2..dim - 1 {
        pin(i, false);
    }
    let x = solve_unique(&rows, unknowns)?;
    let mut f = GF2Matrix::zeros(dim, dim);
    for a in 0..dim {
        for b in a + 1..dim {
            if x[pair_index(dim, a, b)] {
                f.set(a, b, true);
                f.set(b, a, true);
            }
        }
    }
    Some(f)
}

/// Solves for the values of a v-invariant Q polarizing to `f` with
/// Q(e_N) = 0; returns them if unique.
pub fn solve_quadratic_values(f: &GF2Matrix) -> Option<Vec<bool>> {
    let dim = f.rows();
    let v = regular_unipotent(dim);
    let mut rows = Vec::new();
    for i in 0..dim {
        // Q(v e_i) + Q(e_i) = 0, expanded in the unknowns Q(e_k).
        let col = v.col(i);
        let mut row = col.clone();
        row[i] ^= true;
        let mut rhs = false;
        for k in 0..dim {
            for l in k + 1..dim {
                rhs ^= col[k] && col[l] && f.get(k, l);
            }
        }
        rows.push((row, rhs));
    }
    let mut last = vec![false; dim];
    last[dim - 1] = true;
    rows.push((last, false));
    solve_unique(&rows, dim)
}

fn solve_unique(rows: &[(Vec<bool>, bool)], unknowns: usize) -> Option<Vec<bool>> {
    let mut m = GF2Matrix::zeros(rows.len(), unknowns);
    for (i, (row, _)) in rows.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if x {
                m.set(i, j, true);
            }
        }
    }
    if gf2_rank(&m) != unknowns {
        return None;
    }
    m.solve(&rows.iter().map(|(_, b)| *b).collect::<Vec<_>>())
}

fn binom_mod2(n: usize, k: usize) -> bool {
    k <= n && (k & !n) == 0
}

fn forms(r: &mut SuiteReport) {
    let max = r.max_n as usize;
    for dim in (2..=max).step_by(2) {
        let n = dim / 2;
        let f = basic_gram(dim).expect("even dimension");
        let v = regular_unipotent(dim);
        r.check(solve_basic_form(dim).as_ref() == Some(&f), || format!("N={dim}: f is not the unique solution"));
        let q = quadratic_form(dim).expect("even dimension");
        r.check(q.is_invariant_under(&v), || format!("N={dim}: Q not v-invariant"));
        r.check(!q.values[dim - 1], || format!("N={dim}: Q(e_N) ≠ 0"));
        r.check(solve_quadratic_values(&f).as_ref() == Some(&q.values), || format!("N={dim}: Q not unique"));
        r.check(q.is_nondegenerate(), || format!("N={dim}: Q degenerate"));
        r.check(arf_invariant(&q) == Ok(0), || format!("N={dim}: Arf invariant not 0"));
        let b = hyperbolic_basis(dim).expect("even dimension");
        r.check(gf2_rank(&b) == dim, || format!("N={dim}: e′ is not a basis"));
        let h = q.in_basis(&b);
        r.check(h.values.iter().all(|x| !x), || format!("N={dim}: some Q(e′_i) ≠ 0"));
        let table = (0..dim).all(|i| (0..dim).all(|j| h.polarization.get(i, j) == (i + j == dim - 1)));
        r.check(table, || format!("N={dim}: f(e′_i, e′_j) table"));
        let a = pascal_block_matrix(n);
        let from_f = (0..n).all(|i| (0..n).all(|j| a.get(i, j) == f.get(i, dim - 1 - j)));
        r.check(from_f, || format!("N={dim}: A differs from f(e_i, e_{{N−j+1}})"));
    }
    for n in 1..=max {
        let a = pascal_block_matrix(n);
        // a_{ij} = C(n − j, i − j) mod 2, and C(i − 1, j − 1) when n = 2^k.
        let pascal = (0..n).all(|i| (0..n).all(|j| a.get(i, j) == (j <= i && binom_mod2(n - 1 - j, i - j))));
        r.check(pascal, || format!("n={n}: A is not the corner of Pascal's triangle mod 2"));
        if n.is_power_of_two() {
            let full = (0..n).all(|i| (0..n).all(|j| a.get(i, j) == binom_mod2(i, j)));
            r.check(full, || format!("n={n}: A is not Pascal's triangle mod 2"));
        }
        for j in 1..=n {
            let marks = marked_positions(j, n);
            r.check(marks.iter().all(|&(i, k)| a.get(i - 1, k - 1)), || format!("n={n} j={j}: mark on a zero"));
            let rows_ok = (1..=n).all(|i| {
                let count = marks.iter().filter(|m| m.0 == i).count();
                if i == j {
                    count == 1
                } else {
                    count % 2 == 0
                }
            });
            r.check(rows_ok, || format!("n={n} j={j}: row counts of marks"));
            let cols: BTreeSet<usize> = marks.iter().map(|m| m.1).collect();
            let cols_ok = cols.iter().all(|&k| (1..=n).all(|i| marks.contains(&(i, k)) || !a.get(i - 1, k - 1)));
            r.check(cols_ok, || format!("n={n} j={j}: unmarked one in a marked column"));
        }
    }
}

fn assembly(r: &mut SuiteReport) {
    let max = r.max_n;
    for g in (0..=max / 2).flat_map(GroupDescriptor::all_split).filter(|g| g.dimension() <= max) {
        for c in enumerate_classes(&g) {
            let Some(a) = r.check_result(assemble(&g, &c), || format!("{g} {c}: assembly")) else { continue };
            r.check(a.dim() as u32 == g.dimension(), || format!("{g} {c}: dimension {}", a.dim()));
            r.check(a.gram_has_expected_type(), || format!("{g} {c}: form has the wrong type"));
            r.check(a.element_preserves_form(), || format!("{g} {c}: element does not preserve the form"));
            let jt = jordan_type(&a.element);
            r.check(jt.as_ref() == Ok(&c.lambda), || format!("{g} {c}: Jordan type {jt:?}"));
            if let (FormMatrix::Gf2(u), FormMatrix::Gf2(f)) = (&a.element, &a.gram) {
                let eps = epsilon_of(u, f);
                r.check(eps.as_ref() == Ok(&c.eps), || format!("{g} {c}: recovered ε {eps:?}"));
            }
            if let Some(q) = &a.quadratic {
                r.check(arf_invariant(q) == Ok(0), || format!("{g} {c}: quadratic form is not split"));
            }
            let qualifying: Vec<usize> = a
                .summands
                .iter()
                .filter(|s| match g.char_parity {
                    CharParity::Two => s.case != SummandCase::PairZero,
                    CharParity::Odd => s.case == SummandCase::Single,
                })
                .flat_map(|s| s.parts.clone())
                .collect();
            let have: Vec<usize> = a.generators.iter().map(|(j, _)| *j).collect();
            r.check(have == qualifying, || format!("{g} {c}: generators for {have:?}, expected {qualifying:?}"));
            for (j, x) in &a.generators {
                r.check(a.commutes_with_element(x), || format!("{g} {c}: ā_{j} does not commute"));
                r.check(a.group_element_preserves_form(x), || format!("{g} {c}: ā_{j} does not preserve the form"));
            }
        }
    }
}

/// The three (lower kind, upper kind, part difference) patterns allowed at
/// semi-interval distance 3 in characteristic two.
pub const DISTANCE_THREE_PATTERNS: [(Eps, Eps, i64); 3] =
    [(Eps::One, Eps::One, 2), (Eps::One, Eps::Omega, 1), (Eps::Omega, Eps::One, 1)];

fn descent(r: &mut SuiteReport) {
    for g in groups(r.max_n).filter(|g| g.n > 0) {
        for c in enumerate_classes(&g) {
            if g.char_parity == CharParity::Two {
                let Some(mut sis) = r.check_result(semi_intervals(&c.lambda, &c.eps, g.symbol_params()), || {
                    format!("{g} {c}: semi-intervals")
                }) else {
                    continue;
                };
                sis.sort_by_key(|s| s.tail());
                for i in 0..sis.len() {
                    for j in 0..i {
                        let d = semi_interval_distance(&sis[i], &sis[j]);
                        r.check(matches!(d, Ok(d) if d >= 3), || format!("{g} {c}: distance {d:?}"));
                        if d == Ok(3) {
                            let pattern = (sis[j].kind, sis[i].kind, sis[i].part as i64 - sis[j].part as i64);
                            r.check(DISTANCE_THREE_PATTERNS.contains(&pattern), || {
                                format!("{g} {c}: distance 3 between I_{} and I_{}", sis[i].part, sis[j].part)
                            });
                        }
                    }
                }
            }
            r.check_result(descent_search(&g, &c, false), || format!("{g} {c}: descent search"));
        }
    }
}

/// The rows α_i + i − 1 and β_j + j − 1 of the symbol of an ordered
/// bipartition of equal-length padding.
pub fn extension_rows(e: &Bipartition) -> (Vec<u32>, Vec<u32>) {
    let m = e.alpha().len().max(e.beta().len());
    let row = |p: &Partition| p.padded(m).iter().enumerate().map(|(i, x)| x + i as u32).collect();
    (row(e.alpha()), row(e.beta()))
}

fn preferred(r: &mut SuiteReport) {
    for n in 1..=r.max_n {
        let row = Partition::new(vec![n]);
        let e = Bipartition::unordered(row.clone(), Partition::empty(), 0);
        let want = Bipartition::ordered(row, Partition::empty());
        let got = preferred_extension(&e);
        r.check(got.as_ref() == Ok(&want), || format!("{{({n}),()}}: {got:?}"));
    }
    let base: [(Vec<u32>, (Vec<u32>, Vec<u32>)); 2] =
        [(vec![2], (vec![2], vec![0])), (vec![1, 1], (vec![1, 2], vec![0, 1]))];
    for (alpha, rows) in base {
        let e = Bipartition::unordered(Partition::new(alpha), Partition::empty(), 0);
        let got = preferred_extension(&e).map(|x| extension_rows(&x));
        r.check(got.as_ref() == Ok(&rows), || format!("{e}: preferred symbol {got:?}, expected {rows:?}"));
    }
}

/// A class of SO_{2n} in odd characteristic on which the multiplicity rule
/// (no even parts, every odd part of even multiplicity) and the symbol rule
/// (ρ is degenerate) disagree about splitting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingDiscrepancy {
    pub group: GroupDescriptor,
    pub lambda: Partition,
    pub symbol: Symbol,
    pub multiplicity_rule: bool,
    pub symbol_rule: bool,
}

impl fmt::Display for SplittingDiscrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let says = |b: bool| if b { "splits" } else { "does not split" };
        write!(
            f,
            "{} λ={}: multiplicity rule {}, symbol {} {}",
            self.group,
            self.lambda,
            says(self.multiplicity_rule),
            self.symbol,
            says(self.symbol_rule)
        )
    }
}

pub fn multiplicity_split_rule(lambda: &Partition) -> bool {
    !lambda.is_empty() && lambda.distinct().iter().all(|&h| h % 2 == 1 && lambda.multiplicity(h) % 2 == 0)
}

pub fn splitting_discrepancies(max_n: u32) -> Result<Vec<SplittingDiscrepancy>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let g = GroupDescriptor::split(Family::SoEven, n, CharParity::Odd);
        let mut seen = BTreeSet::new();
        for c in enumerate_classes(&g) {
            if !seen.insert(c.lambda.clone()) {
                continue;
            }
            let symbol = rho(&g, &c)?;
            let (m, s) = (multiplicity_split_rule(&c.lambda), symbol.is_degenerate());
            if m != s {
                out.push(SplittingDiscrepancy { group: g, lambda: c.lambda, symbol, multiplicity_rule: m, symbol_rule: s });
            }
        }
    }
    Ok(out)
}

fn splitting(r: &mut SuiteReport) {
    for g in groups(r.max_n).filter(|g| g.char_parity == CharParity::Odd && g.is_orthogonal()) {
        for c in enumerate_classes(&g) {
            let Some(sym) = r.check_result(rho(&g, &c), || format!("{g} {c}: rho")) else { continue };
            let split = splits_in_so(&c, &g).unwrap_or(false);
            r.check(split == sym.is_degenerate(), || format!("{g} {c}: splitting disagrees with {sym}"));
        }
    }
    let Some(found) = r.check_result(splitting_discrepancies(r.max_n), || "discrepancy scan".into()) else { return };
    for d in &found {
        r.notes.push(d.to_string());
    }
    for (n, parts) in [(4, vec![4, 4]), (2, vec![1, 1, 1, 1])] {
        if n > r.max_n {
            continue;
        }
        let lambda = Partition::new(parts);
        r.check(found.iter().any(|d| d.lambda == lambda && d.group.n == n), || {
            format!("witness λ={lambda} missing from the discrepancy report")
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("nope"), None);
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let r = run_suite(s, 4);
            assert!(r.passed(), "{s}: {:?}", r.failures);
            assert!(r.checks > 0, "{s}");
        }
    }

    #[test]
    fn pair_index_is_a_bijection() {
        let dim = 7;
        let mut seen = BTreeSet::new();
        for a in 0..dim {
            for b in a + 1..dim {
                assert!(seen.insert(pair_index(dim, a, b)));
            }
        }
        assert_eq!(seen.into_iter().collect::<Vec<_>>(), (0..21).collect::<Vec<_>>());
    }

    #[test]
    fn splitting_witnesses() {
        let found = splitting_discrepancies(4).unwrap();
        let lambdas: Vec<String> = found.iter().map(|d| d.lambda.to_string()).collect();
        assert!(lambdas.contains(&Partition::new(vec![4, 4]).to_string()));
        assert!(lambdas.contains(&Partition::new(vec![1, 1, 1, 1]).to_string()));
    }
}
