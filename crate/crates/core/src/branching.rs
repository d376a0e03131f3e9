//! Restriction from rank n to rank n − 1: the entry-decrease rule on
//! symbols, an independent box-removal oracle on bipartitions, and the
//! descent cases between split elements.

use std::collections::BTreeSet;
use std::fmt;

use crate::combinat::{Bipartition, Partition};
use crate::error::{Error, Result};
use crate::springer::{cuspidal_data, rho, rho_inverse};
use crate::symbols::{
    from_bipartition, minimal_padding, nu_sequence, semi_interval_distance, to_bipartition, SemiInterval, Symbol,
};
use crate::uniclass::{
    labels_of, select_nonsplit_generator, CharParity, ClassLabel, Eps, EpsilonMap, GroupDescriptor,
};

/// All bipartitions obtained by removing one box from α or from β.
///
/// For unordered bipartitions a degenerate child {α, α} is returned in both
/// copies, and both copies of a degenerate parent branch alike.
pub fn branch_bipartition(b: &Bipartition) -> Result<Vec<Bipartition>> {
    if b.size() == 0 {
        return Err(Error::InvalidBipartition("cannot restrict the character of W_0".into()));
    }
    let (alpha, beta) = (b.alpha(), b.beta());
    let mut out = Vec::new();
    if b.is_ordered() {
        out.extend(alpha.remove_box().into_iter().map(|a| Bipartition::ordered(a, beta.clone())));
        out.extend(beta.remove_box().into_iter().map(|x| Bipartition::ordered(alpha.clone(), x)));
    } else if b.is_degenerate() {
        out.extend(alpha.remove_box().into_iter().map(|a| Bipartition::unordered(a, alpha.clone(), 0)));
    } else {
        let children = alpha
            .remove_box()
            .into_iter()
            .map(|a| (a, beta.clone()))
            .chain(beta.remove_box().into_iter().map(|x| (alpha.clone(), x)));
        for (x, y) in children {
            if x == y && !x.is_empty() {
                out.push(Bipartition::unordered(x.clone(), y.clone(), 0));
                out.push(Bipartition::unordered(x, y, 1));
            } else {
                out.push(Bipartition::unordered(x, y, 0));
            }
        }
    }
    out.sort_by_key(|b| b.to_string());
    Ok(out)
}

/// Symbols obtained from `sym` by decreasing one entry by 1, normalized.
/// Degenerate results appear in both copies.
pub fn symbol_children(sym: &Symbol) -> BTreeSet<Symbol> {
    let rep = sym.normalize();
    let unordered = rep.is_unordered();
    let mut out = BTreeSet::new();
    let rows = [rep.a().to_vec(), rep.b().to_vec()];
    for (r, row) in rows.iter().enumerate() {
        for i in 0..row.len() {
            if row[i] == 0 {
                continue;
            }
            let mut rows = rows.clone();
            rows[r][i] -= 1;
            let [a, b] = rows;
            let Ok(child) = Symbol::new(a, b, rep.params(), unordered) else { continue };
            let child = child.normalize();
            if child.is_degenerate() {
                out.insert(child.clone().with_copy(1));
                out.insert(child.with_copy(0));
            } else {
                out.insert(child);
            }
        }
    }
    out
}

/// Classes of the rank n − 1 group whose distinguished symbol is obtained
/// from ρ(c) by decreasing one entry.
pub fn class_descents(g: &GroupDescriptor, c: &ClassLabel) -> Result<Vec<ClassLabel>> {
    if g.n == 0 {
        return Ok(Vec::new());
    }
    let g1 = g.with_rank(g.n - 1);
    let mut out = Vec::new();
    for child in symbol_children(&rho(g, c)?) {
        if child.is_distinguished() {
            out.push(rho_inverse(&g1, &child)?);
        }
    }
    out.sort_by_key(|c| c.to_string());
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RestrictionReport {
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl RestrictionReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares [`branch_bipartition`] with [`symbol_children`] on every
/// character of every cuspidal datum of `g`.
pub fn verify_restriction(g: &GroupDescriptor) -> Result<RestrictionReport> {
    let params = g.symbol_params();
    let mut report = RestrictionReport::default();
    for datum in cuspidal_data(g) {
        for e in datum.weyl.characters() {
            report.checked += 1;
            let mut oracle: Vec<String> = if e.size() == 0 {
                Vec::new()
            } else {
                branch_bipartition(&e)?.iter().map(|b| b.to_string()).collect()
            };
            let sym = from_bipartition(&e, datum.d, params)?;
            let mut rule = Vec::new();
            for child in symbol_children(&sym) {
                let (b, d) = to_bipartition(&child)?;
                if d != datum.d {
                    return Err(Error::Internal(format!("{child} changed defect")));
                }
                rule.push(b.to_string());
            }
            oracle.sort();
            rule.sort();
            if oracle != rule {
                report.mismatches.push(format!(
                    "{g} d={} {e}: boxes [{}] vs symbols [{}]",
                    datum.d,
                    oracle.join(" "),
                    rule.join(" ")
                ));
            }
        }
    }
    Ok(report)
}

/// The row surgeries between split elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    OddI,
    OddII,
    OddIII,
    TwoI,
    TwoII,
    TwoIII,
    TwoIV,
    TwoV,
}

impl CaseTag {
    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::OddI => "odd-i",
            CaseTag::OddII => "odd-ii",
            CaseTag::OddIII => "odd-iii",
            CaseTag::TwoI => "two-i",
            CaseTag::TwoII => "two-ii",
            CaseTag::TwoIII => "two-iii",
            CaseTag::TwoIV => "two-iv",
            CaseTag::TwoV => "two-v",
        }
    }

    pub fn from_name(s: &str) -> Option<CaseTag> {
        [
            CaseTag::OddI,
            CaseTag::OddII,
            CaseTag::OddIII,
            CaseTag::TwoI,
            CaseTag::TwoII,
            CaseTag::TwoIII,
            CaseTag::TwoIV,
            CaseTag::TwoV,
        ]
        .into_iter()
        .find(|t| t.name() == s)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentCase {
    pub tag: CaseTag,
    /// The row length h the surgery acts on.
    pub part: u32,
    pub source: ClassLabel,
    pub target: ClassLabel,
    pub split_target: bool,
    pub condition: String,
}

impl fmt::Display for DescentCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} h={}: {} -> {}", self.tag, self.part, self.source, self.target)?;
        if !self.split_target {
            f.write_str(" (not split)")?;
        }
        Ok(())
    }
}

/// λ with `count` rows h replaced by rows h − `by`; zero rows are dropped.
fn replace_rows(lambda: &Partition, h: u32, count: usize, by: u32) -> Partition {
    let mut parts = lambda.parts().to_vec();
    let mut left = count;
    for x in parts.iter_mut() {
        if *x == h && left > 0 {
            *x -= by;
            left -= 1;
        }
    }
    Partition::new(parts)
}

/// ε restricted to the parts of λ′, with `h′ ↦ e` when h′ > 0.
fn target_eps(eps: &EpsilonMap, lambda: &Partition, h: u32, e: Eps) -> EpsilonMap {
    let mut out = EpsilonMap::from_pairs(eps.entries().filter(|&(k, _)| lambda.multiplicity(k) > 0));
    if h > 0 {
        out.set(h, e);
    }
    out
}

/// All descent cases of `c`, with the split-ness of each target.
pub fn split_descent(g: &GroupDescriptor, c: &ClassLabel) -> Result<Vec<DescentCase>> {
    c.validate(g)?;
    if g.n == 0 {
        return Ok(Vec::new());
    }
    let g1 = g.with_rank(g.n - 1);
    let lambda = &c.lambda;
    let mut out = Vec::new();
    let mut push = |tag: CaseTag, h: u32, count: usize, by: u32, e: Eps, split: bool, cond: String| {
        let lam = replace_rows(lambda, h, count, by);
        let eps = match g.char_parity {
            CharParity::Odd => EpsilonMap::odd_char(&lam, g.family),
            CharParity::Two => target_eps(&c.eps, &lam, h - by, e),
        };
        for target in labels_of(&g1, lam.clone(), eps.clone()) {
            out.push(DescentCase {
                tag,
                part: h,
                source: c.clone(),
                target,
                split_target: split,
                condition: cond.clone(),
            });
        }
    };
    let orth = g.is_orthogonal();
    for h in lambda.distinct() {
        let ch = lambda.multiplicity(h);
        let e = c.eps.get(h);
        match g.char_parity {
            CharParity::Odd => {
                if e == Eps::One && h >= 2 {
                    push(CaseTag::OddI, h, 1, 2, Eps::One, true, format!("ε({h}) = 1"));
                }
                // two rows suffice; an odd c_h is needed for (1^{2n+1}) in SO_{2n+1}
                if e == Eps::One && ch >= 2 {
                    push(CaseTag::OddII, h, 2, 1, Eps::Omega, true, format!("ε({h}) = 1, c_{h} = {ch} ≥ 2"));
                }
                if e == Eps::Omega {
                    push(CaseTag::OddIII, h, 2, 1, Eps::One, true, format!("ε({h}) = ω"));
                }
            }
            CharParity::Two => {
                let below = |k: u32| (lambda.multiplicity(k), c.eps.get(k));
                if e == Eps::One && h >= 2 && !(orth && h == 2) {
                    let (c2, e2) = below(h - 2);
                    let split = h == 2 || c2 == 0 || e2 == Eps::One;
                    let cond = if h == 2 || c2 == 0 {
                        format!("{} does not occur", h - 2)
                    } else {
                        format!("ε({}) = {}", h - 2, e2.symbol())
                    };
                    push(CaseTag::TwoI, h, 1, 2, Eps::One, split, cond);
                }
                if e == Eps::One && ch >= 2 {
                    push(CaseTag::TwoII, h, 2, 1, Eps::Omega, true, format!("c_{h} = {ch} ≥ 2, ε({h}) = 1"));
                }
                if e == Eps::Omega {
                    let (c1, e1) = below(h - 1);
                    let absent = h == 1 || c1 == 0;
                    if !(h == 1 && orth) {
                        let split = absent || e1 == Eps::One;
                        let cond = if absent {
                            format!("{} does not occur", h - 1)
                        } else {
                            format!("ε({}) = {}", h - 1, e1.symbol())
                        };
                        push(CaseTag::TwoIII, h, 2, 1, Eps::One, split, cond);
                    }
                    if (absent || e1 == Eps::Zero) && !(h == 1 && !orth) {
                        let cond = if absent {
                            format!("{} does not occur", h - 1)
                        } else {
                            format!("ε({}) = 0", h - 1)
                        };
                        push(CaseTag::TwoIV, h, 2, 1, Eps::Zero, true, cond);
                    }
                }
                if e == Eps::Zero {
                    push(CaseTag::TwoV, h, 2, 1, Eps::Omega, true, format!("ε({h}) = 0"));
                }
            }
        }
    }
    Ok(out)
}

/// Semi-intervals of c by increasing tail, laid out with two extra zero
/// rows so that the rows of length 0 form the lowest semi-interval.
fn padded_semi_intervals(g: &GroupDescriptor, c: &ClassLabel) -> Result<Vec<SemiInterval>> {
    let params = g.symbol_params();
    let nu = nu_sequence(&c.lambda, &c.eps, params, minimal_padding(&c.lambda, params) + 2)?;
    let mut parts: Vec<u32> = nu.iter().map(|e| e.part).collect();
    parts.dedup();
    let mut out: Vec<SemiInterval> = parts
        .into_iter()
        .map(|h| {
            let rows: Vec<_> = nu.iter().filter(|e| e.part == h).collect();
            SemiInterval::new(h, rows[0].kind, rows.iter().map(|e| e.value).collect())
        })
        .collect();
    out.sort_by_key(|i| i.tail());
    Ok(out)
}

/// The (case, row length) pairs suggested by the semi-interval analysis in
/// characteristic two, in the order they are tried. Each semi-interval is
/// compared with the one directly below it (the zero rows count as the
/// lowest): near pairs of distance ≤ 4 use the row surgery matching their
/// kinds, and otherwise a tail at distance ≥ 4 is decreased by one.
pub fn descent_candidates(g: &GroupDescriptor, c: &ClassLabel) -> Result<Vec<(CaseTag, u32)>> {
    let mut candidates: Vec<(CaseTag, u32)> = Vec::new();
    if g.char_parity == CharParity::Two {
        let sis = padded_semi_intervals(g, c)?;
        for (idx, upper) in sis.iter().enumerate().skip(1) {
            let h = upper.part;
            let tail_tag = match upper.kind {
                Eps::One => CaseTag::TwoI,
                Eps::Omega => CaseTag::TwoIII,
                Eps::Zero => CaseTag::TwoV,
            };
            let lower = &sis[idx - 1];
            let dist = semi_interval_distance(upper, lower)?;
            let near = |k: Eps, part: u32| lower.kind == k && lower.part + part == h;
            let listed = match upper.kind {
                Eps::Omega if near(Eps::Omega, 2) || near(Eps::One, 1) => Some(CaseTag::TwoIII),
                Eps::Omega if near(Eps::Zero, 1) => Some(CaseTag::TwoIV),
                Eps::Zero if near(Eps::One, 2) || near(Eps::Zero, 2) => Some(CaseTag::TwoV),
                Eps::One if near(Eps::One, 2) => Some(CaseTag::TwoI),
                Eps::One if near(Eps::Zero, 2) => Some(CaseTag::TwoII),
                _ => None,
            };
            match listed {
                Some(tag) if dist <= 4 => candidates.push((tag, h)),
                // a free tail: a − 1 lands on a row length that does not occur
                _ if dist >= 4 => candidates.push((tail_tag, h)),
                _ => {}
            }
        }
    }
    Ok(candidates)
}

/// A descent of `c` to a split element of the rank n − 1 group whose target
/// is reachable by decreasing one entry of ρ(c). In characteristic two only
/// the [`descent_candidates`] are tried; in odd characteristic every target
/// is split and the first reachable case is taken.
///
/// With `same_generator` the target must also carry the twisting generator
/// of [`select_nonsplit_generator`] on a row of the same length.
pub fn descent_search(g: &GroupDescriptor, c: &ClassLabel, same_generator: bool) -> Result<DescentCase> {
    let cases = split_descent(g, c)?;
    let reachable = class_descents(g, c)?;
    let g1 = if g.n > 0 { g.with_rank(g.n - 1) } else { *g };
    let usable = |case: &DescentCase| -> bool {
        if !case.split_target || !reachable.contains(&case.target) {
            return false;
        }
        if same_generator {
            match (select_nonsplit_generator(g, &case.source), select_nonsplit_generator(&g1, &case.target)) {
                (Ok(a), Ok(b)) => a.parts().iter().any(|p| b.parts().contains(p)),
                _ => false,
            }
        } else {
            true
        }
    };
    let pick = |tag: CaseTag, h: u32| cases.iter().find(|k| k.tag == tag && k.part == h && usable(k)).cloned();

    let found = match g.char_parity {
        CharParity::Two => descent_candidates(g, c)?.into_iter().find_map(|(tag, h)| pick(tag, h)),
        CharParity::Odd => cases.iter().find(|k| usable(k)).cloned(),
    };
    found.ok_or_else(|| Error::NoDescent(c.to_string()))
}
