//! The generalized Springer correspondence: cuspidal data, the maps ρ from
//! classes to distinguished symbols, local systems via interval flips, and
//! the full correspondence table.

use std::fmt;

use crate::combinat::{bipartitions_of, Bipartition, Partition};
use crate::error::{Error, Result};
use crate::symbols::{
    flip_intervals, intervals, minimal_padding, nu_sequence, similarity_class, special_rank, to_bipartition,
    Interval, NuEntry, Symbol,
};
use crate::uniclass::{
    component_group, enumerate_pairs, local_systems, CharParity, ClassLabel, Eps, EpsilonMap, Family,
    GroupDescriptor, LocalSystem, SplitTag,
};

/// Relative Weyl group of a cuspidal datum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeylType {
    /// Type B/C, W_k.
    B(u32),
    /// Type D, W'_k.
    D(u32),
}

impl WeylType {
    pub fn rank(&self) -> u32 {
        match *self {
            WeylType::B(k) | WeylType::D(k) => k,
        }
    }

    /// Irreducible characters, as bipartitions.
    pub fn characters(&self) -> Vec<Bipartition> {
        match *self {
            WeylType::B(k) => bipartitions_of(k, true),
            WeylType::D(k) => bipartitions_of(k, false),
        }
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylType::B(k) => write!(f, "W_{k}"),
            WeylType::D(k) => write!(f, "W'_{k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CuspidalDatum {
    pub d: i64,
    pub levi_rank: u32,
    pub weyl: WeylType,
}

/// All cuspidal data of `g`, by increasing Levi rank.
pub fn cuspidal_data(g: &GroupDescriptor) -> Vec<CuspidalDatum> {
    let params = g.symbol_params();
    let defects = g.defects();
    let bound = 2 * g.n as i64 + 4;
    let mut out: Vec<CuspidalDatum> = (-bound..=bound)
        .filter(|&d| defects.contains(d))
        .filter_map(|d| {
            let m = special_rank(params, d);
            (0..=g.n as i64).contains(&m).then(|| {
                let k = g.n - m as u32;
                let weyl = if g.family == Family::SoEven && d == 0 { WeylType::D(k) } else { WeylType::B(k) };
                CuspidalDatum { d, levi_rank: m as u32, weyl }
            })
        })
        .collect();
    out.sort_by_key(|c| (c.levi_rank, -c.d));
    out
}

/// Total number of Weyl group characters over all cuspidal data.
pub fn weyl_character_count(g: &GroupDescriptor) -> usize {
    cuspidal_data(g).iter().map(|c| c.weyl.characters().len()).sum()
}

/// The symbol built directly from the ν-layout, before normalization,
/// together with the layout itself.
fn rho_layout(g: &GroupDescriptor, c: &ClassLabel, len: usize) -> Result<(Symbol, Vec<NuEntry>)> {
    let params = g.symbol_params();
    let nu = nu_sequence(&c.lambda, &c.eps, params, len)?;
    let (mut a, mut b) = (Vec::new(), Vec::new());
    if params.s > 0 {
        a.push(0);
    }
    for (i, e) in nu.iter().enumerate() {
        // 1-based position i+1: odd positions go to B for Sp, to A for SO
        let odd = i % 2 == 0;
        if odd == (params.s > 0) {
            b.push(e.value);
        } else {
            a.push(e.value);
        }
    }
    let sym = Symbol::new(a, b, params, params.is_unordered())?.with_copy(c.split.copy());
    Ok((sym, nu))
}

/// The distinguished symbol of the class `c`.
pub fn rho(g: &GroupDescriptor, c: &ClassLabel) -> Result<Symbol> {
    c.validate(g)?;
    let len = minimal_padding(&c.lambda, g.symbol_params());
    Ok(rho_layout(g, c, len)?.0.normalize())
}

/// [`rho`] computed with `extra` additional pairs of zero rows.
pub fn rho_padded(g: &GroupDescriptor, c: &ClassLabel, extra: usize) -> Result<Symbol> {
    c.validate(g)?;
    let len = minimal_padding(&c.lambda, g.symbol_params()) + 2 * extra;
    Ok(rho_layout(g, c, len)?.0)
}

/// The class whose distinguished symbol is `sym`.
pub fn rho_inverse(g: &GroupDescriptor, sym: &Symbol) -> Result<ClassLabel> {
    let params = g.symbol_params();
    if sym.params() != params {
        return Err(Error::InvalidSymbol(format!("{sym} has parameters {} instead of {params}", sym.params())));
    }
    if !sym.is_distinguished() {
        return Err(Error::NotDistinguished(sym.to_string()));
    }
    if sym.rank()? != g.n as i64 {
        return Err(Error::InvalidSymbol(format!("{sym} does not have rank {}", g.n)));
    }
    let mut rep = sym.normalize();
    let nu: Vec<u32> = if params.s > 0 {
        if rep.a().first() != Some(&0) {
            rep = rep.shift_up();
        }
        let (a, b) = (&rep.a()[1..], rep.b());
        b.iter().zip(a).flat_map(|(x, y)| [*x, *y]).collect()
    } else {
        let (a, b) = (rep.a(), rep.b());
        let mut v = Vec::with_capacity(a.len() + b.len());
        for i in 0..a.len() {
            v.push(a[i]);
            if i < b.len() {
                v.push(b[i]);
            }
        }
        v
    };
    let step: i64 = if params.gap() == 2 { 1 } else { 2 };
    let bad = || Error::InvalidSymbol(format!("{sym} is not the image of a class"));
    let mut rows: Vec<(i64, Eps)> = Vec::new();
    let mut i = 0;
    while i < nu.len() {
        let x = nu[i] as i64 - step * (i as i64 + 1);
        let next = nu.get(i + 1).map(|&y| y as i64 - nu[i] as i64);
        let (h, kind, width) = match ((params.r, params.s), next) {
            ((1, 1), Some(0)) => (2 * x - 1, Eps::Omega, 2),
            ((1, 1), _) => (2 * x, Eps::One, 1),
            ((2, 0), Some(0)) => (2 * x + 2, Eps::Omega, 2),
            ((2, 0), _) => (2 * x + 3, Eps::One, 1),
            ((2, 2), Some(0)) => (2 * x - 2, Eps::Zero, 2),
            ((2, 2), Some(1)) => (2 * x - 1, Eps::Omega, 2),
            ((2, 2), _) => (2 * x, Eps::One, 1),
            ((4, 0), Some(0)) => (2 * x + 4, Eps::Zero, 2),
            ((4, 0), Some(1)) => (2 * x + 5, Eps::Omega, 2),
            ((4, 0), _) => (2 * x + 6, Eps::One, 1),
            _ => return Err(bad()),
        };
        if h < 0 {
            return Err(bad());
        }
        for _ in 0..width {
            rows.push((h, kind));
        }
        i += width;
    }
    let lambda = Partition::new(rows.iter().map(|r| r.0 as u32).collect());
    let eps = match g.char_parity {
        CharParity::Odd => EpsilonMap::odd_char(&lambda, g.family),
        CharParity::Two => {
            let mut e = EpsilonMap::new();
            for &(h, k) in rows.iter().filter(|r| r.0 > 0 && r.0 % 2 == 0) {
                if e.get(h as u32) != Eps::Omega && e.get(h as u32) != k {
                    return Err(bad());
                }
                e.set(h as u32, k);
            }
            e
        }
    };
    let split = if sym.is_degenerate() {
        if sym.copy_tag() == 0 { SplitTag::Prime } else { SplitTag::DoublePrime }
    } else {
        SplitTag::None
    };
    let c = ClassLabel::new(lambda, eps, split);
    c.validate(g).map_err(|_| bad())?;
    if rho(g, &c)? != *sym {
        return Err(bad());
    }
    Ok(c)
}

/// Matches each generator of the component group with the non-initial
/// interval of ρ(c) that holds the ν-entries of its rows.
fn generator_intervals(g: &GroupDescriptor, c: &ClassLabel) -> Result<(Symbol, Vec<(u32, Interval)>)> {
    c.validate(g)?;
    let len = minimal_padding(&c.lambda, g.symbol_params());
    let (rep, nu) = rho_layout(g, c, len)?;
    let ivs: Vec<Interval> = intervals(&rep).into_iter().filter(|iv| !iv.initial).collect();
    let group = component_group(g, c);
    let mut out = Vec::new();
    for gen in &group.generators {
        let values: Vec<u32> = nu.iter().filter(|e| gen.parts().contains(&e.part)).map(|e| e.value).collect();
        let hits: Vec<&Interval> =
            ivs.iter().filter(|iv| values.iter().any(|v| iv.entries.contains(v))).collect();
        if hits.len() != 1 || out.iter().any(|(_, iv)| iv == hits[0]) {
            return Err(Error::Internal(format!("generator a{} of {c} has no interval of its own", gen.key())));
        }
        out.push((gen.key(), hits[0].clone()));
    }
    if out.len() != ivs.len() {
        return Err(Error::Internal(format!("{c}: {} generators but {} intervals", out.len(), ivs.len())));
    }
    Ok((rep, out))
}

/// The symbol attached to the pair (c, ls): flip in ρ(c) the intervals of
/// the generators on which ls is −1.
pub fn pair_to_symbol(g: &GroupDescriptor, c: &ClassLabel, ls: &LocalSystem) -> Result<Symbol> {
    let (rep, gens) = generator_intervals(g, c)?;
    let mut flips = Vec::new();
    for k in ls.signs() {
        match gens.iter().find(|(key, _)| key == k) {
            Some((_, iv)) => flips.push(iv),
            None => return Err(Error::InvalidLocalSystem(format!("{c} has no generator a{k}"))),
        }
    }
    Ok(flip_intervals(&rep, &flips)?.normalize())
}

/// Inverse of [`pair_to_symbol`].
pub fn symbol_to_pair(g: &GroupDescriptor, sym: &Symbol) -> Result<(ClassLabel, LocalSystem)> {
    let class = similarity_class(sym)?;
    let c = rho_inverse(g, &class.distinguished)?;
    for ls in local_systems(&component_group(g, &c)) {
        if pair_to_symbol(g, &c, &ls)? == *sym {
            return Ok((c, ls));
        }
    }
    Err(Error::Internal(format!("{sym} is not reached from {c}")))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceRow {
    pub class: ClassLabel,
    pub local_system: LocalSystem,
    pub symbol: Symbol,
    pub datum: CuspidalDatum,
    pub character: Bipartition,
}

/// One row per pair in N_G, in the order of [`enumerate_pairs`].
pub fn correspondence_table(g: &GroupDescriptor) -> Result<Vec<CorrespondenceRow>> {
    let data = cuspidal_data(g);
    enumerate_pairs(g)
        .into_iter()
        .map(|(class, local_system)| {
            let symbol = pair_to_symbol(g, &class, &local_system)?;
            let (character, d) = to_bipartition(&symbol)?;
            let datum = *data
                .iter()
                .find(|c| c.d == d)
                .ok_or_else(|| Error::Internal(format!("defect {d} of {symbol} has no cuspidal datum")))?;
            Ok(CorrespondenceRow { class, local_system, symbol, datum, character })
        })
        .collect()
}

/// The preferred extension of an irreducible character {α, β} (α ≠ β) of
/// W'_n to W_n.
///
/// Writing the two rows of the symbol as α_i + i − 1 and β_j + j − 1, the
/// smallest number occurring in exactly one row must lie in the second row.
pub fn preferred_extension(e: &Bipartition) -> Result<Bipartition> {
    let (alpha, beta) = (e.alpha().clone(), e.beta().clone());
    if alpha == beta {
        return Err(Error::InvalidBipartition(format!("{e} does not restrict irreducibly")));
    }
    let m = alpha.len().max(beta.len());
    let row = |p: &Partition| -> Vec<u32> { p.padded(m).iter().enumerate().map(|(i, x)| x + i as u32).collect() };
    let (top, bottom) = (row(&alpha), row(&beta));
    let first = top
        .iter()
        .filter(|x| !bottom.contains(x))
        .chain(bottom.iter().filter(|x| !top.contains(x)))
        .min()
        .copied()
        .expect("rows differ");
    Ok(if bottom.contains(&first) {
        Bipartition::ordered(alpha, beta)
    } else {
        Bipartition::ordered(beta, alpha)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uniclass::Frobenius;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn sym(a: &[u32], b: &[u32], g: &GroupDescriptor) -> Symbol {
        let pr = g.symbol_params();
        Symbol::new(a.to_vec(), b.to_vec(), pr, pr.is_unordered()).unwrap()
    }

    #[test]
    fn cuspidal_data_examples() {
        let g = GroupDescriptor::split(Family::Sp, 2, CharParity::Odd);
        let d: Vec<_> = cuspidal_data(&g).iter().map(|c| (c.d, c.weyl)).collect();
        assert_eq!(d, vec![(1, WeylType::B(2)), (-1, WeylType::B(1))]);
        let g = GroupDescriptor::split(Family::Sp, 2, CharParity::Two);
        let d: Vec<_> = cuspidal_data(&g).iter().map(|c| (c.d, c.weyl)).collect();
        assert_eq!(d, vec![(1, WeylType::B(2)), (-1, WeylType::B(0))]);
        let g = GroupDescriptor::split(Family::SoEven, 2, CharParity::Two);
        let d: Vec<_> = cuspidal_data(&g).iter().map(|c| (c.d, c.weyl)).collect();
        assert_eq!(d, vec![(0, WeylType::D(2))]);
    }

    #[test]
    fn rho_examples() {
        let g = GroupDescriptor::split(Family::Sp, 2, CharParity::Odd);
        assert_eq!(rho(&g, &ClassLabel::odd_char(p(&[2, 2]), Family::Sp)).unwrap(), sym(&[0, 3], &[2], &g));
        let g = GroupDescriptor::split(Family::Sp, 2, CharParity::Two);
        let c = ClassLabel::new(p(&[2, 2]), EpsilonMap::from_pairs([(2, Eps::Zero)]), SplitTag::None);
        assert_eq!(rho(&g, &c).unwrap(), sym(&[0, 4], &[4], &g));
        let g = GroupDescriptor::split(Family::SoEven, 4, CharParity::Odd);
        let c = ClassLabel::odd_char(p(&[1, 1, 3, 3]), Family::SoEven);
        assert_eq!(rho(&g, &c).unwrap(), sym(&[0, 3], &[1, 4], &g));
    }

    #[test]
    fn rho_inverse_examples() {
        let g = GroupDescriptor::split(Family::Sp, 2, CharParity::Two);
        let c = rho_inverse(&g, &sym(&[0, 6], &[2], &g)).unwrap();
        assert_eq!(c, ClassLabel::new(p(&[4]), EpsilonMap::from_pairs([(4, Eps::One)]), SplitTag::None));
        let g = GroupDescriptor::split(Family::SoEven, 4, CharParity::Odd);
        let deg = sym(&[2], &[2], &g).with_copy(1);
        assert_eq!(rho_inverse(&g, &deg).unwrap().split, SplitTag::DoublePrime);
        assert!(rho_inverse(&g, &sym(&[1], &[5], &g)).is_err());
    }

    #[test]
    fn pair_examples() {
        let g = GroupDescriptor::split(Family::Sp, 2, CharParity::Odd);
        let c = ClassLabel::odd_char(p(&[4]), Family::Sp);
        let grp = component_group(&g, &c);
        let ls = local_systems(&grp);
        assert_eq!(pair_to_symbol(&g, &c, &ls[0]).unwrap(), rho(&g, &c).unwrap());
        assert_eq!(pair_to_symbol(&g, &c, &ls[1]).unwrap(), sym(&[0], &[1, 4], &g));

        let g = GroupDescriptor::split(Family::Sp, 2, CharParity::Two);
        let c = ClassLabel::new(p(&[4]), EpsilonMap::from_pairs([(4, Eps::One)]), SplitTag::None);
        let ls = local_systems(&component_group(&g, &c));
        assert_eq!(pair_to_symbol(&g, &c, &ls[1]).unwrap(), sym(&[0], &[2, 6], &g));
    }

    #[test]
    fn small_tables() {
        let g = GroupDescriptor::split(Family::Sp, 2, CharParity::Odd);
        let t = correspondence_table(&g).unwrap();
        assert_eq!(t.len(), 7);
        assert_eq!(t.iter().filter(|r| r.datum.d == 1).count(), 5);
        let g = GroupDescriptor::split(Family::Sp, 2, CharParity::Two);
        let t = correspondence_table(&g).unwrap();
        assert_eq!(t.len(), 6);
        let row = t.iter().find(|r| r.class.lambda == p(&[4]) && !r.local_system.signs().is_empty()).unwrap();
        assert_eq!(row.datum.d, -1);
        for g in GroupDescriptor::all_split(0) {
            assert_eq!(correspondence_table(&g).unwrap().len(), 1);
        }
        let ns = GroupDescriptor::new(Family::SoEven, 0, CharParity::Odd, Frobenius::NonSplit).unwrap();
        assert_eq!(correspondence_table(&ns).unwrap().len(), 1);
    }

    #[test]
    fn preferred_examples() {
        for n in 1..=8 {
            let e = Bipartition::unordered(p(&[n]), Partition::empty(), 0);
            assert_eq!(preferred_extension(&e).unwrap(), Bipartition::ordered(p(&[n]), Partition::empty()));
        }
        let e = Bipartition::unordered(p(&[1]), p(&[2]), 0);
        assert_eq!(preferred_extension(&e).unwrap(), Bipartition::ordered(p(&[2]), p(&[1])));
        let e = Bipartition::unordered(p(&[1]), p(&[1]), 0);
        assert!(preferred_extension(&e).is_err());
    }
}
