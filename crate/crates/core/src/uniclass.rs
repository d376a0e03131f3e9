//! Unipotent class labels (λ, ε), component groups and their characters.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinat::{partitions_of, Partition};
use crate::error::{Error, Result};
use crate::symbols::SymbolParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Sp,
    SoOdd,
    SoEven,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharParity {
    Odd,
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Frobenius {
    Split,
    NonSplit,
}

/// Which defects label the cuspidal data of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DefectSet {
    /// All odd integers (ordered symbols).
    Odd,
    /// Odd d ≥ 1 (unordered symbols).
    OddPositive,
    /// Even d ≥ 0 (unordered symbols).
    EvenNonNegative,
    /// A single defect.
    Only(i64),
}

impl DefectSet {
    pub fn contains(&self, d: i64) -> bool {
        match *self {
            DefectSet::Odd => d.rem_euclid(2) == 1,
            DefectSet::OddPositive => d >= 1 && d % 2 == 1,
            DefectSet::EvenNonNegative => d >= 0 && d % 2 == 0,
            DefectSet::Only(e) => d == e,
        }
    }
}

/// Sp_2n, SO_2n+1 or SO_2n in odd or even characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupDescriptor {
    pub family: Family,
    pub n: u32,
    pub char_parity: CharParity,
    pub frobenius: Frobenius,
}

impl GroupDescriptor {
    pub fn new(family: Family, n: u32, char_parity: CharParity, frobenius: Frobenius) -> Result<Self> {
        if family == Family::SoOdd && char_parity == CharParity::Two {
            return Err(Error::InvalidGroup("SO_{2n+1} is only treated in odd characteristic".into()));
        }
        if frobenius == Frobenius::NonSplit && family != Family::SoEven {
            return Err(Error::InvalidGroup("a non-split Frobenius map needs SO_{2n}".into()));
        }
        Ok(GroupDescriptor { family, n, char_parity, frobenius })
    }

    /// Shorthand for a split descriptor; panics on an invalid combination.
    pub fn split(family: Family, n: u32, char_parity: CharParity) -> Self {
        GroupDescriptor::new(family, n, char_parity, Frobenius::Split).expect("valid descriptor")
    }

    /// The same family at another rank.
    pub fn with_rank(&self, n: u32) -> Self {
        GroupDescriptor { n, ..*self }
    }

    /// Dimension N of the natural representation.
    pub fn dimension(&self) -> u32 {
        match self.family {
            Family::Sp | Family::SoEven => 2 * self.n,
            Family::SoOdd => 2 * self.n + 1,
        }
    }

    pub fn is_orthogonal(&self) -> bool {
        self.family != Family::Sp
    }

    pub fn symbol_params(&self) -> SymbolParams {
        match (self.family, self.char_parity) {
            (Family::Sp, CharParity::Odd) => SymbolParams::new(1, 1),
            (Family::Sp, CharParity::Two) => SymbolParams::new(2, 2),
            (Family::SoOdd, _) | (Family::SoEven, CharParity::Odd) => SymbolParams::new(2, 0),
            (Family::SoEven, CharParity::Two) => SymbolParams::new(4, 0),
        }
    }

    pub fn defects(&self) -> DefectSet {
        match self.family {
            Family::Sp => DefectSet::Odd,
            Family::SoOdd => DefectSet::OddPositive,
            Family::SoEven => DefectSet::EvenNonNegative,
        }
    }

    /// Every in-scope split descriptor of rank `n`.
    pub fn all_split(n: u32) -> Vec<GroupDescriptor> {
        vec![
            GroupDescriptor::split(Family::Sp, n, CharParity::Odd),
            GroupDescriptor::split(Family::SoOdd, n, CharParity::Odd),
            GroupDescriptor::split(Family::SoEven, n, CharParity::Odd),
            GroupDescriptor::split(Family::Sp, n, CharParity::Two),
            GroupDescriptor::split(Family::SoEven, n, CharParity::Two),
        ]
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::Sp => "Sp",
            Family::SoOdd | Family::SoEven => "SO",
        };
        let ch = match self.char_parity {
            CharParity::Odd => "p odd",
            CharParity::Two => "p = 2",
        };
        let tw = if self.frobenius == Frobenius::NonSplit { " non-split" } else { "" };
        write!(f, "{name}_{}{tw} ({ch})", self.dimension())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Eps {
    Zero,
    One,
    Omega,
}

impl Eps {
    pub fn symbol(&self) -> &'static str {
        match self {
            Eps::Zero => "0",
            Eps::One => "1",
            Eps::Omega => "w",
        }
    }
}

/// ε as a function of the part size; sizes not stored read as ω.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EpsilonMap {
    values: BTreeMap<u32, Eps>,
}

impl EpsilonMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, Eps)>>(pairs: I) -> Self {
        let mut m = EpsilonMap::new();
        for (h, e) in pairs {
            m.set(h, e);
        }
        m
    }

    pub fn get(&self, h: u32) -> Eps {
        self.values.get(&h).copied().unwrap_or(Eps::Omega)
    }

    pub fn set(&mut self, h: u32, e: Eps) {
        if e == Eps::Omega {
            self.values.remove(&h);
        } else {
            self.values.insert(h, e);
        }
    }

    /// Stored (size, value) pairs in increasing size.
    pub fn entries(&self) -> impl Iterator<Item = (u32, Eps)> + '_ {
        self.values.iter().map(|(&h, &e)| (h, e))
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The convention of odd characteristic: 1 on even sizes (Sp) or odd
    /// sizes (orthogonal) that occur in λ, ω elsewhere.
    pub fn odd_char(lambda: &Partition, family: Family) -> Self {
        let want = if family == Family::Sp { 0 } else { 1 };
        EpsilonMap::from_pairs(lambda.distinct().into_iter().filter(|h| h % 2 == want).map(|h| (h, Eps::One)))
    }
}

impl fmt::Display for EpsilonMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries().map(|(h, e)| format!("{h}={}", e.symbol())).collect();
        f.write_str(&s.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitTag {
    None,
    Prime,
    DoublePrime,
}

impl SplitTag {
    pub fn suffix(&self) -> &'static str {
        match self {
            SplitTag::None => "",
            SplitTag::Prime => "'",
            SplitTag::DoublePrime => "''",
        }
    }

    /// Copy tag of the matching degenerate symbol.
    pub fn copy(&self) -> u8 {
        (*self == SplitTag::DoublePrime) as u8
    }
}

/// A unipotent class C_{λ,ε}, with a tag for the two halves of a split class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassLabel {
    pub lambda: Partition,
    pub eps: EpsilonMap,
    pub split: SplitTag,
}

impl ClassLabel {
    pub fn new(lambda: Partition, eps: EpsilonMap, split: SplitTag) -> Self {
        ClassLabel { lambda, eps, split }
    }

    /// A label with ε following the odd-characteristic convention.
    pub fn odd_char(lambda: Partition, family: Family) -> Self {
        let eps = EpsilonMap::odd_char(&lambda, family);
        ClassLabel { lambda, eps, split: SplitTag::None }
    }

    /// Checks the parity, ε and splitting constraints for `g`.
    pub fn validate(&self, g: &GroupDescriptor) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidClass(format!("{self}: {m}")));
        if self.lambda.size() != g.dimension() {
            return bad(format!("|λ| must be {}", g.dimension()));
        }
        let orth = g.is_orthogonal();
        for h in self.lambda.distinct() {
            let c = self.lambda.multiplicity(h);
            let constrained = if orth && g.char_parity == CharParity::Odd { h % 2 == 0 } else { h % 2 == 1 };
            if constrained && c % 2 == 1 {
                return bad(format!("part {h} needs even multiplicity"));
            }
        }
        match g.char_parity {
            CharParity::Odd => {
                if self.eps != EpsilonMap::odd_char(&self.lambda, g.family) {
                    return bad("ε does not follow the odd-characteristic convention".into());
                }
            }
            CharParity::Two => {
                for (h, e) in self.eps.entries() {
                    if self.lambda.multiplicity(h) == 0 || h % 2 == 1 {
                        return bad(format!("ε defined at {h}"));
                    }
                    if e == Eps::Zero && self.lambda.multiplicity(h) % 2 == 1 {
                        return bad(format!("ε({h}) must be 1 for odd multiplicity"));
                    }
                }
                for h in self.lambda.distinct() {
                    if h % 2 == 0 && self.eps.get(h) == Eps::Omega {
                        return bad(format!("ε({h}) missing"));
                    }
                }
                if g.family == Family::SoEven && self.lambda.len() % 2 == 1 {
                    return bad("l(λ) must be even".into());
                }
            }
        }
        let splits = orth && splits_raw(self, g);
        match (splits, self.split) {
            (true, SplitTag::None) => bad("split class needs a ' or '' tag".into()),
            (false, SplitTag::Prime | SplitTag::DoublePrime) => bad("class does not split".into()),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lambda)?;
        if !self.eps.is_empty() {
            write!(f, "[{}]", self.eps)?;
        }
        f.write_str(self.split.suffix())
    }
}

fn splits_raw(c: &ClassLabel, g: &GroupDescriptor) -> bool {
    if c.lambda.is_empty() {
        return false;
    }
    match g.char_parity {
        CharParity::Odd => c.lambda.parts().iter().all(|p| p % 2 == 0),
        CharParity::Two => c.lambda.distinct().iter().all(|&h| h % 2 == 0 && c.eps.get(h) == Eps::Zero),
    }
}

/// Whether the O_N-class of `c` splits into two SO_N-classes.
///
/// In odd characteristic this is the case exactly when all parts are even,
/// i.e. when the class maps to a degenerate symbol.
pub fn splits_in_so(c: &ClassLabel, g: &GroupDescriptor) -> Result<bool> {
    if !g.is_orthogonal() {
        return Err(Error::InvalidGroup("splitting is only defined for orthogonal groups".into()));
    }
    Ok(splits_raw(c, g))
}

/// The labels of (λ, ε) in `g`: one label, or the two split labels.
pub fn labels_of(g: &GroupDescriptor, lambda: Partition, eps: EpsilonMap) -> Vec<ClassLabel> {
    let c = ClassLabel::new(lambda, eps, SplitTag::None);
    if g.is_orthogonal() && splits_raw(&c, g) {
        vec![ClassLabel { split: SplitTag::Prime, ..c.clone() }, ClassLabel { split: SplitTag::DoublePrime, ..c }]
    } else {
        vec![c]
    }
}

fn eps_choices(lambda: &Partition) -> Vec<EpsilonMap> {
    let mut out = vec![EpsilonMap::new()];
    for h in lambda.distinct() {
        if h % 2 == 1 {
            continue;
        }
        let opts: &[Eps] = if lambda.multiplicity(h) % 2 == 1 { &[Eps::One] } else { &[Eps::Zero, Eps::One] };
        out = out
            .into_iter()
            .flat_map(|m| {
                opts.iter().map(move |&e| {
                    let mut m = m.clone();
                    m.set(h, e);
                    m
                })
            })
            .collect();
    }
    out
}

/// All class labels of `g`; split classes give two labels.
pub fn enumerate_classes(g: &GroupDescriptor) -> Vec<ClassLabel> {
    let orth = g.is_orthogonal();
    let mut out = Vec::new();
    for lambda in partitions_of(g.dimension()) {
        let ok = lambda.distinct().into_iter().all(|h| {
            let constrained = if orth && g.char_parity == CharParity::Odd { h % 2 == 0 } else { h % 2 == 1 };
            !constrained || lambda.multiplicity(h) % 2 == 0
        });
        if !ok {
            continue;
        }
        if g.char_parity == CharParity::Two && g.family == Family::SoEven && lambda.len() % 2 == 1 {
            continue;
        }
        let eps_list = match g.char_parity {
            CharParity::Odd => vec![EpsilonMap::odd_char(&lambda, g.family)],
            CharParity::Two => eps_choices(&lambda),
        };
        for eps in eps_list {
            out.extend(labels_of(g, lambda.clone(), eps));
        }
    }
    out
}

/// One involution generator a_i, given by the part sizes identified with it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorClass {
    parts: Vec<u32>,
}

impl GeneratorClass {
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The smallest part size; used as the generator's name.
    pub fn key(&self) -> u32 {
        self.parts[0]
    }
}

/// The elementary abelian 2-group A_G̃(u) with the flag marking that the
/// characters of A_G(u) ⊂ A_G̃(u) are wanted (orthogonal groups).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentGroup {
    pub generators: Vec<GeneratorClass>,
    pub even_subgroup: bool,
}

impl ComponentGroup {
    /// Number of characters of the group in question.
    pub fn character_count(&self) -> usize {
        let k = self.generators.len();
        if self.even_subgroup {
            1 << k.saturating_sub(1)
        } else {
            1 << k
        }
    }

    pub fn generator_keys(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.key()).collect()
    }
}

/// Computes the generators of A_G̃(u) for the class `c`.
///
/// In characteristic two a zero part is adjoined with ε(0) = 1 for Sp and
/// ε(0) = 0 for SO; its generator is the identity, so every generator
/// identified with it is dropped.
pub fn component_group(g: &GroupDescriptor, c: &ClassLabel) -> ComponentGroup {
    let even_subgroup = g.is_orthogonal();
    let sizes = c.lambda.distinct();
    let generators = match g.char_parity {
        CharParity::Odd => sizes
            .into_iter()
            .filter(|&h| c.eps.get(h) == Eps::One)
            .map(|h| GeneratorClass { parts: vec![h] })
            .collect(),
        CharParity::Two => {
            let mut nodes: Vec<u32> = sizes.into_iter().filter(|&h| c.eps.get(h) != Eps::Zero).collect();
            if g.family == Family::Sp {
                nodes.insert(0, 0);
            }
            let mut root: Vec<usize> = (0..nodes.len()).collect();
            fn find(root: &mut [usize], i: usize) -> usize {
                let mut i = i;
                while root[i] != i {
                    root[i] = root[root[i]];
                    i = root[i];
                }
                i
            }
            for a in 0..nodes.len() {
                for b in 0..nodes.len() {
                    let (x, y) = (nodes[a], nodes[b]);
                    if x == y + 1 || (x % 2 == 0 && x == y + 2) {
                        let (ra, rb) = (find(&mut root, a), find(&mut root, b));
                        root[ra.max(rb)] = ra.min(rb);
                    }
                }
            }
            let mut classes: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
            for i in 0..nodes.len() {
                let r = find(&mut root, i);
                classes.entry(r).or_default().push(nodes[i]);
            }
            let mut gens: Vec<GeneratorClass> = classes
                .into_values()
                .filter(|parts| !parts.contains(&0))
                .map(|parts| GeneratorClass { parts })
                .collect();
            gens.sort();
            gens
        }
    };
    ComponentGroup { generators, even_subgroup }
}

/// A character of the component group: the generators sent to −1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LocalSystem {
    signs: Vec<u32>,
}

impl LocalSystem {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Builds the character sending the generators named by `keys` to −1.
    ///
    /// For the even subgroup a set and its complement give the same
    /// character; the representative avoiding the last generator is kept.
    pub fn new(mut keys: Vec<u32>, group: &ComponentGroup) -> Result<Self> {
        keys.sort_unstable();
        keys.dedup();
        let all = group.generator_keys();
        if let Some(k) = keys.iter().find(|k| !all.contains(k)) {
            return Err(Error::InvalidLocalSystem(format!("no generator named {k}")));
        }
        if group.even_subgroup && keys.last().is_some() && keys.last() == all.last() {
            keys = all.into_iter().filter(|k| !keys.contains(k)).collect();
        }
        Ok(LocalSystem { signs: keys })
    }

    /// Generator keys on which the character is −1.
    pub fn signs(&self) -> &[u32] {
        &self.signs
    }
}

impl fmt::Display for LocalSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.signs.is_empty() {
            return f.write_str("1");
        }
        let s: Vec<String> = self.signs.iter().map(|k| format!("a{k}")).collect();
        f.write_str(&s.join("*"))
    }
}

/// All characters of the component group, in subset order.
pub fn local_systems(group: &ComponentGroup) -> Vec<LocalSystem> {
    let keys = group.generator_keys();
    let free = if group.even_subgroup { keys.len().saturating_sub(1) } else { keys.len() };
    (0u64..1 << free)
        .map(|mask| LocalSystem {
            signs: (0..free).filter(|i| mask >> i & 1 == 1).map(|i| keys[i]).collect(),
        })
        .collect()
}

/// The set N_G of pairs (class, local system).
pub fn enumerate_pairs(g: &GroupDescriptor) -> Vec<(ClassLabel, LocalSystem)> {
    enumerate_classes(g)
        .into_iter()
        .flat_map(|c| {
            let ls = local_systems(&component_group(g, &c));
            ls.into_iter().map(move |l| (c.clone(), l))
        })
        .collect()
}

/// The generator of A_G̃(u) used to twist split elements for a non-split
/// Frobenius map: ε(λ_i) = 1 (odd characteristic) or ε(λ_i) ≠ 0
/// (characteristic two) with λ_i minimal.
pub fn select_nonsplit_generator(g: &GroupDescriptor, c: &ClassLabel) -> Result<GeneratorClass> {
    if g.frobenius != Frobenius::NonSplit {
        return Err(Error::InvalidGroup("generator selection needs a non-split Frobenius map".into()));
    }
    let group = component_group(g, c);
    let qualifies = |h: u32| match g.char_parity {
        CharParity::Odd => c.eps.get(h) == Eps::One,
        CharParity::Two => c.eps.get(h) != Eps::Zero,
    };
    let best = c.lambda.distinct().into_iter().filter(|&h| qualifies(h)).find_map(|h| {
        group.generators.iter().find(|gc| gc.parts.contains(&h)).cloned()
    });
    best.ok_or_else(|| Error::NoGenerator(c.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn sp4_class_counts() {
        let odd = GroupDescriptor::split(Family::Sp, 2, CharParity::Odd);
        assert_eq!(enumerate_classes(&odd).len(), 4);
        let two = GroupDescriptor::split(Family::Sp, 2, CharParity::Two);
        assert_eq!(enumerate_classes(&two).len(), 5);
        assert_eq!(enumerate_pairs(&odd).len(), 7);
        assert_eq!(enumerate_pairs(&two).len(), 6);
    }

    #[test]
    fn so4_minimal_class_does_not_split() {
        let g = GroupDescriptor::split(Family::SoEven, 2, CharParity::Odd);
        let cls = enumerate_classes(&g);
        let minimal: Vec<_> = cls.iter().filter(|c| c.lambda == p(&[1, 1, 1, 1])).collect();
        assert_eq!(minimal.len(), 1);
        assert_eq!(minimal[0].split, SplitTag::None);
    }

    #[test]
    fn component_group_examples() {
        let odd = GroupDescriptor::split(Family::Sp, 2, CharParity::Odd);
        let c = ClassLabel::odd_char(p(&[2, 2]), Family::Sp);
        assert_eq!(component_group(&odd, &c).character_count(), 2);

        let two = GroupDescriptor::split(Family::Sp, 2, CharParity::Two);
        let c = ClassLabel::new(p(&[1, 1, 1, 1]), EpsilonMap::new(), SplitTag::None);
        assert!(component_group(&two, &c).generators.is_empty());
        let c = ClassLabel::new(p(&[2, 2]), EpsilonMap::from_pairs([(2, Eps::One)]), SplitTag::None);
        assert!(component_group(&two, &c).generators.is_empty());
    }

    #[test]
    fn local_system_counts() {
        let g0 = ComponentGroup { generators: vec![], even_subgroup: false };
        assert_eq!(local_systems(&g0), vec![LocalSystem::trivial()]);
        let one = ComponentGroup { generators: vec![GeneratorClass { parts: vec![2] }], even_subgroup: false };
        assert_eq!(local_systems(&one).len(), 2);
        let two = ComponentGroup {
            generators: vec![GeneratorClass { parts: vec![1] }, GeneratorClass { parts: vec![3] }],
            even_subgroup: true,
        };
        assert_eq!(local_systems(&two).len(), 2);
        assert_eq!(LocalSystem::new(vec![1], &two).unwrap(), LocalSystem::new(vec![3], &two).unwrap());
    }

    #[test]
    fn splitting_examples() {
        let two = GroupDescriptor::split(Family::SoEven, 2, CharParity::Two);
        let c = ClassLabel::new(p(&[2, 2]), EpsilonMap::from_pairs([(2, Eps::Zero)]), SplitTag::Prime);
        assert!(splits_in_so(&c, &two).unwrap());
        let odd = GroupDescriptor::split(Family::SoEven, 4, CharParity::Odd);
        assert!(splits_in_so(&ClassLabel::odd_char(p(&[4, 4]), Family::SoEven), &odd).unwrap());
        let odd2 = odd.with_rank(2);
        assert!(!splits_in_so(&ClassLabel::odd_char(p(&[1, 1, 1, 1]), Family::SoEven), &odd2).unwrap());
        let sp = GroupDescriptor::split(Family::Sp, 2, CharParity::Odd);
        assert!(splits_in_so(&ClassLabel::odd_char(p(&[4]), Family::Sp), &sp).is_err());
    }

    #[test]
    fn nonsplit_generator_selection() {
        let g = GroupDescriptor::new(Family::SoEven, 4, CharParity::Odd, Frobenius::NonSplit).unwrap();
        let c = ClassLabel::odd_char(p(&[1, 1, 3, 3]), Family::SoEven);
        assert_eq!(select_nonsplit_generator(&g, &c).unwrap().key(), 1);
        let c = ClassLabel::odd_char(p(&[4, 4]), Family::SoEven);
        assert!(select_nonsplit_generator(&g, &c).is_err());

        let g = GroupDescriptor::new(Family::SoEven, 6, CharParity::Two, Frobenius::NonSplit).unwrap();
        let c = ClassLabel::new(
            p(&[2, 2, 4, 4]),
            EpsilonMap::from_pairs([(2, Eps::One), (4, Eps::One)]),
            SplitTag::None,
        );
        assert_eq!(select_nonsplit_generator(&g, &c).unwrap().key(), 2);
    }

    #[test]
    fn invalid_descriptors() {
        assert!(GroupDescriptor::new(Family::SoOdd, 2, CharParity::Two, Frobenius::Split).is_err());
        assert!(GroupDescriptor::new(Family::Sp, 2, CharParity::Odd, Frobenius::NonSplit).is_err());
    }
}
