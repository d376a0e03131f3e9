//! Line-delimited JSON records. Every line carries the schema version and a
//! `kind` tag; domain values are stored in forms that parse back exactly.

use serde::{Deserialize, Serialize};

use springer_core::branching::{CaseTag, DescentCase};
use springer_core::springer::CorrespondenceRow;
use springer_core::uniclass::component_group;
use springer_core::{
    Bipartition, CharParity, ClassLabel, Family, Frobenius, GroupDescriptor, LocalSystem, Partition, Symbol,
};

use crate::text::{parse_eps, parse_split, split_name};

pub const SCHEMA_VERSION: u32 = 1;

/// A group as four flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFields {
    pub family: String,
    pub n: u32,
    #[serde(rename = "char")]
    pub char_parity: String,
    pub frobenius: String,
}

impl GroupFields {
    pub fn from_group(g: &GroupDescriptor) -> Self {
        GroupFields {
            family: family_name(g.family).into(),
            n: g.n,
            char_parity: char_name(g.char_parity).into(),
            frobenius: frobenius_name(g.frobenius).into(),
        }
    }

    pub fn to_group(&self) -> Result<GroupDescriptor, String> {
        let family = match self.family.as_str() {
            "sp" => Family::Sp,
            "so-odd" => Family::SoOdd,
            "so-even" => Family::SoEven,
            f => return Err(format!("unknown family {f}")),
        };
        let ch = match self.char_parity.as_str() {
            "odd" => CharParity::Odd,
            "two" => CharParity::Two,
            c => return Err(format!("unknown characteristic {c}")),
        };
        let fr = match self.frobenius.as_str() {
            "split" => Frobenius::Split,
            "nonsplit" => Frobenius::NonSplit,
            f => return Err(format!("unknown Frobenius {f}")),
        };
        GroupDescriptor::new(family, self.n, ch, fr).map_err(|e| e.to_string())
    }
}

pub fn family_name(f: Family) -> &'static str {
    match f {
        Family::Sp => "sp",
        Family::SoOdd => "so-odd",
        Family::SoEven => "so-even",
    }
}

pub fn char_name(c: CharParity) -> &'static str {
    match c {
        CharParity::Odd => "odd",
        CharParity::Two => "two",
    }
}

pub fn frobenius_name(f: Frobenius) -> &'static str {
    match f {
        Frobenius::Split => "split",
        Frobenius::NonSplit => "nonsplit",
    }
}

/// A class label: λ decreasing, ε as `size=value` tokens, split tag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelFields {
    pub lambda: Vec<u32>,
    pub eps: String,
    pub split: String,
}

impl LabelFields {
    pub fn from_label(c: &ClassLabel) -> Self {
        LabelFields { lambda: c.lambda.decreasing(), eps: c.eps.to_string(), split: split_name(c.split).into() }
    }

    pub fn to_label(&self) -> Result<ClassLabel, String> {
        Ok(ClassLabel::new(Partition::new(self.lambda.clone()), parse_eps(&self.eps)?, parse_split(&self.split)?))
    }
}

/// A symbol as `A|B` of its normalized representative, with the copy tag
/// of a degenerate symbol appended.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolFields {
    pub symbol: String,
    pub defect: i64,
    pub rank: i64,
}

impl SymbolFields {
    pub fn from_symbol(s: &Symbol) -> Self {
        SymbolFields { symbol: s.to_string(), defect: s.defect(), rank: s.rank().unwrap_or(-1) }
    }

    pub fn to_symbol(&self, g: &GroupDescriptor) -> Result<Symbol, String> {
        let text = self.symbol.trim_end_matches('\'');
        let copy = match self.symbol.len() - text.len() {
            0 | 1 => 0,
            2 => 1,
            _ => return Err(format!("bad copy tag in {}", self.symbol)),
        };
        let (a, b) = text.split_once('|').ok_or_else(|| format!("symbol {} lacks '|'", self.symbol))?;
        let p = g.symbol_params();
        let s = Symbol::new(entries(a)?, entries(b)?, p, p.is_unordered()).map_err(|e| e.to_string())?.with_copy(copy);
        if s.defect() != self.defect || s.rank().ok() != Some(self.rank) {
            return Err(format!("defect or rank disagrees with {}", self.symbol));
        }
        Ok(s)
    }
}

fn entries(s: &str) -> Result<Vec<u32>, String> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse::<u32>().map_err(|e| format!("{x}: {e}"))).collect()
}

/// A bipartition with its kind: ordered, or unordered with a copy tag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartitionFields {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub ordered: bool,
    pub copy: u8,
}

impl BipartitionFields {
    pub fn from_bipartition(b: &Bipartition) -> Self {
        BipartitionFields {
            alpha: b.alpha().decreasing(),
            beta: b.beta().decreasing(),
            ordered: b.is_ordered(),
            copy: b.copy_tag(),
        }
    }

    pub fn to_bipartition(&self) -> Bipartition {
        let (a, b) = (Partition::new(self.alpha.clone()), Partition::new(self.beta.clone()));
        if self.ordered {
            Bipartition::ordered(a, b)
        } else {
            Bipartition::unordered(a, b, self.copy)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub group: GroupFields,
    pub class: LabelFields,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub group: GroupFields,
    pub class: LabelFields,
    /// Generator keys on which the local system is −1.
    pub local_system: Vec<u32>,
}

impl PairRecord {
    pub fn to_pair(&self) -> Result<(GroupDescriptor, ClassLabel, LocalSystem), String> {
        let g = self.group.to_group()?;
        let c = self.class.to_label()?;
        c.validate(&g).map_err(|e| e.to_string())?;
        let ls = LocalSystem::new(self.local_system.clone(), &component_group(&g, &c)).map_err(|e| e.to_string())?;
        Ok((g, c, ls))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoRecord {
    pub group: GroupFields,
    pub class: LabelFields,
    pub symbol: SymbolFields,
    pub similarity_class_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowRecord {
    pub group: GroupFields,
    pub class: LabelFields,
    pub local_system: Vec<u32>,
    pub symbol: SymbolFields,
    pub defect: i64,
    pub weyl: String,
    pub character: BipartitionFields,
}

impl RowRecord {
    pub fn from_row(g: &GroupDescriptor, r: &CorrespondenceRow) -> Self {
        RowRecord {
            group: GroupFields::from_group(g),
            class: LabelFields::from_label(&r.class),
            local_system: r.local_system.signs().to_vec(),
            symbol: SymbolFields::from_symbol(&r.symbol),
            defect: r.datum.d,
            weyl: r.datum.weyl.to_string(),
            character: BipartitionFields::from_bipartition(&r.character),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentRecord {
    pub group: GroupFields,
    pub case: String,
    pub part: u32,
    pub source: LabelFields,
    pub target: LabelFields,
    pub split_target: bool,
    /// The target is one entry-decrease away from the source.
    pub reachable: bool,
    /// The case picked by the descent search.
    pub chosen: bool,
    pub condition: String,
}

impl DescentRecord {
    pub fn from_case(g: &GroupDescriptor, d: &DescentCase, reachable: bool, chosen: bool) -> Self {
        DescentRecord {
            group: GroupFields::from_group(g),
            case: d.tag.name().into(),
            part: d.part,
            source: LabelFields::from_label(&d.source),
            target: LabelFields::from_label(&d.target),
            split_target: d.split_target,
            reachable,
            chosen,
            condition: d.condition.clone(),
        }
    }

    pub fn to_case(&self) -> Result<DescentCase, String> {
        Ok(DescentCase {
            tag: CaseTag::from_name(&self.case).ok_or_else(|| format!("unknown case {}", self.case))?,
            part: self.part,
            source: self.source.to_label()?,
            target: self.target.to_label()?,
            split_target: self.split_target,
            condition: self.condition.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreferredRecord {
    pub character: BipartitionFields,
    pub preferred: BipartitionFields,
    /// Rows α_i + i − 1 and β_j + j − 1 of the preferred extension.
    pub rows: (Vec<u32>, Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorFields {
    pub j: usize,
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitElementRecord {
    pub group: GroupFields,
    pub class: LabelFields,
    pub dim: usize,
    /// `gf2` or `integer`.
    pub field: String,
    pub gram: Vec<Vec<i64>>,
    pub element: Vec<Vec<i64>>,
    /// Q on the basis, for orthogonal groups in characteristic two.
    pub quadratic: Option<Vec<u8>>,
    pub generators: Vec<GeneratorFields>,
    pub jordan_type: Vec<u32>,
    pub recovered_eps: Option<String>,
    pub arf: Option<u8>,
    pub preserves_form: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub suite: String,
    pub max_n: u32,
    pub checks: usize,
    pub passed: bool,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Record {
    Class(ClassRecord),
    Pair(PairRecord),
    Rho(RhoRecord),
    Row(RowRecord),
    Descent(DescentRecord),
    Preferred(PreferredRecord),
    SplitElement(SplitElementRecord),
    Report(ReportRecord),
}

#[derive(Serialize, Deserialize)]
struct Envelope {
    schema: u32,
    #[serde(flatten)]
    record: Record,
}

/// One JSON line, without the trailing newline.
pub fn render(r: &Record) -> String {
    serde_json::to_string(&Envelope { schema: SCHEMA_VERSION, record: r.clone() }).expect("records serialize")
}

pub fn parse(line: &str) -> Result<Record, String> {
    let env: Envelope = serde_json::from_str(line).map_err(|e| e.to_string())?;
    if env.schema != SCHEMA_VERSION {
        return Err(format!("schema {} is not {SCHEMA_VERSION}", env.schema));
    }
    Ok(env.record)
}

impl Record {
    /// Column headers for table mode.
    pub fn headers(&self) -> Vec<&'static str> {
        match self {
            Record::Class(_) => vec!["group", "class"],
            Record::Pair(_) => vec!["group", "class", "local system"],
            Record::Rho(_) => vec!["class", "symbol", "defect", "|class|"],
            Record::Row(_) => vec!["class", "local system", "symbol", "d", "W", "character"],
            Record::Descent(_) => vec!["case", "h", "source", "target", "split", "reachable", "chosen"],
            Record::Preferred(_) => vec!["character", "preferred", "rows"],
            Record::SplitElement(_) => vec!["class", "dim", "jordan", "eps", "arf", "preserved"],
            Record::Report(_) => vec!["suite", "max n", "checks", "failures", "result"],
        }
    }

    /// Cells for table mode.
    pub fn cells(&self) -> Vec<String> {
        match self {
            Record::Class(r) => vec![group_text(&r.group), label_text(&r.class)],
            Record::Pair(r) => vec![group_text(&r.group), label_text(&r.class), ls_text(&r.local_system)],
            Record::Rho(r) => vec![
                label_text(&r.class),
                r.symbol.symbol.clone(),
                r.symbol.defect.to_string(),
                r.similarity_class_size.to_string(),
            ],
            Record::Row(r) => vec![
                label_text(&r.class),
                ls_text(&r.local_system),
                r.symbol.symbol.clone(),
                r.defect.to_string(),
                r.weyl.clone(),
                r.character.to_bipartition().to_string(),
            ],
            Record::Descent(r) => vec![
                r.case.clone(),
                r.part.to_string(),
                label_text(&r.source),
                label_text(&r.target),
                yes(r.split_target),
                yes(r.reachable),
                yes(r.chosen),
            ],
            Record::Preferred(r) => vec![
                r.character.to_bipartition().to_string(),
                r.preferred.to_bipartition().to_string(),
                format!("{};{}", join(&r.rows.0), join(&r.rows.1)),
            ],
            Record::SplitElement(r) => vec![
                label_text(&r.class),
                r.dim.to_string(),
                Partition::new(r.jordan_type.clone()).to_string(),
                r.recovered_eps.clone().unwrap_or_else(|| "-".into()),
                r.arf.map_or("-".into(), |a| a.to_string()),
                yes(r.preserves_form),
            ],
            Record::Report(r) => vec![
                r.suite.clone(),
                r.max_n.to_string(),
                r.checks.to_string(),
                r.failures.len().to_string(),
                if r.passed { "PASS".into() } else { "FAIL".into() },
            ],
        }
    }
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

fn join(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("")
}

fn group_text(g: &GroupFields) -> String {
    g.to_group().map_or_else(|_| format!("{}-{}", g.family, g.n), |g| g.to_string())
}

fn label_text(l: &LabelFields) -> String {
    l.to_label().map_or_else(|_| format!("{:?}", l.lambda), |c| c.to_string())
}

fn ls_text(keys: &[u32]) -> String {
    if keys.is_empty() {
        return "1".into();
    }
    keys.iter().map(|k| format!("a{k}")).collect::<Vec<_>>().join("*")
}

/// Renders records as an aligned table; all records must share a kind.
pub fn render_table(records: &[Record]) -> String {
    let Some(first) = records.first() else { return String::new() };
    let head: Vec<String> = first.headers().into_iter().map(String::from).collect();
    let rows: Vec<Vec<String>> = std::iter::once(head).chain(records.iter().map(Record::cells)).collect();
    let widths: Vec<usize> =
        (0..rows[0].len()).map(|i| rows.iter().map(|r| r[i].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}
