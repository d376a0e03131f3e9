use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};

use springer_core::branching::{class_descents, descent_search, split_descent};
use springer_core::springer::{correspondence_table, preferred_extension, rho};
use springer_core::splitforms::{arf_invariant, assemble, epsilon_of_capped, jordan_type, FormMatrix, DEFAULT_KERNEL_CAP};
use springer_core::symbols::similarity_class;
use springer_core::uniclass::{enumerate_classes, enumerate_pairs, splits_in_so};
use springer_core::verify::{extension_rows, run_suite, Suite};
use springer_core::{
    Bipartition, CharParity, ClassLabel, EpsilonMap, Error, Family, Frobenius, GroupDescriptor, Partition, SplitTag,
};

use crate::records::*;
use crate::text::{parse_eps, parse_lambda, parse_list, parse_split};

/// Environment variable overriding the kernel dimension cap used when
/// recovering ε.
pub const KERNEL_CAP_VAR: &str = "SPRINGER_KERNEL_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "springer", version, about = "Unipotent classes and the generalized Springer correspondence")]
struct Cli {
    /// Output as JSON lines or as an aligned table.
    #[arg(long, value_enum, global = true, default_value = "records")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Records,
    Table,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Sp,
    SoOdd,
    SoEven,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CharArg {
    Odd,
    Two,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FrobeniusArg {
    Split,
    Nonsplit,
}

#[derive(Args, Debug)]
struct GroupArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: u32,
    #[arg(long = "char", value_enum, default_value = "odd")]
    char_parity: CharArg,
    #[arg(long, value_enum, default_value = "split")]
    frobenius: FrobeniusArg,
}

#[derive(Args, Debug)]
struct ClassArgs {
    /// Parts such as `4,4` or `2^2,1^2`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// `size=value` tokens; defaults to the odd-characteristic convention.
    #[arg(long)]
    eps: Option<String>,
    /// `prime` or `double-prime`; defaults to prime for a split class.
    #[arg(long)]
    split: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Unipotent classes of the group.
    Classes(GroupArgs),
    /// Pairs (class, local system).
    Pairs(GroupArgs),
    /// The symbol ρ of one class, or of every class.
    Rho {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        eps: Option<String>,
        #[arg(long)]
        split: Option<String>,
    },
    /// The full correspondence table.
    Correspondence(GroupArgs),
    /// Descent cases of a class to rank n − 1.
    Branch {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// The split element of a class with its form and generators.
    SplitElement {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// The preferred extension of {α, β} from W'_n to W_n.
    Preferred {
        #[arg(long, default_value = "")]
        alpha: String,
        #[arg(long, default_value = "")]
        beta: String,
    },
    /// Runs verification suites.
    Verify {
        /// A suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Overrides each suite's default bound.
        #[arg(long)]
        max_n: Option<u32>,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidGroup(_)
            | Error::InvalidClass(_)
            | Error::InvalidSymbol(_)
            | Error::InvalidLocalSystem(_)
            | Error::InvalidBipartition(_)
            | Error::DefectMismatch(..)
            | Error::NegativeRank(_)
            | Error::OddDimension(_) => Failure::Usage(e.to_string()),
            _ => Failure::Failed(e.to_string()),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command) {
        Ok((records, all_passed)) => {
            let stdout = match cli.format {
                Format::Records => records.iter().map(|r| render(r) + "\n").collect(),
                Format::Table => render_table(&records),
            };
            Outcome { code: if all_passed { EXIT_OK } else { EXIT_FAILED }, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(m)) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Failed(m)) => Outcome { code: EXIT_FAILED, stdout: String::new(), stderr: format!("error: {m}\n") },
    }
}

fn group(a: &GroupArgs) -> Result<GroupDescriptor, Failure> {
    let family = match a.family {
        FamilyArg::Sp => Family::Sp,
        FamilyArg::SoOdd => Family::SoOdd,
        FamilyArg::SoEven => Family::SoEven,
    };
    let ch = match a.char_parity {
        CharArg::Odd => CharParity::Odd,
        CharArg::Two => CharParity::Two,
    };
    let fr = match a.frobenius {
        FrobeniusArg::Split => Frobenius::Split,
        FrobeniusArg::Nonsplit => Frobenius::NonSplit,
    };
    Ok(GroupDescriptor::new(family, a.n, ch, fr)?)
}

fn label(g: &GroupDescriptor, lambda: &str, eps: Option<&str>, split: Option<&str>) -> Result<ClassLabel, Failure> {
    let lambda: Partition = parse_lambda(lambda).map_err(Failure::Usage)?;
    let eps = match eps {
        Some(s) => parse_eps(s).map_err(Failure::Usage)?,
        None => EpsilonMap::odd_char(&lambda, g.family),
    };
    let split = match split {
        Some(s) => parse_split(s).map_err(Failure::Usage)?,
        None => {
            let plain = ClassLabel::new(lambda.clone(), eps.clone(), SplitTag::None);
            if g.is_orthogonal() && splits_in_so(&plain, g)? {
                SplitTag::Prime
            } else {
                SplitTag::None
            }
        }
    };
    let c = ClassLabel::new(lambda, eps, split);
    c.validate(g)?;
    Ok(c)
}

fn kernel_cap() -> Result<usize, Failure> {
    match std::env::var(KERNEL_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("{KERNEL_CAP_VAR}={v} is not a count"))),
        Err(_) => Ok(DEFAULT_KERNEL_CAP),
    }
}

fn execute(cmd: &Command) -> Result<(Vec<Record>, bool), Failure> {
    let records = match cmd {
        Command::Classes(a) => {
            let g = group(a)?;
            enumerate_classes(&g)
                .iter()
                .map(|c| Record::Class(ClassRecord { group: GroupFields::from_group(&g), class: LabelFields::from_label(c) }))
                .collect()
        }
        Command::Pairs(a) => {
            let g = group(a)?;
            enumerate_pairs(&g)
                .iter()
                .map(|(c, ls)| {
                    Record::Pair(PairRecord {
                        group: GroupFields::from_group(&g),
                        class: LabelFields::from_label(c),
                        local_system: ls.signs().to_vec(),
                    })
                })
                .collect()
        }
        Command::Rho { group: a, lambda, eps, split } => {
            let g = group(a)?;
            let classes = match lambda {
                Some(l) => vec![label(&g, l, eps.as_deref(), split.as_deref())?],
                None => enumerate_classes(&g),
            };
            let mut out = Vec::new();
            for c in &classes {
                let s = rho(&g, c)?;
                let size = similarity_class(&s)?.members.len();
                out.push(Record::Rho(RhoRecord {
                    group: GroupFields::from_group(&g),
                    class: LabelFields::from_label(c),
                    symbol: SymbolFields::from_symbol(&s),
                    similarity_class_size: size,
                }));
            }
            out
        }
        Command::Correspondence(a) => {
            let g = group(a)?;
            correspondence_table(&g)?.iter().map(|r| Record::Row(RowRecord::from_row(&g, r))).collect()
        }
        Command::Branch { group: a, class } => {
            let g = group(a)?;
            if g.n == 0 {
                return Err(Failure::Usage("branching needs n ≥ 1".into()));
            }
            let c = label(&g, &class.lambda, class.eps.as_deref(), class.split.as_deref())?;
            let reachable = class_descents(&g, &c)?;
            let chosen = descent_search(&g, &c, false).ok();
            split_descent(&g, &c)?
                .iter()
                .map(|d| {
                    Record::Descent(DescentRecord::from_case(
                        &g,
                        d,
                        reachable.contains(&d.target),
                        chosen.as_ref() == Some(d),
                    ))
                })
                .collect()
        }
        Command::SplitElement { group: a, class } => {
            let g = group(a)?;
            let c = label(&g, &class.lambda, class.eps.as_deref(), class.split.as_deref())?;
            vec![Record::SplitElement(split_element(&g, &c, kernel_cap()?)?)]
        }
        Command::Preferred { alpha, beta } => {
            let a = Partition::new(parse_list(alpha).map_err(Failure::Usage)?);
            let b = Partition::new(parse_list(beta).map_err(Failure::Usage)?);
            let e = Bipartition::unordered(a, b, 0);
            let p = preferred_extension(&e)?;
            vec![Record::Preferred(PreferredRecord {
                character: BipartitionFields::from_bipartition(&e),
                preferred: BipartitionFields::from_bipartition(&p),
                rows: extension_rows(&p),
            })]
        }
        Command::Verify { suite, max_n } => {
            let suites = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![Suite::from_name(suite).ok_or_else(|| Failure::Usage(format!("unknown suite {suite}")))?]
            };
            let reports: Vec<Record> = suites
                .into_iter()
                .map(|s| {
                    let r = run_suite(s, max_n.unwrap_or_else(|| s.default_max()));
                    Record::Report(ReportRecord {
                        suite: r.suite.name().into(),
                        max_n: r.max_n,
                        checks: r.checks,
                        passed: r.passed(),
                        failures: r.failures,
                        notes: r.notes,
                    })
                })
                .collect();
            let ok = reports.iter().all(|r| matches!(r, Record::Report(x) if x.passed));
            return Ok((reports, ok));
        }
    };
    Ok((records, true))
}

fn split_element(g: &GroupDescriptor, c: &ClassLabel, cap: usize) -> Result<SplitElementRecord, Failure> {
    let a = assemble(g, c)?;
    let jordan = jordan_type(&a.element)?;
    let recovered_eps = match (&a.element, &a.gram) {
        (FormMatrix::Gf2(u), FormMatrix::Gf2(f)) => Some(epsilon_of_capped(u, f, cap)?.to_string()),
        _ => None,
    };
    let arf = a.quadratic.as_ref().map(arf_invariant).transpose()?;
    Ok(SplitElementRecord {
        group: GroupFields::from_group(g),
        class: LabelFields::from_label(c),
        dim: a.dim(),
        field: if matches!(a.gram, FormMatrix::Gf2(_)) { "gf2" } else { "integer" }.into(),
        gram: a.gram.to_rows(),
        element: a.element.to_rows(),
        quadratic: a.quadratic.as_ref().map(|q| q.values.iter().map(|&v| v as u8).collect()),
        generators: a.generators.iter().map(|(j, m)| GeneratorFields { j: *j, matrix: m.to_rows() }).collect(),
        jordan_type: jordan.decreasing(),
        recovered_eps,
        arf,
        preserves_form: a.element_preserves_form(),
    })
}
