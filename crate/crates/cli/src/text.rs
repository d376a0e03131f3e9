//! Parsing of the textual flag values: partitions, ε maps and split tags.

use springer_core::{Eps, EpsilonMap, Partition, SplitTag};

/// Parts separated by commas, with `h^k` for k copies of h. The empty
/// string is the empty partition.
pub fn parse_lambda(s: &str) -> Result<Partition, String> {
    let mut parts = Vec::new();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (h, k) = match tok.split_once('^') {
            Some((h, k)) => (h, k.parse::<usize>().map_err(|e| format!("{tok}: {e}"))?),
            None => (tok, 1),
        };
        let h: u32 = h.parse().map_err(|e| format!("{tok}: {e}"))?;
        if h == 0 {
            return Err("parts must be positive".into());
        }
        parts.extend(std::iter::repeat(h).take(k));
    }
    Ok(Partition::new(parts))
}

/// Comma-separated `size=value` tokens, values in {0, 1, w}.
pub fn parse_eps(s: &str) -> Result<EpsilonMap, String> {
    let mut m = EpsilonMap::new();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (h, v) = tok.split_once('=').ok_or_else(|| format!("{tok}: expected size=value"))?;
        let h: u32 = h.trim().parse().map_err(|e| format!("{tok}: {e}"))?;
        let e = match v.trim() {
            "0" => Eps::Zero,
            "1" => Eps::One,
            "w" => Eps::Omega,
            other => return Err(format!("{tok}: value {other} is not 0, 1 or w")),
        };
        m.set(h, e);
    }
    Ok(m)
}

/// Accepts the rendered suffixes and their names.
pub fn parse_split(s: &str) -> Result<SplitTag, String> {
    match s {
        "" | "none" => Ok(SplitTag::None),
        "'" | "prime" => Ok(SplitTag::Prime),
        "''" | "double-prime" => Ok(SplitTag::DoublePrime),
        other => Err(format!("unknown split tag {other}")),
    }
}

pub fn split_name(t: SplitTag) -> &'static str {
    t.suffix()
}

/// Comma-separated non-negative integers.
pub fn parse_list(s: &str) -> Result<Vec<u32>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|e| format!("{t}: {e}")))
        .collect()
}
