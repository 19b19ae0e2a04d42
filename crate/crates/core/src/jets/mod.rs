//! Jet coordinates: multi-indices, the variable lexicon, formal (total)
//! derivatives, groupoid jet composition and inversion, and one-step
//! prolongation of linear systems.

mod compose;
mod prolong_sys;
mod total;

pub use compose::{identity_groupoid_jet, jet_compose, jet_invert, JetMap};
pub use prolong_sys::{prolong_linear_system, ProlongResult};
pub use total::{chain_total_derivative, max_order, total_derivative, total_derivative_capped, total_derivative_multi};

use std::fmt;

use crate::mpoly::Var;
use crate::ratfunc::RatFunc;
use crate::{parse_expr_with, ParseError};

/// Errors out of the jet layer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum JetError {
    /// A total derivative would push past the caller-supplied order cap.
    OrderOverflow { cap: u32, needed: u32 },
    /// The first-order block of a groupoid jet has zero determinant.
    SingularJacobian,
    /// A string does not belong to the variable lexicon.
    BadVariable(String),
    /// Input data is incomplete or out of context.
    BadInput(String),
}

impl fmt::Display for JetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JetError::OrderOverflow { cap, needed } => {
                write!(f, "order overflow: cap {cap}, needed {needed}")
            }
            JetError::SingularJacobian => f.write_str("singular first-order jet block"),
            JetError::BadVariable(v) => write!(f, "not a jet variable: {v}"),
            JetError::BadInput(m) => write!(f, "bad input: {m}"),
        }
    }
}

impl std::error::Error for JetError {}

/// Differentiation counts per direction, `mu = (mu_1, ..., mu_n)`. Trailing
/// zeros are trimmed so the representation is independent of the ambient
/// number of directions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct MultiIndex {
    counts: Vec<u32>,
}

impl MultiIndex {
    pub fn zero() -> Self {
        MultiIndex { counts: Vec::new() }
    }

    pub fn from_counts(mut counts: Vec<u32>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        MultiIndex { counts }
    }

    /// Parses a non-decreasing digit string like `"112"`.
    pub fn from_dirs(dirs: &str) -> Result<Self, String> {
        let mut counts: Vec<u32> = Vec::new();
        for c in dirs.chars() {
            let d = c
                .to_digit(10)
                .filter(|d| *d >= 1)
                .ok_or_else(|| format!("bad direction '{c}'"))? as usize;
            if counts.len() < d {
                counts.resize(d, 0);
            }
            counts[d - 1] += 1;
        }
        Ok(MultiIndex::from_counts(counts))
    }

    /// Total order `|mu|`.
    pub fn order(&self) -> u32 {
        self.counts.iter().sum()
    }

    pub fn count(&self, dir: usize) -> u32 {
        self.counts.get(dir - 1).copied().unwrap_or(0)
    }

    /// `mu + 1_i` (directions are 1-based).
    pub fn succ(&self, dir: usize) -> MultiIndex {
        let mut counts = self.counts.clone();
        if counts.len() < dir {
            counts.resize(dir, 0);
        }
        counts[dir - 1] += 1;
        MultiIndex { counts }
    }

    /// `mu - 1_i` if possible.
    pub fn pred(&self, dir: usize) -> Option<MultiIndex> {
        if self.count(dir) == 0 {
            return None;
        }
        let mut counts = self.counts.clone();
        counts[dir - 1] -= 1;
        Some(MultiIndex::from_counts(counts))
    }

    /// Greatest direction with a nonzero count, if any.
    pub fn max_dir(&self) -> Option<usize> {
        (1..=self.counts.len()).rev().find(|d| self.count(*d) > 0)
    }

    /// Sorted direction string, e.g. `(2,1) -> "112"`.
    pub fn dirs(&self) -> String {
        let mut s = String::new();
        for (i, c) in self.counts.iter().enumerate() {
            for _ in 0..*c {
                s.push(char::from_digit((i + 1) as u32, 10).unwrap());
            }
        }
        s
    }

    /// All multi-indices over `n` directions with `|mu| == order`.
    pub fn all_of_order(n: usize, order: u32) -> Vec<MultiIndex> {
        if order == 0 {
            return vec![MultiIndex::zero()];
        }
        let mut out = Vec::new();
        for lower in MultiIndex::all_of_order(n, order - 1) {
            let start = lower.max_dir().unwrap_or(1);
            for d in start..=n {
                out.push(lower.succ(d));
            }
        }
        out
    }

    /// All multi-indices over `n` directions with `|mu| <= order`.
    pub fn all_up_to(n: usize, order: u32) -> Vec<MultiIndex> {
        (0..=order)
            .flat_map(|k| MultiIndex::all_of_order(n, k))
            .collect()
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dirs())
    }
}

/// Ambient sizes: `n` independent variables, `m` dependent variables, jet
/// order `q`, and `p` group parameters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct JetContext {
    pub n: usize,
    pub m: usize,
    pub q: u32,
    pub p: usize,
}

impl JetContext {
    pub fn new(n: usize, m: usize, q: u32) -> Self {
        JetContext { n, m, q, p: 0 }
    }

    pub fn with_params(n: usize, m: usize, q: u32, p: usize) -> Self {
        JetContext { n, m, q, p }
    }
}

/// Identity of a coordinate on the jet space.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum JetVar {
    /// Source variable `x<i>`.
    Source { comp: usize },
    /// Jet of a dependent variable `y<k>_<dirs>`; `bars` counts upper bars
    /// (`b` prefixes).
    SourceJet {
        comp: usize,
        mu: MultiIndex,
        bars: u8,
    },
    /// Groupoid jet `g<u>_<dirs>` over the target directions; order 0 means
    /// the target coordinate itself.
    GroupoidJet {
        comp: usize,
        lam: MultiIndex,
        bars: u8,
    },
    /// Group parameter `a<t>`.
    Param { comp: usize, bars: u8 },
    /// Internal formal jet of an unknown function; never serialized by the
    /// public operations. Family 0 renders as `u...`, family 1 as `v...`.
    Unknown {
        fam: u8,
        comp: usize,
        mu: MultiIndex,
    },
}

impl JetVar {
    pub fn source(i: usize) -> Self {
        JetVar::Source { comp: i }
    }

    pub fn jet(k: usize, mu: MultiIndex) -> Self {
        JetVar::SourceJet {
            comp: k,
            mu,
            bars: 0,
        }
    }

    pub fn bar_jet(k: usize, mu: MultiIndex) -> Self {
        JetVar::SourceJet {
            comp: k,
            mu,
            bars: 1,
        }
    }

    pub fn groupoid(u: usize, lam: MultiIndex) -> Self {
        JetVar::GroupoidJet {
            comp: u,
            lam,
            bars: 0,
        }
    }

    pub fn param(t: usize) -> Self {
        JetVar::Param { comp: t, bars: 0 }
    }

    pub fn unknown(fam: u8, comp: usize, mu: MultiIndex) -> Self {
        JetVar::Unknown { fam, comp, mu }
    }

    /// Jet order of the coordinate (source variables and parameters are 0).
    pub fn order(&self) -> u32 {
        match self {
            JetVar::Source { .. } | JetVar::Param { .. } => 0,
            JetVar::SourceJet { mu, .. } => mu.order(),
            JetVar::GroupoidJet { lam, .. } => lam.order(),
            JetVar::Unknown { mu, .. } => mu.order(),
        }
    }

    /// The same coordinate on the barred copy of the universe. Source
    /// variables are shared and stay put.
    pub fn bar(&self) -> JetVar {
        match self {
            JetVar::Source { .. } | JetVar::Unknown { .. } => self.clone(),
            JetVar::SourceJet { comp, mu, bars } => JetVar::SourceJet {
                comp: *comp,
                mu: mu.clone(),
                bars: bars + 1,
            },
            JetVar::GroupoidJet { comp, lam, bars } => JetVar::GroupoidJet {
                comp: *comp,
                lam: lam.clone(),
                bars: bars + 1,
            },
            JetVar::Param { comp, bars } => JetVar::Param {
                comp: *comp,
                bars: bars + 1,
            },
        }
    }

    /// Canonical lexicon name.
    pub fn name(&self) -> String {
        match self {
            JetVar::Source { comp } => format!("x{comp}"),
            JetVar::SourceJet { comp, mu, bars } => {
                let b = "b".repeat(*bars as usize);
                if mu.order() == 0 {
                    format!("{b}y{comp}")
                } else {
                    format!("{b}y{comp}_{}", mu.dirs())
                }
            }
            JetVar::GroupoidJet { comp, lam, bars } => {
                let b = "b".repeat(*bars as usize);
                if lam.order() == 0 {
                    format!("{b}g{comp}")
                } else {
                    format!("{b}g{comp}_{}", lam.dirs())
                }
            }
            JetVar::Param { comp, bars } => {
                format!("{}a{comp}", "b".repeat(*bars as usize))
            }
            JetVar::Unknown { fam, comp, mu } => {
                let c = if *fam == 0 { 'u' } else { 'v' };
                if mu.order() == 0 {
                    format!("{c}{comp}")
                } else {
                    format!("{c}{comp}_{}", mu.dirs())
                }
            }
        }
    }

    pub fn to_var(&self) -> Var {
        Var::new(&self.name())
    }

    /// Parses a lexicon name. Accepted aliases: a missing component digit
    /// means component 1 (`y_x`, `g`), and for one independent variable the
    /// direction string may be spelled with `x`s (`y1_xx` = `y1_11`).
    pub fn parse(name: &str) -> Result<JetVar, JetError> {
        let bad = || JetError::BadVariable(name.to_string());
        let bytes = name.as_bytes();
        let mut bars = 0usize;
        while bars < bytes.len() && bytes[bars] == b'b' {
            bars += 1;
        }
        let rest = &name[bars..];
        let mut chars = rest.chars();
        let class = chars.next().ok_or_else(bad)?;
        let tail = &rest[class.len_utf8()..];
        let (comp_str, dirs_str) = match tail.split_once('_') {
            Some((c, d)) => (c, Some(d)),
            None => (tail, None),
        };
        let comp: usize = if comp_str.is_empty() {
            1
        } else if comp_str.chars().all(|c| c.is_ascii_digit()) {
            comp_str.parse().map_err(|_| bad())?
        } else {
            return Err(bad());
        };
        if comp == 0 {
            return Err(bad());
        }
        let mu = match dirs_str {
            None => MultiIndex::zero(),
            Some(d) if d.is_empty() => return Err(bad()),
            Some(d) => {
                let translated: String = if d.chars().all(|c| c == 'x') {
                    "1".repeat(d.len())
                } else {
                    let mut digits: Vec<char> = d.chars().collect();
                    if !digits.iter().all(|c| c.is_ascii_digit()) {
                        return Err(bad());
                    }
                    digits.sort_unstable();
                    digits.into_iter().collect()
                };
                MultiIndex::from_dirs(&translated).map_err(|_| bad())?
            }
        };
        let bars = bars as u8;
        match class {
            'x' => {
                if bars != 0 || mu.order() != 0 {
                    Err(bad())
                } else {
                    Ok(JetVar::Source { comp })
                }
            }
            'y' => Ok(JetVar::SourceJet { comp, mu, bars }),
            'g' => Ok(JetVar::GroupoidJet {
                comp,
                lam: mu,
                bars,
            }),
            'a' => {
                if mu.order() != 0 {
                    Err(bad())
                } else {
                    Ok(JetVar::Param { comp, bars })
                }
            }
            'u' | 'v' => {
                if bars != 0 {
                    Err(bad())
                } else {
                    Ok(JetVar::Unknown {
                        fam: if class == 'u' { 0 } else { 1 },
                        comp,
                        mu,
                    })
                }
            }
            _ => Err(bad()),
        }
    }

    /// Parses an exactalg variable, if it belongs to the lexicon.
    pub fn from_var(v: &Var) -> Option<JetVar> {
        JetVar::parse(v.name()).ok()
    }
}

impl fmt::Display for JetVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Canonicalizes a lexicon name (alias resolution).
pub fn normalize_name(name: &str) -> Result<String, String> {
    JetVar::parse(name)
        .map(|v| v.name())
        .map_err(|e| e.to_string())
}

/// Parses an expression whose identifiers are jet lexicon names, resolving
/// aliases like `y_x` to the canonical `y1_1`.
pub fn parse_jet_expr(input: &str) -> Result<RatFunc, ParseError> {
    parse_expr_with(input, Some(&|name: &str| normalize_name(name)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiindex_basics() {
        let mu = MultiIndex::from_dirs("112").unwrap();
        assert_eq!(mu.order(), 3);
        assert_eq!(mu.count(1), 2);
        assert_eq!(mu.count(2), 1);
        assert_eq!(mu.succ(2).dirs(), "1122");
        assert_eq!(mu.pred(1).unwrap().dirs(), "12");
        assert!(mu.pred(3).is_none());
        assert_eq!(MultiIndex::zero().dirs(), "");
    }

    #[test]
    fn enumerate_orders() {
        assert_eq!(MultiIndex::all_of_order(2, 2).len(), 3); // 11, 12, 22
        assert_eq!(MultiIndex::all_up_to(2, 2).len(), 6);
        assert_eq!(MultiIndex::all_up_to(1, 3).len(), 4);
    }

    #[test]
    fn lexicon_roundtrip() {
        for name in ["x1", "y2_112", "by1_1", "g1_12", "g2", "a3", "ba1", "bby1"] {
            let v = JetVar::parse(name).unwrap();
            assert_eq!(v.name(), name);
        }
    }

    #[test]
    fn lexicon_aliases() {
        assert_eq!(normalize_name("y_x").unwrap(), "y1_1");
        assert_eq!(normalize_name("y1_xx").unwrap(), "y1_11");
        assert_eq!(normalize_name("y").unwrap(), "y1");
        assert_eq!(normalize_name("y2_21").unwrap(), "y2_12");
        assert!(normalize_name("w7").is_err());
        assert!(normalize_name("x1_1").is_err());
    }

    #[test]
    fn bar_is_name_prefix() {
        let v = JetVar::parse("y2_1").unwrap();
        assert_eq!(v.bar().name(), "by2_1");
        assert_eq!(JetVar::parse("a1").unwrap().bar().name(), "ba1");
        assert_eq!(JetVar::parse("x1").unwrap().bar().name(), "x1");
    }

    #[test]
    fn jet_expr_parses_aliases() {
        let f = parse_jet_expr("y_x/y").unwrap();
        assert_eq!(f.to_string(), "y1_1/y1");
    }
}
