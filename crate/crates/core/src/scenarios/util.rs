//! Shared builders for scenario and property-suite code.

use crate::fieldops::{Base, JetSection, VectorField};
use crate::jets::{normalize_name, parse_jet_expr, JetContext, MultiIndex};
use crate::mpoly::Var;
use crate::ratfunc::RatFunc;

pub fn e(s: &str) -> RatFunc {
    parse_jet_expr(s).expect("expression parses")
}

pub fn jv(s: &str) -> Var {
    Var::new(&normalize_name(s).expect("lexicon name"))
}

pub fn vf(ctx: JetContext, entries: &[(&str, &str)]) -> VectorField {
    VectorField::new(
        ctx,
        entries.iter().map(|(v, c)| (jv(v), e(c))).collect(),
    )
}

pub fn section(
    over: Base,
    q: u32,
    ctx: JetContext,
    entries: &[(usize, &str, &str)],
) -> JetSection {
    JetSection::new(
        over,
        q,
        ctx,
        entries
            .iter()
            .map(|(k, dirs, value)| {
                (
                    (*k, MultiIndex::from_dirs(dirs).expect("direction string")),
                    e(value),
                )
            })
            .collect(),
    )
    .expect("well-formed section")
}
