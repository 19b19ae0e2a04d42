//! JSON file formats shared by the CLI and the scenario tooling: sections,
//! vector fields, distributions, rewriting relations, and polynomial or
//! extension descriptors.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dist::{Distribution, Relation};
use crate::fieldops::{Base, JetSection, VectorField};
use crate::galois::{extend_field, El, FieldH, Poly};
use crate::jets::{normalize_name, parse_jet_expr, JetContext, JetVar, MultiIndex};
use crate::mpoly::Var;
use crate::ratfunc::RatFunc;

#[derive(Clone, Debug)]
pub struct FormatError(pub String);

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "format error: {}", self.0)
    }
}

impl std::error::Error for FormatError {}

fn err(msg: impl Into<String>) -> FormatError {
    FormatError(msg.into())
}

fn expr(s: &str) -> Result<RatFunc, FormatError> {
    parse_jet_expr(s).map_err(|e| err(format!("bad expression '{s}': {e}")))
}

/// Section file: `{"order": q, "over": "source"|"target",
/// "components": {"k|mu": "<expr>"}}`, `mu` the sorted direction string
/// (empty for order 0). Optional `"n"`/`"m"` pin the context.
#[derive(Serialize, Deserialize)]
pub struct SectionFile {
    pub order: u32,
    pub over: String,
    pub components: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

pub fn parse_section(text: &str) -> Result<JetSection, FormatError> {
    let file: SectionFile = serde_json::from_str(text).map_err(|e| err(e.to_string()))?;
    let over = match file.over.as_str() {
        "source" => Base::Source,
        "target" => Base::Target,
        other => return Err(err(format!("unknown base '{other}'"))),
    };
    let mut entries = Vec::new();
    let mut max_comp = 1usize;
    let mut max_dir = 1usize;
    for (key, value) in &file.components {
        let (k_str, mu_str) = key
            .split_once('|')
            .ok_or_else(|| err(format!("component key '{key}' is not 'k|mu'")))?;
        let k: usize = k_str
            .parse()
            .map_err(|_| err(format!("bad component index '{k_str}'")))?;
        let mu = MultiIndex::from_dirs(mu_str).map_err(|m| err(m))?;
        max_comp = max_comp.max(k);
        max_dir = max_dir.max(mu.max_dir().unwrap_or(1));
        entries.push(((k, mu), expr(value)?));
    }
    let dirs = max_comp.max(max_dir);
    let (n, m) = match over {
        Base::Source => (file.n.unwrap_or(dirs).max(dirs), file.m.unwrap_or(1)),
        Base::Target => (file.n.unwrap_or(1), file.m.unwrap_or(dirs).max(dirs)),
    };
    let ctx = JetContext::new(n, m, file.order);
    JetSection::new(over, file.order, ctx, entries).map_err(|e| err(e.to_string()))
}

pub fn section_to_json(s: &JetSection) -> String {
    let file = SectionFile {
        order: s.q,
        over: match s.over {
            Base::Source => "source".to_string(),
            Base::Target => "target".to_string(),
        },
        components: s
            .components()
            .filter(|(_, v)| !v.is_zero())
            .map(|((k, mu), v)| (format!("{k}|{}", mu.dirs()), v.to_string()))
            .collect(),
        n: Some(s.ctx.n),
        m: Some(s.ctx.m),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}

/// Vector field file: `{"coefficients": {"<jetvar>": "<expr>"}}` with
/// optional `"n"`/`"m"`.
#[derive(Serialize, Deserialize)]
pub struct VectorFieldFile {
    pub coefficients: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

fn context_of_vars(vars: &[JetVar], n_hint: Option<usize>, m_hint: Option<usize>) -> JetContext {
    let mut n = n_hint.unwrap_or(1);
    let mut m = m_hint.unwrap_or(1);
    let mut q = 0;
    let mut p = 0;
    for v in vars {
        match v {
            JetVar::Source { comp } => n = n.max(*comp),
            JetVar::SourceJet { comp, mu, .. } => {
                m = m.max(*comp);
                n = n.max(mu.max_dir().unwrap_or(1));
                q = q.max(mu.order());
            }
            JetVar::GroupoidJet { comp, lam, .. } => {
                m = m.max(*comp).max(lam.max_dir().unwrap_or(1));
                q = q.max(lam.order());
            }
            JetVar::Param { comp, .. } => p = p.max(*comp),
            JetVar::Unknown { .. } => {}
        }
    }
    JetContext::with_params(n, m, q, p)
}

pub fn parse_vector_field(text: &str) -> Result<VectorField, FormatError> {
    let file: VectorFieldFile = serde_json::from_str(text).map_err(|e| err(e.to_string()))?;
    vector_field_from_map(&file.coefficients, file.n, file.m)
}

pub fn vector_field_from_map(
    coefficients: &BTreeMap<String, String>,
    n: Option<usize>,
    m: Option<usize>,
) -> Result<VectorField, FormatError> {
    let mut entries = Vec::new();
    let mut vars = Vec::new();
    for (name, value) in coefficients {
        let canon = normalize_name(name).map_err(|m| err(m))?;
        let jv = JetVar::parse(&canon).map_err(|e| err(e.to_string()))?;
        let coeff = expr(value)?;
        for v in coeff.vars() {
            if let Some(jv) = JetVar::from_var(&v) {
                vars.push(jv);
            }
        }
        vars.push(jv);
        entries.push((Var::new(&canon), coeff));
    }
    let ctx = context_of_vars(&vars, n, m);
    Ok(VectorField::new(ctx, entries))
}

pub fn vector_field_to_json(f: &VectorField) -> String {
    let file = VectorFieldFile {
        coefficients: f
            .coeffs()
            .map(|(v, c)| (v.name().to_string(), c.to_string()))
            .collect(),
        n: Some(f.ctx.n),
        m: Some(f.ctx.m),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}

/// Distribution file: `{"label": "...", "generators": [<vectorfield>...]}`.
#[derive(Serialize, Deserialize)]
pub struct DistributionFile {
    pub label: String,
    pub generators: Vec<VectorFieldFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

pub fn parse_distribution(text: &str) -> Result<Distribution, FormatError> {
    let file: DistributionFile = serde_json::from_str(text).map_err(|e| err(e.to_string()))?;
    let mut generators = Vec::new();
    for g in &file.generators {
        generators.push(vector_field_from_map(
            &g.coefficients,
            g.n.or(file.n),
            g.m.or(file.m),
        )?);
    }
    // unify contexts
    let n = generators.iter().map(|g| g.ctx.n).max().unwrap_or(1);
    let m = generators.iter().map(|g| g.ctx.m).max().unwrap_or(1);
    let q = generators.iter().map(|g| g.ctx.q).max().unwrap_or(0);
    let p = generators.iter().map(|g| g.ctx.p).max().unwrap_or(0);
    let ctx = JetContext::with_params(n, m, q, p);
    let generators = generators
        .into_iter()
        .map(|g| {
            VectorField::new(
                ctx,
                g.coeffs().map(|(v, c)| (v.clone(), c.clone())).collect(),
            )
        })
        .collect();
    Ok(Distribution::new(&file.label, generators, ctx))
}

/// Relation file: `{"relations": [{"solve_for": "<jetvar>", "equals": "<expr>"}]}`.
#[derive(Serialize, Deserialize)]
pub struct RelationFile {
    pub relations: Vec<RelationEntry>,
}

#[derive(Serialize, Deserialize)]
pub struct RelationEntry {
    pub solve_for: String,
    pub equals: String,
}

pub fn parse_relations(text: &str) -> Result<Vec<Relation>, FormatError> {
    let file: RelationFile = serde_json::from_str(text).map_err(|e| err(e.to_string()))?;
    file.relations
        .iter()
        .map(|r| {
            let canon = normalize_name(&r.solve_for).map_err(|m| err(m))?;
            Ok(Relation::new(Var::new(&canon), expr(&r.equals)?))
        })
        .collect()
}

/// Extension descriptor: `{"gen": "eta", "minpoly": [...], "base": {...}}`;
/// the minimal polynomial is a coefficient list, lowest degree first, in the
/// expression grammar. A missing or null base means Q.
#[derive(Serialize, Deserialize)]
pub struct ExtensionFile {
    pub gen: String,
    pub minpoly: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base: Option<Box<ExtensionFile>>,
}

pub fn parse_rat_coeff(s: &str) -> Result<crate::rat::Rat, FormatError> {
    let f = crate::parse_expr(s).map_err(|e| err(e.to_string()))?;
    f.as_constant()
        .ok_or_else(|| err(format!("'{s}' is not a rational constant")))
}

/// Coefficient list, lowest degree first, rational constants only.
pub fn parse_poly_q(coeffs: &[String]) -> Result<Poly<El>, FormatError> {
    let values = coeffs
        .iter()
        .map(|s| parse_rat_coeff(s).map(|r| FieldH::Q.from_rat(r)))
        .collect::<Result<Vec<El>, _>>()?;
    Ok(Poly::new(values))
}

pub fn build_extension(file: &ExtensionFile) -> Result<FieldH, FormatError> {
    let base = match &file.base {
        None => FieldH::Q,
        Some(inner) => build_extension(inner)?,
    };
    // coefficients are rational; embed into the base
    let coeffs = file
        .minpoly
        .iter()
        .map(|s| parse_rat_coeff(s).map(|r| base.from_rat(r)))
        .collect::<Result<Vec<El>, _>>()?;
    extend_field(&base, &Poly::new(coeffs), &file.gen).map_err(|e| err(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn section_roundtrip() {
        let text = r#"{
            "order": 1,
            "over": "source",
            "components": {"1|1": "1", "2|": "-x2"},
            "n": 2
        }"#;
        let s = parse_section(text).unwrap();
        assert_eq!(s.q, 1);
        assert_eq!(s.ctx.n, 2);
        assert_eq!(
            s.get(1, &MultiIndex::from_dirs("1").unwrap()),
            parse_jet_expr("1").unwrap()
        );
        let back = section_to_json(&s);
        let s2 = parse_section(&back).unwrap();
        assert_eq!(s, s2);
    }

    #[test]
    fn vector_field_file() {
        let text = r#"{"coefficients": {"y1_1": "y1_1", "y2_1": "y2_1"}}"#;
        let f = parse_vector_field(text).unwrap();
        assert_eq!(f.ctx.m, 2);
        assert_eq!(
            f.coeff(&Var::new("y1_1")),
            parse_jet_expr("y1_1").unwrap()
        );
    }

    #[test]
    fn distribution_and_relations() {
        let dist = r#"{
            "label": "Delta",
            "generators": [
                {"coefficients": {"y1_1": "y1_1", "y2_1": "y2_1"}},
                {"coefficients": {"y2_1": "y2"}}
            ]
        }"#;
        let d = parse_distribution(dist).unwrap();
        assert_eq!(d.generators.len(), 2);
        assert_eq!(d.label, "Delta");
        let rels = parse_relations(
            r#"{"relations": [{"solve_for": "by2", "equals": "y2*y1_1/by1_1"}]}"#,
        )
        .unwrap();
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].solve_for, Var::new("by2"));
    }

    #[test]
    fn extension_descriptor() {
        let text = r#"{
            "gen": "j",
            "minpoly": ["1", "1", "1"],
            "base": {"gen": "eta", "minpoly": ["-2", "0", "0", "1"]}
        }"#;
        let file: ExtensionFile = serde_json::from_str(text).unwrap();
        let field = build_extension(&file).unwrap();
        assert_eq!(field.absolute_degree(), 6);
    }

    #[test]
    fn bad_inputs_are_reported() {
        assert!(parse_section(r#"{"order": 1, "over": "sideways", "components": {}}"#).is_err());
        assert!(parse_vector_field(r#"{"coefficients": {"w1": "1"}}"#).is_err());
        assert!(parse_poly_q(&["x1".to_string()]).is_err());
    }
}
