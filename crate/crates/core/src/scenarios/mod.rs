//! The scenario registry: every worked example encoded as an executable,
//! exactly-checked reproduction, shared by the CLI and the test suite.

mod props;
mod util;
mod s_classical;
mod s_groups;
mod s_jets;
mod s_tensor;

pub use props::{run_property_suites, PropertyReport, SuiteResult};

use std::fmt;

use serde::Serialize;

use crate::ratfunc::RatFunc;

/// Where an expected value comes from: a printed value in the source
/// material, a triviality, or an independently derived oracle.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Provenance {
    #[serde(rename = "PAPER")]
    Paper,
    #[serde(rename = "TRIVIAL")]
    Trivial,
    #[serde(rename = "DERIVED")]
    Derived,
}

#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    pub name: String,
    pub status: String,
    pub expected_provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

impl Assertion {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub scenario: String,
    pub anchor: String,
    pub assertions: Vec<Assertion>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(Assertion::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scenario {} ({})", self.scenario, self.anchor)?;
        for a in &self.assertions {
            match &a.residual {
                Some(r) if !a.passed() => writeln!(
                    f,
                    "  [{}] {} ({:?}) residual: {}",
                    a.status, a.name, a.expected_provenance, r
                )?,
                _ => writeln!(f, "  [{}] {} ({:?})", a.status, a.name, a.expected_provenance)?,
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        write!(
            f,
            "  {}",
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Collector passed to each scenario body.
pub struct Checker {
    assertions: Vec<Assertion>,
    notes: Vec<String>,
}

impl Checker {
    fn new() -> Self {
        Checker {
            assertions: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn check(&mut self, name: &str, prov: Provenance, passed: bool, residual: Option<String>) {
        self.assertions.push(Assertion {
            name: name.to_string(),
            status: if passed { "pass" } else { "fail" }.to_string(),
            expected_provenance: prov,
            residual,
        });
    }

    pub fn check_true(&mut self, name: &str, prov: Provenance, passed: bool) {
        self.check(name, prov, passed, None);
    }

    /// Asserts a rational function vanishes identically.
    pub fn check_zero(&mut self, name: &str, prov: Provenance, value: &RatFunc) {
        let ok = value.is_zero();
        self.check(
            name,
            prov,
            ok,
            if ok { None } else { Some(value.to_string()) },
        );
    }

    /// Asserts exact equality of two rational functions.
    pub fn check_eq(&mut self, name: &str, prov: Provenance, actual: &RatFunc, expected: &RatFunc) {
        self.check_zero(name, prov, &(actual - expected));
    }

    /// Asserts equality against a canonical expression string.
    pub fn check_expr(&mut self, name: &str, prov: Provenance, actual: &RatFunc, expected: &str) {
        let e = crate::jets::parse_jet_expr(expected).expect("expected expression parses");
        self.check_eq(name, prov, actual, &e);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Records a hard failure (used when a construction step errors out).
    pub fn fail(&mut self, name: &str, prov: Provenance, message: impl Into<String>) {
        self.check(name, prov, false, Some(message.into()));
    }
}

type ScenarioFn = fn(&mut Checker);

/// One registered reproduction.
pub struct Scenario {
    pub id: &'static str,
    pub anchor: &'static str,
    pub summary: &'static str,
    run: ScenarioFn,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnknownScenario(pub String);

impl fmt::Display for UnknownScenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown scenario: {}", self.0)
    }
}

impl std::error::Error for UnknownScenario {}

/// The full registry, in a stable order.
pub fn registry() -> Vec<Scenario> {
    vec![
        Scenario {
            id: "ex1_1_affine_line",
            anchor: "Example 1.1",
            summary: "affine action on the line: brackets, reciprocal pair, stable subfields",
            run: s_groups::ex1_1_affine_line,
        },
        Scenario {
            id: "ex1_2_pfaffian_fields",
            anchor: "Example 1.2",
            summary: "differential field chain for the invariant y2*y1_1",
            run: s_jets::ex1_2_pfaffian_fields,
        },
        Scenario {
            id: "ex1_3_affine_bb",
            anchor: "Example 1.3",
            summary: "affine group acting on itself; parameters as tensor constants",
            run: s_tensor::ex1_3_affine_bb,
        },
        Scenario {
            id: "ex2_1_cubic",
            anchor: "Example 2.1",
            summary: "general cubic: discriminant, splitting, cyclic rational action",
            run: s_classical::ex2_1_cubic,
        },
        Scenario {
            id: "ex2_11_quartic",
            anchor: "Example 2.11",
            summary: "quartic actions of order 4 and their generating invariants",
            run: s_classical::ex2_11_quartic,
        },
        Scenario {
            id: "ex2_18_crt",
            anchor: "Example 2.18",
            summary: "residue decomposition of y^3 - 1 and the Bezout identity",
            run: s_classical::ex2_18_crt,
        },
        Scenario {
            id: "ex2_21_cuberoot2",
            anchor: "Example 2.21",
            summary: "cube root of two: splitting field and linear disjointness",
            run: s_classical::ex2_21_cuberoot2,
        },
        Scenario {
            id: "ex2_25_cyclotomic",
            anchor: "Example 2.25",
            summary: "eighth roots: cyclotomic components and a failed disjointness",
            run: s_classical::ex2_25_cyclotomic,
        },
        Scenario {
            id: "ex2_32_normality",
            anchor: "Example 2.32",
            summary: "normal and non-normal intermediate fields of the cube-root tower",
            run: s_classical::ex2_32_normality,
        },
        Scenario {
            id: "ex3_2_gl2_constants",
            anchor: "Example 3.2",
            summary: "GL(2) action: a group parameter killed by the extended reciprocal field",
            run: s_tensor::ex3_2_gl2_constants,
        },
        Scenario {
            id: "ex4_9_flat_formula",
            anchor: "Example 4.9",
            summary: "flat of a second-order section and the Spencer image",
            run: s_jets::ex4_9_flat_formula,
        },
        Scenario {
            id: "ex4_13_algebroid_bracket",
            anchor: "Example 4.13",
            summary: "prolongation-projection and the algebroid bracket staying in R_1",
            run: s_jets::ex4_13_algebroid_bracket,
        },
        Scenario {
            id: "ex4_17_fundamental_sets",
            anchor: "Example 4.17",
            summary: "fundamental sets need one extra invariant at the next order",
            run: s_jets::ex4_17_fundamental_sets,
        },
        Scenario {
            id: "ex4_20_pfaffian",
            anchor: "Example 4.20",
            summary: "volume-preserving Pfaffian action: both boxed distributions and stability",
            run: s_groups::ex4_20_pfaffian,
        },
        Scenario {
            id: "ex4_26_wronskian",
            anchor: "Example 4.26",
            summary: "GL(2) prolonged action: Wronskian freeness certificate",
            run: s_groups::ex4_26_wronskian,
        },
        Scenario {
            id: "ex5_1_tensor_constants",
            anchor: "Example 5.1",
            summary: "groupoid jet entries as constants of the doubled universe",
            run: s_tensor::ex5_1_tensor_constants,
        },
        Scenario {
            id: "ex5_2_order3",
            anchor: "Example 5.2",
            summary: "order-three sharp and flat tables, verbatim",
            run: s_jets::ex5_2_order3,
        },
        Scenario {
            id: "ex5_6_multiplicative",
            anchor: "Example 5.6",
            summary: "multiplicative group chain: invariants and the exact commutant",
            run: s_groups::ex5_6_multiplicative,
        },
        Scenario {
            id: "ex5_7_wronskian_emerges",
            anchor: "Example 5.7",
            summary: "the Wronskian emerging from the extended reciprocal fields",
            run: s_tensor::ex5_7_wronskian_emerges,
        },
        Scenario {
            id: "ex5_8_isometries",
            anchor: "Example 5.8",
            summary: "plane isometries: invariants, symbol probes, and the split of the jacobian",
            run: s_groups::ex5_8_isometries,
        },
    ]
}

/// The registry as (id, anchor, summary) rows.
pub fn list_scenarios() -> Vec<(&'static str, &'static str, &'static str)> {
    registry()
        .iter()
        .map(|s| (s.id, s.anchor, s.summary))
        .collect()
}

/// Runs one scenario by id.
pub fn run_scenario(id: &str) -> Result<Report, UnknownScenario> {
    let reg = registry();
    let scenario = reg
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| UnknownScenario(id.to_string()))?;
    let mut checker = Checker::new();
    (scenario.run)(&mut checker);
    Ok(Report {
        scenario: scenario.id.to_string(),
        anchor: scenario.anchor.to_string(),
        assertions: checker.assertions,
        notes: checker.notes,
    })
}

/// Runs every scenario in registry order.
pub fn run_all() -> Vec<Report> {
    registry()
        .iter()
        .map(|s| run_scenario(s.id).expect("registered"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_complete_and_unique() {
        let list = list_scenarios();
        assert!(list.len() >= 15);
        let mut ids: Vec<&str> = list.iter().map(|(id, _, _)| *id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), list.len());
        assert!(ids.contains(&"ex2_1_cubic"));
        assert!(ids.contains(&"ex4_20_pfaffian"));
    }

    #[test]
    fn unknown_scenario_is_an_error() {
        assert!(run_scenario("nope").is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_scenario("ex2_18_crt").unwrap().to_json();
        let b = run_scenario("ex2_18_crt").unwrap().to_json();
        assert_eq!(a, b);
    }
}
