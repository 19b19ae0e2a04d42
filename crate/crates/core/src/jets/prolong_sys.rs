//! One prolongation-projection step for linear systems in the jet components
//! of a section.

use crate::mpoly::Var;
use crate::ratfunc::RatFunc;

use super::{total_derivative, JetContext, JetError, JetVar};

/// Result of one prolongation-projection step.
#[derive(Clone, Debug)]
pub struct ProlongResult {
    /// The original equations plus every `d_i` of them (one order higher).
    pub prolonged: Vec<RatFunc>,
    /// Induced equations of the original order that are not consequences of
    /// the input system, leading coefficient one.
    pub new_equations: Vec<RatFunc>,
}

fn jet_unknowns(eqs: &[RatFunc]) -> Result<Vec<Var>, JetError> {
    let mut unknowns: Vec<(u32, Var)> = Vec::new();
    for eq in eqs {
        for v in eq.vars() {
            let jv = JetVar::from_var(&v)
                .ok_or_else(|| JetError::BadVariable(v.name().to_string()))?;
            match jv {
                JetVar::Source { .. } => {}
                JetVar::SourceJet { bars: 0, .. } => {
                    if !unknowns.iter().any(|(_, w)| *w == v) {
                        unknowns.push((jv.order(), v));
                    }
                }
                _ => {
                    return Err(JetError::BadInput(format!(
                        "unexpected variable {} in linear system",
                        v.name()
                    )))
                }
            }
        }
    }
    // highest order first so elimination pivots on top-order unknowns
    unknowns.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    Ok(unknowns.into_iter().map(|(_, v)| v).collect())
}

/// Coefficient row of a linear homogeneous equation w.r.t. `unknowns`.
/// Errors unless the equation is exactly linear homogeneous with
/// coefficients free of the jet variables.
fn coefficient_row(eq: &RatFunc, unknowns: &[Var]) -> Result<Vec<RatFunc>, JetError> {
    let mut row = Vec::with_capacity(unknowns.len());
    let mut rebuilt = RatFunc::zero();
    for u in unknowns {
        let c = eq.partial_derivative(u);
        for v in c.vars() {
            if unknowns.contains(&v) {
                return Err(JetError::BadInput(
                    "equation is not linear in the jet components".into(),
                ));
            }
        }
        rebuilt = &rebuilt + &(&c * &RatFunc::var(u.clone()));
        row.push(c);
    }
    if &rebuilt - eq != RatFunc::zero() {
        return Err(JetError::BadInput(
            "equation is not linear homogeneous in the jet components".into(),
        ));
    }
    Ok(row)
}

/// Gauss-Jordan restricted to the first `limit` columns (all columns when
/// `limit` equals the width). Returns the pivot columns.
fn echelon(rows: &mut Vec<Vec<RatFunc>>, limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut k = 0;
    for c in 0..limit.min(cols) {
        if k >= rows.len() {
            break;
        }
        let Some(r) = (k..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(k, r);
        let inv = rows[k][c].inv().expect("pivot nonzero");
        for j in 0..cols {
            rows[k][j] = &rows[k][j] * &inv;
        }
        for i in 0..rows.len() {
            if i == k || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in 0..cols {
                let t = &rows[k][j] * &f;
                rows[i][j] = &rows[i][j] - &t;
            }
        }
        pivots.push(c);
        k += 1;
    }
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    pivots
}

fn row_to_equation(row: &[RatFunc], unknowns: &[Var]) -> RatFunc {
    let mut eq = RatFunc::zero();
    for (c, u) in row.iter().zip(unknowns) {
        eq = &eq + &(c * &RatFunc::var(u.clone()));
    }
    eq
}

/// Appends `d_i` of every equation, then eliminates the top-order unknowns
/// to report induced equations of the original order. Exactly one step.
pub fn prolong_linear_system(
    system: &[RatFunc],
    ctx: &JetContext,
) -> Result<ProlongResult, JetError> {
    if system.is_empty() {
        return Ok(ProlongResult {
            prolonged: Vec::new(),
            new_equations: Vec::new(),
        });
    }
    let mut prolonged: Vec<RatFunc> = system.to_vec();
    for eq in system {
        for dir in 1..=ctx.n {
            prolonged.push(total_derivative(eq, dir, ctx)?);
        }
    }

    let unknowns = jet_unknowns(&prolonged)?;
    let top_order = unknowns
        .iter()
        .map(|v| JetVar::from_var(v).expect("validated").order())
        .max()
        .unwrap_or(0);
    let top_count = unknowns
        .iter()
        .filter(|v| JetVar::from_var(v).expect("validated").order() == top_order)
        .count();
    let mut rows: Vec<Vec<RatFunc>> = prolonged
        .iter()
        .map(|eq| coefficient_row(eq, &unknowns))
        .collect::<Result<_, _>>()?;
    // eliminate only the top-order unknowns (they occupy the leading columns)
    let _ = echelon(&mut rows, top_count);

    // rows free of every top-order unknown are projected equations
    let mut candidates: Vec<RatFunc> = Vec::new();
    for row in &rows {
        if row[..top_count].iter().all(|c| c.is_zero()) {
            let lead = row
                .iter()
                .find(|c| !c.is_zero())
                .expect("zero rows dropped")
                .clone();
            let inv = lead.inv().expect("nonzero");
            let scaled: Vec<RatFunc> = row.iter().map(|c| c * &inv).collect();
            candidates.push(row_to_equation(&scaled, &unknowns));
        }
    }

    // drop candidates already implied by the original system
    let width = unknowns.len();
    let mut original_rows: Vec<Vec<RatFunc>> = system
        .iter()
        .map(|eq| coefficient_row(eq, &unknowns))
        .collect::<Result<_, _>>()?;
    let _ = echelon(&mut original_rows, width);
    let mut new_equations: Vec<RatFunc> = Vec::new();
    for cand in candidates {
        let mut test = original_rows.clone();
        for done in &new_equations {
            test.push(coefficient_row(done, &unknowns)?);
        }
        test.push(coefficient_row(&cand, &unknowns)?);
        let before = test.len() - 1;
        let _ = echelon(&mut test, width);
        if test.len() > before {
            new_equations.push(cand);
        }
    }
    Ok(ProlongResult {
        prolonged,
        new_equations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::parse_jet_expr;

    fn e(s: &str) -> RatFunc {
        parse_jet_expr(s).unwrap()
    }

    #[test]
    fn crossed_derivatives_induce_trace_equation() {
        // { x2*xi^1_1 + xi^2 = 0, xi^1_2 = 0 } projects to xi^1_1 + xi^2_2 = 0
        let ctx = JetContext::new(2, 2, 1);
        let system = vec![e("x2*y1_1 + y2"), e("y1_2")];
        let result = prolong_linear_system(&system, &ctx).unwrap();
        assert_eq!(result.prolonged.len(), 6);
        assert_eq!(result.new_equations.len(), 1);
        assert_eq!(result.new_equations[0], e("y1_1 + y2_2"));
    }

    #[test]
    fn closed_system_yields_nothing() {
        let ctx = JetContext::new(1, 1, 1);
        let system = vec![e("y1_1")];
        let result = prolong_linear_system(&system, &ctx).unwrap();
        assert!(result.new_equations.is_empty());
    }

    #[test]
    fn empty_system() {
        let ctx = JetContext::new(2, 2, 1);
        let result = prolong_linear_system(&[], &ctx).unwrap();
        assert!(result.prolonged.is_empty());
        assert!(result.new_equations.is_empty());
    }

    #[test]
    fn nonlinear_rejected() {
        let ctx = JetContext::new(1, 1, 1);
        assert!(prolong_linear_system(&[e("y1_1^2")], &ctx).is_err());
        assert!(prolong_linear_system(&[e("y1_1 + 1")], &ctx).is_err());
    }
}
