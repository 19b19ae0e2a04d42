//! Groupoid jet composition by the chain rule and jet inversion.

use std::collections::BTreeMap;

use crate::linalg::{determinant, solve_linear, LinearOutcome, Matrix};
use crate::mpoly::Var;
use crate::ratfunc::RatFunc;

use super::{chain_total_derivative, JetContext, JetError, JetVar, MultiIndex};

/// Finite jet data: component and multi-index to value.
pub type JetMap = BTreeMap<(usize, MultiIndex), RatFunc>;

fn get<'a>(map: &'a JetMap, k: usize, mu: &MultiIndex) -> Option<&'a RatFunc> {
    map.get(&(k, mu.clone()))
}

/// Composes a source jet (components `y^u_nu` of a point of `J_q(X x Y)`)
/// with a groupoid jet (components `g^u_lam` of a target transformation).
/// The order-`r` output component is `d_x^nu` of the order-0 groupoid
/// coordinate expanded by the chain rule, with all formal jets then replaced
/// by the given data — the Faa di Bruno coefficients are never hand-coded.
pub fn jet_compose(
    source_jet: &JetMap,
    groupoid_jet: &JetMap,
    q: u32,
    ctx: &JetContext,
) -> Result<JetMap, JetError> {
    // groupoid entries are functions of the order-0 target variables; evaluate
    // them at the base point of the source jet first
    let mut base_point: BTreeMap<Var, RatFunc> = BTreeMap::new();
    for k in 1..=ctx.m {
        let v = get(source_jet, k, &MultiIndex::zero()).ok_or_else(|| {
            JetError::BadInput(format!("source jet missing order-0 component {k}"))
        })?;
        base_point.insert(JetVar::jet(k, MultiIndex::zero()).to_var(), v.clone());
    }
    let mut bindings: BTreeMap<Var, RatFunc> = BTreeMap::new();
    for ((u, lam), value) in groupoid_jet {
        let evaluated = value
            .substitute(&base_point)
            .map_err(|_| JetError::BadInput("groupoid jet has a pole at the base point".into()))?;
        bindings.insert(JetVar::groupoid(*u, lam.clone()).to_var(), evaluated);
    }
    for ((k, mu), value) in source_jet {
        if mu.order() > 0 {
            bindings.insert(JetVar::jet(*k, mu.clone()).to_var(), value.clone());
        }
    }

    let mut out = JetMap::new();
    for u in 1..=ctx.m {
        // formal expansion per multi-index, reusing lower-order expansions
        let mut formal: BTreeMap<MultiIndex, RatFunc> = BTreeMap::new();
        formal.insert(
            MultiIndex::zero(),
            RatFunc::var(JetVar::groupoid(u, MultiIndex::zero()).to_var()),
        );
        for nu in MultiIndex::all_up_to(ctx.n, q) {
            if nu.order() > 0 {
                let d = nu.max_dir().expect("nonzero order");
                let prev = formal
                    .get(&nu.pred(d).expect("positive count"))
                    .expect("expansion built level by level")
                    .clone();
                formal.insert(nu.clone(), chain_total_derivative(&prev, d, ctx)?);
            }
            let expanded = formal.get(&nu).unwrap();
            let value = expanded.substitute(&bindings).map_err(|_| {
                JetError::BadInput("composition hit a vanishing denominator".into())
            })?;
            out.insert((u, nu), value);
        }
    }
    Ok(out)
}

/// The identity groupoid jet up to order `q`: order 0 maps to the target
/// coordinate itself, the first-order block is the identity matrix, and all
/// higher jets vanish.
pub fn identity_groupoid_jet(q: u32, ctx: &JetContext) -> JetMap {
    let mut out = JetMap::new();
    for u in 1..=ctx.m {
        for lam in MultiIndex::all_up_to(ctx.m, q) {
            let value = match lam.order() {
                0 => RatFunc::var(JetVar::jet(u, MultiIndex::zero()).to_var()),
                1 => {
                    if lam.count(u) == 1 {
                        RatFunc::one()
                    } else {
                        RatFunc::zero()
                    }
                }
                _ => RatFunc::zero(),
            };
            out.insert((u, lam), value);
        }
    }
    out
}

fn first_order_block(g: &JetMap, ctx: &JetContext) -> Result<Matrix, JetError> {
    let mut rows = Vec::with_capacity(ctx.m);
    for u in 1..=ctx.m {
        let mut row = Vec::with_capacity(ctx.m);
        for k in 1..=ctx.m {
            let lam = MultiIndex::zero().succ(k);
            row.push(
                get(g, u, &lam)
                    .cloned()
                    .ok_or_else(|| {
                        JetError::BadInput(format!("groupoid jet missing g{u}_{k}"))
                    })?,
            );
        }
        rows.push(row);
    }
    Ok(rows)
}

fn matrix_inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut cols: Vec<Vec<RatFunc>> = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<RatFunc> = (0..n)
            .map(|i| if i == j { RatFunc::one() } else { RatFunc::zero() })
            .collect();
        match solve_linear(m, &e) {
            LinearOutcome::Solved { particular, .. } => cols.push(particular),
            LinearOutcome::Inconsistent { .. } => return None,
        }
    }
    Some(
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
            .collect(),
    )
}

/// Jets of the inverse transformation, up to order `q <= 2`, determined by
/// solving `compose(inverse, jet) = identity` order by order. Only the
/// derivative components (order >= 1) are produced; the order-0 base point of
/// the inverse is positional and has no rational expression in general.
pub fn jet_invert(g: &JetMap, q: u32, ctx: &JetContext) -> Result<JetMap, JetError> {
    if q > 2 {
        return Err(JetError::BadInput(
            "jet inversion implemented up to order 2".into(),
        ));
    }
    let gmat = first_order_block(g, ctx)?;
    if determinant(&gmat).is_zero() {
        return Err(JetError::SingularJacobian);
    }
    let h = matrix_inverse(&gmat).ok_or(JetError::SingularJacobian)?;
    let mut out = JetMap::new();
    for u in 1..=ctx.m {
        for w in 1..=ctx.m {
            out.insert((u, MultiIndex::zero().succ(w)), h[u - 1][w - 1].clone());
        }
    }
    if q == 2 {
        // second order: with A^u_{kl} = -sum_w h^u_w g^w_{kl}, the unknown
        // symmetric block is H^T A^u H
        for u in 1..=ctx.m {
            let mut a: Matrix = vec![vec![RatFunc::zero(); ctx.m]; ctx.m];
            for k in 1..=ctx.m {
                for l in k..=ctx.m {
                    let lam = MultiIndex::zero().succ(k).succ(l);
                    let mut s = RatFunc::zero();
                    for w in 1..=ctx.m {
                        let gw = get(g, w, &lam).cloned().ok_or_else(|| {
                            JetError::BadInput(format!(
                                "groupoid jet missing second-order component g{w}_{}",
                                lam.dirs()
                            ))
                        })?;
                        let t = &h[u - 1][w - 1] * &gw;
                        s = &s + &t;
                    }
                    let v = -&s;
                    a[k - 1][l - 1] = v.clone();
                    a[l - 1][k - 1] = v;
                }
            }
            // m = h^T a h
            for w in 1..=ctx.m {
                for v in w..=ctx.m {
                    let mut s = RatFunc::zero();
                    for k in 1..=ctx.m {
                        for l in 1..=ctx.m {
                            let t = &(&h[k - 1][w - 1] * &a[k - 1][l - 1]) * &h[l - 1][v - 1];
                            s = &s + &t;
                        }
                    }
                    out.insert((u, MultiIndex::zero().succ(w).succ(v)), s);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::parse_jet_expr;

    fn e(s: &str) -> RatFunc {
        parse_jet_expr(s).unwrap()
    }

    fn jm(entries: &[(usize, &str, &str)]) -> JetMap {
        entries
            .iter()
            .map(|(k, dirs, v)| {
                (
                    (*k, MultiIndex::from_dirs(dirs).unwrap()),
                    e(v),
                )
            })
            .collect()
    }

    fn holonomic_source_11(q: u32) -> JetMap {
        // jets of a generic point of J_q for n = m = 1: plain jet variables
        let ctx = JetContext::new(1, 1, q);
        let mut out = JetMap::new();
        for mu in MultiIndex::all_up_to(ctx.n, q) {
            out.insert((1, mu.clone()), RatFunc::var(JetVar::jet(1, mu).to_var()));
        }
        out
    }

    #[test]
    fn chain_rule_second_order() {
        // ybar_xx = g1_1*y_xx + g1_11*y_x^2
        let ctx = JetContext::new(1, 1, 2);
        let src = holonomic_source_11(2);
        let g = jm(&[(1, "", "g1"), (1, "1", "g1_1"), (1, "11", "g1_11")]);
        // keep groupoid entries symbolic: use fresh names through identity values
        let composed = jet_compose(&src, &g, 2, &ctx).unwrap();
        assert_eq!(
            composed[&(1, MultiIndex::from_dirs("11").unwrap())],
            e("g1_1*y1_11 + g1_11*y1_1^2")
        );
    }

    #[test]
    fn chain_rule_third_order() {
        // ybar_xxx = g1_1*y_xxx + 3*g1_11*y_x*y_xx + g1_111*y_x^3
        let ctx = JetContext::new(1, 1, 3);
        let src = holonomic_source_11(3);
        let g = jm(&[
            (1, "", "g1"),
            (1, "1", "g1_1"),
            (1, "11", "g1_11"),
            (1, "111", "g1_111"),
        ]);
        let composed = jet_compose(&src, &g, 3, &ctx).unwrap();
        assert_eq!(
            composed[&(1, MultiIndex::from_dirs("111").unwrap())],
            e("g1_1*y1_111 + 3*g1_11*y1_1*y1_11 + g1_111*y1_1^3")
        );
    }

    #[test]
    fn identity_composition() {
        let ctx = JetContext::new(1, 1, 2);
        let src = jm(&[(1, "", "y1"), (1, "1", "x1^2"), (1, "11", "x1 + 1")]);
        let id = identity_groupoid_jet(2, &ctx);
        let composed = jet_compose(&src, &id, 2, &ctx).unwrap();
        assert_eq!(composed, src);
    }

    #[test]
    fn inverse_order_two_m1() {
        let ctx = JetContext::new(1, 1, 2);
        let g = jm(&[(1, "1", "g1_1"), (1, "11", "g1_11")]);
        let inv = jet_invert(&g, 2, &ctx).unwrap();
        assert_eq!(inv[&(1, MultiIndex::from_dirs("1").unwrap())], e("1/g1_1"));
        assert_eq!(
            inv[&(1, MultiIndex::from_dirs("11").unwrap())],
            e("-g1_11/g1_1^3")
        );
    }

    #[test]
    fn inverse_of_identity() {
        let ctx = JetContext::new(2, 2, 2);
        let id = identity_groupoid_jet(2, &ctx);
        let inv = jet_invert(&id, 2, &ctx).unwrap();
        for ((u, lam), v) in &inv {
            match lam.order() {
                1 => {
                    if lam.count(*u) == 1 {
                        assert!(v.is_one());
                    } else {
                        assert!(v.is_zero());
                    }
                }
                _ => assert!(v.is_zero()),
            }
        }
    }

    #[test]
    fn singular_jacobian_rejected() {
        let ctx = JetContext::new(1, 1, 1);
        let g = jm(&[(1, "1", "0")]);
        assert_eq!(jet_invert(&g, 1, &ctx), Err(JetError::SingularJacobian));
    }
}
