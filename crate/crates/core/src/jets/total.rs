//! Formal (total) derivatives `d_i = partial_i + y^k_{mu+1_i} d/dy^k_mu` on
//! functions of jet coordinates.

use crate::mpoly::Var;
use crate::ratfunc::RatFunc;

use super::{JetContext, JetError, JetVar, MultiIndex};

/// How `d_i` moves a single coordinate.
fn derivative_of_var(v: &JetVar, dir: usize, ctx: &JetContext, chain: bool) -> RatFunc {
    match v {
        JetVar::Source { comp } => {
            if *comp == dir {
                RatFunc::one()
            } else {
                RatFunc::zero()
            }
        }
        // bar jets follow the same rule as plain jets
        JetVar::SourceJet { comp, mu, bars } => RatFunc::var(
            JetVar::SourceJet {
                comp: *comp,
                mu: mu.succ(dir),
                bars: *bars,
            }
            .to_var(),
        ),
        JetVar::Unknown { fam, comp, mu } => RatFunc::var(
            JetVar::Unknown {
                fam: *fam,
                comp: *comp,
                mu: mu.succ(dir),
            }
            .to_var(),
        ),
        JetVar::GroupoidJet { comp, lam, bars } => {
            if !chain || *bars > 0 {
                return RatFunc::zero();
            }
            // chain rule: d_i g^u_lam = sum_k g^u_{lam+1_k} y^k_{1_i}
            let mut out = RatFunc::zero();
            for k in 1..=ctx.m {
                let g = RatFunc::var(
                    JetVar::GroupoidJet {
                        comp: *comp,
                        lam: lam.succ(k),
                        bars: 0,
                    }
                    .to_var(),
                );
                let yk = RatFunc::var(
                    JetVar::jet(k, MultiIndex::zero().succ(dir)).to_var(),
                );
                out = &out + &(&g * &yk);
            }
            out
        }
        JetVar::Param { .. } => RatFunc::zero(),
    }
}

fn total_derivative_impl(
    f: &RatFunc,
    dir: usize,
    ctx: &JetContext,
    chain: bool,
) -> Result<RatFunc, JetError> {
    if dir == 0 || dir > ctx.n {
        return Err(JetError::BadInput(format!(
            "direction {dir} out of range 1..={}",
            ctx.n
        )));
    }
    let mut out = RatFunc::zero();
    for var in f.vars() {
        let jv = JetVar::from_var(&var)
            .ok_or_else(|| JetError::BadVariable(var.name().to_string()))?;
        let dv = derivative_of_var(&jv, dir, ctx, chain);
        if dv.is_zero() {
            continue;
        }
        let df = f.partial_derivative(&var);
        if df.is_zero() {
            continue;
        }
        out = &out + &(&dv * &df);
    }
    Ok(out)
}

/// The formal derivative `d_i f`. Groupoid jets and parameters are
/// `d_i`-constants; bar jets advance exactly like plain jets.
pub fn total_derivative(f: &RatFunc, dir: usize, ctx: &JetContext) -> Result<RatFunc, JetError> {
    total_derivative_impl(f, dir, ctx, false)
}

/// `d_i f` with a hard cap on the resulting jet order.
pub fn total_derivative_capped(
    f: &RatFunc,
    dir: usize,
    ctx: &JetContext,
    cap: u32,
) -> Result<RatFunc, JetError> {
    let needed = max_order(f) + 1;
    if needed > cap {
        return Err(JetError::OrderOverflow { cap, needed });
    }
    total_derivative_impl(f, dir, ctx, false)
}

/// `d_i f` in groupoid chain-rule mode: unbarred groupoid jets are treated as
/// unknown functions of the order-zero target variables, so
/// `d_i g^u_lam = g^u_{lam+1_k} y^k_i`.
pub fn chain_total_derivative(
    f: &RatFunc,
    dir: usize,
    ctx: &JetContext,
) -> Result<RatFunc, JetError> {
    total_derivative_impl(f, dir, ctx, true)
}

/// Highest jet order among the variables of `f`.
pub fn max_order(f: &RatFunc) -> u32 {
    f.vars()
        .iter()
        .filter_map(|v| JetVar::from_var(v))
        .map(|jv| jv.order())
        .max()
        .unwrap_or(0)
}

/// Repeated total derivative `d_mu`.
pub fn total_derivative_multi(
    f: &RatFunc,
    mu: &MultiIndex,
    ctx: &JetContext,
) -> Result<RatFunc, JetError> {
    let mut out = f.clone();
    for dir in 1..=ctx.n {
        for _ in 0..mu.count(dir) {
            out = total_derivative(&out, dir, ctx)?;
        }
    }
    Ok(out)
}

#[allow(dead_code)]
fn var(name: &str) -> Var {
    Var::new(name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::parse_jet_expr;

    fn e(s: &str) -> RatFunc {
        parse_jet_expr(s).unwrap()
    }

    fn ctx11() -> JetContext {
        JetContext::new(1, 1, 3)
    }

    #[test]
    fn dx_of_logarithmic_derivative() {
        // d_x(y_x/y) = y_xx/y - (y_x/y)^2
        let f = e("y1_1/y1");
        let d = total_derivative(&f, 1, &ctx11()).unwrap();
        assert_eq!(d, e("y1_11/y1 - (y1_1/y1)^2"));
    }

    #[test]
    fn dx_of_invariant() {
        // d_x(y2*y1_x) = y2*y1_xx + y1_x*y2_x
        let ctx = JetContext::new(1, 2, 2);
        let f = e("y2*y1_1");
        let d = total_derivative(&f, 1, &ctx).unwrap();
        assert_eq!(d, e("y2*y1_11 + y1_1*y2_1"));
    }

    #[test]
    fn constants_vanish() {
        let d = total_derivative(&e("7"), 1, &ctx11()).unwrap();
        assert!(d.is_zero());
        // parameters and groupoid jets are d_i-constants
        let d2 = total_derivative(&e("a1*g1_1"), 1, &ctx11()).unwrap();
        assert!(d2.is_zero());
    }

    #[test]
    fn bar_jets_advance() {
        let d = total_derivative(&e("by1"), 1, &ctx11()).unwrap();
        assert_eq!(d, e("by1_1"));
    }

    #[test]
    fn mixed_partials_commute() {
        let ctx = JetContext::new(2, 2, 3);
        let f = e("x2*y1_1*y2 + y2_12^2");
        let d12 = total_derivative(&total_derivative(&f, 1, &ctx).unwrap(), 2, &ctx).unwrap();
        let d21 = total_derivative(&total_derivative(&f, 2, &ctx).unwrap(), 1, &ctx).unwrap();
        assert_eq!(d12, d21);
    }

    #[test]
    fn cap_overflow() {
        let f = e("y1_11");
        let err = total_derivative_capped(&f, 1, &ctx11(), 2).unwrap_err();
        assert_eq!(err, JetError::OrderOverflow { cap: 2, needed: 3 });
        assert!(total_derivative_capped(&f, 1, &ctx11(), 3).is_ok());
    }

    #[test]
    fn chain_rule_on_groupoid_jets() {
        // d_x g1 = g1_1 * y1_1 for m = 1
        let d = chain_total_derivative(&e("g1"), 1, &ctx11()).unwrap();
        assert_eq!(d, e("g1_1*y1_1"));
        // second derivative: g1_1*y1_11 + g1_11*y1_1^2
        let d2 = chain_total_derivative(&d, 1, &ctx11()).unwrap();
        assert_eq!(d2, e("g1_1*y1_11 + g1_11*y1_1^2"));
    }
}
