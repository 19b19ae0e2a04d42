//! Prolongations of vector fields to jet space: `rho_q` for vertical fields,
//! sharp for sections over the target, flat for sections over the source.

use std::collections::BTreeMap;

use crate::jets::{chain_total_derivative, JetContext, JetError, JetVar, MultiIndex};
use crate::mpoly::Var;
use crate::ratfunc::RatFunc;

use super::{Base, JetSection, VectorField};

/// Prolongs a vertical field `eta = eta^k(y) d/dy^k` to order `q`:
/// `rho_q(eta) = d_mu eta^k d/dy^k_mu`, the chain rule expanding through the
/// formal derivatives.
pub fn prolong_vertical(
    eta: &VectorField,
    q: u32,
    ctx: &JetContext,
) -> Result<VectorField, JetError> {
    // validate: coefficients on order-0 target variables only
    let mut order0: BTreeMap<usize, RatFunc> = BTreeMap::new();
    for (v, c) in eta.coeffs() {
        let jv = JetVar::from_var(v)
            .ok_or_else(|| JetError::BadVariable(v.name().to_string()))?;
        match jv {
            JetVar::SourceJet { comp, mu, bars: 0 } if mu.order() == 0 => {
                order0.insert(comp, c.clone());
            }
            _ => {
                return Err(JetError::BadInput(format!(
                    "not a vertical field: coefficient on {}",
                    v.name()
                )))
            }
        }
        for w in c.vars() {
            match JetVar::from_var(&w) {
                Some(JetVar::SourceJet { mu, bars: 0, .. }) if mu.order() == 0 => {}
                _ => {
                    return Err(JetError::BadInput(format!(
                        "vertical field coefficient depends on {}",
                        w.name()
                    )))
                }
            }
        }
    }
    let mut entries: Vec<(Var, RatFunc)> = Vec::new();
    for (k, f) in &order0 {
        let mut layer: BTreeMap<MultiIndex, RatFunc> = BTreeMap::new();
        layer.insert(MultiIndex::zero(), f.clone());
        for mu in MultiIndex::all_up_to(ctx.n, q) {
            if mu.order() > 0 {
                let d = mu.max_dir().expect("nonzero order");
                let prev = layer
                    .get(&mu.pred(d).expect("positive count"))
                    .expect("built level by level")
                    .clone();
                layer.insert(mu.clone(), crate::jets::total_derivative(&prev, d, ctx)?);
            }
            entries.push((JetVar::jet(*k, mu.clone()).to_var(), layer[&mu].clone()));
        }
    }
    Ok(VectorField::new(*ctx, entries))
}

/// Sharp: the vertical field on `J_q(X x Y)` obtained by expanding
/// `rho_q` with the derivatives of the unknown target field replaced by the
/// section components. For a holonomic section this is `prolong_vertical` of
/// its order-0 part.
pub fn sharp(eta: &JetSection, q: u32) -> Result<VectorField, JetError> {
    if eta.over != Base::Target {
        return Err(JetError::BadInput("sharp expects a section over the target".into()));
    }
    let ctx = eta.ctx;
    // formal jets of the unknown field are groupoid-jet variables over the
    // target directions; substitute the section components at the end
    let mut bindings: BTreeMap<Var, RatFunc> = BTreeMap::new();
    for k in 1..=ctx.m {
        for lam in MultiIndex::all_up_to(ctx.m, eta.q) {
            bindings.insert(
                JetVar::groupoid(k, lam.clone()).to_var(),
                eta.get(k, &lam),
            );
        }
    }
    let mut entries: Vec<(Var, RatFunc)> = Vec::new();
    for k in 1..=ctx.m {
        let mut layer: BTreeMap<MultiIndex, RatFunc> = BTreeMap::new();
        layer.insert(
            MultiIndex::zero(),
            RatFunc::var(JetVar::groupoid(k, MultiIndex::zero()).to_var()),
        );
        for mu in MultiIndex::all_up_to(ctx.n, q) {
            if mu.order() > 0 {
                let d = mu.max_dir().expect("nonzero order");
                let prev = layer
                    .get(&mu.pred(d).expect("positive count"))
                    .expect("built level by level")
                    .clone();
                layer.insert(mu.clone(), chain_total_derivative(&prev, d, &ctx)?);
            }
            let value = layer[&mu]
                .substitute(&bindings)
                .map_err(|_| JetError::BadInput("section has a pole".into()))?;
            entries.push((JetVar::jet(k, mu.clone()).to_var(), value));
        }
    }
    Ok(VectorField::new(ctx, entries))
}

/// Flat: the field on `J_q(X x Y)` prolonging a section over the source,
/// `flat(xi_q) = xi^i(x) d_i - y^k_r xi^r_i d/dy^k_i - ...`, computed from the
/// recursion `zeta^k_{mu+1_i} = d_i zeta^k_mu - y^k_{mu+1_r} (d_i xi^r)` with
/// the formal derivatives of the unknown source field substituted at the end.
pub fn flat(xi: &JetSection, q: u32) -> Result<VectorField, JetError> {
    if xi.over != Base::Source {
        return Err(JetError::BadInput("flat expects a section over the source".into()));
    }
    let ctx = xi.ctx;
    let fam = 0u8;
    let mut bindings: BTreeMap<Var, RatFunc> = BTreeMap::new();
    for r in 1..=ctx.n {
        for nu in MultiIndex::all_up_to(ctx.n, xi.q) {
            bindings.insert(
                JetVar::unknown(fam, r, nu.clone()).to_var(),
                xi.get(r, &nu),
            );
        }
    }
    let mut entries: Vec<(Var, RatFunc)> = Vec::new();
    for i in 1..=ctx.n {
        entries.push((
            JetVar::source(i).to_var(),
            xi.get(i, &MultiIndex::zero()),
        ));
    }
    for k in 1..=ctx.m {
        let mut layer: BTreeMap<MultiIndex, RatFunc> = BTreeMap::new();
        layer.insert(MultiIndex::zero(), RatFunc::zero());
        for mu in MultiIndex::all_up_to(ctx.n, q) {
            if mu.order() > 0 {
                let i = mu.max_dir().expect("nonzero order");
                let lower = mu.pred(i).expect("positive count");
                let prev = layer.get(&lower).expect("built level by level").clone();
                let mut value = crate::jets::total_derivative(&prev, i, &ctx)?;
                for r in 1..=ctx.n {
                    let yk = RatFunc::var(JetVar::jet(k, lower.succ(r)).to_var());
                    let dxi = RatFunc::var(
                        JetVar::unknown(fam, r, MultiIndex::zero().succ(i)).to_var(),
                    );
                    value = &value - &(&yk * &dxi);
                }
                layer.insert(mu.clone(), value);
            }
            if mu.order() > 0 {
                let value = layer[&mu]
                    .substitute(&bindings)
                    .map_err(|_| JetError::BadInput("section has a pole".into()))?;
                entries.push((JetVar::jet(k, mu.clone()).to_var(), value));
            }
        }
    }
    Ok(VectorField::new(ctx, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::parse_jet_expr;

    fn e(s: &str) -> RatFunc {
        parse_jet_expr(s).unwrap()
    }

    fn coeff(f: &VectorField, v: &str) -> RatFunc {
        f.coeff(&Var::new(&crate::jets::normalize_name(v).unwrap()))
    }

    #[test]
    fn vertical_prolongation_scaling_field() {
        // rho_2(y d/dy) = y d/dy + y_x d/dy_x + y_xx d/dy_xx
        let ctx = JetContext::new(1, 1, 2);
        let eta = VectorField::new(ctx, vec![(Var::new("y1"), e("y1"))]);
        let p = prolong_vertical(&eta, 2, &ctx).unwrap();
        assert_eq!(coeff(&p, "y1"), e("y1"));
        assert_eq!(coeff(&p, "y1_1"), e("y1_1"));
        assert_eq!(coeff(&p, "y1_11"), e("y1_11"));
    }

    #[test]
    fn vertical_prolongation_translation() {
        // d/dy1 has no higher terms at any order
        let ctx = JetContext::new(1, 2, 2);
        let eta = VectorField::new(ctx, vec![(Var::new("y1"), e("1"))]);
        let p = prolong_vertical(&eta, 2, &ctx).unwrap();
        assert_eq!(p, eta);
    }

    #[test]
    fn sharp_of_second_order_unit_section() {
        // m = n = 1, q = 3, only eta_yy = 1:
        // (y_x)^2 d/dy_xx + 3 y_x y_xx d/dy_xxx
        let ctx = JetContext::new(1, 1, 3);
        let eta = JetSection::new(
            Base::Target,
            3,
            ctx,
            vec![((1, MultiIndex::from_dirs("11").unwrap()), e("1"))],
        )
        .unwrap();
        let f = sharp(&eta, 3).unwrap();
        assert_eq!(coeff(&f, "y1"), e("0"));
        assert_eq!(coeff(&f, "y1_1"), e("0"));
        assert_eq!(coeff(&f, "y1_11"), e("y1_1^2"));
        assert_eq!(coeff(&f, "y1_111"), e("3*y1_1*y1_11"));
    }

    #[test]
    fn sharp_of_pfaffian_generator() {
        // n=1, m=2, q=1, only eta^2_1 = 1 -> y^1_x d/dy^2_x
        let ctx = JetContext::new(1, 2, 1);
        let eta = JetSection::new(
            Base::Target,
            1,
            ctx,
            vec![((2, MultiIndex::from_dirs("1").unwrap()), e("1"))],
        )
        .unwrap();
        let f = sharp(&eta, 1).unwrap();
        assert_eq!(coeff(&f, "y2_1"), e("y1_1"));
        assert_eq!(coeff(&f, "y1_1"), e("0"));
        assert_eq!(coeff(&f, "y2"), e("0"));
    }

    #[test]
    fn sharp_holonomic_matches_vertical_prolongation() {
        let ctx = JetContext::new(1, 1, 2);
        let eta0 = vec![e("y1^2")];
        let sec = JetSection::holonomic(Base::Target, 2, ctx, &eta0).unwrap();
        let via_sharp = sharp(&sec, 2).unwrap();
        let eta = VectorField::new(ctx, vec![(Var::new("y1"), e("y1^2"))]);
        let via_rho = prolong_vertical(&eta, 2, &ctx).unwrap();
        assert_eq!(via_sharp, via_rho);
    }

    #[test]
    fn flat_second_order_formula() {
        // flat(xi_2) = xi d_x - y_x xi_x d/dy_x - (y_x xi_xx + 2 y_xx xi_x) d/dy_xx
        let ctx = JetContext::new(1, 1, 2);
        let xi = JetSection::new(
            Base::Source,
            2,
            ctx,
            vec![
                ((1, MultiIndex::zero()), e("x1^3")),
                ((1, MultiIndex::from_dirs("1").unwrap()), e("x1")),
                ((1, MultiIndex::from_dirs("11").unwrap()), e("1")),
            ],
        )
        .unwrap();
        let f = flat(&xi, 2).unwrap();
        assert_eq!(coeff(&f, "x1"), e("x1^3"));
        assert_eq!(coeff(&f, "y1"), e("0"));
        assert_eq!(coeff(&f, "y1_1"), e("-y1_1*x1"));
        assert_eq!(coeff(&f, "y1_11"), e("-(y1_1 + 2*y1_11*x1)"));
    }

    #[test]
    fn flat_unit_sections_order_three() {
        // only xi_xx = 1 at q = 3: y_x d/dy_xx + 3 y_xx d/dy_xxx (signs flipped)
        let ctx = JetContext::new(1, 1, 3);
        let xi = JetSection::new(
            Base::Source,
            3,
            ctx,
            vec![((1, MultiIndex::from_dirs("11").unwrap()), e("-1"))],
        )
        .unwrap();
        let f = flat(&xi, 3).unwrap();
        assert_eq!(coeff(&f, "y1_11"), e("y1_1"));
        assert_eq!(coeff(&f, "y1_111"), e("3*y1_11"));
        // only xi_x = 1: y_x d/dy_x + 2 y_xx d/dy_xx + 3 y_xxx d/dy_xxx
        let xi2 = JetSection::new(
            Base::Source,
            3,
            ctx,
            vec![((1, MultiIndex::from_dirs("1").unwrap()), e("-1"))],
        )
        .unwrap();
        let f2 = flat(&xi2, 3).unwrap();
        assert_eq!(coeff(&f2, "y1_1"), e("y1_1"));
        assert_eq!(coeff(&f2, "y1_11"), e("2*y1_11"));
        assert_eq!(coeff(&f2, "y1_111"), e("3*y1_111"));
    }

    #[test]
    fn flat_zero_section() {
        let ctx = JetContext::new(2, 2, 1);
        let xi = JetSection::zero(Base::Source, 1, ctx);
        assert!(flat(&xi, 1).unwrap().is_zero());
    }
}
