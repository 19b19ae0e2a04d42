//! The algebraic bracket, the algebroid bracket with its Spencer
//! corrections, and the formal Lie derivative.
//!
//! The algebraic bracket is computed by Leibniz expansion over formal
//! unknown-function jets and only then evaluated on the given sections, so no
//! multinomial coefficient is ever hand-coded.

use std::collections::BTreeMap;

use crate::jets::{JetError, JetVar, MultiIndex};
use crate::mpoly::Var;
use crate::ratfunc::RatFunc;

use super::{spencer, JetSection};
#[cfg(test)]
use super::Base;

/// Formal derivative on expressions in unknown-function jets: every
/// `Unknown` variable advances its multi-index, everything else is constant.
fn formal_derivative(f: &RatFunc, dir: usize) -> RatFunc {
    let mut out = RatFunc::zero();
    for var in f.vars() {
        if let Some(JetVar::Unknown { fam, comp, mu }) = JetVar::from_var(&var) {
            let df = f.partial_derivative(&var);
            if df.is_zero() {
                continue;
            }
            let advanced = RatFunc::var(JetVar::unknown(fam, comp, mu.succ(dir)).to_var());
            out = &out + &(&advanced * &df);
        }
    }
    out
}

fn section_bindings(fam: u8, s: &JetSection) -> BTreeMap<Var, RatFunc> {
    let dirs = s.over.dirs(&s.ctx);
    let mut bindings = BTreeMap::new();
    for r in 1..=dirs {
        for nu in MultiIndex::all_up_to(dirs, s.q) {
            bindings.insert(JetVar::unknown(fam, r, nu.clone()).to_var(), s.get(r, &nu));
        }
    }
    bindings
}

/// The algebraic bracket `{xi_{q+1}, eta_{q+1}}` with value in order `q`:
/// component `(k, mu)` is the formal `d_mu` of
/// `xi^r (d_r eta^k) - eta^r (d_r xi^k)` with the formal jets replaced by the
/// section components.
pub fn algebraic_bracket(
    xi: &JetSection,
    eta: &JetSection,
) -> Result<JetSection, JetError> {
    if xi.over != eta.over || xi.q != eta.q {
        return Err(JetError::BadInput(
            "algebraic bracket needs sections of equal order over one base".into(),
        ));
    }
    if xi.q == 0 {
        return Err(JetError::BadInput(
            "algebraic bracket consumes one order: need order >= 1".into(),
        ));
    }
    let q = xi.q - 1;
    let dirs = xi.over.dirs(&xi.ctx);
    let mut bindings = section_bindings(0, xi);
    bindings.extend(section_bindings(1, eta));

    let mut entries = Vec::new();
    for k in 1..=dirs {
        // B^k = xi^r eta^k_{+r} - eta^r xi^k_{+r} over formal jets
        let mut base = RatFunc::zero();
        for r in 1..=dirs {
            let u_r = RatFunc::var(JetVar::unknown(0, r, MultiIndex::zero()).to_var());
            let v_r = RatFunc::var(JetVar::unknown(1, r, MultiIndex::zero()).to_var());
            let v_kr = RatFunc::var(
                JetVar::unknown(1, k, MultiIndex::zero().succ(r)).to_var(),
            );
            let u_kr = RatFunc::var(
                JetVar::unknown(0, k, MultiIndex::zero().succ(r)).to_var(),
            );
            base = &base + &(&(&u_r * &v_kr) - &(&v_r * &u_kr));
        }
        let mut layer: BTreeMap<MultiIndex, RatFunc> = BTreeMap::new();
        layer.insert(MultiIndex::zero(), base);
        for mu in MultiIndex::all_up_to(dirs, q) {
            if mu.order() > 0 {
                let d = mu.max_dir().expect("nonzero order");
                let prev = layer
                    .get(&mu.pred(d).expect("positive count"))
                    .expect("built level by level")
                    .clone();
                layer.insert(mu.clone(), formal_derivative(&prev, d));
            }
            let value = layer[&mu]
                .substitute(&bindings)
                .map_err(|_| JetError::BadInput("section has a pole".into()))?;
            entries.push(((k, mu.clone()), value));
        }
    }
    JetSection::new(xi.over, q, xi.ctx, entries)
}

/// Interior product of the order-0 part of `xi` with the Spencer image of
/// `eta_{q+1}`: component `(k, mu)` is `xi^i ((d eta)_mu^k)_i`.
pub fn interior_spencer(xi: &JetSection, eta_top: &JetSection) -> Result<JetSection, JetError> {
    if xi.over != eta_top.over {
        return Err(JetError::BadInput("mismatched bases".into()));
    }
    let d = spencer(eta_top);
    let dirs = xi.over.dirs(&xi.ctx);
    let q = eta_top.q - 1;
    let mut entries = Vec::new();
    for k in 1..=dirs {
        for mu in MultiIndex::all_up_to(dirs, q) {
            let mut value = RatFunc::zero();
            for i in 1..=dirs {
                let x0 = xi.get(i, &MultiIndex::zero());
                let entry = d
                    .entries
                    .get(&(k, mu.clone(), i))
                    .cloned()
                    .unwrap_or_else(RatFunc::zero);
                value = &value + &(&x0 * &entry);
            }
            entries.push(((k, mu.clone()), value));
        }
    }
    JetSection::new(xi.over, q, xi.ctx, entries)
}

/// The algebroid bracket
/// `[xi_q, eta_q] = {xi_{q+1}, eta_{q+1}} + i(xi) d eta_{q+1} - i(eta) d xi_{q+1}`.
/// Lifts to order `q+1` may be supplied; the zero extension is used otherwise,
/// and the result does not depend on the choice.
pub fn algebroid_bracket(
    xi: &JetSection,
    eta: &JetSection,
    lifts: Option<(&JetSection, &JetSection)>,
) -> Result<JetSection, JetError> {
    if xi.over != eta.over || xi.q != eta.q {
        return Err(JetError::BadInput(
            "algebroid bracket needs sections of equal order over one base".into(),
        ));
    }
    let q = xi.q;
    let (xi_top, eta_top) = match lifts {
        Some((a, b)) => {
            if a.q != q + 1 || b.q != q + 1 {
                return Err(JetError::BadInput("lifts must have order q+1".into()));
            }
            if &a.truncate(q) != xi || &b.truncate(q) != eta {
                return Err(JetError::BadInput("lifts must restrict to the inputs".into()));
            }
            (a.clone(), b.clone())
        }
        None => (xi.zero_extend(q + 1), eta.zero_extend(q + 1)),
    };
    let alg = algebraic_bracket(&xi_top, &eta_top)?;
    let i_xi_deta = interior_spencer(xi, &eta_top)?;
    let i_eta_dxi = interior_spencer(eta, &xi_top)?;
    Ok(alg.add(&i_xi_deta).sub(&i_eta_dxi))
}

/// The formal Lie derivative
/// `L(xi_{q+1}) eta_q = {xi_{q+1}, eta_{q+1}} + i(xi) d eta_{q+1}`
/// for any lift `eta_{q+1}` of `eta_q` (the zero extension is used; the value
/// is lift-independent). Equals `[xi_q, eta_q] + i(eta) d xi_{q+1}`.
pub fn formal_lie_derivative(
    xi_top: &JetSection,
    eta: &JetSection,
) -> Result<JetSection, JetError> {
    if xi_top.over != eta.over || xi_top.q != eta.q + 1 {
        return Err(JetError::BadInput(
            "formal Lie derivative expects orders q+1 and q".into(),
        ));
    }
    let eta_top = eta.zero_extend(eta.q + 1);
    let alg = algebraic_bracket(xi_top, &eta_top)?;
    let xi_low = xi_top.truncate(eta.q);
    let corr = interior_spencer(&xi_low, &eta_top)?;
    Ok(alg.add(&corr))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::{parse_jet_expr, JetContext};
    use crate::linalg::in_span;

    fn e(s: &str) -> RatFunc {
        parse_jet_expr(s).unwrap()
    }

    fn d(s: &str) -> MultiIndex {
        MultiIndex::from_dirs(s).unwrap()
    }

    /// Example data: the Lie algebroid of the Pfaffian system with n = m = 2.
    fn pfaffian_sections() -> (JetSection, JetSection, JetContext) {
        let ctx = JetContext::new(2, 2, 1);
        let xi = JetSection::new(
            Base::Source,
            1,
            ctx,
            vec![
                ((2, MultiIndex::zero()), e("-x2")),
                ((1, d("1")), e("1")),
            ],
        )
        .unwrap();
        let eta = JetSection::new(
            Base::Source,
            1,
            ctx,
            vec![
                ((1, MultiIndex::zero()), e("1")),
                ((2, d("1")), e("1")),
                ((2, d("2")), e("1")),
            ],
        )
        .unwrap();
        (xi, eta, ctx)
    }

    /// Independent oracle: the defining expansion of the algebraic bracket at
    /// q = 1, n = 2, written out by hand.
    fn algebraic_oracle_q1(xi: &JetSection, eta: &JetSection) -> Vec<(usize, MultiIndex, RatFunc)> {
        let n = 2usize;
        let mut out = Vec::new();
        let dx = |s: &JetSection, k: usize, mu: &MultiIndex, i: usize| {
            s.get(k, mu).partial_derivative(&JetVar::source(i).to_var())
        };
        let _ = dx;
        for k in 1..=n {
            // order 0: xi^r eta^k_r - eta^r xi^k_r
            let mut v0 = RatFunc::zero();
            for r in 1..=n {
                let t1 = &xi.get(r, &MultiIndex::zero()) * &eta.get(k, &d(&r.to_string()));
                let t2 = &eta.get(r, &MultiIndex::zero()) * &xi.get(k, &d(&r.to_string()));
                v0 = &v0 + &(&t1 - &t2);
            }
            out.push((k, MultiIndex::zero(), v0));
            // order 1 in direction j, zero lifts: second-order formal jets drop
            for j in 1..=n {
                let mut v = RatFunc::zero();
                for r in 1..=n {
                    let t1 = &xi.get(r, &d(&j.to_string())) * &eta.get(k, &d(&r.to_string()));
                    let t2 = &eta.get(r, &d(&j.to_string())) * &xi.get(k, &d(&r.to_string()));
                    v = &v + &(&t1 - &t2);
                }
                out.push((k, d(&j.to_string()), v));
            }
        }
        out
    }

    #[test]
    fn algebraic_bracket_matches_hand_expansion() {
        let (xi, eta, _) = pfaffian_sections();
        let xt = xi.zero_extend(2);
        let et = eta.zero_extend(2);
        let got = algebraic_bracket(&xt, &et).unwrap();
        for (k, mu, expect) in algebraic_oracle_q1(&xt, &et) {
            assert_eq!(got.get(k, &mu), expect, "component ({k}, {})", mu.dirs());
        }
        // order-0 values from the data: (-1, -x2)
        assert_eq!(got.get(1, &MultiIndex::zero()), e("-1"));
        assert_eq!(got.get(2, &MultiIndex::zero()), e("-x2"));
    }

    #[test]
    fn algebraic_bracket_antisymmetric() {
        let (xi, eta, _) = pfaffian_sections();
        let xt = xi.zero_extend(2);
        let et = eta.zero_extend(2);
        let ab = algebraic_bracket(&xt, &et).unwrap();
        let ba = algebraic_bracket(&et, &xt).unwrap();
        assert_eq!(ab, ba.scale(&RatFunc::int(-1)));
        assert!(algebraic_bracket(&xt, &xt).unwrap().is_zero());
    }

    #[test]
    fn algebroid_bracket_of_pfaffian_sections() {
        // all components vanish except zeta^2_1 = 1, and the result lies in
        // R_1 = { x2 z^1_1 + z^2 = 0, z^1_2 = 0 }
        let (xi, eta, _) = pfaffian_sections();
        let b = algebroid_bracket(&xi, &eta, None).unwrap();
        for ((k, mu), value) in b.components() {
            if *k == 2 && mu == &d("1") {
                assert!(value.is_one());
            } else {
                assert!(value.is_zero(), "component ({k}, {}) = {value}", mu.dirs());
            }
        }
        let r1_a = &(&e("x2") * &b.get(1, &d("1"))) + &b.get(2, &MultiIndex::zero());
        assert!(r1_a.is_zero());
        assert!(b.get(1, &d("2")).is_zero());
    }

    #[test]
    fn bracket_of_jets_is_jet_of_bracket() {
        // [j_q(xi), j_q(eta)] = j_q([xi, eta]) for polynomial fields
        let ctx = JetContext::new(2, 2, 2);
        let xf = vec![e("x1^2"), e("x1*x2")];
        let yf = vec![e("x2"), e("x1 + x2^2")];
        let jx = JetSection::holonomic(Base::Source, 2, ctx, &xf).unwrap();
        let jy = JetSection::holonomic(Base::Source, 2, ctx, &yf).unwrap();
        let got = algebroid_bracket(&jx, &jy, None).unwrap();
        // classical bracket of the two vector fields
        let mut classical = Vec::new();
        for k in 0..2 {
            let mut v = RatFunc::zero();
            for r in 0..2 {
                let xr = JetVar::source(r + 1).to_var();
                let t1 = &xf[r] * &yf[k].partial_derivative(&xr);
                let t2 = &yf[r] * &xf[k].partial_derivative(&xr);
                v = &v + &(&t1 - &t2);
            }
            classical.push(v);
        }
        let expect = JetSection::holonomic(Base::Source, 2, ctx, &classical).unwrap();
        assert_eq!(got, expect);
    }

    #[test]
    fn lift_independence() {
        let (xi, eta, ctx) = pfaffian_sections();
        let zero_lift = algebroid_bracket(&xi, &eta, None).unwrap();
        // a nonzero lift restricting to the same sections
        let mut xt_entries: Vec<((usize, MultiIndex), RatFunc)> = xi
            .components()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        xt_entries.push(((1, d("11")), e("x1")));
        xt_entries.push(((2, d("12")), e("x2^2 + 1")));
        let xt = JetSection::new(Base::Source, 2, ctx, xt_entries).unwrap();
        let mut et_entries: Vec<((usize, MultiIndex), RatFunc)> = eta
            .components()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        et_entries.push(((2, d("22")), e("x1*x2")));
        let et = JetSection::new(Base::Source, 2, ctx, et_entries).unwrap();
        let lifted = algebroid_bracket(&xi, &eta, Some((&xt, &et))).unwrap();
        assert_eq!(zero_lift, lifted);
    }

    #[test]
    fn formal_lie_derivative_two_routes() {
        // L(xi_{q+1}) eta_q = [xi_q, eta_q] + i(eta) d xi_{q+1}
        let (xi, eta, ctx) = pfaffian_sections();
        let mut xt_entries: Vec<((usize, MultiIndex), RatFunc)> = xi
            .components()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        xt_entries.push(((1, d("12")), e("x1 + x2")));
        let xt = JetSection::new(Base::Source, 2, ctx, xt_entries).unwrap();
        let route1 = formal_lie_derivative(&xt, &eta).unwrap();
        let bracket = algebroid_bracket(&xi, &eta, None).unwrap();
        let corr = interior_spencer(&eta, &xt).unwrap();
        let route2 = bracket.add(&corr);
        assert_eq!(route1, route2);
        // holonomic xi: the correction vanishes, pure algebroid bracket
        let hol = JetSection::holonomic(Base::Source, 2, ctx, &[e("x1^2"), e("x2")]).unwrap();
        let lie = formal_lie_derivative(&hol, &eta).unwrap();
        let plain = algebroid_bracket(&hol.truncate(1), &eta, None).unwrap();
        assert_eq!(lie, plain);
    }

    #[test]
    fn jacobi_identity_on_fixed_sections() {
        let ctx = JetContext::new(1, 1, 2);
        let mk = |c0: &str, c1: &str, c2: &str| {
            JetSection::new(
                Base::Source,
                2,
                ctx,
                vec![
                    ((1, MultiIndex::zero()), e(c0)),
                    ((1, d("1")), e(c1)),
                    ((1, d("11")), e(c2)),
                ],
            )
            .unwrap()
        };
        let a = mk("x1", "1", "x1^2");
        let b = mk("x1^2 - 1", "x1", "0");
        let c = mk("2", "x1 + 3", "x1");
        let ab = algebroid_bracket(&a, &b, None).unwrap();
        let bc = algebroid_bracket(&b, &c, None).unwrap();
        let ca = algebroid_bracket(&c, &a, None).unwrap();
        let s1 = algebroid_bracket(&a, &bc, None).unwrap();
        let s2 = algebroid_bracket(&b, &ca, None).unwrap();
        let s3 = algebroid_bracket(&c, &ab, None).unwrap();
        assert!(s1.add(&s2).add(&s3).is_zero());
    }

    #[test]
    fn span_membership_over_fraction_field() {
        // smoke test for in_span used by involutivity: y2_1 in <y1_1, y1_1 + y2_1>
        let v1 = vec![e("y1_1"), e("0")];
        let v2 = vec![e("y1_1"), e("y2_1")];
        let t = vec![e("0"), e("y2_1")];
        assert!(in_span(&[v1, v2], &t).is_some());
    }
}
