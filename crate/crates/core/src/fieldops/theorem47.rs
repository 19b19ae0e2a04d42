//! The commutation identity between prolonged sections and the formal
//! derivative, in both the source and target forms. The returned residual is
//! identically zero when the identity holds.

use crate::jets::{total_derivative, JetError, JetVar, MultiIndex};
use crate::ratfunc::RatFunc;

use super::{flat, sharp, spencer, Base, JetSection};

/// Evaluates left minus right of the identity for a section of order `q+1`:
///
/// source: `flat(xi_{q+1}) d_i F = d_i(flat(xi_q) F) - xi^r_i d_r F
///          - flat(d xi_{q+1}(e_i)) F`
///
/// target: `sharp(eta_{q+1}) d_i F = d_i(sharp(eta_q) F)
///          - y^k_i (d_Y eta_{q+1}(d/dy^k)) F`
///
/// where the target Spencer pairing is the contraction of the Spencer image
/// with the k-th target direction.
pub fn verify_theorem47(
    phi: &RatFunc,
    section: &JetSection,
    dir: usize,
) -> Result<RatFunc, JetError> {
    let ctx = section.ctx;
    if section.q == 0 {
        return Err(JetError::BadInput("section must have order q+1 >= 1".into()));
    }
    let q = section.q - 1;
    let low = section.truncate(q);
    let d_phi = total_derivative(phi, dir, &ctx)?;
    match section.over {
        Base::Source => {
            let lhs = flat(section, q + 1)?.apply(&d_phi);
            let part1 = total_derivative(&flat(&low, q)?.apply(phi), dir, &ctx)?;
            let mut part2 = RatFunc::zero();
            for r in 1..=ctx.n {
                let xi_ri = section.get(r, &MultiIndex::zero().succ(dir));
                if xi_ri.is_zero() {
                    continue;
                }
                let dr_phi = total_derivative(phi, r, &ctx)?;
                part2 = &part2 + &(&xi_ri * &dr_phi);
            }
            let image = spencer(section);
            let mut entries = Vec::new();
            for k in 1..=ctx.n {
                for mu in MultiIndex::all_up_to(ctx.n, q) {
                    let v = image.entries[&(k, mu.clone(), dir)].clone();
                    entries.push(((k, mu), v));
                }
            }
            let contracted = JetSection::new(Base::Source, q, ctx, entries)?;
            let part3 = flat(&contracted, q)?.apply(phi);
            Ok(&(&lhs - &(&part1 - &part2)) + &part3)
        }
        Base::Target => {
            let lhs = sharp(section, q + 1)?.apply(&d_phi);
            let part1 = total_derivative(&sharp(&low, q)?.apply(phi), dir, &ctx)?;
            let image = spencer(section);
            let mut correction = RatFunc::zero();
            for k in 1..=ctx.m {
                let mut entries = Vec::new();
                for u in 1..=ctx.m {
                    for lam in MultiIndex::all_up_to(ctx.m, q) {
                        let v = image.entries[&(u, lam.clone(), k)].clone();
                        entries.push(((u, lam), v));
                    }
                }
                let contracted = JetSection::new(Base::Target, q, ctx, entries)?;
                let applied = sharp(&contracted, q)?.apply(phi);
                let yk = RatFunc::var(JetVar::jet(k, MultiIndex::zero().succ(dir)).to_var());
                correction = &correction + &(&yk * &applied);
            }
            Ok(&(&lhs - &part1) + &correction)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::{parse_jet_expr, JetContext};

    fn e(s: &str) -> RatFunc {
        parse_jet_expr(s).unwrap()
    }

    fn d(s: &str) -> MultiIndex {
        MultiIndex::from_dirs(s).unwrap()
    }

    #[test]
    fn source_identity_on_constant_section() {
        // xi_2 = (0, -1, 0) with F = F(y, y_x): residual 0
        let ctx = JetContext::new(1, 1, 2);
        let xi = JetSection::new(
            Base::Source,
            2,
            ctx,
            vec![((1, d("1")), e("-1"))],
        )
        .unwrap();
        for phi in ["y1*y1_1", "y1_1/y1", "y1^2 + y1_1"] {
            let r = verify_theorem47(&e(phi), &xi, 1).unwrap();
            assert!(r.is_zero(), "residual for {phi}: {r}");
        }
    }

    #[test]
    fn source_identity_on_holonomic_sections() {
        let ctx = JetContext::new(1, 1, 2);
        let xi = JetSection::holonomic(Base::Source, 2, ctx, &[e("x1^2 + x1")]).unwrap();
        for phi in ["y1_1*y1", "y1 + x1*y1_1"] {
            let r = verify_theorem47(&e(phi), &xi, 1).unwrap();
            assert!(r.is_zero(), "residual for {phi}: {r}");
        }
    }

    #[test]
    fn target_identity_reduces_to_prolongation_commutation() {
        // holonomic eta: d_i commutes with the prolongation
        let ctx = JetContext::new(1, 1, 2);
        let eta = JetSection::holonomic(Base::Target, 2, ctx, &[e("y1^2")]).unwrap();
        for phi in ["y1*y1_1", "y1_1"] {
            let r = verify_theorem47(&e(phi), &eta, 1).unwrap();
            assert!(r.is_zero(), "residual for {phi}: {r}");
        }
    }

    #[test]
    fn target_identity_on_genuine_section() {
        // non-holonomic section of order 2 over the target, m = 2; the
        // function argument has order at most q = 1
        let ctx = JetContext::new(1, 2, 2);
        let eta = JetSection::new(
            Base::Target,
            2,
            ctx,
            vec![
                ((1, MultiIndex::zero()), e("y2")),
                ((2, d("1")), e("y1")),
                ((1, d("2")), e("y1*y2")),
                ((2, d("12")), e("y2")),
                ((1, d("11")), e("y1")),
            ],
        )
        .unwrap();
        for phi in ["y2*y1_1", "y1_1 + y2_1", "y1*y2"] {
            let r = verify_theorem47(&e(phi), &eta, 1).unwrap();
            assert!(r.is_zero(), "residual for {phi}: {r}");
        }
    }
}
