//! Hopf comorphisms of group parameters expressed in the doubled universe:
//! diagonal (middle insertion), augmentation, and antipode, with the
//! coalgebra axioms checked on each instance.

use std::collections::BTreeMap;

use crate::jets::{JetVar, MultiIndex};
use crate::mpoly::Var;
use crate::ratfunc::RatFunc;

use super::GaloisError;

/// Substitutes every lexicon variable through `map`.
fn map_vars(f: &RatFunc, map: impl Fn(&JetVar) -> JetVar) -> Result<RatFunc, GaloisError> {
    let mut bindings: BTreeMap<Var, RatFunc> = BTreeMap::new();
    for v in f.vars() {
        let jv = JetVar::from_var(&v)
            .ok_or_else(|| GaloisError::BadInput(format!("not a lexicon variable: {v}")))?;
        let image = map(&jv);
        if image != jv {
            bindings.insert(v, RatFunc::var(image.to_var()));
        }
    }
    f.substitute(&bindings)
        .map_err(|_| GaloisError::NotExpressible("renaming hit a pole".into()))
}

fn shift_bars(v: &JetVar, delta: i8) -> JetVar {
    let adjust = |bars: u8| -> u8 { (bars as i8 + delta).max(0) as u8 };
    match v {
        JetVar::SourceJet { comp, mu, bars } => JetVar::SourceJet {
            comp: *comp,
            mu: mu.clone(),
            bars: adjust(*bars),
        },
        JetVar::GroupoidJet { comp, lam, bars } => JetVar::GroupoidJet {
            comp: *comp,
            lam: lam.clone(),
            bars: adjust(*bars),
        },
        JetVar::Param { comp, bars } => JetVar::Param {
            comp: *comp,
            bars: adjust(*bars),
        },
        other => other.clone(),
    }
}

/// Raises every bar level by one (`y -> ybar`, `ybar -> ybarbar`).
pub fn bar_shift(f: &RatFunc) -> Result<RatFunc, GaloisError> {
    map_vars(f, |v| shift_bars(v, 1))
}

/// Substitutes the barred copy by the plain one (`ybar <- y`).
pub fn augmentation_map(f: &RatFunc) -> Result<RatFunc, GaloisError> {
    map_vars(f, |v| shift_bars(v, -1))
}

/// Swaps the plain and barred copies.
pub fn antipode_map(f: &RatFunc) -> Result<RatFunc, GaloisError> {
    map_vars(f, |v| match v {
        JetVar::SourceJet { comp, mu, bars: 0 } => JetVar::SourceJet {
            comp: *comp,
            mu: mu.clone(),
            bars: 1,
        },
        JetVar::SourceJet { comp, mu, bars: 1 } => JetVar::SourceJet {
            comp: *comp,
            mu: mu.clone(),
            bars: 0,
        },
        JetVar::Param { comp, bars: 0 } => JetVar::Param { comp: *comp, bars: 1 },
        JetVar::Param { comp, bars: 1 } => JetVar::Param { comp: *comp, bars: 0 },
        JetVar::GroupoidJet { comp, lam, bars: 0 } => JetVar::GroupoidJet {
            comp: *comp,
            lam: lam.clone(),
            bars: 1,
        },
        JetVar::GroupoidJet { comp, lam, bars: 1 } => JetVar::GroupoidJet {
            comp: *comp,
            lam: lam.clone(),
            bars: 0,
        },
        other => other.clone(),
    })
}

/// The three comorphism images of one group parameter.
#[derive(Clone, Debug)]
pub struct HopfImages {
    /// The parameter from the plain to the double-barred copy, over the
    /// tripled universe; equals the composition of the middle-inserted
    /// parameters when the composition law holds.
    pub diagonal: RatFunc,
    /// The parameter evaluated on the identity (`ybar <- y`).
    pub augmentation: RatFunc,
    /// The parameter of the inverse (bars swapped).
    pub antipode: RatFunc,
}

/// Computes the three comorphism images of a parameter expressed in the
/// doubled universe.
pub fn hopf_comorphisms(param: &RatFunc) -> Result<HopfImages, GaloisError> {
    let diagonal = map_vars(param, |v| match v {
        JetVar::SourceJet { comp, mu, bars: 1 } => JetVar::SourceJet {
            comp: *comp,
            mu: mu.clone(),
            bars: 2,
        },
        JetVar::Param { comp, bars: 1 } => JetVar::Param { comp: *comp, bars: 2 },
        JetVar::GroupoidJet { comp, lam, bars: 1 } => JetVar::GroupoidJet {
            comp: *comp,
            lam: lam.clone(),
            bars: 2,
        },
        other => other.clone(),
    })?;
    let augmentation = augmentation_map(param)?;
    let antipode = antipode_map(param)?;
    Ok(HopfImages {
        diagonal,
        augmentation,
        antipode,
    })
}

/// Residuals of the coalgebra axioms for a parameter family with an explicit
/// composition law. The law is written over internal slots: `u<t>` is the
/// t-th parameter of the right factor, `v<t>` of the left factor.
#[derive(Clone, Debug)]
pub struct HopfAxiomReport {
    /// `param(y, ybarbar) - law(barshift params, params)` per parameter.
    pub diagonal: Vec<RatFunc>,
    /// Associativity of the law, per parameter.
    pub coassociativity: Vec<RatFunc>,
    /// `law(e, a) - a` and `law(a, e) - a` per parameter.
    pub counit: Vec<RatFunc>,
    /// `law(S a, a) - e` and `law(a, S a) - e` per parameter.
    pub antipode: Vec<RatFunc>,
}

impl HopfAxiomReport {
    pub fn all_zero(&self) -> bool {
        self.diagonal
            .iter()
            .chain(&self.coassociativity)
            .chain(&self.counit)
            .chain(&self.antipode)
            .all(|r| r.is_zero())
    }
}

fn u(t: usize) -> Var {
    JetVar::unknown(0, t, MultiIndex::zero()).to_var()
}

fn v(t: usize) -> Var {
    JetVar::unknown(1, t, MultiIndex::zero()).to_var()
}

fn subst(f: &RatFunc, bindings: &BTreeMap<Var, RatFunc>) -> Result<RatFunc, GaloisError> {
    f.substitute(bindings)
        .map_err(|_| GaloisError::NotExpressible("law substitution hit a pole".into()))
}

/// Verifies the coalgebra axioms for the parameter family and composition
/// law on this instance; all residuals must vanish identically.
pub fn verify_hopf_axioms(
    params: &[RatFunc],
    law: &[RatFunc],
) -> Result<HopfAxiomReport, GaloisError> {
    if params.len() != law.len() {
        return Err(GaloisError::BadInput(
            "one law component per parameter required".into(),
        ));
    }
    let p = params.len();
    let images: Vec<HopfImages> = params
        .iter()
        .map(hopf_comorphisms)
        .collect::<Result<Vec<_>, _>>()?;

    // diagonal: param over (y, ybarbar) = law(v <- barshifted, u <- params)
    let mut diagonal = Vec::new();
    {
        let mut bind: BTreeMap<Var, RatFunc> = BTreeMap::new();
        for t in 1..=p {
            bind.insert(u(t), params[t - 1].clone());
            bind.insert(v(t), bar_shift(&params[t - 1])?);
        }
        for t in 1..=p {
            let composed = subst(&law[t - 1], &bind)?;
            diagonal.push(&images[t - 1].diagonal - &composed);
        }
    }

    // coassociativity: law(law(L, M), R) = law(L, law(M, R)) with the three
    // slots L = v<t>, M = u<p+t>, R = u<t>
    let mut coassociativity = Vec::new();
    {
        let mid = |t: usize| RatFunc::var(u(p + t));
        let mut inner_lm: Vec<RatFunc> = Vec::new();
        let mut inner_mr: Vec<RatFunc> = Vec::new();
        for t in 1..=p {
            let mut b1: BTreeMap<Var, RatFunc> = BTreeMap::new();
            for s in 1..=p {
                b1.insert(u(s), mid(s));
            }
            inner_lm.push(subst(&law[t - 1], &b1)?);
            let mut b2: BTreeMap<Var, RatFunc> = BTreeMap::new();
            for s in 1..=p {
                b2.insert(v(s), mid(s));
            }
            inner_mr.push(subst(&law[t - 1], &b2)?);
        }
        for t in 1..=p {
            let mut b_left: BTreeMap<Var, RatFunc> = BTreeMap::new();
            for s in 1..=p {
                b_left.insert(v(s), inner_lm[s - 1].clone());
            }
            let lhs = subst(&law[t - 1], &b_left)?;
            let mut b_right: BTreeMap<Var, RatFunc> = BTreeMap::new();
            for s in 1..=p {
                b_right.insert(u(s), inner_mr[s - 1].clone());
            }
            let rhs = subst(&law[t - 1], &b_right)?;
            coassociativity.push(&lhs - &rhs);
        }
    }

    // counit: identity parameters are the augmentation images
    let idel: Vec<RatFunc> = images.iter().map(|i| i.augmentation.clone()).collect();
    let mut counit = Vec::new();
    for t in 1..=p {
        let mut left: BTreeMap<Var, RatFunc> = BTreeMap::new();
        for s in 1..=p {
            left.insert(v(s), idel[s - 1].clone());
        }
        counit.push(&subst(&law[t - 1], &left)? - &RatFunc::var(u(t)));
        let mut right: BTreeMap<Var, RatFunc> = BTreeMap::new();
        for s in 1..=p {
            right.insert(u(s), idel[s - 1].clone());
        }
        counit.push(&subst(&law[t - 1], &right)? - &RatFunc::var(v(t)));
    }

    // antipode: composing with the bar swap yields the identity parameters
    let mut antipode = Vec::new();
    for t in 1..=p {
        let mut left: BTreeMap<Var, RatFunc> = BTreeMap::new();
        for s in 1..=p {
            left.insert(v(s), images[s - 1].antipode.clone());
            left.insert(u(s), params[s - 1].clone());
        }
        antipode.push(&subst(&law[t - 1], &left)? - &idel[t - 1]);
        let mut right: BTreeMap<Var, RatFunc> = BTreeMap::new();
        for s in 1..=p {
            right.insert(u(s), images[s - 1].antipode.clone());
            right.insert(v(s), params[s - 1].clone());
        }
        antipode.push(&subst(&law[t - 1], &right)? - &idel[t - 1]);
    }

    Ok(HopfAxiomReport {
        diagonal,
        coassociativity,
        counit,
        antipode,
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
    fn multiplicative_parameter() {
        // a = ybar/y: diagonal ybarbar/y, augmentation 1, antipode y/ybar
        let a = e("by1/y1");
        let images = hopf_comorphisms(&a).unwrap();
        assert_eq!(images.diagonal, e("bby1/y1"));
        assert_eq!(images.augmentation, RatFunc::one());
        assert_eq!(images.antipode, e("y1/by1"));
        // full axioms with the product law
        let report = verify_hopf_axioms(&[a], &[e("v1*u1")]).unwrap();
        assert!(report.all_zero(), "{report:?}");
    }

    #[test]
    fn affine_parameter_pair() {
        // (b1, b2) = (ba1/a1, ba2 - (ba1/a1) a2) with the affine law
        // (v1*u1, v1*u2 + v2)
        let b1 = e("ba1/a1");
        let b2 = e("ba2 - (ba1/a1)*a2");
        let law = vec![e("v1*u1"), e("v1*u2 + v2")];
        // augmentation is the identity element (1, 0)
        let i1 = hopf_comorphisms(&b1).unwrap();
        let i2 = hopf_comorphisms(&b2).unwrap();
        assert_eq!(i1.augmentation, RatFunc::one());
        assert!(i2.augmentation.is_zero());
        let report = verify_hopf_axioms(&[b1, b2], &law).unwrap();
        assert!(report.all_zero(), "{report:?}");
    }

    #[test]
    fn broken_law_is_caught() {
        let a = e("by1/y1");
        let report = verify_hopf_axioms(&[a], &[e("v1 + u1")]).unwrap();
        assert!(!report.all_zero());
    }
}
