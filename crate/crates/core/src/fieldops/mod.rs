//! Vector fields on jet space and the section calculus: prolongations,
//! sharp and flat, the Spencer operator, algebraic and algebroid brackets,
//! and the formal Lie derivative.

mod brackets;
mod prolong;
mod theorem47;

pub use brackets::{
    algebraic_bracket, algebroid_bracket, formal_lie_derivative, interior_spencer,
};
pub use prolong::{flat, prolong_vertical, sharp};
pub use theorem47::verify_theorem47;

use std::collections::BTreeMap;
use std::fmt;

use crate::mpoly::Var;
use crate::ratfunc::RatFunc;

use super::jets::{JetContext, JetError, JetVar, MultiIndex};

/// Which copy of the base the section lives over: sections over the source
/// have components indexed by the source directions with coefficients in `x`;
/// sections over the target are indexed by the target directions with
/// coefficients in the order-0 `y` variables.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Base {
    Source,
    Target,
}

impl Base {
    /// Number of directions (and of section components).
    pub fn dirs(&self, ctx: &JetContext) -> usize {
        match self {
            Base::Source => ctx.n,
            Base::Target => ctx.m,
        }
    }

    /// The i-th base coordinate.
    pub fn coord(&self, i: usize) -> JetVar {
        match self {
            Base::Source => JetVar::source(i),
            Base::Target => JetVar::jet(i, MultiIndex::zero()),
        }
    }

    /// Is `v` admissible as a coefficient variable for sections over this base?
    fn admits_coeff_var(&self, v: &JetVar) -> bool {
        match self {
            Base::Source => matches!(v, JetVar::Source { .. }),
            Base::Target => matches!(
                v,
                JetVar::SourceJet { mu, bars: 0, .. } if mu.order() == 0
            ),
        }
    }
}

/// A derivation of the jet coordinate ring: finitely many coefficients,
/// applied as `sum coeff(v) * df/dv`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorField {
    coeffs: BTreeMap<Var, RatFunc>,
    pub ctx: JetContext,
}

impl VectorField {
    pub fn zero(ctx: JetContext) -> Self {
        VectorField {
            coeffs: BTreeMap::new(),
            ctx,
        }
    }

    pub fn new(ctx: JetContext, entries: Vec<(Var, RatFunc)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (v, c) in entries {
            if !c.is_zero() {
                let cur = coeffs.remove(&v).unwrap_or_else(RatFunc::zero);
                let s = &cur + &c;
                if !s.is_zero() {
                    coeffs.insert(v, s);
                }
            }
        }
        VectorField { coeffs, ctx }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, v: &Var) -> RatFunc {
        self.coeffs.get(v).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Var, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<Var> {
        self.coeffs.keys().cloned().collect()
    }

    /// Applies the derivation to a function.
    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        let mut out = RatFunc::zero();
        for (v, c) in &self.coeffs {
            let df = f.partial_derivative(v);
            if df.is_zero() {
                continue;
            }
            out = &out + &(c * &df);
        }
        out
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        let mut entries: Vec<(Var, RatFunc)> = self
            .coeffs
            .iter()
            .map(|(v, c)| (v.clone(), c.clone()))
            .collect();
        entries.extend(other.coeffs.iter().map(|(v, c)| (v.clone(), c.clone())));
        VectorField::new(self.ctx, entries)
    }

    pub fn scale(&self, f: &RatFunc) -> VectorField {
        VectorField::new(
            self.ctx,
            self.coeffs
                .iter()
                .map(|(v, c)| (v.clone(), c * f))
                .collect(),
        )
    }

    pub fn sub(&self, other: &VectorField) -> VectorField {
        self.add(&other.scale(&RatFunc::int(-1)))
    }

    /// Restricts to coefficients on jet variables of order at most `q`.
    pub fn truncate_order(&self, q: u32) -> VectorField {
        VectorField {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(v, _)| {
                    JetVar::from_var(v).map(|jv| jv.order() <= q).unwrap_or(true)
                })
                .map(|(v, c)| (v.clone(), c.clone()))
                .collect(),
            ctx: self.ctx,
        }
    }
}

/// Commutator `[A, B] = A o B - B o A`, computed coefficient-wise.
pub fn bracket_vf(a: &VectorField, b: &VectorField) -> VectorField {
    let mut entries = Vec::new();
    let mut vars: Vec<Var> = a.coeffs.keys().cloned().collect();
    for v in b.coeffs.keys() {
        if !vars.contains(v) {
            vars.push(v.clone());
        }
    }
    for v in vars {
        let c = &a.apply(&b.coeff(&v)) - &b.apply(&a.coeff(&v));
        entries.push((v, c));
    }
    VectorField::new(a.ctx, entries)
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (v, c) in &self.coeffs {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "d/d{v}")?;
            } else {
                write!(f, "{c}*d/d{v}")?;
            }
        }
        Ok(())
    }
}

/// A section of the order-`q` jet bundle of vector fields over the chosen
/// base: a complete table of components `(k, mu) -> coefficient`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JetSection {
    pub over: Base,
    pub q: u32,
    pub ctx: JetContext,
    comps: BTreeMap<(usize, MultiIndex), RatFunc>,
}

impl JetSection {
    /// Builds a complete section; absent entries are zero. Coefficients must
    /// be functions of the base coordinates only.
    pub fn new(
        over: Base,
        q: u32,
        ctx: JetContext,
        entries: Vec<((usize, MultiIndex), RatFunc)>,
    ) -> Result<Self, JetError> {
        let dirs = over.dirs(&ctx);
        let mut comps = BTreeMap::new();
        for k in 1..=dirs {
            for mu in MultiIndex::all_up_to(dirs, q) {
                comps.insert((k, mu), RatFunc::zero());
            }
        }
        for ((k, mu), value) in entries {
            if k == 0 || k > dirs || mu.order() > q || mu.max_dir().unwrap_or(1) > dirs {
                return Err(JetError::BadInput(format!(
                    "component ({k}, {}) outside the section shape",
                    mu.dirs()
                )));
            }
            for v in value.vars() {
                let jv = JetVar::from_var(&v)
                    .ok_or_else(|| JetError::BadVariable(v.name().to_string()))?;
                if !over.admits_coeff_var(&jv) {
                    return Err(JetError::BadInput(format!(
                        "coefficient variable {} not allowed over this base",
                        v.name()
                    )));
                }
            }
            comps.insert((k, mu), value);
        }
        Ok(JetSection {
            over,
            q,
            ctx,
            comps,
        })
    }

    pub fn zero(over: Base, q: u32, ctx: JetContext) -> Self {
        JetSection::new(over, q, ctx, Vec::new()).expect("empty entries are valid")
    }

    /// The holonomic section `j_q` of a vector field with the given order-0
    /// components (functions of the base coordinates).
    pub fn holonomic(
        over: Base,
        q: u32,
        ctx: JetContext,
        order0: &[RatFunc],
    ) -> Result<Self, JetError> {
        let dirs = over.dirs(&ctx);
        if order0.len() != dirs {
            return Err(JetError::BadInput(format!(
                "expected {dirs} components, got {}",
                order0.len()
            )));
        }
        let mut entries = Vec::new();
        for (k, f) in order0.iter().enumerate() {
            for mu in MultiIndex::all_up_to(dirs, q) {
                let mut value = f.clone();
                for d in 1..=dirs {
                    for _ in 0..mu.count(d) {
                        value = value.partial_derivative(&over.coord(d).to_var());
                    }
                }
                entries.push(((k + 1, mu), value));
            }
        }
        JetSection::new(over, q, ctx, entries)
    }

    pub fn get(&self, k: usize, mu: &MultiIndex) -> RatFunc {
        self.comps
            .get(&(k, mu.clone()))
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    }

    pub fn components(&self) -> impl Iterator<Item = (&(usize, MultiIndex), &RatFunc)> {
        self.comps.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.values().all(|c| c.is_zero())
    }

    pub fn truncate(&self, q: u32) -> JetSection {
        assert!(q <= self.q);
        JetSection {
            over: self.over,
            q,
            ctx: self.ctx,
            comps: self
                .comps
                .iter()
                .filter(|((_, mu), _)| mu.order() <= q)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Extends by zeros to a higher order.
    pub fn zero_extend(&self, q: u32) -> JetSection {
        assert!(q >= self.q);
        let mut s = JetSection::zero(self.over, q, self.ctx);
        for (key, value) in &self.comps {
            s.comps.insert(key.clone(), value.clone());
        }
        s
    }

    pub fn add(&self, other: &JetSection) -> JetSection {
        assert_eq!(self.over, other.over);
        assert_eq!(self.q, other.q);
        let mut s = self.clone();
        for (key, value) in &other.comps {
            let cur = s.comps.get(key).cloned().unwrap_or_else(RatFunc::zero);
            s.comps.insert(key.clone(), &cur + value);
        }
        s
    }

    pub fn sub(&self, other: &JetSection) -> JetSection {
        assert_eq!(self.over, other.over);
        assert_eq!(self.q, other.q);
        let mut s = self.clone();
        for (key, value) in &other.comps {
            let cur = s.comps.get(key).cloned().unwrap_or_else(RatFunc::zero);
            s.comps.insert(key.clone(), &cur - value);
        }
        s
    }

    pub fn scale(&self, f: &RatFunc) -> JetSection {
        let mut s = self.clone();
        for value in s.comps.values_mut() {
            *value = &*value * f;
        }
        s
    }

    /// Is this section the jet of its order-0 part?
    pub fn is_holonomic(&self) -> bool {
        spencer(self).entries.values().all(|e| e.is_zero())
    }
}

/// The Spencer image `d xi_{q+1}`: entries `(k, mu, i) -> d_i xi^k_mu -
/// xi^k_{mu+1_i}` for `|mu| <= q`. Vanishes iff the section is holonomic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpencerImage {
    pub over: Base,
    /// Truncation order `q` (input section has order `q+1`).
    pub q: u32,
    pub entries: BTreeMap<(usize, MultiIndex, usize), RatFunc>,
}

/// The Spencer operator; the input has order `q+1`, the image is truncated to
/// `|mu| <= q`.
pub fn spencer(xi: &JetSection) -> SpencerImage {
    let q = xi.q.saturating_sub(1);
    let dirs = xi.over.dirs(&xi.ctx);
    let mut entries = BTreeMap::new();
    for k in 1..=dirs {
        for mu in MultiIndex::all_up_to(dirs, q) {
            for i in 1..=dirs {
                let d = xi
                    .get(k, &mu)
                    .partial_derivative(&xi.over.coord(i).to_var());
                let shifted = xi.get(k, &mu.succ(i));
                entries.insert((k, mu.clone(), i), &d - &shifted);
            }
        }
    }
    SpencerImage {
        over: xi.over,
        q,
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::parse_jet_expr;

    fn e(s: &str) -> RatFunc {
        parse_jet_expr(s).unwrap()
    }

    fn vf(ctx: JetContext, entries: &[(&str, &str)]) -> VectorField {
        VectorField::new(
            ctx,
            entries
                .iter()
                .map(|(v, c)| (Var::new(&crate::jets::normalize_name(v).unwrap()), e(c)))
                .collect(),
        )
    }

    #[test]
    fn bracket_affine_line() {
        // theta1 = d/dy, theta2 = y d/dy + y_x d/dy_x: [theta1, theta2] = theta1
        let ctx = JetContext::new(1, 1, 1);
        let t1 = vf(ctx, &[("y1", "1")]);
        let t2 = vf(ctx, &[("y1", "y1"), ("y1_1", "y1_1")]);
        assert_eq!(bracket_vf(&t1, &t2), t1);
        // antisymmetry on the nose
        assert!(bracket_vf(&t2, &t2).is_zero());
    }

    #[test]
    fn apply_is_derivation() {
        let ctx = JetContext::new(1, 1, 1);
        let t = vf(ctx, &[("y1", "y1"), ("y1_1", "y1_1")]);
        let f = e("y1_1/y1");
        let g = e("y1*y1_1");
        let fg = &f * &g;
        let lhs = t.apply(&fg);
        let rhs = &(&t.apply(&f) * &g) + &(&f * &t.apply(&g));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn spencer_of_semicolon_section() {
        // xi_2 = (0, -1, 0) => d xi_2 = (1, 0)
        let ctx = JetContext::new(1, 1, 2);
        let xi = JetSection::new(
            Base::Source,
            2,
            ctx,
            vec![((1, MultiIndex::from_dirs("1").unwrap()), e("-1"))],
        )
        .unwrap();
        let d = spencer(&xi);
        assert_eq!(
            d.entries[&(1, MultiIndex::zero(), 1)],
            e("1")
        );
        assert_eq!(
            d.entries[&(1, MultiIndex::from_dirs("1").unwrap(), 1)],
            e("0")
        );
    }

    #[test]
    fn spencer_vanishes_on_holonomic() {
        let ctx = JetContext::new(1, 1, 2);
        let xi = JetSection::holonomic(Base::Source, 2, ctx, &[e("x1^2")]).unwrap();
        assert!(xi.is_holonomic());
        assert_eq!(xi.get(1, &MultiIndex::from_dirs("1").unwrap()), e("2*x1"));
        assert_eq!(xi.get(1, &MultiIndex::from_dirs("11").unwrap()), e("2"));
    }

    #[test]
    fn spencer_direct_formula() {
        // xi_2 = (x, 0, 0) -> entries (1, 0)
        let ctx = JetContext::new(1, 1, 2);
        let xi = JetSection::new(
            Base::Source,
            2,
            ctx,
            vec![((1, MultiIndex::zero()), e("x1"))],
        )
        .unwrap();
        let d = spencer(&xi);
        assert_eq!(d.entries[&(1, MultiIndex::zero(), 1)], e("1"));
        assert_eq!(
            d.entries[&(1, MultiIndex::from_dirs("1").unwrap(), 1)],
            e("0")
        );
    }

    #[test]
    fn section_shape_is_validated() {
        let ctx = JetContext::new(1, 1, 1);
        // component index out of range
        assert!(JetSection::new(
            Base::Source,
            1,
            ctx,
            vec![((2, MultiIndex::zero()), e("1"))]
        )
        .is_err());
        // coefficient must be a function of x over the source
        assert!(JetSection::new(
            Base::Source,
            1,
            ctx,
            vec![((1, MultiIndex::zero()), e("y1"))]
        )
        .is_err());
    }
}
