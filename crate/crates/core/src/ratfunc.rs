//! Rational functions over Q in named variables, kept in a canonical form:
//! numerator and denominator coprime, denominator monic in graded-lex order.
//! Equality of values is therefore structural equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::One;

use crate::mpoly::{mpoly_gcd, MPoly, Var};
use crate::rat::Rat;

/// Errors from exact-arithmetic operations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExactError {
    /// A substitution turned a denominator into the zero polynomial.
    DenominatorVanishes,
    /// Division by the zero rational function.
    DivisionByZero,
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::DenominatorVanishes => f.write_str("denominator vanishes"),
            ExactError::DivisionByZero => f.write_str("division by zero"),
        }
    }
}

impl std::error::Error for ExactError {}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: MPoly::one(),
            den: MPoly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc {
            num: MPoly::constant(c),
            den: MPoly::one(),
        }
    }

    pub fn int(n: i64) -> Self {
        RatFunc::constant(Rat::from_integer(n.into()))
    }

    pub fn var(v: Var) -> Self {
        RatFunc {
            num: MPoly::var(v),
            den: MPoly::one(),
        }
    }

    pub fn var_named(name: &str) -> Self {
        RatFunc::var(Var::new(name))
    }

    pub fn from_poly(p: MPoly) -> Self {
        RatFunc {
            num: p,
            den: MPoly::one(),
        }
    }

    /// Builds `num/den` in canonical form. Panics if `den` is zero.
    pub fn new(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::reduce(num, den)
    }

    fn reduce(num: MPoly, den: MPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (mut num, mut den) = (num, den);
        if !den.is_constant() || !num.is_constant() {
            let g = mpoly_gcd(&num, &den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        // monic denominator
        let lc = den.leading_coeff();
        if !lc.is_one() {
            let inv = Rat::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs = self.num.vars();
        for v in self.den.vars() {
            if !vs.contains(&v) {
                vs.push(v);
            }
        }
        vs.sort();
        vs
    }

    pub fn contains_var(&self, v: &Var) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }

    pub fn inv(&self) -> Result<RatFunc, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i64) -> Result<RatFunc, ExactError> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut out = RatFunc::one();
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(out)
    }

    /// Quotient-rule partial derivative, canonical form.
    pub fn partial_derivative(&self, v: &Var) -> RatFunc {
        if !self.contains_var(v) {
            return RatFunc::zero();
        }
        let dn = self.num.partial_derivative(v);
        let dd = self.den.partial_derivative(v);
        let num = dn.mul(&self.den).sub(&self.num.mul(&dd));
        let den = self.den.mul(&self.den);
        Self::reduce(num, den)
    }

    /// Simultaneous substitution of variables by rational functions.
    /// Bindings for absent variables are ignored.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<Var, RatFunc>,
    ) -> Result<RatFunc, ExactError> {
        let num = subst_poly(&self.num, bindings);
        let den = subst_poly(&self.den, bindings);
        if den.is_zero() {
            return Err(ExactError::DenominatorVanishes);
        }
        Ok(&num / &den)
    }
}

/// Substitutes into a polynomial, producing a rational function.
fn subst_poly(p: &MPoly, bindings: &BTreeMap<Var, RatFunc>) -> RatFunc {
    let mut out = RatFunc::zero();
    for (m, c) in p.terms() {
        let mut term = RatFunc::constant(c.clone());
        for (v, e) in m.pairs() {
            let base = match bindings.get(v) {
                Some(r) => r.clone(),
                None => RatFunc::var(v.clone()),
            };
            term = &term * &base.pow(*e as i64).expect("non-negative power");
        }
        out = &out + &term;
    }
    out
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, other: &RatFunc) -> RatFunc {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RatFunc::reduce(num, den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, other: &RatFunc) -> RatFunc {
        let num = self
            .num
            .mul(&other.den)
            .sub(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RatFunc::reduce(num, den)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, other: &RatFunc) -> RatFunc {
        let num = self.num.mul(&other.num);
        let den = self.den.mul(&other.den);
        RatFunc::reduce(num, den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, other: &RatFunc) -> RatFunc {
        assert!(!other.is_zero(), "division by zero rational function");
        let num = self.num.mul(&other.den);
        let den = self.den.mul(&other.num);
        RatFunc::reduce(num, den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.num_terms() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            let n = if self.num.num_terms() > 1 {
                format!("({})", self.num)
            } else {
                format!("{}", self.num)
            };
            let d = if self.den.num_terms() > 1 {
                format!("({})", self.den)
            } else {
                format!("{}", self.den)
            };
            write!(f, "{n}/{d}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_expr;

    fn e(s: &str) -> RatFunc {
        parse_expr(s).unwrap()
    }

    #[test]
    fn canonical_reduction() {
        // (x^2 - 1)/(x - 1) = x + 1
        let f = e("(x1^2 - 1)/(x1 - 1)");
        assert_eq!(f, e("x1 + 1"));
        assert!(f.is_polynomial());
    }

    #[test]
    fn monic_denominator() {
        let f = e("x1/(2*x1 + 2)");
        assert_eq!(f.den().leading_coeff(), num_traits::One::one());
        assert_eq!(f, e("(1/2)*x1/(x1+1)"));
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dy (y1_1/y1) = -y1_1/y1^2
        let f = e("y1_1/y1");
        let d = f.partial_derivative(&Var::new("y1"));
        assert_eq!(d, e("-y1_1/y1^2"));
    }

    #[test]
    fn derivative_of_monomial() {
        // d/dy2 (y2 * y1_1) = y1_1
        let f = e("y2*y1_1");
        assert_eq!(f.partial_derivative(&Var::new("y2")), e("y1_1"));
        // absent variable
        assert!(e("x1^3").partial_derivative(&Var::new("y1")).is_zero());
    }

    #[test]
    fn substitution_basic() {
        let f = e("y1_1/y1");
        let mut b = BTreeMap::new();
        b.insert(Var::new("y1"), RatFunc::one());
        assert_eq!(f.substitute(&b).unwrap(), e("y1_1"));
    }

    #[test]
    fn substitution_pole() {
        let f = e("1/y1");
        let mut b = BTreeMap::new();
        b.insert(Var::new("y1"), RatFunc::zero());
        assert_eq!(f.substitute(&b), Err(ExactError::DenominatorVanishes));
    }

    #[test]
    fn cubic_invariant_under_moebius() {
        // f = (y^3 - 3y + 1)/(y^2 - y) is invariant under y -> 1 - 1/y
        let f = e("(y1^3 - 3*y1 + 1)/(y1^2 - y1)");
        let mut b = BTreeMap::new();
        b.insert(Var::new("y1"), e("1 - 1/y1"));
        assert_eq!(f.substitute(&b).unwrap(), f);
    }
}
