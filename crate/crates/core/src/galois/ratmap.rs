//! Rational maps of the line over a number field, finite groups of them, and
//! the factorization check certifying a generating invariant.

use std::fmt;

use super::numberfield::{fmt_poly, El, FieldH};
use super::poly::{Coef, Poly};
use super::GaloisError;

/// A univariate rational map `y -> num(y)/den(y)` in canonical form
/// (numerator and denominator coprime, denominator monic).
#[derive(Clone, Debug)]
pub struct RatMap {
    field: FieldH,
    num: Poly<El>,
    den: Poly<El>,
}

impl PartialEq for RatMap {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl RatMap {
    pub fn new(field: &FieldH, num: Poly<El>, den: Poly<El>) -> Result<Self, GaloisError> {
        if den.is_zero() {
            return Err(GaloisError::BadInput("zero denominator".into()));
        }
        Ok(Self::reduce(field.clone(), num, den))
    }

    fn reduce(field: FieldH, num: Poly<El>, den: Poly<El>) -> Self {
        if num.is_zero() {
            return RatMap {
                field: field.clone(),
                num: Poly::zero(),
                den: Poly::constant(field.one()),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() >= 1 {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        } else {
            (num, den)
        };
        let inv = den.lead().unwrap().inv().expect("nonzero");
        num = num.scale(&inv);
        den = den.scale(&inv);
        RatMap { field, num, den }
    }

    pub fn field(&self) -> &FieldH {
        &self.field
    }

    pub fn identity(field: &FieldH) -> Self {
        RatMap {
            field: field.clone(),
            num: Poly::x(&field.one()),
            den: Poly::constant(field.one()),
        }
    }

    pub fn from_poly(field: &FieldH, p: Poly<El>) -> Self {
        RatMap {
            field: field.clone(),
            num: p,
            den: Poly::constant(field.one()),
        }
    }

    pub fn num(&self) -> &Poly<El> {
        &self.num
    }

    pub fn den(&self) -> &Poly<El> {
        &self.den
    }

    pub fn is_identity(&self) -> bool {
        *self == RatMap::identity(&self.field)
    }

    /// `(self o g)(y) = self(g(y))`.
    pub fn compose(&self, g: &RatMap) -> RatMap {
        let eval_pair = |p: &Poly<El>| -> (Poly<El>, u32) {
            // p(n/d) = (sum p_i n^i d^(deg-i)) / d^deg
            let d = p.degree() as u32;
            let mut acc = Poly::zero();
            for (i, c) in p.c.iter().enumerate() {
                if Coef::is_zero(c) {
                    continue;
                }
                let term = g
                    .num
                    .pow(i as u32)
                    .mul(&g.den.pow(d - i as u32))
                    .scale(c);
                acc = acc.add(&term);
            }
            (acc, d)
        };
        let (pn, dn) = eval_pair(&self.num);
        let (qn, dq) = eval_pair(&self.den);
        // (pn / den^dn) / (qn / den^dq) = pn * den^dq / (qn * den^dn)
        let num = pn.mul(&g.den.pow(dq));
        let den = qn.mul(&g.den.pow(dn));
        Self::reduce(self.field.clone(), num, den)
    }

    pub fn add(&self, o: &RatMap) -> RatMap {
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        Self::reduce(self.field.clone(), num, self.den.mul(&o.den))
    }

    pub fn sub(&self, o: &RatMap) -> RatMap {
        self.add(&o.neg_map())
    }

    pub fn mul_map(&self, o: &RatMap) -> RatMap {
        Self::reduce(
            self.field.clone(),
            self.num.mul(&o.num),
            self.den.mul(&o.den),
        )
    }

    pub fn neg_map(&self) -> RatMap {
        RatMap {
            field: self.field.clone(),
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn inv_map(&self) -> Option<RatMap> {
        if self.num.is_zero() {
            return None;
        }
        Some(Self::reduce(
            self.field.clone(),
            self.den.clone(),
            self.num.clone(),
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

/// Rational functions form a field; this powers polynomial arithmetic with
/// rational-function coefficients.
impl Coef for RatMap {
    fn zero_like(&self) -> Self {
        RatMap {
            field: self.field.clone(),
            num: Poly::zero(),
            den: Poly::constant(self.field.one()),
        }
    }
    fn one_like(&self) -> Self {
        RatMap {
            field: self.field.clone(),
            num: Poly::constant(self.field.one()),
            den: Poly::constant(self.field.one()),
        }
    }
    fn is_zero(&self) -> bool {
        RatMap::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatMap::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatMap::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatMap::mul_map(self, o)
    }
    fn neg(&self) -> Self {
        self.neg_map()
    }
    fn inv(&self) -> Option<Self> {
        self.inv_map()
    }
}

impl fmt::Display for RatMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = fmt_poly(&self.num, "y");
        if self.den.is_constant() && self.den.c.first().map(Coef::is_zero) == Some(false) {
            write!(f, "{n}")
        } else {
            write!(f, "({n})/({})", fmt_poly(&self.den, "y"))
        }
    }
}

/// A finite set of rational maps claimed to be a group under composition.
#[derive(Clone, Debug)]
pub struct FiniteRationalGroup {
    pub field: FieldH,
    pub elements: Vec<RatMap>,
}

/// Closure/identity/inverse data: `table[i][j]` is the index of
/// `elements[i] o elements[j]`.
#[derive(Clone, Debug)]
pub struct GroupReport {
    pub order: usize,
    pub identity_index: usize,
    pub table: Vec<Vec<usize>>,
}

/// Verifies the group axioms under exact composition and returns the Cayley
/// table.
pub fn verify_group(g: &FiniteRationalGroup) -> Result<GroupReport, GaloisError> {
    let n = g.elements.len();
    let identity_index = g
        .elements
        .iter()
        .position(|e| e.is_identity())
        .ok_or_else(|| GaloisError::NotAGroup("identity map missing".into()))?;
    let mut table = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            let composite = g.elements[i].compose(&g.elements[j]);
            let k = g
                .elements
                .iter()
                .position(|e| *e == composite)
                .ok_or_else(|| {
                    GaloisError::NotAGroup(format!(
                        "composition of elements {i} and {j} escapes the set"
                    ))
                })?;
            table[i][j] = k;
        }
    }
    for i in 0..n {
        if !table[i].contains(&identity_index) {
            return Err(GaloisError::NotAGroup(format!("element {i} has no inverse")));
        }
    }
    Ok(GroupReport {
        order: n,
        identity_index,
        table,
    })
}

/// Verdict of the generating-invariant check.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    /// `phi(g(y)) = phi(y)` for every group element.
    pub invariant_under_all: bool,
    /// The numerator of `phi(ybar) - phi(y)` equals
    /// `prod_g (ybar - g(y))` up to a unit of the function field.
    pub linear_factor_product: bool,
}

impl InvariantReport {
    pub fn passes(&self) -> bool {
        self.invariant_under_all && self.linear_factor_product
    }
}

/// Checks that `phi` is the generating invariant of the action: it is fixed
/// by every group element, and the two-copy difference splits into exactly
/// the orbit's linear factors.
pub fn generating_invariant_check(
    g: &FiniteRationalGroup,
    phi: &RatMap,
) -> Result<InvariantReport, GaloisError> {
    let invariant_under_all = g.elements.iter().all(|e| phi.compose(e) == *phi);

    // phi(ybar) - phi(y) as a polynomial in ybar over the rational function
    // field in y, made monic
    let scalar = |p: &Poly<El>| RatMap::from_poly(&g.field, p.clone());
    let mut lhs = Poly::<RatMap>::zero();
    let den_y = scalar(phi.den());
    let num_y = scalar(phi.num());
    for (i, c) in phi.num().c.iter().enumerate() {
        let coeff = RatMap::from_poly(&g.field, Poly::constant(c.clone())).mul_map(&den_y);
        lhs = lhs.add(&mono(&g.field, coeff, i));
    }
    for (i, c) in phi.den().c.iter().enumerate() {
        let coeff = RatMap::from_poly(&g.field, Poly::constant(c.clone())).mul_map(&num_y);
        lhs = lhs.sub(&mono(&g.field, coeff, i));
    }
    let lhs = lhs.monic();

    let mut rhs = Poly::constant(RatMap::identity(&g.field).one_like());
    for e in &g.elements {
        let factor = Poly::new(vec![e.neg_map(), RatMap::identity(&g.field).one_like()]);
        rhs = rhs.mul(&factor);
    }
    let linear_factor_product = lhs == rhs;
    Ok(InvariantReport {
        invariant_under_all,
        linear_factor_product,
    })
}

fn mono(field: &FieldH, coeff: RatMap, power: usize) -> Poly<RatMap> {
    let zero = RatMap::from_poly(field, Poly::zero());
    let mut c = vec![zero; power + 1];
    c[power] = coeff;
    Poly::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::factor::{extend_field, qpoly};

    fn qmap(num: &[i64], den: &[i64]) -> RatMap {
        RatMap::new(
            &FieldH::Q,
            Poly::new(num.iter().map(|&k| FieldH::Q.from_int(k)).collect()),
            Poly::new(den.iter().map(|&k| FieldH::Q.from_int(k)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn cyclic_cubic_group() {
        // {y, 1 - 1/y, 1/(1-y)} is cyclic of order 3
        let g = FiniteRationalGroup {
            field: FieldH::Q,
            elements: vec![
                RatMap::identity(&FieldH::Q),
                qmap(&[-1, 1], &[0, 1]),
                qmap(&[1], &[1, -1]),
            ],
        };
        let report = verify_group(&g).unwrap();
        assert_eq!(report.order, 3);
        assert_eq!(report.identity_index, 0);
        // sigma^2 = the third element
        assert_eq!(report.table[1][1], 2);
        assert_eq!(report.table[1][2], 0);
    }

    #[test]
    fn order_two_group_and_invariant() {
        // {y, 1/y} with phi = y + 1/y = (y^2+1)/y
        let g = FiniteRationalGroup {
            field: FieldH::Q,
            elements: vec![RatMap::identity(&FieldH::Q), qmap(&[1], &[0, 1])],
        };
        assert_eq!(verify_group(&g).unwrap().order, 2);
        let phi = qmap(&[1, 0, 1], &[0, 1]);
        let report = generating_invariant_check(&g, &phi).unwrap();
        assert!(report.passes());
    }

    #[test]
    fn cubic_generating_invariant() {
        // phi = (y^3 - 3y + 1)/(y^2 - y) for the cyclic cubic action
        let g = FiniteRationalGroup {
            field: FieldH::Q,
            elements: vec![
                RatMap::identity(&FieldH::Q),
                qmap(&[-1, 1], &[0, 1]),
                qmap(&[1], &[1, -1]),
            ],
        };
        let phi = qmap(&[1, -3, 0, 1], &[0, -1, 1]);
        let report = generating_invariant_check(&g, &phi).unwrap();
        assert!(report.passes());
        // a non-invariant fails the first check
        let bad = qmap(&[0, 1, 1], &[1]);
        assert!(!generating_invariant_check(&g, &bad).unwrap().invariant_under_all);
    }

    #[test]
    fn quartic_group_over_gaussian_field() {
        // {y, -y, i/y, -i/y} with phi = (y^4 - 1)/y^2
        let field = extend_field(&FieldH::Q, &qpoly(&[1, 0, 1]), "i").unwrap();
        let i = field.generator().unwrap();
        let one = field.one();
        let y = Poly::new(vec![field.zero(), one.clone()]);
        let mk = |num: Poly<El>, den: Poly<El>| RatMap::new(&field, num, den).unwrap();
        let g = FiniteRationalGroup {
            field: field.clone(),
            elements: vec![
                RatMap::identity(&field),
                mk(y.neg(), Poly::constant(one.clone())),
                mk(Poly::constant(i.clone()), y.clone()),
                mk(Poly::constant(i.neg()), y.clone()),
            ],
        };
        let report = verify_group(&g).unwrap();
        assert_eq!(report.order, 4);
        let phi = mk(
            Poly::new(vec![
                field.from_int(-1),
                field.zero(),
                field.zero(),
                field.zero(),
                field.one(),
            ]),
            Poly::new(vec![field.zero(), field.zero(), field.one()]),
        );
        assert!(generating_invariant_check(&g, &phi).unwrap().passes());
    }

    #[test]
    fn not_a_group_reported() {
        let g = FiniteRationalGroup {
            field: FieldH::Q,
            elements: vec![RatMap::identity(&FieldH::Q), qmap(&[1, 1], &[1])],
        };
        assert!(matches!(
            verify_group(&g),
            Err(GaloisError::NotAGroup(_))
        ));
    }
}
