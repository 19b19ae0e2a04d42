//! Tensor-product splitting of a simple extension: factor the copied minimal
//! polynomial over the extension itself, read off the isolated isomorphisms,
//! and decide the Galois property.

use crate::mpoly::{MPoly, Var};
use crate::rat::Rat;

use super::factor::{extend_field, factor_ext};
use super::numberfield::{El, FieldH};
use super::poly::{resultant, Coef, Poly};
use super::GaloisError;

/// The factor and isomorphism data of `L (x)_K L` for `L = K[y]/(P)`.
#[derive(Clone, Debug)]
pub struct SplitResult {
    /// The extension `L = K(eta)`.
    pub field: FieldH,
    /// Irreducible monic factors of the copied polynomial over `L`; the
    /// first factor is `ybar - eta`.
    pub factors: Vec<Poly<El>>,
    /// Roots of the linear factors, `eta` first.
    pub roots_in_l: Vec<El>,
    /// One isomorphism image per linear factor: `sigma_i(eta)`; the first is
    /// the identity.
    pub isolated_isomorphisms: Vec<El>,
}

impl SplitResult {
    pub fn degree(&self) -> usize {
        self.factors.iter().map(Poly::degree).sum()
    }

    pub fn all_linear(&self) -> bool {
        self.factors.iter().all(|f| f.degree() == 1)
    }

    /// Applies the isomorphism `eta -> image` to an element of `L`.
    pub fn apply_isomorphism(&self, image: &El, x: &El) -> Result<El, GaloisError> {
        apply_generator_map(&self.field, image, x)
    }
}

/// Evaluates the residue polynomial of `x` at a new generator image.
pub fn apply_generator_map(field: &FieldH, image: &El, x: &El) -> Result<El, GaloisError> {
    let FieldH::Ext(nf) = field else {
        return Err(GaloisError::BadInput("expected an extension".into()));
    };
    let coords = x
        .coords()
        .ok_or_else(|| GaloisError::BadInput("expected an extension element".into()))?;
    let lifted: Vec<El> = coords
        .iter()
        .map(|c| field.embed(c))
        .collect::<Result<Vec<_>, _>>()?;
    let _ = nf;
    Ok(Poly::new(lifted).eval(image))
}

/// Splits `L (x)_K L` for `L = K[y]/(P)`, `P` irreducible over `K`:
/// factors the copy of `P` over `L`, labels the linear factor `ybar - eta`
/// first, and enforces the degree bookkeeping
/// `sum_i deg(factor_i) = |L/K|`.
pub fn split_tensor(
    base: &FieldH,
    minpoly: &Poly<El>,
    gen_name: &str,
) -> Result<SplitResult, GaloisError> {
    let field = extend_field(base, minpoly, gen_name)?;
    let eta = field.generator()?;
    let copied = Poly::new(
        minpoly
            .monic()
            .c
            .iter()
            .map(|c| field.embed(c))
            .collect::<Result<Vec<_>, _>>()?,
    );
    let fac = factor_ext(&copied, &field)?;
    let mut factors: Vec<Poly<El>> = Vec::new();
    let mut identity_factor = None;
    for (f, mult) in &fac.factors {
        if *mult != 1 {
            return Err(GaloisError::BadInput(
                "copied minimal polynomial must be squarefree".into(),
            ));
        }
        if f.degree() == 1 && f.c[0] == eta.neg() {
            identity_factor = Some(f.clone());
        } else {
            factors.push(f.clone());
        }
    }
    let Some(first) = identity_factor else {
        return Err(GaloisError::BadInput(
            "generator is not a root of its own minimal polynomial".into(),
        ));
    };
    factors.insert(0, first);
    let degree_sum: usize = factors.iter().map(Poly::degree).sum();
    if degree_sum != minpoly.degree() {
        return Err(GaloisError::BadInput("degree bookkeeping failed".into()));
    }

    let roots_in_l: Vec<El> = factors
        .iter()
        .filter(|f| f.degree() == 1)
        .map(|f| f.c[0].neg())
        .collect();
    Ok(SplitResult {
        field,
        factors,
        roots_in_l: roots_in_l.clone(),
        isolated_isomorphisms: roots_in_l,
    })
}

/// `L/K` is Galois iff the tensor product splits into `|L/K|` copies of `L`,
/// i.e. all factors are linear.
pub fn is_galois(base: &FieldH, minpoly: &Poly<El>) -> Result<bool, GaloisError> {
    if minpoly.degree() == 1 {
        return Ok(true);
    }
    Ok(split_tensor(base, minpoly, "eta")?.all_linear())
}

/// The difference of a polynomial at two points is divisible by the
/// difference of the points; returns the exact bivariate quotient
/// `(P(t) - P(s)) / (t - s)`.
pub fn difference_quotient(minpoly: &Poly<El>) -> Result<MPoly, GaloisError> {
    let s = Var::new("y1");
    let t = Var::new("by1");
    let mut p_s = MPoly::zero();
    let mut p_t = MPoly::zero();
    for (i, c) in minpoly.c.iter().enumerate() {
        let r = c
            .as_rat()
            .ok_or_else(|| GaloisError::BadInput("rational coefficients expected".into()))?;
        p_s = p_s.add(&MPoly::var(s.clone()).pow(i as u32).scale(r));
        p_t = p_t.add(&MPoly::var(t.clone()).pow(i as u32).scale(r));
    }
    let diff = p_t.sub(&p_s);
    let divisor = MPoly::var(t).sub(&MPoly::var(s));
    diff.div_exact(&divisor)
        .ok_or_else(|| GaloisError::BadInput("difference not divisible".into()))
}

/// The discriminant of `y^3 - w1 y^2 + w2 y - w3`, by the closed formula,
/// cross-checked against `-res(P, P')`.
pub fn cubic_discriminant(w1: &Rat, w2: &Rat, w3: &Rat) -> Rat {
    let sq = |x: &Rat| x * x;
    let cube = |x: &Rat| x * x * x;
    let formula = -Rat::from_integer(27.into()) * sq(w3)
        + Rat::from_integer(18.into()) * w1 * w2 * w3
        - Rat::from_integer(4.into()) * cube(w2)
        - Rat::from_integer(4.into()) * cube(w1) * w3
        + sq(&(w1 * w2));
    let p = Poly::new(vec![
        FieldH::Q.from_rat(-w3.clone()),
        FieldH::Q.from_rat(w2.clone()),
        FieldH::Q.from_rat(-w1.clone()),
        FieldH::Q.one(),
    ]);
    let res = resultant(&p, &p.derivative());
    let res_rat = res.as_rat().expect("rational resultant").clone();
    debug_assert_eq!(formula, -res_rat, "discriminant cross-check");
    formula
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::factor::qpoly;
    use crate::rat::rint;

    #[test]
    fn galois_cubic() {
        // Q[y]/(y^3 - 3y + 1): three linear factors, sigma(eta) = eta^2 - 2,
        // sigma^3 = id
        let split = split_tensor(&FieldH::Q, &qpoly(&[1, -3, 0, 1]), "eta").unwrap();
        assert_eq!(split.factors.len(), 3);
        assert!(split.all_linear());
        let field = split.field.clone();
        let eta = field.generator().unwrap();
        assert_eq!(split.isolated_isomorphisms[0], eta);
        let sigma = eta.mul(&eta).sub(&field.from_int(2));
        assert!(split.isolated_isomorphisms.contains(&sigma));
        // sigma has order 3
        let s2 = split.apply_isomorphism(&sigma, &sigma).unwrap();
        let s3 = split.apply_isomorphism(&sigma, &s2).unwrap();
        assert_ne!(s2, eta);
        assert_eq!(s3, eta);
        // the third root is -eta^2 - eta + 2, not the misprinted variant
        let third = sigma.neg().sub(&eta).add(&field.zero());
        assert_eq!(s2, third);
        assert!(is_galois(&FieldH::Q, &qpoly(&[1, -3, 0, 1])).unwrap());
    }

    #[test]
    fn non_galois_cubic() {
        // Q[y]/(y^3 - 2): one linear and one quadratic factor
        let split = split_tensor(&FieldH::Q, &qpoly(&[-2, 0, 0, 1]), "eta").unwrap();
        let degrees: Vec<usize> = split.factors.iter().map(Poly::degree).collect();
        assert_eq!(degrees, vec![1, 2]);
        assert!(!is_galois(&FieldH::Q, &qpoly(&[-2, 0, 0, 1])).unwrap());
        assert_eq!(split.degree(), 3);
    }

    #[test]
    fn quadratic_cyclotomic() {
        // Q[z]/(z^2 + z + 1): (zbar - z)(zbar + z + 1)
        let split = split_tensor(&FieldH::Q, &qpoly(&[1, 1, 1]), "z").unwrap();
        assert!(split.all_linear());
        let field = split.field.clone();
        let z = field.generator().unwrap();
        let other = z.neg().sub(&field.one());
        assert_eq!(split.isolated_isomorphisms, vec![z, other]);
    }

    #[test]
    fn degree_one_is_galois() {
        assert!(is_galois(&FieldH::Q, &qpoly(&[5, 1])).unwrap());
    }

    #[test]
    fn discriminants() {
        assert_eq!(
            cubic_discriminant(&rint(0), &rint(-3), &rint(-1)),
            rint(81)
        );
        assert_eq!(cubic_discriminant(&rint(0), &rint(1), &rint(-1)), rint(-31));
        assert_eq!(cubic_discriminant(&rint(0), &rint(0), &rint(0)), rint(0));
    }

    #[test]
    fn difference_quotient_of_cubic() {
        let q = difference_quotient(&qpoly(&[1, -3, 0, 1])).unwrap();
        // (t^3 - s^3 - 3(t - s)) / (t - s) = t^2 + ts + s^2 - 3
        let s = MPoly::var(Var::new("y1"));
        let t = MPoly::var(Var::new("by1"));
        let expect = t
            .pow(2)
            .add(&t.mul(&s))
            .add(&s.pow(2))
            .sub(&MPoly::constant(rint(3)));
        assert_eq!(q, expect);
    }
}
