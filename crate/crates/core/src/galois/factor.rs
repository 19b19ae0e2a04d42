//! Complete factorization over Q and over simple extensions (norm method).

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::rat::Rat;

use super::numberfield::{El, FieldH, NumberField};
use super::poly::{sylvester_resultant, Coef, Poly};
use super::zassenhaus;
use super::GaloisError;

/// Constant times a product of monic irreducible factors with multiplicities.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub constant: El,
    pub factors: Vec<(Poly<El>, u32)>,
}

impl Factorization {
    /// Multiplies back; used for the enforced product checks.
    pub fn product(&self) -> Poly<El> {
        let mut out = Poly::constant(self.constant.clone());
        for (f, k) in &self.factors {
            out = out.mul(&f.pow(*k));
        }
        out
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Yun squarefree decomposition over a field of characteristic zero.
fn squarefree_decomposition(f: &Poly<El>) -> Vec<(Poly<El>, u32)> {
    let mut out = Vec::new();
    let g = f.gcd(&f.derivative());
    if g.is_constant() {
        out.push((f.monic(), 1));
        return out;
    }
    let mut w = f.div_exact(&g).expect("gcd divides");
    let mut y = f.derivative().div_exact(&g).expect("gcd divides");
    let mut z = y.sub(&w.derivative());
    let mut i = 1u32;
    while !w.is_constant() {
        let gi = w.gcd(&z);
        if gi.degree() >= 1 {
            out.push((gi.monic(), i));
        }
        w = w.div_exact(&gi).expect("gcd divides");
        y = z.div_exact(&gi).expect("gcd divides");
        z = y.sub(&w.derivative());
        i += 1;
    }
    out
}

fn rat_poly_to_int(f: &Poly<El>) -> Vec<BigInt> {
    // clear denominators, take the primitive part, positive lead
    let mut den = BigInt::one();
    for c in &f.c {
        let r = c.as_rat().expect("rational coefficients");
        den = den.lcm(r.denom());
    }
    let ints: Vec<BigInt> = f
        .c
        .iter()
        .map(|c| {
            let r = c.as_rat().unwrap();
            r.numer() * (&den / r.denom())
        })
        .collect();
    let mut prim = zassenhaus::primitive_part(&ints);
    if prim.last().map(|c| c.is_negative()).unwrap_or(false) {
        prim = prim.iter().map(|c| -c).collect();
    }
    prim
}

fn int_poly_to_monic(f: &[BigInt]) -> Poly<El> {
    let lead = f.last().expect("nonzero").clone();
    Poly::new(
        f.iter()
            .map(|c| FieldH::Q.from_rat(Rat::new(c.clone(), lead.clone())))
            .collect(),
    )
}

/// Deterministic order: by degree, then lexicographically on the flattened
/// rational coordinates of the coefficients from the constant term up.
fn sort_factors(factors: &mut [(Poly<El>, u32)]) {
    factors.sort_by(|a, b| {
        a.0.degree().cmp(&b.0.degree()).then_with(|| {
            let fa: Vec<Rat> = a.0.c.iter().flat_map(|c| c.q_coordinates()).collect();
            let fb: Vec<Rat> = b.0.c.iter().flat_map(|c| c.q_coordinates()).collect();
            fa.partial_cmp(&fb).unwrap_or(std::cmp::Ordering::Equal)
        })
    });
}

/// Factorization into monic irreducibles over Q.
pub fn factor_q(f: &Poly<El>) -> Result<Factorization, GaloisError> {
    if f.is_zero() {
        return Err(GaloisError::BadInput("cannot factor the zero polynomial".into()));
    }
    for c in &f.c {
        if c.as_rat().is_none() {
            return Err(GaloisError::BadInput("expected rational coefficients".into()));
        }
    }
    let constant = f.lead().unwrap().clone();
    if f.is_constant() {
        return Ok(Factorization {
            constant,
            factors: Vec::new(),
        });
    }
    let mut factors: Vec<(Poly<El>, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(f) {
        if part.degree() == 0 {
            continue;
        }
        let prim = rat_poly_to_int(&part);
        for irr in zassenhaus::factor_primitive_squarefree(&prim) {
            factors.push((int_poly_to_monic(&irr), mult));
        }
    }
    sort_factors(&mut factors);
    let result = Factorization { constant, factors };
    debug_assert!(result.product() == *f, "factor product check");
    Ok(result)
}

/// Lifts a polynomial over the base field into the extension.
fn embed_poly(f: &Poly<El>, target: &FieldH) -> Result<Poly<El>, GaloisError> {
    Ok(Poly::new(
        f.c.iter()
            .map(|c| target.embed(c))
            .collect::<Result<Vec<_>, _>>()?,
    ))
}

/// The norm of `g` from `L[y]` down to `K[y]`: the resultant in `z` of the
/// minimal polynomial and `g` with the generator replaced by `z`.
fn norm_poly(g: &Poly<El>, nf: &NumberField) -> Poly<El> {
    let base_zero = nf.base.zero();
    // entry [j][i]: coefficient of z^j y^i over K
    let dm = nf.minpoly.degree();
    let mut z_coeffs: Vec<Poly<El>> = vec![Poly::zero(); dm.max(1)];
    for (i, c) in g.c.iter().enumerate() {
        let coords = c.coords().expect("element of an extension");
        for (j, cj) in coords.iter().enumerate() {
            if Coef::is_zero(cj) {
                continue;
            }
            // add cj * y^i to z_coeffs[j]
            let mut mono = vec![base_zero.zero_like(); i + 1];
            mono[i] = cj.clone();
            z_coeffs[j] = z_coeffs[j].add(&Poly::new(mono));
        }
    }
    while z_coeffs.last().map(Poly::is_zero).unwrap_or(false) && z_coeffs.len() > 1 {
        z_coeffs.pop();
    }
    // minimal polynomial as constants of K[y]
    let m_coeffs: Vec<Poly<El>> = nf
        .minpoly
        .c
        .iter()
        .map(|c| {
            if Coef::is_zero(c) {
                Poly::zero()
            } else {
                Poly::constant(c.clone())
            }
        })
        .collect();
    let one = Poly::constant(nf.base.one());
    if z_coeffs.len() == 1 {
        // no generator in g: norm = g^deg(m)
        return z_coeffs[0].pow(dm as u32);
    }
    sylvester_resultant(&m_coeffs, &z_coeffs, &one)
}

/// Factorization into monic irreducibles over a number field, by the norm
/// (resultant) method reduced to the base field.
pub fn factor_ext(f: &Poly<El>, field: &FieldH) -> Result<Factorization, GaloisError> {
    let nf = match field {
        FieldH::Q => return factor_q(f),
        FieldH::Ext(nf) => nf.clone(),
    };
    if f.is_zero() {
        return Err(GaloisError::BadInput("cannot factor the zero polynomial".into()));
    }
    let constant = f.lead().unwrap().clone();
    if f.is_constant() {
        return Ok(Factorization {
            constant,
            factors: Vec::new(),
        });
    }
    let eta = field.generator()?;
    let mut factors: Vec<(Poly<El>, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(f) {
        if part.degree() == 0 {
            continue;
        }
        if part.degree() == 1 {
            factors.push((part.monic(), mult));
            continue;
        }
        // shift until the norm is squarefree
        let mut chosen = None;
        for s in 0..64i64 {
            let shift = Poly::new(vec![
                eta.mul(&field.from_int(-s)),
                field.one(),
            ]);
            let shifted = part.compose(&shift);
            let norm = norm_poly(&shifted, &nf);
            if norm.gcd(&norm.derivative()).is_constant() {
                chosen = Some((s, norm));
                break;
            }
        }
        let Some((s, norm)) = chosen else {
            return Err(GaloisError::BadInput(
                "no squarefree norm shift found".into(),
            ));
        };
        let norm_factors = factor_ext(&norm, &nf.base)?;
        if norm_factors.factors.len() == 1 {
            factors.push((part.monic(), mult));
            continue;
        }
        let unshift = Poly::new(vec![eta.mul(&field.from_int(s)), field.one()]);
        for (ni, _) in &norm_factors.factors {
            let lifted = embed_poly(ni, field)?;
            let candidate = part.gcd(&lifted.compose(&unshift));
            if candidate.degree() >= 1 {
                factors.push((candidate.monic(), mult));
            }
        }
    }
    sort_factors(&mut factors);
    let result = Factorization { constant, factors };
    if result.product() != *f {
        return Err(GaloisError::BadInput(
            "internal: factor product check failed".into(),
        ));
    }
    Ok(result)
}

/// Builds `base(gen)` after verifying the minimal polynomial is monic
/// irreducible over the base.
pub fn extend_field(
    base: &FieldH,
    minpoly: &Poly<El>,
    gen_name: &str,
) -> Result<FieldH, GaloisError> {
    if minpoly.degree() < 1 {
        return Err(GaloisError::BadInput("minimal polynomial must be nonconstant".into()));
    }
    let monic = minpoly.monic();
    let fac = factor_ext(&monic, base)?;
    if !fac.is_irreducible() {
        return Err(GaloisError::Reducible(format!(
            "minimal polynomial splits into {} factors",
            fac.factors.len()
        )));
    }
    Ok(FieldH::Ext(Arc::new(NumberField {
        base: base.clone(),
        minpoly: monic,
        gen_name: gen_name.to_string(),
    })))
}

/// Convenience: the rationals as a polynomial coefficient list.
pub fn qpoly(coeffs: &[i64]) -> Poly<El> {
    Poly::new(coeffs.iter().map(|&k| FieldH::Q.from_int(k)).collect())
}

/// Polynomial over a field from rational coefficient values.
pub fn poly_over(field: &FieldH, coeffs: &[Rat]) -> Poly<El> {
    Poly::new(coeffs.iter().map(|r| field.from_rat(r.clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rint;

    #[test]
    fn factor_q_basics() {
        // y^3 - 1 = (y - 1)(y^2 + y + 1)
        let f = qpoly(&[-1, 0, 0, 1]);
        let fac = factor_q(&f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.factors[0].0, qpoly(&[-1, 1]));
        assert_eq!(fac.factors[1].0, qpoly(&[1, 1, 1]));
        assert_eq!(fac.product(), f);
        // y^8 - 2 irreducible
        let g = qpoly(&[-2, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert!(factor_q(&g).unwrap().is_irreducible());
        // a^8 - 1 splits into 4
        let h = qpoly(&[-1, 0, 0, 0, 0, 0, 0, 0, 1]);
        let fh = factor_q(&h).unwrap();
        let degrees: Vec<usize> = fh.factors.iter().map(|(p, _)| p.degree()).collect();
        assert_eq!(degrees, vec![1, 1, 2, 4]);
    }

    #[test]
    fn factor_q_with_multiplicity_and_constant() {
        // 6 (y-1)^2 (y+2)
        let f = qpoly(&[-1, 1]).pow(2).mul(&qpoly(&[2, 1])).scale(&FieldH::Q.from_int(6));
        let fac = factor_q(&f).unwrap();
        assert_eq!(fac.constant, FieldH::Q.from_int(6));
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn cube_root_two_extension() {
        // over Q(eta), eta^3 = 2: y^3 - 2 = (y - eta)(y^2 + eta y + eta^2)
        let field = extend_field(&FieldH::Q, &qpoly(&[-2, 0, 0, 1]), "eta").unwrap();
        let eta = field.generator().unwrap();
        let f = Poly::new(vec![
            field.from_int(-2),
            field.zero(),
            field.zero(),
            field.one(),
        ]);
        let fac = factor_ext(&f, &field).unwrap();
        assert_eq!(fac.factors.len(), 2);
        let linear = &fac.factors[0].0;
        assert_eq!(linear.degree(), 1);
        assert_eq!(linear.c[0], eta.neg());
        let quad = &fac.factors[1].0;
        assert_eq!(quad.degree(), 2);
        assert_eq!(quad.c[1], eta);
        assert_eq!(quad.c[0], eta.mul(&eta));
    }

    #[test]
    fn galois_cubic_splits_completely() {
        // over Q(eta), eta^3 = 3 eta - 1: three linear factors with roots
        // eta, eta^2 - 2, and -eta^2 - eta + 2 (root sum zero)
        let field = extend_field(&FieldH::Q, &qpoly(&[1, -3, 0, 1]), "eta").unwrap();
        let eta = field.generator().unwrap();
        let f = Poly::new(vec![
            field.from_int(1),
            field.from_int(-3),
            field.zero(),
            field.one(),
        ]);
        let fac = factor_ext(&f, &field).unwrap();
        assert_eq!(fac.factors.len(), 3);
        let mut roots: Vec<El> = fac
            .factors
            .iter()
            .map(|(p, _)| p.c[0].neg())
            .collect();
        let e2 = eta.mul(&eta);
        let expected = vec![
            eta.clone(),
            e2.sub(&field.from_int(2)),
            e2.neg().sub(&eta).add(&field.from_int(2)),
        ];
        for r in &expected {
            assert!(roots.contains(r), "missing root {r}");
        }
        // root sum is zero
        let sum = roots.drain(..).fold(field.zero(), |a, b| a.add(&b));
        assert!(Coef::is_zero(&sum));
    }

    #[test]
    fn quadratic_over_gaussian() {
        // y^2 + 1 over Q(i) splits
        let field = extend_field(&FieldH::Q, &qpoly(&[1, 0, 1]), "i").unwrap();
        let f = Poly::new(vec![field.one(), field.zero(), field.one()]);
        let fac = factor_ext(&f, &field).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert!(fac.factors.iter().all(|(p, _)| p.degree() == 1));
    }

    #[test]
    fn irreducibility_check_rejects_reducible() {
        assert!(extend_field(&FieldH::Q, &qpoly(&[-1, 0, 0, 1]), "w").is_err());
    }

    #[test]
    fn deterministic_order() {
        let f = qpoly(&[-1, 0, 0, 0, 0, 0, 0, 0, 1]);
        let a = factor_q(&f).unwrap();
        let b = factor_q(&f).unwrap();
        let fa: Vec<String> = a.factors.iter().map(|(p, _)| format!("{p:?}")).collect();
        let fb: Vec<String> = b.factors.iter().map(|(p, _)| format!("{p:?}")).collect();
        assert_eq!(fa, fb);
        let _ = rint(0);
    }
}
