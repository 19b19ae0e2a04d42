//! Simple algebraic extensions of Q and towers of them. Elements are residue
//! polynomials modulo the minimal polynomial; inverses come from the extended
//! Euclidean algorithm, so every nonzero element is a unit.

use std::fmt;
use std::sync::Arc;

use crate::rat::{fmt_rat, Rat};

use super::poly::{Coef, Poly};
use super::GaloisError;

/// A simple extension `base(gen)` with `minpoly(gen) = 0`.
#[derive(Clone, Debug)]
pub struct NumberField {
    pub base: FieldH,
    /// Monic irreducible polynomial over the base.
    pub minpoly: Poly<El>,
    pub gen_name: String,
}

/// Handle to a coefficient field: the rationals or an extension.
#[derive(Clone, Debug)]
pub enum FieldH {
    Q,
    Ext(Arc<NumberField>),
}

impl PartialEq for FieldH {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (FieldH::Q, FieldH::Q) => true,
            (FieldH::Ext(a), FieldH::Ext(b)) => {
                Arc::ptr_eq(a, b)
                    || (a.gen_name == b.gen_name
                        && a.base == b.base
                        && a.minpoly == b.minpoly)
            }
            _ => false,
        }
    }
}

impl FieldH {
    pub fn degree_over_base(&self) -> usize {
        match self {
            FieldH::Q => 1,
            FieldH::Ext(nf) => nf.minpoly.degree(),
        }
    }

    /// Dimension over Q of the whole tower.
    pub fn absolute_degree(&self) -> usize {
        match self {
            FieldH::Q => 1,
            FieldH::Ext(nf) => nf.minpoly.degree() * nf.base.absolute_degree(),
        }
    }

    pub fn zero(&self) -> El {
        match self {
            FieldH::Q => El {
                f: FieldH::Q,
                rep: Rep::Q(num_traits::Zero::zero()),
            },
            FieldH::Ext(nf) => El {
                f: self.clone(),
                rep: Rep::Ext(vec![nf.base.zero(); nf.minpoly.degree()]),
            },
        }
    }

    pub fn one(&self) -> El {
        self.from_rat(num_traits::One::one())
    }

    pub fn from_rat(&self, r: Rat) -> El {
        match self {
            FieldH::Q => El {
                f: FieldH::Q,
                rep: Rep::Q(r),
            },
            FieldH::Ext(nf) => {
                let mut v = vec![nf.base.zero(); nf.minpoly.degree()];
                v[0] = nf.base.from_rat(r);
                El {
                    f: self.clone(),
                    rep: Rep::Ext(v),
                }
            }
        }
    }

    pub fn from_int(&self, n: i64) -> El {
        self.from_rat(Rat::from_integer(n.into()))
    }

    /// The generator of the top extension; errors on Q.
    pub fn generator(&self) -> Result<El, GaloisError> {
        match self {
            FieldH::Q => Err(GaloisError::BadInput("Q has no generator".into())),
            FieldH::Ext(nf) => {
                let d = nf.minpoly.degree();
                let mut v = vec![nf.base.zero(); d];
                if d == 1 {
                    // degree-1 extension: the generator is -constant term
                    v[0] = nf.minpoly.c[0].neg();
                } else {
                    v[1] = nf.base.one();
                }
                Ok(El {
                    f: self.clone(),
                    rep: Rep::Ext(v),
                })
            }
        }
    }

    /// Embeds an element of the base field.
    pub fn embed(&self, e: &El) -> Result<El, GaloisError> {
        match self {
            FieldH::Q => {
                if e.f == FieldH::Q {
                    Ok(e.clone())
                } else {
                    Err(GaloisError::BadInput("cannot embed extension into Q".into()))
                }
            }
            FieldH::Ext(nf) => {
                if e.f == *self {
                    return Ok(e.clone());
                }
                let lifted = nf.base.embed(e)?;
                let mut v = vec![nf.base.zero(); nf.minpoly.degree()];
                v[0] = lifted;
                Ok(El {
                    f: self.clone(),
                    rep: Rep::Ext(v),
                })
            }
        }
    }

    /// Element from residue coordinates over the base (low degree first).
    pub fn from_coords(&self, coords: Vec<El>) -> Result<El, GaloisError> {
        match self {
            FieldH::Q => Err(GaloisError::BadInput("Q has no coordinates".into())),
            FieldH::Ext(nf) => {
                let d = nf.minpoly.degree();
                if coords.len() > d {
                    return Err(GaloisError::BadInput("too many coordinates".into()));
                }
                let mut v = coords;
                while v.len() < d {
                    v.push(nf.base.zero());
                }
                Ok(El {
                    f: self.clone(),
                    rep: Rep::Ext(v),
                })
            }
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
enum Rep {
    Q(Rat),
    /// Residue coordinates over the base field, length = degree of minpoly.
    Ext(Vec<El>),
}

/// An element of a number field (or of Q), carrying its field handle.
#[derive(Clone, Debug)]
pub struct El {
    f: FieldH,
    rep: Rep,
}

impl PartialEq for El {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep
    }
}

impl El {
    pub fn field(&self) -> &FieldH {
        &self.f
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match &self.rep {
            Rep::Q(r) => Some(r),
            Rep::Ext(_) => None,
        }
    }

    pub fn coords(&self) -> Option<&[El]> {
        match &self.rep {
            Rep::Q(_) => None,
            Rep::Ext(v) => Some(v),
        }
    }

    /// Residue coordinates as a polynomial over the base field.
    fn as_base_poly(&self) -> Poly<El> {
        match &self.rep {
            Rep::Q(_) => panic!("rational has no base polynomial"),
            Rep::Ext(v) => Poly::new(v.clone()),
        }
    }

    fn from_base_poly(f: &FieldH, p: Poly<El>) -> El {
        let FieldH::Ext(nf) = f else {
            panic!("not an extension")
        };
        let d = nf.minpoly.degree();
        let mut v = p.c;
        assert!(v.len() <= d, "unreduced representative");
        while v.len() < d {
            v.push(nf.base.zero());
        }
        El {
            f: f.clone(),
            rep: Rep::Ext(v),
        }
    }

    /// Flattens to coordinates over Q w.r.t. the product power basis of the
    /// tower, low tower-level fastest.
    pub fn q_coordinates(&self) -> Vec<Rat> {
        match &self.rep {
            Rep::Q(r) => vec![r.clone()],
            Rep::Ext(v) => v.iter().flat_map(|c| c.q_coordinates()).collect(),
        }
    }
}

impl Coef for El {
    fn zero_like(&self) -> Self {
        self.f.zero()
    }
    fn one_like(&self) -> Self {
        self.f.one()
    }
    fn is_zero(&self) -> bool {
        match &self.rep {
            Rep::Q(r) => num_traits::Zero::is_zero(r),
            Rep::Ext(v) => v.iter().all(Coef::is_zero),
        }
    }
    fn add(&self, o: &Self) -> Self {
        debug_assert!(self.f == o.f, "field mismatch");
        match (&self.rep, &o.rep) {
            (Rep::Q(a), Rep::Q(b)) => El {
                f: FieldH::Q,
                rep: Rep::Q(a + b),
            },
            (Rep::Ext(a), Rep::Ext(b)) => El {
                f: self.f.clone(),
                rep: Rep::Ext(a.iter().zip(b).map(|(x, y)| x.add(y)).collect()),
            },
            _ => panic!("field mismatch"),
        }
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        debug_assert!(self.f == o.f, "field mismatch");
        match (&self.rep, &o.rep) {
            (Rep::Q(a), Rep::Q(b)) => El {
                f: FieldH::Q,
                rep: Rep::Q(a * b),
            },
            (Rep::Ext(_), Rep::Ext(_)) => {
                let FieldH::Ext(nf) = &self.f else { unreachable!() };
                let prod = self.as_base_poly().mul(&o.as_base_poly());
                let (_, r) = prod.divrem(&nf.minpoly);
                El::from_base_poly(&self.f, r)
            }
            _ => panic!("field mismatch"),
        }
    }
    fn neg(&self) -> Self {
        match &self.rep {
            Rep::Q(r) => El {
                f: FieldH::Q,
                rep: Rep::Q(-r.clone()),
            },
            Rep::Ext(v) => El {
                f: self.f.clone(),
                rep: Rep::Ext(v.iter().map(Coef::neg).collect()),
            },
        }
    }
    fn inv(&self) -> Option<Self> {
        if Coef::is_zero(self) {
            return None;
        }
        match &self.rep {
            Rep::Q(r) => Some(El {
                f: FieldH::Q,
                rep: Rep::Q(Rat::from_integer(1.into()) / r.clone()),
            }),
            Rep::Ext(_) => {
                let FieldH::Ext(nf) = &self.f else { unreachable!() };
                // s*self + t*minpoly = 1 in base[x]
                let (g, s, _) = self.as_base_poly().extended_gcd(&nf.minpoly);
                debug_assert!(g.degree() == 0, "minimal polynomial must be irreducible");
                let ginv = g.c[0].inv().expect("nonzero gcd");
                let (_, r) = s.scale(&ginv).divrem(&nf.minpoly);
                Some(El::from_base_poly(&self.f, r))
            }
        }
    }
}

/// Renders `coeff * var^i` with the usual suppressions for coefficients
/// one and minus one and for compound coefficients.
fn render_term(cs: &str, var: &str, power: usize) -> (bool, String) {
    let (neg, mag) = match cs.strip_prefix('-') {
        Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
        _ => (false, cs.to_string()),
    };
    let wrapped = if mag.contains(' ') {
        format!("({mag})")
    } else {
        mag
    };
    let body = match power {
        0 => wrapped,
        1 if wrapped == "1" => var.to_string(),
        1 => format!("{wrapped}*{var}"),
        _ if wrapped == "1" => format!("{var}^{power}"),
        _ => format!("{wrapped}*{var}^{power}"),
    };
    (neg, body)
}

fn join_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

fn fmt_el(e: &El, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match &e.rep {
        Rep::Q(r) => write!(f, "{}", fmt_rat(r)),
        Rep::Ext(v) => {
            let FieldH::Ext(nf) = &e.f else { unreachable!() };
            let name = &nf.gen_name;
            let terms: Vec<(bool, String)> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !Coef::is_zero(*c))
                .map(|(i, c)| render_term(&c.to_string(), name, i))
                .collect();
            f.write_str(&join_terms(terms))
        }
    }
}

impl fmt::Display for El {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_el(self, f)
    }
}

/// Renders a polynomial over a field in the variable `var`, highest degree
/// first.
pub fn fmt_poly(p: &Poly<El>, var: &str) -> String {
    let terms: Vec<(bool, String)> = p
        .c
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !Coef::is_zero(*c))
        .map(|(i, c)| render_term(&c.to_string(), var, i))
        .collect();
    join_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rint;

    /// Q(eta) with eta^3 = 3 eta - 1.
    fn cubic_field() -> FieldH {
        let minpoly = Poly::new(vec![
            FieldH::Q.from_int(1),
            FieldH::Q.from_int(-3),
            FieldH::Q.from_int(0),
            FieldH::Q.from_int(1),
        ]);
        FieldH::Ext(Arc::new(NumberField {
            base: FieldH::Q,
            minpoly,
            gen_name: "eta".to_string(),
        }))
    }

    #[test]
    fn arithmetic_mod_minpoly() {
        let k = cubic_field();
        let eta = k.generator().unwrap();
        // eta^3 = 3 eta - 1
        let e3 = eta.mul(&eta).mul(&eta);
        let expect = eta.mul(&k.from_int(3)).sub(&k.one());
        assert_eq!(e3, expect);
        // sigma(eta) = eta^2 - 2 is a root of the same polynomial
        let s = eta.mul(&eta).sub(&k.from_int(2));
        let p_of_s = s.mul(&s).mul(&s).sub(&s.mul(&k.from_int(3))).add(&k.one());
        assert!(Coef::is_zero(&p_of_s));
    }

    #[test]
    fn inverses() {
        let k = cubic_field();
        let eta = k.generator().unwrap();
        let x = eta.mul(&eta).add(&k.from_int(5));
        let xi = Coef::inv(&x).unwrap();
        assert_eq!(x.mul(&xi), k.one());
        assert!(Coef::inv(&k.zero()).is_none());
    }

    #[test]
    fn tower_of_depth_two() {
        // Q(eta)(j) with eta^3 = 2 and j^2 + j + 1 = 0
        let base = {
            let minpoly = Poly::new(vec![
                FieldH::Q.from_int(-2),
                FieldH::Q.from_int(0),
                FieldH::Q.from_int(0),
                FieldH::Q.from_int(1),
            ]);
            FieldH::Ext(Arc::new(NumberField {
                base: FieldH::Q,
                minpoly,
                gen_name: "eta".to_string(),
            }))
        };
        let top = {
            let minpoly = Poly::new(vec![base.one(), base.one(), base.one()]);
            FieldH::Ext(Arc::new(NumberField {
                base: base.clone(),
                minpoly,
                gen_name: "j".to_string(),
            }))
        };
        assert_eq!(top.absolute_degree(), 6);
        let j = top.generator().unwrap();
        let eta = top.embed(&base.generator().unwrap()).unwrap();
        // (j*eta)^3 = j^3 * 2 = 2
        let je = j.mul(&eta);
        let cube = je.mul(&je).mul(&je);
        assert_eq!(cube, top.from_int(2));
        // j^2 + j + 1 = 0
        assert!(Coef::is_zero(&j.mul(&j).add(&j).add(&top.one())));
        // flattening has dimension 6
        assert_eq!(je.q_coordinates().len(), 6);
    }

    #[test]
    fn display() {
        let k = cubic_field();
        let eta = k.generator().unwrap();
        let x = eta.mul(&eta).sub(&k.from_int(2));
        assert_eq!(x.to_string(), "-2 + eta^2");
        assert_eq!(fmt_rat(&rint(5)), "5");
    }
}
