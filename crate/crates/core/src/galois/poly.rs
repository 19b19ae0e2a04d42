//! Dense univariate polynomials over an abstract coefficient field, plus a
//! fraction-free resultant over polynomial rings.

use std::fmt;

use crate::rat::Rat;

/// Coefficient field operations. `zero_like`/`one_like` take an exemplar so
/// tower elements can carry their field handle.
pub trait Coef: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
}

impl Coef for Rat {
    fn zero_like(&self) -> Self {
        num_traits::Zero::zero()
    }
    fn one_like(&self) -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn inv(&self) -> Option<Self> {
        if Coef::is_zero(self) {
            None
        } else {
            Some(Rat::from_integer(1.into()) / self.clone())
        }
    }
}

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
/// The zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<T: Coef> {
    pub c: Vec<T>,
}

impl<T: Coef> Poly<T> {
    pub fn new(mut c: Vec<T>) -> Self {
        while c.last().map(Coef::is_zero).unwrap_or(false) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn constant(v: T) -> Self {
        Poly::new(vec![v])
    }

    /// The monomial x, over the field of the exemplar.
    pub fn x(exemplar: &T) -> Self {
        Poly::new(vec![exemplar.zero_like(), exemplar.one_like()])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lead(&self) -> Option<&T> {
        self.c.last()
    }

    pub fn coeff(&self, i: usize, exemplar: &T) -> T {
        self.c.get(i).cloned().unwrap_or_else(|| exemplar.zero_like())
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn add(&self, o: &Poly<T>) -> Poly<T> {
        let n = self.c.len().max(o.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.c.get(i);
            let b = o.c.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(out)
    }

    pub fn sub(&self, o: &Poly<T>) -> Poly<T> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Poly<T> {
        Poly {
            c: self.c.iter().map(Coef::neg).collect(),
        }
    }

    pub fn mul(&self, o: &Poly<T>) -> Poly<T> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let zero = self.c[0].zero_like();
        let mut out = vec![zero; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if Coef::is_zero(a) {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, k: &T) -> Poly<T> {
        Poly::new(self.c.iter().map(|a| a.mul(k)).collect())
    }

    pub fn pow(&self, mut k: u32) -> Poly<T> {
        if k == 0 {
            let one = self
                .c
                .first()
                .map(Coef::one_like)
                .expect("cannot take 0th power of zero polynomial without exemplar");
            return Poly::constant(one);
        }
        let mut base = self.clone();
        let mut out: Option<Poly<T>> = None;
        loop {
            if k & 1 == 1 {
                out = Some(match out {
                    None => base.clone(),
                    Some(o) => o.mul(&base),
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.mul(&base);
        }
        out.unwrap()
    }

    /// Division with remainder; the divisor must be nonzero.
    pub fn divrem(&self, d: &Poly<T>) -> (Poly<T>, Poly<T>) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.degree() < d.degree() || self.is_zero() {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = d.lead().unwrap().inv().expect("unit leading coefficient");
        let zero = d.lead().unwrap().zero_like();
        let mut rem = self.c.clone();
        let dq = self.degree() - d.degree();
        let mut quo = vec![zero.clone(); dq + 1];
        for k in (0..=dq).rev() {
            let top = rem.get(k + d.degree()).cloned().unwrap_or_else(|| zero.zero_like());
            if Coef::is_zero(&top) {
                continue;
            }
            let q = top.mul(&lead_inv);
            quo[k] = q.clone();
            for (j, dc) in d.c.iter().enumerate() {
                let idx = k + j;
                rem[idx] = rem[idx].sub(&q.mul(dc));
            }
        }
        (Poly::new(quo), Poly::new(rem))
    }

    pub fn div_exact(&self, d: &Poly<T>) -> Option<Poly<T>> {
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn monic(&self) -> Poly<T> {
        match self.lead() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero lead")),
        }
    }

    pub fn derivative(&self) -> Poly<T> {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        let one = self.c[0].one_like();
        let mut out = Vec::with_capacity(self.c.len() - 1);
        let mut k = one.zero_like();
        for a in &self.c[1..] {
            k = k.add(&one);
            out.push(a.mul(&k));
        }
        Poly::new(out)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = x.zero_like();
        for a in self.c.iter().rev() {
            acc = acc.mul(x).add(a);
        }
        acc
    }

    /// Substitutes another polynomial for the variable.
    pub fn compose(&self, g: &Poly<T>) -> Poly<T> {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut acc = Poly::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul(g).add(&Poly::constant(a.clone()));
        }
        acc
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, o: &Poly<T>) -> Poly<T> {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*o = g` monic.
    pub fn extended_gcd(&self, o: &Poly<T>) -> (Poly<T>, Poly<T>, Poly<T>) {
        let exemplar = self
            .c
            .first()
            .or(o.c.first())
            .expect("extended gcd of two zero polynomials");
        let one = Poly::constant(exemplar.one_like());
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (one.clone(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), one);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.lead().map(|l| l.inv().expect("nonzero")) {
            Some(inv) => {
                let k = Poly::constant(inv);
                (r0.mul(&k), s0.mul(&k), t0.mul(&k))
            }
            None => (r0, s0, t0),
        }
    }

    /// Squarefree part: `self / gcd(self, self')`, monic.
    pub fn squarefree_part(&self) -> Poly<T> {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.monic();
        }
        self.div_exact(&g).expect("gcd divides").monic()
    }
}

/// Resultant of two polynomials over a coefficient field, by the Euclidean
/// remainder sequence.
pub fn resultant<T: Coef>(a: &Poly<T>, b: &Poly<T>) -> T {
    let exemplar = a
        .c
        .first()
        .or(b.c.first())
        .expect("resultant of zero polynomials");
    let zero = exemplar.zero_like();
    let one = exemplar.one_like();
    if a.is_zero() || b.is_zero() {
        return zero;
    }
    if a.is_constant() {
        return pow_coef(&a.c[0], b.degree() as u32, &one);
    }
    if b.is_constant() {
        return pow_coef(&b.c[0], a.degree() as u32, &one);
    }
    let mut acc = one.clone();
    let mut f = a.clone();
    let mut g = b.clone();
    loop {
        // res(f, g) = lc(g)^(deg f - deg r) * (-1)^(deg f * deg g) * res(g, r)
        let (_, r) = f.divrem(&g);
        if r.is_zero() {
            return zero;
        }
        let df = f.degree();
        let dg = g.degree();
        let dr = r.degree();
        let lc_pow = pow_coef(g.lead().unwrap(), (df - dr) as u32, &one);
        acc = acc.mul(&lc_pow);
        if (df * dg) % 2 == 1 {
            acc = acc.neg();
        }
        if r.is_constant() {
            let last = pow_coef(&r.c[0], g.degree() as u32, &one);
            return acc.mul(&last);
        }
        f = g;
        g = r;
    }
}

fn pow_coef<T: Coef>(a: &T, mut k: u32, one: &T) -> T {
    let mut out = one.clone();
    let mut base = a.clone();
    while k > 0 {
        if k & 1 == 1 {
            out = out.mul(&base);
        }
        k >>= 1;
        if k > 0 {
            base = base.mul(&base);
        }
    }
    out
}

/// Entries admissible in a fraction-free (Bareiss) determinant over an
/// integral domain.
pub trait RingElem: Clone + PartialEq + fmt::Debug {
    fn r_zero(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Option<Self>;
}

impl<T: Coef> RingElem for Poly<T> {
    fn r_zero(&self) -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn sub(&self, o: &Self) -> Self {
        Poly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Poly::mul(self, o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        Poly::div_exact(self, o)
    }
}

/// Bareiss determinant over an integral domain; `one` is an exemplar of the
/// ring's unit.
pub fn bareiss_determinant<T: RingElem>(mut m: Vec<Vec<T>>, one: &T) -> T {
    let n = m.len();
    if n == 0 {
        return one.clone();
    }
    let mut sign = false;
    let mut prev = one.clone();
    for k in 0..n {
        let Some(r) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return one.r_zero();
        };
        if r != k {
            m.swap(k, r);
            sign = !sign;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let t = pivot.mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = m[i][k].r_zero();
        }
        prev = pivot;
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        d.r_zero().sub(&d)
    } else {
        d
    }
}

/// Resultant of two polynomials in an outer variable whose coefficients lie
/// in an integral domain (here: polynomials over a field), via the Sylvester
/// determinant computed fraction-free.
pub fn sylvester_resultant<T: RingElem>(a: &[T], b: &[T], one: &T) -> T {
    let da = a.len() - 1;
    let db = b.len() - 1;
    let n = da + db;
    if n == 0 {
        return one.clone();
    }
    let zero = one.r_zero();
    let mut m = vec![vec![zero.clone(); n]; n];
    for i in 0..db {
        for (j, c) in a.iter().enumerate() {
            m[i][i + (da - j)] = c.clone();
        }
    }
    for i in 0..da {
        for (j, c) in b.iter().enumerate() {
            m[db + i][i + (db - j)] = c.clone();
        }
    }
    bareiss_determinant(m, one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn p(coeffs: &[i64]) -> Poly<Rat> {
        Poly::new(coeffs.iter().map(|&k| rint(k)).collect())
    }

    #[test]
    fn arithmetic_and_division() {
        // (x+1)(x-1) = x^2 - 1
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        let prod = a.mul(&b);
        assert_eq!(prod, p(&[-1, 0, 1]));
        let (q, r) = prod.divrem(&a);
        assert_eq!(q, b);
        assert!(r.is_zero());
        let (q2, r2) = p(&[1, 0, 1]).divrem(&p(&[1, 1]));
        assert_eq!(q2, p(&[-1, 1]));
        assert_eq!(r2, p(&[2]));
    }

    #[test]
    fn gcd_and_xgcd() {
        // Bezout identity  -1/3 (y+2)(y-1) + 1/3 (y^2+y+1) = 1
        let p1 = p(&[-1, 1]);
        let p2 = p(&[1, 1, 1]);
        let (g, s, t) = p1.extended_gcd(&p2);
        assert_eq!(g, p(&[1]));
        let lhs = s.mul(&p1).add(&t.mul(&p2));
        assert_eq!(lhs, p(&[1]));
        // the printed cofactors
        let u = p(&[2, 1]).scale(&rat(-1, 3));
        let v = Poly::constant(rat(1, 3));
        assert_eq!(u.mul(&p1).add(&v.mul(&p2)), p(&[1]));
        assert_eq!(s, u);
        assert_eq!(t, v);
    }

    #[test]
    fn composition() {
        // (y^2)o(y+1) = y^2 + 2y + 1
        let f = p(&[0, 0, 1]);
        let g = p(&[1, 1]);
        assert_eq!(f.compose(&g), p(&[1, 2, 1]));
    }

    #[test]
    fn squarefree() {
        let f = p(&[1, 1]).pow(2).mul(&p(&[-1, 1]));
        assert_eq!(f.squarefree_part(), p(&[1, 1]).mul(&p(&[-1, 1])).monic());
    }

    #[test]
    fn resultant_of_cubic_and_derivative() {
        // res(y^3 - 3y + 1, 3y^2 - 3) = -81 = -disc
        let f = p(&[1, -3, 0, 1]);
        let r = resultant(&f, &f.derivative());
        assert_eq!(r, rint(-81));
        // res(y^3 + y + 1, 3y^2 + 1) = 31
        let g = p(&[1, 1, 0, 1]);
        assert_eq!(resultant(&g, &g.derivative()), rint(31));
    }

    #[test]
    fn sylvester_agrees_with_euclid() {
        let f = p(&[1, -3, 0, 1]);
        let g = f.derivative();
        let fa: Vec<Poly<Rat>> = f.c.iter().map(|c| Poly::constant(c.clone())).collect();
        let ga: Vec<Poly<Rat>> = g.c.iter().map(|c| Poly::constant(c.clone())).collect();
        let one = Poly::constant(rint(1));
        let det = sylvester_resultant(&fa, &ga, &one);
        assert_eq!(det, Poly::constant(rint(-81)));
    }
}
