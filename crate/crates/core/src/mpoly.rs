//! Sparse multivariate polynomials over the exact rationals.
//!
//! Terms are kept in a canonical graded-lexicographic order on the variable
//! names, zero coefficients are never stored, and all arithmetic is exact, so
//! two polynomials are equal iff their representations are identical.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rat::{fmt_rat, rat_gcd, Rat};

/// A named variable. The canonical variable order follows the jet lexicon:
/// source variables first, then jets of the dependent variables by rising
/// differential order, barred copies after their plain counterparts, then
/// groupoid jets and parameters; anything else sorts last by name.
#[derive(Clone, Debug)]
pub struct Var {
    name: String,
    key: VarKey,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
struct VarKey {
    class: u8,
    order: u16,
    comp: u16,
    dirs: String,
}

fn classify(name: &str) -> VarKey {
    let mut bars = 0usize;
    let bytes = name.as_bytes();
    while bars < bytes.len() && bytes[bars] == b'b' {
        bars += 1;
    }
    let rest = &name[bars..];
    let mut chars = rest.chars();
    let head = chars.next();
    let base = match head {
        Some('x') => 0u8,
        Some('y') => 10,
        Some('g') => 30,
        Some('a') => 40,
        Some('u') => 50,
        Some('v') => 55,
        _ => 0,
    };
    let structured = matches!(head, Some('x' | 'y' | 'g' | 'a' | 'u' | 'v'));
    if !structured {
        return VarKey {
            class: 200,
            order: 0,
            comp: 0,
            dirs: name.to_string(),
        };
    }
    let tail = &rest[1..];
    let (comp_str, dirs) = match tail.split_once('_') {
        Some((c, d)) => (c, d),
        None => (tail, ""),
    };
    if !comp_str.chars().all(|c| c.is_ascii_digit())
        || !dirs.chars().all(|c| c.is_ascii_digit())
    {
        return VarKey {
            class: 200,
            order: 0,
            comp: 0,
            dirs: name.to_string(),
        };
    }
    let comp: u16 = if comp_str.is_empty() {
        1
    } else {
        comp_str.parse().unwrap_or(0)
    };
    VarKey {
        class: base + bars as u8,
        order: dirs.len() as u16,
        comp,
        dirs: dirs.to_string(),
    }
}

impl Var {
    pub fn new(name: &str) -> Self {
        Var {
            name: name.to_string(),
            key: classify(name),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl PartialEq for Var {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Eq for Var {}

impl std::hash::Hash for Var {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.name.hash(state);
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key
            .cmp(&other.key)
            .then_with(|| self.name.cmp(&other.name))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Exponent vector, sorted by variable, no zero exponents stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(Vec<(Var, u32)>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Mono(vec![(v, 1)])
    }

    pub fn from_pairs(mut pairs: Vec<(Var, u32)>) -> Self {
        pairs.retain(|(_, e)| *e > 0);
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        Mono(pairs)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| *e).sum()
    }

    pub fn exponent(&self, v: &Var) -> u32 {
        self.0
            .iter()
            .find(|(w, _)| w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = &Var> {
        self.0.iter().map(|(v, _)| v)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Mono(out)
    }

    /// Exact monomial quotient, `None` when some exponent would go negative.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for (v, e) in &self.0 {
            while j < other.0.len() && other.0[j].0 < *v {
                return None; // divisor has a variable we lack
            }
            if j < other.0.len() && other.0[j].0 == *v {
                let eo = other.0[j].1;
                if eo > *e {
                    return None;
                }
                if *e > eo {
                    out.push((v.clone(), e - eo));
                }
                j += 1;
            } else {
                out.push((v.clone(), *e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Mono(out))
    }

    /// Power of the monomial.
    pub fn pow(&self, k: u32) -> Mono {
        if k == 0 {
            return Mono::one();
        }
        Mono(self.0.iter().map(|(v, e)| (v.clone(), e * k)).collect())
    }

    /// Drops `v` from the exponent vector, returning its exponent.
    pub fn without(&self, v: &Var) -> (Mono, u32) {
        let mut out = Vec::with_capacity(self.0.len());
        let mut e = 0;
        for (w, k) in &self.0 {
            if w == v {
                e = *k;
            } else {
                out.push((w.clone(), *k));
            }
        }
        (Mono(out), e)
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    /// Graded lexicographic: total degree first, ties by the first variable
    /// (in name order) carrying a different exponent, larger exponent wins.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => return Ordering::Greater, // we have the earlier var
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match self.0[i].1.cmp(&other.0[j].1) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                    ord => return ord,
                },
            }
        }
        if i < self.0.len() {
            Ordering::Greater
        } else if j < other.0.len() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in &self.0 {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial over Q.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<Mono, Rat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        MPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        MPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(v), Rat::one());
        MPoly { terms }
    }

    pub fn term(c: Rat, m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms(pairs: Vec<(Mono, Rat)>) -> Self {
        let mut p = MPoly::zero();
        for (m, c) in pairs {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut out = MPoly::one();
        let mut base = self.clone();
        let mut k = k;
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

    /// All variables occurring with nonzero exponent, sorted.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = Vec::new();
        for m in self.terms.keys() {
            for v in m.vars() {
                if !vs.contains(v) {
                    vs.push(v.clone());
                }
            }
        }
        vs.sort();
        vs
    }

    pub fn contains_var(&self, v: &Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: &Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rat::zero)
    }

    pub fn partial_derivative(&self, v: &Var) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let (rest, _) = m.without(v);
            let newm = if e > 1 {
                rest.mul(&Mono::var(v.clone()).pow(e - 1))
            } else {
                rest
            };
            out.add_term(newm, c * Rat::from_integer(e.into()));
        }
        out
    }

    /// View as univariate in `v` with `MPoly` coefficients, lowest degree first.
    pub fn as_univariate(&self, v: &Var) -> Vec<MPoly> {
        let d = self.degree_in(v) as usize;
        let mut coeffs = vec![MPoly::zero(); d + 1];
        for (m, c) in &self.terms {
            let (rest, e) = m.without(v);
            coeffs[e as usize].add_term(rest, c.clone());
        }
        coeffs
    }

    pub fn from_univariate(coeffs: &[MPoly], v: &Var) -> MPoly {
        let mut out = MPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            let vm = Mono::var(v.clone()).pow(e as u32);
            for (m, k) in &c.terms {
                out.add_term(m.mul(&vm), k.clone());
            }
        }
        out
    }

    /// Exact division; `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &MPoly) -> Option<MPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        if let Some(c) = other.as_constant() {
            return Some(self.scale(&(Rat::one() / c)));
        }
        let (lm, lc) = other.leading().unwrap();
        let mut rem = self.clone();
        let mut quo = MPoly::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().unwrap();
            let qm = rm.div(lm)?;
            let qc = rc / lc;
            let t = MPoly::term(qc, qm);
            rem = rem.sub(&t.mul(other));
            quo = quo.add(&t);
        }
        Some(quo)
    }

    /// Rational content: positive gcd of the coefficients.
    pub fn rational_content(&self) -> Rat {
        let mut g = Rat::zero();
        for c in self.terms.values() {
            g = rat_gcd(&g, c);
        }
        g
    }

    /// Scale so coefficients are coprime integers with positive leading coefficient.
    pub fn primitive_normalized(&self) -> MPoly {
        if self.is_zero() {
            return MPoly::zero();
        }
        let c = self.rational_content();
        let mut p = self.scale(&(Rat::one() / c));
        if p.leading_coeff().is_negative() {
            p = p.neg();
        }
        p
    }

    /// Substitutes variables by polynomials (missing variables stay themselves).
    pub fn substitute_poly(&self, bindings: &BTreeMap<Var, MPoly>) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(c.clone());
            for (v, e) in m.pairs() {
                let factor = match bindings.get(v) {
                    Some(p) => p.pow(*e),
                    None => MPoly::term(Rat::one(), Mono::var(v.clone()).pow(*e)),
                };
                term = term.mul(&factor);
            }
            out = out.add(&term);
        }
        out
    }
}

/// Pseudo-remainder of `a` by `b` viewed in variable `v`:
/// `lc(b)^(deg a - deg b + 1) * a = q*b + r`.
fn pseudo_rem(a: &[MPoly], b: &[MPoly], _v: &Var) -> Vec<MPoly> {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r: Vec<MPoly> = a.to_vec();
    let mut e = (a.len() - 1) as i64 - db as i64 + 1;
    while !r.is_empty() && r.len() - 1 >= db && !r.iter().all(|c| c.is_zero()) {
        let dr = r.len() - 1;
        if r[dr].is_zero() {
            r.pop();
            continue;
        }
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        // r = lb*r - lr * v^(dr-db) * b
        let mut new_r: Vec<MPoly> = r.iter().map(|c| c.mul(&lb)).collect();
        for (i, bc) in b.iter().enumerate() {
            let idx = i + dr - db;
            new_r[idx] = new_r[idx].sub(&bc.mul(&lr));
        }
        new_r.pop(); // leading cancels
        while let Some(t) = new_r.last() {
            if t.is_zero() && new_r.len() > 0 {
                new_r.pop();
            } else {
                break;
            }
        }
        r = new_r;
        e -= 1;
    }
    // multiply by lb^e to reach the exact pseudo-remainder normalization
    if e > 0 {
        let f = lb.pow(e as u32);
        r = r.iter().map(|c| c.mul(&f)).collect();
    }
    r
}

fn uni_is_zero(p: &[MPoly]) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn uni_trim(mut p: Vec<MPoly>) -> Vec<MPoly> {
    while let Some(t) = p.last() {
        if t.is_zero() {
            p.pop();
        } else {
            break;
        }
    }
    p
}

/// Content of a univariate-view polynomial: gcd of its coefficients.
fn uni_content(p: &[MPoly]) -> MPoly {
    let mut g = MPoly::zero();
    for c in p {
        if !c.is_zero() {
            g = mpoly_gcd(&g, c);
        }
    }
    g
}

/// Multivariate gcd via subresultant pseudo-remainder sequences on the
/// recursive univariate view. The result is determined up to a rational unit;
/// we return it primitive with positive leading coefficient.
pub fn mpoly_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.primitive_normalized();
    }
    if b.is_zero() {
        return a.primitive_normalized();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    // main variable: the greatest variable occurring in either
    let mut vs = a.vars();
    for v in b.vars() {
        if !vs.contains(&v) {
            vs.push(v);
        }
    }
    vs.sort();
    let v = vs.last().unwrap().clone();
    if !a.contains_var(&v) {
        let cb = uni_content(&b.as_univariate(&v));
        return mpoly_gcd(a, &cb);
    }
    if !b.contains_var(&v) {
        let ca = uni_content(&a.as_univariate(&v));
        return mpoly_gcd(&ca, b);
    }

    let ua = uni_trim(a.as_univariate(&v));
    let ub = uni_trim(b.as_univariate(&v));
    let ca = uni_content(&ua);
    let cb = uni_content(&ub);
    let c = mpoly_gcd(&ca, &cb);
    let mut p1: Vec<MPoly> = ua.iter().map(|x| x.div_exact(&ca).unwrap()).collect();
    let mut p2: Vec<MPoly> = ub.iter().map(|x| x.div_exact(&cb).unwrap()).collect();
    if p1.len() < p2.len() {
        std::mem::swap(&mut p1, &mut p2);
    }

    let mut g = MPoly::one();
    let mut h = MPoly::one();
    loop {
        let d = (p1.len() - 1) as i64 - (p2.len() - 1) as i64;
        debug_assert!(d >= 0);
        let r = uni_trim(pseudo_rem(&p1, &p2, &v));
        if uni_is_zero(&r) {
            let cp2 = uni_content(&p2);
            let pp: Vec<MPoly> = p2.iter().map(|x| x.div_exact(&cp2).unwrap()).collect();
            let res = MPoly::from_univariate(&pp, &v).mul(&c);
            return res.primitive_normalized();
        }
        if r.len() - 1 == 0 {
            // coprime up to content
            return c.primitive_normalized();
        }
        let divisor = g.mul(&h.pow(d as u32));
        p1 = p2;
        p2 = r
            .iter()
            .map(|x| x.div_exact(&divisor).expect("subresultant division is exact"))
            .collect();
        g = p1.last().unwrap().clone();
        // h = h^(1-d) * g^d
        h = if d == 0 {
            h
        } else {
            let gd = g.pow(d as u32);
            if d == 1 {
                gd
            } else {
                gd.div_exact(&h.pow((d - 1) as u32))
                    .expect("subresultant h-update is exact")
            }
        };
    }
}

/// Squarefree part: the product of the distinct irreducible factors.
pub fn squarefree_part(p: &MPoly) -> MPoly {
    if p.is_zero() || p.is_constant() {
        return p.primitive_normalized();
    }
    let mut g = MPoly::zero();
    for v in p.vars() {
        let d = p.partial_derivative(&v);
        if !d.is_zero() {
            g = mpoly_gcd(&g, &mpoly_gcd(p, &d));
        }
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() || g.is_one() {
        return p.primitive_normalized();
    }
    p.div_exact(&g)
        .expect("squarefree cofactor divides")
        .primitive_normalized()
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_rat(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rat(&mag))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn v(name: &str) -> Var {
        Var::new(name)
    }

    #[test]
    fn graded_lex_leading_term() {
        // y1*y2_1 - y2*y1_1 must print with y1*y2_1 first
        let p = MPoly::from_terms(vec![
            (
                Mono::from_pairs(vec![(v("y1"), 1), (v("y2_1"), 1)]),
                rint(1),
            ),
            (
                Mono::from_pairs(vec![(v("y2"), 1), (v("y1_1"), 1)]),
                rint(-1),
            ),
        ]);
        assert_eq!(p.to_string(), "y1*y2_1 - y2*y1_1");
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let x = MPoly::var(v("x1"));
        let y = MPoly::var(v("y1"));
        let s = x.add(&y);
        let d = x.sub(&y);
        let prod = s.mul(&d);
        let expect = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(prod, expect);
        assert!(s.sub(&s).is_zero());
    }

    #[test]
    fn derivative_monomial() {
        // d/dy2 (y2^2 * y1_1) = 2*y2*y1_1
        let p = MPoly::term(
            rint(1),
            Mono::from_pairs(vec![(v("y2"), 2), (v("y1_1"), 1)]),
        );
        let d = p.partial_derivative(&v("y2"));
        let expect = MPoly::term(
            rint(2),
            Mono::from_pairs(vec![(v("y2"), 1), (v("y1_1"), 1)]),
        );
        assert_eq!(d, expect);
        assert!(p.partial_derivative(&v("x1")).is_zero());
    }

    #[test]
    fn exact_division() {
        let x = MPoly::var(v("x1"));
        let y = MPoly::var(v("y1"));
        let a = x.add(&y).mul(&x.sub(&y));
        let q = a.div_exact(&x.add(&y)).unwrap();
        assert_eq!(q, x.sub(&y));
        assert!(a.div_exact(&x.add(&MPoly::one())).is_none());
    }

    #[test]
    fn gcd_simple() {
        let x = MPoly::var(v("x1"));
        let y = MPoly::var(v("y1"));
        let f = x.add(&y);
        let a = f.pow(2).mul(&x);
        let b = f.mul(&y);
        let g = mpoly_gcd(&a, &b);
        assert_eq!(g, f);
        // coprime
        let g2 = mpoly_gcd(&x, &y);
        assert!(g2.is_one());
    }

    #[test]
    fn gcd_with_rational_coeffs() {
        let x = MPoly::var(v("x1"));
        let a = x.add(&MPoly::constant(rat(1, 2))).mul(&x);
        let b = x.add(&MPoly::constant(rat(1, 2))).mul(&x.add(&MPoly::one()));
        let g = mpoly_gcd(&a, &b);
        // primitive normalization: 2x + 1
        let expect = x.scale(&rint(2)).add(&MPoly::one());
        assert_eq!(g, expect);
    }

    #[test]
    fn squarefree() {
        let x = MPoly::var(v("x1"));
        let y = MPoly::var(v("y1"));
        let w = x.mul(&MPoly::var(v("y2"))).sub(&y.mul(&MPoly::var(v("x2"))));
        let p = w.pow(2);
        assert_eq!(squarefree_part(&p), w.primitive_normalized());
    }
}
