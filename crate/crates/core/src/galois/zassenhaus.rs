//! Factorization of primitive squarefree integer polynomials: factor modulo
//! a good small prime, Hensel-lift to a coefficient bound, then recombine
//! subsets by trial division.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

type ZPoly = Vec<BigInt>; // little-endian, trimmed

fn trim(mut p: ZPoly) -> ZPoly {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

fn deg(p: &ZPoly) -> usize {
    p.len().saturating_sub(1)
}

pub fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
    }
    g
}

pub fn primitive_part(p: &[BigInt]) -> ZPoly {
    let g = content(p);
    if g.is_zero() {
        return Vec::new();
    }
    p.iter().map(|c| c / &g).collect()
}

fn z_mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Exact division over Z; `None` when not divisible.
fn z_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    if b.is_empty() {
        return None;
    }
    let mut rem: ZPoly = a.to_vec();
    rem = trim(rem);
    if rem.is_empty() {
        return Some(Vec::new());
    }
    if rem.len() < b.len() {
        return None;
    }
    let lead = b.last().unwrap();
    let mut quo = vec![BigInt::zero(); rem.len() - b.len() + 1];
    for k in (0..quo.len()).rev() {
        let top = rem[k + b.len() - 1].clone();
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        quo[k] = q.clone();
        for (j, bc) in b.iter().enumerate() {
            rem[k + j] -= &q * bc;
        }
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(trim(quo))
    } else {
        None
    }
}

// ---- arithmetic mod a small prime ----

fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut out = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            out = mulm(out, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    out
}

fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

type PPoly = Vec<u64>;

fn p_trim(mut f: PPoly) -> PPoly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn p_reduce(f: &[BigInt], p: u64) -> PPoly {
    let m = BigInt::from(p);
    p_trim(
        f.iter()
            .map(|c| {
                let r = c.mod_floor(&m);
                r.to_u64_digits().1.first().copied().unwrap_or(0)
            })
            .collect(),
    )
}

fn p_mul(a: &[u64], b: &[u64], p: u64) -> PPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(x, y, p), p);
        }
    }
    p_trim(out)
}

fn p_divrem(a: &[u64], b: &[u64], p: u64) -> (PPoly, PPoly) {
    let b = p_trim(b.to_vec());
    assert!(!b.is_empty());
    let mut rem = p_trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let linv = invm(*b.last().unwrap(), p);
    let mut quo = vec![0u64; rem.len() - b.len() + 1];
    for k in (0..quo.len()).rev() {
        let top = rem[k + b.len() - 1];
        if top == 0 {
            continue;
        }
        let q = mulm(top, linv, p);
        quo[k] = q;
        for (j, &bc) in b.iter().enumerate() {
            rem[k + j] = subm(rem[k + j], mulm(q, bc, p), p);
        }
    }
    (p_trim(quo), p_trim(rem))
}

fn p_gcd(a: &[u64], b: &[u64], p: u64) -> PPoly {
    let mut x = p_trim(a.to_vec());
    let mut y = p_trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = p_divrem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&l) = x.last() {
        let li = invm(l, p);
        x = x.iter().map(|&c| mulm(c, li, p)).collect();
    }
    x
}

fn p_monic(f: &[u64], p: u64) -> PPoly {
    let f = p_trim(f.to_vec());
    match f.last() {
        None => f,
        Some(&l) => {
            let li = invm(l, p);
            f.iter().map(|&c| mulm(c, li, p)).collect()
        }
    }
}

/// `base^e mod (f, p)` with a big exponent.
fn p_powmod(base: &[u64], e: &BigUint, f: &[u64], p: u64) -> PPoly {
    let mut out = vec![1u64];
    let mut b = p_divrem(base, f, p).1;
    for bit in 0..e.bits() {
        if e.bit(bit) {
            out = p_divrem(&p_mul(&out, &b, p), f, p).1;
        }
        b = p_divrem(&p_mul(&b, &b, p), f, p).1;
    }
    out
}

/// Tiny deterministic generator for splitting polynomials.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 11
    }
}

/// Distinct-degree decomposition of a monic squarefree polynomial mod p.
fn distinct_degree(f: &[u64], p: u64) -> Vec<(usize, PPoly)> {
    let mut out = Vec::new();
    let mut f = p_monic(f, p);
    let x = vec![0u64, 1];
    let mut h = p_divrem(&x, &f, p).1;
    let mut d = 0usize;
    while f.len() > 1 {
        d += 1;
        if 2 * d > deg_p(&f) {
            out.push((deg_p(&f), f.clone()));
            break;
        }
        h = p_powmod(&h, &BigUint::from(p), &f, p);
        // gcd(h - x, f)
        let mut hx = h.clone();
        while hx.len() < 2 {
            hx.push(0);
        }
        hx[1] = subm(hx[1], 1, p);
        let g = p_gcd(&p_trim(hx), &f, p);
        if g.len() > 1 {
            out.push((d, g.clone()));
            f = p_divrem(&f, &g, p).0;
            h = p_divrem(&h, &f, p).1;
        }
    }
    out
}

fn deg_p(f: &[u64]) -> usize {
    f.len().saturating_sub(1)
}

/// Cantor-Zassenhaus equal-degree splitting (p odd).
fn equal_degree_split(f: &[u64], d: usize, p: u64, rng: &mut Lcg, out: &mut Vec<PPoly>) {
    if deg_p(f) == d {
        out.push(p_monic(f, p));
        return;
    }
    let exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let n = deg_p(f);
        let a: PPoly = p_trim((0..n).map(|_| rng.next() % p).collect());
        if a.len() < 2 {
            continue;
        }
        let g1 = p_gcd(&a, f, p);
        if g1.len() > 1 && deg_p(&g1) < deg_p(f) {
            let g2 = p_divrem(f, &g1, p).0;
            equal_degree_split(&g1, d, p, rng, out);
            equal_degree_split(&g2, d, p, rng, out);
            return;
        }
        let mut b = p_powmod(&a, &exp, f, p);
        if b.is_empty() {
            continue;
        }
        b[0] = subm(b[0], 1, p);
        let b = p_trim(b);
        if b.is_empty() {
            continue;
        }
        let g = p_gcd(&b, f, p);
        if g.len() > 1 && deg_p(&g) < deg_p(f) {
            let h = p_divrem(f, &g, p).0;
            equal_degree_split(&g, d, p, rng, out);
            equal_degree_split(&h, d, p, rng, out);
            return;
        }
    }
}

fn factor_mod_p(f: &[u64], p: u64) -> Vec<PPoly> {
    let mut rng = Lcg(0x9e3779b97f4a7c15);
    let mut out = Vec::new();
    for (d, g) in distinct_degree(f, p) {
        equal_degree_split(&g, d, p, &mut rng, &mut out);
    }
    out.sort();
    out
}

// ---- Hensel lifting ----

fn mod_sym(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn zp_mod(f: &[BigInt], m: &BigInt) -> ZPoly {
    trim(f.iter().map(|c| c.mod_floor(m)).collect())
}

fn zp_mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    zp_mod(&z_mul(a, b), m)
}

fn zp_sub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out[i] = (x - y).mod_floor(m);
    }
    trim(out)
}

fn zp_add_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out[i] = (x + y).mod_floor(m);
    }
    trim(out)
}

/// Division with remainder mod m by a monic divisor.
fn zp_divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let b = trim(b.to_vec());
    debug_assert!(b.last().map(|c| c.is_one()).unwrap_or(false), "monic divisor");
    let mut rem = zp_mod(a, m);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quo = vec![BigInt::zero(); rem.len() - b.len() + 1];
    for k in (0..quo.len()).rev() {
        let top = rem
            .get(k + b.len() - 1)
            .cloned()
            .unwrap_or_else(BigInt::zero);
        if top.is_zero() {
            continue;
        }
        quo[k] = top.clone();
        for (j, bc) in b.iter().enumerate() {
            let idx = k + j;
            let v = (&rem[idx] - &top * bc).mod_floor(m);
            rem[idx] = v;
        }
    }
    (trim(quo), trim(rem))
}

/// One quadratic Hensel step: from `f = g h (mod m)`, `s g + t h = 1 (mod m)`
/// with `h` monic, to the same congruences mod `m^2`.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    m: &BigInt,
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = zp_sub_mod(f, &z_mul(g, h), &m2);
    let (q, r) = zp_divrem_monic(&z_mul(s, &e), h, &m2);
    let g_new = zp_add_mod(&zp_add_mod(g, &z_mul(t, &e), &m2), &z_mul(&q, g), &m2);
    let h_new = zp_add_mod(h, &r, &m2);
    let one = vec![BigInt::one()];
    let b = zp_sub_mod(&zp_add_mod(&z_mul(s, &g_new), &z_mul(t, &h_new), &m2), &one, &m2);
    let (c, d) = zp_divrem_monic(&z_mul(s, &b), &h_new, &m2);
    let s_new = zp_sub_mod(s, &d, &m2);
    let t_new = zp_sub_mod(&zp_sub_mod(t, &z_mul(t, &b), &m2), &z_mul(&c, &g_new), &m2);
    (g_new, h_new, s_new, t_new)
}

fn p_xgcd(a: &[u64], b: &[u64], p: u64) -> (PPoly, PPoly, PPoly) {
    let (mut r0, mut r1) = (p_trim(a.to_vec()), p_trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = p_divrem(&r0, &r1, p);
        let s = p_sub(&s0, &p_mul(&q, &s1, p), p);
        let t = p_sub(&t0, &p_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    let li = invm(*r0.last().unwrap(), p);
    let scale = |v: &[u64]| -> PPoly { v.iter().map(|&c| mulm(c, li, p)).collect() };
    (scale(&r0), scale(&s0), scale(&t0))
}

fn p_sub(a: &[u64], b: &[u64], p: u64) -> PPoly {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = subm(x, y, p);
    }
    p_trim(out)
}

fn p_to_z(f: &[u64]) -> ZPoly {
    trim(f.iter().map(|&c| BigInt::from(c)).collect())
}

/// Lifts `f = lc * prod(factors) (mod p)` to the same congruence mod `p^2^j
/// >= bound`, all factors monic. Returns the lifted factors and the modulus.
fn hensel_lift_tree(
    f: &[BigInt],
    factors: &[PPoly],
    p: u64,
    bound: &BigInt,
) -> (Vec<ZPoly>, BigInt) {
    let mut modulus = BigInt::from(p);
    while &modulus < bound {
        modulus = &modulus * &modulus;
    }
    let lifted = lift_rec(f, factors, p, &modulus);
    (lifted, modulus)
}

fn lift_rec(f: &[BigInt], factors: &[PPoly], p: u64, target: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        // f = lc * g with g monic: g = f / lc mod target
        let lc = f.last().unwrap().clone();
        let (g, inv_ok) = monic_mod(f, &lc, target);
        debug_assert!(inv_ok, "leading coefficient invertible");
        return vec![g];
    }
    let half = factors.len() / 2;
    let (left, right) = factors.split_at(half);
    // g carries the leading coefficient, h is monic
    let lc = f.last().unwrap().clone();
    let mut g0 = vec![1u64];
    for fac in left {
        g0 = p_mul(&g0, fac, p);
    }
    let mut h0 = vec![1u64];
    for fac in right {
        h0 = p_mul(&h0, fac, p);
    }
    let lcp = (lc.mod_floor(&BigInt::from(p)))
        .to_u64_digits()
        .1
        .first()
        .copied()
        .unwrap_or(0);
    let g0 = p_mul(&[lcp], &g0, p);
    let (_, s0, t0) = p_xgcd(&g0, &h0, p);

    let mut m = BigInt::from(p);
    let mut g = p_to_z(&g0);
    let mut h = p_to_z(&h0);
    let mut s = p_to_z(&s0);
    let mut t = p_to_z(&t0);
    while &m < target {
        let (gn, hn, sn, tn) = hensel_step(&m, f, &g, &h, &s, &t);
        g = gn;
        h = hn;
        s = sn;
        t = tn;
        m = &m * &m;
    }
    let g = zp_mod(&g, target);
    let h = zp_mod(&h, target);
    let mut out = lift_rec(&g, left, p, target);
    out.extend(lift_rec(&h, right, p, target));
    out
}

fn monic_mod(f: &[BigInt], lc: &BigInt, m: &BigInt) -> (ZPoly, bool) {
    let e = m.extended_gcd(&lc.mod_floor(m));
    if !e.gcd.is_one() {
        return (f.to_vec(), false);
    }
    let inv = e.y.mod_floor(m);
    (
        trim(f.iter().map(|c| (c * &inv).mod_floor(m)).collect()),
        true,
    )
}

const PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191,
    193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283,
];

/// Landau-Mignotte style bound on the coefficients of any factor of `f`
/// times the leading coefficient.
fn factor_bound(f: &[BigInt]) -> BigInt {
    let n = deg(&f.to_vec());
    let norm: BigInt = f.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero);
    let lc = f.last().unwrap().abs();
    (BigInt::from(n as u64 + 1)) * (BigInt::one() << (n + 1)) * norm * lc
}

/// Factors a primitive squarefree polynomial over Z with positive leading
/// coefficient into primitive irreducible factors (unordered).
pub fn factor_primitive_squarefree(f: &[BigInt]) -> Vec<ZPoly> {
    let f = trim(f.to_vec());
    if deg(&f) <= 1 {
        return vec![f];
    }
    // choose a prime keeping f squarefree with invertible lead
    let fd: ZPoly = {
        let mut out = Vec::new();
        for (i, c) in f.iter().enumerate().skip(1) {
            out.push(c * BigInt::from(i as u64));
        }
        trim(out)
    };
    let mut chosen = None;
    for &p in PRIMES {
        if (f.last().unwrap() % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = p_reduce(&f, p);
        let fdp = p_reduce(&fd, p);
        if fp.len() != f.len() {
            continue;
        }
        let g = p_gcd(&fp, &fdp, p);
        if g.len() == 1 {
            chosen = Some(p);
            break;
        }
    }
    let p = chosen.expect("a good prime exists for squarefree input");
    let fp = p_monic(&p_reduce(&f, p), p);
    let modular = factor_mod_p(&fp, p);
    if modular.len() == 1 {
        return vec![f];
    }
    let bound = factor_bound(&f) * BigInt::from(2);
    let (lifted, modulus) = hensel_lift_tree(&f, &modular, p, &bound);

    // subset recombination
    let mut remaining: Vec<ZPoly> = lifted;
    let mut current = f;
    let mut result: Vec<ZPoly> = Vec::new();
    let mut size = 1usize;
    while 2 * size <= remaining.len() {
        let mut found = true;
        while found {
            found = false;
            let idxs: Vec<usize> = (0..remaining.len()).collect();
            for combo in combinations(&idxs, size) {
                let lc = current.last().unwrap().clone();
                let mut cand = vec![lc.clone()];
                for &i in &combo {
                    cand = zp_mul_mod(&cand, &remaining[i], &modulus);
                }
                let cand: ZPoly = trim(cand.iter().map(|c| mod_sym(c, &modulus)).collect());
                let cand = primitive_part(&cand);
                if cand.len() < 2 {
                    continue;
                }
                if let Some(q) = z_div_exact(&current, &cand) {
                    result.push(cand);
                    current = primitive_part(&q);
                    let mut keep = Vec::new();
                    for (i, r) in remaining.into_iter().enumerate() {
                        if !combo.contains(&i) {
                            keep.push(r);
                        }
                    }
                    remaining = keep;
                    found = true;
                    break;
                }
            }
            if 2 * size > remaining.len() {
                break;
            }
        }
        size += 1;
    }
    if deg(&current) >= 1 {
        result.push(current);
    }
    result
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(v: &[i64]) -> ZPoly {
        trim(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn mod_p_factorization() {
        // y^3 - 1 mod 5 = (y - 1)(y^2 + y + 1), y^2+y+1 irreducible mod 5
        let f = p_reduce(&zp(&[-1, 0, 0, 1]), 5);
        let factors = factor_mod_p(&p_monic(&f, 5), 5);
        assert_eq!(factors.len(), 2);
    }

    #[test]
    fn factor_cyclotomic_like() {
        // a^8 - 1 = (a-1)(a+1)(a^2+1)(a^4+1)
        let f = zp(&[-1, 0, 0, 0, 0, 0, 0, 0, 1]);
        let mut factors = factor_primitive_squarefree(&f);
        factors.sort_by_key(|g| (g.len(), format!("{g:?}")));
        assert_eq!(factors.len(), 4);
        assert_eq!(factors[0], zp(&[-1, 1]));
        assert_eq!(factors[1], zp(&[1, 1]));
        assert_eq!(factors[2], zp(&[1, 0, 1]));
        assert_eq!(factors[3], zp(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn irreducible_inputs() {
        // y^8 - 2 is irreducible (Eisenstein)
        let f = zp(&[-2, 0, 0, 0, 0, 0, 0, 0, 1]);
        let factors = factor_primitive_squarefree(&f);
        assert_eq!(factors.len(), 1);
        // y^3 - 3y + 1
        let g = zp(&[1, -3, 0, 1]);
        assert_eq!(factor_primitive_squarefree(&g).len(), 1);
    }

    #[test]
    fn splits_cubic() {
        // y^3 - 1 = (y - 1)(y^2 + y + 1)
        let f = zp(&[-1, 0, 0, 1]);
        let mut factors = factor_primitive_squarefree(&f);
        factors.sort_by_key(|g| g.len());
        assert_eq!(factors, vec![zp(&[-1, 1]), zp(&[1, 1, 1])]);
    }

    #[test]
    fn nontrivial_recombination() {
        // product of two quartics irreducible over Q
        // (y^4 + 1)(y^4 - 2)
        let f = z_mul(&zp(&[1, 0, 0, 0, 1]), &zp(&[-2, 0, 0, 0, 1]));
        let mut factors = factor_primitive_squarefree(&f);
        factors.sort_by_key(|g| format!("{g:?}"));
        assert_eq!(factors.len(), 2);
        assert!(factors.contains(&zp(&[1, 0, 0, 0, 1])));
        assert!(factors.contains(&zp(&[-2, 0, 0, 0, 1])));
    }

    #[test]
    fn big_coefficients_survive_lifting() {
        // (y^2 - 2)(y^2 - 3)(y^2 - 6): pairwise products are squares mod
        // every prime, so recombination must do real work
        let f = z_mul(
            &z_mul(&zp(&[-2, 0, 1]), &zp(&[-3, 0, 1])),
            &zp(&[-6, 0, 1]),
        );
        let factors = factor_primitive_squarefree(&f);
        assert_eq!(factors.len(), 3);
    }
}
