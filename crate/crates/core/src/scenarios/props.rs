//! Randomized identity suites with a seedable deterministic generator:
//! ring axioms, the Jacobi identity, lift independence, the morphism and
//! commutation identities for sharp and flat, and the Spencer interplay.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::fieldops::{
    algebroid_bracket, bracket_vf, flat, interior_spencer, sharp, spencer,
    verify_theorem47, Base, JetSection,
};
use crate::jets::{
    identity_groupoid_jet, jet_compose, jet_invert, JetContext, JetMap, JetVar, MultiIndex,
};
use crate::linalg::determinant;
use crate::mpoly::{MPoly, Mono, Var};
use crate::rat::{rint, Rat};
use crate::ratfunc::RatFunc;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub context: String,
    pub trials: u32,
    pub passed: u32,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.trials == self.passed
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub seed: u64,
    pub trials: u32,
    pub suites: Vec<SuiteResult>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::ok)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "property suites (seed {}, {} trials)", self.seed, self.trials)?;
        for s in &self.suites {
            writeln!(
                f,
                "  [{}] {} {} {}/{}",
                if s.ok() { "pass" } else { "fail" },
                s.name,
                s.context,
                s.passed,
                s.trials
            )?;
        }
        write!(f, "  {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn rand_coeff(rng: &mut ChaCha8Rng) -> Rat {
    rint(rng.gen_range(-3..=3))
}

/// Random polynomial of total degree <= 2 in the given variables, small
/// integer coefficients.
fn rand_poly(rng: &mut ChaCha8Rng, vars: &[Var]) -> RatFunc {
    let mut monos = vec![Mono::one()];
    for v in vars {
        monos.push(Mono::var(v.clone()));
    }
    for i in 0..vars.len() {
        for j in i..vars.len() {
            monos.push(Mono::var(vars[i].clone()).mul(&Mono::var(vars[j].clone())));
        }
    }
    let mut p = MPoly::zero();
    for m in monos {
        p = p.add(&MPoly::term(rand_coeff(rng), m));
    }
    RatFunc::from_poly(p)
}

fn base_vars(over: Base, ctx: &JetContext) -> Vec<Var> {
    (1..=over.dirs(ctx)).map(|i| over.coord(i).to_var()).collect()
}

fn rand_section(rng: &mut ChaCha8Rng, over: Base, q: u32, ctx: JetContext) -> JetSection {
    let vars = base_vars(over, &ctx);
    let dirs = over.dirs(&ctx);
    let mut entries = Vec::new();
    for k in 1..=dirs {
        for mu in MultiIndex::all_up_to(dirs, q) {
            entries.push(((k, mu), rand_poly(rng, &vars)));
        }
    }
    JetSection::new(over, q, ctx, entries).expect("random section is well-formed")
}

/// Random function of the jet variables up to the given order (polynomial,
/// so every identity check is exact).
fn rand_jet_function(rng: &mut ChaCha8Rng, ctx: &JetContext, order: u32) -> RatFunc {
    let mut vars: Vec<Var> = Vec::new();
    for i in 1..=ctx.n {
        vars.push(JetVar::source(i).to_var());
    }
    for k in 1..=ctx.m {
        for mu in MultiIndex::all_up_to(ctx.n, order) {
            vars.push(JetVar::jet(k, mu).to_var());
        }
    }
    rand_poly(rng, &vars)
}

struct Runner {
    rng: ChaCha8Rng,
    suites: Vec<SuiteResult>,
}

impl Runner {
    fn run(
        &mut self,
        name: &str,
        context: &str,
        trials: u32,
        mut body: impl FnMut(&mut ChaCha8Rng) -> bool,
    ) {
        if std::env::var("DGAL_TRACE_SUITES").is_ok() {
            eprintln!("suite {name} [{context}] ...");
        }
        let mut passed = 0;
        for _ in 0..trials {
            if body(&mut self.rng) {
                passed += 1;
            }
        }
        self.suites.push(SuiteResult {
            name: name.to_string(),
            context: context.to_string(),
            trials,
            passed,
        });
    }
}

/// Runs every identity suite. Reports are deterministic in the seed.
pub fn run_property_suites(seed: u64, trials: u32) -> PropertyReport {
    let mut r = Runner {
        rng: ChaCha8Rng::seed_from_u64(seed),
        suites: Vec::new(),
    };

    // exact ring axioms and canonical forms
    r.run("ring-distributivity", "rational functions", trials, |rng| {
        let vars = [Var::new("x1"), Var::new("y1"), Var::new("y1_1")];
        let f = rand_poly(rng, &vars);
        let g = rand_poly(rng, &vars);
        let h = rand_poly(rng, &vars);
        let lhs = &(&f + &g) * &h;
        let rhs = &(&f * &h) + &(&g * &h);
        lhs == rhs
    });
    r.run("leibniz-rule", "partial derivatives", trials, |rng| {
        let vars = [Var::new("y1"), Var::new("y1_1")];
        let f = rand_poly(rng, &vars);
        let g = rand_poly(rng, &vars);
        let v = Var::new("y1");
        let lhs = (&f * &g).partial_derivative(&v);
        let rhs = &(&f.partial_derivative(&v) * &g) + &(&f * &g.partial_derivative(&v));
        lhs == rhs
    });

    // Jacobi identity and lift independence for the algebroid bracket
    for (n, m, q) in [(1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1), (2, 2, 1)] {
        let ctx = JetContext::new(n, m, q);
        let label = format!("n={n} m={m} q={q}");
        r.run("jacobi-identity", &label, trials, |rng| {
            let a = rand_section(rng, Base::Source, q, ctx);
            let b = rand_section(rng, Base::Source, q, ctx);
            let c = rand_section(rng, Base::Source, q, ctx);
            let ab = algebroid_bracket(&a, &b, None).expect("bracket");
            let bc = algebroid_bracket(&b, &c, None).expect("bracket");
            let ca = algebroid_bracket(&c, &a, None).expect("bracket");
            let s1 = algebroid_bracket(&a, &bc, None).expect("bracket");
            let s2 = algebroid_bracket(&b, &ca, None).expect("bracket");
            let s3 = algebroid_bracket(&c, &ab, None).expect("bracket");
            s1.add(&s2).add(&s3).is_zero()
        });
        r.run("lift-independence", &label, trials, |rng| {
            let a = rand_section(rng, Base::Source, q, ctx);
            let b = rand_section(rng, Base::Source, q, ctx);
            let zero_lift = algebroid_bracket(&a, &b, None).expect("bracket");
            // random lifts restricting to the inputs
            let mut at = rand_section(rng, Base::Source, q + 1, ctx);
            let mut bt = rand_section(rng, Base::Source, q + 1, ctx);
            at = overwrite_lower(&at, &a);
            bt = overwrite_lower(&bt, &b);
            let lifted = algebroid_bracket(&a, &b, Some((&at, &bt))).expect("bracket");
            zero_lift == lifted
        });
    }

    // sharp and flat are bracket morphisms; source and target commute
    for (n, m, q) in [(1, 2, 1), (1, 1, 2), (2, 2, 1)] {
        let ctx = JetContext::new(n, m, q);
        let label = format!("n={n} m={m} q={q}");
        r.run("sharp-morphism", &label, trials, |rng| {
            let a = rand_section(rng, Base::Target, q, ctx);
            let b = rand_section(rng, Base::Target, q, ctx);
            let lhs = bracket_vf(&sharp(&a, q).expect("sharp"), &sharp(&b, q).expect("sharp"));
            let ab = algebroid_bracket(&a, &b, None).expect("bracket");
            lhs == sharp(&ab, q).expect("sharp")
        });
        r.run("flat-morphism", &label, trials, |rng| {
            let a = rand_section(rng, Base::Source, q, ctx);
            let b = rand_section(rng, Base::Source, q, ctx);
            let lhs = bracket_vf(&flat(&a, q).expect("flat"), &flat(&b, q).expect("flat"));
            let ab = algebroid_bracket(&a, &b, None).expect("bracket");
            lhs == flat(&ab, q).expect("flat")
        });
        r.run("source-target-commutation", &label, trials, |rng| {
            let a = rand_section(rng, Base::Source, q, ctx);
            let b = rand_section(rng, Base::Target, q, ctx);
            bracket_vf(&flat(&a, q).expect("flat"), &sharp(&b, q).expect("sharp")).is_zero()
        });
    }

    // the commutation identity between prolonged sections and d_i
    for (n, m, q, over) in [
        (1, 1, 1, Base::Source),
        (1, 2, 1, Base::Source),
        (1, 1, 1, Base::Target),
        (1, 2, 1, Base::Target),
    ] {
        let ctx = JetContext::new(n, m, q);
        let label = format!(
            "n={n} m={m} q={q} {}",
            if over == Base::Source { "source" } else { "target" }
        );
        r.run("prolongation-commutation", &label, trials, |rng| {
            let s = rand_section(rng, over, q + 1, ctx);
            let phi = rand_jet_function(rng, &ctx, q);
            verify_theorem47(&phi, &s, 1)
                .map(|res| res.is_zero())
                .unwrap_or(false)
        });
    }

    // Spencer of a holonomic section vanishes; the algebraic bracket of jets
    // is the jet of the bracket
    for (n, q) in [(1, 2), (2, 1)] {
        let ctx = JetContext::new(n, n, q);
        let label = format!("n={n} q={q}");
        r.run("spencer-holonomic", &label, trials, |rng| {
            let vars = base_vars(Base::Source, &ctx);
            let fs: Vec<RatFunc> = (0..n).map(|_| rand_poly(rng, &vars)).collect();
            let j = JetSection::holonomic(Base::Source, q + 1, ctx, &fs).expect("holonomic");
            spencer(&j).entries.values().all(RatFunc::is_zero)
        });
        r.run("jets-bracket-holonomic", &label, trials, |rng| {
            let vars = base_vars(Base::Source, &ctx);
            let fs: Vec<RatFunc> = (0..n).map(|_| rand_poly(rng, &vars)).collect();
            let gs: Vec<RatFunc> = (0..n).map(|_| rand_poly(rng, &vars)).collect();
            let jf = JetSection::holonomic(Base::Source, q, ctx, &fs).expect("holonomic");
            let jg = JetSection::holonomic(Base::Source, q, ctx, &gs).expect("holonomic");
            let got = algebroid_bracket(&jf, &jg, None).expect("bracket");
            let mut classical = Vec::new();
            for k in 0..n {
                let mut v = RatFunc::zero();
                for r in 0..n {
                    let xr = JetVar::source(r + 1).to_var();
                    let t1 = &fs[r] * &gs[k].partial_derivative(&xr);
                    let t2 = &gs[r] * &fs[k].partial_derivative(&xr);
                    v = &v + &(&t1 - &t2);
                }
                classical.push(v);
            }
            let expect = JetSection::holonomic(Base::Source, q, ctx, &classical).expect("holonomic");
            got == expect
        });
    }

    // Spencer operator against the bracket. The bare display
    //   i(z) d[xi, eta] = [i(z) d xi, eta] + [xi, i(z) d eta]
    // fails on explicit sections; the identity holds with the formal
    // Lie derivative corrections
    //   ... + i(L(eta_1) z) d xi_{q+1} - i(L(xi_1) z) d eta_{q+1}
    // where (L(xi_1) z)^r = xi^s d_s z^r - z^s xi^r_s.
    for n in [1usize, 2] {
        let q = 1;
        let ctx = JetContext::new(n, n, q);
        let label = format!("n={n} q={q}");
        r.run("spencer-of-bracket", &label, trials, |rng| {
            let a = rand_section(rng, Base::Source, q + 1, ctx);
            let b = rand_section(rng, Base::Source, q + 1, ctx);
            let zeta: Vec<RatFunc> = (0..n)
                .map(|_| RatFunc::constant(rand_coeff(rng)))
                .collect();
            let zeta_section = section_from_order0(&zeta, ctx);
            let bracket_top = algebroid_bracket(&a, &b, None).expect("bracket");
            let lhs = interior_spencer(&zeta_section, &bracket_top).expect("contraction");
            let ia = interior_spencer(&zeta_section, &a).expect("contraction");
            let ib = interior_spencer(&zeta_section, &b).expect("contraction");
            let t1 = algebroid_bracket(&ia, &b.truncate(q), None).expect("bracket");
            let t2 = algebroid_bracket(&a.truncate(q), &ib, None).expect("bracket");
            // L(s_1) zeta with constant zeta: -(z^s * s^r_{1_s})
            let lie = |s: &JetSection| -> JetSection {
                let mut comps = Vec::new();
                for r_idx in 1..=n {
                    let mut v = RatFunc::zero();
                    for (s_idx, z) in zeta.iter().enumerate() {
                        let first = s.get(r_idx, &MultiIndex::zero().succ(s_idx + 1));
                        v = &v - &(z * &first);
                    }
                    comps.push(v);
                }
                section_from_order0(&comps, ctx)
            };
            let c1 = interior_spencer(&lie(&b), &a).expect("contraction");
            let c2 = interior_spencer(&lie(&a), &b).expect("contraction");
            lhs == t1.add(&t2).add(&c1).sub(&c2)
        });
    }

    // groupoid jet composition: associative up to order 2, inverse
    // composes to the identity
    for m in [1usize, 2] {
        let ctx = JetContext::new(m, m, 2);
        let label = format!("m={m} order 2");
        r.run("compose-inverse-roundtrip", &label, trials, |rng| {
            let g = rand_groupoid_jet(rng, m);
            let gmat: Vec<Vec<RatFunc>> = (1..=m)
                .map(|u| {
                    (1..=m)
                        .map(|k| g[&(u, MultiIndex::zero().succ(k))].clone())
                        .collect()
                })
                .collect();
            if determinant(&gmat).is_zero() {
                return true; // skip singular draws
            }
            let inv = jet_invert(&g, 2, &ctx).expect("invertible");
            // compose(inverse o g): treat g as the inner jets over m dirs
            let mut inner = JetMap::new();
            for ((u, lam), v) in &g {
                inner.insert((*u, lam.clone()), v.clone());
            }
            for u in 1..=m {
                inner
                    .entry((u, MultiIndex::zero()))
                    .or_insert_with(|| RatFunc::var(JetVar::jet(u, MultiIndex::zero()).to_var()));
            }
            let composed = jet_compose(&inner, &with_order0(&inv, m), 2, &ctx).expect("compose");
            let id = identity_groupoid_jet(2, &ctx);
            for ((u, lam), v) in &composed {
                if lam.order() == 0 {
                    continue;
                }
                if v != &id[&(*u, lam.clone())] {
                    return false;
                }
            }
            true
        });
    }

    PropertyReport {
        seed,
        trials,
        suites: r.suites,
    }
}

/// Order-0 section holding the given component functions.
fn section_from_order0(comps: &[RatFunc], ctx: JetContext) -> JetSection {
    let entries = comps
        .iter()
        .enumerate()
        .map(|(i, v)| ((i + 1, MultiIndex::zero()), v.clone()))
        .collect();
    JetSection::new(Base::Source, 0, ctx, entries).expect("order-0 section")
}

fn overwrite_lower(top: &JetSection, low: &JetSection) -> JetSection {
    let mut entries: Vec<((usize, MultiIndex), RatFunc)> = Vec::new();
    for ((k, mu), v) in top.components() {
        if mu.order() == top.q {
            entries.push(((*k, mu.clone()), v.clone()));
        }
    }
    for ((k, mu), v) in low.components() {
        entries.push(((*k, mu.clone()), v.clone()));
    }
    JetSection::new(top.over, top.q, top.ctx, entries).expect("well-formed lift")
}

/// Random groupoid jet: constant first-order block near the identity (so it
/// is invertible), linear second-order entries. Inversion turns these into
/// genuine rational functions, which keeps the roundtrip check honest while
/// the coefficient sizes stay at desk scale.
fn rand_groupoid_jet(rng: &mut ChaCha8Rng, m: usize) -> JetMap {
    let vars: Vec<Var> = (1..=m)
        .map(|k| JetVar::jet(k, MultiIndex::zero()).to_var())
        .collect();
    let mut out = JetMap::new();
    for u in 1..=m {
        for lam in MultiIndex::all_up_to(m, 2) {
            if lam.order() == 0 {
                continue;
            }
            let value = if lam.order() == 1 {
                let diag = if lam.count(u) == 1 { rint(2) } else { rint(0) };
                RatFunc::constant(diag + rand_coeff(rng))
            } else {
                let mut p = RatFunc::constant(rand_coeff(rng));
                for v in &vars {
                    p = &p + &(&RatFunc::constant(rand_coeff(rng)) * &RatFunc::var(v.clone()));
                }
                p
            };
            out.insert((u, lam), value);
        }
    }
    out
}

fn with_order0(g: &JetMap, m: usize) -> JetMap {
    let mut out = g.clone();
    for u in 1..=m {
        out.entry((u, MultiIndex::zero()))
            .or_insert_with(|| RatFunc::var(JetVar::jet(u, MultiIndex::zero()).to_var()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_and_are_deterministic() {
        let a = run_property_suites(42, 3);
        assert!(a.passed(), "{a}");
        let b = run_property_suites(42, 3);
        assert_eq!(a.to_json(), b.to_json());
        // a different seed still passes
        let c = run_property_suites(7, 2);
        assert!(c.passed(), "{c}");
    }
}
