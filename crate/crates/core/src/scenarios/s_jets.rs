//! Scenarios exercising sections, prolongations, brackets, and projections.

use crate::dist::{is_invariant, Distribution};
use crate::fieldops::{
    algebroid_bracket, flat, prolong_vertical, sharp, spencer, verify_theorem47, Base, JetSection,
};
use crate::jets::{
    identity_groupoid_jet, jet_compose, prolong_linear_system, total_derivative, JetContext,
    JetMap, JetVar, MultiIndex,
};
use crate::ratfunc::RatFunc;

use super::util::{e, section, vf};
use super::{Checker, Provenance};

pub fn ex1_2_pfaffian_fields(c: &mut Checker) {
    let ctx = JetContext::new(1, 2, 2);
    let phi = e("y2*y1_1");
    let dphi = total_derivative(&phi, 1, &ctx).expect("derivative");
    c.check_expr(
        "d_x(y2 y1_x) = y2 y1_xx + y1_x y2_x",
        Provenance::Trivial,
        &dphi,
        "y2*y1_11 + y1_1*y2_1",
    );
    // the first-order infinitesimal system of the preserving pseudogroup
    let ctx1 = JetContext::new(1, 2, 1);
    let theta1 = Distribution::new(
        "Theta(1)",
        vec![
            vf(ctx1, &[("y1", "1")]),
            vf(ctx1, &[("y2", "y2"), ("y1_1", "-y1_1"), ("y2_1", "y2_1")]),
            vf(ctx1, &[("y2_1", "y1_1")]),
        ],
        ctx1,
    );
    c.check_true(
        "phi is invariant under the preserving pseudogroup",
        Provenance::Paper,
        is_invariant(&theta1, &phi).0,
    );
    // the translation subgroup preserves K' = Q<phi, y2_x> ...
    let translation = vf(ctx1, &[("y1", "1")]);
    c.check_true(
        "translations preserve phi, y2_x, and y2",
        Provenance::Paper,
        translation.apply(&phi).is_zero()
            && translation.apply(&e("y2_1")).is_zero()
            && translation.apply(&e("y2")).is_zero(),
    );
    // ... and therefore also the larger field K'' = Q<y1_x, y2>
    c.check_eq(
        "phi/y2 = y1_x exhibits K' inside K''",
        Provenance::Trivial,
        &(&phi / &e("y2")),
        &e("y1_1"),
    );
    // but the scaling generator distinguishes the two fields
    let scaling = &theta1.generators[1];
    c.check_true(
        "the scaling field moves y2 but fixes phi",
        Provenance::Paper,
        !scaling.apply(&e("y2")).is_zero() && scaling.apply(&phi).is_zero(),
    );
}

pub fn ex4_9_flat_formula(c: &mut Checker) {
    let ctx = JetContext::new(1, 1, 2);
    let xi2 = section(Base::Source, 2, ctx, &[(1, "1", "-1")]);
    let f = flat(&xi2, 2).expect("flat");
    c.check_true(
        "flat(0,-1,0) = y_x d/dy_x + 2 y_xx d/dy_xx",
        Provenance::Paper,
        f == vf(ctx, &[("y1_1", "y1_1"), ("y1_11", "2*y1_11")]),
    );
    let d = spencer(&xi2);
    c.check_true(
        "Spencer image of (0,-1,0) is (1, 0)",
        Provenance::Paper,
        d.entries[&(1, MultiIndex::zero(), 1)] == e("1")
            && d.entries[&(1, MultiIndex::from_dirs("1").unwrap(), 1)].is_zero(),
    );
    // holonomic section: all entries vanish
    let hol = JetSection::holonomic(Base::Source, 2, ctx, &[e("x1^2")]).expect("holonomic");
    c.check_true(
        "holonomic (x^2, 2x, 2) has zero Spencer image",
        Provenance::Trivial,
        hol.is_holonomic(),
    );
    let direct = section(Base::Source, 2, ctx, &[(1, "", "x1")]);
    let dd = spencer(&direct);
    c.check_true(
        "Spencer image of (x, 0, 0) is (1, 0)",
        Provenance::Derived,
        dd.entries[&(1, MultiIndex::zero(), 1)] == e("1")
            && dd.entries[&(1, MultiIndex::from_dirs("1").unwrap(), 1)].is_zero(),
    );
    // the commutation identity on this instance, for concrete functions
    for phi in ["y1*y1_1", "y1_1/y1", "y1^2 + y1_1"] {
        match verify_theorem47(&e(phi), &xi2, 1) {
            Ok(r) => c.check_zero(
                &format!("commutation residual for {phi}"),
                Provenance::Paper,
                &r,
            ),
            Err(err) => c.fail("commutation identity", Provenance::Paper, err.to_string()),
        }
    }
    // the display: flat(xi_2) d_x phi = d_x(y_x dphi/dy_x) + d_x phi
    for phi in ["y1*y1_1", "y1^2 + y1_1"] {
        let p = e(phi);
        let lhs = f.apply(&total_derivative(&p, 1, &ctx).expect("d"));
        let inner = &e("y1_1") * &p.partial_derivative(&crate::mpoly::Var::new("y1_1"));
        let rhs = &total_derivative(&inner, 1, &ctx).expect("d")
            + &total_derivative(&p, 1, &ctx).expect("d");
        c.check_eq(
            &format!("boxed display for {phi}"),
            Provenance::Paper,
            &lhs,
            &rhs,
        );
    }
}

pub fn ex4_13_algebroid_bracket(c: &mut Checker) {
    let ctx = JetContext::new(2, 2, 1);
    let system = vec![e("x2*y1_1 + y2"), e("y1_2")];
    match prolong_linear_system(&system, &ctx) {
        Ok(result) => {
            c.check_true(
                "crossed derivatives yield xi^1_1 + xi^2_2 = 0",
                Provenance::Paper,
                result.new_equations == vec![e("y1_1 + y2_2")],
            );
        }
        Err(err) => c.fail("prolongation", Provenance::Paper, err.to_string()),
    }
    // closed and empty systems
    let ctx11 = JetContext::new(1, 1, 1);
    match prolong_linear_system(&[e("y1_1")], &ctx11) {
        Ok(r) => c.check_true(
            "already-closed system yields nothing new",
            Provenance::Trivial,
            r.new_equations.is_empty(),
        ),
        Err(err) => c.fail("closed system", Provenance::Trivial, err.to_string()),
    }
    match prolong_linear_system(&[], &ctx) {
        Ok(r) => c.check_true(
            "empty system stays empty",
            Provenance::Trivial,
            r.prolonged.is_empty() && r.new_equations.is_empty(),
        ),
        Err(err) => c.fail("empty system", Provenance::Trivial, err.to_string()),
    }

    // the two printed sections and their algebroid bracket
    let xi = section(
        Base::Source,
        1,
        ctx,
        &[(2, "", "-x2"), (1, "1", "1")],
    );
    let eta = section(
        Base::Source,
        1,
        ctx,
        &[(1, "", "1"), (2, "1", "1"), (2, "2", "1")],
    );
    match algebroid_bracket(&xi, &eta, None) {
        Ok(b) => {
            let mut only_z21 = true;
            for ((k, mu), value) in b.components() {
                let expected_one = *k == 2 && mu == &MultiIndex::from_dirs("1").unwrap();
                if expected_one && !value.is_one() {
                    only_z21 = false;
                }
                if !expected_one && !value.is_zero() {
                    only_z21 = false;
                }
            }
            c.check_true(
                "bracket components vanish except zeta^2_1 = 1",
                Provenance::Derived,
                only_z21,
            );
            let in_r1 = (&(&e("x2") * &b.get(1, &MultiIndex::from_dirs("1").unwrap()))
                + &b.get(2, &MultiIndex::zero()))
                .is_zero()
                && b.get(1, &MultiIndex::from_dirs("2").unwrap()).is_zero();
            c.check_true("the bracket lies in R_1", Provenance::Paper, in_r1);
        }
        Err(err) => c.fail("algebroid bracket", Provenance::Derived, err.to_string()),
    }
}

pub fn ex4_17_fundamental_sets(c: &mut Checker) {
    // unimodular affine action: five generators prolonged to orders 2 and 3
    let ctx3 = JetContext::new(1, 2, 3);
    let raw = vec![
        vf(ctx3, &[("y1", "1")]),
        vf(ctx3, &[("y2", "1")]),
        vf(ctx3, &[("y1", "y1"), ("y2", "-y2")]),
        vf(ctx3, &[("y1", "y2")]),
        vf(ctx3, &[("y2", "y1")]),
    ];
    let theta3 = Distribution::new(
        "Theta(3)",
        raw.iter()
            .map(|g| prolong_vertical(g, 3, &ctx3).expect("prolong"))
            .collect(),
        ctx3,
    );
    let phi = e("y1_1*y2_11 - y2_1*y1_11");
    c.check_true(
        "phi = y1_x y2_xx - y2_x y1_xx is invariant",
        Provenance::Paper,
        is_invariant(&theta3, &phi).0,
    );
    let dphi = total_derivative(&phi, 1, &ctx3).expect("derivative");
    c.check_expr(
        "d_x phi = y1_x y2_xxx - y2_x y1_xxx",
        Provenance::Paper,
        &dphi,
        "y1_1*y2_111 - y2_1*y1_111",
    );
    let psi = e("y1_11*y2_111 - y2_11*y1_111");
    c.check_true(
        "d_x phi and the extra psi = y1_xx y2_xxx - y2_xx y1_xxx are invariant",
        Provenance::Paper,
        is_invariant(&theta3, &dphi).0 && is_invariant(&theta3, &psi).0,
    );
    // psi is genuinely new: no exact linear combination of phi and d_x phi
    c.check_true(
        "psi is independent of {phi, d_x phi}",
        Provenance::Paper,
        crate::dist::rational_combination(&psi, &[phi.clone(), dphi.clone()]).is_none(),
    );

    // the linear variant: unimodular action without translations
    let ctx2 = JetContext::new(1, 2, 2);
    let raw2 = vec![
        vf(ctx2, &[("y1", "y1"), ("y2", "-y2")]),
        vf(ctx2, &[("y1", "y2")]),
        vf(ctx2, &[("y2", "y1")]),
    ];
    let theta2 = Distribution::new(
        "Theta(2)",
        raw2.iter()
            .map(|g| prolong_vertical(g, 2, &ctx2).expect("prolong"))
            .collect(),
        ctx2,
    );
    let phi1 = e("y1*y2_1 - y2*y1_1");
    let dphi1 = total_derivative(&phi1, 1, &ctx2).expect("derivative");
    let psi1 = e("y1_1*y2_11 - y2_1*y1_11");
    c.check_true(
        "order-1 invariant, its derivative, and the extra second-order psi",
        Provenance::Paper,
        is_invariant(&theta2, &phi1).0
            && is_invariant(&theta2, &dphi1).0
            && is_invariant(&theta2, &psi1).0,
    );
    c.check_expr(
        "d_x(y1 y2_x - y2 y1_x) = y1 y2_xx - y2 y1_xx",
        Provenance::Paper,
        &dphi1,
        "y1*y2_11 - y2*y1_11",
    );
    // symbol certificate: the order-2 symbol vanishes iff the Wronskian does not
    let symbol = Distribution::new(
        "symbol",
        vec![
            vf(ctx2, &[("y1_11", "y1"), ("y2_11", "y2")]),
            vf(ctx2, &[("y1_11", "y1_1"), ("y2_11", "y2_1")]),
        ],
        ctx2,
    );
    let (rank, cert) = symbol.rank();
    c.check_true(
        "symbol rank certificate is the Wronskian",
        Provenance::Paper,
        rank == 2 && cert.as_ref() == Some(&e("y1*y2_1 - y2*y1_1")),
    );
}

pub fn ex5_2_order3(c: &mut Checker) {
    let ctx = JetContext::new(1, 1, 3);
    // sharp table: unit sections at each order
    let rows = [
        ("", vf(ctx, &[("y1", "1")])),
        (
            "1",
            vf(ctx, &[("y1_1", "y1_1"), ("y1_11", "y1_11"), ("y1_111", "y1_111")]),
        ),
        (
            "11",
            vf(ctx, &[("y1_11", "y1_1^2"), ("y1_111", "3*y1_1*y1_11")]),
        ),
        ("111", vf(ctx, &[("y1_111", "y1_1^3")])),
    ];
    let mut sharp_ok = true;
    for (dirs, expected) in &rows {
        let s = section(Base::Target, 3, ctx, &[(1, dirs, "1")]);
        let got = sharp(&s, 3).expect("sharp");
        if got != *expected {
            sharp_ok = false;
            c.note(format!("sharp table row '{dirs}' recomputed as {got}"));
        }
    }
    c.check_true("sharp table verbatim", Provenance::Paper, sharp_ok);

    // flat table: negative unit sections at orders 1..3
    let flats = [
        (
            "1",
            vf(
                ctx,
                &[("y1_1", "y1_1"), ("y1_11", "2*y1_11"), ("y1_111", "3*y1_111")],
            ),
        ),
        ("11", vf(ctx, &[("y1_11", "y1_1"), ("y1_111", "3*y1_11")])),
        ("111", vf(ctx, &[("y1_111", "y1_1")])),
    ];
    let mut flat_ok = true;
    for (dirs, expected) in &flats {
        let s = section(Base::Source, 3, ctx, &[(1, dirs, "-1")]);
        let got = flat(&s, 3).expect("flat");
        if got != *expected {
            flat_ok = false;
            c.note(format!("flat table row '{dirs}' recomputed as {got}"));
        }
    }
    c.check_true("flat table verbatim", Provenance::Paper, flat_ok);

    // the chain-rule display for the third-order composite jet
    let mut src = JetMap::new();
    for mu in MultiIndex::all_up_to(1, 3) {
        src.insert(
            (1, mu.clone()),
            RatFunc::var(JetVar::jet(1, mu).to_var()),
        );
    }
    let mut g = JetMap::new();
    g.insert((1, MultiIndex::zero()), e("g1"));
    for dirs in ["1", "11", "111"] {
        let lam = MultiIndex::from_dirs(dirs).unwrap();
        g.insert(
            (1, lam.clone()),
            RatFunc::var(JetVar::groupoid(1, lam).to_var()),
        );
    }
    match jet_compose(&src, &g, 3, &ctx) {
        Ok(composed) => {
            c.check_expr(
                "ybar_xxx = g1 y_xxx + 3 g11 y_x y_xx + g111 y_x^3",
                Provenance::Paper,
                &composed[&(1, MultiIndex::from_dirs("111").unwrap())],
                "g1_1*y1_111 + 3*g1_11*y1_1*y1_11 + g1_111*y1_1^3",
            );
            c.check_expr(
                "ybar_xx = g1 y_xx + g11 y_x^2",
                Provenance::Paper,
                &composed[&(1, MultiIndex::from_dirs("11").unwrap())],
                "g1_1*y1_11 + g1_11*y1_1^2",
            );
        }
        Err(err) => c.fail("jet composition", Provenance::Paper, err.to_string()),
    }
    // identity jet leaves everything unchanged
    let id = identity_groupoid_jet(3, &ctx);
    match jet_compose(&src, &id, 3, &ctx) {
        Ok(composed) => c.check_true(
            "composition with the identity jet is the identity",
            Provenance::Trivial,
            composed == src,
        ),
        Err(err) => c.fail("identity composition", Provenance::Trivial, err.to_string()),
    }
}
