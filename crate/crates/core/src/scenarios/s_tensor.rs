//! Scenarios on the doubled universe: group parameters and groupoid jet
//! entries as constants of the extended reciprocal distributions.

use crate::dist::{
    all_brackets_zero, bar_extend, commutes, is_tensor_constant, stability_check, Distribution,
    Relation,
};
use crate::galois::verify_hopf_axioms;
use crate::jets::JetContext;
use crate::linalg::{determinant, generic_rank, solve_linear, LinearOutcome};
use crate::ratfunc::RatFunc;

use super::util::{e, jv, vf};
use super::{Checker, Provenance};

pub fn ex1_3_affine_bb(c: &mut Checker) {
    let ctx = JetContext::with_params(1, 1, 0, 2);
    // left- and right-invariant fields on the affine group
    let theta = Distribution::new(
        "Theta",
        vec![
            vf(ctx, &[("a1", "a1"), ("a2", "a2")]),
            vf(ctx, &[("a2", "1")]),
        ],
        ctx,
    );
    let delta = Distribution::new(
        "Delta",
        vec![vf(ctx, &[("a1", "a1")]), vf(ctx, &[("a2", "a1")])],
        ctx,
    );
    c.check_true(
        "[Theta, Delta] = 0",
        Provenance::Paper,
        all_brackets_zero(&commutes(&theta, &delta)),
    );
    // the stable intermediate field: delta(a2/a1) stays inside Q(a2/a1)
    let w = e("a2/a1");
    c.check_eq(
        "delta1(a2/a1) = -a2/a1, inside the field",
        Provenance::Derived,
        &delta.generators[0].apply(&w),
        &(-&w),
    );
    c.note(
        "printed value delta1(a2/a1) = 0 disagrees with the direct computation \
         -a2/a1; the recomputed value still lies in Q(a2/a1), so the stability \
         claim stands",
    );
    c.check_eq(
        "delta2(a2/a1) = 1",
        Provenance::Paper,
        &delta.generators[1].apply(&w),
        &RatFunc::one(),
    );
    // the unstable one: delta1(a1 a2) = a1 a2, delta2(a1 a2) = a1^2
    let v = e("a1*a2");
    let table = stability_check(&delta, &[v.clone()]);
    c.check_true(
        "delta1(a1 a2) = a1 a2 but delta2(a1 a2) = a1^2 leaves the span",
        Provenance::Paper,
        table[0].combination.as_deref() == Some(&[crate::rat::rint(1)])
            && table[1].value == e("a1^2")
            && table[1].combination.is_none(),
    );

    // the tensor-product move: extended Delta kills exactly the composite
    // parameters b1 = abar1/a1 and b2 = abar2 - (abar1/a1) a2
    let ext = Distribution::new(
        "Delta-ext",
        delta
            .generators
            .iter()
            .map(|g| bar_extend(g).expect("unbarred"))
            .collect(),
        ctx,
    );
    let b1 = e("ba1/a1");
    let b2 = e("ba2 - (ba1/a1)*a2");
    for (name, expr) in [("b1", &b1), ("b2", &b2)] {
        match is_tensor_constant(expr, &ext, &[]) {
            Ok(r) => c.check_true(
                &format!("{name} is a constant of the doubled universe"),
                Provenance::Paper,
                r.constant,
            ),
            Err(err) => c.fail(name, Provenance::Paper, err.to_string()),
        }
    }
    // a2/a1 alone is not such a constant
    match is_tensor_constant(&w, &ext, &[]) {
        Ok(r) => c.check_true(
            "a2/a1 is not killed by the extension",
            Provenance::Trivial,
            !r.constant,
        ),
        Err(err) => c.fail("a2/a1", Provenance::Trivial, err.to_string()),
    }

    // composition law (b1 a1, b1 a2 + b2) and the coalgebra axioms
    match verify_hopf_axioms(&[b1, b2], &[e("v1*u1"), e("v1*u2 + v2")]) {
        Ok(report) => {
            c.check_true(
                "affine composition law and coalgebra axioms hold",
                Provenance::Paper,
                report.all_zero(),
            );
        }
        Err(err) => c.fail("coalgebra axioms", Provenance::Paper, err.to_string()),
    }
    // the multiplicative parameter a = ybar/y as comorphism instance
    match crate::galois::hopf_comorphisms(&e("by1/y1")) {
        Ok(images) => {
            c.check_eq(
                "diagonal of ybar/y is ybarbar/y",
                Provenance::Paper,
                &images.diagonal,
                &e("bby1/y1"),
            );
            c.check_eq(
                "augmentation is 1",
                Provenance::Paper,
                &images.augmentation,
                &RatFunc::one(),
            );
            c.check_eq(
                "antipode is y/ybar",
                Provenance::Paper,
                &images.antipode,
                &e("y1/by1"),
            );
        }
        Err(err) => c.fail("comorphisms", Provenance::Paper, err.to_string()),
    }
    match verify_hopf_axioms(&[e("by1/y1")], &[e("v1*u1")]) {
        Ok(report) => c.check_true(
            "multiplicative parameter satisfies the coalgebra axioms",
            Provenance::Paper,
            report.all_zero(),
        ),
        Err(err) => c.fail("multiplicative axioms", Provenance::Paper, err.to_string()),
    }
}

pub fn ex3_2_gl2_constants(c: &mut Checker) {
    let ctx = JetContext::new(1, 2, 1);
    let delta = vf(ctx, &[("y1_1", "y1"), ("y2_1", "y2")]);
    let ext = Distribution::new(
        "Delta",
        vec![bar_extend(&delta).expect("unbarred")],
        ctx,
    );
    let a = e("(y2_1*by1 - y2*by1_1)/(y1*y2_1 - y2*y1_1)");
    match is_tensor_constant(&a, &ext, &[]) {
        Ok(r) => c.check_true(
            "the GL(2) parameter is killed by the extended derivation",
            Provenance::Paper,
            r.constant,
        ),
        Err(err) => c.fail("parameter constancy", Provenance::Paper, err.to_string()),
    }
    // the underlying graph data: a = (y2_x ybar1 - y2 ybar1_x)/W solves the
    // first row of Mbar = A M
    let w = e("y1*y2_1 - y2*y1_1");
    let b = e("(y1*by1_1 - y1_1*by1)/(y1*y2_1 - y2*y1_1)");
    let recombined = &(&a * &e("y1")) + &(&b * &e("y2"));
    c.check_eq(
        "a y1 + b y2 = ybar1",
        Provenance::Derived,
        &recombined,
        &e("by1"),
    );
    c.check_true(
        "the Wronskian is the denominator certificate",
        Provenance::Paper,
        !w.is_zero(),
    );
}

pub fn ex5_1_tensor_constants(c: &mut Checker) {
    let ctx = JetContext::new(1, 2, 2);
    // first-order groupoid entries as rational functions of the doubled jets
    let g11 = e("by1_1/y1_1"); // dybar1/dy1 = ybar1_x/y1_x = y2/ybar2
    let g22 = e("by2/y2"); // dybar2/dy2
    let g21 = e("by2_1/y1_1 - y2_1/by1_1"); // dybar2/dy1
    let relation = Relation::new(jv("by2"), e("y2*y1_1/by1_1"));

    let d1 = bar_extend(&vf(ctx, &[("y1_1", "y1_1"), ("y2_1", "y2_1")])).expect("unbarred");
    let d2 = bar_extend(&vf(ctx, &[("y2_1", "y2")])).expect("unbarred");
    let delta1 = Distribution::new("Delta(1)", vec![d1.clone(), d2.clone()], ctx);
    for (name, entry) in [("dybar1/dy1", &g11), ("dybar2/dy2", &g22), ("dybar2/dy1", &g21)] {
        match is_tensor_constant(entry, &delta1, &[relation.clone()]) {
            Ok(r) => c.check_true(
                &format!("{name} is killed by the extended first-order pair"),
                Provenance::Paper,
                r.constant,
            ),
            Err(err) => c.fail(name, Provenance::Paper, err.to_string()),
        }
    }
    // the displayed quotient for delta2 before rewriting
    let raw = d2.apply(&g21);
    c.check_eq(
        "delta2(dybar2/dy1) = (ybar2 ybar1_x - y2 y1_x)/(y1_x ybar1_x)",
        Provenance::Paper,
        &raw,
        &e("(by2*by1_1 - y2*y1_1)/(y1_1*by1_1)"),
    );
    // the two alternative expressions for dybar1/dy1 agree on the relation
    let alt = e("y2/by2");
    let diff = &g11 - &alt;
    let reduced = diff
        .substitute(
            &[(relation.solve_for.clone(), relation.equals.clone())]
                .into_iter()
                .collect(),
        )
        .expect("substitution");
    c.check_zero(
        "ybar1_x/y1_x = y2/ybar2 under the defining relation",
        Provenance::Paper,
        &reduced,
    );

    // second order: solve the chain-rule display for the order-two entries
    // and check they are killed by the order-two reciprocal fields
    let g111 = &(&e("by1_11") - &(&g11 * &e("y1_11"))) / &e("y1_1^2");
    let g211 = &(&(&(&e("by2_11") - &(&g21 * &e("y1_11"))) - &(&g22 * &e("y2_11")))
        - &(&(&(&g21 / &e("y2")) * &e("2*y1_1")) * &e("y2_1")))
        / &e("y1_1^2");
    let d1_2 = bar_extend(&vf(
        ctx,
        &[
            ("y1_1", "y1_1"),
            ("y2_1", "y2_1"),
            ("y1_11", "2*y1_11"),
            ("y2_11", "2*y2_11"),
        ],
    ))
    .expect("unbarred");
    let d2_2 = bar_extend(&vf(ctx, &[("y2_1", "y2"), ("y2_11", "2*y2_1")])).expect("unbarred");
    let d3_2 = bar_extend(&vf(ctx, &[("y2_11", "y2")])).expect("unbarred");
    let d4_2 = bar_extend(&vf(ctx, &[("y1_11", "y1_1"), ("y2_11", "y2_1")])).expect("unbarred");
    let delta2 = Distribution::new(
        "Delta(2)",
        vec![d1_2, d2_2.clone(), d3_2.clone(), d4_2],
        ctx,
    );
    match is_tensor_constant(&g111, &delta2, &[relation.clone()]) {
        Ok(r) => c.check_true(
            "the recomputed d2ybar1/dy1dy1 is killed by all four",
            Provenance::Paper,
            r.constant,
        ),
        Err(err) => c.fail("second-order entry", Provenance::Paper, err.to_string()),
    }
    match is_tensor_constant(&g211, &delta2, &[relation.clone()]) {
        Ok(r) => c.check_true(
            "the recomputed d2ybar2/dy1dy1 is killed, including by delta3",
            Provenance::Paper,
            r.constant,
        ),
        Err(err) => c.fail("mixed second-order entry", Provenance::Paper, err.to_string()),
    }
    c.note(
        "the second-order entries are recomputed from the chain rule; the printed \
         expansion is recovered with the redundant d_x term resolved to zero",
    );
}

pub fn ex5_7_wronskian_emerges(c: &mut Checker) {
    let ctx = JetContext::new(1, 2, 1);
    // groupoid entries from Mbar = G M
    let w = e("y1*y2_1 - y2*y1_1");
    let g = [
        [
            e("(by1*y2_1 - by1_1*y2)/(y1*y2_1 - y2*y1_1)"),
            e("(by1_1*y1 - by1*y1_1)/(y1*y2_1 - y2*y1_1)"),
        ],
        [
            e("(by2*y2_1 - by2_1*y2)/(y1*y2_1 - y2*y1_1)"),
            e("(by2_1*y1 - by2*y1_1)/(y1*y2_1 - y2*y1_1)"),
        ],
    ];
    // reconstruction: G M = Mbar
    let mut recon_ok = true;
    for (u, row) in g.iter().enumerate() {
        let names = if u == 0 {
            ["by1", "by1_1"]
        } else {
            ["by2", "by2_1"]
        };
        let c0 = &(&row[0] * &e("y1")) + &(&row[1] * &e("y2"));
        let c1 = &(&row[0] * &e("y1_1")) + &(&row[1] * &e("y2_1"));
        if c0 != e(names[0]) || c1 != e(names[1]) {
            recon_ok = false;
        }
    }
    c.check_true(
        "G reconstructs both barred columns",
        Provenance::Derived,
        recon_ok,
    );

    // each entry is killed by both extended derivations
    let d1 = bar_extend(&vf(ctx, &[("y1_1", "y1"), ("y2_1", "y2")])).expect("unbarred");
    let d2 = bar_extend(&vf(ctx, &[("y1_1", "y1_1"), ("y2_1", "y2_1")])).expect("unbarred");
    let dist = Distribution::new("Delta", vec![d1, d2], ctx);
    let mut killed = true;
    for row in &g {
        for entry in row {
            match is_tensor_constant(entry, &dist, &[]) {
                Ok(r) => killed &= r.constant,
                Err(err) => {
                    c.fail("entry constancy", Provenance::Paper, err.to_string());
                    return;
                }
            }
        }
    }
    c.check_true(
        "all four groupoid entries are constants of the doubled universe",
        Provenance::Paper,
        killed,
    );

    // the emerging 2x2 system: its determinant is the Wronskian
    let m = vec![
        vec![e("y1"), e("y2")],
        vec![e("y1_1"), e("y2_1")],
    ];
    c.check_eq(
        "determinant of the linear system is the Wronskian",
        Provenance::Paper,
        &determinant(&m),
        &w,
    );
    let r = generic_rank(&m);
    c.check_true(
        "generic rank 2 with the Wronskian as certificate",
        Provenance::Paper,
        r.rank == 2 && r.certificate.as_ref() == Some(&w),
    );
    match solve_linear(&m, &[RatFunc::zero(), RatFunc::zero()]) {
        LinearOutcome::Solved {
            particular,
            nullspace,
        } => c.check_true(
            "the homogeneous system has only the zero solution generically",
            Provenance::Paper,
            particular.iter().all(RatFunc::is_zero) && nullspace.is_empty(),
        ),
        LinearOutcome::Inconsistent { .. } => {
            c.fail("homogeneous solve", Provenance::Paper, "inconsistent".to_string())
        }
    }
}
