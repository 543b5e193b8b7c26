//! Composite verification flows producing full certificate reports.
//! These are the routines behind the command-line surface.

use crate::actions::{invariants, verify_module_algebra, ModuleAlgebra, Side};
use crate::hopf::{
    dual_via_pairing_agrees, galois_maps, is_compact_quantum_subgroup, is_unimodular,
    left_integrals, left_invariant_functionals, normalized_left_integral, right_integrals,
    right_invariant_functionals, solve_antipode, solve_counit, verify_bialgebra, verify_hopf,
    FiniteDimBialgebra, FiniteHopfAlgebra, HopfMorphism,
};
use crate::linsolve;
use crate::matrix::Matrix;
use crate::report::{CheckReport, Report};
use crate::util::fmt_combo;

/// Everything checkable about one structure-constant file: the
/// bialgebra axioms, derived counit and antipode, the full Hopf
/// verification, bijectivity of the canonical maps, integrals,
/// invariant functionals and unimodularity. Returns the verified Hopf
/// algebra when every stage passes.
pub fn verify_hopf_suite(
    b: &FiniteDimBialgebra,
    antipode: Option<Matrix>,
) -> (Report, Option<FiniteHopfAlgebra>) {
    let mut report = Report::new("verify-hopf");
    let bia = verify_bialgebra(b);
    let bia_ok = bia.all_passed();
    report.push_stage(bia);
    if !bia_ok {
        return (report, None);
    }

    let mut stage = CheckReport::new("counit");
    let counit = match solve_counit(b) {
        Ok(c) => {
            stage.record("counit solved", "counit-exists", true, String::new);
            if let Some(supplied) = &b.counit {
                stage.record("matches supplied counit", "counit-matches-file", supplied == &c, || {
                    "solved counit differs from the file".into()
                });
            }
            stage.note(format!("ε = ({})", fmt_combo(&c, &b.basis)));
            Some(c)
        }
        Err(e) => {
            stage.record("counit solved", "counit-exists", false, || e.to_string());
            None
        }
    };
    let counit_ok = stage.all_passed();
    report.push_stage(stage);
    let Some(counit) = counit else {
        return (report, None);
    };
    if !counit_ok {
        return (report, None);
    }

    let mut stage = CheckReport::new("antipode");
    let solved = match solve_antipode(b, &counit) {
        Ok(s) => {
            stage.record("antipode solved", "antipode-exists", true, String::new);
            if let Some(supplied) = &antipode {
                stage.record(
                    "matches supplied antipode",
                    "antipode-matches-file",
                    supplied == &s,
                    || "solved antipode differs from the file".into(),
                );
            }
            Some(s)
        }
        Err(e) => {
            stage.record("antipode solved", "antipode-exists", false, || e.to_string());
            None
        }
    };
    let antipode_ok = stage.all_passed();
    report.push_stage(stage);
    let Some(solved) = solved else {
        return (report, None);
    };
    if !antipode_ok {
        return (report, None);
    }

    let hopf = {
        let mut b2 = b.clone();
        b2.counit = Some(counit);
        match FiniteHopfAlgebra::new(b2, Some(solved)) {
            Ok(h) => h,
            Err(e) => {
                let mut stage = CheckReport::new("hopf");
                stage.record("hopf assembly", "hopf-axioms", false, || e.to_string());
                report.push_stage(stage);
                return (report, None);
            }
        }
    };
    report.push_stage(verify_hopf(&hopf));

    let mut stage = CheckReport::new("canonical-maps");
    let (_, t1, _, t2) = galois_maps(&hopf.bialgebra);
    stage.record("T₁ bijective", "galois-t1-bijective", t1, || "T₁ has a kernel".into());
    stage.record("T₂ bijective", "galois-t2-bijective", t2, || "T₂ has a kernel".into());
    report.push_stage(stage);

    report.push_stage(integrals_stage(&hopf));
    (report, Some(hopf))
}

fn integrals_stage(h: &FiniteHopfAlgebra) -> CheckReport {
    let mut stage = CheckReport::new("integrals-and-invariants");
    let li = left_integrals(h);
    let ri = right_integrals(h);
    let lf = left_invariant_functionals(h);
    let rf = right_invariant_functionals(h);
    stage.dim("left integrals", li.len());
    stage.dim("right integrals", ri.len());
    stage.dim("left invariant functionals", lf.len());
    stage.dim("right invariant functionals", rf.len());
    stage.record(
        "one-dimensional integral spaces",
        "integral-spaces-dim-one",
        li.len() == 1 && ri.len() == 1 && lf.len() == 1 && rf.len() == 1,
        || "an integral or invariant-functional space is not one-dimensional".into(),
    );
    if let Some(t) = li.first() {
        stage.note(format!("left integral: {}", fmt_combo(t, &h.bialgebra.basis)));
    }
    if let Some(k) = ri.first() {
        stage.note(format!("right integral: {}", fmt_combo(k, &h.bialgebra.basis)));
    }
    // S maps the left integral line onto the right integral line
    if let (Ok(t), Some(_)) = (normalized_left_integral(h), ri.first()) {
        let st = h.antipode.apply(&t);
        let in_right = matches!(linsolve::span_contains(&ri, &st), Ok(Some(_)));
        stage.record(
            "antipode maps left integrals to right integrals",
            "antipode-swaps-integral-lines",
            in_right,
            || "S(t) is not a right integral".into(),
        );
    }
    match is_unimodular(h) {
        Ok(flag) => stage.note(format!("unimodular: {flag}")),
        Err(e) => stage.record("unimodularity well-defined", "unimodular-consistency", false, || {
            e.to_string()
        }),
    }
    match dual_via_pairing_agrees(h) {
        Ok(flag) => stage.record(
            "pairing presentation of the dual agrees",
            "dual-pairing-presentation",
            flag,
            || "φ_x presentation disagrees with the transpose dual".into(),
        ),
        Err(e) => stage.record(
            "pairing presentation of the dual agrees",
            "dual-pairing-presentation",
            false,
            || e.to_string(),
        ),
    }
    stage
}

/// Report for `integrals`: the integral and invariant-functional data
/// alone, on an already-verified Hopf algebra.
pub fn integrals_suite(h: &FiniteHopfAlgebra) -> Report {
    let mut report = Report::new("integrals");
    report.push_stage(integrals_stage(h));
    report
}

/// Module-algebra verification report.
pub fn verify_action_suite(m: &ModuleAlgebra) -> Report {
    let mut report = Report::new("verify-action");
    report.push_stage(crate::algebra::verify_unital_algebra(&m.algebra));
    report.push_stage(verify_module_algebra(m));
    report
}

/// Invariant-subalgebra report for a right action.
pub fn invariants_suite(m: &ModuleAlgebra) -> Report {
    let mut report = Report::new("invariants");
    let axioms = verify_module_algebra(m);
    let ok = axioms.all_passed();
    report.push_stage(axioms);
    if !ok {
        return report;
    }
    match invariants(m) {
        Ok((sub, stage)) => {
            report.push_stage(stage);
            let mut basis_stage = CheckReport::new("invariant-basis");
            basis_stage.dim("dim", sub.algebra.dim());
            for i in 0..sub.algebra.dim() {
                basis_stage.note(format!(
                    "inv{i} = {}",
                    fmt_combo(&sub.embedding.column(i), &m.algebra.basis)
                ));
            }
            report.push_stage(basis_stage);
        }
        Err(e) => {
            let mut stage = CheckReport::new("invariants");
            stage.record("invariants computed", "invariants-subalgebra", false, || e.to_string());
            report.push_stage(stage);
        }
    }
    report
}

/// Smash-product report; returns the product algebra on success.
pub fn smash_suite(m: &ModuleAlgebra) -> (Report, Option<crate::actions::SmashProduct>) {
    let mut report = Report::new("smash");
    if m.side != Side::Left {
        let mut stage = CheckReport::new("inputs");
        stage.record("left action supplied", "smash-needs-left-action", false, || {
            "smash products are built from left actions".into()
        });
        report.push_stage(stage);
        return (report, None);
    }
    match crate::actions::smash_product(m) {
        Ok(s) => {
            let mut stage = CheckReport::new("smash-product");
            stage.dim("dim", s.algebra.dim());
            stage.record("associative and unital", "smash-algebra-axioms", true, String::new);
            report.push_stage(stage);
            (report, Some(s))
        }
        Err(e) => {
            let mut stage = CheckReport::new("smash-product");
            stage.record("smash construction", "smash-algebra-axioms", false, || e.to_string());
            report.push_stage(stage);
            (report, None)
        }
    }
}

/// Compact-quantum-subgroup report.
pub fn subgroup_suite(pi: &HopfMorphism) -> Report {
    let mut report = Report::new("subgroup-check");
    report.push_stage(is_compact_quantum_subgroup(pi));
    report
}
