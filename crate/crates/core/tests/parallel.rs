//! The parallel and sequential paths must give identical results.
//!
//! One test only: the sequential switch is process-wide.

use arcgeom::curvefinder::{coprime_certificate, CertificateOutcome};
use arcgeom::dualcurve::build_dual_curve;
use arcgeom::search::classify;
use arcgeom::ttform::build_f;
use arcgeom::{build_tangent_system, check_lemma_of_tangents, fixtures, par, Field};

fn snapshot() -> Vec<String> {
    let mut out = Vec::new();
    for arc in [fixtures::arc10_q11(), fixtures::arc12_q13()] {
        let sys = build_tangent_system(&arc, None).unwrap();
        out.push(format!("{:?}", sys.forms()));
        out.push(format!("{:?}", check_lemma_of_tangents(&sys.rescaled(3, arcgeom::Fe::ZERO))));
        out.push(format!("{:?}", build_dual_curve(&sys).unwrap().phi()));
        out.push(format!("{:?}", build_f(&sys).unwrap()));
        match coprime_certificate(&arc).unwrap() {
            CertificateOutcome::Certificate(c) => out.push(format!("{:?}", c.curves)),
            CertificateOutcome::ConicContainment(c) => out.push(format!("{c:?}")),
        }
    }
    for (q, size) in [(7, 6), (11, 9), (9, 8)] {
        let r = classify(&Field::of_order(q).unwrap(), size, true).unwrap();
        out.push(format!("{:?}", r.representatives));
    }
    out
}

#[test]
fn parallel_matches_sequential() {
    par::set_sequential(false);
    let parallel = snapshot();
    par::set_sequential(true);
    let sequential = snapshot();
    par::set_sequential(false);
    assert_eq!(parallel, sequential);
}
