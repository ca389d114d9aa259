//! The scaled tangent system {f_a} of an arc and the lemma of tangents.
//!
//! For each arc point `a`, `f_a` is the product of the `t` linear forms cutting
//! out the tangents at `a`. Relative to a base point `e` the forms are scaled so
//! that `f_a(e) = (−1)^{t+1} f_e(a)`; `f_e` itself has leading coefficient 1.

use thiserror::Error;

use crate::gf::Fe;
use crate::par;
use crate::plane::{Arc, LinearForm, ProjPoint};
use crate::poly::HomPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangentError {
    #[error("the arc has deficiency zero, so there are no tangents")]
    DeficiencyZero,
    #[error("base point {0} is not on the arc")]
    PointNotInArc(ProjPoint),
}

#[derive(Debug, Clone)]
pub struct TangentSystem {
    arc: Arc,
    base: usize,
    forms: Vec<HomPoly>,
    factors: Vec<Vec<LinearForm>>,
}

pub fn build_tangent_system(arc: &Arc, e: Option<&ProjPoint>) -> Result<TangentSystem, TangentError> {
    let t = arc.deficiency();
    if t == 0 {
        return Err(TangentError::DeficiencyZero);
    }
    let base = match e {
        Some(p) => arc.position(p).ok_or(TangentError::PointNotInArc(*p))?,
        None => 0,
    };
    let field = arc.field();
    let pts = arc.points();
    let factors: Vec<Vec<LinearForm>> =
        par::map(pts, |a| arc.tangent_lines(a).expect("arc point"));
    let raw: Vec<HomPoly> = par::map(&factors, |ls| {
        ls.iter()
            .fold(HomPoly::constant(field, Fe::ONE), |acc, l| acc.mul(&HomPoly::from_form(field, l)))
    });
    let fe = raw[base].monic();
    let sign = field.sign(t as u64 + 1);
    let e_pt = pts[base];
    let forms = par::map_range(pts.len(), |i| {
        if i == base {
            return fe.clone();
        }
        // f_a(e) must equal (−1)^{t+1} f_e(a).
        let want = field.mul(sign, fe.eval_point(&pts[i]));
        let have = raw[i].eval_point(&e_pt);
        let s = field.div(want, have).expect("e lies on no tangent at another arc point");
        raw[i].scale(s)
    });
    Ok(TangentSystem {
        arc: arc.clone(),
        base,
        forms,
        factors,
    })
}

impl TangentSystem {
    pub fn arc(&self) -> &Arc {
        &self.arc
    }

    pub fn t(&self) -> u32 {
        self.arc.deficiency() as u32
    }

    pub fn base_point(&self) -> ProjPoint {
        self.arc.points()[self.base]
    }

    pub fn base_index(&self) -> usize {
        self.base
    }

    /// (−1)^{t+1} in the field.
    pub fn sign(&self) -> Fe {
        self.arc.field().sign(self.t() as u64 + 1)
    }

    /// `f_a` for the arc point at index `i` (canonical order).
    pub fn form(&self, i: usize) -> &HomPoly {
        &self.forms[i]
    }

    pub fn forms(&self) -> &[HomPoly] {
        &self.forms
    }

    pub fn form_at(&self, a: &ProjPoint) -> Option<&HomPoly> {
        self.arc.position(a).map(|i| &self.forms[i])
    }

    /// The tangent lines whose product is `f_a`.
    pub fn factors(&self, i: usize) -> &[LinearForm] {
        &self.factors[i]
    }

    /// A copy with `f_a` (index `i`) multiplied by `c`. Used to exercise the
    /// checkers; the result violates the scaling unless `c = 1`.
    pub fn rescaled(&self, i: usize, c: Fe) -> TangentSystem {
        let mut s = self.clone();
        s.forms[i] = s.forms[i].scale(c);
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaReport {
    Pass,
    /// `f_x(y) ≠ (−1)^{t+1} f_y(x)`, first such ordered pair in canonical order.
    Counterexample {
        x: ProjPoint,
        y: ProjPoint,
        fx_at_y: Fe,
        fy_at_x: Fe,
    },
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        matches!(self, LemmaReport::Pass)
    }
}

pub fn check_lemma_of_tangents(sys: &TangentSystem) -> LemmaReport {
    let field = sys.arc.field();
    let pts = sys.arc.points();
    let n = pts.len();
    let sign = sys.sign();
    let violates = |k: usize| {
        let (i, j) = (k / n, k % n);
        if i == j {
            return false;
        }
        let lhs = sys.forms[i].eval_point(&pts[j]);
        let rhs = field.mul(sign, sys.forms[j].eval_point(&pts[i]));
        lhs != rhs
    };
    match par::first_index(n * n, violates) {
        None => LemmaReport::Pass,
        Some(k) => {
            let (i, j) = (k / n, k % n);
            LemmaReport::Counterexample {
                x: pts[i],
                y: pts[j],
                fx_at_y: sys.forms[i].eval_point(&pts[j]),
                fy_at_x: sys.forms[j].eval_point(&pts[i]),
            }
        }
    }
}
