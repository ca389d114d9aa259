//! Interpolation of the tangent forms by a single curve in the dual plane.
//!
//! With m = 2 for odd q and m = 1 for even q, and E a set of mt + 2 arc
//! points, the form
//!
//! ```text
//! φ(Z) = Σ_{a<b ∈ E} f_a(b)^m · Π_{u ∈ E∖{a,b}} (u·Z) / det(a,b,u)
//! ```
//!
//! has degree mt, and G(X,Y) = φ(X × Y) satisfies G(X,a) = f_a(X)^m for every
//! arc point a. Here X × Y = (X₂Y₃ − Y₂X₃, X₃Y₁ − Y₃X₁, X₁Y₂ − X₂Y₁), so that
//! u·(X × Y) = det(X,Y,u).

use thiserror::Error;

use crate::gf::Fe;
use crate::par;
use crate::plane::{det3, ProjPoint};
use crate::poly::{BiForm, HomPoly};
use crate::tangents::TangentSystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualError {
    #[error("arc has {size} points but the interpolation set needs {needed}")]
    ArcTooSmall { size: usize, needed: usize },
    #[error("interpolation set must be {needed} distinct arc points")]
    BadInterpolationSet { needed: usize },
}

#[derive(Debug, Clone)]
pub struct DualCurve {
    m: u32,
    phi: HomPoly,
    g: BiForm,
}

impl DualCurve {
    pub fn m(&self) -> u32 {
        self.m
    }

    /// φ(Z), a form of degree mt in the dual coordinates.
    pub fn phi(&self) -> &HomPoly {
        &self.phi
    }

    /// G(X,Y) = φ(X × Y).
    pub fn g(&self) -> &BiForm {
        &self.g
    }
}

/// 2 for odd q, 1 for even q.
pub fn parity_m(q: u32) -> u32 {
    if q % 2 == 1 {
        2
    } else {
        1
    }
}

/// Builds the dual curve using the first mt + 2 arc points as E.
pub fn build_dual_curve(sys: &TangentSystem) -> Result<DualCurve, DualError> {
    let arc = sys.arc();
    let needed = (parity_m(arc.field().q()) * sys.t()) as usize + 2;
    if arc.len() < needed {
        return Err(DualError::ArcTooSmall {
            size: arc.len(),
            needed,
        });
    }
    build_dual_curve_on(sys, &arc.points()[..needed])
}

/// Builds the dual curve with an explicit interpolation set E.
pub fn build_dual_curve_on(sys: &TangentSystem, e_set: &[ProjPoint]) -> Result<DualCurve, DualError> {
    let arc = sys.arc();
    let field = arc.field();
    let m = parity_m(field.q());
    let deg = m * sys.t();
    let needed = deg as usize + 2;
    let mut idx: Vec<usize> = Vec::with_capacity(e_set.len());
    for p in e_set {
        match arc.position(p) {
            Some(i) if !idx.contains(&i) => idx.push(i),
            _ => return Err(DualError::BadInterpolationSet { needed }),
        }
    }
    if idx.len() != needed {
        return Err(DualError::BadInterpolationSet { needed });
    }
    let pts = arc.points();
    let pairs: Vec<(usize, usize)> = (0..needed)
        .flat_map(|i| (i + 1..needed).map(move |j| (i, j)))
        .collect();
    let terms = par::map(&pairs, |&(i, j)| {
        let (a, b) = (&pts[idx[i]], &pts[idx[j]]);
        let mut term = HomPoly::constant(field, field.pow(sys.form(idx[i]).eval_point(b), m as u64));
        for (k, &u) in idx.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            let u = pts[u].coords();
            let d = det3(field, &a.coords(), &b.coords(), &u);
            let inv = field.inv(d).expect("E is an arc");
            term = term.mul(&HomPoly::linear(field, u)).scale(inv);
        }
        term
    });
    let phi = terms
        .iter()
        .fold(HomPoly::zero(field, deg), |acc, t| acc.add(t));
    let g = substitute_cross(&phi);
    Ok(DualCurve { m, phi, g })
}

/// φ(X × Y) as a bihomogeneous form.
pub fn substitute_cross(phi: &HomPoly) -> BiForm {
    let f = phi.field();
    let r = phi.degree();
    let one = Fe::ONE;
    let neg = f.neg(one);
    // Zᵢ as (1,1)-forms.
    let z = [
        BiForm::from_terms(f, 1, 1, &[([0, 1, 0], [0, 0, 1], one), ([0, 0, 1], [0, 1, 0], neg)]),
        BiForm::from_terms(f, 1, 1, &[([0, 0, 1], [1, 0, 0], one), ([1, 0, 0], [0, 0, 1], neg)]),
        BiForm::from_terms(f, 1, 1, &[([1, 0, 0], [0, 1, 0], one), ([0, 1, 0], [1, 0, 0], neg)]),
    ];
    let powers: Vec<Vec<BiForm>> = z
        .iter()
        .map(|zi| {
            let mut v = vec![BiForm::from_terms(f, 0, 0, &[([0, 0, 0], [0, 0, 0], one)])];
            for k in 0..r as usize {
                let next = v[k].mul(zi);
                v.push(next);
            }
            v
        })
        .collect();
    let terms = phi.terms();
    let parts = par::map(&terms, |&(e, c)| {
        powers[0][e[0] as usize]
            .mul(&powers[1][e[1] as usize])
            .mul(&powers[2][e[2] as usize])
            .scale(c)
    });
    parts.iter().fold(BiForm::zero(f, r, r), |acc, t| acc.add(t))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualReport {
    Pass,
    /// G(X,a) ≠ f_a(X)^m.
    FormMismatch { a: ProjPoint },
    /// φ does not vanish at the dual coordinates of a tangent at `a`.
    TangentOffCurve { a: ProjPoint, tangent: ProjPoint },
}

impl DualReport {
    pub fn passed(&self) -> bool {
        matches!(self, DualReport::Pass)
    }
}

pub fn verify_dual(sys: &TangentSystem, d: &DualCurve) -> DualReport {
    let arc = sys.arc();
    let pts = arc.points();
    let bad_form = par::first_index(pts.len(), |i| {
        d.g.eval_y(&pts[i].coords()) != sys.form(i).pow(d.m)
    });
    if let Some(i) = bad_form {
        return DualReport::FormMismatch { a: pts[i] };
    }
    for (i, a) in pts.iter().enumerate() {
        for l in sys.factors(i) {
            let z = l.as_dual_point();
            if !d.phi.eval_point(&z).is_zero() {
                return DualReport::TangentOffCurve { a: *a, tangent: z };
            }
        }
    }
    DualReport::Pass
}
