//! The (t,t)-form F(X,Y) interpolating the tangent forms.
//!
//! F is found as a nonzero solution of a homogeneous linear system in its
//! C(t+2,2)² coefficients, then scaled so that F(X,e) = f_e(X). The result
//! satisfies F(X,y) = f_y(X) for y in the chosen subset S, F(X,y) ≡ f_y(X)
//! modulo Φ_t for every arc point y, and F(x,y) = (−1)^{t+1} F(y,x) on the arc.

use thiserror::Error;

use crate::curvefinder::p_power_floor;
use crate::gf::{Fe, Field};
use crate::linalg::Matrix;
use crate::par;
use crate::plane::{Arc, ProjPoint};
use crate::poly::{monomial_count, monomial_values, TTForm};
use crate::socle::{socle, socle_chain, vanishing_space, Socle};
use crate::tangents::TangentSystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TTFormError {
    #[error("the condition system has only the zero solution")]
    NoSolution,
    #[error("every solution vanishes identically at Y = e")]
    ScalingDegenerate,
    #[error("the tangent system was built on a different arc")]
    ArcMismatch,
    #[error("base point {0} is not in the t-socle")]
    BaseNotInSocle(ProjPoint),
}

/// Points on the tangents at `y`, other than `y`, in canonical order.
pub fn tangent_point_set(sys: &TangentSystem, i: usize) -> Vec<ProjPoint> {
    let f = sys.arc().field();
    let y = sys.arc().points()[i];
    let mut pts: Vec<ProjPoint> = sys
        .factors(i)
        .iter()
        .flat_map(|l| l.points(f))
        .filter(|p| *p != y)
        .collect();
    pts.sort();
    pts.dedup();
    pts
}

/// The t-socle S₀ and the interpolation set S ⊇ S₀.
///
/// S₀ is the greedy t-socle of A seeded with `e`. The points of S ∖ S₀ are
/// taken first from the socle chain at degrees t+1, …, t+p^⌊log_p t⌋, then in
/// canonical order, until |S ∖ S₀| = min(C(t+2,2), |A ∖ S₀|).
pub fn select_s(arc: &Arc, e: &ProjPoint) -> (Socle, Vec<ProjPoint>) {
    let f = arc.field();
    let t = arc.deficiency() as u32;
    let s0 = socle(f, arc.points(), t, &[*e]).expect("a single point is independent");
    let want = monomial_count(t).min(arc.len() - s0.len());
    let pe = p_power_floor(f.p(), t);
    let chain = socle_chain_from(arc, &s0, pe);
    let mut s: Vec<ProjPoint> = s0.points().to_vec();
    let candidates = chain
        .iter()
        .flat_map(|c| c.points().iter())
        .chain(arc.points().iter());
    for p in candidates {
        if s.len() == s0.len() + want {
            break;
        }
        if !s.contains(p) {
            s.push(*p);
        }
    }
    (s0, s)
}

fn socle_chain_from(arc: &Arc, s0: &Socle, r_max: u32) -> Vec<Socle> {
    if s0.points().first() == arc.points().first() {
        return socle_chain(arc, r_max).into_iter().skip(1).collect();
    }
    let f = arc.field();
    let mut out: Vec<Socle> = Vec::new();
    let mut seed = s0.points().to_vec();
    for j in 1..=r_max {
        let s = socle(f, arc.points(), s0.degree() + j, &seed).expect("socles extend upwards");
        seed = s.points().to_vec();
        out.push(s);
    }
    out
}

/// The homogeneous system whose solutions are the candidate forms F.
#[derive(Debug, Clone)]
pub struct ConditionSystem {
    pub s0: Socle,
    pub s: Vec<ProjPoint>,
    pub matrix: Matrix,
}

impl ConditionSystem {
    pub fn unknowns(&self) -> usize {
        self.matrix.cols()
    }

    pub fn conditions(&self) -> usize {
        self.matrix.rows()
    }
}

fn kron(field: &Field, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            out.push(field.mul(x, y));
        }
    }
    out
}

pub fn condition_system(sys: &TangentSystem) -> Result<ConditionSystem, TTFormError> {
    let arc = sys.arc();
    let f = arc.field();
    let t = sys.t();
    let n = monomial_count(t);
    let e = sys.base_point();
    let (s0, s) = select_s(arc, &e);
    if !s0.contains(&e) {
        return Err(TTFormError::BaseNotInSocle(e));
    }
    let sign = sys.sign();
    let mv = |p: &ProjPoint| monomial_values(f, t, &p.coords());
    let me = mv(&e);
    let blocks: Vec<Vec<Vec<Fe>>> = par::map(&s, |y| {
        let i = arc.position(y).expect("S lies in A");
        let tan = tangent_point_set(sys, i);
        let my = mv(y);
        let mut rows = Vec::new();
        let tset: Vec<ProjPoint> = if s0.contains(y) {
            socle(f, &tan, t, &[]).expect("no seed").points().to_vec()
        } else {
            let full = socle(f, &tan, t, s0.points()).expect("S₀ is independent");
            full.points()[s0.len()..].to_vec()
        };
        for z in &tset {
            rows.push(kron(f, &mv(z), &my));
        }
        if s0.contains(y) && *y != e {
            let a = kron(f, &my, &me);
            let b = kron(f, &me, &my);
            rows.push(a.iter().zip(&b).map(|(&u, &v)| f.sub(u, f.mul(sign, v))).collect());
        }
        rows
    });
    let rows: Vec<Vec<Fe>> = blocks.into_iter().flatten().collect();
    Ok(ConditionSystem {
        s0,
        s,
        matrix: Matrix::from_rows(f, n * n, rows),
    })
}

/// Solves the condition system and scales the solution so that F(X,e) = f_e(X).
pub fn build_f(sys: &TangentSystem) -> Result<TTForm, TTFormError> {
    let cs = condition_system(sys)?;
    let f = sys.arc().field();
    let t = sys.t();
    let null = cs.matrix.nullspace();
    if null.is_empty() {
        return Err(TTFormError::NoSolution);
    }
    let e = sys.base_point().coords();
    let fe = sys.form(sys.base_index());
    let (lead, c) = fe.leading().expect("f_e is nonzero");
    for v in null {
        let cand = TTForm::from_coeffs(f, t, t, v);
        let at_e = cand.eval_y(&e);
        if at_e.is_zero() {
            continue;
        }
        let lambda = f.div(c, at_e.coeff(lead)).map_err(|_| TTFormError::ScalingDegenerate)?;
        return Ok(cand.scale(lambda));
    }
    Err(TTFormError::ScalingDegenerate)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FReport {
    Pass,
    /// F(X,y) ≠ f_y(X) for a point of S.
    NotInterpolating { y: ProjPoint },
    /// F(X,y) − f_y(X) ∉ Φ_t.
    NotCongruent { y: ProjPoint },
    /// F(x,y) ≠ (−1)^{t+1} F(y,x).
    NotSymmetric { x: ProjPoint, y: ProjPoint },
}

impl FReport {
    pub fn passed(&self) -> bool {
        matches!(self, FReport::Pass)
    }
}

pub fn verify_f(sys: &TangentSystem, form: &TTForm) -> FReport {
    let arc = sys.arc();
    let f = arc.field();
    let t = sys.t();
    let pts = arc.points();
    let (_, s) = select_s(arc, &sys.base_point());
    let phi = vanishing_space(f, pts, t);
    let slices: Vec<_> = par::map(pts, |y| form.eval_y(&y.coords()));
    for y in &s {
        let i = arc.position(y).expect("S lies in A");
        if &slices[i] != sys.form(i) {
            return FReport::NotInterpolating { y: *y };
        }
    }
    for (i, y) in pts.iter().enumerate() {
        if !phi.contains(&slices[i].sub(sys.form(i))) {
            return FReport::NotCongruent { y: *y };
        }
    }
    let sign = sys.sign();
    for (i, x) in pts.iter().enumerate() {
        for (j, y) in pts.iter().enumerate().skip(i + 1) {
            let xy = slices[j].eval_point(x);
            let yx = slices[i].eval_point(y);
            if xy != f.mul(sign, yx) {
                return FReport::NotSymmetric { x: *x, y: *y };
            }
        }
    }
    FReport::Pass
}
