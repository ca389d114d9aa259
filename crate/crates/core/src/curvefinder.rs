//! Bounds, the ρ system, gcds, hyperbolic tests and coprime curve certificates.

use num_rational::Ratio;
use thiserror::Error;

use crate::gf::{is_prime, prime_power, Fe, Field};
use crate::par;
use crate::plane::{all_points, Arc, ProjPoint};
use crate::poly::{Exp, HomPoly, TTForm};
use crate::socle::{vanishing_space, VanishingSpace};
use crate::tangents::{build_tangent_system, TangentError};
use crate::ttform::{build_f, TTFormError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("every generator of the ρ system and Φ_t is zero")]
    AllGeneratorsZero,
    #[error("this construction needs odd characteristic")]
    EvenCharacteristic,
    #[error("the two polynomials share a common factor of degree {0}")]
    NotCoprime(u32),
    #[error("no field element λ makes f + λg coprime to h")]
    NoLambda,
    #[error("polynomials of degree {0} and {1} cannot be combined")]
    DegreeMismatch(u32, u32),
    #[error("the zero polynomial")]
    ZeroPolynomial,
    #[error("need at least 5 points, got {0}")]
    TooFewPoints(usize),
    #[error("the points lie on no conic")]
    NotOnConic,
    #[error("no coprime pair of degree at most {} found", .0.d)]
    NotFound(Bounds),
    #[error(transparent)]
    Tangent(#[from] TangentError),
    #[error(transparent)]
    TTForm(#[from] TTFormError),
}

/// p^⌊log_p t⌋ for t ≥ 1.
pub fn p_power_floor(p: u32, t: u32) -> u32 {
    let mut pe = 1u32;
    while (pe as u64) * (p as u64) <= t as u64 {
        pe *= p;
    }
    pe
}

/// Degree bounds attached to an arc of deficiency t in PG(2,q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub q: u32,
    pub p: u32,
    pub t: u32,
    pub eps: u32,
    pub pe: u32,
    /// t + p^ε.
    pub d: u32,
    /// pe(t + pe/2 + 3/2) ≤ (t+2)(t+1)/2.
    pub cond_ok: bool,
    /// d′/(d′+1)·(q + 1 + q/p) + 1 for the queried curve degree d′.
    pub bounded_deg: Option<(u32, Ratio<i64>)>,
}

pub fn compute_bounds(q: u32, p: u32, t: u32, d_prime: Option<u32>) -> Result<Bounds, CurveError> {
    if !is_prime(p) {
        return Err(CurveError::BadParams(format!("{p} is not prime")));
    }
    match prime_power(q) {
        Some((pp, _)) if pp == p => {}
        _ => return Err(CurveError::BadParams(format!("{q} is not a power of {p}"))),
    }
    if t == 0 {
        return Err(CurveError::BadParams("t must be at least 1".into()));
    }
    if d_prime == Some(0) {
        return Err(CurveError::BadParams("curve degree must be at least 1".into()));
    }
    let pe = p_power_floor(p, t);
    let mut eps = 0;
    let mut x = pe;
    while x > 1 {
        x /= p;
        eps += 1;
    }
    let (pe64, t64) = (pe as u64, t as u64);
    let cond_ok = pe64 * (2 * t64 + pe64 + 3) <= (t64 + 2) * (t64 + 1);
    Ok(Bounds {
        q,
        p,
        t,
        eps,
        pe,
        d: t + pe,
        cond_ok,
        bounded_deg: d_prime.map(|dp| (dp, bounded_deg_value(q, p, dp))),
    })
}

/// d′/(d′+1)·(q + 1 + q/p) + 1.
pub fn bounded_deg_value(q: u32, p: u32, d_prime: u32) -> Ratio<i64> {
    let (q, p, d) = (q as i64, p as i64, d_prime as i64);
    Ratio::new(d, d + 1) * (Ratio::from_integer(q + 1) + Ratio::new(q, p)) + 1
}

/// Largest arc size strictly below [`bounded_deg_value`].
pub fn max_arc_on_curve(q: u32, p: u32, d_prime: u32) -> i64 {
    let v = bounded_deg_value(q, p, d_prime);
    v.ceil().to_integer() - 1
}

fn binomial_mod(n: u32, k: u32, p: u32) -> u32 {
    // Lucas' theorem digit by digit.
    let (mut n, mut k) = (n, k);
    let mut out = 1u64;
    while n > 0 || k > 0 {
        let (a, b) = (n % p, k % p);
        if b > a {
            return 0;
        }
        let mut c = 1u64;
        for i in 0..b {
            c = c * (a - i) as u64 / (i + 1) as u64;
        }
        out = out * (c % p as u64) % p as u64;
        n /= p;
        k /= p;
    }
    out as u32
}

/// The coefficients ρ_w(Y) of X^w in F(X+Y,Y) − F(X,Y), for w ∈ W.
#[derive(Debug, Clone)]
pub struct RhoSystem {
    pub t: u32,
    pub pe: u32,
    pub rhos: Vec<(Exp, HomPoly)>,
}

impl RhoSystem {
    pub fn index_set(&self) -> Vec<Exp> {
        self.rhos.iter().map(|(w, _)| *w).collect()
    }
}

/// The index set W: t − pe ≤ |w| ≤ t − 1, in canonical order by degree then monomial.
pub fn rho_index_set(t: u32, pe: u32) -> Vec<Exp> {
    let lo = t.saturating_sub(pe);
    (lo..t).flat_map(crate::poly::monomials).collect()
}

pub fn rho_system(form: &TTForm, bounds: &Bounds) -> RhoSystem {
    let f = form.field();
    let t = form.dx();
    assert_eq!(form.dy(), t, "F must be a (t,t)-form");
    let p = f.p();
    let terms = form.terms();
    let ws = rho_index_set(t, bounds.pe);
    let rhos = par::map(&ws, |&w| {
        let deg = 2 * t - w.iter().sum::<u32>();
        let mut rho = HomPoly::zero(f, deg);
        for &(mx, my, c) in &terms {
            if (0..3).any(|l| mx[l] < w[l]) {
                continue;
            }
            let b = (0..3).fold(1u32, |acc, l| acc * binomial_mod(mx[l], w[l], p) % p);
            if b == 0 {
                continue;
            }
            let e = [mx[0] - w[0] + my[0], mx[1] - w[1] + my[1], mx[2] - w[2] + my[2]];
            let cur = rho.coeff(e);
            rho.set_coeff(e, f.mul_add(cur, c, f.from_int(b as i64)));
        }
        (w, rho)
    });
    RhoSystem {
        t,
        pe: bounds.pe,
        rhos,
    }
}

// Dense univariate polynomials over GF(q), lowest degree first, no trailing zeros.
mod uni {
    use crate::gf::{Fe, Field};

    pub type Poly = Vec<Fe>;

    pub fn trim(mut a: Poly) -> Poly {
        while a.last().is_some_and(|c| c.is_zero()) {
            a.pop();
        }
        a
    }

    pub fn scale(f: &Field, a: &[Fe], c: Fe) -> Poly {
        trim(a.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn mul(f: &Field, a: &[Fe], b: &[Fe]) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Fe::ZERO; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.mul_add(out[i + j], x, y);
            }
        }
        trim(out)
    }

    pub fn sub(f: &Field, a: &[Fe], b: &[Fe]) -> Poly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| {
                    let x = a.get(i).copied().unwrap_or(Fe::ZERO);
                    let y = b.get(i).copied().unwrap_or(Fe::ZERO);
                    f.sub(x, y)
                })
                .collect(),
        )
    }

    pub fn divrem(f: &Field, a: &[Fe], b: &[Fe]) -> (Poly, Poly) {
        let lb = *b.last().expect("division by zero polynomial");
        let inv = f.inv(lb).expect("nonzero");
        let mut r = a.to_vec();
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![Fe::ZERO; r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = f.mul(*r.last().unwrap(), inv);
            q[shift] = c;
            let nc = f.neg(c);
            for (i, &y) in b.iter().enumerate() {
                r[i + shift] = f.mul_add(r[i + shift], nc, y);
            }
            r = trim(r);
            if r.is_empty() {
                break;
            }
        }
        (trim(q), r)
    }

    pub fn monic(f: &Field, a: &[Fe]) -> Poly {
        match a.last() {
            Some(&c) => scale(f, a, f.inv(c).expect("nonzero")),
            None => Vec::new(),
        }
    }

    pub fn gcd(f: &Field, a: &[Fe], b: &[Fe]) -> Poly {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let (_, r) = divrem(f, &a, &b);
            a = b;
            b = r;
        }
        monic(f, &a)
    }
}

// Polynomials in (x, y) as univariate in y with coefficients in GF(q)[x].
mod bi {
    use super::uni;
    use crate::gf::{Fe, Field};

    pub type Poly = Vec<uni::Poly>;

    pub fn trim(mut a: Poly) -> Poly {
        while a.last().is_some_and(|c| c.is_empty()) {
            a.pop();
        }
        a
    }

    pub fn content(f: &Field, a: &Poly) -> uni::Poly {
        a.iter().fold(Vec::new(), |g, c| uni::gcd(f, &g, c))
    }

    fn div_uni(f: &Field, a: &Poly, c: &uni::Poly) -> Poly {
        a.iter()
            .map(|x| {
                let (q, r) = uni::divrem(f, x, c);
                debug_assert!(r.is_empty());
                q
            })
            .collect()
    }

    fn mul_uni(f: &Field, a: &Poly, c: &uni::Poly) -> Poly {
        trim(a.iter().map(|x| uni::mul(f, x, c)).collect())
    }

    pub fn primitive(f: &Field, a: &Poly) -> Poly {
        let c = content(f, a);
        div_uni(f, a, &c)
    }

    /// lc(b)^k · a reduced modulo b in y.
    fn prem(f: &Field, a: &Poly, b: &Poly) -> Poly {
        let lb = b.last().expect("nonzero").clone();
        let mut r = a.clone();
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let lr = r.last().unwrap().clone();
            let mut next: Poly = r.iter().map(|x| uni::mul(f, x, &lb)).collect();
            for (i, y) in b.iter().enumerate() {
                let t = uni::mul(f, y, &lr);
                next[i + shift] = uni::sub(f, &next[i + shift], &t);
            }
            r = trim(next);
        }
        r
    }

    pub fn gcd(f: &Field, a: &Poly, b: &Poly) -> Poly {
        if a.is_empty() {
            return b.clone();
        }
        if b.is_empty() {
            return a.clone();
        }
        let c = uni::gcd(f, &content(f, a), &content(f, b));
        let (mut a, mut b) = (primitive(f, a), primitive(f, b));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        let g = loop {
            if b.len() == 1 {
                break vec![vec![Fe::ONE]];
            }
            let r = prem(f, &a, &b);
            if r.is_empty() {
                break b;
            }
            a = b;
            b = primitive(f, &r);
        };
        mul_uni(f, &primitive(f, &g), &c)
    }
}

fn x3_power(field: &Field, k: u32) -> HomPoly {
    HomPoly::monomial(field, [0, 0, k], Fe::ONE)
}

/// Dehomogenizes at X₃ = 1. With `swap`, X₁ becomes the main variable.
fn dehomogenize(f: &HomPoly, swap: bool) -> bi::Poly {
    let (xv, yv) = if swap { (1, 0) } else { (0, 1) };
    let mut out: bi::Poly = Vec::new();
    for (e, c) in f.terms() {
        let (i, j) = (e[xv] as usize, e[yv] as usize);
        if out.len() <= j {
            out.resize(j + 1, Vec::new());
        }
        if out[j].len() <= i {
            out[j].resize(i + 1, Fe::ZERO);
        }
        out[j][i] = c;
    }
    bi::trim(out.into_iter().map(uni::trim).collect())
}

fn homogenize(field: &Field, a: &bi::Poly, swap: bool) -> HomPoly {
    let deg = a
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_empty())
        .map(|(j, c)| j + c.len() - 1)
        .max()
        .unwrap_or(0) as u32;
    let mut out = HomPoly::zero(field, deg);
    for (j, c) in a.iter().enumerate() {
        for (i, &v) in c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (i, j) = (i as u32, j as u32);
            let e = if swap { [j, i, deg - i - j] } else { [i, j, deg - i - j] };
            out.set_coeff(e, v);
        }
    }
    out
}

/// Greatest common divisor of two forms, with leading coefficient 1.
pub fn trivariate_gcd(f: &HomPoly, g: &HomPoly) -> Result<HomPoly, CurveError> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Err(CurveError::BothZero),
        (true, false) => return Ok(g.monic()),
        (false, true) => return Ok(f.monic()),
        _ => {}
    }
    let field = f.field();
    let (vf, vg) = (f.var_valuation(2), g.var_valuation(2));
    let fr = f.div_exact(&x3_power(field, vf)).expect("valuation");
    let gr = g.div_exact(&x3_power(field, vg)).expect("valuation");
    // Main variable: whichever of X₁, X₂ occurs to lower degree.
    let swap = fr.var_degree(0).max(gr.var_degree(0)) < fr.var_degree(1).max(gr.var_degree(1));
    let h = bi::gcd(field, &dehomogenize(&fr, swap), &dehomogenize(&gr, swap));
    let h = homogenize(field, &h, swap).mul(&x3_power(field, vf.min(vg)));
    Ok(h.monic())
}

/// gcd of all ρ_w and the Φ_t basis.
pub fn almost_phi(arc: &Arc, rho: &RhoSystem, phi_t: &VanishingSpace) -> Result<HomPoly, CurveError> {
    if arc.field().p() == 2 {
        return Err(CurveError::EvenCharacteristic);
    }
    let gens: Vec<&HomPoly> = rho
        .rhos
        .iter()
        .map(|(_, r)| r)
        .chain(phi_t.basis())
        .filter(|g| !g.is_zero())
        .collect();
    let Some((first, rest)) = gens.split_first() else {
        return Err(CurveError::AllGeneratorsZero);
    };
    let mut g = first.monic();
    for h in rest {
        if g.degree() == 0 {
            break;
        }
        g = trivariate_gcd(&g, h)?;
    }
    Ok(g)
}

/// f + λg coprime to h, for the first λ in encoding order.
pub fn coprime_combination(f: &HomPoly, g: &HomPoly, h: &HomPoly) -> Result<HomPoly, CurveError> {
    if f.degree() != g.degree() {
        return Err(CurveError::DegreeMismatch(f.degree(), g.degree()));
    }
    let c = trivariate_gcd(f, g)?;
    if c.degree() > 0 {
        return Err(CurveError::NotCoprime(c.degree()));
    }
    let field = f.field();
    for lambda in field.elements() {
        let cand = f.add_scaled(lambda, g);
        if cand.is_zero() {
            continue;
        }
        if h.is_zero() {
            // Only constants are coprime to 0.
            continue;
        }
        if trivariate_gcd(&cand, h)?.degree() == 0 {
            return Ok(cand);
        }
    }
    Err(CurveError::NoLambda)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HyperbolicReport {
    Pass,
    /// The restriction to the bisecant through `x` and `y` has a root away
    /// from the two arc points (or vanishes identically).
    Witness { x: ProjPoint, y: ProjPoint },
}

impl HyperbolicReport {
    pub fn passed(&self) -> bool {
        matches!(self, HyperbolicReport::Pass)
    }
}

/// Whether every restriction of φ to a bisecant is c·sⁱuʲ in the basis of the
/// two arc points on it.
pub fn hyperbolic_test(phi: &HomPoly, arc: &Arc) -> Result<HyperbolicReport, CurveError> {
    if phi.is_zero() {
        return Err(CurveError::ZeroPolynomial);
    }
    let pts = arc.points();
    let n = pts.len();
    let deg = phi.degree() as usize;
    let bad = par::first_index(n * n, |k| {
        let (i, j) = (k / n, k % n);
        if i >= j {
            return false;
        }
        let b = phi.restrict_to_line(&pts[i].coords(), &pts[j].coords());
        if b.is_zero() {
            return true;
        }
        let roots = b.roots();
        let ok = roots
            .iter()
            .all(|(r, _)| (r[0].is_zero() && r[1] == Fe::ONE) || (r[0] == Fe::ONE && r[1].is_zero()));
        let total: usize = roots.iter().map(|(_, m)| m).sum();
        !(ok && total == deg)
    });
    Ok(match bad {
        None => HyperbolicReport::Pass,
        Some(k) => HyperbolicReport::Witness {
            x: pts[k / n],
            y: pts[k % n],
        },
    })
}

/// A conic through the points: the first element of the echelon basis of Φ₂.
pub fn conic_fit(field: &Field, pts: &[ProjPoint]) -> Result<HomPoly, CurveError> {
    if pts.len() < 5 {
        return Err(CurveError::TooFewPoints(pts.len()));
    }
    vanishing_space(field, pts, 2)
        .basis()
        .first()
        .cloned()
        .ok_or(CurveError::NotOnConic)
}

/// Two curves of degree ≤ d through the arc with constant gcd.
#[derive(Debug, Clone)]
pub struct CurveCertificate {
    pub arc: Arc,
    pub curves: [HomPoly; 2],
    pub bounds: Bounds,
}

impl CurveCertificate {
    pub fn d(&self) -> u32 {
        self.bounds.d
    }
}

#[derive(Debug, Clone)]
pub enum CertificateOutcome {
    Certificate(CurveCertificate),
    ConicContainment(HomPoly),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateFailure {
    #[error("curve {0} does not vanish at {1}")]
    NotVanishing(usize, ProjPoint),
    #[error("curve {0} has degree {1} > {2}")]
    DegreeTooHigh(usize, u32, u32),
    #[error("curve {0} is not in the vanishing space of its degree")]
    NotInVanishingSpace(usize),
    #[error("curves share a factor of degree {0}")]
    CommonFactor(u32),
    #[error("{common} common zeros exceed the product of degrees {bound}")]
    Bezout { common: usize, bound: u32 },
}

/// Rechecks every claim a certificate makes.
pub fn check_certificate(cert: &CurveCertificate) -> Result<(), CertificateFailure> {
    let arc = &cert.arc;
    let field = arc.field();
    for (k, c) in cert.curves.iter().enumerate() {
        if c.degree() > cert.bounds.d {
            return Err(CertificateFailure::DegreeTooHigh(k, c.degree(), cert.bounds.d));
        }
        if let Some(p) = arc.points().iter().find(|p| !c.eval_point(p).is_zero()) {
            return Err(CertificateFailure::NotVanishing(k, *p));
        }
        if c.is_zero() || !vanishing_space(field, arc.points(), c.degree()).contains(c) {
            return Err(CertificateFailure::NotInVanishingSpace(k));
        }
    }
    let [a, b] = &cert.curves;
    let g = trivariate_gcd(a, b).expect("curves are nonzero");
    if g.degree() > 0 {
        return Err(CertificateFailure::CommonFactor(g.degree()));
    }
    let common = all_points(field)
        .iter()
        .filter(|p| a.eval_point(p).is_zero() && b.eval_point(p).is_zero())
        .count();
    let bound = a.degree() * b.degree();
    if common < arc.len() || common > bound as usize {
        return Err(CertificateFailure::Bezout { common, bound });
    }
    Ok(())
}

/// Basis elements first, then b_i + λ b_j (i < j, λ ≠ 0 in encoding order).
fn candidates(v: &VanishingSpace) -> impl Iterator<Item = HomPoly> + '_ {
    let b = v.basis();
    let field = b.first().map(|p| p.field().clone());
    let combos = (0..b.len()).flat_map(move |i| {
        let field = field.clone();
        (i + 1..b.len()).flat_map(move |j| {
            let field = field.clone().expect("nonempty basis");
            field
                .elements()
                .skip(1)
                .map(move |l| b[i].add_scaled(l, &b[j]))
                .collect::<Vec<_>>()
        })
    });
    b.iter().cloned().chain(combos)
}

fn coprime_to(a: &HomPoly, b: &HomPoly) -> bool {
    trivariate_gcd(a, b).map(|g| g.degree() == 0).unwrap_or(false)
}

fn find_mate(phi: &HomPoly, spaces: &[VanishingSpace]) -> Option<HomPoly> {
    for v in spaces {
        if let Some(m) = candidates(v).find(|c| coprime_to(phi, c)) {
            return Some(m);
        }
    }
    None
}

fn find_pair(spaces: &[VanishingSpace], d: u32) -> Option<[HomPoly; 2]> {
    // spaces[r - 1] is Φ_r. Pairs by total degree, then by the lower degree.
    for total in 2..=2 * d {
        for r1 in 1..=d {
            let Some(r2) = total.checked_sub(r1) else { break };
            if r2 < r1 || r2 > d {
                continue;
            }
            let (v1, v2) = (&spaces[r1 as usize - 1], &spaces[r2 as usize - 1]);
            for c1 in v1.basis() {
                if let Some(c2) = candidates(v2).find(|c| c != c1 && coprime_to(c1, c)) {
                    return Some([c1.clone(), c2]);
                }
            }
        }
    }
    None
}

/// Runs the pipeline F → ρ → φ and searches the vanishing spaces for a coprime pair.
pub fn coprime_certificate(arc: &Arc) -> Result<CertificateOutcome, CurveError> {
    let field = arc.field();
    if field.p() == 2 {
        return Err(CurveError::EvenCharacteristic);
    }
    if let Some(c) = vanishing_space(field, arc.points(), 2).basis().first() {
        return Ok(CertificateOutcome::ConicContainment(c.clone()));
    }
    let t = arc.deficiency() as u32;
    let bounds = compute_bounds(field.q(), field.p(), t, None)?;
    let d = bounds.d;
    let sys = build_tangent_system(arc, None)?;
    let form = build_f(&sys)?;
    let rho = rho_system(&form, &bounds);
    let phi_t = vanishing_space(field, arc.points(), t);
    let phi = almost_phi(arc, &rho, &phi_t)?;
    let spaces: Vec<VanishingSpace> = par::map_range(d as usize, |r| vanishing_space(field, arc.points(), r as u32 + 1));
    let from_phi = (phi.degree() >= 1 && phi.degree() <= d && arc.points().iter().all(|p| phi.eval_point(p).is_zero()))
        .then(|| find_mate(&phi, &spaces).map(|m| [phi.clone(), m]))
        .flatten();
    let curves = match from_phi.or_else(|| find_pair(&spaces, d)) {
        Some(c) => c,
        None => return Err(CurveError::NotFound(bounds)),
    };
    let cert = CurveCertificate {
        arc: arc.clone(),
        curves,
        bounds,
    };
    debug_assert_eq!(check_certificate(&cert), Ok(()));
    Ok(CertificateOutcome::Certificate(cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tangents::build_tangent_system;

    fn poly(f: &Field, deg: u32, terms: &[(Exp, i64)]) -> HomPoly {
        HomPoly::from_int_terms(f, deg, terms)
    }

    #[test]
    fn bounds_examples() {
        let b = compute_bounds(29, 29, 7, Some(4)).unwrap();
        assert_eq!((b.eps, b.pe, b.d, b.cond_ok), (0, 1, 8, true));
        assert_eq!(b.bounded_deg, Some((4, Ratio::new(129, 5))));
        assert_eq!(max_arc_on_curve(29, 29, 4), 25);
        let b = compute_bounds(9, 3, 4, None).unwrap();
        assert_eq!((b.eps, b.pe, b.d, b.cond_ok), (1, 3, 7, false));
        assert!(matches!(compute_bounds(9, 5, 4, None), Err(CurveError::BadParams(_))));
        assert!(matches!(compute_bounds(12, 4, 2, None), Err(CurveError::BadParams(_))));
    }

    #[test]
    fn lucas_binomials() {
        for p in [2u32, 3, 5, 7] {
            for n in 0..30u32 {
                let mut row = vec![1u64];
                for k in 1..=n as usize {
                    row.push(row[k - 1] * (n as u64 - k as u64 + 1) / k as u64);
                }
                for k in 0..=n {
                    assert_eq!(binomial_mod(n, k, p) as u64, row[k as usize] % p as u64, "{n} {k} {p}");
                }
            }
        }
    }

    #[test]
    fn gcd_examples() {
        let f = Field::prime(13).unwrap();
        let a = poly(&f, 3, &[([2, 1, 0], 1)]);
        let b = poly(&f, 2, &[([1, 0, 1], 1)]);
        assert_eq!(trivariate_gcd(&a, &b).unwrap(), poly(&f, 1, &[([1, 0, 0], 1)]));
        let q1 = poly(&f, 4, &[([0, 4, 0], 1), ([2, 0, 2], -1)]);
        let q2 = poly(&f, 4, &[([4, 0, 0], 1), ([0, 2, 2], -1)]);
        assert_eq!(trivariate_gcd(&q1, &q2).unwrap().degree(), 0);
        let zero = HomPoly::zero(&f, 4);
        assert_eq!(trivariate_gcd(&q1.scale(f.from_int(5)), &zero).unwrap(), q1.monic());
        assert_eq!(trivariate_gcd(&zero, &zero), Err(CurveError::BothZero));
        // Common factors hidden behind X₃ powers and in both variables.
        let u = poly(&f, 2, &[([1, 1, 0], 1), ([0, 0, 2], 3)]);
        let w1 = poly(&f, 3, &[([0, 0, 3], 1), ([1, 2, 0], 2)]);
        let w2 = poly(&f, 2, &[([0, 1, 1], 1), ([2, 0, 0], 7)]);
        let g = trivariate_gcd(&u.mul(&w1), &u.mul(&w2)).unwrap();
        assert_eq!(g, u.monic());
        let x3 = poly(&f, 1, &[([0, 0, 1], 1)]);
        let g = trivariate_gcd(&u.mul(&x3).mul(&x3), &w2.mul(&x3)).unwrap();
        assert_eq!(g, x3);
    }

    #[test]
    fn combination_examples() {
        let f = Field::prime(5).unwrap();
        let x1 = poly(&f, 1, &[([1, 0, 0], 1)]);
        let x2 = poly(&f, 1, &[([0, 1, 0], 1)]);
        let h = poly(&f, 2, &[([1, 0, 1], 1)]);
        assert_eq!(coprime_combination(&x1, &x2, &h).unwrap(), x1.add(&x2));
        let x1x2 = poly(&f, 2, &[([1, 1, 0], 1)]);
        let x1sq = poly(&f, 2, &[([2, 0, 0], 1)]);
        assert_eq!(coprime_combination(&x1sq, &x1x2, &h), Err(CurveError::NotCoprime(1)));
        assert_eq!(coprime_combination(&x1, &x1x2, &h), Err(CurveError::DegreeMismatch(1, 2)));
    }

    #[test]
    fn hyperbolic_examples() {
        let arc = fixtures::conic_arc(7);
        let conic = conic_fit(arc.field(), arc.points()).unwrap();
        assert!(hyperbolic_test(&conic, &arc).unwrap().passed());
        let arc5 = fixtures::conic_arc(5);
        let xyz = poly(arc5.field(), 3, &[([1, 1, 1], 1)]);
        assert!(matches!(hyperbolic_test(&xyz, &arc5).unwrap(), HyperbolicReport::Witness { .. }));
        let tiny = arc5.without(&arc5.points()[1..]);
        assert!(hyperbolic_test(&xyz, &tiny).unwrap().passed());
        let zero = HomPoly::zero(arc5.field(), 2);
        assert_eq!(hyperbolic_test(&zero, &arc5), Err(CurveError::ZeroPolynomial));
    }

    #[test]
    fn conic_fit_examples() {
        let arc = fixtures::conic_arc(7);
        let c = conic_fit(arc.field(), &arc.points()[..5]).unwrap();
        let want = poly(arc.field(), 2, &[([1, 0, 1], 1), ([0, 2, 0], -1)]);
        assert_eq!(c.monic(), want.monic());
        let a12 = fixtures::arc12_q13();
        assert_eq!(conic_fit(a12.field(), a12.points()), Err(CurveError::NotOnConic));
        assert_eq!(conic_fit(a12.field(), &a12.points()[..4]), Err(CurveError::TooFewPoints(4)));
    }

    #[test]
    fn rho_vanishes_on_twelve_arc() {
        let arc = fixtures::arc12_q13();
        let sys = build_tangent_system(&arc, None).unwrap();
        let form = build_f(&sys).unwrap();
        let b = compute_bounds(13, 13, 3, None).unwrap();
        let rho = rho_system(&form, &b);
        assert_eq!(rho.rhos.len(), 6);
        for (w, r) in &rho.rhos {
            assert_eq!(w.iter().sum::<u32>(), 2);
            assert_eq!(r.degree(), 4);
            for y in arc.points() {
                assert!(r.eval_point(y).is_zero());
            }
        }
        let phi = almost_phi(&arc, &rho, &vanishing_space(arc.field(), arc.points(), 3)).unwrap();
        assert!(phi.degree() <= 4);
        if phi.degree() > 0 {
            assert!(arc.points().iter().all(|y| phi.eval_point(y).is_zero()));
        }
    }

    #[test]
    fn rho_index_set_for_linear_forms() {
        assert_eq!(rho_index_set(1, 1), vec![[0, 0, 0]]);
        assert_eq!(rho_index_set(3, 1).len(), 6);
        assert_eq!(rho_index_set(4, 3).len(), 3 + 6 + 10);
    }

    #[test]
    fn conic_generators_share_the_conic() {
        let arc = fixtures::conic_arc(7);
        let sys = build_tangent_system(&arc, None).unwrap();
        let form = build_f(&sys).unwrap();
        let rho = rho_system(&form, &compute_bounds(7, 7, 1, None).unwrap());
        let phi = almost_phi(&arc, &rho, &vanishing_space(arc.field(), arc.points(), 1)).unwrap();
        assert!(phi.degree() <= 2);
        let conic = conic_fit(arc.field(), arc.points()).unwrap();
        assert!(conic.divides(&phi));
    }

    #[test]
    fn certificate_for_twelve_arc() {
        let arc = fixtures::arc12_q13();
        let CertificateOutcome::Certificate(cert) = coprime_certificate(&arc).unwrap() else {
            panic!("12-arc is not on a conic");
        };
        assert_eq!(cert.d(), 4);
        assert_eq!(check_certificate(&cert), Ok(()));
        let conic = fixtures::conic_arc(9);
        assert!(matches!(coprime_certificate(&conic).unwrap(), CertificateOutcome::ConicContainment(_)));
    }
}
