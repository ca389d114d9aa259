//! Arc extension, projective canonical forms, classification of small arcs,
//! and the Kestenband construction.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::gf::{Fe, Field};
use crate::par;
use crate::plane::{all_points, det3, plane_size, Arc, ProjPoint};
use crate::poly::HomPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("need at least 4 points, got {0}")]
    TooFewPoints(usize),
    #[error("exhaustive classification is budgeted for q ≤ {max}; q = {q} needs an explicit override")]
    BudgetExceeded { q: u32, max: u32 },
    #[error("q = {0} is not an odd square")]
    NotOddSquare(u32),
    #[error("no Hermitian matrix with irreducible characteristic polynomial was found")]
    NoValidH,
    #[error("the matrix is not Hermitian or its characteristic polynomial has a root")]
    InvalidH,
    #[error("the two Hermitian curves meet in {found} points, expected an arc of {expected}")]
    NotAnArc { found: usize, expected: usize },
}

/// Largest q for which [`classify`] runs without an override.
pub const CLASSIFY_MAX_Q: u32 = 13;

/// Marks every point on a bisecant of `pts` (including the points themselves).
fn blocked(field: &Field, pts: &[[Fe; 3]]) -> Vec<bool> {
    let q = field.q();
    let mut out = vec![false; plane_size(q)];
    for (i, a) in pts.iter().enumerate() {
        out[ProjPoint::new(field, *a).expect("nonzero").index(q)] = true;
        for b in &pts[i + 1..] {
            for s in field.elements() {
                let v = [
                    field.mul_add(a[0], s, b[0]),
                    field.mul_add(a[1], s, b[1]),
                    field.mul_add(a[2], s, b[2]),
                ];
                out[ProjPoint::new(field, v).expect("distinct points").index(q)] = true;
            }
        }
    }
    out
}

/// Points whose addition keeps the arc property, in canonical order.
pub fn extensions(arc: &Arc) -> Vec<ProjPoint> {
    let f = arc.field();
    let coords: Vec<[Fe; 3]> = arc.points().iter().map(|p| p.coords()).collect();
    let mask = blocked(f, &coords);
    all_points(f)
        .into_iter()
        .zip(mask)
        .filter(|(_, b)| !b)
        .map(|(p, _)| p)
        .collect()
}

pub fn is_complete(arc: &Arc) -> bool {
    extensions(arc).is_empty()
}

fn inverse3(f: &Field, m: [[Fe; 3]; 3]) -> Option<[[Fe; 3]; 3]> {
    // Columns of m are the basis vectors; the inverse's rows are cofactor cross products.
    let c0 = [m[0][0], m[1][0], m[2][0]];
    let c1 = [m[0][1], m[1][1], m[2][1]];
    let c2 = [m[0][2], m[1][2], m[2][2]];
    let det = det3(f, &c0, &c1, &c2);
    let inv = f.inv(det).ok()?;
    let cross = |a: &[Fe; 3], b: &[Fe; 3]| crate::plane::cross(f, a, b);
    let rows = [cross(&c1, &c2), cross(&c2, &c0), cross(&c0, &c1)];
    Some(rows.map(|r| r.map(|x| f.mul(x, inv))))
}

fn apply(f: &Field, m: &[[Fe; 3]; 3], x: &[Fe; 3]) -> [Fe; 3] {
    m.map(|r| f.mul_add(f.mul_add(f.mul(r[0], x[0]), r[1], x[1]), r[2], x[2]))
}

/// Sorted point indices of the lexicographically least projective image of
/// the points over all frame-fixing maps.
fn canonical_key(f: &Field, pts: &[[Fe; 3]]) -> Vec<u32> {
    let q = f.q();
    let n = pts.len();
    let mut best: Option<Vec<u32>> = None;
    let mut img = Vec::with_capacity(n);
    let mut ys = vec![[Fe::ZERO; 3]; n];
    for a in 0..n {
        for b in 0..n {
            if b == a {
                continue;
            }
            for c in 0..n {
                if c == a || c == b {
                    continue;
                }
                let m = [
                    [pts[a][0], pts[b][0], pts[c][0]],
                    [pts[a][1], pts[b][1], pts[c][1]],
                    [pts[a][2], pts[b][2], pts[c][2]],
                ];
                let Some(minv) = inverse3(f, m) else {
                    continue;
                };
                for (y, x) in ys.iter_mut().zip(pts) {
                    *y = apply(f, &minv, x);
                }
                for d in 0..n {
                    if d == a || d == b || d == c {
                        continue;
                    }
                    let lam = ys[d];
                    if lam.iter().any(|l| l.is_zero()) {
                        continue;
                    }
                    let il = lam.map(|l| f.inv(l).expect("nonzero"));
                    img.clear();
                    for y in &ys {
                        let z = [f.mul(y[0], il[0]), f.mul(y[1], il[1]), f.mul(y[2], il[2])];
                        img.push(ProjPoint::new(f, z).expect("nonzero").index(q) as u32);
                    }
                    img.sort_unstable();
                    if best.as_ref().is_none_or(|b| img < *b) {
                        best = Some(img.clone());
                    }
                }
            }
        }
    }
    best.expect("an arc of 4 or more points contains a frame")
}

fn arc_from_key(f: &Field, plane: &[ProjPoint], key: &[u32]) -> Arc {
    let pts: Vec<ProjPoint> = key.iter().map(|&i| plane[i as usize]).collect();
    Arc::new(f, &pts).expect("images of an arc are arcs")
}

/// The canonical representative of the projective class of an arc.
pub fn canonical_form(arc: &Arc) -> Result<Arc, SearchError> {
    if arc.len() < 4 {
        return Err(SearchError::TooFewPoints(arc.len()));
    }
    let f = arc.field();
    let coords: Vec<[Fe; 3]> = arc.points().iter().map(|p| p.coords()).collect();
    let key = canonical_key(f, &coords);
    Ok(arc_from_key(f, &all_points(f), &key))
}

/// (1,0,0), (0,1,0), (0,0,1), (1,1,1).
pub fn standard_frame(field: &Field) -> Vec<ProjPoint> {
    [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
        .iter()
        .map(|&c| ProjPoint::from_ints(field, c).unwrap())
        .collect()
}

#[derive(Debug, Clone)]
pub struct ClassificationResult {
    pub q: u32,
    pub size: usize,
    pub complete_only: bool,
    pub representatives: Vec<Arc>,
}

impl ClassificationResult {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ClassifyOptions {
    /// Allows q above [`CLASSIFY_MAX_Q`].
    pub allow_large_q: bool,
}

/// Projective classes of arcs of the given size, optionally complete only.
pub fn classify(field: &Field, size: usize, complete_only: bool) -> Result<ClassificationResult, SearchError> {
    classify_with(field, size, complete_only, ClassifyOptions::default())
}

pub fn classify_with(
    field: &Field,
    size: usize,
    complete_only: bool,
    opts: ClassifyOptions,
) -> Result<ClassificationResult, SearchError> {
    let q = field.q();
    if q > CLASSIFY_MAX_Q && !opts.allow_large_q {
        return Err(SearchError::BudgetExceeded { q, max: CLASSIFY_MAX_Q });
    }
    let plane = all_points(field);
    let coords_of = |key: &[u32]| -> Vec<[Fe; 3]> { key.iter().map(|&i| plane[i as usize].coords()).collect() };
    let frame = standard_frame(field);
    let mut level: BTreeSet<Vec<u32>> = BTreeSet::new();
    let start = size.min(4);
    let mut key: Vec<u32> = frame[..start].iter().map(|p| p.index(q) as u32).collect();
    key.sort_unstable();
    level.insert(key);
    for k in start..size {
        let parents: Vec<Vec<u32>> = level.into_iter().collect();
        let children: Vec<Vec<Vec<u32>>> = par::map(&parents, |parent| {
            let pts = coords_of(parent);
            let mask = blocked(field, &pts);
            let ext: Vec<u32> = (0..plane.len() as u32).filter(|&i| !mask[i as usize]).collect();
            if ext.len() < size - k {
                return Vec::new();
            }
            let mut out = Vec::new();
            for &x in &ext {
                let mut child = pts.clone();
                child.push(plane[x as usize].coords());
                if k + 1 < size {
                    let cm = blocked(field, &child);
                    if cm.iter().filter(|b| !**b).count() < size - k - 1 {
                        continue;
                    }
                }
                let key = canonical_key(field, &child);
                out.push(key);
            }
            out
        });
        level = children.into_iter().flatten().collect();
    }
    let reps: Vec<Arc> = level
        .into_iter()
        .map(|k| arc_from_key(field, &plane, &k))
        .filter(|a| !complete_only || is_complete(a))
        .collect();
    Ok(ClassificationResult {
        q,
        size,
        complete_only,
        representatives: reps,
    })
}

/// A Hermitian matrix H over GF(q), q = r², with h_ji = h_ij^r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KestenbandSpec {
    pub h: [[Fe; 3]; 3],
}

#[derive(Debug, Clone)]
pub struct KestenbandArc {
    pub arc: Arc,
    pub spec: KestenbandSpec,
    /// X₁^{r+1} + X₂^{r+1} + X₃^{r+1} and Σ h_ij X_i^r X_j.
    pub hermitians: [HomPoly; 2],
}

fn odd_sqrt(q: u32) -> Option<u32> {
    let r = (q as f64).sqrt().round() as u32;
    (r * r == q && q % 2 == 1).then_some(r)
}

fn char_poly_has_root(f: &Field, h: &[[Fe; 3]; 3]) -> bool {
    let neg = |x| f.neg(x);
    f.elements().any(|l| {
        let m = [
            [f.sub(l, h[0][0]), neg(h[0][1]), neg(h[0][2])],
            [neg(h[1][0]), f.sub(l, h[1][1]), neg(h[1][2])],
            [neg(h[2][0]), neg(h[2][1]), f.sub(l, h[2][2])],
        ];
        det3(f, &m[0], &m[1], &m[2]).is_zero()
    })
}

fn is_hermitian(f: &Field, r: u32, h: &[[Fe; 3]; 3]) -> bool {
    (0..3).all(|i| (0..3).all(|j| h[j][i] == f.pow(h[i][j], r as u64)))
}

fn hermitian_forms(f: &Field, r: u32, h: &[[Fe; 3]; 3]) -> [HomPoly; 2] {
    let deg = r + 1;
    let unit = HomPoly::from_terms(
        f,
        deg,
        &[([deg, 0, 0], Fe::ONE), ([0, deg, 0], Fe::ONE), ([0, 0, deg], Fe::ONE)],
    );
    let mut terms = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let mut e = [0u32; 3];
            e[i] += r;
            e[j] += 1;
            terms.push((e, h[i][j]));
        }
    }
    [unit, HomPoly::from_terms(f, deg, &terms)]
}

/// The first valid H in the search order: entries (h11, h12, h13, h22, h23, h33)
/// as a mixed-radix counter with h33 varying fastest, diagonal entries ranging
/// over GF(r) and the others over GF(q), all in encoding order.
pub fn find_kestenband_spec(field: &Field) -> Result<KestenbandSpec, SearchError> {
    let q = field.q();
    let r = odd_sqrt(q).ok_or(SearchError::NotOddSquare(q))?;
    let sub: Vec<Fe> = field.elements().filter(|&a| field.pow(a, r as u64) == a).collect();
    let all: Vec<Fe> = field.elements().collect();
    const DIAGONAL: [bool; 6] = [true, false, false, true, false, true];
    let radices = DIAGONAL.map(|d| if d { sub.len() } else { all.len() });
    let mut digits = [0usize; 6];
    loop {
        let pick = |k: usize| if DIAGONAL[k] { sub[digits[k]] } else { all[digits[k]] };
        let (h11, h12, h13, h22, h23, h33) = (pick(0), pick(1), pick(2), pick(3), pick(4), pick(5));
        let c = |x| field.pow(x, r as u64);
        let h = [[h11, h12, h13], [c(h12), h22, h23], [c(h13), c(h23), h33]];
        if !char_poly_has_root(field, &h) {
            return Ok(KestenbandSpec { h });
        }
        let mut k = 5;
        loop {
            digits[k] += 1;
            if digits[k] < radices[k] {
                break;
            }
            digits[k] = 0;
            if k == 0 {
                return Err(SearchError::NoValidH);
            }
            k -= 1;
        }
    }
}

/// The intersection of the two Hermitian curves, a complete arc of size q − √q + 1.
pub fn kestenband(field: &Field, spec: Option<&KestenbandSpec>) -> Result<KestenbandArc, SearchError> {
    let q = field.q();
    let r = odd_sqrt(q).ok_or(SearchError::NotOddSquare(q))?;
    let spec = match spec {
        Some(s) => {
            if !is_hermitian(field, r, &s.h) || char_poly_has_root(field, &s.h) {
                return Err(SearchError::InvalidH);
            }
            s.clone()
        }
        None => find_kestenband_spec(field)?,
    };
    let hermitians = hermitian_forms(field, r, &spec.h);
    let pts: Vec<ProjPoint> = all_points(field)
        .into_iter()
        .filter(|p| hermitians.iter().all(|h| h.eval_point(p).is_zero()))
        .collect();
    let expected = (q - r + 1) as usize;
    let arc = match Arc::new(field, &pts) {
        Ok(a) if a.len() == expected => a,
        _ => return Err(SearchError::NotAnArc { found: pts.len(), expected }),
    };
    Ok(KestenbandArc { arc, spec, hermitians })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn pt(f: &Field, c: [i64; 3]) -> ProjPoint {
        ProjPoint::from_ints(f, c).unwrap()
    }

    #[test]
    fn extension_examples() {
        assert!(extensions(&fixtures::arc12_q13()).is_empty());
        let conic = fixtures::conic_arc(7);
        let removed = conic.points()[3];
        let ext = extensions(&conic.without(&[removed]));
        assert!(ext.contains(&removed));
        let f = Field::prime(7).unwrap();
        let mut pts = standard_frame(&f);
        pts.push(pt(&f, [1, 2, 3]));
        pts.push(pt(&f, [1, 3, 4]));
        let six = Arc::new(&f, &pts).unwrap();
        assert!(is_complete(&six));
    }

    #[test]
    fn canonical_form_is_an_invariant() {
        let arc = fixtures::arc10_q11();
        let f = arc.field();
        let m = [
            [f.from_int(2), f.from_int(1), f.from_int(0)],
            [f.from_int(5), f.from_int(3), f.from_int(7)],
            [f.from_int(1), f.from_int(0), f.from_int(5)],
        ];
        let moved: Vec<ProjPoint> = arc
            .points()
            .iter()
            .map(|p| ProjPoint::new(f, apply(f, &m, &p.coords())).unwrap())
            .collect();
        let moved = Arc::new(f, &moved).unwrap();
        assert_ne!(moved, arc);
        assert_eq!(canonical_form(&moved).unwrap(), canonical_form(&arc).unwrap());
    }

    #[test]
    fn frame_is_canonical() {
        let f = Field::prime(5).unwrap();
        let frame = Arc::new(&f, &standard_frame(&f)).unwrap();
        assert_eq!(canonical_form(&frame).unwrap(), frame);
        let three = Arc::new(&f, &standard_frame(&f)[..3]).unwrap();
        assert_eq!(canonical_form(&three), Err(SearchError::TooFewPoints(3)));
    }

    #[test]
    fn small_classifications() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(classify(&f7, 6, true).unwrap().count(), 2);
        let f5 = Field::prime(5).unwrap();
        let ovals = classify(&f5, 6, false).unwrap();
        assert_eq!(ovals.count(), 1);
        let f8 = Field::of_order(8).unwrap();
        assert_eq!(classify(&f8, 6, true).unwrap().count(), 3);
        let f17 = Field::prime(17).unwrap();
        assert_eq!(
            classify(&f17, 6, true).unwrap_err(),
            SearchError::BudgetExceeded { q: 17, max: 13 }
        );
    }

    #[test]
    fn kestenband_nine() {
        let f = Field::of_order(9).unwrap();
        let k = kestenband(&f, None).unwrap();
        assert_eq!(k.arc.len(), 7);
        assert!(is_complete(&k.arc));
        assert_eq!(
            kestenband(&Field::prime(7).unwrap(), None).unwrap_err(),
            SearchError::NotOddSquare(7)
        );
        let mut bad = k.spec.clone();
        bad.h[0][1] = f.add(bad.h[0][1], Fe::ONE);
        assert_eq!(kestenband(&f, Some(&bad)).unwrap_err(), SearchError::InvalidH);
    }
}
