//! Points, lines, incidence and arcs in PG(2,q).

use std::fmt;

use thiserror::Error;

use crate::gf::{Fe, Field};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaneError {
    #[error("the zero vector is not a projective point")]
    ZeroVector,
    #[error("points coincide")]
    CoincidentPoints,
    #[error("point {0} is not on the arc")]
    PointNotInArc(ProjPoint),
}

/// Normalizes a nonzero triple so that its first nonzero entry is 1.
fn normalize(field: &Field, v: [Fe; 3]) -> Option<[Fe; 3]> {
    let lead = *v.iter().find(|c| !c.is_zero())?;
    let s = field.inv(lead).ok()?;
    Some(v.map(|c| field.mul(s, c)))
}

/// A point of PG(2,q): coordinates with first nonzero entry equal to 1.
///
/// Points order lexicographically on the encoded coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint([Fe; 3]);

/// A linear form a₁X₁ + a₂X₂ + a₃X₃, normalized like a point. Its kernel is a
/// line of PG(2,q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm([Fe; 3]);

impl ProjPoint {
    pub fn new(field: &Field, raw: [Fe; 3]) -> Result<ProjPoint, PlaneError> {
        normalize(field, raw).map(ProjPoint).ok_or(PlaneError::ZeroVector)
    }

    /// Point from small integers, reduced into the prime subfield.
    pub fn from_ints(field: &Field, raw: [i64; 3]) -> Result<ProjPoint, PlaneError> {
        ProjPoint::new(field, raw.map(|c| field.from_int(c)))
    }

    pub fn coords(&self) -> [Fe; 3] {
        self.0
    }

    /// Position of this point in the canonical order of all q²+q+1 points.
    pub fn index(&self, q: u32) -> usize {
        coord_index(self.0, q)
    }
}

impl LinearForm {
    pub fn new(field: &Field, raw: [Fe; 3]) -> Result<LinearForm, PlaneError> {
        normalize(field, raw).map(LinearForm).ok_or(PlaneError::ZeroVector)
    }

    pub fn coeffs(&self) -> [Fe; 3] {
        self.0
    }

    /// The value of the form at a coordinate vector.
    pub fn eval(&self, field: &Field, x: &[Fe; 3]) -> Fe {
        dot(field, &self.0, x)
    }

    pub fn contains(&self, field: &Field, p: &ProjPoint) -> bool {
        self.eval(field, &p.0).is_zero()
    }

    /// The q+1 points of the kernel, in canonical order.
    pub fn points(&self, field: &Field) -> Vec<ProjPoint> {
        all_points(field)
            .into_iter()
            .filter(|p| self.contains(field, p))
            .collect()
    }

    /// The dual coordinates of the line, viewed as a point of the dual plane.
    pub fn as_dual_point(&self) -> ProjPoint {
        ProjPoint(self.0)
    }
}

fn coord_index(c: [Fe; 3], q: u32) -> usize {
    // Normalized triples: (0,0,1) | (0,1,*) | (1,*,*).
    let q = q as usize;
    if c[0].is_zero() {
        if c[1].is_zero() {
            0
        } else {
            1 + c[2].code() as usize
        }
    } else {
        1 + q + c[1].code() as usize * q + c[2].code() as usize
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.0[0], self.0[1], self.0[2])
    }
}

pub fn dot(field: &Field, a: &[Fe; 3], b: &[Fe; 3]) -> Fe {
    let s = field.mul(a[0], b[0]);
    let s = field.mul_add(s, a[1], b[1]);
    field.mul_add(s, a[2], b[2])
}

pub fn cross(field: &Field, a: &[Fe; 3], b: &[Fe; 3]) -> [Fe; 3] {
    let m = |x, y| field.mul(x, y);
    [
        field.sub(m(a[1], b[2]), m(a[2], b[1])),
        field.sub(m(a[2], b[0]), m(a[0], b[2])),
        field.sub(m(a[0], b[1]), m(a[1], b[0])),
    ]
}

pub fn det3(field: &Field, a: &[Fe; 3], b: &[Fe; 3], c: &[Fe; 3]) -> Fe {
    dot(field, c, &cross(field, a, b))
}

pub fn normalize_point(field: &Field, raw: [Fe; 3]) -> Result<ProjPoint, PlaneError> {
    ProjPoint::new(field, raw)
}

/// The form whose kernel is the line joining `a` and `b`.
pub fn line_through(field: &Field, a: &ProjPoint, b: &ProjPoint) -> Result<LinearForm, PlaneError> {
    if a == b {
        return Err(PlaneError::CoincidentPoints);
    }
    LinearForm::new(field, cross(field, &a.0, &b.0))
}

pub fn collinear(field: &Field, a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> bool {
    det3(field, &a.0, &b.0, &c.0).is_zero()
}

/// Every point of PG(2,q) in canonical order.
pub fn all_points(field: &Field) -> Vec<ProjPoint> {
    let els: Vec<Fe> = field.elements().collect();
    let mut out = Vec::with_capacity(plane_size(field.q()));
    out.push(ProjPoint([Fe::ZERO, Fe::ZERO, Fe::ONE]));
    for &z in &els {
        out.push(ProjPoint([Fe::ZERO, Fe::ONE, z]));
    }
    for &y in &els {
        for &z in &els {
            out.push(ProjPoint([Fe::ONE, y, z]));
        }
    }
    out
}

/// Every line of PG(2,q), as forms in canonical order.
pub fn all_lines(field: &Field) -> Vec<LinearForm> {
    all_points(field).into_iter().map(|p| LinearForm(p.0)).collect()
}

pub fn plane_size(q: u32) -> usize {
    let q = q as usize;
    q * q + q + 1
}

/// Why a point sequence fails to be an arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArcViolation {
    Duplicate(ProjPoint),
    Collinear([ProjPoint; 3]),
}

impl fmt::Display for ArcViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcViolation::Duplicate(p) => write!(f, "point {p} occurs twice"),
            ArcViolation::Collinear([a, b, c]) => write!(f, "points {a}, {b}, {c} are collinear"),
        }
    }
}

/// A set of points of PG(2,q), no three collinear, held in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    field: Field,
    points: Vec<ProjPoint>,
}

/// Checks the arc property; on failure returns the first witness in canonical order.
pub fn validate_arc(field: &Field, pts: &[ProjPoint]) -> Result<Arc, ArcViolation> {
    let mut points = pts.to_vec();
    points.sort();
    for w in points.windows(2) {
        if w[0] == w[1] {
            return Err(ArcViolation::Duplicate(w[0]));
        }
    }
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            let l = cross(field, &points[i].0, &points[j].0);
            for k in j + 1..n {
                if dot(field, &l, &points[k].0).is_zero() {
                    return Err(ArcViolation::Collinear([points[i], points[j], points[k]]));
                }
            }
        }
    }
    Ok(Arc {
        field: field.clone(),
        points,
    })
}

impl Arc {
    pub fn new(field: &Field, pts: &[ProjPoint]) -> Result<Arc, ArcViolation> {
        validate_arc(field, pts)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The deficiency q + 2 − |A|.
    pub fn deficiency(&self) -> usize {
        self.field.q() as usize + 2 - self.points.len()
    }

    pub fn position(&self, a: &ProjPoint) -> Option<usize> {
        self.points.binary_search(a).ok()
    }

    pub fn contains(&self, a: &ProjPoint) -> bool {
        self.position(a).is_some()
    }

    /// The tangent lines at `a`, in canonical order.
    pub fn tangent_lines(&self, a: &ProjPoint) -> Result<Vec<LinearForm>, PlaneError> {
        if !self.contains(a) {
            return Err(PlaneError::PointNotInArc(*a));
        }
        let f = &self.field;
        let mut bisecants: Vec<LinearForm> = self
            .points
            .iter()
            .filter(|b| *b != a)
            .map(|b| line_through(f, a, b).expect("distinct arc points"))
            .collect();
        bisecants.sort();
        Ok(all_lines(f)
            .into_iter()
            .filter(|l| l.contains(f, a) && bisecants.binary_search(l).is_err())
            .collect())
    }

    /// Arc with the given points removed (silently ignores points not present).
    pub fn without(&self, drop: &[ProjPoint]) -> Arc {
        Arc {
            field: self.field.clone(),
            points: self.points.iter().filter(|p| !drop.contains(p)).copied().collect(),
        }
    }
}

/// Free-standing form of [`Arc::tangent_lines`].
pub fn tangent_lines(arc: &Arc, a: &ProjPoint) -> Result<Vec<LinearForm>, PlaneError> {
    arc.tangent_lines(a)
}
