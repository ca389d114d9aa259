//! Named arcs used throughout the tests, benches and CLI.

use crate::gf::Field;
use crate::plane::{Arc, ProjPoint};
use crate::poly::{HomPoly, TTForm};

fn arc_from(field: &Field, coords: &[[i64; 3]]) -> Arc {
    let pts: Vec<ProjPoint> = coords
        .iter()
        .map(|&c| ProjPoint::from_ints(field, c).expect("nonzero"))
        .collect();
    Arc::new(field, &pts).expect("fixture is an arc")
}

/// The conic X₂² = X₁X₃: the points (1,s,s²) and (0,0,1).
pub fn conic_arc(q: u32) -> Arc {
    let f = Field::of_order(q).expect("prime power");
    let mut pts: Vec<ProjPoint> = f
        .elements()
        .map(|s| ProjPoint::new(&f, [crate::gf::Fe::ONE, s, f.mul(s, s)]).unwrap())
        .collect();
    pts.push(ProjPoint::from_ints(&f, [0, 0, 1]).unwrap());
    Arc::new(&f, &pts).expect("conic is an arc")
}

/// [`conic_arc`] with its last `k` points (canonical order) removed.
pub fn conic_minus(q: u32, k: usize) -> Arc {
    let c = conic_arc(q);
    let n = c.len();
    c.without(&c.points()[n - k..])
}

/// The 12-arc of PG(2,13) with t = 3.
pub fn arc12_q13() -> Arc {
    let f = Field::prime(13).unwrap();
    arc_from(
        &f,
        &[
            [3, 4, 1],
            [-3, 4, 1],
            [3, -4, 1],
            [-3, -4, 1],
            [4, 3, 1],
            [4, -3, 1],
            [-4, 3, 1],
            [-4, -3, 1],
            [1, 1, 1],
            [1, -1, 1],
            [-1, 1, 1],
            [-1, -1, 1],
        ],
    )
}

/// The complete 10-arc of PG(2,11) with t = 3.
pub fn arc10_q11() -> Arc {
    let f = Field::prime(11).unwrap();
    arc_from(
        &f,
        &[
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 8, 7],
            [1, 5, 2],
            [1, 3, 8],
            [1, 4, 1],
            [1, 7, 6],
            [1, 9, 4],
            [1, 10, 5],
        ],
    )
}

/// The quartic X₁³X₂ + X₂³X₃ + X₃³X₁ over GF(29).
pub fn klein_quartic_q29() -> HomPoly {
    let f = Field::prime(29).unwrap();
    HomPoly::from_int_terms(&f, 4, &[([3, 1, 0], 1), ([0, 3, 1], 1), ([1, 0, 3], 1)])
}

/// The 24-arc of PG(2,29): the rational points of [`klein_quartic_q29`].
pub fn arc24_q29() -> Arc {
    let h = klein_quartic_q29();
    let f = h.field().clone();
    let pts: Vec<ProjPoint> = crate::plane::all_points(&f)
        .into_iter()
        .filter(|p| h.eval_point(p).is_zero())
        .collect();
    Arc::new(&f, &pts).expect("quartic zero set is an arc")
}

/// The complete 14-arc of PG(2,17), in canonical form.
pub fn arc14_q17() -> Arc {
    let f = Field::prime(17).unwrap();
    arc_from(
        &f,
        &[
            [0, 0, 1],
            [0, 1, 0],
            [1, 0, 0],
            [1, 1, 1],
            [1, 2, 3],
            [1, 3, 2],
            [1, 4, 8],
            [1, 6, 5],
            [1, 7, 11],
            [1, 10, 4],
            [1, 11, 7],
            [1, 12, 9],
            [1, 13, 10],
            [1, 15, 16],
        ],
    )
}

/// The complete arcs of odd order q ≤ 31 that lie on no conic and have
/// |A| ≥ 2d + 1, with d = t + p^⌊log_p t⌋.
pub fn sporadic_arcs() -> Vec<Arc> {
    vec![arc10_q11(), arc12_q13(), arc14_q17(), arc24_q29()]
}

/// The (3,3)-form of the 12-arc, scaled so the x₁³y₁³ coefficient is 1.
pub fn arc12_q13_reference_form() -> TTForm {
    let f = Field::prime(13).unwrap();
    let mut terms = vec![
        ([3, 0, 0], [3, 0, 0], 1),
        ([0, 3, 0], [0, 3, 0], 1),
        ([0, 0, 3], [0, 0, 3], 1),
        ([1, 1, 1], [1, 1, 1], 6),
    ];
    for (ex, ey) in [
        ([0, 2, 1], [2, 0, 1]),
        ([2, 0, 1], [0, 2, 1]),
        ([0, 1, 2], [2, 1, 0]),
        ([2, 1, 0], [0, 1, 2]),
        ([1, 0, 2], [1, 2, 0]),
        ([1, 2, 0], [1, 0, 2]),
    ] {
        terms.push((ex, ey, 5));
    }
    let terms: Vec<_> = terms.iter().map(|&(a, b, c)| (a, b, f.from_int(c))).collect();
    TTForm::from_terms(&f, 3, 3, &terms)
}

/// Coefficient, X-exponent, Y-exponent.
#[rustfmt::skip]
const ARC10_FORM: [(i64, [u32; 3], [u32; 3]); 59] = [
    (9, [0,0,3], [0,3,0]),
    (7, [0,0,3], [1,2,0]),
    (4, [0,0,3], [2,1,0]),
    (2, [0,0,3], [3,0,0]),
    (5, [0,1,2], [0,1,2]),
    (4, [0,1,2], [1,0,2]),
    (1, [0,1,2], [1,1,1]),
    (9, [0,1,2], [1,2,0]),
    (2, [0,1,2], [2,0,1]),
    (8, [0,1,2], [2,1,0]),
    (5, [0,2,1], [0,2,1]),
    (9, [0,2,1], [1,0,2]),
    (4, [0,2,1], [1,1,1]),
    (8, [0,2,1], [1,2,0]),
    (5, [0,2,1], [2,0,1]),
    (1, [0,2,1], [2,1,0]),
    (8, [0,2,1], [3,0,0]),
    (9, [0,3,0], [0,0,3]),
    (3, [0,3,0], [2,0,1]),
    (1, [0,3,0], [3,0,0]),
    (4, [1,0,2], [0,1,2]),
    (9, [1,0,2], [0,2,1]),
    (5, [1,0,2], [1,0,2]),
    (10, [1,0,2], [1,1,1]),
    (8, [1,0,2], [1,2,0]),
    (9, [1,0,2], [2,1,0]),
    (1, [1,1,1], [0,1,2]),
    (4, [1,1,1], [0,2,1]),
    (10, [1,1,1], [1,0,2]),
    (7, [1,1,1], [1,1,1]),
    (8, [1,1,1], [1,2,0]),
    (4, [1,1,1], [2,0,1]),
    (3, [1,1,1], [2,1,0]),
    (7, [1,2,0], [0,0,3]),
    (9, [1,2,0], [0,1,2]),
    (8, [1,2,0], [0,2,1]),
    (8, [1,2,0], [1,0,2]),
    (8, [1,2,0], [1,1,1]),
    (8, [1,2,0], [1,2,0]),
    (10, [1,2,0], [2,0,1]),
    (1, [1,2,0], [2,1,0]),
    (2, [2,0,1], [0,1,2]),
    (5, [2,0,1], [0,2,1]),
    (3, [2,0,1], [0,3,0]),
    (4, [2,0,1], [1,1,1]),
    (10, [2,0,1], [1,2,0]),
    (5, [2,0,1], [2,0,1]),
    (3, [2,0,1], [2,1,0]),
    (4, [2,1,0], [0,0,3]),
    (8, [2,1,0], [0,1,2]),
    (1, [2,1,0], [0,2,1]),
    (9, [2,1,0], [1,0,2]),
    (3, [2,1,0], [1,1,1]),
    (1, [2,1,0], [1,2,0]),
    (3, [2,1,0], [2,0,1]),
    (8, [2,1,0], [2,1,0]),
    (2, [3,0,0], [0,0,3]),
    (8, [3,0,0], [0,2,1]),
    (1, [3,0,0], [0,3,0]),
];

/// The (3,3)-form of the 10-arc, scaled so the x₁³y₂³ coefficient is 1.
pub fn arc10_q11_reference_form() -> TTForm {
    let f = Field::prime(11).unwrap();
    let terms: Vec<_> = ARC10_FORM.iter().map(|&(c, a, b)| (a, b, f.from_int(c))).collect();
    TTForm::from_terms(&f, 3, 3, &terms)
}
