//! Evaluation matrices, vanishing spaces Φ_r, r-socles and socle chains.
//!
//! Rows of the degree-r evaluation matrix are the monomials of degree r in
//! canonical order, columns are points. An r-socle of a point set D is a
//! subset indexing a column basis, so it has C(r+2,2) − dim Φ_r points.

use thiserror::Error;

use crate::gf::{Fe, Field};
use crate::linalg::{EchelonBasis, Matrix};
use crate::plane::{Arc, ProjPoint};
use crate::poly::{monomial_count, monomial_values, HomPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SocleError {
    #[error("seed point {0} is dependent on the earlier seed points at this degree")]
    SeedDependent(ProjPoint),
}

/// The C(r+2,2) × |D| matrix of monomial values.
pub fn eval_matrix(field: &Field, pts: &[ProjPoint], r: u32) -> Matrix {
    let cols: Vec<Vec<Fe>> = pts.iter().map(|p| monomial_values(field, r, &p.coords())).collect();
    Matrix::from_rows(field, monomial_count(r), cols).transpose()
}

/// Φ_r: the degree-r forms vanishing on a point set.
#[derive(Debug, Clone)]
pub struct VanishingSpace {
    degree: u32,
    basis: Vec<HomPoly>,
    echelon: EchelonBasis,
}

pub fn vanishing_space(field: &Field, pts: &[ProjPoint], r: u32) -> VanishingSpace {
    let n = monomial_count(r);
    let rows: Vec<Vec<Fe>> = pts.iter().map(|p| monomial_values(field, r, &p.coords())).collect();
    let null = if rows.is_empty() {
        (0..n)
            .map(|i| {
                let mut v = vec![Fe::ZERO; n];
                v[i] = Fe::ONE;
                v
            })
            .collect()
    } else {
        Matrix::from_rows(field, n, rows).nullspace()
    };
    let echelon = EchelonBasis::from_rows(field, n, null.iter().cloned());
    VanishingSpace {
        degree: r,
        basis: null.into_iter().map(|c| HomPoly::from_coeffs(field, r, c)).collect(),
        echelon,
    }
}

impl VanishingSpace {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduced echelon basis (pivots in canonical monomial order).
    pub fn basis(&self) -> &[HomPoly] {
        &self.basis
    }

    /// Remainder of `f` after reduction against the echelon basis.
    pub fn reduce(&self, f: &HomPoly) -> HomPoly {
        assert_eq!(f.degree(), self.degree);
        HomPoly::from_coeffs(f.field(), self.degree, self.echelon.reduce(f.coeffs()))
    }

    pub fn contains(&self, f: &HomPoly) -> bool {
        f.degree() == self.degree && self.echelon.contains(f.coeffs())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Socle {
    degree: u32,
    points: Vec<ProjPoint>,
}

impl Socle {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Seed points first, then the greedy additions in canonical order.
    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.points.contains(p)
    }
}

/// Greedy r-socle of `pts` extending `seed`.
pub fn socle(field: &Field, pts: &[ProjPoint], r: u32, seed: &[ProjPoint]) -> Result<Socle, SocleError> {
    let n = monomial_count(r);
    let mut basis = EchelonBasis::new(field, n);
    let mut chosen = Vec::new();
    for p in seed {
        if !basis.insert(monomial_values(field, r, &p.coords())) {
            return Err(SocleError::SeedDependent(*p));
        }
        chosen.push(*p);
    }
    let mut order = pts.to_vec();
    order.sort();
    for p in order {
        if basis.rank() == n {
            break;
        }
        if chosen.contains(&p) {
            continue;
        }
        if basis.insert(monomial_values(field, r, &p.coords())) {
            chosen.push(p);
        }
    }
    Ok(Socle {
        degree: r,
        points: chosen,
    })
}

/// Nested socles S₀ ⊆ S₁ ⊆ … ⊆ S_{r_max} of an arc at degrees t, …, t + r_max.
pub fn socle_chain(arc: &Arc, r_max: u32) -> Vec<Socle> {
    let t = arc.deficiency() as u32;
    let f = arc.field();
    let mut chain: Vec<Socle> = Vec::with_capacity(r_max as usize + 1);
    for j in 0..=r_max {
        let seed = chain.last().map(|s| s.points.clone()).unwrap_or_default();
        let s = socle(f, arc.points(), t + j, &seed).expect("a socle stays independent one degree up");
        chain.push(s);
    }
    chain
}

/// Whether |S_r ∖ S₀| ≤ r(t + r/2 + 3/2), compared in integers.
pub fn chain_increment_ok(t: u32, r: u32, increment: usize) -> bool {
    2 * increment as u64 <= r as u64 * (2 * t as u64 + r as u64 + 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn twelve_arc_has_no_cubic() {
        let arc = fixtures::arc12_q13();
        let v = vanishing_space(arc.field(), arc.points(), 3);
        assert_eq!(v.dim(), 0);
        let s = socle(arc.field(), arc.points(), 3, &[]).unwrap();
        assert_eq!(s.len(), 10);
    }

    #[test]
    fn twelve_arc_quartics() {
        let arc = fixtures::arc12_q13();
        let f = arc.field();
        let v = vanishing_space(f, arc.points(), 4);
        let q1 = HomPoly::from_int_terms(f, 4, &[([0, 4, 0], 1), ([2, 0, 2], -1)]);
        let q2 = HomPoly::from_int_terms(f, 4, &[([4, 0, 0], 1), ([0, 2, 2], -1)]);
        let q3 = HomPoly::from_int_terms(f, 4, &[([0, 0, 4], 1), ([2, 2, 0], -1)]);
        assert_eq!(v.dim(), 3);
        for q in [&q1, &q2, &q3] {
            assert!(v.contains(q));
            assert!(v.reduce(q).is_zero());
        }
        let x = HomPoly::from_int_terms(f, 4, &[([4, 0, 0], 1)]);
        assert!(!v.contains(&x));
    }

    #[test]
    fn basis_vanishes_and_is_echelon() {
        let arc = fixtures::arc10_q11();
        for r in 1..6 {
            let v = vanishing_space(arc.field(), arc.points(), r);
            let mut last = None;
            for b in v.basis() {
                for p in arc.points() {
                    assert!(b.eval_point(p).is_zero());
                }
                let lead = b.coeffs().iter().position(|c| !c.is_zero()).unwrap();
                assert_eq!(b.coeffs()[lead], Fe::ONE);
                assert!(last.is_none_or(|l| l < lead));
                last = Some(lead);
            }
            let s = socle(arc.field(), arc.points(), r, &[]).unwrap();
            assert_eq!(v.dim() + s.len(), monomial_count(r));
        }
    }

    #[test]
    fn five_points_lie_on_a_conic() {
        let arc = fixtures::arc10_q11();
        let v = vanishing_space(arc.field(), &arc.points()[..5], 2);
        assert!(v.dim() >= 1);
    }

    #[test]
    fn empty_set() {
        let f = Field::prime(5).unwrap();
        assert!(socle(&f, &[], 1, &[]).unwrap().is_empty());
        assert_eq!(vanishing_space(&f, &[], 2).dim(), 6);
    }

    #[test]
    fn dependent_seed_rejected() {
        let f = Field::prime(7).unwrap();
        let pts: Vec<ProjPoint> = [[1, 0, 0], [0, 1, 0], [1, 1, 0]]
            .iter()
            .map(|&c| ProjPoint::from_ints(&f, c).unwrap())
            .collect();
        assert_eq!(socle(&f, &pts, 1, &pts), Err(SocleError::SeedDependent(pts[2])));
    }

    #[test]
    fn chains_nest_and_respect_the_bound() {
        for arc in [fixtures::arc12_q13(), fixtures::arc10_q11(), fixtures::conic_minus(11, 3)] {
            let t = arc.deficiency() as u32;
            let chain = socle_chain(&arc, 3);
            assert_eq!(chain.len(), 4);
            for (j, s) in chain.iter().enumerate() {
                assert_eq!(s.degree(), t + j as u32);
                assert!(chain[0].points().iter().all(|p| s.contains(p)));
                assert!(chain_increment_ok(t, j as u32, s.len() - chain[0].len()));
            }
        }
        assert!(chain_increment_ok(3, 1, 5));
        assert!(!chain_increment_ok(3, 1, 6));
    }
}
