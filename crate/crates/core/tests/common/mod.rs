//! Property suites shared by `properties.rs` and the acceptance runner.
//!
//! Every check here compares library output against an oracle written
//! directly in terms of field operations, so a bug in the crate's own linear
//! algebra cannot hide itself.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use arcgeom::curvefinder::{compute_bounds, rho_system, trivariate_gcd};
use arcgeom::fixtures;
use arcgeom::plane::all_points;
use arcgeom::poly::monomials;
use arcgeom::search::extensions;
use arcgeom::socle::{chain_increment_ok, socle, socle_chain, vanishing_space};
use arcgeom::ttform::build_f;
use arcgeom::{build_tangent_system, Arc, Fe, Field, HomPoly, ProjPoint};

pub const DEFAULT_SEED: u64 = 0x5eed_a4c5;

/// The seed for randomized suites: `ARCGEOM_SEED` if set, else [`DEFAULT_SEED`].
pub fn seed() -> u64 {
    std::env::var("ARCGEOM_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rank by plain Gaussian elimination.
pub fn rank(field: &Field, mut rows: Vec<Vec<Fe>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = field.inv(rows[r][c]).unwrap();
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let k = field.mul(row[c], inv);
                for (x, &y) in row.iter_mut().zip(&pivot).skip(c) {
                    *x = field.sub(*x, field.mul(k, y));
                }
            }
        }
        r += 1;
    }
    r
}

fn monomial_at(field: &Field, e: [u32; 3], x: &ProjPoint) -> Fe {
    let c = x.coords();
    (0..3).fold(Fe::ONE, |acc, i| field.mul(acc, field.pow(c[i], e[i] as u64)))
}

/// Columns of the degree-r evaluation matrix, one per point.
fn eval_columns(field: &Field, pts: &[ProjPoint], r: u32) -> Vec<Vec<Fe>> {
    let mons = monomials(r);
    pts.iter()
        .map(|x| mons.iter().map(|&e| monomial_at(field, e, x)).collect())
        .collect()
}

fn binom2(r: u32) -> usize {
    ((r + 2) * (r + 1) / 2) as usize
}

/// Socle size equals C(r+2,2) − dim Φ_r, the socle columns are independent
/// and span, and every Φ_r basis element vanishes on the set.
pub fn socle_size_formula(seed: u64, samples: usize) -> Result<(), String> {
    let mut rng = rng(seed);
    let orders = [5u32, 7, 8, 9, 11, 13];
    for k in 0..samples {
        let q = *orders.choose(&mut rng).unwrap();
        let field = Field::of_order(q).unwrap();
        let mut all = all_points(&field);
        all.shuffle(&mut rng);
        let n = rng.gen_range(0..=(2 * q as usize + 6));
        let pts = &all[..n];
        let r = rng.gen_range(1..=5);
        let s = socle(&field, pts, r, &[]).map_err(|e| e.to_string())?;
        let v = vanishing_space(&field, pts, r);
        let full = rank(&field, eval_columns(&field, pts, r));
        let sub = rank(&field, eval_columns(&field, s.points(), r));
        if s.len() != binom2(r) - v.dim() || s.len() != full || sub != s.len() {
            return Err(format!(
                "sample {k}: q={q} |D|={n} r={r}: socle {} dim {} rank {full} socle rank {sub}",
                s.len(),
                v.dim()
            ));
        }
        if let Some(b) = v.basis().iter().find(|b| pts.iter().any(|x| !b.eval_point(x).is_zero())) {
            return Err(format!("sample {k}: basis element {b} does not vanish"));
        }
    }
    Ok(())
}

/// A random arc grown by adding random extension points.
pub fn random_arc(field: &Field, size: usize, rng: &mut ChaCha8Rng) -> Arc {
    let mut arc = Arc::new(field, &[]).unwrap();
    while arc.len() < size {
        let ext = extensions(&arc);
        let Some(x) = ext.choose(rng) else { break };
        let mut pts = arc.points().to_vec();
        pts.push(*x);
        arc = Arc::new(field, &pts).unwrap();
    }
    arc
}

/// Nested socle chains respect |S_r ∖ S₀| ≤ r(t + r/2 + 3/2), and
/// dim Φ_{t+r} ≥ dim Φ_t.
pub fn socle_chain_bound(seed: u64, samples: usize) -> Result<(), String> {
    let mut rng = rng(seed);
    let mut arcs: Vec<Arc> = vec![fixtures::arc10_q11(), fixtures::arc12_q13(), fixtures::arc14_q17()];
    for _ in 0..samples {
        let q = *[5u32, 7, 9, 11, 13].choose(&mut rng).unwrap();
        let field = Field::of_order(q).unwrap();
        let size = rng.gen_range(4..=q as usize);
        arcs.push(random_arc(&field, size, &mut rng));
    }
    for arc in &arcs {
        let t = arc.deficiency() as u32;
        let chain = socle_chain(arc, 3);
        let s0 = &chain[0];
        let phi_t = vanishing_space(arc.field(), arc.points(), t).dim();
        for (r, s) in chain.iter().enumerate() {
            let r = r as u32;
            if !s0.points().iter().all(|x| s.contains(x)) {
                return Err(format!("chain not nested at r={r} for an arc of size {}", arc.len()));
            }
            let inc = s.len() - s0.len();
            // Integer form of the bound: 2·inc ≤ r(2t + r + 3).
            if 2 * inc as u64 > r as u64 * (2 * t as u64 + r as u64 + 3) || !chain_increment_ok(t, r, inc) {
                return Err(format!("increment {inc} too large at t={t} r={r}"));
            }
            let phi = vanishing_space(arc.field(), arc.points(), t + r).dim();
            if phi < phi_t || s.len() != binom2(t + r) - phi {
                return Err(format!("dimension check failed at t={t} r={r}"));
            }
        }
    }
    Ok(())
}

pub fn odd_fixtures() -> Vec<(String, Arc)> {
    let mut v = Vec::new();
    for q in [5, 7, 9, 11, 13] {
        v.push((format!("conic q={q}"), fixtures::conic_arc(q)));
        for k in 1..=3 {
            v.push((format!("conic-{k} q={q}"), fixtures::conic_minus(q, k)));
        }
    }
    v.push(("10-arc q=11".into(), fixtures::arc10_q11()));
    v.push(("12-arc q=13".into(), fixtures::arc12_q13()));
    v.push(("14-arc q=17".into(), fixtures::arc14_q17()));
    v.push(("24-arc q=29".into(), fixtures::arc24_q29()));
    v
}

/// Every ρ_w vanishes on the arc it was built from.
pub fn rho_vanishing() -> Result<usize, String> {
    let mut checked = 0;
    for (name, arc) in odd_fixtures() {
        let f = arc.field();
        let t = arc.deficiency() as u32;
        let sys = build_tangent_system(&arc, None).map_err(|e| format!("{name}: {e}"))?;
        let form = build_f(&sys).map_err(|e| format!("{name}: {e}"))?;
        let b = compute_bounds(f.q(), f.p(), t, None).map_err(|e| format!("{name}: {e}"))?;
        let rho = rho_system(&form, &b);
        for (w, r) in &rho.rhos {
            if r.degree() != 2 * t - w.iter().sum::<u32>() {
                return Err(format!("{name}: ρ_{w:?} has degree {}", r.degree()));
            }
            if let Some(y) = arc.points().iter().find(|y| !r.eval_point(y).is_zero()) {
                return Err(format!("{name}: ρ_{w:?} is nonzero at {y}"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn random_poly(field: &Field, d: u32, rng: &mut ChaCha8Rng) -> HomPoly {
    loop {
        let q = field.q() as u64;
        let coeffs: Vec<Fe> = (0..binom2(d))
            .map(|_| {
                // Sparse-ish: about half the coefficients are zero.
                if rng.gen_bool(0.5) {
                    Fe::ZERO
                } else {
                    field.element(rng.gen_range(1..q)).unwrap()
                }
            })
            .collect();
        let f = HomPoly::from_coeffs(field, d, coeffs);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Whether f and g share no factor: for deg f = a, deg g = b ≥ 1, the map
/// (u, v) ↦ u·f − v·g from V_{b−1} × V_{a−1} to V_{a+b−1} is injective.
pub fn coprime_oracle(f: &HomPoly, g: &HomPoly) -> bool {
    let field = f.field();
    let (a, b) = (f.degree(), g.degree());
    if a == 0 || b == 0 {
        return true;
    }
    let mut rows = Vec::new();
    for e in monomials(b - 1) {
        rows.push(HomPoly::monomial(field, e, Fe::ONE).mul(f).coeffs().to_vec());
    }
    for e in monomials(a - 1) {
        rows.push(HomPoly::monomial(field, e, Fe::ONE).mul(g).coeffs().to_vec());
    }
    let n = rows.len();
    rank(field, rows) == n
}

/// trivariate_gcd(u·w₁, u·w₂) is u up to scalar whenever w₁, w₂ are coprime,
/// and constant-ness of any gcd agrees with the linear-map oracle.
pub fn gcd_oracle(seed: u64, samples: usize) -> Result<usize, String> {
    let mut rng = rng(seed);
    let mut coprime_cases = 0;
    for k in 0..samples {
        let q = *[3u32, 5, 7, 9, 11, 13].choose(&mut rng).unwrap();
        let field = Field::of_order(q).unwrap();
        let du = rng.gen_range(0..=3);
        let d1 = rng.gen_range(1..=3);
        let d2 = rng.gen_range(1..=3);
        let u = random_poly(&field, du, &mut rng);
        let mut w1 = random_poly(&field, d1, &mut rng);
        let mut w2 = random_poly(&field, d2, &mut rng);
        if rng.gen_bool(0.25) {
            // Plant a shared linear factor.
            let l = random_poly(&field, 1, &mut rng);
            w1 = w1.mul(&l);
            w2 = w2.mul(&l);
        }
        let (f, g) = (u.mul(&w1), u.mul(&w2));
        let got = trivariate_gcd(&f, &g).map_err(|e| e.to_string())?;
        if !got.divides(&f) || !got.divides(&g) || !u.divides(&got) {
            return Err(format!("sample {k} (q={q}): gcd {got} of ({f}, {g}) is not a common divisor multiple of {u}"));
        }
        let plain = trivariate_gcd(&w1, &w2).map_err(|e| e.to_string())?;
        let oracle = coprime_oracle(&w1, &w2);
        if oracle != (plain.degree() == 0) {
            return Err(format!("sample {k} (q={q}): oracle says coprime={oracle}, gcd({w1}, {w2}) = {plain}"));
        }
        if got.degree() != u.degree() + plain.degree() {
            return Err(format!("sample {k} (q={q}): gcd degree {} ≠ {} + {}", got.degree(), u.degree(), plain.degree()));
        }
        if oracle {
            coprime_cases += 1;
            if got != u.monic() {
                return Err(format!("sample {k} (q={q}): gcd {got} ≠ {u} up to scalar"));
            }
        }
    }
    Ok(coprime_cases)
}
