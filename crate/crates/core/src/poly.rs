//! Homogeneous polynomials in three variables, bihomogeneous forms in two
//! triples of variables, and binary forms.
//!
//! Coefficients are stored densely, one slot per monomial, in graded
//! lexicographic order with X₁ > X₂ > X₃: for degree r the monomials run
//! X₁ʳ, X₁ʳ⁻¹X₂, X₁ʳ⁻¹X₃, X₁ʳ⁻²X₂², … , X₃ʳ. "Canonically smallest monomial"
//! means earliest in this list.

use std::fmt;

use crate::gf::{Fe, Field};
use crate::plane::{LinearForm, ProjPoint};

/// Exponent triple (i, j, k) of X₁ⁱX₂ʲX₃ᵏ.
pub type Exp = [u32; 3];

pub fn monomial_count(r: u32) -> usize {
    let r = r as usize;
    (r + 1) * (r + 2) / 2
}

/// Position of a monomial within its degree.
#[inline]
pub fn monomial_index(e: Exp) -> usize {
    let a = (e[1] + e[2]) as usize;
    a * (a + 1) / 2 + (a - e[1] as usize)
}

pub fn monomials(r: u32) -> Vec<Exp> {
    let mut out = Vec::with_capacity(monomial_count(r));
    for a in 0..=r {
        for j in (0..=a).rev() {
            out.push([r - a, j, a - j]);
        }
    }
    out
}

/// Values of every degree-r monomial at `x`, in canonical order.
pub fn monomial_values(field: &Field, r: u32, x: &[Fe; 3]) -> Vec<Fe> {
    let pw: Vec<Vec<Fe>> = x
        .iter()
        .map(|&c| {
            let mut v = Vec::with_capacity(r as usize + 1);
            let mut acc = Fe::ONE;
            for _ in 0..=r {
                v.push(acc);
                acc = field.mul(acc, c);
            }
            v
        })
        .collect();
    monomials(r)
        .into_iter()
        .map(|e| {
            field.mul(
                field.mul(pw[0][e[0] as usize], pw[1][e[1] as usize]),
                pw[2][e[2] as usize],
            )
        })
        .collect()
}

/// A homogeneous polynomial of fixed degree in X₁, X₂, X₃.
#[derive(Clone, PartialEq, Eq)]
pub struct HomPoly {
    field: Field,
    degree: u32,
    coeffs: Vec<Fe>,
}

impl HomPoly {
    pub fn zero(field: &Field, degree: u32) -> HomPoly {
        HomPoly {
            field: field.clone(),
            degree,
            coeffs: vec![Fe::ZERO; monomial_count(degree)],
        }
    }

    pub fn constant(field: &Field, c: Fe) -> HomPoly {
        HomPoly {
            field: field.clone(),
            degree: 0,
            coeffs: vec![c],
        }
    }

    /// Builds from a dense coefficient vector in canonical monomial order.
    pub fn from_coeffs(field: &Field, degree: u32, coeffs: Vec<Fe>) -> HomPoly {
        assert_eq!(coeffs.len(), monomial_count(degree), "coefficient count");
        HomPoly {
            field: field.clone(),
            degree,
            coeffs,
        }
    }

    /// Builds from terms; repeated monomials are summed.
    pub fn from_terms(field: &Field, degree: u32, terms: &[(Exp, Fe)]) -> HomPoly {
        let mut p = HomPoly::zero(field, degree);
        for &(e, c) in terms {
            assert_eq!(e.iter().sum::<u32>(), degree, "exponent {e:?} has wrong degree");
            let i = monomial_index(e);
            p.coeffs[i] = field.add(p.coeffs[i], c);
        }
        p
    }

    /// Terms with small integer coefficients, reduced into the prime field.
    pub fn from_int_terms(field: &Field, degree: u32, terms: &[(Exp, i64)]) -> HomPoly {
        let t: Vec<(Exp, Fe)> = terms.iter().map(|&(e, c)| (e, field.from_int(c))).collect();
        HomPoly::from_terms(field, degree, &t)
    }

    pub fn monomial(field: &Field, e: Exp, c: Fe) -> HomPoly {
        HomPoly::from_terms(field, e.iter().sum(), &[(e, c)])
    }

    pub fn linear(field: &Field, c: [Fe; 3]) -> HomPoly {
        HomPoly::from_coeffs(field, 1, c.to_vec())
    }

    pub fn from_form(field: &Field, l: &LinearForm) -> HomPoly {
        HomPoly::linear(field, l.coeffs())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coeff(&self, e: Exp) -> Fe {
        self.coeffs[monomial_index(e)]
    }

    pub fn set_coeff(&mut self, e: Exp, c: Fe) {
        let i = monomial_index(e);
        self.coeffs[i] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero terms in canonical order.
    pub fn terms(&self) -> Vec<(Exp, Fe)> {
        monomials(self.degree)
            .into_iter()
            .zip(self.coeffs.iter().copied())
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// First nonzero term in canonical order.
    pub fn leading(&self) -> Option<(Exp, Fe)> {
        let i = self.coeffs.iter().position(|c| !c.is_zero())?;
        Some((monomials(self.degree)[i], self.coeffs[i]))
    }

    /// Scalar multiple with leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> HomPoly {
        match self.leading() {
            Some((_, c)) => self.scale(self.field.inv(c).expect("nonzero")),
            None => self.clone(),
        }
    }

    pub fn eval(&self, x: &[Fe; 3]) -> Fe {
        let vals = monomial_values(&self.field, self.degree, x);
        let f = &self.field;
        self.coeffs
            .iter()
            .zip(vals)
            .fold(Fe::ZERO, |acc, (&c, v)| f.mul_add(acc, c, v))
    }

    pub fn eval_point(&self, x: &ProjPoint) -> Fe {
        self.eval(&x.coords())
    }

    pub fn scale(&self, c: Fe) -> HomPoly {
        let f = &self.field;
        HomPoly {
            field: f.clone(),
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn neg(&self) -> HomPoly {
        self.scale(self.field.neg(Fe::ONE))
    }

    pub fn add(&self, other: &HomPoly) -> HomPoly {
        assert_eq!(self.degree, other.degree, "adding forms of different degree");
        let f = &self.field;
        HomPoly {
            field: f.clone(),
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &HomPoly) -> HomPoly {
        self.add(&other.neg())
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, c: Fe, other: &HomPoly) -> HomPoly {
        self.add(&other.scale(c))
    }

    pub fn mul(&self, other: &HomPoly) -> HomPoly {
        let f = &self.field;
        let degree = self.degree + other.degree;
        let mut out = vec![Fe::ZERO; monomial_count(degree)];
        let lhs = self.terms();
        let rhs = other.terms();
        for &(ea, a) in &lhs {
            for &(eb, b) in &rhs {
                let i = monomial_index([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]]);
                out[i] = f.mul_add(out[i], a, b);
            }
        }
        HomPoly {
            field: f.clone(),
            degree,
            coeffs: out,
        }
    }

    pub fn pow(&self, k: u32) -> HomPoly {
        let mut acc = HomPoly::constant(&self.field, Fe::ONE);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &HomPoly) -> Option<HomPoly> {
        let (lg, cg) = g.leading()?;
        if g.degree > self.degree {
            return self.is_zero().then(|| HomPoly::zero(&self.field, 0));
        }
        let f = &self.field;
        let inv = f.inv(cg).expect("nonzero");
        let mut rem = self.clone();
        let mut quot = HomPoly::zero(f, self.degree - g.degree);
        let gterms = g.terms();
        while let Some((lr, cr)) = rem.leading() {
            if (0..3).any(|i| lr[i] < lg[i]) {
                return None;
            }
            let e = [lr[0] - lg[0], lr[1] - lg[1], lr[2] - lg[2]];
            let c = f.mul(cr, inv);
            let qi = monomial_index(e);
            quot.coeffs[qi] = f.add(quot.coeffs[qi], c);
            let nc = f.neg(c);
            for &(eg, a) in &gterms {
                let i = monomial_index([eg[0] + e[0], eg[1] + e[1], eg[2] + e[2]]);
                rem.coeffs[i] = f.mul_add(rem.coeffs[i], nc, a);
            }
        }
        Some(quot)
    }

    pub fn divides(&self, other: &HomPoly) -> bool {
        other.div_exact(self).is_some()
    }

    /// Highest power of X_var dividing the polynomial (`degree` for zero).
    pub fn var_valuation(&self, var: usize) -> u32 {
        self.terms().iter().map(|(e, _)| e[var]).min().unwrap_or(self.degree)
    }

    /// Largest exponent of X_var occurring.
    pub fn var_degree(&self, var: usize) -> u32 {
        self.terms().iter().map(|(e, _)| e[var]).max().unwrap_or(0)
    }

    /// Substitutes Xᵢ ↦ Σⱼ m[i][j] Xⱼ.
    pub fn substitute_linear(&self, m: &[[Fe; 3]; 3]) -> HomPoly {
        let f = &self.field;
        let lin: Vec<HomPoly> = m.iter().map(|row| HomPoly::linear(f, *row)).collect();
        let powers: Vec<Vec<HomPoly>> = lin
            .iter()
            .map(|l| {
                let mut v = vec![HomPoly::constant(f, Fe::ONE)];
                for k in 0..self.degree as usize {
                    let next = v[k].mul(l);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = HomPoly::zero(f, self.degree);
        for (e, c) in self.terms() {
            let t = powers[0][e[0] as usize]
                .mul(&powers[1][e[1] as usize])
                .mul(&powers[2][e[2] as usize]);
            out = out.add_scaled(c, &t);
        }
        out
    }

    /// The binary form B(s,u) = self(s·x + u·y).
    pub fn restrict_to_line(&self, x: &[Fe; 3], y: &[Fe; 3]) -> BinaryForm {
        let f = &self.field;
        let lin: Vec<BinaryForm> = (0..3)
            .map(|i| BinaryForm::new(f, vec![x[i], y[i]]))
            .collect();
        let mut out = BinaryForm::new(f, vec![Fe::ZERO; self.degree as usize + 1]);
        for (e, c) in self.terms() {
            let mut t = BinaryForm::new(f, vec![c]);
            for (i, l) in lin.iter().enumerate() {
                for _ in 0..e[i] {
                    t = t.mul(l);
                }
            }
            out = out.add(&t);
        }
        out
    }
}

impl fmt::Debug for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = (0..3)
                .filter(|&i| e[i] > 0)
                .map(|i| {
                    if e[i] == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e[i])
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{c}")?;
            } else if c == Fe::ONE {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{c}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A binary form Σ cₖ s^{r−k} uᵏ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    field: Field,
    coeffs: Vec<Fe>,
}

impl BinaryForm {
    pub fn new(field: &Field, coeffs: Vec<Fe>) -> BinaryForm {
        assert!(!coeffs.is_empty());
        BinaryForm {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn add(&self, other: &BinaryForm) -> BinaryForm {
        let f = &self.field;
        BinaryForm::new(
            f,
            self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.add(a, b)).collect(),
        )
    }

    fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let f = &self.field;
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.mul_add(out[i + j], a, b);
            }
        }
        BinaryForm::new(f, out)
    }

    /// Projective roots (s : u) with multiplicities, `(0:1)` first, then
    /// `(1:λ)` in encoding order of λ. Empty for the zero form.
    pub fn roots(&self) -> Vec<([Fe; 2], usize)> {
        if self.is_zero() {
            return Vec::new();
        }
        let f = &self.field;
        let r = self.degree();
        // Dehomogenize at s = 1: b(u) = Σ cₖ uᵏ.
        let mut b = self.coeffs.clone();
        while b.last().is_some_and(|c| c.is_zero()) {
            b.pop();
        }
        let mut out = Vec::new();
        let at_infinity = r - (b.len() - 1);
        if at_infinity > 0 {
            out.push(([Fe::ZERO, Fe::ONE], at_infinity));
        }
        for lambda in f.elements() {
            let mut mult = 0;
            loop {
                if b.len() < 2 {
                    break;
                }
                // synthetic division by (u − λ)
                let n = b.len() - 1;
                let mut q = vec![Fe::ZERO; n];
                let mut carry = Fe::ZERO;
                for k in (0..=n).rev() {
                    let v = f.mul_add(b[k], carry, lambda);
                    if k == 0 {
                        carry = v;
                    } else {
                        q[k - 1] = v;
                        carry = v;
                    }
                }
                if !carry.is_zero() {
                    break;
                }
                b = q;
                mult += 1;
            }
            if mult > 0 {
                out.push(([Fe::ONE, lambda], mult));
            }
        }
        out
    }
}

/// A bihomogeneous form of degree `dx` in X and `dy` in Y.
#[derive(Clone, PartialEq, Eq)]
pub struct BiForm {
    field: Field,
    dx: u32,
    dy: u32,
    coeffs: Vec<Fe>,
}

/// A (t,t)-form.
pub type TTForm = BiForm;

impl BiForm {
    pub fn zero(field: &Field, dx: u32, dy: u32) -> BiForm {
        BiForm {
            field: field.clone(),
            dx,
            dy,
            coeffs: vec![Fe::ZERO; monomial_count(dx) * monomial_count(dy)],
        }
    }

    /// Dense coefficients indexed `ix · C(dy+2,2) + iy`.
    pub fn from_coeffs(field: &Field, dx: u32, dy: u32, coeffs: Vec<Fe>) -> BiForm {
        assert_eq!(coeffs.len(), monomial_count(dx) * monomial_count(dy));
        BiForm {
            field: field.clone(),
            dx,
            dy,
            coeffs,
        }
    }

    pub fn from_terms(field: &Field, dx: u32, dy: u32, terms: &[(Exp, Exp, Fe)]) -> BiForm {
        let mut b = BiForm::zero(field, dx, dy);
        for &(ex, ey, c) in terms {
            assert_eq!(ex.iter().sum::<u32>(), dx);
            assert_eq!(ey.iter().sum::<u32>(), dy);
            let i = b.slot(ex, ey);
            b.coeffs[i] = field.add(b.coeffs[i], c);
        }
        b
    }

    #[inline]
    fn slot(&self, ex: Exp, ey: Exp) -> usize {
        monomial_index(ex) * monomial_count(self.dy) + monomial_index(ey)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn dx(&self) -> u32 {
        self.dx
    }
    pub fn dy(&self) -> u32 {
        self.dy
    }
    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coeff(&self, ex: Exp, ey: Exp) -> Fe {
        self.coeffs[self.slot(ex, ey)]
    }

    pub fn set_coeff(&mut self, ex: Exp, ey: Exp, c: Fe) {
        let i = self.slot(ex, ey);
        self.coeffs[i] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero terms sorted by (ex, ey) in canonical order.
    pub fn terms(&self) -> Vec<(Exp, Exp, Fe)> {
        let mx = monomials(self.dx);
        let my = monomials(self.dy);
        let ny = my.len();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| (mx[i / ny], my[i % ny], c))
            .collect()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: Fe) -> BiForm {
        let f = &self.field;
        BiForm {
            field: f.clone(),
            dx: self.dx,
            dy: self.dy,
            coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn add(&self, other: &BiForm) -> BiForm {
        assert_eq!((self.dx, self.dy), (other.dx, other.dy));
        let f = &self.field;
        BiForm {
            field: f.clone(),
            dx: self.dx,
            dy: self.dy,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn mul(&self, other: &BiForm) -> BiForm {
        let f = &self.field;
        let mut out = BiForm::zero(f, self.dx + other.dx, self.dy + other.dy);
        let lhs = self.terms();
        let rhs = other.terms();
        for &(ax, ay, a) in &lhs {
            for &(bx, by, b) in &rhs {
                let i = out.slot(
                    [ax[0] + bx[0], ax[1] + bx[1], ax[2] + bx[2]],
                    [ay[0] + by[0], ay[1] + by[1], ay[2] + by[2]],
                );
                out.coeffs[i] = f.mul_add(out.coeffs[i], a, b);
            }
        }
        out
    }

    /// F(X, y) as a form in X.
    pub fn eval_y(&self, y: &[Fe; 3]) -> HomPoly {
        let f = &self.field;
        let vy = monomial_values(f, self.dy, y);
        let ny = vy.len();
        let coeffs = self
            .coeffs
            .chunks(ny)
            .map(|row| row.iter().zip(&vy).fold(Fe::ZERO, |acc, (&c, &v)| f.mul_add(acc, c, v)))
            .collect();
        HomPoly::from_coeffs(f, self.dx, coeffs)
    }

    /// F(x, Y) as a form in Y.
    pub fn eval_x(&self, x: &[Fe; 3]) -> HomPoly {
        let f = &self.field;
        let vx = monomial_values(f, self.dx, x);
        let ny = monomial_count(self.dy);
        let mut coeffs = vec![Fe::ZERO; ny];
        for (ix, &v) in vx.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for (iy, c) in coeffs.iter_mut().enumerate() {
                *c = f.mul_add(*c, v, self.coeffs[ix * ny + iy]);
            }
        }
        HomPoly::from_coeffs(f, self.dy, coeffs)
    }

    pub fn eval(&self, x: &[Fe; 3], y: &[Fe; 3]) -> Fe {
        self.eval_y(y).eval(x)
    }

    /// F(Y, X).
    pub fn swapped(&self) -> BiForm {
        let terms: Vec<(Exp, Exp, Fe)> = self.terms().into_iter().map(|(a, b, c)| (b, a, c)).collect();
        BiForm::from_terms(&self.field, self.dy, self.dx, &terms)
    }
}

impl fmt::Debug for BiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiForm({},{}; {} terms)", self.dx, self.dy, self.num_terms())
    }
}
