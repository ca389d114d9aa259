//! Exact arithmetic in GF(p^h).
//!
//! Elements are stored by their integer encoding `Σ cᵢ pⁱ`, where `cᵢ` are the
//! coefficients of the polynomial representative (constant term first). The
//! encoding is a bijection onto `0..q`, so comparing encodings gives the total
//! order every canonical choice in the crate relies on.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest field order for which multiplication tables are built.
pub const MAX_ORDER: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NonPrime(u32),
    #[error("modulus is reducible over Z_{0}")]
    ReducibleModulus(u32),
    #[error("modulus has degree {found}, expected monic of degree {expected}")]
    DegreeMismatch { expected: u32, found: usize },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds the supported maximum {MAX_ORDER}")]
    TooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element wire form has {found} coefficients, expected {expected}")]
    BadElement { expected: u32, found: usize },
    #[error("encoded element {0} is out of range")]
    OutOfRange(u64),
}

/// A field element, stored as its integer encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[repr(transparent)]
pub struct Fe(pub(crate) u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    /// The integer encoding of the element.
    #[inline]
    pub fn code(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    p: u32,
    h: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

/// The field GF(p^h) together with its arithmetic tables.
///
/// Cloning is cheap; all clones share the same tables.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Tables>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; modulus {:?})", self.p(), self.h(), self.modulus())
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Polynomials over Z_p as coefficient vectors, constant term first.

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = (r[dr] as u64 * lead_inv as u64 % p as u64) as u32;
        let shift = dr - db;
        for (i, &bi) in b.iter().enumerate() {
            let s = (c as u64 * bi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - s) % p;
        }
        trim(&mut r);
    }
    r
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime and small: Fermat.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Digits of `n` in base `p`, least significant first, padded to `len`.
fn digits(mut n: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((n % p as u64) as u32);
        n /= p as u64;
    }
    out
}

/// Irreducibility of a monic polynomial over Z_p by root search plus
/// trial division by every monic polynomial of degree 2..=deg/2.
pub fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for x in 0..p {
        let mut acc = 0u64;
        for &c in modulus.iter().rev() {
            acc = (acc * x as u64 + c as u64) % p as u64;
        }
        if acc == 0 {
            return false;
        }
    }
    for d in 2..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for n in 0..count {
            let mut divisor = digits(n, p, d);
            divisor.push(1);
            if poly_rem(modulus, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The lexicographically smallest monic irreducible polynomial of degree `h`
/// over Z_p, with the constant term varying fastest.
pub fn default_modulus(p: u32, h: u32) -> Vec<u32> {
    let count = (p as u64).pow(h);
    for n in 0..count {
        let mut m = digits(n, p, h as usize);
        m.push(1);
        if is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over Z_{p}")
}

impl Field {
    /// Builds GF(p^h). Without a modulus the default one is selected.
    pub fn new(p: u32, h: u32, modulus: Option<&[u32]>) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrime(p));
        }
        if h == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = (p as u64).checked_pow(h).unwrap_or(u64::MAX);
        if q > MAX_ORDER as u64 {
            return Err(FieldError::TooLarge(q));
        }
        let q = q as u32;
        let modulus = match modulus {
            Some(m) => {
                let m: Vec<u32> = m.iter().map(|&c| c % p).collect();
                if m.len() != h as usize + 1 || m[h as usize] != 1 {
                    return Err(FieldError::DegreeMismatch {
                        expected: h,
                        found: m.len().saturating_sub(1),
                    });
                }
                if !is_irreducible(&m, p) {
                    return Err(FieldError::ReducibleModulus(p));
                }
                m
            }
            None => default_modulus(p, h),
        };
        Ok(Field {
            inner: Arc::new(Tables::build(p, h, q, modulus)),
        })
    }

    /// The prime field Z_p.
    pub fn prime(p: u32) -> Result<Field, FieldError> {
        Field::new(p, 1, None)
    }

    /// GF(q) with the default modulus, for q a prime power.
    pub fn of_order(q: u32) -> Result<Field, FieldError> {
        let (p, h) = prime_power(q).ok_or(FieldError::NonPrime(q))?;
        Field::new(p, h, None)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.inner.p
    }
    #[inline]
    pub fn h(&self) -> u32 {
        self.inner.h
    }
    #[inline]
    pub fn q(&self) -> u32 {
        self.inner.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        Fe(self.inner.add[(a.0 * self.inner.q + b.0) as usize])
    }
    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        Fe(self.inner.neg[a.0 as usize])
    }
    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }
    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        Fe(self.inner.mul[(a.0 * self.inner.q + b.0) as usize])
    }
    pub fn inv(&self, a: Fe) -> Result<Fe, FieldError> {
        if a.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(Fe(self.inner.inv[a.0 as usize]))
        }
    }
    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }
    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a + c·b`, the fused step of every elimination loop.
    #[inline]
    pub fn mul_add(&self, a: Fe, c: Fe, b: Fe) -> Fe {
        self.add(a, self.mul(c, b))
    }

    /// The image of an integer under Z → Z_p ⊆ GF(q).
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.p() as i64) as u32)
    }

    /// `(-1)^k`.
    pub fn sign(&self, k: u64) -> Fe {
        if k.is_multiple_of(2) {
            Fe::ONE
        } else {
            self.neg(Fe::ONE)
        }
    }

    pub fn element(&self, code: u64) -> Result<Fe, FieldError> {
        if code < self.q() as u64 {
            Ok(Fe(code as u32))
        } else {
            Err(FieldError::OutOfRange(code))
        }
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.q()).map(Fe)
    }

    /// Coefficients of the polynomial representative, constant term first.
    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        digits(a.0 as u64, self.p(), self.h() as usize)
    }

    /// Element from its wire form. Coefficients are reduced mod p.
    pub fn from_coeffs(&self, c: &[i64]) -> Result<Fe, FieldError> {
        if c.len() != self.h() as usize {
            return Err(FieldError::BadElement {
                expected: self.h(),
                found: c.len(),
            });
        }
        let p = self.p() as i64;
        let mut code = 0u32;
        for &ci in c.iter().rev() {
            code = code * self.p() + ci.rem_euclid(p) as u32;
        }
        Ok(Fe(code))
    }

    /// Whether `a` lies in the subfield GF(p^k); requires k | h.
    pub fn in_subfield(&self, a: Fe, k: u32) -> bool {
        self.pow(a, (self.p() as u64).pow(k)) == a
    }
}

impl Tables {
    fn build(p: u32, h: u32, q: u32, modulus: Vec<u32>) -> Tables {
        let n = q as usize;
        let hu = h as usize;
        let coeff: Vec<Vec<u32>> = (0..q).map(|c| digits(c as u64, p, hu)).collect();
        let encode = |v: &[u32]| v.iter().rev().fold(0u32, |acc, &c| acc * p + c);

        let mut add = vec![0u32; n * n];
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let s: Vec<u32> = (0..hu).map(|i| (coeff[a][i] + coeff[b][i]) % p).collect();
                add[a * n + b] = encode(&s);
                if b < a {
                    mul[a * n + b] = mul[b * n + a];
                    continue;
                }
                let mut prod = vec![0u32; 2 * hu - 1];
                for i in 0..hu {
                    for j in 0..hu {
                        prod[i + j] = ((prod[i + j] as u64 + coeff[a][i] as u64 * coeff[b][j] as u64)
                            % p as u64) as u32;
                    }
                }
                let mut r = if hu > 1 { poly_rem(&prod, &modulus, p) } else { prod };
                r.resize(hu, 0);
                mul[a * n + b] = encode(&r);
            }
        }
        let mut neg = vec![0u32; n];
        let mut inv = vec![0u32; n];
        for a in 0..n {
            neg[a] = (0..n).find(|&b| add[a * n + b] == 0).unwrap() as u32;
            if a != 0 {
                inv[a] = (1..n).find(|&b| mul[a * n + b] == 1).unwrap() as u32;
            }
        }
        Tables {
            p,
            h,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        }
    }
}

/// Splits `q = p^h`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut h = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        h += 1;
    }
    (rest == 1).then_some((p, h))
}
