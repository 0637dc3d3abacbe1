//! Exact arithmetic in GF(p^e) with log/exp tables.
//!
//! Elements are addressed by their polynomial-basis index: the residue
//! `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` modulo the field modulus is stored as
//! the integer `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`. Index 0 is the additive
//! identity and index 1 the multiplicative one, so for prime fields the index
//! is simply the residue.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the field size. Tables are of size q.
pub const DEFAULT_FIELD_LIMIT: u64 = 1 << 16;

/// Add tables (q*q entries) are kept for fields up to this size.
const ADD_TABLE_LIMIT: u32 = 256;

/// A field element, identified by its canonical index in `0..q`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
#[repr(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shared handle to an immutable field.
pub type Field = Arc<FieldSpec>;

/// How a field is described in artifacts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub e: u32,
    /// Monic modulus, low-degree coefficient first.
    pub modulus: Vec<u32>,
}

/// Binary operations accepted by [`FieldSpec::apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Inv,
    Pow(u64),
}

pub struct FieldSpec {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: Elem,
    /// exp[i] = g^i for i in 0..2(q-1), doubled so log sums need no reduction.
    exp: Vec<u32>,
    /// log[a] for a != 0; log[0] is unused.
    log: Vec<u32>,
    neg: Vec<u32>,
    add_table: Option<Vec<u32>>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

/// Builds GF(p^e) with the canonical modulus and the default size limit.
pub fn field_create(p: u64, e: u32) -> Result<Field> {
    FieldSpec::with_limit(p, e, DEFAULT_FIELD_LIMIT).map(Arc::new)
}

/// Builds the field of order `q`, which must be a prime power.
pub fn field_of_order(q: u64) -> Result<Field> {
    let (p, e) = prime_power(q).ok_or(Error::InvalidParams(format!(
        "{q} is not a prime power"
    )))?;
    field_create(p, e)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^e` with `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

impl FieldSpec {
    pub fn with_limit(p: u64, e: u32, limit: u64) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::DegreeZero);
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= limit && q <= u32::MAX as u64)
            .ok_or(Error::FieldTooLarge { p, e, limit })?;
        let p = p as u32;
        let q = q as u32;
        let modulus = smallest_irreducible(p, e);

        let mut spec = FieldSpec {
            p,
            e,
            q,
            modulus,
            generator: Elem::ONE,
            exp: Vec::new(),
            log: Vec::new(),
            neg: Vec::new(),
            add_table: None,
        };
        spec.neg = (0..q).map(|a| spec.neg_slow(a)).collect();
        spec.build_tables();
        if q <= ADD_TABLE_LIMIT {
            let mut table = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = spec.add_slow(a, b);
                }
            }
            spec.add_table = Some(table);
        }
        Ok(spec)
    }

    fn build_tables(&mut self) {
        let q = self.q;
        let order = q - 1;
        // smallest element (index order) of multiplicative order q - 1
        let g = (1..q)
            .find(|&a| self.mult_order_slow(a) == order)
            .expect("multiplicative group of a finite field is cyclic");
        self.generator = Elem(g);
        let mut exp = Vec::with_capacity(2 * order as usize);
        let mut log = vec![u32::MAX; q as usize];
        let mut x = 1u32;
        for i in 0..order {
            exp.push(x);
            log[x as usize] = i;
            x = self.mul_slow(x, g);
        }
        for i in 0..order as usize {
            exp.push(exp[i]);
        }
        self.exp = exp;
        self.log = log;
    }

    fn mult_order_slow(&self, a: u32) -> u32 {
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul_slow(x, a);
            k += 1;
            if k > self.q {
                return 0;
            }
        }
        k
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        (0..self.e)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    fn from_digits(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return (a + b) % self.p;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.from_digits(&sum)
    }

    fn neg_slow(&self, a: u32) -> u32 {
        let d: Vec<u32> = self
            .digits(a)
            .into_iter()
            .map(|x| (self.p - x) % self.p)
            .collect();
        self.from_digits(&d)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let prod = poly_mul(&self.digits(a), &self.digits(b), self.p);
        let mut rem = poly_rem(&prod, &self.modulus, self.p);
        rem.resize(self.e as usize, 0);
        self.from_digits(&rem)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Monic modulus, low-degree coefficient first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element used for the log/exp tables.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p,
            e: self.e,
            modulus: self.modulus.clone(),
        }
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(Elem)
    }

    /// Nonzero elements in index order.
    pub fn units(&self) -> impl Iterator<Item = Elem> {
        (1..self.q).map(Elem)
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.q
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.add_table {
            Some(t) => Elem(t[(a.0 * self.q + b.0) as usize]),
            None => Elem(self.add_slow(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        Elem(self.exp[(self.log[a.index()] + self.log[b.index()]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let order = self.q - 1;
        Ok(Elem(self.exp[((order - self.log[a.index()]) % order) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, n: u64) -> Elem {
        if n == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let order = (self.q - 1) as u64;
        let l = (self.log[a.index()] as u64 * (n % order)) % order;
        Elem(self.exp[l as usize])
    }

    /// Discrete logarithm to the base [`generator`](Self::generator).
    pub fn log(&self, a: Elem) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[a.index()])
    }

    pub fn exp(&self, i: u64) -> Elem {
        Elem(self.exp[(i % (self.q as u64 - 1)) as usize])
    }

    pub fn apply(&self, op: ArithOp, a: Elem, b: Elem) -> Result<Elem> {
        match op {
            ArithOp::Add => Ok(self.add(a, b)),
            ArithOp::Mul => Ok(self.mul(a, b)),
            ArithOp::Inv => self.inv(a),
            ArithOp::Pow(n) => Ok(self.pow(a, n)),
        }
    }

    /// Absolute Frobenius `a -> a^p`.
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.p as u64)
    }

    /// The involution `a -> a^r` of GF(r^2).
    pub fn conjugate(&self, a: Elem, r: u32) -> Result<Elem> {
        if (r as u64) * (r as u64) != self.q as u64 {
            return Err(Error::NotQuadraticExtension { q: self.q, r });
        }
        Ok(self.pow(a, r as u64))
    }

    /// `r` with `q = r^2`, if the field is a quadratic extension.
    pub fn quadratic_subfield(&self) -> Option<u32> {
        (self.e % 2 == 0).then(|| self.p.pow(self.e / 2))
    }

    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        a.iter()
            .zip(b)
            .fold(Elem::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    // p is small; Fermat
    let mut r = 1u64;
    let mut base = a as u64 % p as u64;
    let mut n = p as u64 - 2;
    while n > 0 {
        if n & 1 == 1 {
            r = r * base % p as u64;
        }
        base = base * base % p as u64;
        n >>= 1;
    }
    r as u32
}

/// Remainder of `a` by `b` over GF(p); `b` must have a nonzero leading coefficient.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = inv_mod_p(b[db], p);
    while r.len() > db {
        let top = *r.last().unwrap();
        if top != 0 {
            let c = top * lead_inv % p;
            let shift = r.len() - 1 - db;
            for (i, &bi) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (c * bi) % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Monic polynomials of the given degree, coefficients low-degree-first,
/// in lexicographic order with the constant term most significant.
fn monic_polys(p: u32, degree: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(degree);
    (0..count).map(move |mut idx| {
        let mut coeffs = vec![0u32; degree as usize + 1];
        for i in (0..degree as usize).rev() {
            coeffs[i] = (idx % p as u64) as u32;
            idx /= p as u64;
        }
        coeffs[degree as usize] = 1;
        coeffs
    })
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = (f.len() - 1) as u32;
    (1..=deg / 2).all(|d| {
        monic_polys(p, d).all(|g| poly_rem(f, &g, p).iter().any(|&c| c != 0))
    })
}

/// Lexicographically smallest monic irreducible of degree `e` with nonzero
/// constant term (coefficients compared low-degree-first).
fn smallest_irreducible(p: u32, e: u32) -> Vec<u32> {
    monic_polys(p, e)
        .find(|f| f[0] != 0 && is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
