//! Finite fields GF(p^e) of order at most 2^16.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`,
//! which encodes the residue `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` modulo the
//! field's monic irreducible modulus. Multiplication and inversion go through
//! exp/log tables keyed to a fixed primitive element; addition is digit-wise
//! (XOR in characteristic 2).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Raw field element, an integer in `0..q`.
pub type Elem = u16;

/// Shared handle to a field; fields are immutable once built.
pub type FieldRef = Arc<Field>;

const MAX_ORDER: u64 = 1 << 16;
const ADD_TABLE_LIMIT: u32 = 1024;

#[derive(Clone)]
pub struct Field {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: Elem,
    exp: Vec<Elem>,
    log: Vec<u32>,
    add_table: Option<Vec<Elem>>,
    neg: Vec<Elem>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.e)
        }
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
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

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Polynomials over GF(p) as coefficient vectors, lowest degree first.
mod poly {
    fn inv_mod(a: u32, p: u32) -> u32 {
        // p is prime and small; Fermat.
        let mut r = 1u64;
        let mut b = a as u64 % p as u64;
        let mut k = p - 2;
        while k > 0 {
            if k & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            k >>= 1;
        }
        r as u32
    }

    /// Remainder of `a` modulo `m`, padded to `deg m` coefficients.
    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p);
        let mut r = a.to_vec();
        for i in (dm..r.len()).rev() {
            let c = r[i] * lead_inv % p;
            if c != 0 {
                for (j, &mj) in m.iter().enumerate() {
                    let k = i - dm + j;
                    r[k] = (r[k] + p - c * mj % p) % p;
                }
            }
        }
        r.truncate(dm);
        r.resize(dm.max(1), 0);
        r
    }

    pub fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut prod = vec![0u32; a.len() + b.len()];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % p;
            }
        }
        rem(&prod, m, p)
    }

    pub fn is_zero(a: &[u32]) -> bool {
        a.iter().all(|&c| c == 0)
    }
}

impl Field {
    /// Builds GF(p^e). Without an explicit modulus the monic irreducible of
    /// degree `e` whose lower coefficients encode the smallest integer
    /// `c_0 + c_1 p + ...` is used, so the choice is reproducible.
    ///
    /// `modulus` lists coefficients from degree 0 up to the leading 1.
    pub fn new(p: u32, e: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidModulus("extension degree must be positive".into()));
        }
        let q64 = (p as u64).checked_pow(e).filter(|&q| q <= MAX_ORDER);
        let q = match q64 {
            Some(q) => q as u32,
            None => return Err(Error::OrderOverflow { p, e }),
        };
        let modulus = match modulus {
            Some(m) => {
                if m.len() != e as usize + 1 || m[e as usize] != 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected a monic polynomial of degree {e}"
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus(format!("coefficients must lie in 0..{p}")));
                }
                if !Self::is_irreducible(m, p) {
                    return Err(Error::ReducibleModulus(p));
                }
                m.to_vec()
            }
            None => Self::default_modulus(p, e),
        };
        Ok(Self::build(p, e, q, modulus))
    }

    /// GF(p^e) with the default modulus, wrapped for sharing.
    pub fn shared(p: u32, e: u32) -> Result<FieldRef> {
        Ok(Arc::new(Self::new(p, e, None)?))
    }

    /// Field of order `q`, which must be a prime power.
    pub fn of_order(q: u32) -> Result<FieldRef> {
        let (p, e) = split_prime_power(q).ok_or(Error::NotPrime(q))?;
        Self::shared(p, e)
    }

    fn default_modulus(p: u32, e: u32) -> Vec<u32> {
        let count = (p as u64).pow(e);
        for code in 0..count {
            let mut m = digits_of(code, p, e);
            m.push(1);
            if Self::is_irreducible(&m, p) {
                return m;
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// Trial division by every monic polynomial of degree 1..=deg/2.
    fn is_irreducible(m: &[u32], p: u32) -> bool {
        let deg = m.len() - 1;
        if deg <= 1 {
            return true;
        }
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for code in 0..count {
                let mut g = digits_of(code, p, d as u32);
                g.push(1);
                if poly::is_zero(&poly::rem(m, &g, p)) {
                    return false;
                }
            }
        }
        true
    }

    fn build(p: u32, e: u32, q: u32, modulus: Vec<u32>) -> Field {
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let one = digits_of(1, p, e);
        let pow_poly = |base: &[u32], mut k: u64| -> Vec<u32> {
            let mut acc = one.clone();
            let mut b = base.to_vec();
            while k > 0 {
                if k & 1 == 1 {
                    acc = poly::mul_mod(&acc, &b, &modulus, p);
                }
                b = poly::mul_mod(&b, &b, &modulus, p);
                k >>= 1;
            }
            acc
        };
        let mut generator = 1u32;
        if q > 2 {
            generator = (2..q)
                .find(|&g| {
                    let gd = digits_of(g as u64, p, e);
                    factors.iter().all(|&r| pow_poly(&gd, order / r) != one)
                })
                .expect("a primitive element exists");
        }
        let gd = digits_of(generator as u64, p, e);
        let mut exp = vec![0 as Elem; 2 * (q as usize - 1).max(1)];
        let mut log = vec![u32::MAX; q as usize];
        let mut cur = one.clone();
        for i in 0..(q - 1) as usize {
            let v = from_digits(&cur, p) as Elem;
            exp[i] = v;
            log[v as usize] = i as u32;
            cur = poly::mul_mod(&cur, &gd, &modulus, p);
        }
        for i in (q - 1) as usize..exp.len() {
            exp[i] = exp[i - (q - 1) as usize];
        }
        let neg: Vec<Elem> = (0..q)
            .map(|a| {
                let d = digits_of(a as u64, p, e);
                let nd: Vec<u32> = d.iter().map(|&c| (p - c) % p).collect();
                from_digits(&nd, p) as Elem
            })
            .collect();
        let add_table = if p != 2 && e > 1 && q <= ADD_TABLE_LIMIT {
            let mut t = vec![0 as Elem; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = digit_add(a, b, p) as Elem;
                }
            }
            Some(t)
        } else {
            None
        };
        Field { p, e, q, modulus, generator: generator as Elem, exp, log, add_table, neg }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, lowest degree first, ending with the leading 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element the exp/log tables are keyed to.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q as Elem
    }

    /// Element of the prime subfield with integer value `n mod p`.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.p as i64) as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            a ^ b
        } else if self.e == 1 {
            let s = a as u32 + b as u32;
            (if s >= self.p { s - self.p } else { s }) as Elem
        } else if let Some(t) = &self.add_table {
            t[a as usize * self.q as usize + b as usize]
        } else {
            digit_add(a as u32, b as u32, self.p) as Elem
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let l = self.log[a as usize];
        Ok(if l == 0 { 1 } else { self.exp[(self.q - 1 - l) as usize] })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, n: u64) -> Elem {
        if n == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = (self.log[a as usize] as u64 * (n % (self.q as u64 - 1))) % (self.q as u64 - 1);
        self.exp[l as usize]
    }

    /// Discrete logarithm to the base of [`Field::generator`].
    pub fn log(&self, a: Elem) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn exp(&self, i: u64) -> Elem {
        self.exp[(i % (self.q as u64 - 1)) as usize]
    }

    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.p as u64)
    }

    pub fn is_square(&self, a: Elem) -> bool {
        a == 0 || self.p == 2 || self.log[a as usize].is_multiple_of(2)
    }

    /// GF(p^(e·k)) with its default modulus.
    pub fn extension(&self, k: u32) -> Result<Field> {
        Field::new(self.p, self.e * k, None)
    }

    /// Table of a field embedding `self -> ext`, found by locating a root of
    /// this field's modulus inside `ext`.
    pub fn embed_into(&self, ext: &Field) -> Result<Vec<Elem>> {
        if ext.p != self.p || !ext.e.is_multiple_of(self.e) {
            return Err(Error::FieldMismatch);
        }
        let root = ext
            .elements()
            .find(|&b| {
                let mut acc: Elem = 0;
                for &c in self.modulus.iter().rev() {
                    acc = ext.add(ext.mul(acc, b), c as Elem);
                }
                acc == 0
            })
            .ok_or(Error::FieldMismatch)?;
        let mut powers = vec![1 as Elem; self.e as usize];
        for i in 1..self.e as usize {
            powers[i] = ext.mul(powers[i - 1], root);
        }
        Ok(self
            .elements()
            .map(|a| {
                let d = digits_of(a as u64, self.p, self.e);
                d.iter()
                    .zip(&powers)
                    .fold(0, |acc, (&c, &pw)| ext.add(acc, ext.mul(c as Elem, pw)))
            })
            .collect())
    }

    /// Wraps a raw value as a checked element of this field.
    pub fn element(self: &Arc<Self>, value: Elem) -> FieldElement {
        assert!((value as u32) < self.q, "{value} is not an element of {self}");
        FieldElement { field: Arc::clone(self), value }
    }
}

/// Splits `q = p^e`; `None` if `q` is not a prime power.
pub fn split_prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut e = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

fn digits_of(mut v: u64, p: u32, e: u32) -> Vec<u32> {
    (0..e)
        .map(|_| {
            let d = (v % p as u64) as u32;
            v /= p as u64;
            d
        })
        .collect()
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn digit_add(mut a: u32, mut b: u32, p: u32) -> u32 {
    let mut out = 0;
    let mut scale = 1;
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    out
}

/// An element bundled with its field; arithmetic checks that both operands
/// live in the same field.
#[derive(Clone)]
pub struct FieldElement {
    field: FieldRef,
    value: Elem,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.value, self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.same_field(other)
    }
}

impl Eq for FieldElement {}

impl FieldElement {
    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, value: Elem) -> FieldElement {
        FieldElement { field: Arc::clone(&self.field), value }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.div(self.value, other.value)?))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn pow(&self, n: u64) -> Self {
        self.with(self.field.pow(self.value, n))
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("operands from different fields")
            }
        }
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_has_unique_modulus() {
        let f = Field::new(2, 2, None).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.order(), 4);
        let g = f.generator();
        assert_eq!(f.mul(g, f.pow(g, 2)), 1);
    }

    #[test]
    fn default_moduli() {
        assert_eq!(Field::new(2, 3, None).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(Field::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(Field::new(2, 4, None).unwrap().modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(Field::new(3, 2, None).unwrap().order(), 9);
    }

    #[test]
    fn gf8_every_nonzero_element_has_order_dividing_7() {
        let f = Field::new(2, 3, None).unwrap();
        for a in 1..8 {
            assert_eq!(f.pow(a, 7), 1);
        }
        for a in 0..8 {
            assert_eq!(f.add(a, a), 0);
        }
    }

    #[test]
    fn gf9_distributive_exhaustive() {
        let f = Field::new(3, 2, None).unwrap();
        for a in 0..9 {
            for b in 0..9 {
                for c in 0..9 {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::new(2, 17, None).unwrap_err(), Error::OrderOverflow { p: 2, e: 17 });
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert_eq!(Field::new(2, 2, Some(&[1, 0, 1])).unwrap_err(), Error::ReducibleModulus(2));
        assert!(matches!(Field::new(2, 2, Some(&[1, 1])), Err(Error::InvalidModulus(_))));
        // explicit alternative modulus for GF(8)
        let f = Field::new(2, 3, Some(&[1, 0, 1, 1])).unwrap();
        assert_eq!(f.order(), 8);
    }

    #[test]
    fn inverses_and_division() {
        for (p, e) in [(2, 1), (2, 4), (3, 2), (5, 1), (7, 1), (2, 6), (3, 3)] {
            let f = Field::new(p, e, None).unwrap();
            for a in 1..f.order() as Elem {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                assert_eq!(f.div(a, a).unwrap(), 1);
            }
            assert_eq!(f.inv(0), Err(Error::DivisionByZero));
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for (p, e) in [(2, 3), (3, 2), (5, 2), (2, 6)] {
            let f = Field::new(p, e, None).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
                }
            }
        }
    }

    #[test]
    fn exp_log_are_inverse() {
        let f = Field::new(2, 6, None).unwrap();
        for a in 1..64 {
            assert_eq!(f.exp(f.log(a).unwrap() as u64), a);
        }
        for i in 0..63 {
            assert_eq!(f.log(f.exp(i)).unwrap() as u64, i);
        }
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let f = Field::new(2, 2, None).unwrap();
        let ext = f.extension(2).unwrap();
        let map = f.embed_into(&ext).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(map[f.add(a, b) as usize], ext.add(map[a as usize], map[b as usize]));
                assert_eq!(map[f.mul(a, b) as usize], ext.mul(map[a as usize], map[b as usize]));
            }
        }
    }

    #[test]
    fn checked_element_ops() {
        let f4 = Field::shared(2, 2).unwrap();
        let f8 = Field::shared(2, 3).unwrap();
        let a = f4.element(2);
        let b = f4.element(3);
        assert_eq!((&a * &b).value(), f4.mul(2, 3));
        assert_eq!(a.checked_add(&f8.element(1)), Err(Error::FieldMismatch));
        assert_eq!(a.checked_div(&f4.element(0)), Err(Error::DivisionByZero));
        assert!((&a + &a).is_zero());
        assert_eq!((&a - &b).value(), f4.sub(2, 3));
        assert_eq!((-&a).value(), 2);
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(split_prime_power(9), Some((3, 2)));
        assert_eq!(split_prime_power(16), Some((2, 4)));
        assert_eq!(split_prime_power(12), None);
        assert_eq!(split_prime_power(7), Some((7, 1)));
    }
}
