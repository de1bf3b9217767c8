//! Finite fields GF(q) for the small orders used by the codes, plus extension
//! fields GF(q^m) in a polynomial basis for Gabidulin evaluation.
//!
//! Elements are indices. A prime field uses residues. An extension of degree m
//! over a base of order b encodes `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` as the
//! index `c_0 + c_1 b + ... + c_{m-1} b^{m-1}`. The defining polynomial is the
//! first monic primitive polynomial in that same index order, so `x` itself
//! generates the multiplicative group.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub type Fe = u32;

/// Orders accepted by [`field`].
pub const SUPPORTED_ORDERS: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

/// Default ceiling on the number of elements of an extension field.
pub const DEFAULT_EXT_LIMIT: u64 = 1 << 24;

const TABLE_LIMIT: u64 = 256;

#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

struct Inner {
    q: u32,
    p: u32,
    e: u32,
    base: Option<FieldSpec>,
    degree: u32,
    modulus: Vec<Fe>,
    base_pows: Vec<u32>,
    tables: Option<Tables>,
}

struct Tables {
    add: Vec<Fe>,
    mul: Vec<Fe>,
    neg: Vec<Fe>,
    inv: Vec<Fe>,
}

/// The base field of order `q`.
pub fn field(q: u32) -> Result<FieldSpec> {
    match q {
        2 | 3 | 5 | 7 => Ok(FieldSpec::prime(q)),
        4 => ext_field(&FieldSpec::prime(2), 2),
        8 => ext_field(&FieldSpec::prime(2), 3),
        9 => ext_field(&FieldSpec::prime(3), 2),
        _ => match prime_power(q) {
            None => Err(Error::Param(format!("field order {q} is not a prime power"))),
            Some(_) => Err(Error::Param(format!(
                "field order {q} is not supported (use one of {SUPPORTED_ORDERS:?})"
            ))),
        },
    }
}

/// GF(q^m) over `base`, limited to [`DEFAULT_EXT_LIMIT`] elements.
pub fn ext_field(base: &FieldSpec, m: u32) -> Result<FieldSpec> {
    ext_field_with_limit(base, m, DEFAULT_EXT_LIMIT)
}

pub fn ext_field_with_limit(base: &FieldSpec, m: u32, limit: u64) -> Result<FieldSpec> {
    if m == 0 {
        return Err(Error::Param("extension degree must be at least 1".into()));
    }
    if m == 1 {
        return Ok(base.clone());
    }
    if base.0.tables.is_none() {
        return Err(Error::Param(format!("cannot extend {base}: base field too large")));
    }
    let b = base.order() as u64;
    let order = b.checked_pow(m).filter(|&o| o <= limit).ok_or_else(|| {
        Error::Resource(format!("GF({b}^{m}) exceeds the extension-field limit of {limit} elements"))
    })?;
    let mut base_pows = Vec::with_capacity(m as usize);
    let mut acc = 1u32;
    for _ in 0..m {
        base_pows.push(acc);
        acc = acc.wrapping_mul(b as u32);
    }
    let factors = prime_factors(order - 1);
    for idx in 0..order {
        let mut modulus = digits(idx as u32, b as u32, m as usize);
        if modulus[0] == 0 {
            continue;
        }
        modulus.push(1);
        let cand = FieldSpec(Arc::new(Inner {
            q: order as u32,
            p: base.characteristic(),
            e: base.prime_degree() * m,
            base: Some(base.clone()),
            degree: m,
            modulus,
            base_pows: base_pows.clone(),
            tables: None,
        }));
        let x = b as Fe;
        if cand.pow(x, order - 1) != 1 {
            continue;
        }
        if factors.iter().any(|&r| cand.pow(x, (order - 1) / r) == 1) {
            continue;
        }
        return Ok(if order <= TABLE_LIMIT { cand.materialize() } else { cand });
    }
    unreachable!("a primitive polynomial of every degree exists")
}

impl FieldSpec {
    fn prime(p: u32) -> FieldSpec {
        let n = p as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..p {
            for b in 0..p {
                add[(a * p + b) as usize] = (a + b) % p;
                mul[(a * p + b) as usize] = (a * b) % p;
            }
        }
        let neg = (0..p).map(|a| (p - a) % p).collect();
        let mut inv = vec![0; n];
        for a in 1..p {
            inv[a as usize] = (1..p).find(|&b| (a * b) % p == 1).unwrap();
        }
        FieldSpec(Arc::new(Inner {
            q: p,
            p,
            e: 1,
            base: None,
            degree: 1,
            modulus: Vec::new(),
            base_pows: vec![1],
            tables: Some(Tables { add, mul, neg, inv }),
        }))
    }

    fn materialize(self) -> FieldSpec {
        let q = self.order();
        let n = q as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..q {
            for b in 0..q {
                add[a as usize * n + b as usize] = self.add(a, b);
                mul[a as usize * n + b as usize] = self.mul(a, b);
            }
        }
        let neg = (0..q).map(|a| self.neg(a)).collect();
        let inv = (0..q).map(|a| if a == 0 { 0 } else { self.pow(a, q as u64 - 2) }).collect();
        let inner = &self.0;
        FieldSpec(Arc::new(Inner {
            q,
            p: inner.p,
            e: inner.e,
            base: inner.base.clone(),
            degree: inner.degree,
            modulus: inner.modulus.clone(),
            base_pows: inner.base_pows.clone(),
            tables: Some(Tables { add, mul, neg, inv }),
        }))
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    /// Degree over the prime subfield.
    pub fn prime_degree(&self) -> u32 {
        self.0.e
    }

    /// Degree over the field this one was built from (1 for prime fields).
    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    pub fn base(&self) -> Option<&FieldSpec> {
        self.0.base.as_ref()
    }

    /// Defining polynomial over the base, lowest coefficient first (empty for prime fields).
    pub fn modulus(&self) -> &[Fe] {
        &self.0.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        0..self.0.q
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        match &self.0.tables {
            Some(t) => t.add[(a * self.0.q + b) as usize],
            None => self.zip_digits(a, b, |base, x, y| base.add(x, y)),
        }
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        match &self.0.tables {
            Some(t) => t.neg[a as usize],
            None => {
                let base = self.0.base.as_ref().unwrap();
                let d: Vec<Fe> = self.to_coords(a).into_iter().map(|x| base.neg(x)).collect();
                self.from_coords(&d)
            }
        }
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        match &self.0.tables {
            Some(t) => t.mul[(a * self.0.q + b) as usize],
            None => self.poly_mul(a, b),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    #[inline]
    pub fn inv(&self, a: Fe) -> Fe {
        assert!(a != 0, "zero has no inverse");
        match &self.0.tables {
            Some(t) => t.inv[a as usize],
            None => self.pow(a, self.0.q as u64 - 2),
        }
    }

    pub fn div(&self, a: Fe, b: Fe) -> Fe {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Coordinates over the base field in the basis `1, x, ..., x^{m-1}`.
    pub fn to_coords(&self, a: Fe) -> Vec<Fe> {
        match &self.0.base {
            None => vec![a],
            Some(b) => digits(a, b.order(), self.0.degree as usize),
        }
    }

    pub fn from_coords(&self, c: &[Fe]) -> Fe {
        debug_assert_eq!(c.len(), self.0.degree as usize);
        c.iter().zip(&self.0.base_pows).map(|(&d, &w)| d * w).sum()
    }

    /// The polynomial basis `1, x, ..., x^{m-1}` as elements.
    pub fn basis(&self) -> Vec<Fe> {
        self.0.base_pows.clone()
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> Fe {
        let q = self.0.q as u64;
        let factors = prime_factors(q - 1);
        (1..self.0.q)
            .find(|&g| factors.iter().all(|&r| self.pow(g, (q - 1) / r) != 1))
            .expect("multiplicative group is cyclic")
    }

    fn zip_digits(&self, a: Fe, b: Fe, op: impl Fn(&FieldSpec, Fe, Fe) -> Fe) -> Fe {
        let base = self.0.base.as_ref().unwrap();
        let bq = base.order();
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for &w in &self.0.base_pows {
            out += op(base, a % bq, b % bq) * w;
            a /= bq;
            b /= bq;
        }
        out
    }

    fn poly_mul(&self, a: Fe, b: Fe) -> Fe {
        let base = self.0.base.as_ref().unwrap();
        let m = self.0.degree as usize;
        let x = self.to_coords(a);
        let y = self.to_coords(b);
        let mut prod = vec![0; 2 * m - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = base.add(prod[i + j], base.mul(xi, yj));
            }
        }
        let modulus = &self.0.modulus;
        for top in (m..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (j, &mj) in modulus[..m].iter().enumerate() {
                let t = base.mul(c, mj);
                prod[top - m + j] = base.sub(prod[top - m + j], t);
            }
            prod[top] = 0;
        }
        self.from_coords(&prod[..m])
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.q == other.0.q
                && self.0.modulus == other.0.modulus
                && self.0.base.as_ref().map(|b| b.order()) == other.0.base.as_ref().map(|b| b.order()))
    }
}

impl Eq for FieldSpec {}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.base {
            None => write!(f, "GF({})", self.0.q),
            Some(b) => write!(f, "GF({}) = GF({})[x]/{:?}", self.0.q, b.order(), self.0.modulus),
        }
    }
}

fn digits(mut a: u32, b: u32, m: usize) -> Vec<Fe> {
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        out.push(a % b);
        a /= b;
    }
    out
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let f = prime_factors(q as u64);
    if f.len() != 1 {
        return None;
    }
    let p = f[0] as u32;
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    Some((p, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axioms_hold_for_every_supported_order() {
        for q in SUPPORTED_ORDERS {
            let f = field(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                    assert_eq!(f.pow(a, q as u64 - 1), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn characteristic_and_degree() {
        let f = field(2).unwrap();
        assert_eq!(f.add(1, 1), 0);
        let f4 = field(4).unwrap();
        assert_eq!((f4.characteristic(), f4.prime_degree()), (2, 2));
        for a in 2..4 {
            assert_eq!(f4.pow(a, 3), 1);
            assert_ne!(f4.mul(a, a), 1);
        }
        let f9 = field(9).unwrap();
        assert_eq!((f9.characteristic(), f9.prime_degree()), (3, 2));
    }

    #[test]
    fn rejects_bad_orders() {
        let err = field(6).unwrap_err().to_string();
        assert!(err.contains("not a prime power"), "{err}");
        assert!(field(16).is_err());
        assert!(field(1).is_err());
    }

    #[test]
    fn x_is_primitive() {
        for q in [4, 8, 9] {
            let f = field(q).unwrap();
            let x = f.base().unwrap().order();
            let mut seen = std::collections::HashSet::new();
            let mut acc = 1;
            for _ in 0..q - 1 {
                seen.insert(acc);
                acc = f.mul(acc, x);
            }
            assert_eq!(seen.len() as u32, q - 1);
        }
    }

    #[test]
    fn gf8_coordinates_round_trip() {
        let f8 = ext_field(&field(2).unwrap(), 3).unwrap();
        assert_eq!(f8.order(), 8);
        assert_eq!(f8.modulus(), &[1, 1, 0, 1]);
        for a in f8.elements() {
            assert_eq!(f8.from_coords(&f8.to_coords(a)), a);
        }
    }

    #[test]
    fn frobenius_is_additive_in_gf9() {
        let f9 = field(9).unwrap();
        for a in f9.elements() {
            for b in f9.elements() {
                let lhs = f9.pow(f9.add(a, b), 3);
                let rhs = f9.add(f9.pow(a, 3), f9.pow(b, 3));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn large_extension_uses_polynomial_arithmetic() {
        let f = ext_field(&field(2).unwrap(), 10).unwrap();
        assert_eq!(f.order(), 1024);
        let g = f.primitive_element();
        assert_eq!(f.pow(g, 1023), 1);
        assert_ne!(f.pow(g, 341), 1);
        for a in [1, 5, 77, 1000] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
            assert_eq!(f.from_coords(&f.to_coords(a)), a);
        }
        let f3 = ext_field(&field(3).unwrap(), 6).unwrap();
        assert_eq!(f3.pow(f3.add(17, 400), 3), f3.add(f3.pow(17, 3), f3.pow(400, 3)));
    }

    #[test]
    fn size_limit_is_enforced() {
        let err = ext_field(&field(2).unwrap(), 25).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }
}
