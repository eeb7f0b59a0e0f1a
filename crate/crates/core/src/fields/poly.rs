//! Univariate polynomials over a [`Field`].
//!
//! The free functions operate on coefficient slices (lowest degree first,
//! trimmed) and are what the field implementation itself uses. [`Polynomial`]
//! wraps them with the field attached.

use std::fmt;

use super::{Elem, Field};
use crate::error::{Error, Result};

pub fn trim(f: &Field, mut v: Vec<Elem>) -> Vec<Elem> {
    while v.last().is_some_and(|c| f.is_zero(c)) {
        v.pop();
    }
    v
}

pub fn add(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => f.add(x, y),
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        });
    }
    trim(f, out)
}

pub fn neg(f: &Field, a: &[Elem]) -> Vec<Elem> {
    a.iter().map(|x| f.neg(x)).collect()
}

pub fn sub(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    add(f, a, &neg(f, b))
}

pub fn scale(f: &Field, a: &[Elem], c: &Elem) -> Vec<Elem> {
    if f.is_zero(c) {
        return vec![];
    }
    a.iter().map(|x| f.mul(x, c)).collect()
}

pub fn mul(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, out)
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(f: &Field, a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    if a.len() < b.len() {
        return (vec![], a.to_vec());
    }
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = f.inv(b.last().unwrap()).unwrap();
    let mut q = vec![f.zero(); a.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = f.mul(r.last().unwrap(), &lead_inv);
        for (j, y) in b.iter().enumerate() {
            r[k + j] = f.sub(&r[k + j], &f.mul(&c, y));
        }
        q[k] = c;
        r.pop();
        r = trim(f, r);
    }
    (trim(f, q), r)
}

pub fn rem(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if a.len() < b.len() {
        return a.to_vec();
    }
    divrem(f, a, b).1
}

pub fn div_exact(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let (q, r) = divrem(f, a, b);
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}

pub fn monic(f: &Field, a: &[Elem]) -> Vec<Elem> {
    match a.last() {
        None => vec![],
        Some(l) if f.is_one(l) => a.to_vec(),
        Some(l) => scale(f, a, &f.inv(l).unwrap()),
    }
}

/// Monic gcd; gcd(0, 0) = 0.
pub fn gcd(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub fn ext_gcd(f: &Field, a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>, Vec<Elem>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![f.one()], vec![]);
    let (mut t0, mut t1) = (vec![], vec![f.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &q, &s1));
        let t = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    match r0.last() {
        None => (r0, s0, t0),
        Some(l) => {
            let li = f.inv(l).unwrap();
            (scale(f, &r0, &li), scale(f, &s0, &li), scale(f, &t0, &li))
        }
    }
}

pub fn derivative(f: &Field, a: &[Elem]) -> Vec<Elem> {
    let out = a.iter().enumerate().skip(1).map(|(i, c)| f.mul(&f.from_i64(i as i64), c)).collect();
    trim(f, out)
}

pub fn eval(f: &Field, a: &[Elem], x: &Elem) -> Elem {
    a.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
}

pub fn pow(f: &Field, a: &[Elem], mut e: u64) -> Vec<Elem> {
    let mut base = a.to_vec();
    let mut acc = vec![f.one()];
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(f, &acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(f, &base, &base);
        }
    }
    acc
}

/// Polynomial with coefficients in `field`, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<Elem>,
}

impl Polynomial {
    pub fn new(field: Field, coeffs: Vec<Elem>) -> Self {
        let coeffs = trim(&field, coeffs);
        Polynomial { field, coeffs }
    }

    pub fn zero(field: &Field) -> Self {
        Polynomial { field: field.clone(), coeffs: vec![] }
    }

    pub fn constant(field: &Field, c: Elem) -> Self {
        Polynomial::new(field.clone(), vec![c])
    }

    /// The monomial `X`.
    pub fn x(field: &Field) -> Self {
        Polynomial::new(field.clone(), vec![field.zero(), field.one()])
    }

    pub fn from_i64s(field: &Field, coeffs: &[i64]) -> Self {
        Polynomial::new(field.clone(), coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    /// Parses text in the variable `var`, e.g. `"X^2+t"` with `var = "X"`.
    pub fn parse(field: &Field, text: &str, var: &str) -> Result<Self> {
        super::parse::parse_polynomial(text, field, var)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|l| self.field.is_one(l))
    }

    pub fn monic(&self) -> Self {
        self.wrap(monic(&self.field, &self.coeffs))
    }

    fn wrap(&self, coeffs: Vec<Elem>) -> Self {
        Polynomial { field: self.field.clone(), coeffs }
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.wrap(add(&self.field, &self.coeffs, &other.coeffs))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.wrap(sub(&self.field, &self.coeffs, &other.coeffs))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.wrap(mul(&self.field, &self.coeffs, &other.coeffs))
    }

    pub fn scale(&self, c: &Elem) -> Self {
        self.wrap(scale(&self.field, &self.coeffs, c))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.wrap(pow(&self.field, &self.coeffs, e))
    }

    pub fn divrem(&self, other: &Self) -> Result<(Self, Self)> {
        self.same_field(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = divrem(&self.field, &self.coeffs, &other.coeffs);
        Ok((self.wrap(q), self.wrap(r)))
    }

    pub fn derivative(&self) -> Self {
        self.wrap(derivative(&self.field, &self.coeffs))
    }

    pub fn eval(&self, x: &Elem) -> Elem {
        eval(&self.field, &self.coeffs, x)
    }

    /// Square-free part (product of the distinct irreducible factors).
    /// Over imperfect fields `p`-th roots of coefficients may not exist, in
    /// which case an error is returned.
    pub fn radical(&self) -> Result<Self> {
        let f = &self.field;
        if self.degree().unwrap_or(0) == 0 {
            return Ok(self.wrap(vec![f.one()]));
        }
        let d = self.derivative();
        if d.is_zero() {
            // f = g(X^p); rad f = rad g^(1/p)(X)
            let p = f.characteristic() as usize;
            let mut root = Vec::new();
            for (i, c) in self.coeffs.iter().enumerate() {
                if i % p == 0 {
                    root.push(
                        f.pth_root(c)
                            .map_err(|_| Error::Imperfect(format!("no p-th root of {} in {f}", f.format(c))))?,
                    );
                }
            }
            return self.wrap(trim(f, root)).radical();
        }
        let g = poly_gcd(self, &d)?;
        let part = self.divrem(&g)?.0.monic();
        if g.degree() == Some(0) {
            return Ok(part);
        }
        // rad f = lcm(f / gcd(f, f'), rad gcd(f, f'))
        let rg = g.radical()?;
        let common = poly_gcd(&part, &rg)?;
        Ok(part.mul(&rg).divrem(&common)?.0.monic())
    }

    pub fn format_in(&self, var: &str) -> String {
        super::parse::format_poly(&self.field, &self.coeffs, var)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_in("X"))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Monic gcd of two polynomials, not both zero.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.same_field(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::Invalid("gcd of two zero polynomials".into()));
    }
    Ok(a.wrap(gcd(&a.field, &a.coeffs, &b.coeffs)))
}

/// `true` iff `gcd(f, f') = 1`.
pub fn is_separable(f: &Polynomial) -> Result<bool> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::Invalid("separability of a constant polynomial".into()));
    }
    Ok(poly_gcd(f, &f.derivative())?.degree() == Some(0))
}
