//! Exact arithmetic for a small field tower.
//!
//! A [`Field`] is a cheap, reference-counted descriptor; [`Elem`] values are
//! plain data in canonical form and are only meaningful together with the
//! field that produced them. All operations are exact.
//!
//! Supported kinds:
//!
//! - the rationals `Q`,
//! - prime fields `GF(p)`,
//! - rational function fields `F(t)` over any supported `F`,
//! - simple extensions `F[w]/(m)` with a certified irreducible monic `m`.
//!
//! Towers are capped at three levels, e.g. `GF(2)(u)[w]/(w^2+u)`.

mod parse;
pub mod poly;
mod rational;
pub mod roots;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::Rng;

pub use self::poly::Polynomial;
pub use self::rational::Rational;
use crate::error::{Error, Result};

/// Canonical field element. Polynomials inside are stored lowest degree
/// first without trailing zeros; fractions have monic coprime denominators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Q(Rational),
    P(u64),
    Frac(Vec<Elem>, Vec<Elem>),
    Res(Vec<Elem>),
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Q(r) => write!(f, "{r}"),
            Elem::P(v) => write!(f, "{v}"),
            Elem::Frac(n, d) => write!(f, "({n:?})/({d:?})"),
            Elem::Res(c) => write!(f, "[{c:?}]"),
        }
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    Prime(u64),
    RationalFunctions { base: Field, var: String },
    Extension { base: Field, modulus: Vec<Elem>, var: String },
}

#[derive(Clone)]
pub struct Field(Arc<FieldKind>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "GF({p})"),
            FieldKind::RationalFunctions { base, var } => write!(f, "{base}({var})"),
            FieldKind::Extension { base, modulus, var } => {
                let m = Polynomial::new(base.clone(), modulus.clone());
                write!(f, "{base}[{var}]/({})", m.format_in(var))
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

const MAX_DEPTH: usize = 3;

impl Field {
    pub fn rationals() -> Field {
        Field(Arc::new(FieldKind::Rationals))
    }

    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::NotPrime(p));
        }
        Ok(Field(Arc::new(FieldKind::Prime(p))))
    }

    pub fn rational_functions(base: &Field, var: &str) -> Result<Field> {
        if base.depth() + 1 > MAX_DEPTH {
            return Err(Error::TowerTooDeep);
        }
        check_var(base, var)?;
        Ok(Field(Arc::new(FieldKind::RationalFunctions { base: base.clone(), var: var.to_string() })))
    }

    /// Simple extension `base[var]/(modulus)`. The modulus is made monic and
    /// must be certified irreducible, otherwise construction fails.
    pub fn extension(base: &Field, modulus: Polynomial, var: &str) -> Result<Field> {
        if base.depth() + 1 > MAX_DEPTH {
            return Err(Error::TowerTooDeep);
        }
        if modulus.field() != base {
            return Err(Error::FieldMismatch);
        }
        check_var(base, var)?;
        let deg = modulus.degree().unwrap_or(0);
        if deg < 2 {
            return Err(Error::Modulus("modulus must have degree at least 2".into()));
        }
        let m = modulus.monic();
        roots::certify_irreducible(&m)?;
        Ok(Field(Arc::new(FieldKind::Extension {
            base: base.clone(),
            modulus: m.coeffs().to_vec(),
            var: var.to_string(),
        })))
    }

    /// Extension with the modulus given as text in `var`, e.g. `"w^2+w+1"`.
    pub fn extension_str(base: &Field, modulus: &str, var: &str) -> Result<Field> {
        let m = parse::parse_polynomial(modulus, base, var)?;
        Field::extension(base, m, var)
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0
    }

    pub fn base(&self) -> Option<&Field> {
        match &*self.0 {
            FieldKind::RationalFunctions { base, .. } | FieldKind::Extension { base, .. } => Some(base),
            _ => None,
        }
    }

    pub fn var(&self) -> Option<&str> {
        match &*self.0 {
            FieldKind::RationalFunctions { var, .. } | FieldKind::Extension { var, .. } => Some(var),
            _ => None,
        }
    }

    pub fn depth(&self) -> usize {
        match self.base() {
            Some(b) => b.depth() + 1,
            None => 1,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            FieldKind::Rationals => 0,
            FieldKind::Prime(p) => *p,
            _ => self.base().unwrap().characteristic(),
        }
    }

    pub fn is_perfect(&self) -> bool {
        match &*self.0 {
            FieldKind::Rationals | FieldKind::Prime(_) => true,
            FieldKind::RationalFunctions { .. } => self.characteristic() == 0,
            FieldKind::Extension { base, .. } => base.is_perfect(),
        }
    }

    pub fn is_finite(&self) -> bool {
        match &*self.0 {
            FieldKind::Prime(_) => true,
            FieldKind::Extension { base, .. } => base.is_finite(),
            _ => false,
        }
    }

    /// Number of elements, for finite fields.
    pub fn order(&self) -> Option<u128> {
        match &*self.0 {
            FieldKind::Prime(p) => Some(*p as u128),
            FieldKind::Extension { base, modulus, .. } => {
                let q = base.order()?;
                q.checked_pow((modulus.len() - 1) as u32)
            }
            _ => None,
        }
    }

    /// Degree over the prime field, for finite fields.
    pub fn prime_degree(&self) -> Option<usize> {
        match &*self.0 {
            FieldKind::Prime(_) => Some(1),
            FieldKind::Extension { base, modulus, .. } => Some(base.prime_degree()? * (modulus.len() - 1)),
            _ => None,
        }
    }

    pub fn is_rationals(&self) -> bool {
        matches!(&*self.0, FieldKind::Rationals)
    }

    pub fn zero(&self) -> Elem {
        match &*self.0 {
            FieldKind::Rationals => Elem::Q(Rational::zero()),
            FieldKind::Prime(_) => Elem::P(0),
            FieldKind::RationalFunctions { base, .. } => Elem::Frac(vec![], vec![base.one()]),
            FieldKind::Extension { .. } => Elem::Res(vec![]),
        }
    }

    pub fn one(&self) -> Elem {
        match &*self.0 {
            FieldKind::Rationals => Elem::Q(Rational::one()),
            FieldKind::Prime(_) => Elem::P(1),
            FieldKind::RationalFunctions { base, .. } => Elem::Frac(vec![base.one()], vec![base.one()]),
            FieldKind::Extension { base, .. } => Elem::Res(vec![base.one()]),
        }
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        match &*self.0 {
            FieldKind::Rationals => Elem::Q(Rational::from_int(n)),
            FieldKind::Prime(p) => Elem::P(n.rem_euclid(*p as i64) as u64),
            _ => self.embed(self.base().unwrap().from_i64(n)),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match &*self.0 {
            FieldKind::Rationals => Elem::Q(Rational::from_bigint(n.clone())),
            FieldKind::Prime(p) => {
                let r = ((n % BigInt::from(*p)) + BigInt::from(*p)) % BigInt::from(*p);
                Elem::P(r.to_u64().unwrap())
            }
            _ => self.embed(self.base().unwrap().from_bigint(n)),
        }
    }

    /// Embeds an element of the immediate base field.
    pub fn embed(&self, b: Elem) -> Elem {
        match &*self.0 {
            FieldKind::RationalFunctions { base, .. } => {
                if base.is_zero(&b) {
                    self.zero()
                } else {
                    Elem::Frac(vec![b], vec![base.one()])
                }
            }
            FieldKind::Extension { base, .. } => {
                if base.is_zero(&b) {
                    Elem::Res(vec![])
                } else {
                    Elem::Res(vec![b])
                }
            }
            _ => b,
        }
    }

    /// Embeds an element of any field lower in this tower.
    pub fn embed_from(&self, from: &Field, e: Elem) -> Result<Elem> {
        if from == self {
            return Ok(e);
        }
        match self.base() {
            Some(b) => Ok(self.embed(b.embed_from(from, e)?)),
            None => Err(Error::FieldMismatch),
        }
    }

    /// The adjoined variable `t` or generator `w`.
    pub fn generator(&self) -> Option<Elem> {
        match &*self.0 {
            FieldKind::RationalFunctions { base, .. } => {
                Some(Elem::Frac(vec![base.zero(), base.one()], vec![base.one()]))
            }
            FieldKind::Extension { base, .. } => Some(Elem::Res(vec![base.zero(), base.one()])),
            _ => None,
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Q(r) => r.is_zero(),
            Elem::P(v) => *v == 0,
            Elem::Frac(n, _) => n.is_empty(),
            Elem::Res(c) => c.is_empty(),
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (FieldKind::Rationals, Elem::Q(x), Elem::Q(y)) => Elem::Q(x.add(y)),
            (FieldKind::Prime(p), Elem::P(x), Elem::P(y)) => Elem::P((x + y) % p),
            (FieldKind::RationalFunctions { base, .. }, Elem::Frac(an, ad), Elem::Frac(bn, bd)) => {
                if an.is_empty() {
                    return b.clone();
                }
                if bn.is_empty() {
                    return a.clone();
                }
                if ad == bd {
                    return self.frac(poly::add(base, an, bn), ad.clone());
                }
                let n = poly::add(base, &poly::mul(base, an, bd), &poly::mul(base, bn, ad));
                self.frac(n, poly::mul(base, ad, bd))
            }
            (FieldKind::Extension { base, .. }, Elem::Res(x), Elem::Res(y)) => Elem::Res(poly::add(base, x, y)),
            _ => panic!("element does not belong to field {self}"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (&*self.0, a) {
            (FieldKind::Rationals, Elem::Q(x)) => Elem::Q(x.neg()),
            (FieldKind::Prime(p), Elem::P(x)) => Elem::P((p - x) % p),
            (FieldKind::RationalFunctions { base, .. }, Elem::Frac(n, d)) => Elem::Frac(poly::neg(base, n), d.clone()),
            (FieldKind::Extension { base, .. }, Elem::Res(x)) => Elem::Res(poly::neg(base, x)),
            _ => panic!("element does not belong to field {self}"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (FieldKind::Rationals, Elem::Q(x), Elem::Q(y)) => Elem::Q(x.sub(y)),
            (FieldKind::Prime(p), Elem::P(x), Elem::P(y)) => Elem::P((x + p - y) % p),
            _ => self.add(a, &self.neg(b)),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (FieldKind::Rationals, Elem::Q(x), Elem::Q(y)) => Elem::Q(x.mul(y)),
            (FieldKind::Prime(p), Elem::P(x), Elem::P(y)) => Elem::P(x * y % p),
            (FieldKind::RationalFunctions { base, .. }, Elem::Frac(an, ad), Elem::Frac(bn, bd)) => {
                if an.is_empty() || bn.is_empty() {
                    return self.zero();
                }
                self.frac(poly::mul(base, an, bn), poly::mul(base, ad, bd))
            }
            (FieldKind::Extension { base, modulus, .. }, Elem::Res(x), Elem::Res(y)) => {
                if x.is_empty() || y.is_empty() {
                    return Elem::Res(vec![]);
                }
                let prod = poly::mul(base, x, y);
                Elem::Res(poly::rem(base, &prod, modulus))
            }
            _ => panic!("element does not belong to field {self}"),
        }
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match (&*self.0, a) {
            (FieldKind::Rationals, Elem::Q(x)) => Elem::Q(x.inv().unwrap()),
            (FieldKind::Prime(p), Elem::P(x)) => Elem::P(pow_mod(*x, p - 2, *p)),
            (FieldKind::RationalFunctions { .. }, Elem::Frac(n, d)) => self.frac(d.clone(), n.clone()),
            (FieldKind::Extension { base, modulus, .. }, Elem::Res(x)) => {
                let (g, s, _) = poly::ext_gcd(base, x, modulus);
                debug_assert!(g.len() == 1);
                Elem::Res(s)
            }
            _ => panic!("element does not belong to field {self}"),
        })
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Elem, mut e: u128) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Canonical fraction `num/den` in a rational function field.
    fn frac(&self, num: Vec<Elem>, den: Vec<Elem>) -> Elem {
        let base = self.base().expect("rational function field");
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return self.zero();
        }
        let g = poly::gcd(base, &num, &den);
        let (mut n, mut d) =
            if g.len() > 1 { (poly::div_exact(base, &num, &g), poly::div_exact(base, &den, &g)) } else { (num, den) };
        let lc = d.last().unwrap().clone();
        if !base.is_one(&lc) {
            let li = base.inv(&lc).unwrap();
            n = poly::scale(base, &n, &li);
            d = poly::scale(base, &d, &li);
        }
        Elem::Frac(n, d)
    }

    /// Builds a rational function from numerator/denominator coefficient lists.
    pub fn fraction(&self, num: Vec<Elem>, den: Vec<Elem>) -> Result<Elem> {
        let base = self.base().ok_or_else(|| Error::Invalid("not a rational function field".into()))?;
        let (num, den) = (poly::trim(base, num), poly::trim(base, den));
        if den.is_empty() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.frac(num, den))
    }

    /// Builds an extension element from a residue polynomial over the base.
    pub fn residue(&self, coeffs: Vec<Elem>) -> Result<Elem> {
        match &*self.0 {
            FieldKind::Extension { base, modulus, .. } => {
                let c = poly::trim(base, coeffs);
                Ok(Elem::Res(poly::rem(base, &c, modulus)))
            }
            _ => Err(Error::Invalid("not an extension field".into())),
        }
    }

    /// All elements of a finite field in a fixed deterministic order.
    pub fn elements(&self) -> Result<Vec<Elem>> {
        let q = self.order().ok_or_else(|| Error::Invalid(format!("{self} is not finite")))?;
        if q > 1 << 20 {
            return Err(Error::SizeGuard(format!("{self} has {q} elements")));
        }
        match &*self.0 {
            FieldKind::Prime(p) => Ok((0..*p).map(Elem::P).collect()),
            FieldKind::Extension { base, modulus, .. } => {
                let be = base.elements()?;
                let deg = modulus.len() - 1;
                let mut out = Vec::with_capacity(q as usize);
                let mut idx = vec![0usize; deg];
                loop {
                    let coeffs: Vec<Elem> = idx.iter().map(|&i| be[i].clone()).collect();
                    out.push(Elem::Res(poly::trim(base, coeffs)));
                    let mut k = 0;
                    loop {
                        if k == deg {
                            return Ok(out);
                        }
                        idx[k] += 1;
                        if idx[k] < be.len() {
                            break;
                        }
                        idx[k] = 0;
                        k += 1;
                    }
                }
            }
            _ => unreachable!(),
        }
    }

    /// Unique `p`-th root in a finite field.
    pub fn pth_root(&self, a: &Elem) -> Result<Elem> {
        let q = self.order().ok_or_else(|| Error::Imperfect(format!("no p-th roots in {self}")))?;
        Ok(self.pow(a, q / self.characteristic() as u128))
    }

    /// Small pseudo-random element, used by seeded sampling.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        match &*self.0 {
            FieldKind::Rationals => {
                let n: i64 = rng.gen_range(-4..=4);
                if rng.gen_bool(0.8) {
                    self.from_i64(n)
                } else {
                    let d: i64 = rng.gen_range(2..=3);
                    Elem::Q(Rational::new(BigInt::from(n), BigInt::from(d)).unwrap())
                }
            }
            FieldKind::Prime(p) => Elem::P(rng.gen_range(0..*p)),
            FieldKind::RationalFunctions { base, .. } => {
                let num: Vec<Elem> = (0..rng.gen_range(1..=3)).map(|_| base.random(rng)).collect();
                let mut den: Vec<Elem> = (0..rng.gen_range(0..=1)).map(|_| base.random(rng)).collect();
                den.push(base.one());
                self.fraction(num, den).unwrap_or_else(|_| self.one())
            }
            FieldKind::Extension { base, modulus, .. } => {
                let c: Vec<Elem> = (0..modulus.len() - 1).map(|_| base.random(rng)).collect();
                Elem::Res(poly::trim(base, c))
            }
        }
    }

    pub fn parse(&self, text: &str) -> Result<Elem> {
        parse::parse_element(text, self)
    }

    pub fn format(&self, a: &Elem) -> String {
        parse::format_element(a, self)
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    pub fn rational_value(&self, a: &Elem) -> Option<Rational> {
        match a {
            Elem::Q(r) => Some(r.clone()),
            _ => None,
        }
    }

    /// Integer lift in `[0, p)` of a prime field element.
    pub fn prime_value(a: &Elem) -> Option<u64> {
        match a {
            Elem::P(v) => Some(*v),
            _ => None,
        }
    }

    pub fn is_integer_valued(&self, a: &Elem) -> bool {
        match a {
            Elem::Q(r) => r.is_integer(),
            _ => true,
        }
    }
}

fn check_var(base: &Field, var: &str) -> Result<()> {
    if var.is_empty() || !var.chars().all(|c| c.is_ascii_alphabetic()) {
        return Err(Error::Invalid(format!("bad variable name {var:?}")));
    }
    let mut f = Some(base);
    while let Some(b) = f {
        if b.var() == Some(var) {
            return Err(Error::Invalid(format!("variable {var} already used in the tower")));
        }
        f = b.base();
    }
    Ok(())
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl Elem {
    pub fn is_canonical_zero(&self) -> bool {
        match self {
            Elem::Q(r) => r.is_zero(),
            Elem::P(v) => *v == 0,
            Elem::Frac(n, _) => n.is_empty(),
            Elem::Res(c) => c.is_empty(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn sample_fields() -> Vec<Field> {
        let q = Field::rationals();
        let f2 = Field::prime(2).unwrap();
        let f3 = Field::prime(3).unwrap();
        let f4 = Field::extension_str(&f2, "w^2+w+1", "w").unwrap();
        let f2t = Field::rational_functions(&f2, "t").unwrap();
        let qt = Field::rational_functions(&q, "t").unwrap();
        let f2u = Field::rational_functions(&f2, "u").unwrap();
        let kp = Field::extension_str(&f2u, "w^2+u", "w").unwrap();
        let q2 = Field::extension_str(&q, "w^2-2", "w").unwrap();
        vec![q, f2, f3, f4, f2t, qt, kp, q2]
    }

    #[test]
    fn field_axioms_on_random_triples() {
        for field in sample_fields() {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..1000 {
                let (a, b, c) = (field.random(&mut rng), field.random(&mut rng), field.random(&mut rng));
                assert_eq!(field.add(&field.add(&a, &b), &c), field.add(&a, &field.add(&b, &c)), "{field}");
                assert_eq!(field.mul(&field.mul(&a, &b), &c), field.mul(&a, &field.mul(&b, &c)), "{field}");
                assert_eq!(
                    field.mul(&a, &field.add(&b, &c)),
                    field.add(&field.mul(&a, &b), &field.mul(&a, &c)),
                    "{field}"
                );
                assert_eq!(field.mul(&a, &b), field.mul(&b, &a));
                assert!(field.is_zero(&field.add(&a, &field.neg(&a))));
                if !field.is_zero(&a) {
                    assert!(field.is_one(&field.mul(&a, &field.inv(&a).unwrap())), "{field}");
                }
            }
        }
    }

    #[test]
    fn parse_format_round_trip() {
        for field in sample_fields() {
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            for _ in 0..1000 {
                let a = field.random(&mut rng);
                let s = field.format(&a);
                assert_eq!(field.parse(&s).unwrap(), a, "{field}: {s}");
            }
        }
    }

    #[test]
    fn descriptor_invariants() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        let q = Field::rationals();
        assert_eq!(q.characteristic(), 0);
        assert!(q.is_perfect());
        let f2 = Field::prime(2).unwrap();
        let f2t = Field::rational_functions(&f2, "t").unwrap();
        assert_eq!(f2t.characteristic(), 2);
        assert!(!f2t.is_perfect());
        let ext = Field::extension_str(&f2t, "w^2+t", "w").unwrap();
        assert!(!ext.is_perfect());
        assert_eq!(ext.depth(), 3);
        assert!(matches!(Field::rational_functions(&ext, "s"), Err(Error::TowerTooDeep)));
        // reducible moduli are rejected
        assert!(Field::extension_str(&f2, "w^2+1", "w").is_err());
        assert!(Field::extension_str(&f2t, "w^2+t^2", "w").is_err());
        assert!(Field::extension_str(&q, "w^2-4", "w").is_err());
        let f4 = Field::extension_str(&f2, "w^2+w+1", "w").unwrap();
        assert_eq!(f4.order(), Some(4));
        assert_eq!(f4.elements().unwrap().len(), 4);
    }

    #[test]
    fn gf4_generator_has_order_three() {
        let f2 = Field::prime(2).unwrap();
        let f4 = Field::extension_str(&f2, "w^2+w+1", "w").unwrap();
        let w = f4.generator().unwrap();
        assert!(!f4.is_one(&w));
        assert!(f4.is_one(&f4.pow(&w, 3)));
        assert_eq!(f4.pth_root(&f4.mul(&w, &w)).unwrap(), w);
    }
}
