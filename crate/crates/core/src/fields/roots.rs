//! Root finding, `n`-th roots and irreducibility certificates.
//!
//! Every search reports whether it is complete. Over `Q` and over function
//! fields with a finite constant field the rational root theorem makes the
//! search exhaustive; elsewhere only candidate roots are tried.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::{poly, Elem, Field, FieldKind, Polynomial, Rational};
use crate::error::{Error, Result};

const ENUM_GUARD: u128 = 1 << 16;

/// All monic polynomials of exact degree `d` over a finite field.
pub fn monic_polys(field: &Field, d: usize) -> Result<Vec<Vec<Elem>>> {
    let q = field.order().ok_or_else(|| Error::Invalid(format!("{field} is not finite")))?;
    let count = q.checked_pow(d as u32).unwrap_or(u128::MAX);
    if count > ENUM_GUARD {
        return Err(Error::SizeGuard(format!("{count} monic polynomials of degree {d} over {field}")));
    }
    let elems = field.elements()?;
    let mut out = Vec::with_capacity(count as usize);
    let mut idx = vec![0usize; d];
    loop {
        let mut c: Vec<Elem> = idx.iter().map(|&i| elems[i].clone()).collect();
        c.push(field.one());
        out.push(c);
        let mut k = 0;
        loop {
            if k == d {
                return Ok(out);
            }
            idx[k] += 1;
            if idx[k] < elems.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Fails with a "cannot certify modulus" error unless `m` is provably
/// irreducible over its coefficient field.
pub fn certify_irreducible(m: &Polynomial) -> Result<()> {
    let field = m.field();
    let d = m.degree().unwrap_or(0);
    if d < 1 {
        return Err(Error::Modulus("constant modulus".into()));
    }
    if field.is_finite() {
        for k in 1..=d / 2 {
            let cands = monic_polys(field, k)
                .map_err(|_| Error::Modulus(format!("cannot certify modulus {m}: search too large")))?;
            for c in cands {
                if poly::rem(field, m.coeffs(), &c).is_empty() {
                    return Err(Error::Modulus(format!("{m} is reducible over {field}")));
                }
            }
        }
        return Ok(());
    }
    if d <= 3 {
        let (roots, complete) = roots_in_field(m);
        if !roots.is_empty() {
            return Err(Error::Modulus(format!("{m} has a root over {field}")));
        }
        if complete {
            return Ok(());
        }
    }
    Err(Error::Modulus(format!("cannot certify modulus {m} over {field}")))
}

/// Distinct roots of `f` in its coefficient field, sorted, together with a
/// flag telling whether the list is provably complete.
pub fn roots_in_field(f: &Polynomial) -> (Vec<Elem>, bool) {
    let field = f.field();
    let mut coeffs = f.coeffs().to_vec();
    let mut roots = Vec::new();
    if coeffs.len() <= 1 {
        return (roots, true);
    }
    if field.is_zero(&coeffs[0]) {
        roots.push(field.zero());
        let k = coeffs.iter().position(|c| !field.is_zero(c)).unwrap();
        coeffs.drain(..k);
    }
    let (mut found, complete) = nonzero_roots(field, &coeffs);
    found.retain(|r| !field.is_zero(r));
    roots.extend(found);
    roots.sort();
    roots.dedup();
    (roots, complete)
}

fn nonzero_roots(field: &Field, c: &[Elem]) -> (Vec<Elem>, bool) {
    let d = c.len() - 1;
    if d == 0 {
        return (vec![], true);
    }
    if d == 1 {
        return (vec![field.neg(&field.div(&c[0], &c[1]).unwrap())], true);
    }
    if field.order().is_some_and(|q| q <= 1 << 20) {
        let elems = field.elements().unwrap();
        return (elems.into_iter().filter(|x| field.is_zero(&poly::eval(field, c, x))).collect(), true);
    }
    if d == 2 && field.characteristic() != 2 {
        // X = (-b ± sqrt(b^2 - 4ac)) / 2a
        let disc = field.sub(&field.mul(&c[1], &c[1]), &field.mul(&field.from_i64(4), &field.mul(&c[0], &c[2])));
        if let Ok(s) = nth_root(field, &disc, 2) {
            let Some(s) = s else { return (vec![], true) };
            let two_a = field.mul(&field.from_i64(2), &c[2]);
            let mb = field.neg(&c[1]);
            let r1 = field.div(&field.add(&mb, &s), &two_a).unwrap();
            let r2 = field.div(&field.sub(&mb, &s), &two_a).unwrap();
            return (vec![r1, r2], true);
        }
    }
    match field.kind() {
        FieldKind::Rationals => {
            if let Some(r) = rational_root_theorem_q(field, c) {
                return (r, true);
            }
        }
        FieldKind::RationalFunctions { base, .. } if base.is_finite() => {
            if let Some(r) = rational_root_theorem_ft(field, base, c) {
                return (r, true);
            }
        }
        _ => {}
    }
    let mut cands = vec![field.one(), field.neg(&field.one())];
    let mut level = Some(field);
    while let Some(f) = level {
        if let Some(g) = f.generator() {
            let g = field.embed_from(f, g).unwrap();
            cands.push(field.neg(&g));
            cands.push(g);
        }
        level = f.base();
    }
    let roots = cands.into_iter().filter(|x| field.is_zero(&poly::eval(field, c, x))).collect();
    (roots, false)
}

fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            out.push(n / i);
        }
        i += 1;
    }
    Some(out)
}

fn rational_root_theorem_q(field: &Field, c: &[Elem]) -> Option<Vec<Elem>> {
    let rats: Vec<Rational> = c.iter().map(|e| field.rational_value(e).unwrap()).collect();
    let l = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(&r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| r.numer() * (&l / r.denom())).collect();
    let ps = small_divisors(&ints[0])?;
    let qs = small_divisors(ints.last().unwrap())?;
    let mut out = Vec::new();
    for p in &ps {
        for q in &qs {
            for s in [1i64, -1] {
                let r = Elem::Q(Rational::new(BigInt::from(*p) * s, BigInt::from(*q)).unwrap());
                if field.is_zero(&poly::eval(field, c, &r)) {
                    out.push(r);
                }
            }
        }
    }
    Some(out)
}

fn monic_divisors(base: &Field, f: &[Elem]) -> Option<Vec<Vec<Elem>>> {
    let mut out = Vec::new();
    for d in 0..f.len() {
        for cand in monic_polys(base, d).ok()? {
            if poly::rem(base, f, &cand).is_empty() {
                out.push(cand);
            }
        }
    }
    Some(out)
}

fn rational_root_theorem_ft(field: &Field, base: &Field, c: &[Elem]) -> Option<Vec<Elem>> {
    let fracs: Vec<(&Vec<Elem>, &Vec<Elem>)> = c
        .iter()
        .map(|e| match e {
            Elem::Frac(n, d) => (n, d),
            _ => unreachable!(),
        })
        .collect();
    let mut l = vec![base.one()];
    for (_, d) in &fracs {
        let g = poly::gcd(base, &l, d);
        l = poly::div_exact(base, &poly::mul(base, &l, d), &g);
    }
    let ints: Vec<Vec<Elem>> = fracs.iter().map(|(n, d)| poly::mul(base, n, &poly::div_exact(base, &l, d))).collect();
    let tops = monic_divisors(base, &ints[0])?;
    let bots = monic_divisors(base, ints.last().unwrap())?;
    let units: Vec<Elem> = base.elements().ok()?.into_iter().filter(|u| !base.is_zero(u)).collect();
    let mut out = Vec::new();
    for a in &tops {
        for b in &bots {
            for u in &units {
                let r = field.fraction(poly::scale(base, a, u), b.clone()).unwrap();
                if field.is_zero(&poly::eval(field, c, &r)) {
                    out.push(r);
                }
            }
        }
    }
    Some(out)
}

/// An `n`-th root of `a` in `field` if one exists. Returns an error when the
/// question cannot be decided for this field.
pub fn nth_root(field: &Field, a: &Elem, n: u32) -> Result<Option<Elem>> {
    if n == 0 {
        return Err(Error::Invalid("zeroth root".into()));
    }
    if n == 1 || field.is_zero(a) {
        return Ok(Some(a.clone()));
    }
    let p = field.characteristic();
    match field.kind() {
        FieldKind::Rationals => Ok(field.rational_value(a).unwrap().nth_root(n).map(Elem::Q)),
        _ if field.is_finite() => {
            if p > 0 && (n as u64).is_multiple_of(p) {
                let r = field.pth_root(a)?;
                return nth_root(field, &r, n / p as u32);
            }
            let elems = field.elements()?;
            Ok(elems.into_iter().find(|x| field.pow(x, n as u128) == *a))
        }
        FieldKind::RationalFunctions { base, .. } => {
            let Elem::Frac(num, den) = a else { unreachable!() };
            let lc = num.last().unwrap().clone();
            let Some(c) = nth_root(base, &lc, n)? else { return Ok(None) };
            let num_monic = poly::monic(base, num);
            let Some(rn) = poly_nth_root(base, &num_monic, n)? else { return Ok(None) };
            let Some(rd) = poly_nth_root(base, den, n)? else { return Ok(None) };
            Ok(Some(field.fraction(poly::scale(base, &rn, &c), rd)?))
        }
        _ => Err(Error::NoCertifiedPath(format!("n-th roots over {field}"))),
    }
}

/// Monic `n`-th root of a monic polynomial, if it exists.
fn poly_nth_root(base: &Field, f: &[Elem], n: u32) -> Result<Option<Vec<Elem>>> {
    if f.is_empty() {
        return Ok(Some(vec![]));
    }
    let deg = f.len() - 1;
    if !deg.is_multiple_of(n as usize) {
        return Ok(None);
    }
    let p = base.characteristic();
    if p > 0 && (n as u64).is_multiple_of(p) {
        let p = p as usize;
        let mut g = Vec::new();
        for (i, c) in f.iter().enumerate() {
            if i % p != 0 {
                if !base.is_zero(c) {
                    return Ok(None);
                }
                continue;
            }
            match nth_root(base, c, p as u32)? {
                Some(r) => g.push(r),
                None => return Ok(None),
            }
        }
        return poly_nth_root(base, &poly::trim(base, g), n / p as u32);
    }
    let m = deg / n as usize;
    let mut g = vec![base.zero(); m + 1];
    g[m] = base.one();
    let n_inv = base.inv(&base.from_i64(n as i64))?;
    for k in 1..=m {
        let partial = poly::pow(base, &poly::trim(base, g.clone()), n as u64);
        let have = partial.get(deg - k).cloned().unwrap_or_else(|| base.zero());
        g[m - k] = base.mul(&base.sub(&f[deg - k], &have), &n_inv);
    }
    let g = poly::trim(base, g);
    Ok((poly::pow(base, &g, n as u64) == f).then_some(g))
}

/// Decides whether `r` is an `n`-th power in its rational function field.
pub fn is_nth_power_ratfunc(field: &Field, r: &Elem, n: u32) -> Result<bool> {
    if !matches!(field.kind(), FieldKind::RationalFunctions { .. }) {
        return Err(Error::Invalid(format!("{field} is not a rational function field")));
    }
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    Ok(nth_root(field, r, n)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2t() -> Field {
        Field::rational_functions(&Field::prime(2).unwrap(), "t").unwrap()
    }

    #[test]
    fn nth_power_examples() {
        let k = f2t();
        assert!(is_nth_power_ratfunc(&k, &k.parse("t^2").unwrap(), 2).unwrap());
        assert!(!is_nth_power_ratfunc(&k, &k.parse("t").unwrap(), 2).unwrap());
        let f5t = Field::rational_functions(&Field::prime(5).unwrap(), "t").unwrap();
        let r = f5t.parse("(t+1)^3/t^3").unwrap();
        assert!(is_nth_power_ratfunc(&f5t, &r, 3).unwrap());
        // independent check: cube of (t+1)/t
        let s = f5t.parse("(t+1)/t").unwrap();
        assert_eq!(f5t.pow(&s, 3), r);
        // cubes in GF(7) are 0, 1, 6
        let f7t = Field::rational_functions(&Field::prime(7).unwrap(), "t").unwrap();
        assert!(!is_nth_power_ratfunc(&f7t, &f7t.parse("2*t^3").unwrap(), 3).unwrap());
        assert!(is_nth_power_ratfunc(&f7t, &f7t.parse("6*t^3").unwrap(), 3).unwrap());
        assert!(is_nth_power_ratfunc(&k, &k.parse("t").unwrap(), 0).is_err());
        let qt = Field::rational_functions(&Field::rationals(), "t").unwrap();
        assert!(is_nth_power_ratfunc(&qt, &qt.parse("4*(t-1)^2/(t+3)^4").unwrap(), 2).unwrap());
        assert!(!is_nth_power_ratfunc(&qt, &qt.parse("2*(t-1)^2").unwrap(), 2).unwrap());
    }

    #[test]
    fn root_search() {
        let q = Field::rationals();
        let f = Polynomial::parse(&q, "6*X^3 - 5*X^2 - 2*X + 1", "X").unwrap();
        let (r, complete) = roots_in_field(&f);
        assert!(complete);
        assert_eq!(r.len(), 3);
        let k = f2t();
        let (r, complete) = roots_in_field(&Polynomial::parse(&k, "X^2+t", "X").unwrap());
        assert!(complete && r.is_empty());
        let (r, complete) = roots_in_field(&Polynomial::parse(&k, "X^2+t^2", "X").unwrap());
        assert!(complete);
        assert_eq!(r, vec![k.parse("t").unwrap()]);
        let (r, _) = roots_in_field(&Polynomial::parse(&k, "X^2+X+t^2+t", "X").unwrap());
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn separability_agrees_with_splitting_oracle() {
        // monic quadratics over GF(2)(t) with coefficients whose numerator and
        // denominator have degree <= 2; squarefreeness is read off from the two
        // roots in k or in the splitting extension k[w]/(f)
        let k = f2t();
        let base = Field::prime(2).unwrap();
        let mut polys: Vec<Vec<Elem>> = vec![vec![]];
        for d in 0..=2 {
            polys.extend(monic_polys(&base, d).unwrap());
        }
        let dens: Vec<Vec<Elem>> = polys.iter().filter(|p| !p.is_empty()).cloned().collect();
        let mut vals = Vec::new();
        for n in &polys {
            for d in &dens {
                vals.push(k.fraction(n.clone(), d.clone()).unwrap());
            }
        }
        vals.sort();
        vals.dedup();
        for b in vals.iter().step_by(3) {
            for c in vals.iter().step_by(5) {
                let f = Polynomial::new(k.clone(), vec![c.clone(), b.clone(), k.one()]);
                let (roots, complete) = roots_in_field(&f);
                assert!(complete);
                let squarefree = match roots.len() {
                    2 => true,
                    1 => {
                        let lin = Polynomial::new(k.clone(), vec![k.neg(&roots[0]), k.one()]);
                        lin.mul(&lin) != f
                    }
                    _ => {
                        let ext = Field::extension(&k, f.clone(), "w").unwrap();
                        let w = ext.generator().unwrap();
                        let lifted: Vec<Elem> = f.coeffs().iter().map(|x| ext.embed(x.clone())).collect();
                        let lin = vec![ext.neg(&w), ext.one()];
                        let (other, r) = poly::divrem(&ext, &lifted, &lin);
                        assert!(r.is_empty() && other.len() == 2);
                        ext.neg(&other[0]) != w
                    }
                };
                assert_eq!(poly::is_separable(&f).unwrap(), squarefree, "{f}");
            }
        }
    }
}
