//! Jacobson radical of a matrix algebra.
//!
//! Characteristic 0 uses the trace form (Dickson). Over finite fields the
//! radical is cut out by the `p`-power trace functions
//! `g_i(z) = (Tr(ẑ^{p^i}) mod p^{i+1}) / p^i`, `ẑ` an integral lift, applied
//! for `i = 0..⌊log_p N⌋`; extensions of `GF(p)` are first restricted to
//! `GF(p)`. Every result is checked before it is returned.

use crate::error::{Error, Result};
use crate::exactla::{lin_comb, Matrix, Subspace};
use crate::fields::{Elem, Field, FieldKind};
use crate::groupctx::RadicalAlgorithm;

pub fn algorithm_for(field: &Field) -> RadicalAlgorithm {
    if field.characteristic() == 0 {
        RadicalAlgorithm::Dickson
    } else if field.is_finite() {
        RadicalAlgorithm::FiniteField
    } else {
        RadicalAlgorithm::None
    }
}

fn tr_prod(f: &Field, x: &Matrix, y: &Matrix) -> Elem {
    let n = x.rows();
    let mut acc = f.zero();
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (x.get(i, j), y.get(j, i));
            if !f.is_zero(a) && !f.is_zero(b) {
                acc = f.add(&acc, &f.mul(a, b));
            }
        }
    }
    acc
}

fn combos(f: &Field, n: usize, kernel: &[Vec<Elem>], basis: &[Matrix]) -> Vec<Matrix> {
    let vecs: Vec<Vec<Elem>> = basis.iter().map(|b| b.flat().to_vec()).collect();
    kernel.iter().map(|c| Matrix::from_flat(f, n, &lin_comb(f, n * n, c, &vecs))).collect()
}

fn dickson(f: &Field, basis: &[Matrix]) -> Vec<Matrix> {
    let n = basis[0].rows();
    let m = basis.len();
    let mut gram = Matrix::zeros(f, m, m);
    for i in 0..m {
        for j in i..m {
            let t = tr_prod(f, &basis[i], &basis[j]);
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    combos(f, n, &gram.kernel(), basis)
}

fn int_matmul(a: &[u64], b: &[u64], n: usize, modulus: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k] as u128;
            if x == 0 {
                continue;
            }
            for j in 0..n {
                let idx = i * n + j;
                out[idx] = ((out[idx] as u128 + x * b[k * n + j] as u128) % modulus as u128) as u64;
            }
        }
    }
    out
}

/// `g_i(z)` for a matrix over `GF(p)`.
fn trace_function(z: &Matrix, p: u64, i: u32) -> u64 {
    let n = z.rows();
    let modulus = p.pow(i + 1);
    let lift: Vec<u64> = z.flat().iter().map(|e| Field::prime_value(e).unwrap()).collect();
    let mut acc: Vec<u64> = (0..n * n).map(|k| if k % (n + 1) == 0 { 1 } else { 0 }).collect();
    let mut base = lift;
    let mut e = p.pow(i);
    while e > 0 {
        if e & 1 == 1 {
            acc = int_matmul(&acc, &base, n, modulus);
        }
        e >>= 1;
        if e > 0 {
            base = int_matmul(&base, &base, n, modulus);
        }
    }
    let tr = (0..n).fold(0u64, |s, k| (s + acc[k * n + k]) % modulus);
    debug_assert_eq!(tr % p.pow(i), 0, "trace function not divisible");
    (tr / p.pow(i)) % p
}

fn prime_field_radical(f: &Field, basis: &[Matrix]) -> Vec<Matrix> {
    let p = f.characteristic();
    let n = basis[0].rows();
    let mut l = 0u32;
    while (p as u128).pow(l + 1) <= n as u128 {
        l += 1;
    }
    let mut cur: Vec<Matrix> = basis.to_vec();
    for i in 0..=l {
        if cur.is_empty() {
            break;
        }
        let rows: Vec<Vec<Elem>> =
            basis.iter().map(|b| cur.iter().map(|c| Elem::P(trace_function(&c.mul(b), p, i))).collect()).collect();
        let m = Matrix::from_rows(f, rows).unwrap();
        cur = combos(f, n, &m.kernel(), &cur);
    }
    cur
}

/// `GF(p)`-basis of a finite field, starting with `1`.
fn prime_basis(field: &Field) -> Vec<Elem> {
    match field.kind() {
        FieldKind::Prime(_) => vec![field.one()],
        FieldKind::Extension { base, modulus, .. } => {
            let inner = prime_basis(base);
            let w = field.generator().unwrap();
            let mut out = Vec::new();
            let mut pw = field.one();
            for _ in 0..modulus.len() - 1 {
                for b in &inner {
                    out.push(field.mul(&field.embed(b.clone()), &pw));
                }
                pw = field.mul(&pw, &w);
            }
            out
        }
        _ => unreachable!("finite fields only"),
    }
}

/// Coordinates over `GF(p)` in [`prime_basis`] order.
fn prime_coords(field: &Field, e: &Elem) -> Vec<u64> {
    match (field.kind(), e) {
        (FieldKind::Prime(_), Elem::P(v)) => vec![*v],
        (FieldKind::Extension { base, modulus, .. }, Elem::Res(c)) => {
            let mut out = Vec::new();
            for k in 0..modulus.len() - 1 {
                let x = c.get(k).cloned().unwrap_or_else(|| base.zero());
                out.extend(prime_coords(base, &x));
            }
            out
        }
        _ => unreachable!("finite fields only"),
    }
}

fn finite_radical(field: &Field, basis: &[Matrix]) -> Vec<Matrix> {
    if let FieldKind::Prime(_) = field.kind() {
        return prime_field_radical(field, basis);
    }
    let fp = Field::prime(field.characteristic()).unwrap();
    let fb = prime_basis(field);
    let k = fb.len();
    let n = basis[0].rows();
    let restrict = |x: &Matrix| -> Matrix {
        let mut out = Matrix::zeros(&fp, n * k, n * k);
        for i in 0..n {
            for j in 0..n {
                for (c, b) in fb.iter().enumerate() {
                    let col = prime_coords(field, &field.mul(x.get(i, j), b));
                    for (r, v) in col.into_iter().enumerate() {
                        out.set(i * k + r, j * k + c, Elem::P(v));
                    }
                }
            }
        }
        out
    };
    let mut rbasis = Vec::new();
    for a in basis {
        for b in &fb {
            rbasis.push(restrict(&a.scale(b)));
        }
    }
    let jr = prime_field_radical(&fp, &rbasis);
    let back = |y: &Matrix| -> Matrix {
        let mut out = Matrix::zeros(field, n, n);
        for i in 0..n {
            for j in 0..n {
                let mut e = field.zero();
                for (r, b) in fb.iter().enumerate() {
                    let c = Field::prime_value(y.get(i * k + r, j * k)).unwrap();
                    e = field.add(&e, &field.mul(&field.from_i64(c as i64), b));
                }
                out.set(i, j, e);
            }
        }
        out
    };
    let sub = Subspace::span(field, n * n, jr.iter().map(|y| back(y).flat().to_vec()));
    sub.basis().iter().map(|v| Matrix::from_flat(field, n, v)).collect()
}

/// Regular representation of `A / J` given bases of `A ⊇ J`.
fn quotient_regular(field: &Field, a: &[Matrix], j: &Subspace) -> Vec<Matrix> {
    let n = a[0].rows();
    let reduced = Subspace::span(field, n * n, a.iter().map(|x| j.reduce(x.flat())));
    let e: Vec<Matrix> = reduced.basis().iter().map(|v| Matrix::from_flat(field, n, v)).collect();
    let m = e.len();
    e.iter()
        .map(|x| {
            let mut l = Matrix::zeros(field, m, m);
            for (col, y) in e.iter().enumerate() {
                let c = reduced.coords(&j.reduce(x.mul(y).flat())).expect("closed under products");
                for (row, v) in c.into_iter().enumerate() {
                    l.set(row, col, v);
                }
            }
            l
        })
        .collect()
}

fn is_nilpotent_algebra(field: &Field, basis: &[Matrix]) -> bool {
    if basis.is_empty() {
        return true;
    }
    let n = basis[0].rows();
    let mut cur: Vec<Matrix> = basis.to_vec();
    for _ in 0..=n {
        let s =
            Subspace::span(field, n * n, cur.iter().flat_map(|x| basis.iter().map(move |y| x.mul(y).flat().to_vec())));
        if s.is_zero() {
            return true;
        }
        cur = s.basis().iter().map(|v| Matrix::from_flat(field, n, v)).collect();
    }
    false
}

fn raw_radical(field: &Field, basis: &[Matrix]) -> Result<Vec<Matrix>> {
    match algorithm_for(field) {
        RadicalAlgorithm::Dickson => Ok(dickson(field, basis)),
        RadicalAlgorithm::FiniteField => Ok(finite_radical(field, basis)),
        RadicalAlgorithm::None => Err(Error::RadicalUnavailable(format!("radical unavailable over {field}"))),
    }
}

/// Jacobson radical of the algebra with the given basis (which must be
/// closed under multiplication and contain `I`). The result is verified to
/// be a nilpotent two-sided ideal with semisimple quotient.
pub fn jacobson_radical(field: &Field, basis: &[Matrix]) -> Result<Subspace> {
    jacobson_radical_with(field, basis, false)
}

/// As [`jacobson_radical`]; with `corrupt` set the computed radical is
/// deliberately truncated to zero before verification, for mutation tests.
pub fn jacobson_radical_with(field: &Field, basis: &[Matrix], corrupt: bool) -> Result<Subspace> {
    let n = basis.first().map_or(0, Matrix::rows);
    if basis.is_empty() {
        return Ok(Subspace::zero(field, 0));
    }
    let mut j = raw_radical(field, basis)?;
    if corrupt {
        j.clear();
    }
    let jsub = Subspace::span(field, n * n, j.iter().map(|x| x.flat().to_vec()));
    let jb: Vec<Matrix> = jsub.basis().iter().map(|v| Matrix::from_flat(field, n, v)).collect();
    for x in &jb {
        for a in basis {
            if !jsub.contains(x.mul(a).flat()) || !jsub.contains(a.mul(x).flat()) {
                return Err(Error::Internal("radical is not a two-sided ideal".into()));
            }
        }
    }
    if !is_nilpotent_algebra(field, &jb) {
        return Err(Error::Internal("radical is not nilpotent".into()));
    }
    if !jb.is_empty() {
        let quotient = quotient_regular(field, basis, &jsub);
        let again = raw_radical(field, &quotient)?;
        if again.iter().any(|x| !x.is_zero()) {
            return Err(Error::Internal("quotient by the radical is not semisimple".into()));
        }
    } else if corrupt {
        // a zero radical is only consistent if the algebra is semisimple
        let again = raw_radical(field, basis)?;
        if again.iter().any(|x| !x.is_zero()) {
            return Err(Error::Internal("algebra has a nonzero radical that was not reported".into()));
        }
    }
    Ok(jsub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupctx::GroupContext;
    use crate::liealg::associative_hull;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn hull_basis(field: &Field, n: usize, gens: &[Matrix]) -> Vec<Matrix> {
        let ctx = GroupContext::gl(n, field);
        associative_hull(&ctx, gens, true).basis().iter().map(|v| Matrix::from_flat(field, n, v)).collect()
    }

    /// `J = {x ∈ A : x a nilpotent for all a ∈ A}`, by enumeration.
    fn brute_radical(field: &Field, basis: &[Matrix]) -> Subspace {
        let n = basis[0].rows();
        let elems = field.elements().unwrap();
        let m = basis.len();
        let mut all = Vec::new();
        let mut idx = vec![0usize; m];
        loop {
            let c: Vec<Elem> = idx.iter().map(|&i| elems[i].clone()).collect();
            let vecs: Vec<Vec<Elem>> = basis.iter().map(|b| b.flat().to_vec()).collect();
            all.push(Matrix::from_flat(field, n, &lin_comb(field, n * n, &c, &vecs)));
            let mut k = 0;
            loop {
                if k == m {
                    let j = all.iter().filter(|x| all.iter().all(|a| x.mul(a).is_nilpotent()));
                    return Subspace::span(field, n * n, j.map(|x| x.flat().to_vec()));
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

    #[test]
    fn examples() {
        let q = Field::rationals();
        let m2 = hull_basis(&q, 2, &[Matrix::unit(&q, 2, 0, 1), Matrix::unit(&q, 2, 1, 0)]);
        assert_eq!(m2.len(), 4);
        assert!(jacobson_radical(&q, &m2).unwrap().is_zero());

        let f2 = Field::prime(2).unwrap();
        let b = hull_basis(&f2, 2, &[Matrix::unit(&f2, 2, 0, 0), Matrix::unit(&f2, 2, 0, 1)]);
        let j = jacobson_radical(&f2, &b).unwrap();
        assert_eq!(j, Subspace::span(&f2, 4, [Matrix::unit(&f2, 2, 0, 1).flat().to_vec()]));

        let f2u = Field::rational_functions(&f2, "u").unwrap();
        let t = Matrix::parse(&f2u, &[&["0", "u"], &["1", "0"]]).unwrap();
        let hb = hull_basis(&f2u, 2, &[t]);
        assert!(matches!(jacobson_radical(&f2u, &hb), Err(Error::RadicalUnavailable(_))));
    }

    #[test]
    fn agrees_with_brute_force_over_small_fields() {
        let f4 = Field::extension_str(&Field::prime(2).unwrap(), "w^2+w+1", "w").unwrap();
        let cases =
            [(Field::prime(2).unwrap(), 3usize), (Field::prime(3).unwrap(), 2), (Field::prime(2).unwrap(), 2), (f4, 2)];
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for (f, n) in cases {
            for _ in 0..25 {
                let k = rng.gen_range(1..=2);
                let gens: Vec<Matrix> = (0..k)
                    .map(|_| {
                        let mut m = Matrix::zeros(&f, n, n);
                        for i in 0..n {
                            for j in 0..n {
                                if rng.gen_bool(0.4) {
                                    m.set(i, j, f.random(&mut rng));
                                }
                            }
                        }
                        m
                    })
                    .collect();
                let hb = hull_basis(&f, n, &gens);
                if (f.order().unwrap() as f64).powi(hb.len() as i32) > 5000.0 {
                    continue;
                }
                let j = jacobson_radical(&f, &hb).unwrap();
                assert_eq!(j, brute_radical(&f, &hb), "{f} {gens:?}");
            }
        }
    }

    #[test]
    fn dickson_on_triangular_q() {
        let q = Field::rationals();
        let gens = [Matrix::from_i64(&q, &[&[1, 2, 0], &[0, 3, 1], &[0, 0, 1]])];
        let hb = hull_basis(&q, 3, &gens);
        let j = jacobson_radical(&q, &hb).unwrap();
        // minimal polynomial (X-1)^2 (X-3): J spanned by the nilpotent part
        assert_eq!(j.dim(), 1);
    }
}
