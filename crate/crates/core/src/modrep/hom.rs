//! Hom spaces between modules and searches for invertible intertwiners.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactla::{lin_comb, Matrix, Subspace};
use crate::fields::roots::{nth_root, roots_in_field};
use crate::fields::{Elem, Field};
use crate::jordan::minimal_polynomial;

const EXHAUSTIVE_GUARD: u128 = 1 << 16;
const RANDOM_TRIALS: usize = 64;

/// Basis of `{φ : φ X_i = Y_i φ for all i}`, with `X_i` of size `n` and
/// `Y_i` of size `m` (so `φ` is `m × n`).
pub fn hom_space(field: &Field, xs: &[Matrix], ys: &[Matrix]) -> Vec<Matrix> {
    assert_eq!(xs.len(), ys.len(), "tuples of different lengths");
    let n = xs.first().map_or(0, Matrix::rows);
    let m = ys.first().map_or(0, Matrix::rows);
    if xs.is_empty() {
        return (0..m)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let mut e = Matrix::zeros(field, m, n);
                e.set(i, j, field.one());
                e
            })
            .collect();
    }
    let unknowns = m * n;
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    for (x, y) in xs.iter().zip(ys) {
        for i in 0..m {
            for j in 0..n {
                // (φX - Yφ)_{ij} = Σ_k φ_ik X_kj - Σ_k Y_ik φ_kj
                let mut row = vec![field.zero(); unknowns];
                for k in 0..n {
                    let c = x.get(k, j);
                    if !field.is_zero(c) {
                        row[i * n + k] = field.add(&row[i * n + k], c);
                    }
                }
                for k in 0..m {
                    let c = y.get(i, k);
                    if !field.is_zero(c) {
                        row[k * n + j] = field.sub(&row[k * n + j], c);
                    }
                }
                if row.iter().any(|c| !field.is_zero(c)) {
                    rows.push(row);
                }
            }
        }
    }
    let ker = if rows.is_empty() {
        crate::exactla::Subspace::full(field, unknowns).basis().to_vec()
    } else {
        Matrix::from_rows(field, rows).unwrap().kernel()
    };
    ker.into_iter().map(|v| Matrix::from_shape(field, m, n, v)).collect()
}

/// Outcome of an isomorphism-witness search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoSearch {
    Found(Matrix),
    /// An intertwiner exists in `GL_n(k)` but none of determinant 1 was found.
    GlOnly(Matrix),
    /// No invertible intertwiner; `exhaustive` tells whether this is a proof.
    NotFound {
        exhaustive: bool,
    },
}

impl IsoSearch {
    pub fn witness(&self) -> Option<&Matrix> {
        match self {
            IsoSearch::Found(g) => Some(g),
            _ => None,
        }
    }
}

fn intertwines(g: &Matrix, xs: &[Matrix], ys: &[Matrix]) -> bool {
    xs.iter().zip(ys).all(|(x, y)| g.mul(x) == y.mul(g))
}

/// Accepts an intertwiner candidate, returning it rescaled to determinant 1
/// when `det_one` is requested and possible.
fn accept(field: &Field, g: &Matrix, det_one: bool) -> Option<Result<Matrix, Matrix>> {
    if !g.is_invertible() {
        return None;
    }
    if !det_one {
        return Some(Ok(g.clone()));
    }
    let n = g.rows();
    let d = g.det();
    let target = field.inv(&d).ok()?;
    match nth_root(field, &target, n as u32) {
        Ok(Some(c)) => Some(Ok(g.scale(&c))),
        _ => Some(Err(g.clone())),
    }
}

/// Searches the Hom space for an invertible `g` with `g X_i g⁻¹ = Y_i`.
/// With `det_one` the witness is required to have determinant 1.
pub fn iso_witness(field: &Field, xs: &[Matrix], ys: &[Matrix], det_one: bool, seed: u64) -> IsoSearch {
    let n = xs.first().map_or(0, Matrix::rows);
    if ys.first().map_or(0, Matrix::rows) != n {
        return IsoSearch::NotFound { exhaustive: true };
    }
    if xs.is_empty() {
        return IsoSearch::Found(Matrix::identity(field, n));
    }
    let basis = hom_space(field, xs, ys);
    if basis.is_empty() {
        return IsoSearch::NotFound { exhaustive: true };
    }
    let vecs: Vec<Vec<Elem>> = basis.iter().map(|b| b.flat().to_vec()).collect();
    let build = |c: &[Elem]| Matrix::from_flat(field, n, &lin_comb(field, n * n, c, &vecs));
    let mut gl_only: Option<Matrix> = None;
    let mut consider = |g: Matrix| -> Option<Matrix> {
        match accept(field, &g, det_one)? {
            Ok(w) => {
                debug_assert!(intertwines(&w, xs, ys));
                Some(w)
            }
            Err(w) => {
                gl_only.get_or_insert(w);
                None
            }
        }
    };
    let d = basis.len();
    let exhaustive = field.order().is_some_and(|q| q.checked_pow(d as u32).is_some_and(|c| c <= EXHAUSTIVE_GUARD));
    if exhaustive {
        let elems = field.elements().unwrap();
        let mut idx = vec![0usize; d];
        loop {
            let c: Vec<Elem> = idx.iter().map(|&i| elems[i].clone()).collect();
            if let Some(w) = consider(build(&c)) {
                return IsoSearch::Found(w);
            }
            let mut k = 0;
            while k < d {
                idx[k] += 1;
                if idx[k] < elems.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == d {
                break;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RANDOM_TRIALS {
            let c: Vec<Elem> = (0..d).map(|_| field.random(&mut rng)).collect();
            if let Some(w) = consider(build(&c)) {
                return IsoSearch::Found(w);
            }
        }
        // small-integer sweep over coordinate vectors with entries in -2..=2
        let digits = [0i64, 1, -1, 2, -2];
        let span = d.min(6);
        let total = digits.len().pow(span as u32);
        for code in 1..total {
            let mut c = vec![field.zero(); d];
            let mut r = code;
            for slot in c.iter_mut().take(span) {
                *slot = field.from_i64(digits[r % digits.len()]);
                r /= digits.len();
            }
            if let Some(w) = consider(build(&c)) {
                return IsoSearch::Found(w);
            }
        }
    }
    match gl_only {
        Some(g) => match det_one_adjust(field, xs, &g, seed) {
            Some(w) => IsoSearch::Found(w),
            None => IsoSearch::GlOnly(g),
        },
        None => IsoSearch::NotFound { exhaustive },
    }
}

/// Projections onto `ker (a − r)^n` along `im (a − r)^n` for rational
/// eigenvalues `r` of random elements `a` of the commutant of `xs`. Each
/// commutes with every `X_i`.
fn invariant_projections(field: &Field, xs: &[Matrix], seed: u64) -> Vec<(usize, Matrix)> {
    let n = xs[0].rows();
    let id = Matrix::identity(field, n);
    let comm: Vec<Vec<Elem>> = hom_space(field, xs, xs).iter().map(|b| b.flat().to_vec()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let mut out: Vec<(usize, Matrix)> = Vec::new();
    for _ in 0..16 {
        let c: Vec<Elem> = (0..comm.len()).map(|_| field.random(&mut rng)).collect();
        let a = Matrix::from_flat(field, n, &lin_comb(field, n * n, &c, &comm));
        for r in roots_in_field(&minimal_polynomial(&a)).0 {
            let b = a.sub(&id.scale(&r)).pow(n as u64);
            let ker = b.kernel();
            let im = Subspace::span(field, n, (0..n).map(|j| b.column(j)));
            let rank = ker.len();
            if rank == 0 || rank == n || out.iter().any(|(k, _)| *k == rank) {
                continue;
            }
            let cols: Vec<Vec<Elem>> = ker.into_iter().chain(im.basis().iter().cloned()).collect();
            let basis = Matrix::from_rows(field, cols).unwrap().transpose();
            let Ok(basis_inv) = basis.inverse() else { continue };
            let keep: Vec<Elem> = (0..n).map(|i| if i < rank { field.one() } else { field.zero() }).collect();
            out.push((rank, basis.mul(&Matrix::diag(field, &keep)).mul(&basis_inv)));
        }
    }
    out
}

/// Turns a GL intertwiner `g0` into one of determinant 1 by multiplying
/// with units `c·P + (I − P)` of the commutant, which scale the
/// determinant by `c^rank P`.
fn det_one_adjust(field: &Field, xs: &[Matrix], g0: &Matrix, seed: u64) -> Option<Matrix> {
    let n = g0.rows();
    let projections = invariant_projections(field, xs, seed);
    // exponents e_i with 1 + Σ e_i·rank_i ≡ 0 (mod n)
    let mut reach: Vec<Option<Vec<u64>>> = vec![None; n];
    reach[0] = Some(vec![0; projections.len()]);
    for (i, (rank, _)) in projections.iter().enumerate() {
        let before = reach.clone();
        for (res, exps) in before.iter().enumerate() {
            let Some(exps) = exps else { continue };
            for e in 1..n as u64 {
                let next = (res + e as usize * rank) % n;
                if reach[next].is_none() {
                    let mut v = exps.clone();
                    v[i] = e;
                    reach[next] = Some(v);
                }
            }
        }
    }
    let exps = reach[n - 1].as_ref()?;
    let d = g0.det();
    let id = Matrix::identity(field, n);
    let mut g = g0.clone();
    for ((_, p), &e) in projections.iter().zip(exps) {
        if e > 0 {
            let c = field.pow(&d, e as u128);
            g = g.mul(&p.scale(&c).add(&id.sub(p)));
        }
    }
    accept(field, &g, true)?.ok()
}

fn shift_candidates(field: &Field, x: &Matrix, y: &Matrix) -> (Vec<Elem>, bool) {
    let n = x.rows();
    let nf = field.from_i64(n as i64);
    if !field.is_zero(&nf) {
        let s = field.div(&field.sub(&x.trace(), &y.trace()), &nf).unwrap();
        return (vec![s], true);
    }
    let id = Matrix::identity(field, n);
    let mx = minimal_polynomial(x);
    if field.order().is_some_and(|q| q <= EXHAUSTIVE_GUARD) {
        let elems = field.elements().unwrap();
        let ok = elems.into_iter().filter(|s| minimal_polynomial(&y.add(&id.scale(s))) == mx).collect();
        return (ok, true);
    }
    let (rx, _) = roots_in_field(&mx);
    let (ry, _) = roots_in_field(&minimal_polynomial(y));
    let mut out = vec![field.zero()];
    for a in &rx {
        for b in &ry {
            out.push(field.sub(a, b));
        }
    }
    out.sort();
    out.dedup();
    out.retain(|s| minimal_polynomial(&y.add(&id.scale(s))) == mx);
    (out, false)
}

/// Witness for conjugacy of tuples in `pgl_n`: `g X_i g⁻¹ = Y_i + s_i I`.
/// Scalar shifts are read off traces when `p ∤ n`, enumerated over finite
/// fields, and taken from eigenvalue differences otherwise.
pub fn pgl_iso_witness(field: &Field, xs: &[Matrix], ys: &[Matrix], seed: u64) -> IsoSearch {
    let mut lists = Vec::new();
    let mut complete = true;
    for (x, y) in xs.iter().zip(ys) {
        let (c, ok) = shift_candidates(field, x, y);
        if c.is_empty() && ok {
            return IsoSearch::NotFound { exhaustive: true };
        }
        complete &= ok;
        lists.push(c);
    }
    let n = xs.first().map_or(0, Matrix::rows);
    let id = Matrix::identity(field, n);
    let mut idx = vec![0usize; lists.len()];
    let mut exhaustive = complete;
    let mut tried = 0usize;
    loop {
        if lists.iter().any(Vec::is_empty) {
            return IsoSearch::NotFound { exhaustive: false };
        }
        let shifted: Vec<Matrix> =
            ys.iter().zip(&idx).zip(&lists).map(|((y, &i), l)| y.add(&id.scale(&l[i]))).collect();
        match iso_witness(field, xs, &shifted, false, seed) {
            IsoSearch::Found(g) => return IsoSearch::Found(g),
            IsoSearch::NotFound { exhaustive: e } => exhaustive &= e,
            IsoSearch::GlOnly(_) => unreachable!("no determinant condition"),
        }
        tried += 1;
        if tried > 4096 {
            return IsoSearch::NotFound { exhaustive: false };
        }
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < lists[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            return IsoSearch::NotFound { exhaustive };
        }
    }
}
