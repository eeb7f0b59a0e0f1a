//! Minimal polynomials, Jordan–Chevalley decomposition over perfect fields,
//! and Jordan closures of subalgebras.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{solve_linear, Matrix, Subspace};
use crate::fields::poly::is_separable;
use crate::fields::{Elem, Polynomial};
use crate::groupctx::{GroupContext, GroupKind};
use crate::liealg::LieSubalgebra;

/// Monic minimal polynomial of a square matrix (Krylov on powers).
pub fn minimal_polynomial(x: &Matrix) -> Polynomial {
    let f = x.field();
    let n = x.rows();
    let mut powers: Vec<Vec<Elem>> = vec![Matrix::identity(f, n).flat().to_vec()];
    let mut span = Subspace::span(f, n * n, powers.clone());
    let mut cur = Matrix::identity(f, n);
    loop {
        cur = cur.mul(x);
        let v = cur.flat().to_vec();
        if span.contains(&v) {
            let k = powers.len();
            let cols = Matrix::from_rows(f, powers).unwrap().transpose();
            let (c, _) = solve_linear(&cols, &v).unwrap().expect("power lies in span");
            let mut coeffs: Vec<Elem> = c.iter().map(|a| f.neg(a)).collect();
            coeffs.push(f.one());
            debug_assert_eq!(coeffs.len(), k + 1);
            return Polynomial::new(f.clone(), coeffs);
        }
        span.insert(v.clone());
        powers.push(v);
    }
}

/// Evaluates a polynomial at a square matrix (Horner).
pub fn eval_at_matrix(p: &Polynomial, x: &Matrix) -> Matrix {
    let f = x.field();
    let n = x.rows();
    let mut acc = Matrix::zeros(f, n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&Matrix::identity(f, n).scale(c));
    }
    acc
}

/// Semisimple (diagonalizable over the algebraic closure) iff the minimal
/// polynomial is separable.
pub fn is_semisimple_element(x: &Matrix) -> bool {
    is_separable(&minimal_polynomial(x)).expect("minimal polynomial is non-constant")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanParts {
    pub semisimple: Matrix,
    pub nilpotent: Matrix,
}

/// Jordan–Chevalley decomposition `x = x_s + x_n` over a perfect field,
/// by Newton iteration on the square-free part of the minimal polynomial.
pub fn jordan_decompose(x: &Matrix) -> Result<JordanParts> {
    let f = x.field();
    if !f.is_perfect() {
        return Err(Error::Imperfect(format!("Jordan decomposition over {f} may not exist")));
    }
    let n = x.rows();
    let m = minimal_polynomial(x);
    let r = m.radical()?;
    let dr = r.derivative();
    let mut s = x.clone();
    let bound = m.degree().unwrap() + 1;
    let mut done = false;
    for _ in 0..=bound {
        let v = eval_at_matrix(&r, &s);
        if v.is_zero() {
            done = true;
            break;
        }
        let d = eval_at_matrix(&dr, &s)
            .inverse()
            .map_err(|_| Error::Internal("derivative not invertible in Newton step".into()))?;
        s = s.sub(&v.mul(&d));
    }
    if !done {
        return Err(Error::Internal("Newton iteration did not converge".into()));
    }
    let nil = x.sub(&s);
    let parts = JordanParts { semisimple: s, nilpotent: nil };
    if !parts.semisimple.bracket(&parts.nilpotent).is_zero()
        || !parts.nilpotent.pow(n as u64).is_zero()
        || !is_semisimple_element(&parts.semisimple)
    {
        return Err(Error::Internal("Jordan parts failed verification".into()));
    }
    Ok(parts)
}

/// Jordan parts of an element of `Lie(G)`, in canonical form for `ctx`.
pub fn jordan_parts_in(ctx: &GroupContext, x: &Matrix) -> Result<JordanParts> {
    let p = jordan_decompose(x)?;
    Ok(match ctx.kind() {
        GroupKind::PGL => {
            JordanParts { semisimple: ctx.canonicalize(&p.semisimple), nilpotent: ctx.canonicalize(&p.nilpotent) }
        }
        _ => p,
    })
}

#[derive(Clone, Debug)]
pub struct JordanClosure {
    pub algebra: LieSubalgebra,
    /// Always `"basis-fixpoint"`: the result is the fixpoint of adjoining
    /// Jordan parts of basis elements and sampled elements; minimality is
    /// not claimed.
    pub method: &'static str,
    pub rounds: usize,
    pub samples: usize,
}

/// Fixpoint of bracket closure plus adjoining Jordan parts of every basis
/// element and of `samples` seeded random elements per round.
pub fn jordan_closure(h: &LieSubalgebra, samples: usize, seed: u64) -> Result<JordanClosure> {
    let ctx = h.context();
    if !ctx.field().is_perfect() {
        return Err(Error::Imperfect(format!("Jordan closure over {}", ctx.field())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = h.clone();
    let mut rounds = 0;
    loop {
        rounds += 1;
        let mut gens: Vec<Matrix> = cur.basis();
        let mut probes: Vec<Matrix> = cur.basis();
        probes.extend((0..samples).map(|_| cur.random_element(&mut rng)));
        for x in &probes {
            let p = jordan_parts_in(ctx, x)?;
            if !cur.contains(&p.semisimple) {
                gens.push(p.semisimple);
                gens.push(p.nilpotent);
            }
        }
        let next = LieSubalgebra::bracket_closure(ctx, &gens)?;
        if next.dim() == cur.dim() {
            let mut algebra = LieSubalgebra::bracket_closure(ctx, h.generators())?;
            if algebra.space() != cur.space() {
                algebra = cur;
            }
            return Ok(JordanClosure { algebra, method: "basis-fixpoint", rounds, samples });
        }
        cur = next;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JordanClosedVerdict {
    CertifiedOnBasisAndSamples { samples: usize },
    No { witness: Matrix },
}

impl JordanClosedVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, JordanClosedVerdict::CertifiedOnBasisAndSamples { .. })
    }
}

/// Checks `x_s ∈ h` for every basis element and `trials` seeded samples.
pub fn is_jordan_closed(h: &LieSubalgebra, trials: usize, seed: u64) -> Result<JordanClosedVerdict> {
    let ctx = h.context();
    if !ctx.field().is_perfect() {
        return Err(Error::Imperfect(format!("Jordan closedness over {}", ctx.field())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = h.basis();
    let samples = (0..trials).map(|_| h.random_element(&mut rng));
    for x in basis.into_iter().chain(samples) {
        let p = jordan_parts_in(ctx, &x)?;
        if !h.contains(&p.semisimple) {
            return Ok(JordanClosedVerdict::No { witness: x });
        }
    }
    Ok(JordanClosedVerdict::CertifiedOnBasisAndSamples { samples: trials })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Field;
    use crate::liealg::associative_hull;

    #[test]
    fn semisimple_examples() {
        let q = Field::rationals();
        assert!(is_semisimple_element(&Matrix::from_i64(&q, &[&[1, 0], &[0, 2]])));
        assert!(!is_semisimple_element(&Matrix::unit(&q, 2, 0, 1)));
        let f2t = Field::rational_functions(&Field::prime(2).unwrap(), "t").unwrap();
        // companion matrix of X^2 + t
        let c = Matrix::parse(&f2t, &[&["0", "t"], &["1", "0"]]).unwrap();
        assert_eq!(minimal_polynomial(&c), Polynomial::parse(&f2t, "X^2+t", "X").unwrap());
        assert!(!is_semisimple_element(&c));
        assert!(jordan_decompose(&c).is_err());
    }

    #[test]
    fn decompose_examples() {
        let q = Field::rationals();
        let x = Matrix::from_i64(&q, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 0]]);
        let p = jordan_decompose(&x).unwrap();
        assert_eq!(p.semisimple, Matrix::from_i64(&q, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]));
        assert_eq!(p.nilpotent, Matrix::unit(&q, 3, 0, 1));
        let e = Matrix::unit(&q, 2, 0, 1);
        let p = jordan_decompose(&e).unwrap();
        assert!(p.semisimple.is_zero());
        let d = Matrix::from_i64(&q, &[&[1, 0], &[0, 2]]);
        assert_eq!(jordan_decompose(&d).unwrap().semisimple, d);
    }

    #[test]
    fn parts_are_polynomials_in_x() {
        let f5 = Field::prime(5).unwrap();
        let ctx = GroupContext::gl(3, &f5);
        let x = Matrix::from_i64(&f5, &[&[2, 1, 3], &[0, 2, 1], &[0, 0, 4]]);
        let p = jordan_decompose(&x).unwrap();
        let hull = associative_hull(&ctx, &[x.clone()], true);
        assert!(hull.contains(p.semisimple.flat()));
        assert!(!p.nilpotent.is_zero());
    }

    #[test]
    fn closure_examples() {
        let q = Field::rationals();
        let ctx = GroupContext::gl(3, &q);
        let x = Matrix::from_i64(&q, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 0]]);
        let h = LieSubalgebra::bracket_closure(&ctx, &[x.clone()]).unwrap();
        let hj = jordan_closure(&h, 8, 0).unwrap().algebra;
        assert_eq!(hj.dim(), 2);
        assert!(hj.contains(&Matrix::unit(&q, 3, 0, 1)));
        assert_eq!(jordan_closure(&hj, 8, 1).unwrap().algebra.space(), hj.space());
        match is_jordan_closed(&h, 10, 0).unwrap() {
            JordanClosedVerdict::No { witness } => assert_eq!(witness, x),
            v => panic!("{v:?}"),
        }

        let sl = GroupContext::sl(2, &q);
        let full = LieSubalgebra::full(&sl);
        assert_eq!(jordan_closure(&full, 8, 0).unwrap().algebra.dim(), 3);

        let gl2 = GroupContext::gl(2, &q);
        let b = LieSubalgebra::bracket_closure(
            &gl2,
            &[Matrix::unit(&q, 2, 0, 0), Matrix::unit(&q, 2, 1, 1), Matrix::unit(&q, 2, 0, 1)],
        )
        .unwrap();
        assert!(is_jordan_closed(&b, 200, 3).unwrap().is_certified());
        assert!(is_jordan_closed(&LieSubalgebra::zero(&gl2), 5, 0).unwrap().is_certified());
    }
}
