//! Dense exact linear algebra: matrices, echelon forms, kernels, subspaces
//! and flags.
//!
//! Elimination always pivots on the first nonzero entry scanning left to
//! right, so echelon forms are canonical and reproducible.

mod matrix;
mod subspace;

pub use matrix::{solve_linear, Matrix};
pub use subspace::{dot, lin_comb, vec_add, vec_is_zero, vec_scale, vec_sub, Flag, Subspace};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{Elem, Field};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(f: &Field, r: usize, c: usize, rng: &mut ChaCha8Rng) -> Matrix {
        let data = (0..r * c).map(|_| f.random(rng)).collect();
        Matrix::from_shape(f, r, c, data)
    }

    /// Column-oriented elimination that tracks rank only, written
    /// independently of `Matrix::rref`.
    fn oracle_rank(m: &Matrix) -> usize {
        let f = m.field();
        let mut cols: Vec<Vec<Elem>> = (0..m.cols()).map(|j| m.column(j)).collect();
        let mut rank = 0;
        let mut used = vec![false; m.rows()];
        for j in 0..cols.len() {
            let Some(i) = (0..m.rows()).find(|&i| !used[i] && !f.is_zero(&cols[j][i])) else { continue };
            used[i] = true;
            rank += 1;
            let pivot = cols[j].clone();
            for col in cols.iter_mut().skip(j + 1) {
                let c = f.div(&col[i], &pivot[i]).unwrap();
                *col = vec_sub(f, col, &vec_scale(f, &pivot, &c));
            }
        }
        rank
    }

    #[test]
    fn rref_examples() {
        let q = Field::rationals();
        let i3 = Matrix::identity(&q, 3);
        let (r, rank, piv) = i3.rref();
        assert_eq!((r, rank, piv), (i3, 3, vec![0, 1, 2]));
        let f2 = Field::prime(2).unwrap();
        let m = Matrix::from_i64(&f2, &[&[0, 1], &[0, 0]]);
        let (r, rank, _) = m.rref();
        assert_eq!((r, rank), (m, 1));
        let f3 = Field::prime(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let m = random_matrix(&f3, 4, 4, &mut rng);
            assert_eq!(m.rank(), oracle_rank(&m));
        }
    }

    #[test]
    fn solve_examples() {
        let q = Field::rationals();
        let i = Matrix::identity(&q, 3);
        let e1 = vec![q.one(), q.zero(), q.zero()];
        let (x, ker) = solve_linear(&i, &e1).unwrap().unwrap();
        assert_eq!(x, e1);
        assert!(ker.is_empty());
        let z = Matrix::zeros(&q, 2, 3);
        let (x, ker) = solve_linear(&z, &[q.zero(), q.zero()]).unwrap().unwrap();
        assert!(vec_is_zero(&q, &x));
        assert_eq!(ker.len(), 3);
        assert!(solve_linear(&z, &[q.one(), q.zero()]).unwrap().is_none());
        assert!(solve_linear(&z, &[q.one()]).is_err());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let a = random_matrix(&q, 3, 4, &mut rng);
            let x0: Vec<Elem> = (0..4).map(|_| q.random(&mut rng)).collect();
            let b = a.mul_vec(&x0);
            let (x, ker) = solve_linear(&a, &b).unwrap().unwrap();
            assert_eq!(a.mul_vec(&x), b);
            for k in ker {
                assert!(vec_is_zero(&q, &a.mul_vec(&k)));
            }
        }
    }

    #[test]
    fn subspace_examples() {
        let q = Field::rationals();
        let e1 = Subspace::coordinate(&q, 2, &[0]);
        let e2 = Subspace::coordinate(&q, 2, &[1]);
        assert!(e1.intersect(&e2).is_zero());
        assert!(e1.sum(&e2).is_full());

        let f2 = Field::prime(2).unwrap();
        let line = Subspace::coordinate(&f2, 2, &[0]);
        let comps = line.complement_enumerate().unwrap();
        // brute force: lines of GF(2)^2 other than <e1>
        let lines = [vec![Elem::P(0), Elem::P(1)], vec![Elem::P(1), Elem::P(1)]];
        let mut expected: Vec<Subspace> = lines.iter().map(|v| Subspace::span(&f2, 2, [v.clone()])).collect();
        expected.sort_by_key(|s| format!("{s:?}"));
        let mut got = comps.clone();
        got.sort_by_key(|s| format!("{s:?}"));
        assert_eq!(got, expected);
        assert!(Subspace::coordinate(&q, 2, &[0]).complement_enumerate().is_err());
    }

    #[test]
    fn grassmann_identity_gf3() {
        let f3 = Field::prime(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..500 {
            let mk = |rng: &mut ChaCha8Rng| {
                let k = rng.gen_range(0..=4);
                Subspace::span(&f3, 4, (0..k).map(|_| (0..4).map(|_| f3.random(rng)).collect::<Vec<_>>()))
            };
            let (u, w) = (mk(&mut rng), mk(&mut rng));
            let (s, i) = (u.sum(&w), u.intersect(&w));
            assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
            assert!(u.contains_space(&i) && w.contains_space(&i));
        }
    }

    #[test]
    fn flags_reject_non_nested_chains() {
        let q = Field::rationals();
        let a = Subspace::coordinate(&q, 3, &[0]);
        let b = Subspace::coordinate(&q, 3, &[0, 1]);
        assert!(Flag::new(3, vec![a.clone(), b.clone()]).is_ok());
        assert!(Flag::new(3, vec![b.clone(), a.clone()]).is_err());
        let c = Subspace::coordinate(&q, 3, &[1, 2]);
        assert!(Flag::new(3, vec![a, c]).is_err());
        assert!(Flag::new(3, vec![Subspace::full(&q, 3)]).is_err());
    }

    #[test]
    fn inverse_and_det() {
        let q = Field::rationals();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let m = random_matrix(&q, 3, 3, &mut rng);
            let d = m.det();
            match m.inverse() {
                Ok(inv) => {
                    assert!(m.mul(&inv).is_identity());
                    assert!(!q.is_zero(&d));
                }
                Err(_) => assert!(q.is_zero(&d)),
            }
        }
    }

    proptest! {
        #[test]
        fn rref_idempotent_and_row_space_preserving(seed in any::<u64>(), r in 1usize..5, c in 1usize..5) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for f in [Field::rationals(), Field::prime(3).unwrap()] {
                let m = random_matrix(&f, r, c, &mut rng);
                let (e, rank, _) = m.rref();
                prop_assert_eq!(e.rref().0, e.clone());
                let a = Subspace::span(&f, c, m.row_vecs());
                let b = Subspace::span(&f, c, e.row_vecs());
                prop_assert_eq!(a.dim(), rank);
                prop_assert_eq!(a, b);
            }
        }

        #[test]
        fn shuffled_chains_are_rejected(seed in any::<u64>()) {
            let f = Field::prime(2).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = loop {
                let g = random_matrix(&f, 4, 4, &mut rng);
                if g.is_invertible() { break g; }
            };
            let cols: Vec<Vec<Elem>> = (0..4).map(|j| g.column(j)).collect();
            let chain: Vec<Subspace> = (1..4).map(|d| Subspace::span(&f, 4, cols[..d].to_vec())).collect();
            prop_assert!(Flag::new(4, chain.clone()).is_ok());
            let mut shuffled = chain.clone();
            shuffled.swap(0, rng.gen_range(1..3));
            prop_assert!(Flag::new(4, shuffled).is_err());
        }
    }
}
