//! Seeded random matrices, subalgebras and tuples for property tests and
//! the CLI.

use rand::Rng;

use crate::error::Result;
use crate::exactla::Matrix;
use crate::fields::{Elem, Field};
use crate::groupctx::{GroupContext, GroupKind};
use crate::jordan::jordan_closure;
use crate::liealg::LieSubalgebra;

/// Each entry nonzero-random with probability `density`.
pub fn random_matrix<R: Rng + ?Sized>(f: &Field, n: usize, density: f64, rng: &mut R) -> Matrix {
    let mut m = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            if rng.gen_bool(density) {
                m.set(i, j, f.random(rng));
            }
        }
    }
    m
}

fn nonzero<R: Rng + ?Sized>(f: &Field, rng: &mut R) -> Elem {
    loop {
        let e = f.random(rng);
        if !f.is_zero(&e) {
            return e;
        }
    }
}

/// `L·U` with unit lower `L` and invertible upper `U`, small entries.
pub fn random_invertible<R: Rng + ?Sized>(f: &Field, n: usize, rng: &mut R) -> Matrix {
    let mut l = Matrix::identity(f, n);
    let mut u = Matrix::zeros(f, n, n);
    for i in 0..n {
        u.set(i, i, nonzero(f, rng));
        for j in 0..n {
            if j < i && rng.gen_bool(0.5) {
                l.set(i, j, f.random(rng));
            }
            if j > i && rng.gen_bool(0.5) {
                u.set(i, j, f.random(rng));
            }
        }
    }
    l.mul(&u)
}

/// Projects an arbitrary matrix into `Lie(G)`.
pub fn into_lie(ctx: &GroupContext, x: &Matrix) -> Matrix {
    let f = ctx.field();
    let n = ctx.n();
    match ctx.kind() {
        GroupKind::GL => x.clone(),
        GroupKind::PGL => ctx.canonicalize(x),
        GroupKind::SL => {
            let tr = x.trace();
            let nf = f.from_i64(n as i64);
            if f.is_zero(&nf) {
                let mut y = x.clone();
                y.set(n - 1, n - 1, f.sub(x.get(n - 1, n - 1), &tr));
                y
            } else {
                x.sub(&ctx.identity().scale(&f.div(&tr, &nf).unwrap()))
            }
        }
    }
}

/// Random element of `Lie(G)` preserving the standard flag with the given
/// block sizes.
fn block_upper<R: Rng + ?Sized>(ctx: &GroupContext, blocks: &[usize], density: f64, rng: &mut R) -> Matrix {
    let f = ctx.field();
    let n = ctx.n();
    let mut block_of = Vec::with_capacity(n);
    for (b, &size) in blocks.iter().enumerate() {
        block_of.extend(std::iter::repeat_n(b, size));
    }
    let mut m = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            if block_of[i] <= block_of[j] && rng.gen_bool(density) {
                m.set(i, j, f.random(rng));
            }
        }
    }
    into_lie(ctx, &m)
}

fn random_blocks<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut blocks = Vec::new();
    let mut left = n;
    while left > 0 {
        let b = rng.gen_range(1..=left);
        blocks.push(b);
        left -= b;
    }
    blocks
}

/// Subalgebra generated by 1–3 random elements of a random standard
/// parabolic, conjugated by a random invertible matrix half of the time.
/// Mixes G-cr and non-G-cr instances.
pub fn random_subalgebra<R: Rng + ?Sized>(ctx: &GroupContext, rng: &mut R) -> LieSubalgebra {
    let f = ctx.field();
    let n = ctx.n();
    let blocks = random_blocks(n, rng);
    let k = rng.gen_range(1..=3);
    let density = [0.3, 0.5, 0.8][rng.gen_range(0..3)];
    let mut gens: Vec<Matrix> = (0..k).map(|_| block_upper(ctx, &blocks, density, rng)).collect();
    if rng.gen_bool(0.5) {
        let g = random_invertible(f, n, rng);
        let gi = g.inverse().unwrap();
        gens = gens.iter().map(|x| ctx.canonicalize(&x.conjugate(&g, &gi))).collect();
    }
    LieSubalgebra::bracket_closure(ctx, &gens).expect("generators lie in Lie(G)")
}

/// `m` strictly upper triangular matrices, conjugated by a random `g`.
pub fn random_nilpotent_tuple<R: Rng + ?Sized>(ctx: &GroupContext, m: usize, rng: &mut R) -> Vec<Matrix> {
    let f = ctx.field();
    let n = ctx.n();
    let g = random_invertible(f, n, rng);
    let gi = g.inverse().unwrap();
    (0..m)
        .map(|_| {
            let mut x = Matrix::zeros(f, n, n);
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(0.6) {
                        x.set(i, j, f.random(rng));
                    }
                }
            }
            x.conjugate(&g, &gi)
        })
        .collect()
}

/// A nonzero semisimple element of `Lie(G)` (diagonalizable over `k`).
pub fn random_semisimple<R: Rng + ?Sized>(ctx: &GroupContext, rng: &mut R) -> Matrix {
    let f = ctx.field();
    let n = ctx.n();
    let g = random_invertible(f, n, rng);
    let gi = g.inverse().unwrap();
    loop {
        let d: Vec<Elem> = (0..n).map(|_| f.random(rng)).collect();
        let x = into_lie(ctx, &Matrix::diag(f, &d));
        if !x.is_zero() {
            return x.conjugate(&g, &gi);
        }
    }
}

/// Jordan closure of a random subalgebra of the upper triangular matrices,
/// conjugated: solvable and Jordan-closed (perfect fields).
pub fn random_jordan_closed_solvable<R: Rng + ?Sized>(ctx: &GroupContext, rng: &mut R) -> Result<LieSubalgebra> {
    let f = ctx.field();
    let n = ctx.n();
    let k = rng.gen_range(1..=3);
    let ones = vec![1; n];
    let gens: Vec<Matrix> = (0..k).map(|_| block_upper(ctx, &ones, 0.5, rng)).collect();
    let h = LieSubalgebra::bracket_closure(ctx, &gens)?;
    let hj = jordan_closure(&h, 8, rng.gen())?.algebra;
    let g = random_invertible(f, n, rng);
    hj.conjugate(&g)
}
