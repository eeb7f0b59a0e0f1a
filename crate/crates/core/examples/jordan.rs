//! Jordan decomposition of single matrices and Jordan closure of a
//! subalgebra.

use liegcr::exactla::Matrix;
use liegcr::fields::Field;
use liegcr::groupctx::GroupContext;
use liegcr::jordan::{is_jordan_closed, jordan_closure, jordan_decompose};
use liegcr::liealg::LieSubalgebra;

fn main() -> liegcr::Result<()> {
    let q = Field::rationals();
    let x = Matrix::from_i64(&q, &[&[2, 1, 0], &[0, 2, 0], &[0, 0, 5]]);
    let p = jordan_decompose(&x)?;
    println!("x_s = {:?}", p.semisimple.to_strings());
    println!("x_n = {:?}", p.nilpotent.to_strings());

    let ctx = GroupContext::gl(3, &q);
    let h = LieSubalgebra::bracket_closure(&ctx, &[x])?;
    println!("<x> Jordan-closed: {}", is_jordan_closed(&h, 8, 0)?.is_certified());
    let hj = jordan_closure(&h, 8, 0)?;
    println!("dim <x> = {}, dim <x>^J = {} after {} rounds", h.dim(), hj.algebra.dim(), hj.rounds);
    Ok(())
}
