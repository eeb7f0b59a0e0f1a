//! Semisimplification of a non-G-cr subalgebra along two different
//! admissible flags, and a conjugacy witness between the results.

use liegcr::exactla::Matrix;
use liegcr::fields::Field;
use liegcr::gcr::{semisimplify, semisimplify_along, ssimp_uniqueness_check};
use liegcr::groupctx::GroupContext;
use liegcr::liealg::LieSubalgebra;
use liegcr::modrep::Module;

fn main() -> liegcr::Result<()> {
    let q = Field::rationals();
    let ctx = GroupContext::gl(3, &q);
    let x = Matrix::from_i64(&q, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 0]]);
    let y = Matrix::from_i64(&q, &[&[0, 0, 1], &[0, 0, 0], &[0, 0, 2]]);
    let h = LieSubalgebra::bracket_closure(&ctx, &[x, y])?;

    let r1 = semisimplify(&h, 0)?;
    println!("dim h = {}, dim of its semisimplification = {}", h.dim(), r1.image.dim());
    println!("cocharacter weights {:?}, flag dims {:?}", r1.lambda.weights(), r1.flag.dims());

    let module = Module::of_subalgebra(&h)?;
    let flag = (1..)
        .map(|seed| module.random_admissible_flag(seed))
        .find(|f| f.as_ref().map_or(true, |f| *f != r1.flag))
        .unwrap()?;
    let r2 = semisimplify_along(&h, &flag, 0)?;
    println!("second admissible flag: dims {:?}", flag.dims());
    match ssimp_uniqueness_check(&h, &r1, &r2, 0)?.witness() {
        Some(g) => println!("conjugating element: {:?}", g.to_strings()),
        None => println!("no witness found"),
    }
    Ok(())
}
