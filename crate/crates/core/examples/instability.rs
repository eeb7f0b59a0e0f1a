//! Instability of tuples via Engel triangularization, and plongeability of
//! nilpotent elements of pgl_2 over an imperfect field.

use liegcr::exactla::Matrix;
use liegcr::fields::Field;
use liegcr::gcr::{instability_test, is_plongeable_pgl2};
use liegcr::groupctx::GroupContext;
use liegcr::liealg::LieSubalgebra;

fn main() -> liegcr::Result<()> {
    let f4 = Field::extension_str(&Field::prime(2)?, "x^2+x+1", "x")?;
    let sl3 = GroupContext::sl(3, &f4);
    let a = f4.generator().unwrap();
    let tuple = [Matrix::unit(&f4, 3, 0, 2), Matrix::unit(&f4, 3, 0, 1).scale(&a)];
    let r = instability_test(&sl3, &tuple, 0)?;
    println!("(E13, x·E12) in sl_3(GF(4)): unstable = {:?}", r.verdict.value);
    if let Some(l) = r.lambda {
        println!("  destabilizing weights {:?}", l.weights());
    }

    let mixed = [Matrix::unit(&f4, 3, 0, 1), Matrix::diag(&f4, &[f4.one(), a.clone(), f4.add(&f4.one(), &a)])];
    println!("with a semisimple element: unstable = {:?}", instability_test(&sl3, &mixed, 0)?.verdict.value);

    let k = Field::rational_functions(&Field::prime(2)?, "t")?;
    let pgl2 = GroupContext::pgl(2, &k);
    for entry in ["t", "t^2"] {
        let x = Matrix::parse(&k, &[&["0", "1"], &[entry, "0"]])?;
        let h = LieSubalgebra::bracket_closure(&pgl2, &[x])?;
        let v = is_plongeable_pgl2(&h, 0)?;
        println!("[[0,1],[{entry},0]] in pgl_2(GF(2)(t)): plongeable = {:?} ({})", v.value, v.provenance);
    }
    Ok(())
}
