//! Complete reducibility, irreducibility and indecomposability verdicts,
//! including a case where the answer depends on the ground field.

use liegcr::exactla::Matrix;
use liegcr::fields::Field;
use liegcr::gcr::{is_gcr, is_gind, is_gir, is_toral};
use liegcr::groupctx::GroupContext;
use liegcr::liealg::LieSubalgebra;

fn main() -> liegcr::Result<()> {
    let f2 = Field::prime(2)?;
    let pgl2 = GroupContext::pgl(2, &f2);
    let e = Matrix::unit(&f2, 2, 0, 1);
    let f = Matrix::unit(&f2, 2, 1, 0);
    let h = LieSubalgebra::bracket_closure(&pgl2, &[e.clone(), f])?;
    let m = LieSubalgebra::bracket_closure(&pgl2, &[e])?;
    println!("pgl_2(GF(2)), <e, f>: G-ir = {:?}", is_gir(&h, 0)?.value);
    println!("pgl_2(GF(2)), <e>:    G-cr = {:?}", is_gcr(&m, 0)?.value);

    let k = Field::rational_functions(&f2, "u")?;
    let t = Matrix::parse(&k, &[&["0", "u"], &["1", "0"]])?;
    let over_k = LieSubalgebra::bracket_closure(&GroupContext::gl(2, &k), std::slice::from_ref(&t))?;
    let k2 = Field::extension_str(&k, "w^2+u", "w")?;
    let t2 = t.map(&k2, |a| k2.embed(a.clone()));
    let over_k2 = LieSubalgebra::bracket_closure(&GroupContext::gl(2, &k2), &[t2])?;
    println!("<[[0,u],[1,0]]> over {k}: G-cr = {:?}", is_gcr(&over_k, 0)?.value);
    let v = is_gcr(&over_k2, 0)?;
    println!("same over {k2}: G-cr = {:?} ({})", v.value, v.provenance);
    println!("  G-ind = {:?}", is_gind(&over_k2, 0)?.value);

    let q = Field::rationals();
    let d = Matrix::from_i64(&q, &[&[1, 0], &[0, 3]]);
    let torus = LieSubalgebra::bracket_closure(&GroupContext::gl(2, &q), &[d])?;
    println!("<diag(1,3)> in gl_2(Q): toral = {:?}", is_toral(&torus)?.value);
    Ok(())
}
