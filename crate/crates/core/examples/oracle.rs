//! The brute-force oracles over a small finite field: the definition of
//! G-complete reducibility checked parabolic by parabolic, the building
//! subcomplex, and a fixed simplex when the subcomplex is not Δ-cr.

use liegcr::exactla::Matrix;
use liegcr::fields::Field;
use liegcr::gcr::is_gcr;
use liegcr::groupctx::GroupContext;
use liegcr::liealg::LieSubalgebra;
use liegcr::oracle::{centre_search, def_based_gcr, enumerate_flags, is_delta_cr, subcomplex};

fn main() -> liegcr::Result<()> {
    let f2 = Field::prime(2)?;
    println!("flags of GF(2)^3: {}", enumerate_flags(&f2, 3, None)?.len());
    let ctx = GroupContext::gl(3, &f2);
    let gens = [
        Matrix::from_i64(&f2, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 0]]),
        Matrix::from_i64(&f2, &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 1]]),
    ];
    let h = LieSubalgebra::bracket_closure(&ctx, &gens)?;
    let def = def_based_gcr(&h)?;
    let sigma = subcomplex(&h)?;
    println!("radical route: {:?}", is_gcr(&h, 0)?.value);
    println!("definition: {} ({} parabolics contain h)", def.gcr, def.parabolics_checked);
    println!("building: {} simplices, Δ-cr = {}", sigma.simplices.len(), is_delta_cr(&sigma));
    if let Some(flag) = centre_search(&h, 1000)? {
        println!("simplex fixed by the normalizer: dims {:?}", flag.dims());
    }
    Ok(())
}
