//! Jacobson radical and radical series of a module: the symmetric cube of
//! the natural sl_2-module in characteristic 3.

use liegcr::exactla::Matrix;
use liegcr::fields::Field;
use liegcr::modrep::Module;

fn main() -> liegcr::Result<()> {
    let f3 = Field::prime(3)?;
    let e = Matrix::from_i64(&f3, &[&[0, 1, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
    let f = Matrix::from_i64(&f3, &[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 1, 0]]);
    let h = Matrix::from_i64(&f3, &[&[0, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 0]]);
    let m = Module::new(&f3, 4, vec![e, f, h]);
    let s = m.structure()?;
    println!("hull dimension {}, radical dimension {}", s.hull.dim(), s.radical.dim());
    println!("radical series dims {:?} via {:?}", s.radical_series.dims(), s.algorithm);
    println!("semisimple: {:?}", m.is_semisimple(0).as_bool());
    Ok(())
}
