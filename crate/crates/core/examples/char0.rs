//! Characteristic-0 tools: the three equivalent complete-reducibility
//! criteria, the toral/nilpotent splitting of a solvable subalgebra and an
//! explicit semisimplification.

use liegcr::exactla::Matrix;
use liegcr::fields::Field;
use liegcr::gcr::{char0_criterion, char0_explicit_ssimp, solvable_decomposition};
use liegcr::groupctx::GroupContext;
use liegcr::liealg::LieSubalgebra;

fn main() -> liegcr::Result<()> {
    let q = Field::rationals();
    let gl3 = GroupContext::gl(3, &q);
    let d = Matrix::from_i64(&q, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
    let e = Matrix::unit(&q, 3, 0, 1);
    let h = LieSubalgebra::bracket_closure(&gl3, &[d.clone(), e.clone()])?;

    let r = char0_criterion(&h, 0)?;
    println!("adjoint semisimple {}, G-cr {}, radical toral {}", r.adjoint_semisimple, r.gcr, r.radical_toral);

    let split = solvable_decomposition(&h, 0)?;
    println!("h = s ⊕ n with dim s = {}, dim n = {}", split.s.dim(), split.n.dim());

    let x = LieSubalgebra::bracket_closure(&gl3, &[d.add(&e)])?;
    let ex = char0_explicit_ssimp(&x, 0)?;
    println!("explicit semisimplification of <d + e>: dim {} ({})", ex.result.dim(), ex.status);
    Ok(())
}
