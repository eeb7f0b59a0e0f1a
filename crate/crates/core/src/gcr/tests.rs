use super::*;
use crate::exactla::{Flag, Subspace};
use crate::fields::Field;
use crate::groupctx::{Cocharacter, GroupContext};
use crate::modrep::IsoSearch;

fn q() -> Field {
    Field::rationals()
}

fn f2() -> Field {
    Field::prime(2).unwrap()
}

fn alg(ctx: &GroupContext, gens: &[Matrix]) -> LieSubalgebra {
    LieSubalgebra::bracket_closure(ctx, gens).unwrap()
}

/// `⟨ē, f̄⟩ ⊂ pgl_2` over GF(2) and its ideal `⟨ē⟩`.
fn pgl2_pair() -> (LieSubalgebra, LieSubalgebra) {
    let ctx = GroupContext::pgl(2, &f2());
    let e = Matrix::unit(&f2(), 2, 0, 1);
    let f = Matrix::unit(&f2(), 2, 1, 0);
    (alg(&ctx, &[e.clone(), f]), alg(&ctx, &[e]))
}

fn diag_plus_nilpotent() -> LieSubalgebra {
    let ctx = GroupContext::gl(3, &q());
    alg(&ctx, &[Matrix::from_i64(&q(), &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 0]])])
}

fn borel_sl2() -> LieSubalgebra {
    let ctx = GroupContext::sl(2, &q());
    alg(&ctx, &[Matrix::from_i64(&q(), &[&[1, 0], &[0, -1]]), Matrix::unit(&q(), 2, 0, 1)])
}

fn sl2_in_gl2(with_scalars: bool) -> LieSubalgebra {
    let ctx = GroupContext::gl(2, &q());
    let mut gens = vec![Matrix::unit(&q(), 2, 0, 1), Matrix::unit(&q(), 2, 1, 0)];
    if with_scalars {
        gens.push(Matrix::identity(&q(), 2));
    }
    alg(&ctx, &gens)
}

fn span_of(ctx: &GroupContext, elems: &[Matrix]) -> Subspace {
    Subspace::span(ctx.field(), ctx.n() * ctx.n(), elems.iter().map(|x| ctx.to_vec(x)))
}

#[test]
fn gcr_examples() {
    let (h, m) = pgl2_pair();
    assert_eq!(h.dim(), 2);
    let v = is_gcr(&h, 0).unwrap();
    assert_eq!(v.value, Truth::True);
    let ir = is_gir(&h, 0).unwrap();
    assert_eq!(ir.value, Truth::True);
    assert_eq!(ir.certificate["absolutely"], true);
    assert_eq!(ir.certificate["hull_dim"], 4);

    let v = is_gcr(&m, 0).unwrap();
    assert_eq!(v.value, Truth::False);
    assert!(!v.certificate["radical"].as_array().unwrap().is_empty());

    let zero = LieSubalgebra::zero(&GroupContext::gl(3, &q()));
    assert_eq!(is_gcr(&zero, 0).unwrap().value, Truth::True);
    assert_eq!(v.to_json()["verdict"], false);
}

#[test]
fn gir_gind_examples() {
    let k = Field::rational_functions(&f2(), "u").unwrap();
    let t = Matrix::parse(&k, &[&["0", "u"], &["1", "0"]]).unwrap();
    let ctx = GroupContext::gl(2, &k);
    let h = alg(&ctx, &[t.clone(), ctx.identity()]);
    assert_eq!(is_gir(&h, 0).unwrap().value, Truth::True);
    assert_eq!(is_gcr(&h, 0).unwrap().value, Truth::True);

    let k2 = Field::extension_str(&k, "w^2+u", "w").unwrap();
    let ctx2 = GroupContext::gl(2, &k2);
    let t2 = t.map(&k2, |e| k2.embed(e.clone()));
    let h2 = alg(&ctx2, &[t2, ctx2.identity()]);
    let ir = is_gir(&h2, 0).unwrap();
    assert_eq!(ir.value, Truth::False);
    assert_eq!(is_gind(&h2, 0).unwrap().value, Truth::True);
    assert_eq!(is_gcr(&h2, 0).unwrap().value, Truth::False);

    let d = alg(&GroupContext::gl(2, &q()), &[Matrix::from_i64(&q(), &[&[1, 0], &[0, 2]])]);
    assert_eq!(is_gir(&d, 0).unwrap().value, Truth::False);
    let ind = is_gind(&d, 0).unwrap();
    assert_eq!(ind.value, Truth::False);
    assert_eq!(ind.certificate["summands"].as_array().unwrap().len(), 2);

    let (h, _) = pgl2_pair();
    assert_eq!(is_gir(&h, 0).unwrap().value, Truth::True);
}

#[test]
fn gir_certificate_replays() {
    let h = diag_plus_nilpotent();
    let v = is_gir(&h, 0).unwrap();
    assert_eq!(v.value, Truth::False);
    let f = q();
    let rows = v.certificate["invariant_subspace"].as_array().unwrap();
    let basis: Vec<Vec<_>> = rows
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|e| f.parse(e.as_str().unwrap()).unwrap()).collect())
        .collect();
    let w = Subspace::span(&f, 3, basis);
    assert!(!w.is_zero() && !w.is_full());
    assert!(h.basis().iter().all(|x| w.is_invariant(x)));
}

#[test]
fn toral_examples() {
    let ctx = GroupContext::gl(3, &q());
    let diag = alg(&ctx, &[Matrix::unit(&q(), 3, 0, 0), Matrix::unit(&q(), 3, 1, 1), Matrix::unit(&q(), 3, 2, 2)]);
    let v = is_toral(&diag).unwrap();
    assert_eq!(v.value, Truth::True);
    assert_eq!(v.provenance, "toral over k̄");
    assert_eq!(is_toral(&alg(&ctx, &[Matrix::unit(&q(), 3, 0, 1)])).unwrap().value, Truth::False);

    let k = Field::rational_functions(&f2(), "t").unwrap();
    let c = Matrix::parse(&k, &[&["0", "t"], &["1", "0"]]).unwrap();
    assert_eq!(is_toral(&alg(&GroupContext::gl(2, &k), &[c])).unwrap().value, Truth::False);
}

#[test]
fn instability_examples() {
    let f = q();
    let ctx = GroupContext::gl(3, &f);
    let tuple = [Matrix::unit(&f, 3, 0, 1), Matrix::unit(&f, 3, 0, 2)];
    let r = instability_test(&ctx, &tuple, 0).unwrap();
    assert_eq!(r.verdict.value, Truth::True);
    let lam = r.lambda.unwrap();
    assert!(tuple.iter().all(|x| lam.limit(&ctx, x).unwrap().is_zero()));
    let w = lam.weights();
    assert!(w[0] > w[1] && w[1] > w[2]);

    let ctx2 = GroupContext::gl(2, &f);
    let r = instability_test(&ctx2, &[Matrix::from_i64(&f, &[&[1, 0], &[0, -1]])], 0).unwrap();
    assert_eq!(r.verdict.value, Truth::False);
    assert!(r.lambda.is_none());

    // E12 and E21 are nilpotent but generate sl_2
    let r = instability_test(&ctx2, &[Matrix::unit(&f, 2, 0, 1), Matrix::unit(&f, 2, 1, 0)], 0).unwrap();
    assert_eq!(r.verdict.value, Truth::False);
}

#[test]
fn plongeable_examples() {
    let k = Field::rational_functions(&f2(), "t").unwrap();
    let ctx = GroupContext::pgl(2, &k);
    let x = Matrix::parse(&k, &[&["0", "1"], &["t", "0"]]).unwrap();
    assert_eq!(is_plongeable_pgl2(&alg(&ctx, &[x.clone()]), 0).unwrap().value, Truth::False);
    let inst = instability_test(&ctx, &[x], 0).unwrap();
    assert_eq!(inst.verdict.value, Truth::False);

    let y = Matrix::parse(&k, &[&["0", "1"], &["t^2", "0"]]).unwrap();
    let v = is_plongeable_pgl2(&alg(&ctx, &[y.clone()]), 0).unwrap();
    assert_eq!(v.value, Truth::True);
    let t = k.parse("t").unwrap();
    let v1 = vec![k.one(), t];
    let image = y.mul_vec(&v1);
    assert!(Subspace::span(&k, 2, [v1.clone()]).contains(&image));
    let line = &v.certificate["eigenline"][0];
    assert_eq!(line, &serde_json::json!(["1", "t"]));
    let inst = instability_test(&ctx, &[y], 0).unwrap();
    assert_eq!(inst.verdict.value, Truth::True);

    let ctx2 = GroupContext::pgl(2, &f2());
    let e = Matrix::unit(&f2(), 2, 0, 1);
    assert_eq!(is_plongeable_pgl2(&alg(&ctx2, &[e]), 0).unwrap().value, Truth::True);
    // not nilpotent
    assert!(is_plongeable_pgl2(&alg(&ctx2, &[Matrix::unit(&f2(), 2, 0, 0)]), 0).is_err());
    assert!(matches!(
        is_plongeable_pgl2(&alg(&GroupContext::gl(2, &f2()), &[Matrix::unit(&f2(), 2, 0, 1)]), 0),
        Err(Error::Capability(_))
    ));
}

#[test]
fn semisimplify_examples() {
    let h = diag_plus_nilpotent();
    let ctx = h.context().clone();
    let r = semisimplify(&h, 0).unwrap();
    assert_eq!(r.image.space(), &span_of(&ctx, &[Matrix::from_i64(&q(), &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]])]));
    assert_eq!(r.certificate.value, Truth::True);
    assert!(r.image.basis().iter().all(|x| r.lambda.limit(&ctx, x).as_ref() == Some(x)));

    let b = borel_sl2();
    let r = semisimplify(&b, 0).unwrap();
    assert_eq!(r.image.space(), &span_of(b.context(), &[Matrix::from_i64(&q(), &[&[1, 0], &[0, -1]])]));
    assert_eq!(r.lambda.weights().iter().sum::<i64>(), 0);

    let (hbar, _) = pgl2_pair();
    let r = semisimplify(&hbar, 0).unwrap();
    assert!(r.lambda.is_central());
    assert_eq!(r.image.space(), hbar.space());
}

#[test]
fn semisimplification_is_unique_up_to_conjugacy() {
    let h = diag_plus_nilpotent();
    let ctx = h.context().clone();
    let f = q();
    let r1 = semisimplify(&h, 0).unwrap();
    let same = ssimp_uniqueness_check(&h, &r1, &r1, 0).unwrap();
    assert!(same.witness().is_some());
    // a different admissible flag: <e3> ⊂ <e1, e3>
    let flag = Flag::new(3, vec![Subspace::coordinate(&f, 3, &[2]), Subspace::coordinate(&f, 3, &[0, 2])]).unwrap();
    let r2 = semisimplify_along(&h, &flag, 0).unwrap();
    let w = ssimp_uniqueness_check(&h, &r1, &r2, 0).unwrap();
    let g = w.witness().unwrap();
    let gi = g.inverse().unwrap();
    assert!(r1.tuple_image.iter().zip(&r2.tuple_image).all(|(x, y)| g.mul(x).mul(&gi) == *y));
    // a flag that does not yield a semisimplification
    let bad = Flag::new(3, vec![Subspace::coordinate(&f, 3, &[0, 1])]).unwrap();
    assert!(semisimplify_along(&h, &bad, 0).is_err());
    let _ = ctx;
}

#[test]
fn ideals_examples() {
    let h = sl2_in_gl2(true);
    let rep = ideals_gcr(&h, 0).unwrap();
    assert!(rep.holds);
    let sl2 = sl2_in_gl2(false);
    assert!(rep.entries.iter().any(|e| e.ideal.space() == sl2.space() && e.gcr == Truth::True));

    let b = borel_sl2();
    let rep = ideals_gcr(&b, 0).unwrap();
    assert!(rep.holds);
    assert_eq!(rep.h_gcr, Truth::False);
    let e12 = span_of(b.context(), &[Matrix::unit(&q(), 2, 0, 1)]);
    let entry = rep.entries.iter().find(|e| e.ideal.space() == &e12).unwrap();
    assert!(entry.image.is_zero());
    assert_eq!(entry.image_gcr, Truth::True);

    let (hbar, _) = pgl2_pair();
    match ideals_gcr(&hbar, 0) {
        Err(Error::Capability(msg)) => assert!(msg.contains("countermodel")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn gl_p_counterexample_to_ideal_inheritance() {
    // h = <diag(0,1), E12 + E21> in gl_2 over GF(2): [x, y] = y
    let f = f2();
    let ctx = GroupContext::gl(2, &f);
    let x = Matrix::from_i64(&f, &[&[0, 0], &[0, 1]]);
    let y = Matrix::from_i64(&f, &[&[0, 1], &[1, 0]]);
    let h = alg(&ctx, &[x, y.clone()]);
    assert_eq!(is_gir(&h, 0).unwrap().value, Truth::True);
    let m = h.ideal_generated(&[y]);
    assert!(h.is_ideal(&m));
    assert_eq!(is_gcr(&m, 0).unwrap().value, Truth::False);
    assert!(matches!(ideals_gcr(&h, 0), Err(Error::Capability(_))));
}

#[test]
fn solvable_decomposition_examples() {
    let f = q();
    let ctx = GroupContext::gl(2, &f);
    let b = alg(&ctx, &[Matrix::unit(&f, 2, 0, 0), Matrix::unit(&f, 2, 1, 1), Matrix::unit(&f, 2, 0, 1)]);
    let d = solvable_decomposition(&b, 0).unwrap();
    assert_eq!(d.n.space(), &span_of(&ctx, &[Matrix::unit(&f, 2, 0, 1)]));
    assert_eq!(d.s.dim(), 2);
    assert_eq!(is_toral(&d.s).unwrap().value, Truth::True);

    let diag = alg(&ctx, &[Matrix::unit(&f, 2, 0, 0), Matrix::unit(&f, 2, 1, 1)]);
    let d = solvable_decomposition(&diag, 0).unwrap();
    assert_eq!(d.s.space(), diag.space());
    assert!(d.n.is_zero());

    let ctx3 = GroupContext::gl(3, &f);
    let dd = Matrix::from_i64(&f, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
    let h = alg(&ctx3, &[dd.clone(), Matrix::unit(&f, 3, 0, 1)]);
    let d = solvable_decomposition(&h, 0).unwrap();
    assert_eq!(d.s.space(), &span_of(&ctx3, &[dd]));
    assert_eq!(d.n.space(), &span_of(&ctx3, &[Matrix::unit(&f, 3, 0, 1)]));

    // not Jordan-closed
    assert!(solvable_decomposition(&diag_plus_nilpotent(), 0).is_err());
}

#[test]
fn char0_criterion_examples() {
    let r = char0_criterion(&sl2_in_gl2(false), 0).unwrap();
    assert!(r.adjoint_semisimple && r.gcr && r.radical_toral);
    assert!(r.radical.is_empty());
    let r = char0_criterion(&borel_sl2(), 0).unwrap();
    assert!(!r.adjoint_semisimple && !r.gcr && !r.radical_toral);
    let r = char0_criterion(&sl2_in_gl2(true), 0).unwrap();
    assert!(r.adjoint_semisimple && r.gcr && r.radical_toral);
    assert_eq!(r.radical.len(), 1);
    let (hbar, _) = pgl2_pair();
    assert!(matches!(char0_criterion(&hbar, 0), Err(Error::Capability(_))));
}

#[test]
fn explicit_semisimplification_examples() {
    let f = q();
    let r = char0_explicit_ssimp(&sl2_in_gl2(false), 0).unwrap();
    assert_eq!(r.status, "ok");
    assert_eq!(r.result.space(), sl2_in_gl2(false).space());

    let h = diag_plus_nilpotent();
    let ctx = h.context().clone();
    let r = char0_explicit_ssimp(&h, 0).unwrap();
    assert_eq!(r.status, "ok");
    assert!(r.levi.as_ref().unwrap().is_zero());
    let dd = Matrix::from_i64(&f, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
    assert_eq!(r.toral.as_ref().unwrap().space(), &span_of(&ctx, &[dd]));

    // Borel of sl_2 in the first block, sl_2 in the second, inside gl_4
    let ctx4 = GroupContext::gl(4, &f);
    let m = |rows: &[&[i64]]| Matrix::from_i64(&f, rows);
    let gens = [
        m(&[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0; 4], &[0; 4]]),
        Matrix::unit(&f, 4, 0, 1),
        Matrix::unit(&f, 4, 2, 3),
        Matrix::unit(&f, 4, 3, 2),
    ];
    let h = alg(&ctx4, &gens);
    let r = char0_explicit_ssimp(&h, 0).unwrap();
    assert_eq!(r.status, "ok");
    let second = alg(&ctx4, &gens[2..]);
    assert_eq!(r.levi.as_ref().unwrap().space(), second.space());
    assert_eq!(r.toral.as_ref().unwrap().dim(), 1);
    assert!(r.result.dim() == 4 && r.witness.is_some());
}

#[test]
fn gcr_is_conjugation_invariant_on_fixtures() {
    let f = q();
    let g = Matrix::from_i64(&f, &[&[1, 2, 0], &[0, 1, 3], &[1, 0, 1]]);
    let h = diag_plus_nilpotent();
    let hc = h.conjugate(&g).unwrap();
    assert_eq!(is_gcr(&h, 0).unwrap().value, is_gcr(&hc, 0).unwrap().value);
    let lam = Cocharacter::central(h.context());
    assert!(lam.is_central());
    assert!(matches!(
        ssimp_uniqueness_check(&h, &semisimplify(&h, 0).unwrap(), &semisimplify(&hc, 0).unwrap(), 0),
        Ok(IsoSearch::Found(_))
    ));
}
