//! Regression fixtures: the worked examples and counterexamples the engine
//! must reproduce exactly.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactla::{Flag, Matrix, Subspace};
use crate::fields::Field;
use crate::gcr::{
    char0_criterion, char0_explicit_ssimp, ideals_gcr, instability_test, is_gcr, is_gind, is_gir, is_plongeable_pgl2,
    semisimplify, semisimplify_along, ssimp_uniqueness_check,
};
use crate::groupctx::GroupContext;
use crate::liealg::LieSubalgebra;
use crate::modrep::{pgl_iso_witness, IsoSearch, Module};
use crate::oracle::{conjugating_element, def_based_gcr};

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub seed: u64,
    /// Corrupts the radical computation inside the symmetric-cube fixture;
    /// a correct build must then report that fixture as failing.
    pub mutate_radical: bool,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub what: String,
    pub expected: Value,
    pub got: Value,
}

impl Check {
    pub fn pass(&self) -> bool {
        self.expected == self.got
    }
}

#[derive(Clone, Debug)]
pub struct FixtureResult {
    pub id: &'static str,
    pub about: &'static str,
    pub checks: Vec<Check>,
}

impl FixtureResult {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(Check::pass)
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub fixtures: Vec<FixtureResult>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.fixtures.iter().all(FixtureResult::pass)
    }

    pub fn to_json(&self) -> Value {
        let fixtures: Vec<Value> = self
            .fixtures
            .iter()
            .map(|f| {
                let checks: Vec<Value> = f
                    .checks
                    .iter()
                    .map(|c| json!({"what": c.what, "expected": c.expected, "got": c.got, "pass": c.pass()}))
                    .collect();
                json!({"id": f.id, "about": f.about, "pass": f.pass(), "checks": checks})
            })
            .collect();
        let failures: Vec<&str> = self.fixtures.iter().filter(|f| !f.pass()).map(|f| f.id).collect();
        json!({"pass": self.pass(), "fixtures": fixtures, "failures": failures})
    }
}

type Runner = fn(&Options) -> Result<Vec<Check>>;

pub struct Fixture {
    pub id: &'static str,
    pub about: &'static str,
    run: Runner,
}

pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture {
            id: "pgl2-char2",
            about: "<e,f> in pgl_2 over GF(2) is G-ir while its ideal <e> is not G-cr",
            run: pgl2_char2,
        },
        Fixture { id: "sym-cube-char3", about: "S^3 of the natural sl_2-module over GF(3)", run: sym_cube_char3 },
        Fixture {
            id: "weil-restriction",
            about: "<T>, T = [[0,u],[1,0]], over GF(2)(u) and over GF(2)(u)[w]/(w^2+u)",
            run: weil_restriction,
        },
        Fixture {
            id: "non-plongeable",
            about: "nilpotent classes [[0,1],[t,0]] and [[0,1],[t^2,0]] in pgl_2 over GF(2)(t)",
            run: non_plongeable,
        },
        Fixture {
            id: "sl3-instability-gf4",
            about: "images in sl_3 of (x1, x2(a)) under the adjoint embedding of PGL_2, GF(4)",
            run: sl3_instability,
        },
        Fixture {
            id: "glp-ideal",
            about: "gl_2 over GF(2): an irreducible subalgebra with a non-G-cr ideal",
            run: glp_ideal,
        },
        Fixture {
            id: "char0-ssimp",
            about: "semisimplifications and the three-way criterion over Q",
            run: char0_ssimp,
        },
        Fixture { id: "uniqueness", about: "conjugacy witnesses between semisimplifications", run: uniqueness },
    ]
}

/// Runs the fixtures whose ids appear in `filter` (all when `None`). An
/// empty filter, or one naming an unknown fixture, is an input error.
pub fn run(filter: Option<&[String]>, opts: &Options) -> Result<Report> {
    let all = fixtures();
    let chosen: Vec<&Fixture> = match filter {
        None => all.iter().collect(),
        Some([]) => return Err(Error::Invalid("empty fixture filter".into())),
        Some(ids) => {
            for id in ids {
                if !all.iter().any(|f| f.id == id) {
                    return Err(Error::Invalid(format!("unknown fixture {id}")));
                }
            }
            all.iter().filter(|f| ids.iter().any(|i| i == f.id)).collect()
        }
    };
    let fixtures = chosen
        .into_iter()
        .map(|f| {
            let checks = (f.run)(opts).unwrap_or_else(|e| {
                vec![Check {
                    what: "fixture ran without error".into(),
                    expected: json!(null),
                    got: json!(e.to_string()),
                }]
            });
            FixtureResult { id: f.id, about: f.about, checks }
        })
        .collect();
    Ok(Report { fixtures })
}

fn check(what: &str, expected: impl Into<Value>, got: impl Into<Value>) -> Check {
    Check { what: what.into(), expected: expected.into(), got: got.into() }
}

fn verdict_value(v: &crate::gcr::Verdict) -> Value {
    v.to_json()["verdict"].clone()
}

fn alg(ctx: &GroupContext, gens: &[Matrix]) -> Result<LieSubalgebra> {
    LieSubalgebra::bracket_closure(ctx, gens)
}

fn span_of(ctx: &GroupContext, elems: &[Matrix]) -> Subspace {
    Subspace::span(ctx.field(), ctx.n() * ctx.n(), elems.iter().map(|x| ctx.to_vec(x)))
}

fn pgl2_char2(o: &Options) -> Result<Vec<Check>> {
    let f = Field::prime(2)?;
    let ctx = GroupContext::pgl(2, &f);
    let e = Matrix::unit(&f, 2, 0, 1);
    let fm = Matrix::unit(&f, 2, 1, 0);
    let h = alg(&ctx, &[e.clone(), fm])?;
    let m = alg(&ctx, &[e])?;
    let ir = is_gir(&h, o.seed)?;
    let lift = Module::of_subalgebra(&h)?;
    let cm = m.centralizer_in_g();
    let nm = m.normalizer_in_g();
    Ok(vec![
        check("dim h", 2, h.dim()),
        check("h is G-ir", true, verdict_value(&ir)),
        check("lift is absolutely irreducible", true, ir.certificate["absolutely"].clone()),
        check("lift hull dimension", 4, lift.hull().dim()),
        check("h is G-cr", true, verdict_value(&is_gcr(&h, o.seed)?)),
        check("ideal <e> is not G-cr", false, verdict_value(&is_gcr(&m, o.seed)?)),
        check("<e> is an ideal of h", true, h.is_ideal(&m)),
        check("dim c_g(m)", 2, cm.dim()),
        check("c_g(m) = h", true, cm.space() == h.space()),
        check("dim n_g(m)", 3, nm.dim()),
        check("n_g(m) = g", true, nm.dim() == ctx.lie_dim()),
        check("oracle: <e> fails the definition", false, def_based_gcr(&m)?.gcr),
        check("oracle: h satisfies the definition", true, def_based_gcr(&h)?.gcr),
        check("ideal claims refused", true, matches!(ideals_gcr(&h, o.seed), Err(Error::Capability(_)))),
    ])
}

fn sym_cube_char3(o: &Options) -> Result<Vec<Check>> {
    let f = Field::prime(3)?;
    let e = Matrix::from_i64(&f, &[&[0, 1, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
    let fm = Matrix::from_i64(&f, &[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 1, 0]]);
    let hm = Matrix::from_i64(&f, &[&[0, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 0]]);
    let ctx = GroupContext::gl(4, &f);
    let image = alg(&ctx, &[e.clone(), fm.clone()])?;
    let module = Module::new(&f, 4, vec![e, fm, hm]);
    let trivial = Subspace::coordinate(&f, 4, &[0, 3]);
    let killed =
        module.generators().iter().all(|g| trivial.basis().iter().all(|v| g.mul_vec(v).iter().all(|c| f.is_zero(c))));
    let structure = module.structure_with(o.mutate_radical);
    let semisimple: Value = match &structure {
        Ok(s) => json!(s.radical.is_zero()),
        Err(err) => json!(err.to_string()),
    };
    let layers: Value = match &structure {
        Ok(s) => json!(s.radical_series.dims()),
        Err(err) => json!(err.to_string()),
    };
    Ok(vec![
        check("sl_2 image has dimension 3", 3, image.dim()),
        check("<x^3, y^3> is a trivial submodule", true, module.is_submodule(&trivial) && killed),
        check("module is semisimple", false, semisimple),
        check("radical series dimensions", json!([2]), layers),
        check("image is G-cr in GL_4", false, verdict_value(&is_gcr(&image, o.seed)?)),
        check("rad of the image is zero", true, image.abelian_ideal_witness()?.is_none()),
    ])
}

fn weil_restriction(o: &Options) -> Result<Vec<Check>> {
    let k = Field::rational_functions(&Field::prime(2)?, "u")?;
    let t = Matrix::parse(&k, &[&["0", "u"], &["1", "0"]])?;
    let ctx = GroupContext::gl(2, &k);
    let h = alg(&ctx, std::slice::from_ref(&t))?;
    let k2 = Field::extension_str(&k, "w^2+u", "w")?;
    let ctx2 = GroupContext::gl(2, &k2);
    let h2 = alg(&ctx2, &[t.map(&k2, |e| k2.embed(e.clone()))])?;
    Ok(vec![
        check("G-cr over k", true, verdict_value(&is_gcr(&h, o.seed)?)),
        check("G-ir over k", true, verdict_value(&is_gir(&h, o.seed)?)),
        check("G-cr over k(w)", false, verdict_value(&is_gcr(&h2, o.seed)?)),
        check("G-ir over k(w)", false, verdict_value(&is_gir(&h2, o.seed)?)),
        check("G-ind over k(w)", true, verdict_value(&is_gind(&h2, o.seed)?)),
    ])
}

fn non_plongeable(o: &Options) -> Result<Vec<Check>> {
    let k = Field::rational_functions(&Field::prime(2)?, "t")?;
    let ctx = GroupContext::pgl(2, &k);
    let x = Matrix::parse(&k, &[&["0", "1"], &["t", "0"]])?;
    let y = Matrix::parse(&k, &[&["0", "1"], &["t^2", "0"]])?;
    let hx = alg(&ctx, std::slice::from_ref(&x))?;
    let hy = alg(&ctx, &[y])?;
    Ok(vec![
        check("[[0,1],[t,0]] is not plongeable", false, verdict_value(&is_plongeable_pgl2(&hx, o.seed)?)),
        check(
            "[[0,1],[t,0]] is not unstable over k",
            false,
            verdict_value(&instability_test(&ctx, &[x], o.seed)?.verdict),
        ),
        check("[[0,1],[t^2,0]] is plongeable", true, verdict_value(&is_plongeable_pgl2(&hy, o.seed)?)),
    ])
}

fn sl3_instability(o: &Options) -> Result<Vec<Check>> {
    let f4 = Field::extension_str(&Field::prime(2)?, "x^2+x+1", "x")?;
    let sl3 = GroupContext::sl(3, &f4);
    let pgl2 = GroupContext::pgl(2, &f4);
    let units: Vec<_> = f4.elements()?.into_iter().filter(|a| !f4.is_zero(a)).collect();
    let mut checks = Vec::new();
    let mut tuples = Vec::new();
    for a in &units {
        let x1 = Matrix::unit(&f4, 2, 0, 1);
        let x2 = Matrix::unit(&f4, 2, 1, 0).scale(a);
        // d i([[α,β],[γ,δ]]) = γ E12 + β E13
        let image = [Matrix::unit(&f4, 3, 0, 2), Matrix::unit(&f4, 3, 0, 1).scale(a)];
        let inst = instability_test(&sl3, &image, o.seed)?;
        let name = f4.format(a);
        checks.push(check(&format!("a = {name}: unstable in sl_3"), true, verdict_value(&inst.verdict)));
        let h = alg(&pgl2, &[x1.clone(), x2.clone()])?;
        checks.push(check(
            &format!("a = {name}: pair generates a G-ir subalgebra"),
            true,
            verdict_value(&is_gir(&h, o.seed)?),
        ));
        tuples.push((name, vec![x1, x2]));
    }
    for i in 0..tuples.len() {
        for j in i + 1..tuples.len() {
            let (a, xs) = &tuples[i];
            let (b, ys) = &tuples[j];
            let g = conjugating_element(&pgl2, xs, ys, 1000)?;
            checks.push(check(&format!("a = {a}, b = {b}: no conjugating element in GL_2(GF(4))"), true, g.is_none()));
            let hom = pgl_iso_witness(&f4, xs, ys, o.seed);
            checks.push(check(
                &format!("a = {a}, b = {b}: exhaustive intertwiner search fails"),
                true,
                hom == IsoSearch::NotFound { exhaustive: true },
            ));
        }
    }
    Ok(checks)
}

fn glp_ideal(o: &Options) -> Result<Vec<Check>> {
    let f = Field::prime(2)?;
    let ctx = GroupContext::gl(2, &f);
    let x = Matrix::from_i64(&f, &[&[0, 0], &[0, 1]]);
    let y = Matrix::from_i64(&f, &[&[0, 1], &[1, 0]]);
    let h = alg(&ctx, &[x, y.clone()])?;
    let m = h.ideal_generated(&[y]);
    Ok(vec![
        check("h is G-ir", true, verdict_value(&is_gir(&h, o.seed)?)),
        check("<E12+E21> is an ideal", true, h.is_ideal(&m)),
        check("the ideal is not G-cr", false, verdict_value(&is_gcr(&m, o.seed)?)),
        check("oracle agrees", false, def_based_gcr(&m)?.gcr),
        check("ideal claims refused for p <= n", true, matches!(ideals_gcr(&h, o.seed), Err(Error::Capability(_)))),
    ])
}

fn char0_ssimp(o: &Options) -> Result<Vec<Check>> {
    let q = Field::rationals();
    let gl3 = GroupContext::gl(3, &q);
    let dd = Matrix::from_i64(&q, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
    let h = alg(&gl3, &[dd.add(&Matrix::unit(&q, 3, 0, 1))])?;
    let r = semisimplify(&h, o.seed)?;
    let ex = char0_explicit_ssimp(&h, o.seed)?;

    let sl2 = GroupContext::sl(2, &q);
    let hh = Matrix::from_i64(&q, &[&[1, 0], &[0, -1]]);
    let borel = alg(&sl2, &[hh.clone(), Matrix::unit(&q, 2, 0, 1)])?;
    let rb = semisimplify(&borel, o.seed)?;

    let gl2 = GroupContext::gl(2, &q);
    let sl2_in = alg(&gl2, &[Matrix::unit(&q, 2, 0, 1), Matrix::unit(&q, 2, 1, 0)])?;
    let with_scalars = alg(&gl2, &[Matrix::unit(&q, 2, 0, 1), Matrix::unit(&q, 2, 1, 0), gl2.identity()])?;
    let c1 = char0_criterion(&sl2_in, o.seed)?;
    let c2 = char0_criterion(&borel, o.seed)?;
    let c3 = char0_criterion(&with_scalars, o.seed)?;
    let triple = |c: &crate::gcr::Char0Report| json!([c.adjoint_semisimple, c.gcr, c.radical_toral]);

    let gl4 = GroupContext::gl(4, &q);
    let blocks = [
        Matrix::from_i64(&q, &[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0; 4], &[0; 4]]),
        Matrix::unit(&q, 4, 0, 1),
        Matrix::unit(&q, 4, 2, 3),
        Matrix::unit(&q, 4, 3, 2),
    ];
    let h4 = alg(&gl4, &blocks)?;
    let ex4 = char0_explicit_ssimp(&h4, o.seed)?;
    let second = alg(&gl4, &blocks[2..])?;
    Ok(vec![
        check(
            "<diag(1,1,0)+E12> semisimplifies to <diag(1,1,0)>",
            true,
            r.image.space() == &span_of(&gl3, std::slice::from_ref(&dd)),
        ),
        check("explicit route: k = 0", true, ex.levi.as_ref().is_some_and(LieSubalgebra::is_zero)),
        check(
            "explicit route: s = <diag(1,1,0)>",
            true,
            ex.toral.as_ref().is_some_and(|s| s.space() == &span_of(&gl3, std::slice::from_ref(&dd))),
        ),
        check("explicit route conjugate to c_λ(h)", "ok", ex.status.clone()),
        check("Borel of sl_2 semisimplifies to <H>", true, rb.image.space() == &span_of(&sl2, &[hh])),
        check("sl_2: three routes", json!([true, true, true]), triple(&c1)),
        check("Borel: three routes", json!([false, false, false]), triple(&c2)),
        check("scalars + sl_2: three routes", json!([true, true, true]), triple(&c3)),
        check(
            "gl_4 blocks: k is the second-block sl_2",
            true,
            ex4.levi.as_ref().is_some_and(|k| k.space() == second.space()),
        ),
        check("gl_4 blocks: k + s has dimension 4", 4, ex4.result.dim()),
        check("gl_4 blocks: conjugacy witness", "ok", ex4.status.clone()),
    ])
}

fn uniqueness(o: &Options) -> Result<Vec<Check>> {
    let q = Field::rationals();
    let gl3 = GroupContext::gl(3, &q);
    let h = alg(&gl3, &[Matrix::from_i64(&q, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 0]])])?;
    let r1 = semisimplify(&h, o.seed)?;
    let flag = Flag::new(3, vec![Subspace::coordinate(&q, 3, &[2]), Subspace::coordinate(&q, 3, &[0, 2])])?;
    let r2 = semisimplify_along(&h, &flag, o.seed)?;
    let w_same = ssimp_uniqueness_check(&h, &r1, &r1, o.seed)?;
    let w = ssimp_uniqueness_check(&h, &r1, &r2, o.seed)?;

    let f2 = Field::prime(2)?;
    let pgl = GroupContext::pgl(2, &f2);
    let m = alg(&pgl, &[Matrix::unit(&f2, 2, 0, 1)])?;
    let p1 = semisimplify(&m, o.seed)?;
    let p2 = semisimplify_along(&m, &Flag::new(2, vec![Subspace::coordinate(&f2, 2, &[0])])?, o.seed)?;
    let wp = ssimp_uniqueness_check(&m, &p1, &p2, o.seed)?;
    Ok(vec![
        check("equal results: witness exists", true, w_same.witness().is_some()),
        check("two flags of <diag(1,1,0)+E12>: witness", true, w.witness().is_some()),
        check(
            "witness conjugates the tuple images",
            true,
            w.witness().is_some_and(|g| {
                let gi = g.inverse().unwrap();
                r1.tuple_image.iter().zip(&r2.tuple_image).all(|(x, y)| g.mul(x).mul(&gi) == *y)
            }),
        ),
        check("pgl_2: semisimplification of <e> is 0", true, p1.image.is_zero() && p2.image.is_zero()),
        check("pgl_2: witness", true, wp.witness().is_some()),
    ])
}
