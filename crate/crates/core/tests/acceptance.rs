//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. Every comparison is exact: the pinned
//! tolerance is zero mismatches.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use liegcr::exactla::{Flag, Matrix, Subspace};
use liegcr::fields::{poly, Elem, Field};
use liegcr::gcr::{self, Truth};
use liegcr::groupctx::{Cocharacter, GroupContext};
use liegcr::jordan::{is_jordan_closed, jordan_closure, jordan_decompose, minimal_polynomial};
use liegcr::liealg::LieSubalgebra;
use liegcr::modrep::{IsoSearch, Module};
use liegcr::{oracle, papercheck, sample};

const TOLERANCE: usize = 0;

/// Name, minimum number of cases, runner.
type Criterion = (&'static str, usize, fn() -> Outcome);

struct Outcome {
    cases: usize,
    failures: Vec<String>,
    notes: String,
}

impl Outcome {
    #[allow(clippy::absurd_extreme_comparisons)]
    fn pass(&self, min_cases: usize) -> bool {
        self.cases >= min_cases && self.failures.len() <= TOLERANCE
    }
}

fn rng(tag: u64, i: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(tag.wrapping_mul(1_000_003).wrapping_add(i as u64))
}

fn f(p: u64) -> Field {
    Field::prime(p).unwrap()
}

/// Runs `case` on `count` seeds in parallel; `Err` strings are failures.
fn batch<T: Send>(count: usize, case: impl Fn(usize) -> Result<T, String> + Sync) -> (Vec<T>, Vec<String>) {
    let results: Vec<Result<T, String>> = (0..count).into_par_iter().map(&case).collect();
    let mut ok = Vec::new();
    let mut bad = Vec::new();
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(t) => ok.push(t),
            Err(e) => bad.push(format!("case {i}: {e}")),
        }
    }
    (ok, bad)
}

fn truth(v: Truth) -> Result<bool, String> {
    v.as_bool().ok_or_else(|| "verdict unknown".to_string())
}

fn c1_papercheck() -> Outcome {
    match papercheck::run(None, &papercheck::Options::default()) {
        Ok(r) => {
            let checks: usize = r.fixtures.iter().map(|f| f.checks.len()).sum();
            let failures = r
                .fixtures
                .iter()
                .flat_map(|fx| {
                    fx.checks
                        .iter()
                        .filter(|c| !c.pass())
                        .map(move |c| format!("{}: {} expected {} got {}", fx.id, c.what, c.expected, c.got))
                })
                .collect();
            Outcome { cases: r.fixtures.len(), failures, notes: format!("{checks} checks") }
        }
        Err(e) => Outcome { cases: 0, failures: vec![e.to_string()], notes: String::new() },
    }
}

fn c2_oracle_equivalence() -> Outcome {
    let ctxs = [GroupContext::gl(2, &f(2)), GroupContext::gl(2, &f(3)), GroupContext::gl(3, &f(2))];
    let per = 110;
    let (gcr_flags, failures) = batch(per * ctxs.len(), |i| {
        let ctx = &ctxs[i / per];
        let h = sample::random_subalgebra(ctx, &mut rng(2, i));
        let radical = truth(gcr::is_gcr(&h, i as u64).map_err(|e| e.to_string())?.value)?;
        let def = oracle::def_based_gcr(&h).map_err(|e| e.to_string())?.gcr;
        let delta = oracle::is_delta_cr(&oracle::subcomplex(&h).map_err(|e| e.to_string())?);
        if radical == def && def == delta {
            Ok(radical)
        } else {
            Err(format!("radical {radical}, definition {def}, building {delta}"))
        }
    });
    let yes = gcr_flags.iter().filter(|b| **b).count();
    Outcome { cases: per * ctxs.len(), failures, notes: format!("{yes} G-cr, {} not", gcr_flags.len() - yes) }
}

fn c3_uniqueness() -> Outcome {
    let q = Field::rationals();
    let ctxs = [
        GroupContext::gl(2, &f(2)),
        GroupContext::gl(3, &f(2)),
        GroupContext::gl(2, &f(3)),
        GroupContext::gl(3, &f(3)),
        GroupContext::gl(2, &q),
        GroupContext::gl(3, &q),
        GroupContext::sl(3, &f(2)),
        GroupContext::sl(2, &f(3)),
        GroupContext::sl(3, &q),
        GroupContext::pgl(2, &f(3)),
        GroupContext::pgl(3, &q),
    ];
    let per = 40;
    let (distinct, failures) = batch(per * ctxs.len(), |i| {
        let ctx = &ctxs[i / per];
        let mut r = rng(3, i);
        let h = sample::random_subalgebra(ctx, &mut r);
        let seed = r.gen::<u64>();
        let r1 = gcr::semisimplify(&h, seed).map_err(|e| format!("{ctx:?}: {e}"))?;
        let module = Module::of_subalgebra(&h).map_err(|e| e.to_string())?;
        let mut flag = module.random_admissible_flag(seed ^ 1).map_err(|e| e.to_string())?;
        for k in 2..10 {
            if flag != r1.flag {
                break;
            }
            flag = module.random_admissible_flag(seed ^ k).map_err(|e| e.to_string())?;
        }
        let r2 = gcr::semisimplify_along(&h, &flag, seed).map_err(|e| format!("second flag: {e}"))?;
        match gcr::ssimp_uniqueness_check(&h, &r1, &r2, seed).map_err(|e| e.to_string())? {
            IsoSearch::Found(_) => Ok(flag != r1.flag),
            other => Err(format!("{} n={} over {}: {other:?}", ctx.kind(), ctx.n(), ctx.field())),
        }
    });
    // Only pairs of genuinely different flags count towards the minimum.
    let d = distinct.iter().filter(|b| **b).count();
    Outcome {
        cases: d,
        failures,
        notes: format!("{} subalgebras sampled, counted: distinct flag pairs", per * ctxs.len()),
    }
}

/// Random subalgebras of `gl_n(Q)` mixing the sampler output with tori
/// (sometimes spoiled by an extra element).
fn q_instance(i: usize, tag: u64) -> LieSubalgebra {
    let q = Field::rationals();
    let ctx = GroupContext::gl(2 + i % 2, &q);
    let mut r = rng(tag, i);
    if r.gen_bool(0.5) {
        return sample::random_subalgebra(&ctx, &mut r);
    }
    let n = ctx.n();
    let g = sample::random_invertible(&q, n, &mut r);
    let gi = g.inverse().unwrap();
    let k = r.gen_range(1..=2);
    let mut gens: Vec<Matrix> = (0..k)
        .map(|_| {
            let d: Vec<Elem> = (0..n).map(|_| q.random(&mut r)).collect();
            Matrix::diag(&q, &d).conjugate(&g, &gi)
        })
        .collect();
    if r.gen_bool(0.3) {
        gens.push(sample::random_matrix(&q, n, 0.4, &mut r));
    }
    LieSubalgebra::bracket_closure(&ctx, &gens).unwrap()
}

fn c4_char0_equivalence() -> Outcome {
    let count = 220;
    let (reports, failures) = batch(count, |i| {
        let h = q_instance(i, 4);
        let r = gcr::char0_criterion(&h, i as u64).map_err(|e| e.to_string())?;
        if r.adjoint_semisimple == r.gcr && r.gcr == r.radical_toral {
            Ok(r.gcr)
        } else {
            Err(format!("adjoint {}, natural {}, radical {}", r.adjoint_semisimple, r.gcr, r.radical_toral))
        }
    });
    let yes = reports.iter().filter(|b| **b).count();
    Outcome { cases: count, failures, notes: format!("{yes} G-cr, {} not", reports.len() - yes) }
}

fn squarefree(p: &[Elem], field: &Field) -> bool {
    let g = poly::gcd(field, p, &poly::derivative(field, p));
    g.len() == 1
}

fn in_polynomial_span(x: &Matrix, y: &Matrix) -> bool {
    let field = x.field();
    let n = x.rows();
    let mut powers = vec![Matrix::identity(field, n)];
    for _ in 1..n {
        let next = powers.last().unwrap().mul(x);
        powers.push(next);
    }
    let flat = |m: &Matrix| m.flat().to_vec();
    Subspace::span(field, n * n, powers.iter().map(flat)).contains(&flat(y))
}

fn c5_structural() -> Outcome {
    let q = Field::rationals();
    let mut failures = Vec::new();
    let mut cases = 0;
    let mut notes = Vec::new();

    // Jordan decomposition invariants.
    let fields = [q.clone(), f(5)];
    let (_, bad) = batch(500, |i| {
        let field = &fields[i % 2];
        let mut r = rng(51, i);
        let n = r.gen_range(2..=4);
        let x = sample::random_matrix(field, n, 0.6, &mut r);
        let p = jordan_decompose(&x).map_err(|e| e.to_string())?;
        let (s, nil) = (&p.semisimple, &p.nilpotent);
        if s.add(nil) != x {
            return Err("x_s + x_n != x".into());
        }
        if s.mul(nil) != nil.mul(s) {
            return Err("x_s and x_n do not commute".into());
        }
        if !nil.pow(n as u64).is_zero() {
            return Err("x_n is not nilpotent".into());
        }
        if !squarefree(minimal_polynomial(s).coeffs(), field) {
            return Err("x_s has a repeated factor in its minimal polynomial".into());
        }
        if !in_polynomial_span(&x, s) {
            return Err("x_s is not a polynomial in x".into());
        }
        Ok(())
    });
    cases += 500;
    failures.extend(bad.into_iter().map(|e| format!("jordan parts {e}")));

    // Closure idempotence and the two invariances of is_gcr.
    let ctxs = [
        GroupContext::gl(3, &q),
        GroupContext::gl(3, &f(5)),
        GroupContext::sl(3, &f(5)),
        GroupContext::pgl(2, &q),
        GroupContext::gl(2, &f(2)),
        GroupContext::gl(3, &f(3)),
    ];
    let (_, bad) = batch(120, |i| {
        let ctx = &ctxs[i % ctxs.len()];
        let mut r = rng(52, i);
        let h = sample::random_subalgebra(ctx, &mut r);
        let seed = i as u64;
        let hj = jordan_closure(&h, 8, seed).map_err(|e| e.to_string())?.algebra;
        let hjj = jordan_closure(&hj, 8, seed + 1).map_err(|e| e.to_string())?.algebra;
        if hjj.space() != hj.space() || !hj.contains_algebra(&h) {
            return Err("jordan_closure is not idempotent".into());
        }
        if !is_jordan_closed(&hj, 16, seed).map_err(|e| e.to_string())?.is_certified() {
            return Err("h^J is not Jordan-closed".into());
        }
        let v = truth(gcr::is_gcr(&h, seed).map_err(|e| e.to_string())?.value)?;
        let vj = truth(gcr::is_gcr(&hj, seed).map_err(|e| e.to_string())?.value)?;
        let g = sample::random_invertible(ctx.field(), ctx.n(), &mut r);
        let hg = h.conjugate(&g).map_err(|e| e.to_string())?;
        let vg = truth(gcr::is_gcr(&hg, seed).map_err(|e| e.to_string())?.value)?;
        if v != vj || v != vg {
            return Err(format!("is_gcr: h {v}, h^J {vj}, conjugate {vg}"));
        }
        Ok(())
    });
    cases += 120;
    failures.extend(bad.into_iter().map(|e| format!("closure/invariance {e}")));

    // Implications over Q.
    let count = 200;
    let (flags, bad) = batch(count, |i| {
        let h = q_instance(i, 53);
        let seed = i as u64;
        let gcr_v = truth(gcr::is_gcr(&h, seed).map_err(|e| e.to_string())?.value)?;
        let toral = truth(gcr::is_toral(&h).map_err(|e| e.to_string())?.value)?;
        if gcr_v && !is_jordan_closed(&h, 16, seed).map_err(|e| e.to_string())?.is_certified() {
            return Err("G-cr but not Jordan-closed".into());
        }
        if toral && !gcr_v {
            return Err("toral but not G-cr".into());
        }
        if h.is_solvable() && gcr_v && !toral {
            return Err("solvable and G-cr but not toral".into());
        }
        Ok((gcr_v, toral, h.is_solvable() && gcr_v))
    });
    cases += count;
    failures.extend(bad.into_iter().map(|e| format!("implications {e}")));
    notes.push(format!(
        "implications: {} G-cr, {} toral, {} solvable G-cr",
        flags.iter().filter(|t| t.0).count(),
        flags.iter().filter(|t| t.1).count(),
        flags.iter().filter(|t| t.2).count()
    ));

    // Solvable decompositions.
    let dctx = [GroupContext::gl(2, &q), GroupContext::gl(3, &q), GroupContext::gl(3, &f(5)), GroupContext::sl(3, &q)];
    let (_, bad) = batch(100, |i| {
        let ctx = &dctx[i % dctx.len()];
        let h = sample::random_jordan_closed_solvable(ctx, &mut rng(54, i)).map_err(|e| e.to_string())?;
        let d = gcr::solvable_decomposition(&h, i as u64).map_err(|e| e.to_string())?;
        if !h.contains_algebra(&d.s) || !h.contains_algebra(&d.n) {
            return Err("parts are not inside h".into());
        }
        if d.s.dim() + d.n.dim() != h.dim() || d.s.space().intersect(d.n.space()).dim() != 0 {
            return Err("h != s ⊕ n".into());
        }
        if gcr::is_toral(&d.s).map_err(|e| e.to_string())?.value != Truth::True {
            return Err("s is not toral".into());
        }
        if !d.n.basis().iter().all(|x| x.pow(ctx.n() as u64).is_zero()) || !h.is_ideal(&d.n) {
            return Err("n is not a nilpotent ideal".into());
        }
        Ok(())
    });
    cases += 100;
    failures.extend(bad.into_iter().map(|e| format!("decomposition {e}")));
    Outcome { cases, failures, notes: notes.join("; ") }
}

/// Conjugates by `λ(a)` over `k(a)` and checks that every entry vanishes
/// at `a = 0`.
fn explicit_limit_is_zero(lambda: &Cocharacter, tuple: &[Matrix]) -> bool {
    let k = tuple[0].field();
    let ka = Field::rational_functions(k, "a").unwrap();
    let a = ka.generator().unwrap();
    let lift = |m: &Matrix| m.map(&ka, |e| ka.embed(e.clone()));
    let n = tuple[0].rows();
    let powers: Vec<Elem> = lambda
        .weights()
        .iter()
        .map(|&w| {
            let p = ka.pow(&a, w.unsigned_abs() as u128);
            if w < 0 {
                ka.inv(&p).unwrap()
            } else {
                p
            }
        })
        .collect();
    let frame = lift(lambda.frame());
    let frame_inv = frame.inverse().unwrap();
    let lam = frame.mul(&Matrix::diag(&ka, &powers)).mul(&frame_inv);
    let lam_inv = lam.inverse().unwrap();
    let valuation = |c: &[Elem]| c.iter().position(|e| !k.is_zero(e)).unwrap_or(usize::MAX);
    tuple.iter().all(|x| {
        let y = lam.mul(&lift(x)).mul(&lam_inv);
        (0..n).all(|i| {
            (0..n).all(|j| match y.get(i, j) {
                Elem::Frac(num, den) => num.is_empty() || valuation(num) > valuation(den),
                _ => false,
            })
        })
    })
}

fn c6_instability() -> Outcome {
    let fields = [f(2), Field::rationals()];
    let (_, mut failures) = batch(200, |i| {
        let ctx = GroupContext::gl(3, &fields[i % 2]);
        let mut r = rng(6, i);
        let m = r.gen_range(1..=3);
        let tuple = sample::random_nilpotent_tuple(&ctx, m, &mut r);
        let inst = gcr::instability_test(&ctx, &tuple, i as u64).map_err(|e| e.to_string())?;
        let lambda = inst.lambda.ok_or("no cocharacter returned")?;
        if inst.verdict.value != Truth::True {
            return Err("nilpotent tuple reported stable".into());
        }
        if !explicit_limit_is_zero(&lambda, &tuple) {
            return Err("explicit limit under λ is not 0".into());
        }
        Ok(())
    });
    let (_, mixed) = batch(100, |i| {
        let ctx = GroupContext::gl(3, &fields[i % 2]);
        let mut r = rng(61, i);
        let mut tuple = sample::random_nilpotent_tuple(&ctx, r.gen_range(0..=2), &mut r);
        let pos = r.gen_range(0..=tuple.len());
        tuple.insert(pos, sample::random_semisimple(&ctx, &mut r));
        match gcr::instability_test(&ctx, &tuple, i as u64).map_err(|e| e.to_string())?.verdict.value {
            Truth::False => Ok(()),
            v => Err(format!("tuple with a semisimple element: {v:?}")),
        }
    });
    failures.extend(mixed.into_iter().map(|e| format!("mixed {e}")));
    Outcome { cases: 300, failures, notes: "200 nilpotent, 100 mixed".into() }
}

fn flag_fixed_by(g: &Matrix, flag: &Flag) -> bool {
    flag.steps().iter().all(|step| step.basis().iter().all(|v| step.contains(&g.mul_vec(v))))
}

/// gl_2(GF(2)) has only 18 non-Δ-cr subalgebras (43 subalgebras in all), so
/// the remaining cases come from gl_3(GF(2)).
fn c7_centre() -> Outcome {
    const TOTAL: usize = 50;
    let ctxs = [GroupContext::gl(2, &f(2)), GroupContext::gl(3, &f(2))];
    let mut failures = Vec::new();
    let mut found = 0;
    let mut per_ctx = Vec::new();
    for (c, ctx) in ctxs.iter().enumerate() {
        let group = oracle::enumerate_gl(ctx.field(), ctx.n(), 1000).unwrap();
        let want = if c == 0 { 25 } else { TOTAL - found };
        let mut picked: Vec<(LieSubalgebra, oracle::BuildingSubcomplex)> = Vec::new();
        let mut i = 0;
        while picked.len() < want && i < 5000 {
            let h = sample::random_subalgebra(ctx, &mut rng(7 + c as u64, i));
            i += 1;
            let sigma = oracle::subcomplex(&h).unwrap();
            if !oracle::is_delta_cr(&sigma) && !picked.iter().any(|(p, _)| p.space() == h.space()) {
                picked.push((h, sigma));
            }
        }
        per_ctx.push(picked.len());
        for (h, sigma) in &picked {
            let flag = match oracle::centre_search(h, 1000) {
                Ok(Some(fl)) => fl,
                other => {
                    failures.push(format!("centre_search returned {other:?}"));
                    continue;
                }
            };
            if !sigma.simplices.contains(&flag) {
                failures.push("fixed simplex is not in Σ".into());
                continue;
            }
            let normalizer = group.iter().filter(|g| {
                let gi = g.inverse().unwrap();
                h.basis().iter().all(|x| h.contains(&x.conjugate(g, &gi)))
            });
            if normalizer.clone().count() == 0 || !normalizer.into_iter().all(|g| flag_fixed_by(g, &flag)) {
                failures.push("simplex is moved by the normalizer".into());
                continue;
            }
            found += 1;
        }
    }
    Outcome {
        cases: found,
        failures,
        notes: format!(
            "distinct subalgebras: {} in gl_2, {} in gl_3; each fixed simplex checked against N(h)",
            per_ctx[0], per_ctx[1]
        ),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("worked-example fixtures", 8, c1_papercheck),
        ("radical route = definition = building (gl_2/GF2, gl_2/GF3, gl_3/GF2)", 300, c2_oracle_equivalence),
        ("semisimplifications from two admissible flags are conjugate", 200, c3_uniqueness),
        ("char-0 three-way criterion (gl_2/Q, gl_3/Q)", 200, c4_char0_equivalence),
        ("structural invariants", 920, c5_structural),
        ("instability: Engel route vs explicit λ-limit", 300, c6_instability),
        ("fixed simplex for non-Δ-cr subalgebras", 50, c7_centre),
    ];
    let mut all = true;
    for (k, (name, min_cases, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = run();
        let pass = out.pass(*min_cases);
        all &= pass;
        println!(
            "criterion {}: {} {name}: {} cases (min {min_cases}), {} mismatches (tolerance {TOLERANCE}); {} [{:.1}s]",
            k + 1,
            if pass { "PASS" } else { "FAIL" },
            out.cases,
            out.failures.len(),
            out.notes,
            t.elapsed().as_secs_f64()
        );
        for f in out.failures.iter().take(10) {
            println!("    {f}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
