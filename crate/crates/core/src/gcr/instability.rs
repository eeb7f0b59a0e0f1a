//! Unstable tuples and plongeable nilpotent subalgebras.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{Truth, Verdict};
use crate::error::{Error, Result};
use crate::exactla::{Flag, Matrix, Subspace};
use crate::fields::poly::Polynomial;
use crate::fields::roots::{is_nth_power_ratfunc, nth_root, roots_in_field};
use crate::fields::FieldKind;
use crate::groupctx::{Cocharacter, GroupContext, GroupKind};
use crate::io::{cocharacter_to_json, flag_to_json, matrix_to_json, subspace_to_json};
use crate::liealg::LieSubalgebra;
use crate::modrep::{Irreducibility, Module};

const SAMPLES: usize = 64;

/// Verdict plus the destabilizing cocharacter when the tuple is unstable.
#[derive(Clone, Debug)]
pub struct Instability {
    pub verdict: Verdict,
    pub lambda: Option<Cocharacter>,
}

/// Nilpotency of an element of `Lie(G)`. In `pgl_2` the lift must have a
/// single eigenvalue, i.e. vanishing discriminant.
fn is_nilpotent_in(ctx: &GroupContext, x: &Matrix) -> bool {
    match ctx.kind() {
        GroupKind::PGL => {
            let f = ctx.field();
            let tr = x.trace();
            let disc = f.sub(&f.mul(&tr, &tr), &f.mul(&f.from_i64(4), &x.det()));
            f.is_zero(&disc)
        }
        _ => x.pow(ctx.n() as u64).is_zero(),
    }
}

fn non_nilpotent_witness(m: &LieSubalgebra, seed: u64) -> Option<Matrix> {
    let ctx = m.context();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut probes = m.basis();
    for (i, a) in m.basis().iter().enumerate() {
        for b in &m.basis()[i + 1..] {
            probes.push(a.add(b));
        }
    }
    probes.extend((0..SAMPLES).map(|_| m.random_element(&mut rng)));
    probes.into_iter().find(|x| !is_nilpotent_in(ctx, x))
}

fn limits_vanish(ctx: &GroupContext, lambda: &Cocharacter, tuple: &[Matrix]) -> bool {
    tuple.iter().all(|x| lambda.limit(ctx, x).is_some_and(|l| l.is_zero()))
}

/// Decides whether some cocharacter drives the tuple to 0. Equivalent to
/// the generated subalgebra consisting of nilpotent elements (Engel), with
/// `λ` read off a triangularizing flag.
pub fn instability_test(ctx: &GroupContext, tuple: &[Matrix], seed: u64) -> Result<Instability> {
    let tuple: Vec<Matrix> = tuple.iter().map(|x| ctx.element(x)).collect::<Result<_>>()?;
    let m = LieSubalgebra::bracket_closure(ctx, &tuple)?;
    if ctx.kind() == GroupKind::PGL {
        if ctx.n() != 2 {
            return Err(Error::Capability("instability in PGL_n is only implemented for n = 2".into()));
        }
        if let Some(w) = non_nilpotent_witness(&m, seed) {
            return Ok(Instability {
                verdict: Verdict::new(
                    Truth::False,
                    "non-nilpotent element",
                    json!({"non_nilpotent": matrix_to_json(&w)}),
                ),
                lambda: None,
            });
        }
        let (verdict, line) = plongeable(&m, seed)?;
        let lambda = match line {
            Some(l) => {
                let lam = Cocharacter::from_flag(ctx, &Flag::new(2, vec![l]).expect("a line is a flag"))?;
                if !limits_vanish(ctx, &lam, &tuple) {
                    return Err(Error::Internal("destabilizing cocharacter failed verification".into()));
                }
                Some(lam)
            }
            None => None,
        };
        let mut verdict = verdict;
        if let Some(l) = &lambda {
            verdict.certificate["lambda"] = cocharacter_to_json(l);
        }
        return Ok(Instability { verdict, lambda });
    }
    match m.engel_triangularize() {
        Some(flag) => {
            let lambda = Cocharacter::from_flag(ctx, &flag)?;
            if !limits_vanish(ctx, &lambda, &tuple) {
                return Err(Error::Internal("Engel flag does not destabilize the tuple".into()));
            }
            Ok(Instability {
                verdict: Verdict::new(
                    Truth::True,
                    "Engel triangularization",
                    json!({"flag": flag_to_json(&flag), "lambda": cocharacter_to_json(&lambda)}),
                ),
                lambda: Some(lambda),
            })
        }
        None => match non_nilpotent_witness(&m, seed) {
            Some(w) => Ok(Instability {
                verdict: Verdict::new(
                    Truth::False,
                    "non-nilpotent element",
                    json!({"non_nilpotent": matrix_to_json(&w)}),
                ),
                lambda: None,
            }),
            None => Ok(Instability {
                verdict: Verdict::new(
                    Truth::Unknown,
                    "no non-nilpotent element found",
                    json!({"reason": "triangularization failed but sampling found only nilpotent elements"}),
                ),
                lambda: None,
            }),
        },
    }
}

/// Whether `x² - tr(x)·x + det(x)` has a root in `k`, by direct solving
/// (square roots when the linear term vanishes in characteristic 2).
fn quadratic_has_root(x: &Matrix) -> Result<bool> {
    let f = x.field();
    let tr = x.trace();
    let det = x.det();
    if f.characteristic() == 2 && f.is_zero(&tr) {
        let by_root = nth_root(f, &det, 2)?.is_some();
        if matches!(f.kind(), FieldKind::RationalFunctions { .. }) && by_root != is_nth_power_ratfunc(f, &det, 2)? {
            return Err(Error::Internal("square tests disagree".into()));
        }
        return Ok(by_root);
    }
    let q = Polynomial::new(f.clone(), vec![det, f.neg(&tr), f.one()]);
    let (roots, complete) = roots_in_field(&q);
    if roots.is_empty() && !complete {
        return Err(Error::NoCertifiedPath("root finding incomplete for the characteristic quadratic".into()));
    }
    Ok(!roots.is_empty())
}

/// Returns the verdict and, when plongeable, the common eigenline.
fn plongeable(h: &LieSubalgebra, seed: u64) -> Result<(Verdict, Option<Subspace>)> {
    let ctx = h.context();
    let lift = ctx.pgl_lift(h)?;
    let mut quadratics = Vec::new();
    for x in h.basis() {
        let has = quadratic_has_root(&x)?;
        quadratics.push(json!({"element": matrix_to_json(&x), "has_root": has}));
        if !has {
            return Ok((
                Verdict::new(
                    Truth::False,
                    "characteristic quadratic has no root in k",
                    json!({"quadratics": quadratics}),
                ),
                None,
            ));
        }
    }
    let module = Module::new(ctx.field(), 2, lift.basis());
    Ok(match module.is_irreducible(seed) {
        Irreducibility::Reducible { submodule } => (
            Verdict::new(
                Truth::True,
                "common eigenvector of the lift",
                json!({"eigenline": subspace_to_json(&submodule), "quadratics": quadratics}),
            ),
            Some(submodule),
        ),
        Irreducibility::Irreducible { .. } => (
            Verdict::new(Truth::False, "lift has no common eigenvector over k", json!({"quadratics": quadratics})),
            None,
        ),
        Irreducibility::Unknown { reason } => {
            (Verdict::new(Truth::Unknown, "eigenvector search undecided", json!({"reason": reason})), None)
        }
    })
}

/// For nilpotent `h̄ ⊆ pgl_2`: contained in `Lie(B)` for a Borel over `k`.
pub fn is_plongeable_pgl2(h: &LieSubalgebra, seed: u64) -> Result<Verdict> {
    let ctx = h.context();
    if ctx.kind() != GroupKind::PGL || ctx.n() != 2 {
        return Err(Error::Capability("plongeability test needs a PGL_2 context".into()));
    }
    if let Some(w) = non_nilpotent_witness(h, seed) {
        return Err(Error::Invalid(format!("subalgebra has a non-nilpotent element {}", matrix_to_json(&w))));
    }
    Ok(plongeable(h, seed)?.0)
}
