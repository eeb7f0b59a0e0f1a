//! Toral/nilpotent splittings of solvable subalgebras and the
//! characteristic-0 criteria.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::ssimp::{semisimplify, SsimpResult};
use super::{is_gcr, is_toral, require, Truth};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::groupctx::Cocharacter;
use crate::io::{cocharacter_to_json, matrices_to_json, matrix_to_json};
use crate::jordan::{is_jordan_closed, jordan_closure, jordan_parts_in};
use crate::liealg::LieSubalgebra;
use crate::modrep::{iso_witness, Module};

const SAMPLES: usize = 16;

#[derive(Clone, Debug)]
pub struct SolvableDecomposition {
    pub s: LieSubalgebra,
    pub n: LieSubalgebra,
    pub lambda: Cocharacter,
}

impl SolvableDecomposition {
    pub fn to_json(&self) -> Value {
        json!({
            "s": matrices_to_json(&self.s.basis()),
            "n": matrices_to_json(&self.n.basis()),
            "lambda": cocharacter_to_json(&self.lambda),
        })
    }
}

/// Kernel of `c_λ` on `h`, i.e. `h ∩ Lie(R_u(P_λ))`.
fn unipotent_part(h: &LieSubalgebra, lambda: &Cocharacter) -> Result<LieSubalgebra> {
    let ctx = h.context();
    let f = ctx.field();
    let basis = h.basis();
    let images: Vec<Vec<_>> = basis.iter().map(|b| ctx.to_vec(&lambda.limit(ctx, b).expect("h ⊆ Lie(P_λ)"))).collect();
    let d = basis.len();
    if d == 0 {
        return Ok(LieSubalgebra::zero(ctx));
    }
    // columns are images; kernel vectors give combinations with zero limit
    let n2 = images[0].len();
    let m = Matrix::from_rows(f, (0..n2).map(|i| images.iter().map(|v| v[i].clone()).collect()).collect())?;
    let kernel = m.kernel();
    let elems: Vec<Matrix> = kernel.iter().map(|c| h.element(c)).collect();
    LieSubalgebra::from_spanning(ctx, elems)
}

/// A maximal toral subalgebra of `within`, grown by adjoining semisimple
/// parts of centralizing elements.
fn grow_toral(within: &LieSubalgebra, seed: u64) -> Result<LieSubalgebra> {
    let ctx = within.context();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = LieSubalgebra::zero(ctx);
    loop {
        let c = within.centralizer_of(&s.basis());
        let mut probes = c.basis();
        probes.extend((0..SAMPLES).map(|_| c.random_element(&mut rng)));
        let mut grew = false;
        for y in probes {
            let ys = jordan_parts_in(ctx, &y)?.semisimple;
            if !ys.is_zero()
                && within.contains(&ys)
                && !s.contains(&ys)
                && s.basis().iter().all(|b| ctx.bracket(b, &ys).is_zero())
            {
                let mut gens = s.basis();
                gens.push(ys);
                s = LieSubalgebra::from_spanning(ctx, gens)?;
                grew = true;
                break;
            }
        }
        if !grew {
            return Ok(s);
        }
    }
}

/// Splits a Jordan-closed solvable `h` as `s ⊕ n` with `s` toral and `n`
/// the nilpotent elements, `n = h ∩ Lie(R_u(P_λ))` for `λ` from
/// [`semisimplify`].
pub fn solvable_decomposition(h: &LieSubalgebra, seed: u64) -> Result<SolvableDecomposition> {
    let ctx = h.context();
    let f = ctx.field();
    if !(f.characteristic() == 0 || (f.is_perfect() && ctx.capabilities().ideal_claims)) {
        return Err(Error::Capability(
            "solvable decomposition needs characteristic 0 or a perfect field with p > n".into(),
        ));
    }
    if !h.is_solvable() {
        return Err(Error::Invalid("subalgebra is not solvable".into()));
    }
    if !is_jordan_closed(h, SAMPLES, seed)?.is_certified() {
        return Err(Error::Invalid("subalgebra is not Jordan-closed".into()));
    }
    let ss = semisimplify(h, seed)?;
    let n = unipotent_part(h, &ss.lambda)?;
    // h/n ≅ c_λ(h) is toral, so n holds every nilpotent element of h
    if !require(&is_toral(&ss.image)?, "torality of c_λ(h)")? {
        return Err(Error::Internal("semisimplification of a solvable subalgebra is not toral".into()));
    }
    if n.basis().iter().any(|x| !jordan_parts_in(ctx, x).map(|p| p.semisimple.is_zero()).unwrap_or(false)) {
        return Err(Error::Internal("kernel of c_λ contains a non-nilpotent element".into()));
    }
    let s = grow_toral(h, seed)?;
    if s.dim() + n.dim() != h.dim() || !s.space().intersect(n.space()).is_zero() {
        return Err(Error::Internal(format!("toral part of dimension {} does not complement n", s.dim())));
    }
    Ok(SolvableDecomposition { s, n, lambda: ss.lambda })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Char0Report {
    pub adjoint_semisimple: bool,
    pub gcr: bool,
    pub radical_toral: bool,
    pub radical: Vec<Matrix>,
}

impl Char0Report {
    pub fn to_json(&self) -> Value {
        json!({
            "adjoint_semisimple": self.adjoint_semisimple,
            "gcr": self.gcr,
            "radical_toral": self.radical_toral,
            "radical": matrices_to_json(&self.radical),
        })
    }
}

/// The three characteristic-0 routes: `g` semisimple under `ad h`, the
/// natural module semisimple, `rad(h)` toral. They must agree.
pub fn char0_criterion(h: &LieSubalgebra, seed: u64) -> Result<Char0Report> {
    let ctx = h.context();
    if ctx.field().characteristic() != 0 {
        return Err(Error::Capability("the three-way criterion needs characteristic 0".into()));
    }
    let g = LieSubalgebra::full(ctx);
    let ads: Vec<Matrix> = h.basis().iter().map(|x| g.ad_matrix(x)).collect();
    let adjoint = Module::new(ctx.field(), g.dim(), ads);
    let adjoint_semisimple = adjoint
        .is_semisimple(seed)
        .as_bool()
        .ok_or_else(|| Error::Internal("adjoint semisimplicity undecided in characteristic 0".into()))?;
    let gcr = require(&is_gcr(h, seed)?, "complete reducibility")?;
    let rad = h.solvable_radical_char0()?;
    let radical_toral = require(&is_toral(&rad)?, "torality of the radical")?;
    if adjoint_semisimple != gcr || gcr != radical_toral {
        return Err(Error::Internal(format!(
            "criteria disagree: adjoint {adjoint_semisimple}, natural {gcr}, radical toral {radical_toral}"
        )));
    }
    Ok(Char0Report { adjoint_semisimple, gcr, radical_toral, radical: rad.basis() })
}

#[derive(Clone, Debug)]
pub struct ExplicitSsimp {
    /// Levi complement found as the last derived term of `h^J`, if that
    /// term is semisimple.
    pub levi: Option<LieSubalgebra>,
    pub toral: Option<LieSubalgebra>,
    /// `k ⊕ s`, or the image of [`semisimplify`] on heuristic failure.
    pub result: LieSubalgebra,
    /// `g` with `g·x·g⁻¹ = c_λ(x)` on a basis of `k ⊕ s`.
    pub witness: Option<Matrix>,
    pub reference: SsimpResult,
    pub status: String,
}

impl ExplicitSsimp {
    pub fn to_json(&self) -> Value {
        json!({
            "levi": self.levi.as_ref().map(|k| matrices_to_json(&k.basis())),
            "toral": self.toral.as_ref().map(|s| matrices_to_json(&s.basis())),
            "result": matrices_to_json(&self.result.basis()),
            "witness": self.witness.as_ref().map(matrix_to_json),
            "reference": self.reference.to_json(),
            "status": self.status,
        })
    }
}

/// `k ⊕ s` from the Jordan closure: `k` a Levi complement of `rad(h^J)`,
/// `s` a maximal toral subalgebra of `rad(h)^J` commuting with `k`. The
/// result is checked to be conjugate to `c_λ(h)` for the `λ` of
/// [`semisimplify`], by an explicit witness.
pub fn char0_explicit_ssimp(h: &LieSubalgebra, seed: u64) -> Result<ExplicitSsimp> {
    let ctx = h.context();
    if ctx.field().characteristic() != 0 {
        return Err(Error::Capability("explicit semisimplification needs characteristic 0".into()));
    }
    let reference = semisimplify(h, seed)?;
    let fallback = |status: &str, reference: SsimpResult| ExplicitSsimp {
        levi: None,
        toral: None,
        result: reference.image.clone(),
        witness: None,
        reference,
        status: status.to_string(),
    };
    let hj = jordan_closure(h, SAMPLES, seed)?.algebra;
    let last = hj.derived_series().last().cloned().unwrap_or_else(|| hj.clone());
    let k = last;
    if !k.is_zero() && !k.solvable_radical_char0()?.is_zero() {
        return Ok(fallback("Levi complement not found by derived-series heuristic", reference));
    }
    let mj = jordan_closure(&h.solvable_radical_char0()?, SAMPLES, seed)?.algebra;
    let within = mj.centralizer_of(&k.basis());
    let s = grow_toral(&within, seed)?;
    let mut gens = k.basis();
    gens.extend(s.basis());
    let result = LieSubalgebra::from_spanning(ctx, gens)?;
    if result.dim() + unipotent_part(&mj, &reference.lambda)?.dim() != hj.dim() {
        return Ok(fallback("toral part of rad(h)^J commuting with k is too small", reference));
    }
    if is_gcr(&result, seed)?.value != Truth::True {
        return Err(Error::Internal("k ⊕ s is not G-cr".into()));
    }
    let xs = result.basis();
    let ys: Vec<Matrix> = match xs.iter().map(|x| reference.lambda.limit(ctx, x)).collect::<Option<Vec<_>>>() {
        Some(ys) => ys,
        None => return Err(Error::Internal("k ⊕ s is not in the parabolic of λ".into())),
    };
    let span_y = Subspace::span(ctx.field(), ctx.n() * ctx.n(), ys.iter().map(|y| ctx.to_vec(y)));
    if &span_y != reference.image.space() {
        return Err(Error::Internal("c_λ(k ⊕ s) differs from c_λ(h)".into()));
    }
    let witness = iso_witness(ctx.field(), &xs, &ys, false, seed).witness().cloned();
    if witness.is_none() {
        return Ok(ExplicitSsimp {
            levi: Some(k),
            toral: Some(s),
            result,
            witness: None,
            reference,
            status: "conjugacy witness not found within budget".into(),
        });
    }
    Ok(ExplicitSsimp { levi: Some(k), toral: Some(s), result, witness, reference, status: "ok".into() })
}
