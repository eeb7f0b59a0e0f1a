//! `k`-semisimplification via cocharacters adapted to module flags.

use serde_json::{json, Value};

use super::{is_gcr, require, Truth, Verdict};
use crate::error::{Error, Result};
use crate::exactla::{Flag, Matrix};
use crate::groupctx::{Cocharacter, GroupKind};
use crate::io::{cocharacter_to_json, flag_to_json, matrices_to_json};
use crate::liealg::LieSubalgebra;
use crate::modrep::{iso_witness, pgl_iso_witness, IsoSearch, Module};

#[derive(Clone, Debug)]
pub struct SsimpResult {
    pub lambda: Cocharacter,
    pub flag: Flag,
    /// `c_λ(h)`.
    pub image: LieSubalgebra,
    /// `c_λ` applied to the stored generators of `h`.
    pub tuple_image: Vec<Matrix>,
    /// The verdict `is_gcr(image) = true`.
    pub certificate: Verdict,
}

impl SsimpResult {
    pub fn to_json(&self) -> Value {
        json!({
            "lambda": cocharacter_to_json(&self.lambda),
            "flag": flag_to_json(&self.flag),
            "image": matrices_to_json(&self.image.basis()),
            "tuple_image": matrices_to_json(&self.tuple_image),
            "certificate": self.certificate.to_json(),
        })
    }
}

/// A `k`-semisimplification of `h`: `h` itself when G-cr, otherwise
/// `c_λ(h)` for `λ` adapted to the radical series of the natural module.
pub fn semisimplify(h: &LieSubalgebra, seed: u64) -> Result<SsimpResult> {
    let ctx = h.context();
    let verdict = is_gcr(h, seed)?;
    if verdict.value == Truth::True {
        return Ok(SsimpResult {
            lambda: Cocharacter::central(ctx),
            flag: Flag::trivial(ctx.n()),
            image: h.clone(),
            tuple_image: h.generators().to_vec(),
            certificate: verdict,
        });
    }
    let module = Module::of_subalgebra(h)?;
    let flag = match module.radical_series() {
        Ok(f) => f,
        Err(Error::RadicalUnavailable(_)) => module.composition_series(seed)?,
        Err(e) => return Err(e),
    };
    semisimplify_along(h, &flag, seed)
}

/// `c_λ(h)` for `λ` adapted to a given `h`-stable flag, certified G-cr.
pub fn semisimplify_along(h: &LieSubalgebra, flag: &Flag, seed: u64) -> Result<SsimpResult> {
    let ctx = h.context();
    let lambda = Cocharacter::from_flag(ctx, flag)?;
    let image = lambda.c_lambda(h)?;
    let tuple_image: Vec<Matrix> = h.generators().iter().map(|g| lambda.limit(ctx, g).expect("h ⊆ Lie(P_λ)")).collect();
    let certificate = is_gcr(&image, seed)?;
    if !require(&certificate, "complete reducibility of the image")? {
        return Err(Error::Invalid("the flag does not yield a k-semisimplification".into()));
    }
    Ok(SsimpResult { lambda, flag: flag.clone(), image, tuple_image, certificate })
}

/// Searches `g ∈ G(k)` with `g·c_{λ1}(x_i)·g⁻¹ = c_{λ2}(x_i)` for the
/// stored generators `x_i` of `h`. A returned witness has been checked.
pub fn ssimp_uniqueness_check(h: &LieSubalgebra, r1: &SsimpResult, r2: &SsimpResult, seed: u64) -> Result<IsoSearch> {
    let ctx = h.context();
    let k = h.generators().len();
    if r1.tuple_image.len() != k || r2.tuple_image.len() != k {
        return Err(Error::Invalid("results were not built from the generators of h".into()));
    }
    let (xs, ys) = (&r1.tuple_image, &r2.tuple_image);
    let search = match ctx.kind() {
        GroupKind::GL => iso_witness(ctx.field(), xs, ys, false, seed),
        GroupKind::SL => iso_witness(ctx.field(), xs, ys, true, seed),
        GroupKind::PGL => pgl_iso_witness(ctx.field(), xs, ys, seed),
    };
    if let Some(g) = search.witness().or(match &search {
        IsoSearch::GlOnly(g) => Some(g),
        _ => None,
    }) {
        let gi = g.inverse()?;
        let ok = xs.iter().zip(ys).all(|(x, y)| ctx.canonicalize(&g.mul(x).mul(&gi)) == *y);
        if !ok {
            return Err(Error::Internal("conjugacy witness failed verification".into()));
        }
    }
    Ok(search)
}

#[derive(Clone, Debug)]
pub struct IdealEntry {
    pub ideal: LieSubalgebra,
    pub gcr: Truth,
    /// `c_λ(m)` for the `λ` of `semisimplify(h)`.
    pub image: LieSubalgebra,
    pub image_gcr: Truth,
    pub image_is_ideal: bool,
}

#[derive(Clone, Debug)]
pub struct IdealsReport {
    pub h_gcr: Truth,
    pub lambda: Cocharacter,
    pub entries: Vec<IdealEntry>,
    /// Every ideal inherits complete reducibility (when `h` is G-cr) and
    /// `λ` yields a semisimplification of every ideal.
    pub holds: bool,
}

impl IdealsReport {
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                json!({
                    "ideal": matrices_to_json(&e.ideal.basis()),
                    "gcr": truth_json(e.gcr),
                    "image": matrices_to_json(&e.image.basis()),
                    "image_gcr": truth_json(e.image_gcr),
                    "image_is_ideal": e.image_is_ideal,
                })
            })
            .collect();
        json!({
            "h_gcr": truth_json(self.h_gcr),
            "lambda": cocharacter_to_json(&self.lambda),
            "ideals": entries,
            "holds": self.holds,
        })
    }
}

fn truth_json(t: Truth) -> Value {
    t.as_bool().map_or(json!("unknown"), Value::Bool)
}

/// Checks ideal inheritance on the ideals generated by single basis
/// elements and by pairs of them.
pub fn ideals_gcr(h: &LieSubalgebra, seed: u64) -> Result<IdealsReport> {
    let ctx = h.context();
    let f = ctx.field();
    if !(f.characteristic() == 0 || f.is_finite()) {
        return Err(Error::Capability("ideal claims need characteristic 0 or a finite field".into()));
    }
    if !ctx.capabilities().ideal_claims {
        let hint = if ctx.kind() == GroupKind::PGL && ctx.n() == 2 && f.characteristic() == 2 {
            "; countermodel: in pgl_2 over GF(2), <e,f> is G-irreducible while its ideal <e> is not G-cr"
        } else {
            "; countermodel: in gl_p over GF(p), <diag(0,1,..,p-1), cyclic shift> is irreducible with a non-G-cr ideal"
        };
        return Err(Error::Capability(format!(
            "ideal inheritance is not claimed for {} {} over {f} (needs p > n){hint}",
            ctx.kind(),
            ctx.n()
        )));
    }
    let ss = semisimplify(h, seed)?;
    let h_gcr = is_gcr(h, seed)?.value;
    let basis = h.basis();
    let mut ideals: Vec<LieSubalgebra> = Vec::new();
    let mut push = |m: LieSubalgebra| {
        if !m.is_zero() && !ideals.iter().any(|i| i.space() == m.space()) {
            ideals.push(m);
        }
    };
    for (i, a) in basis.iter().enumerate() {
        push(h.ideal_generated(std::slice::from_ref(a)));
        for b in &basis[i + 1..] {
            push(h.ideal_generated(&[a.clone(), b.clone()]));
        }
    }
    let mut entries = Vec::new();
    let mut holds = true;
    for m in ideals {
        let gcr = is_gcr(&m, seed)?.value;
        let image = ss.lambda.c_lambda(&m)?;
        let image_gcr = is_gcr(&image, seed)?.value;
        let image_is_ideal = ss.image.is_ideal(&image);
        holds &= image_gcr == Truth::True && image_is_ideal;
        if h_gcr == Truth::True {
            holds &= gcr == Truth::True;
        }
        entries.push(IdealEntry { ideal: m, gcr, image, image_gcr, image_is_ideal });
    }
    Ok(IdealsReport { h_gcr, lambda: ss.lambda, entries, holds })
}
