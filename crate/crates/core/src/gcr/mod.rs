//! Complete-reducibility verdicts for subalgebras of `gl_n`, `sl_n`, `pgl_n`,
//! the semisimplification constructor and the characteristic-0 suite.
//!
//! Every verdict is decided through the natural module `k^n` (for `PGL_n`,
//! the module of the lift with scalars adjoined).

mod char0;
mod instability;
mod ssimp;

#[cfg(test)]
mod tests;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::groupctx::GroupKind;
use crate::io::{matrices_to_json, matrix_to_json, subspace_to_json};
use crate::jordan::is_semisimple_element;
use crate::liealg::LieSubalgebra;
use crate::modrep::{Decomposability, Irreducibility, Module, Semisimplicity};

pub use char0::{
    char0_criterion, char0_explicit_ssimp, solvable_decomposition, Char0Report, ExplicitSsimp, SolvableDecomposition,
};
pub use instability::{instability_test, is_plongeable_pgl2, Instability};
pub use ssimp::{
    ideals_gcr, semisimplify, semisimplify_along, ssimp_uniqueness_check, IdealEntry, IdealsReport, SsimpResult,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl Truth {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Truth::True => Some(true),
            Truth::False => Some(false),
            Truth::Unknown => None,
        }
    }
}

/// A decision with the criterion that produced it and the evidence.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub value: Truth,
    pub provenance: String,
    pub certificate: Value,
}

impl Verdict {
    fn new(value: Truth, provenance: impl Into<String>, certificate: Value) -> Self {
        Verdict { value, provenance: provenance.into(), certificate }
    }

    pub fn as_bool(&self) -> Option<bool> {
        self.value.as_bool()
    }

    pub fn to_json(&self) -> Value {
        let v = match self.value {
            Truth::True => json!(true),
            Truth::False => json!(false),
            Truth::Unknown => json!("unknown"),
        };
        json!({"verdict": v, "provenance": self.provenance, "certificate": self.certificate})
    }
}

/// `h` is G-completely reducible over `k` iff its natural module is
/// semisimple.
pub fn is_gcr(h: &LieSubalgebra, seed: u64) -> Result<Verdict> {
    let m = Module::of_subalgebra(h)?;
    Ok(match m.is_semisimple(seed) {
        Semisimplicity::Semisimple { certificate } => {
            Verdict::new(Truth::True, "natural module is semisimple", json!({"method": certificate}))
        }
        Semisimplicity::NotSemisimple { certificate, radical } => {
            let mut cert = json!({"method": certificate});
            if let Some(r) = radical {
                let n = m.n();
                let mats: Vec<Matrix> = r.basis().iter().map(|v| Matrix::from_flat(m.field(), n, v)).collect();
                cert["radical"] = matrices_to_json(&mats);
                if let Ok(series) = m.radical_series() {
                    cert["radical_series"] = crate::io::flag_to_json(&series);
                }
            }
            Verdict::new(Truth::False, "natural module is not semisimple", cert)
        }
        Semisimplicity::Unknown { reason } => {
            Verdict::new(Truth::Unknown, "semisimplicity undecided", json!({"reason": reason}))
        }
    })
}

/// G-irreducible: no proper parabolic contains `h`, i.e. `k^n` is simple.
pub fn is_gir(h: &LieSubalgebra, seed: u64) -> Result<Verdict> {
    let m = Module::of_subalgebra(h)?;
    Ok(match m.is_irreducible(seed) {
        Irreducibility::Irreducible { absolutely, certificate } => Verdict::new(
            Truth::True,
            "natural module is irreducible",
            json!({"method": certificate, "absolutely": absolutely, "hull_dim": m.hull().dim()}),
        ),
        Irreducibility::Reducible { submodule } => Verdict::new(
            Truth::False,
            "invariant subspace",
            json!({"invariant_subspace": subspace_to_json(&submodule)}),
        ),
        Irreducibility::Unknown { reason } => {
            Verdict::new(Truth::Unknown, "irreducibility undecided", json!({"reason": reason}))
        }
    })
}

/// G-indecomposable: no proper Levi contains `h`, i.e. `End_h(k^n)` has no
/// nontrivial idempotent.
pub fn is_gind(h: &LieSubalgebra, seed: u64) -> Result<Verdict> {
    let m = Module::of_subalgebra(h)?;
    Ok(match m.is_indecomposable(seed) {
        Decomposability::Indecomposable { certificate } => {
            Verdict::new(Truth::True, "natural module is indecomposable", json!({"method": certificate}))
        }
        Decomposability::Decomposable { idempotent, summands } => Verdict::new(
            Truth::False,
            "idempotent in the commutant",
            json!({
                "idempotent": matrix_to_json(&idempotent),
                "summands": [subspace_to_json(&summands.0), subspace_to_json(&summands.1)],
            }),
        ),
        Decomposability::Unknown { reason } => {
            Verdict::new(Truth::Unknown, "idempotent search inconclusive", json!({"reason": reason}))
        }
    })
}

/// Toral over `k̄`: abelian and spanned by semisimple elements.
pub fn is_toral(h: &LieSubalgebra) -> Result<Verdict> {
    let lifted = match h.context().kind() {
        GroupKind::PGL => h.context().pgl_lift(h)?,
        _ => h.clone(),
    };
    let basis = lifted.basis();
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i + 1..] {
            if !x.bracket(y).is_zero() {
                return Ok(Verdict::new(
                    Truth::False,
                    "not abelian",
                    json!({"non_commuting": [matrix_to_json(x), matrix_to_json(y)]}),
                ));
            }
        }
    }
    for x in &basis {
        if !is_semisimple_element(x) {
            return Ok(Verdict::new(
                Truth::False,
                "element with inseparable minimal polynomial",
                json!({"not_semisimple": matrix_to_json(x)}),
            ));
        }
    }
    Ok(Verdict::new(Truth::True, "toral over k̄", json!({"commuting_semisimple_basis": matrices_to_json(&basis)})))
}

fn require(v: &Verdict, what: &str) -> Result<bool> {
    v.as_bool().ok_or_else(|| Error::NoCertifiedPath(format!("{what} is undecided: {}", v.certificate)))
}
