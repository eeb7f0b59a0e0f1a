//! Brute-force ground truth over small finite fields: all flags of `k^n`,
//! the definition of complete reducibility executed literally, the
//! subcomplex of parabolics containing `h`, and fixed simplices of its
//! stabilizer.
//!
//! Everything runs in the `GL_n` avatar: `SL_n` subalgebras are used as
//! they are, `PGL_n` subalgebras through their lift.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactla::{Flag, Matrix, Subspace};
use crate::fields::{Elem, Field};
use crate::groupctx::{GroupContext, GroupKind};
use crate::io::flag_to_json;
use crate::liealg::LieSubalgebra;

const FLAG_GUARD: u128 = 1 << 20;

fn guard(f: &Field, n: usize) -> Result<u128> {
    let q = f.order().ok_or_else(|| Error::Capability("the oracle needs a finite field".into()))?;
    match q.checked_pow(n as u32) {
        Some(c) if c <= FLAG_GUARD => Ok(q),
        _ => Err(Error::SizeGuard(format!("{q}^{n} exceeds 2^20"))),
    }
}

/// All `d`-dimensional subspaces of `k^n`, enumerated by reduced echelon
/// form.
pub fn subspaces_of_dim(f: &Field, n: usize, d: usize) -> Result<Vec<Subspace>> {
    guard(f, n)?;
    let elems = f.elements()?;
    let mut out = Vec::new();
    for pivots in combinations(n, d) {
        // free positions: (row, col) with col > pivot[row] and col not a pivot
        let free: Vec<(usize, usize)> =
            (0..d).flat_map(|r| ((pivots[r] + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c))).collect();
        let mut idx = vec![0usize; free.len()];
        loop {
            let mut rows = vec![vec![f.zero(); n]; d];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = f.one();
            }
            for (k, &(r, c)) in free.iter().enumerate() {
                rows[r][c] = elems[idx[k]].clone();
            }
            out.push(Subspace::span(f, n, rows));
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < elems.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    Ok(out)
}

fn combinations(n: usize, d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![vec![]];
    }
    if d > n {
        return vec![];
    }
    let mut out = Vec::new();
    for rest in combinations(n - 1, d - 1) {
        let mut c = rest;
        c.push(n - 1);
        out.push(c);
    }
    out.extend(combinations(n - 1, d));
    out.sort();
    out
}

fn flag_key(flag: &Flag) -> Vec<Vec<Vec<Elem>>> {
    flag.steps().iter().map(|s| s.basis().to_vec()).collect()
}

fn sort_flags(flags: &mut [Flag]) {
    flags.sort_by_cached_key(flag_key);
}

/// Flags of `k^n` with the given dimension sequence, or all nontrivial
/// flags when `dims` is `None`. Sorted, without duplicates.
pub fn enumerate_flags(f: &Field, n: usize, dims: Option<&[usize]>) -> Result<Vec<Flag>> {
    guard(f, n)?;
    let sequences: Vec<Vec<usize>> = match dims {
        Some(d) => {
            if d.windows(2).any(|w| w[0] >= w[1]) || d.iter().any(|&x| x == 0 || x >= n) {
                return Err(Error::InvalidFlag(format!("bad dimension sequence {d:?}")));
            }
            vec![d.to_vec()]
        }
        None => (1u32..(1 << (n - 1))).map(|mask| (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect()).collect(),
    };
    let mut by_dim: Vec<Vec<Subspace>> = Vec::with_capacity(n);
    for d in 0..n {
        by_dim.push(if d == 0 { vec![] } else { subspaces_of_dim(f, n, d)? });
    }
    let mut out: Vec<Flag> = sequences
        .par_iter()
        .flat_map_iter(|seq| {
            let mut chains: Vec<Vec<Subspace>> = vec![vec![]];
            for &d in seq {
                chains = chains
                    .into_iter()
                    .flat_map(|c| {
                        by_dim[d]
                            .iter()
                            .filter(|s| c.last().is_none_or(|prev| s.contains_space(prev)))
                            .map(|s| [c.clone(), vec![s.clone()]].concat())
                            .collect::<Vec<_>>()
                    })
                    .collect();
            }
            chains.into_iter().map(|c| Flag::new(n, c).expect("strict chain"))
        })
        .collect();
    sort_flags(&mut out);
    Ok(out)
}

/// The natural-module generators of `h` in the `GL_n` avatar.
fn avatar(h: &LieSubalgebra) -> Result<(GroupContext, Vec<Matrix>)> {
    let ctx = h.context();
    guard(ctx.field(), ctx.n())?;
    let gens = match ctx.kind() {
        GroupKind::PGL => ctx.pgl_lift(h)?.basis(),
        _ => h.basis(),
    };
    Ok((ctx.gl_context(), gens))
}

fn contained(space: &Subspace, ctx: &GroupContext, xs: &[Matrix]) -> bool {
    xs.iter().all(|x| space.contains(&ctx.to_vec(x)))
}

/// Outcome of [`def_based_gcr`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinitionCheck {
    pub gcr: bool,
    /// A flag whose parabolic contains `h` but none of whose Levis does.
    pub witness: Option<Flag>,
    pub parabolics_checked: usize,
}

/// A Levi splitting `W_1 ⊕ … ⊕ W_r` of the flag with every `W_i` stable
/// under `xs`. Each `W_i` complements `V_{i-1}` in `V_i` independently.
fn invariant_splitting(f: &Field, n: usize, flag: &Flag, xs: &[Matrix]) -> Result<Option<Vec<Subspace>>> {
    let mut prev = Subspace::zero(f, n);
    let mut parts = Vec::new();
    for step in flag.steps().iter().chain([&Subspace::full(f, n)]) {
        let found = prev.complements_within(step)?.into_iter().find(|w| xs.iter().all(|x| w.is_invariant(x)));
        match found {
            Some(w) => parts.push(w),
            None => return Ok(None),
        }
        prev = step.clone();
    }
    Ok(Some(parts))
}

/// For every parabolic `P` with `h ⊆ Lie(P)`, look for a Levi `L` of `P`
/// with `h ⊆ Lie(L)`.
pub fn def_based_gcr(h: &LieSubalgebra) -> Result<DefinitionCheck> {
    let (gl, xs) = avatar(h)?;
    let f = gl.field().clone();
    let n = gl.n();
    let flags = enumerate_flags(&f, n, None)?;
    let results: Vec<Result<Option<(usize, bool)>>> = flags
        .par_iter()
        .enumerate()
        .map(|(i, flag)| {
            if !contained(&gl.lie_parabolic(flag)?, &gl, &xs) {
                return Ok(None);
            }
            let ok = match invariant_splitting(&f, n, flag, &xs)? {
                Some(parts) => {
                    if !contained(&gl.lie_levi(&parts)?, &gl, &xs) {
                        return Err(Error::Internal("invariant splitting does not give a Levi containing h".into()));
                    }
                    true
                }
                None => false,
            };
            Ok(Some((i, ok)))
        })
        .collect();
    let mut checked = 0;
    let mut witness = None;
    for r in results {
        if let Some((i, ok)) = r? {
            checked += 1;
            if !ok && witness.is_none() {
                witness = Some(flags[i].clone());
            }
        }
    }
    Ok(DefinitionCheck { gcr: witness.is_none(), witness, parabolics_checked: checked })
}

/// The flags `F` with `h ⊆ Lie(P_F)` and the opposite pairs among them.
#[derive(Clone, Debug)]
pub struct BuildingSubcomplex {
    pub n: usize,
    pub q: u128,
    pub kind: GroupKind,
    pub simplices: Vec<Flag>,
    /// Index pairs `(i, j)`, `i < j`, of opposite simplices.
    pub opposite: Vec<(usize, usize)>,
}

impl BuildingSubcomplex {
    /// Every coarsening of a member is a member.
    pub fn is_closed(&self) -> bool {
        self.simplices.iter().all(|s| {
            let r = s.steps().len();
            (1u32..(1 << r)).all(|mask| {
                let keep: Vec<usize> = (0..r).filter(|i| mask & (1 << i) != 0).collect();
                self.simplices.contains(&s.coarsen(&keep))
            })
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "q": self.q.to_string(),
            "kind": self.kind.to_string(),
            "simplices": self.simplices.iter().map(flag_to_json).collect::<Vec<_>>(),
            "opposite_pairs": self.opposite.iter().map(|(i, j)| json!([i, j])).collect::<Vec<_>>(),
        })
    }
}

pub fn subcomplex(h: &LieSubalgebra) -> Result<BuildingSubcomplex> {
    let (gl, xs) = avatar(h)?;
    let f = gl.field().clone();
    let n = gl.n();
    let q = f.order().unwrap();
    let all = enumerate_flags(&f, n, None)?;
    let keep: Vec<Result<bool>> = all.par_iter().map(|fl| Ok(contained(&gl.lie_parabolic(fl)?, &gl, &xs))).collect();
    let mut simplices = Vec::new();
    for (fl, k) in all.into_iter().zip(keep) {
        if k? {
            simplices.push(fl);
        }
    }
    let pairs: Vec<(usize, usize)> =
        (0..simplices.len()).flat_map(|i| (i + 1..simplices.len()).map(move |j| (i, j))).collect();
    let opp: Vec<Result<bool>> =
        pairs.par_iter().map(|&(i, j)| gl.opposite_flags(&simplices[i], &simplices[j])).collect();
    let mut opposite = Vec::new();
    for (p, o) in pairs.into_iter().zip(opp) {
        if o? {
            opposite.push(p);
        }
    }
    Ok(BuildingSubcomplex { n, q, kind: h.context().kind(), simplices, opposite })
}

/// Every simplex of `Σ` has an opposite simplex in `Σ`.
pub fn is_delta_cr(sigma: &BuildingSubcomplex) -> bool {
    let mut has = vec![false; sigma.simplices.len()];
    for &(i, j) in &sigma.opposite {
        has[i] = true;
        has[j] = true;
    }
    has.into_iter().all(|b| b)
}

/// `|GL_n(q)|`.
pub fn gl_order(n: usize, q: u128) -> Option<u128> {
    let qn = q.checked_pow(n as u32)?;
    (0..n).try_fold(1u128, |acc, i| acc.checked_mul(qn - q.pow(i as u32)))
}

/// All of `GL_n(k)` for a finite field, in a deterministic order.
pub fn enumerate_gl(f: &Field, n: usize, budget: u128) -> Result<Vec<Matrix>> {
    let q = f.order().ok_or_else(|| Error::Capability("group enumeration needs a finite field".into()))?;
    let size = gl_order(n, q).unwrap_or(u128::MAX);
    if size > budget {
        return Err(Error::SizeGuard(format!("|GL_{n}({q})| = {size} exceeds the budget {budget}")));
    }
    // columns chosen one at a time outside the span of the previous ones
    let vectors: Vec<Vec<Elem>> = {
        let elems = f.elements()?;
        let mut vs = vec![vec![]];
        for _ in 0..n {
            vs = vs
                .into_iter()
                .flat_map(|v: Vec<Elem>| elems.iter().map(move |e| [v.clone(), vec![e.clone()]].concat()))
                .collect();
        }
        vs
    };
    let mut partial: Vec<Vec<Vec<Elem>>> = vec![vec![]];
    for _ in 0..n {
        partial = partial
            .into_par_iter()
            .flat_map_iter(|cols| {
                let span = Subspace::span(f, n, cols.clone());
                vectors
                    .iter()
                    .filter(|v| !span.contains(v))
                    .map(|v| [cols.clone(), vec![v.clone()]].concat())
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    Ok(partial.into_iter().map(|cols| Matrix::from_rows(f, cols).unwrap().transpose()).collect())
}

/// Exhaustive search for `g ∈ GL_n(k)` with `g·x_i·g⁻¹ = y_i` in `Lie(G)`
/// (canonical representatives for `PGL_n`).
pub fn conjugating_element(ctx: &GroupContext, xs: &[Matrix], ys: &[Matrix], budget: u128) -> Result<Option<Matrix>> {
    let group = enumerate_gl(ctx.field(), ctx.n(), budget)?;
    let ys: Vec<Matrix> = ys.iter().map(|y| ctx.canonicalize(y)).collect();
    Ok(group.into_par_iter().find_first(|g| {
        let gi = g.inverse().unwrap();
        xs.iter().zip(&ys).all(|(x, y)| ctx.canonicalize(&g.mul(x).mul(&gi)) == *y)
    }))
}

fn moves_flag(g: &Matrix, flag: &Flag) -> bool {
    flag.steps().iter().any(|s| s.basis().iter().any(|v| !s.contains(&g.mul_vec(v))))
}

/// When `Σ` is not Δ-cr: a simplex of `Σ` fixed by every element of
/// `N_{G(k)}(h)`. `Ok(None)` for Δ-cr input.
pub fn centre_search(h: &LieSubalgebra, budget: u128) -> Result<Option<Flag>> {
    let sigma = subcomplex(h)?;
    if is_delta_cr(&sigma) {
        return Ok(None);
    }
    let (gl, xs) = avatar(h)?;
    let f = gl.field().clone();
    let space = Subspace::span(&f, gl.n() * gl.n(), xs.iter().map(|x| gl.to_vec(x)));
    let group = enumerate_gl(&f, gl.n(), budget)?;
    let normalizer: Vec<Matrix> = group
        .into_par_iter()
        .filter(|g| {
            let gi = g.inverse().unwrap();
            xs.iter().all(|x| space.contains(&gl.to_vec(&g.mul(x).mul(&gi))))
        })
        .collect();
    let fixed = sigma.simplices.iter().find(|fl| normalizer.iter().all(|g| !moves_flag(g, fl)));
    match fixed {
        Some(fl) => Ok(Some(fl.clone())),
        None => Err(Error::Internal("no simplex of the subcomplex is fixed by the normalizer".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcr::is_gcr;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn flag_counts() {
        assert_eq!(enumerate_flags(&f2(), 2, Some(&[1])).unwrap().len(), 3);
        assert_eq!(enumerate_flags(&f2(), 3, Some(&[1, 2])).unwrap().len(), 21);
        assert_eq!(enumerate_flags(&f2(), 3, Some(&[1])).unwrap().len(), 7);
        assert_eq!(enumerate_flags(&f2(), 3, None).unwrap().len(), 35);
        let f3 = Field::prime(3).unwrap();
        assert_eq!(enumerate_flags(&f3, 3, Some(&[2])).unwrap().len(), 13);
        let f4 = Field::extension_str(&f2(), "x^2+x+1", "x").unwrap();
        assert_eq!(enumerate_flags(&f4, 2, None).unwrap().len(), 5);
        assert!(matches!(enumerate_flags(&f2(), 21, None), Err(Error::SizeGuard(_))));
        assert_eq!(gl_order(3, 2), Some(168));
        assert_eq!(enumerate_gl(&f2(), 3, 1000).unwrap().len(), 168);
        assert_eq!(enumerate_gl(&f4, 2, 1000).unwrap().len(), 180);
    }

    #[test]
    fn definition_examples() {
        let ctx = GroupContext::gl(2, &f2());
        let e = LieSubalgebra::bracket_closure(&ctx, &[Matrix::unit(&f2(), 2, 0, 1)]).unwrap();
        let d = def_based_gcr(&e).unwrap();
        assert!(!d.gcr);
        assert_eq!(d.witness.unwrap(), Flag::standard(&f2(), 2, &[1]).unwrap());
        let sigma = subcomplex(&e).unwrap();
        assert_eq!(sigma.simplices, vec![Flag::standard(&f2(), 2, &[1]).unwrap()]);
        assert!(!is_delta_cr(&sigma));
        assert_eq!(centre_search(&e, 1000).unwrap(), Some(Flag::standard(&f2(), 2, &[1]).unwrap()));

        let f3 = Field::prime(3).unwrap();
        let ctx3 = GroupContext::gl(2, &f3);
        let d = LieSubalgebra::bracket_closure(&ctx3, &[Matrix::unit(&f3, 2, 0, 0)]).unwrap();
        assert!(def_based_gcr(&d).unwrap().gcr);

        let pgl = GroupContext::pgl(2, &f2());
        let h = LieSubalgebra::bracket_closure(&pgl, &[Matrix::unit(&f2(), 2, 0, 1), Matrix::unit(&f2(), 2, 1, 0)])
            .unwrap();
        let d = def_based_gcr(&h).unwrap();
        assert!(d.gcr && d.parabolics_checked == 0);

        let zero = LieSubalgebra::zero(&ctx);
        let sigma = subcomplex(&zero).unwrap();
        assert_eq!(sigma.simplices.len(), 3);
        assert!(is_delta_cr(&sigma) && sigma.is_closed());
        assert_eq!(centre_search(&zero, 1000).unwrap(), None);
    }

    #[test]
    fn oracles_agree_with_radical_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = f2();
        let ctx = GroupContext::gl(3, &f);
        for _ in 0..30 {
            let k = rng.gen_range(1..=2);
            let gens: Vec<Matrix> = (0..k)
                .map(|_| {
                    let v: Vec<Elem> = (0..9).map(|_| f.random(&mut rng)).collect();
                    Matrix::from_flat(&f, 3, &v)
                })
                .collect();
            let h = LieSubalgebra::bracket_closure(&ctx, &gens).unwrap();
            let d = def_based_gcr(&h).unwrap();
            let sigma = subcomplex(&h).unwrap();
            assert!(sigma.is_closed());
            assert_eq!(d.gcr, is_delta_cr(&sigma));
            assert_eq!(Some(d.gcr), is_gcr(&h, 0).unwrap().as_bool());
        }
    }

    #[test]
    fn conjugation_search() {
        let f = f2();
        let ctx = GroupContext::gl(2, &f);
        let a = [Matrix::unit(&f, 2, 0, 1)];
        let b = [Matrix::unit(&f, 2, 1, 0)];
        let g = conjugating_element(&ctx, &a, &b, 100).unwrap().unwrap();
        assert_eq!(g.mul(&a[0]).mul(&g.inverse().unwrap()), b[0]);
        let c = [Matrix::unit(&f, 2, 0, 0)];
        assert!(conjugating_element(&ctx, &a, &c, 100).unwrap().is_none());
    }
}
