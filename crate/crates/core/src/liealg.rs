//! Lie subalgebras of `Lie(G)`: bracket closure, associative hulls,
//! structural series, Engel triangularization, centralizers, normalizers
//! and the characteristic-zero solvable radical.

use crate::error::{Error, Result};
use crate::exactla::{lin_comb, Flag, Matrix, Subspace};
use crate::fields::{Elem, Field};
use crate::groupctx::{GroupContext, GroupKind};

/// A subalgebra `h ⊆ Lie(G)`, stored as an echelonized subspace of
/// `k^{n²}` (canonical representatives for PGL) plus the tuple it was
/// generated from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSubalgebra {
    ctx: GroupContext,
    space: Subspace,
    generators: Vec<Matrix>,
}

impl LieSubalgebra {
    pub fn zero(ctx: &GroupContext) -> Self {
        LieSubalgebra { ctx: ctx.clone(), space: Subspace::zero(ctx.field(), ctx.n() * ctx.n()), generators: vec![] }
    }

    /// All of `Lie(G)`.
    pub fn full(ctx: &GroupContext) -> Self {
        let space = ctx.ambient_space();
        let generators = space.basis().iter().map(|v| ctx.from_vec(v)).collect();
        LieSubalgebra { ctx: ctx.clone(), space, generators }
    }

    /// Smallest subalgebra containing the generators.
    pub fn bracket_closure(ctx: &GroupContext, generators: &[Matrix]) -> Result<Self> {
        let gens: Vec<Matrix> = generators.iter().map(|g| ctx.element(g)).collect::<Result<_>>()?;
        let mut space = Subspace::zero(ctx.field(), ctx.n() * ctx.n());
        let mut basis: Vec<Matrix> = Vec::new();
        let mut frontier: Vec<Matrix> = Vec::new();
        for g in &gens {
            if space.insert(ctx.to_vec(g)) {
                basis.push(g.clone());
                frontier.push(g.clone());
            }
        }
        // each round brackets new elements against everything found so far
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for y in basis.clone() {
                    let z = ctx.bracket(x, &y);
                    if space.insert(ctx.to_vec(&z)) {
                        basis.push(z.clone());
                        next.push(z);
                    }
                }
            }
            if space.dim() > ctx.lie_dim() {
                return Err(Error::Internal("bracket closure exceeded dim Lie(G)".into()));
            }
            frontier = next;
        }
        Ok(LieSubalgebra { ctx: ctx.clone(), space, generators: gens })
    }

    /// Subalgebra spanned by elements already known to be closed under the
    /// bracket; closure is verified.
    pub fn from_spanning(ctx: &GroupContext, elems: Vec<Matrix>) -> Result<Self> {
        let elems: Vec<Matrix> = elems.iter().map(|g| ctx.element(g)).collect::<Result<_>>()?;
        let space = Subspace::span(ctx.field(), ctx.n() * ctx.n(), elems.iter().map(|e| ctx.to_vec(e)));
        let out = LieSubalgebra { ctx: ctx.clone(), space, generators: vec![] };
        let basis = out.basis();
        for (i, x) in basis.iter().enumerate() {
            for y in &basis[i + 1..] {
                if !out.contains(&ctx.bracket(x, y)) {
                    return Err(Error::Invalid("spanning set is not closed under the bracket".into()));
                }
            }
        }
        Ok(LieSubalgebra { generators: basis, ..out })
    }

    pub fn from_space(ctx: &GroupContext, space: Subspace) -> Result<Self> {
        let elems = space.basis().iter().map(|v| ctx.from_vec(v)).collect();
        Self::from_spanning(ctx, elems)
    }

    pub fn context(&self) -> &GroupContext {
        &self.ctx
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    /// Replaces the stored generating tuple; it must generate the same
    /// subalgebra.
    pub fn with_generators(&self, generators: Vec<Matrix>) -> Result<Self> {
        let other = Self::bracket_closure(&self.ctx, &generators)?;
        if other.space != self.space {
            return Err(Error::Invalid("tuple does not generate this subalgebra".into()));
        }
        Ok(other)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn basis(&self) -> Vec<Matrix> {
        self.space.basis().iter().map(|v| self.ctx.from_vec(v)).collect()
    }

    pub fn contains(&self, x: &Matrix) -> bool {
        self.space.contains(&self.ctx.to_vec(&self.ctx.canonicalize(x)))
    }

    pub fn contains_algebra(&self, other: &LieSubalgebra) -> bool {
        self.space.contains_space(&other.space)
    }

    /// Element with the given coordinates in the echelon basis.
    pub fn element(&self, coeffs: &[Elem]) -> Matrix {
        let n2 = self.ctx.n() * self.ctx.n();
        self.ctx.from_vec(&lin_comb(self.ctx.field(), n2, coeffs, self.space.basis()))
    }

    /// Coordinates of `x` in the echelon basis.
    pub fn coords(&self, x: &Matrix) -> Option<Vec<Elem>> {
        self.space.coords(&self.ctx.to_vec(&self.ctx.canonicalize(x)))
    }

    /// Seeded random element.
    pub fn random_element<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Matrix {
        let f = self.ctx.field();
        let c: Vec<Elem> = (0..self.dim()).map(|_| f.random(rng)).collect();
        self.element(&c)
    }

    /// `[a, b]` for two subspaces of this algebra, as a subalgebra.
    pub fn bracket_space(&self, a: &[Matrix], b: &[Matrix]) -> Subspace {
        let mut s = Subspace::zero(self.ctx.field(), self.ctx.n() * self.ctx.n());
        for x in a {
            for y in b {
                s.insert(self.ctx.to_vec(&self.ctx.bracket(x, y)));
            }
        }
        s
    }

    /// `[h, h]`.
    pub fn derived(&self) -> LieSubalgebra {
        let b = self.basis();
        let s = self.bracket_space(&b, &b);
        Self::from_space(&self.ctx, s).expect("derived algebra is a subalgebra")
    }

    pub fn derived_series(&self) -> Vec<LieSubalgebra> {
        let mut out = vec![self.clone()];
        loop {
            let next = out.last().unwrap().derived();
            if next.space == out.last().unwrap().space {
                return out;
            }
            out.push(next);
        }
    }

    pub fn lower_central_series(&self) -> Vec<LieSubalgebra> {
        let b = self.basis();
        let mut out = vec![self.clone()];
        loop {
            let cur = out.last().unwrap();
            let next =
                Self::from_space(&self.ctx, self.bracket_space(&b, &cur.basis())).expect("ideal is a subalgebra");
            if next.space == cur.space {
                return out;
            }
            out.push(next);
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.derived().is_zero()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    /// Elements `x` of `space` with `[x, y] ∈ target` for all `y` in `ys`.
    fn solve_bracket_condition(&self, space: &Subspace, ys: &[Matrix], target: &Subspace) -> Subspace {
        let ctx = &self.ctx;
        let f = ctx.field();
        let n2 = ctx.n() * ctx.n();
        let ann = target.annihilator();
        let cand: Vec<Matrix> = space.basis().iter().map(|v| ctx.from_vec(v)).collect();
        let mut rows: Vec<Vec<Elem>> = Vec::new();
        for y in ys {
            let images: Vec<Vec<Elem>> = cand.iter().map(|x| ctx.to_vec(&ctx.bracket(x, y))).collect();
            for a in ann.basis() {
                rows.push(images.iter().map(|im| crate::exactla::dot(f, a, im)).collect());
            }
        }
        if rows.is_empty() || cand.is_empty() {
            return space.clone();
        }
        let m = Matrix::from_rows(f, rows).unwrap();
        Subspace::span(f, n2, m.kernel().iter().map(|c| lin_comb(f, n2, c, space.basis())))
    }

    /// `c_g(h)`.
    pub fn centralizer_in_g(&self) -> LieSubalgebra {
        let zero = Subspace::zero(self.ctx.field(), self.ctx.n() * self.ctx.n());
        let s = self.solve_bracket_condition(&self.ctx.ambient_space(), &self.basis(), &zero);
        Self::from_space(&self.ctx, s).expect("centralizer is a subalgebra")
    }

    /// `n_g(h)`.
    pub fn normalizer_in_g(&self) -> LieSubalgebra {
        let s = self.solve_bracket_condition(&self.ctx.ambient_space(), &self.basis(), &self.space);
        Self::from_space(&self.ctx, s).expect("normalizer is a subalgebra")
    }

    /// Centralizer of `ys` inside this algebra.
    pub fn centralizer_of(&self, ys: &[Matrix]) -> LieSubalgebra {
        let zero = Subspace::zero(self.ctx.field(), self.ctx.n() * self.ctx.n());
        let s = self.solve_bracket_condition(&self.space, ys, &zero);
        Self::from_space(&self.ctx, s).expect("centralizer is a subalgebra")
    }

    pub fn center(&self) -> LieSubalgebra {
        self.centralizer_of(&self.basis())
    }

    /// Whether `m ⊆ self` is an ideal: `[self, m] ⊆ m`.
    pub fn is_ideal(&self, m: &LieSubalgebra) -> bool {
        self.contains_algebra(m)
            && self.basis().iter().all(|x| m.basis().iter().all(|y| m.contains(&self.ctx.bracket(x, y))))
    }

    /// Ideal generated by the given elements.
    pub fn ideal_generated(&self, elems: &[Matrix]) -> LieSubalgebra {
        let ctx = &self.ctx;
        let basis = self.basis();
        let mut space = Subspace::zero(ctx.field(), ctx.n() * ctx.n());
        let mut frontier: Vec<Matrix> = Vec::new();
        for e in elems {
            if space.insert(ctx.to_vec(&ctx.canonicalize(e))) {
                frontier.push(ctx.canonicalize(e));
            }
        }
        while let Some(x) = frontier.pop() {
            for y in &basis {
                let z = ctx.bracket(y, &x);
                if space.insert(ctx.to_vec(&z)) {
                    frontier.push(z);
                }
            }
        }
        Self::from_space(ctx, space).expect("ideal is a subalgebra")
    }

    /// Matrix of `ad x` on this algebra's echelon basis (columns = images).
    pub fn ad_matrix(&self, x: &Matrix) -> Matrix {
        let basis = self.basis();
        let d = basis.len();
        let f = self.ctx.field();
        let mut m = Matrix::zeros(f, d, d);
        for (j, b) in basis.iter().enumerate() {
            let c = self.coords(&self.ctx.bracket(x, b)).expect("x normalizes h");
            for (i, v) in c.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// `κ(x, y) = tr(ad x · ad y)` on this algebra.
    pub fn killing_form(&self, x: &Matrix, y: &Matrix) -> Elem {
        self.ad_matrix(x).mul(&self.ad_matrix(y)).trace()
    }

    /// Solvable radical in characteristic 0, as `[h,h]^⊥` for the Killing
    /// form of `h`.
    pub fn solvable_radical_char0(&self) -> Result<LieSubalgebra> {
        let ctx = &self.ctx;
        let f = ctx.field();
        if f.characteristic() != 0 {
            return Err(Error::Capability("solvable radical needs characteristic 0".into()));
        }
        let basis = self.basis();
        if basis.is_empty() {
            return Ok(self.clone());
        }
        let ads: Vec<Matrix> = basis.iter().map(|b| self.ad_matrix(b)).collect();
        let der = self.derived().basis();
        let der_ads: Vec<Matrix> = der.iter().map(|d| self.ad_matrix(d)).collect();
        let n2 = ctx.n() * ctx.n();
        let rad = if der_ads.is_empty() {
            self.space.clone()
        } else {
            let rows: Vec<Vec<Elem>> = der_ads.iter().map(|d| ads.iter().map(|a| a.mul(d).trace()).collect()).collect();
            let m = Matrix::from_rows(f, rows).unwrap();
            Subspace::span(f, n2, m.kernel().iter().map(|c| lin_comb(f, n2, c, self.space.basis())))
        };
        let rad = Self::from_space(ctx, rad)?;
        if !self.is_ideal(&rad) || !rad.is_solvable() {
            return Err(Error::Internal("Killing-form radical failed verification".into()));
        }
        Ok(rad)
    }

    /// Over a finite field: a nonzero `x` whose generated ideal is abelian,
    /// or `None` when no such element exists, i.e. `rad(h) = 0`.
    pub fn abelian_ideal_witness(&self) -> Result<Option<Matrix>> {
        let f = self.ctx.field();
        let q = f.order().ok_or_else(|| Error::Capability("abelian-ideal search needs a finite field".into()))?;
        let d = self.dim();
        if q.checked_pow(d as u32).is_none_or(|c| c > 1 << 16) {
            return Err(Error::SizeGuard(format!("{q}^{d} elements to search")));
        }
        let elems = f.elements()?;
        let mut idx = vec![0usize; d];
        loop {
            let mut k = 0;
            while k < d {
                idx[k] += 1;
                if idx[k] < elems.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == d {
                return Ok(None);
            }
            let c: Vec<Elem> = idx.iter().map(|&i| elems[i].clone()).collect();
            let x = self.element(&c);
            if self.ideal_generated(std::slice::from_ref(&x)).is_abelian() {
                return Ok(Some(x));
            }
        }
    }

    /// Complete flag in which every element of `h` is strictly upper
    /// triangular, built from iterated common kernels; `None` when `h`
    /// does not act nilpotently.
    pub fn engel_triangularize(&self) -> Option<Flag> {
        let ctx = &self.ctx;
        if ctx.kind() == GroupKind::PGL {
            return None;
        }
        let f = ctx.field();
        let n = ctx.n();
        let basis = self.basis();
        if basis.iter().any(|b| !b.is_nilpotent()) {
            return None;
        }
        let mut cur = Subspace::zero(f, n);
        let mut steps = Vec::new();
        while cur.dim() < n {
            // W = {v : x v ∈ cur for all basis x}
            let ann = cur.annihilator();
            let mut rows: Vec<Vec<Elem>> = Vec::new();
            for x in &basis {
                let xt = x.transpose();
                for a in ann.basis() {
                    rows.push(xt.mul_vec(a));
                }
            }
            let w = if rows.is_empty() {
                Subspace::full(f, n)
            } else {
                Subspace::span(f, n, Matrix::from_rows(f, rows).unwrap().kernel())
            };
            let v = w.basis().iter().find(|v| !cur.contains(v))?.clone();
            cur.insert(v);
            if cur.dim() < n {
                steps.push(cur.clone());
            }
        }
        let flag = Flag::new(n, steps).ok()?;
        Some(flag)
    }

    /// Associative algebra generated by the basis (and `I` if requested)
    /// inside `M_n(k)`. Only meaningful for GL/SL contexts or lifts.
    pub fn associative_hull(&self, include_identity: bool) -> Subspace {
        associative_hull(&self.ctx, &self.basis(), include_identity)
    }

    /// Conjugate `g h g⁻¹`, with the generating tuple conjugated as well.
    pub fn conjugate(&self, g: &Matrix) -> Result<LieSubalgebra> {
        let gi = g.inverse()?;
        let gens: Vec<Matrix> = self.generators.iter().map(|x| x.conjugate(g, &gi)).collect();
        Self::bracket_closure(&self.ctx, &gens)
    }
}

/// Associative hull in `M_n(k)` of a set of matrices, as a subspace of
/// `k^{n²}`: closure of the span under left multiplication by generators.
pub fn associative_hull(ctx: &GroupContext, gens: &[Matrix], include_identity: bool) -> Subspace {
    matrix_hull(ctx.field(), ctx.n(), gens, include_identity)
}

/// [`associative_hull`] without a group context, for any `n ≥ 1`.
pub fn matrix_hull(f: &Field, n: usize, gens: &[Matrix], include_identity: bool) -> Subspace {
    let mut space = Subspace::zero(f, n * n);
    let mut frontier: Vec<Matrix> = Vec::new();
    let mut seeds: Vec<Matrix> = gens.to_vec();
    if include_identity {
        seeds.insert(0, Matrix::identity(f, n));
    }
    for g in seeds {
        if space.insert(g.flat().to_vec()) {
            frontier.push(g);
        }
    }
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = g.mul(&x);
            if space.insert(y.flat().to_vec()) {
                frontier.push(y);
            }
        }
    }
    space
}
