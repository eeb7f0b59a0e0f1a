//! The ambient groups `GL_n`, `SL_n`, `PGL_n`, their Lie algebras, and
//! cocharacters presented as weighted frames.
//!
//! Elements of `pgl_n` are stored as canonical representatives in `gl_n`:
//! the scalar shift making entry `(n, n)` zero. This works in every
//! characteristic, including when `p | n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{Flag, Matrix, Subspace};
use crate::fields::{Elem, Field};
use crate::liealg::LieSubalgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    GL,
    SL,
    PGL,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupKind::GL => "GL",
            GroupKind::SL => "SL",
            GroupKind::PGL => "PGL",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RadicalAlgorithm {
    /// Trace-form radical, characteristic 0.
    Dickson,
    /// p-power trace functions, finite fields.
    FiniteField,
    None,
}

/// What the engine is allowed to claim for a given context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Capabilities {
    pub char0_criteria_enabled: bool,
    pub radical_algorithm: RadicalAlgorithm,
    pub perfect: bool,
    /// Whether ideal-inheritance statements may be asserted: characteristic
    /// 0 or `p > n`. For `p ≤ n` they can fail even in `GL_n`: over `GF(2)`,
    /// `⟨diag(0,1), E12+E21⟩` acts irreducibly on `k²` while its ideal
    /// `⟨E12+E21⟩` does not act semisimply.
    pub ideal_claims: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupContext {
    kind: GroupKind,
    n: usize,
    field: Field,
}

impl GroupContext {
    pub fn new(kind: GroupKind, n: usize, field: &Field) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid(format!("n must be at least 2, got {n}")));
        }
        if n > 12 {
            return Err(Error::SizeGuard(format!("n = {n} is beyond the supported range")));
        }
        Ok(GroupContext { kind, n, field: field.clone() })
    }

    pub fn gl(n: usize, field: &Field) -> Self {
        Self::new(GroupKind::GL, n, field).expect("valid GL context")
    }

    pub fn sl(n: usize, field: &Field) -> Self {
        Self::new(GroupKind::SL, n, field).expect("valid SL context")
    }

    pub fn pgl(n: usize, field: &Field) -> Self {
        Self::new(GroupKind::PGL, n, field).expect("valid PGL context")
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The `GL_n` context over the same field.
    pub fn gl_context(&self) -> GroupContext {
        GroupContext { kind: GroupKind::GL, ..self.clone() }
    }

    pub fn capabilities(&self) -> Capabilities {
        let p = self.field.characteristic();
        let radical_algorithm = if p == 0 {
            RadicalAlgorithm::Dickson
        } else if self.field.is_finite() {
            RadicalAlgorithm::FiniteField
        } else {
            RadicalAlgorithm::None
        };
        let ideal_claims = p == 0 || p > self.n as u64;
        Capabilities {
            char0_criteria_enabled: p == 0,
            radical_algorithm,
            perfect: self.field.is_perfect(),
            ideal_claims,
        }
    }

    pub fn lie_dim(&self) -> usize {
        match self.kind {
            GroupKind::GL => self.n * self.n,
            _ => self.n * self.n - 1,
        }
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(&self.field, self.n)
    }

    /// Canonical representative: unchanged for GL/SL, scalar-shifted so the
    /// last diagonal entry vanishes for PGL.
    pub fn canonicalize(&self, x: &Matrix) -> Matrix {
        match self.kind {
            GroupKind::PGL => {
                let c = x.get(self.n - 1, self.n - 1).clone();
                if self.field.is_zero(&c) {
                    x.clone()
                } else {
                    x.sub(&self.identity().scale(&c))
                }
            }
            _ => x.clone(),
        }
    }

    /// Validates membership in `Lie(G)` and returns the canonical form.
    pub fn element(&self, x: &Matrix) -> Result<Matrix> {
        if x.rows() != self.n || x.cols() != self.n {
            return Err(Error::Dimension(format!("expected a {0}x{0} matrix", self.n)));
        }
        if x.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if self.kind == GroupKind::SL && !self.field.is_zero(&x.trace()) {
            return Err(Error::NotInLieAlgebra("sl_n elements must have trace 0".into()));
        }
        Ok(self.canonicalize(x))
    }

    /// Bracket in `Lie(G)`, on canonical representatives.
    pub fn bracket(&self, x: &Matrix, y: &Matrix) -> Matrix {
        self.canonicalize(&x.bracket(y))
    }

    pub fn to_vec(&self, x: &Matrix) -> Vec<Elem> {
        x.flat().to_vec()
    }

    pub fn from_vec(&self, v: &[Elem]) -> Matrix {
        Matrix::from_flat(&self.field, self.n, v)
    }

    /// `Lie(G)` as a subspace of `k^{n²}` (canonical representatives).
    pub fn ambient_space(&self) -> Subspace {
        let f = &self.field;
        let n = self.n;
        match self.kind {
            GroupKind::GL => Subspace::full(f, n * n),
            GroupKind::SL => {
                let mut vecs = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            vecs.push(Matrix::unit(f, n, i, j).flat().to_vec());
                        } else if i + 1 < n {
                            let h = Matrix::unit(f, n, i, i).sub(&Matrix::unit(f, n, n - 1, n - 1));
                            vecs.push(h.flat().to_vec());
                        }
                    }
                }
                Subspace::span(f, n * n, vecs)
            }
            GroupKind::PGL => {
                let idx: Vec<usize> = (0..n * n - 1).collect();
                Subspace::coordinate(f, n * n, &idx)
            }
        }
    }

    /// Elements of `Lie(G)` preserving every given subspace.
    pub fn stabilizer(&self, subspaces: &[Subspace]) -> Subspace {
        let amb = self.ambient_space();
        let f = &self.field;
        let mut conds: Vec<(Subspace, Vec<Vec<Elem>>)> = Vec::new();
        for s in subspaces {
            conds.push((s.clone(), s.annihilator().basis().to_vec()));
        }
        // column k = all constraint values for the k-th ambient basis vector
        let basis: Vec<Matrix> = amb.basis().iter().map(|v| self.from_vec(v)).collect();
        let mut rows: Vec<Vec<Elem>> = Vec::new();
        for (s, ann) in &conds {
            for v in s.basis() {
                let images: Vec<Vec<Elem>> = basis.iter().map(|b| b.mul_vec(v)).collect();
                for a in ann {
                    rows.push(images.iter().map(|im| crate::exactla::dot(f, a, im)).collect());
                }
            }
        }
        if rows.is_empty() {
            return amb;
        }
        let m = Matrix::from_rows(f, rows).unwrap();
        let sols = m.kernel();
        Subspace::span(
            f,
            self.n * self.n,
            sols.iter().map(|c| crate::exactla::lin_comb(f, self.n * self.n, c, amb.basis())),
        )
    }

    /// `Lie(P_F)`: elements preserving every step of the flag.
    pub fn lie_parabolic(&self, flag: &Flag) -> Result<Subspace> {
        if flag.ambient() != self.n {
            return Err(Error::InvalidFlag("flag has the wrong ambient dimension".into()));
        }
        Ok(self.stabilizer(flag.steps()))
    }

    /// `Lie(L)` for a direct-sum decomposition `k^n = W_1 ⊕ … ⊕ W_r`.
    pub fn lie_levi(&self, splitting: &[Subspace]) -> Result<Subspace> {
        let total: usize = splitting.iter().map(Subspace::dim).sum();
        let sum = splitting.iter().fold(Subspace::zero(&self.field, self.n), |acc, s| acc.sum(s));
        if total != self.n || !sum.is_full() {
            return Err(Error::InvalidFlag("summands do not form a direct sum decomposition".into()));
        }
        Ok(self.stabilizer(splitting))
    }

    /// Opposition test for flags via complementary dimensions and the
    /// dimension of the intersection of the parabolic subalgebras.
    pub fn opposite_flags(&self, a: &Flag, b: &Flag) -> Result<bool> {
        let n = self.n;
        let mut comp: Vec<usize> = a.dims().iter().map(|d| n - d).collect();
        comp.sort();
        if comp != b.dims() {
            return Ok(false);
        }
        let pa = self.lie_parabolic(a)?;
        let pb = self.lie_parabolic(b)?;
        let mut prev = 0;
        let mut levi = 0;
        for d in a.dims().into_iter().chain(std::iter::once(n)) {
            levi += (d - prev) * (d - prev);
            prev = d;
        }
        if self.kind != GroupKind::GL {
            levi -= 1;
        }
        Ok(pa.intersect(&pb).dim() == levi)
    }

    /// Preimage of a `pgl_n` subalgebra in `gl_n`: representatives plus `I`.
    pub fn pgl_lift(&self, h: &LieSubalgebra) -> Result<LieSubalgebra> {
        if self.kind != GroupKind::PGL {
            return Err(Error::Invalid("lift is only defined for PGL contexts".into()));
        }
        let gl = self.gl_context();
        let mut gens: Vec<Matrix> = h.basis();
        gens.push(self.identity());
        LieSubalgebra::from_spanning(&gl, gens)
    }
}

/// Cocharacter `λ(a) = F · diag(a^{w_1}, …, a^{w_n}) · F⁻¹` with
/// non-increasing integer weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocharacter {
    frame: Matrix,
    frame_inv: Matrix,
    weights: Vec<i64>,
}

impl Cocharacter {
    pub fn new(ctx: &GroupContext, frame: Matrix, weights: Vec<i64>) -> Result<Self> {
        if frame.rows() != ctx.n() || frame.cols() != ctx.n() || weights.len() != ctx.n() {
            return Err(Error::Dimension("cocharacter frame/weights have the wrong size".into()));
        }
        let frame_inv = frame.inverse().map_err(|_| Error::Invalid("cocharacter frame is singular".into()))?;
        if weights.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid("cocharacter weights must be non-increasing".into()));
        }
        if ctx.kind() == GroupKind::SL && weights.iter().sum::<i64>() != 0 {
            return Err(Error::Invalid("SL cocharacter weights must sum to 0".into()));
        }
        Ok(Cocharacter { frame, frame_inv, weights })
    }

    pub fn central(ctx: &GroupContext) -> Self {
        Cocharacter { frame: ctx.identity(), frame_inv: ctx.identity(), weights: vec![0; ctx.n()] }
    }

    /// Cocharacter adapted to a flag: frame columns run through `V_1`, then
    /// extensions to each later step; weights are constant on blocks and
    /// decrease by one per block, `V_1` carrying the highest weight.
    pub fn from_flag(ctx: &GroupContext, flag: &Flag) -> Result<Self> {
        let (basis, blocks) = flag.adapted_basis(ctx.field());
        let n = ctx.n();
        let r = blocks.len() as i64;
        let mut weights = Vec::with_capacity(n);
        for (i, b) in blocks.iter().enumerate() {
            weights.extend(std::iter::repeat_n(r - 1 - i as i64, *b));
        }
        if ctx.kind() == GroupKind::SL {
            let s: i64 = weights.iter().sum();
            weights = weights.iter().map(|w| n as i64 * w - s).collect();
        }
        let frame = Matrix::from_rows(ctx.field(), basis).unwrap().transpose();
        Cocharacter::new(ctx, frame, weights)
    }

    pub fn frame(&self) -> &Matrix {
        &self.frame
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn is_central(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] == w[1])
    }

    /// `F⁻¹ x F` split by weight `w_i - w_j`, as `(weight, component)` pairs
    /// in decreasing weight order, components mapped back to the standard
    /// basis. The components sum to `x`.
    pub fn weight_components(&self, x: &Matrix) -> Vec<(i64, Matrix)> {
        let f = x.field();
        let n = x.rows();
        let y = self.frame_inv.mul(x).mul(&self.frame);
        let mut ws: Vec<i64> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                ws.push(self.weights[i] - self.weights[j]);
            }
        }
        ws.sort_unstable_by(|a, b| b.cmp(a));
        ws.dedup();
        ws.into_iter()
            .filter_map(|w| {
                let mut part = Matrix::zeros(f, n, n);
                let mut any = false;
                for i in 0..n {
                    for j in 0..n {
                        if self.weights[i] - self.weights[j] == w && !f.is_zero(y.get(i, j)) {
                            part.set(i, j, y.get(i, j).clone());
                            any = true;
                        }
                    }
                }
                any.then(|| (w, self.frame.mul(&part).mul(&self.frame_inv)))
            })
            .collect()
    }

    fn part(&self, x: &Matrix, keep: impl Fn(i64) -> bool) -> Matrix {
        let f = x.field();
        let n = x.rows();
        let y = self.frame_inv.mul(x).mul(&self.frame);
        let mut part = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                if keep(self.weights[i] - self.weights[j]) {
                    part.set(i, j, y.get(i, j).clone());
                }
            }
        }
        self.frame.mul(&part).mul(&self.frame_inv)
    }

    /// `lim_{a→0} λ(a)·x` exists iff no negative-weight component.
    pub fn limit_exists(&self, x: &Matrix) -> bool {
        self.part(x, |w| w < 0).is_zero()
    }

    /// The limit, i.e. the weight-0 part, when it exists.
    pub fn limit(&self, ctx: &GroupContext, x: &Matrix) -> Option<Matrix> {
        self.limit_exists(x).then(|| ctx.canonicalize(&self.part(x, |w| w == 0)))
    }

    /// Positive-weight part of `x` (the `Lie(R_u(P_λ))` component).
    pub fn positive_part(&self, x: &Matrix) -> Matrix {
        self.part(x, |w| w > 0)
    }

    /// The flag `V_1 ⊂ V_2 ⊂ …` of `P_λ` (frame columns grouped by weight).
    pub fn flag(&self, ctx: &GroupContext) -> Flag {
        let f = ctx.field();
        let n = ctx.n();
        let cols: Vec<Vec<Elem>> = (0..n).map(|j| self.frame.column(j)).collect();
        let mut steps = Vec::new();
        for i in 1..n {
            if self.weights[i] != self.weights[i - 1] {
                steps.push(Subspace::span(f, n, cols[..i].to_vec()));
            }
        }
        Flag::new(n, steps).expect("frame columns give a strict chain")
    }

    /// Weight spaces of `λ` in decreasing weight order (the Levi splitting).
    pub fn splitting(&self, ctx: &GroupContext) -> Vec<Subspace> {
        let f = ctx.field();
        let n = ctx.n();
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=n {
            if i == n || self.weights[i] != self.weights[start] {
                out.push(Subspace::span(f, n, (start..i).map(|j| self.frame.column(j))));
                start = i;
            }
        }
        out
    }

    /// `c_λ(h)`: the image of `h ⊆ Lie(P_λ)` under the limit map.
    pub fn c_lambda(&self, h: &LieSubalgebra) -> Result<LieSubalgebra> {
        let ctx = h.context();
        let basis = h.basis();
        for (i, b) in basis.iter().enumerate() {
            if !self.limit_exists(b) {
                return Err(Error::NotInParabolic { witness: i });
            }
        }
        let from_basis: Vec<Matrix> = basis.iter().map(|b| self.limit(ctx, b).unwrap()).collect();
        let image = LieSubalgebra::from_spanning(ctx, from_basis)?;
        let gens: Vec<Matrix> = h.generators().iter().map(|g| self.limit(ctx, g).unwrap()).collect();
        let from_gens = LieSubalgebra::bracket_closure(ctx, &gens)?;
        if from_gens.space() != image.space() {
            return Err(Error::Internal("c_lambda is not a homomorphism on this input".into()));
        }
        Ok(from_gens)
    }

    /// Conjugate cocharacter `g λ g⁻¹`.
    pub fn conjugate(&self, ctx: &GroupContext, g: &Matrix) -> Result<Self> {
        Cocharacter::new(ctx, g.mul(&self.frame), self.weights.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn dimensions_and_profiles() {
        let f = q();
        assert_eq!(GroupContext::gl(3, &f).ambient_space().dim(), 9);
        assert_eq!(GroupContext::sl(3, &f).ambient_space().dim(), 8);
        assert_eq!(GroupContext::pgl(3, &f).ambient_space().dim(), 8);
        let f2 = Field::prime(2).unwrap();
        assert!(!GroupContext::gl(2, &f2).capabilities().ideal_claims);
        assert!(!GroupContext::pgl(2, &f2).capabilities().ideal_claims);
        assert!(GroupContext::sl(2, &Field::prime(3).unwrap()).capabilities().ideal_claims);
        let f2t = Field::rational_functions(&f2, "t").unwrap();
        assert_eq!(GroupContext::gl(2, &f2t).capabilities().radical_algorithm, RadicalAlgorithm::None);
    }

    #[test]
    fn limits() {
        let f = q();
        let ctx = GroupContext::gl(2, &f);
        let lam = Cocharacter::new(&ctx, ctx.identity(), vec![1, -1]).unwrap();
        let e12 = Matrix::unit(&f, 2, 0, 1);
        let e21 = Matrix::unit(&f, 2, 1, 0);
        assert!(lam.limit(&ctx, &e12).unwrap().is_zero());
        assert!(!lam.limit_exists(&e21));

        let ctx3 = GroupContext::gl(3, &f);
        let lam = Cocharacter::new(&ctx3, ctx3.identity(), vec![1, 1, 0]).unwrap();
        let x = Matrix::from_i64(&f, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 0]]);
        assert_eq!(lam.limit(&ctx3, &x).unwrap(), x);
    }

    #[test]
    fn weight_components_reconstruct() {
        let f = Field::prime(3).unwrap();
        let ctx = GroupContext::gl(3, &f);
        let frame = Matrix::from_i64(&f, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let lam = Cocharacter::new(&ctx, frame, vec![2, 0, -1]).unwrap();
        let x = Matrix::from_i64(&f, &[&[1, 2, 0], &[0, 1, 1], &[2, 2, 1]]);
        let total = lam.weight_components(&x).into_iter().fold(Matrix::zeros(&f, 3, 3), |a, (_, c)| a.add(&c));
        assert_eq!(total, x);
    }

    #[test]
    fn parabolic_and_levi() {
        let f = q();
        let ctx = GroupContext::gl(3, &f);
        let full = Flag::standard(&f, 3, &[1, 2]).unwrap();
        assert_eq!(ctx.lie_parabolic(&full).unwrap().dim(), 6);
        let split = [Subspace::coordinate(&f, 3, &[0]), Subspace::coordinate(&f, 3, &[1, 2])];
        assert_eq!(ctx.lie_levi(&split).unwrap().dim(), 5);

        // three Borel subalgebras of gl_2(GF(2)), one per line
        let f2 = Field::prime(2).unwrap();
        let ctx2 = GroupContext::gl(2, &f2);
        let lines = [[1u64, 0], [0, 1], [1, 1]];
        let mut borels = Vec::new();
        for l in lines {
            let fl = Flag::new(2, vec![Subspace::span(&f2, 2, [l.iter().map(|&x| Elem::P(x)).collect()])]).unwrap();
            borels.push((fl.clone(), ctx2.lie_parabolic(&fl).unwrap()));
        }
        borels.sort_by_key(|(_, b)| format!("{b:?}"));
        borels.dedup_by(|a, b| a.1 == b.1);
        assert_eq!(borels.len(), 3);
        for (a, pa) in &borels {
            assert_eq!(pa.dim(), 3);
            for (b, _) in &borels {
                assert_eq!(ctx2.opposite_flags(a, b).unwrap(), a != b);
            }
        }
    }

    #[test]
    fn opposition_examples() {
        let f = q();
        let ctx = GroupContext::gl(3, &f);
        let std = Flag::standard(&f, 3, &[1, 2]).unwrap();
        let anti = Flag::new(3, vec![Subspace::coordinate(&f, 3, &[2]), Subspace::coordinate(&f, 3, &[1, 2])]).unwrap();
        assert!(ctx.opposite_flags(&std, &anti).unwrap());
        assert!(ctx.opposite_flags(&anti, &std).unwrap());
        assert!(!ctx.opposite_flags(&std, &std).unwrap());
        let sl = GroupContext::sl(3, &f);
        assert!(sl.opposite_flags(&std, &anti).unwrap());
    }

    #[test]
    fn flag_adapted_cocharacter_matches_parabolic() {
        let f = Field::prime(3).unwrap();
        for ctx in [GroupContext::gl(3, &f), GroupContext::sl(3, &f), GroupContext::pgl(3, &f)] {
            let v1 = Subspace::span(&f, 3, [vec![Elem::P(1), Elem::P(2), Elem::P(0)]]);
            let flag = Flag::new(3, vec![v1]).unwrap();
            let lam = Cocharacter::from_flag(&ctx, &flag).unwrap();
            assert_eq!(lam.flag(&ctx), flag);
            let p = ctx.lie_parabolic(&flag).unwrap();
            let amb = ctx.ambient_space();
            // p_λ = {x : limit exists}
            let in_p = Subspace::span(
                &f,
                9,
                amb.basis().iter().filter_map(|v| {
                    let x = ctx.from_vec(v);
                    lam.limit_exists(&x).then(|| v.clone())
                }),
            );
            assert!(p.contains_space(&in_p));
            for v in p.basis() {
                let x = ctx.from_vec(v);
                assert!(lam.limit_exists(&x));
                let l = lam.limit(&ctx, &x).unwrap();
                // idempotent on p_λ; kernel is the positive part
                assert_eq!(lam.limit(&ctx, &l).unwrap(), l);
                let diff = ctx.canonicalize(&x.sub(&l));
                assert_eq!(diff, ctx.canonicalize(&lam.positive_part(&x)));
            }
            let levi = ctx.lie_levi(&lam.splitting(&ctx)).unwrap();
            for v in levi.basis() {
                let x = ctx.from_vec(v);
                assert_eq!(lam.limit(&ctx, &x).unwrap(), x);
            }
        }
    }
}
