use crate::error::{Error, Result};
use crate::fields::{Elem, Field};

use super::Matrix;

pub fn vec_add(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn vec_sub(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn vec_scale(f: &Field, a: &[Elem], c: &Elem) -> Vec<Elem> {
    a.iter().map(|x| f.mul(x, c)).collect()
}

pub fn vec_is_zero(f: &Field, a: &[Elem]) -> bool {
    a.iter().all(|x| f.is_zero(x))
}

/// `Σ c_i v_i`.
pub fn lin_comb(f: &Field, len: usize, coeffs: &[Elem], vecs: &[Vec<Elem>]) -> Vec<Elem> {
    let mut out = vec![f.zero(); len];
    for (c, v) in coeffs.iter().zip(vecs) {
        if f.is_zero(c) {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !f.is_zero(x) {
                *o = f.add(o, &f.mul(c, x));
            }
        }
    }
    out
}

pub fn dot(f: &Field, a: &[Elem], b: &[Elem]) -> Elem {
    let mut acc = f.zero();
    for (x, y) in a.iter().zip(b) {
        if !f.is_zero(x) && !f.is_zero(y) {
            acc = f.add(&acc, &f.mul(x, y));
        }
    }
    acc
}

/// Subspace of `k^n` stored as a reduced row-echelon basis, so equal
/// subspaces have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<Vec<String>> =
            self.rows.iter().map(|r| r.iter().map(|e| self.field.format(e)).collect()).collect();
        write!(f, "Subspace{rows:?}")
    }
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Self {
        Subspace { field: field.clone(), ambient, rows: vec![], pivots: vec![] }
    }

    pub fn full(field: &Field, ambient: usize) -> Self {
        let mut s = Self::zero(field, ambient);
        for i in 0..ambient {
            let mut v = vec![field.zero(); ambient];
            v[i] = field.one();
            s.rows.push(v);
            s.pivots.push(i);
        }
        s
    }

    pub fn span<I: IntoIterator<Item = Vec<Elem>>>(field: &Field, ambient: usize, vecs: I) -> Self {
        let mut s = Self::zero(field, ambient);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    /// Span of standard basis vectors `e_i` for the given indices.
    pub fn coordinate(field: &Field, ambient: usize, idx: &[usize]) -> Self {
        Self::span(
            field,
            ambient,
            idx.iter().map(|&i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            }),
        )
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_shape(&self.field, self.rows.len(), self.ambient, self.rows.concat())
    }

    /// Remainder of `v` after reduction by the echelon basis.
    pub fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        vec_is_zero(&self.field, &self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coords(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Elem>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let f = self.field.clone();
        let r = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else { return false };
        let inv = f.inv(&r[p]).unwrap();
        let r = vec_scale(&f, &r, &inv);
        for row in self.rows.iter_mut() {
            if !f.is_zero(&row[p]) {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    if !f.is_zero(y) {
                        *x = f.sub(x, &f.mul(&c, y));
                    }
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, r);
        true
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone());
        }
        s
    }

    /// `{y : <x, y> = 0 for all x in self}`.
    pub fn annihilator(&self) -> Subspace {
        if self.rows.is_empty() {
            return Subspace::full(&self.field, self.ambient);
        }
        Subspace::span(&self.field, self.ambient, self.basis_matrix().kernel())
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let ann = self.annihilator().sum(&other.annihilator());
        let out = ann.annihilator();
        debug_assert_eq!(self.sum(other).dim() + out.dim(), self.dim() + other.dim());
        out
    }

    /// Image under `x -> m x`.
    pub fn image(&self, m: &Matrix) -> Subspace {
        Subspace::span(&self.field, m.rows(), self.rows.iter().map(|v| m.mul_vec(v)))
    }

    /// Extends the basis of `self` to one of `big`: returns vectors of `big`
    /// whose classes form a basis of `big / self`.
    pub fn complement_basis_in(&self, big: &Subspace) -> Vec<Vec<Elem>> {
        let mut acc = self.clone();
        let mut out = Vec::new();
        for v in &big.rows {
            if acc.insert(v.clone()) {
                out.push(v.clone());
            }
        }
        out
    }

    /// All complements `W` with `self ⊕ W = k^n` (finite fields only).
    pub fn complement_enumerate(&self) -> Result<Vec<Subspace>> {
        self.complements_within(&Subspace::full(&self.field, self.ambient))
    }

    /// All `W ⊆ big` with `self ⊕ W = big`; requires `self ⊆ big`.
    pub fn complements_within(&self, big: &Subspace) -> Result<Vec<Subspace>> {
        let f = &self.field;
        let q = f.order().ok_or_else(|| Error::Invalid("complement enumeration needs a finite field".into()))?;
        if !big.contains_space(self) {
            return Err(Error::Invalid("subspace not contained in the ambient space".into()));
        }
        let base = if big.is_full() {
            let pivots = &self.pivots;
            (0..self.ambient)
                .filter(|i| !pivots.contains(i))
                .map(|i| {
                    let mut v = vec![f.zero(); self.ambient];
                    v[i] = f.one();
                    v
                })
                .collect()
        } else {
            self.complement_basis_in(big)
        };
        let (d, c) = (self.dim(), base.len());
        let count = q.checked_pow((d * c) as u32).unwrap_or(u128::MAX);
        if count > 1 << 20 {
            return Err(Error::SizeGuard(format!("{count} complements")));
        }
        let elems = f.elements()?;
        let mut out = Vec::with_capacity(count as usize);
        let mut idx = vec![0usize; d * c];
        loop {
            let vecs = (0..c).map(|j| {
                let coeffs: Vec<Elem> = (0..d).map(|i| elems[idx[j * d + i]].clone()).collect();
                vec_add(f, &base[j], &lin_comb(f, self.ambient, &coeffs, &self.rows))
            });
            out.push(Subspace::span(f, self.ambient, vecs));
            let mut k = 0;
            loop {
                if k == idx.len() {
                    return Ok(out);
                }
                idx[k] += 1;
                if idx[k] < elems.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    /// Whether `m` maps the subspace into itself.
    pub fn is_invariant(&self, m: &Matrix) -> bool {
        self.rows.iter().all(|v| self.contains(&m.mul_vec(v)))
    }
}

/// Strictly increasing chain `0 ⊊ V_1 ⊊ … ⊊ V_r ⊊ k^n` of proper nonzero
/// subspaces. The empty chain is the trivial flag.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Flag {
    ambient: usize,
    steps: Vec<Subspace>,
}

impl Flag {
    pub fn new(ambient: usize, steps: Vec<Subspace>) -> Result<Self> {
        for (i, s) in steps.iter().enumerate() {
            if s.ambient() != ambient {
                return Err(Error::InvalidFlag(format!("step {i} lives in the wrong ambient space")));
            }
            if s.is_zero() || s.is_full() {
                return Err(Error::InvalidFlag(format!("step {i} is not a proper nonzero subspace")));
            }
            if i > 0 {
                let prev = &steps[i - 1];
                if prev.dim() >= s.dim() || !s.contains_space(prev) {
                    return Err(Error::InvalidFlag(format!("step {} is not strictly contained in step {i}", i - 1)));
                }
            }
        }
        Ok(Flag { ambient, steps })
    }

    /// Builds a flag from an ascending chain, dropping `0`, `k^n` and repeats.
    pub fn from_chain(ambient: usize, chain: Vec<Subspace>) -> Result<Self> {
        let mut steps: Vec<Subspace> = Vec::new();
        for s in chain {
            if s.is_zero() || s.is_full() || steps.last() == Some(&s) {
                continue;
            }
            steps.push(s);
        }
        Flag::new(ambient, steps)
    }

    pub fn trivial(ambient: usize) -> Self {
        Flag { ambient, steps: vec![] }
    }

    /// Standard flag `<e_1> ⊂ <e_1,e_2> ⊂ …` with the given step dimensions.
    pub fn standard(field: &Field, ambient: usize, dims: &[usize]) -> Result<Self> {
        let steps = dims.iter().map(|&d| Subspace::coordinate(field, ambient, &(0..d).collect::<Vec<_>>())).collect();
        Flag::new(ambient, steps)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn steps(&self) -> &[Subspace] {
        &self.steps
    }

    pub fn dims(&self) -> Vec<usize> {
        self.steps.iter().map(Subspace::dim).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.steps.len() + 1 == self.ambient
    }

    /// Ordered basis adapted to the flag: a basis of `V_1`, then vectors
    /// extending it to `V_2`, and so on up to `k^n`. Also returns the block
    /// sizes.
    pub fn adapted_basis(&self, field: &Field) -> (Vec<Vec<Elem>>, Vec<usize>) {
        let mut acc = Subspace::zero(field, self.ambient);
        let mut basis = Vec::new();
        let mut blocks = Vec::new();
        let full = Subspace::full(field, self.ambient);
        for s in self.steps.iter().chain(std::iter::once(&full)) {
            let ext = acc.complement_basis_in(s);
            blocks.push(ext.len());
            for v in ext {
                acc.insert(v.clone());
                basis.push(v);
            }
        }
        (basis, blocks)
    }

    /// Whether `m` preserves every step.
    pub fn stabilized_by(&self, m: &Matrix) -> bool {
        self.steps.iter().all(|s| s.is_invariant(m))
    }

    /// Coarsening keeping the steps at the given positions.
    pub fn coarsen(&self, keep: &[usize]) -> Flag {
        Flag { ambient: self.ambient, steps: keep.iter().map(|&i| self.steps[i].clone()).collect() }
    }
}
