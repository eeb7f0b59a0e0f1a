//! The natural module `k^n` of a set of matrices: associative hull, Jacobson
//! radical, radical and socle series, irreducibility, indecomposability,
//! semisimplicity, Hom spaces and isomorphism witnesses.

mod hom;
mod radical;

pub use hom::{hom_space, iso_witness, pgl_iso_witness, IsoSearch};
pub use radical::{algorithm_for, jacobson_radical, jacobson_radical_with};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{lin_comb, Flag, Matrix, Subspace};
use crate::fields::poly;
use crate::fields::roots::{certify_irreducible, monic_polys, roots_in_field};
use crate::fields::{Elem, Field, Polynomial};
use crate::groupctx::{GroupKind, RadicalAlgorithm};
use crate::jordan::{eval_at_matrix, minimal_polynomial};
use crate::liealg::{matrix_hull, LieSubalgebra};

const EXHAUSTIVE_GUARD: u128 = 1 << 16;
const RANDOM_PROBES: usize = 12;

/// `k^n` acted on by a list of matrices.
#[derive(Clone, Debug)]
pub struct Module {
    field: Field,
    n: usize,
    gens: Vec<Matrix>,
    hull: Subspace,
}

#[derive(Clone, Debug)]
pub struct ModuleStructure {
    pub hull: Subspace,
    pub radical: Subspace,
    /// `0 ⊊ … ⊊ J²V ⊊ JV ⊊ V`, ascending, without the end points.
    pub radical_series: Flag,
    pub algorithm: RadicalAlgorithm,
}

#[derive(Clone, Debug)]
pub enum Irreducibility {
    Irreducible { absolutely: bool, certificate: String },
    Reducible { submodule: Subspace },
    Unknown { reason: String },
}

impl Irreducibility {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Irreducibility::Irreducible { .. } => Some(true),
            Irreducibility::Reducible { .. } => Some(false),
            Irreducibility::Unknown { .. } => None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Decomposability {
    Indecomposable {
        certificate: String,
    },
    /// A nontrivial idempotent of `End(V)` and the two summands it cuts out.
    Decomposable {
        idempotent: Matrix,
        summands: (Subspace, Subspace),
    },
    Unknown {
        reason: String,
    },
}

impl Decomposability {
    pub fn is_indecomposable(&self) -> Option<bool> {
        match self {
            Decomposability::Indecomposable { .. } => Some(true),
            Decomposability::Decomposable { .. } => Some(false),
            Decomposability::Unknown { .. } => None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Semisimplicity {
    Semisimple { certificate: String },
    NotSemisimple { certificate: String, radical: Option<Subspace> },
    Unknown { reason: String },
}

impl Semisimplicity {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Semisimplicity::Semisimple { .. } => Some(true),
            Semisimplicity::NotSemisimple { .. } => Some(false),
            Semisimplicity::Unknown { .. } => None,
        }
    }
}

fn mats(field: &Field, n: usize, vs: &[Vec<Elem>]) -> Vec<Matrix> {
    vs.iter().map(|v| Matrix::from_flat(field, n, v)).collect()
}

fn random_combo<R: Rng>(field: &Field, basis: &[Matrix], rng: &mut R) -> Matrix {
    let n = basis[0].rows();
    let mut acc = Matrix::zeros(field, n, n);
    for b in basis {
        acc = acc.add(&b.scale(&field.random(rng)));
    }
    acc
}

/// Proper monic factors of `m` that can be found without general
/// factorization: the square-free part and repeated part, linear factors,
/// and over finite fields factors of small degree by trial division.
fn visible_factors(m: &Polynomial) -> Vec<Polynomial> {
    let f = m.field();
    let d = m.degree().unwrap_or(0);
    let mut out = Vec::new();
    if d < 2 {
        return out;
    }
    let (roots, _) = roots_in_field(m);
    for r in roots {
        out.push(Polynomial::new(f.clone(), vec![f.neg(&r), f.one()]));
    }
    if let Ok(g) = crate::fields::poly::poly_gcd(m, &m.derivative()) {
        if g.degree().is_some_and(|k| k > 0 && k < d) {
            out.push(g);
        }
    }
    if f.is_finite() {
        for k in 2..=d / 2 {
            let Ok(cands) = monic_polys(f, k) else { break };
            if let Some(c) = cands.into_iter().find(|c| poly::rem(f, m.coeffs(), c).is_empty()) {
                out.push(Polynomial::new(f.clone(), c));
                break;
            }
        }
    }
    out
}

/// Splits `m = g·h` with `g`, `h` coprime and nonconstant when a visible
/// factor allows it.
fn coprime_split(m: &Polynomial) -> Option<(Polynomial, Polynomial)> {
    let f = m.field();
    for fac in visible_factors(m) {
        let mut g = Polynomial::constant(f, f.one());
        let mut rest = m.clone();
        loop {
            let (q, r) = rest.divrem(&fac).ok()?;
            if !r.is_zero() {
                break;
            }
            g = g.mul(&fac);
            rest = q;
        }
        if rest.degree().is_some_and(|k| k > 0) && poly::gcd(f, g.coeffs(), rest.coeffs()).len() == 1 {
            return Some((g, rest));
        }
    }
    None
}

impl Module {
    pub fn new(field: &Field, n: usize, gens: Vec<Matrix>) -> Self {
        let hull = matrix_hull(field, n, &gens, true);
        Module { field: field.clone(), n, gens, hull }
    }

    /// Natural module of `h`; for `PGL_n` the module of the lift (which
    /// contains the scalars).
    pub fn of_subalgebra(h: &LieSubalgebra) -> Result<Self> {
        let ctx = h.context();
        let gens = match ctx.kind() {
            GroupKind::PGL => ctx.pgl_lift(h)?.basis(),
            _ => h.basis(),
        };
        Ok(Module::new(ctx.field(), ctx.n(), gens))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.gens
    }

    pub fn hull(&self) -> &Subspace {
        &self.hull
    }

    pub fn hull_basis(&self) -> Vec<Matrix> {
        mats(&self.field, self.n, self.hull.basis())
    }

    pub fn dual(&self) -> Module {
        Module::new(&self.field, self.n, self.gens.iter().map(Matrix::transpose).collect())
    }

    /// Smallest submodule containing the given vectors.
    pub fn spin(&self, vs: &[Vec<Elem>]) -> Subspace {
        let mut w = Subspace::zero(&self.field, self.n);
        let mut frontier = Vec::new();
        for v in vs {
            if w.insert(v.clone()) {
                frontier.push(v.clone());
            }
        }
        while let Some(v) = frontier.pop() {
            for g in &self.gens {
                let u = g.mul_vec(&v);
                if w.insert(u.clone()) {
                    frontier.push(u);
                }
            }
        }
        w
    }

    pub fn is_submodule(&self, w: &Subspace) -> bool {
        self.gens.iter().all(|g| w.is_invariant(g))
    }

    fn dual_to_submodule(&self, w: &Subspace) -> Subspace {
        w.annihilator()
    }

    /// Action on a submodule, in the echelon basis of `w`.
    pub fn restrict(&self, w: &Subspace) -> Result<Module> {
        if !self.is_submodule(w) {
            return Err(Error::Invalid("subspace is not a submodule".into()));
        }
        let d = w.dim();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = Matrix::zeros(&self.field, d, d);
                for (j, b) in w.basis().iter().enumerate() {
                    for (i, c) in w.coords(&g.mul_vec(b)).unwrap().into_iter().enumerate() {
                        m.set(i, j, c);
                    }
                }
                m
            })
            .collect();
        Ok(Module::new(&self.field, d, gens))
    }

    /// Action on `V / w`, together with the lifting basis: class `i` of the
    /// quotient is represented by row `i` of the returned list.
    pub fn quotient(&self, w: &Subspace) -> Result<(Module, Vec<Vec<Elem>>)> {
        if !self.is_submodule(w) {
            return Err(Error::Invalid("subspace is not a submodule".into()));
        }
        let full = Subspace::full(&self.field, self.n);
        let reps = Subspace::span(&self.field, self.n, full.basis().iter().map(|v| w.reduce(v)));
        let d = reps.dim();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = Matrix::zeros(&self.field, d, d);
                for (j, b) in reps.basis().iter().enumerate() {
                    let c = reps.coords(&w.reduce(&g.mul_vec(b))).unwrap();
                    for (i, c) in c.into_iter().enumerate() {
                        m.set(i, j, c);
                    }
                }
                m
            })
            .collect();
        Ok((Module::new(&self.field, d, gens), reps.basis().to_vec()))
    }

    pub fn radical(&self) -> Result<Subspace> {
        jacobson_radical(&self.field, &self.hull_basis())
    }

    /// `J`-powers applied to `V`: `[V, JV, J²V, …, 0]`.
    fn radical_powers(&self, j: &Subspace) -> Vec<Subspace> {
        let jm = mats(&self.field, self.n, j.basis());
        let mut out = vec![Subspace::full(&self.field, self.n)];
        loop {
            let cur = out.last().unwrap();
            if cur.is_zero() {
                return out;
            }
            let next = Subspace::span(
                &self.field,
                self.n,
                cur.basis().iter().flat_map(|v| jm.iter().map(move |x| x.mul_vec(v))),
            );
            out.push(next);
        }
    }

    pub fn structure(&self) -> Result<ModuleStructure> {
        self.structure_with(false)
    }

    /// As [`Module::structure`], optionally with the radical corrupted (for
    /// mutation tests of the fixture suite).
    pub fn structure_with(&self, corrupt: bool) -> Result<ModuleStructure> {
        let radical = jacobson_radical_with(&self.field, &self.hull_basis(), corrupt)?;
        let powers = self.radical_powers(&radical);
        let jm = mats(&self.field, self.n, radical.basis());
        for w in powers.windows(2) {
            // J annihilates each layer
            for v in w[0].basis() {
                if jm.iter().any(|x| !w[1].contains(&x.mul_vec(v))) {
                    return Err(Error::Internal("radical layer not annihilated".into()));
                }
            }
        }
        let chain: Vec<Subspace> = powers.into_iter().rev().collect();
        let radical_series = Flag::from_chain(self.n, chain)?;
        Ok(ModuleStructure { hull: self.hull.clone(), radical, radical_series, algorithm: algorithm_for(&self.field) })
    }

    pub fn radical_series(&self) -> Result<Flag> {
        Ok(self.structure()?.radical_series)
    }

    /// Ascending socle series `soc V ⊊ soc² V ⊊ … ⊊ V`, computed as
    /// annihilators of radical powers.
    pub fn socle_series(&self) -> Result<Flag> {
        let j = self.radical()?;
        let jm = mats(&self.field, self.n, j.basis());
        let mut chain = vec![Subspace::zero(&self.field, self.n)];
        loop {
            let cur = chain.last().unwrap().clone();
            if cur.is_full() {
                break;
            }
            let next = self.preimage_under_all(&jm, &cur);
            if next.dim() == cur.dim() {
                return Err(Error::Internal("socle series stalled".into()));
            }
            chain.push(next);
        }
        Flag::from_chain(self.n, chain)
    }

    /// `{v : x v ∈ u for every x}`.
    fn preimage_under_all(&self, xs: &[Matrix], u: &Subspace) -> Subspace {
        let n = self.n;
        let ann = u.annihilator();
        let mut rows = Vec::new();
        for x in xs {
            for a in ann.basis() {
                rows.push(x.transpose().mul_vec(a));
            }
        }
        if rows.is_empty() {
            return Subspace::full(&self.field, n);
        }
        Subspace::span(&self.field, n, rows).annihilator()
    }

    /// A random chain of submodules with semisimple layers: at each step
    /// a random vector `v` with `Jv ⊆ U` is chosen outside `U` and its
    /// submodule is added.
    pub fn random_admissible_flag(&self, seed: u64) -> Result<Flag> {
        let j = self.radical()?;
        let jm = mats(&self.field, self.n, j.basis());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut chain = vec![Subspace::zero(&self.field, self.n)];
        loop {
            let u = chain.last().unwrap().clone();
            if u.is_full() {
                break;
            }
            let x = self.preimage_under_all(&jm, &u);
            let cands = u.complement_basis_in(&x);
            let v = loop {
                let c: Vec<Elem> = cands.iter().map(|_| self.field.random(&mut rng)).collect();
                let v = lin_comb(&self.field, self.n, &c, &cands);
                if !u.contains(&v) {
                    break v;
                }
            };
            chain.push(u.sum(&self.spin(&[v])));
        }
        Flag::from_chain(self.n, chain)
    }

    /// A composition series, found by repeatedly descending into proper
    /// submodules until an irreducible one is certified.
    pub fn composition_series(&self, seed: u64) -> Result<Flag> {
        let mut chain = vec![Subspace::zero(&self.field, self.n)];
        loop {
            let u = chain.last().unwrap().clone();
            if u.is_full() {
                break;
            }
            let (q, lift) = self.quotient(&u)?;
            let minimal = q.minimal_submodule(seed)?;
            let vecs: Vec<Vec<Elem>> =
                minimal.basis().iter().map(|c| lin_comb(&self.field, self.n, c, &lift)).collect();
            chain.push(u.sum(&Subspace::span(&self.field, self.n, vecs)));
        }
        Flag::from_chain(self.n, chain)
    }

    fn minimal_submodule(&self, seed: u64) -> Result<Subspace> {
        let mut w = Subspace::full(&self.field, self.n);
        loop {
            let m = self.restrict(&w)?;
            match m.is_irreducible(seed) {
                Irreducibility::Irreducible { .. } => return Ok(w),
                Irreducibility::Reducible { submodule } => {
                    let vecs: Vec<Vec<Elem>> =
                        submodule.basis().iter().map(|c| lin_comb(&self.field, self.n, c, w.basis())).collect();
                    w = Subspace::span(&self.field, self.n, vecs);
                }
                Irreducibility::Unknown { reason } => return Err(Error::NoCertifiedPath(reason)),
            }
        }
    }

    /// `End_A(V)` as a subspace of `k^{n²}`.
    pub fn commutant(&self) -> Subspace {
        let basis = hom_space(&self.field, &self.gens, &self.gens);
        Subspace::span(&self.field, self.n * self.n, basis.iter().map(|m| m.flat().to_vec()))
    }

    fn proper(&self, w: &Subspace) -> bool {
        !w.is_zero() && !w.is_full()
    }

    fn search_by_spinning(&self) -> Option<Subspace> {
        let full = Subspace::full(&self.field, self.n);
        let dual = self.dual();
        for e in full.basis() {
            let w = self.spin(std::slice::from_ref(e));
            if self.proper(&w) {
                return Some(w);
            }
            let w = dual.spin(std::slice::from_ref(e));
            if self.proper(&w) {
                return Some(self.dual_to_submodule(&w));
            }
        }
        None
    }

    fn exhaustive_spin(&self) -> Option<Option<Subspace>> {
        let q = self.field.order()?;
        if q.checked_pow(self.n as u32).is_none_or(|c| c > EXHAUSTIVE_GUARD) {
            return None;
        }
        let elems = self.field.elements().ok()?;
        for lead in 0..self.n {
            let free = self.n - lead - 1;
            let mut idx = vec![0usize; free];
            loop {
                let mut v = vec![self.field.zero(); self.n];
                v[lead] = self.field.one();
                for (k, &i) in idx.iter().enumerate() {
                    v[lead + 1 + k] = elems[i].clone();
                }
                let w = self.spin(&[v]);
                if self.proper(&w) {
                    return Some(Some(w));
                }
                let mut k = 0;
                while k < free {
                    idx[k] += 1;
                    if idx[k] < elems.len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == free {
                    break;
                }
            }
        }
        Some(None)
    }

    fn probes(&self, space: &[Matrix], rng: &mut ChaCha8Rng) -> Vec<Matrix> {
        let mut out: Vec<Matrix> = space.to_vec();
        if !space.is_empty() {
            out.extend((0..RANDOM_PROBES).map(|_| random_combo(&self.field, space, rng)));
        }
        out
    }

    /// Whether `basis` spans a field: some element has irreducible minimal
    /// polynomial of degree `dim`.
    fn certified_field(&self, basis: &[Matrix], rng: &mut ChaCha8Rng) -> Option<Matrix> {
        for d in self.probes(basis, rng) {
            let m = minimal_polynomial(&d);
            if m.degree() == Some(basis.len()) && (basis.len() == 1 || certify_irreducible(&m).is_ok()) {
                return Some(d);
            }
        }
        None
    }

    pub fn is_absolutely_irreducible(&self) -> bool {
        self.hull.dim() == self.n * self.n
    }

    pub fn is_irreducible(&self, seed: u64) -> Irreducibility {
        if self.n == 0 {
            return Irreducibility::Unknown { reason: "zero module".into() };
        }
        if self.is_absolutely_irreducible() {
            return Irreducibility::Irreducible {
                absolutely: true,
                certificate: format!("hull has dimension {} = n^2", self.hull.dim()),
            };
        }
        if let Some(w) = self.search_by_spinning() {
            return Irreducibility::Reducible { submodule: w };
        }
        if let Some(res) = self.exhaustive_spin() {
            return match res {
                Some(w) => Irreducibility::Reducible { submodule: w },
                None => Irreducibility::Irreducible {
                    absolutely: false,
                    certificate: "every nonzero vector spins up to V".into(),
                },
            };
        }
        if let Ok(j) = self.radical() {
            if !j.is_zero() {
                let s = self.structure().expect("radical already verified");
                return Irreducibility::Reducible { submodule: s.radical_series.steps().last().unwrap().clone() };
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let comm = mats(&self.field, self.n, self.commutant().basis());
        for d in self.probes(&comm, &mut rng) {
            let m = minimal_polynomial(&d);
            for g in visible_factors(&m) {
                let ker = Subspace::span(&self.field, self.n, eval_at_matrix(&g, &d).kernel());
                if self.proper(&ker) {
                    return Irreducibility::Reducible { submodule: ker };
                }
            }
        }
        let hb = self.hull_basis();
        let dual = self.dual();
        for a in self.probes(&hb, &mut rng) {
            let (roots, _) = roots_in_field(&minimal_polynomial(&a));
            for r in roots {
                let shifted = a.sub(&Matrix::identity(&self.field, self.n).scale(&r));
                for v in shifted.kernel() {
                    let w = self.spin(&[v]);
                    if self.proper(&w) {
                        return Irreducibility::Reducible { submodule: w };
                    }
                }
                for v in shifted.transpose().kernel() {
                    let w = dual.spin(&[v]);
                    if self.proper(&w) {
                        return Irreducibility::Reducible { submodule: self.dual_to_submodule(&w) };
                    }
                }
            }
        }
        if comm.len() * self.hull.dim() == self.n * self.n {
            if let Some(d) = self.certified_field(&comm, &mut rng) {
                return Irreducibility::Irreducible {
                    absolutely: false,
                    certificate: format!("End(V) = k[d] is a field with d = {d:?}, and dim(hull)·dim(End(V)) = n^2"),
                };
            }
        }
        Irreducibility::Unknown {
            reason: format!("no invariant subspace found and no certificate over {}", self.field),
        }
    }

    pub fn is_indecomposable(&self, seed: u64) -> Decomposability {
        let comm_space = self.commutant();
        let comm = mats(&self.field, self.n, comm_space.basis());
        if comm.len() == 1 {
            return Decomposability::Indecomposable { certificate: "End(V) = k".into() };
        }
        let split = |e: Matrix| {
            let one_minus = Matrix::identity(&self.field, self.n).sub(&e);
            let a = Subspace::span(&self.field, self.n, (0..self.n).map(|j| e.column(j)));
            let b = Subspace::span(&self.field, self.n, (0..self.n).map(|j| one_minus.column(j)));
            Decomposability::Decomposable { idempotent: e, summands: (a, b) }
        };
        if let Some(q) = self.field.order() {
            if q.checked_pow(comm.len() as u32).is_some_and(|c| c <= EXHAUSTIVE_GUARD) {
                let elems = self.field.elements().unwrap();
                let vecs: Vec<Vec<Elem>> = comm.iter().map(|m| m.flat().to_vec()).collect();
                let mut idx = vec![0usize; comm.len()];
                loop {
                    let c: Vec<Elem> = idx.iter().map(|&i| elems[i].clone()).collect();
                    let e = Matrix::from_flat(&self.field, self.n, &lin_comb(&self.field, self.n * self.n, &c, &vecs));
                    if !e.is_zero() && !e.is_identity() && e.mul(&e) == e {
                        return split(e);
                    }
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
                        return Decomposability::Indecomposable {
                            certificate: "exhaustive search: End(V) has no nontrivial idempotent".into(),
                        };
                    }
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for d in self.probes(&comm, &mut rng) {
            let m = minimal_polynomial(&d);
            if let Some((g, h)) = coprime_split(&m) {
                let (_, _, t) = poly::ext_gcd(&self.field, g.coeffs(), h.coeffs());
                // s g + t h = 1, so (t h)(d) projects onto ker g(d)
                let th = Polynomial::new(self.field.clone(), t).mul(&h);
                let e = eval_at_matrix(&th, &d);
                debug_assert!(e.mul(&e) == e);
                return split(e);
            }
        }
        if let Ok(j) = jacobson_radical(&self.field, &comm) {
            let quotient_dim = comm.len() - j.dim();
            if quotient_dim == 1 {
                return Decomposability::Indecomposable { certificate: "End(V)/rad End(V) = k".into() };
            }
        }
        for d in self.probes(&comm, &mut rng) {
            let m = minimal_polynomial(&d);
            if m.degree() == Some(comm.len()) && is_primary(&m) {
                return Decomposability::Indecomposable {
                    certificate: format!("End(V) = k[d] with minimal polynomial {m} a power of an irreducible"),
                };
            }
        }
        if let Some(cert) = self.local_by_nilpotent_parts(&comm) {
            return Decomposability::Indecomposable { certificate: cert };
        }
        Decomposability::Unknown { reason: "no idempotent found and End(V) not certified local".into() }
    }

    /// `End(V) = k·I ⊕ N` with `N` a nilpotent ideal makes `End(V)` local.
    fn local_by_nilpotent_parts(&self, comm: &[Matrix]) -> Option<String> {
        let f = &self.field;
        let id = Matrix::identity(f, self.n);
        let mut parts = Vec::new();
        for d in comm {
            let m = minimal_polynomial(d);
            let e = m.degree()?;
            let c = single_root(&m)?;
            let check = Polynomial::new(f.clone(), vec![f.neg(&c), f.one()]).pow(e as u64);
            if check != m {
                return None;
            }
            parts.push(d.sub(&id.scale(&c)).flat().to_vec());
        }
        let nsp = Subspace::span(f, self.n * self.n, parts);
        if nsp.dim() + 1 != comm.len() {
            return None;
        }
        let nb = mats(f, self.n, nsp.basis());
        let ideal =
            nb.iter().all(|x| comm.iter().all(|d| nsp.contains(x.mul(d).flat()) && nsp.contains(d.mul(x).flat())));
        let nil = nb.iter().all(Matrix::is_nilpotent);
        (ideal && nil).then(|| "End(V) = k·I ⊕ N with N a nilpotent ideal".to_string())
    }

    pub fn is_semisimple(&self, seed: u64) -> Semisimplicity {
        match self.structure() {
            Ok(s) => {
                return if s.radical.is_zero() {
                    Semisimplicity::Semisimple { certificate: format!("radical of the hull is 0 ({:?})", s.algorithm) }
                } else {
                    Semisimplicity::NotSemisimple {
                        certificate: format!("radical of the hull has dimension {}", s.radical.dim()),
                        radical: Some(s.radical),
                    }
                };
            }
            Err(Error::RadicalUnavailable(_)) => {}
            Err(e) => return Semisimplicity::Unknown { reason: e.to_string() },
        }
        self.semisimple_fallback(seed)
    }

    fn semisimple_fallback(&self, seed: u64) -> Semisimplicity {
        match self.is_irreducible(seed) {
            Irreducibility::Irreducible { certificate, .. } => {
                return Semisimplicity::Semisimple { certificate: format!("irreducible: {certificate}") }
            }
            Irreducibility::Unknown { reason } => return Semisimplicity::Unknown { reason },
            Irreducibility::Reducible { .. } => {}
        }
        match self.is_indecomposable(seed) {
            Decomposability::Indecomposable { certificate } => Semisimplicity::NotSemisimple {
                certificate: format!("reducible and indecomposable: {certificate}"),
                radical: None,
            },
            Decomposability::Unknown { reason } => Semisimplicity::Unknown { reason },
            Decomposability::Decomposable { summands: (a, b), .. } => {
                let ra = self.restrict(&a).map(|m| m.semisimple_fallback(seed));
                let rb = self.restrict(&b).map(|m| m.semisimple_fallback(seed));
                match (ra, rb) {
                    (Ok(Semisimplicity::Semisimple { .. }), Ok(Semisimplicity::Semisimple { .. })) => {
                        Semisimplicity::Semisimple { certificate: "direct sum of semisimple summands".into() }
                    }
                    (Ok(n @ Semisimplicity::NotSemisimple { .. }), _)
                    | (_, Ok(n @ Semisimplicity::NotSemisimple { .. })) => n,
                    (Ok(Semisimplicity::Unknown { reason }), _) | (_, Ok(Semisimplicity::Unknown { reason })) => {
                        Semisimplicity::Unknown { reason }
                    }
                    (Err(e), _) | (_, Err(e)) => Semisimplicity::Unknown { reason: e.to_string() },
                }
            }
        }
    }
}

/// Whether `m` is provably a power of one irreducible polynomial:
/// `X^{p^a} - c` in characteristic `p`, `(X - c)^e`, or certified irreducible.
fn is_primary(m: &Polynomial) -> bool {
    let f = m.field();
    let Some(d) = m.degree() else { return false };
    let p = f.characteristic();
    if p > 0 && d > 1 {
        let mut q = d as u64;
        while q.is_multiple_of(p) {
            q /= p;
        }
        if q == 1 && m.coeffs()[1..d].iter().all(|c| f.is_zero(c)) {
            return true;
        }
    }
    if let Some(c) = single_root(m) {
        if Polynomial::new(f.clone(), vec![f.neg(&c), f.one()]).pow(d as u64) == *m {
            return true;
        }
    }
    certify_irreducible(m).is_ok()
}

/// The root `c` of a polynomial of the form `(X - c)^e`, if one is visible.
fn single_root(m: &Polynomial) -> Option<Elem> {
    let f = m.field();
    let e = m.degree()?;
    if e == 0 {
        return None;
    }
    let ef = f.from_i64(e as i64);
    if !f.is_zero(&ef) {
        let c = f.neg(&f.div(&m.coeffs()[e - 1], &ef).ok()?);
        return Some(c);
    }
    let (roots, _) = roots_in_field(m);
    if roots.len() == 1 {
        return roots.into_iter().next();
    }
    let g = f.generator()?;
    [g.clone(), f.neg(&g)].into_iter().find(|c| f.is_zero(&m.eval(c)))
}
