use std::fmt;

use crate::error::{Error, Result};
use crate::fields::{Elem, Field};

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Matrix unit `E_ij` (zero-based indices).
    pub fn unit(field: &Field, n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        m.data[i * n + j] = field.one();
        m
    }

    pub fn diag(field: &Field, entries: &[Elem]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(field, n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Matrix { field: field.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(field: &Field, rows: &[&[i64]]) -> Self {
        let v = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Self::from_rows(field, v).expect("rectangular literal")
    }

    /// Parses rows of element strings.
    pub fn parse(field: &Field, rows: &[&[&str]]) -> Result<Self> {
        let v = rows
            .iter()
            .map(|r| r.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, v)
    }

    /// Square matrix from a flattened row-major vector.
    pub fn from_flat(field: &Field, n: usize, v: &[Elem]) -> Self {
        assert_eq!(v.len(), n * n);
        Matrix { field: field.clone(), rows: n, cols: n, data: v.to_vec() }
    }

    pub fn from_shape(field: &Field, rows: usize, cols: usize, v: Vec<Elem>) -> Self {
        assert_eq!(v.len(), rows * cols);
        Matrix { field: field.clone(), rows, cols, data: v }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Row-major flattening.
    pub fn flat(&self) -> &[Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.field, self.rows)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { data, ..self.clone_shape() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Matrix { data, ..self.clone_shape() }
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Matrix { data: self.data.iter().map(|a| f.neg(a)).collect(), ..self.clone_shape() }
    }

    pub fn scale(&self, c: &Elem) -> Self {
        let f = &self.field;
        Matrix { data: self.data.iter().map(|a| f.mul(a, c)).collect(), ..self.clone_shape() }
    }

    fn clone_shape(&self) -> Self {
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data: Vec::new() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    /// Lie bracket `xy - yx`.
    pub fn bracket(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Elem {
        let f = &self.field;
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows as u64).is_zero()
    }

    /// Reduced row-echelon form, rank and pivot columns.
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !f.is_zero(m.get(i, c))) else { continue };
            if p != r {
                for j in 0..self.cols {
                    m.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).unwrap();
            for j in c..self.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || f.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..self.cols {
                    if f.is_zero(m.get(r, j)) {
                        continue;
                    }
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of `{v : self * v = 0}`, one vector per free column, in
    /// increasing order of the free column.
    pub fn kernel(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let (r, rank, pivots) = self.rref();
        let mut out = Vec::new();
        let mut pi = 0;
        for c in 0..self.cols {
            if pi < pivots.len() && pivots[pi] == c {
                pi += 1;
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[c] = f.one();
            for (row, &pc) in pivots.iter().enumerate().take(rank) {
                v[pc] = f.neg(r.get(row, c));
            }
            out.push(v);
        }
        out
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let f = &self.field;
        if n == 0 {
            return Ok(self.clone());
        }
        let mut aug = Self::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, f.one());
        }
        let (r, _, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Invalid("matrix is singular".into()));
        }
        let mut out = Self::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn det(&self) -> Elem {
        assert!(self.is_square());
        let f = &self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !f.is_zero(m.get(i, c))) else { return f.zero() };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = f.neg(&det);
            }
            let piv = m.get(c, c).clone();
            det = f.mul(&det, &piv);
            let inv = f.inv(&piv).unwrap();
            for i in c + 1..n {
                if f.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = f.mul(m.get(i, c), &inv);
                for j in c..n {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// `g * self * g^{-1}`.
    pub fn conjugate(&self, g: &Matrix, g_inv: &Matrix) -> Matrix {
        g.mul(self).mul(g_inv)
    }

    /// Matrix in the same shape with entries mapped through `f`.
    pub fn map(&self, field: &Field, f: impl Fn(&Elem) -> Elem) -> Matrix {
        Matrix { field: field.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Entry strings, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|e| self.field.format(e)).collect()).collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.to_strings().into_iter().map(|r| format!("[{}]", r.join(", "))).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// A particular solution and a basis of the kernel.
pub type Solution = (Vec<Elem>, Vec<Vec<Elem>>);

/// Solves `a x = b`, or `None` if the system is inconsistent.
pub fn solve_linear(a: &Matrix, b: &[Elem]) -> Result<Option<Solution>> {
    if b.len() != a.rows() {
        return Err(Error::Dimension(format!("right-hand side has length {}, expected {}", b.len(), a.rows())));
    }
    let f = a.field();
    let (n, m) = (a.rows(), a.cols());
    let mut aug = Matrix::zeros(f, n, m + 1);
    for (i, bi) in b.iter().enumerate() {
        for j in 0..m {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, m, bi.clone());
    }
    let (r, rank, pivots) = aug.rref();
    if pivots.last() == Some(&m) {
        return Ok(None);
    }
    let mut x = vec![f.zero(); m];
    for (row, &pc) in pivots.iter().enumerate().take(rank) {
        x[pc] = r.get(row, m).clone();
    }
    Ok(Some((x, a.kernel())))
}
