//! Exact rational scalars, dense matrices and graded tensor blocks over a
//! two-term graded space `g0 ⊕ g_{-1}`.
//!
//! Combined indexing: basis vectors of `g0` come first (`0..n0`), followed by
//! those of `g_{-1}` (`n0..n0+n1`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational scalar. Always normalized (positive denominator, gcd 1).
pub type Scalar = BigRational;

/// Coefficient vector in a fixed basis.
pub type Vector = Vec<Scalar>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradedError {
    #[error("tensor has nonzero components outside the expected degree ({0})")]
    WrongDegree(&'static str),
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("cannot parse rational '{0}'")]
    Parse(String),
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"p/q"` or `"-p/q"`; a leading unicode minus is accepted.
pub fn parse_scalar(s: &str) -> Result<Scalar, GradedError> {
    let t = s.trim().replace('\u{2212}', "-");
    let err = || GradedError::Parse(s.to_string());
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t.as_str(), "1"),
    };
    let n: BigInt = num.parse().map_err(|_| err())?;
    let d: BigInt = den.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Scalar::new(n, d))
}

/// Canonical text form: `"3"`, `"-3/2"`.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

pub fn vadd(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vsub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vscale(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn vneg(v: &[Scalar]) -> Vector {
    v.iter().map(|x| -x).collect()
}

pub fn format_vec(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

/// Dense row-major matrix of scalars.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn add_at(&mut self, i: usize, j: usize, x: &Scalar) {
        self.data[i * self.cols + j] += x;
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let mut out = zero_vec(self.rows);
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, k);
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| c * a).collect() }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&int(-1))
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && self.add(&self.transpose()).is_zero()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && self.sub(&self.transpose()).is_zero()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).recip();
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = zero_vec(self.cols);
                v[f] = Scalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

/// Two-term graded space `g_{-1} -> g0` with basis labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSpace2 {
    pub dim0: usize,
    pub dim_m1: usize,
    pub labels0: Vec<String>,
    pub labels_m1: Vec<String>,
}

impl GradedSpace2 {
    pub fn new(dim0: usize, dim_m1: usize) -> Self {
        GradedSpace2 {
            dim0,
            dim_m1,
            labels0: (1..=dim0).map(|i| format!("x{i}")).collect(),
            labels_m1: (1..=dim_m1).map(|i| format!("h{i}")).collect(),
        }
    }

    pub fn with_labels(labels0: Vec<String>, labels_m1: Vec<String>) -> Self {
        GradedSpace2 { dim0: labels0.len(), dim_m1: labels_m1.len(), labels0, labels_m1 }
    }

    pub fn total(&self) -> usize {
        self.dim0 + self.dim_m1
    }

    /// Label of a combined index.
    pub fn label(&self, u: usize) -> &str {
        if u < self.dim0 {
            &self.labels0[u]
        } else {
            &self.labels_m1[u - self.dim0]
        }
    }
}

/// Degree of a homogeneous piece of a two-term space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Degree {
    Zero,
    MinusOne,
}

/// A linear map between homogeneous pieces of two-term spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinMap {
    pub source: Degree,
    pub target: Degree,
    pub matrix: Matrix,
}

impl LinMap {
    pub fn new(source: Degree, target: Degree, matrix: Matrix) -> Self {
        LinMap { source, target, matrix }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.apply(v)
    }
}

/// Element of `(g0 ⊕ g_{-1}) ⊗ (g0 ⊕ g_{-1})`, stored as four blocks.
///
/// `b0m[i][a]` is the coefficient of `x_i ⊗ h_a`, `bm0[a][i]` that of
/// `h_a ⊗ x_i`, and similarly for `b00`, `bmm`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    pub b00: Matrix,
    pub b0m: Matrix,
    pub bm0: Matrix,
    pub bmm: Matrix,
}

impl TensorElement {
    pub fn zeros(n0: usize, n1: usize) -> Self {
        TensorElement {
            b00: Matrix::zeros(n0, n0),
            b0m: Matrix::zeros(n0, n1),
            bm0: Matrix::zeros(n1, n0),
            bmm: Matrix::zeros(n1, n1),
        }
    }

    pub fn n0(&self) -> usize {
        self.b00.rows()
    }

    pub fn n1(&self) -> usize {
        self.bmm.rows()
    }

    /// Builds from a dense matrix over the combined basis.
    pub fn from_full(n0: usize, n1: usize, full: &Matrix) -> Self {
        let mut t = Self::zeros(n0, n1);
        for u in 0..n0 + n1 {
            for v in 0..n0 + n1 {
                t.set(u, v, full.get(u, v).clone());
            }
        }
        t
    }

    pub fn to_full(&self) -> Matrix {
        let n = self.n0() + self.n1();
        let mut m = Matrix::zeros(n, n);
        for u in 0..n {
            for v in 0..n {
                m.set(u, v, self.get(u, v).clone());
            }
        }
        m
    }

    fn locate(&self, u: usize, v: usize) -> (&Matrix, usize, usize) {
        let n0 = self.n0();
        match (u < n0, v < n0) {
            (true, true) => (&self.b00, u, v),
            (true, false) => (&self.b0m, u, v - n0),
            (false, true) => (&self.bm0, u - n0, v),
            (false, false) => (&self.bmm, u - n0, v - n0),
        }
    }

    /// Coefficient of `e_u ⊗ e_v` in combined indexing.
    pub fn get(&self, u: usize, v: usize) -> &Scalar {
        let (m, i, j) = self.locate(u, v);
        m.get(i, j)
    }

    pub fn set(&mut self, u: usize, v: usize, x: Scalar) {
        let n0 = self.n0();
        match (u < n0, v < n0) {
            (true, true) => self.b00.set(u, v, x),
            (true, false) => self.b0m.set(u, v - n0, x),
            (false, true) => self.bm0.set(u - n0, v, x),
            (false, false) => self.bmm.set(u - n0, v - n0, x),
        }
    }

    pub fn add_at(&mut self, u: usize, v: usize, x: &Scalar) {
        let cur = self.get(u, v) + x;
        self.set(u, v, cur);
    }

    pub fn add(&self, o: &Self) -> Self {
        TensorElement {
            b00: self.b00.add(&o.b00),
            b0m: self.b0m.add(&o.b0m),
            bm0: self.bm0.add(&o.bm0),
            bmm: self.bmm.add(&o.bmm),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        TensorElement {
            b00: self.b00.scale(c),
            b0m: self.b0m.scale(c),
            bm0: self.bm0.scale(c),
            bmm: self.bmm.scale(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.b00.is_zero() && self.b0m.is_zero() && self.bm0.is_zero() && self.bmm.is_zero()
    }

    /// True when only the `g0⊗g_{-1}` and `g_{-1}⊗g0` blocks are nonzero.
    pub fn is_degree_one(&self) -> bool {
        self.b00.is_zero() && self.bmm.is_zero()
    }

    /// True when only the `g_{-1}⊗g_{-1}` block is nonzero.
    pub fn is_degree_zero(&self) -> bool {
        self.b00.is_zero() && self.b0m.is_zero() && self.bm0.is_zero()
    }

    /// Nonzero entries as `(u, v, coefficient)` in combined indexing.
    pub fn terms(&self) -> Vec<(usize, usize, Scalar)> {
        let n = self.n0() + self.n1();
        let mut out = Vec::new();
        for u in 0..n {
            for v in 0..n {
                let c = self.get(u, v);
                if !c.is_zero() {
                    out.push((u, v, c.clone()));
                }
            }
        }
        out
    }
}

/// Plain transposition `u⊗v ↦ v⊗u`, no Koszul sign.
pub fn exchange(t: &TensorElement) -> TensorElement {
    TensorElement {
        b00: t.b00.transpose(),
        b0m: t.bm0.transpose(),
        bm0: t.b0m.transpose(),
        bmm: t.bmm.transpose(),
    }
}

fn check_d(d: &Matrix, t: &TensorElement) -> Result<(), GradedError> {
    if d.rows() != t.n0() || d.cols() != t.n1() {
        return Err(GradedError::Shape(format!(
            "d is {}x{} but tensor has dims {}|{}",
            d.rows(),
            d.cols(),
            t.n0(),
            t.n1()
        )));
    }
    Ok(())
}

/// `(d⊗1 − 1⊗d)(x⊗k + h⊗y) = dh⊗y − x⊗dk`, landing in `g0⊗g0`.
///
/// `d` is the `n0 × n1` matrix of `d: g_{-1} → g0` (column `a` is `d(h_a)`).
pub fn d_tensor_deg1(d: &Matrix, t: &TensorElement) -> Result<TensorElement, GradedError> {
    check_d(d, t)?;
    if !t.is_degree_one() {
        return Err(GradedError::WrongDegree("expected only g0⊗g-1 and g-1⊗g0 blocks"));
    }
    let mut out = TensorElement::zeros(t.n0(), t.n1());
    out.b00 = d.mul(&t.bm0).sub(&t.b0m.mul(&d.transpose()));
    Ok(out)
}

/// `(d⊗1 + 1⊗d)(h⊗k) = dh⊗k + h⊗dk`, landing in the mixed blocks.
pub fn d_tensor_deg0(d: &Matrix, t: &TensorElement) -> Result<TensorElement, GradedError> {
    check_d(d, t)?;
    if !t.is_degree_zero() {
        return Err(GradedError::WrongDegree("expected only the g-1⊗g-1 block"));
    }
    let mut out = TensorElement::zeros(t.n0(), t.n1());
    out.b0m = d.mul(&t.bmm);
    out.bm0 = t.bmm.mul(&d.transpose());
    Ok(out)
}

/// Element of the triple tensor power of `g0 ⊕ g_{-1}`, dense over the
/// combined basis. Blocks by degree pattern are available through [`TensorCube::block`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorCube {
    n0: usize,
    n1: usize,
    data: Vec<Scalar>,
}

impl TensorCube {
    pub fn zeros(n0: usize, n1: usize) -> Self {
        let n = n0 + n1;
        TensorCube { n0, n1, data: vec![Scalar::zero(); n * n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n0 + self.n1
    }

    fn idx(&self, u: usize, v: usize, w: usize) -> usize {
        let n = self.dim();
        (u * n + v) * n + w
    }

    pub fn get(&self, u: usize, v: usize, w: usize) -> &Scalar {
        &self.data[self.idx(u, v, w)]
    }

    pub fn add_at(&mut self, u: usize, v: usize, w: usize, x: &Scalar) {
        let i = self.idx(u, v, w);
        self.data[i] += x;
    }

    pub fn add(&self, o: &Self) -> Self {
        TensorCube {
            n0: self.n0,
            n1: self.n1,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    /// Block for a degree pattern; `true` selects `g0`, `false` selects `g_{-1}`.
    /// Returned as a flattened rank-3 array in the block's own indices.
    pub fn block(&self, pattern: [bool; 3]) -> Vec<Scalar> {
        let range = |zero: bool| if zero { 0..self.n0 } else { self.n0..self.n0 + self.n1 };
        let mut out = Vec::new();
        for u in range(pattern[0]) {
            for v in range(pattern[1]) {
                for w in range(pattern[2]) {
                    out.push(self.get(u, v, w).clone());
                }
            }
        }
        out
    }

    /// Nonzero entries in combined indexing.
    pub fn terms(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    let c = self.get(u, v, w);
                    if !c.is_zero() {
                        out.push((u, v, w, c.clone()));
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use num_traits::Signed;

    fn ex47_d() -> Matrix {
        // d(e1*) = -e2, d(e2*) = e1; columns are images of e1*, e2*.
        Matrix::from_i64(&[&[0, 1], &[-1, 0]])
    }

    fn ex47_r() -> TensorElement {
        let mut r = TensorElement::zeros(2, 2);
        r.b0m = Matrix::identity(2);
        r.bm0 = Matrix::identity(2).neg();
        r
    }

    #[test]
    fn scalar_text_round_trip() {
        for s in ["0", "3", "-3/2", "7/9"] {
            assert_eq!(format_scalar(&parse_scalar(s).unwrap()), s);
        }
        assert_eq!(parse_scalar("4/8").unwrap(), frac(1, 2));
        assert_eq!(parse_scalar("\u{2212}3/2").unwrap(), frac(-3, 2));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn d_tensor_deg1_kills_canonical_r() {
        let out = d_tensor_deg1(&ex47_d(), &ex47_r()).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn d_tensor_deg0_on_basis_tensor() {
        let mut t = TensorElement::zeros(2, 2);
        t.bmm.set(0, 1, int(1)); // e1* ⊗ e2*
        let out = d_tensor_deg0(&ex47_d(), &t).unwrap();
        // (−e2)⊗e2* + e1*⊗e1
        let mut want = TensorElement::zeros(2, 2);
        want.b0m.set(1, 1, int(-1));
        want.bm0.set(0, 0, int(1));
        assert_eq!(out, want);
    }

    #[test]
    fn wrong_degree_inputs_are_rejected() {
        let mut t = TensorElement::zeros(2, 2);
        t.b00.set(0, 0, int(1));
        assert!(d_tensor_deg1(&ex47_d(), &t).is_err());
        assert!(d_tensor_deg0(&ex47_d(), &ex47_r()).is_err());
    }

    #[test]
    fn zero_differential_gives_zero() {
        let d = Matrix::zeros(2, 2);
        assert!(d_tensor_deg1(&d, &ex47_r()).unwrap().is_zero());
    }

    #[test]
    fn exchange_of_canonical_r_is_its_negative() {
        let r = ex47_r();
        assert!(r.add(&exchange(&r)).is_zero());
    }

    #[test]
    fn inverse_and_nullspace() {
        let m = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        let s = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(s.inverse().is_none());
        let ker = s.nullspace();
        assert_eq!(ker.len(), 1);
        assert!(is_zero_vec(&s.apply(&ker[0])));
    }

    fn small() -> impl Strategy<Value = i64> {
        -4i64..=4
    }

    fn scalar() -> impl Strategy<Value = Scalar> {
        (small(), 1i64..=3).prop_map(|(n, d)| frac(n, d))
    }

    fn tensor(n0: usize, n1: usize) -> impl Strategy<Value = TensorElement> {
        proptest::collection::vec(scalar(), (n0 + n1) * (n0 + n1)).prop_map(move |xs| {
            let n = n0 + n1;
            let full = Matrix::from_rows(xs.chunks(n).map(<[Scalar]>::to_vec).collect());
            TensorElement::from_full(n0, n1, &full)
        })
    }

    fn matrix(r: usize, c: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(small(), r * c).prop_map(move |xs| {
            Matrix::from_rows(xs.chunks(c).map(|ch| ch.iter().map(|&x| int(x)).collect()).collect())
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            if !a.is_zero() {
                prop_assert_eq!(&a * a.recip(), Scalar::one());
            }
            prop_assert!(a.denom().is_positive());
        }

        #[test]
        fn exchange_is_involution(t in tensor(2, 3)) {
            prop_assert_eq!(exchange(&exchange(&t)), t);
        }

        #[test]
        fn tensor_differential_squares_to_zero(d in matrix(3, 2), t in tensor(3, 2)) {
            let mut h = TensorElement::zeros(3, 2);
            h.bmm = t.bmm.clone();
            let once = d_tensor_deg0(&d, &h).unwrap();
            prop_assert!(d_tensor_deg1(&d, &once).unwrap().is_zero());
        }

        #[test]
        fn tensor_differentials_are_linear(d in matrix(2, 2), s in tensor(2, 2), t in tensor(2, 2), c in scalar()) {
            let deg1 = |x: &TensorElement| {
                let mut y = x.clone();
                y.b00 = Matrix::zeros(2, 2);
                y.bmm = Matrix::zeros(2, 2);
                y
            };
            let (s1, t1) = (deg1(&s), deg1(&t));
            let lhs = d_tensor_deg1(&d, &s1.scale(&c).add(&t1)).unwrap();
            let rhs = d_tensor_deg1(&d, &s1).unwrap().scale(&c).add(&d_tensor_deg1(&d, &t1).unwrap());
            prop_assert_eq!(lhs, rhs);
            let ex = exchange(&s.scale(&c).add(&t));
            prop_assert_eq!(ex, exchange(&s).scale(&c).add(&exchange(&t)));
        }
    }
}
