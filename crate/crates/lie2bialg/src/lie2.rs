//! Strict Lie 2-algebras, their semidirect Lie algebras, strict homomorphisms
//! and strict representations on finite complexes.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::graded::{
    axpy, int, is_zero_vec, vadd, vneg, vsub, zero_vec, GradedSpace2, Matrix, Scalar,
    TensorElement, Vector,
};
use crate::report::{Check, Report};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Lie2Error {
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("axioms fail: {}", .0.join(", "))]
    Axioms(Vec<String>),
}

/// Index into a flattened rank-3 array of shape `a × b × c`.
#[inline]
pub(crate) fn idx3(b: usize, c: usize, i: usize, j: usize, k: usize) -> usize {
    (i * b + j) * c + k
}

/// Finite-dimensional Lie algebra given by structure constants
/// `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    c: Vec<Scalar>,
}

impl LieAlgebra {
    pub fn new(dim: usize, c: Vec<Scalar>) -> Result<Self, Lie2Error> {
        if c.len() != dim * dim * dim {
            return Err(Lie2Error::Shape(format!("expected {} constants, got {}", dim.pow(3), c.len())));
        }
        Ok(LieAlgebra { dim, c })
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, c: vec![Scalar::zero(); dim * dim * dim] }
    }

    /// Builds from a function giving `[e_i, e_j]` as a coefficient vector.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut c = vec![Scalar::zero(); dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                for (k, x) in f(i, j).into_iter().enumerate() {
                    c[idx3(dim, dim, i, j, k)] = x;
                }
            }
        }
        LieAlgebra { dim, c }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[idx3(self.dim, self.dim, i, j, k)]
    }

    pub fn constants(&self) -> &[Scalar] {
        &self.c
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let s = idx3(self.dim, self.dim, i, j, 0);
        self.c[s..s + self.dim].to_vec()
    }

    pub fn bracket(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                axpy(&mut out, &(x * y), &self.bracket_basis(i, j));
            }
        }
        out
    }

    /// Matrix of `ad(e_i) = [e_i, ·]`.
    pub fn ad(&self, i: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.bracket_basis(i, j)).collect();
        Matrix::from_cols(self.dim, &cols)
    }

    pub fn is_abelian(&self) -> bool {
        is_zero_vec(&self.c)
    }

    pub fn check(&self) -> Report {
        let n = self.dim;
        let mut skew = Check::new("antisymmetry", "bracket is antisymmetric");
        let mut jac = Check::new("jacobi", "Jacobi identity");
        let e = |i: usize| crate::graded::unit_vec(n, i);
        for i in 0..n {
            for j in i..n {
                let s = vadd(&self.bracket_basis(i, j), &self.bracket_basis(j, i));
                skew.expect_zero(&[i, j], &s);
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket(&self.bracket_basis(i, j), &e(k));
                    let b = self.bracket(&self.bracket_basis(j, k), &e(i));
                    let c = self.bracket(&self.bracket_basis(k, i), &e(j));
                    jac.expect_zero(&[i, j, k], &vadd(&vadd(&a, &b), &c));
                }
            }
        }
        let mut r = Report::new();
        r.push(skew);
        r.push(jac);
        r
    }
}

/// A two-term complex `g_{-1} --d--> g0` with a full bilinear bracket table on
/// the combined basis (g0 first). Every ordered pair is stored, so tables that
/// fail antisymmetry or grading can be represented and diagnosed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lie2Table {
    pub space: GradedSpace2,
    /// `n0 × n1`; column `a` is `d(h_a)`.
    pub d: Matrix,
    table: Vec<Vector>,
}

impl Lie2Table {
    pub fn zero(space: GradedSpace2, d: Matrix) -> Self {
        let n = space.total();
        Lie2Table { table: vec![zero_vec(n); n * n], space, d }
    }

    pub fn n0(&self) -> usize {
        self.space.dim0
    }

    pub fn n1(&self) -> usize {
        self.space.dim_m1
    }

    pub fn n(&self) -> usize {
        self.space.total()
    }

    pub fn set(&mut self, u: usize, v: usize, value: Vector) {
        let n = self.n();
        self.table[u * n + v] = value;
    }

    pub fn get(&self, u: usize, v: usize) -> &Vector {
        &self.table[u * self.n() + v]
    }

    pub fn bracket(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.n());
        for (u, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (v, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    axpy(&mut out, &(x * y), self.get(u, v));
                }
            }
        }
        out
    }

    pub fn unit(&self, u: usize) -> Vector {
        crate::graded::unit_vec(self.n(), u)
    }

    /// The differential on combined vectors: sends the `g_{-1}` part through `d`.
    pub fn differential(&self, v: &[Scalar]) -> Vector {
        let n0 = self.n0();
        let dh = self.d.apply(&v[n0..]);
        let mut out = zero_vec(self.n());
        out[..n0].clone_from_slice(&dh);
        out
    }

    /// `g0` coefficients of a combined vector.
    pub fn part0<'a>(&self, v: &'a [Scalar]) -> &'a [Scalar] {
        &v[..self.n0()]
    }

    /// `g_{-1}` coefficients of a combined vector.
    pub fn part1<'a>(&self, v: &'a [Scalar]) -> &'a [Scalar] {
        &v[self.n0()..]
    }

    pub fn embed0(&self, x: &[Scalar]) -> Vector {
        let mut v = zero_vec(self.n());
        v[..self.n0()].clone_from_slice(x);
        v
    }

    pub fn embed1(&self, h: &[Scalar]) -> Vector {
        let mut v = zero_vec(self.n());
        v[self.n0()..].clone_from_slice(h);
        v
    }

    fn label(&self, u: usize) -> String {
        self.space.label(u).to_string()
    }

    /// Checks grading plus the seven defining identities on all basis tuples.
    pub fn check_axioms(&self) -> Report {
        let (n0, n) = (self.n0(), self.n());
        let l = |u: usize| self.label(u);
        let mut grading = Check::new("grading", "bracket respects the grading");
        let mut skew00 = Check::new("skew_00", "[x,y] = -[y,x]");
        let mut skew01 = Check::new("skew_01", "[x,h] = -[h,x]");
        let mut vanish = Check::new("vanishing_mm", "[h,k] = 0");
        let mut equiv = Check::new("d_equivariance", "d[x,h] = [x,dh]");
        let mut peiffer = Check::new("peiffer", "[dh,k] = [h,dk]");
        let mut jacobi = Check::new("jacobi", "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0");
        let mut mixed = Check::new("mixed_jacobi", "[[x,y],h] + [[y,h],x] + [[h,x],y] = 0");

        for u in 0..n {
            for v in 0..n {
                let b = self.get(u, v);
                match (u < n0, v < n0) {
                    (true, true) => {
                        grading.expect_zero(&[l(u), l(v)], self.part1(b));
                    }
                    (false, false) => {
                        vanish.expect_zero(&[l(u), l(v)], b);
                    }
                    _ => {
                        grading.expect_zero(&[l(u), l(v)], self.part0(b));
                    }
                }
            }
        }
        for i in 0..n0 {
            for j in i..n0 {
                skew00.expect_zero(&[l(i), l(j)], &vadd(self.get(i, j), self.get(j, i)));
            }
            for a in n0..n {
                skew01.expect_zero(&[l(i), l(a)], &vadd(self.get(i, a), self.get(a, i)));
                let lhs = self.differential(self.get(i, a));
                let rhs = self.bracket(&self.unit(i), &self.differential(&self.unit(a)));
                equiv.compare(&[l(i), l(a)], &lhs, &rhs);
            }
        }
        for a in n0..n {
            for b in n0..n {
                let lhs = self.bracket(&self.differential(&self.unit(a)), &self.unit(b));
                let rhs = self.bracket(&self.unit(a), &self.differential(&self.unit(b)));
                peiffer.compare(&[l(a), l(b)], &lhs, &rhs);
            }
        }
        let cyc = |p: usize, q: usize, r: usize| -> Vector {
            let e = |w| self.unit(w);
            let a = self.bracket(self.get(p, q), &e(r));
            let b = self.bracket(self.get(q, r), &e(p));
            let c = self.bracket(self.get(r, p), &e(q));
            vadd(&vadd(&a, &b), &c)
        };
        for i in 0..n0 {
            for j in 0..n0 {
                for k in 0..n0 {
                    jacobi.expect_zero(&[l(i), l(j), l(k)], &cyc(i, j, k));
                }
                for a in n0..n {
                    mixed.expect_zero(&[l(i), l(j), l(a)], &cyc(i, j, a));
                }
            }
        }
        let mut r = Report::new();
        for c in [grading, skew00, skew01, vanish, equiv, peiffer, jacobi, mixed] {
            r.push(c);
        }
        r
    }
}

/// Strict Lie 2-algebra stored by its independent structure constants:
/// `[x_i, x_j] = Σ_k bracket00[i][j][k] x_k` and `[x_i, h_a] = Σ_b bracket01[i][a][b] h_b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictLie2Algebra {
    pub space: GradedSpace2,
    /// `n0 × n1`; column `a` is `d(h_a)`.
    pub d: Matrix,
    pub bracket00: Vec<Scalar>,
    pub bracket01: Vec<Scalar>,
}

impl StrictLie2Algebra {
    pub fn new(
        space: GradedSpace2,
        d: Matrix,
        bracket00: Vec<Scalar>,
        bracket01: Vec<Scalar>,
    ) -> Result<Self, Lie2Error> {
        let (n0, n1) = (space.dim0, space.dim_m1);
        if d.rows() != n0 || d.cols() != n1 {
            return Err(Lie2Error::Shape(format!("d must be {n0}x{n1}, got {}x{}", d.rows(), d.cols())));
        }
        if bracket00.len() != n0 * n0 * n0 || bracket01.len() != n0 * n1 * n1 {
            return Err(Lie2Error::Shape("bracket table sizes do not match dimensions".into()));
        }
        Ok(StrictLie2Algebra { space, d, bracket00, bracket01 })
    }

    pub fn abelian(n0: usize, n1: usize) -> Self {
        StrictLie2Algebra {
            space: GradedSpace2::new(n0, n1),
            d: Matrix::zeros(n0, n1),
            bracket00: vec![Scalar::zero(); n0 * n0 * n0],
            bracket01: vec![Scalar::zero(); n0 * n1 * n1],
        }
    }

    pub fn n0(&self) -> usize {
        self.space.dim0
    }

    pub fn n1(&self) -> usize {
        self.space.dim_m1
    }

    pub fn c00(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n0 = self.n0();
        &self.bracket00[idx3(n0, n0, i, j, k)]
    }

    pub fn c01(&self, i: usize, a: usize, b: usize) -> &Scalar {
        let n1 = self.n1();
        &self.bracket01[idx3(n1, n1, i, a, b)]
    }

    pub fn set_c00(&mut self, i: usize, j: usize, k: usize, x: Scalar) {
        let n0 = self.n0();
        self.bracket00[idx3(n0, n0, i, j, k)] = x;
    }

    pub fn set_c01(&mut self, i: usize, a: usize, b: usize, x: Scalar) {
        let n1 = self.n1();
        self.bracket01[idx3(n1, n1, i, a, b)] = x;
    }

    /// Full table with `[h,x] = -[x,h]` and `[h,k] = 0`.
    pub fn to_table(&self) -> Lie2Table {
        let (n0, n1) = (self.n0(), self.n1());
        let mut t = Lie2Table::zero(self.space.clone(), self.d.clone());
        for i in 0..n0 {
            for j in 0..n0 {
                let v: Vector = (0..n0).map(|k| self.c00(i, j, k).clone()).collect();
                t.set(i, j, t.embed0(&v));
            }
            for a in 0..n1 {
                let v: Vector = (0..n1).map(|b| self.c01(i, a, b).clone()).collect();
                let e = t.embed1(&v);
                t.set(n0 + a, i, vneg(&e));
                t.set(i, n0 + a, e);
            }
        }
        t
    }

    /// Reads `[x,y]` and `[x,h]` from a table; other entries are ignored.
    pub fn from_table(t: &Lie2Table) -> Self {
        let (n0, n1) = (t.n0(), t.n1());
        let mut l = StrictLie2Algebra::abelian(n0, n1);
        l.space = t.space.clone();
        l.d = t.d.clone();
        for i in 0..n0 {
            for j in 0..n0 {
                for k in 0..n0 {
                    l.set_c00(i, j, k, t.get(i, j)[k].clone());
                }
            }
            for a in 0..n1 {
                for b in 0..n1 {
                    l.set_c01(i, a, b, t.get(i, n0 + a)[n0 + b].clone());
                }
            }
        }
        l
    }
}

pub fn check_strict_axioms(l: &StrictLie2Algebra) -> Report {
    l.to_table().check_axioms()
}

/// Lie algebra on `g0 ⊕ g_{-1}` with `[x+h, y+k] = [x,y] + [x,k] + [h,y]`.
pub fn semidirect(l: &StrictLie2Algebra) -> Result<LieAlgebra, Lie2Error> {
    let report = check_strict_axioms(l);
    if !report.passed() {
        return Err(Lie2Error::Axioms(report.failed_names().into_iter().map(String::from).collect()));
    }
    Ok(semidirect_of_table(&l.to_table()))
}

/// Semidirect Lie algebra read off a table without checking axioms.
pub fn semidirect_of_table(t: &Lie2Table) -> LieAlgebra {
    LieAlgebra::from_fn(t.n(), |u, v| t.get(u, v).clone())
}

/// Checks that `(f0, f1)` is a strict homomorphism `L → L'`.
/// `f0` is `n0' × n0`, `f1` is `n1' × n1`.
pub fn check_homomorphism(
    f0: &Matrix,
    f1: &Matrix,
    l: &StrictLie2Algebra,
    lp: &StrictLie2Algebra,
) -> Result<Report, Lie2Error> {
    let (n0, n1, m0, m1) = (l.n0(), l.n1(), lp.n0(), lp.n1());
    if (f0.rows(), f0.cols(), f1.rows(), f1.cols()) != (m0, n0, m1, n1) {
        return Err(Lie2Error::Shape("homomorphism component shapes".into()));
    }
    let (t, tp) = (l.to_table(), lp.to_table());
    let mut chain = Check::new("commutes_with_d", "f0 d = d' f1");
    let mut br0 = Check::new("preserves_bracket_00", "f0[x,y] = [f0 x, f0 y]'");
    let mut br1 = Check::new("preserves_bracket_01", "f1[x,h] = [f0 x, f1 h]'");
    for a in 0..n1 {
        let lhs = f0.apply(&l.d.col(a));
        let rhs = lp.d.apply(&f1.col(a));
        chain.compare(&[t.space.label(n0 + a)], &lhs, &rhs);
    }
    for i in 0..n0 {
        for j in 0..n0 {
            let lhs = f0.apply(t.part0(t.get(i, j)));
            let rhs = tp.bracket(&tp.embed0(&f0.col(i)), &tp.embed0(&f0.col(j)));
            br0.compare(&[t.space.label(i), t.space.label(j)], &lhs, tp.part0(&rhs));
        }
        for a in 0..n1 {
            let lhs = f1.apply(t.part1(t.get(i, n0 + a)));
            let rhs = tp.bracket(&tp.embed0(&f0.col(i)), &tp.embed1(&f1.col(a)));
            br1.compare(&[t.space.label(i), t.space.label(n0 + a)], &lhs, tp.part1(&rhs));
        }
    }
    let mut r = Report::new();
    r.push(chain);
    r.push(br0);
    r.push(br1);
    Ok(r)
}

/// A finite complex `V_0 → V_1 → … → V_{k-1}` indexed by level; level `s`
/// sits in degree `base_degree + s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex {
    pub base_degree: i32,
    pub dims: Vec<usize>,
    /// `diff[s]` maps level `s` to level `s+1`.
    pub diff: Vec<Matrix>,
}

impl Complex {
    pub fn levels(&self) -> usize {
        self.dims.len()
    }

    pub fn degree(&self, level: usize) -> i32 {
        self.base_degree + level as i32
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// A strict representation of a two-term algebra on a complex.
/// `mu0[i][s]` is the action of `x_i` on level `s`; `mu1[a][s]` maps level
/// `s+1` to level `s` and is the action of `h_a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictRep {
    pub complex: Complex,
    pub mu0: Vec<Vec<Matrix>>,
    pub mu1: Vec<Vec<Matrix>>,
}

fn combine(mats: &[Vec<Matrix>], coeffs: &[Scalar], level: usize) -> Matrix {
    let mut out: Option<Matrix> = None;
    for (c, m) in coeffs.iter().zip(mats) {
        let term = m[level].scale(c);
        out = Some(match out {
            None => term,
            Some(o) => o.add(&term),
        });
    }
    out.expect("nonempty coefficient list")
}

impl StrictRep {
    pub fn n0(&self) -> usize {
        self.mu0.len()
    }

    pub fn n1(&self) -> usize {
        self.mu1.len()
    }

    /// Action of the `g0` element with coefficients `x` on level `s`.
    pub fn mu0_at(&self, x: &[Scalar], s: usize) -> Matrix {
        if self.mu0.is_empty() {
            return Matrix::zeros(self.complex.dims[s], self.complex.dims[s]);
        }
        combine(&self.mu0, x, s)
    }

    /// Action of the `g_{-1}` element with coefficients `h`, level `s+1 → s`.
    pub fn mu1_at(&self, h: &[Scalar], s: usize) -> Matrix {
        if self.mu1.is_empty() {
            return Matrix::zeros(self.complex.dims[s], self.complex.dims[s + 1]);
        }
        combine(&self.mu1, h, s)
    }

    /// For a two-term target, applies `μ0(x)` to a vector in the target's
    /// combined layout (degree-0 part first, i.e. level 1 then level 0).
    pub fn act0(&self, x: &[Scalar], v: &[Scalar]) -> Vector {
        let (d0, d1) = (self.complex.dims[1], self.complex.dims[0]);
        let top = self.mu0_at(x, 1).apply(&v[..d0]);
        let bottom = self.mu0_at(x, 0).apply(&v[d0..d0 + d1]);
        [top, bottom].concat()
    }

    /// For a two-term target, applies `μ1(h)`: the degree-0 part goes to degree -1.
    pub fn act1(&self, h: &[Scalar], v: &[Scalar]) -> Vector {
        let d0 = self.complex.dims[1];
        let bottom = self.mu1_at(h, 0).apply(&v[..d0]);
        [zero_vec(d0), bottom].concat()
    }
}

/// Adjoint representation on the complex `g_{-1} → g0` (level 0 is `g_{-1}`).
/// `ad1(h)y = [h,y]`.
pub fn adjoint_rep(t: &Lie2Table) -> StrictRep {
    let (n0, n1) = (t.n0(), t.n1());
    let complex = Complex { base_degree: -1, dims: vec![n1, n0], diff: vec![t.d.clone()] };
    let mu0 = (0..n0)
        .map(|i| {
            let on1: Vec<Vector> = (0..n1).map(|b| t.part1(t.get(i, n0 + b)).to_vec()).collect();
            let on0: Vec<Vector> = (0..n0).map(|j| t.part0(t.get(i, j)).to_vec()).collect();
            vec![Matrix::from_cols(n1, &on1), Matrix::from_cols(n0, &on0)]
        })
        .collect();
    let mu1 = (0..n1)
        .map(|a| {
            let cols: Vec<Vector> = (0..n0).map(|j| t.part1(t.get(n0 + a, j)).to_vec()).collect();
            vec![Matrix::from_cols(n1, &cols)]
        })
        .collect();
    StrictRep { complex, mu0, mu1 }
}

/// Dual representation on the dual complex (levels reversed):
/// `μ0* = -μ0ᵀ`, `μ1* = -μ1ᵀ`, differential transposed.
pub fn dual_rep(rho: &StrictRep) -> StrictRep {
    let k = rho.complex.levels();
    let dims: Vec<usize> = rho.complex.dims.iter().rev().cloned().collect();
    let diff = (0..k.saturating_sub(1)).map(|t| rho.complex.diff[k - 2 - t].transpose()).collect();
    let mu0 = rho
        .mu0
        .iter()
        .map(|ms| (0..k).map(|t| ms[k - 1 - t].transpose().neg()).collect())
        .collect();
    let mu1 = rho
        .mu1
        .iter()
        .map(|ms| (0..k - 1).map(|t| ms[k - 2 - t].transpose().neg()).collect())
        .collect();
    StrictRep {
        complex: Complex { base_degree: rho.complex.base_degree, dims, diff },
        mu0,
        mu1,
    }
}

pub fn coadjoint_rep(t: &Lie2Table) -> StrictRep {
    dual_rep(&adjoint_rep(t))
}

/// Same representation with the complex regraded to start at `base_degree`.
pub fn shifted(rho: &StrictRep, base_degree: i32) -> StrictRep {
    let mut r = rho.clone();
    r.complex.base_degree = base_degree;
    r
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for p in 0..b.rows() {
                for q in 0..b.cols() {
                    let y = b.get(p, q);
                    if !y.is_zero() {
                        out.set(i * b.rows() + p, j * b.cols() + q, x * y);
                    }
                }
            }
        }
    }
    out
}

/// Block layout of level `s` of a tensor product: `(i, j, offset, dim)` for
/// every pair of levels with `i + j = s`, `i` ascending.
fn tensor_blocks(dv: &[usize], dw: &[usize], s: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    let mut off = 0;
    for i in 0..dv.len() {
        if s < i || s - i >= dw.len() {
            continue;
        }
        let j = s - i;
        out.push((i, j, off, dv[i] * dw[j]));
        off += dv[i] * dw[j];
    }
    out
}

fn place(target: &mut Matrix, r0: usize, c0: usize, m: &Matrix, sign: &Scalar) {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let x = m.get(i, j);
            if !x.is_zero() {
                target.add_at(r0 + i, c0 + j, &(sign * x));
            }
        }
    }
}

/// Tensor product representation with Koszul signs:
/// `∂(v⊗w) = ∂v⊗w + (-1)^{|v|} v⊗∂w`, `μ0 = μ0⊗1 + 1⊗μ0`,
/// `μ1 = μ1⊗1 + (-1)^{|v|} 1⊗μ1`. Level-`s` bases list `V_i ⊗ W_{s-i}` by ascending `i`.
pub fn tensor_rep(v: &StrictRep, w: &StrictRep) -> StrictRep {
    let (dv, dw) = (&v.complex.dims, &w.complex.dims);
    let levels = dv.len() + dw.len() - 1;
    let level_dim = |s: usize| tensor_blocks(dv, dw, s).iter().map(|b| b.3).sum::<usize>();
    let dims: Vec<usize> = (0..levels).map(level_dim).collect();
    let sign_of = |i: usize| -> Scalar {
        if (v.complex.base_degree + i as i32).rem_euclid(2) == 0 { Scalar::one() } else { int(-1) }
    };
    let find = |s: usize, i: usize| tensor_blocks(dv, dw, s).into_iter().find(|b| b.0 == i);

    let mut diff = Vec::new();
    for s in 0..levels.saturating_sub(1) {
        let mut m = Matrix::zeros(dims[s + 1], dims[s]);
        for (i, j, off, _) in tensor_blocks(dv, dw, s) {
            if i + 1 < dv.len() {
                let (_, _, o2, _) = find(s + 1, i + 1).unwrap();
                place(&mut m, o2, off, &kron(&v.complex.diff[i], &Matrix::identity(dw[j])), &Scalar::one());
            }
            if j + 1 < dw.len() {
                let (_, _, o2, _) = find(s + 1, i).unwrap();
                place(&mut m, o2, off, &kron(&Matrix::identity(dv[i]), &w.complex.diff[j]), &sign_of(i));
            }
        }
        diff.push(m);
    }
    let n0 = v.n0();
    let mu0 = (0..n0)
        .map(|x| {
            (0..levels)
                .map(|s| {
                    let mut m = Matrix::zeros(dims[s], dims[s]);
                    for (i, j, off, _) in tensor_blocks(dv, dw, s) {
                        let a = kron(&v.mu0[x][i], &Matrix::identity(dw[j]));
                        let b = kron(&Matrix::identity(dv[i]), &w.mu0[x][j]);
                        place(&mut m, off, off, &a.add(&b), &Scalar::one());
                    }
                    m
                })
                .collect()
        })
        .collect();
    let n1 = v.n1();
    let mu1 = (0..n1)
        .map(|h| {
            (0..levels - 1)
                .map(|s| {
                    let mut m = Matrix::zeros(dims[s], dims[s + 1]);
                    for (i, j, off, _) in tensor_blocks(dv, dw, s + 1) {
                        if i >= 1 {
                            let (_, _, o2, _) = find(s, i - 1).unwrap();
                            place(&mut m, o2, off, &kron(&v.mu1[h][i - 1], &Matrix::identity(dw[j])), &Scalar::one());
                        }
                        if j >= 1 {
                            let (_, _, o2, _) = find(s, i).unwrap();
                            place(&mut m, o2, off, &kron(&Matrix::identity(dv[i]), &w.mu1[h][j - 1]), &sign_of(i));
                        }
                    }
                    m
                })
                .collect()
        })
        .collect();
    StrictRep { complex: Complex { base_degree: v.complex.base_degree + w.complex.base_degree, dims, diff }, mu0, mu1 }
}

/// Representation on the three-term complex
/// `g_{-1}⊗g_{-1} → g_{-1}⊗g0 ⊕ g0⊗g_{-1} → g0⊗g0`, i.e. the tensor square of
/// the adjoint representation regraded so that `g_{-1}` sits in degree 0.
pub fn tensor_square_rep(t: &Lie2Table) -> StrictRep {
    let ad = shifted(&adjoint_rep(t), 0);
    tensor_rep(&ad, &ad)
}

/// Splits a tensor into level vectors of [`tensor_square_rep`]:
/// level 0 = `bmm`, level 1 = `bm0` then `b0m`, level 2 = `b00` (row-major).
pub fn tensor_to_levels(t: &TensorElement) -> [Vector; 3] {
    let l0 = t.bmm.entries().to_vec();
    let l1 = [t.bm0.entries(), t.b0m.entries()].concat();
    let l2 = t.b00.entries().to_vec();
    [l0, l1, l2]
}

pub fn level_to_tensor(n0: usize, n1: usize, level: usize, v: &[Scalar]) -> TensorElement {
    fn fill(m: &mut Matrix, v: &[Scalar]) {
        let c = m.cols();
        for (k, x) in v.iter().enumerate() {
            m.set(k / c, k % c, x.clone());
        }
    }
    let mut t = TensorElement::zeros(n0, n1);
    match level {
        0 => fill(&mut t.bmm, v),
        1 => {
            fill(&mut t.bm0, &v[..n1 * n0]);
            fill(&mut t.b0m, &v[n1 * n0..]);
        }
        2 => fill(&mut t.b00, v),
        _ => panic!("tensor square has three levels"),
    }
    t
}

/// Checks the strict-representation identities of `rho` for the algebra `t`.
pub fn check_rep(t: &Lie2Table, rho: &StrictRep) -> Report {
    let (n0, n1) = (t.n0(), t.n1());
    let k = rho.complex.levels();
    let cx = &rho.complex;
    let lab = |u: usize| t.space.label(u).to_string();
    let flat = |m: &Matrix| m.entries().to_vec();
    let mut commute = Check::new("mu0_commutes_with_differential", "μ0(x)∂ = ∂μ0(x)");
    let mut dcond = Check::new("mu0_of_dh", "μ0(dh) = ∂μ1(h) + μ1(h)∂");
    let mut br0 = Check::new("mu0_bracket", "μ0[x,y] = [μ0(x), μ0(y)]");
    let mut br1 = Check::new("mu1_bracket", "μ1[x,h] = μ0(x)μ1(h) - μ1(h)μ0(x)");
    let mut odd = Check::new("odd_square", "μ1(h)μ1(k) + μ1(k)μ1(h) = 0");

    for i in 0..n0 {
        for s in 0..k.saturating_sub(1) {
            let lhs = rho.mu0[i][s + 1].mul(&cx.diff[s]);
            let rhs = cx.diff[s].mul(&rho.mu0[i][s]);
            commute.compare(&[lab(i), format!("level{s}")], &flat(&lhs), &flat(&rhs));
        }
    }
    for a in 0..n1 {
        let ha = crate::graded::unit_vec(n1, a);
        let dh = t.d.col(a);
        for s in 0..k {
            let lhs = rho.mu0_at(&dh, s);
            let mut rhs = Matrix::zeros(cx.dims[s], cx.dims[s]);
            if s >= 1 {
                rhs = rhs.add(&cx.diff[s - 1].mul(&rho.mu1_at(&ha, s - 1)));
            }
            if s + 1 < k {
                rhs = rhs.add(&rho.mu1_at(&ha, s).mul(&cx.diff[s]));
            }
            dcond.compare(&[lab(n0 + a), format!("level{s}")], &flat(&lhs), &flat(&rhs));
        }
    }
    for i in 0..n0 {
        for j in 0..n0 {
            let xy = t.part0(t.get(i, j)).to_vec();
            for s in 0..k {
                let lhs = rho.mu0_at(&xy, s);
                let rhs = rho.mu0[i][s].mul(&rho.mu0[j][s]).sub(&rho.mu0[j][s].mul(&rho.mu0[i][s]));
                br0.compare(&[lab(i), lab(j), format!("level{s}")], &flat(&lhs), &flat(&rhs));
            }
        }
        for a in 0..n1 {
            let xh = t.part1(t.get(i, n0 + a)).to_vec();
            for s in 0..k.saturating_sub(1) {
                let lhs = rho.mu1_at(&xh, s);
                let rhs = rho.mu0[i][s].mul(&rho.mu1[a][s]).sub(&rho.mu1[a][s].mul(&rho.mu0[i][s + 1]));
                br1.compare(&[lab(i), lab(n0 + a), format!("level{s}")], &flat(&lhs), &flat(&rhs));
            }
        }
    }
    if k >= 3 {
        for a in 0..n1 {
            for b in a..n1 {
                for s in 0..k - 2 {
                    let ab = rho.mu1[a][s].mul(&rho.mu1[b][s + 1]);
                    let ba = rho.mu1[b][s].mul(&rho.mu1[a][s + 1]);
                    odd.expect_zero(&[lab(n0 + a), lab(n0 + b), format!("level{s}")], &flat(&ab.add(&ba)));
                }
            }
        }
    }
    let mut r = Report::new();
    r.push(commute);
    r.push(dcond);
    r.push(br0);
    r.push(br1);
    if k >= 3 {
        r.push(odd);
    }
    r
}

/// Applies `μ0(x)` to a tensor through the tensor-square representation.
pub fn act_on_tensor0(rho: &StrictRep, x: &[Scalar], t: &TensorElement) -> TensorElement {
    let (n0, n1) = (t.n0(), t.n1());
    let levels = tensor_to_levels(t);
    let mut out = TensorElement::zeros(n0, n1);
    for (s, v) in levels.iter().enumerate() {
        let w = rho.mu0_at(x, s).apply(v);
        out = out.add(&level_to_tensor(n0, n1, s, &w));
    }
    out
}

/// Applies `μ1(h)` to a tensor through the tensor-square representation.
pub fn act_on_tensor1(rho: &StrictRep, h: &[Scalar], t: &TensorElement) -> TensorElement {
    let (n0, n1) = (t.n0(), t.n1());
    let levels = tensor_to_levels(t);
    let mut out = TensorElement::zeros(n0, n1);
    for s in 1..3 {
        let w = rho.mu1_at(h, s - 1).apply(&levels[s]);
        out = out.add(&level_to_tensor(n0, n1, s - 1, &w));
    }
    out
}

/// Difference of two vectors as a convenience for callers building witnesses.
pub fn diff_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    vsub(a, b)
}
