//! Deterministic generators of valid and mutated instances for property sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graded::{int, GradedSpace2, Matrix, Scalar, Vector};
use crate::lie2::{LieAlgebra, StrictLie2Algebra};
use crate::cohomology::{coboundary, d_ad_of, CocyclePair};
use crate::graded::{axpy, exchange, zero_vec, TensorElement};
use crate::lie2::{level_to_tensor, tensor_square_rep, tensor_to_levels};
use crate::prelie::{build_bialgebra_from_prelie, catalog, catalog_entry, LeftSymmetricAlgebra};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small named Lie algebras used as building blocks.
pub fn lie_algebra(name: &str) -> LieAlgebra {
    let e = |n: usize, k: usize, c: i64| -> Vector {
        let mut v = vec![int(0); n];
        v[k] = int(c);
        v
    };
    match name {
        "aff2" => LieAlgebra::from_fn(2, |i, j| match (i, j) {
            (0, 1) => e(2, 1, 1),
            (1, 0) => e(2, 1, -1),
            _ => vec![int(0); 2],
        }),
        "heis3" => LieAlgebra::from_fn(3, |i, j| match (i, j) {
            (0, 1) => e(3, 2, 1),
            (1, 0) => e(3, 2, -1),
            _ => vec![int(0); 3],
        }),
        // [h,e] = 2e, [h,f] = -2f, [e,f] = h
        "sl2" => LieAlgebra::from_fn(3, |i, j| match (i, j) {
            (0, 1) => e(3, 1, 2),
            (1, 0) => e(3, 1, -2),
            (0, 2) => e(3, 2, -2),
            (2, 0) => e(3, 2, 2),
            (1, 2) => e(3, 0, 1),
            (2, 1) => e(3, 0, -1),
            _ => vec![int(0); 3],
        }),
        "abelian1" => LieAlgebra::abelian(1),
        "abelian2" => LieAlgebra::abelian(2),
        _ => panic!("unknown Lie algebra {name}"),
    }
}

const LIE_NAMES: [&str; 5] = ["aff2", "heis3", "sl2", "abelian1", "abelian2"];

/// Strict Lie 2-algebra with `g_{-1}` a representation of `g` given by
/// matrices `rep[i]`, and `d = 0`.
pub fn from_representation(g: &LieAlgebra, rep: &[Matrix]) -> StrictLie2Algebra {
    let n0 = g.dim();
    let n1 = rep.first().map_or(0, Matrix::rows);
    let mut l = StrictLie2Algebra::abelian(n0, n1);
    l.bracket00 = g.constants().to_vec();
    for (i, m) in rep.iter().enumerate() {
        for a in 0..n1 {
            for b in 0..n1 {
                l.set_c01(i, a, b, m.get(b, a).clone());
            }
        }
    }
    l
}

/// `g_{-1} = g_0 = g` with `d = id` and the adjoint action.
pub fn identity_crossed(g: &LieAlgebra) -> StrictLie2Algebra {
    let n = g.dim();
    let ads: Vec<Matrix> = (0..n).map(|i| g.ad(i)).collect();
    let mut l = from_representation(g, &ads);
    l.d = Matrix::identity(n);
    l
}

/// Transports the structure along new bases given by the columns of `p0`, `p1`.
pub fn change_basis(l: &StrictLie2Algebra, p0: &Matrix, p1: &Matrix) -> StrictLie2Algebra {
    let (n0, n1) = (l.n0(), l.n1());
    let q0 = p0.inverse().expect("invertible basis change");
    let q1 = p1.inverse().expect("invertible basis change");
    let t = l.to_table();
    let mut out = StrictLie2Algebra::abelian(n0, n1);
    out.space = l.space.clone();
    out.d = q0.mul(&l.d).mul(p1);
    for i in 0..n0 {
        let xi = t.embed0(&p0.col(i));
        for j in 0..n0 {
            let v = q0.apply(t.part0(&t.bracket(&xi, &t.embed0(&p0.col(j)))));
            for (k, c) in v.into_iter().enumerate() {
                out.set_c00(i, j, k, c);
            }
        }
        for a in 0..n1 {
            let v = q1.apply(t.part1(&t.bracket(&xi, &t.embed1(&p1.col(a)))));
            for (b, c) in v.into_iter().enumerate() {
                out.set_c01(i, a, b, c);
            }
        }
    }
    out
}

/// Direct sum of two strict Lie 2-algebras.
pub fn direct_sum(a: &StrictLie2Algebra, b: &StrictLie2Algebra) -> StrictLie2Algebra {
    let (a0, a1, b0, b1) = (a.n0(), a.n1(), b.n0(), b.n1());
    let mut l = StrictLie2Algebra::abelian(a0 + b0, a1 + b1);
    let mut d = Matrix::zeros(a0 + b0, a1 + b1);
    for i in 0..a0 {
        for x in 0..a1 {
            d.set(i, x, a.d.get(i, x).clone());
        }
    }
    for i in 0..b0 {
        for x in 0..b1 {
            d.set(a0 + i, a1 + x, b.d.get(i, x).clone());
        }
    }
    l.d = d;
    for i in 0..a0 {
        for j in 0..a0 {
            for k in 0..a0 {
                l.set_c00(i, j, k, a.c00(i, j, k).clone());
            }
        }
        for x in 0..a1 {
            for y in 0..a1 {
                l.set_c01(i, x, y, a.c01(i, x, y).clone());
            }
        }
    }
    for i in 0..b0 {
        for j in 0..b0 {
            for k in 0..b0 {
                l.set_c00(a0 + i, a0 + j, a0 + k, b.c00(i, j, k).clone());
            }
        }
        for x in 0..b1 {
            for y in 0..b1 {
                l.set_c01(a0 + i, a1 + x, a1 + y, b.c01(i, x, y).clone());
            }
        }
    }
    l
}

/// Random invertible integer matrix with small entries (unipotent times permutation-free diagonal).
pub fn random_invertible(rng: &mut impl Rng, n: usize) -> Matrix {
    loop {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v: i64 = if i == j { rng.gen_range(1..=2) } else { rng.gen_range(-1..=1) };
                m.set(i, j, int(v));
            }
        }
        if m.is_invertible() {
            return m;
        }
    }
}

fn random_base(rng: &mut impl Rng) -> StrictLie2Algebra {
    let g = lie_algebra(LIE_NAMES[rng.gen_range(0..LIE_NAMES.len())]);
    match rng.gen_range(0..4) {
        0 => identity_crossed(&g),
        1 => {
            let ads: Vec<Matrix> = (0..g.dim()).map(|i| g.ad(i)).collect();
            from_representation(&g, &ads)
        }
        2 => {
            let k = rng.gen_range(1..=2);
            let zero: Vec<Matrix> = (0..g.dim()).map(|_| Matrix::zeros(k, k)).collect();
            from_representation(&g, &zero)
        }
        _ => {
            // dual of the adjoint action
            let co: Vec<Matrix> = (0..g.dim()).map(|i| g.ad(i).transpose().neg()).collect();
            from_representation(&g, &co)
        }
    }
}

/// A random valid strict Lie 2-algebra with at most 4 dimensions per degree.
pub fn random_strict_lie2(seed: u64) -> StrictLie2Algebra {
    let mut r = rng(seed);
    let mut l = random_base(&mut r);
    if l.n0() <= 2 && l.n1() <= 2 && r.gen_bool(0.3) {
        let extra = random_base(&mut r);
        if l.n0() + extra.n0() <= 4 && l.n1() + extra.n1() <= 4 {
            l = direct_sum(&l, &extra);
        }
    }
    let p0 = random_invertible(&mut r, l.n0());
    let p1 = random_invertible(&mut r, l.n1());
    let mut out = change_basis(&l, &p0, &p1);
    out.space = GradedSpace2::new(out.n0(), out.n1());
    out
}

/// Random small nonzero rational.
pub fn random_scalar(rng: &mut impl Rng) -> Scalar {
    let v: i64 = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    if rng.gen_bool(0.2) {
        crate::graded::frac(v, 2)
    } else {
        int(v)
    }
}

/// Random nonzero left-symmetric algebra of dimension `1..=max_dim`, found by
/// rejection sampling over sparse structure constants in `{-2,…,2}`.
pub fn random_left_symmetric(seed: u64, max_dim: usize) -> LeftSymmetricAlgebra {
    let mut r = rng(seed);
    loop {
        let n = r.gen_range(1..=max_dim);
        let density = 1.5 / (n * n) as f64;
        let mut a = LeftSymmetricAlgebra::zero(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if r.gen_bool(density.min(1.0)) {
                        let v: i64 = r.gen_range(-2..=2);
                        a.set_constant(i, j, k, int(v));
                    }
                }
            }
        }
        if !a.is_zero() && a.is_left_symmetric() {
            return a;
        }
    }
}

fn nonzero_step(r: &mut impl Rng) -> Scalar {
    int([-2, -1, 1, 2][r.gen_range(0..4)])
}

/// Perturbs one of `d`, `[x,y]` (keeping antisymmetry) or `[x,h]`.
pub fn mutate_lie2(l: &mut StrictLie2Algebra, seed: u64) {
    let mut r = rng(seed ^ 0x6d75_7461);
    let (n0, n1) = (l.n0(), l.n1());
    let v = nonzero_step(&mut r);
    match r.gen_range(0..3) {
        0 if n1 > 0 => {
            let (k, a) = (r.gen_range(0..n0), r.gen_range(0..n1));
            l.d.add_at(k, a, &v);
        }
        1 if n0 > 1 => {
            let i = r.gen_range(0..n0);
            let j = (i + r.gen_range(1..n0)) % n0;
            let k = r.gen_range(0..n0);
            l.set_c00(i, j, k, l.c00(i, j, k) + &v);
            l.set_c00(j, i, k, l.c00(j, i, k) - &v);
        }
        _ if n1 > 0 => {
            let (i, a, b) = (r.gen_range(0..n0), r.gen_range(0..n1), r.gen_range(0..n1));
            l.set_c01(i, a, b, l.c01(i, a, b) + &v);
        }
        _ => {
            let (i, k) = (r.gen_range(0..n0), r.gen_range(0..n0));
            l.set_c00(i, i, k, l.c00(i, i, k) + &v);
        }
    }
}

/// Perturbs `δ0` or `δ1` while keeping both antisymmetric.
pub fn mutate_cocycle(c: &mut CocyclePair, seed: u64) {
    let mut r = rng(seed ^ 0x636f_6379);
    let (n0, n1) = (c.n0(), c.n1());
    let v = nonzero_step(&mut r);
    if n1 > 1 && r.gen_bool(0.4) {
        let m = r.gen_range(0..n1);
        let a = r.gen_range(0..n1);
        let b = (a + r.gen_range(1..n1)) % n1;
        let t = &mut c.delta1[m];
        t.bmm.add_at(a, b, &v);
        t.bmm.add_at(b, a, &-v);
    } else if n1 > 0 {
        let (k, i, a) = (r.gen_range(0..n0), r.gen_range(0..n0), r.gen_range(0..n1));
        let t = &mut c.delta0[k];
        t.b0m.add_at(i, a, &v);
        t.bm0.add_at(a, i, &-v);
    }
}

/// A cobracket `D(r, d_ad 𝔯)` with skew `𝔯` and skew `r ∈ ker(d⊗)`; always an
/// antisymmetric 2-cocycle.
pub fn random_coboundary(l: &StrictLie2Algebra, seed: u64) -> CocyclePair {
    let mut g = rng(seed ^ 0x636f_626f);
    let t = l.to_table();
    let (n0, n1) = (l.n0(), l.n1());
    let mut frak_r = TensorElement::zeros(n0, n1);
    for a in 0..n1 {
        for b in a + 1..n1 {
            let v = int(g.gen_range(-1..=1));
            frak_r.bmm.set(b, a, -v.clone());
            frak_r.bmm.set(a, b, v);
        }
    }
    let rho = tensor_square_rep(&t);
    let dim = rho.complex.dims[1];
    // stack d⊗ with r ↦ r + σ(r) and take the common kernel
    let sym_cols: Vec<Vector> = (0..dim)
        .map(|j| {
            let r = level_to_tensor(n0, n1, 1, &crate::graded::unit_vec(dim, j));
            tensor_to_levels(&r.add(&exchange(&r)))[1].clone()
        })
        .collect();
    let sym = Matrix::from_cols(dim, &sym_cols);
    let mut rows = rho.complex.diff[1].to_rows();
    rows.extend(sym.to_rows());
    let mut rv = zero_vec(dim);
    for k in &Matrix::from_rows(rows).nullspace() {
        axpy(&mut rv, &int(g.gen_range(-1..=1)), k);
    }
    let r = level_to_tensor(n0, n1, 1, &rv);
    coboundary(&t, &r, &d_ad_of(&t, &frak_r)).expect("r lies in ker(d⊗)")
}

/// A pair `(L, δ)` of total dimension at most 6, drawn from valid bialgebras,
/// cocycles that may fail dual strictness, and single-coefficient mutations
/// of those (for odd seeds).
pub fn random_bialgebra_candidate(seed: u64) -> (StrictLie2Algebra, CocyclePair) {
    let mut r = rng(seed ^ 0x6269_616c);
    let (mut l, mut c) = loop {
        let (l, c) = match r.gen_range(0..6) {
            0 => {
                let entries = catalog();
                let e = &entries[r.gen_range(0..entries.len())];
                let insts = e.instances();
                let a = &insts[r.gen_range(0..insts.len())].algebra;
                let m = if e.name == "N3" {
                    e.d_matrix(&[int(r.gen_range(-2..=2))]).unwrap()
                } else {
                    Matrix::zeros(e.dim, e.dim)
                };
                let b = build_bialgebra_from_prelie(a, &m).expect("admissible");
                (b.base, b.cocycle)
            }
            1 => {
                let a = random_left_symmetric(r.gen(), 3);
                let n = a.dim();
                let b = build_bialgebra_from_prelie(&a, &Matrix::zeros(n, n)).expect("d = 0 is admissible");
                (b.base, b.cocycle)
            }
            2 => {
                let a = catalog_entry("N3").unwrap().algebra(None).unwrap();
                let m = Matrix::from_i64(&[&[0, -1], &[1, 0]]).scale(&random_scalar(&mut r));
                let b = build_bialgebra_from_prelie(&a, &m).expect("N3 family");
                (b.base, b.cocycle)
            }
            3 => {
                let l = random_strict_lie2(r.gen());
                let c = CocyclePair::zero(l.n0(), l.n1());
                (l, c)
            }
            _ => {
                let l = random_strict_lie2(r.gen());
                if l.n0() + l.n1() > 6 {
                    continue;
                }
                let c = random_coboundary(&l, r.gen());
                (l, c)
            }
        };
        if l.n0() + l.n1() <= 6 {
            break (l, c);
        }
    };
    if seed % 2 == 1 {
        if r.gen_bool(0.3) {
            mutate_lie2(&mut l, seed);
        } else {
            mutate_cocycle(&mut c, seed);
        }
    }
    (l, c)
}
