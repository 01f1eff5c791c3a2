//! Low-degree Chevalley-Eilenberg cochains of a strict Lie 2-algebra with
//! values in a strict representation, the differential `D = d̂ + d_μ + ∂̂`,
//! 2-cocycle tests for `(δ0, δ1)` and coboundaries of 1-cochains `(r, φ)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::graded::{axpy, d_tensor_deg1, int, is_zero_vec, vadd, zero_vec, Scalar, TensorElement, Vector};
use crate::lie2::{level_to_tensor, tensor_square_rep, tensor_to_levels, Lie2Table, StrictRep};
use crate::report::{Check, Report};

/// Largest `p + q` accepted as input to [`apply_d`].
pub const MAX_INPUT_DEGREE: usize = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("unsupported cochain bidegree ({0}, {1})")]
    Unsupported(usize, usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("restriction violated: {0}")]
    Restriction(String),
}

/// A cochain in `Hom(∧^p g0 ⊗ Sym^q g_{-1}, V_level)`, stored densely on
/// ordered basis tuples (x indices first, then h indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    pub p: usize,
    pub q: usize,
    pub level: usize,
    n0: usize,
    n1: usize,
    dim: usize,
    values: Vec<Vector>,
}

fn tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    // Heap-free: build by insertion, tracking parity.
    let mut out: Vec<(Vec<usize>, bool)> = vec![(vec![], false)];
    for n in 0..k {
        let mut next = Vec::new();
        for (perm, odd) in &out {
            for pos in 0..=perm.len() {
                let mut p = perm.clone();
                p.insert(pos, n);
                let moved = perm.len() - pos;
                next.push((p, *odd ^ (moved % 2 == 1)));
            }
        }
        out = next;
    }
    out
}

impl Cochain {
    pub fn zeros(n0: usize, n1: usize, p: usize, q: usize, level: usize, dim: usize) -> Self {
        let count = n0.pow(p as u32) * n1.pow(q as u32);
        Cochain { p, q, level, n0, n1, dim, values: vec![zero_vec(dim); count] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn index(&self, xs: &[usize], hs: &[usize]) -> usize {
        let mut k = 0;
        for &x in xs {
            k = k * self.n0 + x;
        }
        for &h in hs {
            k = k * self.n1 + h;
        }
        k
    }

    pub fn get(&self, xs: &[usize], hs: &[usize]) -> &Vector {
        &self.values[self.index(xs, hs)]
    }

    pub fn set(&mut self, xs: &[usize], hs: &[usize], v: Vector) {
        let k = self.index(xs, hs);
        self.values[k] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| is_zero_vec(v))
    }

    pub fn add(&self, o: &Cochain) -> Cochain {
        let mut out = self.clone();
        for (a, b) in out.values.iter_mut().zip(&o.values) {
            *a = vadd(a, b);
        }
        out
    }

    /// All ordered argument tuples `(xs, hs)`.
    pub fn arguments(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut out = Vec::new();
        for xs in tuples(self.n0, self.p) {
            for hs in tuples(self.n1, self.q) {
                out.push((xs.clone(), hs));
            }
        }
        out
    }

    /// Multilinear evaluation on arbitrary coefficient vectors.
    pub fn eval(&self, xs: &[Vector], hs: &[Vector]) -> Vector {
        let supports: Vec<Vec<(usize, Scalar)>> = xs
            .iter()
            .chain(hs)
            .map(|v| v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect())
            .collect();
        let mut out = zero_vec(self.dim);
        let mut stack: Vec<(Vec<usize>, Scalar)> = vec![(vec![], Scalar::one())];
        for s in &supports {
            let mut next = Vec::new();
            for (idx, c) in &stack {
                for (i, x) in s {
                    let mut idx = idx.clone();
                    idx.push(*i);
                    next.push((idx, c * x));
                }
            }
            stack = next;
        }
        for (idx, c) in stack {
            let v = self.get(&idx[..self.p], &idx[self.p..]);
            axpy(&mut out, &c, v);
        }
        out
    }

    /// Projects onto cochains antisymmetric in the `g0` slots and symmetric
    /// (unsigned) in the `g_{-1}` slots.
    pub fn symmetrized(&self) -> Cochain {
        let px = permutations(self.p);
        let ph = permutations(self.q);
        let norm = Scalar::new((px.len() * ph.len()).into(), 1.into());
        let mut out = self.clone();
        for (xs, hs) in self.arguments() {
            let mut acc = zero_vec(self.dim);
            for (sx, odd) in &px {
                let pxs: Vec<usize> = sx.iter().map(|&i| xs[i]).collect();
                for (sh, _) in &ph {
                    let phs: Vec<usize> = sh.iter().map(|&i| hs[i]).collect();
                    let c = if *odd { int(-1) } else { int(1) };
                    axpy(&mut acc, &c, self.get(&pxs, &phs));
                }
            }
            out.set(&xs, &hs, acc.iter().map(|c| c / &norm).collect());
        }
        out
    }

    pub fn random(
        rng: &mut impl Rng,
        n0: usize,
        n1: usize,
        p: usize,
        q: usize,
        level: usize,
        dim: usize,
    ) -> Cochain {
        let mut c = Cochain::zeros(n0, n1, p, q, level, dim);
        for v in c.values.iter_mut() {
            for x in v.iter_mut() {
                *x = int(rng.gen_range(-2..=2));
            }
        }
        c.symmetrized()
    }
}

/// A formal sum of cochains keyed by `(p, q, level)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CochainSum {
    pub parts: BTreeMap<(usize, usize, usize), Cochain>,
}

impl CochainSum {
    pub fn add_part(&mut self, c: Cochain) {
        let key = (c.p, c.q, c.level);
        match self.parts.remove(&key) {
            Some(old) => self.parts.insert(key, old.add(&c)),
            None => self.parts.insert(key, c),
        };
    }

    pub fn merge(&mut self, other: CochainSum) {
        for (_, c) in other.parts {
            self.add_part(c);
        }
    }

    pub fn get(&self, p: usize, q: usize, level: usize) -> Option<&Cochain> {
        self.parts.get(&(p, q, level))
    }

    pub fn is_zero(&self) -> bool {
        self.parts.values().all(Cochain::is_zero)
    }
}

fn sign(odd: bool) -> Scalar {
    if odd {
        int(-1)
    } else {
        int(1)
    }
}

fn without(v: &[usize], i: usize) -> Vec<usize> {
    v.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, &x)| x).collect()
}

fn units(n: usize, idx: &[usize]) -> Vec<Vector> {
    idx.iter().map(|&i| crate::graded::unit_vec(n, i)).collect()
}

/// `D f` for a cochain with `p + q ≤ 3`, valued in `rho`.
pub fn apply_d(t: &Lie2Table, rho: &StrictRep, f: &Cochain) -> Result<CochainSum, CohomologyError> {
    let (p, q, s) = (f.p, f.q, f.level);
    if p + q > MAX_INPUT_DEGREE {
        return Err(CohomologyError::Unsupported(p, q));
    }
    let (n0, n1) = (t.n0(), t.n1());
    if f.n0 != n0 || f.n1 != n1 || rho.complex.dims.get(s) != Some(&f.dim) {
        return Err(CohomologyError::Shape("cochain does not match algebra or representation".into()));
    }
    let levels = rho.complex.levels();
    let dims = &rho.complex.dims;
    let mut out = CochainSum::default();

    // d̂: (p, q, s) -> (p-1, q+1, s)
    if p >= 1 {
        let mut g = Cochain::zeros(n0, n1, p - 1, q + 1, s, dims[s]);
        let sg = sign(p % 2 == 1);
        for (xs, hs) in g.arguments() {
            let mut acc = zero_vec(dims[s]);
            let xv = units(n0, &xs);
            for i in 0..hs.len() {
                let mut xa = xv.clone();
                xa.push(t.d.col(hs[i]));
                let rest = units(n1, &without(&hs, i));
                axpy(&mut acc, &sg, &f.eval(&xa, &rest));
            }
            g.set(&xs, &hs, acc);
        }
        out.add_part(g);
    }

    // ∂̂: (p, q, s) -> (p, q, s+1)
    if s + 1 < levels {
        let mut g = Cochain::zeros(n0, n1, p, q, s + 1, dims[s + 1]);
        let sg = sign(p % 2 == 1);
        let del = &rho.complex.diff[s];
        for (xs, hs) in f.arguments() {
            let v = del.apply(f.get(&xs, &hs)).iter().map(|c| c * &sg).collect();
            g.set(&xs, &hs, v);
        }
        out.add_part(g);
    }

    // d_μ^(1,0): (p, q, s) -> (p+1, q, s)
    {
        let mut g = Cochain::zeros(n0, n1, p + 1, q, s, dims[s]);
        for (xs, hs) in g.arguments() {
            let mut acc = zero_vec(dims[s]);
            let hv = units(n1, &hs);
            for i in 0..=p {
                let rest = units(n0, &without(&xs, i));
                let val = f.eval(&rest, &hv);
                let act = rho.mu0[xs[i]][s].apply(&val);
                axpy(&mut acc, &sign(i % 2 == 1), &act);
            }
            for i in 0..=p {
                for j in i + 1..=p {
                    let br = t.part0(t.get(xs[i], xs[j])).to_vec();
                    let mut args = vec![br];
                    args.extend(units(n0, &without(&without(&xs, j), i)));
                    axpy(&mut acc, &sign((i + j) % 2 == 1), &f.eval(&args, &hv));
                }
            }
            for i in 0..=p {
                let rest = units(n0, &without(&xs, i));
                for j in 0..q {
                    let mut hargs = hv.clone();
                    hargs[j] = t.part1(t.get(xs[i], n0 + hs[j])).to_vec();
                    axpy(&mut acc, &sign(i % 2 == 0), &f.eval(&rest, &hargs));
                }
            }
            g.set(&xs, &hs, acc);
        }
        out.add_part(g);
    }

    // d_μ^(0,1): (p, q, s) -> (p, q+1, s-1)
    if s >= 1 {
        let mut g = Cochain::zeros(n0, n1, p, q + 1, s - 1, dims[s - 1]);
        let sg = sign(p % 2 == 1);
        for (xs, hs) in g.arguments() {
            let mut acc = zero_vec(dims[s - 1]);
            let xv = units(n0, &xs);
            for i in 0..hs.len() {
                let val = f.eval(&xv, &units(n1, &without(&hs, i)));
                axpy(&mut acc, &sg, &rho.mu1[hs[i]][s - 1].apply(&val));
            }
            g.set(&xs, &hs, acc);
        }
        out.add_part(g);
    }
    Ok(out)
}

/// `D` applied to every part of a sum.
pub fn apply_d_sum(t: &Lie2Table, rho: &StrictRep, f: &CochainSum) -> Result<CochainSum, CohomologyError> {
    let mut out = CochainSum::default();
    for c in f.parts.values() {
        out.merge(apply_d(t, rho, c)?);
    }
    Ok(out)
}

/// Applies `D` twice to random `(p, q)` cochains with `p + q ≤ 2` at every
/// level of the tensor-square representation.
pub fn d_squared_check(t: &Lie2Table, rng: &mut impl Rng) -> Result<Check, CohomologyError> {
    let rho = tensor_square_rep(t);
    let mut check = Check::new("d_squared", "D∘D = 0 on random cochains");
    for (p, q) in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)] {
        for s in 0..rho.complex.levels() {
            let f = Cochain::random(rng, t.n0(), t.n1(), p, q, s, rho.complex.dims[s]);
            let twice = apply_d_sum(t, &rho, &apply_d(t, &rho, &f)?)?;
            for (&(pp, qq, ss), c) in &twice.parts {
                if !c.is_zero() {
                    let v: Vec<Scalar> = c.values.iter().flatten().cloned().collect();
                    check.expect_zero(&[format!("({p},{q}) level {s} -> ({pp},{qq}) level {ss}")], &v);
                }
            }
        }
    }
    Ok(check)
}

/// `(δ0, δ1)`: `delta0[i] = δ0(x_i)` (mixed blocks), `delta1[a] = δ1(h_a)` (`bmm` block).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocyclePair {
    pub delta0: Vec<TensorElement>,
    pub delta1: Vec<TensorElement>,
}

impl CocyclePair {
    pub fn zero(n0: usize, n1: usize) -> Self {
        CocyclePair {
            delta0: vec![TensorElement::zeros(n0, n1); n0],
            delta1: vec![TensorElement::zeros(n0, n1); n1],
        }
    }

    pub fn n0(&self) -> usize {
        self.delta0.len()
    }

    pub fn n1(&self) -> usize {
        self.delta1.len()
    }

    fn check_shape(&self, t: &Lie2Table) -> Result<(), CohomologyError> {
        let ok = self.delta0.len() == t.n0()
            && self.delta1.len() == t.n1()
            && self.delta0.iter().chain(&self.delta1).all(|e| e.n0() == t.n0() && e.n1() == t.n1());
        if ok {
            Ok(())
        } else {
            Err(CohomologyError::Shape("cocycle pair does not match algebra".into()))
        }
    }

    /// δ0 as a `(1,0)` cochain at level 1 and δ1 as a `(0,1)` cochain at level 0.
    pub fn to_cochains(&self) -> (Cochain, Cochain) {
        let (n0, n1) = (self.n0(), self.n1());
        let mut c0 = Cochain::zeros(n0, n1, 1, 0, 1, 2 * n0 * n1);
        for (i, e) in self.delta0.iter().enumerate() {
            c0.set(&[i], &[], tensor_to_levels(e)[1].clone());
        }
        let mut c1 = Cochain::zeros(n0, n1, 0, 1, 0, n1 * n1);
        for (a, e) in self.delta1.iter().enumerate() {
            c1.set(&[], &[a], tensor_to_levels(e)[0].clone());
        }
        (c0, c1)
    }

    pub fn from_cochains(c0: &Cochain, c1: &Cochain) -> Self {
        let (n0, n1) = (c0.n0, c0.n1);
        CocyclePair {
            delta0: (0..n0).map(|i| level_to_tensor(n0, n1, 1, c0.get(&[i], &[]))).collect(),
            delta1: (0..n1).map(|a| level_to_tensor(n0, n1, 0, c1.get(&[], &[a]))).collect(),
        }
    }
}

fn expect_zero_cochain(check: &mut Check, t: &Lie2Table, c: Option<&Cochain>) {
    let Some(c) = c else { return };
    let n0 = t.n0();
    for (xs, hs) in c.arguments() {
        let v = c.get(&xs, &hs);
        if !is_zero_vec(v) {
            let mut tuple: Vec<String> = xs.iter().map(|&i| t.space.label(i).to_string()).collect();
            tuple.extend(hs.iter().map(|&a| t.space.label(n0 + a).to_string()));
            check.expect_zero(&tuple, v);
        }
    }
}

/// Evaluates the four 2-cocycle conditions for `(δ0, δ1)` with values in
/// the tensor-square representation.
pub fn is_2cocycle(t: &Lie2Table, c: &CocyclePair) -> Result<Report, CohomologyError> {
    c.check_shape(t)?;
    let rho = tensor_square_rep(t);
    let mut grading = Check::new("cocycle_grading", "δ0 lands in degree one, δ1 in degree zero");
    for (i, e) in c.delta0.iter().enumerate() {
        if !e.is_degree_one() {
            let bad = [e.b00.entries(), e.bmm.entries()].concat();
            grading.expect_zero(&[t.space.label(i)], &bad);
        }
    }
    for (a, e) in c.delta1.iter().enumerate() {
        if !e.is_degree_zero() {
            let bad = [e.b00.entries(), e.b0m.entries(), e.bm0.entries()].concat();
            grading.expect_zero(&[t.space.label(t.n0() + a)], &bad);
        }
    }
    let (c0, c1) = c.to_cochains();
    let mut total = apply_d(t, &rho, &c0)?;
    total.merge(apply_d(t, &rho, &c1)?);
    let mut a = Check::new("closed_d_tensor_delta0", "(d⊗1 - 1⊗d)∘δ0 = 0");
    let mut b = Check::new("closed_delta0_d", "δ0∘d - (d⊗1 + 1⊗d)∘δ1 = 0");
    let mut cc = Check::new("closed_x_y", "d_ad δ0(x,y) = 0");
    let mut dd = Check::new("closed_x_h", "d_ad δ0(x,h) + d_ad δ1(x,h) = 0");
    expect_zero_cochain(&mut a, t, total.get(1, 0, 2));
    expect_zero_cochain(&mut b, t, total.get(0, 1, 1));
    expect_zero_cochain(&mut cc, t, total.get(2, 0, 1));
    expect_zero_cochain(&mut dd, t, total.get(1, 1, 0));
    let mut r = Report::new();
    for ch in [grading, a, b, cc, dd] {
        r.push(ch);
    }
    Ok(r)
}

/// `D(r, φ)` read as a pair, without checking the restriction.
/// `phi[i] = φ(x_i)` lives in the `bmm` block.
pub fn exact_pair(t: &Lie2Table, r: &TensorElement, phi: &[TensorElement]) -> Result<(CocyclePair, CochainSum), CohomologyError> {
    let (n0, n1) = (t.n0(), t.n1());
    if r.n0() != n0 || r.n1() != n1 || phi.len() != n0 {
        return Err(CohomologyError::Shape("1-cochain does not match algebra".into()));
    }
    if !r.is_degree_one() {
        return Err(CohomologyError::Shape("r must lie in g0⊗g-1 ⊕ g-1⊗g0".into()));
    }
    if phi.iter().any(|e| !e.is_degree_zero()) {
        return Err(CohomologyError::Shape("φ must take values in g-1⊗g-1".into()));
    }
    let rho = tensor_square_rep(t);
    let mut c_r = Cochain::zeros(n0, n1, 0, 0, 1, 2 * n0 * n1);
    c_r.set(&[], &[], tensor_to_levels(r)[1].clone());
    let mut c_phi = Cochain::zeros(n0, n1, 1, 0, 0, n1 * n1);
    for (i, e) in phi.iter().enumerate() {
        c_phi.set(&[i], &[], tensor_to_levels(e)[0].clone());
    }
    let mut total = apply_d(t, &rho, &c_r)?;
    total.merge(apply_d(t, &rho, &c_phi)?);
    let d0 = total.get(1, 0, 1).cloned().unwrap_or_else(|| Cochain::zeros(n0, n1, 1, 0, 1, 2 * n0 * n1));
    let d1 = total.get(0, 1, 0).cloned().unwrap_or_else(|| Cochain::zeros(n0, n1, 0, 1, 0, n1 * n1));
    Ok((CocyclePair::from_cochains(&d0, &d1), total))
}

/// `(δ0, δ1) = D(r, φ)`; requires `(d⊗1 - 1⊗d) r = 0` and `d_ad φ = 0`.
pub fn coboundary(t: &Lie2Table, r: &TensorElement, phi: &[TensorElement]) -> Result<CocyclePair, CohomologyError> {
    let (pair, total) = exact_pair(t, r, phi)?;
    if !d_tensor_deg1(&t.d, r).map_err(|e| CohomologyError::Shape(e.to_string()))?.is_zero() {
        return Err(CohomologyError::Restriction("(d⊗1 - 1⊗d) r ≠ 0".into()));
    }
    if total.get(2, 0, 0).is_some_and(|c| !c.is_zero()) {
        return Err(CohomologyError::Restriction("d_ad φ ≠ 0".into()));
    }
    Ok(pair)
}

/// `φ = d_ad 𝔯`, i.e. `φ(x) = [x⊗1 + 1⊗x, 𝔯]`.
pub fn d_ad_of(t: &Lie2Table, frak_r: &TensorElement) -> Vec<TensorElement> {
    let rho = tensor_square_rep(t);
    let (n0, n1) = (t.n0(), t.n1());
    let v = tensor_to_levels(frak_r)[0].clone();
    (0..n0).map(|i| level_to_tensor(n0, n1, 0, &rho.mu0[i][0].apply(&v))).collect()
}

/// `d⊗𝔯 = (d⊗1 + 1⊗d) 𝔯` for `𝔯` in the `bmm` block.
pub fn d_tensor_of(t: &Lie2Table, frak_r: &TensorElement) -> TensorElement {
    crate::graded::d_tensor_deg0(&t.d, frak_r).expect("𝔯 in g-1⊗g-1")
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::corpus::{random_strict_lie2, rng};
    use crate::graded::frac;
    use crate::lie2::tests::example47;
    use proptest::prelude::*;
    use rand::Rng;

    /// r = e1⊗e1* + e2⊗e2* − e1*⊗e1 − e2*⊗e2.
    pub fn r47() -> TensorElement {
        let mut r = TensorElement::zeros(2, 2);
        for i in 0..2 {
            r.b0m.set(i, i, int(1));
            r.bm0.set(i, i, int(-1));
        }
        r
    }

    fn delta47() -> CocyclePair {
        let mut c = CocyclePair::zero(2, 2);
        c.delta0[0] = r47().scale(&int(-1));
        // δ1(e2*) = e1*⊗e2* − e2*⊗e1*
        c.delta1[1].bmm.set(0, 1, int(1));
        c.delta1[1].bmm.set(1, 0, int(-1));
        c
    }

    #[test]
    fn coboundary_of_example47() {
        let t = example47().to_table();
        let phi = vec![TensorElement::zeros(2, 2); 2];
        let c = coboundary(&t, &r47(), &phi).unwrap();
        assert_eq!(c, delta47());
    }

    #[test]
    fn example47_is_cocycle() {
        let t = example47().to_table();
        let r = is_2cocycle(&t, &delta47()).unwrap();
        assert!(r.passed(), "{:?}", r.failed_names());
        assert!(is_2cocycle(&t, &CocyclePair::zero(2, 2)).unwrap().passed());
    }

    #[test]
    fn dropping_delta1_breaks_second_condition() {
        let t = example47().to_table();
        let mut c = delta47();
        c.delta1 = vec![TensorElement::zeros(2, 2); 2];
        let r = is_2cocycle(&t, &c).unwrap();
        assert!(!r.get("closed_delta0_d").unwrap().passed);
    }

    #[test]
    fn zero_and_abelian_cases() {
        let t = example47().to_table();
        let phi = vec![TensorElement::zeros(2, 2); 2];
        assert_eq!(coboundary(&t, &TensorElement::zeros(2, 2), &phi).unwrap(), CocyclePair::zero(2, 2));
        let ab = crate::lie2::StrictLie2Algebra::abelian(2, 1).to_table();
        let rho = tensor_square_rep(&ab);
        let mut g = rng(3);
        for (p, q, s) in [(0, 0, 1), (1, 0, 0), (1, 1, 1), (2, 0, 2)] {
            let f = Cochain::random(&mut g, 2, 1, p, q, s, rho.complex.dims[s]);
            assert!(apply_d(&ab, &rho, &f).unwrap().is_zero());
        }
    }

    #[test]
    fn rejects_large_bidegree() {
        let t = example47().to_table();
        let rho = tensor_square_rep(&t);
        let f = Cochain::zeros(2, 2, 2, 2, 0, 4);
        assert_eq!(apply_d(&t, &rho, &f), Err(CohomologyError::Unsupported(2, 2)));
    }

    #[test]
    fn restriction_is_enforced() {
        let t = example47().to_table();
        let mut r = TensorElement::zeros(2, 2);
        r.b0m.set(0, 0, int(1));
        let phi = vec![TensorElement::zeros(2, 2); 2];
        assert!(matches!(coboundary(&t, &r, &phi), Err(CohomologyError::Restriction(_))));
    }

    fn random_frak_r(g: &mut impl Rng, n0: usize, n1: usize) -> TensorElement {
        let mut t = TensorElement::zeros(n0, n1);
        for a in 0..n1 {
            for b in 0..n1 {
                t.bmm.set(a, b, int(g.gen_range(-2..=2)));
            }
        }
        t
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]
        #[test]
        fn d_squared_vanishes(seed in 0u64..100_000) {
            let l = random_strict_lie2(seed);
            if l.n0() + l.n1() > 6 { return Ok(()); }
            let t = l.to_table();
            let rho = tensor_square_rep(&t);
            let mut g = rng(seed);
            for (p, q) in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)] {
                for s in 0..3 {
                    let f = Cochain::random(&mut g, l.n0(), l.n1(), p, q, s, rho.complex.dims[s]);
                    let once = apply_d(&t, &rho, &f).unwrap();
                    let twice = apply_d_sum(&t, &rho, &once).unwrap();
                    prop_assert!(twice.is_zero(), "p={p} q={q} s={s}");
                }
            }
        }

        #[test]
        fn coboundaries_are_cocycles(seed in 0u64..100_000) {
            let l = random_strict_lie2(seed);
            if l.n0() + l.n1() > 6 { return Ok(()); }
            let t = l.to_table();
            let mut g = rng(seed ^ 0x55);
            let fr = random_frak_r(&mut g, l.n0(), l.n1());
            let rho = tensor_square_rep(&t);
            let kernel = rho.complex.diff[1].nullspace();
            let mut rv = zero_vec(rho.complex.dims[1]);
            for k in &kernel {
                axpy(&mut rv, &int(g.gen_range(-2..=2)), k);
            }
            let r = level_to_tensor(l.n0(), l.n1(), 1, &rv);
            let phi = d_ad_of(&t, &fr);
            let pair = coboundary(&t, &r, &phi).unwrap();
            let rep = is_2cocycle(&t, &pair).unwrap();
            prop_assert!(rep.passed(), "{:?}", rep.failed_names());
            // shifting r by d⊗𝔯 absorbs φ = d_ad 𝔯
            let shifted = r.sub(&d_tensor_of(&t, &fr));
            let zero = vec![TensorElement::zeros(l.n0(), l.n1()); l.n0()];
            let (pair2, _) = exact_pair(&t, &shifted, &zero).unwrap();
            prop_assert_eq!(pair, pair2);
        }
    }

    #[test]
    fn half_integer_coefficients_survive_round_trip() {
        let mut c = delta47();
        c.delta0[1].b0m.set(0, 1, frac(1, 2));
        let (a, b) = c.to_cochains();
        assert_eq!(CocyclePair::from_cochains(&a, &b), c);
    }
}
