//! Graded big bracket on `Sym(V*[-1] ⊕ V[-2])` for a two-term complex
//! `V = V0 ⊕ V-1`, and the encoding of Lie 2-(bi)algebra data as degree-4
//! elements whose self-bracket vanishes exactly when the structure is valid.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::cohomology::CocyclePair;
use crate::graded::{format_scalar, int, Matrix, Scalar, TensorElement};
use crate::lie2::StrictLie2Algebra;
use crate::report::{Check, Report};

/// Longest word the engine will produce; two degree-4 inputs need at most 6.
pub const MAX_WORD: usize = 6;

/// Shift parameters `(l, k)` of the big bracket; only `(0, 1)` is exercised.
pub const SHIFT_L: i32 = 0;
pub const SHIFT_K: i32 = 1;

/// Degree of the bracket itself: `⟨u,v⟩` has degree `|u| + |v| + BRACKET_DEGREE`.
pub const BRACKET_DEGREE: i32 = -3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BigBracketError {
    #[error("word of length {0} exceeds the cap of {MAX_WORD}")]
    WordLength(usize),
    #[error("component {name} has a monomial of bidegree {found:?}, expected {expected:?}")]
    Inhomogeneous { name: &'static str, found: (usize, usize), expected: (usize, usize) },
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("cobracket of {0} is not antisymmetric and cannot be encoded")]
    NotAntisymmetric(String),
}

/// Generator kinds in normal-form order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    /// `ξ^i`, dual of `x_i ∈ V0`; degree 1.
    Dual0,
    /// `η^a`, dual of `h_a ∈ V-1`; degree 2.
    Dual1,
    /// `x_i ∈ V0`; degree 2.
    Prim0,
    /// `h_a ∈ V-1`; degree 1.
    Prim1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    pub kind: Kind,
    pub index: usize,
}

impl Gen {
    pub fn new(kind: Kind, index: usize) -> Self {
        Gen { kind, index }
    }

    pub fn degree(self) -> i32 {
        match self.kind {
            Kind::Dual0 | Kind::Prim1 => 1,
            Kind::Dual1 | Kind::Prim0 => 2,
        }
    }

    pub fn is_odd(self) -> bool {
        self.degree() % 2 == 1
    }

    pub fn is_dual(self) -> bool {
        matches!(self.kind, Kind::Dual0 | Kind::Dual1)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.kind {
            Kind::Dual0 => "ξ",
            Kind::Dual1 => "η",
            Kind::Prim0 => "x",
            Kind::Prim1 => "h",
        };
        write!(f, "{s}{}", self.index + 1)
    }
}

/// `⟨g, g'⟩` on generators: `⟨dual, prim⟩ = 1` for matching pairs, and
/// `⟨prim, dual⟩ = -1` by graded antisymmetry.
pub fn pair(a: Gen, b: Gen) -> i64 {
    if a.index != b.index {
        return 0;
    }
    match (a.kind, b.kind) {
        (Kind::Dual0, Kind::Prim0) | (Kind::Dual1, Kind::Prim1) => 1,
        (Kind::Prim0, Kind::Dual0) | (Kind::Prim1, Kind::Dual1) => -1,
        _ => 0,
    }
}

pub fn word_degree(w: &[Gen]) -> i32 {
    w.iter().map(|g| g.degree()).sum()
}

/// `(#dual, #primal)` generators of a word.
pub fn bidegree(w: &[Gen]) -> (usize, usize) {
    let p = w.iter().filter(|g| g.is_dual()).count();
    (p, w.len() - p)
}

/// Sorts a word into normal form, returning the Koszul sign, or `None`
/// when an odd generator repeats.
pub fn normalize(word: &[Gen]) -> Option<(bool, Vec<Gen>)> {
    let mut w = word.to_vec();
    let mut negative = false;
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            if w[j - 1].is_odd() && w[j].is_odd() {
                negative = !negative;
            }
            w.swap(j - 1, j);
            j -= 1;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1] && p[0].is_odd()) {
        return None;
    }
    Some((negative, w))
}

/// Finite linear combination of normal-form monomials.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BBElement {
    terms: BTreeMap<Vec<Gen>, Scalar>,
}

impl BBElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(word: &[Gen], c: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_word(word, &c);
        e
    }

    /// Adds `c · word`, normalizing the word.
    pub fn add_word(&mut self, word: &[Gen], c: &Scalar) {
        if c.is_zero() {
            return;
        }
        if let Some((neg, w)) = normalize(word) {
            let c = if neg { -c.clone() } else { c.clone() };
            self.add_normal(w, c);
        }
    }

    fn add_normal(&mut self, w: Vec<Gen>, c: Scalar) {
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Gen>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &[Gen]) -> Scalar {
        match normalize(word) {
            Some((neg, w)) => {
                let c = self.terms.get(&w).cloned().unwrap_or_else(Scalar::zero);
                if neg {
                    -c
                } else {
                    c
                }
            }
            None => Scalar::zero(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_normal(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BBElement { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// Graded-commutative product.
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                let w: Vec<Gen> = u.iter().chain(v).copied().collect();
                out.add_word(&w, &(a * b));
            }
        }
        out
    }

    /// Part of bidegree `(p, q)`.
    pub fn component(&self, p: usize, q: usize) -> Self {
        BBElement {
            terms: self.terms.iter().filter(|(w, _)| bidegree(w) == (p, q)).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    /// All bidegrees with a nonzero part.
    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        let mut b: Vec<_> = self.terms.keys().map(|w| bidegree(w)).collect();
        b.sort();
        b.dedup();
        b
    }

    pub fn max_word(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// One `monomial: coefficient` line per term, in normal-form order.
    pub fn dump(&self) -> String {
        self.terms.iter().map(|(w, c)| format!("{}: {}\n", format_word(w), format_scalar(c))).collect()
    }
}

pub fn format_word(w: &[Gen]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(Gen::to_string).collect::<Vec<_>>().join("·")
}

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

/// `⟨u, b⟩` for a word `u` and a generator `b`, via antisymmetry and the
/// left Leibniz rule of `⟨b, ·⟩`; adds `coef · result` to `out`.
fn bracket_word_gen(u: &[Gen], b: Gen, coef: &Scalar, prefix: &[Gen], suffix: &[Gen], out: &mut BBElement) {
    let du = word_degree(u);
    let db = b.degree();
    // ⟨u,b⟩ = -(-1)^{(|u|+1)(|b|+1)} ⟨b,u⟩
    let s0 = -sign(((du + 1) * (db + 1)) % 2 != 0);
    let mut before = 0;
    for (p, &a) in u.iter().enumerate() {
        let pv = pair(b, a);
        if pv != 0 {
            // ⟨b, a_1…a_m⟩ ∋ (-1)^{(|b|+1)(|a_1|+…+|a_{p-1}|)} a_1…⟨b,a_p⟩…a_m
            let s = s0 * sign(((db + 1) * before) % 2 != 0) * pv;
            let w: Vec<Gen> =
                prefix.iter().chain(&u[..p]).chain(&u[p + 1..]).chain(suffix).copied().collect();
            out.add_word(&w, &(coef * int(s)));
        }
        before += a.degree();
    }
}

fn bracket_words(u: &[Gen], v: &[Gen], coef: &Scalar, out: &mut BBElement) {
    let du = word_degree(u);
    let mut before = 0;
    for (q, &b) in v.iter().enumerate() {
        // ⟨u, b_1…b_n⟩ ∋ (-1)^{(|u|+1)(|b_1|+…+|b_{q-1}|)} b_1…⟨u,b_q⟩…b_n
        let s = sign(((du + 1) * before) % 2 != 0);
        bracket_word_gen(u, b, &(coef * int(s)), &v[..q], &v[q + 1..], out);
        before += b.degree();
    }
}

/// Big bracket, bilinear extension of the generator pairing by the graded
/// Leibniz rule with operator degree `|u| - 3`.
pub fn bb_bracket(u: &BBElement, v: &BBElement) -> Result<BBElement, BigBracketError> {
    let mut out = BBElement::zero();
    for (wu, a) in &u.terms {
        for (wv, b) in &v.terms {
            let len = (wu.len() + wv.len()).saturating_sub(2);
            if len > MAX_WORD {
                return Err(BigBracketError::WordLength(len));
            }
            bracket_words(wu, wv, &(a * b), &mut out);
        }
    }
    Ok(out)
}

/// Degree-4 components of a two-term Lie 2-bialgebra. `l1` doubles as `c1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MasterElement {
    pub l1: BBElement,
    pub l2: BBElement,
    pub l3: BBElement,
    pub c2: BBElement,
    pub c3: BBElement,
    pub t22: BBElement,
}

const SHAPES: [(&str, (usize, usize)); 6] =
    [("l1", (1, 1)), ("l2", (2, 1)), ("l3", (3, 1)), ("c2", (1, 2)), ("c3", (1, 3)), ("t22", (2, 2))];

impl MasterElement {
    fn parts(&self) -> [&BBElement; 6] {
        [&self.l1, &self.l2, &self.l3, &self.c2, &self.c3, &self.t22]
    }

    /// Every monomial has total degree 4 and the bidegree of its component.
    pub fn validate(&self) -> Result<(), BigBracketError> {
        for ((name, expected), part) in SHAPES.iter().zip(self.parts()) {
            for (w, _) in part.terms() {
                let found = bidegree(w);
                if found != *expected || word_degree(w) != 4 {
                    return Err(BigBracketError::Inhomogeneous { name, found, expected: *expected });
                }
            }
        }
        Ok(())
    }

    pub fn total(&self) -> BBElement {
        self.parts().iter().fold(BBElement::zero(), |acc, p| acc.add(p))
    }

    /// `l1 + l2 + l3` only.
    pub fn l_block(&self) -> MasterElement {
        MasterElement { l1: self.l1.clone(), l2: self.l2.clone(), l3: self.l3.clone(), ..Default::default() }
    }

    /// `c1 + c2 + c3` only, with `c1 = l1`.
    pub fn c_block(&self) -> MasterElement {
        MasterElement { l1: self.l1.clone(), c2: self.c2.clone(), c3: self.c3.clone(), ..Default::default() }
    }
}

/// Relative weights inside the encodings. Zero-testing of the master
/// equation is insensitive to a global scale of each component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalization {
    /// Weight of the `[x,h]` block relative to `[x,y]` in `l2`.
    pub mixed_bracket: Scalar,
    /// Weight of the `δ1` part relative to the `δ0` part in `c2`.
    pub delta1: Scalar,
}

impl Default for Normalization {
    fn default() -> Self {
        Normalization { mixed_bracket: int(1), delta1: int(1) }
    }
}

fn g(kind: Kind, index: usize) -> Gen {
    Gen::new(kind, index)
}

/// `l1 = Σ d[k][a] η^a x_k`.
pub fn encode_l1(d: &Matrix) -> BBElement {
    let mut e = BBElement::zero();
    for k in 0..d.rows() {
        for a in 0..d.cols() {
            e.add_word(&[g(Kind::Dual1, a), g(Kind::Prim0, k)], d.get(k, a));
        }
    }
    e
}

/// `l2 = Σ_{i<j} c^k_ij ξ^iξ^j x_k + w Σ c01[i][a][b] ξ^i η^a h_b`.
pub fn encode_l2(l: &StrictLie2Algebra, norm: &Normalization) -> BBElement {
    let (n0, n1) = (l.n0(), l.n1());
    let mut e = BBElement::zero();
    for i in 0..n0 {
        for j in i + 1..n0 {
            for k in 0..n0 {
                e.add_word(&[g(Kind::Dual0, i), g(Kind::Dual0, j), g(Kind::Prim0, k)], l.c00(i, j, k));
            }
        }
        for a in 0..n1 {
            for b in 0..n1 {
                let c = l.c01(i, a, b) * &norm.mixed_bracket;
                e.add_word(&[g(Kind::Dual0, i), g(Kind::Dual1, a), g(Kind::Prim1, b)], &c);
            }
        }
    }
    e
}

/// `c2`: `ξ^k x_i h_a` for `x_i⊗h_a − h_a⊗x_i` in `δ0(x_k)` and
/// `η^m h_a h_b` for `h_a⊗h_b − h_b⊗h_a` in `δ1(h_m)`.
pub fn encode_c2(c: &CocyclePair, norm: &Normalization) -> BBElement {
    let (n0, n1) = (c.n0(), c.n1());
    let half = Scalar::new(1.into(), 2.into());
    let mut e = BBElement::zero();
    for (k, t) in c.delta0.iter().enumerate() {
        for i in 0..n0 {
            for a in 0..n1 {
                let x = (t.b0m.get(i, a) - t.bm0.get(a, i)) * &half;
                e.add_word(&[g(Kind::Dual0, k), g(Kind::Prim0, i), g(Kind::Prim1, a)], &x);
            }
        }
    }
    for (m, t) in c.delta1.iter().enumerate() {
        for a in 0..n1 {
            for b in a + 1..n1 {
                let x = (t.bmm.get(a, b) - t.bmm.get(b, a)) * &half * &norm.delta1;
                e.add_word(&[g(Kind::Dual1, m), g(Kind::Prim1, a), g(Kind::Prim1, b)], &x);
            }
        }
    }
    e
}

/// First basis element whose cobracket has a symmetric part, if any.
pub fn non_antisymmetric(c: &CocyclePair) -> Option<String> {
    for (k, t) in c.delta0.iter().enumerate() {
        if !t.b00.is_zero() || !t.bmm.is_zero() || t.b0m != t.bm0.transpose().neg() {
            return Some(format!("x{}", k + 1));
        }
    }
    for (m, t) in c.delta1.iter().enumerate() {
        if !t.b00.is_zero() || !t.b0m.is_zero() || !t.bm0.is_zero() || !t.bmm.is_skew() {
            return Some(format!("h{}", m + 1));
        }
    }
    None
}

/// Encodes a strict Lie 2-algebra and an optional cobracket pair; the
/// cobracket must be antisymmetric, since `c2` only sees that part.
pub fn encode(l: &StrictLie2Algebra, c: Option<&CocyclePair>, norm: &Normalization) -> Result<MasterElement, BigBracketError> {
    if let Some(c) = c {
        if c.n0() != l.n0() || c.n1() != l.n1() {
            return Err(BigBracketError::Shape("cocycle does not match algebra".into()));
        }
        if let Some(u) = non_antisymmetric(c) {
            return Err(BigBracketError::NotAntisymmetric(u));
        }
    }
    let m = MasterElement {
        l1: encode_l1(&l.d),
        l2: encode_l2(l, norm),
        c2: c.map(|c| encode_c2(c, norm)).unwrap_or_default(),
        ..Default::default()
    };
    m.validate()?;
    Ok(m)
}

/// Recovers `(d, [·,·])` from `l1`, `l2`.
pub fn decode_lie2(m: &MasterElement, n0: usize, n1: usize, norm: &Normalization) -> StrictLie2Algebra {
    let mut l = StrictLie2Algebra::abelian(n0, n1);
    for k in 0..n0 {
        for a in 0..n1 {
            l.d.set(k, a, m.l1.coefficient(&[g(Kind::Dual1, a), g(Kind::Prim0, k)]));
        }
    }
    let inv = Scalar::one() / &norm.mixed_bracket;
    for i in 0..n0 {
        for j in 0..n0 {
            for k in 0..n0 {
                if i != j {
                    let c = m.l2.coefficient(&[g(Kind::Dual0, i), g(Kind::Dual0, j), g(Kind::Prim0, k)]);
                    l.set_c00(i, j, k, c);
                }
            }
        }
        for a in 0..n1 {
            for b in 0..n1 {
                let c = m.l2.coefficient(&[g(Kind::Dual0, i), g(Kind::Dual1, a), g(Kind::Prim1, b)]) * &inv;
                l.set_c01(i, a, b, c);
            }
        }
    }
    l
}

/// Inverse of [`encode_c2`]; the result is antisymmetric.
pub fn decode_c2(c2: &BBElement, n0: usize, n1: usize, norm: &Normalization) -> CocyclePair {
    let mut out = CocyclePair::zero(n0, n1);
    for k in 0..n0 {
        let t: &mut TensorElement = &mut out.delta0[k];
        for i in 0..n0 {
            for a in 0..n1 {
                let x = c2.coefficient(&[g(Kind::Dual0, k), g(Kind::Prim0, i), g(Kind::Prim1, a)]);
                t.bm0.set(a, i, -x.clone());
                t.b0m.set(i, a, x);
            }
        }
    }
    let inv = Scalar::one() / &norm.delta1;
    for m in 0..n1 {
        let t = &mut out.delta1[m];
        for a in 0..n1 {
            for b in 0..n1 {
                if a != b {
                    let x = c2.coefficient(&[g(Kind::Dual1, m), g(Kind::Prim1, a), g(Kind::Prim1, b)]) * &inv;
                    t.bmm.set(a, b, x);
                }
            }
        }
    }
    out
}

/// The equations of `⟨t,t⟩ = 0`, one per bidegree of the output.
pub const EQUATIONS: [(&str, &str, (usize, usize)); 13] = [
    ("l.l1_l1", "⟨l1,l1⟩ = 0", (1, 1)),
    ("l.l1_l2", "⟨l1,l2⟩ = 0", (2, 1)),
    ("l.l2_l2", "⟨l2,l2⟩ + 2⟨l3,l1⟩ = 0", (3, 1)),
    ("l.l2_l3", "⟨l2,l3⟩ = 0", (4, 1)),
    ("l.l3_l3", "⟨l3,l3⟩ = 0", (5, 1)),
    ("c.c1_c2", "⟨c1,c2⟩ = 0", (1, 2)),
    ("c.c2_c2", "⟨c2,c2⟩ + 2⟨c3,c1⟩ = 0", (1, 3)),
    ("c.c2_c3", "⟨c2,c3⟩ = 0", (1, 4)),
    ("c.c3_c3", "⟨c3,c3⟩ = 0", (1, 5)),
    ("mixed.l2_c2", "⟨l2,c2⟩ + ⟨l1,t22⟩ = 0", (2, 2)),
    ("mixed.l2_c3", "⟨l2,c3⟩ + ⟨c2,t22⟩ = 0", (2, 3)),
    ("mixed.l3_c2", "⟨l3,c2⟩ + ⟨l2,t22⟩ = 0", (3, 2)),
    ("mixed.l3_c3", "⟨l3,c3⟩ + ⟨t22,t22⟩ = 0", (3, 3)),
];

fn equation_check(name: &str, anchor: &str, part: &BBElement) -> Check {
    let mut c = Check::new(name, anchor);
    for (w, x) in part.terms() {
        c.fail(&[format_word(w)], &[x.clone()], &[Scalar::zero()]);
    }
    c
}

/// Evaluates `⟨t,t⟩` and reports each equation from its bidegree, plus any
/// residual bidegree and the total.
pub fn master_check(m: &MasterElement) -> Result<Report, BigBracketError> {
    m.validate()?;
    let t = m.total();
    let tt = bb_bracket(&t, &t)?;
    let mut r = Report::new();
    for (name, anchor, (p, q)) in EQUATIONS {
        r.push(equation_check(name, anchor, &tt.component(p, q)));
    }
    let known: Vec<(usize, usize)> = EQUATIONS.iter().map(|e| e.2).collect();
    let mut residual = BBElement::zero();
    for (p, q) in tt.bidegrees().into_iter().filter(|b| !known.contains(b)) {
        residual = residual.add(&tt.component(p, q));
    }
    r.push(equation_check("residual", "no other bidegree occurs", &residual));
    r.push(equation_check("total", "⟨t,t⟩ = 0", &tt));
    Ok(r)
}

/// `D̃_ad c2 = ⟨l1 + l2 + l3, c2⟩`.
pub fn d_ad_tilde(m: &MasterElement, x: &BBElement) -> Result<BBElement, BigBracketError> {
    bb_bracket(&m.l_block().total(), x)
}

/// True when the four mixed equations hold.
pub fn mixed_block_passes(r: &Report) -> bool {
    r.checks.iter().filter(|c| c.name.starts_with("mixed.")).all(|c| c.passed)
}

/// Degree of a homogeneous nonzero element.
pub fn homogeneous_degree(e: &BBElement) -> Option<i32> {
    let mut degrees = e.terms().map(|(w, _)| word_degree(w));
    let first = degrees.next()?;
    degrees.all(|d| d == first).then_some(first)
}

/// `⟨u,⟨v,w⟩⟩ − ⟨⟨u,v⟩,w⟩ − (−1)^{(|u|−3)(|v|−3)}⟨v,⟨u,w⟩⟩`; zero exactly when
/// graded Jacobi holds on the triple.
pub fn jacobi_defect(u: &BBElement, v: &BBElement, w: &BBElement) -> Result<BBElement, BigBracketError> {
    if u.is_zero() || v.is_zero() {
        return Ok(BBElement::zero());
    }
    let (Some(du), Some(dv)) = (homogeneous_degree(u), homogeneous_degree(v)) else {
        return Err(BigBracketError::Shape("graded Jacobi needs homogeneous arguments".into()));
    };
    let s = if ((du - 3) * (dv - 3)) % 2 == 0 { int(1) } else { int(-1) };
    let lhs = bb_bracket(u, &bb_bracket(v, w)?)?;
    let r1 = bb_bracket(&bb_bracket(u, v)?, w)?;
    let r2 = bb_bracket(v, &bb_bracket(u, w)?)?.scale(&s);
    Ok(lhs.add(&r1.scale(&int(-1))).add(&r2.scale(&int(-1))))
}

fn random_word(r: &mut impl Rng, max_len: usize, indices: usize) -> Vec<Gen> {
    let len = r.gen_range(1..=max_len);
    (0..len)
        .map(|_| {
            let kind = [Kind::Dual0, Kind::Dual1, Kind::Prim0, Kind::Prim1][r.gen_range(0..4)];
            Gen::new(kind, r.gen_range(0..indices))
        })
        .collect()
}

/// A random nonzero monomial of length at most `max_len` over two indices
/// per generator kind, with coefficient in `1..=3`.
pub fn random_monomial(r: &mut impl Rng, max_len: usize) -> BBElement {
    loop {
        let w = random_word(r, max_len, 2);
        let e = BBElement::monomial(&w, int(r.gen_range(1..=3)));
        if !e.is_zero() {
            return e;
        }
    }
}
