//! Acceptance suite: one line per criterion, then a summary. Runs without the
//! libtest harness so the lines are always printed.

use std::collections::BTreeSet;
use std::process::ExitCode;

use lie2bialg::bialgebra::{classical_cybe, cybe_check, dual_table, triangle, RMatrixData, StrictLie2Bialgebra};
use lie2bialg::bigbracket::{encode, jacobi_defect, master_check, random_monomial, BBElement, Normalization};
use lie2bialg::cohomology::{coboundary, d_squared_check, is_2cocycle};
use lie2bialg::corpus::{random_bialgebra_candidate, random_left_symmetric, rng};
use lie2bialg::graded::{frac, int, Matrix, Scalar, TensorElement};
use lie2bialg::lie2::{check_strict_axioms, StrictLie2Algebra};
use lie2bialg::prelie::{
    admissible_solution_space, build_bialgebra_from_prelie, canonical_r, catalog, catalog_entry, catalog_fidelity, hat_algebra,
    hat_algebra_oracle, invertible_d_verdicts, prelie_lie2, semidirect_prelie, skew_dimension, symplectic_double, CatalogInstance,
    LeftSymmetricAlgebra,
};
use rand::Rng;

/// Criteria that fail because the stated mathematics does not hold; each is
/// analysed in the README. The run succeeds only if exactly these fail.
const KNOWN_FAILURES: [usize; 2] = [7, 9];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn all_instances() -> Vec<CatalogInstance> {
    catalog().iter().flat_map(|e| e.instances()).collect()
}

fn m47() -> Matrix {
    Matrix::from_i64(&[&[0, -1], &[1, 0]])
}

fn n3() -> LeftSymmetricAlgebra {
    catalog_entry("N3").unwrap().algebra(None).unwrap()
}

fn tensor(entries: &[(usize, usize, i64)]) -> TensorElement {
    let mut t = TensorElement::zeros(2, 2);
    for &(u, v, c) in entries {
        t.set(u, v, int(c));
    }
    t
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|j| int(i64::from(i == j))).collect()
}

/// Example built from e1∘e1 = e1, e2∘e1 = e2 and d(e1*) = −e2, d(e2*) = e1.
/// Combined basis: e1, e2 | e1*, e2*.
fn criterion1() -> Outcome {
    let b = match build_bialgebra_from_prelie(&n3(), &m47()) {
        Ok(b) => b,
        Err(e) => return outcome(false, format!("construction failed: {e}")),
    };
    let l = &b.base;
    let mut bad = Vec::new();
    let mut expect = |name: &str, ok: bool| {
        if !ok {
            bad.push(name.to_string());
        }
    };
    let z = int(0);
    expect("d(e1*) = -e2", l.d.col(0) == vec![z.clone(), int(-1)]);
    expect("d(e2*) = e1", l.d.col(1) == vec![int(1), z.clone()]);
    expect("[e2,e1] = e2", (0..2).map(|k| l.c00(1, 0, k).clone()).collect::<Vec<_>>() == vec![z.clone(), int(1)]);
    expect("[e1,e2] = -e2", (0..2).map(|k| l.c00(0, 1, k).clone()).collect::<Vec<_>>() == vec![z.clone(), int(-1)]);
    let l_star = |i: usize, a: usize| (0..2).map(|c| l.c01(i, a, c).clone()).collect::<Vec<_>>();
    expect("L*_e1 e1* = -e1*", l_star(0, 0) == vec![int(-1), z.clone()]);
    expect("L*_e1 e2* = 0", l_star(0, 1) == vec![z.clone(), z.clone()]);
    expect("L*_e2 e1* = 0", l_star(1, 0) == vec![z.clone(), z.clone()]);
    expect("L*_e2 e2* = -e1*", l_star(1, 1) == vec![int(-1), z.clone()]);
    let c = &b.cocycle;
    expect("delta0(e1)", c.delta0[0] == tensor(&[(2, 0, 1), (0, 2, -1), (3, 1, 1), (1, 3, -1)]));
    expect("delta0(e2) = 0", c.delta0[1].is_zero());
    expect("delta1(e1*) = 0", c.delta1[0].is_zero());
    expect("delta1(e2*) = e1*⊗e2* - e2*⊗e1*", c.delta1[1] == tensor(&[(2, 3, 1), (3, 2, -1)]));
    match dual_table(&l.to_table(), c) {
        Ok(dt) => {
            // dual basis: e1, e2 | e1*, e2*
            expect("[e1,e2]* = e2", dt.get(0, 1) == &unit(4, 1));
            expect("[e1,e1*]* = e1*", dt.get(0, 2) == &unit(4, 2));
            expect("[e2,e2*]* = e1*", dt.get(1, 3) == &unit(4, 2));
            expect("[e1,e2*]* = 0", dt.get(0, 3) == &vec![z.clone(); 4]);
            expect("[e2,e1*]* = 0", dt.get(1, 2) == &vec![z.clone(); 4]);
        }
        Err(e) => bad.push(format!("dual table: {e}")),
    }
    if bad.is_empty() {
        outcome(true, "brackets, dual representation, δ0, δ1 and dual brackets reproduced exactly")
    } else {
        outcome(false, format!("mismatches: {}", bad.join("; ")))
    }
}

fn cybe_and_invariants(a: &LeftSymmetricAlgebra, m: &Matrix, r: &TensorElement) -> Result<(bool, bool), String> {
    let l = prelie_lie2(a, m).map_err(|e| e.to_string())?;
    let t = l.to_table();
    let n = a.dim();
    let rm = RMatrixData::new(r.clone(), TensorElement::zeros(n, n)).map_err(|e| e.to_string())?;
    let conditions = cybe_check(&t, &rm).map_err(|e| e.to_string())?.report.passed();
    let phi = vec![TensorElement::zeros(n, n); n];
    let cocycle = coboundary(&t, r, &phi).map_err(|e| e.to_string())?;
    let invariants = StrictLie2Bialgebra { base: l, cocycle }.check().map_err(|e| e.to_string())?.passed();
    Ok((conditions, invariants))
}

fn criterion2() -> Outcome {
    let mut cases: Vec<(String, LeftSymmetricAlgebra, Matrix)> = Vec::new();
    for inst in all_instances().into_iter().filter(|i| i.algebra.dim() == 2) {
        cases.push((format!("{} d=0", inst.label), inst.algebra, Matrix::zeros(2, 2)));
    }
    for a in [int(1), int(2), int(-1), frac(1, 2), frac(-3, 2)] {
        cases.push((format!("N3 a={a}"), n3(), m47().scale(&a)));
    }
    let mut valid_fail = Vec::new();
    let mut mutated = 0;
    let mut detected = 0;
    let mut implication_violations = Vec::new();
    let mut g = rng(2);
    for (label, a, m) in &cases {
        let r = canonical_r(2);
        match cybe_and_invariants(a, m, &r) {
            Ok((true, true)) => {}
            Ok(v) => valid_fail.push(format!("{label} {v:?}")),
            Err(e) => valid_fail.push(format!("{label}: {e}")),
        }
        for _ in 0..2 {
            let mut rr = r.clone();
            let (u, v) = if g.gen_bool(0.5) { (g.gen_range(0..2), 2 + g.gen_range(0..2)) } else { (2 + g.gen_range(0..2), g.gen_range(0..2)) };
            let delta = if g.gen_bool(0.5) { int(1) } else { int(-1) };
            rr.set(u, v, rr.get(u, v) + delta);
            mutated += 1;
            match cybe_and_invariants(a, m, &rr) {
                Ok((true, true)) => {}
                Ok((true, false)) => {
                    detected += 1;
                    implication_violations.push(label.clone());
                }
                Ok(_) | Err(_) => detected += 1,
            }
        }
    }
    let passed = valid_fail.is_empty() && detected >= 20 && implication_violations.is_empty();
    let mut detail = format!(
        "{}/{} admissible instances pass (a), (b), (c) and every invariant; {detected}/{mutated} mutated r fail a condition or invariant",
        cases.len() - valid_fail.len(),
        cases.len()
    );
    if !valid_fail.is_empty() {
        detail.push_str(&format!("; failing: {}", valid_fail.join(", ")));
    }
    if !implication_violations.is_empty() {
        detail.push_str(&format!("; conditions pass but invariants fail: {}", implication_violations.join(", ")));
    }
    outcome(passed, detail)
}

const CORPUS: u64 = 150;

fn criterion3() -> Outcome {
    let mut valid = 0;
    let mut disagree = Vec::new();
    for seed in 0..CORPUS {
        let (l, c) = random_bialgebra_candidate(seed);
        match triangle(&l.to_table(), &c) {
            Ok(v) => {
                if !v.agree() {
                    disagree.push(format!("seed {seed} {v:?}"));
                } else if v.manin {
                    valid += 1;
                }
            }
            Err(e) => disagree.push(format!("seed {seed}: {e}")),
        }
    }
    let detail = format!("{}/{CORPUS} agree ({valid} valid, {} invalid)", CORPUS as usize - disagree.len(), CORPUS as usize - valid - disagree.len());
    if disagree.is_empty() {
        outcome(true, detail)
    } else {
        outcome(false, format!("{detail}; disagreements: {}", disagree.join(", ")))
    }
}

fn criterion4() -> Outcome {
    let norm = Normalization::default();
    let mut disagree = Vec::new();
    for seed in 0..CORPUS {
        let (l, c) = random_bialgebra_candidate(seed);
        let t = l.to_table();
        let strict = check_strict_axioms(&l).passed();
        let sc = strict
            && is_2cocycle(&t, &c).map(|r| r.passed()).unwrap_or(false)
            && dual_table(&t, &c).map(|d| d.check_axioms().passed()).unwrap_or(false);
        let m = match encode(&l, Some(&c), &norm) {
            Ok(m) => m,
            Err(e) => {
                disagree.push(format!("seed {seed}: {e}"));
                continue;
            }
        };
        let bb = master_check(&m).map(|r| r.passed()).unwrap_or(false);
        let l_block = master_check(&m.l_block()).map(|r| r.passed()).unwrap_or(false);
        if sc != bb || strict != l_block {
            disagree.push(format!("seed {seed}"));
        }
    }
    let mut g = rng(4);
    let mut jacobi_fail = 0;
    let triples = 1000;
    for _ in 0..triples {
        let (u, v, w) = (random_monomial(&mut g, 3), random_monomial(&mut g, 3), random_monomial(&mut g, 3));
        if !jacobi_defect(&u, &v, &w).as_ref().is_ok_and(BBElement::is_zero) {
            jacobi_fail += 1;
        }
    }
    let passed = disagree.is_empty() && jacobi_fail == 0;
    let mut detail = format!(
        "{}/{CORPUS} bialgebra and strictness verdicts agree with ⟨t,t⟩ = 0; graded Jacobi exact on {}/{triples} triples",
        CORPUS as usize - disagree.len(),
        triples - jacobi_fail
    );
    if !disagree.is_empty() {
        detail.push_str(&format!("; disagreements: {}", disagree.join(", ")));
    }
    outcome(passed, detail)
}

fn criterion5() -> Outcome {
    let mut algebras: Vec<(String, StrictLie2Algebra)> = all_instances()
        .into_iter()
        .map(|i| {
            let n = i.algebra.dim();
            (i.label.clone(), prelie_lie2(&i.algebra, &Matrix::zeros(n, n)).unwrap())
        })
        .collect();
    algebras.push(("N3 with d".into(), prelie_lie2(&n3(), &m47()).unwrap()));
    let mut bad = Vec::new();
    for (k, (label, l)) in algebras.iter().enumerate() {
        match d_squared_check(&l.to_table(), &mut rng(500 + k as u64)) {
            Ok(c) if c.passed => {}
            Ok(_) => bad.push(label.clone()),
            Err(e) => bad.push(format!("{label}: {e}")),
        }
    }
    if bad.is_empty() {
        outcome(true, format!("D∘D = 0 on random 1- and 2-cochains for {} catalog-derived algebras", algebras.len()))
    } else {
        outcome(false, format!("D∘D ≠ 0 for {}", bad.join(", ")))
    }
}

fn canonical_r_holds(a: &LeftSymmetricAlgebra) -> bool {
    let g = semidirect_prelie(a);
    let labels: Vec<String> = a.labels.iter().chain(&a.dual_labels).cloned().collect();
    let (ca, cb, _) = classical_cybe(&g, &canonical_r(a.dim()).to_full(), &labels);
    ca.passed && cb.passed
}

fn criterion6() -> Outcome {
    let mut bad = Vec::new();
    for e in catalog() {
        for inst in e.instances() {
            if !canonical_r_holds(&inst.algebra) {
                bad.push(inst.label.clone());
            }
        }
    }
    let mut seen = BTreeSet::new();
    let mut seed = 0;
    while seen.len() < 60 {
        let a = random_left_symmetric(seed, 3);
        seed += 1;
        if !seen.insert((a.dim(), a.constants().to_vec())) {
            continue;
        }
        if !canonical_r_holds(&a) {
            bad.push(format!("random seed {}", seed - 1));
        }
    }
    let detail = format!("canonical r satisfies (a) and (b) for all 11 catalog entries ({} instances) and {} random algebras of dimension ≤ 3", all_instances().len(), seen.len());
    if bad.is_empty() {
        outcome(true, detail)
    } else {
        outcome(false, format!("{detail} except {}", bad.join(", ")))
    }
}

fn criterion7() -> Outcome {
    let mut cases: Vec<(String, LeftSymmetricAlgebra, Matrix)> = vec![("N3 a=1".into(), n3(), m47())];
    for a in [int(2), int(-1), frac(1, 2)] {
        cases.push((format!("N3 a={a}"), n3(), m47().scale(&a)));
    }
    for inst in all_instances().into_iter().filter(|i| i.algebra.dim() == 2 && !i.label.starts_with("N3")) {
        cases.push((inst.label.clone(), inst.algebra, m47()));
    }
    let mut g = rng(7);
    let mut seed = 1000;
    let mut randoms = 0;
    while randoms < 20 {
        let a = random_left_symmetric(seed, 2);
        seed += 1;
        if a.dim() != 2 {
            continue;
        }
        let s = int(g.gen_range(1..=3) * if g.gen_bool(0.5) { 1 } else { -1 });
        cases.push((format!("random seed {}", seed - 1), a, m47().scale(&s)));
        randoms += 1;
    }
    let mut disagree = Vec::new();
    for (label, a, m) in &cases {
        match invertible_d_verdicts(a, m) {
            Ok(v) if v.agree() => {}
            Ok(v) => disagree.push(format!("{label} (strict {}, invariant {}, symplectic {})", v.strict, v.invariant, v.symplectic)),
            Err(e) => disagree.push(format!("{label}: {e}")),
        }
    }
    let detail = format!("{}/{} invertible skew instances give coinciding verdicts", cases.len() - disagree.len(), cases.len());
    if disagree.is_empty() {
        outcome(true, detail)
    } else {
        let shown: Vec<&str> = disagree.iter().take(4).map(String::as_str).collect();
        outcome(false, format!("{detail}; symplectic without invariance on {}, ...", shown.join(", ")))
    }
}

fn criterion8() -> Outcome {
    let mut bad = Vec::new();
    for e in catalog() {
        let a = e.algebra(e.default_parameter().as_ref()).unwrap();
        match hat_algebra_oracle(&a) {
            Ok(o) if o.constants() == hat_algebra(&a).constants() => {}
            Ok(_) => bad.push(format!("{}: product differs from oracle", e.name)),
            Err(err) => bad.push(format!("{}: oracle {err}", e.name)),
        }
        match symplectic_double(&a).map_err(|e| e.to_string()).and_then(|b| b.check().map_err(|e| e.to_string())) {
            Ok(r) if r.passed() => {}
            Ok(r) => bad.push(format!("{}: {}", e.name, r.failed_names().join(","))),
            Err(err) => bad.push(format!("{}: {err}", e.name)),
        }
    }
    if bad.is_empty() {
        outcome(true, "all 11 doubles pass the bialgebra suite; the double product matches the symplectic oracle")
    } else {
        outcome(false, bad.join("; "))
    }
}

fn criterion9() -> Outcome {
    let mut bad = Vec::new();
    for e in catalog() {
        let r = catalog_fidelity(e);
        if !r.passed() {
            bad.push(format!("{} ({})", e.name, r.failed_names().join(", ")));
        }
    }
    let skew: Vec<String> = all_instances()
        .into_iter()
        .filter(|i| skew_dimension(&admissible_solution_space(&i.algebra)) > 0)
        .map(|i| i.label)
        .collect();
    let only_n3 = !skew.is_empty() && skew.iter().all(|l| l.starts_with("N3"));
    let mut detail = format!("nonzero skew M(d) admitted only by N3: {only_n3}");
    if !bad.is_empty() {
        detail.push_str(&format!("; stated family is not the exact solution set for {}", bad.join("; ")));
    }
    outcome(bad.is_empty() && only_n3, detail)
}

fn main() -> ExitCode {
    let criteria: [(usize, &str, fn() -> Outcome); 9] = [
        (1, "worked example reproduced exactly", criterion1),
        (2, "2-graded CYBE on the catalog", criterion2),
        (3, "cocycle / matched pair / Manin triangle", criterion3),
        (4, "big-bracket oracle agreement", criterion4),
        (5, "D∘D = 0", criterion5),
        (6, "canonical r-matrix universality", criterion6),
        (7, "invertible-d equivalence", criterion7),
        (8, "symplectic double", criterion8),
        (9, "catalog fidelity", criterion9),
    ];
    let mut failed = BTreeSet::new();
    for (n, title, f) in criteria {
        let o = f();
        println!("criterion {n} {}: {title}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
        if !o.passed {
            failed.insert(n);
        }
    }
    let known: BTreeSet<usize> = KNOWN_FAILURES.into_iter().collect();
    println!("failed: {failed:?}; known failures: {known:?}");
    if failed == known {
        println!("acceptance: failures match the documented set");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failures differ from the documented set");
        ExitCode::FAILURE
    }
}
