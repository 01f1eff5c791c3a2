//! Command-line front end: load documents, run check suites and
//! constructions, and emit machine-readable reports.
//!
//! Exit codes: 0 pass, 1 mathematical failure, 2 input or usage error.

pub mod document;

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bialgebra::{
    build_double, build_double_unchecked, coboundary_from_r, cybe_check, dual_table, manin_check, matched_pair_check, BialgebraError,
    RMatrixData, StrictLie2Bialgebra,
};
use crate::bigbracket::{encode, master_check, BigBracketError, Normalization};
use crate::cohomology::d_squared_check;
use crate::corpus::rng;
use crate::graded::{parse_scalar, Matrix, Scalar, TensorElement};
use crate::lie2::{check_strict_axioms, coadjoint_rep, StrictLie2Algebra};
use crate::prelie::{
    admissible_d_check, build_bialgebra_from_prelie, canonical_r, catalog, catalog_entry, check_left_mult_rep, invertible_d_verdicts,
    prelie_lie2, symplectic_check, symplectic_double, CatalogEntry, LeftSymmetricAlgebra, PrelieError,
};
use crate::report::{Check, Report};

pub use document::{Document, DocError, Metadata, Object, SCHEMA_VERSION};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Unreadable or inconsistent input, or a suite that does not apply.
    #[error("{0}")]
    Input(String),
    /// A construction whose mathematical precondition fails.
    #[error("{0}")]
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(_) => 1,
            CliError::Input(_) => 2,
        }
    }
}

impl From<DocError> for CliError {
    fn from(e: DocError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn input(e: impl ToString) -> CliError {
    CliError::Input(e.to_string())
}

impl From<PrelieError> for CliError {
    fn from(e: PrelieError) -> Self {
        match e {
            PrelieError::NotLeftSymmetric | PrelieError::NotAdmissible(_) | PrelieError::Singular(_) | PrelieError::NotSkew => {
                CliError::Math(e.to_string())
            }
            PrelieError::Bialgebra(BialgebraError::NotCocycle(_)) => CliError::Math(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Lie2,
    Bialgebra,
    Cybe,
    MatchedPair,
    Manin,
    Master,
    Prelie,
    Symplectic,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Lie2 => "lie2",
            Suite::Bialgebra => "bialgebra",
            Suite::Cybe => "cybe",
            Suite::MatchedPair => "matched-pair",
            Suite::Manin => "manin",
            Suite::Master => "master",
            Suite::Prelie => "prelie",
            Suite::Symplectic => "symplectic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BuildKind {
    FromPrelie,
    SymplecticDouble,
    Double,
}

#[derive(Debug, Parser)]
#[command(name = "lie2bialg", version, about = "Exact checks for strict Lie 2-algebras and Lie 2-bialgebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a check suite on a document and print a JSON report.
    Check {
        path: PathBuf,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Keep every witness instead of the first per check.
        #[arg(long)]
        verbose: bool,
        /// Also run randomized property sweeps with this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Construct a document.
    Build {
        #[arg(value_enum)]
        kind: BuildKind,
        /// Input document.
        #[arg(long, conflicts_with = "catalog")]
        input: Option<PathBuf>,
        /// Catalog entry to start from (from-prelie, symplectic-double).
        #[arg(long)]
        catalog: Option<String>,
        /// Structure parameter of the catalog entry.
        #[arg(long, requires = "catalog")]
        param: Option<String>,
        /// Values of the family parameters of d, as name=value.
        #[arg(long = "d", value_name = "NAME=VALUE", requires = "catalog")]
        d_values: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List or export the built-in catalog of left-symmetric algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    Export {
        entry: String,
        path: PathBuf,
        #[arg(long)]
        param: Option<String>,
    },
}

/// Output of `check`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: Suite,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub timing_ms: u64,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckOptions {
    pub verbose: bool,
    pub seed: Option<u64>,
}

pub fn load(path: &Path) -> Result<Document, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Document::from_json(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn not_applicable(suite: Suite, doc: &Document, why: &str) -> CliError {
    CliError::Input(format!("suite {} does not apply to kind {}{why}", suite.name(), doc.kind()))
}

/// Explains a refusal for kinds where a missing optional section is the cause.
fn missing(doc: &Document, kind: &str, section: &'static str) -> &'static str {
    if doc.kind() == kind {
        section
    } else {
        ""
    }
}

fn prelie_with_d<'a>(obj: &'a Object) -> Option<(&'a LeftSymmetricAlgebra, &'a Matrix)> {
    match obj {
        Object::Prelie { algebra, m: Some(m) } => Some((algebra, m)),
        _ => None,
    }
}

fn strict_algebra(obj: &Object) -> Result<Option<StrictLie2Algebra>, CliError> {
    Ok(match obj {
        Object::Lie2 { algebra, .. } | Object::RMatrix { algebra, .. } => Some(algebra.clone()),
        Object::Bialgebra(b) => Some(b.base.clone()),
        Object::Prelie { algebra, m: Some(m) } => Some(prelie_lie2(algebra, m)?),
        _ => None,
    })
}

fn bialgebra_of(obj: &Object) -> Result<Option<StrictLie2Bialgebra>, CliError> {
    Ok(match obj {
        Object::Bialgebra(b) => Some(b.clone()),
        Object::RMatrix { algebra, rm } => {
            let cocycle = coboundary_from_r(&algebra.to_table(), rm).map_err(input)?;
            Some(StrictLie2Bialgebra { base: algebra.clone(), cocycle })
        }
        _ => None,
    })
}

fn run_suite(doc: &Document, obj: &Object, suite: Suite, seed: Option<u64>) -> Result<Report, CliError> {
    let mut r = Report::new();
    match suite {
        Suite::Lie2 => {
            let l = strict_algebra(obj)?.ok_or_else(|| not_applicable(suite, doc, missing(doc, "prelie", " without d")))?;
            r.absorb("", check_strict_axioms(&l));
            if let Some(seed) = seed {
                r.push(d_squared_check(&l.to_table(), &mut rng(seed)).map_err(input)?);
            }
        }
        Suite::Bialgebra => {
            let b = bialgebra_of(obj)?.ok_or_else(|| not_applicable(suite, doc, ""))?;
            r.absorb("", b.check().map_err(input)?);
        }
        Suite::Cybe => {
            let (l, rm) = match obj {
                Object::RMatrix { algebra, rm } => (algebra.clone(), rm.clone()),
                _ => {
                    let (a, m) = prelie_with_d(obj).ok_or_else(|| not_applicable(suite, doc, missing(doc, "prelie", " without d")))?;
                    let n = a.dim();
                    let rm = RMatrixData::new(canonical_r(n), TensorElement::zeros(n, n)).map_err(input)?;
                    (prelie_lie2(a, m)?, rm)
                }
            };
            r.absorb("", cybe_check(&l.to_table(), &rm).map_err(input)?.report);
        }
        Suite::MatchedPair => {
            let b = bialgebra_of(obj)?.ok_or_else(|| not_applicable(suite, doc, ""))?;
            let t = b.base.to_table();
            let tp = dual_table(&t, &b.cocycle).map_err(input)?;
            r.absorb("dual", tp.check_axioms());
            r.absorb("matched_pair", matched_pair_check(&t, &tp, &coadjoint_rep(&t), &coadjoint_rep(&tp)).map_err(input)?);
        }
        Suite::Manin => {
            let m = match obj {
                Object::Lie2 { manin: Some(m), .. } => m.clone(),
                _ => {
                    let b = bialgebra_of(obj)?.ok_or_else(|| not_applicable(suite, doc, missing(doc, "lie2", " without a manin section")))?;
                    build_double_unchecked(&b.base.to_table(), &b.cocycle).map_err(input)?
                }
            };
            r.absorb("", manin_check(&m));
        }
        Suite::Master => {
            let (l, c) = match obj {
                Object::Lie2 { algebra, .. } => (algebra.clone(), None),
                _ => {
                    let b = bialgebra_of(obj)?.ok_or_else(|| not_applicable(suite, doc, ""))?;
                    (b.base, Some(b.cocycle))
                }
            };
            match encode(&l, c.as_ref(), &Normalization::default()) {
                Ok(m) => r.absorb("", master_check(&m).map_err(input)?),
                Err(e @ BigBracketError::NotAntisymmetric(_)) => {
                    r.push(Check::verdict("encodable", "δ takes values in the antisymmetric square", false).with_note(e.to_string()))
                }
                Err(e) => return Err(input(e)),
            }
        }
        Suite::Prelie => {
            let Object::Prelie { algebra, m } = obj else {
                return Err(not_applicable(suite, doc, ""));
            };
            r.push(algebra.check());
            r.push(check_left_mult_rep(algebra));
            if let Some(m) = m {
                r.absorb("admissible", admissible_d_check(algebra, m).map_err(input)?.report);
            }
        }
        Suite::Symplectic => match obj {
            Object::Symplectic { lie, omega, .. } => r.absorb("", symplectic_check(lie, omega)),
            _ => {
                let (a, m) = prelie_with_d(obj).ok_or_else(|| not_applicable(suite, doc, missing(doc, "prelie", " without d")))?;
                let v = invertible_d_verdicts(a, m).map_err(|e| not_applicable(suite, doc, &format!(": {e}")))?;
                r.push(Check::verdict("strict", "(A*, A, d, [·,·]_s) is a strict Lie 2-algebra", v.strict));
                r.push(Check::verdict("invariant", "B_d is invariant", v.invariant));
                r.push(Check::verdict("symplectic", "B_d is a symplectic form on g(A)", v.symplectic));
                r.push(Check::verdict("agree", "the three verdicts coincide", v.agree()));
            }
        },
    }
    Ok(r)
}

pub fn cmd_check(doc: &Document, suite: Suite, opts: CheckOptions) -> Result<SuiteReport, CliError> {
    let start = Instant::now();
    let obj = doc.interpret()?;
    let mut report = run_suite(doc, &obj, suite, opts.seed)?;
    report.sort_by_name();
    if !opts.verbose {
        report.checks.iter_mut().for_each(Check::truncate_witnesses);
    }
    Ok(SuiteReport {
        schema_version: SCHEMA_VERSION,
        suite,
        kind: doc.kind().to_string(),
        name: doc.name().map(String::from),
        passed: report.passed(),
        checks: report.checks,
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

/// Where a construction takes its left-symmetric algebra from.
#[derive(Debug, Clone)]
pub enum PrelieSource {
    Document(Document),
    Catalog { entry: String, param: Option<String>, d_values: Vec<String> },
}

fn parse_param(s: &str) -> Result<Scalar, CliError> {
    parse_scalar(s).map_err(input)
}

fn catalog_algebra(entry: &CatalogEntry, param: Option<&str>) -> Result<(LeftSymmetricAlgebra, String), CliError> {
    let value = match (entry.parameter, param) {
        (None, Some(_)) => return Err(CliError::Input(format!("{} has no structure parameter", entry.name))),
        (_, Some(p)) => Some(parse_param(p)?),
        (_, None) => entry.default_parameter(),
    };
    let name = match (entry.parameter, &value) {
        (Some((p, _)), Some(v)) => format!("{} ({p}={})", entry.name, crate::graded::format_scalar(v)),
        _ => entry.name.to_string(),
    };
    let a = entry.algebra(value.as_ref()).map_err(input)?;
    Ok((a, name))
}

fn catalog_d(entry: &CatalogEntry, values: &[String]) -> Result<Matrix, CliError> {
    let mut v = vec![Scalar::default(); entry.d_params.len()];
    for item in values {
        let (name, value) = item.split_once('=').ok_or_else(|| CliError::Input(format!("expected NAME=VALUE, got {item}")))?;
        let pos = entry
            .d_params
            .iter()
            .position(|p| *p == name)
            .ok_or_else(|| CliError::Input(format!("{} has no d-parameter {name} (has {:?})", entry.name, entry.d_params)))?;
        v[pos] = parse_param(value)?;
    }
    Ok(entry.d_matrix(&v)?)
}

/// The algebra, its `M(d)` if any, and a display name.
fn resolve_prelie(src: &PrelieSource) -> Result<(LeftSymmetricAlgebra, Option<Matrix>, String), CliError> {
    match src {
        PrelieSource::Document(doc) => match doc.interpret()? {
            Object::Prelie { algebra, m } => Ok((algebra, m, doc.name().unwrap_or("input").to_string())),
            _ => Err(CliError::Input(format!("expected a prelie document, got {}", doc.kind()))),
        },
        PrelieSource::Catalog { entry, param, d_values } => {
            let e = catalog_entry(entry).map_err(input)?;
            let (a, name) = catalog_algebra(e, param.as_deref())?;
            let m = catalog_d(e, d_values)?;
            Ok((a, Some(m), name))
        }
    }
}

fn built(obj: Object, name: String) -> Document {
    obj.to_document(Some(Metadata { name: Some(name), source: Some("lie2bialg build".into()) }))
}

pub fn cmd_build_prelie(kind: BuildKind, src: &PrelieSource) -> Result<Document, CliError> {
    let (a, m, name) = resolve_prelie(src)?;
    match kind {
        BuildKind::FromPrelie => {
            let m = m.ok_or_else(|| CliError::Input("from-prelie needs d".into()))?;
            Ok(built(Object::Bialgebra(build_bialgebra_from_prelie(&a, &m)?), format!("{name} from-prelie")))
        }
        BuildKind::SymplecticDouble => Ok(built(Object::Bialgebra(symplectic_double(&a)?), format!("{name} symplectic-double"))),
        BuildKind::Double => Err(CliError::Input("double takes a bialgebra document".into())),
    }
}

pub fn cmd_build_double(doc: &Document) -> Result<Document, CliError> {
    let Object::Bialgebra(b) = doc.interpret()? else {
        return Err(CliError::Input(format!("double takes a bialgebra document, got {}", doc.kind())));
    };
    let m = build_double(&b.base.to_table(), &b.cocycle).map_err(|e| match e {
        BialgebraError::NotCocycle(_) => CliError::Math(e.to_string()),
        _ => input(e),
    })?;
    let algebra = StrictLie2Algebra::from_table(&m.table);
    let name = format!("{} double", doc.name().unwrap_or("input"));
    Ok(built(Object::Lie2 { algebra, manin: Some(m) }, name))
}

pub fn cmd_catalog_list() -> String {
    let mut out = String::new();
    for e in catalog() {
        let param = e.parameter.map_or(String::from("-"), |(p, ex)| format!("{p}∉{ex:?}"));
        let d = if e.d_params.is_empty() { String::from("-") } else { e.d_params.join(",") };
        out.push_str(&format!("{}\tdim={}\tparam={param}\td={d}\t{}\n", e.name, e.dim, e.note));
    }
    out
}

pub fn cmd_catalog_export(entry: &str, param: Option<&str>) -> Result<Document, CliError> {
    let e = catalog_entry(entry).map_err(input)?;
    let (algebra, name) = catalog_algebra(e, param)?;
    Ok(Object::Prelie { algebra, m: None }.to_document(Some(Metadata { name: Some(name), source: Some("built-in catalog".into()) })))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> u8 {
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Check { path, suite, out, verbose, seed } => {
            let doc = load(&path)?;
            let report = cmd_check(&doc, suite, CheckOptions { verbose, seed })?;
            emit(&report.to_json(), out.as_deref())?;
            if !report.passed {
                let failed: Vec<&str> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
                eprintln!("FAIL {}: {}", suite.name(), failed.join(", "));
            }
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Build { kind, input, catalog, param, d_values, out } => {
            let doc = match (kind, input, catalog) {
                (BuildKind::Double, Some(p), None) => cmd_build_double(&load(&p)?)?,
                (BuildKind::Double, _, _) => return Err(CliError::Input("double needs --input".into())),
                (k, Some(p), None) => cmd_build_prelie(k, &PrelieSource::Document(load(&p)?))?,
                (k, None, Some(entry)) => cmd_build_prelie(k, &PrelieSource::Catalog { entry, param, d_values })?,
                _ => return Err(CliError::Input("give --input or --catalog".into())),
            };
            emit(&doc.to_json(), out.as_deref())?;
            Ok(0)
        }
        Command::Catalog { action: CatalogAction::List } => {
            print!("{}", cmd_catalog_list());
            Ok(0)
        }
        Command::Catalog { action: CatalogAction::Export { entry, path, param } } => {
            emit(&cmd_catalog_export(&entry, param.as_deref())?.to_json(), Some(&path))?;
            Ok(0)
        }
    }
}
