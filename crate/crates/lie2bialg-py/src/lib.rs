//! Python bindings: documents and reports cross the boundary as JSON text.

use clap::ValueEnum;
use lie2bialg::cli::{
    cmd_build_double, cmd_build_prelie, cmd_catalog_export, cmd_check, BuildKind, CheckOptions, CliError, Document, PrelieSource, Suite,
};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: CliError) -> PyErr {
    match e {
        CliError::Input(m) => PyValueError::new_err(m),
        CliError::Math(m) => PyRuntimeError::new_err(m),
    }
}

fn parse_doc(text: &str) -> PyResult<Document> {
    Document::from_json(text).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Runs a check suite on a JSON document and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (document, suite, verbose = false, seed = None))]
fn check(document: &str, suite: &str, verbose: bool, seed: Option<u64>) -> PyResult<String> {
    let suite = Suite::from_str(suite, false).map_err(PyValueError::new_err)?;
    let doc = parse_doc(document)?;
    cmd_check(&doc, suite, CheckOptions { verbose, seed }).map(|r| r.to_json()).map_err(to_py)
}

/// Builds a document. `kind` is `from-prelie`, `symplectic-double` or
/// `double`; the source is either a JSON document or a catalog entry.
#[pyfunction]
#[pyo3(signature = (kind, document = None, catalog = None, param = None, d = Vec::new()))]
fn build(kind: &str, document: Option<&str>, catalog: Option<String>, param: Option<String>, d: Vec<String>) -> PyResult<String> {
    let kind = BuildKind::from_str(kind, false).map_err(PyValueError::new_err)?;
    let doc = match (kind, document, catalog) {
        (BuildKind::Double, Some(text), None) => cmd_build_double(&parse_doc(text)?),
        (BuildKind::Double, _, _) => return Err(PyValueError::new_err("double takes a bialgebra document")),
        (k, Some(text), None) => cmd_build_prelie(k, &PrelieSource::Document(parse_doc(text)?)),
        (k, None, Some(entry)) => cmd_build_prelie(k, &PrelieSource::Catalog { entry, param, d_values: d }),
        _ => return Err(PyValueError::new_err("give exactly one of document or catalog")),
    };
    doc.map(|d| d.to_json()).map_err(to_py)
}

/// Names of the built-in catalog entries.
#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    lie2bialg::prelie::catalog().iter().map(|e| e.name).collect()
}

/// A catalog entry as a JSON document.
#[pyfunction]
#[pyo3(signature = (entry, param = None))]
fn catalog_export(entry: &str, param: Option<&str>) -> PyResult<String> {
    cmd_catalog_export(entry, param).map(|d| d.to_json()).map_err(to_py)
}

#[pymodule]
fn lie2bialg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(build, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_export, m)?)?;
    Ok(())
}
