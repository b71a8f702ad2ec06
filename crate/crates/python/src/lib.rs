//! Python bindings for `altgt`.
//!
//! Partitions, labels, tableaux and paths cross the boundary in their text
//! forms (`"4,1,1"`, `"3,1,1^+"`, `"124/3/5"`, `"2;2,1^+"`); scalars are
//! returned as strings in the same notation as the command-line tool.

#![allow(clippy::useless_conversion)]

use pyo3::exceptions::{PyNotImplementedError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use altgt::geodesics::{
    branch_count_r, class_members, geodesic_representatives_by, RepresentativeRule,
};
use altgt::gt_basis::{gt_basis_with, gt_vector, normalize_basis, BasisElement};
use altgt::model::{Conventions, FlippedColumnSign, SignlessAssociator, Standard};
use altgt::verify::{run_suite_with, Suite};

fn to_py(e: altgt::Error) -> PyErr {
    match e {
        altgt::Error::Domain(_) | altgt::Error::Precondition(_) | altgt::Error::Parse { .. } => {
            PyValueError::new_err(e.to_string())
        }
        altgt::Error::Unsupported(_) => PyNotImplementedError::new_err(e.to_string()),
        altgt::Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
    }
}

fn parse<T: std::str::FromStr<Err = altgt::Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(to_py)
}

fn rule(name: &str) -> PyResult<RepresentativeRule> {
    match name {
        "last" => Ok(RepresentativeRule::ReverseLexLast),
        "first" => Ok(RepresentativeRule::ReverseLexFirst),
        other => Err(PyValueError::new_err(format!(
            "unknown rule {other:?}, expected \"last\" or \"first\""
        ))),
    }
}

#[pyclass(name = "Partition", frozen, eq, ord, hash)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyPartition(altgt::Partition);

#[pymethods]
impl PyPartition {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse(text).map(PyPartition)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn conjugate(&self) -> Self {
        PyPartition(self.0.conjugate())
    }

    fn is_self_conjugate(&self) -> bool {
        self.0.is_self_conjugate()
    }

    fn diagonal_length(&self) -> PyResult<usize> {
        self.0.diagonal_length().map_err(to_py)
    }

    fn down_set(&self) -> PyResult<Vec<PyPartition>> {
        Ok(self
            .0
            .down_set()
            .map_err(to_py)?
            .into_iter()
            .map(PyPartition)
            .collect())
    }

    /// Standard tableaux of this shape in text form.
    fn tableaux(&self) -> Vec<String> {
        altgt::tableau::enumerate_syt(&self.0)
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition('{}')", self.0)
    }
}

#[pyclass(name = "AltLabel", frozen, eq, ord, hash)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyAltLabel(altgt::AltLabel);

#[pymethods]
impl PyAltLabel {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse(text).map(PyAltLabel)
    }

    #[getter]
    fn partition(&self) -> PyPartition {
        PyPartition(self.0.partition().clone())
    }

    /// `"+"`, `"-"` or `None`.
    #[getter]
    fn sign(&self) -> Option<&'static str> {
        self.0.sign().map(|s| s.as_str())
    }

    #[getter]
    fn dim(&self) -> u128 {
        altgt::alt_labels::dim_alt(&self.0)
    }

    fn conjugate(&self) -> Self {
        PyAltLabel(self.0.conjugate())
    }

    /// `[(path, r, class_size)]` for one representative per geodesic.
    #[pyo3(signature = (rule_name = "last"))]
    fn geodesics(&self, rule_name: &str) -> PyResult<Vec<(String, usize, usize)>> {
        let reps = geodesic_representatives_by(&self.0, rule(rule_name)?).map_err(to_py)?;
        Ok(reps
            .iter()
            .map(|p| (p.to_string(), branch_count_r(p), class_members(p).len()))
            .collect())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("AltLabel('{}')", self.0)
    }
}

/// A Gelfand-Tsetlin vector and the path that produced it.
#[pyclass(name = "GtVector", frozen)]
struct PyGtVector(BasisElement);

#[pymethods]
impl PyGtVector {
    #[getter]
    fn path(&self) -> String {
        self.0.path.to_string()
    }

    #[getter]
    fn shape(&self) -> PyPartition {
        PyPartition(self.0.vector.shape().clone())
    }

    /// `[(tableau, coefficient)]` in tableau order.
    fn terms(&self) -> Vec<(String, String)> {
        self.0
            .vector
            .terms()
            .map(|(t, c)| (t.to_string(), c.to_string()))
            .collect()
    }

    /// Coefficient of one tableau as a string, `"0"` when absent.
    fn coeff(&self, tableau: &str) -> PyResult<String> {
        let t: altgt::StandardTableau = parse(tableau)?;
        Ok(self.0.vector.coeff(&t).to_string())
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("basis element serializes")
    }

    fn to_latex(&self) -> String {
        self.0.vector.to_latex()
    }

    fn __len__(&self) -> usize {
        self.0.vector.len()
    }

    fn __str__(&self) -> String {
        self.0.vector.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GtVector('{}': {})", self.0.path, self.0.vector)
    }
}

#[pyfunction]
#[pyo3(signature = (label, normalize = false, rule_name = "last"))]
fn gt_basis(label: &str, normalize: bool, rule_name: &str) -> PyResult<Vec<PyGtVector>> {
    let alpha: altgt::AltLabel = parse(label)?;
    let mut basis = gt_basis_with(&Standard, &alpha, rule(rule_name)?).map_err(to_py)?;
    if normalize {
        basis = normalize_basis(basis).map_err(to_py)?;
    }
    Ok(basis.into_iter().map(PyGtVector).collect())
}

/// The vector of a single path such as `"2;2,1^+;3,1"`.
#[pyfunction]
fn gt_path_vector(path: &str) -> PyResult<PyGtVector> {
    let path: altgt::AltPath = parse(path)?;
    let vector = gt_vector(&path).map_err(to_py)?;
    Ok(PyGtVector(BasisElement { path, vector }))
}

/// `(basis, rows)` with entries as strings.
#[pyfunction]
fn yor_matrix(partition: &str, generator: usize) -> PyResult<(Vec<String>, Vec<Vec<String>>)> {
    let lam: altgt::Partition = parse(partition)?;
    let m = altgt::yor::rep_matrix(&lam, generator).map_err(to_py)?;
    let basis = altgt::tableau::enumerate_syt(&lam)
        .iter()
        .map(ToString::to_string)
        .collect();
    let rows = m
        .rows()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect();
    Ok((basis, rows))
}

/// `[(T, c_T, T')]` for a self-conjugate shape.
#[pyfunction]
fn assoc_table(partition: &str) -> PyResult<Vec<(String, String, String)>> {
    let lam: altgt::Partition = parse(partition)?;
    Ok(altgt::associator::assoc_table(&lam)
        .map_err(to_py)?
        .into_iter()
        .map(|e| {
            (
                e.tableau.to_string(),
                e.coeff.as_str().to_string(),
                e.conjugate.to_string(),
            )
        })
        .collect())
}

#[pyfunction]
#[pyo3(signature = (max_n, chain = "alternating", format = "dot"))]
fn bratteli(max_n: usize, chain: &str, format: &str) -> PyResult<String> {
    let diagram = match chain {
        "alternating" => altgt::alt_labels::bratteli(max_n),
        "symmetric" => altgt::diagram::young_graph(max_n),
        other => return Err(PyValueError::new_err(format!("unknown chain {other:?}"))),
    }
    .map_err(to_py)?;
    match format {
        "dot" => Ok(diagram.to_dot()),
        "json" => Ok(diagram.to_json().to_string()),
        other => Err(PyValueError::new_err(format!("unknown format {other:?}"))),
    }
}

/// Runs a suite and returns `(passed, report_text)`.
#[pyfunction]
#[pyo3(signature = (max_n, suite = "all", inject = None))]
fn verify(max_n: usize, suite: &str, inject: Option<&str>) -> PyResult<(bool, String)> {
    let suite = match suite {
        "yor" => Suite::Yor,
        "assoc" => Suite::Assoc,
        "gt" => Suite::Gt,
        "all" => Suite::All,
        other => return Err(PyValueError::new_err(format!("unknown suite {other:?}"))),
    };
    let model: &dyn Conventions = match inject {
        None => &Standard,
        Some("column-sign") => &FlippedColumnSign,
        Some("signless-assoc") => &SignlessAssociator,
        Some(other) => return Err(PyValueError::new_err(format!("unknown fault {other:?}"))),
    };
    let report = run_suite_with(model, suite, max_n).map_err(to_py)?;
    Ok((report.passed(), report.to_text()))
}

#[pymodule]
fn altgt_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyAltLabel>()?;
    m.add_class::<PyGtVector>()?;
    m.add_function(wrap_pyfunction!(gt_basis, m)?)?;
    m.add_function(wrap_pyfunction!(gt_path_vector, m)?)?;
    m.add_function(wrap_pyfunction!(yor_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(assoc_table, m)?)?;
    m.add_function(wrap_pyfunction!(bratteli, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
