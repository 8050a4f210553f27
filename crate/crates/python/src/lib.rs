use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ::tiwiener as core;
use core::io;
use core::{ClosedForm, FamilySpec, SpectrumKind};

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An immutable labeled tree.
#[pyclass(name = "Tree", module = "tiwiener", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyTree {
    inner: core::Tree,
}

impl From<core::Tree> for PyTree {
    fn from(inner: core::Tree) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyTree {
    #[new]
    fn new(order: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        core::Tree::new(order, edges).map(Into::into).map_err(err)
    }

    /// Builds a tree from family notation such as `"C(9; 5,7)"`.
    #[staticmethod]
    fn from_spec(spec: &str) -> PyResult<Self> {
        build(spec)
    }

    #[staticmethod]
    fn from_sparse6(line: &str) -> PyResult<Self> {
        decode_sparse6(line)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn transmissions(&self) -> Vec<i64> {
        self.inner.transmissions()
    }

    fn wiener(&self) -> i64 {
        self.inner.wiener()
    }

    fn is_ti(&self) -> bool {
        self.inner.is_ti()
    }

    fn canonical_code(&self) -> String {
        self.inner.canonical_code().to_string()
    }

    fn is_isomorphic(&self, other: &PyTree) -> bool {
        self.inner.is_isomorphic(&other.inner)
    }

    fn sparse6(&self) -> String {
        io::encode_sparse6(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Tree(order={}, sparse6={:?})", self.inner.order(), io::encode_sparse6(&self.inner))
    }
}

#[pyfunction]
fn build(spec: &str) -> PyResult<PyTree> {
    let spec: FamilySpec = spec.parse().map_err(err)?;
    Ok(spec.build().map_err(err)?.tree.into())
}

#[pyfunction]
fn encode_sparse6(tree: &PyTree) -> String {
    io::encode_sparse6(&tree.inner)
}

#[pyfunction]
fn decode_sparse6(line: &str) -> PyResult<PyTree> {
    io::decode_line(line).map(Into::into).map_err(err)
}

/// The dispatcher's answer for order `n`, as a dict.
#[pyfunction]
fn extremal<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyDict>> {
    let outcome = core::extremal(n).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("order", n)?;
    d.set_item("verdict", outcome.verdict.as_str())?;
    d.set_item("case", outcome.case_label.map(|c| c.as_str()))?;
    d.set_item("condition", outcome.condition.map(|c| c.to_string()))?;
    d.set_item("spec", outcome.spec.as_ref().map(ToString::to_string))?;
    d.set_item("predicted_wiener", outcome.predicted_wiener)?;
    d.set_item("direct_wiener", outcome.certificate.as_ref().map(|c| c.direct_wiener))?;
    d.set_item("tree", outcome.tree().map(PyTree::from))?;
    d.set_item("summary", outcome.to_string())?;
    Ok(d)
}

/// Value of a closed-form Wiener index, by id.
#[pyfunction]
fn formula(name: &str, n: usize) -> PyResult<i64> {
    let form: ClosedForm = name.parse().map_err(err)?;
    Ok(form.evaluate(n).map_err(err)?.value)
}

/// Base vertex and sorted transmission offsets of a spectrum generator.
#[pyfunction]
fn spectrum(name: &str, n: usize) -> PyResult<(usize, Vec<i64>)> {
    let kind: SpectrumKind = name.parse().map_err(err)?;
    let s = kind.generate(n).map_err(err)?;
    Ok((s.base, s.offsets))
}

#[pyfunction]
fn count_trees(py: Python<'_>, n: usize) -> PyResult<u64> {
    py.detach(|| core::search::count_trees(n)).map_err(err)
}

/// Exhaustive search; returns total, TI count, max Wiener and maximizers.
#[pyfunction]
#[pyo3(signature = (n, shards = 1))]
fn search_max_ti<'py>(py: Python<'py>, n: usize, shards: usize) -> PyResult<Bound<'py, PyDict>> {
    let report = py.detach(|| core::search_max_ti_sharded(n, shards)).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("order", report.order)?;
    d.set_item("total_trees", report.total_trees)?;
    d.set_item("ti_trees", report.ti_trees)?;
    d.set_item("max_wiener", report.max_wiener)?;
    let maximizers: Vec<PyTree> = report.maximizers.iter().map(|m| m.code.to_tree().into()).collect();
    d.set_item("maximizers", maximizers)?;
    Ok(d)
}

/// Checks the dispatcher against exhaustive search for `lo..=hi`.
#[pyfunction]
#[pyo3(signature = (lo, hi, shards = 1))]
fn verify(py: Python<'_>, lo: usize, hi: usize, shards: usize) -> PyResult<(bool, String)> {
    let table = py.detach(|| core::verify_range(lo..=hi, shards)).map_err(err)?;
    Ok((table.all_passed, table.to_string()))
}

#[pyfunction]
fn fuse(t1: &PyTree, v1: usize, t2: &PyTree, v2: usize) -> PyResult<PyTree> {
    core::transforms::fuse(&t1.inner, v1, &t2.inner, v2).map(Into::into).map_err(err)
}

#[pyfunction]
fn arm_straighten(t: &PyTree, v: usize, branch_root: usize) -> PyResult<PyTree> {
    core::transforms::arm_straighten(&t.inner, v, branch_root).map(|s| s.tree.into()).map_err(err)
}

#[pyfunction]
fn majorize(t: &PyTree, v: usize, long_arm: usize, short_arm: usize) -> PyResult<PyTree> {
    core::transforms::majorize(&t.inner, v, long_arm, short_arm).map(Into::into).map_err(err)
}

#[pymodule(name = "tiwiener")]
fn tiwiener_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTree>()?;
    m.add_function(wrap_pyfunction!(build, m)?)?;
    m.add_function(wrap_pyfunction!(encode_sparse6, m)?)?;
    m.add_function(wrap_pyfunction!(decode_sparse6, m)?)?;
    m.add_function(wrap_pyfunction!(extremal, m)?)?;
    m.add_function(wrap_pyfunction!(formula, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(count_trees, m)?)?;
    m.add_function(wrap_pyfunction!(search_max_ti, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(fuse, m)?)?;
    m.add_function(wrap_pyfunction!(arm_straighten, m)?)?;
    m.add_function(wrap_pyfunction!(majorize, m)?)?;
    Ok(())
}
