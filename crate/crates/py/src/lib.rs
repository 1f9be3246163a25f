//! Python bindings. Graphs and complexes are wrapped as classes; homology
//! results and check reports come back as plain dicts.

use clique_powers::checks::{self, TheoremReport};
use clique_powers::complex as cx;
use clique_powers::families;
use clique_powers::graph;
use clique_powers::homology::{self, HomologyProfile, Tier};
use clique_powers::Limits;
use pyo3::exceptions::{PyMemoryError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;
use serde_json::Value;

fn err(e: clique_powers::Error) -> PyErr {
    if e.is_resource() {
        PyMemoryError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn limits() -> Limits {
    Limits::from_env()
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_bound_py_any(py)?,
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => i.into_bound_py_any(py)?,
            (_, Some(u)) => u.into_bound_py_any(py)?,
            _ => n.as_f64().unwrap_or(f64::NAN).into_bound_py_any(py)?,
        },
        Value::String(s) => s.into_bound_py_any(py)?,
        Value::Array(a) => {
            let list = PyList::empty(py);
            for x in a {
                list.append(to_py(py, x)?)?;
            }
            list.into_any()
        }
        Value::Object(o) => {
            let dict = PyDict::new(py);
            for (k, x) in o {
                dict.set_item(k, to_py(py, x)?)?;
            }
            dict.into_any()
        }
    })
}

fn serialise<'py, T: serde::Serialize>(py: Python<'py>, x: &T) -> PyResult<Bound<'py, PyAny>> {
    let v = serde_json::to_value(x).map_err(|e| PyValueError::new_err(e.to_string()))?;
    to_py(py, &v)
}

fn parse_tier(tier: &str) -> PyResult<Tier> {
    match tier {
        "exact" => Ok(Tier::Exact),
        "field" => Ok(Tier::Field),
        "auto" => Ok(Tier::Auto),
        other => Err(PyValueError::new_err(format!("unknown tier {other:?}; use exact, field or auto"))),
    }
}

/// A finite simple graph on vertices `0..vertex_count`.
#[pyclass(name = "Graph", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGraph(graph::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(vertex_count: usize, edges: Vec<(u32, u32)>) -> PyResult<Self> {
        graph::Graph::new(vertex_count, &edges).map(PyGraph).map_err(err)
    }

    /// Parses the `n m` edge-list format.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        graph::read_edge_list(text.as_bytes()).map(PyGraph).map_err(err)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.0.vertex_count()
    }

    fn edges(&self) -> Vec<(u32, u32)> {
        self.0.edges().to_vec()
    }

    fn neighbors(&self, v: u32) -> PyResult<Vec<u32>> {
        if v as usize >= self.0.vertex_count() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.0.neighbors(v).to_vec())
    }

    fn has_edge(&self, u: u32, v: u32) -> bool {
        (u as usize) < self.0.vertex_count() && (v as usize) < self.0.vertex_count() && self.0.has_edge(u, v)
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    /// Length of a shortest cycle, or `None` for a forest.
    fn girth(&self) -> Option<u32> {
        graph::girth(&self.0)
    }

    fn power(&self, r: u32) -> Self {
        PyGraph(graph::power(&self.0, r))
    }

    fn complement(&self) -> Self {
        PyGraph(graph::complement(&self.0))
    }

    /// Induced subgraph on `vertices`, reindexed in increasing order.
    fn induced(&self, vertices: Vec<u32>) -> PyResult<Self> {
        graph::induced(&self.0, &vertices).map(|(g, _)| PyGraph(g)).map_err(err)
    }

    fn edge_list(&self) -> String {
        graph::edge_list_string(&self.0)
    }

    fn __len__(&self) -> usize {
        self.0.vertex_count()
    }

    fn __repr__(&self) -> String {
        format!("Graph(vertex_count={}, edges={})", self.0.vertex_count(), self.0.edge_count())
    }
}

/// A finite abstract simplicial complex on vertices `0..vertex_count`.
#[pyclass(name = "SimplicialComplex", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyComplex(clique_powers::SimplicialComplex);

#[pymethods]
impl PyComplex {
    /// The downward closure of `facets`; an empty list gives the void
    /// complex, `[[]]` the complex whose only face is the empty set.
    #[new]
    fn new(vertex_count: usize, facets: Vec<Vec<u32>>) -> PyResult<Self> {
        clique_powers::SimplicialComplex::from_facets(vertex_count, &facets).map(PyComplex).map_err(err)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.0.vertex_count()
    }

    /// Dimension; `None` for the void complex, -1 for `{∅}`.
    #[getter]
    fn dim(&self) -> Option<isize> {
        self.0.dim()
    }

    fn facets(&self) -> Vec<Vec<u32>> {
        self.0.facets()
    }

    fn faces(&self) -> Vec<Vec<u32>> {
        self.0.faces().map(|f| f.to_vec()).collect()
    }

    fn f_vector(&self) -> Vec<usize> {
        self.0.f_vector()
    }

    fn num_faces(&self) -> usize {
        self.0.num_faces()
    }

    fn reduced_euler_characteristic(&self) -> i64 {
        self.0.reduced_euler_characteristic()
    }

    fn contains(&self, face: Vec<u32>) -> bool {
        self.0.contains(&face)
    }

    fn __repr__(&self) -> String {
        format!("SimplicialComplex(vertex_count={}, f_vector={:?})", self.0.vertex_count(), self.0.f_vector())
    }
}

// families

#[pyfunction]
fn cycle(n: usize) -> PyResult<PyGraph> {
    families::cycle(n).map(PyGraph).map_err(err)
}

#[pyfunction]
fn path(n: usize) -> PyResult<PyGraph> {
    families::path(n).map(PyGraph).map_err(err)
}

#[pyfunction]
fn complete(n: usize) -> PyGraph {
    PyGraph(families::complete(n))
}

/// `T_{n,k}`: each vertex of the `n`-gon joined to the `k` most opposite ones.
#[pyfunction]
fn circular_complete(n: usize, k: usize) -> PyResult<PyGraph> {
    families::circular_complete(n, k).map(PyGraph).map_err(err)
}

/// `S_{n,k}` and its vertex labels `-r..-1, 1..r`.
#[pyfunction]
fn s_graph(n: usize, k: usize) -> PyResult<(PyGraph, Vec<i64>)> {
    families::s_graph(n, k).map(|s| (PyGraph(s.graph), s.labels)).map_err(err)
}

#[pyfunction]
fn three_sun() -> PyGraph {
    PyGraph(families::three_sun())
}

#[pyfunction]
fn line_graph(g: &PyGraph) -> PyResult<PyGraph> {
    families::line_graph(&g.0).map(PyGraph).map_err(err)
}

#[pyfunction]
fn total_graph(g: &PyGraph) -> PyGraph {
    PyGraph(families::total_graph(&g.0))
}

#[pyfunction]
fn subdivision(g: &PyGraph) -> PyGraph {
    PyGraph(families::subdivision(&g.0))
}

#[pyfunction]
fn random_graph(n: usize, p: f64, seed: u64) -> PyResult<PyGraph> {
    families::random_graph(n, p, seed).map(PyGraph).map_err(err)
}

#[pyfunction]
fn random_tree(n: usize, seed: u64) -> PyResult<PyGraph> {
    families::random_tree(n, seed).map(PyGraph).map_err(err)
}

// complexes

#[pyfunction]
#[pyo3(signature = (g, dim_cap = None))]
fn clique_complex(g: &PyGraph, dim_cap: Option<usize>) -> PyResult<PyComplex> {
    cx::clique_complex(&g.0, dim_cap, &limits()).map(PyComplex).map_err(err)
}

#[pyfunction]
fn independence_complex(g: &PyGraph) -> PyResult<PyComplex> {
    cx::independence_complex(&g.0, &limits()).map(PyComplex).map_err(err)
}

#[pyfunction]
fn suspension(k: &PyComplex) -> PyResult<PyComplex> {
    cx::suspension(&k.0, &limits()).map(PyComplex).map_err(err)
}

#[pyfunction]
fn cone(k: &PyComplex) -> PyResult<PyComplex> {
    cx::cone(&k.0, &limits()).map(PyComplex).map_err(err)
}

/// The subdivision and, per new vertex, the face it stands for.
#[pyfunction]
fn barycentric_subdivision(k: &PyComplex) -> PyResult<(PyComplex, Vec<Vec<u32>>)> {
    cx::barycentric_subdivision(&k.0, &limits()).map(|v| (PyComplex(v.complex), v.labels)).map_err(err)
}

// homology

/// Reduced integer homology as `{"betti": [...], "torsion": [[...], ...]}`.
#[pyfunction]
fn integer_homology<'py>(py: Python<'py>, k: &PyComplex) -> PyResult<Bound<'py, PyAny>> {
    let p: HomologyProfile = homology::integer_homology(&k.0).map_err(err)?;
    serialise(py, &p)
}

#[pyfunction]
fn betti_mod_p(k: &PyComplex, p: u64) -> PyResult<Vec<usize>> {
    homology::betti_mod_p(&k.0, p).map_err(err)
}

/// Homology of `cl(G)` with tier `exact`, `field` or `auto`.
#[pyfunction]
#[pyo3(signature = (g, tier = "auto"))]
fn clique_homology<'py>(py: Python<'py>, g: &PyGraph, tier: &str) -> PyResult<Bound<'py, PyAny>> {
    let h = homology::clique_homology(&g.0, parse_tier(tier)?, &limits()).map_err(err)?;
    serialise(py, &h)
}

/// Closed-form homotopy type of `cl(C_n^r)`, e.g. `"v^2 S^2"`.
#[pyfunction]
fn predict_clique_cycle_power(n: usize, r: usize) -> PyResult<String> {
    checks::predict_clique_cycle_power(n, r).map(|w| w.render()).map_err(err)
}

#[pyfunction]
fn predict_ind_circular(n: usize, k: usize) -> PyResult<String> {
    checks::predict_ind_circular(n, k).map(|w| w.render()).map_err(err)
}

#[pyfunction]
fn predict_ind_cycle(m: usize) -> PyResult<String> {
    checks::predict_ind_cycle(m).map(|w| w.render()).map_err(err)
}

// checks

fn report<'py>(py: Python<'py>, r: clique_powers::Result<TheoremReport>) -> PyResult<Bound<'py, PyAny>> {
    serialise(py, &r.map_err(err)?)
}

/// `(holds, witness)` for the clique-domination condition on `G²`.
#[pyfunction]
fn check_square_condition(g: &PyGraph) -> (bool, Option<Vec<u32>>) {
    let c = checks::check_square_condition(&g.0);
    (c.holds, c.witness)
}

#[pyfunction]
#[pyo3(signature = (n, r, tier = "auto"))]
fn validate_table_cell<'py>(py: Python<'py>, n: usize, r: usize, tier: &str) -> PyResult<Bound<'py, PyAny>> {
    report(py, checks::validate_table_cell(n, r, parse_tier(tier)?, &limits()))
}

#[pyfunction]
fn validate_kozlov<'py>(py: Python<'py>, m: usize) -> PyResult<Bound<'py, PyAny>> {
    report(py, checks::validate_kozlov(m, &limits()))
}

#[pyfunction]
fn validate_girth_collapse<'py>(py: Python<'py>, g: &PyGraph, r: u32) -> PyResult<Bound<'py, PyAny>> {
    report(py, checks::validate_girth_collapse(&g.0, r, &limits()))
}

#[pyfunction]
fn validate_suspension<'py>(py: Python<'py>, n: usize, k: usize) -> PyResult<Bound<'py, PyAny>> {
    report(py, checks::validate_suspension_props(n, k, &limits()))
}

#[pyfunction]
fn validate_star_cluster<'py>(py: Python<'py>, g: &PyGraph, v: u32) -> PyResult<Bound<'py, PyAny>> {
    report(py, checks::validate_star_cluster(&g.0, v, &limits()))
}

#[pyfunction]
fn validate_total_and_line<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    report(py, checks::validate_total_and_line(&g.0, &limits()))
}

#[pyfunction]
fn validate_square_condition<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    report(py, checks::validate_square_condition(&g.0, &limits()))
}

#[pyfunction]
fn validate_prediction_consistency<'py>(py: Python<'py>, n_max: usize) -> PyResult<Bound<'py, PyAny>> {
    report(py, checks::validate_prediction_consistency(n_max))
}

/// The bundled reference table as `(n, r, type)` triples.
#[pyfunction]
fn reference_table() -> Vec<(usize, usize, String)> {
    checks::reference_table().into_iter().map(|e| (e.n, e.r, e.homotopy_type.render())).collect()
}

#[pymodule]
#[pyo3(name = "clique_powers")]
fn clique_powers_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("SCHEMA_VERSION", clique_powers::SCHEMA_VERSION)?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyComplex>()?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(path, m)?)?;
    m.add_function(wrap_pyfunction!(complete, m)?)?;
    m.add_function(wrap_pyfunction!(circular_complete, m)?)?;
    m.add_function(wrap_pyfunction!(s_graph, m)?)?;
    m.add_function(wrap_pyfunction!(three_sun, m)?)?;
    m.add_function(wrap_pyfunction!(line_graph, m)?)?;
    m.add_function(wrap_pyfunction!(total_graph, m)?)?;
    m.add_function(wrap_pyfunction!(subdivision, m)?)?;
    m.add_function(wrap_pyfunction!(random_graph, m)?)?;
    m.add_function(wrap_pyfunction!(random_tree, m)?)?;
    m.add_function(wrap_pyfunction!(clique_complex, m)?)?;
    m.add_function(wrap_pyfunction!(independence_complex, m)?)?;
    m.add_function(wrap_pyfunction!(suspension, m)?)?;
    m.add_function(wrap_pyfunction!(cone, m)?)?;
    m.add_function(wrap_pyfunction!(barycentric_subdivision, m)?)?;
    m.add_function(wrap_pyfunction!(integer_homology, m)?)?;
    m.add_function(wrap_pyfunction!(betti_mod_p, m)?)?;
    m.add_function(wrap_pyfunction!(clique_homology, m)?)?;
    m.add_function(wrap_pyfunction!(predict_clique_cycle_power, m)?)?;
    m.add_function(wrap_pyfunction!(predict_ind_circular, m)?)?;
    m.add_function(wrap_pyfunction!(predict_ind_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(check_square_condition, m)?)?;
    m.add_function(wrap_pyfunction!(validate_table_cell, m)?)?;
    m.add_function(wrap_pyfunction!(validate_kozlov, m)?)?;
    m.add_function(wrap_pyfunction!(validate_girth_collapse, m)?)?;
    m.add_function(wrap_pyfunction!(validate_suspension, m)?)?;
    m.add_function(wrap_pyfunction!(validate_star_cluster, m)?)?;
    m.add_function(wrap_pyfunction!(validate_total_and_line, m)?)?;
    m.add_function(wrap_pyfunction!(validate_square_condition, m)?)?;
    m.add_function(wrap_pyfunction!(validate_prediction_consistency, m)?)?;
    m.add_function(wrap_pyfunction!(reference_table, m)?)?;
    Ok(())
}
