//! Python bindings. Polynomials cross the boundary as `Poly` objects or as
//! canonical strings; matrices as row-major lists of strings; fields as
//! `"q"` or `"fp:P"`.

use std::str::FromStr;

use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use locoh::arith::{Field, MultiPoly};
use locoh::matrices::{DetMethod, MembershipCertificate, PolyMatrix};

fn py_err(e: locoh::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field(label: &str) -> PyResult<Field> {
    Field::from_str(label).map_err(py_err)
}

fn strings(polys: &[MultiPoly]) -> Vec<String> {
    polys.iter().map(ToString::to_string).collect()
}

fn rows(m: &PolyMatrix) -> Vec<Vec<String>> {
    m.to_strings()
}

/// A polynomial in `x, y, u, v, s, t` over Q or a prime field.
#[pyclass(name = "Poly", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Poly(MultiPoly);

impl Poly {
    fn same_field(&self, other: &Poly) -> PyResult<()> {
        if self.0.field() != other.0.field() {
            return Err(PyValueError::new_err(format!(
                "field mismatch: {} vs {}",
                self.0.field(),
                other.0.field()
            )));
        }
        Ok(())
    }
}

#[pymethods]
impl Poly {
    #[new]
    #[pyo3(signature = (text, field = "q"))]
    fn new(text: &str, field: &str) -> PyResult<Self> {
        MultiPoly::parse(text, self::field(field)?).map(Poly).map_err(py_err)
    }

    #[getter]
    fn field(&self) -> String {
        self.0.field().label()
    }

    /// Total degree; `None` for the zero polynomial.
    #[getter]
    fn degree(&self) -> Option<u32> {
        self.0.degree()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `self / other` when the division is exact, else `None`.
    fn exact_divide(&self, other: &Poly) -> PyResult<Option<Poly>> {
        self.same_field(other)?;
        if other.0.is_zero() {
            return Err(PyArithmeticError::new_err("division by zero"));
        }
        Ok(self.0.exact_divide(&other.0).map_err(py_err)?.map(Poly))
    }

    fn __add__(&self, other: &Poly) -> PyResult<Poly> {
        self.same_field(other)?;
        Ok(Poly(&self.0 + &other.0))
    }

    fn __sub__(&self, other: &Poly) -> PyResult<Poly> {
        self.same_field(other)?;
        Ok(Poly(&self.0 - &other.0))
    }

    fn __mul__(&self, other: &Poly) -> PyResult<Poly> {
        self.same_field(other)?;
        Ok(Poly(&self.0 * &other.0))
    }

    fn __neg__(&self) -> Poly {
        Poly(-&self.0)
    }

    fn __pow__(&self, exp: u32, _modulo: Option<u32>) -> Poly {
        Poly(self.0.pow(exp))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}', field='{}')", self.0, self.0.field().label())
    }
}

#[pyfunction]
#[pyo3(signature = (i, field = "q"))]
fn tau(i: u32, field: &str) -> PyResult<Poly> {
    locoh::arith::tau(i, self::field(field)?).map(Poly).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (i, field = "q"))]
fn sigma(i: u32, field: &str) -> PyResult<String> {
    Ok(locoh::arith::sigma(i, self::field(field)?).map_err(py_err)?.to_string())
}

#[pyfunction]
#[pyo3(signature = (dminus1, field = "q"))]
fn build_a(dminus1: u32, field: &str) -> PyResult<Vec<Vec<String>>> {
    Ok(rows(&locoh::matrices::build_a(dminus1, self::field(field)?).map_err(py_err)?))
}

#[pyfunction]
#[pyo3(signature = (i, field = "q"))]
fn build_b(i: u32, field: &str) -> PyResult<Vec<Vec<String>>> {
    Ok(rows(&locoh::matrices::build_b(i, self::field(field)?).map_err(py_err)?))
}

#[pyfunction]
#[pyo3(signature = (d, field = "q"))]
fn build_m(d: u32, field: &str) -> PyResult<Vec<Vec<String>>> {
    Ok(rows(&locoh::matrices::build_m(d, self::field(field)?).map_err(py_err)?))
}

/// `det B_i` by fraction-free elimination.
#[pyfunction]
#[pyo3(signature = (i, field = "q"))]
fn det_b(i: u32, field: &str) -> PyResult<Poly> {
    let b = locoh::matrices::build_b(i, self::field(field)?).map_err(py_err)?;
    locoh::matrices::det(&b, DetMethod::Bareiss).map(Poly).map_err(py_err)
}

/// `(unit, [(factor, multiplicity), ...])` for `tau_i`.
#[pyfunction]
#[pyo3(signature = (i, field = "q", seed = None))]
fn factor_tau(i: u32, field: &str, seed: Option<u64>) -> PyResult<(String, Vec<(String, u32)>)> {
    let r = locoh::factor::factor_tau(i, self::field(field)?, seed).map_err(py_err)?;
    let factors = r.factors().iter().map(|(f, k)| (f.to_string(), *k)).collect();
    Ok((r.unit().to_string(), factors))
}

#[pyfunction]
#[pyo3(signature = (index_set, field = "q", seed = None))]
fn accumulate_distinct<'py>(
    py: Python<'py>,
    index_set: Vec<u32>,
    field: &str,
    seed: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let g = locoh::factor::accumulate_distinct(&index_set, self::field(field)?, seed).map_err(py_err)?;
    let out = PyDict::new(py);
    out.set_item("index_set", &g.index_set)?;
    out.set_item("new_factors", &g.new_factors)?;
    out.set_item("cumulative", &g.cumulative_distinct)?;
    out.set_item("distinct", strings(g.distinct_factors()))?;
    out.set_item("strictly_increasing", g.strictly_increasing())?;
    Ok(out)
}

#[pyfunction]
fn separability_check<'py>(py: Python<'py>, p: u64, m: u32) -> PyResult<Bound<'py, PyDict>> {
    let c = locoh::factor::separability_check(p, m).map_err(py_err)?;
    let out = PyDict::new(py);
    out.set_item("index", c.index)?;
    out.set_item("gcd", c.gcd.to_string())?;
    out.set_item("squarefree", c.squarefree)?;
    out.set_item("telescoping_holds", c.telescoping_holds)?;
    Ok(out)
}

#[pyfunction]
#[pyo3(signature = (d, field = "q"))]
fn torsion_witness<'py>(py: Python<'py>, d: u32, field: &str) -> PyResult<Bound<'py, PyDict>> {
    let w = locoh::cohomology::torsion_witness(d, self::field(field)?).map_err(py_err)?;
    let out = PyDict::new(py);
    out.set_item("annihilator", w.annihilator.to_string())?;
    out.set_item("solution", strings(&w.solution))?;
    let failing = match w.nonmembership {
        MembershipCertificate::NoSolution { index } => Some(index + 1),
        MembershipCertificate::Solution(_) => None,
    };
    out.set_item("nonmembership_index", failing)?;
    out.set_item("fiber_dimension", w.fiber_dimension)?;
    Ok(out)
}

#[pyfunction]
#[pyo3(signature = (d, field = "q", seed = None))]
fn prime_witnesses(d: u32, field: &str, seed: Option<u64>) -> PyResult<Vec<String>> {
    let ws = locoh::cohomology::prime_witnesses(d, self::field(field)?, seed).map_err(py_err)?;
    Ok(ws.iter().map(|w| w.generator.to_string()).collect())
}

#[pyfunction]
#[pyo3(signature = (n, d, field = "q"))]
fn component_t<'py>(py: Python<'py>, n: u32, d: u32, field: &str) -> PyResult<Bound<'py, PyDict>> {
    let c = locoh::frobenius::component_t(n, d, self::field(field)?).map_err(py_err)?;
    let out = PyDict::new(py);
    out.set_item("case", c.case.to_string())?;
    let gens: Vec<String> = c.presentation.generators().iter().map(ToString::to_string).collect();
    out.set_item("generators", gens)?;
    out.set_item("relation_labels", c.presentation.relation_labels())?;
    out.set_item("relations", rows(c.presentation.relations()))?;
    Ok(out)
}

#[pyfunction]
#[pyo3(signature = (n_values, field = "q", seed = None))]
fn theorem2_growth<'py>(
    py: Python<'py>,
    n_values: Vec<u32>,
    field: &str,
    seed: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let g = locoh::frobenius::theorem2_growth(&n_values, self::field(field)?, seed).map_err(py_err)?;
    let out = PyDict::new(py);
    out.set_item("n_values", &g.n_values)?;
    out.set_item("determinants", strings(&g.determinants))?;
    out.set_item("new_witnesses", &g.growth.new_factors)?;
    out.set_item("cumulative", &g.growth.cumulative_distinct)?;
    out.set_item("strictly_increasing", g.growth.strictly_increasing())?;
    Ok(out)
}

/// Runs the command-line tool with `args` (without the program name) and
/// returns its exit code.
#[pyfunction]
fn run_cli(args: Vec<String>) -> i32 {
    locoh::cli::run(std::iter::once("locoh".to_string()).chain(args))
}

/// Module initializer, also usable with `pyo3::append_to_inittab!` for embedding.
#[pymodule(name = "locoh")]
pub fn locoh_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Poly>()?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    m.add_function(wrap_pyfunction!(sigma, m)?)?;
    m.add_function(wrap_pyfunction!(build_a, m)?)?;
    m.add_function(wrap_pyfunction!(build_b, m)?)?;
    m.add_function(wrap_pyfunction!(build_m, m)?)?;
    m.add_function(wrap_pyfunction!(det_b, m)?)?;
    m.add_function(wrap_pyfunction!(factor_tau, m)?)?;
    m.add_function(wrap_pyfunction!(accumulate_distinct, m)?)?;
    m.add_function(wrap_pyfunction!(separability_check, m)?)?;
    m.add_function(wrap_pyfunction!(torsion_witness, m)?)?;
    m.add_function(wrap_pyfunction!(prime_witnesses, m)?)?;
    m.add_function(wrap_pyfunction!(component_t, m)?)?;
    m.add_function(wrap_pyfunction!(theorem2_growth, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
