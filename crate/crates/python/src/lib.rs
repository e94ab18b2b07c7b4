//! Python bindings for the partyhecke crate.

use std::sync::Arc;

use partyhecke::hecke::verify_suite;
use partyhecke::quotient::{quotient_dimension as quotient_report, Ideal};
use partyhecke::{
    AlgebraElement, AlgebraError, GeneratorWord, PartyElement, RationalFunctions, Suite,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: AlgebraError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr>(what: &str, text: &str) -> PyResult<T>
where
    T::Err: std::fmt::Display,
{
    text.parse().map_err(|e| PyValueError::new_err(format!("invalid {what} {text:?}: {e}")))
}

/// An element of Q(a, q) with p = a^2.
#[pyclass(name = "Scalar", frozen, skip_from_py_object, eq)]
#[derive(Clone, PartialEq)]
struct PyScalar(partyhecke::Scalar);

#[pymethods]
impl PyScalar {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse("scalar", text).map(Self)
    }

    #[staticmethod]
    fn a() -> Self {
        Self(partyhecke::Scalar::a())
    }

    #[staticmethod]
    fn q() -> Self {
        Self(partyhecke::Scalar::q())
    }

    #[staticmethod]
    fn p() -> Self {
        Self(partyhecke::Scalar::p())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.inv().map(Self).map_err(err)
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __truediv__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_div(&other.0).map(Self).map_err(err)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn __pow__(&self, e: i32, _modulo: Option<i32>) -> PyResult<Self> {
        self.0.pow(e).map(Self).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Scalar('{}')", self.0)
    }
}

#[pyclass(name = "SetPartition", frozen, skip_from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PySetPartition(partyhecke::SetPartition);

#[pymethods]
impl PySetPartition {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse("set partition", text).map(Self)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn blocks(&self) -> Vec<Vec<usize>> {
        self.0.blocks()
    }

    fn join(&self, other: &Self) -> PyResult<Self> {
        self.0.join(&other.0).map(Self).map_err(err)
    }

    fn act(&self, s: &PyPermutation) -> PyResult<Self> {
        self.0.act(&s.0).map(Self).map_err(err)
    }

    fn refines(&self, other: &Self) -> bool {
        self.0.refines(&other.0)
    }

    fn shape(&self) -> String {
        self.0.shape().to_string()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SetPartition('{}')", self.0)
    }
}

#[pyclass(name = "Permutation", frozen, skip_from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPermutation(partyhecke::Permutation);

#[pymethods]
impl PyPermutation {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse("permutation", text).map(Self)
    }

    #[staticmethod]
    fn from_images(images: Vec<usize>) -> PyResult<Self> {
        partyhecke::Permutation::from_images(&images).map(Self).map_err(err)
    }

    #[staticmethod]
    fn longest(n: usize) -> Self {
        Self(partyhecke::Permutation::longest(n))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn images(&self) -> Vec<usize> {
        self.0.images()
    }

    fn length(&self) -> usize {
        self.0.length()
    }

    fn reduced_word(&self) -> Vec<usize> {
        self.0.reduced_word()
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}')", self.0)
    }
}

/// An element of the party monoid in normal form.
#[pyclass(name = "PartyElement", frozen, skip_from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartyElement(PartyElement);

#[pymethods]
impl PyPartyElement {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse("party element", text).map(Self)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        Self(PartyElement::identity(n))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn partition(&self) -> PySetPartition {
        PySetPartition(self.0.partition().clone())
    }

    #[getter]
    fn perm(&self) -> PyPermutation {
        PyPermutation(self.0.perm().clone())
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn is_idempotent(&self) -> bool {
        self.0.is_idempotent()
    }

    fn render(&self) -> String {
        self.0.to_diagram().render()
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.multiply(&other.0).map(Self).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("PartyElement('{}')", self.0)
    }
}

type Algebra = partyhecke::PartyHecke<RationalFunctions>;

/// The generic Party-Hecke algebra over Q(a, q).
#[pyclass(name = "PartyHecke", frozen)]
struct PyPartyHecke(Arc<Algebra>);

#[pymethods]
impl PyPartyHecke {
    #[new]
    fn new(n: usize) -> PyResult<Self> {
        if !(1..=6).contains(&n) {
            return Err(PyValueError::new_err(format!("n = {n} is outside 1..=6")));
        }
        Ok(Self(Arc::new(Algebra::symbolic(n))))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn dimension(&self) -> usize {
        self.0.dimension()
    }

    fn one(&self) -> PyHeckeElement {
        self.wrap(self.0.one())
    }

    fn g(&self, i: usize) -> PyResult<PyHeckeElement> {
        self.0.g(i).map(|x| self.wrap(x)).map_err(err)
    }

    fn g_inv(&self, i: usize) -> PyResult<PyHeckeElement> {
        self.0.g_inv(i).map(|x| self.wrap(x)).map_err(err)
    }

    fn f(&self, i: usize) -> PyResult<PyHeckeElement> {
        self.0.f(i).map(|x| self.wrap(x)).map_err(err)
    }

    /// Evaluates a word such as `"G1 F2 Ginv1"`.
    fn word(&self, text: &str) -> PyResult<PyHeckeElement> {
        let w: GeneratorWord = parse("word", text)?;
        self.0.word_to_element(&w).map(|x| self.wrap(x)).map_err(err)
    }

    /// Parses `coeff * [partition][perm] + ...`.
    fn element(&self, text: &str) -> PyResult<PyHeckeElement> {
        self.0.parse_element(text).map(|x| self.wrap(x)).map_err(err)
    }

    fn basis_element(&self, m: &PySetPartition, u: &PyPermutation) -> PyResult<PyHeckeElement> {
        self.0
            .pair(&m.0, &u.0, &partyhecke::Scalar::one())
            .map(|x| self.wrap(x))
            .map_err(err)
    }

    /// Runs a relation suite and returns `(passed, failed check names)`.
    #[pyo3(signature = (suite = "defining"))]
    fn verify(&self, suite: &str) -> PyResult<(bool, Vec<String>)> {
        let suite: Suite = parse("suite", suite)?;
        let r = verify_suite(suite, self.0.n()).map_err(err)?;
        let failed = r.failures().iter().map(|c| c.name.clone()).collect();
        Ok((r.all_pass(), failed))
    }
}

impl PyPartyHecke {
    fn wrap(&self, x: AlgebraElement) -> PyHeckeElement {
        PyHeckeElement {
            alg: self.0.clone(),
            x,
        }
    }
}

#[pyclass(name = "HeckeElement", frozen)]
struct PyHeckeElement {
    alg: Arc<Algebra>,
    x: AlgebraElement,
}

impl PyHeckeElement {
    fn with(&self, x: AlgebraElement) -> Self {
        Self {
            alg: self.alg.clone(),
            x,
        }
    }

    fn same_algebra(&self, other: &Self) -> PyResult<()> {
        if self.alg.n() == other.alg.n() {
            Ok(())
        } else {
            Err(PyValueError::new_err("elements live in different algebras"))
        }
    }
}

#[pymethods]
impl PyHeckeElement {
    fn is_zero(&self) -> bool {
        self.x.is_zero()
    }

    /// The terms as `(partition, permutation, coefficient)` strings.
    fn terms(&self) -> Vec<(String, String, String)> {
        self.x
            .terms()
            .map(|((m, u), c)| (m.to_string(), u.to_string(), c.to_string()))
            .collect()
    }

    fn coefficient(&self, m: &PySetPartition, u: &PyPermutation) -> PyScalar {
        let key = (m.0.clone(), u.0.clone());
        PyScalar(self.x.coefficient(&key).cloned().unwrap_or_default())
    }

    fn scale(&self, c: &PyScalar) -> Self {
        self.with(self.alg.scale(&self.x, &c.0))
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.same_algebra(other)?;
        Ok(self.with(self.alg.add(&self.x, &other.x)))
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.same_algebra(other)?;
        Ok(self.with(self.alg.sub(&self.x, &other.x)))
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.same_algebra(other)?;
        self.alg.multiply(&self.x, &other.x).map(|x| self.with(x)).map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.alg.n() == other.alg.n() && self.x == other.x
    }

    fn __str__(&self) -> String {
        self.x.to_string()
    }

    fn __repr__(&self) -> String {
        format!("HeckeElement('{}')", self.x)
    }
}

/// Dimension of `P_n / ideal` at two random prime-field points.
#[pyfunction]
#[pyo3(signature = (ideal, n, seed = 0, allow_long = false))]
fn quotient_dimension<'py>(
    py: Python<'py>,
    ideal: &str,
    n: usize,
    seed: u64,
    allow_long: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let ideal: Ideal = parse("ideal", ideal)?;
    let r = py.detach(|| quotient_report(ideal, n, seed, allow_long)).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("n", r.n)?;
    d.set_item("ideal", r.ideal.to_string())?;
    d.set_item("ambient_dimension", r.ambient_dimension)?;
    d.set_item("ideal_dimension", r.ideal_dimension)?;
    d.set_item("quotient_dimension", r.quotient_dimension)?;
    d.set_item("expected", r.expected)?;
    d.set_item("agree", r.agree)?;
    d.set_item("pass", r.passes())?;
    Ok(d)
}

#[pyfunction]
fn party_monoid_order(n: usize) -> PyResult<usize> {
    partyhecke::party::party_monoid(n).map(|m| m.len()).map_err(err)
}

#[pyfunction]
fn coprime_pairs(n: usize) -> PyResult<Vec<PyPartyElement>> {
    partyhecke::party::coprime_pairs(n)
        .map(|v| v.into_iter().map(PyPartyElement).collect())
        .map_err(err)
}

#[pymodule]
fn pypartyhecke(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyScalar>()?;
    m.add_class::<PySetPartition>()?;
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyPartyElement>()?;
    m.add_class::<PyPartyHecke>()?;
    m.add_class::<PyHeckeElement>()?;
    m.add_function(wrap_pyfunction!(quotient_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(party_monoid_order, m)?)?;
    m.add_function(wrap_pyfunction!(coprime_pairs, m)?)?;
    Ok(())
}
