//! Python bindings for the Hessenberg toolkit.
//!
//! The module keeps to thin wrappers: `HessFn` and `Permutation` mirror the
//! library types, `Ring` wraps the cohomology quotient, and a few module
//! functions return plain data (lists, tuples, strings) so the Python side
//! needs no further conversion.

use minhess::poly::UniPoly;
use minhess::{betti, cohom, components, gkm, hess, symgroup, verify};
use num::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: minhess::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn pairs(p: &UniPoly) -> Vec<(usize, BigInt)> {
    p.iter().map(|(d, c)| (d, c.clone())).collect()
}

/// `((row, column), word, dimension)` of one irreducible component.
type ComponentTriple = ((usize, usize), PyPermutation, usize);

/// A Hessenberg function, constructed from its values `[h(1), ..., h(n)]`.
#[pyclass(frozen, eq, name = "HessFn")]
#[derive(PartialEq)]
struct PyHessFn {
    inner: hess::HessFn,
}

#[pymethods]
impl PyHessFn {
    #[new]
    fn new(values: Vec<usize>) -> PyResult<Self> {
        Ok(Self { inner: hess::HessFn::from_values(values).map_err(err)? })
    }

    /// Parse a comma-separated value string such as `"2,4,5,5,5"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Self { inner: hess::HessFn::parse(text).map_err(err)? })
    }

    /// The minimal function h(j) = max(j, 1), giving the Springer fibre.
    #[staticmethod]
    fn springer(n: usize) -> PyResult<Self> {
        Ok(Self { inner: hess::HessFn::springer(n).map_err(err)? })
    }

    /// The maximal function h(j) = n, giving the full flag variety.
    #[staticmethod]
    fn full(n: usize) -> PyResult<Self> {
        Ok(Self { inner: hess::HessFn::full(n).map_err(err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn values(&self) -> Vec<usize> {
        self.inner.values().to_vec()
    }

    fn dimension(&self) -> PyResult<usize> {
        betti::dimension(&self.inner).map_err(err)
    }

    fn codimension(&self) -> PyResult<usize> {
        betti::codimension(&self.inner).map_err(err)
    }

    fn euler_number(&self) -> PyResult<BigInt> {
        betti::euler_number(&self.inner).map_err(err)
    }

    /// Poincaré polynomial as `(degree, coefficient)` pairs in cohomological
    /// degree (even degrees only).
    fn poincare(&self) -> PyResult<Vec<(usize, BigInt)>> {
        Ok(pairs(&betti::poincare(&self.inner).map_err(err)?))
    }

    fn poincare_str(&self) -> PyResult<String> {
        Ok(betti::poincare(&self.inner).map_err(err)?.to_text("t"))
    }

    fn fixed_points(&self) -> PyResult<Vec<PyPermutation>> {
        let ws = betti::fixed_points(&self.inner).map_err(err)?;
        Ok(ws.into_iter().map(|inner| PyPermutation { inner }).collect())
    }

    fn is_fixed(&self, w: &PyPermutation) -> bool {
        betti::is_fixed_point(&self.inner, &w.inner)
    }

    /// Irreducible components as `(corner, word, dimension)` triples, where
    /// `corner` is the `(row, column)` of the staircase corner producing the
    /// component.
    fn components(&self) -> PyResult<Vec<ComponentTriple>> {
        let cs = components::components(&self.inner).map_err(err)?;
        Ok(cs
            .into_iter()
            .map(|c| {
                ((c.corner.row, c.corner.col), PyPermutation { inner: c.word }, c.dimension)
            })
            .collect())
    }

    fn gkm_dot(&self) -> PyResult<String> {
        Ok(gkm::GkmGraph::hessenberg(&self.inner).map_err(err)?.to_dot())
    }

    fn gkm_json(&self) -> PyResult<String> {
        let graph = gkm::GkmGraph::hessenberg(&self.inner).map_err(err)?;
        Ok(serde_json::to_string_pretty(&graph.to_json()).expect("serializable"))
    }

    /// Dimension of the space of edge-compatible cochains in polynomial
    /// degree `degree` (cohomological degree `2 * degree`).
    #[pyo3(signature = (degree, cap = gkm::DEFAULT_DEGREE_CAP))]
    fn cochain_dimension(&self, degree: usize, cap: usize) -> PyResult<usize> {
        let graph = gkm::GkmGraph::hessenberg(&self.inner).map_err(err)?;
        gkm::cochain_dimension(&graph, degree, cap).map_err(err)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("HessFn({:?})", self.inner.values())
    }
}

/// A permutation in one-line notation, constructed from its word.
#[pyclass(frozen, eq, hash, name = "Permutation")]
#[derive(PartialEq, Hash)]
struct PyPermutation {
    inner: symgroup::Permutation,
}

#[pymethods]
impl PyPermutation {
    #[new]
    fn new(word: Vec<usize>) -> PyResult<Self> {
        Ok(Self { inner: symgroup::Permutation::from_word(word).map_err(err)? })
    }

    #[getter]
    fn word(&self) -> Vec<usize> {
        self.inner.word().to_vec()
    }

    fn length(&self) -> usize {
        self.inner.length()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.inner.word())
    }
}

/// The cohomology ring of a Hessenberg variety in its fixed-point Schubert
/// basis.
#[pyclass(frozen, name = "Ring")]
struct PyRing {
    inner: cohom::QuotientRing,
}

#[pymethods]
impl PyRing {
    #[new]
    fn new(h: &PyHessFn) -> PyResult<Self> {
        Ok(Self { inner: cohom::QuotientRing::new(&h.inner).map_err(err)? })
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    fn basis(&self) -> Vec<PyPermutation> {
        self.inner
            .basis()
            .iter()
            .map(|w| PyPermutation { inner: w.clone() })
            .collect()
    }

    fn hilbert(&self) -> Vec<(usize, BigInt)> {
        pairs(&self.inner.hilbert_series())
    }

    /// Product of two basis classes, as `(word, coefficient)` pairs with the
    /// coefficient rendered as a string.
    fn multiply(
        &self,
        u: &PyPermutation,
        w: &PyPermutation,
    ) -> PyResult<Vec<(PyPermutation, String)>> {
        let product = self.inner.multiply_classes(&u.inner, &w.inner).map_err(err)?;
        Ok(product
            .iter()
            .map(|(v, c)| (PyPermutation { inner: v.clone() }, c.to_string()))
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("Ring(HessFn({:?}))", self.inner.h().values())
    }
}

/// All Hessenberg functions for a given n, in lexicographic order.
#[pyfunction]
fn hessenberg_functions(n: usize) -> PyResult<Vec<PyHessFn>> {
    let hs = hess::enumerate(n).map_err(err)?;
    Ok(hs.into_iter().map(|inner| PyHessFn { inner }).collect())
}

/// The Schubert polynomial of a permutation, rendered in variables x1, x2, ...
#[pyfunction]
fn schubert_polynomial(word: Vec<usize>) -> PyResult<String> {
    let w = symgroup::Permutation::from_word(word).map_err(err)?;
    Ok(cohom::schubert_polynomial(&w).to_string())
}

/// Run the full verification battery on one Hessenberg function; returns
/// `(name, passed, witness)` triples.
#[pyfunction]
#[pyo3(name = "verify")]
fn verify_py(h: &PyHessFn) -> PyResult<Vec<(String, bool, Option<String>)>> {
    let report = verify::verify_h(&h.inner).map_err(err)?;
    Ok(report
        .items
        .into_iter()
        .map(|item| (item.name, item.passed, item.witness))
        .collect())
}

#[pymodule]
fn minhess_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHessFn>()?;
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyRing>()?;
    m.add_function(wrap_pyfunction!(hessenberg_functions, m)?)?;
    m.add_function(wrap_pyfunction!(schubert_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(verify_py, m)?)?;
    Ok(())
}
