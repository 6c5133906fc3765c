//! Python bindings: exposes root systems, Weyl elements and the CSM class
//! computations to Python as the `schubert_csm_py` extension module.
//!
//! Class expansions come back as ordinary dicts keyed by the canonical
//! reduced word ("1,2,1"; "" is the identity), with integer values in the
//! ordinary case and polynomial strings in the simple-root variables
//! a1..ar in the equivariant case.

use std::str::FromStr;
use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use schubert_csm::csm::{csm_cell, csm_cell_equiv, csm_variety, pushforward_gp};
use schubert_csm::rootsys::{LieType, RootSystem as CoreRootSystem};
use schubert_csm::verify::{verify_identities, verify_positivity, SweepScope};
use schubert_csm::weyl::{
    bruhat_leq, enumerate, longest_element, parse_element, ParabolicSubset,
    WeylElement as CoreElement, Word,
};

fn to_py_err(err: schubert_csm::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// A Weyl group element of a fixed root system.
#[pyclass(name = "WeylElement", frozen)]
struct WeylElement {
    rs: Arc<CoreRootSystem>,
    inner: CoreElement,
}

#[pymethods]
impl WeylElement {
    /// Coxeter length.
    #[getter]
    fn length(&self) -> u32 {
        self.inner.length()
    }

    /// Canonical reduced word as a list of 1-based indices.
    fn word(&self) -> Vec<usize> {
        self.inner.reduced_word(&self.rs).0
    }

    /// Canonical reduced word as the comma-separated encoding.
    fn word_str(&self) -> String {
        Word(self.inner.reduced_word(&self.rs).0).to_string()
    }

    /// One-line permutation (type A only).
    fn permutation(&self) -> PyResult<Vec<usize>> {
        self.inner.to_permutation(&self.rs).map_err(to_py_err)
    }

    fn inverse(&self) -> WeylElement {
        WeylElement {
            rs: Arc::clone(&self.rs),
            inner: self.inner.inverse(&self.rs),
        }
    }

    fn times(&self, other: &WeylElement) -> PyResult<WeylElement> {
        if self.rs != other.rs {
            return Err(PyValueError::new_err("elements of different root systems"));
        }
        Ok(WeylElement {
            rs: Arc::clone(&self.rs),
            inner: CoreElement::multiply(&self.rs, &self.inner, &other.inner),
        })
    }

    fn __mul__(&self, other: &WeylElement) -> PyResult<WeylElement> {
        self.times(other)
    }

    fn __eq__(&self, other: &WeylElement) -> bool {
        self.rs == other.rs && self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::collections::hash_map::DefaultHasher;
        use std::hash::{Hash, Hasher};
        let mut h = DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn __repr__(&self) -> String {
        format!(
            "WeylElement({}{}, \"{}\")",
            self.rs.lie_type(),
            self.rs.rank(),
            self.word_str()
        )
    }
}

/// The root system of a simple Lie type, e.g. RootSystem("A", 3).
#[pyclass(name = "RootSystem", frozen)]
struct RootSystem {
    inner: Arc<CoreRootSystem>,
}

impl RootSystem {
    fn wrap(&self, inner: CoreElement) -> WeylElement {
        WeylElement {
            rs: Arc::clone(&self.inner),
            inner,
        }
    }

    fn class_to_dict<'py>(
        &self,
        py: Python<'py>,
        terms: Vec<(CoreElement, String)>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let dict = PyDict::new(py);
        for (w, value) in terms {
            dict.set_item(Word(w.reduced_word(&self.inner).0).to_string(), value)?;
        }
        Ok(dict)
    }
}

#[pymethods]
impl RootSystem {
    #[new]
    fn new(lie_type: &str, rank: usize) -> PyResult<RootSystem> {
        let t = LieType::from_str(lie_type).map_err(to_py_err)?;
        let inner = CoreRootSystem::build(t, rank).map_err(to_py_err)?;
        Ok(RootSystem { inner })
    }

    #[getter]
    fn lie_type(&self) -> String {
        self.inner.lie_type().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn num_positive_roots(&self) -> usize {
        self.inner.num_positive_roots()
    }

    #[getter]
    fn weyl_order(&self) -> u128 {
        self.inner.weyl_order()
    }

    fn identity(&self) -> WeylElement {
        self.wrap(CoreElement::identity(&self.inner))
    }

    fn simple(&self, k: usize) -> PyResult<WeylElement> {
        if k == 0 || k > self.inner.rank() {
            return Err(PyValueError::new_err(format!(
                "simple index {k} out of range 1..={}",
                self.inner.rank()
            )));
        }
        Ok(self.wrap(CoreElement::simple(&self.inner, k)))
    }

    /// Parse "1,2,1" (word) or "4312" (one-line permutation, type A).
    fn element(&self, text: &str) -> PyResult<WeylElement> {
        parse_element(&self.inner, text)
            .map(|w| self.wrap(w))
            .map_err(to_py_err)
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_word(&self, letters: Vec<usize>) -> PyResult<WeylElement> {
        CoreElement::from_word(&self.inner, &letters)
            .map(|w| self.wrap(w))
            .map_err(to_py_err)
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_permutation(&self, one_line: Vec<usize>) -> PyResult<WeylElement> {
        CoreElement::from_permutation(&self.inner, &one_line)
            .map(|w| self.wrap(w))
            .map_err(to_py_err)
    }

    fn longest_element(&self) -> WeylElement {
        self.wrap(longest_element(&self.inner))
    }

    /// All elements, breadth-first by length (optionally length-bounded).
    #[pyo3(signature = (max_length=None))]
    fn elements(&self, max_length: Option<u32>) -> PyResult<Vec<WeylElement>> {
        let iter = enumerate(&self.inner, max_length).map_err(to_py_err)?;
        Ok(iter.map(|w| self.wrap(w)).collect())
    }

    fn bruhat_leq(&self, u: &WeylElement, w: &WeylElement) -> bool {
        bruhat_leq(&self.inner, &u.inner, &w.inner)
    }

    /// CSM class of the Schubert cell X(w): dict word -> integer.
    fn csm_cell<'py>(&self, py: Python<'py>, w: &WeylElement) -> PyResult<Bound<'py, PyDict>> {
        let cell = csm_cell(&self.inner, &w.inner);
        let dict = PyDict::new(py);
        for (u, c) in cell.sorted_terms() {
            dict.set_item(Word(u.reduced_word(&self.inner).0).to_string(), c)?;
        }
        Ok(dict)
    }

    /// CSM class of the Schubert variety X(w): dict word -> integer.
    fn csm_variety<'py>(&self, py: Python<'py>, w: &WeylElement) -> PyResult<Bound<'py, PyDict>> {
        let variety = csm_variety(&self.inner, &w.inner);
        let dict = PyDict::new(py);
        for (u, c) in variety.sorted_terms() {
            dict.set_item(Word(u.reduced_word(&self.inner).0).to_string(), c)?;
        }
        Ok(dict)
    }

    /// Equivariant CSM class of X(w): dict word -> polynomial string in
    /// the simple-root variables a1..ar.
    fn csm_cell_equivariant<'py>(
        &self,
        py: Python<'py>,
        w: &WeylElement,
    ) -> PyResult<Bound<'py, PyDict>> {
        let cell = csm_cell_equiv(&self.inner, &w.inner);
        let terms = cell
            .sorted_terms()
            .into_iter()
            .map(|(u, c)| (u, c.text()))
            .collect();
        self.class_to_dict(py, terms)
    }

    /// Push the CSM class of the cell X(w) forward along G/B -> G/P for
    /// the parabolic generated by the given simple indices.
    fn pushforward<'py>(
        &self,
        py: Python<'py>,
        w: &WeylElement,
        parabolic: Vec<usize>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let p = ParabolicSubset::new(&self.inner, parabolic).map_err(to_py_err)?;
        let pushed = pushforward_gp(&csm_cell(&self.inner, &w.inner), &p);
        let dict = PyDict::new(py);
        for (u, c) in pushed.sorted_terms() {
            dict.set_item(Word(u.reduced_word(&self.inner).0).to_string(), c)?;
        }
        Ok(dict)
    }

    /// Positivity sweep; returns a dict with cells, coefficients, verdict
    /// and the counterexample list.
    #[pyo3(signature = (max_length=None, equivariant=false))]
    fn verify_positivity<'py>(
        &self,
        py: Python<'py>,
        max_length: Option<u32>,
        equivariant: bool,
    ) -> PyResult<Bound<'py, PyDict>> {
        let scope = match max_length {
            Some(l) => SweepScope::MaxLength(l),
            None => SweepScope::All,
        };
        let report = verify_positivity(&self.inner, scope, equivariant).map_err(to_py_err)?;
        let dict = PyDict::new(py);
        dict.set_item("cells", report.cells)?;
        dict.set_item("coefficients", report.coefficients)?;
        dict.set_item("all_positive", report.all_positive())?;
        let bad = PyList::empty(py);
        for rec in &report.counterexamples {
            let entry = PyDict::new(py);
            entry.set_item("w", Word(rec.w.reduced_word(&self.inner).0).to_string())?;
            entry.set_item("u", Word(rec.u.reduced_word(&self.inner).0).to_string())?;
            entry.set_item("coeff", rec.coeff.clone())?;
            bad.append(entry)?;
        }
        dict.set_item("counterexamples", bad)?;
        Ok(dict)
    }

    /// Operator-identity suite on random class vectors; returns a dict
    /// mapping identity name -> failure count.
    #[pyo3(signature = (samples=100, seed=0x5eed_cafe))]
    fn verify_identities<'py>(
        &self,
        py: Python<'py>,
        samples: usize,
        seed: u64,
    ) -> PyResult<Bound<'py, PyDict>> {
        let report = verify_identities(&self.inner, samples, seed);
        let dict = PyDict::new(py);
        for check in &report.checks {
            dict.set_item(check.name, check.failures)?;
        }
        dict.set_item("all_hold", report.all_hold())?;
        Ok(dict)
    }

    fn __repr__(&self) -> String {
        format!(
            "RootSystem(\"{}\", {})",
            self.inner.lie_type(),
            self.inner.rank()
        )
    }
}

#[pymodule]
fn schubert_csm_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<RootSystem>()?;
    m.add_class::<WeylElement>()?;
    Ok(())
}
