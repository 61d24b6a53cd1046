//! Python bindings. Words cross the boundary as text (`aBc`, `1` for the
//! empty word); reports come back as JSON strings.

use std::collections::BTreeMap;

use palgroup::forms::{self, GroupForm};
use palgroup::lemmas;
use palgroup::pattern::{Binding, Pattern};
use palgroup::palfact;
use palgroup::report::VerificationReport;
use palgroup::{parse_word, ReducedWord};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: palgroup::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn word(text: &str, alphabet: u32) -> PyResult<palgroup::Word> {
    parse_word(text, alphabet).map_err(err)
}

fn reduced(text: &str, alphabet: u32) -> PyResult<ReducedWord> {
    ReducedWord::parse(text, alphabet).map_err(err)
}

fn dict(b: &Binding) -> BTreeMap<String, String> {
    b.iter().map(|(k, v)| (k.clone(), v.to_string())).collect()
}

fn json(r: PyResult<VerificationReport>) -> PyResult<String> {
    r.map(|r| r.to_json())
}

/// A word over `a, A, b, B, ...`, not necessarily reduced.
#[pyclass(name = "Word", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyWord(palgroup::Word);

#[pymethods]
impl PyWord {
    #[new]
    #[pyo3(signature = (text, alphabet = 26))]
    fn new(text: &str, alphabet: u32) -> PyResult<Self> {
        word(text, alphabet).map(PyWord)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Word('{}')", self.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn reduce(&self) -> Self {
        PyWord(self.0.reduce().into_word())
    }

    fn mirror(&self) -> Self {
        PyWord(self.0.mirror())
    }

    fn invert(&self) -> Self {
        PyWord(self.0.invert())
    }

    fn concat(&self, other: &PyWord) -> Self {
        PyWord(self.0.concat(&other.0))
    }

    fn is_palindrome(&self) -> bool {
        self.0.is_palindrome()
    }

    fn is_reduced(&self) -> bool {
        self.0.is_reduced()
    }
}

/// A concatenation pattern such as `A.P.Q.!A | P Q`.
#[pyclass(name = "Pattern", frozen)]
struct PyPattern(Pattern);

#[pymethods]
impl PyPattern {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyPattern).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Pattern('{}')", self.0)
    }

    /// The first binding in search order, or None.
    #[pyo3(name = "match")]
    fn match_word(&self, w: &str) -> PyResult<Option<BTreeMap<String, String>>> {
        Ok(self.0.match_word(&word(w, 26)?).as_ref().map(dict))
    }

    fn match_all(&self, w: &str) -> PyResult<Vec<BTreeMap<String, String>>> {
        Ok(self.0.match_all(&word(w, 26)?).iter().map(dict).collect())
    }
}

/// `(k, factors)`: minimal factorization into nonempty palindromes.
#[pyfunction]
fn semigroup_pl(w: &str) -> PyResult<(usize, Vec<String>)> {
    let r = palfact::semigroup_pl(&word(w, 26)?);
    Ok((r.k, r.witness.factors.iter().map(|f| f.to_string()).collect()))
}

#[pyfunction]
fn semigroup_pl_fast(w: &str) -> PyResult<usize> {
    Ok(palfact::semigroup_pl_fast(&word(w, 26)?))
}

/// `(value, factors)` where value is 0..3 or the string ">3". The input is
/// freely reduced first.
#[pyfunction]
fn group_pl(py: Python<'_>, w: &str) -> PyResult<(Py<PyAny>, Vec<String>)> {
    let d = forms::group_pl_detailed(&word(w, 26)?.reduce());
    let value = match d.value {
        forms::GroupPl::Exact(k) => k.into_pyobject(py)?.into_any().unbind(),
        forms::GroupPl::AboveThree => ">3".into_pyobject(py)?.into_any().unbind(),
    };
    Ok((value, d.factors.iter().map(|f| f.to_string()).collect()))
}

/// `{A, P, Q}` with `w = A P Q A⁻¹`, or None. `w` must be reduced.
#[pyfunction]
fn match_pl2(w: &str) -> PyResult<Option<BTreeMap<String, String>>> {
    Ok(forms::match_pl2(&reduced(w, 26)?).map(|wit| {
        [("A", wit.a), ("P", wit.p), ("Q", wit.q)]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect()
    }))
}

/// `{variant, A, B, P, Q, R}` for an ABP- or APB-word, or None.
#[pyfunction]
fn match_pl3(w: &str) -> PyResult<Option<BTreeMap<String, String>>> {
    Ok(forms::match_pl3(&reduced(w, 26)?).map(|wit| {
        [
            ("variant", wit.variant.to_string()),
            ("A", wit.a.to_string()),
            ("B", wit.b.to_string()),
            ("P", wit.p.to_string()),
            ("Q", wit.q.to_string()),
            ("R", wit.r.to_string()),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
    }))
}

/// Palindrome factors from the decomposer, empty if the length exceeds three.
#[pyfunction]
fn decompose(w: &str) -> PyResult<Vec<String>> {
    let d = forms::group_pl_detailed(&reduced(w, 26)?);
    Ok(match d.form {
        GroupForm::Unknown => Vec::new(),
        _ => d.factors.iter().map(|f| f.to_string()).collect(),
    })
}

#[pyfunction]
fn in_product_closure(w: &str, k: usize, bound: usize) -> PyResult<bool> {
    forms::in_product_closure(&reduced(w, 26)?, k, bound).map_err(err)
}

#[pyfunction]
fn verify_theorem2(m: u32, bound: usize) -> PyResult<String> {
    json(forms::verify_theorem2(m, bound).map_err(err))
}

#[pyfunction]
fn verify_theorem3(m: u32, bound: usize) -> PyResult<String> {
    json(forms::verify_theorem3(m, bound).map_err(err))
}

#[pyfunction]
fn k4_experiment(m: u32, bound: usize) -> PyResult<String> {
    json(forms::k4_experiment(m, bound).map_err(err))
}

#[pyfunction]
fn lemma_ids() -> Vec<String> {
    lemmas::lemma_catalog().into_iter().map(|s| s.id).collect()
}

/// `(case, witnesses)`; case is the 1-based number or None.
#[pyfunction]
fn classify(lemma_id: &str, instance: BTreeMap<String, String>) -> PyResult<(Option<usize>, BTreeMap<String, String>)> {
    let spec = lemmas::lemma(lemma_id).map_err(err)?;
    let mut inst = Binding::new();
    for (k, v) in instance {
        inst.insert(k, word(&v, 26)?);
    }
    let r = lemmas::classify_instance(&spec, &inst).map_err(err)?;
    Ok((r.case, dict(&r.witnesses)))
}

#[pyfunction]
fn verify_lemma(lemma_id: &str, m: u32, bound: usize) -> PyResult<String> {
    let spec = lemmas::lemma(lemma_id).map_err(err)?;
    json(lemmas::verify_lemma(&spec, m, bound).map_err(err))
}

#[pyfunction]
fn verify_all_lemmas(m: u32, bound: usize) -> PyResult<String> {
    json(lemmas::verify_all_lemmas(m, bound).map_err(err))
}

#[pymodule(name = "palgroup")]
fn palgroup_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWord>()?;
    m.add_class::<PyPattern>()?;
    m.add_function(wrap_pyfunction!(semigroup_pl, m)?)?;
    m.add_function(wrap_pyfunction!(semigroup_pl_fast, m)?)?;
    m.add_function(wrap_pyfunction!(group_pl, m)?)?;
    m.add_function(wrap_pyfunction!(match_pl2, m)?)?;
    m.add_function(wrap_pyfunction!(match_pl3, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(in_product_closure, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem2, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem3, m)?)?;
    m.add_function(wrap_pyfunction!(k4_experiment, m)?)?;
    m.add_function(wrap_pyfunction!(lemma_ids, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_lemma, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all_lemmas, m)?)?;
    Ok(())
}
