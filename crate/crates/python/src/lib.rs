//! Python bindings. Words cross the boundary as glyph strings, with `_` for
//! the empty word.

use std::path::PathBuf;

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use small_overlap::kambites::uniform_word_problem_with_cap;
use small_overlap::oracle::DEFAULT_CAP;
use small_overlap::overlap::{all_pieces, ALL_PIECES_CAP};
use small_overlap::{
    AnalyzeReport, CIndex, Error, Kambites, OracleBackend, OverlapGuard, PieceAnalysis,
    Presentation, RewriteOracle, Word,
};

create_exception!(small_overlap, NotC4Error, PyValueError);
create_exception!(small_overlap, UndecidedError, PyException);

fn err(e: Error) -> PyErr {
    match e {
        Error::NotC4 => NotC4Error::new_err(e.to_string()),
        Error::Undecided { .. } => UndecidedError::new_err(e.to_string()),
        e => PyValueError::new_err(e.to_string()),
    }
}

fn parse_word(p: &Presentation, text: &str) -> PyResult<Word> {
    p.word(text)
        .map_err(|c| PyValueError::new_err(format!("symbol '{c}' is not in the alphabet")))
}

/// A finite monoid presentation.
#[pyclass(name = "Presentation", module = "small_overlap", frozen)]
struct PyPresentation {
    inner: Presentation,
}

#[pymethods]
impl PyPresentation {
    /// Parses the `alphabet:` / `rule:` text format.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let inner = Presentation::parse(text).map_err(|e| err(e.into()))?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_file(path: PathBuf) -> PyResult<Self> {
        Self::new(&std::fs::read_to_string(path)?)
    }

    #[getter]
    fn alphabet(&self) -> String {
        self.inner.alphabet().letters().iter().collect()
    }

    #[getter]
    fn relations(&self) -> Vec<(String, String)> {
        let p = &self.inner;
        p.relations()
            .iter()
            .map(|(l, r)| (p.render(l), p.render(r)))
            .collect()
    }

    #[getter]
    fn delta(&self) -> usize {
        self.inner.delta()
    }

    #[getter]
    fn total_length(&self) -> usize {
        self.inner.total_length()
    }

    /// Greatest `n` with C(n), or `None` when unbounded.
    fn c_index(&self) -> PyResult<Option<usize>> {
        Ok(
            match PieceAnalysis::new(&self.inner).map_err(err)?.c_index() {
                CIndex::Finite(n) => Some(n),
                CIndex::Unbounded => None,
            },
        )
    }

    fn is_c4(&self) -> PyResult<bool> {
        Ok(PieceAnalysis::new(&self.inner).map_err(err)?.is_c4())
    }

    fn is_piece(&self, w: &str) -> PyResult<bool> {
        let w = parse_word(&self.inner, w)?;
        Ok(PieceAnalysis::new(&self.inner).map_err(err)?.is_piece(&w))
    }

    fn pieces(&self) -> PyResult<Vec<String>> {
        let pieces = all_pieces(&self.inner, ALL_PIECES_CAP).map_err(err)?;
        Ok(pieces.iter().map(|w| self.inner.render(w)).collect())
    }

    /// `(word, x, y, z)` for each distinct relation word.
    fn decomposition(&self) -> PyResult<Vec<(String, String, String, String)>> {
        let a = PieceAnalysis::new(&self.inner).map_err(err)?;
        let d = a.decomposition();
        let r = |w: &[_]| self.inner.render(w);
        Ok((0..d.len())
            .map(|i| (r(d.word(i)), r(d.x(i)), r(d.y(i)), r(d.z(i))))
            .collect())
    }

    #[pyo3(signature = (pieces = false))]
    fn analyze_json(&self, pieces: bool) -> PyResult<String> {
        Ok(AnalyzeReport::new(&self.inner, pieces)
            .map_err(err)?
            .to_json())
    }

    /// The equivalence class of `w` by rewriting, as `(members, truncated)`.
    #[pyo3(signature = (w, cap = DEFAULT_CAP))]
    fn equivalence_class(
        &self,
        py: Python<'_>,
        w: &str,
        cap: usize,
    ) -> PyResult<(Vec<String>, bool)> {
        let w = parse_word(&self.inner, w)?;
        let c = py.detach(|| RewriteOracle::with_cap(&self.inner, cap).enumerate_class(&w));
        Ok((
            c.members.iter().map(|m| self.inner.render(m)).collect(),
            c.truncated,
        ))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Presentation({:?})", self.inner.to_string())
    }
}

/// Normal forms and the word problem for a C(4) presentation.
#[pyclass(name = "Kambites", module = "small_overlap", frozen)]
struct PyKambites {
    inner: Kambites,
}

#[pymethods]
impl PyKambites {
    /// Raises `NotC4Error` unless the presentation satisfies C(4).
    #[new]
    #[pyo3(signature = (presentation, cap = DEFAULT_CAP, guarded = true))]
    fn new(presentation: &PyPresentation, cap: usize, guarded: bool) -> PyResult<Self> {
        let p = &presentation.inner;
        let guard = if guarded {
            OverlapGuard::RealOverlapFirst
        } else {
            OverlapGuard::Unguarded
        };
        let inner = Kambites::with_backend(p, OracleBackend::with_cap(p, cap)).map_err(err)?;
        Ok(Self {
            inner: inner.with_overlap_guard(guard),
        })
    }

    fn normal_form(&self, py: Python<'_>, w: &str) -> PyResult<String> {
        let p = self.inner.presentation();
        let w = parse_word(p, w)?;
        let nf = py.detach(|| self.inner.normal_form(&w)).map_err(err)?;
        Ok(p.render(&nf))
    }

    fn equivalent(&self, py: Python<'_>, u: &str, v: &str) -> PyResult<bool> {
        let p = self.inner.presentation();
        let (u, v) = (parse_word(p, u)?, parse_word(p, v)?);
        py.detach(|| self.inner.equivalent(&u, &v)).map_err(err)
    }

    /// Whether some word equal to both `u` and `v` starts with the piece `prefix`.
    fn wp_prefix(&self, py: Python<'_>, u: &str, v: &str, prefix: &str) -> PyResult<bool> {
        let p = self.inner.presentation();
        let (u, v, q) = (parse_word(p, u)?, parse_word(p, v)?, parse_word(p, prefix)?);
        py.detach(|| self.inner.wp_prefix(&u, &v, &q)).map_err(err)
    }

    /// A word equal to `w` that starts with the piece `prefix`.
    fn replace_prefix(&self, py: Python<'_>, w: &str, prefix: &str) -> PyResult<String> {
        let p = self.inner.presentation();
        let (w, q) = (parse_word(p, w)?, parse_word(p, prefix)?);
        let out = py
            .detach(|| self.inner.replace_prefix(&w, &q))
            .map_err(err)?;
        Ok(p.render(&out))
    }
}

/// Returns `"equivalent"`, `"not-equivalent"` or `"not-C(4)"`.
#[pyfunction]
#[pyo3(signature = (presentation, u, v, cap = DEFAULT_CAP))]
fn word_problem(
    py: Python<'_>,
    presentation: &PyPresentation,
    u: &str,
    v: &str,
    cap: usize,
) -> PyResult<String> {
    let p = &presentation.inner;
    let (u, v) = (parse_word(p, u)?, parse_word(p, v)?);
    let verdict = py
        .detach(|| uniform_word_problem_with_cap(p, &u, &v, cap))
        .map_err(err)?;
    Ok(verdict.to_string())
}

#[pymodule]
#[pyo3(name = "small_overlap")]
fn small_overlap_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPresentation>()?;
    m.add_class::<PyKambites>()?;
    m.add_function(wrap_pyfunction!(word_problem, m)?)?;
    m.add("NotC4Error", m.py().get_type::<NotC4Error>())?;
    m.add("UndecidedError", m.py().get_type::<UndecidedError>())?;
    Ok(())
}
