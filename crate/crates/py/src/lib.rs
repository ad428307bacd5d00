//! Python bindings: the element types (trees, slotted trees, permutations,
//! tensor expressions, move sequences), composition and the symmetric
//! action, coherence synthesis, and the exhaustive law suites as
//! dict-returning functions.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use smcop_core::cat::ExprModel;
use smcop_core::coherence;
use smcop_core::diagrams;
use smcop_core::endo::EndOperad;
use smcop_core::laws;
use smcop_core::sym::{FreeSymOperad, SymElem};
use smcop_core::view::{Operad, SymmetricOperad, TOperad, V0Operad, VOperad, ZOperad};
use smcop_core::Report;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A complete parenthesization; degree counts its leaves.
#[pyclass(frozen, eq, hash, from_py_object, name = "Tree", module = "smcop")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyTree {
    inner: smcop_core::Tree,
}

#[pymethods]
impl PyTree {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyTree { inner: text.parse().map_err(value_err)? })
    }

    fn degree(&self) -> usize {
        self.inner.degree()
    }

    /// Substitutes one tree per leaf, left to right.
    fn gamma(&self, args: Vec<PyTree>) -> PyResult<PyTree> {
        let xs: Vec<_> = args.into_iter().map(|a| a.inner).collect();
        Ok(PyTree { inner: self.inner.gamma(&xs).map_err(value_err)? })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Tree({:?})", self.inner.to_string())
    }
}

/// A parenthesization with a chosen subset of its leaves left open.
#[pyclass(frozen, eq, hash, from_py_object, name = "Slotted", module = "smcop")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PySlotted {
    inner: smcop_core::Slotted,
}

#[pymethods]
impl PySlotted {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PySlotted { inner: text.parse().map_err(value_err)? })
    }

    /// Number of open slots.
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    /// Number of leaves of the underlying parenthesization.
    fn internal_degree(&self) -> usize {
        self.inner.internal_degree()
    }

    fn tree(&self) -> PyTree {
        PyTree { inner: self.inner.tree().clone() }
    }

    fn slots(&self) -> Vec<usize> {
        self.inner.slots().to_vec()
    }

    /// The degree-additive pairing; the right factor's slots shift up.
    fn dot(&self, other: &PySlotted) -> PySlotted {
        PySlotted { inner: self.inner.dot(&other.inner) }
    }

    /// Substitutes one slotted tree per open slot.
    fn gamma(&self, args: Vec<PySlotted>) -> PyResult<PySlotted> {
        let xs: Vec<_> = args.into_iter().map(|a| a.inner).collect();
        Ok(PySlotted { inner: self.inner.gamma(&xs).map_err(value_err)? })
    }

    /// Collapses closed leaves to the adjoined zero.
    fn project_v0(&self) -> String {
        self.inner.project_v0().to_string()
    }

    /// The inclusion of complete parenthesizations: every leaf open.
    #[staticmethod]
    fn fully_slotted(tree: &PyTree) -> PySlotted {
        PySlotted { inner: smcop_core::Slotted::fully_slotted(tree.inner.clone()) }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Slotted({:?})", self.inner.to_string())
    }
}

/// A permutation, written as its one-based image list.
#[pyclass(frozen, eq, hash, from_py_object, name = "Permutation", module = "smcop")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPermutation {
    inner: smcop_core::Permutation,
}

#[pymethods]
impl PyPermutation {
    #[new]
    fn new(images: Vec<usize>) -> PyResult<Self> {
        Ok(PyPermutation {
            inner: smcop_core::Permutation::from_one_based(images).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn identity(n: usize) -> PyPermutation {
        PyPermutation { inner: smcop_core::Permutation::identity(n) }
    }

    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn images(&self) -> Vec<usize> {
        self.inner.one_based_images()
    }

    /// `(self.compose(inner))(i) = self(inner(i))`.
    fn compose(&self, inner: &PyPermutation) -> PyResult<PyPermutation> {
        Ok(PyPermutation { inner: self.inner.compose(&inner.inner).map_err(value_err)? })
    }

    fn inverse(&self) -> PyPermutation {
        PyPermutation { inner: self.inner.inverse() }
    }

    /// The block permutation moving whole blocks of the given sizes the way
    /// this permutation moves points.
    fn block(&self, sizes: Vec<usize>) -> PyResult<PyPermutation> {
        Ok(PyPermutation { inner: self.inner.block(&sizes).map_err(value_err)? })
    }

    /// Reorders a list, moving the item at position `i` to the position
    /// this permutation sends `i` to.
    fn apply_to_list(&self, py: Python<'_>, items: Vec<Py<PyAny>>) -> PyResult<Vec<Py<PyAny>>> {
        if items.len() != self.inner.degree() {
            return Err(value_err(format!(
                "degree {} permutation got {} items",
                self.inner.degree(),
                items.len()
            )));
        }
        let inv = self.inner.inverse();
        Ok((0..items.len())
            .map(|i| items[inv.apply(i)].clone_ref(py))
            .collect())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.inner.one_based_images())
    }
}

/// An element of a free symmetric operad over the slotted trees: a base
/// element with a permutation attached.
#[pyclass(frozen, eq, hash, from_py_object, name = "SymSlotted", module = "smcop")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PySymSlotted {
    inner: SymElem<smcop_core::Slotted>,
}

#[pymethods]
impl PySymSlotted {
    #[new]
    fn new(base: &PySlotted, perm: &PyPermutation) -> PyResult<Self> {
        let view = FreeSymOperad::new(ZOperad);
        Ok(PySymSlotted {
            inner: view.elem(base.inner.clone(), perm.inner.clone()).map_err(value_err)?,
        })
    }

    fn base(&self) -> PySlotted {
        PySlotted { inner: self.inner.base.clone() }
    }

    fn perm(&self) -> PyPermutation {
        PyPermutation { inner: self.inner.perm.clone() }
    }

    fn degree(&self) -> usize {
        self.inner.base.degree()
    }

    fn gamma(&self, args: Vec<PySymSlotted>) -> PyResult<PySymSlotted> {
        let view = FreeSymOperad::new(ZOperad);
        let want = view.degree(&self.inner);
        if args.len() != want {
            return Err(value_err(format!(
                "degree {want} element got {} arguments",
                args.len()
            )));
        }
        let xs: Vec<_> = args.into_iter().map(|a| a.inner).collect();
        Ok(PySymSlotted { inner: view.gamma(&self.inner, &xs) })
    }

    /// The right action: attach a further reordering of the inputs.
    fn act(&self, perm: &PyPermutation) -> PyResult<PySymSlotted> {
        let view = FreeSymOperad::new(ZOperad);
        if perm.inner.degree() != view.degree(&self.inner) {
            return Err(value_err("permutation degree differs from element degree"));
        }
        Ok(PySymSlotted { inner: view.act(&self.inner, &perm.inner) })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SymSlotted({:?})", self.inner.to_string())
    }
}

/// A tensor expression over variables `x1, x2, …` and the unit leaf `I`.
#[pyclass(frozen, eq, hash, from_py_object, name = "Expr", module = "smcop")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyExpr {
    inner: smcop_core::Expr,
}

#[pymethods]
impl PyExpr {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyExpr { inner: text.parse().map_err(value_err)? })
    }

    fn var_count(&self) -> usize {
        self.inner.var_count()
    }

    fn unit_count(&self) -> usize {
        self.inner.unit_count()
    }

    /// Variable indices in leaf order.
    fn var_indices(&self) -> Vec<usize> {
        self.inner.var_indices()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Expr({:?})", self.inner.to_string())
    }
}

/// A replayable sequence of structure moves between two expressions.
#[pyclass(frozen, from_py_object, name = "MoveSeq", module = "smcop")]
#[derive(Clone)]
struct PyMoveSeq {
    inner: coherence::MoveSeq,
}

#[pymethods]
impl PyMoveSeq {
    fn source(&self) -> PyExpr {
        PyExpr { inner: self.inner.source.clone() }
    }

    /// Move texts like `alpha@LR` or `tau`, in application order.
    fn moves(&self) -> Vec<String> {
        self.inner.moves.iter().map(|m| m.to_string()).collect()
    }

    /// Applies the moves to the source and returns the final expression.
    fn replay(&self) -> PyResult<PyExpr> {
        Ok(PyExpr { inner: self.inner.replay().map_err(value_err)? })
    }

    /// The induced variable-tracking bijection, as one-based images.
    fn bijection(&self) -> PyResult<Vec<usize>> {
        Ok(coherence::moveseq_bijection(&self.inner)
            .map_err(value_err)?
            .one_based_images())
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("MoveSeq(moves={})", self.inner.len())
    }
}

/// The canonical structure isomorphism between two expressions over the
/// same distinct variables, as a replayable move sequence.
#[pyfunction]
fn synthesize(source: &PyExpr, target: &PyExpr) -> PyResult<PyMoveSeq> {
    Ok(PyMoveSeq {
        inner: coherence::synthesize(&source.inner, &target.inner).map_err(value_err)?,
    })
}

/// The bijection matching equal variable labels across two expressions.
#[pyfunction]
fn label_bijection(source: &PyExpr, target: &PyExpr) -> PyResult<Vec<usize>> {
    Ok(smcop_core::expr::label_bijection(&source.inner, &target.inner)
        .map_err(value_err)?
        .one_based_images())
}

/// All complete parenthesizations of the given degree.
#[pyfunction]
fn enumerate_trees(degree: usize) -> Vec<PyTree> {
    smcop_core::Tree::enumerate(degree)
        .into_iter()
        .map(|inner| PyTree { inner })
        .collect()
}

/// All slotted trees of the given degree up to an internal-degree ceiling.
#[pyfunction]
fn enumerate_slotted(degree: usize, max_internal: usize) -> Vec<PySlotted> {
    smcop_core::Slotted::enumerate(degree, max_internal)
        .into_iter()
        .map(|inner| PySlotted { inner })
        .collect()
}

fn report_to_dict<'py>(py: Python<'py>, r: &Report) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("suite", &r.suite)?;
    d.set_item("params", r.params.clone())?;
    d.set_item("total", r.total())?;
    d.set_item("failed", r.failed())?;
    d.set_item("all_pass", r.all_pass())?;
    let laws = PyList::empty(py);
    for s in &r.stats {
        let e = PyDict::new(py);
        e.set_item("law", &s.law)?;
        e.set_item("total", s.total)?;
        e.set_item("failed", s.failed)?;
        laws.append(e)?;
    }
    d.set_item("laws", laws)?;
    let failures = PyList::empty(py);
    for inst in r.failures().take(5) {
        let e = PyDict::new(py);
        e.set_item("law", &inst.law)?;
        e.set_item("operands", &inst.operands)?;
        e.set_item("expected", &inst.expected)?;
        e.set_item("actual", &inst.actual)?;
        failures.append(e)?;
    }
    d.set_item("failures", failures)?;
    Ok(d)
}

fn run_report<'py>(
    py: Python<'py>,
    outcome: Result<Report, laws::Overflow>,
) -> PyResult<Bound<'py, PyDict>> {
    report_to_dict(py, &outcome.map_err(value_err)?)
}

/// Unit and associativity laws, exhaustively within a result-measure bound.
/// `operad` is one of `"V"`, `"V0"`, `"Z"`, `"T"`.
#[pyfunction]
#[pyo3(signature = (operad, bound, limit = 1_000_000))]
fn check_nonsym<'py>(
    py: Python<'py>,
    operad: &str,
    bound: usize,
    limit: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let outcome = match operad {
        "V" => laws::check_nonsym_axioms(&VOperad, bound, limit),
        "V0" => laws::check_nonsym_axioms(&V0Operad, bound, limit),
        "Z" => laws::check_nonsym_axioms(&ZOperad, bound, limit),
        "T" => laws::check_nonsym_axioms(&TOperad, bound, limit),
        other => return Err(value_err(format!("unknown operad `{other}`"))),
    };
    run_report(py, outcome)
}

/// Symmetric action and equivariance laws. `operad` is one of `"LV"`,
/// `"LZ"`, `"End2"`.
#[pyfunction]
#[pyo3(signature = (operad, bound, limit = 1_000_000))]
fn check_sym<'py>(
    py: Python<'py>,
    operad: &str,
    bound: usize,
    limit: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let outcome = match operad {
        "LV" => laws::check_sym_axioms(&FreeSymOperad::new(VOperad), bound, limit),
        "LZ" => laws::check_sym_axioms(&FreeSymOperad::new(ZOperad), bound, limit),
        "End2" => laws::check_sym_axioms(&EndOperad::new(2), bound, limit),
        other => return Err(value_err(format!("unknown operad `{other}`"))),
    };
    run_report(py, outcome)
}

/// The six structure diagrams on an algebra model, `"word"` or `"expr"`.
#[pyfunction]
#[pyo3(signature = (model = "word", alphabet = 2, max_len = 2, max_leaves = 4, limit = 1_000_000))]
fn check_diagrams<'py>(
    py: Python<'py>,
    model: &str,
    alphabet: usize,
    max_len: usize,
    max_leaves: usize,
    limit: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let outcome = match model {
        "word" => diagrams::check_diagrams_word(alphabet, max_len, limit),
        "expr" => diagrams::check_diagrams_expr(max_leaves, limit),
        other => return Err(value_err(format!("unknown model `{other}`"))),
    };
    run_report(py, outcome)
}

/// Compatibility of an algebra model with composition and the symmetric
/// action, on the word model.
#[pyfunction]
#[pyo3(signature = (alphabet = 2, max_len = 2, internal = 2, arity = 2, limit = 1_000_000))]
fn check_algebra<'py>(
    py: Python<'py>,
    alphabet: usize,
    max_len: usize,
    internal: usize,
    arity: usize,
    limit: usize,
) -> PyResult<Bound<'py, PyDict>> {
    run_report(
        py,
        diagrams::check_word_algebra(alphabet, max_len, internal, arity, limit),
    )
}

/// Synthesis round-trips over every expression pair within the bounds.
#[pyfunction]
#[pyo3(signature = (max_vars = 3, max_units = 1, limit = 1_000_000))]
fn coherence_corpus<'py>(
    py: Python<'py>,
    max_vars: usize,
    max_units: usize,
    limit: usize,
) -> PyResult<Bound<'py, PyDict>> {
    run_report(py, coherence::check_coherence_corpus(max_vars, max_units, limit))
}

/// Evaluates an operation of the categorical operad on expressions: slots
/// receive the inputs (reordered by the permutation), closed leaves get
/// the unit.
#[pyfunction]
fn expr_action(op: &PySymSlotted, inputs: Vec<PyExpr>) -> PyResult<PyExpr> {
    use smcop_core::cat::YModel;
    if inputs.len() != op.inner.base.degree() {
        return Err(value_err(format!(
            "degree {} operation got {} inputs",
            op.inner.base.degree(),
            inputs.len()
        )));
    }
    let xs: Vec<_> = inputs.into_iter().map(|e| e.inner).collect();
    Ok(PyExpr { inner: ExprModel.object(&op.inner, &xs) })
}

#[pymodule]
fn smcop(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTree>()?;
    m.add_class::<PySlotted>()?;
    m.add_class::<PyPermutation>()?;
    m.add_class::<PySymSlotted>()?;
    m.add_class::<PyExpr>()?;
    m.add_class::<PyMoveSeq>()?;
    m.add_function(wrap_pyfunction!(synthesize, m)?)?;
    m.add_function(wrap_pyfunction!(label_bijection, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_trees, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_slotted, m)?)?;
    m.add_function(wrap_pyfunction!(check_nonsym, m)?)?;
    m.add_function(wrap_pyfunction!(check_sym, m)?)?;
    m.add_function(wrap_pyfunction!(check_diagrams, m)?)?;
    m.add_function(wrap_pyfunction!(check_algebra, m)?)?;
    m.add_function(wrap_pyfunction!(coherence_corpus, m)?)?;
    m.add_function(wrap_pyfunction!(expr_action, m)?)?;
    Ok(())
}
