//! Python bindings: games, partitions, stability checks, solvers and the
//! gadget catalogue, exposed as the `fhg_py` module.
//!
//! Utilities cross the boundary as `fractions.Fraction`, keeping the exact
//! arithmetic visible from Python.

use fhg_core::instances;
use fhg_core::io::{self, ParsedGame};
use fhg_core::model::{self, HedonicGame, Partition};
use fhg_core::rational::format_rat;
use fhg_core::solvers;
use fhg_core::stability::{self, BlockKind, BlockingCertificate, SearchBudget};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn err(e: fhg_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &fhg_core::Rat) -> PyResult<Bound<'py, PyAny>> {
    let fractions = py.import("fractions")?;
    fractions.getattr("Fraction")?.call1((format_rat(r),))
}

/// A fractional hedonic game, with or without singleton subsidies.
#[pyclass(name = "Game", skip_from_py_object)]
#[derive(Clone)]
struct PyGame {
    inner: ParsedGame,
}

impl PyGame {
    fn budget(
        &self,
        connected: Option<bool>,
        max_size: Option<usize>,
        max_nodes: Option<u64>,
    ) -> SearchBudget {
        let base = self.inner.base();
        SearchBudget {
            max_coalition_size: max_size,
            max_nodes,
            connected_only: connected.unwrap_or_else(|| base.is_simple() && base.is_symmetric()),
        }
    }

    fn plain(&self) -> PyResult<&fhg_core::Game> {
        match &self.inner {
            ParsedGame::Plain(g) => Ok(g),
            ParsedGame::Supported(_) => Err(PyValueError::new_err(
                "this operation needs a game without subsidies",
            )),
        }
    }
}

fn dispatch<T>(
    game: &ParsedGame,
    f: impl Fn(&dyn ErasedGame) -> fhg_core::Result<T>,
) -> PyResult<T> {
    match game {
        ParsedGame::Plain(g) => f(g).map_err(err),
        ParsedGame::Supported(sg) => f(sg).map_err(err),
    }
}

/// Object-safe view of `HedonicGame` for uniform dispatch.
trait ErasedGame {
    fn utility_of(&self, i: usize, coalition: &[usize]) -> fhg_core::Result<fhg_core::Rat>;
    fn find(
        &self,
        partition: &Partition,
        kind: BlockKind,
        budget: &SearchBudget,
    ) -> fhg_core::Result<stability::SearchOutcome>;
    fn walk(
        &self,
        start: &Partition,
        max_steps: usize,
        budget: &SearchBudget,
    ) -> fhg_core::Result<stability::WalkOutcome>;
    fn stable_partitions(
        &self,
        kind: BlockKind,
        bound: usize,
    ) -> fhg_core::Result<Vec<Partition>>;
}

impl<G: HedonicGame> ErasedGame for G {
    fn utility_of(&self, i: usize, coalition: &[usize]) -> fhg_core::Result<fhg_core::Rat> {
        model::utility(self, i, coalition)
    }

    fn find(
        &self,
        partition: &Partition,
        kind: BlockKind,
        budget: &SearchBudget,
    ) -> fhg_core::Result<stability::SearchOutcome> {
        stability::find_blocking(self, partition, kind, budget)
    }

    fn walk(
        &self,
        start: &Partition,
        max_steps: usize,
        budget: &SearchBudget,
    ) -> fhg_core::Result<stability::WalkOutcome> {
        stability::deviation_walk(self, start, max_steps, budget)
    }

    fn stable_partitions(
        &self,
        kind: BlockKind,
        bound: usize,
    ) -> fhg_core::Result<Vec<Partition>> {
        stability::enumerate_stable_partitions(self, kind, bound)
    }
}

fn certificate_dict<'py>(
    py: Python<'py>,
    cert: &BlockingCertificate,
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    let coalition: Vec<usize> = cert.coalition.clone();
    d.set_item("coalition", coalition)?;
    d.set_item(
        "kind",
        match cert.kind {
            BlockKind::Strong => "strong",
            BlockKind::Weak => "weak",
        },
    )?;
    let deltas = PyList::empty(py);
    for delta in &cert.member_deltas {
        deltas.append((
            delta.player,
            fraction(py, &delta.current)?,
            fraction(py, &delta.proposed)?,
        ))?;
    }
    d.set_item("deltas", deltas)?;
    Ok(d)
}

fn verdict_tuple<'py>(
    py: Python<'py>,
    outcome: stability::SearchOutcome,
) -> PyResult<(String, Option<Bound<'py, PyDict>>)> {
    Ok(match outcome {
        stability::SearchOutcome::Found(cert) => {
            ("unstable".to_string(), Some(certificate_dict(py, &cert)?))
        }
        stability::SearchOutcome::NoneFound => ("stable".to_string(), None),
        stability::SearchOutcome::BudgetExhausted => ("unknown".to_string(), None),
    })
}

#[pymethods]
impl PyGame {
    /// Simple symmetric game from an undirected edge list (0-indexed).
    #[staticmethod]
    fn simple_symmetric(n: usize, edges: Vec<(usize, usize)>) -> PyResult<PyGame> {
        Ok(PyGame {
            inner: ParsedGame::Plain(fhg_core::Game::simple_symmetric(n, &edges).map_err(err)?),
        })
    }

    /// Weighted game from arcs `(i, j, weight)`; weights are strings such
    /// as "7", "-2.5" or "2/3". Unlisted arcs get `default`.
    #[staticmethod]
    #[pyo3(signature = (n, arcs, directed=false, default="0"))]
    fn weighted(
        n: usize,
        arcs: Vec<(usize, usize, String)>,
        directed: bool,
        default: &str,
    ) -> PyResult<PyGame> {
        let parse = |s: &str| {
            fhg_core::rational::parse_rat(s).map_err(|e| PyValueError::new_err(e.to_string()))
        };
        let mut converted = Vec::with_capacity(arcs.len());
        for (i, j, w) in &arcs {
            converted.push((*i, *j, parse(w)?));
        }
        let default = parse(default)?;
        let game = if directed {
            fhg_core::Game::weighted_directed(n, &converted, default)
        } else {
            fhg_core::Game::weighted_symmetric(n, &converted, default)
        }
        .map_err(err)?;
        Ok(PyGame {
            inner: ParsedGame::Plain(game),
        })
    }

    /// Parse the native game-file format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<PyGame> {
        Ok(PyGame {
            inner: io::parse_game(text).map_err(err)?,
        })
    }

    #[getter]
    fn players(&self) -> usize {
        self.inner.player_count()
    }

    #[getter]
    fn is_simple(&self) -> bool {
        self.inner.base().is_simple()
    }

    #[getter]
    fn is_symmetric(&self) -> bool {
        self.inner.base().is_symmetric()
    }

    /// Undirected positive edges, 0-indexed.
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.base().edges()
    }

    fn serialize(&self) -> String {
        match &self.inner {
            ParsedGame::Plain(g) => io::serialize_game(g),
            ParsedGame::Supported(sg) => io::serialize_supported_game(sg),
        }
    }

    /// Average valuation of `coalition` for member `i`, as a Fraction.
    fn utility<'py>(
        &self,
        py: Python<'py>,
        i: usize,
        coalition: Vec<usize>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let u = dispatch(&self.inner, |g| g.utility_of(i, &coalition))?;
        fraction(py, &u)
    }

    fn girth(&self) -> PyResult<Option<usize>> {
        model::girth(self.inner.base()).map_err(err)
    }

    fn components(&self) -> PyResult<Vec<Vec<usize>>> {
        model::connected_components(self.inner.base()).map_err(err)
    }

    /// Core stability of a partition: ("stable"|"unstable"|"unknown", cert).
    #[pyo3(signature = (partition, connected=None, max_size=None, max_nodes=None))]
    fn is_core_stable<'py>(
        &self,
        py: Python<'py>,
        partition: &PyPartition,
        connected: Option<bool>,
        max_size: Option<usize>,
        max_nodes: Option<u64>,
    ) -> PyResult<(String, Option<Bound<'py, PyDict>>)> {
        let budget = self.budget(connected, max_size, max_nodes);
        let outcome = dispatch(&self.inner, |g| {
            g.find(&partition.inner, BlockKind::Strong, &budget)
        })?;
        verdict_tuple(py, outcome)
    }

    /// Strict-core stability of a partition.
    #[pyo3(signature = (partition, connected=None, max_size=None, max_nodes=None))]
    fn is_strict_core_stable<'py>(
        &self,
        py: Python<'py>,
        partition: &PyPartition,
        connected: Option<bool>,
        max_size: Option<usize>,
        max_nodes: Option<u64>,
    ) -> PyResult<(String, Option<Bound<'py, PyDict>>)> {
        let budget = self.budget(connected, max_size, max_nodes);
        let outcome = dispatch(&self.inner, |g| {
            g.find(&partition.inner, BlockKind::Weak, &budget)
        })?;
        verdict_tuple(py, outcome)
    }

    /// All stable partitions by complete enumeration (players ≤ bound).
    #[pyo3(signature = (concept="core", bound=13))]
    fn stable_partitions(&self, concept: &str, bound: usize) -> PyResult<Vec<PyPartition>> {
        let kind = match concept {
            "core" => BlockKind::Strong,
            "strict-core" => BlockKind::Weak,
            other => {
                return Err(PyValueError::new_err(format!(
                    "concept must be 'core' or 'strict-core', got '{other}'"
                )))
            }
        };
        let stable = dispatch(&self.inner, |g| g.stable_partitions(kind, bound))?;
        Ok(stable.into_iter().map(|inner| PyPartition { inner }).collect())
    }

    /// Myopic deviation walk; returns a dict with end, steps, partition.
    #[pyo3(signature = (start, max_steps=1000, max_nodes=None))]
    fn deviation_walk<'py>(
        &self,
        py: Python<'py>,
        start: &PyPartition,
        max_steps: usize,
        max_nodes: Option<u64>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let budget = self.budget(None, None, max_nodes);
        let walk = dispatch(&self.inner, |g| g.walk(&start.inner, max_steps, &budget))?;
        let d = PyDict::new(py);
        d.set_item(
            "end",
            match walk.end {
                stability::WalkEnd::Converged => "converged",
                stability::WalkEnd::Cycled => "cycled",
                stability::WalkEnd::StepLimit => "step-limit",
                stability::WalkEnd::SearchBudget => "search-budget",
            },
        )?;
        d.set_item("steps", walk.steps.len())?;
        d.set_item(
            "partition",
            PyPartition {
                inner: walk.partition,
            },
        )?;
        Ok(d)
    }

    /// Deterministic solver for the given class:
    /// degree2 | forest | matching | star-packing | bakers-millers.
    fn solve(&self, class: &str) -> PyResult<PyPartition> {
        let game = self.plain()?;
        let partition = match class {
            "degree2" => solvers::solve_degree2(game).map_err(err)?,
            "forest" => solvers::solve_forest(game).map_err(err)?,
            "matching" => solvers::solve_bipartite_matching(game).map_err(err)?,
            "star-packing" => solvers::solve_star_packing(game).map_err(err)?.partition,
            "bakers-millers" => {
                let types = solvers::type_space_from_game(game).map_err(err)?;
                solvers::solve_bakers_millers_finest(&types)
            }
            other => {
                return Err(PyValueError::new_err(format!("unknown solver class '{other}'")))
            }
        };
        Ok(PyPartition { inner: partition })
    }

    fn __repr__(&self) -> String {
        format!(
            "Game(players={}, simple={}, symmetric={})",
            self.inner.player_count(),
            self.inner.base().is_simple(),
            self.inner.base().is_symmetric()
        )
    }
}

/// A disjoint cover of the players by nonempty coalitions.
#[pyclass(name = "Partition", skip_from_py_object)]
#[derive(Clone)]
struct PyPartition {
    inner: Partition,
}

#[pymethods]
impl PyPartition {
    #[new]
    fn new(n: usize, coalitions: Vec<Vec<usize>>) -> PyResult<PyPartition> {
        Ok(PyPartition {
            inner: Partition::new(n, coalitions).map_err(err)?,
        })
    }

    #[staticmethod]
    fn grand(n: usize) -> PyPartition {
        PyPartition {
            inner: Partition::grand(n),
        }
    }

    #[staticmethod]
    fn singletons(n: usize) -> PyPartition {
        PyPartition {
            inner: Partition::singletons(n),
        }
    }

    #[staticmethod]
    fn parse(text: &str, n: usize) -> PyResult<PyPartition> {
        Ok(PyPartition {
            inner: io::parse_partition(text, n).map_err(err)?,
        })
    }

    #[getter]
    fn coalitions(&self) -> Vec<Vec<usize>> {
        self.inner.coalitions().to_vec()
    }

    fn coalition_of(&self, i: usize) -> Vec<usize> {
        self.inner.coalition_of(i).to_vec()
    }

    fn serialize(&self) -> String {
        io::serialize_partition(&self.inner)
    }

    fn __eq__(&self, other: &PyPartition) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.inner.coalitions())
    }
}

/// Builds a named benchmark game; returns (game, certified_partition|None).
#[pyfunction]
fn gadget(name: &str) -> PyResult<(PyGame, Option<PyPartition>)> {
    let g = instances::gadget(name).map_err(err)?;
    Ok((
        PyGame {
            inner: ParsedGame::Plain(g.game),
        },
        g.certified_partition.map(|inner| PyPartition { inner }),
    ))
}

/// Names accepted by `gadget`.
#[pyfunction]
fn gadget_names() -> Vec<&'static str> {
    instances::GADGET_NAMES.to_vec()
}

/// Complete multipartite game for the given type sizes.
#[pyfunction]
fn bakers_millers_graph(sizes: Vec<usize>) -> PyResult<PyGame> {
    let types = fhg_core::TypeSpace::from_sizes(&sizes).map_err(err)?;
    Ok(PyGame {
        inner: ParsedGame::Plain(instances::bakers_millers_graph(&types)),
    })
}

/// The finest strict-core partition for the given type sizes.
#[pyfunction]
fn bakers_millers_finest(sizes: Vec<usize>) -> PyResult<PyPartition> {
    let types = fhg_core::TypeSpace::from_sizes(&sizes).map_err(err)?;
    Ok(PyPartition {
        inner: solvers::solve_bakers_millers_finest(&types),
    })
}

/// Number-preserving check: first core-stable partition by enumeration, or
/// None when the core is empty.
#[pyfunction]
#[pyo3(signature = (game, bound=13))]
fn core_nonempty(game: &PyGame, bound: usize) -> PyResult<Option<PyPartition>> {
    let outcome = match &game.inner {
        ParsedGame::Plain(g) => stability::core_nonempty_exhaustive(g, bound),
        ParsedGame::Supported(sg) => stability::core_nonempty_exhaustive(sg, bound),
    }
    .map_err(err)?;
    Ok(match outcome {
        stability::CoreContents::Nonempty(inner) => Some(PyPartition { inner }),
        stability::CoreContents::Empty => None,
    })
}

#[pymodule]
fn fhg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGame>()?;
    m.add_class::<PyPartition>()?;
    m.add_function(wrap_pyfunction!(gadget, m)?)?;
    m.add_function(wrap_pyfunction!(gadget_names, m)?)?;
    m.add_function(wrap_pyfunction!(bakers_millers_graph, m)?)?;
    m.add_function(wrap_pyfunction!(bakers_millers_finest, m)?)?;
    m.add_function(wrap_pyfunction!(core_nonempty, m)?)?;
    Ok(())
}
