//! Exact oracles for the graph invariants every bound is measured against:
//! χ, χ₂, α, α′ and ω, plus the greedy maximal independent (hence
//! dominating) set.
//!
//! The exponential searches run under an [`OracleBudget`] and refuse with
//! [`Error::Resource`] instead of approximating. All tie-breaking is by
//! ascending vertex id.

mod chromatic;
mod dynamic;
mod independence;
mod matching;

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub use chromatic::{chromatic_number, optimal_coloring};
pub use dynamic::{dynamic_chromatic_number, optimal_dynamic_coloring};
pub use independence::{clique_number, independence_number, maximum_clique, maximum_independent_set};
pub use matching::{matching_number, maximum_matching};

/// Environment variable overriding the default search-node cap.
pub const BUDGET_ENV: &str = "DYNCHROME_BUDGET_NODES";

/// Limits for a single exact search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_nodes_expanded: u64,
    #[serde(with = "millis")]
    pub timeout: Duration,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 32,
            max_nodes_expanded: 200_000_000,
            timeout: Duration::from_secs(120),
        }
    }
}

impl OracleBudget {
    /// The default budget, with the node cap taken from the environment
    /// when set.
    pub fn from_env() -> Result<Self> {
        let mut budget = OracleBudget::default();
        if let Ok(raw) = std::env::var(BUDGET_ENV) {
            budget.max_nodes_expanded = raw
                .trim()
                .parse()
                .map_err(|_| Error::input(format!("{BUDGET_ENV}={raw:?} is not an integer")))?;
        }
        budget.validate()?;
        Ok(budget)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_vertices == 0 || self.max_nodes_expanded == 0 || self.timeout.is_zero() {
            return Err(Error::input("oracle budget fields must be positive"));
        }
        Ok(())
    }

    pub(crate) fn check_size(&self, g: &Graph, what: &str) -> Result<()> {
        if g.n() > self.max_vertices || g.n() > 127 {
            return Err(Error::resource(format!(
                "{what}: {} vertices exceeds the oracle limit of {}",
                g.n(),
                self.max_vertices.min(127)
            )));
        }
        Ok(())
    }
}

mod millis {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(d.as_millis() as u64)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        Ok(Duration::from_millis(u64::deserialize(d)?))
    }
}

/// Counts expanded search nodes against the budget.
pub(crate) struct Meter {
    budget: OracleBudget,
    nodes: u64,
    started: Instant,
    what: &'static str,
}

impl Meter {
    pub(crate) fn new(budget: &OracleBudget, what: &'static str) -> Self {
        Meter {
            budget: *budget,
            nodes: 0,
            started: Instant::now(),
            what,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes_expanded {
            return Err(Error::resource(format!(
                "{}: node budget of {} exhausted",
                self.what, self.budget.max_nodes_expanded
            )));
        }
        if self.nodes.is_multiple_of(4096) && self.started.elapsed() > self.budget.timeout {
            return Err(Error::resource(format!(
                "{}: timeout of {:?} exceeded",
                self.what, self.budget.timeout
            )));
        }
        Ok(())
    }
}

/// Attaches search bounds to a resource error.
pub(crate) fn with_bounds(err: Error, lo: usize, hi: usize) -> Error {
    match err {
        Error::Resource { message, .. } => Error::Resource {
            message,
            lower: Some(lo),
            upper: Some(hi),
        },
        other => other,
    }
}

/// Greedy maximal independent set: scan `order`, keep every vertex with no
/// kept neighbor. Vertices of `forced` are kept first; they must be
/// independent.
pub fn maximal_independent_set_in_order(
    g: &Graph,
    order: &[Vertex],
    forced: &VertexSet,
) -> VertexSet {
    let mut blocked = vec![false; g.n()];
    let mut out = VertexSet::new();
    for v in forced.iter().chain(order.iter().copied()) {
        if !blocked[v] {
            blocked[v] = true;
            out.insert(v);
            for &u in g.neighbors(v) {
                blocked[u] = true;
            }
        }
    }
    out
}

/// A maximal independent set built greedily over a seeded random vertex
/// order. Maximal independent sets are exactly the independent dominating
/// sets, so the result dominates `V(G)`.
pub fn maximal_independent_dominating_set(g: &Graph, seed: u64) -> VertexSet {
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    maximal_independent_set_in_order(g, &order, &VertexSet::new())
}

/// Oracle values for one graph; `None` where not computed or over budget.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleValues {
    pub chi: Option<usize>,
    pub chi2: Option<usize>,
    pub alpha: Option<usize>,
    pub matching: Option<usize>,
    pub omega: Option<usize>,
}

impl OracleValues {
    /// Computes every value it can; the second element names the omissions.
    pub fn compute(g: &Graph, budget: &OracleBudget) -> (OracleValues, Vec<String>) {
        let mut omitted = Vec::new();
        let mut keep = |name: &str, r: Result<usize>| match r {
            Ok(v) => Some(v),
            Err(e) => {
                omitted.push(format!("{name}: {e}"));
                None
            }
        };
        let values = OracleValues {
            chi: keep("chi", chromatic_number(g, budget)),
            chi2: keep("chi2", dynamic_chromatic_number(g, budget)),
            alpha: keep("alpha", independence_number(g, budget)),
            matching: Some(matching_number(g)),
            omega: keep("omega", clique_number(g, budget)),
        };
        (values, omitted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn greedy_mis_in_fixed_order() {
        let c6 = cycle(6);
        let order: Vec<_> = (0..6).collect();
        assert_eq!(
            maximal_independent_set_in_order(&c6, &order, &VertexSet::new()),
            VertexSet::from([0, 2, 4])
        );
    }

    #[test]
    fn seeded_mids_dominates() {
        for seed in 0..20 {
            let k4 = maximal_independent_dominating_set(&complete(4), seed);
            assert_eq!(k4.len(), 1);
            let e = maximal_independent_dominating_set(&Graph::empty(5), seed);
            assert_eq!(e.len(), 5);
            let g = cycle(9);
            let t = maximal_independent_dominating_set(&g, seed);
            assert!(g.is_independent(&t));
            assert!(g.dominates(&t, &g.vertex_set()));
        }
    }

    #[test]
    fn forced_members_kept() {
        let c6 = cycle(6);
        let order: Vec<_> = (0..6).collect();
        let t = maximal_independent_set_in_order(&c6, &order, &VertexSet::from([1]));
        assert_eq!(t, VertexSet::from([1, 3, 5]));
    }

    #[test]
    fn budget_validation() {
        assert!(OracleBudget::default().validate().is_ok());
        let bad = OracleBudget {
            max_vertices: 0,
            ..OracleBudget::default()
        };
        assert!(bad.validate().is_err());
        let small = OracleBudget {
            max_vertices: 4,
            ..OracleBudget::default()
        };
        assert!(matches!(
            chromatic_number(&cycle(5), &small),
            Err(Error::Resource { .. })
        ));
    }
}
