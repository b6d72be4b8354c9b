//! End-to-end procedures that turn a proper base coloring into a dynamic
//! coloring while tracking the number of extra colors against a closed-form
//! bound. Every pipeline validates its output and, if a step fell short,
//! finishes with fresh-color repair and sets `fallback_used`.

mod bound_report;
mod domination;
mod matching;
mod pairing;
mod peeling;
mod small_alpha;
mod splitting;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coloring::{bad_vertices, is_dynamic, is_proper, Coloring, FreshColors};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracles::{independence_number, clique_number, matching_number, OracleBudget, OracleValues};
use crate::repair::{lemma6_repair_with, ResampleConfig};

pub use bound_report::{bound_report, BoundEntry, BoundReport, Hypotheses};
pub use domination::{theorem3_pipeline, theorem4_pipeline};
pub use matching::theorem8_pipeline;
pub use pairing::theorem6_pipeline;
pub use peeling::theorem7_pipeline;
pub use small_alpha::theorem5_pipeline;
pub use splitting::{lemma6_pipeline, lemma9_pipeline};

pub const SCHEMA_VERSION: u32 = 1;

/// The pipelines selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Theorem3,
    Theorem4,
    Theorem5,
    Theorem6,
    Theorem7,
    Theorem8,
    Lemma9,
    Lemma6,
}

impl Algorithm {
    pub const ALL: [Algorithm; 8] = [
        Algorithm::Theorem3,
        Algorithm::Theorem4,
        Algorithm::Theorem5,
        Algorithm::Theorem6,
        Algorithm::Theorem7,
        Algorithm::Theorem8,
        Algorithm::Lemma9,
        Algorithm::Lemma6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Theorem3 => "theorem3",
            Algorithm::Theorem4 => "theorem4",
            Algorithm::Theorem5 => "theorem5",
            Algorithm::Theorem6 => "theorem6",
            Algorithm::Theorem7 => "theorem7",
            Algorithm::Theorem8 => "theorem8",
            Algorithm::Lemma9 => "lemma9",
            Algorithm::Lemma6 => "lemma6",
        }
    }

    /// Whether the pipeline's preconditions hold for a connected `g`.
    pub fn applies_to(self, g: &Graph) -> bool {
        match self {
            Algorithm::Theorem3 | Algorithm::Lemma9 => g.min_degree() >= 2,
            Algorithm::Theorem4 | Algorithm::Theorem7 => g.regular_degree().is_some(),
            _ => true,
        }
    }

    /// Runs the pipeline on `g` from the proper coloring `base`.
    pub fn run(self, g: &Graph, base: &Coloring, cfg: &PipelineConfig) -> Result<(Coloring, RunReport)> {
        match self {
            Algorithm::Theorem3 => theorem3_pipeline(g, base, cfg),
            Algorithm::Theorem4 => theorem4_pipeline(g, base, cfg),
            Algorithm::Theorem5 => theorem5_pipeline(g, base, cfg),
            Algorithm::Theorem6 => theorem6_pipeline(g, base, cfg),
            Algorithm::Theorem7 => theorem7_pipeline(g, base, cfg),
            Algorithm::Theorem8 => theorem8_pipeline(g, base, cfg),
            Algorithm::Lemma9 => lemma9_pipeline(g, base, cfg),
            Algorithm::Lemma6 => lemma6_pipeline(g, base, cfg),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::input(format!("unknown algorithm `{s}`")))
    }
}

/// Inputs shared by every pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineConfig {
    pub resample: ResampleConfig,
    pub budget: OracleBudget,
    /// Invariants already known for the input; missing ones are computed
    /// under `budget` when a pipeline needs them.
    pub known: OracleValues,
}

impl PipelineConfig {
    pub fn new(seed: u64) -> Self {
        PipelineConfig {
            resample: ResampleConfig::new(seed),
            budget: OracleBudget::default(),
            known: OracleValues::default(),
        }
    }

    pub fn seed(&self) -> u64 {
        self.resample.seed
    }

    /// Resampling settings for the `stream`-th randomized step.
    pub(crate) fn stream(&self, stream: u64) -> ResampleConfig {
        self.resample.reseeded(crate::derive_seed(self.resample.seed, stream))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSummary {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl InputSummary {
    pub fn of(g: &Graph) -> Self {
        InputSummary {
            n: g.n(),
            m: g.m(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
        }
    }
}

/// One entry of a run's trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "phase", rename_all = "snake_case")]
pub enum Phase {
    /// Greedy maximal independent set used as the first dominating set.
    DominatingSet { size: usize },
    /// One counter-based dominator step: `(vertex, covered)` choices.
    Dominator {
        iteration: usize,
        input_size: usize,
        chosen: Vec<(Vertex, usize)>,
        residual: usize,
    },
    Resample {
        iteration: usize,
        set_size: usize,
        palette: usize,
        rounds: usize,
        repairs: usize,
    },
    TwoColor {
        iteration: usize,
        constrained: usize,
        set_size: usize,
        flips: usize,
        exact: bool,
        failed: Option<String>,
    },
    /// Descent and two-coloring of the non-isolated bad vertices.
    Normalize {
        descent_steps: usize,
        y_recolored: usize,
        bad_after: usize,
    },
    /// Which branch of a case analysis ran.
    Case { name: String, recolored: usize },
    Pairing {
        common_neighbor_pairs: usize,
        representative_pairs: usize,
        singles: usize,
    },
    Matching {
        size: usize,
        matched_bad: usize,
        partners_recolored: usize,
        neighbors_recolored: usize,
    },
    ComplementMatching { pairs: usize },
    Peel {
        iteration: usize,
        set_size: usize,
        constrained: usize,
        flips: usize,
        exact: bool,
        failed: Option<String>,
    },
    Split {
        per_class: usize,
        classes: usize,
        rounds: usize,
        repairs: usize,
    },
    /// Optimal dynamic coloring from the exact oracle.
    Exact { reason: String },
    /// Fresh-color repair of the listed number of bad vertices.
    Repair {
        bad_before: usize,
        colors_added: usize,
        planned: bool,
    },
    /// A secondary bound or case discriminant reported for information.
    Note { name: String, value: String },
}

/// Outcome of one pipeline run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub algorithm: String,
    pub seed: u64,
    pub input_summary: InputSummary,
    pub oracle_values: OracleValues,
    pub base_colors: usize,
    pub bound_formula_value: usize,
    pub colors_used: usize,
    pub is_proper: bool,
    pub is_dynamic: bool,
    pub within_bound: bool,
    pub fallback_used: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub trace: Vec<Phase>,
    #[serde(default)]
    pub consistency_errors: Vec<String>,
    pub coloring: Coloring,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<RunReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl RunReport {
    /// A successful run: dynamic output, within its bound unless a fallback
    /// was needed.
    pub fn is_sound(&self) -> bool {
        self.is_proper && self.is_dynamic && (self.fallback_used || self.within_bound)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Report under construction.
pub(crate) struct Run<'a> {
    g: &'a Graph,
    cfg: &'a PipelineConfig,
    algorithm: Algorithm,
    pub base_colors: usize,
    pub oracle: OracleValues,
    pub trace: Vec<Phase>,
    pub case: Option<String>,
    pub fallback_used: bool,
    pub consistency_errors: Vec<String>,
}

impl<'a> Run<'a> {
    /// Checks that `base` is a proper coloring of `g` and starts a report.
    pub fn start(algorithm: Algorithm, g: &'a Graph, base: &Coloring, cfg: &'a PipelineConfig) -> Result<Self> {
        base.check_len(g)?;
        if !is_proper(g, base) {
            return Err(Error::input("base coloring is not proper"));
        }
        let oracle = cfg.known.clone();
        Ok(Run {
            g,
            cfg,
            algorithm,
            base_colors: base.count_colors(),
            oracle,
            trace: Vec::new(),
            case: None,
            fallback_used: false,
            consistency_errors: Vec::new(),
        })
    }

    pub fn algorithm(&self) -> Algorithm {
        self.algorithm
    }

    pub fn alpha(&mut self) -> Result<usize> {
        if self.oracle.alpha.is_none() {
            self.oracle.alpha = Some(independence_number(self.g, &self.cfg.budget)?);
        }
        Ok(self.oracle.alpha.unwrap())
    }

    pub fn omega(&mut self) -> Result<usize> {
        if self.oracle.omega.is_none() {
            self.oracle.omega = Some(clique_number(self.g, &self.cfg.budget)?);
        }
        Ok(self.oracle.omega.unwrap())
    }

    pub fn matching(&mut self) -> usize {
        *self.oracle.matching.get_or_insert_with(|| matching_number(self.g))
    }

    pub fn consistency(&mut self, msg: impl Into<String>) {
        let msg = msg.into();
        log::warn!("{}: {msg}", self.algorithm);
        self.consistency_errors.push(msg);
    }

    pub fn note(&mut self, name: &str, value: impl fmt::Display) {
        self.trace.push(Phase::Note {
            name: name.into(),
            value: value.to_string(),
        });
    }

    /// Applies fresh-color repair if `c` is not dynamic yet. `planned`
    /// marks a repair the procedure itself prescribes; any other repair
    /// counts as a fallback.
    pub fn repair(&mut self, c: Coloring, planned: bool) -> Result<Coloring> {
        let bad_before = bad_vertices(self.g, &c).len();
        if bad_before == 0 {
            return Ok(c);
        }
        let mut fresh = FreshColors::after(&c);
        let (out, colors_added) = lemma6_repair_with(self.g, &c, &mut fresh)?;
        self.trace.push(Phase::Repair {
            bad_before,
            colors_added,
            planned,
        });
        if !planned {
            self.fallback_used = true;
        }
        Ok(out)
    }

    pub fn finish(mut self, coloring: Coloring, bound: usize) -> Result<(Coloring, RunReport)> {
        let coloring = self.repair(coloring, false)?;
        let is_proper = is_proper(self.g, &coloring);
        let is_dynamic = is_dynamic(self.g, &coloring);
        if !is_dynamic {
            return Err(Error::Consistency(format!(
                "{} produced a coloring that is not dynamic after repair",
                self.algorithm
            )));
        }
        let colors_used = coloring.count_colors();
        let report = RunReport {
            schema_version: SCHEMA_VERSION,
            algorithm: self.algorithm.name().into(),
            seed: self.cfg.seed(),
            input_summary: InputSummary::of(self.g),
            oracle_values: self.oracle,
            base_colors: self.base_colors,
            bound_formula_value: bound,
            colors_used,
            is_proper,
            is_dynamic,
            within_bound: colors_used <= bound,
            fallback_used: self.fallback_used,
            case: self.case,
            trace: self.trace,
            consistency_errors: self.consistency_errors,
            coloring: coloring.clone(),
            components: Vec::new(),
            wall_time_ms: None,
        };
        Ok((coloring, report))
    }
}

fn require_connected(g: &Graph, algorithm: Algorithm) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::input(format!(
            "{algorithm} needs a connected graph; split components first"
        )));
    }
    Ok(())
}

fn require_regular(g: &Graph, algorithm: Algorithm) -> Result<usize> {
    g.regular_degree()
        .ok_or_else(|| Error::input(format!("{algorithm} needs a regular graph")))
}
